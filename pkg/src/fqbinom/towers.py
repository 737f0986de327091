"""Radical extensions F_q[x]/(x**n - g), tower chains, and closure checks.

Levels are realized inside one canonical ambient field over the prime field
(build_field(p, t*n)), with the base field embedded by locating a root of its
modulus there. Roots are the canonically smallest in enumeration order,
except that chained towers override non-maximal levels with powers of the top
root so that root_i = root_last ** (n_last // n_i).

closure_check is the finite analog of generating the algebraic closure by
radicals of one element: inside F_(q^N) the subfield of size q^n is the fixed
set of the n-th Frobenius power and is unique, so a root of x**n - g of
degree n over F_q generates exactly that subfield.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import divisors
from .binomials import irreducible_ln
from .errors import NotIrreducible, SizeBoundExceeded
from .fields import (
    FieldCtx,
    FieldElem,
    Poly,
    build_field,
    degree_over_subfield,
    poly_roots,
)

DESK_DEGREE_LIMIT = 64


@dataclass(frozen=True)
class TowerLevel:
    """One radical level: a chosen n-th root of g and where it lives."""

    degree_over_base: int
    field: FieldCtx  # realization field (shared ambient for chained towers)
    root: FieldElem
    minimal_poly: Poly  # x**n - g over the base field


@dataclass(frozen=True)
class ClosureRow:
    n: int
    irreducible: bool
    root_found: bool
    generates_unique_subfield: bool
    root: FieldElem | None
    failed_condition: str | None


@dataclass(frozen=True)
class ClosureReport:
    """Per-divisor closure evidence inside the ambient field F_(q^N)."""

    base: FieldCtx
    g: FieldElem
    big_n: int
    ambient: FieldCtx
    rows: tuple[ClosureRow, ...]
    hypothesis_met: bool

    def to_json_dict(self) -> dict:
        return {
            "base_p": self.base.p,
            "base_t": self.base.t,
            "base_modulus": ",".join(str(c) for c in self.base.modulus),
            "g": self.g.text,
            "N": self.big_n,
            "ambient_modulus": ",".join(str(c) for c in self.ambient.modulus),
            "rows": [
                {
                    "n": r.n,
                    "irreducible": r.irreducible,
                    "root_found": r.root_found,
                    "generates_unique_subfield": r.generates_unique_subfield,
                    "root": r.root.text if r.root is not None else None,
                    "failed_condition": r.failed_condition,
                }
                for r in self.rows
            ],
            "hypothesis_met": self.hypothesis_met,
        }


def _embedding(F: FieldCtx, ambient: FieldCtx):
    """Field embedding of F into ambient, as a callable on elements."""
    if F.t == 1:
        if ambient.p != F.p:
            raise ValueError("characteristic mismatch")
        return lambda a: ambient.from_coeffs([a.coeffs[0]])
    # send the generator of F to the smallest root of F's modulus in ambient
    mod_in_ambient = Poly(ambient, [ambient.from_coeffs([c]) for c in F.modulus])
    roots = poly_roots(ambient, mod_in_ambient)
    if not roots:
        raise ValueError(f"{F!r} does not embed into {ambient!r}")
    beta = min(roots, key=lambda e: e.index)

    def embed(a: FieldElem) -> FieldElem:
        acc = ambient.zero
        for c in reversed(a.coeffs):
            acc = acc * beta + ambient.from_coeffs([c])
        return acc

    return embed


def _smallest_root(ambient: FieldCtx, f: Poly) -> FieldElem | None:
    roots = poly_roots(ambient, f)
    if not roots:
        return None
    return min(roots, key=lambda e: e.index)


def extend_by_binomial(F: FieldCtx, g: FieldElem, n: int) -> TowerLevel:
    """Adjoin an n-th root of g: a field of size q**n with root**n = g."""
    g = F.elem(g)
    report = irreducible_ln(F, g, n)
    if not report.ln_verdict:
        raise NotIrreducible(
            f"x^{n} - {g.text} is reducible over {F!r} "
            f"(failed: {report.failed_condition})"
        )
    if F.t * n > DESK_DEGREE_LIMIT:
        raise SizeBoundExceeded(
            f"total degree {F.t * n} exceeds the desk-scale limit {DESK_DEGREE_LIMIT}"
        )
    ambient = build_field(F.p, F.t * n)
    embed = _embedding(F, ambient)
    g_img = embed(g)
    root = _smallest_root(ambient, Poly.binomial(ambient, g_img, n))
    if root is None:
        raise ValueError(f"x^{n} - {g.text} has no root in {ambient!r}")
    return TowerLevel(
        degree_over_base=n,
        field=ambient,
        root=root,
        minimal_poly=Poly.binomial(F, g, n),
    )


def build_tower(F: FieldCtx, g: FieldElem, degrees: list[int]) -> list[TowerLevel]:
    """One level per degree, all realized inside the ambient of the largest.

    Degrees must be strictly increasing with each dividing the next; roots
    are compatible along the chain: root_i = root_last ** (n_last // n_i).
    """
    g = F.elem(g)
    if not degrees:
        raise ValueError("degrees must be a nonempty divisibility chain")
    for a, b in zip(degrees, degrees[1:]):
        if a >= b or b % a != 0:
            raise ValueError(f"degrees must be a divisibility chain; {a} !| {b}")
    for n in degrees:
        rep = irreducible_ln(F, g, n)
        if not rep.ln_verdict:
            raise NotIrreducible(
                f"x^{n} - {g.text} is reducible over {F!r} "
                f"(failed: {rep.failed_condition})"
            )
    top = extend_by_binomial(F, g, degrees[-1])
    levels = []
    for n in degrees[:-1]:
        levels.append(
            TowerLevel(
                degree_over_base=n,
                field=top.field,
                root=top.root ** (degrees[-1] // n),
                minimal_poly=Poly.binomial(F, g, n),
            )
        )
    levels.append(top)
    return levels


def closure_check(F: FieldCtx, g: FieldElem, N: int) -> ClosureReport:
    """Check, for every n | N, that a root of x**n - g generates the unique
    size-q**n subfield of the ambient F_(q**N)."""
    g = F.elem(g)
    if g.is_zero():
        raise ValueError("closure_check requires g != 0")
    if N < 1:
        raise ValueError("N must be >= 1")
    if F.t * N > DESK_DEGREE_LIMIT:
        raise SizeBoundExceeded(
            f"total degree {F.t * N} exceeds the desk-scale limit {DESK_DEGREE_LIMIT}"
        )
    ambient = build_field(F.p, F.t * N)
    embed = _embedding(F, ambient)
    g_img = embed(g)
    rows = []
    for n in divisors(N):
        rep = irreducible_ln(F, g, n)
        root = _smallest_root(ambient, Poly.binomial(ambient, g_img, n))
        generates = root is not None and (
            degree_over_subfield(ambient, root, F.size) == n
        )
        rows.append(
            ClosureRow(
                n=n,
                irreducible=rep.ln_verdict,
                root_found=root is not None,
                generates_unique_subfield=generates,
                root=root,
                failed_condition=rep.failed_condition,
            )
        )
    return ClosureReport(
        base=F,
        g=g,
        big_n=N,
        ambient=ambient,
        rows=tuple(rows),
        hypothesis_met=all(r.irreducible for r in rows),
    )
