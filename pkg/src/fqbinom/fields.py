"""Concrete finite fields F_(p^t) and their polynomial arithmetic.

Extension fields are always realized over their prime field, as
F_p[x]/(modulus) with the canonical modulus: the lexicographically smallest
monic irreducible of degree t, scanning coefficient tuples as base-p numbers
ascending. That makes build_field(p, t) bit-reproducible across runs and
machines, and two calls with equal arguments return the same interned
context object.

Elements are little-endian coefficient vectors of length t. Enumeration
order (used by find_generator and for picking canonical roots) is by the
base-p value of the vector. Heavy polynomial work is delegated to the
kernel backends in fqbinom._kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from . import _kernel as kernel
from .arith import factor, is_prime, prime_divisors, prime_power_decompose
from .errors import ConsistencyError

_CZ_SEED = 0xA2C27F61
_CZ_MAX_ATTEMPTS = 256


@dataclass(frozen=True)
class PrimePower:
    """A field size q = p**t together with its decomposition."""

    p: int
    t: int
    q: int

    @classmethod
    def of(cls, p: int, t: int) -> "PrimePower":
        if t < 1:
            raise ValueError("exponent t must be >= 1")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return cls(p, t, p**t)

    @classmethod
    def from_q(cls, q: int) -> "PrimePower":
        if q < 2:
            raise ValueError("a prime power is >= 2")
        pt = prime_power_decompose(q)
        if pt is None:
            raise ValueError(f"{q} is not a prime power")
        return cls(pt[0], pt[1], q)

    @classmethod
    def parse(cls, text: "str | int") -> "PrimePower":
        """Accept a plain prime-power integer or explicit p^t syntax."""
        if isinstance(text, int):
            return cls.from_q(text)
        text = text.strip()
        if "^" in text:
            ps, ts = text.split("^", 1)
            return cls.of(int(ps), int(ts))
        return cls.from_q(int(text))

    def __str__(self) -> str:
        return str(self.p) if self.t == 1 else f"{self.p}^{self.t}"


class FieldElem:
    """An element of a FieldCtx: a length-t residue vector, little-endian."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: "FieldCtx", coeffs: tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    def _check(self, other: "FieldElem") -> None:
        if not isinstance(other, FieldElem) or other.ctx is not self.ctx:
            raise ValueError("operands belong to different field contexts")

    @property
    def index(self) -> int:
        """Position in the canonical enumeration (base-p value of coeffs)."""
        p = self.ctx.p
        out = 0
        for c in reversed(self.coeffs):
            out = out * p + c
        return out

    @property
    def text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElem)
            and other.ctx is self.ctx
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.coeffs))

    def __repr__(self) -> str:
        return f"<{self.text} in {self.ctx!r}>"

    def __add__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        p = self.ctx.p
        return FieldElem(
            self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        p = self.ctx.p
        return FieldElem(
            self.ctx, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "FieldElem":
        p = self.ctx.p
        return FieldElem(self.ctx, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        ctx = self.ctx
        if ctx.t == 1:
            return FieldElem(ctx, (self.coeffs[0] * other.coeffs[0] % ctx.p,))
        out = kernel.poly_mulmod(
            list(self.coeffs), list(other.coeffs), ctx._fmod, ctx.p
        )
        return FieldElem(ctx, tuple(out) + (0,) * (ctx.t - len(out)))

    def __pow__(self, e: int) -> "FieldElem":
        if e < 0:
            return self.inv() ** (-e)
        ctx = self.ctx
        if ctx.t == 1:
            return FieldElem(ctx, (pow(self.coeffs[0], e, ctx.p),))
        out = kernel.poly_powmod(list(self.coeffs), e, ctx._fmod, ctx.p)
        return FieldElem(ctx, tuple(out) + (0,) * (ctx.t - len(out)))

    def inv(self) -> "FieldElem":
        if self.is_zero():
            raise ValueError("zero has no multiplicative inverse")
        ctx = self.ctx
        if ctx.t == 1:
            return FieldElem(ctx, (pow(self.coeffs[0], -1, ctx.p),))
        return self ** (ctx.q - 2)

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return self * other.inv()


class FieldCtx:
    """An interned finite field F_(p^t); immutable after construction."""

    __slots__ = ("size", "modulus", "_fmod", "_zero", "_one")

    def __init__(self, size: PrimePower, modulus: tuple[int, ...]):
        self.size = size
        self.modulus = modulus
        self._fmod = list(modulus)
        self._zero = FieldElem(self, (0,) * size.t)
        one = (1,) + (0,) * (size.t - 1)
        self._one = FieldElem(self, one)

    @property
    def p(self) -> int:
        return self.size.p

    @property
    def t(self) -> int:
        return self.size.t

    @property
    def q(self) -> int:
        return self.size.q

    @property
    def zero(self) -> FieldElem:
        return self._zero

    @property
    def one(self) -> FieldElem:
        return self._one

    def elem(self, value) -> FieldElem:
        """Coerce an int index, residue vector, text encoding, or element."""
        if isinstance(value, FieldElem):
            if value.ctx is not self:
                raise ValueError("element belongs to a different field context")
            return value
        if isinstance(value, int):
            return self.elem_at(value % self.q)
        if isinstance(value, str):
            parts = [int(s) for s in value.split(",")] if value else [0]
            return self.from_coeffs(parts)
        return self.from_coeffs(list(value))

    def from_coeffs(self, coeffs: Iterable[int]) -> FieldElem:
        coeffs = [c % self.p for c in coeffs]
        if len(coeffs) > self.t:
            raise ValueError(f"too many coefficients for degree-{self.t} field")
        coeffs.extend([0] * (self.t - len(coeffs)))
        return FieldElem(self, tuple(coeffs))

    def elem_at(self, index: int) -> FieldElem:
        """The index-th element in the canonical enumeration order."""
        if not 0 <= index < self.q:
            raise ValueError("element index out of range")
        digs = []
        for _ in range(self.t):
            digs.append(index % self.p)
            index //= self.p
        return FieldElem(self, tuple(digs))

    def iter_elements(self) -> Iterator[FieldElem]:
        for i in range(self.q):
            yield self.elem_at(i)

    def __repr__(self) -> str:
        return f"F_{self.size}"


@lru_cache(maxsize=None)
def _build_field_cached(p: int, t: int) -> FieldCtx:
    size = PrimePower.of(p, t)
    if t == 1:
        return FieldCtx(size, (0, 1))
    prime_field = _build_field_cached(p, 1)
    v = 0
    while True:
        if v % p:  # constant coefficient 0 means divisible by x
            digs = []
            x = v
            for _ in range(t):
                digs.append(x % p)
                x //= p
            cand = tuple(digs) + (1,)
            if rabin_irreducible(prime_field, Poly(prime_field, cand)):
                return FieldCtx(size, cand)
        v += 1
        if v >= p**t:
            raise ConsistencyError(f"no irreducible of degree {t} over F_{p} found")


def build_field(p: int, t: int = 1) -> FieldCtx:
    """F_(p^t) with the canonical modulus; idempotent per (p, t)."""
    if t < 1:
        raise ValueError("extension degree t must be >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return _build_field_cached(p, t)


def field_for(size: "PrimePower | int | str") -> FieldCtx:
    pp = size if isinstance(size, PrimePower) else PrimePower.parse(size)
    return build_field(pp.p, pp.t)


class Poly:
    """A polynomial over a FieldCtx, little-endian, trailing zeros stripped."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable):
        elems = [ctx.elem(c) for c in coeffs]
        while elems and elems[-1].is_zero():
            elems.pop()
        self.ctx = ctx
        self.coeffs = tuple(elems)

    @classmethod
    def binomial(cls, ctx: FieldCtx, g: FieldElem, n: int) -> "Poly":
        """x**n - g."""
        if n < 1:
            raise ValueError("binomial degree must be >= 1")
        return cls(ctx, [-ctx.elem(g)] + [ctx.zero] * (n - 1) + [ctx.one])

    @classmethod
    def x(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, [ctx.zero, ctx.one])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> FieldElem:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: FieldElem) -> FieldElem:
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and other.ctx is self.ctx
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            cs = c.text if self.ctx.t == 1 else f"({c.text})"
            if i == 0:
                terms.append(cs)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                terms.append(xs if c == self.ctx.one else f"{cs}*{xs}")
        return " + ".join(terms)

    def to_flat(self) -> list[int]:
        out: list[int] = []
        for c in self.coeffs:
            out.extend(c.coeffs)
        return out

    @classmethod
    def from_flat(cls, ctx: FieldCtx, flat: list[int]) -> "Poly":
        t = ctx.t
        return cls(
            ctx,
            [FieldElem(ctx, tuple(flat[i : i + t])) for i in range(0, len(flat), t)],
        )


# ---------------------------------------------------------------------------
# flat-layout helpers shared by the heavy operations


def _fmod_of(F: FieldCtx):
    return None if F.t == 1 else F._fmod


def _x_flat(F: FieldCtx) -> list[int]:
    return [0] * F.t + [1] + [0] * (F.t - 1)


def _one_flat(F: FieldCtx) -> list[int]:
    return [1] + [0] * (F.t - 1)


def _deg(flat: list[int], t: int) -> int:
    return len(flat) // t - 1


def _elem_vec_inv(vec: list[int], F: FieldCtx) -> list[int]:
    if F.t == 1:
        return [pow(vec[0], -1, F.p)]
    out = kernel.poly_powmod(vec, F.q - 2, F._fmod, F.p)
    return out + [0] * (F.t - len(out))


def _flat_monic(flat: list[int], F: FieldCtx) -> list[int]:
    t = F.t
    lead = flat[-t:]
    if lead == _one_flat(F):
        return flat
    inv = _elem_vec_inv(lead, F)
    return kernel.poly_mul(flat, inv, F.p, _fmod_of(F))


def _flat_sub(a: list[int], b: list[int], F: FieldCtx) -> list[int]:
    p, t = F.p, F.t
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        av = a[i] if i < len(a) else 0
        bv = b[i] if i < len(b) else 0
        out[i] = (av - bv) % p
    while out and not any(out[-t:]):
        del out[-t:]
    return out


def _flat_gcd(a: list[int], b: list[int], F: FieldCtx) -> list[int]:
    p, fmod = F.p, _fmod_of(F)
    while b:
        b = _flat_monic(b, F)
        a, b = b, kernel.poly_rem(a, b, p, fmod)
    return _flat_monic(a, F) if a else a


def _elem_vec_mul(u: list[int], v: list[int], F: FieldCtx) -> list[int]:
    if F.t == 1:
        return [u[0] * v[0] % F.p]
    out = kernel.poly_mulmod(u, v, F._fmod, F.p)
    return out + [0] * (F.t - len(out))


def _flat_div_exact(a: list[int], b: list[int], F: FieldCtx) -> list[int]:
    # b monic and dividing a exactly
    p, t = F.p, F.t
    da, db = _deg(a, t), _deg(b, t)
    r = list(a)
    quot = [0] * ((da - db + 1) * t)
    for i in range(da, db - 1, -1):
        lead = r[i * t : (i + 1) * t]
        if any(lead):
            quot[(i - db) * t : (i - db + 1) * t] = lead
            for j in range(db + 1):
                bj = b[j * t : (j + 1) * t]
                if any(bj):
                    pr = _elem_vec_mul(lead, bj, F)
                    base = (i - db + j) * t
                    for d in range(t):
                        r[base + d] = (r[base + d] - pr[d]) % p
    if any(r):
        raise ConsistencyError("exact polynomial division left a remainder")
    return quot


# ---------------------------------------------------------------------------
# operations


@lru_cache(maxsize=65536)
def mult_order(a: FieldElem) -> int:
    """Least e >= 1 with a**e = 1; always divides q - 1."""
    if a.is_zero():
        raise ValueError("the zero element has no multiplicative order")
    F = a.ctx
    e = F.q - 1
    for r, k in factor(e):
        for _ in range(k):
            if e % r == 0 and a ** (e // r) == F.one:
                e //= r
            else:
                break
    return e


def find_generator(F: FieldCtx) -> FieldElem:
    """Smallest element in enumeration order generating the whole of F*."""
    n = F.q - 1
    rs = factor(n).primes
    for idx in range(1, F.q):
        cand = F.elem_at(idx)
        if all(cand ** (n // r) != F.one for r in rs):
            return cand
    raise ConsistencyError(f"no generator found in {F!r}")


def rabin_irreducible(F: FieldCtx, f: "Poly | Iterable") -> bool:
    """Irreducibility of monic f over F via Frobenius-power divisibility.

    f of degree n is irreducible iff f divides x**(q**n) - x and
    gcd(f, x**(q**(n/r)) - x) = 1 for every prime r dividing n.
    """
    if not isinstance(f, Poly):
        f = Poly(F, list(f))
    if f.ctx is not F:
        raise ValueError("polynomial belongs to a different field context")
    if f.is_zero() or not f.is_monic():
        raise ValueError("rabin_irreducible requires a monic nonzero polynomial")
    n = f.degree
    if n < 1:
        raise ValueError("rabin_irreducible requires degree >= 1")
    if n == 1:
        return True
    p, q, fmod = F.p, F.q, _fmod_of(F)
    flat = f.to_flat()
    x = _x_flat(F)
    checkpoints = {n // r for r in prime_divisors(n)}
    h = x
    for m in range(1, n + 1):
        h = kernel.poly_powmod(h, q, flat, p, fmod)
        if m in checkpoints:
            g = _flat_gcd(flat, _flat_sub(h, x, F), F)
            if _deg(g, F.t) != 0:
                return False
    return h == x


class _DetStream:
    """splitmix64-based deterministic digit stream for root splitting."""

    def __init__(self, seed: int):
        self.state = seed & 0xFFFFFFFFFFFFFFFF

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
        return z ^ (z >> 31)

    def flat_poly(self, outer: int, F: FieldCtx) -> list[int]:
        out = [self.next64() % F.p for _ in range(outer * F.t)]
        while out and not any(out[-F.t :]):
            del out[-F.t :]
        return out


def _split_linear(g: list[int], F: FieldCtx, stream: _DetStream) -> list[FieldElem]:
    # g: monic product of distinct linear factors; returns its roots
    t = F.t
    d = _deg(g, t)
    if d <= 0:
        return []
    if d == 1:
        return [-FieldElem(F, tuple(g[:t]))]
    p, q, fmod = F.p, F.q, _fmod_of(F)
    h: list[int] = []
    for _ in range(_CZ_MAX_ATTEMPTS):
        r = stream.flat_poly(d, F)
        while not any(r):
            r = stream.flat_poly(d, F)
        h = _flat_gcd(g, r, F)
        if 0 < _deg(h, t) < d:
            break
        if p != 2:
            s = kernel.poly_powmod(r, (q - 1) // 2, g, p, fmod)
            h = _flat_gcd(g, _flat_sub(s, _one_flat(F), F), F)
        else:
            cur = kernel.poly_rem(r, g, p, fmod)
            tr = cur
            for _ in range(F.t - 1):
                cur = kernel.poly_mulmod(cur, cur, g, p, fmod)
                tr = _flat_sub(tr, cur, F)  # char 2: subtraction is addition
            h = _flat_gcd(g, tr, F)
        if 0 < _deg(h, t) < d:
            break
    else:
        raise ConsistencyError("equal-degree splitting failed to make progress")
    rest = _flat_div_exact(g, h, F)
    return _split_linear(h, F, stream) + _split_linear(rest, F, stream)


def poly_roots(F: FieldCtx, f: "Poly | Iterable") -> set[FieldElem]:
    """Exactly the roots of nonzero f lying in F."""
    if not isinstance(f, Poly):
        f = Poly(F, list(f))
    if f.is_zero():
        raise ValueError("poly_roots requires a nonzero polynomial")
    if f.degree == 0:
        return set()
    p, q, fmod = F.p, F.q, _fmod_of(F)
    flat = _flat_monic(f.to_flat(), F)
    x = _x_flat(F)
    if _deg(flat, F.t) == 1:
        return {-FieldElem(F, tuple(flat[: F.t]))}
    xq = kernel.poly_powmod(x, q, flat, p, fmod)
    lin = _flat_gcd(flat, _flat_sub(xq, x, F), F)
    if _deg(lin, F.t) == 0:
        return set()
    stream = _DetStream(_CZ_SEED)
    return set(_split_linear(lin, F, stream))


def degree_over_subfield(F: FieldCtx, a: FieldElem, q0: PrimePower) -> int:
    """Smallest d >= 1 with a**(q0**d) = a; the degree of a over F_q0."""
    if a.ctx is not F:
        raise ValueError("element belongs to a different field context")
    if q0.p != F.p or F.t % q0.t != 0:
        raise ValueError(f"F_{q0} is not a subfield of {F!r}")
    b = a
    for d in range(1, F.t // q0.t + 1):
        b = b**q0.q
        if b == a:
            return d
    raise ConsistencyError("Frobenius orbit did not close inside the field")
