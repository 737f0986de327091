"""Families (q_k) of prime powers and almost-all verdicts over them.

A nonprincipal ultrafilter contains every cofinite set and no finite set, so
"for U-almost all k" is decided here with the strongest U-independent
semantics: eventually-true holds for every such ultrafilter, eventually-false
fails for every one, and a finite prefix alone can never decide anything,
which is the mandatory unknown-tail outcome for explicit families.

Generated families carry a machine-checkable tail guarantee from a closed
enumeration of schemas; free-form proofs are never accepted, and explicit
user-supplied families never get a guarantee.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import lcm

from .arith import first_primes, is_prime, prime_divisors
from .binomials import diamond, irreducible_ln
from .errors import ConsistencyError, SearchCutoffExceeded, SizeBoundExceeded
from .fields import FieldCtx, FieldElem, PrimePower, field_for, find_generator

KIND_EXPLICIT = "explicit"
KIND_PAPER = "paper-example"
KIND_DIRICHLET = "dirichlet"
KINDS = (KIND_EXPLICIT, KIND_PAPER, KIND_DIRICHLET)

TAIL_FERMAT = "fermat-little-theorem"
TAIL_DIRICHLET = "dirichlet-search"
TAIL_EVEN_EXPONENT = "even-exponent"
_KIND_TAILS = {
    KIND_EXPLICIT: (None,),
    KIND_PAPER: (TAIL_FERMAT, TAIL_EVEN_EXPONENT),
    KIND_DIRICHLET: (TAIL_DIRICHLET,),
}

OUTCOME_HOLDS = "holds"
OUTCOME_FAILS = "fails"
OUTCOME_MIXED = "mixed"
OUTCOME_UNKNOWN = "unknown-tail"

_DIRICHLET_CUTOFF = 10**9  # candidates per index
_PAPER_MAX_K = 4


@dataclass(frozen=True)
class FamilyEntry:
    k: int
    q: PrimePower
    certificates: tuple[int, ...]


@dataclass
class Family:
    """A strictly increasing sequence of prime powers with certificates."""

    kind: str
    entries: tuple[FamilyEntry, ...]
    tail_guarantee: str | None
    _generators: dict[int, FieldElem] = field(default_factory=dict, repr=False)

    def entry(self, k: int) -> FamilyEntry:
        for e in self.entries:
            if e.k == k:
                return e
        raise ValueError(f"family has no entry with index k={k}")

    def indices(self) -> list[int]:
        return [e.k for e in self.entries]

    def field_at(self, k: int) -> FieldCtx:
        return field_for(self.entry(k).q)

    def generator(self, k: int) -> FieldElem:
        """The deterministic generator choice g_k for index k (cached)."""
        if k not in self._generators:
            self._generators[k] = find_generator(self.field_at(k))
        return self._generators[k]


def make_family(
    kind: str, entries: list[FamilyEntry], tail_guarantee: str | None
) -> Family:
    """Validate and assemble a family; every stored fact is re-verified."""
    if kind not in KINDS:
        raise ValueError(f"unknown family kind {kind!r}")
    if tail_guarantee not in _KIND_TAILS[kind]:
        raise ValueError(
            f"tail guarantee {tail_guarantee!r} is not valid for kind {kind!r}"
        )
    if not entries:
        raise ValueError("a family needs at least one entry")
    prev_k, prev_q = 0, 1
    for e in entries:
        if e.k <= prev_k:
            raise ValueError("entry indices must be strictly increasing")
        if e.q.q <= prev_q:
            raise ValueError("q must be strictly increasing along the family")
        prev_k, prev_q = e.k, e.q.q
        PrimePower.of(e.q.p, e.q.t)  # re-checks primality
        for d in e.certificates:
            if d < 1 or (e.q.q - 1) % d != 0:
                raise ValueError(f"certificate {d} does not divide q_{e.k} - 1")
    fam = Family(kind=kind, entries=tuple(entries), tail_guarantee=tail_guarantee)
    if kind == KIND_PAPER:
        _verify_paper_shape(fam)
    elif kind == KIND_DIRICHLET:
        _verify_dirichlet_shape(fam)
    return fam


def _verify_paper_shape(fam: Family) -> None:
    # indices must be 1..K with the exact q_k = p_(k+1) ** prod(p_i - 1)
    ks = fam.indices()
    if ks != list(range(1, len(ks) + 1)):
        raise ValueError("paper-example families are indexed 1..K")
    primes = first_primes(len(ks) + 1)
    exponent = 1
    for k in ks:
        exponent *= primes[k - 1] - 1  # times p_k - 1
        e = fam.entry(k)
        if (e.q.p, e.q.t) != (primes[k], exponent):
            raise ValueError(
                f"entry k={k} is not the prescribed prime power "
                f"{primes[k]}^{exponent}"
            )


def _verify_dirichlet_shape(fam: Family) -> None:
    # each q_k must be a prime congruent to 1 mod lcm(4, p_1..p_k)
    for e in fam.entries:
        if e.q.t != 1:
            raise ValueError("dirichlet families consist of primes")
        m = lcm(4, *first_primes(e.k))
        if (e.q.q - 1) % m != 0:
            raise ValueError(f"q_{e.k} is not 1 mod lcm(4, p_1..p_{e.k})")


@dataclass(frozen=True)
class Verdict:
    """Three-valued almost-all outcome with its per-index evidence."""

    outcome: str
    threshold: int | None
    witness_indices: tuple[int, ...]
    per_index: tuple[tuple[int, bool], ...]

    def to_json_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "threshold": self.threshold,
            "witness_indices": list(self.witness_indices),
            "per_index": [{"k": k, "holds": h} for k, h in self.per_index],
        }


def check_spade(fam: Family, k: int) -> bool:
    """Whether 4 and the first k primes all divide q_k - 1, by division."""
    qm1 = fam.entry(k).q.q - 1
    if qm1 % 4 != 0:
        return False
    return all(qm1 % p == 0 for p in first_primes(k))


def _condition3(q: PrimePower, n: int) -> bool:
    # prime divisors of n divide q-1; if 4 | n then 4 | q-1
    qm1 = q.q - 1
    if any(qm1 % r for r in prime_divisors(n)):
        return False
    return n % 4 != 0 or qm1 % 4 == 0


def _prime_index(r: int) -> int:
    # position of the prime r in the sequence 2 = p_1, 3 = p_2, ...
    i = 0
    n = 2
    while True:
        if is_prime(n):
            i += 1
            if n == r:
                return i
        n += 1


def _guaranteed_from(fam: Family, n: int) -> int | None:
    """Earliest index from which the tail guarantee forces the condition."""
    tail = fam.tail_guarantee
    if tail is None:
        return None
    rs = prime_divisors(n)
    if tail == TAIL_EVEN_EXPONENT:
        # only covers the 4 | q_k - 1 part (from k = 2 on)
        if any(r != 2 for r in rs):
            return None
        return 2 if rs or n % 4 == 0 else 1
    k_from = 1
    for r in rs:
        k_from = max(k_from, _prime_index(r))
    if tail == TAIL_FERMAT and n % 4 == 0:
        k_from = max(k_from, 2)
    return k_from


def divisibility_verdict(fam: Family, n: int) -> Verdict:
    """Almost-all verdict for: primes of n divide q_k - 1 (plus the 4-clause).

    With a tail guarantee the outcome is holds, with the threshold taken from
    the evidence when it connects to the guaranteed tail; without one the
    outcome is unknown-tail, since no finite prefix decides an almost-all
    statement.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    flags = tuple((e.k, _condition3(e.q, n)) for e in fam.entries)
    false_ks = tuple(k for k, ok in flags if not ok)
    k_from = _guaranteed_from(fam, n)
    if k_from is None:
        return Verdict(OUTCOME_UNKNOWN, None, false_ks, flags)
    for k, ok in flags:
        if k >= k_from and not ok:
            raise ConsistencyError(
                f"tail guarantee {fam.tail_guarantee!r} contradicted at k={k}"
            )
    evid_t = max(false_ks) + 1 if false_ks else 1
    last_k = flags[-1][0]
    threshold = evid_t if k_from <= last_k + 1 else k_from
    return Verdict(OUTCOME_HOLDS, threshold, false_ks, flags)


def exists_irreducible_binomial(q: PrimePower, n: int) -> bool:
    """Whether some g in F_q* makes x**n - g irreducible over F_q."""
    return diamond(q, n)


@dataclass(frozen=True)
class EquivalenceRow:
    k: int
    q: PrimePower
    condition_holds: bool
    exists_g: bool
    generator_irreducible: bool


@dataclass(frozen=True)
class EquivalenceReport:
    """Per-index agreement of the three almost-all characterizations."""

    n: int
    kind: str
    rows: tuple[EquivalenceRow, ...]
    verdict: Verdict

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind,
            "rows": [
                {
                    "k": r.k,
                    "q": str(r.q.q),
                    "condition_holds": r.condition_holds,
                    "exists_g": r.exists_g,
                    "generator_irreducible": r.generator_irreducible,
                }
                for r in self.rows
            ],
            "verdict": self.verdict.to_json_dict(),
        }


def equivalence_report(fam: Family, n: int) -> EquivalenceReport:
    """Check, index by index, that the three characterizations agree.

    Any disagreement falsifies this implementation, not the input family,
    and raises ConsistencyError.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = []
    for e in fam.entries:
        cond = _condition3(e.q, n)
        exists = exists_irreducible_binomial(e.q, n)
        gen_irr = irreducible_ln(fam.field_at(e.k), fam.generator(e.k), n).ln_verdict
        if not (cond == exists == gen_irr):
            raise ConsistencyError(
                f"equivalence broken at k={e.k}, q={e.q.q}, n={n}: "
                f"condition={cond}, exists={exists}, generator={gen_irr}"
            )
        rows.append(EquivalenceRow(e.k, e.q, cond, exists, gen_irr))
    return EquivalenceReport(
        n=n, kind=fam.kind, rows=tuple(rows), verdict=divisibility_verdict(fam, n)
    )


def _certified_entry(k: int, q: PrimePower) -> FamilyEntry:
    checked = [4] + first_primes(k)
    certs = tuple(d for d in checked if (q.q - 1) % d == 0)
    return FamilyEntry(k=k, q=q, certificates=certs)


def gen_paper_family(K: int) -> Family:
    """The family q_k = p_(k+1) ** ((p_1 - 1)(p_2 - 1)...(p_k - 1)), k <= K."""
    if K < 1:
        raise ValueError("K must be >= 1")
    if K > _PAPER_MAX_K:
        raise SizeBoundExceeded(
            f"K={K} exceeds the paper-example bound of {_PAPER_MAX_K}: q_5 = 13^480 "
            "already has about 535 decimal digits, beyond desk-scale field work"
        )
    primes = first_primes(K + 1)
    entries = []
    exponent = 1
    for k in range(1, K + 1):
        exponent *= primes[k - 1] - 1  # times p_k - 1
        entries.append(_certified_entry(k, PrimePower.of(primes[k], exponent)))
    return make_family(KIND_PAPER, entries, TAIL_FERMAT)


def gen_dirichlet_family(K: int) -> Family:
    """q_k = the least prime congruent to 1 mod lcm(4, p_1, ..., p_k)."""
    if K < 1:
        raise ValueError("K must be >= 1")
    entries = []
    for k in range(1, K + 1):
        m = lcm(4, *first_primes(k))
        cand = m + 1
        for _ in range(_DIRICHLET_CUTOFF):
            if is_prime(cand):
                break
            cand += m
        else:
            raise SearchCutoffExceeded(
                f"no prime 1 mod {m} within {_DIRICHLET_CUTOFF} candidates"
            )
        entries.append(_certified_entry(k, PrimePower.of(cand, 1)))
    return make_family(KIND_DIRICHLET, entries, TAIL_DIRICHLET)


# ---------------------------------------------------------------------------
# file format


def family_to_json_dict(fam: Family) -> dict:
    return {
        "kind": fam.kind,
        "entries": [
            {
                "k": e.k,
                "p": str(e.q.p),
                "t": e.q.t,
                "certificates": [str(d) for d in e.certificates],
            }
            for e in fam.entries
        ],
        "tail_guarantee": fam.tail_guarantee,
    }


def family_from_json_dict(data: dict) -> Family:
    try:
        kind = data["kind"]
        tail = data["tail_guarantee"]
        entries = [
            FamilyEntry(
                k=int(ent["k"]),
                q=PrimePower.of(int(ent["p"]), int(ent["t"])),
                certificates=tuple(int(d) for d in ent["certificates"]),
            )
            for ent in data["entries"]
        ]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed family document: {exc}") from exc
    return make_family(kind, entries, tail)


def save_family(fam: Family, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(family_to_json_dict(fam), fh, indent=2)
        fh.write("\n")


def load_family(path) -> Family:
    with open(path, "r", encoding="utf-8") as fh:
        return family_from_json_dict(json.load(fh))
