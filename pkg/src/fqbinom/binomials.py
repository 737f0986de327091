"""Irreducibility of x**n - g over a finite field, by three routes.

The order route checks gcd((q-1)/e, n) = 1, that every prime divisor of n
divides e = ord(g), and that 4 | n implies 4 | q - 1. The power-class route
checks that g is not a p-th power for any prime p | n and, when 4 | n, that
g is not of the form -4*h**4. Both must always agree, and both must agree
with the Rabin oracle; a report failing the cross-check raises
ConsistencyError because it means this package (not the input) is wrong.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import is_prime, prime_divisors
from .errors import ConsistencyError
from .fields import FieldCtx, FieldElem, Poly, PrimePower, mult_order, rabin_irreducible

FAIL_GCD = "gcd-condition"
FAIL_PRIME_DIVISOR = "prime-divisor-condition"
FAIL_FOUR = "four-condition"
FAIL_PTH_POWER = "pth-power"
FAIL_MINUS4 = "minus4-fourth-power"


@dataclass(frozen=True)
class BinomialReport:
    """Cross-checked irreducibility verdict for x**n - g over F_q."""

    q: PrimePower
    g: FieldElem
    n: int
    order_e: int
    ln_verdict: bool
    karp_verdict: bool
    oracle_verdict: bool | None
    failed_condition: str | None

    def to_json_dict(self) -> dict:
        return {
            "q": self.q.q,
            "p": self.q.p,
            "t": self.q.t,
            "g": self.g.text,
            "n": self.n,
            "order_e": self.order_e,
            "ln_verdict": self.ln_verdict,
            "karp_verdict": self.karp_verdict,
            "oracle_verdict": self.oracle_verdict,
            "failed_condition": self.failed_condition,
        }


def _ln_failure(F: FieldCtx, e: int, n: int) -> str | None:
    # first violated clause, in the documented order
    if n == 1:
        return None
    if gcd((F.q - 1) // e, n) != 1:
        return FAIL_GCD
    if any(e % r for r in prime_divisors(n)):
        return FAIL_PRIME_DIVISOR
    if n % 4 == 0 and (F.q - 1) % 4 != 0:
        return FAIL_FOUR
    return None


def is_pth_power(F: FieldCtx, g: FieldElem, p: int) -> bool:
    """Whether g = h**p for some h in F, for prime p."""
    g = F.elem(g)
    if g.is_zero():
        raise ValueError("is_pth_power requires g != 0")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == F.p:
        return True  # Frobenius is onto
    if (F.q - 1) % p != 0:
        return True  # the p-th power map is a bijection
    return g ** ((F.q - 1) // p) == F.one


def in_minus4_fourth_powers(F: FieldCtx, g: FieldElem) -> bool:
    """Whether g = -4 * h**4 for some h in F."""
    g = F.elem(g)
    if g.is_zero():
        raise ValueError("in_minus4_fourth_powers requires g != 0")
    if F.p == 2:
        return False  # -4 = 0, so the set is just {0}
    four = F.elem([4 % F.p])
    target = -(g / four)
    k = gcd(4, F.q - 1)
    return target ** ((F.q - 1) // k) == F.one


def karp_failed_condition(F: FieldCtx, g: FieldElem, n: int) -> str | None:
    """First failed power-class clause, or None when x**n - g is irreducible."""
    if n < 1:
        raise ValueError("binomial degree n must be >= 1")
    g = F.elem(g)
    if g.is_zero():
        raise ValueError("irreducibility of x**n - g requires g != 0")
    if n == 1:
        return None
    for r in prime_divisors(n):
        if is_pth_power(F, g, r):
            return FAIL_PTH_POWER
    if n % 4 == 0 and in_minus4_fourth_powers(F, g):
        return FAIL_MINUS4
    return None


def irreducible_karp(F: FieldCtx, g: FieldElem, n: int) -> bool:
    """Power-class criterion for irreducibility of x**n - g."""
    return karp_failed_condition(F, g, n) is None


def irreducible_ln(
    F: FieldCtx, g: FieldElem, n: int, with_oracle: bool = False
) -> BinomialReport:
    """Order criterion for x**n - g, cross-checked against the other route.

    Degree 1 is irreducible by convention. With with_oracle=True the Rabin
    test is run as well and recorded in the report.
    """
    if n < 1:
        raise ValueError("binomial degree n must be >= 1")
    g = F.elem(g)
    if g.is_zero():
        raise ValueError("irreducibility of x**n - g requires g != 0")
    e = mult_order(g)
    failed = _ln_failure(F, e, n)
    ln_verdict = failed is None
    karp_verdict = irreducible_karp(F, g, n)
    if ln_verdict != karp_verdict:
        raise ConsistencyError(
            f"criteria disagree on x^{n} - {g.text} over {F!r}: "
            f"order route {ln_verdict}, power-class route {karp_verdict}"
        )
    oracle = None
    if with_oracle:
        oracle = rabin_irreducible(F, Poly.binomial(F, g, n))
        if oracle != ln_verdict:
            raise ConsistencyError(
                f"Rabin oracle disagrees on x^{n} - {g.text} over {F!r}"
            )
    return BinomialReport(
        q=F.size,
        g=g,
        n=n,
        order_e=e,
        ln_verdict=ln_verdict,
        karp_verdict=karp_verdict,
        oracle_verdict=oracle,
        failed_condition=failed,
    )


def diamond(q: PrimePower, n: int) -> bool:
    """Every prime divisor of n divides q-1, and 4 | n implies 4 | q-1.

    Characterizes irreducibility of x**n - g when g generates F_q*; no field
    arithmetic is needed, only divisibility.
    """
    if n < 1:
        raise ValueError("binomial degree n must be >= 1")
    if any((q.q - 1) % r for r in prime_divisors(n)):
        return False
    return n % 4 != 0 or (q.q - 1) % 4 == 0
