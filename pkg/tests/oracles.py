"""Independent brute-force oracles used by the test suite.

Everything here is deliberately naive (trial division, exhaustive
enumeration) and never calls the code paths it is used to check.
"""

from __future__ import annotations

import itertools
from math import isqrt


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def naive_factor_pairs(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def sieve_primes(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(limit + 1) if flags[i]]


# --- naive polynomial arithmetic over F_q via element operations -----------


def poly_mul_elems(a, b, zero):
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    while out and out[-1].is_zero():
        out.pop()
    return out


def poly_rem_elems(a, m, zero):
    # m monic
    r = list(a)
    dm = len(m) - 1
    while len(r) - 1 >= dm and r:
        if r[-1].is_zero():
            r.pop()
            continue
        c = r[-1]
        shift = len(r) - 1 - dm
        for j in range(dm + 1):
            r[shift + j] = r[shift + j] - c * m[j]
        while r and r[-1].is_zero():
            r.pop()
    return r


def monic_polys(F, degree):
    """All monic polynomials of the given degree, as element lists."""
    for idxs in itertools.product(range(F.q), repeat=degree):
        yield [F.elem_at(i) for i in idxs] + [F.one]


def brute_force_irreducible(F, coeffs) -> bool:
    """Exhaustive search for a monic divisor of degree <= n/2."""
    coeffs = list(coeffs)
    n = len(coeffs) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for cand in monic_polys(F, d):
            if not poly_rem_elems(coeffs, cand, F.zero):
                return False
    return True


def brute_force_lex_modulus(F_prime, t) -> tuple[int, ...]:
    """Smallest (base-p ascending) monic irreducible of degree t over F_p."""
    p = F_prime.p
    for v in range(p**t):
        digs = []
        x = v
        for _ in range(t):
            digs.append(x % p)
            x //= p
        coeffs = [F_prime.elem_at(c) for c in digs] + [F_prime.one]
        if brute_force_irreducible(F_prime, coeffs):
            return tuple(digs) + (1,)
    raise AssertionError("no irreducible found")


def exhaustive_roots(F, poly) -> set:
    return {e for e in F.iter_elements() if poly(e).is_zero()}


def exhaustive_exists_irreducible_binomial(F, n) -> bool:
    from fqbinom.fields import Poly, rabin_irreducible

    return any(
        rabin_irreducible(F, Poly.binomial(F, g, n))
        for g in F.iter_elements()
        if not g.is_zero()
    )


def frobenius_fixed_set(ambient, q_sub: int) -> set:
    """Elements a with a**q_sub = a, by exhaustive enumeration."""
    return {a for a in ambient.iter_elements() if a**q_sub == a}
