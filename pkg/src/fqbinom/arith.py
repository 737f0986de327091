"""Exact natural-number arithmetic: primality, factorization, prime lists.

Primality is Miller-Rabin with the 13-witness set that is deterministic below
3.3e24; larger inputs fall back to 64 rounds with witnesses derived
deterministically from the input, so repeated runs always agree.
Factorization is trial division followed by Brent-cycle Pollard rho with a
fixed iteration budget; inputs that exhaust the budget raise
FactorizationTooHard instead of spinning.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .errors import FactorizationTooHard

# deterministic below 3,317,044,064,679,887,385,961,981 (13 fixed witnesses)
MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_TRIAL_LIMIT = 10**6
_RHO_BUDGET = 1 << 22

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _splitmix64(state: int):
    while True:
        state = (state + 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
        yield z ^ (z >> 31)


def _mr_witness(a: int, d: int, s: int, n: int) -> bool:
    # True if a proves n composite
    a %= n
    if a in (0, 1, n - 1):
        return False
    x = pow(a, d, n)
    if x in (1, n - 1):
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Test primality; deterministic below 3.3e24, error < 2**-128 above."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < MR_DETERMINISTIC_BOUND:
        witnesses = _MR_WITNESSES
    else:
        stream = _splitmix64(n & 0xFFFFFFFFFFFFFFFF)
        witnesses = tuple(2 + next(stream) % (n - 3) for _ in range(64))
    return not any(_mr_witness(a, d, s, n) for a in witnesses)


def _brent_rho(n: int, budget: int) -> int | None:
    # n odd composite; returns a nontrivial factor or None when out of budget
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        y, r, q = 2, 1, 1
        g, ys = 1, y
        spent = 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            spent += 2 * r
            if spent > budget:
                return None
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    return None


@dataclass(frozen=True)
class Factorization:
    """Multiset of (prime, multiplicity) pairs with primes strictly increasing."""

    pairs: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def multiplicity(self, p: int) -> int:
        for q, e in self.pairs:
            if q == p:
                return e
        return 0

    def __iter__(self):
        return iter(self.pairs)


def _factor_into(n: int, counts: dict[int, int]) -> None:
    while n > 1:
        if is_prime(n):
            counts[n] = counts.get(n, 0) + 1
            return
        d = _brent_rho(n, _RHO_BUDGET)
        if d is None:
            raise FactorizationTooHard(
                f"no factor of {n} found within the desk-scale rho budget"
            )
        _factor_into(d, counts)
        n //= d


@lru_cache(maxsize=4096)
def factor(n: int) -> Factorization:
    """Factor n >= 1 into primes; n = 1 gives the empty factorization."""
    if n < 1:
        raise ValueError("factor() requires n >= 1")
    counts: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    # wheel mod 30 up to the trial limit
    d = 7
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d <= _TRIAL_LIMIT and d * d <= n:
        while n % d == 0:
            counts[d] = counts.get(d, 0) + 1
            n //= d
        d += steps[i]
        i = (i + 1) & 7
    if n > 1:
        if d * d > n:
            counts[n] = counts.get(n, 0) + 1
        else:
            _factor_into(n, counts)
    return Factorization(tuple(sorted(counts.items())))


def prime_divisors(n: int) -> tuple[int, ...]:
    """Distinct primes dividing n (empty for n = 1)."""
    return factor(n).primes


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted ascending."""
    out = [1]
    for p, e in factor(n):
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def iroot(n: int, k: int) -> int:
    """Integer floor of the k-th root of n >= 0."""
    if n < 0 or k < 1:
        raise ValueError("iroot requires n >= 0, k >= 1")
    if n < 2 or k == 1:
        return n
    x = 1 << (-(-n.bit_length() // k))  # upper bound
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def prime_power_decompose(n: int) -> tuple[int, int] | None:
    """Write n = p**t with p prime, or None if n is not a prime power."""
    if n < 2:
        raise ValueError("prime_power_decompose requires n >= 2")
    for t in range(n.bit_length(), 0, -1):
        r = iroot(n, t)
        if r**t == n:
            return (r, t) if is_prime(r) else None
    return None


def first_primes(k: int) -> list[int]:
    """The first k primes in increasing order, starting from 2."""
    if k < 1:
        raise ValueError("first_primes requires k >= 1")
    out = [2]
    n = 3
    while len(out) < k:
        if is_prime(n):
            out.append(n)
        n += 2
    return out


def prime_powers_upto(bound: int) -> list[tuple[int, int, int]]:
    """All (p, t, q=p**t) with q <= bound, sorted by q."""
    out = []
    for p in range(2, bound + 1):
        if not is_prime(p):
            continue
        q, t = p, 1
        while q <= bound:
            out.append((p, t, q))
            q *= p
            t += 1
    return sorted(out, key=lambda x: x[2])
