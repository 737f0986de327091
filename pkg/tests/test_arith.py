import random

import pytest

from fqbinom.arith import (
    Factorization,
    divisors,
    factor,
    first_primes,
    iroot,
    is_prime,
    prime_divisors,
    prime_power_decompose,
    prime_powers_upto,
)

from oracles import naive_factor_pairs, sieve_primes, trial_division_is_prime


def test_is_prime_examples():
    assert is_prime(2)
    assert is_prime(13)
    # 5764801 = 7**8, checked by integer 8th-root extraction
    assert iroot(5764801, 8) == 7 and 7**8 == 5764801
    assert not is_prime(5764801)


def test_is_prime_agrees_with_trial_division():
    for n in range(30000):
        assert is_prime(n) == trial_division_is_prime(n), n
    rng = random.Random(2024)
    for _ in range(3000):
        n = rng.randrange(30000, 10**6)
        assert is_prime(n) == trial_division_is_prime(n), n


def test_is_prime_large_values():
    # around the deterministic-witness boundary and beyond
    assert is_prime(2**89 - 1)  # Mersenne prime
    assert not is_prime(2**89 + 1)
    assert is_prime(10**50 + 151)
    assert not is_prime((10**25 + 7) ** 2)


def test_factor_examples():
    assert factor(12).pairs == ((2, 2), (3, 1))
    assert factor(1).pairs == ()
    assert {2, 3, 5} <= set(factor(5764800).primes)
    with pytest.raises(ValueError):
        factor(0)


def test_factor_reconstructs_and_primes_are_prime():
    for n in range(2, 10001):
        f = factor(n)
        assert f.value() == n
        assert all(is_prime(p) for p in f.primes)
        assert list(f.primes) == sorted(f.primes)
        assert all(e >= 1 for _, e in f)


def test_factor_matches_naive_on_random_values():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randrange(2, 10**9)
        assert factor(n).pairs == tuple(naive_factor_pairs(n))


def test_factor_large_smoothish_values():
    n = 7**8 - 1
    f = factor(n)
    assert f.value() == n and f.pairs == ((2, 6), (3, 1), (5, 2), (1201, 1))
    n = 11**48 - 1
    f = factor(n)
    assert f.value() == n
    assert all(is_prime(p) for p in f.primes)


def test_prime_power_decompose():
    assert prime_power_decompose(25) == (5, 2)
    assert prime_power_decompose(13) == (13, 1)
    assert prime_power_decompose(12) is None
    assert prime_power_decompose(5764801) == (7, 8)
    with pytest.raises(ValueError):
        prime_power_decompose(1)
    for p in first_primes(20):
        for t in range(1, 6):
            assert prime_power_decompose(p**t) == (p, t)


def test_first_primes():
    assert first_primes(1) == [2]
    assert first_primes(4) == [2, 3, 5, 7]
    assert first_primes(6)[-1] == 13
    assert first_primes(25) == sieve_primes(97)
    with pytest.raises(ValueError):
        first_primes(0)


def test_divisors_and_prime_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert prime_divisors(60) == (2, 3, 5)
    assert prime_divisors(1) == ()


def test_prime_powers_upto():
    pps = prime_powers_upto(64)
    assert len(pps) == 27
    assert [q for _, _, q in pps[:6]] == [2, 3, 4, 5, 7, 8]
    assert all(p**t == q for p, t, q in pps)


def test_factorization_value_roundtrip():
    f = Factorization(((2, 3), (7, 2)))
    assert f.value() == 392
    assert f.multiplicity(7) == 2 and f.multiplicity(3) == 0
