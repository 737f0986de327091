import pytest

from fqbinom.arith import prime_divisors, prime_powers_upto
from fqbinom.binomials import (
    FAIL_FOUR,
    FAIL_GCD,
    FAIL_MINUS4,
    FAIL_PRIME_DIVISOR,
    FAIL_PTH_POWER,
    diamond,
    in_minus4_fourth_powers,
    irreducible_karp,
    irreducible_ln,
    is_pth_power,
    karp_failed_condition,
)
from fqbinom.fields import Poly, PrimePower, build_field, find_generator, rabin_irreducible


class TestIrreducibleLn:
    def test_f13_n6_irreducible(self):
        F = build_field(13)
        r = irreducible_ln(F, F.elem(2), 6)
        assert r.ln_verdict and r.karp_verdict
        assert r.order_e == 12 and r.failed_condition is None

    def test_f13_n5_prime_divisor_failure(self):
        F = build_field(13)
        r = irreducible_ln(F, F.elem(2), 5)
        assert not r.ln_verdict
        assert r.failed_condition == FAIL_PRIME_DIVISOR
        # cross-check: gcd(5, 12) = 1 makes x -> x^5 bijective, so a root exists
        assert any((a**5).index == 2 for a in F.iter_elements())

    def test_degree_one_convention(self):
        F = build_field(13)
        assert irreducible_ln(F, F.elem(2), 1).ln_verdict
        assert irreducible_karp(F, F.elem(2), 1)

    def test_g_zero_rejected(self):
        F = build_field(13)
        with pytest.raises(ValueError):
            irreducible_ln(F, F.zero, 2)
        with pytest.raises(ValueError):
            irreducible_karp(F, F.zero, 2)

    def test_gcd_condition_failure(self):
        # F_13, g = 3 (order 3), n = 2: gcd((q-1)/e, n) = gcd(4, 2) = 2
        F = build_field(13)
        r = irreducible_ln(F, F.elem(3), 2)
        assert not r.ln_verdict and r.failed_condition == FAIL_GCD

    def test_four_condition_failure(self):
        # F_7, generator g = 3 (order 6), n = 4: primes of 4 divide 6, but 4 !| 6
        F = build_field(7)
        r = irreducible_ln(F, F.elem(3), 4)
        assert not r.ln_verdict and r.failed_condition == FAIL_FOUR

    def test_report_invariants(self):
        F = build_field(13)
        for gi in range(1, 13):
            for n in range(1, 13):
                r = irreducible_ln(F, F.elem(gi), n, with_oracle=(n <= 6))
                assert r.ln_verdict == r.karp_verdict
                assert (F.q - 1) % r.order_e == 0
                if r.oracle_verdict is not None:
                    assert r.oracle_verdict == r.ln_verdict

    def test_json_dict_keys(self):
        F = build_field(13)
        d = irreducible_ln(F, F.elem(2), 5).to_json_dict()
        assert list(d) == [
            "q",
            "p",
            "t",
            "g",
            "n",
            "order_e",
            "ln_verdict",
            "karp_verdict",
            "oracle_verdict",
            "failed_condition",
        ]
        assert d["failed_condition"] == FAIL_PRIME_DIVISOR
        assert d["oracle_verdict"] is None


class TestPthPower:
    def test_examples(self):
        F = build_field(13)
        assert is_pth_power(F, F.one, 2)
        assert not is_pth_power(F, F.elem(2), 2)  # 2^6 = -1 mod 13
        assert is_pth_power(F, F.elem(3), 2)  # 4^2 = 3

    def test_characteristic_always_power(self):
        F = build_field(13)
        for gi in range(1, 13):
            assert is_pth_power(F, F.elem(gi), 13)

    def test_bijective_when_p_coprime(self):
        F = build_field(13)
        for gi in range(1, 13):
            assert is_pth_power(F, F.elem(gi), 5)  # 5 !| 12

    def test_composite_p_rejected(self):
        F = build_field(13)
        with pytest.raises(ValueError):
            is_pth_power(F, F.elem(2), 4)

    def test_agrees_with_enumeration(self):
        for (p, t) in [(13, 1), (3, 2), (2, 3), (7, 1)]:
            F = build_field(p, t)
            for r in (2, 3, 5, 7):
                powers = {(h**r) for h in F.iter_elements()}
                for g in F.iter_elements():
                    if g.is_zero():
                        continue
                    assert is_pth_power(F, g, r) == (g in powers), (p, t, r, g)


class TestMinus4FourthPowers:
    def test_examples(self):
        F = build_field(13)
        assert not in_minus4_fourth_powers(F, F.elem(2))
        assert in_minus4_fourth_powers(F, F.elem(3))
        F2 = build_field(2)
        assert not in_minus4_fourth_powers(F2, F2.one)

    def test_agrees_with_enumeration(self):
        for (p, t) in [(13, 1), (5, 1), (3, 2), (7, 2), (2, 3)]:
            F = build_field(p, t)
            m4 = F.from_coeffs([-4])
            image = {m4 * h**4 for h in F.iter_elements()}
            for g in F.iter_elements():
                if g.is_zero():
                    continue
                assert in_minus4_fourth_powers(F, g) == (g in image), (p, t, g)


class TestKarp:
    def test_examples(self):
        F = build_field(13)
        assert irreducible_karp(F, F.elem(2), 4)
        assert rabin_irreducible(F, Poly.binomial(F, F.elem(2), 4))
        assert not irreducible_karp(F, F.elem(3), 2)

    def test_failed_condition_tags(self):
        F = build_field(13)
        assert karp_failed_condition(F, F.elem(3), 2) == FAIL_PTH_POWER
        # the -4K^4 clause fires first only for q = 3 mod 4: there -1 is a
        # non-square, so g = -4h^4 = -(2h^2)^2 can be a non-square
        F7 = build_field(7)
        assert karp_failed_condition(F7, F7.elem(3), 4) == FAIL_MINUS4
        found = []
        for p in (7, 11, 19):
            Fp = build_field(p)
            found.extend(
                g
                for g in Fp.iter_elements()
                if not g.is_zero() and karp_failed_condition(Fp, g, 4) == FAIL_MINUS4
            )
        assert found


class TestGrid:
    def test_criteria_agree_and_match_oracle_small(self):
        # subset of the acceptance grid: q <= 32, criteria for n <= 12,
        # Rabin cross-check for n <= 6 (irreducible_ln raises on disagreement)
        for p, t, q in prime_powers_upto(32):
            F = build_field(p, t)
            for gi in range(1, q):
                g = F.elem_at(gi)
                for n in range(1, 13):
                    irreducible_ln(F, g, n, with_oracle=(n <= 6))

    def test_characteristic_capture(self):
        # p | n with n >= 2 forces reducibility via Frobenius surjectivity
        for p, t, q in prime_powers_upto(27):
            F = build_field(p, t)
            for gi in range(1, q):
                g = F.elem_at(gi)
                for mult in (1, 2):
                    n = p * mult
                    if n >= 2:
                        assert not irreducible_ln(F, g, n).ln_verdict
                        assert not irreducible_karp(F, g, n)


class TestDiamond:
    def test_examples(self):
        q13 = PrimePower.of(13, 1)
        assert diamond(q13, 6)
        assert not diamond(q13, 5)
        assert diamond(q13, 4)

    def test_equals_generator_route(self):
        for p, t, q in prime_powers_upto(64):
            F = build_field(p, t)
            g = find_generator(F)
            for n in range(1, 13):
                assert diamond(F.size, n) == irreducible_ln(F, g, n).ln_verdict, (q, n)

    def test_n_form_over_f13(self):
        q13 = PrimePower.of(13, 1)
        for n in range(1, 145):
            expect = set(prime_divisors(n)) <= {2, 3}
            assert diamond(q13, n) == expect
