import pytest

from fqbinom.arith import divisors
from fqbinom.errors import NotIrreducible, SizeBoundExceeded
from fqbinom.fields import (
    Poly,
    PrimePower,
    build_field,
    degree_over_subfield,
    find_generator,
)
from fqbinom.towers import build_tower, closure_check, extend_by_binomial

from oracles import frobenius_fixed_set


class TestExtendByBinomial:
    def test_f13_sqrt2(self):
        F = build_field(13)
        lvl = extend_by_binomial(F, F.elem(2), 2)
        assert lvl.field.q == 169
        assert lvl.root ** 2 == lvl.field.from_coeffs([2])
        assert lvl.minimal_poly == Poly.binomial(F, F.elem(2), 2)

    def test_f13_cbrt2(self):
        F = build_field(13)
        lvl = extend_by_binomial(F, F.elem(2), 3)
        assert lvl.field.q == 13**3
        assert lvl.root ** 3 == lvl.field.from_coeffs([2])

    def test_not_irreducible(self):
        F = build_field(13)
        with pytest.raises(NotIrreducible):
            extend_by_binomial(F, F.elem(2), 5)

    def test_root_degree(self):
        F = build_field(13)
        for n in (2, 3, 4, 6):
            lvl = extend_by_binomial(F, F.elem(2), n)
            assert degree_over_subfield(lvl.field, lvl.root, F.size) == n

    def test_extension_base(self):
        # base F_9, generator g: x^2 - g irreducible, level inside F_(3^4)
        F9 = build_field(3, 2)
        g = find_generator(F9)
        lvl = extend_by_binomial(F9, g, 2)
        assert lvl.field.q == 3**4
        from fqbinom.towers import _embedding

        embed = _embedding(F9, lvl.field)
        assert lvl.root ** 2 == embed(g)
        assert degree_over_subfield(lvl.field, lvl.root, F9.size) == 2

    def test_smallest_root_chosen(self):
        from fqbinom.fields import poly_roots

        F = build_field(13)
        lvl = extend_by_binomial(F, F.elem(2), 2)
        roots = poly_roots(lvl.field, Poly.binomial(lvl.field, lvl.field.from_coeffs([2]), 2))
        assert lvl.root == min(roots, key=lambda e: e.index)


class TestBuildTower:
    def test_chain_1_2_4(self):
        F = build_field(13)
        levels = build_tower(F, F.elem(2), [1, 2, 4])
        assert [l.degree_over_base for l in levels] == [1, 2, 4]
        g_img = levels[-1].field.from_coeffs([2])
        assert levels[0].root == g_img  # n = 1 root is g itself

    def test_chain_2_4_12_compatibility(self):
        F = build_field(13)
        levels = build_tower(F, F.elem(2), [2, 4, 12])
        r12 = levels[2].root
        assert levels[0].root == r12 ** 6
        assert levels[1].root == r12 ** 3
        g_img = levels[2].field.from_coeffs([2])
        for l in levels:
            assert l.root ** l.degree_over_base == g_img
            assert (
                degree_over_subfield(l.field, l.root, F.size) == l.degree_over_base
            )

    def test_non_chain_rejected(self):
        F = build_field(13)
        with pytest.raises(ValueError):
            build_tower(F, F.elem(2), [2, 3])
        with pytest.raises(ValueError):
            build_tower(F, F.elem(2), [4, 2])

    def test_not_irreducible_propagates(self):
        F = build_field(13)
        with pytest.raises(NotIrreducible):
            build_tower(F, F.elem(2), [5, 10])


class TestClosureCheck:
    def test_f13_n12(self):
        F = build_field(13)
        rep = closure_check(F, F.elem(2), 12)
        assert rep.hypothesis_met
        assert [r.n for r in rep.rows] == [1, 2, 3, 4, 6, 12]
        assert all(
            r.irreducible and r.root_found and r.generates_unique_subfield
            for r in rep.rows
        )

    def test_f13_n10_reducible_rows(self):
        F = build_field(13)
        rep = closure_check(F, F.elem(2), 10)
        assert not rep.hypothesis_met
        bad = {r.n for r in rep.rows if not r.irreducible}
        # every failure is due to the prime divisor 5 of n
        assert bad == {5, 10}
        assert all(
            r.failed_condition == "prime-divisor-condition"
            for r in rep.rows
            if not r.irreducible
        )

    def test_f5_n4(self):
        F = build_field(5)
        rep = closure_check(F, F.elem(2), 4)
        assert rep.hypothesis_met
        assert [r.n for r in rep.rows] == [1, 2, 4]

    def test_desk_scale_bound(self):
        F = build_field(13)
        with pytest.raises(SizeBoundExceeded):
            closure_check(F, F.elem(2), 65)

    def test_rejects_zero_g(self):
        F = build_field(13)
        with pytest.raises(ValueError):
            closure_check(F, F.zero, 4)

    def test_consistency_invariant(self):
        # hypothesis_met forces fully-true rows; a reducible divisor forces false
        F = build_field(13)
        for N in (4, 6, 10, 12):
            rep = closure_check(F, F.elem(2), N)
            if rep.hypothesis_met:
                assert all(
                    r.root_found and r.generates_unique_subfield for r in rep.rows
                )
            else:
                assert any(not r.irreducible for r in rep.rows)

    def test_json_shape(self):
        F = build_field(5)
        d = closure_check(F, F.elem(2), 4).to_json_dict()
        assert d["hypothesis_met"] is True
        assert d["ambient_modulus"].count(",") == 4
        assert [row["n"] for row in d["rows"]] == [1, 2, 4]


class TestSubfieldUniqueness:
    # exhaustive oracle: the Frobenius fixed set of each divisor is a
    # subfield with exactly q^n elements
    @pytest.mark.parametrize("q,N", [(2, 8), (3, 4), (5, 4), (7, 2), (9, 2)])
    def test_fixed_sets_are_unique_subfields(self, q, N):
        base = PrimePower.from_q(q)
        ambient = build_field(base.p, base.t * N)
        for n in divisors(N):
            sub = frobenius_fixed_set(ambient, q**n)
            assert len(sub) == q**n
            for a in sub:
                for b in sub:
                    assert a + b in sub
                    assert a * b in sub
