"""Operators D/Dbar, the star map, the monogenic basis and scalar completion."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from contragenic import (
    QuatField,
    TriPoly,
    apply_d,
    apply_dbar,
    complete_scalar,
    conj,
    d_of_scalar,
    inner_product,
    leftright_check,
    monogenic_X,
    monogenic_Y,
    monogenic_basis,
    norm_sq,
    sc,
    solid_harmonic,
    star,
    vec,
    xy_closed_form,
    xy_conj_pairing,
    xy_norm_sq,
)

from util import random_quatfield, random_tripoly

ZERO = TriPoly.zero()
N_MAX = 10


def dbar_component_oracle(f: QuatField) -> QuatField:
    """Left Dbar of an R^3-valued field, written out component by component."""
    assert f.c3.is_zero()
    f0, f1, f2 = f.c0, f.c1, f.c2
    return QuatField(
        f0.partial(0) - f1.partial(1) - f2.partial(2),
        f1.partial(0) + f0.partial(1),
        f2.partial(0) + f0.partial(2),
        f2.partial(1) - f1.partial(2),
    )


class TestOperators:
    def test_dbar_annihilates_constant_units(self):
        assert apply_dbar(QuatField.basis_unit(1), "left").is_zero()

    def test_dbar_on_first_monogenic(self):
        f = QuatField(
            TriPoly.variable(0),
            TriPoly.variable(1).scale(Fraction(1, 2)),
            TriPoly.variable(2).scale(Fraction(1, 2)),
            ZERO,
        )
        assert apply_dbar(f, "left").is_zero()

    def test_d_of_quadratic_harmonic(self):
        u20 = solid_harmonic("U", 2, 0).poly
        expected = QuatField(
            TriPoly.variable(0).scale(2),
            TriPoly.variable(1),
            TriPoly.variable(2),
            ZERO,
        )
        assert d_of_scalar(u20) == expected
        assert apply_d(QuatField.from_scalar(u20), "left") == expected

    def test_dbar_matches_component_oracle(self):
        rng = random.Random(314)
        for _ in range(15):
            f = QuatField(
                random_tripoly(rng, 4),
                random_tripoly(rng, 4),
                random_tripoly(rng, 4),
                ZERO,
            )
            assert apply_dbar(f, "left") == dbar_component_oracle(f)

    def test_laplacian_factorization(self):
        rng = random.Random(2718)
        for _ in range(10):
            f = random_quatfield(rng, 4)
            d_dbar = apply_d(apply_dbar(f, "left"), "left")
            dbar_d = apply_dbar(apply_d(f, "left"), "left")
            laplacian = QuatField(*(p.laplacian() for p in f.components()))
            assert d_dbar == laplacian
            assert dbar_d == laplacian

    def test_sc_vec_conj(self):
        f = QuatField(TriPoly.const(1), TriPoly.variable(1), ZERO, ZERO)
        assert sc(f) == TriPoly.const(1)
        g = QuatField(TriPoly.variable(0), TriPoly.variable(1), ZERO, ZERO)
        assert conj(g) == QuatField(TriPoly.variable(0), -TriPoly.variable(1), ZERO, ZERO)
        rng = random.Random(1)
        h = random_quatfield(rng, 3)
        assert vec(conj(h)) == -vec(h)
        assert conj(h) == QuatField.from_scalar(sc(h)) - vec(h)


class TestStar:
    def test_involution(self):
        rng = random.Random(55)
        for _ in range(10):
            f = random_quatfield(rng, 4)
            assert star(star(f)) == f

    def test_star_x1e1_is_x2e2(self):
        f = QuatField(ZERO, TriPoly.variable(1), ZERO, ZERO)
        assert star(f) == QuatField(ZERO, ZERO, TriPoly.variable(2), ZERO)

    def test_commutes_with_dbar(self):
        rng = random.Random(77)
        for _ in range(10):
            f = random_quatfield(rng, 4)
            assert apply_dbar(star(f), "left") == star(apply_dbar(f, "left"))

    def test_multiplicative_on_products(self):
        # on e0/e1/e2/e3 the map is conjugation by the unit along e1+e2 (a
        # rotation), hence multiplicative: star(f g) = star(f) star(g)
        rng = random.Random(78)
        for _ in range(8):
            f = random_quatfield(rng, 2)
            g = random_quatfield(rng, 2)
            assert star(f * g) == star(f) * star(g)


class TestMonogenicBasis:
    def test_degree_zero(self):
        assert monogenic_X(0, 0).field == QuatField.from_scalar(TriPoly.const(Fraction(1, 2)))
        assert monogenic_X(0, 1).field == QuatField(
            ZERO, TriPoly.const(Fraction(-1, 2)), ZERO, ZERO
        )
        assert monogenic_Y(0, 1).field == QuatField(
            ZERO, ZERO, TriPoly.const(Fraction(-1, 2)), ZERO
        )

    def test_first_degree_values_and_norms(self):
        x10 = monogenic_X(1, 0).field
        assert x10 == QuatField(
            TriPoly.variable(0),
            TriPoly.variable(1).scale(Fraction(1, 2)),
            TriPoly.variable(2).scale(Fraction(1, 2)),
            ZERO,
        )
        assert norm_sq(x10) == xy_norm_sq("X", 1, 0)
        assert str(xy_norm_sq("X", 1, 0)) == "2/5*pi"
        x11 = monogenic_X(1, 1).field
        assert x11 == QuatField(
            TriPoly.variable(1).scale(Fraction(3, 2)),
            TriPoly.variable(0).scale(Fraction(-3, 2)),
            ZERO,
            ZERO,
        )
        assert str(norm_sq(x11)) == "6/5*pi"

    def test_monogenic_and_r3_valued_all_degrees(self):
        for n in range(N_MAX + 1):
            for e in monogenic_basis(n):
                assert apply_dbar(e.field, "left").is_zero(), (e.kind, n, e.m)
                assert e.field.c3.is_zero()
                for comp in e.field.components():
                    assert comp.is_homogeneous()
                    assert comp.is_zero() or comp.degree() == n

    def test_closed_form_equals_derivative_construction(self):
        for n in range(1, 7):
            for m in range(0, n + 2):
                assert xy_closed_form("X", n, m) == monogenic_X(n, m).field
            for m in range(1, n + 2):
                assert xy_closed_form("Y", n, m) == monogenic_Y(n, m).field

    def test_closed_form_examples(self):
        assert xy_closed_form("X", 1, 0) == monogenic_X(1, 0).field
        x11 = xy_closed_form("X", 1, 1)
        assert x11.c0 == TriPoly.variable(1).scale(Fraction(3, 2))
        assert x11.c1 == TriPoly.variable(0).scale(Fraction(-3, 2))
        y11 = xy_closed_form("Y", 1, 1)
        assert y11.c0 == TriPoly.variable(2).scale(Fraction(3, 2))
        assert y11.c2 == TriPoly.variable(0).scale(Fraction(-3, 2))
        # Y(1, 1) is the star image of X(1, 1)
        assert star(monogenic_X(1, 1).field) == monogenic_Y(1, 1).field

    def test_closed_form_rejects_degree_zero(self):
        with pytest.raises(ValueError):
            xy_closed_form("X", 0, 0)

    def test_index_validation(self):
        with pytest.raises(ValueError):
            monogenic_X(2, 4)
        with pytest.raises(ValueError):
            monogenic_Y(2, 0)

    def test_orthogonality_within_degree(self):
        for n in range(N_MAX + 1):
            basis = monogenic_basis(n)
            for i, e in enumerate(basis):
                for other in basis[i + 1 :]:
                    assert inner_product(e.field, other.field).is_zero()

    def test_norms_and_conj_pairings(self):
        for n in range(7):
            for e in monogenic_basis(n):
                assert norm_sq(e.field) == xy_norm_sq(e.kind, n, e.m)
                assert inner_product(e.field, conj(e.field)) == xy_conj_pairing(
                    e.kind, n, e.m
                )

    def test_conj_pairing_spot(self):
        assert str(xy_conj_pairing("X", 1, 0)) == "2/15*pi"

    def test_monogenic_constants(self):
        for n in (1, 2, 4):
            for e in (monogenic_X(n, n + 1), monogenic_Y(n, n + 1)):
                assert conj(e.field) == -e.field
                assert sc(e.field).is_zero()
                for comp in e.field.components():
                    assert comp.partial(0).is_zero()
                assert apply_d(e.field, "left").is_zero()

    def test_top_order_pairing_is_minus_norm(self):
        e = monogenic_X(2, 3)
        assert inner_product(e.field, conj(e.field)) == -norm_sq(e.field)
        assert xy_conj_pairing("X", 2, 3) == -xy_norm_sq("X", 2, 3)

    def test_star_preserves_monogenicity(self):
        for n in range(5):
            for e in monogenic_basis(n):
                assert apply_dbar(star(e.field), "left").is_zero()


class TestCompleteScalar:
    def test_constant(self):
        assert complete_scalar(TriPoly.const(1)) == QuatField.from_scalar(TriPoly.const(1))

    def test_linear(self):
        got = complete_scalar(TriPoly.variable(0))
        assert got == monogenic_X(1, 0).field

    def test_quadratic_example(self):
        f0 = TriPoly({(1, 1, 0): 3})  # 3 x0 x1 = U(2, 1)
        got = complete_scalar(f0)
        assert sc(got) == f0
        assert got == monogenic_X(2, 1).field.scale(Fraction(1, 2))

    def test_round_trip_on_random_scalars(self):
        rng = random.Random(101)
        for n in range(1, 7):
            coeffs = {
                ("U", m): Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                for m in range(n + 1)
            }
            coeffs.update(
                {
                    ("V", m): Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                    for m in range(1, n + 1)
                }
            )
            f0 = TriPoly.zero()
            for (kind, m), c in coeffs.items():
                f0 = f0 + solid_harmonic(kind, n, m).poly.scale(c)
            completed = complete_scalar(f0)
            assert sc(completed) == f0
            assert apply_dbar(completed, "left").is_zero()

    def test_two_completions_differ_by_monogenic_constant(self):
        f0 = solid_harmonic("U", 3, 1).poly
        canonical = complete_scalar(f0)
        shifted = canonical + monogenic_X(3, 4).field.scale(Fraction(2, 7))
        difference = shifted - canonical
        assert sc(difference).is_zero()
        for comp in difference.components():
            assert comp.partial(0).is_zero()
        assert apply_dbar(shifted, "left").is_zero()

    def test_canonical_representative_has_no_constant_content(self):
        f0 = solid_harmonic("U", 3, 2).poly
        completed = complete_scalar(f0)
        for const in (monogenic_X(3, 4).field, monogenic_Y(3, 4).field):
            assert inner_product(completed, const).is_zero()

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            complete_scalar(TriPoly.monomial((2, 0, 0)))  # not harmonic
        with pytest.raises(ValueError):
            complete_scalar(TriPoly.variable(0) + TriPoly.monomial((1, 1, 0)))  # mixed degree


class TestLeftRight:
    def test_monogenic_example(self):
        assert leftright_check(monogenic_X(1, 0).field) is True

    def test_non_monogenic_example(self):
        f = QuatField(ZERO, TriPoly.variable(1), ZERO, ZERO)
        assert leftright_check(f) is False

    def test_constant(self):
        assert leftright_check(QuatField.basis_unit(2)) is True

    def test_rejects_e3(self):
        with pytest.raises(ValueError):
            leftright_check(QuatField(ZERO, ZERO, ZERO, TriPoly.const(1)))
