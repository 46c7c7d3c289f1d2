"""Legendre functions, solid harmonics, their norms and exact identities."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest
from scipy.special import lpmv

from contragenic import (
    PiRational,
    TriPoly,
    TSPoly,
    assoc_legendre,
    degree_basis,
    harmonic_dim_check,
    inner_product,
    legendre,
    solid_harmonic,
    uv_norm_sq,
    uv_term,
)
from contragenic.checks import legendre_identity_suite

N_MAX = 12


def bonnet_oracle(n: int) -> dict[int, Fraction]:
    """Independent Legendre coefficients via the three-term recurrence."""
    p_prev = {0: Fraction(1)}
    if n == 0:
        return p_prev
    p_curr = {1: Fraction(1)}
    for k in range(1, n):
        p_next: dict[int, Fraction] = {}
        for power, coeff in p_curr.items():
            p_next[power + 1] = (
                p_next.get(power + 1, Fraction(0))
                + Fraction(2 * k + 1, k + 1) * coeff
            )
        for power, coeff in p_prev.items():
            p_next[power] = p_next.get(power, Fraction(0)) - Fraction(k, k + 1) * coeff
        p_prev, p_curr = p_curr, {p: c for p, c in p_next.items() if c}
    return p_curr


class TestLegendre:
    def test_first_values(self):
        assert legendre(0) == TSPoly({0: 1})
        assert legendre(1) == TSPoly({1: 1})
        assert legendre(2) == TSPoly({2: Fraction(3, 2), 0: Fraction(-1, 2)})

    def test_against_bonnet_recurrence(self):
        for n in range(N_MAX + 1):
            assert legendre(n) == TSPoly(even=bonnet_oracle(n)), n

    def test_value_at_one(self):
        for n in range(8):
            assert legendre(n).eval(1.0) == pytest.approx(1.0, abs=1e-12)


class TestAssocLegendre:
    def test_spot_values(self):
        assert assoc_legendre(1, 1) == TSPoly(odd={0: 1})  # s
        assert assoc_legendre(2, 1) == TSPoly(odd={1: 3})  # 3 t s
        assert assoc_legendre(2, 2) == TSPoly({0: 3, 2: -3})  # 3 (1 - t^2)

    def test_order_above_degree_is_zero(self):
        assert assoc_legendre(3, 4).is_zero()

    def test_scipy_float_oracle(self):
        # scipy's lpmv carries the Condon-Shortley phase; ours does not
        rng = random.Random(99)
        for _ in range(60):
            n = rng.randint(0, 10)
            m = rng.randint(0, n)
            t = rng.uniform(-0.99, 0.99)
            want = (-1.0) ** m * lpmv(m, n, t)
            assert assoc_legendre(n, m).eval(t) == pytest.approx(want, rel=1e-10, abs=1e-10)

    def test_identity_suite(self):
        failures = [r for r in legendre_identity_suite(N_MAX) if not r.passed]
        assert not failures, [r.line() for r in failures]


class TestSolidHarmonics:
    def test_spot_polynomials(self):
        assert solid_harmonic("U", 0, 0).poly == TriPoly.const(1)
        assert solid_harmonic("U", 1, 1).poly == TriPoly.variable(1)
        assert solid_harmonic("V", 1, 1).poly == TriPoly.variable(2)
        expected = TriPoly(
            {(2, 0, 0): 1, (0, 2, 0): Fraction(-1, 2), (0, 0, 2): Fraction(-1, 2)}
        )
        assert solid_harmonic("U", 2, 0).poly == expected

    def test_invalid_indices(self):
        with pytest.raises(ValueError):
            solid_harmonic("V", 2, 0)
        with pytest.raises(ValueError):
            solid_harmonic("W", 1, 0)
        assert solid_harmonic("U", 2, 5).poly.is_zero()
        assert uv_term("V", 3, 0).is_zero()
        assert uv_term("U", 3, 7).is_zero()

    def test_harmonic_homogeneous(self):
        for n in range(N_MAX + 1):
            for h in degree_basis(n):
                assert h.poly.laplacian().is_zero(), (h.kind, n, h.m)
                assert h.poly.is_homogeneous()
                assert h.poly.degree() == n

    def test_spherical_coordinate_float_oracle(self):
        rng = random.Random(4242)
        for _ in range(40):
            n = rng.randint(0, 9)
            m = rng.randint(0, n)
            kind = "U" if m == 0 else rng.choice(["U", "V"])
            r = rng.uniform(0.1, 1.0)
            theta = rng.uniform(0.05, math.pi - 0.05)
            phi = rng.uniform(0, 2 * math.pi)
            point = (
                r * math.cos(theta),
                r * math.sin(theta) * math.cos(phi),
                r * math.sin(theta) * math.sin(phi),
            )
            pnm = (-1.0) ** m * lpmv(m, n, math.cos(theta))
            angular = math.cos(m * phi) if kind == "U" else math.sin(m * phi)
            want = r**n * pnm * angular
            got = solid_harmonic(kind, n, m).poly.eval_float(*point)
            assert got == pytest.approx(want, rel=1e-9, abs=1e-9), (kind, n, m)

    def test_same_degree_orthogonality(self):
        for n in range(N_MAX + 1):
            basis = degree_basis(n)
            for i, h in enumerate(basis):
                for g in basis[i + 1 :]:
                    assert inner_product(h.as_field(), g.as_field()).is_zero()

    def test_cross_degree_orthogonality_spot(self):
        pairs = [((2, "U", 0), (4, "U", 0)), ((3, "U", 1), (5, "U", 1)), ((2, "V", 2), (6, "V", 2))]
        for (n1, k1, m1), (n2, k2, m2) in pairs:
            value = inner_product(
                solid_harmonic(k1, n1, m1).as_field(),
                solid_harmonic(k2, n2, m2).as_field(),
            )
            assert value.is_zero()

    def test_norms_match_closed_form(self):
        for n in range(N_MAX + 1):
            for h in degree_basis(n):
                got = inner_product(h.as_field(), h.as_field())
                assert got == uv_norm_sq(h.kind, n, h.m), (h.kind, n, h.m)

    def test_norm_spot_values(self):
        assert uv_norm_sq("U", 1, 0) == PiRational(Fraction(4, 15))
        # 2 pi 3! / (5 * 7 * 1!) = 12/35 pi
        assert uv_norm_sq("U", 2, 1) == PiRational(Fraction(12, 35))
        assert uv_norm_sq("V", 1, 1) == PiRational(Fraction(4, 15))

    def test_componentwise_pairings(self):
        from contragenic import TriPoly as TP
        from contragenic import VecField

        zero = TP.zero()
        u11 = solid_harmonic("U", 1, 1).poly
        v11 = solid_harmonic("V", 1, 1).poly
        # fields living on different components never pair
        assert inner_product(
            VecField(zero, u11, zero), VecField(zero, zero, v11)
        ).is_zero()
        # <x2 e1, x2 e1> is the plain second moment of the ball
        x2e1 = VecField(zero, TP.variable(2), zero)
        assert inner_product(x2e1, x2e1) == PiRational(Fraction(4, 15))

    def test_dimension_counts(self):
        assert harmonic_dim_check(0) == 1
        assert harmonic_dim_check(1) == 3
        assert harmonic_dim_check(5) == 11
