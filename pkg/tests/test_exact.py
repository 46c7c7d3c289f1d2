"""Exact-algebra layer: polynomials, the t/s quotient ring, closed-form integrals."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from contragenic import (
    PiRational,
    TriPoly,
    TSPoly,
    TSNormalizationError,
    ball_integral,
    ball_monomial_integral,
    scalar_pairing,
    sphere_monomial_integral,
)
from contragenic.fields import VecField
from contragenic.quadrature import quad_crosscheck

from util import random_tripoly

X0 = TriPoly.variable(0)
X1 = TriPoly.variable(1)
X2 = TriPoly.variable(2)
R2 = X0 * X0 + X1 * X1 + X2 * X2


class TestTriPolyRing:
    def test_square_of_variable(self):
        assert X0 * X0 == TriPoly.monomial((2, 0, 0))

    def test_cancellation_to_zero(self):
        assert ((X1 + X2) - (X1 + X2)).is_zero()

    def test_half_difference_expansion(self):
        # (3 x0^2 - r^2) / 2 = x0^2 - x1^2/2 - x2^2/2
        lhs = (X0 * X0).scale(3) - R2
        expected = TriPoly(
            {(2, 0, 0): 1, (0, 2, 0): Fraction(-1, 2), (0, 0, 2): Fraction(-1, 2)}
        )
        assert lhs.scale(Fraction(1, 2)) == expected

    def test_ring_axioms_randomized(self):
        rng = random.Random(20240401)
        for _ in range(25):
            p = random_tripoly(rng, 4)
            q = random_tripoly(rng, 4)
            r = random_tripoly(rng, 4)
            assert (p * q) * r == p * (q * r)
            assert p * (q + r) == p * q + p * r
            assert p * q == q * p
            assert p + q == q + p
            assert (p - p).is_zero()

    def test_no_zero_terms_stored(self):
        p = TriPoly({(1, 0, 0): 1, (0, 1, 0): 0})
        assert (1, 0, 0) in p.terms and (0, 1, 0) not in p.terms
        assert not (p - p).terms

    def test_canonical_string_graded_lex(self):
        p = TriPoly({(0, 0, 1): 1, (2, 0, 0): 1, (0, 1, 0): Fraction(-1, 2)})
        assert str(p) == "x0^2 - 1/2*x1 + x2"


class TestPartialAndEval:
    def test_partial_examples(self):
        assert (X0 * X0).partial(0) == X0.scale(2)
        assert X0.partial(1).is_zero()
        p = X0 * X1 * X2 * X2
        assert p.partial(2) == (X0 * X1 * X2).scale(2)

    def test_laplacian_of_harmonic(self):
        harmonic = X0 * X0 - X1 * X1
        assert harmonic.laplacian().is_zero()
        assert not (X0 * X0).laplacian().is_zero()

    def test_eval_exact(self):
        p = X0 * X0 + X1 * X1
        assert p.eval((Fraction(1), Fraction(0), Fraction(0))) == 1
        q = X0 * X1 * X2
        assert q.eval((Fraction(1, 2), Fraction(1, 3), Fraction(1, 5))) == Fraction(1, 30)

    def test_eval_float_is_double(self):
        # U(1, 0) = x0, so the value is just the first coordinate
        assert X0.eval((0.25, 0.5, -0.5)) == pytest.approx(0.25, abs=0.0)

    def test_homogeneous_parts_sum_back(self):
        rng = random.Random(7)
        p = random_tripoly(rng, 5, terms=8)
        parts = p.homogeneous_parts()
        total = TriPoly.zero()
        for degree, part in parts.items():
            assert part.is_homogeneous()
            assert part.degree() == degree
            total = total + part
        assert total == p


class TestBallIntegral:
    def test_ball_volume(self):
        assert ball_monomial_integral(0, 0, 0) == PiRational(Fraction(4, 3))

    def test_odd_symmetry_zero(self):
        assert ball_monomial_integral(1, 1, 0).is_zero()

    def test_quadratic_moment(self):
        # oracle: high-order quadrature agrees with the Gamma-product value
        mono = VecField.from_scalar(TriPoly.monomial((2, 0, 0)))
        one = VecField.from_scalar(TriPoly.const(1))
        report = quad_crosscheck(mono, one)
        exact = ball_monomial_integral(2, 0, 0)
        assert exact == PiRational(Fraction(4, 15))
        assert report.rel_error <= 1e-13

    def test_zero_iff_any_odd(self):
        for a in range(5):
            for b in range(5):
                for c in range(5):
                    value = ball_monomial_integral(a, b, c)
                    if a % 2 or b % 2 or c % 2:
                        assert value.is_zero()
                    else:
                        assert value.q > 0

    def test_quadrature_oracle_all_even_to_degree_16(self):
        one = VecField.from_scalar(TriPoly.const(1))
        for a in range(0, 17, 2):
            for b in range(0, 17 - a, 2):
                for c in range(0, 17 - a - b, 2):
                    exact = float(ball_monomial_integral(a, b, c))
                    mono = VecField.from_scalar(TriPoly.monomial((a, b, c)))
                    report = quad_crosscheck(mono, one)
                    assert abs(report.quad_value - exact) / abs(exact) <= 1e-12, (a, b, c)

    def test_ball_integral_linear(self):
        rng = random.Random(11)
        p = random_tripoly(rng, 6, terms=6)
        q = random_tripoly(rng, 6, terms=6)
        assert (ball_integral(p) + ball_integral(q)) == ball_integral(p + q)
        assert scalar_pairing(p, q) == ball_integral(p * q)


class TestSphereIntegral:
    def test_sphere_area(self):
        assert sphere_monomial_integral(0, 0, 0) == PiRational(4)

    def test_quadratic_moment_symmetry(self):
        # the three axis moments are equal and sum to the area
        moments = [
            sphere_monomial_integral(2, 0, 0),
            sphere_monomial_integral(0, 2, 0),
            sphere_monomial_integral(0, 0, 2),
        ]
        assert moments[0] == moments[1] == moments[2]
        assert moments[0] + moments[1] + moments[2] == PiRational(4)
        assert moments[0] == PiRational(Fraction(4, 3))

    def test_odd_zero(self):
        assert sphere_monomial_integral(1, 0, 2).is_zero()

    def test_radial_homogeneity_identity(self):
        for a in range(0, 17):
            for b in range(0, 17 - a):
                for c in range(0, 17 - a - b):
                    lhs = sphere_monomial_integral(a, b, c).scale(
                        Fraction(1, a + b + c + 3)
                    )
                    assert lhs == ball_monomial_integral(a, b, c), (a, b, c)


T = TSPoly.t_power(1)
S = TSPoly.s()


class TestTSPoly:
    def test_s_squared_rewrites(self):
        assert S * S == TSPoly({0: 1, 2: -1})

    def test_normal_form_never_holds_s2(self):
        rng = random.Random(3)
        for _ in range(20):
            p = TSPoly(
                even={rng.randint(0, 4): Fraction(rng.randint(-5, 5), rng.randint(1, 5))},
                odd={rng.randint(0, 4): Fraction(rng.randint(-5, 5), rng.randint(1, 5))},
            )
            q = p * p * p
            # the representation carries only s-exponents 0 and 1 by type
            assert set(q.even) or set(q.odd) or q.is_zero()
            with pytest.raises(ValueError):
                q.coeff(0, 2)

    def test_diff_t_polynomial(self):
        assert (T * T).diff_t() == T.scale(2)

    def test_scaled_diff_on_legendre_two(self):
        p2 = TSPoly({2: Fraction(3, 2), 0: Fraction(-1, 2)})
        # (1 - t^2) d/dt P2 = 3t - 3t^3
        assert p2.scaled_diff_t() == TSPoly({1: 3, 3: -3})

    def test_diff_t_reports_non_normalizable(self):
        with pytest.raises(TSNormalizationError):
            S.diff_t()

    def test_diff_t_closed_when_odd_part_divisible(self):
        # s*(1 - t^2) differentiates inside the ring
        p = S * (TSPoly({0: 1, 2: -1}))
        got = p.diff_t()
        # d/dt [s (1-t^2)] = s' (1-t^2) + s (-2t) = -t s - 2 t s = -3 t s
        assert got == TSPoly(odd={1: -3})

    def test_ring_ops_match_float_evaluation(self):
        rng = random.Random(5)
        for _ in range(10):
            p = TSPoly(
                even={rng.randint(0, 3): Fraction(rng.randint(-4, 4), rng.randint(1, 4))},
                odd={rng.randint(0, 3): Fraction(rng.randint(-4, 4), rng.randint(1, 4))},
            )
            q = TSPoly(
                even={rng.randint(0, 3): Fraction(rng.randint(-4, 4), rng.randint(1, 4))},
                odd={rng.randint(0, 3): Fraction(rng.randint(-4, 4), rng.randint(1, 4))},
            )
            for t in (-0.7, 0.0, 0.3, 0.96):
                assert (p * q).eval(t) == pytest.approx(p.eval(t) * q.eval(t), abs=1e-12)
                assert (p + q).eval(t) == pytest.approx(p.eval(t) + q.eval(t), abs=1e-12)
                assert (p - q).eval(t) == pytest.approx(p.eval(t) - q.eval(t), abs=1e-12)


class TestPiRational:
    def test_arithmetic(self):
        a = PiRational(Fraction(4, 15))
        b = PiRational(Fraction(1, 15))
        assert a + b == PiRational(Fraction(1, 3))
        assert a - b == PiRational(Fraction(1, 5))
        assert a.scale(Fraction(1, 2)) == PiRational(Fraction(2, 15))
        assert a / b == 4
        assert str(a) == "4/15*pi"

    def test_float_value(self):
        import math

        assert float(PiRational(Fraction(4, 3))) == pytest.approx(4 * math.pi / 3, rel=1e-15)

    def test_comparisons(self):
        assert PiRational(Fraction(1, 3)) < PiRational(Fraction(1, 2))
        assert PiRational(0).is_zero()
        assert PiRational(0) == 0
