"""Bergman kernels, projection properties and the evaluation bound."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from contragenic import (
    TriPoly,
    VecField,
    contragenic_basis,
    eval_kernel,
    eval_kernel_exact,
    inner_product,
    kernel,
    kernel_from_orthogonal,
    monogenic_X,
    norm_sq,
    point_eval_bound_check,
    project,
    project_truncated,
    vec,
    vec_basis,
)

from util import exact_gram_schmidt, random_invertible_matrix

ZERO = TriPoly.zero()
N_MAX = 6


class TestKernelConstruction:
    def test_degree_zero_is_constant_rank_two(self):
        k = kernel(0)
        assert len(k.pairs) == 2
        value = -3.0 / (4.0 * math.pi)
        for x, y in (((0.0, 0.0, 0.0), (0.9, 0.1, -0.1)), ((0.5, 0.5, 0.5), (0.0, 0.0, 0.0))):
            b1, b2 = eval_kernel(0, x, y)
            assert b1[0] == pytest.approx(value, rel=1e-14)
            assert b1[1] == 0.0
            assert b2[0] == 0.0
            assert b2[1] == pytest.approx(value, rel=1e-14)

    def test_pair_counts(self):
        assert len(kernel(2).pairs) == 7
        for n in range(1, N_MAX + 1):
            assert len(kernel(n).pairs) == 2 * n + 3

    def test_kernel_at_origin_kills_positive_degrees(self):
        # for n >= 1 every basis field vanishes at 0, so b(0, y) = 0
        b1, b2 = eval_kernel(1, (0.0, 0.0, 0.0), (0.3, 0.2, 0.1))
        assert b1 == (0.0, 0.0) and b2 == (0.0, 0.0)

    def test_basis_independence(self):
        rng = random.Random(321)
        for n in range(0, 4):
            fields = [v.field for v in vec_basis(n)]
            mix = random_invertible_matrix(rng, len(fields))
            remixed = []
            for row in mix:
                combined = VecField.zero()
                for coeff, f in zip(row, fields):
                    if coeff:
                        combined = combined + f.scale(coeff)
                remixed.append(combined)
            reorthogonalized = exact_gram_schmidt(remixed)
            rebuilt = kernel_from_orthogonal(n, reorthogonalized)
            assert rebuilt.expand() == kernel(n).expand(), n


class TestProjection:
    def test_reproduces_basis_fields(self):
        for n in range(N_MAX + 1):
            for v in vec_basis(n):
                result = project(v.field, n)
                assert (result.projected - v.field).is_zero()
                assert result.residual.is_zero()

    def test_annihilates_contragenics(self):
        for n in range(N_MAX + 1):
            for z in contragenic_basis(n):
                result = project(z.field, n)
                assert result.projected.is_zero()

    def test_x2e1_split(self):
        f = VecField(ZERO, TriPoly.variable(2), ZERO)
        result = project(f, 1)
        half = Fraction(1, 2)
        assert result.projected == VecField(
            ZERO, TriPoly.variable(2).scale(half), TriPoly.variable(1).scale(half)
        )
        assert result.residual == VecField(
            ZERO, TriPoly.variable(2).scale(half), TriPoly.variable(1).scale(-half)
        )
        # the residual is proportional to the contragenic generator
        z = contragenic_basis(1)[0].field
        assert (result.residual - z.scale(half)).is_zero()

    def test_idempotence_orthogonality_pythagoras(self):
        rng = random.Random(88)
        for n in range(N_MAX + 1):
            field = VecField.zero()
            for v in vec_basis(n):
                field = field + v.field.scale(Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
            for z in contragenic_basis(n):
                field = field + z.field.scale(Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
            if field.is_zero():
                continue
            result = project(field, n)
            again = project(result.projected, n)
            assert (again.projected - result.projected).is_zero()
            assert inner_product(result.projected, result.residual).is_zero()
            assert norm_sq(field) == result.projected_norm_sq + result.residual_norm_sq

    def test_rejects_scalar_component(self):
        with pytest.raises(ValueError):
            project(VecField(TriPoly.variable(0), ZERO, ZERO), 1)

    def test_truncated_on_mixed_degrees(self):
        f = vec(monogenic_X(1, 0).field).as_vec() + vec(monogenic_X(3, 2).field).as_vec()
        result = project_truncated(f, 3)
        assert (result.projected - f).is_zero()
        assert result.residual.is_zero()

    def test_truncated_annihilates_z_combination(self):
        f = contragenic_basis(1)[0].field + contragenic_basis(2)[1].field
        result = project_truncated(f, 2)
        assert result.projected.is_zero()
        assert (result.residual - f).is_zero()

    def test_truncated_equals_degreewise_sum(self):
        f = VecField(
            ZERO,
            TriPoly.variable(2) + TriPoly.monomial((1, 1, 0)),
            TriPoly.variable(1),
        )
        total = project_truncated(f, 2)
        per_degree = VecField.zero()
        for n in range(3):
            per_degree = per_degree + project(f, n).projected
        assert (total.projected - per_degree).is_zero()


class TestEvalKernel:
    def test_exact_vs_float_on_rational_points(self):
        x = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 5))
        for n in range(5):
            exact = eval_kernel_exact(n, x, x)
            floats = eval_kernel(n, tuple(map(float, x)), tuple(map(float, x)))
            for i in range(2):
                for j in range(2):
                    want = float(exact[i][j]) / math.pi
                    got = floats[i][j]
                    if want:
                        assert abs(got - want) / abs(want) <= 1e-12
                    else:
                        assert abs(got) <= 1e-13

    def test_reproducing_pairing_at_sample_points(self):
        # projecting a basis field through the kernel reproduces its values
        n = 2
        v = vec_basis(n)[3].field
        result = project(v, n)
        for point in ((0.2, 0.3, -0.1), (0.0, 0.5, 0.5)):
            got = result.projected.eval(point)
            want = v.eval(point)
            for a, b in zip(got, want):
                assert float(a) == pytest.approx(float(b), abs=1e-12)


class TestPointBound:
    def test_constant_saturates(self):
        f = VecField(ZERO, TriPoly.const(1), ZERO)
        report = point_eval_bound_check(f)
        assert report.ok
        assert report.ratio == pytest.approx(1.0, abs=1e-12)

    def test_homogeneous_vanishes_at_origin(self):
        f = vec(monogenic_X(1, 0).field).as_vec()
        report = point_eval_bound_check(f)
        assert report.ok
        assert report.value_at_origin == 0.0

    def test_random_vec_m_combinations(self):
        rng = random.Random(404)
        for _ in range(20):
            field = VecField.zero()
            for n in range(4):
                for v in vec_basis(n):
                    if rng.random() < 0.35:
                        field = field + v.field.scale(
                            Fraction(rng.randint(-4, 4), rng.randint(1, 4))
                        )
            if field.is_zero():
                continue
            report = point_eval_bound_check(field)
            assert report.ok

    def test_rejects_non_vec_m(self):
        z = contragenic_basis(1)[0].field
        with pytest.raises(ValueError):
            point_eval_bound_check(z)
