"""Exact identity suites: every structural claim as a named PASS/FAIL check.

Each suite returns a list of ``CheckResult``; a failing result carries the
exact nonzero discrepancy in its detail string.  The suites are consumed by
the command-line ``check`` subcommand and asserted wholesale by the test
suite, so the same code path backs both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bergman import project
from .exact import TSPoly
from .fields import (
    VecField,
    apply_d,
    apply_dbar,
    conj,
    inner_product,
    norm_sq,
    star,
)
from .harmonic import assoc_legendre, degree_basis, uv_norm_sq
from .monogenic import (
    monogenic_basis,
    monogenic_element,
    xy_closed_form,
    xy_conj_pairing,
    xy_norm_sq,
)
from .spaces import (
    ambigenic_basis,
    ambigenic_minus_norm_sq,
    contragenic_basis,
    contragenic_norm_sq,
    dimension_table,
    expected_dimensions,
    gram_rank,
    is_contragenic,
    star_on_contragenics,
    surface_criterion,
    vec_basis,
    vec_norm_sq,
)

DEFAULT_DEGREE_CAP = 12


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = f"  ({self.detail})" if self.detail and not self.passed else ""
        return f"{status}  {self.name}{suffix}"


def _equal_ts(name: str, lhs: TSPoly, rhs: TSPoly) -> CheckResult:
    diff = lhs - rhs
    return CheckResult(name, diff.is_zero(), "" if diff.is_zero() else f"difference {diff}")


def _assoc_ext(n: int, m: int) -> TSPoly:
    """Associated Legendre extended to order -1 by P_n^(-1) = -P_n^1 / (n(n+1))."""
    if m == -1:
        return assoc_legendre(n, 1).scale(Fraction(-1, n * (n + 1)))
    return assoc_legendre(n, m)


def legendre_identity_suite(n_max: int) -> list[CheckResult]:
    """The five derivative/recurrence identities, s-cleared, coefficientwise.

    Identities containing a bare derivative or a 1/s factor are multiplied
    through by s or s^2 so both sides live in Q[t,s]/(s^2-(1-t^2)); the
    order -1 case arising in the contiguous-order identity at m = 0 uses the
    standard negative-order extension.
    """
    t = TSPoly.t_power(1)
    results = []
    for n in range(n_max + 1):
        for m in range(n + 1):
            p_next = assoc_legendre(n + 1, m)
            weighted_derivative = p_next.scaled_diff_t()

            rhs1 = assoc_legendre(n, m).scale(n + m + 1) - (t * p_next).scale(n + 1)
            results.append(
                _equal_ts(f"derivative identity I1 (n={n}, m={m})", weighted_derivative, rhs1)
            )

            rhs2 = assoc_legendre(n + 1, m + 1).times_s() - (t * p_next).scale(m)
            results.append(
                _equal_ts(f"order-raising identity I2*s (n={n}, m={m})", weighted_derivative, rhs2)
            )

            lhs3 = p_next.times_s().scale(2 * n + 3)
            rhs3 = assoc_legendre(n + 2, m + 1) - assoc_legendre(n, m + 1)
            results.append(
                _equal_ts(f"degree-splitting identity I3 (n={n}, m={m})", lhs3, rhs3)
            )

            lhs4 = (t * p_next).scale(2 * m)
            rhs4 = (
                assoc_legendre(n + 1, m + 1)
                + _assoc_ext(n + 1, m - 1).scale((n + m + 1) * (n - m + 2))
            ).times_s()
            results.append(
                _equal_ts(f"order-contiguity identity I4 (n={n}, m={m})", lhs4, rhs4)
            )

            lhs5 = p_next.scale(n - m + 1)
            rhs5 = (t * assoc_legendre(n, m)).scale(2 * n + 1)
            if n + m > 0:
                rhs5 = rhs5 - assoc_legendre(n - 1, m).scale(n + m)
            results.append(
                _equal_ts(f"three-term recurrence I5 (n={n}, m={m})", lhs5, rhs5)
            )
    return results


def theorem21_suite(n_max: int) -> list[CheckResult]:
    """Closed-form recombination equals the derivative construction, exactly."""
    results = []
    for n in range(1, n_max + 1):
        for kind, m_low in (("X", 0), ("Y", 1)):
            for m in range(m_low, n + 2):
                direct = monogenic_element(kind, n, m).field
                recombined = xy_closed_form(kind, n, m)
                diff = recombined - direct
                results.append(
                    CheckResult(
                        f"closed form {kind}({n},{m})",
                        diff.is_zero(),
                        "" if diff.is_zero() else f"difference {diff}",
                    )
                )
    return results


def _equal_pi(name: str, got, want) -> CheckResult:
    ok = got == want
    return CheckResult(name, ok, "" if ok else f"got {got}, closed form {want}")


def norm_suite(n_max: int) -> list[CheckResult]:
    """Every closed-form norm and pairing against its exact inner product."""
    results = []
    for n in range(n_max + 1):
        for h in degree_basis(n):
            results.append(
                _equal_pi(
                    f"norm^2 {h.kind}({n},{h.m})",
                    inner_product(h.as_field(), h.as_field()),
                    uv_norm_sq(h.kind, n, h.m),
                )
            )
        for e in monogenic_basis(n):
            results.append(
                _equal_pi(
                    f"norm^2 {e.kind}({n},{e.m})",
                    norm_sq(e.field),
                    xy_norm_sq(e.kind, n, e.m),
                )
            )
            results.append(
                _equal_pi(
                    f"conjugation pairing {e.kind}({n},{e.m})",
                    inner_product(e.field, conj(e.field)),
                    xy_conj_pairing(e.kind, n, e.m),
                )
            )
        for v in vec_basis(n):
            results.append(
                _equal_pi(
                    f"norm^2 Vec {v.kind}({n},{v.m})",
                    norm_sq(v.field),
                    vec_norm_sq(v.kind, n, v.m),
                )
            )
        if n >= 1:
            for a in ambigenic_basis(n):
                if a.kind.endswith("-"):
                    results.append(
                        _equal_pi(
                            f"norm^2 {a.kind}({n},{a.m})",
                            norm_sq(a.field),
                            ambigenic_minus_norm_sq(a.kind[0], n, a.m),
                        )
                    )
            for z in contragenic_basis(n):
                results.append(
                    _equal_pi(
                        f"norm^2 {z.label}({n},{z.m})",
                        norm_sq(z.field),
                        contragenic_norm_sq(z.label, n, z.m),
                    )
                )
    return results


def gram_suite(n_max: int) -> list[CheckResult]:
    """Diagonality and completeness of the full degree-n orthogonal system."""
    results = []
    for n in range(1, n_max + 1):
        system = [(f"{a.kind}({n},{a.m})", a.field) for a in ambigenic_basis(n)]
        system += [(f"{z.label}({n},{z.m})", z.field) for z in contragenic_basis(n)]
        off_diagonal_ok = True
        detail = ""
        for i in range(len(system)):
            for j in range(i + 1, len(system)):
                value = inner_product(system[i][1], system[j][1])
                if not value.is_zero():
                    off_diagonal_ok = False
                    detail = f"<{system[i][0]}, {system[j][0]}> = {value}"
                    break
            if not off_diagonal_ok:
                break
        results.append(
            CheckResult(f"degree-{n} system Gram is diagonal", off_diagonal_ok, detail)
        )
        rank = gram_rank([f for _, f in system])
        results.append(
            CheckResult(
                f"degree-{n} system spans all harmonic fields",
                rank == 6 * n + 3,
                f"rank {rank}, expected {6 * n + 3}",
            )
        )
    return results


def dims_suite(n_max: int) -> list[CheckResult]:
    results = []
    for n in range(n_max + 1):
        got = dimension_table(n)
        want = expected_dimensions(n)
        results.append(
            CheckResult(
                f"dimension counts at degree {n}",
                got.as_tuple() == want.as_tuple(),
                f"got {got.as_tuple()}, expected {want.as_tuple()}",
            )
        )
    return results


def bergman_suite(n_max: int) -> list[CheckResult]:
    results = []
    for n in range(n_max + 1):
        for v in vec_basis(n):
            res = project(v.field, n)
            ok = (res.projected - v.field).is_zero() and res.residual.is_zero()
            results.append(
                CheckResult(f"Bergman reproduces Vec {v.kind}({n},{v.m})", ok)
            )
        for z in contragenic_basis(n):
            res = project(z.field, n)
            results.append(
                CheckResult(
                    f"Bergman annihilates {z.label}({n},{z.m})",
                    res.projected.is_zero(),
                    "" if res.projected.is_zero() else f"projected {res.projected}",
                )
            )
        # a deterministic mixed field: basis sum plus contragenic sum
        mixed = VecField.zero()
        for v in vec_basis(n):
            mixed = mixed + v.field
        for z in contragenic_basis(n):
            mixed = mixed + z.field
        res = project(mixed, n)
        twice = project(res.projected, n)
        results.append(
            CheckResult(
                f"idempotence at degree {n}",
                (twice.projected - res.projected).is_zero(),
            )
        )
        cross = inner_product(res.projected, res.residual)
        results.append(
            CheckResult(
                f"projection orthogonality at degree {n}",
                cross.is_zero(),
                "" if cross.is_zero() else f"<proj, resid> = {cross}",
            )
        )
        total = norm_sq(mixed)
        results.append(
            CheckResult(
                f"Pythagoras at degree {n}",
                total == res.projected_norm_sq + res.residual_norm_sq,
            )
        )
    return results


def surface_suite(n_max: int) -> list[CheckResult]:
    """Boundary flux criterion agrees with volume orthogonality."""
    results = []
    for n in range(n_max + 1):
        for z in contragenic_basis(n):
            surface = surface_criterion(z.field, n)
            volume = bool(is_contragenic(z.field))
            results.append(
                CheckResult(
                    f"surface criterion on {z.label}({n},{z.m})",
                    surface and volume,
                    f"surface {surface}, volume {volume}",
                )
            )
        for v in vec_basis(n):
            surface = surface_criterion(v.field, n)
            volume = bool(is_contragenic(v.field))
            results.append(
                CheckResult(
                    f"surface criterion on Vec {v.kind}({n},{v.m})",
                    (not surface) and (not volume),
                    f"surface {surface}, volume {volume}",
                )
            )
    return results


def star_suite(n_max: int) -> list[CheckResult]:
    results = []
    for n in range(n_max + 1):
        for e in monogenic_basis(n):
            starred = star(e.field)
            results.append(
                CheckResult(
                    f"star preserves monogenicity of {e.kind}({n},{e.m})",
                    apply_dbar(starred, "left").is_zero(),
                )
            )
            anti_starred = star(conj(e.field))
            results.append(
                CheckResult(
                    f"star preserves antimonogenicity of conj {e.kind}({n},{e.m})",
                    apply_d(anti_starred, "left").is_zero(),
                )
            )
        if n >= 1:
            report = star_on_contragenics(n)
            results.append(
                CheckResult(
                    f"star maps degree-{n} contragenics to contragenics, invertibly",
                    report.invertible,
                )
            )
    return results


SUITES = {
    "legendre": legendre_identity_suite,
    "theorem21": theorem21_suite,
    "norms": norm_suite,
    "gram": gram_suite,
    "dims": dims_suite,
    "bergman": bergman_suite,
    "surface": surface_suite,
    "star": star_suite,
}


def run_suite(suite: str, n_max: int) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return SUITES[suite](n_max)
