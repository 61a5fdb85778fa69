"""Close-to-convexity certificates for harmonic maps.

Three kinds of evidence are provided:

* coefficient sums (``coeff_sum_F1``, ``coeff_sum_F2``) whose value must stay
  below ``1 - |b_1|``;
* closed-form limits of those sums for the two hypergeometric families, in
  terms of the Beta function, together with the parameter regions where the
  sums telescope (``admissible_t1``, ``admissible_t2``);
* pointwise inequalities sampled on a polar grid.

Boundary comparisons (``<=`` against 1 in the closed forms and region tests)
allow a relative slack of ``BOUNDARY_RTOL`` so that parameter sets lying
exactly on a boundary, such as ``|alpha| = 1`` at ``a = b = 1``, are not
rejected by rounding in the last bit. Strict pointwise inequalities get no
slack.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .grid import GridSpec
from .mapping import HarmonicMap
from .specfun import Number, PowerSeries, admissible_pair, beta, tail_bound

BOUNDARY_RTOL = 1e-12
_EPS = np.finfo(float).eps


class Case(str, enum.Enum):
    A = "CaseA"
    B = "CaseB"


class ClassKind(str, enum.Enum):
    F = "F"
    F1 = "F1"
    F2 = "F2"


@dataclass
class CheckReport:
    criterion_name: str
    value: float
    bound: float
    margin: float
    trunc_order: int
    tail_estimate: float
    passed: bool
    details: dict = field(default_factory=dict)

    @property
    def pass_(self) -> bool:
        return self.passed

    def as_dict(self) -> dict:
        return {
            "criterion_name": self.criterion_name,
            "value": self.value,
            "bound": self.bound,
            "margin": self.margin,
            "trunc_order": self.trunc_order,
            "tail_estimate": self.tail_estimate,
            "pass": self.passed,
            **({"details": self.details} if self.details else {}),
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.criterion_name}: value={self.value:.15g} bound={self.bound:.15g} "
            f"margin={self.margin:.6g} tail={self.tail_estimate:.3g} N={self.trunc_order}"
        )


@dataclass(frozen=True)
class AdmissibleCase:
    """Which of the two parameter conditions hold, and the numbers they turn on."""

    satisfied: frozenset
    ab: float
    beta: float
    alpha_bound: float

    def __bool__(self) -> bool:
        return bool(self.satisfied)


def _leq(x: float, y: float, rtol: float = BOUNDARY_RTOL) -> bool:
    return x <= y + rtol * max(1.0, abs(x), abs(y))


def _ab_sum(a: Number, b: Number) -> tuple[float, float]:
    if not admissible_pair(a, b):
        raise ValueError(f"(a, b) = ({a}, {b}) outside the admissible regime")
    a, b = complex(a), complex(b)
    return (a * b).real, (a + b).real


# ---------------------------------------------------------------- sign structure

def x_t1(a: Number, b: Number, n) -> np.ndarray:
    """``(n-1)(1-ab) + a + b - 2ab``; its sign fixes the sign of ``nA_n - (n+1)A_{n+1}``."""
    ab, s = _ab_sum(a, b)
    return (np.asarray(n) - 1) * (1 - ab) + s - 2 * ab


def x_t2(a: Number, b: Number, n) -> np.ndarray:
    """``(n-1)(1-2ab) + a + b - 3ab``, the odd-series analogue of :func:`x_t1`."""
    ab, s = _ab_sum(a, b)
    return (np.asarray(n) - 1) * (1 - 2 * ab) + s - 3 * ab


def _structure(slope: float, x1: float) -> set:
    # X(n) = (n-1) slope + X(1) keeps one sign for all n >= 1 iff both terms share it
    cases = set()
    if _leq(0.0, slope) and _leq(0.0, x1):
        cases.add(Case.A)
    if _leq(slope, 0.0) and _leq(x1, 0.0):
        cases.add(Case.B)
    return cases


def sign_structure_t1(a: Number, b: Number) -> set:
    """Cases in which every ``X(n)`` of the T1 family has a fixed sign."""
    ab, s = _ab_sum(a, b)
    return _structure(1 - ab, s - 2 * ab)


def sign_structure_t2(a: Number, b: Number) -> set:
    ab, s = _ab_sum(a, b)
    return _structure(1 - 2 * ab, s - 3 * ab)


# ---------------------------------------------------------------- closed forms

def _check_case(case, structure: set, a, b) -> Case:
    case = Case(case)
    if case not in structure:
        raise ValueError(f"{case.value} is inconsistent with a={a}, b={b}: the coefficient "
                         "differences do not keep the sign this case requires")
    return case


def closed_T_t1_parts(a, b, m, alpha, case) -> tuple[float, float]:
    """Limits of the analytic-part and co-analytic-part sums of the F1 test."""
    case = _check_case(case, sign_structure_t1(a, b), a, b)
    B = beta(a, b)
    k = abs(complex(alpha))
    if case is Case.A:
        return 1 - 1 / B, k * (2 - 1 / B)
    return 1 / B - 1, k / B


def closed_T_t1(a, b, m, alpha, case) -> float:
    """Limit of the F1 coefficient sum for the T1 family."""
    return sum(closed_T_t1_parts(a, b, m, alpha, case))


def closed_T_t2_parts(a, b, m, alpha, case) -> tuple[float, float]:
    case = _check_case(case, sign_structure_t2(a, b), a, b)
    B = beta(a, b)
    k = abs(complex(alpha))
    if case is Case.A:
        return 1 - 2 / B, 2 * k - 2 * k / B
    return 2 / B - 1, 2 * k / B


def closed_T_t2(a, b, m, alpha, case) -> float:
    """Limit of the F2 coefficient sum for the T2 family."""
    return sum(closed_T_t2_parts(a, b, m, alpha, case))


# ---------------------------------------------------------------- admissibility

def admissible_t1(a, b, alpha) -> AdmissibleCase:
    """Parameter conditions under which the T1 map lies in F1.

    CaseA: ``ab <= 1`` and ``|alpha| (2B - 1) <= 1``; CaseB:
    ``ab >= max(1, (a+b)/2)`` and ``|alpha| <= 2B - 1``. For conjugate pairs
    CaseA additionally needs ``a + b >= 2ab`` (automatic for real a, b).
    """
    ab, s = _ab_sum(a, b)
    B = beta(a, b)
    k = abs(complex(alpha))
    structure = sign_structure_t1(a, b)
    sat = set()
    bounds = []
    if Case.A in structure and _leq(ab, 1.0):
        bound = math.inf if 2 * B - 1 <= 0 else 1 / (2 * B - 1)
        bounds.append(bound)
        if _leq(k * (2 * B - 1), 1.0):
            sat.add(Case.A)
    if Case.B in structure and _leq(max(1.0, s / 2), ab):
        bounds.append(2 * B - 1)
        if _leq(k, 2 * B - 1):
            sat.add(Case.B)
    return AdmissibleCase(frozenset(sat), ab, B, max(bounds) if bounds else math.nan)


def admissible_t2(a, b, alpha) -> AdmissibleCase:
    """Parameter conditions under which the T2 map lies in F2.

    CaseA: ``ab <= min(1/2, (a+b)/3)`` and ``|alpha| (B - 1) <= 1``; CaseB:
    ``ab >= max(1/2, (a+b)/3)`` and ``|alpha| <= B - 1``.
    """
    ab, s = _ab_sum(a, b)
    B = beta(a, b)
    k = abs(complex(alpha))
    sat = set()
    bounds = []
    if _leq(ab, min(0.5, s / 3)):
        bounds.append(math.inf if B - 1 <= 0 else 1 / (B - 1))
        if _leq(k * (B - 1), 1.0):
            sat.add(Case.A)
    if _leq(max(0.5, s / 3), ab):
        bounds.append(B - 1)
        if _leq(k, B - 1):
            sat.add(Case.B)
    return AdmissibleCase(frozenset(sat), ab, B, max(bounds) if bounds else math.nan)


def region_t1(a: float, b: float) -> set:
    """(a, b) part of the T1 conditions in the reformulated interval form (a, b > 0)."""
    cases = set()
    if b <= 1 / a:
        cases.add(Case.A)
    if a > 0.5 and b >= a / (2 * a - 1):
        cases.add(Case.B)
    return cases


def region_t2(a: float, b: float) -> set:
    """(a, b) part of the T2 conditions in the reformulated interval form (a, b > 0)."""
    cases = set()
    if 0.5 <= a <= 1:
        if b <= a / (3 * a - 1):
            cases.add(Case.A)
        if b >= 1 / (2 * a):
            cases.add(Case.B)
    else:
        if b <= 1 / (2 * a):
            cases.add(Case.A)
        if a > 1 / 3 and b >= a / (3 * a - 1):
            cases.add(Case.B)
    return cases


def ab_conditions_t1(a: float, b: float) -> set:
    """(a, b) part of the T1 conditions as stated with products."""
    ab, s = a * b, a + b
    cases = set()
    if ab <= 1:
        cases.add(Case.A)
    if ab >= max(1.0, s / 2):
        cases.add(Case.B)
    return cases


def ab_conditions_t2(a: float, b: float) -> set:
    ab, s = a * b, a + b
    cases = set()
    if ab <= min(0.5, s / 3):
        cases.add(Case.A)
    if ab >= max(0.5, s / 3):
        cases.add(Case.B)
    return cases


# ---------------------------------------------------------------- coefficient sums

def _geometric_tail(terms: np.ndarray) -> float:
    idx = np.flatnonzero(terms)
    if idx.size < 2:
        return 0.0
    idx = idx[-11:]
    i, j = idx[:-1], idx[1:]
    q = float(np.max((terms[j] / terms[i]) ** (1.0 / (j - i))))
    if q >= 1.0:
        return math.inf
    return float(terms[idx[-1]] * q / (1.0 - q))


def _diff_terms(c: np.ndarray, N: int, skip: int) -> np.ndarray:
    # |(n+1)c_{n+1} - (n+1-skip)c_{n+1-skip}| for n = 1..N
    n = np.arange(c.size)
    nc = n * c
    hi = nc[2 : N + 2]
    lo = nc[2 - skip : N + 2 - skip]
    return np.abs(hi - lo)


def _coeff_sum(f: HarmonicMap, N: Optional[int], skip: int, name: str,
               family: str) -> CheckReport:
    top = f.trunc_order - 1
    if N is None:
        N = top
    if not 1 <= N <= top:
        raise ValueError(f"N must lie in [1, {top}] for truncation order {f.trunc_order}")
    dh = _diff_terms(f.h.coeffs, N, skip)
    dg = _diff_terms(f.g.coeffs, N, skip)
    value_h, value_g = float(dh.sum()), float(dg.sum())
    value = value_h + value_g
    b1 = abs(f.g.coeffs[1]) if f.g.coeffs.size > 1 else 0.0
    bound = 1.0 - b1
    details = {"analytic_sum": value_h, "coanalytic_sum": value_g, "N": N}

    p = f.params
    closed = None
    if p is not None and p.variant == family:
        structure = (sign_structure_t1 if family == "T1" else sign_structure_t2)(p.a, p.b)
        parts_fn = closed_T_t1_parts if family == "T1" else closed_T_t2_parts
        if structure:
            case = sorted(structure)[0]
            closed = parts_fn(p.a, p.b, p.m, p.alpha, case)
            details.update(case=case.value, closed_analytic=closed[0],
                           closed_coanalytic=closed[1], closed_T=sum(closed))
    if closed is not None:
        tail = sum(closed) - value
    else:
        tail = _geometric_tail(dh) + _geometric_tail(dg)
    # rounding allowance: the sum of N differences of O(1) quantities
    slack = max(BOUNDARY_RTOL, 16 * _EPS * N) * max(1.0, abs(bound))
    passed = bool(value + tail <= bound + slack)
    return CheckReport(name, value, bound, bound - value - tail, N, tail, passed, details)


def coeff_sum_F1(f: HarmonicMap, N: Optional[int] = None) -> CheckReport:
    """Sum of ``|(n+1)a_{n+1} - n a_n|`` plus the same for ``b``, n = 1..N.

    The map is in F1 when the full sum is at most ``1 - |b_1|``. For T1 maps
    with a telescoping sign structure the tail is the exact remainder to the
    closed-form limit; otherwise it is a geometric extrapolation.
    """
    return _coeff_sum(f, N, 1, "coeff-F1", "T1")


def coeff_sum_F2(f: HarmonicMap, N: Optional[int] = None) -> CheckReport:
    """Sum of ``|(n+1)a_{n+1} - (n-1)a_{n-1}|`` plus the same for ``b``, n = 1..N."""
    return _coeff_sum(f, N, 2, "coeff-F2", "T2")


# ---------------------------------------------------------------- pointwise

def _pointwise_margin(f: HarmonicMap, kind: ClassKind, z: np.ndarray, theta: float):
    dh, dg = f.derivatives(z)
    rot = np.exp(1j * theta)
    if kind is ClassKind.F:
        w = 1 - z
        return (rot * w * dh).real - np.abs(w * dg)
    if kind is ClassKind.F1:
        w = 1 - z
        return 1 - np.abs(w * dg) - np.abs(w * dh - 1)
    w = 1 - z * z
    return (rot * w * dh).real - np.abs(w * dg)


def pointwise_class_check(f: HarmonicMap, kind, grid: GridSpec, theta: float = 0.0) -> CheckReport:
    """Minimum over the grid of the defining inequality margin of F, F1 or F2.

    F:  ``Re(e^{i theta}(1-z) h') - |(1-z) g'|``
    F1: ``1 - |(1-z) g'| - |(1-z) h' - 1|`` (theta unused)
    F2: ``Re(e^{i theta}(1-z^2) h') - |(1-z^2) g'|``
    """
    kind = ClassKind(kind)
    z = grid.nodes()
    margin = _pointwise_margin(f, kind, z, theta)
    worst = int(np.argmin(margin))
    m = float(margin[worst])
    tail = _derivative_tail(f, grid.radius)
    return CheckReport(
        f"pointwise-{kind.value}", m, 0.0, m, f.trunc_order, tail, bool(m > 0),
        {"argmin": [float(z[worst].real), float(z[worst].imag)], "theta": theta,
         "radius": grid.radius},
    )


def _derivative_tail(f: HarmonicMap, r: float) -> float:
    return float(tail_bound(f.h.derivative(), r) + tail_bound(f.g.derivative(), r))


def direction_convexity_check(phi: PowerSeries, grid: GridSpec) -> CheckReport:
    """Minimum of ``Re((1 - z^2) phi'(z))`` over the grid; positive certifies
    convexity in the vertical direction for normalized analytic ``phi``."""
    z = grid.nodes()
    dphi = phi.derivative()
    vals = ((1 - z * z) * dphi(z)).real
    worst = int(np.argmin(vals))
    m = float(vals[worst])
    return CheckReport(
        "direction-vertical", m, 0.0, m, phi.trunc_order, float(tail_bound(dphi, grid.radius)),
        bool(m > 0), {"argmin": [float(z[worst].real), float(z[worst].imag)],
                      "radius": grid.radius},
    )
