import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hcc.criteria import (
    Case,
    ab_conditions_t1,
    ab_conditions_t2,
    admissible_t1,
    admissible_t2,
    closed_T_t1,
    closed_T_t2,
    coeff_sum_F1,
    coeff_sum_F2,
    direction_convexity_check,
    pointwise_class_check,
    region_t1,
    region_t2,
    sign_structure_t1,
    sign_structure_t2,
    x_t1,
    x_t2,
)
from hcc.grid import GridSpec
from hcc.mapping import ConstructionParams, HarmonicMap, build_map
from hcc.presets import all_presets, preset
from hcc.specfun import PowerSeries, beta

A, B = Case.A, Case.B
GRID95 = GridSpec(0.95, 64, 64)


def built(a, b, m, alpha, variant="T1", N=0):
    return build_map(ConstructionParams(a, b, m, alpha, variant, N))


# ---------------------------------------------------------------- closed forms

def test_closed_T_t1_examples():
    for alpha in (0, 0.4, 1j, 0.6 - 0.8j):
        assert closed_T_t1(1, 1, 2, alpha, A) == pytest.approx(abs(alpha), abs=1e-14)
    assert closed_T_t1(2, 3, 1, 0.5, B) == pytest.approx(17.0, rel=1e-13)
    assert closed_T_t1(2, 3, 4, 2j, B) == pytest.approx(11 + 24, rel=1e-13)
    assert closed_T_t1(0.5, 0.5, 2, 0, A) == pytest.approx(1 - 1 / math.pi, rel=1e-13)


def test_closed_T_t2_examples():
    for alpha in (0, 0.4, 1j):
        assert closed_T_t2(1, 0.5, 4, alpha, A) == pytest.approx(abs(alpha), abs=1e-13)
    Bv = beta(3, 2)
    assert closed_T_t2(3, 2, 2, 0, B) == pytest.approx(2 / Bv - 1, rel=1e-13)
    B34 = beta(0.75, 2 / 3)
    assert B34 - 1 >= 0.871
    assert closed_T_t2(0.75, 2 / 3, 2, 0.871, B) <= 1
    assert closed_T_t2(0.75, 2 / 3, 2, B34 - 1, B) == pytest.approx(1.0, abs=1e-13)
    assert closed_T_t2(0.75, 2 / 3, 2, 1.01 * (B34 - 1), B) > 1


def test_closed_T_rejects_inconsistent_case():
    with pytest.raises(ValueError):
        closed_T_t1(0.5, 0.5, 2, 0.1, B)
    with pytest.raises(ValueError):
        closed_T_t2(3, 2, 2, 0.1, A)


# ---------------------------------------------------------------- admissibility

def test_admissible_t1_examples():
    adm = admissible_t1(1, 1, 1)
    assert adm.satisfied == {A, B} and adm.alpha_bound == pytest.approx(1.0)
    k = 1 / (2 * math.pi - 1)
    assert admissible_t1(0.5, 0.5, k).satisfied == {A}
    assert not admissible_t1(0.5, 0.5, 1.001 * k)


def test_admissible_t1_large_ab_has_no_alpha():
    # (2, 3): B = 1/12 makes 2B - 1 = -5/6 < 0, so CaseB admits no alpha at all
    for alpha in (0, 1e-9, 12):
        adm = admissible_t1(2, 3, alpha)
        assert adm.satisfied == frozenset()
        assert adm.alpha_bound == pytest.approx(-5 / 6, rel=1e-12)


def test_admissible_t2_examples():
    assert admissible_t2(1, 0.5, 1).satisfied == {A, B}
    for b in (0.1, 1 / 7, 0.3, 0.45):
        assert A in admissible_t2(1, b, b / (1 - b)).satisfied
        assert A not in admissible_t2(1, b, 1.001 * b / (1 - b)).satisfied
    Bq = beta(0.25, 0.25)
    assert A in admissible_t2(0.25, 0.25, 1 / (Bq - 1)).satisfied
    assert not admissible_t2(0.25, 0.25, 1.001 / (Bq - 1))


def test_admissible_conjugate_pair_needs_sign_structure():
    # ab <= 1 but a + b < 2ab: the coefficient differences change sign
    a = 0.1 + 0.9j
    assert not admissible_t1(a, a.conjugate(), 1e-3)
    a = 0.9 + 0.3j  # ab = 0.9, a + b = 1.8 = 2ab exactly
    assert A in admissible_t1(a, a.conjugate(), 0.0).satisfied


def test_admissible_presets():
    for name, p in all_presets().items():
        adm = (admissible_t1 if p.variant == "T1" else admissible_t2)(p.a, p.b, p.alpha)
        assert adm, name


lattice = np.linspace(0.03, 4.0, 100) + 1e-3 * np.pi  # offset keeps nodes off exact boundaries


def test_region_t1_equals_product_form_on_lattice():
    for a in lattice:
        for b in lattice:
            assert region_t1(a, b) == ab_conditions_t1(a, b), (a, b)
            cases = sign_structure_t1(a, b)
            assert (B in cases and a * b >= 1) == (B in region_t1(a, b))


def test_region_t2_equals_product_form_on_lattice():
    for a in lattice:
        for b in lattice:
            assert region_t2(a, b) == ab_conditions_t2(a, b), (a, b)


@given(a=st.floats(0.02, 6), b=st.floats(0.02, 6))
@settings(max_examples=200)
def test_sign_structure_fixes_sign_of_x(a, b):
    n = np.arange(1, 201)
    s1, s2 = sign_structure_t1(a, b), sign_structure_t2(a, b)
    tol = 1e-9 * n
    if A in s1:
        assert np.all(x_t1(a, b, n) >= -tol)
    if B in s1:
        assert np.all(x_t1(a, b, n) <= tol)
    if A in s2:
        assert np.all(x_t2(a, b, n) >= -tol)
    if B in s2:
        assert np.all(x_t2(a, b, n) <= tol)


@given(a=st.floats(0.02, 6), b=st.floats(0.02, 6))
@settings(max_examples=200)
def test_product_conditions_imply_sign_structure(a, b):
    assert ab_conditions_t1(a, b) <= sign_structure_t1(a, b)
    assert ab_conditions_t2(a, b) <= sign_structure_t2(a, b)


# ---------------------------------------------------------------- coefficient sums

def test_coeff_sum_unit_params_boundary():
    f = built(1, 1, 1, np.exp(0.3j))
    for N in (2, 10, 399):
        rep = coeff_sum_F1(f, N)
        assert rep.value == pytest.approx(1.0, abs=1e-12)
        assert rep.passed
        assert rep.margin == pytest.approx(0.0, abs=1e-12)


def test_coeff_sum_identity():
    # with a_1 = 1 and every other coefficient zero, one term equals |a_1| = 1
    f = HarmonicMap.identity(10)
    for fn in (coeff_sum_F1, coeff_sum_F2):
        rep = fn(f)
        assert rep.value == 1 and rep.margin == 0 and rep.passed


def test_coeff_sum_F2_unit_half_limit():
    f = built(1, 0.5, 4, 1.0, "T2")
    rep = coeff_sum_F2(f)
    assert rep.details["closed_T"] == pytest.approx(1.0, abs=1e-13)
    assert rep.value <= 1 + 1e-12 and rep.passed


def test_coeff_sum_parts_stay_below_closed_parts():
    for p in all_presets().values():
        rep = (coeff_sum_F1 if p.variant == "T1" else coeff_sum_F2)(build_map(p))
        d = rep.details
        assert d["analytic_sum"] <= d["closed_analytic"] + 1e-12
        assert d["coanalytic_sum"] <= d["closed_coanalytic"] + 1e-12


@pytest.mark.parametrize("args", [(0.5, 0.5, 2, 0.1, "T1"), (1, 1 / 7, 4, 1j / 7, "T2"),
                                  (0.75, 2 / 3, 2, 0.871, "T2"), (2, 3, 1, 0.5, "T1")])
def test_partial_sums_monotone(args):
    f = built(*args, N=2001)
    fn = coeff_sum_F1 if args[-1] == "T1" else coeff_sum_F2
    values = [fn(f, N).value for N in (1, 2, 5, 10, 50, 100, 500, 1000, 2000)]
    assert all(x <= y for x, y in zip(values, values[1:]))


def test_partial_sum_gap_decays_like_one_over_n():
    f = built(0.5, 0.5, 2, 0.1, N=10_002)
    closed = closed_T_t1(0.5, 0.5, 2, 0.1, A)
    scaled = [N * (closed - coeff_sum_F1(f, N).value) for N in (100, 1000, 10_000)]
    assert all(s > 0 for s in scaled)
    assert max(scaled) < 2 * min(scaled)


def test_inflated_alpha_fails_sum_criterion():
    rep = coeff_sum_F1(built(1, 1, 2, -1.1j))
    assert not rep.passed and rep.margin == pytest.approx(-0.1, abs=1e-12)


def test_coeff_sum_foreign_map_uses_geometric_tail():
    c = np.zeros(41)
    c[1] = 1
    c[2:] = 0.05 * 0.5 ** np.arange(2, 41)
    f = HarmonicMap(PowerSeries(c), PowerSeries.zeros(40))
    rep = coeff_sum_F1(f)
    assert 0 < rep.tail_estimate < 1e-9 and rep.passed
    assert "closed_T" not in rep.details


# ---------------------------------------------------------------- pointwise

def test_pointwise_identity_F():
    rep = pointwise_class_check(HarmonicMap.identity(5), "F", GRID95)
    assert rep.passed
    assert rep.margin == pytest.approx(1 - 0.95, abs=1e-12)


def test_pointwise_examples():
    assert pointwise_class_check(build_map(preset("t1-a1b1-m2")), "F1", GRID95).passed
    assert pointwise_class_check(build_map(preset("t2-a1b05-m6")), "F2", GRID95).passed


def test_pointwise_theta_rotation():
    f = HarmonicMap.identity(5)
    assert not pointwise_class_check(f, "F", GRID95, theta=math.pi).passed


@given(a=st.floats(0.2, 3), b=st.floats(0.2, 3), frac=st.floats(0.0, 1.0),
       phase=st.floats(0, 2 * math.pi), m=st.integers(1, 5))
@settings(max_examples=15, deadline=None)
def test_sum_pass_implies_pointwise_pass(a, b, frac, phase, m):
    adm = admissible_t1(a, b, 0.0)
    assume(adm and math.isfinite(adm.alpha_bound) and adm.alpha_bound > 0)
    alpha = frac * min(adm.alpha_bound, 1.0) * np.exp(1j * phase)
    f = built(a, b, m, alpha)
    if coeff_sum_F1(f).passed:
        assert pointwise_class_check(f, "F1", GRID95).passed


def test_direction_convexity_examples():
    assert direction_convexity_check(PowerSeries([0, 1]), GRID95).passed
    rep = direction_convexity_check(PowerSeries([0, 0, 1]), GRID95)
    assert not rep.passed
    z = complex(*rep.details["argmin"])
    assert z.real < -0.5
    for p in all_presets().values():
        if p.variant == "T2":
            assert direction_convexity_check(build_map(p).pre_shear(), GRID95).passed
