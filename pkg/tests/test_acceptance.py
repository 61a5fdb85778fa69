"""Acceptance criteria 1-11, each at its stated tolerance and runtime budget.

Every test records one verdict line (printed in the "acceptance criteria"
section of the pytest summary) and then asserts it.
"""

import json
import math
import time

import numpy as np
import pytest

from hcc import cli
from hcc.criteria import (
    Case,
    admissible_t1,
    admissible_t2,
    closed_T_t1,
    closed_T_t2,
    coeff_sum_F1,
    coeff_sum_F2,
    direction_convexity_check,
    pointwise_class_check,
)
from hcc.grid import GridSpec
from hcc.mapping import ConstructionParams, build_map, closed_form_example_t1_g_coeffs
from hcc.presets import PRESETS, all_presets
from hcc.specfun import LimitKind, beta, stirling_limit_class
from hcc.surface import geometry_residuals, lift_spec_for, surface_points, t_closed_form

N_BIG = 10_000


@pytest.fixture
def verdict(record_property):
    def record(number, ok, detail, elapsed=None, budget=None):
        if budget is not None:
            detail += f" [{elapsed:.2f}s / budget {budget:g}s]"
            ok = ok and elapsed < budget
        record_property("criterion", (number, detail))
        assert ok, detail
    return record


def _admissibility(p):
    return (admissible_t1 if p.variant == "T1" else admissible_t2)(p.a, p.b, p.alpha)


def test_criterion_01_beta(verdict):
    t0 = time.perf_counter()
    errs = [abs(beta(1, 1) - 1), abs(beta(2, 3) - 1 / 12), abs(beta(1, 0.5) - 2)]
    tols = [1e-14, 1e-13, 1e-12]
    ok = all(e < t for e, t in zip(errs, tols))
    verdict(1, ok, "beta errors " + ", ".join(f"{e:.1e}<{t:g}" for e, t in zip(errs, tols)),
            time.perf_counter() - t0, 1)


def test_criterion_02_example_family(verdict):
    t0 = time.perf_counter()
    worst = 0.0
    for m in (1, 2, 3, 4, 6):
        for alpha in (1.0, 0.6 - 0.8j, -1j):
            g = build_map(ConstructionParams(1, 1, m, alpha, "T1")).g.coeffs[:201]
            worst = max(worst, float(np.max(np.abs(g - closed_form_example_t1_g_coeffs(m, alpha, 200)))))
    verdict(2, worst < 1e-13, f"max |g_n - closed form| = {worst:.2e} (n <= 200, m in 1,2,3,4,6)",
            time.perf_counter() - t0, 1)


CRIT3 = [(1, 1, 2, 1.0), (0.5, 0.5, 2, 0.1), (2, 3, 1, 0.5)]


def test_criterion_03_closed_T_t1(verdict):
    t0 = time.perf_counter()
    parts, ok = [], True
    for a, b, m, k in CRIT3:
        f = build_map(ConstructionParams(a, b, m, k, "T1", N_BIG + 2))
        case = Case.A if a * b <= 1 else Case.B
        closed = closed_T_t1(a, b, m, k, case)
        gap = abs(coeff_sum_F1(f, N_BIG).value - closed)
        ok &= gap < 1e-3
        parts.append(f"({a},{b},{m},{k}) gap {gap:.2e}")
    f = build_map(ConstructionParams(1, 1, 2, 1.0, "T1", 12))
    small = abs(coeff_sum_F1(f, 10).value - closed_T_t1(1, 1, 2, 1.0, Case.A))
    ok &= small < 1e-12
    parts.append(f"a=b=1 at N=10 gap {small:.1e}")
    verdict(3, ok, "; ".join(parts), time.perf_counter() - t0, 5)


def test_criterion_04_closed_T_t2(verdict):
    t0 = time.perf_counter()
    parts, ok = [], True
    for name, (variant, a, b, m, alpha) in PRESETS.items():
        if variant != "T2":
            continue
        p = ConstructionParams(a, b, m, alpha, "T2", N_BIG + 2)
        adm = _admissibility(p)
        case = sorted(adm.satisfied)[0]
        closed = closed_T_t2(a, b, m, alpha, case)
        gap = abs(coeff_sum_F2(build_map(p), N_BIG).value - closed)
        ok &= bool(adm) and gap < 1e-3
        parts.append(f"{name} gap {gap:.1e} {'admissible' if adm else 'NOT admissible'}")
    verdict(4, ok, "; ".join(parts), time.perf_counter() - t0, 5)


def test_criterion_05_dilatation(verdict):
    t0 = time.perf_counter()
    z = GridSpec(0.8, 32, 32).nodes()
    worst = 0.0
    for p in all_presets(400).values():
        f = build_map(p)
        worst = max(worst, float(np.max(np.abs(f.dilatation(z) - p.alpha * z**p.m))))
    verdict(5, worst < 1e-10, f"max |g'/h' - alpha z^m| = {worst:.2e} over 8 sets",
            time.perf_counter() - t0, 2)


def test_criterion_06_jacobian(verdict):
    t0 = time.perf_counter()
    z = GridSpec(0.95, 64, 64).nodes()
    mins = {}
    for name, p in all_presets().items():
        if _admissibility(p):
            mins[name] = float(np.min(build_map(p).jacobian(z)))
    ok = len(mins) == len(PRESETS) and all(v > 0 for v in mins.values())
    verdict(6, ok, f"min Jacobian {min(mins.values()):.3e} over {len(mins)} admissible sets",
            time.perf_counter() - t0, 2)


def test_criterion_07_pointwise(verdict):
    t0 = time.perf_counter()
    grid = GridSpec(0.95, 64, 64)
    margins, conv = [], []
    for p in all_presets().values():
        f = build_map(p)
        margins.append(pointwise_class_check(f, "F1" if p.variant == "T1" else "F2", grid).margin)
        if p.variant == "T2":
            conv.append(direction_convexity_check(f.pre_shear(), grid).margin)
    ok = min(margins) > 0 and min(conv) > 0
    verdict(7, ok, f"min class margin {min(margins):.3e}; min pre-shear Re((1-z^2)phi') {min(conv):.3e}",
            time.perf_counter() - t0, 3)


def test_criterion_08_dual_path(verdict):
    t0 = time.perf_counter()
    z = GridSpec(0.9, 48, 64).nodes()
    worst = 0.0
    for p in all_presets().values():
        if p.m % 2:
            continue
        f = build_map(p)
        t_series = surface_points(f, lift_spec_for(f), z)[:, 2]
        worst = max(worst, float(np.max(np.abs(t_series - t_closed_form(p, z)))))
    verdict(8, worst < 1e-8, f"max |t_series - t_closed| = {worst:.2e} on |z| <= 0.9",
            time.perf_counter() - t0, 2)


def test_criterion_09_geometry(verdict):
    t0 = time.perf_counter()
    z = GridSpec(0.7, 12, 24).nodes()
    iso = H = lap = 0.0
    for p in all_presets().values():
        if p.m % 2:
            continue
        f = build_map(p)
        g = geometry_residuals(f, lift_spec_for(f), z, 1e-4)
        iso = max(iso, float(g.isothermal_E_minus_G.max()), float(g.isothermal_F.max()))
        H = max(H, float(np.abs(g.mean_curvature).max()))
        lap = max(lap, float(g.laplacian_max.max()))
    ok = iso < 1e-6 and H < 1e-4 and lap < 1e-5
    verdict(9, ok, f"isothermal {iso:.1e}, |H| {H:.1e}, Laplacian/E {lap:.1e} on |z| <= 0.7",
            time.perf_counter() - t0, 10)


def _log_ratio(a, b, c, n):
    # log of (a,n)(b,n)/((c,n)(1,n)) with the standard-library lgamma
    lg = math.lgamma
    return (lg(a + n) - lg(a) + lg(b + n) - lg(b) - lg(c + n) + lg(c) - lg(1 + n))


def _numeric_class(a, b, c):
    n1, n2 = 1e4, 1e5
    slope = (_log_ratio(a, b, c, n2) - _log_ratio(a, b, c, n1)) / math.log(n2 / n1)
    if abs(slope) < 1e-3:
        return LimitKind.FINITE, math.exp(_log_ratio(a, b, c, n2))
    return (LimitKind.ZERO if slope < 0 else LimitKind.DIVERGENT), None


def test_criterion_10_stirling(verdict):
    t0 = time.perf_counter()
    table = {(1, 1, 2): LimitKind.ZERO, (1, 2, 2): LimitKind.FINITE, (2, 2, 2): LimitKind.DIVERGENT}
    ok = all(stirling_limit_class(*k).kind is v for k, v in table.items())
    ok &= stirling_limit_class(1, 2, 2).value == pytest.approx(1.0, abs=1e-13)
    rng = np.random.default_rng(20261015)
    kinds = []
    for i in range(10):
        a, b = rng.uniform(0.6, 5.0, size=2)
        shift = (0.0, rng.uniform(0.3, 2.0), -rng.uniform(0.3, 0.9 * (a + b - 1)))[i % 3]
        c = a + b - 1 + shift
        got = stirling_limit_class(a, b, c)
        want_kind, want_value = _numeric_class(a, b, c)
        ok &= got.kind is want_kind
        if want_kind is LimitKind.FINITE:
            ok &= abs(got.value - want_value) <= 0.01 * abs(want_value)
        kinds.append(got.kind.value)
    verdict(10, ok, f"table of 3 plus 10 random triples ({', '.join(kinds)}) agree with n=1e5 ratios",
            time.perf_counter() - t0, 3)


def _flags(p, alpha=None):
    alpha = p.alpha if alpha is None else alpha
    return ["--variant", p.variant.lower(), "--a", repr(p.a.real), "--b", repr(p.b.real),
            "--m", str(p.m), "--alpha", f"{alpha.real!r},{alpha.imag!r}"]


def test_criterion_11_cli(verdict, tmp_path, capsys):
    t0 = time.perf_counter()
    good, bad, gaps = [], [], []
    for name, p in all_presets().items():
        good.append(cli.main(["verify"] + _flags(p)))
        adm = _admissibility(p)
        inflated = 1.1 * adm.alpha_bound * p.alpha / abs(p.alpha)
        bad.append(cli.main(["verify"] + _flags(p, inflated)))
        doc = tmp_path / f"{name}.json"
        cli.main(["construct"] + _flags(p) + ["--out", str(doc)])
        capsys.readouterr()
        kind = "coeff-f1" if p.variant == "T1" else "coeff-f2"
        cli.main(["check", "--in", str(doc), "--class", kind, "--json"])
        rep = json.loads(capsys.readouterr().out)
        mem = (coeff_sum_F1 if p.variant == "T1" else coeff_sum_F2)(build_map(p))
        gaps.append(max(abs(rep["value"] - mem.value),
                        abs(rep["details"]["closed_T"] - mem.details["closed_T"])))
    capsys.readouterr()
    ok = all(c == 0 for c in good) and all(c == 1 for c in bad) and max(gaps) <= 1e-12
    verdict(11, ok, f"verify exits {good} admissible, {bad} at 1.1x bound; "
                    f"round-trip T gap {max(gaps):.1e}", time.perf_counter() - t0, 10)
