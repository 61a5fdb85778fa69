"""End-to-end verification of one parameter set (used by ``hcc verify``)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import criteria
from .grid import GridSpec
from .mapping import ConstructionParams, HarmonicMap, build_map
from .surface import geometry_residuals, height_series, lift_spec_for, surface_points, t_closed_form

DILATATION_TOL = 1e-10
DUAL_PATH_TOL = 1e-8
ISOTHERMAL_TOL = 1e-6
MEAN_CURVATURE_TOL = 1e-4
LAPLACIAN_TOL = 1e-5
FD_STEP = 1e-4


@dataclass
class Item:
    name: str
    passed: bool
    detail: str

    def __str__(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def dilatation_residual(f: HarmonicMap, grid: GridSpec) -> float:
    p = f.params
    z = grid.nodes()
    return float(np.max(np.abs(f.dilatation(z) - p.alpha * z**p.m)))


def dual_path_gap(f: HarmonicMap, grid: GridSpec) -> float:
    spec = lift_spec_for(f)
    z = grid.nodes()
    t_series = surface_points(f, spec, z)[:, 2]
    return float(np.max(np.abs(t_series - t_closed_form(f.params, z))))


def verify(params: ConstructionParams, radius: float = 0.95, grid: str = "64x64") -> list[Item]:
    f = build_map(params)
    p = f.params
    items = []
    t1 = p.variant == "T1"

    adm = (criteria.admissible_t1 if t1 else criteria.admissible_t2)(p.a, p.b, p.alpha)
    cases = ",".join(sorted(c.value for c in adm.satisfied)) or "none"
    items.append(Item("admissibility", bool(adm),
                      f"cases={cases} ab={adm.ab:.6g} B={adm.beta:.12g} "
                      f"|alpha|={abs(p.alpha):.12g} bound={adm.alpha_bound:.12g}"))

    rep = (criteria.coeff_sum_F1 if t1 else criteria.coeff_sum_F2)(f)
    d = rep.details
    ok = rep.passed
    detail = f"value={rep.value:.15g} tail={rep.tail_estimate:.3g} bound={rep.bound:.15g}"
    if "closed_T" in d:
        slack = 1e-9
        ok = ok and d["analytic_sum"] <= d["closed_analytic"] + slack \
            and d["coanalytic_sum"] <= d["closed_coanalytic"] + slack
        detail += (f" analytic={d['analytic_sum']:.12g}/{d['closed_analytic']:.12g}"
                   f" coanalytic={d['coanalytic_sum']:.12g}/{d['closed_coanalytic']:.12g}"
                   f" closed_T={d['closed_T']:.15g}")
    items.append(Item(rep.criterion_name, ok, detail))

    res = dilatation_residual(f, GridSpec(0.8, 32, 32))
    items.append(Item("dilatation", res < DILATATION_TOL, f"max|g'/h' - alpha z^m| = {res:.3g}"))

    scan = GridSpec.parse(grid, radius)
    jac = float(np.min(f.jacobian(scan.nodes())))
    items.append(Item("jacobian", jac > 0, f"min J = {jac:.6g} on |z| <= {radius}"))

    kind = "F1" if t1 else "F2"
    pw = criteria.pointwise_class_check(f, kind, scan)
    items.append(Item(pw.criterion_name, pw.passed, f"min margin = {pw.margin:.6g}"))
    if not t1:
        dc = criteria.direction_convexity_check(f.pre_shear(), scan)
        items.append(Item("pre-shear vertical convexity", dc.passed, f"min Re((1-z^2)phi') = {dc.margin:.6g}"))

    if p.m % 2 == 0:
        if not t1:
            items.append(Item("note", True, "T2 lift is checked against the T2 admissibility conditions"))
        gap = dual_path_gap(f, GridSpec(0.9, 32, 32))
        items.append(Item("height dual path", gap < DUAL_PATH_TOL, f"max|t_series - t_closed| = {gap:.3g}"))
        spec = lift_spec_for(f)
        z = GridSpec(0.7, 8, 16).nodes()
        g = geometry_residuals(f, spec, z, FD_STEP)
        iso = float(max(g.isothermal_E_minus_G.max(), g.isothermal_F.max()))
        H = float(np.abs(g.mean_curvature).max())
        lap = float(g.laplacian_max.max())
        items.append(Item("isothermal", iso < ISOTHERMAL_TOL, f"max residual = {iso:.3g}"))
        items.append(Item("mean curvature", H < MEAN_CURVATURE_TOL, f"max|H| = {H:.3g}"))
        items.append(Item("harmonic coordinates", lap < LAPLACIAN_TOL, f"max Laplacian/E = {lap:.3g}"))
    return items
