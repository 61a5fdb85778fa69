"""Minimal graphs over harmonic maps whose dilatation is a perfect square.

For ``f = h + conj(g)`` with ``g'/h' = q^2`` the surface
``(Re f, Im f, 2 Im int_0^z q h')`` is a minimal graph in isothermal
parameters. The maps built in :mod:`hcc.mapping` have ``q = sqrt(alpha) z^k``
whenever ``m = 2k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .grid import MAX_RADIUS, GridSpec
from .mapping import (
    EXAMPLE_T1_FORMS,
    ConstructionParams,
    HarmonicMap,
    build_map,
    principal_sqrt,
)
from .specfun import DomainError, PowerSeries, series_eval


class OddDilatationPower(ValueError):
    """The dilatation alpha z^m with odd m is not the square of an analytic function."""


@dataclass(frozen=True)
class LiftSpec:
    k: int
    q_coefficient: complex
    variant: str = "T1"
    c_offset: float = 0.0

    @property
    def m(self) -> int:
        return 2 * self.k

    def negated(self) -> "LiftSpec":
        return LiftSpec(self.k, -self.q_coefficient, self.variant, self.c_offset)


@dataclass
class SurfaceMesh:
    vertices: np.ndarray  # (n, 3) columns u, v, t
    faces: np.ndarray  # (n_faces, 3) zero-based, counterclockwise in (u, v)
    grid: GridSpec
    params: Optional[ConstructionParams] = None
    nodes: Optional[np.ndarray] = None  # parameter-plane points, same order as vertices


def sqrt_dilatation(alpha, m: int, variant: str = "T1", c_offset: float = 0.0) -> LiftSpec:
    """``q(z) = sqrt(alpha) z^(m/2)`` with the principal square root."""
    if m % 2:
        raise OddDilatationPower(
            f"dilatation alpha z^{m} has odd power; it is not a square and the map has no "
            "isothermal minimal-surface lift"
        )
    if m < 2:
        raise ValueError("m must be a positive even integer")
    return LiftSpec(m // 2, principal_sqrt(alpha), variant.upper(), float(c_offset))


def lift_spec_for(f: HarmonicMap, c_offset: float = 0.0) -> LiftSpec:
    if f.params is None:
        raise ValueError("only constructed maps carry the dilatation needed for a lift")
    p = f.params
    return sqrt_dilatation(p.alpha, p.m, p.variant, c_offset)


def height_series(f: HarmonicMap, spec: LiftSpec) -> PowerSeries:
    """Primitive of ``q h'`` vanishing at 0; the height is twice its imaginary part."""
    if f.params is not None and f.params.m != spec.m:
        raise ValueError(f"lift power 2k = {spec.m} does not match map dilatation power {f.params.m}")
    qdh = f.h.derivative().shift(spec.k) * spec.q_coefficient
    return qdh.antiderivative().truncate(f.trunc_order)


def _check_points(z, radius: float = MAX_RADIUS) -> np.ndarray:
    zz = np.asarray(z, dtype=np.complex128)
    if np.any(np.abs(zz) >= 1) or np.any(np.abs(zz) > radius):
        raise DomainError("surface points must lie in the disk of the grid (radius < 1)")
    return zz


def surface_points(f: HarmonicMap, spec: LiftSpec, z, height: Optional[PowerSeries] = None):
    """(u, v, t) at the parameter points ``z``; returns an array of shape z.shape + (3,)."""
    zz = np.asarray(z, dtype=np.complex128)
    w = f.evaluate(zz)
    H = height if height is not None else height_series(f, spec)
    t = 2 * series_eval(H, zz)[0].imag + spec.c_offset
    return np.stack([np.real(w), np.imag(w), t], axis=-1)


def _triangulate(grid: GridSpec, uv: np.ndarray) -> np.ndarray:
    faces = []
    S = grid.n_spokes
    for j in range(S):
        faces.append((0, grid.index(1, j), grid.index(1, j + 1)))
    for i in range(1, grid.n_circles):
        for j in range(S):
            p00, p10 = grid.index(i, j), grid.index(i + 1, j)
            p11, p01 = grid.index(i + 1, j + 1), grid.index(i, j + 1)
            d1 = np.sum((uv[p00] - uv[p11]) ** 2)
            d2 = np.sum((uv[p10] - uv[p01]) ** 2)
            if d1 <= d2:
                faces += [(p00, p10, p11), (p00, p11, p01)]
            else:
                faces += [(p00, p10, p01), (p10, p11, p01)]
    return np.asarray(faces, dtype=np.int64)


def lift(f: HarmonicMap, spec: LiftSpec, grid: GridSpec, tail_tol: float = 1e-6) -> SurfaceMesh:
    """Minimal-surface mesh over the polar grid.

    Vertices follow the grid node order (center first); the center is joined to
    the first ring by a fan and each quad between rings is split along its
    shorter diagonal in the (u, v) plane. Raises ``ArithmeticError`` if the
    truncated series cannot resolve the grid radius to ``tail_tol``.
    """
    if f.params is not None and f.params.m % 2:
        raise OddDilatationPower(f"map has odd dilatation power m = {f.params.m}")
    tail = f.max_tail(grid.radius)
    if tail > tail_tol:
        raise ArithmeticError(f"series tail {tail:.3g} at radius {grid.radius} exceeds {tail_tol:g}")
    z = grid.nodes()
    verts = surface_points(f, spec, z)
    faces = _triangulate(grid, verts[:, :2])
    return SurfaceMesh(verts, faces, grid, f.params, z)


def t_closed_form(params: ConstructionParams, z, c_offset: float = 0.0):
    """Height ``2 Im{ sqrt(alpha) z^(k+1)/(k+1) [F(a,b;a+b;.) * F(2,k+1;k+2;.)] }``.

    For T2 the first factor is taken in ``z^2``. The bracketed series is the
    co-analytic part of the same family with ``m = k`` and ``alpha`` replaced
    by ``sqrt(alpha)``. For ``a = b = 1`` in T1 the logarithmic form is checked
    against it.
    """
    if params.m % 2:
        raise OddDilatationPower(f"m = {params.m} is odd")
    k = params.m // 2
    zz = _check_points(z, 1.0)
    sq = principal_sqrt(params.alpha)
    aux = ConstructionParams(params.a, params.b, k, sq, params.variant, params.trunc_order)
    gk = build_map(aux).g
    value, tail = series_eval(gk, zz)
    t = 2 * np.imag(value) + c_offset
    if params.variant == "T1" and params.a == 1 and params.b == 1 and k in EXAMPLE_T1_FORMS:
        special = t_example_t1(params.m, params.alpha, zz) + c_offset
        gap = np.max(np.abs(special - t))
        if gap > 2 * np.max(tail) + 1e-9:
            raise ArithmeticError(f"hypergeometric and logarithmic heights disagree by {gap:.3g}")
    return float(t) if np.ndim(z) == 0 else t


def t_example_t1(m: int, alpha, z):
    """Logarithmic height for ``a = b = 1`` (T1): ``-2 Im{ sqrt(alpha) P_k(z) / D }``.

    Uses the same polynomial table as the closed-form maps with ``k = m/2``.
    """
    if m % 2:
        raise OddDilatationPower(f"m = {m} is odd")
    D, poly = EXAMPLE_T1_FORMS[m // 2]
    zz = np.asarray(z, dtype=np.complex128)
    P = sum(c * zz ** (i + 1) for i, c in enumerate(poly)) + D * np.log1p(-zz)
    return -2 * np.imag(principal_sqrt(alpha) * P / D)


class GeometryResiduals(NamedTuple):
    isothermal_E_minus_G: np.ndarray
    isothermal_F: np.ndarray
    mean_curvature: np.ndarray
    laplacian_max: np.ndarray


def first_derivatives(f: HarmonicMap, spec: LiftSpec, z):
    """Analytic partials X_x, X_y of the lift (each of shape z.shape + (3,))."""
    zz = np.asarray(z, dtype=np.complex128)
    dh, dg = f.derivatives(zz)
    qdh = spec.q_coefficient * zz**spec.k * dh
    fx = dh + np.conj(dg)
    fy = 1j * dh - 1j * np.conj(dg)
    Xx = np.stack([fx.real, fx.imag, 2 * qdh.imag], axis=-1)
    Xy = np.stack([fy.real, fy.imag, 2 * qdh.real], axis=-1)
    return Xx, Xy


def geometry_residuals(f: HarmonicMap, spec: LiftSpec, z, step: float,
                       radius: float = MAX_RADIUS) -> GeometryResiduals:
    """Numerical checks that the lift is isothermal, minimal and harmonic.

    The first fundamental form uses analytic first derivatives; second
    derivatives come from central differences of width ``step`` on the
    evaluated surface. The Laplacian residual is the largest 5-point Laplacian
    among the three coordinates divided by ``E``.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    zz = np.asarray(z, dtype=np.complex128)
    if np.any(np.abs(zz) + 2 * step >= radius) or radius >= 1:
        raise DomainError("step too large: the stencil leaves the grid disk")
    Xx, Xy = first_derivatives(f, spec, zz)
    E = np.sum(Xx * Xx, axis=-1)
    F = np.sum(Xx * Xy, axis=-1)
    G = np.sum(Xy * Xy, axis=-1)

    H_series = height_series(f, spec)
    X = lambda w: surface_points(f, spec, w, H_series)  # noqa: E731
    hs, ihs = step, 1j * step
    X0 = X(zz)
    Xxx = (X(zz + hs) - 2 * X0 + X(zz - hs)) / step**2
    Xyy = (X(zz + ihs) - 2 * X0 + X(zz - ihs)) / step**2
    Xxy = (X(zz + hs + ihs) - X(zz + hs - ihs) - X(zz - hs + ihs) + X(zz - hs - ihs)) / (4 * step**2)

    normal = np.cross(Xx, Xy)
    normal /= np.linalg.norm(normal, axis=-1, keepdims=True)
    L = np.sum(Xxx * normal, axis=-1)
    M = np.sum(Xxy * normal, axis=-1)
    N = np.sum(Xyy * normal, axis=-1)
    H = (L * G - 2 * M * F + N * E) / (2 * (E * G - F * F))
    lap = np.max(np.abs(Xxx + Xyy), axis=-1) / E
    return GeometryResiduals(np.abs(E - G) / (E + G), np.abs(F) / (E + G), H, lap)
