"""Hypergeometric harmonic maps f = h + conj(g) with dilatation alpha z^m.

Two families are built here. ``T1`` uses ``h(z) = z F(a, b; a+b; z)`` and
``T2`` uses ``h(z) = z F(a, b; a+b; z^2)``; in both the co-analytic part is the
Hadamard-product series that makes ``g' = alpha z^m h'``.
"""

from __future__ import annotations

import cmath
import os
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .specfun import (
    DomainError,
    HypParams,
    Number,
    PowerSeries,
    admissible_pair,
    hadamard,
    hyp2f1_coeffs,
    series_eval,
    tail_bound,
)

DEFAULT_TRUNC = 400
VARIANTS = ("T1", "T2")
# |h'(z)| below this is treated as a vanishing denominator
SINGULAR_THRESHOLD = 1e-14


def default_trunc() -> int:
    """Default truncation order, overridable through ``HCC_TRUNC``."""
    env = os.environ.get("HCC_TRUNC")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"HCC_TRUNC must be an integer, got {env!r}") from None
    return DEFAULT_TRUNC


@dataclass(frozen=True)
class ConstructionParams:
    a: complex
    b: complex
    m: int
    alpha: complex
    variant: str = "T1"
    trunc_order: int = 0  # 0 means default_trunc()

    def __post_init__(self):
        set_ = lambda k, v: object.__setattr__(self, k, v)  # noqa: E731
        set_("a", complex(self.a))
        set_("b", complex(self.b))
        set_("alpha", complex(self.alpha))
        variant = str(self.variant).upper()
        if variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        set_("variant", variant)
        if not admissible_pair(self.a, self.b):
            raise DomainError(
                "need a, b > 0 real, or b = conj(a) with Re a > 0; "
                f"got a={self.a}, b={self.b}"
            )
        if int(self.m) != self.m or self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m}")
        set_("m", int(self.m))
        if not self.trunc_order:
            set_("trunc_order", default_trunc())
        if self.trunc_order < self.m + 2:
            raise ValueError(f"trunc_order must be >= m + 2 = {self.m + 2}")

    @property
    def real_ab(self) -> tuple[float, float]:
        """(ab, a+b), both real in the admissible regime."""
        return (self.a * self.b).real, (self.a + self.b).real

    def with_trunc(self, trunc_order: int) -> "ConstructionParams":
        return replace(self, trunc_order=trunc_order)


@dataclass(frozen=True)
class HarmonicMap:
    """Sense-preserving harmonic map ``f = h + conj(g)`` on the unit disk."""

    h: PowerSeries
    g: PowerSeries
    params: Optional[ConstructionParams] = None

    def __post_init__(self):
        h, g = self.h.coeffs, self.g.coeffs
        if h.size < 2 or abs(h[0]) > 0 or abs(h[1] - 1) > 1e-15:
            raise ValueError("h must be normalized: h(0) = 0, h'(0) = 1")
        if abs(g[0]) > 0:
            raise ValueError("g must vanish at the origin")
        if self.params is not None and g.size > 1 and abs(g[1]) > 0:
            raise ValueError("constructed maps must have g'(0) = 0")

    @classmethod
    def identity(cls, order: int = 1) -> "HarmonicMap":
        return cls(PowerSeries.monomial(1, order), PowerSeries.zeros(order))

    @property
    def trunc_order(self) -> int:
        return min(self.h.trunc_order, self.g.trunc_order)

    def evaluate_with_tail(self, z):
        hv, ht = series_eval(self.h, z)
        gv, gt = series_eval(self.g, z)
        return hv + np.conj(gv), ht + gt

    def evaluate(self, z):
        """f(z) = h(z) + conj(g(z))."""
        return self.evaluate_with_tail(z)[0]

    def derivatives(self, z):
        """(h'(z), g'(z))."""
        return self.h.derivative()(z), self.g.derivative()(z)

    def dilatation(self, z):
        """Second complex dilatation g'/h'."""
        dh, dg = self.derivatives(z)
        if np.any(np.abs(dh) < SINGULAR_THRESHOLD):
            raise ZeroDivisionError("h'(z) vanishes (numerically) at an evaluation point")
        return dg / dh

    def jacobian(self, z):
        """|h'|^2 - |g'|^2."""
        dh, dg = self.derivatives(z)
        return np.abs(dh) ** 2 - np.abs(dg) ** 2

    def pre_shear(self) -> PowerSeries:
        """The analytic map h + g."""
        return self.h + self.g

    def max_tail(self, radius: float) -> float:
        return float(tail_bound(self.h, radius) + tail_bound(self.g, radius))


def _hyp_ab(p: ConstructionParams, N: int) -> PowerSeries:
    return hyp2f1_coeffs(HypParams(p.a, p.b, p.a + p.b), N)


def _hyp_shear(m: int, N: int) -> PowerSeries:
    return hyp2f1_coeffs(HypParams(2, m + 1, m + 2), N)


def build_t1_map(p: ConstructionParams) -> HarmonicMap:
    """``h = z F(a,b;a+b;z)``, ``g = alpha z^(m+1)/(m+1) [F(a,b;a+b;.) * F(2,m+1;m+2;.)]``."""
    if p.variant != "T1":
        raise ValueError("build_t1_map needs variant T1")
    N, m = p.trunc_order, p.m
    F_ab = _hyp_ab(p, N - 1)
    h = F_ab.shift(1)
    top = N - m - 1
    g = hadamard(F_ab.truncate(top), _hyp_shear(m, top)).shift(m + 1) * (p.alpha / (m + 1))
    return HarmonicMap(h, g, p)


def build_t2_map(p: ConstructionParams) -> HarmonicMap:
    """``h = z F(a,b;a+b;z^2)`` with the matching co-analytic part.

    The Hadamard product pairs coefficient ``j`` of ``F(a,b;a+b;.)`` (sitting at
    power ``2j``) with coefficient ``2j`` of ``F(2,m+1;m+2;.)``, placed at
    ``z^(2j+m+1)``.
    """
    if p.variant != "T2":
        raise ValueError("build_t2_map needs variant T2")
    N, m = p.trunc_order, p.m
    F_ab = _hyp_ab(p, (N - 1) // 2)
    h = np.zeros(N + 1, dtype=np.complex128)
    h[1::2] = F_ab.coeffs
    n_g = (N - m - 1) // 2 + 1
    shear = _hyp_shear(m, 2 * (n_g - 1)).coeffs[::2]
    g = np.zeros(N + 1, dtype=np.complex128)
    g[m + 1 :: 2] = p.alpha / (m + 1) * F_ab.coeffs[:n_g] * shear
    return HarmonicMap(PowerSeries(h), PowerSeries(g), p)


def build_map(p: ConstructionParams) -> HarmonicMap:
    return build_t1_map(p) if p.variant == "T1" else build_t2_map(p)


def ensure_resolution(f: HarmonicMap, radius: float, tol: float = 1e-6,
                      max_order: int = 1 << 17) -> HarmonicMap:
    """Return ``f`` or a rebuild at higher truncation whose tail at ``radius`` is below ``tol``.

    Maps without construction parameters cannot be extended and raise instead.
    """
    while f.max_tail(radius) > tol:
        if f.params is None or f.trunc_order >= max_order:
            raise ArithmeticError(
                f"series tail {f.max_tail(radius):.3g} at radius {radius} exceeds {tol:g} "
                f"(truncation order {f.trunc_order})"
            )
        f = build_map(f.params.with_trunc(min(2 * f.params.trunc_order, max_order)))
    return f


# Closed forms for a = b = 1: g(z) = -(alpha/D) (P(z) + D log(1 - z)).
# Table entries are (D, [coefficients of z, z^2, ..., z^m in P]).
EXAMPLE_T1_FORMS = {
    1: (1, [1]),
    2: (2, [2, 1]),
    3: (6, [6, 3, 2]),
    4: (12, [12, 6, 4, 3]),
    6: (60, [60, 30, 20, 15, 12, 10]),
}


def _example_form(m: int):
    try:
        return EXAMPLE_T1_FORMS[m]
    except KeyError:
        raise ValueError(f"closed form available for m in {sorted(EXAMPLE_T1_FORMS)}, got {m}") from None


def closed_form_example_t1(m: int, alpha: Number, z):
    """f(z) for a = b = 1 from the logarithmic closed forms (principal log)."""
    D, poly = _example_form(m)
    zz = np.asarray(z, dtype=np.complex128)
    if np.any(np.abs(zz) >= 1):
        raise DomainError("closed form evaluated only on |z| < 1")
    log1mz = np.log1p(-zz)
    P = sum(c * zz ** (k + 1) for k, c in enumerate(poly))
    g = -(complex(alpha) / D) * (P + D * log1mz)
    value = -log1mz + np.conj(g)
    return complex(value) if np.ndim(z) == 0 else value


def closed_form_example_t1_g_coeffs(m: int, alpha: Number, N: int) -> np.ndarray:
    """Taylor coefficients 0..N of the a = b = 1 closed-form co-analytic part."""
    D, poly = _example_form(m)
    k = np.arange(1, N + 1)
    c = np.zeros(N + 1, dtype=np.complex128)
    P = np.zeros(N, dtype=np.float64)
    P[: min(len(poly), N)] = poly[:N]
    # -log(1 - z) = sum z^k / k
    c[1:] = -(complex(alpha) / D) * (P - D / k)
    return c


def principal_sqrt(alpha: Number) -> complex:
    """Square root with argument in (-pi/2, pi/2]."""
    a = complex(alpha)
    return cmath.sqrt(complex(a.real, a.imag + 0.0))
