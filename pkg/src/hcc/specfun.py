"""Special functions and truncated power series.

Pochhammer symbols, a Lanczos log-Gamma, the Beta function, Gaussian
hypergeometric coefficients and the small amount of series algebra needed to
assemble harmonic maps from them.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

Number = Union[int, float, complex]

# Lanczos approximation, g = 7, 9 terms.
LANCZOS_G = 7.0
LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

# number of trailing coefficients used for the geometric tail estimate
TAIL_WINDOW = 10


class DomainError(ValueError):
    """Argument outside the domain of a special function or series operation."""


def _as_complex(x: Number) -> complex:
    z = complex(x)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {x!r}")
    return z


def _maybe_real(z: complex, scale: float = 1.0, rtol: float = 1e-13):
    if abs(z.imag) <= rtol * max(scale, abs(z.real)):
        return z.real
    return z


def pochhammer(a: Number, n: int) -> Number:
    """Rising factorial ``a (a+1) ... (a+n-1)``; equals 1 for ``n = 0``."""
    if n < 0:
        raise DomainError(f"pochhammer needs n >= 0, got {n}")
    result: Number = 1
    for j in range(n):
        result *= a + j
    return result


def loggamma(z: Number) -> complex:
    """Logarithm of the Gamma function by the Lanczos approximation.

    Uses the reflection formula for ``Re z < 1/2``. For complex arguments the
    imaginary part is only defined modulo 2*pi, which is harmless whenever the
    result is exponentiated.
    """
    z = _as_complex(z)
    if z.real < 0.5:
        if z.imag == 0.0 and z.real == math.floor(z.real):
            raise DomainError(f"Gamma has a pole at {z.real:g}")
        return complex(math.log(math.pi)) - cmath.log(cmath.sin(math.pi * z)) - loggamma(1.0 - z)
    z -= 1.0
    x = LANCZOS_COEFFS[0]
    for i, c in enumerate(LANCZOS_COEFFS[1:], start=1):
        x += c / (z + i)
    t = z + LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def gamma(z: Number) -> Number:
    """Gamma function; real-valued for real arguments."""
    zc = _as_complex(z)
    value = cmath.exp(loggamma(zc))
    if zc.imag == 0.0:
        return value.real
    return value


def beta(a: Number, b: Number) -> Number:
    """Beta function ``Gamma(a) Gamma(b) / Gamma(a+b)`` for ``Re a, Re b > 0``.

    Real inputs, and conjugate pairs ``b = conj(a)``, give a float.
    """
    a, b = _as_complex(a), _as_complex(b)
    if a.real <= 0 or b.real <= 0:
        raise DomainError(f"beta requires Re a > 0 and Re b > 0, got a={a}, b={b}")
    value = cmath.exp(loggamma(a) + loggamma(b) - loggamma(a + b))
    if (a.imag == 0.0 and b.imag == 0.0) or b == a.conjugate():
        if abs(value.imag) > 1e-10 * abs(value):
            raise ArithmeticError(f"beta({a}, {b}) has unexpected imaginary part {value.imag}")
        return value.real
    return value


@dataclass(frozen=True)
class HypParams:
    """Parameters of F(a, b; c; z)."""

    a: complex
    b: complex
    c: complex

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, _as_complex(getattr(self, name)))
        c = self.c
        if c.imag == 0.0 and c.real <= 0 and c.real == math.floor(c.real):
            raise DomainError(f"c must not be 0, -1, -2, ...; got {c.real:g}")

    @property
    def admissible(self) -> bool:
        """Whether (a, b) are positive reals or a conjugate pair with Re a > 0."""
        return admissible_pair(self.a, self.b)


def admissible_pair(a: Number, b: Number) -> bool:
    a, b = complex(a), complex(b)
    if a.imag == 0.0 and b.imag == 0.0:
        return a.real > 0 and b.real > 0
    return b == a.conjugate() and a.real > 0


class PowerSeries:
    """Truncated Taylor series ``c_0 + c_1 z + ... + c_N z^N`` about 0.

    Binary operations truncate to the shorter operand. Instances are treated as
    immutable; the coefficient array is flagged read-only.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Sequence[Number] | np.ndarray):
        c = np.array(coeffs, dtype=np.complex128)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("a power series needs a non-empty 1-d coefficient array")
        if not np.all(np.isfinite(c)):
            raise DomainError("power series coefficients must be finite")
        c.setflags(write=False)
        self._c = c

    @classmethod
    def zeros(cls, order: int) -> "PowerSeries":
        return cls(np.zeros(order + 1))

    @classmethod
    def monomial(cls, k: int, order: int, coeff: Number = 1.0) -> "PowerSeries":
        c = np.zeros(order + 1, dtype=np.complex128)
        if k <= order:
            c[k] = coeff
        return cls(c)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def trunc_order(self) -> int:
        return self._c.size - 1

    def __len__(self) -> int:
        return self._c.size

    def __getitem__(self, n):
        return self._c[n]

    def __repr__(self) -> str:
        head = ", ".join(f"{x:.6g}" for x in self._c[:5])
        return f"PowerSeries([{head}{', ...' if self._c.size > 5 else ''}], N={self.trunc_order})"

    def truncate(self, order: int) -> "PowerSeries":
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        if order <= self.trunc_order:
            return PowerSeries(self._c[: order + 1])
        return PowerSeries(np.concatenate([self._c, np.zeros(order - self.trunc_order)]))

    def _pair(self, other: "PowerSeries"):
        n = min(self.trunc_order, other.trunc_order) + 1
        return self._c[:n], other._c[:n]

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            x, y = self._pair(other)
            return PowerSeries(x + y)
        c = self._c.copy()
        c[0] += other
        return PowerSeries(c)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-self._c)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            x, y = self._pair(other)
            return PowerSeries(np.convolve(x, y)[: x.size])
        return PowerSeries(self._c * other)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return PowerSeries(self._c / scalar)

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by ``z**k``; the known order grows by ``k``."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        return PowerSeries(np.concatenate([np.zeros(k), self._c]))

    def conj_coeffs(self) -> "PowerSeries":
        return PowerSeries(self._c.conj())

    def derivative(self) -> "PowerSeries":
        return series_derivative(self)

    def antiderivative(self) -> "PowerSeries":
        return series_antiderivative(self)

    def __call__(self, z):
        return series_eval(self, z)[0]


def hyp2f1_coeffs(p: HypParams, N: int) -> PowerSeries:
    """Coefficients 0..N of F(a, b; c; z).

    Built from the term ratio ``(a+n)(b+n)/((c+n)(1+n))`` with a running
    product, so large N does not overflow the way raw Pochhammer quotients do.
    """
    if N < 0:
        raise DomainError("N must be non-negative")
    n = np.arange(N, dtype=np.float64)
    ratios = (p.a + n) * (p.b + n) / ((p.c + n) * (1.0 + n))
    coeffs = np.empty(N + 1, dtype=np.complex128)
    coeffs[0] = 1.0
    coeffs[1:] = np.cumprod(ratios)
    return PowerSeries(coeffs)


def series_derivative(s: PowerSeries) -> PowerSeries:
    c = s.coeffs
    if c.size == 1:
        return PowerSeries([0.0])
    return PowerSeries(c[1:] * np.arange(1, c.size))


def series_antiderivative(s: PowerSeries) -> PowerSeries:
    c = s.coeffs
    out = np.zeros(c.size + 1, dtype=np.complex128)
    out[1:] = c / np.arange(1, c.size + 1)
    return PowerSeries(out)


def hadamard(s1: PowerSeries, s2: PowerSeries) -> PowerSeries:
    """Coefficient-wise (Hadamard) product."""
    x, y = s1._pair(s2)
    return PowerSeries(x * y)


def _check_disk(z: np.ndarray) -> None:
    if np.any(~np.isfinite(z)):
        raise DomainError("evaluation point must be finite")
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("power series are only evaluated on |z| < 1")


def tail_bound(s: PowerSeries, r) -> np.ndarray:
    """Estimate of the neglected tail at radius ``r``.

    Geometric extrapolation from the trailing nonzero coefficients: with ``q``
    the largest per-step ratio ``|c_j/c_i|**(1/(j-i)) * r`` among the last
    ``TAIL_WINDOW`` nonzero pairs, the bound is ``|c_L| r**L q / (1 - q)`` where
    ``L`` is the last nonzero index; ``inf`` when ``q >= 1``. Zero gaps (odd or
    even series) are skipped rather than treated as a zero tail.
    """
    r = np.abs(np.asarray(r, dtype=np.complex128))
    c = np.abs(s.coeffs)
    idx = np.flatnonzero(c)
    if idx.size < 2:
        return np.zeros_like(r, dtype=np.float64)
    idx = idx[-(TAIL_WINDOW + 1):]
    i, j = idx[:-1], idx[1:]
    per_step = np.max((c[j] / c[i]) ** (1.0 / (j - i)))
    q = per_step * r
    last = idx[-1]
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        tail = c[last] * r**last * q / (1.0 - q)
    return np.where(q >= 1.0, np.inf, tail)


def series_eval(s: PowerSeries, z):
    """Horner evaluation of ``s`` at ``z`` (scalar or array) with a tail bound.

    Returns ``(value, tail_bound)``; scalars in give scalars out.
    """
    scalar = np.ndim(z) == 0
    zz = np.asarray(z, dtype=np.complex128)
    _check_disk(zz)
    acc = np.zeros_like(zz)
    for c in s.coeffs[::-1]:
        acc = acc * zz + c
    tail = tail_bound(s, zz)
    if scalar:
        return complex(acc), float(tail)
    return acc, tail


class LimitKind(enum.Enum):
    FINITE = "finite"
    ZERO = "zero"
    DIVERGENT = "divergent"


@dataclass(frozen=True)
class StirlingLimit:
    """Limit of ``(a,n)(b,n)/((c,n)(1,n))`` as n grows."""

    kind: LimitKind
    value: Optional[Number] = None


def stirling_limit_class(a: Number, b: Number, c: Number, tol: float = 1e-12) -> StirlingLimit:
    """Classify the large-n limit of the hypergeometric coefficient.

    ``c + 1 == a + b`` gives ``Gamma(c)/(Gamma(a)Gamma(b))``; otherwise the real
    parts decide between zero and divergence. Equal real parts with unequal
    values (complex borderline) raise :class:`DomainError`.
    """
    p = HypParams(a, b, c)
    excess = (p.c + 1) - (p.a + p.b)
    scale = max(1.0, abs(p.a) + abs(p.b) + abs(p.c))
    if abs(excess) <= tol * scale:
        value = cmath.exp(loggamma(p.c) - loggamma(p.a) - loggamma(p.b))
        return StirlingLimit(LimitKind.FINITE, _maybe_real(value))
    if abs(excess.real) <= tol * scale:
        raise DomainError(
            f"Re(c+1) = Re(a+b) but c+1 != a+b (difference {excess}); limit is oscillatory"
        )
    if excess.real > 0:
        return StirlingLimit(LimitKind.ZERO, 0.0)
    return StirlingLimit(LimitKind.DIVERGENT, math.inf)
