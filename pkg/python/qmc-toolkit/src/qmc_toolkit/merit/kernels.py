"""One-dimensional kernels phi of the kernel figures of merit.

Scalar functions take a float in [0, 1); the ``*_values`` variants take
floor(log2 x) arrays computed exactly from integer numerators over 2^w by
:func:`floor_log2_digits`, so boundary values 2^-l are never misclassified.
"""

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
import numpy.typing as npt

from ..pointsets import Points
from .types import FomSpec, MeritError

FloatArray = npt.NDArray[np.float64]

_POWERS_OF_TWO = np.array([1 << i for i in range(64)], dtype=np.uint64)
# Stands for floor(log2 0); every 2^(c * floor(log2 x)) with c > 0 vanishes there.
_LOG2_ZERO = -(1 << 20)


@lru_cache(maxsize=None)
def _bernoulli_numbers(count: int) -> tuple[Fraction, ...]:
    b = [Fraction(1)]
    for m in range(1, count + 1):
        b.append(-sum(math.comb(m + 1, j) * b[j] for j in range(m)) / (m + 1))
    return tuple(b)


@lru_cache(maxsize=None)
def bernoulli_coefficients(degree: int) -> tuple[float, ...]:
    """Coefficients of B_degree(x), highest power first."""
    b = _bernoulli_numbers(degree)
    return tuple(float(math.comb(degree, j) * b[j]) for j in range(degree + 1))


def _palpha_scale(alpha: int) -> float:
    return -((-4 * math.pi**2) ** (alpha // 2)) / math.factorial(alpha)


def _check_even(alpha: float) -> int:
    if alpha != int(alpha) or int(alpha) < 2 or int(alpha) % 2:
        raise MeritError(
            f"Palpha kernel needs an even integer alpha >= 2, got {alpha}; "
            "use oracle_palpha_dual for other values"
        )
    return int(alpha)


def kernel_palpha(x: float, alpha: float) -> float:
    """-(-4 pi^2)^(alpha/2) B_alpha(x) / alpha!."""
    a = _check_even(alpha)
    return _palpha_scale(a) * float(np.polyval(bernoulli_coefficients(a), x))


def palpha_values(x: FloatArray, alpha: float) -> FloatArray:
    a = _check_even(alpha)
    return _palpha_scale(a) * np.polyval(np.asarray(bernoulli_coefficients(a)), x)


def _mu(alpha: float) -> float:
    return 1.0 / (1.0 - 2.0 ** (1.0 - alpha))


def _floor_log2(x: float) -> int:
    _, exponent = math.frexp(x)
    return exponent - 1


def kernel_palpha_tilde(x: float, alpha: float) -> float:
    if alpha <= 1:
        raise MeritError(f"alpha must be > 1, got {alpha}")
    mu = _mu(alpha)
    if x == 0:
        return mu
    return mu - 2.0 ** ((1 + _floor_log2(x)) * (alpha - 1)) * (mu + 1)


def kernel_sobolev1(x: float) -> float:
    if x == 0:
        return 1 / 6
    return 1 / 6 - math.ldexp(1.0, _floor_log2(x) - 1)


def floor_log2_digits(values: npt.NDArray[np.uint64], w: int) -> npt.NDArray[np.int64]:
    """floor(log2(v / 2^w)); zero entries map to a large negative sentinel."""
    bit_length = np.searchsorted(_POWERS_OF_TWO, values, side="right").astype(np.int64)
    return np.where(values == 0, _LOG2_ZERO, bit_length - 1 - w)


def _pow2(exponent: npt.NDArray[np.float64] | npt.NDArray[np.int64]) -> FloatArray:
    return np.exp2(np.maximum(exponent, -1100).astype(np.float64))


def palpha_tilde_values(f: npt.NDArray[np.int64], alpha: float) -> FloatArray:
    mu = _mu(alpha)
    return np.where(f == _LOG2_ZERO, mu, mu - _pow2((1 + f) * (alpha - 1)) * (mu + 1))


def sobolev1_values(f: npt.NDArray[np.int64]) -> FloatArray:
    return np.where(f == _LOG2_ZERO, 1 / 6, 1 / 6 - _pow2(f - 1))


def r2prime_values(f: npt.NDArray[np.int64], k: int) -> FloatArray:
    """-floor(log2 u)/2 when u >= 2^-k, else 1 + k/2."""
    return np.where(f >= -k, -f / 2.0, 1.0 + k / 2.0)


def interlaced_a_values(f: npt.NDArray[np.int64], alpha: int, d: int) -> FloatArray:
    m = min(alpha, d)
    return (1 - _pow2((m - 1) * f) * (2**m - 1)) / (2 ** ((alpha + 2) / 2) * (2 ** (m - 1) - 1))


def interlaced_b_values(f: npt.NDArray[np.int64], d: int, ell: int) -> FloatArray:
    return 2 ** (d - 1) * (1 - _pow2((d - 1) * f) * (2**d - 1)) / (2**ell * (2 ** (d - 1) - 1))


def interlaced_c_values(f: npt.NDArray[np.int64], alpha: int, d: int) -> FloatArray:
    m = min(alpha, d)
    return (1 - _pow2(2 * m * f) * (2 ** (2 * m + 1) - 1)) / (2**alpha * (2 ** (2 * m) - 1))


def interlaced_c_factor(alpha: int, d: int) -> float:
    """D_{alpha,d} = 2^(2 max(d - alpha, 0) + (2d - 1) alpha)."""
    return float(2 ** (2 * max(d - alpha, 0) + (2 * d - 1) * alpha))


def interlaced_a_factor(alpha: int, d: int) -> float:
    return 2.0 ** (alpha * (2 * d - 1) / 2)


def kernel_matrix(points: Points, spec: FomSpec) -> FloatArray:
    """phi(u_{i,j}) for every point and output coordinate.

    For interlaced families the points are the s*d-dimensional inner points
    and the result has s columns.
    """
    if spec.family == "Palpha":
        return palpha_values(points.as_float(), spec.alpha)
    if points.digits is None:
        raise MeritError(f"{spec.family} needs digital points with a power-of-two denominator")
    f = floor_log2_digits(points.values, points.digits)
    match spec.family:
        case "PalphaTilde":
            return palpha_tilde_values(f, spec.alpha)
        case "Sobolev1":
            return sobolev1_values(f)
        case "R2prime":
            return r2prime_values(f, _log2_count(points.n))
        case "IAlphaDa" | "IAlphaDb" | "IAlphaDc":
            return _interlaced_matrix(f, spec)
    raise MeritError(f"Family {spec.family} has no kernel")


def _log2_count(n: int) -> int:
    if n & (n - 1):
        raise MeritError(f"R2prime needs n = 2^k points, got {n}")
    return n.bit_length() - 1


def interlaced_component_values(f: npt.NDArray[np.int64], spec: FomSpec, ell: int) -> FloatArray:
    """Kernel of the inner coordinate at position ell (1-based) of its interlacing block."""
    alpha = int(spec.alpha)
    match spec.family:
        case "IAlphaDa":
            return interlaced_a_values(f, alpha, spec.d)
        case "IAlphaDb":
            return interlaced_b_values(f, spec.d, ell)
        case "IAlphaDc":
            return interlaced_c_values(f, alpha, spec.d)
    raise MeritError(f"{spec.family} is not an interlaced figure of merit")


def _interlaced_matrix(f: npt.NDArray[np.int64], spec: FomSpec) -> FloatArray:
    d = spec.d
    if f.shape[1] % d:
        raise MeritError(f"Inner dimension {f.shape[1]} is not a multiple of d = {d}")
    out = np.ones((f.shape[0], f.shape[1] // d))
    for ell in range(1, d + 1):
        out *= 1 + interlaced_component_values(f[:, ell - 1 :: d], spec, ell)
    return out - 1


def kernel_baseline(spec: FomSpec) -> float:
    """Constant subtracted from each projection's mean product (R2prime only)."""
    return 1.0 if spec.family == "R2prime" else 0.0
