"""Test integrands with closed-form integrals."""

from typing import Sequence

import numpy as np
import numpy.typing as npt

from ..pointsets import Rank1Lattice, lattice_points
from .types import AnovaPsi, Constant, ExperimentError, ProdLinear, TestIntegrand, TrigPoly

FloatArray = npt.NDArray[np.float64]


def _as_rows(u: Sequence[float] | FloatArray, s: int) -> FloatArray:
    x = np.asarray(u, dtype=np.float64)
    if x.ndim == 1:
        x = x[None, :]
    if x.shape[1] < s:
        raise ExperimentError(f"Points have {x.shape[1]} coordinates, integrand needs {s}")
    return x


def eval_prod_linear(c: Sequence[float], u: Sequence[float]) -> float:
    """prod_j (1 + c_j (u_j - 1/2)) at one point."""
    if len(c) != len(u):
        raise ExperimentError(f"dimension mismatch: {len(c)} coefficients, point has {len(u)}")
    return float(np.prod(1.0 + np.asarray(c) * (np.asarray(u, dtype=np.float64) - 0.5)))


def prod_linear_anova_term(c: Sequence[float], v: Sequence[int], u: Sequence[float]) -> float:
    """ANOVA component of ``eval_prod_linear`` for the 1-based subset v."""
    return float(np.prod([c[j - 1] * (u[j - 1] - 0.5) for j in v]))


def eval_anova_psi(u: Sequence[float], integrand: AnovaPsi | None = None) -> float:
    integrand = integrand or AnovaPsi()
    return float(integrand_values(integrand, _as_rows(u, integrand.s))[0])


def _psi(x: FloatArray, offset: float) -> FloatArray:
    return 1.0 / ((x - 0.5) ** 2 + offset)


def trig_poly_values(f: TrigPoly, points: FloatArray) -> npt.NDArray[np.complex128]:
    """Complex value of the trigonometric polynomial at every row of ``points``."""
    x = _as_rows(points, f.s)
    total = np.zeros(x.shape[0], dtype=np.complex128)
    for h, coeff in f.coefficients.items():
        total += coeff * np.exp(2j * np.pi * (x[:, : len(h)] @ np.asarray(h, dtype=np.float64)))
    return total


def integrand_values(f: TestIntegrand, points: FloatArray) -> FloatArray:
    """Integrand at every row of ``points`` (extra coordinates are ignored)."""
    x = _as_rows(points, f.s)
    match f:
        case ProdLinear():
            return np.prod(1.0 + np.asarray(f.c)[None, :] * (x[:, : f.s] - 0.5), axis=1)
        case AnovaPsi():
            centred = _psi(x, f.offset) - f.mean
            out = np.zeros(x.shape[0])
            for block in f.blocks:
                out += np.prod(centred[:, [j - 1 for j in block]], axis=1)
            return out
        case TrigPoly():
            return trig_poly_values(f, x).real
        case Constant():
            return np.full(x.shape[0], f.value)
    raise ExperimentError(f"Unknown integrand {f!r}")


def exact_integral(f: TestIntegrand) -> float:
    match f:
        case ProdLinear():
            return 1.0
        case AnovaPsi():
            return 0.0
        case TrigPoly():
            zero = (0,) * f.s
            return complex(f.coefficients.get(zero, 0)).real
        case Constant():
            return f.value
    raise ExperimentError(f"Unknown integrand {f!r}")


def prod_linear_variance(c: Sequence[float]) -> float:
    """Variance of the integrand under a uniform point: prod (1 + c_j^2 / 12) - 1."""
    return float(np.prod(1.0 + np.asarray(c) ** 2 / 12.0) - 1.0)


def prod_linear_shift_variance(lat: Rank1Lattice, c: Sequence[float]) -> float:
    """Exact variance of the randomly shifted lattice estimator of ``ProdLinear(c)``.

    The Fourier coefficients of u - 1/2 have modulus 1 / (2 pi |h|), so the
    dual-lattice sum collapses onto the Bernoulli polynomial B2:
    (1/n) sum_i prod_j (1 + c_j^2 B2(x_ij) / 2) - 1.
    """
    if len(c) != lat.s:
        raise ExperimentError(f"dimension mismatch: {len(c)} coefficients, lattice has {lat.s}")
    x = lattice_points(lat).as_float()
    b2 = x * x - x + 1.0 / 6.0
    terms = np.prod(1.0 + np.asarray(c)[None, :] ** 2 * b2 / 2.0, axis=1)
    return max(float(np.mean(terms)) - 1.0, 0.0)
