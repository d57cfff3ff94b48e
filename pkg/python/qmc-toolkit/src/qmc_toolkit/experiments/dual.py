"""Dual-lattice variance identity for randomly shifted lattice rules."""

import logging
import math

import numpy as np
import numpy.typing as npt

from ..pointsets import Rank1Lattice, lattice_points
from .integrands import trig_poly_values
from .types import DualVarianceReport, ExperimentError, TrigPoly

logger = logging.getLogger(__name__)

# grid shifts evaluated per batch
_SHIFT_BATCH = 512


def in_dual(lat: Rank1Lattice, h: tuple[int, ...]) -> bool:
    """h . a = 0 mod n."""
    return sum(hj * aj for hj, aj in zip(h, lat.gen)) % lat.n == 0


def shift_grid(s: int, size: int) -> npt.NDArray[np.float64]:
    """All points of (Z / size)^s / size, one per row."""
    axes = np.meshgrid(*[np.arange(size, dtype=np.float64) / size] * s, indexing="ij")
    return np.stack(axes, axis=-1).reshape(-1, s)


def _check_pair(lat: Rank1Lattice, f: TrigPoly) -> None:
    if not f.coefficients:
        raise ExperimentError("empty Fourier support")
    if f.s != lat.s:
        raise ExperimentError(f"dimension mismatch: frequencies have {f.s} coordinates, lattice has {lat.s}")


def shifted_estimator_variance(lat: Rank1Lattice, f: TrigPoly) -> float:
    """Variance over a uniform shift of the shifted-lattice average of f.

    The average is evaluated directly at the shifted points for every shift of
    a grid with M > 2 max |h_j| points per coordinate. The squared deviation
    is a trigonometric polynomial with frequencies below M in every
    coordinate, so its grid mean is its integral over the shift.
    """
    _check_pair(lat, f)
    size = 2 * max(abs(hj) for h in f.coefficients for hj in h) + 1
    grid = shift_grid(lat.s, size)
    points = lattice_points(lat).as_float()
    mean = complex(f.coefficients.get((0,) * lat.s, 0))
    total = 0.0
    for start in range(0, len(grid), _SHIFT_BATCH):
        shifts = grid[start : start + _SHIFT_BATCH]
        # reduced mod 1 to keep the phases small
        shifted = np.mod(shifts[:, None, :] + points[None, :, :], 1.0).reshape(-1, lat.s)
        averages = trig_poly_values(f, shifted).reshape(len(shifts), lat.n).mean(axis=1)
        total += float(np.sum(np.abs(averages - mean) ** 2))
    return total / len(grid)


def dual_variance_identity_check(lat: Rank1Lattice, f: TrigPoly) -> DualVarianceReport:
    """Compare the dual-lattice variance formula with the estimator's variance.

    The analytic value sums |coeff(h)|^2 over the nonzero frequencies in the
    dual lattice. The exact value comes from ``shifted_estimator_variance``,
    which never tests dual membership.
    """
    _check_pair(lat, f)
    analytic = math.fsum(
        abs(complex(coeff)) ** 2
        for h, coeff in f.coefficients.items()
        if any(h) and in_dual(lat, h)
    )
    exact = shifted_estimator_variance(lat, f)
    report = DualVarianceReport(analytic=analytic, exact=exact, difference=abs(analytic - exact))
    logger.debug("Dual variance check n=%d: %.3g vs %.3g", lat.n, analytic, exact)
    return report
