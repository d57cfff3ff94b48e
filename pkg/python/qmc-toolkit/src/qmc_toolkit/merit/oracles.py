"""Reference computations used to cross-check the kernel engine."""

import itertools
import math

import numpy as np

from ..pointsets import Points, Rank1Lattice
from ..weights import WeightSpec
from .combiner import combine_kernel
from .kernels import kernel_matrix
from .types import FomSpec, MeritError

# Below this many dual candidates the sum is taken term by term.
_DIRECT_ENUMERATION_LIMIT = 1_000_000


def _rho(h: int, alpha: float) -> float:
    return float(max(1, abs(h))) ** -alpha


def oracle_palpha_dual(lat: Rank1Lattice, alpha: float, truncation: int) -> float:
    """Sum over nonzero dual vectors h with max |h_j| <= H of prod max(1, |h_j|)^-alpha.

    Small boxes are enumerated with the membership test h . a = 0 mod n;
    larger ones use the equivalent character sum
    (1/n) sum_i prod_j F_H(i a_j / n) - 1 with F_H(x) = sum_{|h|<=H} rho(h) e(hx),
    grouping h by its residue modulo n.
    """
    if truncation < 1:
        raise MeritError(f"Truncation must be >= 1, got {truncation}")
    if alpha <= 1:
        raise MeritError(f"alpha must be > 1, got {alpha}")
    n, s, big_h = lat.n, lat.s, truncation
    if (2 * big_h + 1) ** s <= _DIRECT_ENUMERATION_LIMIT:
        terms = []
        for h in itertools.product(range(-big_h, big_h + 1), repeat=s):
            if any(h) and sum(hj * aj for hj, aj in zip(h, lat.gen)) % n == 0:
                terms.append(math.prod(_rho(hj, alpha) for hj in h))
        return math.fsum(terms)
    # S_r = sum_{1 <= h <= H, h = r mod n} h^-alpha
    hs = np.arange(1, big_h + 1, dtype=np.float64)
    residue_sums = np.bincount(
        np.arange(1, big_h + 1) % n, weights=hs**-alpha, minlength=n
    )
    m = np.arange(n)
    cosines = np.cos(2 * np.pi * np.outer(m, np.arange(n)) / n)
    f_h = 1.0 + 2.0 * cosines @ residue_sums  # F_H(m / n)
    i = np.arange(n)
    products = np.ones(n)
    for a in lat.gen:
        products *= f_h[(i * a) % n]
    return math.fsum(products.tolist()) / n - 1.0


def star_discrepancy_bound(points: Points, weights: WeightSpec) -> float:
    """1 - (1 - 1/n)^s + R'_2 for a digital net with n = 2^k points."""
    spec = FomSpec(family="R2prime", q=1, weights=weights)
    r2 = combine_kernel(kernel_matrix(points, spec), spec).total
    return 1.0 - (1.0 - 1.0 / points.n) ** points.s + r2
