"""t-values of digital nets and the figures of merit built on them."""

import logging
import math
from typing import Iterator, Sequence

import numpy as np

from ..gf2 import GeneratingMatrix, stacked_rank
from ..pointsets import DigitalNetBase2, Points, net_points
from ..settings import get_settings
from ..weights import projections
from .combiner import combine_projection_values
from .types import FomSpec, MeritError, MeritValue

logger = logging.getLogger(__name__)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of ``parts`` nonnegative integers summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _all_full_rank(matrices: Sequence[GeneratingMatrix], m: int) -> bool:
    for rows in compositions(m, len(matrices)):
        if stacked_rank(matrices, rows) < m:
            return False
    return True


def t_value(net: DigitalNetBase2, u: Sequence[int]) -> int:
    """t-value of the projection of the net on the 1-based coordinates u."""
    if not u:
        raise MeritError("t-value needs a nonempty projection")
    matrices = [net.matrices[j - 1].top_rows(min(net.k, net.w)) for j in u]
    for m in range(1, net.k + 1):
        if not _all_full_rank(matrices, m):
            return net.k - (m - 1)
    return 0


def t_value_bound(t: int, k: int, order: int) -> float:
    """(2^t / 2^k) sum_{j=0}^{order-1} C(k - t, j), the sum truncated at j = k - t."""
    top = min(order - 1, k - t)
    return 2.0 ** (t - k) * sum(math.comb(k - t, j) for j in range(top + 1))


def t_value_bound_fom(net: DigitalNetBase2, spec: FomSpec) -> MeritValue:
    """Weighted combination of per-projection t-value discrepancies.

    ``TValueBound`` uses the star-discrepancy bound of each projection,
    ``TValueRaw`` the t-value itself.
    """
    if spec.family not in ("TValueBound", "TValueRaw"):
        raise MeritError(f"{spec.family} is not a t-value figure of merit")
    values: dict[tuple[int, ...], float] = {}
    for u in projections(spec.weights, net.s):
        t = t_value(net, u)
        if spec.family == "TValueRaw":
            values[u] = float(t)
        else:
            values[u] = t_value_bound(t, net.k, len(u))
    return combine_projection_values(values, spec)


def oracle_t_value_box_count(net: DigitalNetBase2, u: Sequence[int]) -> int:
    """t-value by counting points in elementary dyadic boxes."""
    return box_count_t_value(net_points(net), net.k, u)


def box_count_t_value(points: Points, k: int, u: Sequence[int]) -> int:
    """t-value of 2^k digital points from their first k digits, by box counting.

    Applies to randomized nets, which have no generating matrices.
    """
    guard = get_settings().box_count_guard_k
    if k > guard or len(u) > 3:
        raise MeritError(
            f"Box counting is limited to k <= {guard} and |u| <= 3, got k = {k}, |u| = {len(u)}"
        )
    if points.digits is None or points.digits < k:
        raise MeritError(f"Box counting needs at least {k} binary digits per coordinate")
    if points.n != 1 << k:
        raise MeritError(f"Box counting needs 2^{k} points, got {points.n}")
    digits = (points.values[:, [j - 1 for j in u]] >> np.uint64(points.digits - k)).astype(np.int64)
    for t in range(k + 1):
        if _boxes_balanced(digits, k, k - t, 1 << t):
            return t
    return k  # pragma: no cover


def _boxes_balanced(digits: np.ndarray, k: int, m: int, expected: int) -> bool:
    for shape in compositions(m, digits.shape[1]):
        index = np.zeros(digits.shape[0], dtype=np.int64)
        for col, q in enumerate(shape):
            index = (index << q) | (digits[:, col] >> (k - q))
        counts = np.bincount(index, minlength=1 << m)
        if not np.all(counts == expected):
            return False
    return True
