import itertools
import logging
import math
from collections import Counter
from typing import Optional, Sequence

from ..merit import t_value
from ..pointsets import PointSetDef, to_digital_net
from ..settings import get_settings
from .types import ExperimentError, TValueHistogram

logger = logging.getLogger(__name__)


def t_value_histogram(
    defn: PointSetDef, orders: Sequence[int] = (2, 3), guard: Optional[int] = None
) -> TValueHistogram:
    """Count the projections of each order by t-value and average them."""
    net = to_digital_net(defn)
    guard = guard if guard is not None else get_settings().exhaustive_guard
    total = sum(math.comb(net.s, order) for order in orders)
    if total > guard:
        raise ExperimentError(f"{total} projections exceed the guard of {guard}")
    counts: dict[int, dict[int, int]] = {}
    means: dict[int, float] = {}
    for order in orders:
        tally: Counter[int] = Counter(
            t_value(net, u) for u in itertools.combinations(range(1, net.s + 1), order)
        )
        counts[order] = dict(sorted(tally.items()))
        seen = sum(tally.values())
        means[order] = sum(t * c for t, c in tally.items()) / seen if seen else 0.0
        logger.debug("Order %d t-values: %s", order, counts[order])
    return TValueHistogram(counts=counts, means=means)
