"""Variance of a tabulated Sobol' sequence against a searched one."""

import logging
import math
from typing import Optional

from ..merit import FomSpec
from ..pointsets import SobolNet, SobolSpec
from ..search import ExplorationMethod, SearchSpec, run_search
from ..weights import OrderDependentWeights
from .types import AnovaPsi, ExperimentError, SobolComparison, TestIntegrand
from .variance import replicate_averages

logger = logging.getLogger(__name__)


def projection_t_value_criterion(orders: tuple[int, ...] = (2, 3)) -> FomSpec:
    """Worst t-value over the projections of the given orders."""
    top = max(orders)
    gammas = tuple(1.0 if order in orders else 0.0 for order in range(1, top + 1))
    return FomSpec(
        family="TValueRaw", q=math.inf, weights=OrderDependentWeights(gammas=gammas)
    )


def search_sobol_spec(
    *,
    k: int,
    s: int,
    method: ExplorationMethod,
    fom: Optional[FomSpec] = None,
    reference: Optional[SobolSpec] = None,
    seed: int = 0,
) -> SobolSpec:
    """Direction numbers found by ``method`` over the polynomials of ``reference``."""
    spec = SearchSpec(
        construction="sobol",
        k=k,
        s=s,
        fom=fom or projection_t_value_criterion(),
        method=method,
        seed=seed,
        sobol_polynomials=reference,
    )
    best = run_search(spec).best
    assert isinstance(best, SobolNet)
    return best.spec


def sobol_comparison_study(
    *,
    reference: SobolSpec,
    custom: SobolSpec,
    k: int,
    s: int,
    m: int,
    integrand: Optional[TestIntegrand] = None,
    seed: int = 0,
    workers: int = 1,
) -> SobolComparison:
    """Digital-shift variance of both sequences on the same integrand.

    The ratio is reported as found; nothing is asserted about its size.
    """
    if m < 2:
        raise ExperimentError(f"a variance needs m >= 2 replicates, got {m}")
    integrand = integrand or AnovaPsi()
    variances = []
    for spec in (reference, custom):
        net = SobolNet(spec=spec, s=s, k=k)
        averages = replicate_averages(
            net, kind="digitalShift", integrand=integrand, m=m, seed=seed, workers=workers
        )
        variances.append(float(averages.var(ddof=1)))
    ratio = variances[0] / variances[1] if variances[1] > 0 else math.inf
    logger.info("Sobol' comparison at n=2^%d: reference/custom variance ratio %.3g", k, ratio)
    return SobolComparison(reference_variance=variances[0], custom_variance=variances[1], ratio=ratio)
