"""RQMC variance studies over a grid of point counts."""

import logging
import math
import time
from typing import Callable, Literal, Optional, Sequence

import numpy as np
import numpy.typing as npt

from ..merit import FomSpec
from ..pointsets import IidPointSet, PointSetDef, SobolNet, default_sobol_spec, point_count
from ..randomize import RandomizationKind, create_randomized_point_set, generate_stream
from ..search import FastCbc, FullCbc, SearchSpec, cbc_search, fast_cbc_search, map_ordered
from ..settings import get_settings
from ..weights import WeightSpec
from .integrands import integrand_values
from .types import ExperimentError, TestIntegrand, VarianceReport, VarianceRow

logger = logging.getLogger(__name__)


def replicate_averages(
    base: PointSetDef,
    *,
    kind: RandomizationKind,
    integrand: TestIntegrand,
    m: int,
    seed: int = 0,
    workers: int = 1,
) -> npt.NDArray[np.float64]:
    """Estimator value of each of the m replicates, in replicate order."""

    def average(replicate: int) -> float:
        rps = create_randomized_point_set(base=base, kind=kind, seed=seed, replicate=replicate)
        return float(np.mean(integrand_values(integrand, generate_stream(rps))))

    return np.asarray(map_ordered(average, list(range(m)), workers))


def fit_slope(ks: Sequence[int], variances: Sequence[float]) -> Optional[float]:
    """Least-squares slope of log2 variance against k; None without two positive points."""
    pairs = [(k, v) for k, v in zip(ks, variances) if v > 0]
    if len(pairs) < 2:
        return None
    x = np.asarray([k for k, _ in pairs], dtype=np.float64)
    y = np.log2([v for _, v in pairs])
    return float(np.polyfit(x, y, 1)[0])


def variance_study(
    definitions: Callable[[int], PointSetDef],
    k_grid: Sequence[int],
    *,
    kind: RandomizationKind,
    integrand: TestIntegrand,
    m: int,
    seed: int = 0,
    workers: Optional[int] = None,
) -> VarianceReport:
    """Sample variance (ddof = 1) of m independent replicate averages per n = 2^k.

    ``definitions(k)`` supplies the point set of each size. Replicates are
    summed in replicate order, so the report does not depend on ``workers``.
    """
    if m < 2:
        raise ExperimentError(f"a variance needs m >= 2 replicates, got {m}")
    if list(k_grid) != sorted(set(k_grid)):
        raise ExperimentError(f"k grid {tuple(k_grid)} is not strictly increasing")
    workers = workers if workers is not None else get_settings().workers
    rows = []
    for k in k_grid:
        base = definitions(k)
        started = time.perf_counter()
        averages = replicate_averages(
            base, kind=kind, integrand=integrand, m=m, seed=seed, workers=workers
        )
        elapsed = time.perf_counter() - started
        row = VarianceRow(
            k=k,
            n=point_count(base),
            variance=max(float(np.var(averages, ddof=1)), 0.0),
            mean=float(np.mean(averages)),
            seconds=elapsed,
        )
        logger.info("k=%d n=%d: variance %.6g (%.2f s)", k, row.n, row.variance, elapsed)
        rows.append(row)
    slope = fit_slope([r.k for r in rows], [r.variance for r in rows])
    return VarianceReport(m=m, rows=tuple(rows), fit_slope=slope)


def monte_carlo_definitions(s: int) -> Callable[[int], PointSetDef]:
    """i.i.d. baseline of 2^k points in dimension s."""
    return lambda k: IidPointSet(n=1 << k, s=s)


def standard_error(variance: float, m: int) -> float:
    return math.sqrt(variance / m)


StudyFamily = Literal["iid", "sobol", "plr", "lattice", "interlaced"]


def searched_definitions(
    family: StudyFamily,
    *,
    s: int,
    weights: WeightSpec,
    interlacing: int = 2,
    seed: int = 0,
) -> Callable[[int], PointSetDef]:
    """Point set of each size for a variance study.

    PLRs are found by fast CBC under P2-tilde, ordinary lattices by CBC under
    P2 and interlaced PLRs by CBC under the I^(c) bound with alpha = d.
    ``weights`` index the s output coordinates, interlaced rules included.
    """
    match family:
        case "iid":
            return monte_carlo_definitions(s)
        case "sobol":
            spec = default_sobol_spec(s)
            return lambda k: SobolNet(spec=spec, s=s, k=k)
        case "plr":
            fom = FomSpec(family="PalphaTilde", weights=weights)
            return lambda k: fast_cbc_search(
                SearchSpec(construction="polynomialLattice", k=k, s=s, fom=fom, method=FastCbc(), seed=seed)
            ).best
        case "lattice":
            fom = FomSpec(family="Palpha", weights=weights)
            return lambda k: cbc_search(
                SearchSpec(construction="ordinaryLattice", n=1 << k, s=s, fom=fom, method=FullCbc(), seed=seed)
            ).best
        case "interlaced":
            fom = FomSpec(family="IAlphaDc", alpha=interlacing, d=interlacing, weights=weights)
            return lambda k: cbc_search(
                SearchSpec(
                    construction="interlaced",
                    k=k,
                    s=s,
                    fom=fom,
                    method=FullCbc(),
                    interlacing=interlacing,
                    seed=seed,
                )
            ).best
    raise ExperimentError(f"unknown construction family {family!r}")
