"""Distribution of a figure of merit over randomly drawn constructions."""

import logging
from typing import Literal, Optional, Sequence

import numpy as np

from ..merit import FomSpec, evaluate
from ..pointsets import PointSetDef
from ..rng import stream
from ..search import (
    FastCbc,
    RandomSampling,
    SearchSpec,
    UnsupportedSearchError,
    cbc_search,
    create_candidate_space,
    fast_cbc_search,
    map_ordered,
)
from ..settings import get_settings
from .types import ExperimentError, QuantileRow

logger = logging.getLogger(__name__)

SampledFamily = Literal["plr", "sobol", "explicit"]

_CONSTRUCTIONS = {"plr": "polynomialLattice", "sobol": "sobol", "explicit": "explicitNet"}


def _reference_merit(k: int, s: int, fom: FomSpec, seed: int) -> float:
    spec = SearchSpec(construction="polynomialLattice", k=k, s=s, fom=fom, method=FastCbc(), seed=seed)
    try:
        return fast_cbc_search(spec).merit.total
    except UnsupportedSearchError:
        logger.warning("fast-CBC does not apply to %s; using full CBC for the reference", fom.family)
        return cbc_search(spec).merit.total


def fom_quantile_study(
    *,
    family: SampledFamily,
    fom: FomSpec,
    k_grid: Sequence[int],
    sample_size: int,
    s: int,
    quantiles: Sequence[float] = (0.1, 0.5, 0.9),
    seed: int = 0,
    reference: bool = False,
    workers: Optional[int] = None,
) -> list[QuantileRow]:
    """Empirical quantiles of ``fom`` over ``sample_size`` uniform draws per k.

    Every coordinate of draw i at size k comes from the substream
    ("quantiles", family, k, i), so rows are reproducible for a given seed.
    PLRs draw each polynomial uniformly among the units, Sobol' nets draw
    each odd direction number uniformly and explicit nets draw matrices
    with an invertible top block by rejection.
    """
    if sample_size < 1:
        raise ExperimentError(f"sample_size must be >= 1, got {sample_size}")
    if any(not 0 <= q <= 1 for q in quantiles):
        raise ExperimentError(f"quantile levels must lie in [0, 1], got {tuple(quantiles)}")
    workers = workers if workers is not None else get_settings().workers
    levels = sorted(quantiles)
    rows = []
    for k in k_grid:
        spec = SearchSpec(
            construction=_CONSTRUCTIONS[family],  # type: ignore[arg-type]
            k=k,
            s=s,
            fom=fom,
            method=RandomSampling(r=sample_size),
            seed=seed,
        )
        space = create_candidate_space(spec, fix_first=False)

        def draw(i: int) -> PointSetDef:
            gen = stream(seed, "quantiles", family, k, i)
            return space.build([space.sample(gen, j) for j in range(1, s + 1)])

        definitions = [draw(i) for i in range(sample_size)]
        values = map_ordered(lambda d: evaluate(d, fom).total, definitions, workers)
        qs = np.quantile(np.asarray(values), levels)
        row = QuantileRow(
            k=k,
            quantiles={q: float(v) for q, v in zip(levels, qs)},
            reference=_reference_merit(k, s, fom, seed) if reference else None,
        )
        logger.info("Quantiles of %s for %s at k=%d: %s", fom.family, family, k, row.quantiles)
        rows.append(row)
    return rows
