"""Exploration methods over the candidate spaces."""

import itertools
import logging
import math
from typing import Any, Optional, Sequence

from ..merit import T_VALUE_FAMILIES, FomSpec, MeritValue, evaluate
from ..pointsets import PointSetDef, Rank1Lattice, korobov_vector
from ..rng import stream
from ..settings import get_settings
from .engine import (
    CoordinateEvaluator,
    DefinitionEvaluator,
    FastCbcEvaluator,
    KernelEvaluator,
    map_ordered,
    select_best,
)
from .objective import multi_level_merit
from .spaces import Candidate, CandidateSpace, LatticeSpace, create_candidate_space
from .types import (
    ConstructionKind,
    Exhaustive,
    ExplorationMethod,
    FastCbc,
    FullCbc,
    Korobov,
    MixedCbc,
    RandomCbc,
    RandomKorobov,
    RandomSampling,
    SearchBudgetError,
    SearchError,
    SearchResult,
    SearchSpec,
    UnsupportedSearchError,
)

logger = logging.getLogger(__name__)


def _workers(spec: SearchSpec) -> int:
    return spec.workers if spec.workers is not None else get_settings().workers


def _final_merit(best: PointSetDef, spec: SearchSpec) -> MeritValue:
    if spec.multi_level is None and spec.dimension_levels is None:
        return evaluate(best, spec.fom)
    return MeritValue(total=multi_level_merit(best, spec))


def _best_of(
    spec: SearchSpec, definitions: Sequence[PointSetDef], label: str
) -> SearchResult:
    if not definitions:
        raise SearchError(f"{label}: no admissible candidate")
    values = map_ordered(lambda d: multi_level_merit(d, spec), definitions, _workers(spec))
    best = definitions[select_best(values)]
    result = SearchResult(best=best, merit=_final_merit(best, spec), evaluations=len(definitions))
    logger.info(
        "%s search over %d candidates: merit %.12g", label, len(definitions), result.merit.total
    )
    return result


def exhaustive_search(spec: SearchSpec) -> SearchResult:
    """Global minimum over every combination of coordinate candidates."""
    space = create_candidate_space(spec, fix_first=False)
    guard = get_settings().exhaustive_guard
    cardinality = math.prod(space.size(j) for j in range(1, space.coordinates + 1))
    if cardinality > guard:
        raise SearchBudgetError(
            f"Candidate space has {cardinality} elements, above the exhaustive guard of {guard}"
        )
    lists = [space.enumerate(j) for j in range(1, space.coordinates + 1)]
    definitions = [space.build(choice) for choice in itertools.product(*lists)]
    return _best_of(spec, definitions, "exhaustive")


def random_search(spec: SearchSpec, r: int) -> SearchResult:
    """Best of r candidates drawn uniformly with replacement.

    Coordinate j of every draw comes from substream ("random", j).
    """
    if r < 1:
        raise SearchError(f"r must be >= 1, got {r}")
    space = create_candidate_space(spec, fix_first=False)
    draws = []
    for j in range(1, space.coordinates + 1):
        gen = stream(spec.seed, "random", j)
        draws.append([space.sample(gen, j) for _ in range(r)])
    vectors = sorted(set(zip(*draws)))  # type: ignore[type-var]
    return _best_of(spec, [space.build(v) for v in vectors], "random")


def korobov_search(spec: SearchSpec, random: bool = False, r: Optional[int] = None) -> SearchResult:
    """Best Korobov vector (1, a, a^2, ...) mod n over all units a, or over r draws."""
    if spec.construction != "ordinaryLattice":
        raise UnsupportedSearchError(
            f"Korobov search needs an ordinary lattice, not {spec.construction}"
        )
    n = spec.point_count
    space = LatticeSpace(n, spec.s, fix_first=False, symmetric=False)
    if random:
        if r is None or r < 1:
            raise SearchError("random Korobov search needs r >= 1")
        gen = stream(spec.seed, "korobov")
        params = sorted({space.sample(gen, 2) for _ in range(r)})  # type: ignore[type-var]
    else:
        params = space.enumerate(2)
    definitions: list[PointSetDef] = [
        Rank1Lattice(n=n, gen=korobov_vector(a, spec.s, n))
        for a in params
        if isinstance(a, int)
    ]
    return _best_of(spec, definitions, "random-Korobov" if random else "Korobov")


def _evaluator(spec: SearchSpec, space: CandidateSpace, fast: bool) -> CoordinateEvaluator:
    workers = _workers(spec)
    if fast:
        return FastCbcEvaluator(spec, space, workers)
    if spec.fom.family in T_VALUE_FAMILIES:
        return DefinitionEvaluator(spec, space, workers)
    return KernelEvaluator(spec, space, workers)


def _cbc(spec: SearchSpec, samples: Sequence[Optional[int]], *, fast: bool, label: str) -> SearchResult:
    """CBC driver; ``samples[j - 1]`` is None for a full step or r for an r-sample step."""
    space = create_candidate_space(spec, fix_first=True)
    evaluator = _evaluator(spec, space, fast)
    logger.info(
        "%s search: %s, n = %d, %d coordinates, %s",
        label,
        spec.construction,
        space.n,
        space.coordinates,
        spec.fom.family,
    )
    trace = []
    evaluations = 0
    for j in range(1, space.coordinates + 1):
        r = samples[j - 1]
        candidates: list[Candidate]
        if r is None:
            candidates = space.enumerate(j)
        else:
            gen = stream(spec.seed, "cbc", j)
            candidates = sorted({space.sample(gen, j) for _ in range(r)})  # type: ignore[type-var]
        values = evaluator.evaluate(j, candidates)
        index = select_best(values)
        evaluator.commit(j, candidates[index])
        trace.append(float(values[index]))
        evaluations += len(candidates)
        logger.debug(
            "coordinate %d: chose %s among %d candidates, objective %.12g",
            j,
            candidates[index],
            len(candidates),
            values[index],
        )
    best = space.build(evaluator.choices)
    merit = _final_merit(best, spec)
    logger.info("%s search done: merit %.12g after %d evaluations", label, merit.total, evaluations)
    return SearchResult(
        best=best, merit=merit, evaluations=evaluations, per_coordinate_merits=tuple(trace)
    )


def cbc_search(spec: SearchSpec) -> SearchResult:
    """Each coordinate in turn minimizes the merit given the coordinates before it."""
    return _cbc(spec, [None] * spec.coordinates, fast=False, label="full-CBC")


def fast_cbc_search(spec: SearchSpec) -> SearchResult:
    """Same result as :func:`cbc_search`, each step computed by FFT over the unit group."""
    return _cbc(spec, [None] * spec.coordinates, fast=True, label="fast-CBC")


def random_cbc_search(spec: SearchSpec, r: int) -> SearchResult:
    if r < 1:
        raise SearchError(f"r must be >= 1, got {r}")
    return _cbc(spec, [r] * spec.coordinates, fast=False, label="random-CBC")


def mixed_cbc_search(spec: SearchSpec, r: int, pivot: int) -> SearchResult:
    """Full CBC for coordinates before ``pivot``, r-sample random CBC from it on."""
    if r < 1:
        raise SearchError(f"r must be >= 1, got {r}")
    if not 1 <= pivot <= spec.coordinates + 1:
        raise SearchError(f"pivot {pivot} not in [1, {spec.coordinates + 1}]")
    samples = [None if j < pivot else r for j in range(1, spec.coordinates + 1)]
    return _cbc(spec, samples, fast=False, label="mixed-CBC")


def run_search(spec: SearchSpec) -> SearchResult:
    """Dispatch on ``spec.method``."""
    match spec.method:
        case Exhaustive():
            return exhaustive_search(spec)
        case RandomSampling(r=r):
            return random_search(spec, r)
        case FullCbc():
            return cbc_search(spec)
        case FastCbc():
            return fast_cbc_search(spec)
        case RandomCbc(r=r):
            return random_cbc_search(spec, r)
        case Korobov():
            return korobov_search(spec)
        case RandomKorobov(r=r):
            return korobov_search(spec, random=True, r=r)
        case MixedCbc(r=r, pivot=pivot):
            return mixed_cbc_search(spec, r, pivot)
    raise SearchError(f"Unknown exploration method {spec.method!r}")  # pragma: no cover


def create_search_spec(
    *,
    construction: ConstructionKind,
    s: int,
    fom: FomSpec,
    method: Optional[ExplorationMethod] = None,
    k: Optional[int] = None,
    n: Optional[int] = None,
    seed: int = 0,
    **options: Any,
) -> SearchSpec:
    """Search specification with full CBC as the default method.

    ``options`` are the remaining :class:`SearchSpec` fields (``multi_level``,
    ``interlacing``, ``modulus``...).
    """
    return SearchSpec(
        construction=construction,
        s=s,
        fom=fom,
        method=method or FullCbc(),
        k=k,
        n=n,
        seed=seed,
        **options,
    )
