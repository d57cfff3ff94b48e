from .engine import TIE_TOLERANCE, LinearKernelState, check_fast_cbc, map_ordered, select_best
from .explore import (
    cbc_search,
    create_search_spec,
    exhaustive_search,
    fast_cbc_search,
    korobov_search,
    mixed_cbc_search,
    random_cbc_search,
    random_search,
    run_search,
)
from .objective import Objective, multi_level_merit
from .spaces import (
    Candidate,
    CandidateSpace,
    ExplicitNetSpace,
    InterlacedSpace,
    LatticeSpace,
    PolynomialSpace,
    SobolSpace,
    create_candidate_space,
    euler_phi,
)
from .types import (
    ConstructionKind,
    Exhaustive,
    ExplorationMethod,
    FastCbc,
    FullCbc,
    Korobov,
    LevelCombination,
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

__all__ = [
    # Specification
    "ConstructionKind",
    "ExplorationMethod",
    "Exhaustive",
    "FastCbc",
    "FullCbc",
    "Korobov",
    "LevelCombination",
    "MixedCbc",
    "RandomCbc",
    "RandomKorobov",
    "RandomSampling",
    "SearchSpec",
    "SearchResult",
    # Errors
    "SearchBudgetError",
    "SearchError",
    "UnsupportedSearchError",
    # Candidate spaces
    "Candidate",
    "CandidateSpace",
    "ExplicitNetSpace",
    "InterlacedSpace",
    "LatticeSpace",
    "PolynomialSpace",
    "SobolSpace",
    "create_candidate_space",
    "euler_phi",
    # Objective
    "Objective",
    "multi_level_merit",
    "LinearKernelState",
    "TIE_TOLERANCE",
    "check_fast_cbc",
    "map_ordered",
    "select_best",
    # Searches
    "cbc_search",
    "create_search_spec",
    "exhaustive_search",
    "fast_cbc_search",
    "korobov_search",
    "mixed_cbc_search",
    "random_cbc_search",
    "random_search",
    "run_search",
]
