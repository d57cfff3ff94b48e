"""qmc-toolkit - construction, search and randomization of QMC point sets."""

from qmc_toolkit.errors import QmcToolkitError
from qmc_toolkit.experiments import fom_quantile_study, variance_study
from qmc_toolkit.merit import FomSpec, MeritValue, evaluate
from qmc_toolkit.pointsets import (
    DigitalNetBase2,
    InterlacedNet,
    PointSetDef,
    PolynomialLatticeRule,
    Rank1Lattice,
    SobolNet,
    generate_points,
)
from qmc_toolkit.randomize import create_randomized_point_set, generate_stream
from qmc_toolkit.search import SearchResult, SearchSpec, create_search_spec, run_search
from qmc_toolkit.settings import ToolkitSettings, get_settings
from qmc_toolkit.weights import (
    ExplicitWeights,
    OrderDependentWeights,
    PODWeights,
    ProductWeights,
)

__all__ = [
    # Point sets
    "DigitalNetBase2",
    "InterlacedNet",
    "PointSetDef",
    "PolynomialLatticeRule",
    "Rank1Lattice",
    "SobolNet",
    "generate_points",
    # Weights and merits
    "ExplicitWeights",
    "FomSpec",
    "MeritValue",
    "OrderDependentWeights",
    "PODWeights",
    "ProductWeights",
    "evaluate",
    # Simplified factories (recommended)
    "create_randomized_point_set",
    "create_search_spec",
    # Search and studies
    "SearchResult",
    "SearchSpec",
    "fom_quantile_study",
    "generate_stream",
    "run_search",
    "variance_study",
    # Configuration
    "QmcToolkitError",
    "ToolkitSettings",
    "get_settings",
]
