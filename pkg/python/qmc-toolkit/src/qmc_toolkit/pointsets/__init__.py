from .generate import generate_points, leading_coordinates, point_count, to_digital_net
from .interlace import interlace, interlace_points, interlaced_rows
from .lattice import korobov_vector, lattice_point, lattice_points
from .net import (
    hoplr_net,
    hoplr_points,
    net_point,
    net_points,
    net_prefix,
    plr_to_net,
    random_regular_matrix,
    validate_net,
    with_digits,
)
from .sobol import default_sobol_spec, direction_numbers, sobol_matrix, sobol_net
from .types import (
    DigitalNetBase2,
    HigherOrderPLR,
    IidPointSet,
    InterlacedNet,
    Points,
    PointSetDef,
    PointSetError,
    PolynomialLatticeRule,
    Rank1Lattice,
    SobolNet,
    SobolSpec,
)

__all__ = [
    # Definitions
    "DigitalNetBase2",
    "HigherOrderPLR",
    "IidPointSet",
    "InterlacedNet",
    "PointSetDef",
    "PolynomialLatticeRule",
    "Rank1Lattice",
    "SobolNet",
    "SobolSpec",
    "Points",
    "PointSetError",
    # Generation
    "default_sobol_spec",
    "direction_numbers",
    "generate_points",
    "hoplr_net",
    "hoplr_points",
    "interlace",
    "interlace_points",
    "interlaced_rows",
    "korobov_vector",
    "leading_coordinates",
    "lattice_point",
    "lattice_points",
    "net_point",
    "net_points",
    "net_prefix",
    "plr_to_net",
    "point_count",
    "random_regular_matrix",
    "sobol_matrix",
    "sobol_net",
    "to_digital_net",
    "validate_net",
    "with_digits",
]
