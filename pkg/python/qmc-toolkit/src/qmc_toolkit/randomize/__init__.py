from .generate import create_randomized_point_set, generate_stream, randomized_points
from .scramble import (
    digital_shift,
    lms,
    nus,
    nus_points,
    random_lower_triangular,
    shift_lattice,
)
from .types import (
    DIGITAL_RANDOMIZATIONS,
    Randomization,
    RandomizationError,
    RandomizationKind,
    RandomizedPointSet,
)

__all__ = [
    # Types
    "DIGITAL_RANDOMIZATIONS",
    "Randomization",
    "RandomizationError",
    "RandomizationKind",
    "RandomizedPointSet",
    # Scrambles
    "digital_shift",
    "lms",
    "nus",
    "nus_points",
    "random_lower_triangular",
    "shift_lattice",
    # Generation
    "create_randomized_point_set",
    "generate_stream",
    "randomized_points",
]
