from .operations import (
    OrderFactor,
    geometric,
    order_weights,
    projections,
    raise_weights,
    transform_weights,
    truncate_weights,
    validate_for_dimension,
    weight_of,
)
from .types import (
    ExplicitWeights,
    OrderDependentWeights,
    PODWeights,
    ProductWeights,
    WeightError,
    WeightSpec,
)

__all__ = [
    "ExplicitWeights",
    "OrderDependentWeights",
    "OrderFactor",
    "PODWeights",
    "ProductWeights",
    "WeightError",
    "WeightSpec",
    "geometric",
    "order_weights",
    "projections",
    "raise_weights",
    "transform_weights",
    "truncate_weights",
    "validate_for_dimension",
    "weight_of",
]
