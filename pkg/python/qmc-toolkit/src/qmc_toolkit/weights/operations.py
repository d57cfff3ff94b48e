import math
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from .types import (
    ExplicitWeights,
    OrderDependentWeights,
    PODWeights,
    ProductWeights,
    WeightError,
    WeightSpec,
)

OrderFactor = Callable[[int], float]


def _order_gamma(gammas: Sequence[float], default: float, order: int) -> float:
    return gammas[order - 1] if order <= len(gammas) else default


def _product(gammas: Sequence[float], u: Sequence[int]) -> float:
    out = 1.0
    for j in u:
        if j > len(gammas):
            raise WeightError(f"Coordinate {j} is beyond the {len(gammas)} declared weights")
        out *= gammas[j - 1]
    return out


def weight_of(spec: WeightSpec, u: Iterable[int], s: int | None = None) -> float:
    """Weight of the projection u (1-based coordinates)."""
    subset = tuple(sorted(set(u)))
    if not subset:
        raise WeightError("Weights are defined for nonempty subsets only")
    if subset[0] < 1:
        raise WeightError(f"Coordinates are 1-based, got {subset}")
    if s is not None and subset[-1] > s:
        raise WeightError(f"Coordinate {subset[-1]} is beyond s = {s}")
    match spec:
        case ProductWeights():
            return _product(spec.gammas, subset)
        case OrderDependentWeights():
            return _order_gamma(spec.gammas, spec.default, len(subset))
        case PODWeights():
            return _order_gamma(spec.order_gammas, spec.default, len(subset)) * _product(
                spec.product_gammas, subset
            )
        case ExplicitWeights():
            return spec.entries.get(subset, 0.0)
    raise WeightError(f"Unknown weight kind {spec!r}")


def order_weights(spec: OrderDependentWeights | PODWeights, s: int) -> list[float]:
    """Gamma_1, ..., Gamma_s."""
    gammas = spec.gammas if isinstance(spec, OrderDependentWeights) else spec.order_gammas
    return [_order_gamma(gammas, spec.default, order) for order in range(1, s + 1)]


def _geometric_ratio(factor: OrderFactor, s: int) -> float | None:
    ratio = factor(1)
    for order in range(2, s + 1):
        if not math.isclose(factor(order), ratio**order, rel_tol=1e-12, abs_tol=0.0):
            return None
    return ratio


def transform_weights(spec: WeightSpec, factor: OrderFactor, s: int) -> WeightSpec:
    """Weights gamma_u * factor(|u|) for projections of up to s coordinates.

    Product weights stay product weights when the factor is geometric
    (factor(l) = r^l); otherwise they become POD weights.
    """
    match spec:
        case ProductWeights():
            ratio = _geometric_ratio(factor, s)
            if ratio is not None:
                return ProductWeights(gammas=tuple(g * ratio for g in spec.gammas))
            return PODWeights(
                order_gammas=tuple(factor(order) for order in range(1, s + 1)),
                product_gammas=spec.gammas,
            )
        case OrderDependentWeights():
            return OrderDependentWeights(
                gammas=tuple(g * factor(o) for o, g in enumerate(order_weights(spec, s), 1))
            )
        case PODWeights():
            return PODWeights(
                order_gammas=tuple(g * factor(o) for o, g in enumerate(order_weights(spec, s), 1)),
                product_gammas=spec.product_gammas,
            )
        case ExplicitWeights():
            return ExplicitWeights(
                entries={u: g * factor(len(u)) for u, g in spec.entries.items()}
            )
    raise WeightError(f"Unknown weight kind {spec!r}")


def raise_weights(spec: WeightSpec, q: float, s: int) -> WeightSpec:
    """Weights gamma_u^q."""
    if q == 1:
        return spec
    match spec:
        case ProductWeights():
            return ProductWeights(gammas=tuple(g**q for g in spec.gammas))
        case OrderDependentWeights():
            return OrderDependentWeights(gammas=tuple(g**q for g in order_weights(spec, s)))
        case PODWeights():
            return PODWeights(
                order_gammas=tuple(g**q for g in order_weights(spec, s)),
                product_gammas=tuple(g**q for g in spec.product_gammas),
            )
        case ExplicitWeights():
            return ExplicitWeights(entries={u: g**q for u, g in spec.entries.items()})
    raise WeightError(f"Unknown weight kind {spec!r}")


def truncate_weights(spec: WeightSpec, s: int) -> WeightSpec:
    """Weights restricted to coordinates 1..s."""
    match spec:
        case ProductWeights():
            if s > len(spec.gammas):
                raise WeightError(f"Only {len(spec.gammas)} product weights for s = {s}")
            return ProductWeights(gammas=spec.gammas[:s])
        case PODWeights():
            if s > len(spec.product_gammas):
                raise WeightError(f"Only {len(spec.product_gammas)} product weights for s = {s}")
            return PODWeights(
                order_gammas=spec.order_gammas,
                product_gammas=spec.product_gammas[:s],
                default=spec.default,
            )
        case ExplicitWeights():
            return ExplicitWeights(entries={u: g for u, g in spec.entries.items() if u[-1] <= s})
    return spec


def projections(spec: WeightSpec, s: int, max_order: int | None = None) -> Iterator[tuple[int, ...]]:
    """Nonempty projections of {1..s} that may carry a nonzero weight."""
    if isinstance(spec, ExplicitWeights):
        for u in sorted(spec.entries):
            if u[-1] <= s and (max_order is None or len(u) <= max_order):
                yield u
        return
    top = s if max_order is None else min(s, max_order)
    orders = order_weights(spec, top) if isinstance(spec, (OrderDependentWeights, PODWeights)) else None
    for order in range(1, top + 1):
        if orders is not None and orders[order - 1] == 0:
            continue
        yield from combinations(range(1, s + 1), order)


def geometric(ratio: float) -> OrderFactor:
    """factor(l) = ratio^l."""
    return lambda order: ratio**order


def validate_for_dimension(spec: WeightSpec, s: int) -> None:
    """Raise if product weights do not cover coordinates 1..s."""
    if isinstance(spec, ProductWeights) and len(spec.gammas) < s:
        raise WeightError(f"Coordinate {len(spec.gammas) + 1} is beyond the declared product weights")
    if isinstance(spec, PODWeights) and len(spec.product_gammas) < s:
        raise WeightError(
            f"Coordinate {len(spec.product_gammas) + 1} is beyond the declared product weights"
        )
