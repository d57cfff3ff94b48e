"""Unit tests for projection weights."""

from itertools import combinations

import pytest
from pydantic import ValidationError

from qmc_toolkit.merit import interlaced_c_factor
from qmc_toolkit.weights import (
    ExplicitWeights,
    OrderDependentWeights,
    PODWeights,
    ProductWeights,
    WeightError,
    geometric,
    projections,
    raise_weights,
    transform_weights,
    truncate_weights,
    validate_for_dimension,
    weight_of,
)


def all_subsets(s: int) -> list[tuple[int, ...]]:
    return [u for order in range(1, s + 1) for u in combinations(range(1, s + 1), order)]


class TestWeightOf:
    """Test weight lookup for every weight kind."""

    def test_product_of_halves(self) -> None:
        assert weight_of(ProductWeights(gammas=(0.5, 0.5)), (1, 2)) == 0.25

    def test_order_dependent_uses_subset_size(self) -> None:
        weights = OrderDependentWeights(gammas=(0.0, 10.0, 0.1, 0.001))
        assert weight_of(weights, (3, 7)) == 10.0
        assert weight_of(weights, (1, 2, 5)) == 0.1

    def test_order_dependent_default_beyond_list(self) -> None:
        weights = OrderDependentWeights(gammas=(1.0,), default=0.25)
        assert weight_of(weights, (1, 2, 3, 4)) == 0.25

    def test_geometric_product_weights(self) -> None:
        weights = ProductWeights(gammas=(0.7,) * 5)
        assert weight_of(weights, (1, 2, 3)) == pytest.approx(0.343)

    def test_pod_multiplies_both_parts(self) -> None:
        weights = PODWeights(order_gammas=(1.0, 2.0), product_gammas=(0.5, 0.5, 0.5))
        assert weight_of(weights, (1, 3)) == 0.5

    def test_explicit_missing_entry_is_zero(self) -> None:
        weights = ExplicitWeights(entries={(2, 1): 0.5})
        assert weight_of(weights, (1, 2)) == 0.5
        assert weight_of(weights, (1, 3)) == 0.0

    def test_empty_subset_rejected(self) -> None:
        with pytest.raises(WeightError):
            weight_of(ProductWeights(gammas=(1.0,)), ())

    def test_coordinate_beyond_dimension_rejected(self) -> None:
        with pytest.raises(WeightError):
            weight_of(ProductWeights(gammas=(1.0, 1.0)), (3,))
        with pytest.raises(WeightError):
            weight_of(OrderDependentWeights(gammas=(1.0,)), (1, 4), s=3)

    def test_negative_weight_rejected(self) -> None:
        with pytest.raises(ValidationError):
            ProductWeights(gammas=(1.0, -0.5))

    def test_duplicate_explicit_projection_rejected(self) -> None:
        with pytest.raises(ValidationError):
            ExplicitWeights(entries={(1, 2): 0.5, (2, 1): 0.25})


class TestWeightIdentities:
    """Test the relations between weight kinds."""

    def test_product_extension(self) -> None:
        weights = ProductWeights(gammas=(0.9, 0.4, 0.3, 0.2))
        assert weight_of(weights, (1, 2, 4)) == pytest.approx(weight_of(weights, (1, 2)) * 0.2)

    def test_pod_with_unit_product_part_is_order_dependent(self) -> None:
        order = (0.3, 2.0, 0.1, 0.7, 1.5, 0.2)
        pod = PODWeights(order_gammas=order, product_gammas=(1.0,) * 6)
        od = OrderDependentWeights(gammas=order)
        for u in all_subsets(6):
            assert weight_of(pod, u) == weight_of(od, u)

    def test_pod_with_unit_order_part_is_product(self) -> None:
        gammas = (0.9, 0.5, 0.25, 0.8, 0.1, 0.6)
        pod = PODWeights(order_gammas=(1.0,) * 6, product_gammas=gammas)
        product = ProductWeights(gammas=gammas)
        for u in all_subsets(6):
            assert weight_of(pod, u) == weight_of(product, u)


class TestTransformWeights:
    """Test order-dependent rescaling of weights."""

    def test_unit_factor_is_identity(self) -> None:
        weights = PODWeights(order_gammas=(1.0, 0.5, 0.2), product_gammas=(0.9, 0.8, 0.7))
        out = transform_weights(weights, lambda order: 1.0, 3)
        for u in all_subsets(3):
            assert weight_of(out, u) == weight_of(weights, u)

    def test_geometric_factor_keeps_product_kind(self) -> None:
        out = transform_weights(ProductWeights(gammas=(1.0, 1.0)), geometric(interlaced_c_factor(2, 2)), 2)
        assert isinstance(out, ProductWeights)
        assert weight_of(out, (1, 2)) == 4096.0

    def test_sobolev_rescaling_of_singletons(self) -> None:
        out = transform_weights(ProductWeights(gammas=(0.6, 0.3)), geometric(1 / 12), 2)
        assert weight_of(out, (1,)) == pytest.approx(0.6 / 12)

    def test_non_geometric_factor_gives_pod(self) -> None:
        weights = ProductWeights(gammas=(0.5, 0.5, 0.5))
        out = transform_weights(weights, lambda order: float(order), 3)
        assert isinstance(out, PODWeights)
        for u in all_subsets(3):
            assert weight_of(out, u) == pytest.approx(len(u) * weight_of(weights, u))

    def test_transforms_compose(self) -> None:
        weights = OrderDependentWeights(gammas=(1.0, 0.5, 0.25))
        def f(order: int) -> float:
            return 2.0 + order

        def g(order: int) -> float:
            return 1.0 / order

        twice = transform_weights(transform_weights(weights, f, 3), g, 3)
        once = transform_weights(weights, lambda order: f(order) * g(order), 3)
        for u in all_subsets(3):
            assert weight_of(twice, u) == pytest.approx(weight_of(once, u))

    def test_raise_weights(self) -> None:
        out = raise_weights(ExplicitWeights(entries={(1, 2): 0.5}), 2.0, 2)
        assert weight_of(out, (1, 2)) == 0.25


class TestProjections:
    """Test enumeration and restriction of weighted projections."""

    def test_zero_orders_are_skipped(self) -> None:
        weights = OrderDependentWeights(gammas=(0.0, 1.0))
        assert list(projections(weights, 3)) == [(1, 2), (1, 3), (2, 3)]

    def test_explicit_projections_within_dimension(self) -> None:
        weights = ExplicitWeights(entries={(1, 2): 1.0, (2, 5): 1.0})
        assert list(projections(weights, 4)) == [(1, 2)]

    def test_truncate_product_weights(self) -> None:
        out = truncate_weights(ProductWeights(gammas=(0.5, 0.4, 0.3)), 2)
        assert out == ProductWeights(gammas=(0.5, 0.4))

    def test_validate_for_dimension(self) -> None:
        validate_for_dimension(OrderDependentWeights(gammas=(1.0,)), 10)
        with pytest.raises(WeightError):
            validate_for_dimension(ProductWeights(gammas=(1.0,)), 2)
