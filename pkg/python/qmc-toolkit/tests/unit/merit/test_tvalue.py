"""Unit tests for t-values and the t-value figures of merit."""

import math

import pytest

from qmc_toolkit.gf2 import GeneratingMatrix
from qmc_toolkit.merit import (
    FomSpec,
    MeritError,
    box_count_t_value,
    compositions,
    evaluate,
    oracle_t_value_box_count,
    t_value,
    t_value_bound,
)
from qmc_toolkit.pointsets import DigitalNetBase2, net_points, random_regular_matrix
from qmc_toolkit.rng import stream
from qmc_toolkit.weights import OrderDependentWeights


def repeated_identity(k: int, s: int) -> DigitalNetBase2:
    return DigitalNetBase2(k=k, w=k, matrices=(GeneratingMatrix.identity(k),) * s)


class TestTValue:
    """Test t-values from ranks against box counting."""

    def test_compositions(self) -> None:
        assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]

    def test_one_dimensional_projection(self) -> None:
        net = repeated_identity(4, 2)
        assert t_value(net, (1,)) == 0
        assert oracle_t_value_box_count(net, (2,)) == 0

    def test_duplicated_coordinate(self) -> None:
        net = repeated_identity(4, 2)
        assert t_value(net, (1, 2)) == 3
        assert oracle_t_value_box_count(net, (1, 2)) == 3

    def test_matches_box_count_on_random_nets(self) -> None:
        gen = stream(1, "tvalue")
        for trial in range(30):
            k = 2 + trial % 5
            s = 2 + trial % 2
            net = DigitalNetBase2(
                k=k, w=k, matrices=tuple(random_regular_matrix(gen, k, k) for _ in range(s))
            )
            u = tuple(range(1, s + 1))
            assert t_value(net, u) == oracle_t_value_box_count(net, u)
            assert t_value(net, (1, s)) == oracle_t_value_box_count(net, (1, s))

    def test_empty_projection_rejected(self) -> None:
        with pytest.raises(MeritError):
            t_value(repeated_identity(2, 1), ())

    def test_box_count_guard(self) -> None:
        with pytest.raises(MeritError):
            oracle_t_value_box_count(repeated_identity(9, 1), (1,))

    def test_box_count_needs_a_full_digital_set(self) -> None:
        points = net_points(repeated_identity(3, 1))
        with pytest.raises(MeritError, match=r"needs 2\^3 points"):
            box_count_t_value(points._replace(values=points.values[:4]), 3, (1,))
        with pytest.raises(MeritError, match="binary digits"):
            box_count_t_value(points._replace(digits=None), 3, (1,))


class TestTValueFigures:
    """Test the discrepancy bound and raw t-value criteria."""

    def test_bound_for_perfect_singleton(self) -> None:
        assert t_value_bound(0, 5, 1) == 2.0**-5

    def test_bound_for_worst_case(self) -> None:
        assert t_value_bound(5, 5, 3) == 1.0

    def test_bound_sum(self) -> None:
        assert t_value_bound(1, 4, 3) == pytest.approx(2 / 16 * (1 + 3 + 3))

    def test_weighted_max_of_raw_t_values(self) -> None:
        net = repeated_identity(3, 3)
        spec = FomSpec(
            family="TValueRaw", q=math.inf, weights=OrderDependentWeights(gammas=(0.0, 1.0, 0.5))
        )
        merit = evaluate(net, spec)
        assert merit.total == 2.0
        assert merit.per_projection == {(1, 2): 2.0, (1, 3): 2.0, (2, 3): 2.0, (1, 2, 3): 2.0}

    def test_sum_of_raw_t_values(self) -> None:
        net = repeated_identity(3, 3)
        spec = FomSpec(family="TValueRaw", q=1, weights=OrderDependentWeights(gammas=(0.0, 1.0)))
        assert evaluate(net, spec).total == 6.0
