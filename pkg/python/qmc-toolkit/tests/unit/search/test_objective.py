"""Unit tests for multi-level objectives and candidate selection."""

import time

import pytest
from pydantic import ValidationError

from qmc_toolkit.merit import FomSpec, evaluate
from qmc_toolkit.pointsets import (
    Rank1Lattice,
    SobolNet,
    default_sobol_spec,
    leading_coordinates,
    net_prefix,
    to_digital_net,
)
from qmc_toolkit.search import (
    TIE_TOLERANCE,
    LevelCombination,
    create_search_spec,
    map_ordered,
    multi_level_merit,
    select_best,
)
from qmc_toolkit.weights import ProductWeights

P2 = FomSpec(family="Palpha", alpha=2, weights=ProductWeights(gammas=(1.0, 0.5)))


class TestMultiLevelMerit:
    """Test merits combined over embedded point counts and dimensions."""

    def test_single_level_is_plain_merit(self) -> None:
        lat = Rank1Lattice(n=8, gen=(1, 3))
        spec = create_search_spec(construction="ordinaryLattice", n=8, s=2, fom=P2)
        assert multi_level_merit(lat, spec) == evaluate(lat, P2).total

    def test_two_level_sum_on_embedded_lattices(self) -> None:
        lat = Rank1Lattice(n=8, gen=(1, 3))
        spec = create_search_spec(
            construction="ordinaryLattice", n=8, s=2, fom=P2, multi_level=LevelCombination(first=2)
        )
        by_hand = evaluate(Rank1Lattice(n=4, gen=(1, 3)), P2).total + evaluate(lat, P2).total
        assert multi_level_merit(lat, spec) == pytest.approx(by_hand, rel=1e-12)

    def test_max_combiner_dominates_levels(self) -> None:
        lat = Rank1Lattice(n=16, gen=(1, 5))
        spec = create_search_spec(
            construction="ordinaryLattice",
            n=16,
            s=2,
            fom=P2,
            multi_level=LevelCombination(first=2, combiner="max"),
        )
        value = multi_level_merit(lat, spec)
        for n in (4, 8, 16):
            level = Rank1Lattice(n=n, gen=tuple(a % n for a in lat.gen))
            assert value >= evaluate(level, P2).total - 1e-12

    def test_net_levels_are_prefixes(self) -> None:
        fom = FomSpec(family="PalphaTilde", weights=ProductWeights(gammas=(1.0, 1.0, 1.0)))
        net = SobolNet(spec=default_sobol_spec(3), s=3, k=5)
        spec = create_search_spec(
            construction="sobol", k=5, s=3, fom=fom, multi_level=LevelCombination(first=4, weights=(2.0, 1.0))
        )
        prefix = net_prefix(to_digital_net(net), 4)
        by_hand = 2.0 * evaluate(prefix, fom).total + evaluate(net, fom).total
        assert multi_level_merit(net, spec) == pytest.approx(by_hand, rel=1e-12)

    def test_dimension_levels(self) -> None:
        lat = Rank1Lattice(n=8, gen=(1, 3))
        spec = create_search_spec(
            construction="ordinaryLattice", n=8, s=2, fom=P2, dimension_levels=LevelCombination(first=1)
        )
        by_hand = evaluate(leading_coordinates(lat, 1), P2).total + evaluate(lat, P2).total
        assert multi_level_merit(lat, spec) == pytest.approx(by_hand, rel=1e-12)

    def test_negative_level_weight_rejected(self) -> None:
        with pytest.raises(ValidationError):
            LevelCombination(first=2, weights=(1.0, -1.0))

    def test_level_weight_count_checked(self) -> None:
        with pytest.raises(ValidationError):
            create_search_spec(
                construction="ordinaryLattice",
                n=8,
                s=2,
                fom=P2,
                multi_level=LevelCombination(first=1, weights=(1.0,)),
            )


class TestSelection:
    """Test tie-breaking and ordered parallel evaluation."""

    def test_first_minimum_wins(self) -> None:
        assert select_best([2.0, 1.0, 1.0]) == 1

    def test_near_ties_resolve_to_earlier_candidate(self) -> None:
        assert select_best([1.0 + TIE_TOLERANCE / 10, 1.0]) == 0
        assert select_best([1.0 + 1e-6, 1.0]) == 1

    def test_map_ordered_keeps_input_order(self) -> None:
        def slow_identity(x: int) -> int:
            time.sleep(0.001 * (5 - x))
            return x

        assert map_ordered(slow_identity, list(range(5)), workers=4) == [0, 1, 2, 3, 4]
