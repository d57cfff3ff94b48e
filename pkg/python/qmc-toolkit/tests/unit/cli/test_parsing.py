"""Unit tests for command-line token grammars."""

import math

import pytest

from qmc_toolkit.cli import (
    CliError,
    parse_exploration,
    parse_fom,
    parse_levels,
    parse_norm,
    parse_size,
    parse_weights,
)
from qmc_toolkit.search import FastCbc, FullCbc, MixedCbc, RandomCbc, RandomSampling
from qmc_toolkit.weights import (
    ExplicitWeights,
    OrderDependentWeights,
    PODWeights,
    ProductWeights,
)

UNIT = ProductWeights(gammas=(1.0, 1.0))


class TestParseSize:
    """Test point-count tokens."""

    def test_power_of_two(self) -> None:
        assert parse_size("2^10") == (1024, 10)
        assert parse_size(" 2 ^ 3 ") == (8, 3)

    def test_plain_integer(self) -> None:
        assert parse_size("1021") == (1021, None)
        assert parse_size("64") == (64, 6)

    @pytest.mark.parametrize("token", ["1", "abc", "2^x"])
    def test_invalid(self, token: str) -> None:
        with pytest.raises(CliError):
            parse_size(token)


class TestParseNorm:
    """Test norm exponents."""

    def test_values(self) -> None:
        assert parse_norm("2") == 2.0
        assert parse_norm("inf") == math.inf

    def test_below_one(self) -> None:
        with pytest.raises(CliError, match=">= 1"):
            parse_norm("0.5")


class TestParseWeights:
    """Test weight grammars."""

    def test_product_single_value_is_repeated(self) -> None:
        assert parse_weights("product:0.5", 3) == ProductWeights(gammas=(0.5, 0.5, 0.5))

    def test_product_with_default(self) -> None:
        assert parse_weights("product:0.1:1,2", 4) == ProductWeights(gammas=(1.0, 2.0, 0.1, 0.1))

    def test_product_list_too_short(self) -> None:
        with pytest.raises(CliError):
            parse_weights("product:1,2", 3)

    def test_order_dependent_drops_placeholder(self) -> None:
        weights = parse_weights("order-dependent:0,0,10.,0.1,0.001", 5)
        assert weights == OrderDependentWeights(gammas=(0.0, 10.0, 0.1, 0.001))

    def test_order_dependent_with_default(self) -> None:
        weights = parse_weights("order-dependent:0.5:1,2", 5)
        assert weights == OrderDependentWeights(gammas=(1.0, 2.0), default=0.5)

    def test_pod(self) -> None:
        weights = parse_weights("POD:1,0.5:0.9", 3)
        assert weights == PODWeights(order_gammas=(1.0, 0.5), product_gammas=(0.9, 0.9, 0.9))

    def test_explicit(self) -> None:
        weights = parse_weights("explicit:{1,2}=0.5;{3}=0.1", 3)
        assert isinstance(weights, ExplicitWeights)
        assert weights.entries == {(1, 2): 0.5, (3,): 0.1}

    def test_negative_weight(self) -> None:
        with pytest.raises(CliError, match="invalid weights"):
            parse_weights("product:-1", 2)

    @pytest.mark.parametrize("token", ["uniform:1", "product", "explicit:1,2=3"])
    def test_unparseable(self, token: str) -> None:
        with pytest.raises(CliError):
            parse_weights(token, 2)


class TestParseFom:
    """Test figure-of-merit names."""

    def test_palpha(self) -> None:
        fom = parse_fom("P4", q=2.0, weights=UNIT, lattice=True)
        assert (fom.family, fom.alpha) == ("Palpha", 4.0)

    def test_coordinate_uniform_alias(self) -> None:
        assert parse_fom("CU:P2", q=2.0, weights=UNIT, lattice=True).family == "Palpha"
        assert parse_fom("CU:P2", q=2.0, weights=UNIT, lattice=False).family == "PalphaTilde"

    def test_interlaced(self) -> None:
        fom = parse_fom("IC:3:3", q=1.0, weights=UNIT, lattice=False)
        assert (fom.family, fom.alpha, fom.d) == ("IAlphaDc", 3.0, 3)

    def test_projection_dependent_t_value(self) -> None:
        fom = parse_fom("projdep:t-value", q=parse_norm("inf"), weights=UNIT, lattice=False)
        assert fom.family == "TValueRaw"
        assert fom.q == math.inf

    @pytest.mark.parametrize(("name", "family"), [("sobolev1", "Sobolev1"), ("R2prime", "R2prime"), ("t-bound", "TValueBound")])
    def test_named(self, name: str, family: str) -> None:
        assert parse_fom(name, q=2.0, weights=UNIT, lattice=False).family == family

    def test_odd_alpha_rejected(self) -> None:
        with pytest.raises(CliError, match="invalid figure of merit"):
            parse_fom("P3", q=2.0, weights=UNIT, lattice=True)

    def test_unknown(self) -> None:
        with pytest.raises(CliError, match="unknown figure of merit"):
            parse_fom("spectral", q=2.0, weights=UNIT, lattice=True)


class TestParseExploration:
    """Test exploration method names."""

    def test_methods(self) -> None:
        assert parse_exploration("full-CBC") == FullCbc()
        assert parse_exploration("fast-CBC") == FastCbc()
        assert parse_exploration("random:30") == RandomSampling(r=30)
        assert parse_exploration("random-CBC:7") == RandomCbc(r=7)

    def test_mixed_pivot_is_first_random_coordinate(self) -> None:
        method = parse_exploration("mixed-CBC:100:10")
        assert method == MixedCbc(r=100, pivot=10)

    @pytest.mark.parametrize("token", ["random", "random:x", "CBC:3", "annealing"])
    def test_invalid(self, token: str) -> None:
        with pytest.raises(CliError):
            parse_exploration(token)


class TestParseLevels:
    """Test level combinations."""

    def test_defaults_to_sum(self) -> None:
        levels = parse_levels("4")
        assert (levels.first, levels.combiner, levels.weights) == (4, "sum", None)

    def test_weights(self) -> None:
        levels = parse_levels("4:max:1,2")
        assert (levels.combiner, levels.weights) == ("max", (1.0, 2.0))

    def test_bad_combiner(self) -> None:
        with pytest.raises(CliError, match="sum or max"):
            parse_levels("4:mean")
