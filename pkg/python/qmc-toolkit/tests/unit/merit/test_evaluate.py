"""Unit tests for weighted figure-of-merit evaluation."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from qmc_toolkit.gf2 import BinaryPolynomial, GeneratingMatrix, default_modulus
from qmc_toolkit.merit import (
    FomSpec,
    MeritError,
    eval_kernel_fom,
    eval_product_weight_fast,
    eval_r2prime,
    evaluate,
    kernel_matrix,
    oracle_palpha_dual,
    star_discrepancy_bound,
)
from qmc_toolkit.pointsets import (
    DigitalNetBase2,
    InterlacedNet,
    Points,
    PolynomialLatticeRule,
    Rank1Lattice,
    generate_points,
    random_regular_matrix,
)
from qmc_toolkit.rng import stream
from qmc_toolkit.weights import OrderDependentWeights, ProductWeights

ONE = ProductWeights(gammas=(1.0,))


def p2(weights=ONE, q: float = 2.0) -> FomSpec:
    return FomSpec(family="Palpha", alpha=2, q=q, weights=weights)


def random_net(seed: int, k: int, s: int, w: int | None = None) -> DigitalNetBase2:
    gen = stream(seed, "net")
    w = k if w is None else w
    return DigitalNetBase2(
        k=k, w=w, matrices=tuple(random_regular_matrix(gen, k, w) for _ in range(s))
    )


class TestPalpha:
    """Test P_alpha on lattices against the dual-lattice sum."""

    def test_single_point_anchor(self) -> None:
        merit = evaluate(Rank1Lattice(n=1, gen=(0,)), p2())
        assert merit.total == pytest.approx(math.pi**2 / 3, rel=1e-12)

    def test_two_point_anchor(self) -> None:
        merit = evaluate(Rank1Lattice(n=2, gen=(1,)), p2())
        assert merit.total == pytest.approx(math.pi**2 / 12, rel=1e-12)

    def test_dual_oracle_anchors(self) -> None:
        h = 100_000
        assert oracle_palpha_dual(Rank1Lattice(n=1, gen=(0,)), 2, h) == pytest.approx(
            math.pi**2 / 3, abs=2 / h
        )
        assert oracle_palpha_dual(Rank1Lattice(n=2, gen=(1,)), 2, h) == pytest.approx(
            math.pi**2 / 12, abs=2 / h
        )

    @pytest.mark.parametrize(
        "lat",
        [
            Rank1Lattice(n=13, gen=(1, 5)),
            Rank1Lattice(n=32, gen=(1, 7, 11)),
            Rank1Lattice(n=64, gen=(1, 19, 27)),
        ],
    )
    def test_kernel_matches_dual_sum(self, lat: Rank1Lattice) -> None:
        weights = ProductWeights(gammas=(1.0,) * lat.s)
        kernel = evaluate(lat, p2(weights)).total
        assert oracle_palpha_dual(lat, 2, 100_000) == pytest.approx(kernel, rel=1e-3)

    def test_reflection_invariance(self) -> None:
        values = stream(3, "points").integers(0, 1024, size=(50, 3), dtype=np.uint64)
        points = Points(values, 1024, None)
        reflected = Points((np.uint64(1024) - values) % np.uint64(1024), 1024, None)
        spec = p2(ProductWeights(gammas=(0.8, 0.5, 0.3)))
        assert eval_kernel_fom(reflected, spec).total == pytest.approx(
            eval_kernel_fom(points, spec).total, rel=1e-12
        )

    def test_odd_alpha_rejected(self) -> None:
        with pytest.raises(ValidationError):
            FomSpec(family="Palpha", alpha=3, weights=ONE)


class TestDigitalFigures:
    """Test the digit-based figures of merit on nets."""

    def test_palpha_tilde_on_two_points(self) -> None:
        net = DigitalNetBase2(k=1, w=1, matrices=(GeneratingMatrix.identity(1),))
        merit = evaluate(net, FomSpec(family="PalphaTilde", alpha=2, weights=ONE))
        assert merit.total == pytest.approx(0.5)

    def test_result_depends_only_on_first_k_digits(self) -> None:
        modulus = default_modulus(6)
        gen = tuple(BinaryPolynomial(bits=b) for b in (1, 0b10111, 0b101001))
        spec = FomSpec(family="PalphaTilde", alpha=2, weights=ProductWeights(gammas=(0.7,) * 3))
        short = evaluate(PolynomialLatticeRule(modulus=modulus, gen=gen, w=6), spec)
        long = evaluate(PolynomialLatticeRule(modulus=modulus, gen=gen, w=31), spec)
        assert short.total == long.total

    def test_product_formula_matches_subset_sum(self) -> None:
        points = generate_points(random_net(11, 3, 3))
        spec = FomSpec(family="PalphaTilde", alpha=2, weights=ProductWeights(gammas=(0.9, 0.5, 0.3)))
        fast = eval_product_weight_fast(kernel_matrix(points, spec), spec).total
        enumerated = eval_kernel_fom(points, spec, per_projection=True)
        assert fast == pytest.approx(enumerated.total, rel=1e-12)
        assert enumerated.per_projection is not None
        assert len(enumerated.per_projection) == 7

    def test_zero_weights_give_zero(self) -> None:
        points = generate_points(random_net(5, 4, 3))
        spec = FomSpec(family="Sobolev1", weights=ProductWeights(gammas=(0.0,) * 3))
        assert eval_product_weight_fast(kernel_matrix(points, spec), spec).total == 0.0

    def test_product_formula_needs_product_weights(self) -> None:
        spec = FomSpec(family="Sobolev1", weights=OrderDependentWeights(gammas=(1.0,)))
        with pytest.raises(MeritError):
            eval_product_weight_fast(np.zeros((2, 1)), spec)

    def test_order_dependent_matches_enumeration(self) -> None:
        points = generate_points(random_net(9, 4, 4))
        spec = FomSpec(family="PalphaTilde", alpha=2, weights=OrderDependentWeights(gammas=(0.5, 1.0, 0.2)))
        fast = eval_kernel_fom(points, spec).total
        assert fast == pytest.approx(eval_kernel_fom(points, spec, per_projection=True).total, rel=1e-12)

    def test_max_norm_takes_worst_projection(self) -> None:
        points = generate_points(random_net(9, 4, 3))
        spec = FomSpec(family="PalphaTilde", alpha=2, q=math.inf, weights=ProductWeights(gammas=(1.0,) * 3))
        merit = eval_kernel_fom(points, spec)
        assert merit.per_projection is not None
        assert merit.total == pytest.approx(max(math.sqrt(max(v, 0.0)) for v in merit.per_projection.values()))

    def test_van_der_corput_r2prime(self) -> None:
        points = generate_points(DigitalNetBase2(k=2, w=2, matrices=(GeneratingMatrix.identity(2),)))
        assert eval_r2prime(points, ONE).total == pytest.approx(0.0)
        assert star_discrepancy_bound(points, ONE) == pytest.approx(0.25)

    def test_lattice_points_rejected_for_digit_kernels(self) -> None:
        spec = FomSpec(family="PalphaTilde", weights=ONE)
        with pytest.raises(MeritError):
            evaluate(Rank1Lattice(n=3, gen=(1,)), spec)


class TestInterlacedFigures:
    """Test the interlaced figures of merit."""

    def test_interlaced_rule_needs_matching_factor(self) -> None:
        inner = random_net(2, 3, 4, w=6)
        spec = FomSpec(family="IAlphaDc", alpha=2, d=2, weights=ProductWeights(gammas=(1.0,) * 2))
        assert evaluate(InterlacedNet(inner=inner, d=2), spec).total > 0
        with pytest.raises(MeritError):
            evaluate(InterlacedNet(inner=inner, d=4), spec)

    def test_factor_one_is_plain_kernel_merit(self) -> None:
        inner = random_net(4, 3, 2)
        spec = FomSpec(family="IAlphaDc", alpha=2, d=1, weights=ProductWeights(gammas=(1.0,) * 2))
        assert evaluate(InterlacedNet(inner=inner, d=1), spec) == evaluate(inner, spec)

    def test_second_bound_needs_factor_at_most_alpha(self) -> None:
        with pytest.raises(ValidationError):
            FomSpec(family="IAlphaDb", alpha=2, d=3, weights=ONE)
        with pytest.raises(ValidationError):
            FomSpec(family="IAlphaDb", alpha=2, d=1, weights=ONE)
