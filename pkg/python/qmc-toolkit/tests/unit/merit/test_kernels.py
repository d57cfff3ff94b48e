"""Unit tests for the kernel functions behind the figures of merit."""

import math

import numpy as np
import pytest

from qmc_toolkit.merit import (
    MeritError,
    floor_log2_digits,
    interlaced_c_factor,
    kernel_palpha,
    kernel_palpha_tilde,
    kernel_sobolev1,
)
from qmc_toolkit.merit.kernels import (
    interlaced_a_values,
    interlaced_c_values,
    palpha_tilde_values,
    r2prime_values,
    sobolev1_values,
)


class TestKernelPalpha:
    """Test the Bernoulli-polynomial kernel of P_alpha."""

    def test_value_at_zero(self) -> None:
        assert kernel_palpha(0.0, 2) == pytest.approx(math.pi**2 / 3, rel=1e-14)

    def test_value_at_half(self) -> None:
        assert kernel_palpha(0.5, 2) == pytest.approx(-(math.pi**2) / 6, rel=1e-14)

    def test_reflection_symmetry(self) -> None:
        for x in (0.1, 0.3, 0.45):
            assert kernel_palpha(x, 2) == pytest.approx(kernel_palpha(1 - x, 2), rel=1e-12)
            assert kernel_palpha(x, 4) == pytest.approx(kernel_palpha(1 - x, 4), rel=1e-12)

    def test_odd_alpha_points_to_dual_oracle(self) -> None:
        with pytest.raises(MeritError, match="oracle_palpha_dual"):
            kernel_palpha(0.25, 3)


class TestDigitKernels:
    """Test the kernels that depend on the first nonzero binary digit."""

    def test_palpha_tilde_at_zero(self) -> None:
        assert kernel_palpha_tilde(0.0, 2) == 2.0
        assert kernel_palpha_tilde(0.0, 3) == pytest.approx(4 / 3)

    def test_palpha_tilde_at_half(self) -> None:
        assert kernel_palpha_tilde(0.5, 2) == -1.0

    def test_palpha_tilde_needs_alpha_above_one(self) -> None:
        with pytest.raises(MeritError):
            kernel_palpha_tilde(0.5, 1.0)

    def test_sobolev1(self) -> None:
        assert kernel_sobolev1(0.0) == pytest.approx(1 / 6)
        assert kernel_sobolev1(0.5) == pytest.approx(-1 / 12)

    def test_sobolev1_is_palpha_tilde_over_twelve(self) -> None:
        values = np.arange(0, 1 << 20, 4099, dtype=np.uint64)
        f = floor_log2_digits(values, 20)
        np.testing.assert_allclose(12 * sobolev1_values(f), palpha_tilde_values(f, 2.0), rtol=0, atol=1e-14)

    def test_floor_log2_is_exact_at_powers_of_two(self) -> None:
        f = floor_log2_digits(np.array([1, 2, 3, 4, 7, 8], dtype=np.uint64), 3)
        assert f.tolist() == [-3, -2, -2, -1, -1, 0]

    def test_r2prime_kernel(self) -> None:
        f = floor_log2_digits(np.array([0, 1, 2, 4], dtype=np.uint64), 3)
        # k = 2: below 2^-2 the kernel is 1 + k/2
        assert r2prime_values(f, 2).tolist() == [2.0, 2.0, 1.0, 0.5]


class TestInterlacedKernels:
    """Test the kernels and weight factors of interlaced rules."""

    def test_c_kernel_at_zero(self) -> None:
        f = floor_log2_digits(np.array([0], dtype=np.uint64), 8)
        assert interlaced_c_values(f, 2, 2)[0] == pytest.approx(1 / 60)

    def test_c_weight_factor(self) -> None:
        assert interlaced_c_factor(2, 2) == 64.0
        assert interlaced_c_factor(2, 3) == 2.0 ** (2 + 10)

    def test_a_kernel_vanishes_nowhere_near_zero(self) -> None:
        f = floor_log2_digits(np.array([0, 128], dtype=np.uint64), 8)
        values = interlaced_a_values(f, 2, 2)
        assert values[0] > 0
        assert values[1] < 0
