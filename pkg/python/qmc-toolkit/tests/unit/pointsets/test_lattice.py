"""Unit tests for rank-1 lattices."""

import numpy as np
import pytest
from pydantic import ValidationError

from qmc_toolkit.pointsets import (
    PointSetError,
    Rank1Lattice,
    generate_points,
    korobov_vector,
    lattice_point,
    lattice_points,
    leading_coordinates,
    point_count,
)


class TestLatticePoints:
    """Test point generation for rank-1 lattices."""

    def test_points_of_four_point_lattice(self) -> None:
        lat = Rank1Lattice(n=4, gen=(1, 3))
        assert lattice_point(lat, 1) == (0.25, 0.75)
        assert lattice_point(lat, 3) == (0.75, 0.25)

    def test_first_point_is_origin(self) -> None:
        lat = Rank1Lattice(n=7, gen=(1, 3, 2))
        assert lattice_point(lat, 0) == (0.0, 0.0, 0.0)

    def test_block_holds_exact_numerators(self) -> None:
        points = lattice_points(Rank1Lattice(n=4, gen=(1, 3)))
        assert points.denominator == 4
        assert points.digits is None
        assert points.values.tolist() == [[0, 0], [1, 3], [2, 2], [3, 1]]

    def test_generate_points_delegates(self) -> None:
        lat = Rank1Lattice(n=5, gen=(1, 2))
        assert np.array_equal(generate_points(lat, 1, 3).values, lattice_points(lat, 1, 3).values)
        assert point_count(lat) == 5

    def test_index_out_of_range(self) -> None:
        with pytest.raises(PointSetError):
            lattice_point(Rank1Lattice(n=4, gen=(1,)), 4)

    def test_component_outside_residues(self) -> None:
        with pytest.raises(ValidationError):
            Rank1Lattice(n=4, gen=(1, 4))

    def test_admissibility(self) -> None:
        assert Rank1Lattice(n=8, gen=(1, 3)).is_admissible()
        assert not Rank1Lattice(n=8, gen=(1, 2)).is_admissible()

    def test_leading_coordinates(self) -> None:
        lat = Rank1Lattice(n=8, gen=(1, 3, 5))
        assert leading_coordinates(lat, 2) == Rank1Lattice(n=8, gen=(1, 3))


class TestKorobov:
    """Test Korobov generating vectors."""

    def test_powers_modulo_prime(self) -> None:
        assert korobov_vector(3, 3, 7) == (1, 3, 2)

    def test_powers_cycle_modulo_power_of_two(self) -> None:
        assert korobov_vector(3, 4, 8) == (1, 3, 1, 3)

    def test_parameter_out_of_range(self) -> None:
        with pytest.raises(PointSetError):
            korobov_vector(0, 2, 7)
