"""Unit tests for parameter file formats."""

import pytest

from qmc_toolkit.cli import (
    ParameterFileError,
    emit_lattice_file,
    emit_net_file,
    emit_sobol_file,
    parse_joe_kuo_file,
    parse_lattice_file,
    parse_net_file,
    parse_sobol_file,
)
from qmc_toolkit.gf2 import BinaryPolynomial, GeneratingMatrix
from qmc_toolkit.pointsets import (
    DigitalNetBase2,
    HigherOrderPLR,
    PointSetError,
    PolynomialLatticeRule,
    Rank1Lattice,
    SobolNet,
    SobolSpec,
    default_sobol_spec,
    to_digital_net,
)

PLR = PolynomialLatticeRule(
    modulus=BinaryPolynomial(bits=7), gen=(BinaryPolynomial(bits=1), BinaryPolynomial(bits=3))
)


class TestLatticeFile:
    """Test lattice parameter files."""

    def test_ordinary_lattice_layout(self) -> None:
        text = emit_lattice_file(Rank1Lattice(n=8, gen=(1, 3)))
        assert text == (
            "# Parameters for an ordinary lattice rule\n"
            "2       # s = 2 dimensions\n"
            "8       # n = 8 points\n"
            "1       # coordinates of generating vector, starting at j=1\n"
            "3\n"
        )
        assert parse_lattice_file(text) == Rank1Lattice(n=8, gen=(1, 3))

    def test_polynomial_lattice_layout(self) -> None:
        text = emit_lattice_file(PLR)
        lines = text.splitlines()
        assert lines[0] == "# Parameters for a polynomial lattice rule in base 2"
        assert lines[2].startswith("2       # n = 2^2 = 4 points")
        assert lines[3].startswith("7       # polynomial modulus")
        assert parse_lattice_file(text) == PLR

    def test_output_digits_comment(self) -> None:
        rule = PLR.model_copy(update={"w": 12})
        text = emit_lattice_file(rule)
        assert "# r = 12 binary output digits" in text
        assert parse_lattice_file(text).w == 12  # type: ignore[union-attr]

    def test_higher_order_rule(self) -> None:
        rule = HigherOrderPLR(
            modulus=BinaryPolynomial(bits=0b1000011), gen=(BinaryPolynomial(bits=1), BinaryPolynomial(bits=5)), k=3
        )
        assert parse_lattice_file(emit_lattice_file(rule)) == rule

    def test_nets_have_no_lattice_form(self) -> None:
        with pytest.raises(ParameterFileError):
            emit_lattice_file(SobolNet(spec=default_sobol_spec(2), s=2, k=3))

    def test_unknown_header(self) -> None:
        with pytest.raises(ParameterFileError, match="line 1: unknown header"):
            parse_lattice_file("# Parameters for something else\n1\n2\n1\n")

    def test_extra_component(self) -> None:
        with pytest.raises(ParameterFileError, match="line 5: more than s = 1"):
            parse_lattice_file("# Parameters for an ordinary lattice rule\n1\n8\n1\n3\n")

    def test_non_integer(self) -> None:
        with pytest.raises(ParameterFileError, match="line 3: expected integers"):
            parse_lattice_file("# Parameters for an ordinary lattice rule\n1\neight\n1\n")

    def test_modulus_degree_must_match(self) -> None:
        with pytest.raises(ParameterFileError, match="degree"):
            parse_lattice_file("# Parameters for a polynomial lattice rule in base 2\n1\n3\n7\n1\n")


class TestNetFile:
    """Test digital net parameter files."""

    def test_identity_columns(self) -> None:
        net = DigitalNetBase2(k=3, w=3, matrices=(GeneratingMatrix.identity(3),))
        text = emit_net_file(net)
        lines = text.splitlines()
        assert lines[0] == "# Parameters for a digital net in base 2"
        assert lines[3].startswith("3    # r = 3 binary output digits")
        assert lines[4] == "# Columns of gen. matrices C_1,...,C_s, one matrix per line:"
        assert lines[5] == "4 2 1"
        assert parse_net_file(text) == net

    def test_any_digital_construction(self) -> None:
        net = parse_net_file(emit_net_file(PLR))
        assert net == to_digital_net(PLR)

    def test_column_too_wide(self) -> None:
        text = "# Parameters for a digital net in base 2\n1\n2\n2\n4 1\n"
        with pytest.raises(ParameterFileError, match="line 5: column does not fit"):
            parse_net_file(text)

    def test_wrong_column_count(self) -> None:
        text = "# Parameters for a digital net in base 2\n1\n2\n2\n2\n"
        with pytest.raises(ParameterFileError, match="line 5: expected 2 columns"):
            parse_net_file(text)

    def test_rank_checked_only_on_request(self) -> None:
        text = "# Parameters for a digital net in base 2\n1\n2\n2\n2 2\n"
        assert parse_net_file(text).k == 2
        with pytest.raises(PointSetError, match="singular"):
            parse_net_file(text, validate=True)


class TestSobolFile:
    """Test Sobol' direction number files."""

    def test_default_polynomials_are_implicit(self) -> None:
        spec = default_sobol_spec(3)
        text = emit_sobol_file(spec)
        assert text.splitlines()[:2] == [
            "# Initial direction numbers m_{j,c} for Sobol points",
            "# s = 3 dimensions",
        ]
        assert "# polynomials:" not in text
        assert parse_sobol_file(text) == spec

    def test_custom_polynomials_are_listed(self) -> None:
        spec = SobolSpec(direction_numbers=((1, 3),), polynomials=(BinaryPolynomial(bits=7),))
        text = emit_sobol_file(spec)
        assert "# polynomials: 7" in text
        assert parse_sobol_file(text) == spec

    def test_too_many_coordinates(self) -> None:
        with pytest.raises(ParameterFileError, match="coordinate 3"):
            emit_sobol_file(default_sobol_spec(2), 3)

    def test_even_direction_number(self) -> None:
        text = "# Initial direction numbers m_{j,c} for Sobol points\n# s = 2 dimensions\n2\n"
        with pytest.raises(ParameterFileError, match=r"line 3: m_\{2,1\} = 2 is even"):
            parse_sobol_file(text)

    def test_declared_dimension_mismatch(self) -> None:
        text = "# Initial direction numbers m_{j,c} for Sobol points\n# s = 4 dimensions\n1\n"
        with pytest.raises(ParameterFileError, match="s = 4 declared"):
            parse_sobol_file(text)

    def test_joe_kuo_table(self) -> None:
        text = "d       s       a       m_i\n2       1       0       1\n3       2       1       1 3\n"
        spec = parse_joe_kuo_file(text)
        assert [p.bits for p in spec.polynomials] == [3, 7]
        assert spec.direction_numbers == ((1,), (1, 3))
        assert parse_sobol_file(text) == spec
        assert parse_joe_kuo_file(text, max_dimension=2).max_dimension == 2

    def test_joe_kuo_degree_mismatch(self) -> None:
        with pytest.raises(ParameterFileError, match="line 2: expected 2 direction numbers"):
            parse_joe_kuo_file("d s a m_i\n3 2 1 1\n")
