"""Unit tests for the search and study command lines."""

from pathlib import Path

import pytest

from qmc_toolkit.cli import (
    EXIT_OK,
    EXIT_SEARCH_FAILED,
    EXIT_UNSUPPORTED,
    EXIT_USAGE,
    CliConfig,
    build_parser,
    config_from_args,
    emit_net_file,
    parse_lattice_file,
    parse_net_file,
    run_cli,
    run_study_cli,
    study,
    write_atomic,
)
from qmc_toolkit.experiments import monte_carlo_definitions
from qmc_toolkit.pointsets import PolynomialLatticeRule, Rank1Lattice, SobolNet, default_sobol_spec
from qmc_toolkit.settings import get_settings
from qmc_toolkit.weights import ProductWeights, WeightSpec


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch, tmp_path: Path):
    monkeypatch.setenv("QMC_TOOLKIT_OUTPUT_ROOT", str(tmp_path / "runs"))
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def ordinary_args(out: Path, *extra: str) -> list[str]:
    return ["-t", "lattice", "-c", "ordinary", "-s", "13", "-d", "3", "-e", "full-CBC", "-f", "P2", "-o", str(out), *extra]


class TestRunCli:
    """Test the search command line end to end."""

    def test_writes_parameters_and_summary(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        out = tmp_path / "run"
        assert run_cli(ordinary_args(out, "-w", "product:0.5")) == EXIT_OK
        lattice = parse_lattice_file((out / "parameters.txt").read_text())
        assert isinstance(lattice, Rank1Lattice)
        assert lattice.n == 13 and lattice.gen[0] == 1
        summary = (out / "summary.txt").read_text().splitlines()
        assert summary[0].startswith("# qmc-toolkit run started ")
        assert "weights = product:0.5" in summary
        assert any(line.startswith("merit = ") for line in summary)
        assert "merit:" in capsys.readouterr().out

    def test_summary_is_reproducible(self, tmp_path: Path) -> None:
        run_cli(ordinary_args(tmp_path / "a", "--seed", "3"))
        run_cli(ordinary_args(tmp_path / "b", "--seed", "3"))
        first = (tmp_path / "a" / "summary.txt").read_text().splitlines()[1:]
        second = (tmp_path / "b" / "summary.txt").read_text().splitlines()[1:]
        assert [line for line in first if not line.startswith("output_dir")] == [
            line for line in second if not line.startswith("output_dir")
        ]
        assert (tmp_path / "a" / "parameters.txt").read_text() == (tmp_path / "b" / "parameters.txt").read_text()

    def test_polynomial_lattice_fast_cbc(self, tmp_path: Path) -> None:
        out = tmp_path / "plr"
        argv = ["-t", "lattice", "-c", "polynomial", "-s", "2^6", "-d", "4", "-e", "fast-CBC", "-f", "CU:P2",
                "-w", "order-dependent:0,0,1,0.5", "-o", str(out)]
        assert run_cli(argv) == EXIT_OK
        rule = parse_lattice_file((out / "parameters.txt").read_text())
        assert isinstance(rule, PolynomialLatticeRule)
        assert rule.k == 6 and rule.s == 4

    def test_interlaced_net(self, tmp_path: Path) -> None:
        out = tmp_path / "interlaced"
        argv = ["-t", "net", "-c", "polynomial", "-s", "2^4", "-d", "2", "-e", "full-CBC", "-f", "IC:2:2",
                "-w", "product:0.5", "-o", str(out)]
        assert run_cli(argv) == EXIT_OK
        net = parse_net_file((out / "parameters.txt").read_text())
        assert (net.s, net.k) == (2, 4)

    def test_default_output_directory(self, tmp_path: Path) -> None:
        argv = ordinary_args(tmp_path)[:-2]
        assert run_cli(argv) == EXIT_OK
        assert (tmp_path / "runs" / "lattice-ordinary-13-d3-seed0" / "parameters.txt").exists()

    def test_fast_cbc_for_nets_is_unsupported(self, tmp_path: Path) -> None:
        argv = ["-t", "net", "-c", "polynomial", "-s", "2^4", "-d", "2", "-e", "fast-CBC", "-f", "P2tilde",
                "-o", str(tmp_path)]
        assert run_cli(argv) == EXIT_UNSUPPORTED

    def test_inconsistent_options(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        argv = ["-t", "net", "-c", "ordinary", "-s", "13", "-d", "2", "-e", "full-CBC", "-f", "P2", "-o", str(tmp_path)]
        assert run_cli(argv) == EXIT_USAGE
        assert "-c ordinary needs -t lattice" in capsys.readouterr().err

    def test_bad_token(self, tmp_path: Path) -> None:
        assert run_cli(ordinary_args(tmp_path, "-w", "uniform:1")) == EXIT_USAGE

    def test_missing_required_option(self) -> None:
        assert run_cli(["-t", "lattice"]) == EXIT_USAGE

    def test_search_budget_exceeded(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("QMC_TOOLKIT_EXHAUSTIVE_GUARD", "2")
        get_settings.cache_clear()
        argv = ["-t", "lattice", "-c", "polynomial", "-s", "2^4", "-d", "3", "-e", "exhaustive", "-f", "P2tilde",
                "-o", str(tmp_path / "x")]
        assert run_cli(argv) == EXIT_SEARCH_FAILED
        assert not (tmp_path / "x" / "parameters.txt").exists()


class TestConfig:
    """Test option defaults and consistency."""

    def test_defaults(self, tmp_path: Path) -> None:
        args = build_parser().parse_args(
            ["-t", "net", "-c", "sobol", "-s", "2^8", "-d", "5", "-e", "random-CBC:10", "-f", "t-bound"]
        )
        config = config_from_args(args)
        assert config.output_format == "sobol"
        assert config.interlacing == 1
        assert config.output_dir == tmp_path / "runs" / "net-sobol-28-d5-seed0"

    def test_interlacing_from_merit_name(self) -> None:
        args = build_parser().parse_args(
            ["-t", "net", "-c", "polynomial", "-s", "2^8", "-d", "5", "-e", "full-CBC", "-f", "IB:3:3"]
        )
        config = config_from_args(args)
        assert (config.interlacing, config.output_format) == (3, "net")

    @pytest.mark.parametrize(
        "overrides",
        [
            {"construction": "sobol", "set_type": "lattice", "output_format": "lattice"},
            {"construction": "sobol", "set_type": "net", "output_format": "lattice"},
            {"construction": "polynomial", "set_type": "lattice", "output_format": "lattice", "interlacing": 2},
            {"construction": "sobol", "set_type": "net", "output_format": "net", "hoplr_alpha": 2},
        ],
    )
    def test_inconsistent(self, overrides: dict[str, object], tmp_path: Path) -> None:
        base = dict(size="2^4", dimension=2, exploration="full-CBC", figure="P2", output_dir=tmp_path)
        with pytest.raises(ValueError):
            CliConfig(**base, **overrides)  # type: ignore[arg-type]


class TestWriteAtomic:
    """Test atomic file replacement."""

    def test_replaces_and_leaves_no_temporary(self, tmp_path: Path) -> None:
        target = tmp_path / "deep" / "file.txt"
        write_atomic(target, "one\n")
        write_atomic(target, "two\n")
        assert target.read_text() == "two\n"
        assert [p.name for p in target.parent.iterdir()] == ["file.txt"]


class TestStudyCli:
    """Test the study command line."""

    def test_histogram(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        net_file = tmp_path / "net.txt"
        net_file.write_text(emit_net_file(SobolNet(spec=default_sobol_spec(4), s=4, k=5)))
        assert run_study_cli(["histogram", str(net_file)]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("order\tt\tcount\n")
        assert "# mean t-value: order 2: " in out

    def test_quantiles_to_file(self, tmp_path: Path) -> None:
        table = tmp_path / "q.tsv"
        argv = ["-o", str(table), "quantiles", "--family", "plr", "-d", "2", "--k-min", "3", "--k-max", "4",
                "--samples", "3", "-w", "product:1"]
        assert run_study_cli(argv) == EXIT_OK
        lines = table.read_text().splitlines()
        assert lines[0] == "k\tq0.1\tq0.5\tq0.9\treference"
        assert [line.split("\t")[0] for line in lines[1:]] == ["3", "4"]

    def test_variance(self, capsys: pytest.CaptureFixture[str]) -> None:
        argv = ["variance", "--family", "sobol", "--c", "0.7,0.2", "-m", "4", "--k-min", "3", "--k-max", "4"]
        assert run_study_cli(argv) == EXIT_OK
        assert "# m = 4, fitted slope = " in capsys.readouterr().out

    def test_variance_weights_follow_coefficients(self, monkeypatch: pytest.MonkeyPatch) -> None:
        seen = {}

        def searched(family: str, *, s: int, weights: WeightSpec, interlacing: int, seed: int):
            seen["weights"] = weights
            return monte_carlo_definitions(s)

        monkeypatch.setattr(study, "searched_definitions", searched)
        argv = ["variance", "--family", "interlaced", "--randomization", "none", "--c", "0.7,0.2,0.5",
                "-m", "2", "--k-min", "3", "--k-max", "3"]
        assert run_study_cli(argv) == EXIT_OK
        assert seen["weights"] == ProductWeights(gammas=(0.7, 0.2, 0.5))

    def test_bad_weights(self) -> None:
        assert run_study_cli(["quantiles", "--family", "plr", "-w", "product:-1"]) == EXIT_USAGE

    def test_unknown_command(self) -> None:
        assert run_study_cli(["anneal"]) == EXIT_USAGE
