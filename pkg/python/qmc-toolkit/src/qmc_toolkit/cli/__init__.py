from .formats import (
    emit_lattice_file,
    emit_net_file,
    emit_sobol_file,
    parse_joe_kuo_file,
    parse_lattice_file,
    parse_net_file,
    parse_sobol_file,
)
from .main import build_parser, config_from_args, execute, run_cli, search_spec, write_atomic
from .parsing import (
    parse_exploration,
    parse_fom,
    parse_levels,
    parse_norm,
    parse_size,
    parse_weights,
)
from .study import run_study_cli
from .types import (
    EXIT_OK,
    EXIT_SEARCH_FAILED,
    EXIT_UNSUPPORTED,
    EXIT_USAGE,
    CliConfig,
    CliError,
    ParameterFileError,
)

__all__ = [
    # Types
    "CliConfig",
    "CliError",
    "ParameterFileError",
    "EXIT_OK",
    "EXIT_SEARCH_FAILED",
    "EXIT_UNSUPPORTED",
    "EXIT_USAGE",
    # Parameter files
    "emit_lattice_file",
    "emit_net_file",
    "emit_sobol_file",
    "parse_joe_kuo_file",
    "parse_lattice_file",
    "parse_net_file",
    "parse_sobol_file",
    # Command line
    "build_parser",
    "config_from_args",
    "execute",
    "parse_exploration",
    "parse_fom",
    "parse_levels",
    "parse_norm",
    "parse_size",
    "parse_weights",
    "run_cli",
    "run_study_cli",
    "search_spec",
    "write_atomic",
]
