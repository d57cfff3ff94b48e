from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import QmcToolkitError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_SEARCH_FAILED = 4


class CliError(QmcToolkitError):
    """Bad command line; carries the process exit status."""

    def __init__(self, message: str, exit_code: int = EXIT_USAGE):
        self.exit_code = exit_code
        super().__init__(message, code="cli")


class ParameterFileError(QmcToolkitError):
    """Malformed parameter file; ``line_number`` is 1-based, 0 for whole-file problems."""

    def __init__(self, message: str, line_number: int = 0):
        self.line_number = line_number
        where = f"line {line_number}: " if line_number else ""
        super().__init__(f"{where}{message}", code="parameter-file")


SetType = Literal["lattice", "net"]
CliConstruction = Literal["ordinary", "polynomial", "sobol", "explicit"]
OutputFormat = Literal["lattice", "net", "sobol"]


class CliConfig(BaseModel):
    """Command line after defaults are filled in.

    Tokens are kept as typed so the run summary reproduces them; they are
    parsed into a search specification by ``qmc_toolkit.cli.main.search_spec``.
    """

    set_type: SetType
    construction: CliConstruction
    size: str = Field(description="2^k or an integer n")
    dimension: int = Field(ge=1)
    exploration: str
    figure: str
    norm: str = "2"
    weights: str = "product:1"
    output_format: OutputFormat
    interlacing: int = Field(default=1, ge=1)
    hoplr_alpha: int = Field(default=1, ge=1, description="Degree multiplier; above 1 searches higher-order PLRs")
    modulus: Optional[int] = Field(default=None, ge=2)
    digits: Optional[int] = Field(default=None, ge=1, le=63)
    multilevel: Optional[str] = None
    dimension_levels: Optional[str] = None
    seed: int = Field(default=0, ge=0, lt=2**64)
    workers: int = Field(default=1, ge=1)
    output_dir: Path

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_consistent(self) -> "CliConfig":
        if self.construction == "ordinary" and self.set_type != "lattice":
            raise ValueError("-c ordinary needs -t lattice")
        if self.construction in ("sobol", "explicit") and self.set_type != "net":
            raise ValueError(f"-c {self.construction} needs -t net")
        if self.output_format == "lattice" and self.construction not in ("ordinary", "polynomial"):
            raise ValueError(f"-O lattice needs an ordinary or polynomial lattice, not {self.construction}")
        if self.output_format == "lattice" and self.interlacing > 1:
            raise ValueError("-O lattice cannot represent an interlaced rule; use -O net")
        if self.output_format == "sobol" and (self.construction != "sobol" or self.interlacing > 1):
            raise ValueError("-O sobol needs a plain Sobol' construction (-c sobol, no interlacing)")
        if self.construction == "ordinary" and self.output_format != "lattice":
            raise ValueError("ordinary lattices are written with -O lattice")
        if self.hoplr_alpha > 1 and self.construction != "polynomial":
            raise ValueError("higher-order rules need -c polynomial")
        if self.hoplr_alpha > 1 and self.interlacing > 1:
            raise ValueError("higher-order rules and interlacing are exclusive")
        return self
