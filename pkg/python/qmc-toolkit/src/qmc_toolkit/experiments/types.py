import math
from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..errors import QmcToolkitError


class ExperimentError(QmcToolkitError):
    """Study configuration that cannot be run."""


class ProdLinear(BaseModel):
    """prod_j (1 + c_j (u_j - 1/2)); integrates to 1."""

    kind: Literal["prodLinear"] = "prodLinear"
    c: tuple[float, ...] = Field(min_length=1)

    model_config = ConfigDict(frozen=True)

    @property
    def s(self) -> int:
        return len(self.c)


class AnovaPsi(BaseModel):
    """Sum over two coordinate blocks of prod_j (psi(u_j) - mu), psi(x) = 1 / ((x - 1/2)^2 + offset).

    Each factor integrates to zero, hence so does the integrand.
    """

    kind: Literal["anovaPsi"] = "anovaPsi"
    blocks: tuple[tuple[int, ...], ...] = ((1, 2, 3, 4, 5), (6, 7, 8, 9, 10))
    offset: float = Field(default=0.05, gt=0)

    model_config = ConfigDict(frozen=True)

    @property
    def mean(self) -> float:
        """E[psi(U)] = (2 / sqrt(offset)) atan(1 / (2 sqrt(offset)))."""
        root = math.sqrt(self.offset)
        return 2.0 / root * math.atan(0.5 / root)

    @property
    def s(self) -> int:
        return max(max(block) for block in self.blocks)


class TrigPoly(BaseModel):
    """sum_h coeff(h) exp(2 pi i h . u) over a finite support."""

    kind: Literal["trigPoly"] = "trigPoly"
    coefficients: dict[tuple[int, ...], complex]

    model_config = ConfigDict(frozen=True)

    @field_validator("coefficients")
    @classmethod
    def _check_support(cls, v: dict[tuple[int, ...], complex]) -> dict[tuple[int, ...], complex]:
        lengths = {len(h) for h in v}
        if len(lengths) > 1:
            raise ValueError(f"Frequency vectors have mixed lengths {sorted(lengths)}")
        return v

    @property
    def s(self) -> int:
        return len(next(iter(self.coefficients))) if self.coefficients else 0


class Constant(BaseModel):
    kind: Literal["constant"] = "constant"
    value: float = 1.0
    s: int = Field(default=1, ge=1)

    model_config = ConfigDict(frozen=True)


TestIntegrand = Annotated[
    Union[ProdLinear, AnovaPsi, TrigPoly, Constant], Field(discriminator="kind")
]


class DualVarianceReport(BaseModel):
    analytic: float = Field(description="Sum of |coeff(h)|^2 over nonzero dual vectors")
    exact: float = Field(description="Variance of the shifted-lattice estimator over a shift grid")
    difference: float


class VarianceRow(BaseModel):
    k: int
    n: int
    variance: float = Field(ge=0)
    mean: float
    seconds: float = Field(description="Generation and randomization wall time, all replicates")


class VarianceReport(BaseModel):
    m: int = Field(ge=2, description="Replicates per point count")
    rows: tuple[VarianceRow, ...]
    fit_slope: Optional[float] = Field(
        default=None, description="Least-squares slope of log2 variance against k"
    )

    @property
    def n_grid(self) -> tuple[int, ...]:
        return tuple(row.n for row in self.rows)


class QuantileRow(BaseModel):
    k: int
    quantiles: dict[float, float]
    reference: Optional[float] = Field(default=None, description="Fast-CBC merit for comparison")


class TValueHistogram(BaseModel):
    """Number of projections of each order with a given t-value."""

    counts: dict[int, dict[int, int]]
    means: dict[int, float]

    @property
    def total(self) -> int:
        return sum(sum(by_t.values()) for by_t in self.counts.values())


class SobolComparison(BaseModel):
    reference_variance: float
    custom_variance: float
    ratio: float = Field(description="reference / custom")
