from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..errors import QmcToolkitError
from ..gf2 import MAX_DIGITS, BinaryPolynomial
from ..merit import T_VALUE_FAMILIES, FomSpec, MeritValue
from ..pointsets import PointSetDef, SobolSpec


class SearchError(QmcToolkitError):
    """A search could not be carried out."""


class UnsupportedSearchError(SearchError):
    """The exploration method does not apply to this construction, weights or norm."""


class SearchBudgetError(SearchError):
    """A candidate space is larger than the configured enumeration guard."""


ConstructionKind = Literal[
    "ordinaryLattice",
    "polynomialLattice",
    "sobol",
    "explicitNet",
    "interlaced",
    "hoplr",
]
InnerConstructionKind = Literal["polynomialLattice", "sobol", "explicitNet"]


class Exhaustive(BaseModel):
    kind: Literal["exhaustive"] = "exhaustive"

    model_config = ConfigDict(frozen=True)


class RandomSampling(BaseModel):
    kind: Literal["random"] = "random"
    r: int = Field(ge=1, description="Number of sampled candidates")

    model_config = ConfigDict(frozen=True)


class FullCbc(BaseModel):
    kind: Literal["full-CBC"] = "full-CBC"

    model_config = ConfigDict(frozen=True)


class FastCbc(BaseModel):
    kind: Literal["fast-CBC"] = "fast-CBC"

    model_config = ConfigDict(frozen=True)


class RandomCbc(BaseModel):
    kind: Literal["random-CBC"] = "random-CBC"
    r: int = Field(ge=1, description="Samples per coordinate")

    model_config = ConfigDict(frozen=True)


class Korobov(BaseModel):
    kind: Literal["Korobov"] = "Korobov"

    model_config = ConfigDict(frozen=True)


class RandomKorobov(BaseModel):
    kind: Literal["random-Korobov"] = "random-Korobov"
    r: int = Field(ge=1, description="Number of sampled Korobov parameters")

    model_config = ConfigDict(frozen=True)


class MixedCbc(BaseModel):
    """Full CBC below the pivot coordinate, r-sample random CBC from it on."""

    kind: Literal["mixed-CBC"] = "mixed-CBC"
    r: int = Field(ge=1, description="Samples per coordinate from the pivot on")
    pivot: int = Field(ge=1, description="First coordinate searched by random CBC")

    model_config = ConfigDict(frozen=True)


ExplorationMethod = Annotated[
    Union[
        Exhaustive,
        RandomSampling,
        FullCbc,
        FastCbc,
        RandomCbc,
        Korobov,
        RandomKorobov,
        MixedCbc,
    ],
    Field(discriminator="kind"),
]


class LevelCombination(BaseModel):
    """Weighted sum or maximum of merits over a contiguous range of levels.

    For point-count levels ``first`` is k_min (levels 2^k_min .. 2^k); for
    dimension levels it is s_min (prefixes s_min .. s). ``weights`` defaults
    to one per level.
    """

    first: int = Field(ge=1)
    weights: Optional[tuple[float, ...]] = None
    combiner: Literal["sum", "max"] = "sum"

    model_config = ConfigDict(frozen=True)

    @field_validator("weights")
    @classmethod
    def _check_weights(cls, v: Optional[tuple[float, ...]]) -> Optional[tuple[float, ...]]:
        if v is not None and any(x < 0 for x in v):
            raise ValueError("level weights must be nonnegative")
        return v

    def weights_for(self, last: int) -> tuple[float, ...]:
        count = last - self.first + 1
        if self.weights is None:
            return (1.0,) * count
        if len(self.weights) != count:
            raise ValueError(
                f"{len(self.weights)} level weights for levels {self.first}..{last}"
            )
        return self.weights


class SearchSpec(BaseModel):
    """Everything a search needs: construction, size, merit, method and seed."""

    construction: ConstructionKind
    k: Optional[int] = Field(default=None, ge=1, le=30, description="Size exponent, n = 2^k")
    n: Optional[int] = Field(default=None, ge=2, description="Point count (ordinary lattices)")
    s: int = Field(ge=1, description="Dimension")
    fom: FomSpec
    method: ExplorationMethod
    seed: int = Field(default=0, ge=0, lt=2**64)
    multi_level: Optional[LevelCombination] = None
    dimension_levels: Optional[LevelCombination] = None
    inner: InnerConstructionKind = Field(
        default="polynomialLattice", description="Inner construction of interlaced rules"
    )
    interlacing: int = Field(default=1, ge=1, description="Interlacing factor d")
    alpha: int = Field(default=2, ge=1, description="Degree multiplier of higher-order PLRs")
    modulus: Optional[BinaryPolynomial] = None
    w: Optional[int] = Field(default=None, ge=1, le=MAX_DIGITS, description="Output digits")
    sobol_polynomials: Optional[SobolSpec] = Field(
        default=None, description="Polynomials of the searched Sobol' coordinates (default: primitive, ascending)"
    )
    workers: Optional[int] = Field(default=None, ge=1)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_spec(self) -> "SearchSpec":
        if (self.k is None) == (self.n is None):
            raise ValueError("give exactly one of k and n")
        if self.n is not None:
            if self.construction != "ordinaryLattice" and self.n & (self.n - 1):
                raise ValueError(f"{self.construction} needs n = 2^k, got n = {self.n}")
        if self.construction == "ordinaryLattice" and self.fom.family != "Palpha":
            raise ValueError(f"Ordinary lattices are searched with Palpha, not {self.fom.family}")
        if self.fom.family in T_VALUE_FAMILIES and self.construction == "interlaced":
            raise ValueError("t-value criteria are not defined for partially interlaced rules")
        if self.construction == "interlaced" and self.fom.d != self.interlacing:
            raise ValueError(
                f"Interlacing factor {self.interlacing} differs from the merit's d = {self.fom.d}"
            )
        if isinstance(self.method, MixedCbc) and self.method.pivot > self.coordinates + 1:
            raise ValueError(
                f"mixed-CBC pivot {self.method.pivot} exceeds {self.coordinates + 1}"
            )
        if self.multi_level is not None:
            if self.size_exponent is None:
                raise ValueError("multi-level criteria need n = 2^k")
            if self.multi_level.first > self.size_exponent:
                raise ValueError(f"k_min = {self.multi_level.first} exceeds k = {self.size_exponent}")
            self.multi_level.weights_for(self.size_exponent)
        if self.dimension_levels is not None:
            if self.dimension_levels.first > self.s:
                raise ValueError(f"s_min = {self.dimension_levels.first} exceeds s = {self.s}")
            self.dimension_levels.weights_for(self.s)
        return self

    @property
    def point_count(self) -> int:
        return self.n if self.n is not None else 1 << (self.k or 0)

    @property
    def size_exponent(self) -> Optional[int]:
        """k with n = 2^k, or None for other lattice sizes."""
        n = self.point_count
        return n.bit_length() - 1 if n & (n - 1) == 0 else None

    @property
    def coordinates(self) -> int:
        """Number of coordinates chosen one at a time (s * d for interlaced rules)."""
        return self.s * self.interlacing if self.construction == "interlaced" else self.s


class SearchResult(BaseModel):
    best: PointSetDef
    merit: MeritValue
    evaluations: int = Field(ge=0, description="Candidate merit evaluations performed")
    per_coordinate_merits: Optional[tuple[float, ...]] = Field(
        default=None, description="Objective after each CBC step"
    )

    model_config = ConfigDict(frozen=True)
