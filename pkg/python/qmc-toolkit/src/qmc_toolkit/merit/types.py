import math
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import QmcToolkitError
from ..weights import WeightSpec


class MeritError(QmcToolkitError):
    """Figure of merit undefined for the given family, point set or weights."""


FomFamily = Literal[
    "Palpha",
    "PalphaTilde",
    "Sobolev1",
    "IAlphaDa",
    "IAlphaDb",
    "IAlphaDc",
    "R2prime",
    "TValueBound",
    "TValueRaw",
]

KERNEL_FAMILIES: frozenset[str] = frozenset(
    {"Palpha", "PalphaTilde", "Sobolev1", "IAlphaDa", "IAlphaDb", "IAlphaDc", "R2prime"}
)
INTERLACED_FAMILIES: frozenset[str] = frozenset({"IAlphaDa", "IAlphaDb", "IAlphaDc"})
T_VALUE_FAMILIES: frozenset[str] = frozenset({"TValueBound", "TValueRaw"})
# Families whose kernel already equals the squared projection discrepancy.
_SQUARED_FAMILIES = frozenset({"Palpha", "PalphaTilde", "Sobolev1", "IAlphaDc"})


class FomSpec(BaseModel):
    """A weighted figure of merit.

    ``q`` is the norm exponent of the weighted combination; ``math.inf``
    selects the weighted maximum over projections.
    """

    family: FomFamily
    alpha: float = Field(default=2.0, gt=1, description="Smoothness")
    d: int = Field(default=1, ge=1, description="Interlacing factor")
    q: float = Field(default=2.0, ge=1, description="Norm exponent, may be inf")
    weights: WeightSpec

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_family(self) -> "FomSpec":
        if self.family == "Palpha" and (self.alpha != int(self.alpha) or int(self.alpha) % 2):
            raise ValueError(
                f"Palpha kernel needs an even integer alpha, got {self.alpha}; "
                "use the dual-lattice oracle for other values"
            )
        if self.family == "IAlphaDb" and not 1 < self.d <= self.alpha:
            raise ValueError(f"IAlphaDb requires 1 < d <= alpha, got d = {self.d}, alpha = {self.alpha}")
        if self.family == "IAlphaDa" and min(self.alpha, self.d) < 2:
            raise ValueError(f"IAlphaDa requires min(alpha, d) >= 2, got alpha = {self.alpha}, d = {self.d}")
        if self.family in ("IAlphaDa", "IAlphaDb", "IAlphaDc") and self.alpha != int(self.alpha):
            raise ValueError(f"{self.family} needs an integer alpha, got {self.alpha}")
        if self.d > 1 and self.family not in INTERLACED_FAMILIES:
            raise ValueError(f"Interlacing factor d = {self.d} only applies to IAlphaD* families")
        return self

    @property
    def natural_exponent(self) -> int:
        """Power of the projection discrepancy that the kernel sum represents."""
        return 2 if self.family in _SQUARED_FAMILIES else 1

    @property
    def is_max(self) -> bool:
        return math.isinf(self.q)


class MeritValue(BaseModel):
    """Value D^q of a figure of merit (the weighted maximum when q is infinite)."""

    total: float
    per_projection: Optional[dict[tuple[int, ...], float]] = None

    model_config = ConfigDict(frozen=True)
