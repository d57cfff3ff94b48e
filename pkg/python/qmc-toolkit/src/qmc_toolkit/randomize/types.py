from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import QmcToolkitError
from ..pointsets import IidPointSet, PointSetDef, Rank1Lattice


class RandomizationError(QmcToolkitError):
    """Randomization not applicable to the point set, or bad scrambling input."""


RandomizationKind = Literal["none", "shiftMod1", "digitalShift", "lmsPlusShift", "nus"]

DIGITAL_RANDOMIZATIONS: frozenset[str] = frozenset({"digitalShift", "lmsPlusShift", "nus"})


class Randomization(BaseModel):
    kind: RandomizationKind = "none"
    seed: int = Field(default=0, ge=0, lt=2**64)

    model_config = ConfigDict(frozen=True)


class RandomizedPointSet(BaseModel):
    """One replicate of a randomized construction.

    All random draws are keyed by (seed, replicate, coordinate), so changing
    the replicate index re-derives every draw and adding coordinates leaves
    earlier ones untouched.
    """

    base: PointSetDef
    randomization: Randomization = Field(default_factory=Randomization)
    replicate: int = Field(default=0, ge=0)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_applicable(self) -> "RandomizedPointSet":
        kind = self.randomization.kind
        if kind == "shiftMod1" and not isinstance(self.base, Rank1Lattice):
            raise ValueError(f"shiftMod1 applies to lattices, not {self.base.kind}")
        if kind in DIGITAL_RANDOMIZATIONS and isinstance(self.base, (Rank1Lattice, IidPointSet)):
            raise ValueError(f"{kind} applies to digital nets, not {self.base.kind}")
        if isinstance(self.base, IidPointSet) and kind != "none":
            raise ValueError("i.i.d. points are already random; use randomization 'none'")
        return self
