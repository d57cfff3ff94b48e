import math
from typing import Annotated, Literal, NamedTuple, Optional, Union

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..errors import QmcToolkitError
from ..gf2 import MAX_DEGREE, MAX_DIGITS, BinaryPolynomial, GeneratingMatrix, poly_gcd


class PointSetError(QmcToolkitError):
    """Invalid point-set definition or out-of-range index."""


class Points(NamedTuple):
    """A block of generated points held as exact integer numerators.

    Coordinate j of point i is ``values[i, j] / denominator``. Digital
    constructions have ``denominator == 2**digits``; lattices carry
    ``digits=None`` and ``denominator == n``.
    """

    values: npt.NDArray[np.uint64]
    denominator: int
    digits: Optional[int]

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    @property
    def s(self) -> int:
        return int(self.values.shape[1])

    def as_float(self) -> npt.NDArray[np.float64]:
        if self.digits is not None and self.digits > 52:
            # keep the top 52 digits so the float conversion is exact
            shift = np.uint64(self.digits - 52)
            return (self.values >> shift).astype(np.float64) / float(1 << 52)
        return self.values.astype(np.float64) / float(self.denominator)

    def columns(self, coords: list[int]) -> "Points":
        """Projection onto 0-based coordinates."""
        return Points(self.values[:, coords], self.denominator, self.digits)


class Rank1Lattice(BaseModel):
    """Rank-1 lattice {i a / n mod 1}."""

    kind: Literal["lattice"] = "lattice"
    n: int = Field(ge=1, description="Number of points")
    gen: tuple[int, ...] = Field(min_length=1, description="Generating vector a")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_gen(self) -> "Rank1Lattice":
        for j, a in enumerate(self.gen):
            if not 0 <= a < self.n:
                raise ValueError(f"gen[{j}] = {a} is not in Z_{self.n}")
        return self

    @property
    def s(self) -> int:
        return len(self.gen)

    def is_admissible(self) -> bool:
        """True when every component is a unit modulo n."""
        return all(math.gcd(a, self.n) == 1 for a in self.gen)


class DigitalNetBase2(BaseModel):
    """Digital net with n = 2^k points and s generating matrices of shape w x k.

    Only the shapes are validated here; the rank condition on the top k x k
    block is checked by :func:`qmc_toolkit.pointsets.validate_net` at the
    places that promise a proper net (higher-order and interlaced rules do
    not satisfy it).
    """

    kind: Literal["net"] = "net"
    k: int = Field(ge=1, le=MAX_DIGITS)
    w: int = Field(ge=1, le=MAX_DIGITS)
    matrices: tuple[GeneratingMatrix, ...] = Field(min_length=1)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_shapes(self) -> "DigitalNetBase2":
        if self.k > self.w:
            raise ValueError(f"k = {self.k} exceeds w = {self.w}")
        for j, m in enumerate(self.matrices):
            if m.rows != self.w or m.cols != self.k:
                raise ValueError(
                    f"Matrix {j} is {m.rows}x{m.cols}, expected {self.w}x{self.k}"
                )
        return self

    @property
    def s(self) -> int:
        return len(self.matrices)

    @property
    def n(self) -> int:
        return 1 << self.k


class PolynomialLatticeRule(BaseModel):
    """Polynomial lattice rule with modulus Q(z) of degree k."""

    kind: Literal["plr"] = "plr"
    modulus: BinaryPolynomial
    gen: tuple[BinaryPolynomial, ...] = Field(min_length=1)
    w: int = Field(default=31, ge=1, le=MAX_DIGITS)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_rule(self) -> "PolynomialLatticeRule":
        k = self.modulus.degree
        if not isinstance(k, int) or not 1 <= k <= MAX_DEGREE:
            raise ValueError(f"Modulus degree must be in [1, {MAX_DEGREE}], got {k}")
        if self.w < k:
            raise ValueError(f"w = {self.w} must be at least k = {k}")
        for j, a in enumerate(self.gen):
            if a.degree >= k:
                raise ValueError(f"gen[{j}] = {a} has degree >= {k}")
            if poly_gcd(a, self.modulus).bits != 1:
                raise ValueError(f"gen[{j}] = {a} has a common factor with {self.modulus}")
        return self

    @property
    def k(self) -> int:
        return self.modulus.bits.bit_length() - 1

    @property
    def s(self) -> int:
        return len(self.gen)


class HigherOrderPLR(BaseModel):
    """First 2^k points of a PLR whose modulus has degree alpha * k."""

    kind: Literal["hoplr"] = "hoplr"
    modulus: BinaryPolynomial
    gen: tuple[BinaryPolynomial, ...] = Field(min_length=1)
    k: int = Field(ge=1, le=MAX_DEGREE)
    w: int = Field(default=31, ge=1, le=MAX_DIGITS)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_rule(self) -> "HigherOrderPLR":
        degree = self.modulus.degree
        if not isinstance(degree, int) or degree < self.k or degree % self.k:
            raise ValueError(
                f"Modulus degree {degree} is not a multiple alpha * k of k = {self.k}"
            )
        for j, a in enumerate(self.gen):
            if a.degree >= degree:
                raise ValueError(f"gen[{j}] = {a} has degree >= {degree}")
        return self

    @property
    def alpha(self) -> int:
        return (self.modulus.bits.bit_length() - 1) // self.k

    @property
    def s(self) -> int:
        return len(self.gen)


class SobolSpec(BaseModel):
    """Initial direction numbers for Sobol' coordinates 2, 3, ...

    ``direction_numbers[j]`` and ``polynomials[j]`` describe coordinate j + 2;
    coordinate 1 is always the identity matrix.
    """

    direction_numbers: tuple[tuple[int, ...], ...] = ()
    polynomials: tuple[BinaryPolynomial, ...] = ()

    model_config = ConfigDict(frozen=True)

    @field_validator("direction_numbers")
    @classmethod
    def _check_m(cls, v: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        for j, ms in enumerate(v):
            if not ms:
                raise ValueError(f"Coordinate {j + 2} has no direction numbers")
            for c, m in enumerate(ms, start=1):
                if m % 2 == 0:
                    raise ValueError(f"m_{{{j + 2},{c}}} = {m} is even")
                if not 1 <= m < (1 << c):
                    raise ValueError(f"m_{{{j + 2},{c}}} = {m} is not in [1, 2^{c})")
        return v

    @model_validator(mode="after")
    def _check_polynomials(self) -> "SobolSpec":
        if len(self.polynomials) != len(self.direction_numbers):
            raise ValueError(
                f"{len(self.polynomials)} polynomials for "
                f"{len(self.direction_numbers)} coordinates"
            )
        for j, p in enumerate(self.polynomials):
            if p.bits < 3 or p.bits % 2 == 0:
                raise ValueError(f"Polynomial {p} of coordinate {j + 2} is not admissible")
        return self

    @property
    def max_dimension(self) -> int:
        return len(self.direction_numbers) + 1


class SobolNet(BaseModel):
    """The first 2^k points of the s-dimensional Sobol' sequence given by ``spec``."""

    kind: Literal["sobol"] = "sobol"
    spec: SobolSpec
    s: int = Field(ge=1)
    k: int = Field(ge=1, le=MAX_DIGITS)
    w: Optional[int] = Field(default=None, ge=1, le=MAX_DIGITS)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_dimension(self) -> "SobolNet":
        if self.s > self.spec.max_dimension:
            raise ValueError(
                f"missing direction numbers for coordinate {self.spec.max_dimension + 1}"
            )
        if self.w is not None and self.w < self.k:
            raise ValueError(f"w = {self.w} must be at least k = {self.k}")
        return self


class InterlacedNet(BaseModel):
    """Digital interlacing of factor d of an s*d-dimensional inner net."""

    kind: Literal["interlaced"] = "interlaced"
    inner: "InnerNetDef"
    d: int = Field(ge=1)
    w: Optional[int] = Field(default=None, ge=1, le=MAX_DIGITS)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_divisible(self) -> "InterlacedNet":
        if self.inner.s % self.d:
            raise ValueError(
                f"Inner coordinate count {self.inner.s} is not divisible by d = {self.d}"
            )
        return self

    @property
    def s(self) -> int:
        return self.inner.s // self.d


class IidPointSet(BaseModel):
    """Monte Carlo baseline: n independent uniform points, drawn per replicate."""

    kind: Literal["iid"] = "iid"
    n: int = Field(ge=1)
    s: int = Field(ge=1)
    w: int = Field(default=53, ge=1, le=MAX_DIGITS)

    model_config = ConfigDict(frozen=True)


InnerNetDef = Annotated[
    Union[DigitalNetBase2, PolynomialLatticeRule, SobolNet, HigherOrderPLR],
    Field(discriminator="kind"),
]

PointSetDef = Annotated[
    Union[
        Rank1Lattice,
        DigitalNetBase2,
        PolynomialLatticeRule,
        HigherOrderPLR,
        SobolNet,
        InterlacedNet,
        IidPointSet,
    ],
    Field(discriminator="kind"),
]

InterlacedNet.model_rebuild()
