import math
from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..errors import QmcToolkitError


class WeightError(QmcToolkitError):
    """Invalid weights or projection."""


def _check_values(values: tuple[float, ...]) -> tuple[float, ...]:
    for i, v in enumerate(values):
        if not math.isfinite(v) or v < 0:
            raise ValueError(f"Weight #{i + 1} = {v} must be finite and >= 0")
    return values


class ProductWeights(BaseModel):
    """gamma_u = prod_{j in u} gamma_j."""

    kind: Literal["product"] = "product"
    gammas: tuple[float, ...] = Field(min_length=1, description="gamma_j for j = 1..s")

    model_config = ConfigDict(frozen=True)

    @field_validator("gammas")
    @classmethod
    def _check_gammas(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        return _check_values(v)


class OrderDependentWeights(BaseModel):
    """gamma_u = Gamma_{|u|}; orders beyond the list use ``default``."""

    kind: Literal["orderDependent"] = "orderDependent"
    gammas: tuple[float, ...] = Field(default=(), description="Gamma_l for l = 1, 2, ...")
    default: float = Field(default=0.0, ge=0, allow_inf_nan=False)

    model_config = ConfigDict(frozen=True)

    @field_validator("gammas")
    @classmethod
    def _check_gammas(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        return _check_values(v)


class PODWeights(BaseModel):
    """Product and order-dependent: gamma_u = Gamma_{|u|} prod_{j in u} gamma_j."""

    kind: Literal["pod"] = "pod"
    order_gammas: tuple[float, ...] = Field(description="Gamma_l for l = 1, 2, ...")
    product_gammas: tuple[float, ...] = Field(min_length=1, description="gamma_j for j = 1..s")
    default: float = Field(default=0.0, ge=0, allow_inf_nan=False)

    model_config = ConfigDict(frozen=True)

    @field_validator("order_gammas", "product_gammas")
    @classmethod
    def _check_gammas(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        return _check_values(v)


class ExplicitWeights(BaseModel):
    """Weights listed per projection; unlisted projections weigh 0."""

    kind: Literal["explicit"] = "explicit"
    entries: dict[tuple[int, ...], float] = Field(
        description="1-based coordinate subset -> weight"
    )

    model_config = ConfigDict(frozen=True)

    @field_validator("entries")
    @classmethod
    def _normalize(cls, v: dict[tuple[int, ...], float]) -> dict[tuple[int, ...], float]:
        out: dict[tuple[int, ...], float] = {}
        for subset, weight in v.items():
            key = tuple(sorted(set(subset)))
            if not key:
                raise ValueError("Explicit weights need nonempty subsets")
            if key[0] < 1:
                raise ValueError(f"Coordinates are 1-based, got {subset}")
            if key in out:
                raise ValueError(f"Projection {key} is listed twice")
            if not math.isfinite(weight) or weight < 0:
                raise ValueError(f"Weight of {subset} = {weight} must be finite and >= 0")
            out[key] = weight
        return out


WeightSpec = Annotated[
    Union[ProductWeights, OrderDependentWeights, PODWeights, ExplicitWeights],
    Field(discriminator="kind"),
]
