"""Grammars of the command-line tokens (sizes, weights, merits, exploration methods)."""

import math
import re
from typing import Optional

from pydantic import ValidationError

from ..merit import FomSpec
from ..search import (
    Exhaustive,
    ExplorationMethod,
    FastCbc,
    FullCbc,
    Korobov,
    LevelCombination,
    MixedCbc,
    RandomCbc,
    RandomKorobov,
    RandomSampling,
)
from ..weights import (
    ExplicitWeights,
    OrderDependentWeights,
    PODWeights,
    ProductWeights,
    WeightSpec,
)
from .types import CliError

_POWER = re.compile(r"^\s*2\s*\^\s*(\d+)\s*$")
_INTERLACED = re.compile(r"^I([ABC]):(\d+):(\d+)$")
_PALPHA = re.compile(r"^P(\d+)(tilde)?$")
_EXPLICIT_ENTRY = re.compile(r"^\{([\d,\s]+)\}\s*=\s*(\S+)$")


def _float(token: str, what: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise CliError(f"{what}: {token!r} is not a number") from None


def _int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise CliError(f"{what}: {token!r} is not an integer") from None


def parse_floats(text: str, what: str) -> tuple[float, ...]:
    return tuple(_float(t, what) for t in text.split(",") if t.strip())


def parse_size(text: str) -> tuple[int, Optional[int]]:
    """'2^k' or a plain integer; returns (n, k) with k None when n is not a power of 2."""
    match = _POWER.match(text)
    if match:
        k = int(match.group(1))
        return 1 << k, k
    n = _int(text, "size")
    if n < 2:
        raise CliError(f"size must be at least 2, got {n}")
    return n, (n.bit_length() - 1 if n & (n - 1) == 0 else None)


def parse_norm(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity"):
        return math.inf
    q = _float(text, "norm exponent")
    if q < 1:
        raise CliError(f"norm exponent must be >= 1 or inf, got {q}")
    return q


def parse_weights(text: str, s: int) -> WeightSpec:
    """Weights from one of

    - ``product:g1,...,gs`` (a single value is repeated), ``product:DEFAULT:g1,...``
    - ``order-dependent:G0,G1,G2,...`` (G0 is a placeholder), ``order-dependent:DEFAULT:G1,G2,...``
    - ``POD:G1,...:g1,...``, ``POD:DEFAULT:G1,...:g1,...``
    - ``explicit:{1,2}=0.5;{3}=0.1``
    """
    kind, _, body = text.partition(":")
    parts = body.split(":") if body else []
    try:
        match kind.lower():
            case "product":
                if len(parts) == 2:
                    default = _float(parts[0], "product default")
                    gammas = parse_floats(parts[1], "product weights")
                    return ProductWeights(gammas=(gammas + (default,) * s)[: max(s, len(gammas))])
                if len(parts) == 1:
                    gammas = parse_floats(parts[0], "product weights")
                    if len(gammas) == 1:
                        gammas = gammas * s
                    if len(gammas) < s:
                        raise CliError(f"product weights list {len(gammas)} values for s = {s}")
                    return ProductWeights(gammas=gammas)
            case "order-dependent":
                if len(parts) == 2:
                    return OrderDependentWeights(
                        gammas=parse_floats(parts[1], "order-dependent weights"),
                        default=_float(parts[0], "order-dependent default"),
                    )
                if len(parts) == 1:
                    return OrderDependentWeights(gammas=parse_floats(parts[0], "order-dependent weights")[1:])
            case "pod":
                default = 0.0
                if len(parts) == 3:
                    default = _float(parts.pop(0), "POD default")
                if len(parts) == 2:
                    product = parse_floats(parts[1], "POD product weights")
                    if len(product) == 1:
                        product = product * s
                    return PODWeights(
                        order_gammas=parse_floats(parts[0], "POD order weights"),
                        product_gammas=product,
                        default=default,
                    )
            case "explicit":
                return ExplicitWeights(entries=_explicit_entries(body))
    except ValidationError as exc:
        raise CliError(f"invalid weights {text!r}: {exc.errors()[0]['msg']}") from None
    raise CliError(f"cannot parse weights {text!r}")


def _explicit_entries(body: str) -> dict[tuple[int, ...], float]:
    entries: dict[tuple[int, ...], float] = {}
    for item in filter(None, (part.strip() for part in body.split(";"))):
        match = _EXPLICIT_ENTRY.match(item)
        if not match:
            raise CliError(f"explicit weight {item!r} is not of the form {{i,j,...}}=value")
        subset = tuple(_int(t, "explicit weight subset") for t in match.group(1).split(",") if t.strip())
        entries[subset] = _float(match.group(2), "explicit weight")
    return entries


def parse_fom(name: str, *, q: float, weights: WeightSpec, lattice: bool) -> FomSpec:
    """Merit from its command-line name.

    ``CU:P2`` (and ``CU:P4``...) is the coordinate-uniform kernel path: P_alpha
    for ordinary lattices and the digital P_alpha-tilde for everything else.
    """
    token = name.strip()
    if token.startswith("CU:"):
        token = token[3:]
        if _PALPHA.match(token) and not lattice:
            token = token.removesuffix("tilde") + "tilde"
    try:
        if match := _PALPHA.match(token):
            family = "PalphaTilde" if match.group(2) else "Palpha"
            return FomSpec(family=family, alpha=int(match.group(1)), q=q, weights=weights)  # type: ignore[arg-type]
        if match := _INTERLACED.match(token):
            family = {"A": "IAlphaDa", "B": "IAlphaDb", "C": "IAlphaDc"}[match.group(1)]
            return FomSpec(
                family=family,  # type: ignore[arg-type]
                alpha=int(match.group(2)),
                d=int(match.group(3)),
                q=q,
                weights=weights,
            )
        match token.lower():
            case "sobolev1":
                return FomSpec(family="Sobolev1", q=q, weights=weights)
            case "r2prime":
                return FomSpec(family="R2prime", q=q, weights=weights)
            case "t-bound":
                return FomSpec(family="TValueBound", q=q, weights=weights)
            case "projdep:t-value" | "t-value":
                return FomSpec(family="TValueRaw", q=q, weights=weights)
    except ValidationError as exc:
        raise CliError(f"invalid figure of merit {name!r}: {exc.errors()[0]['msg']}") from None
    raise CliError(f"unknown figure of merit {name!r}")


def parse_exploration(text: str) -> ExplorationMethod:
    """``exhaustive``, ``random:r``, ``full-CBC``, ``fast-CBC``, ``random-CBC:r``,
    ``Korobov``, ``random-Korobov:r`` or ``mixed-CBC:r:d``.

    ``mixed-CBC:r:d`` runs full CBC on coordinates before d and r-sample
    random CBC from coordinate d on.
    """
    name, *args = text.strip().split(":")
    try:
        match name.lower(), args:
            case "exhaustive", []:
                return Exhaustive()
            case "random", [r]:
                return RandomSampling(r=_int(r, "random"))
            case "full-cbc" | "cbc", []:
                return FullCbc()
            case "fast-cbc", []:
                return FastCbc()
            case "random-cbc", [r]:
                return RandomCbc(r=_int(r, "random-CBC"))
            case "korobov", []:
                return Korobov()
            case "random-korobov", [r]:
                return RandomKorobov(r=_int(r, "random-Korobov"))
            case "mixed-cbc", [r, d]:
                return MixedCbc(r=_int(r, "mixed-CBC"), pivot=_int(d, "mixed-CBC"))
    except ValidationError as exc:
        raise CliError(f"invalid exploration {text!r}: {exc.errors()[0]['msg']}") from None
    raise CliError(f"unknown exploration method {text!r}")


def parse_levels(text: str) -> LevelCombination:
    """``FIRST[:sum|max[:w1,w2,...]]``."""
    first, *rest = text.split(":")
    combiner = rest[0] if rest else "sum"
    if combiner not in ("sum", "max"):
        raise CliError(f"level combiner must be sum or max, got {combiner!r}")
    weights = parse_floats(rest[1], "level weights") if len(rest) > 1 else None
    try:
        return LevelCombination(first=_int(first, "first level"), weights=weights, combiner=combiner)  # type: ignore[arg-type]
    except ValidationError as exc:
        raise CliError(f"invalid levels {text!r}: {exc.errors()[0]['msg']}") from None
