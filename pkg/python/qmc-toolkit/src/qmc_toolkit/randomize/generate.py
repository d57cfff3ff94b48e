"""Randomized point generation by index range."""

import numpy as np
import numpy.typing as npt

from ..pointsets import (
    DigitalNetBase2,
    IidPointSet,
    InterlacedNet,
    Points,
    PointSetDef,
    Rank1Lattice,
    interlace_points,
    lattice_points,
    net_points,
    point_count,
    to_digital_net,
)
from ..rng import hash_key64, random_bits, splitmix64, stream
from .scramble import digital_shift, lms, nus_points, random_lower_triangular
from .types import Randomization, RandomizationError, RandomizationKind, RandomizedPointSet

FloatArray = npt.NDArray[np.float64]


def create_randomized_point_set(
    *,
    base: PointSetDef,
    kind: RandomizationKind = "none",
    seed: int = 0,
    replicate: int = 0,
) -> RandomizedPointSet:
    return RandomizedPointSet(
        base=base, randomization=Randomization(kind=kind, seed=seed), replicate=replicate
    )


def _check_range(n: int, start: int, stop: int | None) -> int:
    stop = n if stop is None else stop
    if not 0 <= start <= stop <= n:
        raise RandomizationError(f"range [{start}, {stop}) out of bounds for n = {n}")
    return stop


def _shifts(seed: int, name: str, replicate: int, s: int, w: int) -> list[int]:
    return [int(random_bits(stream(seed, name, replicate, j), 1, w)[0]) for j in range(s)]


def _randomize_net(
    net: DigitalNetBase2, randomization: Randomization, replicate: int, start: int, stop: int
) -> Points:
    seed, kind = randomization.seed, randomization.kind
    match kind:
        case "none":
            return net_points(net, start, stop)
        case "digitalShift":
            shift = _shifts(seed, "digital-shift", replicate, net.s, net.w)
            return digital_shift(net_points(net, start, stop), shift)
        case "lmsPlusShift":
            lower = [
                random_lower_triangular(stream(seed, "lms", replicate, j), net.w)
                for j in range(net.s)
            ]
            shift = _shifts(seed, "lms-shift", replicate, net.s, net.w)
            return digital_shift(net_points(lms(net, lower), start, stop), shift)
        case "nus":
            keys = [hash_key64(seed, "nus", replicate, j) for j in range(net.s)]
            return nus_points(net_points(net, start, stop), net.k, keys)
    raise RandomizationError(f"{kind} does not apply to digital nets")


def _iid_points(base: IidPointSet, seed: int, replicate: int, start: int, stop: int) -> Points:
    """Uniform w-digit points hashed from (seed, replicate, index, coordinate)."""
    key = hash_key64(seed, "iid", replicate)
    counters = np.arange(start, stop, dtype=np.uint64)[:, None] * np.uint64(base.s)
    counters = counters + np.arange(base.s, dtype=np.uint64)[None, :]
    values = splitmix64(splitmix64(counters ^ key)) >> np.uint64(64 - base.w)
    return Points(values, 1 << base.w, base.w)


def randomized_points(rps: RandomizedPointSet, start: int = 0, stop: int | None = None) -> Points:
    """Exact randomized points of a digital or i.i.d. point set.

    Interlaced rules are randomized on their inner net and interlaced after.
    """
    base, randomization = rps.base, rps.randomization
    stop = _check_range(point_count(base), start, stop)
    if isinstance(base, IidPointSet):
        return _iid_points(base, randomization.seed, rps.replicate, start, stop)
    if isinstance(base, Rank1Lattice):
        raise RandomizationError("Lattice points are not digital; use generate_stream")
    if isinstance(base, InterlacedNet):
        inner = _randomize_net(
            to_digital_net(base.inner), randomization, rps.replicate, start, stop
        )
        return interlace_points(inner, base.d, to_digital_net(base).w)
    return _randomize_net(to_digital_net(base), randomization, rps.replicate, start, stop)


def generate_stream(rps: RandomizedPointSet, start: int = 0, stop: int | None = None) -> FloatArray:
    """Points ``start`` to ``stop - 1`` of the randomized set, as floats in [0, 1).

    Deterministic in (base, seed, replicate); disjoint ranges concatenate to
    the full set.
    """
    base, randomization = rps.base, rps.randomization
    if isinstance(base, Rank1Lattice):
        stop = _check_range(base.n, start, stop)
        points = lattice_points(base, start, stop).as_float()
        if randomization.kind == "shiftMod1":
            draws = [stream(randomization.seed, "shift", rps.replicate, j) for j in range(base.s)]
            u = np.asarray([gen.random() for gen in draws])
            points = np.mod(points + u[None, :], 1.0)
        return points
    return randomized_points(rps, start, stop).as_float()
