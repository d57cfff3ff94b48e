"""Digital nets in base 2 and the polynomial constructions that produce them."""

from typing import Sequence

import numpy as np

from ..gf2 import (
    BinaryPolynomial,
    GeneratingMatrix,
    expansion_matrix,
    hankel_columns,
    is_invertible_top,
)
from .types import (
    DigitalNetBase2,
    HigherOrderPLR,
    Points,
    PointSetError,
    PolynomialLatticeRule,
)


def validate_net(net: DigitalNetBase2) -> DigitalNetBase2:
    """Check that every top k x k block is invertible; return the net."""
    for j, m in enumerate(net.matrices):
        if not is_invertible_top(m):
            raise PointSetError(f"Generating matrix {j + 1} has a singular top {net.k}x{net.k} block")
    return net


def net_points(net: DigitalNetBase2, start: int = 0, stop: int | None = None) -> Points:
    """Points ``start`` to ``stop - 1`` of the net.

    The digits of the index, least significant first, select the columns
    XORed into each coordinate.
    """
    stop = net.n if stop is None else stop
    if not 0 <= start <= stop <= net.n:
        raise PointSetError(f"Index range [{start}, {stop}) not within [0, {net.n})")
    idx = np.arange(start, stop, dtype=np.uint64)
    columns = np.array([m.columns for m in net.matrices], dtype=np.uint64).T  # (k, s)
    values = np.zeros((idx.size, net.s), dtype=np.uint64)
    for c in range(net.k):
        bit = (idx >> np.uint64(c)) & np.uint64(1)
        values ^= bit[:, None] * columns[c][None, :]
    return Points(values, 1 << net.w, net.w)


def net_point(net: DigitalNetBase2, i: int) -> tuple[float, ...]:
    if not 0 <= i < net.n:
        raise PointSetError(f"Index {i} out of range [0, {net.n})")
    return tuple(float(x) for x in net_points(net, i, i + 1).as_float()[0])


def plr_to_net(plr: PolynomialLatticeRule) -> DigitalNetBase2:
    """Hankel generating matrices of the rule; point i is the PLR point of h(z) with the digits of i."""
    matrices = tuple(expansion_matrix(a, plr.modulus, plr.w) for a in plr.gen)
    return DigitalNetBase2(k=plr.k, w=plr.w, matrices=matrices)


def hoplr_net(rule: HigherOrderPLR) -> DigitalNetBase2:
    """Net of the first 2^k points of a PLR with modulus of degree alpha * k."""
    matrices = tuple(
        GeneratingMatrix(
            rows=rule.w, cols=rule.k, columns=hankel_columns(a, rule.modulus, rule.w, rule.k)
        )
        for a in rule.gen
    )
    return DigitalNetBase2(k=rule.k, w=rule.w, matrices=matrices)


def hoplr_points(
    modulus: BinaryPolynomial, gen: Sequence[BinaryPolynomial], k: int, w: int = 31
) -> Points:
    return net_points(hoplr_net(HigherOrderPLR(modulus=modulus, gen=tuple(gen), k=k, w=w)))


def with_digits(net: DigitalNetBase2, w: int) -> DigitalNetBase2:
    """Same net with w output digits (padding with zero rows or truncating)."""
    if w < net.k:
        raise PointSetError(f"w = {w} must be at least k = {net.k}")
    return DigitalNetBase2(k=net.k, w=w, matrices=tuple(m.with_rows(w) for m in net.matrices))


def net_prefix(net: DigitalNetBase2, k: int) -> DigitalNetBase2:
    """First 2^k points, i.e. the first k columns of every matrix."""
    if not 1 <= k <= net.k:
        raise PointSetError(f"Prefix exponent {k} not in [1, {net.k}]")
    return DigitalNetBase2(k=k, w=net.w, matrices=tuple(m.leading_columns(k) for m in net.matrices))


def random_regular_matrix(gen: np.random.Generator, k: int, w: int) -> GeneratingMatrix:
    """Uniform w x k matrix conditioned on an invertible top k x k block (rejection sampling)."""
    while True:
        columns = tuple(int(x) for x in gen.integers(0, 1 << w, size=k, dtype=np.uint64))
        matrix = GeneratingMatrix(rows=w, cols=k, columns=columns)
        if is_invertible_top(matrix):
            return matrix
