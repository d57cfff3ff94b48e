"""Randomizations of lattices and digital nets.

Digital randomizations act on integer numerators over 2^w, so they are
exact; floats are produced only at the end by ``Points.as_float``.
"""

from typing import Sequence

import numpy as np
import numpy.typing as npt

from ..gf2 import GeneratingMatrix, gf2_matmul
from ..pointsets import DigitalNetBase2, Points, Rank1Lattice, lattice_points, net_points
from ..rng import hash_key64, random_bits, splitmix64
from .types import RandomizationError

_ONE = np.uint64(1)


def shift_lattice(lat: Rank1Lattice, u: Sequence[float]) -> npt.NDArray[np.float64]:
    """(i a / n + u) mod 1 for every lattice point."""
    if len(u) != lat.s:
        raise RandomizationError(f"Shift has {len(u)} coordinates, lattice has {lat.s}")
    if any(not 0 <= x < 1 for x in u):
        raise RandomizationError(f"Shift {tuple(u)} is not in [0, 1)^s")
    return np.mod(lattice_points(lat).as_float() + np.asarray(u)[None, :], 1.0)


def digital_shift(points: DigitalNetBase2 | Points, shift: Sequence[int]) -> Points:
    """XOR coordinate j of every point with ``shift[j]``, an integer with w digits."""
    if isinstance(points, DigitalNetBase2):
        points = net_points(points)
    if points.digits is None:
        raise RandomizationError("A digital shift needs digital points")
    if len(shift) != points.s:
        raise RandomizationError(f"Shift has {len(shift)} coordinates, points have {points.s}")
    if any(not 0 <= x < (1 << points.digits) for x in shift):
        raise RandomizationError(f"Shift digits beyond w = {points.digits} must be zero")
    values = points.values ^ np.asarray(shift, dtype=np.uint64)[None, :]
    return points._replace(values=values)


def random_lower_triangular(gen: np.random.Generator, w: int) -> GeneratingMatrix:
    """w x w lower-triangular matrix with unit diagonal and uniform bits below it."""
    below = random_bits(gen, w, w)
    columns = []
    for c in range(w):
        diagonal = 1 << (w - 1 - c)
        columns.append(diagonal | (int(below[c]) & (diagonal - 1)))
    return GeneratingMatrix(rows=w, cols=w, columns=tuple(columns))


def _check_lower_triangular(m: GeneratingMatrix, w: int, j: int) -> None:
    if m.rows != w or m.cols != w:
        raise RandomizationError(f"Scrambling matrix {j + 1} is {m.rows}x{m.cols}, expected {w}x{w}")
    for c, column in enumerate(m.columns):
        diagonal = 1 << (w - 1 - c)
        if column >> (w - c):
            raise RandomizationError(f"Scrambling matrix {j + 1} is not lower-triangular")
        if not column & diagonal:
            raise RandomizationError(f"Scrambling matrix {j + 1} is singular")


def lms(net: DigitalNetBase2, lower_triangulars: Sequence[GeneratingMatrix]) -> DigitalNetBase2:
    """Left matrix scramble: C_j becomes L_j C_j over Z2."""
    if len(lower_triangulars) != net.s:
        raise RandomizationError(
            f"{len(lower_triangulars)} scrambling matrices for {net.s} coordinates"
        )
    for j, m in enumerate(lower_triangulars):
        _check_lower_triangular(m, net.w, j)
    matrices = tuple(gf2_matmul(m, c) for m, c in zip(lower_triangulars, net.matrices))
    return DigitalNetBase2(k=net.k, w=net.w, matrices=matrices)


def nus_points(points: Points, depth: int, keys: Sequence[np.uint64]) -> Points:
    """Nested uniform scramble of the first ``depth`` digits, uniform digits below.

    Digit l of a point is flipped by a bit hashed from the node
    (1 << (l - 1)) | (first l - 1 original digits) under the coordinate's
    key, so points sharing a prefix share the flip decisions. Digits past
    ``depth`` are hashed from the whole original value, independently per
    distinct point.
    """
    w = points.digits
    if w is None:
        raise RandomizationError("Nested uniform scrambling needs digital points")
    if not 0 <= depth <= w:
        raise RandomizationError(f"Scrambling depth {depth} not in [0, {w}]")
    if len(keys) != points.s:
        raise RandomizationError(f"{len(keys)} keys for {points.s} coordinates")
    out = np.empty_like(points.values)
    for j, key in enumerate(keys):
        original = points.values[:, j]
        scrambled = original.copy()
        for ell in range(1, depth + 1):
            prefix = original >> np.uint64(w - ell + 1)
            node = prefix | (_ONE << np.uint64(ell - 1))
            flip = splitmix64(node ^ key) >> np.uint64(63)
            scrambled ^= flip << np.uint64(w - ell)
        tail_bits = w - depth
        if tail_bits:
            tail_key = splitmix64(np.asarray([key], dtype=np.uint64))[0]
            tail = splitmix64((original | (_ONE << np.uint64(w))) ^ tail_key)
            tail >>= np.uint64(64 - tail_bits)
            head = (scrambled >> np.uint64(tail_bits)) << np.uint64(tail_bits)
            scrambled = head | tail
        out[:, j] = scrambled
    return points._replace(values=out)


def nus(
    net: DigitalNetBase2, seed: int, start: int = 0, stop: int | None = None, replicate: int = 0
) -> Points:
    """Nested uniform scramble of the net to depth k, keyed by (seed, replicate, coordinate)."""
    keys = [hash_key64(seed, "nus", replicate, j) for j in range(net.s)]
    return nus_points(net_points(net, start, stop), net.k, keys)
