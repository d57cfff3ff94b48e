import numpy as np

from .types import Points, PointSetError, Rank1Lattice


def korobov_vector(a: int, s: int, n: int) -> tuple[int, ...]:
    """(1, a, a^2, ..., a^(s-1)) mod n."""
    if not 1 <= a < n:
        raise PointSetError(f"Korobov parameter a = {a} is not in [1, {n})")
    out = []
    value = 1
    for _ in range(s):
        out.append(value)
        value = (value * a) % n
    return tuple(out)


def lattice_point(lat: Rank1Lattice, i: int) -> tuple[float, ...]:
    """Point i of the lattice, coordinate j being (i a_j mod n) / n."""
    if not 0 <= i < lat.n:
        raise PointSetError(f"Index {i} out of range [0, {lat.n})")
    return tuple(((i * a) % lat.n) / lat.n for a in lat.gen)


def lattice_points(lat: Rank1Lattice, start: int = 0, stop: int | None = None) -> Points:
    stop = lat.n if stop is None else stop
    if not 0 <= start <= stop <= lat.n:
        raise PointSetError(f"Index range [{start}, {stop}) not within [0, {lat.n})")
    idx = np.arange(start, stop, dtype=np.uint64)
    gen = np.asarray(lat.gen, dtype=np.uint64)
    values = (idx[:, None] * gen[None, :]) % np.uint64(lat.n)
    return Points(values, lat.n, None)
