"""Counter-based random streams.

Every random draw in the toolkit comes from a Philox generator whose key is
derived from the user seed and a named path (``("search", "coord", 3)``,
``("lms", replicate, j)``...). Two draws never share a stream unless their
paths are equal, so results do not depend on evaluation order or on the
number of workers.
"""

import hashlib

import numpy as np
import numpy.typing as npt

_MASK64 = (1 << 64) - 1


def child_key(seed: int, *path: object) -> int:
    """Stable 128-bit key for the stream named ``path`` under ``seed``."""
    h = hashlib.blake2b(digest_size=16)
    h.update(str(seed & _MASK64).encode("ascii"))
    for part in path:
        h.update(b":")
        h.update(str(part).encode("utf-8"))
    return int.from_bytes(h.digest(), "little", signed=False)


def stream(seed: int, *path: object) -> np.random.Generator:
    """Fresh generator for the named substream."""
    return np.random.Generator(np.random.Philox(key=child_key(seed, *path)))


def random_bits(gen: np.random.Generator, shape: int | tuple[int, ...], w: int) -> npt.NDArray[np.uint64]:
    """Uniform integers in [0, 2^w) for 0 <= w <= 64."""
    raw = gen.integers(0, _MASK64, size=shape, dtype=np.uint64, endpoint=True)
    if w >= 64:
        return raw
    return raw >> np.uint64(64 - w) if w > 0 else np.zeros_like(raw)


def splitmix64(values: npt.NDArray[np.uint64]) -> npt.NDArray[np.uint64]:
    """Vectorised splitmix64 finaliser; a bijection on 64-bit integers."""
    with np.errstate(over="ignore"):
        z = values + np.uint64(0x9E3779B97F4A7C15)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        return z ^ (z >> np.uint64(31))


def hash_key64(seed: int, *path: object) -> np.uint64:
    """64-bit key for :func:`splitmix64`-based hashing."""
    return np.uint64(child_key(seed, *path) & _MASK64)
