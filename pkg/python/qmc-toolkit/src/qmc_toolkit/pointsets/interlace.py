"""Digital interlacing.

Output coordinate j of factor d takes its rows (or digits) alternately from
inner coordinates (j-1)d+1, ..., jd: row (m-1)d + l of the output is row m of
inner coordinate (j-1)d + l.
"""

import numpy as np

from ..gf2 import MAX_DIGITS, GeneratingMatrix
from .types import DigitalNetBase2, Points, PointSetError


def interlaced_rows(k: int, inner_w: int, d: int, w: int | None = None) -> int:
    """Number of output digits: min(w, d k), capped at 63."""
    return min(inner_w if w is None else w, d * k, MAX_DIGITS)


def interlace(inner: DigitalNetBase2, d: int, w: int | None = None) -> DigitalNetBase2:
    if d < 1:
        raise PointSetError(f"Interlacing factor must be >= 1, got {d}")
    if inner.s % d:
        raise PointSetError(f"Inner coordinate count {inner.s} is not divisible by d = {d}")
    if d == 1:
        return inner if w is None else DigitalNetBase2(
            k=inner.k, w=w, matrices=tuple(m.with_rows(w) for m in inner.matrices)
        )
    rows = interlaced_rows(inner.k, inner.w, d, w)
    matrices = []
    for j in range(inner.s // d):
        block = [inner.matrices[j * d + l].row_ints() for l in range(d)]
        out_rows = [block[r % d][r // d] for r in range(rows)]
        matrices.append(GeneratingMatrix.from_row_ints(out_rows, inner.k))
    return DigitalNetBase2(k=inner.k, w=rows, matrices=tuple(matrices))


def interlace_points(points: Points, d: int, w: int | None = None) -> Points:
    """Interlace the digits of already generated (possibly randomized) points."""
    if points.digits is None:
        raise PointSetError("Only digital point sets can be interlaced")
    if points.s % d:
        raise PointSetError(f"Inner coordinate count {points.s} is not divisible by d = {d}")
    if d == 1:
        return points
    inner_w = points.digits
    out_w = min(inner_w * d, MAX_DIGITS) if w is None else w
    if out_w > MAX_DIGITS:
        raise PointSetError(f"w = {out_w} exceeds {MAX_DIGITS}")
    values = np.zeros((points.n, points.s // d), dtype=np.uint64)
    one = np.uint64(1)
    for j in range(points.s // d):
        for r in range(out_w):
            m, l = divmod(r, d)
            if m >= inner_w:
                break
            digit = (points.values[:, j * d + l] >> np.uint64(inner_w - 1 - m)) & one
            values[:, j] |= digit << np.uint64(out_w - 1 - r)
    return Points(values, 1 << out_w, out_w)
