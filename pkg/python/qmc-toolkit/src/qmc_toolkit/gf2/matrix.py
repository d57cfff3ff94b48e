"""Binary linear algebra on generating matrices."""

from typing import Sequence

from .polynomial import _divmod
from .types import MAX_DIGITS, BinaryPolynomial, GeneratingMatrix, Gf2Error


def gf2_rank(rows: Sequence[int], n_cols: int) -> int:
    """Rank over Z2 of integer rows, bit c of a row being column c."""
    work = list(rows)
    rank = 0
    row_idx = 0
    for col in range(n_cols):
        pivot = None
        for r in range(row_idx, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for r in range(len(work)):
            if r != row_idx and (work[r] >> col) & 1:
                work[r] ^= work[row_idx]
        rank += 1
        row_idx += 1
        if row_idx == len(work):
            break
    return rank


def rank_gf2(m: GeneratingMatrix) -> int:
    return gf2_rank(m.row_ints(), m.cols)


def expansion_matrix(a: BinaryPolynomial, q: BinaryPolynomial, w: int) -> GeneratingMatrix:
    """Hankel matrix of the formal Laurent expansion of a(z)/q(z).

    Column c holds the first ``w`` digits of z^c a(z)/q(z), so entry
    (l, c) is the digit x_{l+c+1} of a/q and every row is the previous one
    shifted left by one column.
    """
    if q.is_zero() or q.degree < 1:
        raise Gf2Error(f"Modulus {q} must have degree >= 1")
    k = q.bits.bit_length() - 1
    if a.bits and a.degree >= k:
        raise Gf2Error(f"deg(a) = {a.degree} must be smaller than deg(q) = {k}")
    if w < k:
        raise Gf2Error(f"w = {w} must be at least k = {k}")
    return GeneratingMatrix(rows=w, cols=k, columns=hankel_columns(a, q, w, k))


def hankel_columns(
    a: BinaryPolynomial, q: BinaryPolynomial, w: int, cols: int
) -> tuple[int, ...]:
    """First ``cols`` columns of the w-digit expansion matrix of a/q.

    Unlike :func:`expansion_matrix` the column count is free, which is what
    higher-order rules need (modulus degree larger than both w and k).
    """
    if q.bits < 2:
        raise Gf2Error(f"Modulus {q} must have degree >= 1")
    if not 1 <= w <= MAX_DIGITS:
        raise Gf2Error(f"w = {w} must be in [1, {MAX_DIGITS}]")
    length = w + cols - 1
    # bit (length - l) of the quotient is the digit x_l of a/q
    digits, _ = _divmod(a.bits << length, q.bits)
    mask = (1 << w) - 1
    return tuple((digits >> (length - w - c)) & mask for c in range(cols))


def gf2_matmul(left: GeneratingMatrix, right: GeneratingMatrix) -> GeneratingMatrix:
    """Product ``left @ right`` over Z2."""
    if left.cols != right.rows:
        raise Gf2Error(
            f"Cannot multiply {left.rows}x{left.cols} by {right.rows}x{right.cols}"
        )
    columns = []
    for c in range(right.cols):
        acc = 0
        for t in range(right.rows):
            if right.entry(t, c):
                acc ^= left.columns[t]
        columns.append(acc)
    return GeneratingMatrix(rows=left.rows, cols=right.cols, columns=tuple(columns))


def is_invertible_top(m: GeneratingMatrix) -> bool:
    """True when the top ``cols`` x ``cols`` block has full rank."""
    if m.rows < m.cols:
        return False
    return rank_gf2(m.top_rows(m.cols)) == m.cols


def stacked_rank(matrices: Sequence[GeneratingMatrix], row_counts: Sequence[int]) -> int:
    """Rank of the matrix stacking the first ``row_counts[j]`` rows of each matrix."""
    rows: list[int] = []
    n_cols = 0
    for matrix, count in zip(matrices, row_counts):
        if count > matrix.rows:
            raise Gf2Error(f"Requested {count} rows from a matrix with {matrix.rows}")
        rows.extend(matrix.row_ints()[:count])
        n_cols = max(n_cols, matrix.cols)
    return gf2_rank(rows, n_cols)
