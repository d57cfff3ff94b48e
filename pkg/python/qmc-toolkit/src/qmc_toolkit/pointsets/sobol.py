"""Sobol' generating matrices from initial direction numbers."""

from typing import Sequence

from ..gf2 import BinaryPolynomial, GeneratingMatrix, primitive_polynomials
from .types import DigitalNetBase2, PointSetError, SobolSpec


def direction_numbers(m_init: Sequence[int], poly: BinaryPolynomial, count: int) -> list[int]:
    """m_1, ..., m_count extended by the recurrence of ``poly``.

    With poly = z^s + a_1 z^(s-1) + ... + a_(s-1) z + 1,
    m_c = 2 a_1 m_(c-1) ^ ... ^ 2^(s-1) a_(s-1) m_(c-s+1) ^ 2^s m_(c-s) ^ m_(c-s).
    """
    degree = poly.bits.bit_length() - 1
    m = list(m_init[:count])
    if len(m) < count and len(m) < degree:
        raise PointSetError(
            f"Need {degree} initial direction numbers to extend by {poly}, got {len(m)}"
        )
    while len(m) < count:
        c = len(m)  # 0-based index of the next value
        value = m[c - degree] ^ (m[c - degree] << degree)
        for i in range(1, degree):
            if (poly.bits >> (degree - i)) & 1:
                value ^= m[c - i] << i
        m.append(value)
    return m


def sobol_matrix(m_values: Sequence[int], k: int, w: int) -> GeneratingMatrix:
    """Column c (1-based) is v_c = m_c / 2^c written with w digits."""
    if len(m_values) < k:
        raise PointSetError(f"Need {k} direction numbers, got {len(m_values)}")
    return GeneratingMatrix(
        rows=w, cols=k, columns=tuple(m_values[c - 1] << (w - c) for c in range(1, k + 1))
    )


def sobol_net(spec: SobolSpec, s: int, k: int, w: int | None = None) -> DigitalNetBase2:
    """First 2^k points of the Sobol' sequence in s dimensions."""
    w = k if w is None else w
    if w < k:
        raise PointSetError(f"w = {w} must be at least k = {k}")
    if s > spec.max_dimension:
        raise PointSetError(f"missing direction numbers for coordinate {spec.max_dimension + 1}")
    matrices = [GeneratingMatrix.identity(k, rows=w)]
    for j in range(s - 1):
        m = direction_numbers(spec.direction_numbers[j], spec.polynomials[j], k)
        matrices.append(sobol_matrix(m, k, w))
    return DigitalNetBase2(k=k, w=w, matrices=tuple(matrices))


def default_sobol_spec(s: int) -> SobolSpec:
    """Primitive polynomials in ascending order with all initial m values equal to 1."""
    if s < 1:
        raise PointSetError(f"Dimension must be >= 1, got {s}")
    polys = primitive_polynomials(s - 1) if s > 1 else ()
    return SobolSpec(
        direction_numbers=tuple((1,) * (p.bits.bit_length() - 1) for p in polys),
        polynomials=polys,
    )
