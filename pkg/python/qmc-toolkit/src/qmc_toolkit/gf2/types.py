import math
from typing import Final, Sequence

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import QmcToolkitError

MAX_DIGITS: Final = 63
MAX_DEGREE: Final = 30

# Degree of the zero polynomial. Compares below every integer degree.
MINUS_INFINITY: Final = -math.inf

Degree = int | float


class Gf2Error(QmcToolkitError):
    """Invalid argument to an operation over Z2 or Z2[z]."""


class BinaryPolynomial(BaseModel):
    """Element of Z2[z].

    The coefficient of z^i is bit i of ``bits``, so the integer encoding of
    z^16 + ... + 1 is the value written in parameter files (96129 and so on).
    """

    bits: int = Field(ge=0, description="Coefficient of z^i stored at bit i")

    model_config = ConfigDict(frozen=True)

    @classmethod
    def of(cls, bits: int) -> "BinaryPolynomial":
        return cls(bits=bits)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int]) -> "BinaryPolynomial":
        """Build from coefficients listed by increasing power of z."""
        bits = 0
        for power, coeff in enumerate(coeffs):
            if coeff not in (0, 1):
                raise Gf2Error(f"Coefficient {coeff} of z^{power} is not in {{0, 1}}")
            bits |= coeff << power
        return cls(bits=bits)

    @property
    def degree(self) -> Degree:
        if self.bits == 0:
            return MINUS_INFINITY
        return self.bits.bit_length() - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(max(self.bits.bit_length(), 1)))

    def is_zero(self) -> bool:
        return self.bits == 0

    def __int__(self) -> int:
        return self.bits

    def __str__(self) -> str:
        if self.bits == 0:
            return "0"
        terms = []
        for power in range(self.bits.bit_length() - 1, -1, -1):
            if (self.bits >> power) & 1:
                terms.append("1" if power == 0 else "z" if power == 1 else f"z^{power}")
        return " + ".join(terms)


class GeneratingMatrix(BaseModel):
    """A ``rows`` x ``cols`` matrix over Z2 stored column by column.

    Column c is an integer whose most significant of ``rows`` bits is the
    entry in the first row, i.e. the column read as a binary fraction gives
    the contribution of index digit c to a point coordinate. This is also the
    integer written for the column in net parameter files.
    """

    rows: int = Field(ge=1, le=MAX_DIGITS)
    cols: int = Field(ge=1, le=MAX_DIGITS)
    columns: tuple[int, ...]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_shape(self) -> "GeneratingMatrix":
        if len(self.columns) != self.cols:
            raise ValueError(f"Expected {self.cols} columns, got {len(self.columns)}")
        limit = 1 << self.rows
        for c, column in enumerate(self.columns):
            if column < 0 or column >= limit:
                raise ValueError(f"Column {c} value {column} does not fit in {self.rows} rows")
        return self

    @classmethod
    def identity(cls, k: int, rows: int | None = None) -> "GeneratingMatrix":
        rows = k if rows is None else rows
        if rows < k:
            raise Gf2Error(f"Identity needs at least {k} rows, got {rows}")
        return cls(rows=rows, cols=k, columns=tuple(1 << (rows - 1 - c) for c in range(k)))

    @classmethod
    def from_bits(cls, bits: Sequence[Sequence[int]]) -> "GeneratingMatrix":
        """Build from a row-major nested sequence of 0/1 entries."""
        if not bits or not bits[0]:
            raise Gf2Error("Matrix must have at least one row and one column")
        rows, cols = len(bits), len(bits[0])
        columns = [0] * cols
        for r, row in enumerate(bits):
            if len(row) != cols:
                raise Gf2Error(f"Row {r} has {len(row)} entries, expected {cols}")
            for c, entry in enumerate(row):
                if entry not in (0, 1):
                    raise Gf2Error(f"Entry ({r}, {c}) = {entry} is not in {{0, 1}}")
                if entry:
                    columns[c] |= 1 << (rows - 1 - r)
        return cls(rows=rows, cols=cols, columns=tuple(columns))

    @classmethod
    def from_row_ints(cls, row_ints: Sequence[int], cols: int) -> "GeneratingMatrix":
        """Inverse of :meth:`row_ints`."""
        rows = len(row_ints)
        columns = [0] * cols
        for r, row in enumerate(row_ints):
            for c in range(cols):
                if (row >> c) & 1:
                    columns[c] |= 1 << (rows - 1 - r)
        return cls(rows=rows, cols=cols, columns=tuple(columns))

    def entry(self, row: int, col: int) -> int:
        """Entry at 0-based (row, col)."""
        return (self.columns[col] >> (self.rows - 1 - row)) & 1

    def row_ints(self) -> tuple[int, ...]:
        """Rows as integers, bit c of row r holding entry (r, c)."""
        out = []
        for r in range(self.rows):
            shift = self.rows - 1 - r
            value = 0
            for c, column in enumerate(self.columns):
                value |= ((column >> shift) & 1) << c
            out.append(value)
        return tuple(out)

    def to_array(self) -> npt.NDArray[np.uint8]:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for c in range(self.cols):
            for r in range(self.rows):
                out[r, c] = self.entry(r, c)
        return out

    def top_rows(self, rows: int) -> "GeneratingMatrix":
        """The first ``rows`` rows."""
        if not 1 <= rows <= self.rows:
            raise Gf2Error(f"Cannot keep {rows} of {self.rows} rows")
        shift = self.rows - rows
        return GeneratingMatrix(
            rows=rows, cols=self.cols, columns=tuple(c >> shift for c in self.columns)
        )

    def leading_columns(self, cols: int) -> "GeneratingMatrix":
        """The first ``cols`` columns."""
        if not 1 <= cols <= self.cols:
            raise Gf2Error(f"Cannot keep {cols} of {self.cols} columns")
        return GeneratingMatrix(rows=self.rows, cols=cols, columns=self.columns[:cols])

    def with_rows(self, rows: int) -> "GeneratingMatrix":
        """Pad with zero rows or truncate to ``rows`` rows."""
        if rows >= self.rows:
            shift = rows - self.rows
            return GeneratingMatrix(
                rows=rows, cols=self.cols, columns=tuple(c << shift for c in self.columns)
            )
        return self.top_rows(rows)
