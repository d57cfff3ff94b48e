"""Parameter files for lattices, digital nets and Sobol' direction numbers.

Lines hold whitespace-separated integers; ``#`` starts a comment. The first
line of each format is a fixed header naming the construction. Net columns
are written as integers whose most significant of w bits is the first row
of the matrix.
"""

import re
from typing import Iterator, Optional, Union

from pydantic import ValidationError

from ..gf2 import BinaryPolynomial, GeneratingMatrix, primitive_polynomials
from ..pointsets import (
    DigitalNetBase2,
    HigherOrderPLR,
    PointSetDef,
    PolynomialLatticeRule,
    Rank1Lattice,
    SobolSpec,
    to_digital_net,
    validate_net,
)
from .types import ParameterFileError

PLR_HEADER = "# Parameters for a polynomial lattice rule in base 2"
HOPLR_HEADER = "# Parameters for a higher-order polynomial lattice rule in base 2"
LATTICE_HEADER = "# Parameters for an ordinary lattice rule"
NET_HEADER = "# Parameters for a digital net in base 2"
NET_COLUMNS = "# Columns of gen. matrices C_1,...,C_s, one matrix per line:"
SOBOL_HEADER = "# Initial direction numbers m_{j,c} for Sobol points"

DEFAULT_PLR_DIGITS = 31

_DIGITS_COMMENT = re.compile(r"^#\s*r\s*=\s*(\d+)\s+binary output digits")
_DIMENSION_COMMENT = re.compile(r"^#\s*s\s*=\s*(\d+)\s+dimensions")
_POLYNOMIALS_COMMENT = re.compile(r"^#\s*polynomials:\s*(.*)$")

LatticeDef = Union[Rank1Lattice, PolynomialLatticeRule, HigherOrderPLR]


def _line(value: object, comment: str, width: int) -> str:
    return f"{str(value):<{width}}# {comment}"


def emit_lattice_file(defn: PointSetDef) -> str:
    """Modulus (polynomial rules) or size, then the generating vector."""
    match defn:
        case PolynomialLatticeRule():
            k = defn.k
            lines = [PLR_HEADER]
            if defn.w != DEFAULT_PLR_DIGITS:
                lines.append(f"# r = {defn.w} binary output digits")
            lines += [
                _line(defn.s, f"s = {defn.s} dimensions", 8),
                _line(k, f"n = 2^{k} = {1 << k} points", 8),
                _line(defn.modulus.bits, "polynomial modulus", 8),
            ]
            vector = [a.bits for a in defn.gen]
        case HigherOrderPLR():
            lines = [HOPLR_HEADER, f"# r = {defn.w} binary output digits"]
            lines += [
                _line(defn.s, f"s = {defn.s} dimensions", 8),
                _line(defn.k, f"n = 2^{defn.k} = {1 << defn.k} points", 8),
                _line(defn.modulus.bits, "polynomial modulus", 8),
            ]
            vector = [a.bits for a in defn.gen]
        case Rank1Lattice():
            lines = [
                LATTICE_HEADER,
                _line(defn.s, f"s = {defn.s} dimensions", 8),
                _line(defn.n, f"n = {defn.n} points", 8),
            ]
            vector = list(defn.gen)
        case _:
            raise ParameterFileError(f"{defn.kind} point sets have no lattice representation")
    lines.append(_line(vector[0], "coordinates of generating vector, starting at j=1", 8))
    lines.extend(str(a) for a in vector[1:])
    return "\n".join(lines) + "\n"


def emit_net_file(defn: PointSetDef) -> str:
    """Generating matrices of any digital construction, one coordinate per line."""
    net = to_digital_net(defn)
    lines = [
        NET_HEADER,
        _line(net.s, f"s = {net.s} dimensions", 5),
        _line(net.k, f"n = 2^{net.k} = {net.n} points", 5),
        _line(net.w, f"r = {net.w} binary output digits", 5),
        NET_COLUMNS,
    ]
    lines.extend(" ".join(str(c) for c in m.columns) for m in net.matrices)
    return "\n".join(lines) + "\n"


def emit_sobol_file(spec: SobolSpec, s: Optional[int] = None) -> str:
    """Direction numbers of coordinates 2..s; the polynomials are listed only when
    they differ from the default primitive enumeration."""
    s = spec.max_dimension if s is None else s
    if s > spec.max_dimension:
        raise ParameterFileError(f"missing direction numbers for coordinate {spec.max_dimension + 1}")
    lines = [SOBOL_HEADER, f"# s = {s} dimensions"]
    polys = spec.polynomials[: s - 1]
    if polys != primitive_polynomials(s - 1):
        lines.append("# polynomials: " + " ".join(str(p.bits) for p in polys))
    for j, m in enumerate(spec.direction_numbers[: s - 1]):
        text = " ".join(str(v) for v in m)
        lines.append(_line(text, "This is m_{j,k} for the second coordinate", 5) if j == 0 else text)
    return "\n".join(lines) + "\n"


def _records(text: str) -> Iterator[tuple[int, list[int]]]:
    """(line number, integers) of every non-comment line."""
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            yield number, [int(token) for token in body.split()]
        except ValueError:
            raise ParameterFileError(f"expected integers, got {body!r}", number) from None


def _comments(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            yield number, stripped


def _header(text: str) -> str:
    for raw in text.splitlines():
        if raw.strip():
            return raw.strip()
    raise ParameterFileError("empty parameter file")


def _scalar(records: list[tuple[int, list[int]]], index: int, what: str) -> int:
    if index >= len(records):
        raise ParameterFileError(f"missing {what}")
    number, values = records[index]
    if len(values) != 1:
        raise ParameterFileError(f"expected one integer for {what}, got {len(values)}", number)
    return values[0]


def _digits(text: str, default: int) -> int:
    for _, comment in _comments(text):
        if match := _DIGITS_COMMENT.match(comment):
            return int(match.group(1))
    return default


def parse_lattice_file(text: str) -> LatticeDef:
    header = _header(text)
    records = list(_records(text))
    s = _scalar(records, 0, "dimension")
    size = _scalar(records, 1, "size")
    offset = 2
    modulus: Optional[int] = None
    if header in (PLR_HEADER, HOPLR_HEADER):
        modulus = _scalar(records, 2, "polynomial modulus")
        offset = 3
    elif header != LATTICE_HEADER:
        raise ParameterFileError(f"unknown header {header!r}", 1)
    vector = [_scalar(records, offset + j, f"component {j + 1}") for j in range(s)]
    if len(records) > offset + s:
        raise ParameterFileError(f"more than s = {s} components", records[offset + s][0])
    try:
        if header == LATTICE_HEADER:
            return Rank1Lattice(n=size, gen=tuple(vector))
        assert modulus is not None
        gen = tuple(BinaryPolynomial(bits=a) for a in vector)
        q = BinaryPolynomial(bits=modulus)
        w = _digits(text, DEFAULT_PLR_DIGITS)
        if header == HOPLR_HEADER:
            return HigherOrderPLR(modulus=q, gen=gen, k=size, w=w)
        if q.degree != size:
            raise ParameterFileError(f"modulus {modulus} does not have degree k = {size}", records[2][0])
        return PolynomialLatticeRule(modulus=q, gen=gen, w=w)
    except ValidationError as exc:
        raise ParameterFileError(exc.errors()[0]["msg"]) from None


def parse_net_file(text: str, validate: bool = False) -> DigitalNetBase2:
    """Net from its columns; ``validate`` also requires invertible top k x k blocks."""
    if (header := _header(text)) != NET_HEADER:
        raise ParameterFileError(f"unknown header {header!r}", 1)
    records = list(_records(text))
    s = _scalar(records, 0, "dimension")
    k = _scalar(records, 1, "size exponent")
    w = _scalar(records, 2, "output digits")
    rows = records[3:]
    if len(rows) != s:
        raise ParameterFileError(f"expected {s} matrix lines, got {len(rows)}")
    matrices = []
    for number, columns in rows:
        if len(columns) != k:
            raise ParameterFileError(f"expected {k} columns, got {len(columns)}", number)
        if any(not 0 <= c < (1 << w) for c in columns):
            raise ParameterFileError(f"column does not fit in r = {w} digits", number)
        matrices.append(GeneratingMatrix(rows=w, cols=k, columns=tuple(columns)))
    try:
        net = DigitalNetBase2(k=k, w=w, matrices=tuple(matrices))
    except ValidationError as exc:
        raise ParameterFileError(exc.errors()[0]["msg"]) from None
    return validate_net(net) if validate else net


def _check_direction_numbers(number: int, j: int, m: list[int]) -> None:
    if not m:
        raise ParameterFileError(f"coordinate {j} has no direction numbers", number)
    for c, value in enumerate(m, start=1):
        if value % 2 == 0:
            raise ParameterFileError(f"m_{{{j},{c}}} = {value} is even", number)
        if not 0 < value < (1 << c):
            raise ParameterFileError(f"m_{{{j},{c}}} = {value} is not in [1, 2^{c})", number)


def parse_sobol_file(text: str) -> SobolSpec:
    """Direction numbers as written by :func:`emit_sobol_file`, or a Joe-Kuo table."""
    header = _header(text)
    if header.split()[:1] == ["d"]:
        return parse_joe_kuo_file(text)
    if header != SOBOL_HEADER:
        raise ParameterFileError(f"unknown header {header!r}", 1)
    declared: Optional[int] = None
    polynomials: Optional[tuple[BinaryPolynomial, ...]] = None
    for number, comment in _comments(text):
        if match := _DIMENSION_COMMENT.match(comment):
            declared = int(match.group(1))
        elif match := _POLYNOMIALS_COMMENT.match(comment):
            try:
                polynomials = tuple(BinaryPolynomial(bits=int(t)) for t in match.group(1).split())
            except ValueError:
                raise ParameterFileError("polynomials must be integers", number) from None
    records = list(_records(text))
    for j, (number, m) in enumerate(records, start=2):
        _check_direction_numbers(number, j, m)
    if declared is not None and declared != len(records) + 1:
        raise ParameterFileError(f"s = {declared} declared, {len(records) + 1} coordinates given")
    if polynomials is None:
        polynomials = primitive_polynomials(len(records))
    elif len(polynomials) != len(records):
        raise ParameterFileError(f"{len(polynomials)} polynomials for {len(records)} coordinates")
    try:
        return SobolSpec(
            direction_numbers=tuple(tuple(m) for _, m in records), polynomials=polynomials
        )
    except ValidationError as exc:
        raise ParameterFileError(exc.errors()[0]["msg"]) from None


def parse_joe_kuo_file(text: str, max_dimension: Optional[int] = None) -> SobolSpec:
    """Table with a ``d s a m_i`` header, one row per coordinate from 2 on.

    Row j lists the coordinate, the degree s of its primitive polynomial,
    the integer a holding the inner coefficients and the s initial values.
    """
    polynomials: list[BinaryPolynomial] = []
    numbers: list[tuple[int, ...]] = []
    lines = text.splitlines()
    for number, raw in enumerate(lines[1:], start=2):
        tokens = raw.split()
        if not tokens:
            continue
        if max_dimension is not None and len(numbers) + 1 >= max_dimension:
            break
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise ParameterFileError(f"expected integers, got {raw.strip()!r}", number) from None
        if len(values) < 3:
            raise ParameterFileError("expected d, s, a and the m values", number)
        _, degree, a, *m = values
        if len(m) != degree:
            raise ParameterFileError(f"expected {degree} direction numbers, got {len(m)}", number)
        _check_direction_numbers(number, len(numbers) + 2, m)
        polynomials.append(BinaryPolynomial(bits=(1 << degree) | (a << 1) | 1))
        numbers.append(tuple(m))
    return SobolSpec(direction_numbers=tuple(numbers), polynomials=tuple(polynomials))
