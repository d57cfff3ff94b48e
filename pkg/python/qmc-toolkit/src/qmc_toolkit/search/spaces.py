"""Per-coordinate parameter spaces of the searchable constructions.

Candidates of a coordinate are listed in canonical order (integers
ascending, polynomials by integer encoding, matrices and direction-number
tuples lexicographically); every search breaks ties in favour of the
earliest candidate.
"""

import itertools
import logging
import math
from abc import ABC, abstractmethod
from functools import lru_cache
from typing import Iterator, Sequence, Union

import numpy as np

from ..gf2 import (
    BinaryPolynomial,
    GeneratingMatrix,
    default_modulus,
    expansion_matrix,
    hankel_columns,
    is_invertible_top,
    is_irreducible,
    poly_gcd,
    primitive_polynomials,
)
from ..pointsets import (
    DigitalNetBase2,
    HigherOrderPLR,
    IidPointSet,
    InterlacedNet,
    Points,
    PointSetDef,
    PolynomialLatticeRule,
    Rank1Lattice,
    SobolNet,
    SobolSpec,
    direction_numbers,
    net_points,
    random_regular_matrix,
    sobol_matrix,
)
from ..rng import stream
from ..settings import get_settings
from .types import SearchBudgetError, SearchError, SearchSpec

logger = logging.getLogger(__name__)

Candidate = Union[int, tuple[int, ...]]

_MAX_SAMPLING_ATTEMPTS = 10_000


def prime_factors(n: int) -> list[int]:
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            factors.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        factors.append(n)
    return factors


def euler_phi(n: int) -> int:
    result = n
    for p in prime_factors(n):
        result -= result // p
    return result


def _as_int(candidate: Candidate) -> int:
    if not isinstance(candidate, int):
        raise SearchError(f"Expected an integer candidate, got {candidate!r}")
    return candidate


def _single_column_points(matrix: GeneratingMatrix, k: int) -> Points:
    return net_points(DigitalNetBase2(k=k, w=matrix.rows, matrices=(matrix,)))


class CandidateSpace(ABC):
    """Choices for each coordinate of one construction.

    Coordinates are 1-based. ``column`` returns the points of a single
    coordinate under a candidate, which is all a kernel evaluation needs;
    ``build`` assembles a point-set definition from one choice per
    coordinate of a prefix.
    """

    def __init__(self, coordinates: int, n: int):
        self.coordinates = coordinates
        self.n = n

    @abstractmethod
    def size(self, j: int) -> int:
        """Number of candidates of coordinate j."""

    @abstractmethod
    def candidates(self, j: int) -> Iterator[Candidate]:
        """All candidates of coordinate j in canonical order."""

    @abstractmethod
    def sample(self, gen: np.random.Generator, j: int) -> Candidate:
        """One uniformly drawn candidate of coordinate j."""

    @abstractmethod
    def column(self, j: int, candidate: Candidate) -> Points:
        """The n x 1 points of coordinate j under ``candidate``."""

    @abstractmethod
    def build(self, choices: Sequence[Candidate]) -> PointSetDef:
        """Point set made of the first len(choices) coordinates."""

    @property
    def nested_levels_are_strided(self) -> bool:
        """True when level 2^l is every 2^(k-l)-th point rather than the first 2^l."""
        return False

    def enumerate(self, j: int) -> list[Candidate]:
        """Candidates of coordinate j, refused above the exhaustive guard."""
        guard = get_settings().exhaustive_guard
        size = self.size(j)
        if size > guard:
            raise SearchBudgetError(
                f"Coordinate {j} has {size} candidates, above the guard of {guard}"
            )
        return list(self.candidates(j))


class LatticeSpace(CandidateSpace):
    """Components a_j in the units mod n; a_1 = 1 when ``fix_first``.

    With a reflection-symmetric kernel, a and n - a give the same merit and
    only a <= n - a is listed.
    """

    def __init__(self, n: int, s: int, *, fix_first: bool, symmetric: bool):
        super().__init__(s, n)
        self.fix_first = fix_first
        self.symmetric = symmetric

    def _fixed(self, j: int) -> bool:
        return self.fix_first and j == 1

    def size(self, j: int) -> int:
        if self._fixed(j):
            return 1
        units = euler_phi(self.n)
        if self.symmetric and self.n > 2:
            return units // 2
        return units

    def candidates(self, j: int) -> Iterator[Candidate]:
        if self._fixed(j):
            yield 1
            return
        top = self.n // 2 if self.symmetric and self.n > 2 else self.n - 1
        a = np.arange(1, top + 1)
        for value in a[np.gcd(a, self.n) == 1]:
            yield int(value)

    def sample(self, gen: np.random.Generator, j: int) -> Candidate:
        if self._fixed(j):
            return 1
        for _ in range(_MAX_SAMPLING_ATTEMPTS):
            a = int(gen.integers(1, self.n)) if self.n > 1 else 0
            if math.gcd(a, self.n) == 1:
                return min(a, self.n - a) if self.symmetric and self.n > 2 else a
        raise SearchError(f"no admissible lattice component found for n = {self.n}")

    def column(self, j: int, candidate: Candidate) -> Points:
        idx = np.arange(self.n, dtype=np.uint64)
        values = (idx * np.uint64(_as_int(candidate))) % np.uint64(self.n)
        return Points(values[:, None], self.n, None)

    def build(self, choices: Sequence[Candidate]) -> PointSetDef:
        return Rank1Lattice(n=self.n, gen=tuple(_as_int(a) for a in choices))

    @property
    def nested_levels_are_strided(self) -> bool:
        return True


class PolynomialSpace(CandidateSpace):
    """Generating polynomials coprime with the modulus, degree below deg Q.

    ``k`` below deg Q gives the higher-order rule made of the first 2^k
    points.
    """

    def __init__(
        self,
        modulus: BinaryPolynomial,
        s: int,
        w: int,
        *,
        k: int | None = None,
        fix_first: bool,
    ):
        self.degree = modulus.bits.bit_length() - 1
        self.k = self.degree if k is None else k
        super().__init__(s, 1 << self.k)
        self.modulus = modulus
        self.w = w
        self.fix_first = fix_first

    def _fixed(self, j: int) -> bool:
        return self.fix_first and j == 1

    @property
    def higher_order(self) -> bool:
        return self.k != self.degree

    def _admissible(self, bits: int) -> bool:
        return bits != 0 and poly_gcd(BinaryPolynomial(bits=bits), self.modulus).bits == 1

    def size(self, j: int) -> int:
        if self._fixed(j):
            return 1
        if self.degree <= 20:
            return _unit_count(self.modulus.bits)
        return (1 << self.degree) - 1

    def candidates(self, j: int) -> Iterator[Candidate]:
        if self._fixed(j):
            yield 1
            return
        for bits in range(1, 1 << self.degree):
            if self._admissible(bits):
                yield bits

    def sample(self, gen: np.random.Generator, j: int) -> Candidate:
        if self._fixed(j):
            return 1
        for _ in range(_MAX_SAMPLING_ATTEMPTS):
            bits = int(gen.integers(1, 1 << self.degree))
            if self._admissible(bits):
                return bits
        raise SearchError(f"no admissible polynomial found modulo {self.modulus}")

    def matrix(self, candidate: Candidate) -> GeneratingMatrix:
        a = BinaryPolynomial(bits=_as_int(candidate))
        if self.higher_order:
            columns = hankel_columns(a, self.modulus, self.w, self.k)
            return GeneratingMatrix(rows=self.w, cols=self.k, columns=columns)
        return expansion_matrix(a, self.modulus, self.w)

    def column(self, j: int, candidate: Candidate) -> Points:
        return _single_column_points(self.matrix(candidate), self.k)

    def build(self, choices: Sequence[Candidate]) -> PointSetDef:
        gen = tuple(BinaryPolynomial(bits=_as_int(a)) for a in choices)
        if self.higher_order:
            return HigherOrderPLR(modulus=self.modulus, gen=gen, k=self.k, w=self.w)
        return PolynomialLatticeRule(modulus=self.modulus, gen=gen, w=self.w)


@lru_cache(maxsize=64)
def _unit_count(modulus_bits: int) -> int:
    q = BinaryPolynomial(bits=modulus_bits)
    degree = modulus_bits.bit_length() - 1
    if is_irreducible(q):
        return (1 << degree) - 1
    return sum(
        1 for bits in range(1, 1 << degree) if poly_gcd(BinaryPolynomial(bits=bits), q).bits == 1
    )


class SobolSpace(CandidateSpace):
    """Initial direction numbers m_1..m_L of each coordinate, L = min(deg p_j, k).

    Coordinate 1 is the identity and has the single candidate ``()``.
    Spaces above ``sobol_enumeration_guard`` are sampled instead of listed.
    """

    def __init__(self, k: int, s: int, w: int, polynomials: Sequence[BinaryPolynomial], seed: int):
        super().__init__(s, 1 << k)
        if len(polynomials) < s - 1:
            raise SearchError(f"missing direction numbers for coordinate {len(polynomials) + 2}")
        self.k = k
        self.w = w
        self.polynomials = tuple(polynomials[: s - 1])
        self.seed = seed

    def _length(self, j: int) -> int:
        if j == 1:
            return 0
        return min(self.polynomials[j - 2].bits.bit_length() - 1, self.k)

    def size(self, j: int) -> int:
        length = self._length(j)
        return 1 << (length * (length - 1) // 2)

    def candidates(self, j: int) -> Iterator[Candidate]:
        ranges = [range(1, 1 << c, 2) for c in range(1, self._length(j) + 1)]
        for m in itertools.product(*ranges):
            yield tuple(m)

    def enumerate(self, j: int) -> list[Candidate]:
        guard = get_settings().sobol_enumeration_guard
        if self.size(j) <= guard:
            return list(self.candidates(j))
        logger.warning(
            "Sobol' coordinate %d has %d direction-number choices; sampling %d of them",
            j,
            self.size(j),
            guard,
        )
        gen = stream(self.seed, "sobol-enumeration", j)
        return sorted({self.sample(gen, j) for _ in range(guard)})  # type: ignore[type-var]

    def sample(self, gen: np.random.Generator, j: int) -> Candidate:
        return tuple(int(gen.integers(0, 1 << (c - 1))) * 2 + 1 for c in range(1, self._length(j) + 1))

    def column(self, j: int, candidate: Candidate) -> Points:
        if j == 1:
            return _single_column_points(GeneratingMatrix.identity(self.k, rows=self.w), self.k)
        assert isinstance(candidate, tuple)
        m = direction_numbers(candidate, self.polynomials[j - 2], self.k)
        return _single_column_points(sobol_matrix(m, self.k, self.w), self.k)

    def build(self, choices: Sequence[Candidate]) -> PointSetDef:
        s = len(choices)
        spec = SobolSpec(
            direction_numbers=tuple(tuple(m) for m in choices[1:] if isinstance(m, tuple)),
            polynomials=self.polynomials[: s - 1],
        )
        return SobolNet(spec=spec, s=s, k=self.k, w=self.w)


class ExplicitNetSpace(CandidateSpace):
    """w x k binary matrices with an invertible top k x k block, as column tuples."""

    def __init__(self, k: int, s: int, w: int):
        super().__init__(s, 1 << k)
        self.k = k
        self.w = w

    def size(self, j: int) -> int:
        invertible = math.prod((1 << self.k) - (1 << i) for i in range(self.k))
        return invertible << (self.k * (self.w - self.k))

    def candidates(self, j: int) -> Iterator[Candidate]:
        for columns in itertools.product(range(1 << self.w), repeat=self.k):
            if is_invertible_top(GeneratingMatrix(rows=self.w, cols=self.k, columns=columns)):
                yield tuple(columns)

    def sample(self, gen: np.random.Generator, j: int) -> Candidate:
        return random_regular_matrix(gen, self.k, self.w).columns

    def column(self, j: int, candidate: Candidate) -> Points:
        assert isinstance(candidate, tuple)
        return _single_column_points(
            GeneratingMatrix(rows=self.w, cols=self.k, columns=candidate), self.k
        )

    def build(self, choices: Sequence[Candidate]) -> PointSetDef:
        matrices = tuple(
            GeneratingMatrix(rows=self.w, cols=self.k, columns=c)
            for c in choices
            if isinstance(c, tuple)
        )
        return DigitalNetBase2(k=self.k, w=self.w, matrices=matrices)


class InterlacedSpace(CandidateSpace):
    """Inner coordinates of an interlaced rule; output coordinate j uses inner (j-1)d+1..jd."""

    def __init__(self, inner: CandidateSpace, d: int, w: int | None):
        super().__init__(inner.coordinates, inner.n)
        self.inner = inner
        self.d = d
        self.w = w

    def size(self, j: int) -> int:
        return self.inner.size(j)

    def candidates(self, j: int) -> Iterator[Candidate]:
        return self.inner.candidates(j)

    def enumerate(self, j: int) -> list[Candidate]:
        return self.inner.enumerate(j)

    def sample(self, gen: np.random.Generator, j: int) -> Candidate:
        return self.inner.sample(gen, j)

    def column(self, j: int, candidate: Candidate) -> Points:
        return self.inner.column(j, candidate)

    def build(self, choices: Sequence[Candidate]) -> PointSetDef:
        if len(choices) % self.d:
            raise SearchError(
                f"{len(choices)} inner coordinates do not form complete blocks of {self.d}"
            )
        inner = self.inner.build(choices)
        assert not isinstance(inner, (Rank1Lattice, InterlacedNet, IidPointSet))
        return InterlacedNet(inner=inner, d=self.d, w=self.w)


def create_candidate_space(spec: SearchSpec, *, fix_first: bool) -> CandidateSpace:
    """Candidate space of ``spec``; ``fix_first`` pins a_1 = 1 for lattices and PLRs."""
    settings = get_settings()
    if spec.construction == "ordinaryLattice":
        return LatticeSpace(
            spec.point_count,
            spec.s,
            fix_first=fix_first,
            symmetric=spec.fom.family == "Palpha",
        )
    k = spec.size_exponent
    assert k is not None
    w = spec.w if spec.w is not None else max(settings.default_output_digits, k)
    if spec.construction == "interlaced":
        inner = _digital_space(spec, spec.inner, k, spec.coordinates, w, fix_first)
        return InterlacedSpace(inner, spec.interlacing, spec.w)
    return _digital_space(spec, spec.construction, k, spec.s, w, fix_first)


def _digital_space(
    spec: SearchSpec, construction: str, k: int, s: int, w: int, fix_first: bool
) -> CandidateSpace:
    match construction:
        case "polynomialLattice":
            modulus = spec.modulus or default_modulus(k)
            if modulus.bits.bit_length() - 1 != k:
                raise SearchError(f"Modulus {modulus} does not have degree k = {k}")
            return PolynomialSpace(modulus, s, w, fix_first=fix_first)
        case "hoplr":
            degree = spec.alpha * k
            modulus = spec.modulus or default_modulus(degree)
            if modulus.bits.bit_length() - 1 != degree:
                raise SearchError(f"Modulus {modulus} does not have degree alpha * k = {degree}")
            return PolynomialSpace(modulus, s, w, k=k, fix_first=fix_first)
        case "sobol":
            polys = (
                spec.sobol_polynomials.polynomials
                if spec.sobol_polynomials is not None
                else primitive_polynomials(max(s - 1, 0))
            )
            return SobolSpace(k, s, spec.w if spec.w is not None else k, polys, spec.seed)
        case "explicitNet":
            return ExplicitNetSpace(k, s, w)
    raise SearchError(f"Unknown construction {construction}")
