"""Coordinate-by-coordinate evaluation of candidate merits.

With product, order-dependent or POD weights and a finite norm exponent,
the merit after appending one coordinate is affine in that coordinate's
kernel column: ``const + mean(v * phi)``. :class:`LinearKernelState` keeps
the running per-point sums that give ``const`` and ``v``; fast CBC then
evaluates ``mean(v * phi)`` for every unit-group candidate at once by a
cyclic correlation.
"""

import logging
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

import numpy as np

from ..gf2 import is_irreducible, unit_group_elements
from ..merit import (
    INTERLACED_FAMILIES,
    FomSpec,
    combine_kernel,
    effective_weights,
    exact_mean,
    interlaced_component_values,
    kernel_baseline,
    kernel_matrix,
    weight_sum,
)
from ..merit.kernels import FloatArray, floor_log2_digits
from ..pointsets import Points
from ..weights import OrderDependentWeights, PODWeights, ProductWeights, order_weights
from .objective import Objective, multi_level_merit
from .spaces import Candidate, CandidateSpace, LatticeSpace, PolynomialSpace, prime_factors
from .types import SearchSpec, UnsupportedSearchError

logger = logging.getLogger(__name__)

# Candidates whose objective is within this relative distance of the minimum tie.
TIE_TOLERANCE = 1e-10

T = TypeVar("T")
R = TypeVar("R")


def map_ordered(fn: Callable[[T], R], items: Sequence[T], workers: int) -> list[R]:
    """``[fn(x) for x in items]``, optionally on a thread pool; order is preserved."""
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def select_best(values: Sequence[float] | FloatArray) -> int:
    """Index of the first value within the tie tolerance of the minimum."""
    arr = np.asarray(values, dtype=np.float64)
    best = float(np.nanmin(arr))
    return int(np.flatnonzero(arr <= best + TIE_TOLERANCE * abs(best))[0])


class LinearKernelState:
    """Per-point running sums of one point-count level.

    ``linear_form`` returns (const, v) such that appending a coordinate with
    kernel column phi gives the merit ``const + mean(v * phi)``.
    """

    def __init__(self, fom: FomSpec, s: int, n_points: int):
        self.weights = effective_weights(fom, s)
        self.baseline = kernel_baseline(fom)
        self.committed = 0
        match self.weights:
            case ProductWeights():
                if len(self.weights.gammas) < s:
                    raise UnsupportedSearchError(
                        f"Coordinate {len(self.weights.gammas) + 1} has no product weight"
                    )
                self.products = np.ones(n_points)
            case OrderDependentWeights() | PODWeights():
                self.order_gammas = np.asarray(order_weights(self.weights, s))
                self.symmetric = np.zeros((n_points, s + 1))
                self.symmetric[:, 0] = 1.0
            case _:
                raise UnsupportedSearchError(f"No running sums for weights {self.weights!r}")

    @staticmethod
    def supports(fom: FomSpec) -> bool:
        return not fom.is_max and isinstance(
            fom.weights, (ProductWeights, OrderDependentWeights, PODWeights)
        )

    def _offset(self) -> float:
        return self.baseline * weight_sum(self.weights, self.committed + 1) if self.baseline else 0.0

    def _beta(self) -> float:
        if isinstance(self.weights, PODWeights):
            return self.weights.product_gammas[self.committed]
        return 1.0

    def linear_form(self) -> tuple[float, FloatArray]:
        c = self.committed
        if isinstance(self.weights, ProductWeights):
            gamma = self.weights.gammas[c]
            return exact_mean(self.products) - 1.0 - self._offset(), self.products * gamma
        e = self.symmetric
        const = exact_mean(e[:, 1 : c + 1] @ self.order_gammas[:c]) if c else 0.0
        v = self._beta() * (e[:, : c + 1] @ self.order_gammas[: c + 1])
        return const - self._offset(), v

    def values(self, phis: FloatArray) -> FloatArray:
        """Merits for each column of the n x m matrix ``phis``."""
        const, v = self.linear_form()
        return const + (v @ phis) / phis.shape[0]

    def commit(self, phi: FloatArray) -> None:
        if isinstance(self.weights, ProductWeights):
            self.products = self.products * (1.0 + self.weights.gammas[self.committed] * phi)
        else:
            x = self._beta() * phi
            c = self.committed
            self.symmetric[:, 1 : c + 2] += x[:, None] * self.symmetric[:, : c + 1].copy()
        self.committed += 1


class CoordinateEvaluator(ABC):
    """Objective of each candidate for the next coordinate, given the fixed prefix."""

    def __init__(self, spec: SearchSpec, space: CandidateSpace, workers: int):
        self.spec = spec
        self.space = space
        self.workers = workers
        self.choices: list[Candidate] = []

    @abstractmethod
    def evaluate(self, j: int, candidates: Sequence[Candidate]) -> FloatArray:
        """Objective values of the candidates of coordinate j, in input order."""

    def commit(self, j: int, candidate: Candidate) -> None:
        self.choices.append(candidate)


class DefinitionEvaluator(CoordinateEvaluator):
    """Builds every prefix point set and evaluates it from scratch (t-value criteria)."""

    def evaluate(self, j: int, candidates: Sequence[Candidate]) -> FloatArray:
        def value(candidate: Candidate) -> float:
            return multi_level_merit(self.space.build([*self.choices, candidate]), self.spec)

        return np.asarray(map_ordered(value, candidates, self.workers))


class KernelEvaluator(CoordinateEvaluator):
    """Kernel criteria evaluated from per-coordinate kernel columns.

    For interlaced rules the searched coordinates are the inner ones; the
    output kernel of a block is prod_l (1 + phi_l) - 1 over the inner
    coordinates chosen so far.
    """

    def __init__(self, spec: SearchSpec, space: CandidateSpace, workers: int):
        super().__init__(spec, space, workers)
        self.fom = spec.fom
        self.d = spec.interlacing if spec.construction == "interlaced" else 1
        self.blocked = self.fom.family in INTERLACED_FAMILIES
        self.objective = Objective(spec, strided=space.nested_levels_are_strided)
        self.columns: list[list[FloatArray]] = [[] for _ in self.objective.levels]
        self.partial: list[FloatArray | None] = [None for _ in self.objective.levels]
        self.by_dimension: dict[int, float] = {}
        self.states: list[LinearKernelState] | None = None
        if LinearKernelState.supports(self.fom):
            self.states = [
                LinearKernelState(self.fom, spec.s, rows.size) for rows in self.objective.levels
            ]

    def _component(self, j: int, points: Points, rows: np.ndarray) -> FloatArray:
        level = points._replace(values=points.values[rows])
        if not self.blocked:
            return kernel_matrix(level, self.fom)[:, 0]
        assert level.digits is not None
        f = floor_log2_digits(level.values, level.digits)[:, 0]
        return interlaced_component_values(f, self.fom, (j - 1) % self.d + 1)

    def _output_columns(self, j: int, candidate: Candidate) -> list[FloatArray]:
        """Kernel column of the current output coordinate, per level."""
        points = self.space.column(j, candidate)
        out = []
        for level, rows in enumerate(self.objective.levels):
            phi = self._component(j, points, rows)
            if self.blocked:
                partial = self.partial[level]
                block = (np.ones_like(phi) if partial is None else partial) * (1 + phi)
                out.append(block)
            else:
                out.append(phi)
        return out

    @staticmethod
    def _finish(block: FloatArray, blocked: bool) -> FloatArray:
        return block - 1 if blocked else block

    def _level_values(self, columns: Sequence[FloatArray]) -> FloatArray:
        """n_level x m kernel columns of m candidates -> m merits."""
        if self.states is not None:
            return np.asarray(
                [state.values(col) for state, col in zip(self.states, columns, strict=True)]
            )
        out = []
        for level, col in enumerate(columns):
            prefix = self.columns[level]
            out.append(
                [
                    combine_kernel(np.column_stack([*prefix, col[:, i]]), self.fom).total
                    for i in range(col.shape[1])
                ]
            )
        return np.asarray(out)

    def _objective(self, j: int, level_values: FloatArray) -> FloatArray:
        dim = (j - 1) // self.d + 1
        result = []
        for i in range(level_values.shape[1]):
            current = self.objective.combine_levels(list(level_values[:, i]))
            by_dimension = {**self.by_dimension, dim: current}
            result.append(self.objective.combine_dimensions(by_dimension, dim))
        return np.asarray(result)

    def evaluate(self, j: int, candidates: Sequence[Candidate]) -> FloatArray:
        per_candidate = map_ordered(lambda c: self._output_columns(j, c), candidates, self.workers)
        columns = [
            self._finish(np.column_stack([cols[level] for cols in per_candidate]), self.blocked)
            for level in range(len(self.objective.levels))
        ]
        return self._objective(j, self._level_values(columns))

    def commit(self, j: int, candidate: Candidate) -> None:
        super().commit(j, candidate)
        blocks = self._output_columns(j, candidate)
        finished = [self._finish(b, self.blocked)[:, None] for b in blocks]
        dim = (j - 1) // self.d + 1
        if j % self.d:
            self.partial = list(blocks)
            return
        self.by_dimension[dim] = self.objective.combine_levels(
            list(self._level_values(finished)[:, 0])
        )
        for level, col in enumerate(finished):
            self.columns[level].append(col[:, 0])
            if self.states is not None:
                self.states[level].commit(col[:, 0])
        self.partial = [None for _ in self.objective.levels]


def _primitive_root(n: int) -> int:
    if n == 2:
        return 1
    order = n - 1
    for g in range(2, n):
        if all(pow(g, order // p, n) != 1 for p in prime_factors(order)):
            return g
    raise UnsupportedSearchError(f"{n} has no primitive root")  # pragma: no cover


def _is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


class FastCbcEvaluator(KernelEvaluator):
    """CBC step for every unit candidate at once by FFT over the cyclic unit group.

    Group elements are listed as g^0, g^1, ...; with i = g^x and a = g^y the
    kernel of point i under candidate a is Phi(g^(x+y)), so
    sum_i v_i phi_i(a) is a cyclic cross-correlation of the reordered
    vectors v and Phi.
    """

    def __init__(self, spec: SearchSpec, space: CandidateSpace, workers: int):
        check_fast_cbc(spec, space)
        super().__init__(spec, space, workers)
        if isinstance(space, LatticeSpace):
            g = _primitive_root(space.n)
            elements = [pow(g, x, space.n) for x in range(space.n - 1)]
        else:
            assert isinstance(space, PolynomialSpace)
            elements = unit_group_elements(space.modulus)
        self.elements = np.asarray(elements, dtype=np.int64)
        logger.debug("fast CBC over a unit group of order %d", len(elements))

    def evaluate(self, j: int, candidates: Sequence[Candidate]) -> FloatArray:
        if len(candidates) == 1:
            return super().evaluate(j, candidates)
        assert self.states is not None
        table = self._component(j, self.space.column(j, 1), self.objective.levels[0])
        const, v = self.states[0].linear_form()
        v_perm = v[self.elements]
        table_perm = table[self.elements]
        correlation = np.fft.ifft(np.conj(np.fft.fft(v_perm)) * np.fft.fft(table_perm)).real
        by_element = np.empty(self.space.n)
        by_element[self.elements] = const + (v[0] * table[0] + correlation) / self.space.n
        index = np.asarray(candidates, dtype=np.int64)
        return self._objective(j, by_element[index][None, :])


def check_fast_cbc(spec: SearchSpec, space: CandidateSpace) -> None:
    """Raise unless fast CBC applies to the construction, weights and norm of ``spec``."""
    fom = spec.fom
    reasons = []
    if isinstance(space, LatticeSpace):
        if not _is_prime(space.n):
            reasons.append(f"n = {space.n} is not prime")
    elif isinstance(space, PolynomialSpace) and not space.higher_order:
        if not is_irreducible(space.modulus):
            reasons.append(f"modulus {space.modulus} is not irreducible")
    else:
        reasons.append(f"construction {spec.construction} has no cyclic unit group")
    if fom.family not in ("Palpha", "PalphaTilde", "Sobolev1", "R2prime"):
        reasons.append(f"criterion {fom.family} is not a plain kernel criterion")
    if not LinearKernelState.supports(fom):
        reasons.append("weights must be product, order-dependent or POD with finite q")
    if spec.multi_level is not None:
        reasons.append("multi-level criteria are not supported")
    if reasons:
        raise UnsupportedSearchError(
            "fast-CBC does not apply (" + "; ".join(reasons) + "); use full-CBC instead"
        )
