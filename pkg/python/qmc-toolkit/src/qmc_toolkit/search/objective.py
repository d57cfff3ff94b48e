"""Search objective: a merit combined over nested point counts and dimension prefixes.

Level 2^l of a lattice with n = 2^k points is the embedded lattice made of
every 2^(k-l)-th point; level 2^l of a digital net is its first 2^l points.
"""

import math
from typing import Mapping, Sequence

import numpy as np
import numpy.typing as npt

from ..merit import (
    INTERLACED_FAMILIES,
    T_VALUE_FAMILIES,
    FomSpec,
    eval_interlaced_fom,
    eval_kernel_fom,
    evaluate,
    t_value_bound_fom,
)
from ..pointsets import (
    InterlacedNet,
    PointSetDef,
    Rank1Lattice,
    generate_points,
    leading_coordinates,
    net_prefix,
    to_digital_net,
)
from .types import LevelCombination, SearchSpec

Rows = npt.NDArray[np.int64]


def combine(values: Sequence[float], weights: Sequence[float], combiner: str) -> float:
    terms = [w * v for w, v in zip(weights, values, strict=True)]
    return max(terms) if combiner == "max" else math.fsum(terms)


class Objective:
    """Level rows and combiners of a search specification."""

    def __init__(self, spec: SearchSpec, *, strided: bool):
        self.spec = spec
        n = spec.point_count
        self.level_weights: tuple[float, ...] = (1.0,)
        self.level_combiner = "sum"
        self.levels: list[Rows] = [np.arange(n, dtype=np.int64)]
        levels = spec.multi_level
        k = spec.size_exponent
        if levels is not None and k is not None:
            self.level_weights = levels.weights_for(k)
            self.level_combiner = levels.combiner
            self.levels = [
                np.arange(0, n, 1 << (k - ell), dtype=np.int64)
                if strided
                else np.arange(1 << ell, dtype=np.int64)
                for ell in range(levels.first, k + 1)
            ]

    @property
    def single_level(self) -> bool:
        return len(self.levels) == 1

    def combine_levels(self, values: Sequence[float]) -> float:
        if self.single_level:
            return values[0]
        return combine(values, self.level_weights, self.level_combiner)

    def dimensions(self, s: int) -> list[int]:
        """Dimension prefixes entering the objective of an s-dimensional point set."""
        levels: LevelCombination | None = self.spec.dimension_levels
        if levels is None or s < levels.first:
            return [s]
        return list(range(levels.first, s + 1))

    def combine_dimensions(self, by_dimension: Mapping[int, float], s: int) -> float:
        levels = self.spec.dimension_levels
        dims = self.dimensions(s)
        if levels is None or dims == [s] and s < levels.first:
            return by_dimension[s]
        weights = levels.weights_for(self.spec.s)
        return combine(
            [by_dimension[d] for d in dims],
            [weights[d - levels.first] for d in dims],
            levels.combiner,
        )


def _level_merit(defn: PointSetDef, fom: FomSpec, rows: Rows, full: bool) -> float:
    if full:
        return evaluate(defn, fom).total
    if fom.family in T_VALUE_FAMILIES:
        level_k = rows.size.bit_length() - 1
        return t_value_bound_fom(net_prefix(to_digital_net(defn), level_k), fom).total
    if isinstance(defn, InterlacedNet) and fom.family in INTERLACED_FAMILIES:
        inner = generate_points(defn.inner)
        return eval_interlaced_fom(inner._replace(values=inner.values[rows]), fom).total
    points = generate_points(defn)
    return eval_kernel_fom(points._replace(values=points.values[rows]), fom).total


def multi_level_merit(defn: PointSetDef, spec: SearchSpec) -> float:
    """Objective value of a complete or prefix point set under ``spec``.

    With a single level and no dimension levels this is exactly
    ``evaluate(defn, spec.fom).total``.
    """
    objective = Objective(spec, strided=isinstance(defn, Rank1Lattice))
    by_dimension = {}
    for s in objective.dimensions(defn.s):
        prefix = defn if s == defn.s else leading_coordinates(defn, s)
        values = [
            _level_merit(prefix, spec.fom, rows, objective.single_level)
            for rows in objective.levels
        ]
        by_dimension[s] = objective.combine_levels(values)
    return objective.combine_dimensions(by_dimension, defn.s)
