"""Weighted combination of projection merits.

For finite q the total is sum_u w_u^q K_u, where K_u is the mean over the
points of prod_{j in u} phi(u_{i,j}) (minus a constant for R2prime). For
q = inf it is max_u w_u * max(0, K_u)^(1/p), p being the power of the
projection discrepancy the kernel represents.
"""

import math
from typing import Mapping

import numpy as np

from ..weights import (
    ExplicitWeights,
    OrderDependentWeights,
    PODWeights,
    ProductWeights,
    WeightSpec,
    geometric,
    order_weights,
    projections,
    raise_weights,
    transform_weights,
    weight_of,
)
from .kernels import (
    FloatArray,
    interlaced_a_factor,
    interlaced_c_factor,
    kernel_baseline,
)
from .types import FomSpec, MeritError, MeritValue

# Enumerating every projection beyond this many coordinates is refused.
MAX_ENUMERATED_DIMENSION = 24


def effective_weights(spec: FomSpec, s: int) -> WeightSpec:
    """gamma~_u (family rescaling), raised to the power q when q is finite."""
    weights: WeightSpec = spec.weights
    if spec.family == "IAlphaDa":
        weights = transform_weights(weights, geometric(interlaced_a_factor(int(spec.alpha), spec.d)), s)
    elif spec.family == "IAlphaDc":
        weights = transform_weights(weights, geometric(interlaced_c_factor(int(spec.alpha), spec.d)), s)
    if spec.is_max:
        return weights
    return raise_weights(weights, spec.q, s)


def exact_mean(values: FloatArray) -> float:
    """Correctly rounded mean; independent of summation order."""
    return math.fsum(values.tolist()) / values.size


def _product_terms(phi: FloatArray, gammas: tuple[float, ...]) -> FloatArray:
    g = np.asarray(gammas[: phi.shape[1]], dtype=np.float64)
    return np.prod(1.0 + g[None, :] * phi, axis=1)


def elementary_symmetric(x: FloatArray) -> FloatArray:
    """e_0..e_s of the rows of x, shape (n, s + 1)."""
    n, s = x.shape
    e = np.zeros((n, s + 1))
    e[:, 0] = 1.0
    for j in range(s):
        e[:, 1 : j + 2] += x[:, j : j + 1] * e[:, : j + 1]
    return e


def _order_terms(phi: FloatArray, weights: OrderDependentWeights | PODWeights) -> FloatArray:
    s = phi.shape[1]
    x = phi
    if isinstance(weights, PODWeights):
        x = phi * np.asarray(weights.product_gammas[:s])[None, :]
    e = elementary_symmetric(x)
    return e[:, 1:] @ np.asarray(order_weights(weights, s))


def weight_sum(weights: WeightSpec, s: int) -> float:
    """sum over nonempty u of w_u."""
    match weights:
        case ProductWeights():
            return math.prod(1.0 + g for g in weights.gammas[:s]) - 1.0
        case OrderDependentWeights() | PODWeights():
            ones = np.ones((1, s))
            return float(_order_terms(ones, weights)[0])
    return math.fsum(weight_of(weights, u) for u in projections(weights, s))


def combine_kernel(phi: FloatArray, spec: FomSpec, per_projection: bool = False) -> MeritValue:
    """Combine the per-point kernel matrix phi (n x s) into the figure of merit."""
    s = phi.shape[1]
    weights = effective_weights(spec, s)
    baseline = kernel_baseline(spec)
    if spec.is_max or per_projection or isinstance(weights, ExplicitWeights):
        return _combine_enumerated(phi, spec, weights, baseline)
    match weights:
        case ProductWeights():
            if len(weights.gammas) < s:
                raise MeritError(f"Coordinate {len(weights.gammas) + 1} has no product weight")
            total = exact_mean(_product_terms(phi, weights.gammas)) - 1.0
        case OrderDependentWeights() | PODWeights():
            total = exact_mean(_order_terms(phi, weights))
        case _:
            raise MeritError(f"Unsupported weights {weights!r}")
    if baseline:
        total -= baseline * weight_sum(weights, s)
    return MeritValue(total=total)


def eval_product_weight_fast(phi: FloatArray, spec: FomSpec) -> MeritValue:
    """-1 + (1/n) sum_i prod_j (1 + gamma_j^q phi(u_{i,j})) for product weights."""
    if not isinstance(spec.weights, ProductWeights) or spec.is_max:
        raise MeritError("The product-weight formula needs product weights and finite q")
    return combine_kernel(phi, spec)


def _combine_enumerated(
    phi: FloatArray, spec: FomSpec, weights: WeightSpec, baseline: float
) -> MeritValue:
    s = phi.shape[1]
    if not isinstance(weights, ExplicitWeights) and s > MAX_ENUMERATED_DIMENSION:
        raise MeritError(
            f"Enumerating all projections of {s} coordinates is not supported; "
            "use finite q with product, order-dependent or POD weights"
        )
    per: dict[tuple[int, ...], float] = {}
    terms: list[float] = []
    for u in projections(weights, s):
        w = weight_of(weights, u)
        if w == 0:
            continue
        cols = [j - 1 for j in u]
        k_u = exact_mean(np.prod(phi[:, cols], axis=1)) - baseline
        per[u] = k_u
        if spec.is_max:
            terms.append(w * max(0.0, k_u) ** (1.0 / spec.natural_exponent))
        else:
            terms.append(w * k_u)
    if spec.is_max:
        total = max(terms, default=0.0)
    else:
        total = math.fsum(terms)
    return MeritValue(total=total, per_projection=per)


def combine_projection_values(values: Mapping[tuple[int, ...], float], spec: FomSpec) -> MeritValue:
    """Combine discrepancies D_u given per projection (t-value families)."""
    terms = []
    for u, d_u in values.items():
        w = weight_of(spec.weights, u)
        if w == 0:
            continue
        terms.append(w * d_u if spec.is_max else (w * d_u) ** spec.q)
    total = max(terms, default=0.0) if spec.is_max else math.fsum(terms)
    return MeritValue(total=total, per_projection=dict(values))
