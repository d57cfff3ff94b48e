from ..pointsets import (
    InterlacedNet,
    Points,
    PointSetDef,
    generate_points,
    to_digital_net,
)
from ..weights import WeightSpec
from .combiner import combine_kernel
from .kernels import kernel_matrix
from .tvalue import t_value_bound_fom
from .types import INTERLACED_FAMILIES, T_VALUE_FAMILIES, FomSpec, MeritError, MeritValue


def eval_kernel_fom(points: Points, spec: FomSpec, per_projection: bool = False) -> MeritValue:
    """Kernel figure of merit of a point block."""
    if spec.family in T_VALUE_FAMILIES:
        raise MeritError(f"{spec.family} has no kernel; use t_value_bound_fom")
    return combine_kernel(kernel_matrix(points, spec), spec, per_projection=per_projection)


def eval_interlaced_fom(inner_points: Points, spec: FomSpec) -> MeritValue:
    """Interlaced-rule merit from the s*d-dimensional inner points."""
    if spec.family not in INTERLACED_FAMILIES:
        raise MeritError(f"{spec.family} is not an interlaced figure of merit")
    if inner_points.s % spec.d:
        raise MeritError(
            f"Inner dimension {inner_points.s} is not a multiple of d = {spec.d}"
        )
    return eval_kernel_fom(inner_points, spec)


def eval_r2prime(points: Points, weights: WeightSpec) -> MeritValue:
    return eval_kernel_fom(points, FomSpec(family="R2prime", q=1, weights=weights))


def evaluate(defn: PointSetDef, spec: FomSpec) -> MeritValue:
    """Figure of merit of a point-set definition."""
    if spec.family in T_VALUE_FAMILIES:
        return t_value_bound_fom(to_digital_net(defn), spec)
    if spec.family in INTERLACED_FAMILIES:
        if isinstance(defn, InterlacedNet):
            if defn.d != spec.d:
                raise MeritError(f"Rule interlaced with d = {defn.d}, merit expects d = {spec.d}")
            return eval_interlaced_fom(generate_points(defn.inner), spec)
        if spec.d != 1:
            raise MeritError(f"{spec.family} with d = {spec.d} needs an interlaced rule")
    return eval_kernel_fom(generate_points(defn), spec)
