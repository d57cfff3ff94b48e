from .combiner import (
    combine_kernel,
    combine_projection_values,
    effective_weights,
    elementary_symmetric,
    eval_product_weight_fast,
    exact_mean,
    weight_sum,
)
from .evaluate import eval_interlaced_fom, eval_kernel_fom, eval_r2prime, evaluate
from .kernels import (
    floor_log2_digits,
    interlaced_a_factor,
    interlaced_c_factor,
    interlaced_component_values,
    kernel_baseline,
    kernel_matrix,
    kernel_palpha,
    kernel_palpha_tilde,
    kernel_sobolev1,
)
from .oracles import oracle_palpha_dual, star_discrepancy_bound
from .tvalue import (
    box_count_t_value,
    compositions,
    oracle_t_value_box_count,
    t_value,
    t_value_bound,
    t_value_bound_fom,
)
from .types import (
    INTERLACED_FAMILIES,
    KERNEL_FAMILIES,
    T_VALUE_FAMILIES,
    FomFamily,
    FomSpec,
    MeritError,
    MeritValue,
)

__all__ = [
    # Types
    "FomFamily",
    "FomSpec",
    "MeritError",
    "MeritValue",
    "INTERLACED_FAMILIES",
    "KERNEL_FAMILIES",
    "T_VALUE_FAMILIES",
    # Kernels
    "floor_log2_digits",
    "interlaced_a_factor",
    "interlaced_c_factor",
    "interlaced_component_values",
    "kernel_baseline",
    "kernel_matrix",
    "kernel_palpha",
    "kernel_palpha_tilde",
    "kernel_sobolev1",
    # Combination and evaluation
    "combine_kernel",
    "combine_projection_values",
    "effective_weights",
    "elementary_symmetric",
    "eval_interlaced_fom",
    "eval_kernel_fom",
    "eval_product_weight_fast",
    "eval_r2prime",
    "evaluate",
    "exact_mean",
    "weight_sum",
    # t-values
    "box_count_t_value",
    "compositions",
    "oracle_t_value_box_count",
    "t_value",
    "t_value_bound",
    "t_value_bound_fom",
    # Oracles
    "oracle_palpha_dual",
    "star_discrepancy_bound",
]
