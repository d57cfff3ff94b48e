from .dual import dual_variance_identity_check, in_dual, shifted_estimator_variance
from .histogram import t_value_histogram
from .integrands import (
    eval_anova_psi,
    eval_prod_linear,
    exact_integral,
    integrand_values,
    prod_linear_anova_term,
    prod_linear_shift_variance,
    prod_linear_variance,
    trig_poly_values,
)
from .quantiles import SampledFamily, fom_quantile_study
from .sobol_comparison import (
    projection_t_value_criterion,
    search_sobol_spec,
    sobol_comparison_study,
)
from .tables import histogram_table, quantile_table, variance_table
from .types import (
    AnovaPsi,
    Constant,
    DualVarianceReport,
    ExperimentError,
    ProdLinear,
    QuantileRow,
    SobolComparison,
    TestIntegrand,
    TrigPoly,
    TValueHistogram,
    VarianceReport,
    VarianceRow,
)
from .variance import (
    StudyFamily,
    fit_slope,
    monte_carlo_definitions,
    replicate_averages,
    searched_definitions,
    standard_error,
    variance_study,
)

__all__ = [
    # Integrands
    "AnovaPsi",
    "Constant",
    "ProdLinear",
    "TestIntegrand",
    "TrigPoly",
    "eval_anova_psi",
    "eval_prod_linear",
    "exact_integral",
    "integrand_values",
    "prod_linear_anova_term",
    "prod_linear_shift_variance",
    "prod_linear_variance",
    "trig_poly_values",
    # Reports
    "DualVarianceReport",
    "ExperimentError",
    "QuantileRow",
    "SobolComparison",
    "TValueHistogram",
    "VarianceReport",
    "VarianceRow",
    # Studies
    "SampledFamily",
    "StudyFamily",
    "dual_variance_identity_check",
    "fit_slope",
    "fom_quantile_study",
    "in_dual",
    "monte_carlo_definitions",
    "projection_t_value_criterion",
    "replicate_averages",
    "search_sobol_spec",
    "searched_definitions",
    "shifted_estimator_variance",
    "sobol_comparison_study",
    "standard_error",
    "t_value_histogram",
    "variance_study",
    # Tables
    "histogram_table",
    "quantile_table",
    "variance_table",
]
