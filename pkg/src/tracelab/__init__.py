"""Numerical verification of trace-function convexity and monotonicity.

The library builds matrix functional calculus (spectral and bivariate),
entropy functionals, power-sum trace functions, an integral-representation
quadrature, Frechet differentials, and contraction-compression
inequalities, then checks the claims by seeded sampling.  The ``tracelab``
command line runs the named suites and emits JSON or CSV reports.
"""

from .entropy import (
    KrausChannel,
    apply_channel,
    channel_block_embedding,
    entropy,
    entropy_gain,
    entropy_gap,
    entropy_on_support,
    multi_channel_gain,
    random_channel,
    relative_entropy,
    residual_block_embedding,
    residual_entropy,
)
from .errors import (
    ArgumentError,
    ConvergenceError,
    DomainError,
    SingularityError,
    TraceLabError,
)
from .frechet import (
    LoewnerMatrix,
    divided_diff_trace,
    frechet_diff,
    frechet_inv,
    loewner,
    logmean_quad_form,
    power_mixture_quad_form,
    quad_form,
    quad_form_inv,
)
from .harness import (
    CONCAVE,
    CONVEX,
    IDENTITY,
    JOINTLY_CONCAVE,
    JOINTLY_CONVEX,
    MONOTONE,
    PSD,
    FunctionalUnderTest,
    PropertyReport,
    as_jsonable,
    contraction_sampler,
    hermitian_sampler,
    jensen_test,
    order_monotone_test,
    pd_sampler,
    psd_claim_test,
    unit_interval_sampler,
)
from .linalg import (
    apply_fn,
    eigh,
    hermitian_part,
    is_psd,
    make_rng,
    random_contraction,
    random_hermitian,
    random_pd,
    random_unitary,
    spectrum,
)
from .orderineq import (
    jensen_contraction_check,
    monotonicity_certificate,
    power_trace_gap,
    power_trace_gap_directional,
)
from .powersum import (
    PRParams,
    kweighted_power_sum,
    scalar_variational,
    trace_power_sum,
    variational_bound,
)
from .reprmeasure import (
    QuadratureSpec,
    branch_angle,
    divided_difference_quadrature,
    integral_representation,
    offset_constant,
    op_convex_check,
    op_monotone_check,
    weight_density,
)
from .scalarfn import (
    Log,
    LogMeanGenerator,
    Power,
    PowerMixture,
    PowerPlusOneRoot,
    ScalarFunction,
    WeightedPowerRoot,
    XLogX,
)
from .suites import RunConfig, run_scan, run_suite, run_tabulation, suite_names
from .superop import (
    BivariateFunction,
    Custom,
    DividedDiff,
    LeftOnly,
    LogMean,
    Perspective,
    Product,
    PowerSumRoot,
    bivariate_apply,
    trace_form,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "TraceLabError",
    "DomainError",
    "ArgumentError",
    "SingularityError",
    "ConvergenceError",
    # scalar functions
    "ScalarFunction",
    "Power",
    "XLogX",
    "Log",
    "PowerPlusOneRoot",
    "WeightedPowerRoot",
    "PowerMixture",
    "LogMeanGenerator",
    # linear algebra
    "make_rng",
    "hermitian_part",
    "eigh",
    "spectrum",
    "apply_fn",
    "is_psd",
    "random_unitary",
    "random_hermitian",
    "random_pd",
    "random_contraction",
    # bivariate calculus
    "BivariateFunction",
    "Perspective",
    "PowerSumRoot",
    "DividedDiff",
    "LogMean",
    "Product",
    "LeftOnly",
    "Custom",
    "bivariate_apply",
    "trace_form",
    # entropy
    "entropy",
    "entropy_on_support",
    "entropy_gap",
    "residual_entropy",
    "relative_entropy",
    "KrausChannel",
    "apply_channel",
    "entropy_gain",
    "multi_channel_gain",
    "random_channel",
    "residual_block_embedding",
    "channel_block_embedding",
    # power sums
    "PRParams",
    "trace_power_sum",
    "kweighted_power_sum",
    "scalar_variational",
    "variational_bound",
    # integral representation
    "QuadratureSpec",
    "branch_angle",
    "weight_density",
    "offset_constant",
    "integral_representation",
    "divided_difference_quadrature",
    "op_monotone_check",
    "op_convex_check",
    # Frechet layer
    "LoewnerMatrix",
    "loewner",
    "frechet_diff",
    "frechet_inv",
    "quad_form",
    "quad_form_inv",
    "logmean_quad_form",
    "power_mixture_quad_form",
    "divided_diff_trace",
    # compression inequalities
    "monotonicity_certificate",
    "power_trace_gap",
    "power_trace_gap_directional",
    "jensen_contraction_check",
    # harness and suites
    "CONVEX",
    "CONCAVE",
    "JOINTLY_CONVEX",
    "JOINTLY_CONCAVE",
    "MONOTONE",
    "PSD",
    "IDENTITY",
    "PropertyReport",
    "FunctionalUnderTest",
    "as_jsonable",
    "jensen_test",
    "order_monotone_test",
    "psd_claim_test",
    "pd_sampler",
    "hermitian_sampler",
    "contraction_sampler",
    "unit_interval_sampler",
    "RunConfig",
    "suite_names",
    "run_suite",
    "run_scan",
    "run_tabulation",
]
