"""Monte Carlo toolkit for majorization of random probability vectors.

The package provides exact majorization predicates and the maximal
incoherent-conversion probability, reproducible simplex samplers, the
order-statistics oracle layer, and the Monte Carlo experiments that measure
the decay of the convertibility probability, the occupation-time law of the
sorted-difference bridge, and the limiting distribution of the conversion
probability.
"""

from .errors import DimensionMismatchError, ZeroDenominatorError
from .experiments import (
    EmpiricalCdf,
    EstimateWithError,
    PowerLawFit,
    arcsine_cdf,
    conversion_distribution_experiment,
    estimate_convertibility,
    estimate_partial_majorization,
    fit_power_law,
    ks_distance,
    limit_distribution_experiment,
    occupation_time_experiment,
    persistence_probabilities,
    sup_distance,
)
from .majorization import (
    BridgeWalk,
    ProbVector,
    SortedProbVector,
    bridge_walk,
    conversion_probability,
    limit_conversion_probability,
    majorizes,
    sort_desc,
    time_above_origin,
)
from .order_stats import (
    EXP1,
    UNIFORM01,
    BaseDistribution,
    ChainSample,
    MinComponentStats,
    density_order_stat,
    gumbel_chain_from_spacings,
    joint_density_bottom,
    joint_density_gumbel,
    joint_density_poisson,
    joint_density_top,
    min_component_stats,
    poisson_chain_from_spacings,
    sample_gumbel_chain,
    sample_poisson_chain,
    transition_cdf_bottom,
    transition_cdf_top,
)
from .sampling import (
    DirichletParam,
    RngStream,
    as_generator,
    exponential_from_uniform,
    sample_dirichlet,
    sample_exponentials,
    sample_uniform_simplex,
)

__version__ = "0.1.0"

__all__ = [
    "BaseDistribution",
    "BridgeWalk",
    "ChainSample",
    "DimensionMismatchError",
    "DirichletParam",
    "EXP1",
    "EmpiricalCdf",
    "EstimateWithError",
    "MinComponentStats",
    "PowerLawFit",
    "ProbVector",
    "RngStream",
    "SortedProbVector",
    "UNIFORM01",
    "ZeroDenominatorError",
    "arcsine_cdf",
    "as_generator",
    "bridge_walk",
    "conversion_distribution_experiment",
    "conversion_probability",
    "density_order_stat",
    "estimate_convertibility",
    "estimate_partial_majorization",
    "exponential_from_uniform",
    "fit_power_law",
    "gumbel_chain_from_spacings",
    "joint_density_bottom",
    "joint_density_gumbel",
    "joint_density_poisson",
    "joint_density_top",
    "ks_distance",
    "limit_conversion_probability",
    "limit_distribution_experiment",
    "majorizes",
    "min_component_stats",
    "occupation_time_experiment",
    "persistence_probabilities",
    "poisson_chain_from_spacings",
    "sample_dirichlet",
    "sample_exponentials",
    "sample_gumbel_chain",
    "sample_poisson_chain",
    "sample_uniform_simplex",
    "sort_desc",
    "sup_distance",
    "time_above_origin",
    "transition_cdf_top",
    "transition_cdf_bottom",
]
