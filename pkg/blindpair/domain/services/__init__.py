from .colour_blind import monte_carlo_p_value, rns_eval, sup_statistic, sym_ecdf
from .distributions import (
    inverse_cdf,
    regularized_incomplete_beta,
    sample_ordered_pairs,
    sample_unordered_pair,
    true_cdf,
)
from .ecdf import ecdf_build, ecdf_eval, ingest_pairs, min_max_ecdfs, pooled_ecdf
from .estimator import (
    alpha_beta,
    asymptotic_sd,
    crossing_point,
    crossing_variants,
    default_grid,
    discriminant,
    estimate_marginals,
    estimate_to_isotonic,
    forward_minmax,
    h_weights,
    isotonize,
    separation_set,
)
from .pillow import generate, pillow_field, pillow_sup_once, quantiles
from .rng import derive_rng, run_replicates

__all__ = [
    "ingest_pairs",
    "ecdf_build",
    "ecdf_eval",
    "min_max_ecdfs",
    "pooled_ecdf",
    "forward_minmax",
    "discriminant",
    "alpha_beta",
    "default_grid",
    "estimate_marginals",
    "estimate_to_isotonic",
    "crossing_point",
    "crossing_variants",
    "h_weights",
    "asymptotic_sd",
    "isotonize",
    "separation_set",
    "sym_ecdf",
    "rns_eval",
    "sup_statistic",
    "monte_carlo_p_value",
    "pillow_field",
    "pillow_sup_once",
    "generate",
    "quantiles",
    "true_cdf",
    "regularized_incomplete_beta",
    "inverse_cdf",
    "sample_ordered_pairs",
    "sample_unordered_pair",
    "derive_rng",
    "run_replicates",
]
