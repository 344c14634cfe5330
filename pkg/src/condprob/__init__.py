"""Conservative conditional-probability estimation.

Estimates P(A|B) from the observed frequencies (n, x) of the conditioning
and joint events.  The headline estimator is the lower limit of the
one-sided credible interval on the Beta posterior -- a smoothing value
that is always positive, discounts low-frequency evidence, and never
discards a candidate outright the way minimum-support thresholds do.
Baselines (maximum likelihood, Laplace/additive smoothing, posterior mean
under a fitted prior, Clopper-Pearson) plus a synthetic-data ranking
harness round out the package.
"""

from condprob.betacore import (
    BACKEND,
    BetaParams,
    ConvergenceError,
    UNIFORM,
    beta_quantile,
    log_beta_function,
    reg_inc_beta,
)
from condprob.estimators import (
    EstimatorConfig,
    FrequencyPair,
    apply_minsup,
    clopper_pearson_lower,
    fit_prior_from_ratios,
    fit_prior_moments,
    laplace_mean,
    mle,
    point_estimate,
    posterior_mean,
    posterior_params,
    theta_lower_bound,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BetaParams",
    "ConvergenceError",
    "EstimatorConfig",
    "FrequencyPair",
    "UNIFORM",
    "apply_minsup",
    "beta_quantile",
    "clopper_pearson_lower",
    "fit_prior_from_ratios",
    "fit_prior_moments",
    "laplace_mean",
    "log_beta_function",
    "mle",
    "point_estimate",
    "posterior_mean",
    "posterior_params",
    "reg_inc_beta",
    "theta_lower_bound",
]
