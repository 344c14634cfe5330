"""Point estimators of a conditional probability from observed counts.

Given n occurrences of the conditioning event B and x joint occurrences
of A and B, every estimator here maps (n, x) to a number in [0, 1]:

* ``mle``                 -- x/n, the maximum likelihood estimate
* ``laplace_mean``        -- (x+1)/(n+2), additive smoothing
* ``posterior_mean``      -- (x+a)/(n+a+b) under a Beta(a, b) prior
* ``theta_lower_bound``   -- the conservative estimate: the point t with
                             posterior mass alpha above it, i.e. the lower
                             limit of the one-sided credible interval
                             [t, 1] on the Beta posterior
* ``clopper_pearson_lower`` -- the classical frequentist "exact" lower
                             confidence limit, for comparison

``theta_lower_bound`` is strictly positive even at x = 0, which is the
whole point: rare candidates are discounted, never zeroed out or dropped.
``apply_minsup`` implements the drop-below-threshold alternative so the
two policies can be compared side by side.

All functions are pure; results depend only on the arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from condprob.betacore import UNIFORM, BetaParams, beta_quantile

#: Estimator kinds accepted by EstimatorConfig / point_estimate.
KINDS = ("mle", "laplace", "posterior_mean", "lower_bound", "clopper_pearson")

#: Ratio values dropped by default when fitting a prior from observed
#: maximum-likelihood ratios: 0 and every fraction with denominator <= 5
#: that shows up as a spike of low-frequency pairs (1/1, 1/2, 1/3, 2/3,
#: 1/4, 3/4, 1/5, 2/5, 3/5, 4/5).
DEFAULT_EXCLUDED_RATIOS = (
    0.0,
    1.0,
    1 / 2,
    1 / 3,
    2 / 3,
    1 / 4,
    3 / 4,
    1 / 5,
    2 / 5,
    3 / 5,
    4 / 5,
)

#: Two observed ratios are considered equal if they differ by less than
#: this; ratios are exact rationals with small denominators, so a tight
#: tolerance suffices.
RATIO_MATCH_TOL = 1e-9


@dataclass(frozen=True)
class FrequencyPair:
    """Observed counts for one conditional query P(A|B).

    n counts occurrences of the conditioning event B, x the joint
    occurrences of A and B; 0 <= x <= n.
    """

    n: int
    x: int

    def __post_init__(self):
        if self.n < 0 or self.x < 0 or self.x > self.n:
            raise ValueError(f"require 0 <= x <= n, got n={self.n}, x={self.x}")


@dataclass(frozen=True)
class EstimatorConfig:
    """One estimator choice plus its parameters, for scoring pipelines."""

    kind: str
    prior: BetaParams = UNIFORM
    alpha: float = 0.99
    minsup: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown estimator kind {self.kind!r}; choose from {KINDS}")
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        if self.minsup < 1:
            raise ValueError(f"minsup must be >= 1, got {self.minsup}")


def posterior_params(f: FrequencyPair, prior: BetaParams = UNIFORM) -> BetaParams:
    """Conjugate update: Beta(a, b) prior + (n, x) counts -> Beta(a+x, b+n-x)."""
    return BetaParams(prior.a + f.x, prior.b + (f.n - f.x))


def mle(f: FrequencyPair) -> float:
    """Maximum likelihood estimate x/n; undefined (raises) when n = 0."""
    if f.n == 0:
        raise ValueError("MLE is undefined for n = 0")
    return f.x / f.n


def laplace_mean(f: FrequencyPair) -> float:
    """Additive smoothing (x+1)/(n+2): the posterior mean under Beta(1, 1)."""
    return (f.x + 1) / (f.n + 2)


def posterior_mean(f: FrequencyPair, prior: BetaParams = UNIFORM) -> float:
    """Posterior expected value (x+a)/(n+a+b) under a Beta(a, b) prior."""
    return (f.x + prior.a) / (f.n + prior.a + prior.b)


@lru_cache(maxsize=1 << 16)
def _cached_quantile(a: float, b: float, q: float) -> float:
    # Scoring pipelines hit the same (n, x) pairs thousands of times.
    return beta_quantile(BetaParams(a, b), q)


def theta_lower_bound(
    f: FrequencyPair, prior: BetaParams = UNIFORM, alpha: float = 0.99
) -> float:
    """Lower limit of the one-sided credible interval on the posterior.

    The returned t satisfies P(Theta > t | n, x) = alpha, i.e. it is the
    (1-alpha) quantile of the Beta(a+x, b+n-x) posterior.  Strictly inside
    (0, 1) for every valid input, including x = 0.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    post = posterior_params(f, prior)
    return _cached_quantile(post.a, post.b, 1.0 - alpha)


def clopper_pearson_lower(f: FrequencyPair, alpha: float) -> float:
    """One-sided Clopper-Pearson lower confidence limit at coverage alpha.

    Zero when x = 0 (unlike the credible lower bound); otherwise the t
    solving I_t(x, n-x+1) = 1 - alpha.  Undefined for n = 0.
    """
    if f.n == 0:
        raise ValueError("Clopper-Pearson limit is undefined for n = 0")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    if f.x == 0:
        return 0.0
    return _cached_quantile(float(f.x), float(f.n - f.x + 1), 1.0 - alpha)


def fit_prior_moments(mean: float, variance: float) -> BetaParams:
    """Method-of-moments Beta fit from a mean and variance.

    With k = mean*(1-mean)/variance - 1, the parameters are a = mean*k and
    b = (1-mean)*k.  Feasibility requires 0 < variance < mean*(1-mean).
    """
    if not 0.0 < mean < 1.0:
        raise ValueError(f"mean must lie in (0, 1), got {mean}")
    if variance <= 0.0:
        raise ValueError(f"variance must be positive, got {variance}")
    if variance >= mean * (1.0 - mean):
        raise ValueError(
            f"infeasible moments: variance {variance} >= mean*(1-mean) "
            f"= {mean * (1.0 - mean)}"
        )
    k = mean * (1.0 - mean) / variance - 1.0
    return BetaParams(mean * k, (1.0 - mean) * k)


def fit_prior_from_ratios(
    ratios: Sequence[float],
    excluded: Iterable[float] = DEFAULT_EXCLUDED_RATIOS,
) -> BetaParams:
    """Fit a Beta prior to observed x/n ratios, ignoring listed values.

    Low-frequency pairs pile up on a handful of exact rationals (1/1, 1/2,
    ...), which would dominate the fit without reflecting any real prior
    belief; entries within RATIO_MATCH_TOL of an excluded value are
    dropped.  The retained sample's mean and (n-1 denominator) variance
    feed fit_prior_moments.
    """
    excluded = tuple(excluded)
    retained = [
        r for r in ratios if all(abs(r - e) > RATIO_MATCH_TOL for e in excluded)
    ]
    if len(retained) < 2:
        raise ValueError(
            f"need at least 2 ratios after exclusion, have {len(retained)}"
        )
    mean = math.fsum(retained) / len(retained)
    variance = math.fsum((r - mean) ** 2 for r in retained) / (len(retained) - 1)
    if variance == 0.0:
        raise ValueError("retained ratios are all identical; variance is zero")
    return fit_prior_moments(mean, variance)


def apply_minsup(f: FrequencyPair, minsup: int) -> Optional[FrequencyPair]:
    """Minimum-support filter: None when n < minsup, else the pair unchanged.

    Returning absence (not a zero score) matches how support thresholds
    are actually used: the candidate disappears from the output entirely.
    """
    if minsup < 1:
        raise ValueError(f"minsup must be >= 1, got {minsup}")
    return f if f.n >= minsup else None


def point_estimate(f: FrequencyPair, config: EstimatorConfig) -> float:
    """Evaluate the configured estimator on one frequency pair."""
    if config.kind == "mle":
        return mle(f)
    if config.kind == "laplace":
        return laplace_mean(f)
    if config.kind == "posterior_mean":
        return posterior_mean(f, config.prior)
    if config.kind == "lower_bound":
        return theta_lower_bound(f, config.prior, config.alpha)
    if config.kind == "clopper_pearson":
        return clopper_pearson_lower(f, config.alpha)
    raise ValueError(f"unknown estimator kind {config.kind!r}")
