"""Beta distribution special functions and numerical quantile inversion.

The three operations here are the numeric heart of the package: the log
beta function, the regularized incomplete beta function I_t(a, b) (the
Beta CDF), and its inverse.  Everything else -- credible lower bounds,
Clopper-Pearson limits, the published estimator tables -- reduces to
these.

Two interchangeable backends implement the kernels:

* ``condprob._betakernel`` -- Cython extension, used when built;
* ``condprob._betakernel_py`` -- pure-Python fallback, always available.

Selection happens once at import.  Set ``CONDPROB_BACKEND=python`` or
``=cython`` to force a backend (``auto``, the default, prefers the
compiled one); ``condprob.betacore.BACKEND`` names the active choice.
``benchmarks/bench_kernels.py`` compares the two.

All functions are pure and hold no shared mutable state, so they are safe
to call from any number of threads.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from condprob import _betakernel_py

try:
    from condprob import _betakernel
except ImportError:
    _betakernel = None

#: |I_t(a,b) - q| above which beta_quantile refuses to return.
QUANTILE_RESIDUAL_TOL = 1e-10


class ConvergenceError(ArithmeticError):
    """Quantile iteration failed to meet the residual tolerance."""


def _select_backend():
    choice = os.environ.get("CONDPROB_BACKEND", "auto")
    if choice == "python":
        return _betakernel_py, "python"
    if choice == "cython":
        if _betakernel is None:
            raise ImportError(
                "CONDPROB_BACKEND=cython but the compiled kernel is not built"
            )
        return _betakernel, "cython"
    if choice == "auto":
        if _betakernel is not None:
            return _betakernel, "cython"
        return _betakernel_py, "python"
    raise ValueError(f"unrecognized CONDPROB_BACKEND value: {choice!r}")


_impl, BACKEND = _select_backend()


@dataclass(frozen=True)
class BetaParams:
    """Shape parameters of a Beta distribution (prior or posterior)."""

    a: float
    b: float

    def __post_init__(self):
        if not (self.a > 0.0 and self.b > 0.0):
            raise ValueError(f"beta shape parameters must be positive, got {self}")


#: The uninformative prior: Beta(1, 1).
UNIFORM = BetaParams(1.0, 1.0)


def log_beta_function(p: BetaParams) -> float:
    """Natural log of the beta function B(a, b) = G(a)G(b)/G(a+b)."""
    return _impl.log_beta(p.a, p.b)


def reg_inc_beta(t: float, p: BetaParams) -> float:
    """Regularized incomplete beta I_t(a, b): the Beta(a, b) CDF at t.

    Exactly 0.0 at t=0 and 1.0 at t=1; raises ValueError for t outside
    [0, 1].
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"t must lie in [0, 1], got {t}")
    if t == 0.0:
        return 0.0
    if t == 1.0:
        return 1.0
    return _impl.betainc(p.a, p.b, t)


def beta_quantile(p: BetaParams, q: float) -> float:
    """The t in (0, 1) with I_t(a, b) = q.

    Solved by Newton iteration on the CDF, safeguarded with bisection so
    the iterate never leaves a sign-changing bracket.  The result is
    accepted only if |I_t - q| <= QUANTILE_RESIDUAL_TOL; otherwise
    ConvergenceError is raised rather than returning a bad value.

    q = 0 and q = 1 are rejected: degenerate confidence levels must be
    handled by the caller, not mapped silently to an endpoint.
    """
    if not 0.0 < q < 1.0:
        raise ValueError(f"quantile level must lie strictly in (0, 1), got {q}")
    t = _impl.quantile(p.a, p.b, q)
    if t != t:  # NaN: the kernel never evaluated the CDF
        raise ConvergenceError(f"quantile search failed for {p}, q={q}")
    residual = abs(_impl.betainc(p.a, p.b, t) - q)
    if residual > QUANTILE_RESIDUAL_TOL:
        raise ConvergenceError(
            f"quantile residual {residual:.3e} exceeds "
            f"{QUANTILE_RESIDUAL_TOL:.0e} for {p}, q={q}"
        )
    return t
