"""Pure-Python scalar kernels for the regularized incomplete beta function.

This is the fallback backend; ``condprob._betakernel`` is the compiled
(Cython) implementation of the same three routines and is preferred at
import time when available.  Both backends expose:

    log_beta(a, b)      -- ln B(a, b)
    betainc(a, b, x)    -- I_x(a, b), the Beta(a, b) CDF at x
    quantile(a, b, q)   -- best t found with I_t(a, b) = q (no validation,
                           no convergence guarantee: callers check the
                           residual; see condprob.betacore.beta_quantile)

The incomplete beta evaluation follows the classic double-precision scheme:
a power series when b*x is small, otherwise one of two continued-fraction
expansions chosen after the argument swap (a,b,x) -> (b,a,1-x) that keeps
x below the distribution mean, where the fractions converge fast.

Inputs are assumed validated (a > 0, b > 0, 0 <= x <= 1); that is the
wrapper's job.
"""

from math import exp, fabs, gamma, lgamma, log, log1p, nan

MACHEP = 1.11022302462515654042e-16  # 2**-53
MAXLOG = 709.782712893383996843
MINLOG = -708.396418532264106224
MAXGAM = 171.624376956302725  # largest x with gamma(x) finite in a double
BIG = 4.503599627370496e15
BIGINV = 2.22044604925031308085e-16

_CF_MAXITER = 400


def log_beta(a, b):
    """ln B(a, b) via the log-gamma identity."""
    return lgamma(a) + lgamma(b) - lgamma(a + b)


def _pseries(a, b, x):
    # Power series for I_x(a, b); use when b*x is small and x not near 1.
    ai = 1.0 / a
    u = (1.0 - b) * x
    v = u / (a + 1.0)
    t1 = v
    t = u
    n = 2.0
    s = 0.0
    z = MACHEP * ai
    while fabs(v) > z:
        u = (n - b) * x / n
        t *= u
        v = t / (a + n)
        s += v
        n += 1.0
    s += t1
    s += ai

    u = a * log(x)
    if (a + b) < MAXGAM and fabs(u) < MAXLOG:
        t = gamma(a + b) / (gamma(a) * gamma(b))
        s = s * t * pow(x, a)
    else:
        t = lgamma(a + b) - lgamma(a) - lgamma(b) + u + log(s)
        s = 0.0 if t < MINLOG else exp(t)
    return s


def _incbcf(a, b, x):
    # Continued fraction #1 for the incomplete beta integral.
    k1 = a
    k2 = a + b
    k3 = a
    k4 = a + 1.0
    k5 = 1.0
    k6 = b - 1.0
    k7 = a + 1.0
    k8 = a + 2.0

    pkm2 = 0.0
    qkm2 = 1.0
    pkm1 = 1.0
    qkm1 = 1.0
    ans = 1.0
    r = 1.0
    thresh = 3.0 * MACHEP

    for _ in range(_CF_MAXITER):
        xk = -(x * k1 * k2) / (k3 * k4)
        pk = pkm1 + pkm2 * xk
        qk = qkm1 + qkm2 * xk
        pkm2 = pkm1
        pkm1 = pk
        qkm2 = qkm1
        qkm1 = qk

        xk = (x * k5 * k6) / (k7 * k8)
        pk = pkm1 + pkm2 * xk
        qk = qkm1 + qkm2 * xk
        pkm2 = pkm1
        pkm1 = pk
        qkm2 = qkm1
        qkm1 = qk

        if qk != 0.0:
            r = pk / qk
        if r != 0.0:
            t = fabs((ans - r) / r)
            ans = r
        else:
            t = 1.0
        if t < thresh:
            break

        k1 += 1.0
        k2 += 1.0
        k3 += 2.0
        k4 += 2.0
        k5 += 1.0
        k6 -= 1.0
        k7 += 2.0
        k8 += 2.0

        if fabs(qk) + fabs(pk) > BIG:
            pkm2 *= BIGINV
            pkm1 *= BIGINV
            qkm2 *= BIGINV
            qkm1 *= BIGINV
        if fabs(qk) < BIGINV or fabs(pk) < BIGINV:
            pkm2 *= BIG
            pkm1 *= BIG
            qkm2 *= BIG
            qkm1 *= BIG
    return ans


def _incbd(a, b, x):
    # Continued fraction #2 for the incomplete beta integral.
    k1 = a
    k2 = b - 1.0
    k3 = a
    k4 = a + 1.0
    k5 = 1.0
    k6 = a + b
    k7 = a + 1.0
    k8 = a + 2.0

    pkm2 = 0.0
    qkm2 = 1.0
    pkm1 = 1.0
    qkm1 = 1.0
    z = x / (1.0 - x)
    ans = 1.0
    r = 1.0
    thresh = 3.0 * MACHEP

    for _ in range(_CF_MAXITER):
        xk = -(z * k1 * k2) / (k3 * k4)
        pk = pkm1 + pkm2 * xk
        qk = qkm1 + qkm2 * xk
        pkm2 = pkm1
        pkm1 = pk
        qkm2 = qkm1
        qkm1 = qk

        xk = (z * k5 * k6) / (k7 * k8)
        pk = pkm1 + pkm2 * xk
        qk = qkm1 + qkm2 * xk
        pkm2 = pkm1
        pkm1 = pk
        qkm2 = qkm1
        qkm1 = qk

        if qk != 0.0:
            r = pk / qk
        if r != 0.0:
            t = fabs((ans - r) / r)
            ans = r
        else:
            t = 1.0
        if t < thresh:
            break

        k1 += 1.0
        k2 -= 1.0
        k3 += 2.0
        k4 += 2.0
        k5 += 1.0
        k6 += 1.0
        k7 += 2.0
        k8 += 2.0

        if fabs(qk) + fabs(pk) > BIG:
            pkm2 *= BIGINV
            pkm1 *= BIGINV
            qkm2 *= BIGINV
            qkm1 *= BIGINV
        if fabs(qk) < BIGINV or fabs(pk) < BIGINV:
            pkm2 *= BIG
            pkm1 *= BIG
            qkm2 *= BIG
            qkm1 *= BIG
    return ans


def betainc(aa, bb, xx):
    """Regularized incomplete beta function I_x(a, b)."""
    if xx <= 0.0:
        return 0.0
    if xx >= 1.0:
        return 1.0

    flag = False
    if bb * xx <= 1.0 and xx <= 0.95:
        t = _pseries(aa, bb, xx)
    else:
        w = 1.0 - xx
        if xx > aa / (aa + bb):
            flag = True
            a = bb
            b = aa
            xc = xx
            x = w
        else:
            a = aa
            b = bb
            xc = w
            x = xx

        if flag and b * x <= 1.0 and x <= 0.95:
            t = _pseries(a, b, x)
        else:
            y = x * (a + b - 2.0) - (a - 1.0)
            if y < 0.0:
                w = _incbcf(a, b, x)
            else:
                w = _incbd(a, b, x) / xc

            y = a * log(x)
            t = b * log(xc)
            if (a + b) < MAXGAM and fabs(y) < MAXLOG and fabs(t) < MAXLOG:
                t = pow(xc, b) * pow(x, a)
                t /= a
                t *= w
                t *= gamma(a + b) / (gamma(a) * gamma(b))
            else:
                y += t + lgamma(a + b) - lgamma(a) - lgamma(b) + log(w / a)
                t = 0.0 if y < MINLOG else exp(y)

    if flag:
        t = 1.0 - MACHEP if t <= MACHEP else 1.0 - t
    return t


def quantile(a, b, q):
    """Invert I_t(a, b) = q by Newton steps safeguarded with bisection.

    The bracket [lo, hi] always satisfies I_lo < q < I_hi; a Newton step is
    taken only when it lands strictly inside the bracket, otherwise the
    bracket is halved.  Returns the t with the smallest |I_t - q| seen,
    or NaN if the CDF could never be evaluated (cannot happen for valid
    parameters).
    """
    lnbeta = lgamma(a) + lgamma(b) - lgamma(a + b)
    lo = 0.0
    hi = 1.0
    t = a / (a + b)
    if not 0.0 < t < 1.0:
        t = 0.5

    # Relative stopping target: in the far tails the CDF value itself is
    # tiny, and an absolute criterion would accept wildly wrong t (any
    # point with I_t below the threshold).  The evaluation is relatively
    # accurate there, so 1e-13 relative is reachable.
    target = 1e-13 * q

    best_t = nan
    best_err = float("inf")
    for _ in range(300):
        f = betainc(a, b, t)
        err = f - q
        aerr = fabs(err)
        if aerr < best_err:
            best_err = aerr
            best_t = t
        if aerr <= target:
            break
        if err > 0.0:
            hi = t
        else:
            lo = t
        if hi - lo <= lo * MACHEP:  # bracket narrowed to one ulp
            break

        t_next = -1.0
        logpdf = (a - 1.0) * log(t) + (b - 1.0) * log1p(-t) - lnbeta
        if logpdf > -700.0:
            pdf = exp(logpdf)
            if pdf > 0.0:
                cand = t - err / pdf
                if lo < cand < hi:
                    t_next = cand
        if t_next < 0.0:
            t_next = 0.5 * (lo + hi)
            if t_next <= lo or t_next >= hi:  # bracket exhausted
                break
        t = t_next
    return best_t
