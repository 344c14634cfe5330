# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scalar kernels for the regularized incomplete beta function.

Same algorithms as ``condprob._betakernel_py`` (power series plus two
continued-fraction expansions with the argument swap, and a bisection-
safeguarded Newton inverse); see that module for the commentary.  This is
the hot path: quantile inversion dominates table generation, rule scoring
and the property sweeps, and each inversion costs a dozen or more CDF
evaluations.
"""

from libc.math cimport exp, fabs, lgamma, log, log1p, pow, tgamma, NAN, INFINITY

cdef double MACHEP = 1.11022302462515654042e-16
cdef double MAXLOG = 709.782712893383996843
cdef double MINLOG = -708.396418532264106224
cdef double MAXGAM = 171.624376956302725
cdef double BIG = 4.503599627370496e15
cdef double BIGINV = 2.22044604925031308085e-16

cdef int CF_MAXITER = 400


cdef double _pseries(double a, double b, double x) noexcept nogil:
    cdef double ai, u, v, t1, t, n, s, z
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
        t = tgamma(a + b) / (tgamma(a) * tgamma(b))
        s = s * t * pow(x, a)
    else:
        t = lgamma(a + b) - lgamma(a) - lgamma(b) + u + log(s)
        s = 0.0 if t < MINLOG else exp(t)
    return s


cdef double _incbcf(double a, double b, double x) noexcept nogil:
    cdef double k1, k2, k3, k4, k5, k6, k7, k8
    cdef double pkm2, qkm2, pkm1, qkm1, pk, qk, xk, r, t, ans, thresh
    cdef int n

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

    for n in range(CF_MAXITER):
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


cdef double _incbd(double a, double b, double x) noexcept nogil:
    cdef double k1, k2, k3, k4, k5, k6, k7, k8
    cdef double pkm2, qkm2, pkm1, qkm1, pk, qk, xk, r, t, z, ans, thresh
    cdef int n

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

    for n in range(CF_MAXITER):
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


cdef double _incbet(double aa, double bb, double xx) noexcept nogil:
    cdef double a, b, x, xc, w, y, t
    cdef bint flag

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
                t *= tgamma(a + b) / (tgamma(a) * tgamma(b))
            else:
                y += t + lgamma(a + b) - lgamma(a) - lgamma(b) + log(w / a)
                t = 0.0 if y < MINLOG else exp(y)

    if flag:
        t = 1.0 - MACHEP if t <= MACHEP else 1.0 - t
    return t


cdef double _quantile(double a, double b, double q) noexcept nogil:
    cdef double lnbeta, lo, hi, t, t_next, f, err, aerr, logpdf, pdf, cand
    cdef double best_t, best_err
    cdef int i

    lnbeta = lgamma(a) + lgamma(b) - lgamma(a + b)
    lo = 0.0
    hi = 1.0
    t = a / (a + b)
    if not (0.0 < t < 1.0):
        t = 0.5

    best_t = NAN
    best_err = INFINITY
    for i in range(300):
        f = _incbet(a, b, t)
        err = f - q
        aerr = fabs(err)
        if aerr < best_err:
            best_err = aerr
            best_t = t
        if aerr <= 1e-13:
            break
        if err > 0.0:
            hi = t
        else:
            lo = t

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
            if t_next <= lo or t_next >= hi:
                break
        t = t_next
    return best_t


def log_beta(double a, double b):
    """ln B(a, b) via the log-gamma identity."""
    return lgamma(a) + lgamma(b) - lgamma(a + b)


def betainc(double a, double b, double x):
    """Regularized incomplete beta function I_x(a, b)."""
    return _incbet(a, b, x)


def quantile(double a, double b, double q):
    """Best t found for I_t(a, b) = q; caller checks the residual."""
    return _quantile(a, b, q)
