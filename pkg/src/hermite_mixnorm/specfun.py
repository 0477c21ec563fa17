"""Special functions: Hermite and Laguerre functions, ultraspherical
polynomials, modified Bessel functions and gamma ratios.

Hermite and Laguerre functions are produced by normalized three-term
recurrences with the Gaussian factor folded into the starting value, so
no polynomial is ever formed on its own and nothing overflows for degrees
in the hundreds.
"""

import math

import numpy as np
from scipy.special import gammaln, ive

BESSEL_SERIES_MAX_Z = 30.0
# Largest argument for the scaled series: beyond it the leading term
# e^{-z}(z/2)^a underflows and the 500-term cap no longer covers the peak.
BESSEL_SCALED_SERIES_MAX_Z = 600.0
BESSEL_REL_STOP = 1e-17
BESSEL_MAX_TERMS = 500
# Hankel's large-argument expansion takes over here (scipy's ive returns
# nan for arguments near 1e9 and beyond).
BESSEL_ASYMPTOTIC_Z = 1e6


def log_gamma_ratio(a, b):
    """log(Gamma(a) / Gamma(b)) for a, b > 0."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if np.any(a <= 0) or np.any(b <= 0):
        raise ValueError("log_gamma_ratio needs positive arguments")
    out = gammaln(a) - gammaln(b)
    return float(out) if out.ndim == 0 else out


def hermite_functions_1d(kmax, x):
    """All normalized Hermite functions h_0..h_kmax at x.

    Returns an array of shape (kmax + 1,) + x.shape.
    """
    x = np.asarray(x, dtype=float)
    out = np.empty((kmax + 1,) + x.shape)
    out[0] = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if kmax >= 1:
        out[1] = math.sqrt(2.0) * x * out[0]
    for k in range(1, kmax):
        out[k + 1] = (math.sqrt(2.0 / (k + 1)) * x * out[k]
                      - math.sqrt(k / (k + 1.0)) * out[k - 1])
    return out


def hermite_fn_1d(k, x):
    """L^2(R)-orthonormal Hermite function h_k(x)."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    out = hermite_functions_1d(k, x)[k]
    return float(out) if np.ndim(out) == 0 else out


def laguerre_functions(kmax, alpha, r, log_scale=None):
    """psi_0^alpha .. psi_kmax^alpha at r, shape (kmax + 1,) + r.shape.

    psi_k^alpha(r) = (2 k! / Gamma(k+alpha+1))^{1/2} L_k^alpha(r^2) e^{-r^2/2},
    orthonormal in L^2(R+, r^{2 alpha + 1} dr). ``log_scale`` (broadcast
    against r) multiplies every output by exp(log_scale) without forming
    the factor separately, e.g. m*log(r) for the functions r^m psi_k.
    """
    if alpha <= -1:
        raise ValueError("Laguerre type must exceed -1")
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ValueError("radial argument must be nonnegative")
    x = r * r
    out = np.empty((kmax + 1,) + r.shape)
    start = -0.5 * x - 0.5 * gammaln(alpha + 1.0)
    if log_scale is not None:
        start = start + log_scale
    out[0] = np.sqrt(2.0) * np.exp(start)
    if kmax >= 1:
        out[1] = (alpha + 1.0 - x) * out[0] / math.sqrt(alpha + 1.0)
    for k in range(1, kmax):
        out[k + 1] = ((2 * k + alpha + 1.0 - x) * out[k]
                      - math.sqrt(k * (k + alpha)) * out[k - 1]) \
            / math.sqrt((k + 1.0) * (k + 1.0 + alpha))
    return out


def laguerre_psi(k, alpha, r):
    """Normalized Laguerre function psi_k^alpha(r)."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    out = laguerre_functions(k, alpha, r)[k]
    return float(out) if np.ndim(out) == 0 else out


def ultraspherical_all(mmax, n, u):
    """P_0 .. P_mmax of type n/2 - 1, normalized to P(1) = 1.

    The recurrence P_{k+1} = (2(k+lam) u P_k - k P_{k-1}) / (k + 2 lam)
    reduces to the Chebyshev recurrence at lam = 0 (n = 2).
    """
    if n < 2:
        raise ValueError("dimension must be at least 2")
    u = np.asarray(u, dtype=float)
    lam = n / 2.0 - 1.0
    out = np.empty((mmax + 1,) + u.shape)
    out[0] = 1.0
    if mmax >= 1:
        out[1] = u
    for k in range(1, mmax):
        out[k + 1] = (2 * (k + lam) * u * out[k] - k * out[k - 1]) / (k + 2 * lam)
    return out


def ultraspherical_P(m, n, u):
    """Normalized ultraspherical polynomial P_m^{n/2-1}(u), u in [-1, 1]."""
    u_arr = np.asarray(u, dtype=float)
    if np.any(np.abs(u_arr) > 1.0):
        raise ValueError("argument must lie in [-1, 1]")
    out = ultraspherical_all(m, n, u_arr)[m]
    return float(out) if np.ndim(out) == 0 else out


def ultraspherical_series(m, n):
    """P_m^{n/2-1} as a numpy Chebyshev series, built with the same
    recurrence as ultraspherical_all. The Chebyshev basis keeps the
    coefficients well conditioned, so derivatives stay accurate for large m."""
    lam = n / 2.0 - 1.0
    C = np.polynomial.Chebyshev
    prev, cur = C([1.0]), C([0.0, 1.0])
    if m == 0:
        return prev
    x = C([0.0, 1.0])
    for k in range(1, m):
        prev, cur = cur, (2 * (k + lam) * x * cur - k * prev) / (k + 2 * lam)
    return cur


def exp_remainder(m, x):
    """e^x - sum_{j<m} x^j/j!, summed from j = m on so small x loses nothing."""
    x = np.asarray(x, dtype=float)
    term = np.exp(m * np.log(np.abs(x) + 1e-300) - math.lgamma(m + 1.0)) * np.sign(x) ** m
    total = term.copy()
    j = m
    while True:
        j += 1
        term = term * x / j
        total = total + term
        if j > m + 2 * np.max(np.abs(x)) + 10 and np.all(np.abs(term) <= 1e-18 * np.abs(total)):
            return total


def _hankel_scaled(alpha, z):
    """e^{-z} I_alpha(z) ~ (2 pi z)^{-1/2} sum_j (-1)^j a_j(alpha) / z^j, z >> alpha^2."""
    mu = 4.0 * alpha * alpha
    term = np.ones(z.shape)
    total = term.copy()
    for j in range(1, 30):
        term = -term * (mu - (2 * j - 1) ** 2) / (8.0 * j * z)
        total = total + term
        if np.all(np.abs(term) <= 1e-17 * np.abs(total)):
            break
    return total / np.sqrt(2 * math.pi * z)


def _bessel_series(alpha, z, log_prefactor):
    """Sum_j (z/2)^{2j} / (j! Gamma(j+alpha+1)) times exp(log_prefactor).

    Terms are generated by their ratio; an entry stops once past the peak
    of the terms with a new term below BESSEL_REL_STOP times its partial
    sum (cap BESSEL_MAX_TERMS). Finished entries are dropped every few
    steps so mixed arguments cost what the largest of them needs.
    """
    z = np.asarray(z, dtype=float)
    q = 0.25 * z.ravel() * z.ravel()
    term = np.broadcast_to(np.exp(log_prefactor - gammaln(alpha + 1.0)), z.shape).ravel().copy()
    total = term.copy()
    out = total.copy()
    live = np.arange(q.size)
    for j in range(BESSEL_MAX_TERMS - 1):
        term = term * q / ((j + 1.0) * (j + 1.0 + alpha))
        total = total + term
        if j % 8 == 7 or j == BESSEL_MAX_TERMS - 2:
            # terms grow until j ~ z/2, so only test after the peak
            past_peak = (j + 1.0) * (j + 1.0 + alpha) > q
            done = past_peak & (term <= BESSEL_REL_STOP * total)
            out[live[done]] = total[done]
            keep = ~done
            live, term, total, q = live[keep], term[keep], total[keep], q[keep]
            if live.size == 0:
                break
    out[live] = total
    return out.reshape(z.shape)


def bessel_I_scaled(alpha, z):
    """e^{-z} I_alpha(z) for z >= 0, alpha > -1 (array friendly)."""
    if alpha <= -1:
        raise ValueError("order must exceed -1")
    z = np.asarray(z, dtype=float)
    if np.any(z < 0):
        raise ValueError("argument must be nonnegative")
    zf = np.atleast_1d(z)
    out = np.zeros(zf.shape)
    small = zf <= BESSEL_SERIES_MAX_Z
    mid = (zf > BESSEL_SERIES_MAX_Z) & (zf <= BESSEL_SCALED_SERIES_MAX_Z)
    big = zf > BESSEL_SCALED_SERIES_MAX_Z
    huge = big & (zf > max(BESSEL_ASYMPTOTIC_Z, 50.0 * alpha * alpha))
    big &= ~huge
    if huge.any():
        out[huge] = _hankel_scaled(alpha, zf[huge])
    if small.any():
        zs = zf[small]
        out[small] = _ascending_series(alpha, zs) * np.exp(-zs)
    if mid.any():
        zm = zf[mid]
        out[mid] = _bessel_series(alpha, zm, alpha * np.log(0.5 * zm) - zm)
    if big.any():
        out[big] = ive(alpha, zf[big])
    return out.reshape(z.shape) if z.ndim else float(out[0])


def _ascending_series(alpha, z):
    with np.errstate(divide="ignore"):
        logz = np.where(z > 0, np.log(0.5 * z), -np.inf)
    if alpha == 0:
        pre = np.zeros(z.shape)
    else:
        pre = alpha * logz
    return _bessel_series(alpha, z, pre)


def bessel_I(alpha, z):
    """Modified Bessel function I_alpha(z), z >= 0, alpha > -1.

    Ascending series for z <= 30, scaled series e^{-z} I_alpha(z) beyond.
    """
    if alpha <= -1:
        raise ValueError("order must exceed -1")
    z = np.asarray(z, dtype=float)
    if np.any(z < 0):
        raise ValueError("argument must be nonnegative")
    zf = np.atleast_1d(z)
    out = np.empty(zf.shape)
    small = zf <= BESSEL_SERIES_MAX_Z
    if small.any():
        out[small] = _ascending_series(alpha, zf[small])
    if (~small).any():
        zb = zf[~small]
        out[~small] = bessel_I_scaled(alpha, zb) * np.exp(zb)
    return out.reshape(z.shape) if z.ndim else float(out[0])


def bessel_I_ratio_form(alpha, rs, c):
    """(rs)^{-alpha} I_alpha(c rs) with the removable singularity at rs = 0.

    Equals (c/2)^alpha sum_j (c rs / 2)^{2j} / (j! Gamma(j+alpha+1)).
    Only used for moderate arguments (c rs <= 30).
    """
    rs = np.asarray(rs, dtype=float)
    z = c * rs
    pre = np.full(z.shape, alpha * math.log(0.5 * c))
    return _bessel_series(alpha, z, pre)
