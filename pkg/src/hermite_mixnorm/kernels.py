"""Kernels of Hermite and Laguerre operators.

Every kernel here that acts on R^n has the form K(x, y) = K0(|x-y|, |x+y|).
The module-wide slot order is K0(|x - y|, |x + y|): the first argument is
the chord length sqrt(q_-), the second the anti-chord sqrt(q_+), where
q_(+/-) = r^2 + s^2 +/- 2 r s u.

The Hermite heat kernel is normalized for L^2-orthonormal Hermite
functions: K_t(x, y) = (2 pi sinh 2t)^{-n/2} exp(...).
"""

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .quadrature import gauss_jacobi
from .specfun import (BESSEL_SERIES_MAX_Z, bessel_I_ratio_form, bessel_I_scaled,
                      hermite_functions_1d, laguerre_functions, ultraspherical_all)


def _sq(x):
    return np.sum(np.asarray(x, dtype=float) ** 2, axis=-1)


def _dot(x, y):
    return np.sum(np.asarray(x) * np.asarray(y), axis=-1)


def mehler_kernel(t, x, y, form="A"):
    """Heat kernel of e^{-tH} at points x, y of shape (..., n).

    form "A": (2 pi sinh 2t)^{-n/2} exp(-coth(2t)(|x|^2+|y|^2)/2 + csch(2t) x.y)
    form "B": the factorized (2 pi sinh 2t)^{-n/2} exp(-coth(t)|x-y|^2/4)
              exp(-tanh(t)|x+y|^2/4)
    """
    if t <= 0:
        raise ValueError("t must be positive")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = x.shape[-1]
    pre = (2 * math.pi * math.sinh(2 * t)) ** (-n / 2.0)
    if form == "A":
        expo = -0.5 / math.tanh(2 * t) * (_sq(x) + _sq(y)) + _dot(x, y) / math.sinh(2 * t)
    elif form == "B":
        expo = -0.25 / math.tanh(t) * _sq(x - y) - 0.25 * math.tanh(t) * _sq(x + y)
    else:
        raise ValueError("form must be 'A' or 'B'")
    return pre * np.exp(expo)


def mehler_kernel_dt(t, x, y):
    """Exact time derivative d/dt K_t(x, y) of the heat kernel."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = x.shape[-1]
    coth2, csch2 = 1.0 / math.tanh(2 * t), 1.0 / math.sinh(2 * t)
    log_rate = (-n * coth2 + csch2 ** 2 * (_sq(x) + _sq(y))
                - 2 * csch2 * coth2 * _dot(x, y))
    return mehler_kernel(t, x, y) * log_rate


def mehler_generating(w, x, y):
    """sum_k w^k Phi_k(x, y) for complex |w| < 1 (Mehler's formula)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = x.shape[-1]
    w = np.asarray(w, dtype=complex)
    one_m = 1.0 - w * w
    expo = (-0.5 * (1.0 + w * w) / one_m * (_sq(x) + _sq(y))[..., None]
            + 2.0 * w / one_m * _dot(x, y)[..., None])
    return math.pi ** (-n / 2.0) * one_m ** (-n / 2.0) * np.exp(expo)


@dataclass(frozen=True)
class KernelK0:
    """A kernel K(x, y) = K0(|x - y|, |x + y|) on R^n.

    ``exponential``, when set, maps (r^2 + s^2, rs) to (log A, z) with
    K0 = A e^{z u} along the Jacobi variable u; component_kernel then
    avoids cancellation at high degree.
    """
    evaluator: object
    n: int
    descriptor: dict = field(default_factory=dict)
    exponential: object = None

    def __call__(self, u, v):
        return self.evaluator(np.asarray(u, dtype=float), np.asarray(v, dtype=float))

    def at_points(self, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        return self(np.sqrt(_sq(x - y)), np.sqrt(_sq(x + y)))

    def absolute(self):
        return KernelK0(lambda u, v: np.abs(self.evaluator(u, v)), self.n,
                        dict(self.descriptor, absolute=True), self.exponential)


def heat_K0(t, n):
    if t <= 0:
        raise ValueError("t must be positive")
    pre = (2 * math.pi * math.sinh(2 * t)) ** (-n / 2.0)
    a, b = 0.25 / math.tanh(t), 0.25 * math.tanh(t)

    def ev(u, v):
        return pre * np.exp(-a * u * u - b * v * v)

    def expo(ss, rs):
        return math.log(pre) - (a + b) * ss, 2 * (a - b) * rs
    return KernelK0(ev, n, {"kernel": "heat", "t": t}, expo)


def _canonical_pair(u, v, n):
    """Points x, y in R^n with |x - y| = u and |x + y| = v (|x| = |y|)."""
    sq = 0.25 * (u * u + v * v)            # |x|^2 = |y|^2
    dot = 0.25 * (v * v - u * u)           # x . y
    a = np.sqrt(sq)
    with np.errstate(invalid="ignore", divide="ignore"):
        c = np.where(sq > 0, dot / np.where(sq > 0, sq, 1.0), 1.0)
    c = np.clip(c, -1.0, 1.0)
    s = np.sqrt(1.0 - c * c)
    x = np.zeros(u.shape + (n,))
    y = np.zeros(u.shape + (n,))
    x[..., 0] = a
    y[..., 0] = a * c
    y[..., 1] = a * s
    return x, y


def projection_kernels(kmax, x, y):
    """Phi_0..Phi_kmax at (x, y) by direct summation over multi-indices.

    The multi-index sum factorizes over coordinates, so level sums are a
    discrete convolution of the 1-D products h_j(x_i) h_j(y_i).
    Returns shape (kmax + 1,) + broadcast batch shape.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    x, y = np.broadcast_arrays(x, y)
    n = x.shape[-1]
    levels = None
    for i in range(n):
        p = hermite_functions_1d(kmax, x[..., i]) * hermite_functions_1d(kmax, y[..., i])
        if levels is None:
            levels = p
            continue
        new = np.zeros_like(levels)
        for a in range(kmax + 1):
            new[a:] += levels[a] * p[:kmax + 1 - a]
        levels = new
    return levels


def projection_kernel(k, x, y, method="contour", radius=0.5, n_theta=256):
    """Hermite projection kernel Phi_k(x, y) = sum_{|alpha| = k} Phi_a(x) Phi_a(y).

    "direct" sums over multi-indices; "contour" extracts the k-th Taylor
    coefficient of Mehler's generating function on the circle |w| = radius.
    """
    if method == "direct":
        return projection_kernels(k, x, y)[k]
    if method != "contour":
        raise ValueError("method must be 'contour' or 'direct'")
    if not 0 < radius < 1:
        raise ValueError("contour radius must lie in (0, 1)")
    theta = 2 * math.pi * np.arange(n_theta) / n_theta
    G = mehler_generating(radius * np.exp(1j * theta), x, y)
    coef = np.mean(G * np.exp(-1j * k * theta), axis=-1)
    return np.real(coef) / radius ** k


def riesz_coefficients(R, delta, n):
    """(1 - (2k+n)/R)_+^delta for all levels with a nonzero value."""
    kmax = int(math.floor((R - n) / 2.0))
    if kmax < 0:
        return np.zeros(0)
    k = np.arange(kmax + 1)
    base = np.clip(1.0 - (2 * k + n) / R, 0.0, None)
    coef = base ** delta if delta > 0 else (base > 0).astype(float)
    return coef


def bochner_riesz_kernel(R, delta, x, y):
    """s_R^delta(x, y) = sum_k (1 - (2k+n)/R)_+^delta Phi_k(x, y)."""
    x = np.asarray(x, dtype=float)
    n = x.shape[-1]
    coef = riesz_coefficients(R, delta, n)
    if len(coef) == 0 or not np.any(coef):
        return np.zeros(np.broadcast_shapes(x.shape, np.shape(y))[:-1])
    Phi = projection_kernels(len(coef) - 1, x, y)
    return np.tensordot(coef, Phi, axes=(0, 0))


def bochner_riesz_K0(R, delta, n):
    def ev(u, v):
        x, y = _canonical_pair(u, v, n)
        return bochner_riesz_kernel(R, delta, x, y)
    return KernelK0(ev, n, {"kernel": "bochner-riesz", "R": R, "delta": delta})


def laguerre_kernel(t, alpha, r, s):
    """K_t^alpha(r, s) = csch(2t) e^{-coth(2t)(r^2+s^2)/2} (rs)^{-alpha} I_alpha(rs csch 2t).

    Small Bessel arguments go through the series for (rs)^{-alpha} I_alpha,
    which is regular at rs = 0; large ones use e^{-z} I_alpha(z) and fold
    the exponentials into -coth(2t)(r-s)^2/2 - tanh(t) r s.
    """
    if t <= 0:
        raise ValueError("t must be positive")
    if alpha <= -1:
        raise ValueError("Laguerre type must exceed -1")
    r, s = np.broadcast_arrays(np.asarray(r, dtype=float), np.asarray(s, dtype=float))
    sh, coth2 = math.sinh(2 * t), 1.0 / math.tanh(2 * t)
    csch = 1.0 / sh
    rs = r * s
    z = rs * csch
    out = np.empty(r.shape)
    small = z <= BESSEL_SERIES_MAX_Z
    if small.any():
        out[small] = (csch * np.exp(-0.5 * coth2 * (r[small] ** 2 + s[small] ** 2))
                      * bessel_I_ratio_form(alpha, rs[small], csch))
    big = ~small
    if big.any():
        rb, sb, zb = r[big], s[big], z[big]
        expo = -0.5 * coth2 * (rb - sb) ** 2 - math.tanh(t) * rb * sb
        out[big] = csch * np.exp(expo - alpha * np.log(rb * sb)) * bessel_I_scaled(alpha, zb)
    return out if out.ndim else float(out)


def laguerre_kernel_dt(t, alpha, r, s):
    """Exact d/dt K_t^alpha(r, s), using I_a'(z) = I_{a+1}(z) + (a/z) I_a(z)."""
    r, s = np.broadcast_arrays(np.asarray(r, dtype=float), np.asarray(s, dtype=float))
    coth2, csch = 1.0 / math.tanh(2 * t), 1.0 / math.sinh(2 * t)
    z = r * s * csch
    K = laguerre_kernel(t, alpha, r, s)
    # d/dt log K = -2 coth2 + csch^2 (r^2+s^2) + (I'/I)(z) * dz/dt, dz/dt = -2 coth2 z
    with np.errstate(invalid="ignore", divide="ignore"):
        ratio = np.where(z > 0, bessel_I_scaled(alpha + 1, z)
                         / np.where(z > 0, bessel_I_scaled(alpha, z), 1.0), 0.0)
    # z * I'/I = z I_{a+1}/I_a + a
    dlog = -2 * coth2 + csch ** 2 * (r * r + s * s) - 2 * coth2 * (z * ratio + alpha)
    return K * dlog


def laguerre_kernel_spectral(t, alpha, r, s, kmax=64, deriv=0):
    """Truncated eigen-expansion sum_k (-lam_k)^deriv e^{-lam_k t} psi_k(r) psi_k(s),
    lam_k = 4k + 2 alpha + 2."""
    r, s = np.broadcast_arrays(np.asarray(r, dtype=float), np.asarray(s, dtype=float))
    lam = 4 * np.arange(kmax + 1) + 2 * alpha + 2
    pr = laguerre_functions(kmax, alpha, r)
    ps = laguerre_functions(kmax, alpha, s)
    c = (-lam) ** deriv * np.exp(-lam * t)
    return np.tensordot(c, pr * ps, axes=(0, 0))


def component_kernel(K0, m, n, r, s, rule=None, N=160):
    """int_{-1}^{1} K0(q_-^{1/2}, q_+^{1/2}) P_m^{n/2-1}(u) (1-u^2)^{(n-3)/2} du.

    r and s broadcast; the result has their broadcast shape. ``m`` may be
    an int or a sequence (then a leading axis over m is added).
    """
    if rule is None:
        rule = gauss_jacobi(N, n)
    r, s = np.broadcast_arrays(np.asarray(r, dtype=float), np.asarray(s, dtype=float))
    u = rule.nodes
    rs = (r * s)[..., None]
    ss = (r * r + s * s)[..., None]
    qm = np.clip(ss - 2 * rs * u, 0.0, None)
    qp = np.clip(ss + 2 * rs * u, 0.0, None)
    vals = K0(np.sqrt(qm), np.sqrt(qp)) * rule.weights
    ms = np.atleast_1d(m)
    P = ultraspherical_all(int(ms.max()), n, u)[ms]          # (len(ms), Nu)
    out = np.tensordot(P, vals, axes=([1], [-1]))
    if K0.exponential is not None:
        log_amp, z = K0.exponential(ss[..., 0], rs[..., 0])
        log_amp, z = np.broadcast_arrays(log_amp, z)
        for i, mi in enumerate(ms):
            # the Taylor part of degree < m is orthogonal to P_m; summing it
            # would cancel down to ~ z^m / m!
            low = np.abs(z) < 2 * mi
            if mi > 0 and low.any():
                block = out[i, ...]
                block[low] = np.exp(log_amp[low]) * _remainder_moments(z[low], int(mi),
                                                                      rule, P[i])
    return out[0] if np.ndim(m) == 0 else out


def _remainder_moments(z, m, rule, Pm):
    """sum_u w_u P_m(u) (e^{zu} - Taylor_{<m}(zu)) = sum_{j>=m} z^j / j! mu_j with
    Jacobi-rule moments mu_j = sum_u w_u u^j P_m(u): the same quadrature, with the
    node sum done once for all z."""
    u = rule.nodes
    wp = rule.weights * Pm
    uj = u ** m
    term = np.exp(m * np.log(np.abs(z) + 1e-300) - math.lgamma(m + 1.0)) * np.sign(z) ** m
    total = term * float(wp @ uj)
    j, zmax = m, float(np.max(np.abs(z)))
    while True:
        j += 1
        uj = uj * u
        term = term * z / j
        inc = term * float(wp @ uj)
        total = total + inc
        if j > m + 2 * zmax + 10 and np.all(np.abs(term) <= 1e-18 * np.abs(total)):
            return total


@dataclass(frozen=True)
class ComponentKernelTable:
    m: int
    r: np.ndarray
    s: np.ndarray
    values: np.ndarray          # (len(r), len(s))
    provenance: dict = field(default_factory=dict)

    def to_csv(self, path):
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["m", "r", "s", "value"])
            for i, ri in enumerate(self.r):
                for j, sj in enumerate(self.s):
                    w.writerow([self.m, repr(float(ri)), repr(float(sj)),
                                repr(float(self.values[i, j]))])


def component_kernel_table(K0, m, r, s=None, rule=None, N=160):
    s = r if s is None else s
    if rule is None:
        rule = gauss_jacobi(N, K0.n)
    vals = component_kernel(K0, m, K0.n, np.asarray(r)[:, None], np.asarray(s)[None, :], rule)
    prov = dict(K0.descriptor, jacobi_nodes=rule.order, jacobi_weight=rule.declared_weight)
    return ComponentKernelTable(m, np.asarray(r), np.asarray(s), vals, prov)
