"""Numerical checks of the kernel estimates for the heat components.

The degree-m heat component acts on radial profiles by
K_m(r, s; t) = (rs)^m K_t^{n/2+m-1}(r, s) against s^{n-1} ds. Its
temporal square function is compared with the doubling measure of the
ball B(r, |r-s|) in (R+, r^{n-1} dr), which is ~ |r-s| (r+s)^{n-1}.
"""

import numpy as np
from scipy.special import hyp2f1

from ..kernels import (laguerre_kernel, laguerre_kernel_dt, laguerre_kernel_spectral,
                       mehler_kernel_dt)
from ..quadrature import temporal_rule

CZ_MIN_GAP = 0.05
CZ_FD_STEP = 1e-4


def heat_component_kernel(t, m, n, r, s):
    return (r * s) ** m * laguerre_kernel(t, n / 2.0 + m - 1.0, r, s)


def heat_component_kernel_dt(t, m, n, r, s, k=1, method="closed", kmax=400):
    """d^k/dt^k K_m(r, s; t). "closed" (k = 1 only) uses the exact Bessel form,
    "spectral" the truncated Laguerre eigen-expansion."""
    alpha = n / 2.0 + m - 1.0
    if method == "closed":
        if k != 1:
            raise ValueError("the closed form is available for k = 1 only")
        return (r * s) ** m * laguerre_kernel_dt(t, alpha, r, s)
    if method == "spectral":
        return (r * s) ** m * laguerre_kernel_spectral(t, alpha, r, s, kmax=kmax, deriv=k)
    raise ValueError("method must be 'closed' or 'spectral'")


def cz_grid(lo=0.1, hi=6.0, N=30, min_gap=CZ_MIN_GAP, near=(0.05, 0.1, 0.2)):
    """Off-diagonal (r, s) pairs: a uniform grid plus pairs at fixed small gaps."""
    g = np.linspace(lo, hi, N)
    R, S = np.meshgrid(g, g, indexing="ij")
    r, s = R.ravel(), S.ravel()
    near_r, near_s = [], []
    for d in near:
        base = g[g + d <= hi]
        near_r += [base, base + d]
        near_s += [base + d, base]
    r = np.concatenate([r] + near_r)
    s = np.concatenate([s] + near_s)
    keep = np.abs(r - s) >= min_gap * (1 - 1e-9)
    return r[keep], s[keep]


def verify_cz_estimates(m_list, k=1, n=2, grid=None, N_t=12, h=CZ_FD_STEP,
                        method="closed"):
    """sup over the grid of
        (i)  (int |d_t^k K_m|^2 t^{2k-1} dt)^{1/2} |r-s| (r+s)^{n-1}
        (ii) (int |d_r d_t^k K_m|^2 t^{2k-1} dt)^{1/2} |r-s|^2 (r+s)^{n-1}
    for each m, with d_r by central differences of step h.
    """
    r, s = cz_grid() if grid is None else grid
    if np.any(np.abs(r - s) < CZ_MIN_GAP * (1 - 1e-9)):
        raise ValueError("grid must stay off the diagonal band")
    rule = temporal_rule(N_t, k, n)
    ball = np.abs(r - s) * (r + s) ** (n - 1)
    per_m = []
    for m in m_list:
        sq_i = np.zeros(len(r))
        sq_ii = np.zeros(len(r))
        for t, w in zip(rule.nodes, rule.weights):
            d0 = heat_component_kernel_dt(t, m, n, r, s, k, method)
            dp = heat_component_kernel_dt(t, m, n, r + h, s, k, method)
            dm = heat_component_kernel_dt(t, m, n, r - h, s, k, method)
            sq_i += w * d0 ** 2
            sq_ii += w * ((dp - dm) / (2 * h)) ** 2
        ri = np.sqrt(sq_i) * ball
        rii = np.sqrt(sq_ii) * ball * np.abs(r - s)
        per_m.append({"m": int(m), "sup_i": float(ri.max()), "sup_ii": float(rii.max()),
                      "argmax_i": [float(r[ri.argmax()]), float(s[ri.argmax()])],
                      "argmax_ii": [float(r[rii.argmax()]), float(s[rii.argmax()])]})
    return {"n": n, "k": k, "grid_points": int(len(r)), "temporal_rule": rule.declared_weight,
            "per_m": per_m,
            "sup_i": max(p["sup_i"] for p in per_m),
            "sup_ii": max(p["sup_ii"] for p in per_m)}


def uniformity_spread(report, m_min=4):
    """max/min of the per-m sups over m >= m_min, for bounds (i) and (ii)."""
    sel = [p for p in report["per_m"] if p["m"] >= m_min]
    si = [p["sup_i"] for p in sel]
    sii = [p["sup_ii"] for p in sel]
    return max(si) / min(si), max(sii) / min(sii)


def aux_integral(A, B, c, lam, panels=40, N=24):
    """int_0^1 (1-u)^{c-1/2} (A - Bu)^{-(c+lam+1/2)} du by Gauss-Legendre on
    panels graded geometrically toward u = 1."""
    edges = np.concatenate([[0.0], 2.0 ** -np.arange(panels, -1, -1.0)])
    x, w = np.polynomial.legendre.leggauss(N)
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        v = a + 0.5 * (b - a) * (x + 1.0)                 # v = 1 - u
        f = v ** (c - 0.5) * (A - B + B * v) ** (-(c + lam + 0.5))
        total += 0.5 * (b - a) * np.dot(w, f)
    return total


def aux_integral_closed_form(A, B, c, lam):
    """Same integral through (A-B)^{-e}/a 2F1(e, a; a+1; -B/(A-B)), a = c + 1/2."""
    a, e = c + 0.5, c + lam + 0.5
    return (A - B) ** (-e) / a * hyp2f1(e, a, a + 1.0, -B / (A - B))


def aux_integral_sweep(n_A=10, n_ratio=12, cs=(0.5, 1.0, 2.0), lams=(0.5, 1.0),
                       method="quadrature"):
    """sup of I / (A^{-(c+1/2)} (A-B)^{-lam}) over A in [1, 10], B/A in [0.1, 0.99]."""
    As = np.linspace(1.0, 10.0, n_A)
    qs = np.linspace(0.1, 0.99, n_ratio)
    worst, at = 0.0, None
    for c in cs:
        for lam in lams:
            for A in As:
                for q in qs:
                    B = q * A
                    if method == "quadrature":
                        I = aux_integral(A, B, c, lam)
                    else:
                        I = aux_integral_closed_form(A, B, c, lam)
                    ratio = I / (A ** (-(c + 0.5)) * (A - B) ** (-lam))
                    if ratio > worst:
                        worst, at = ratio, (float(A), float(B), c, lam)
    return {"sup_ratio": float(worst), "at": at, "grid": [n_A, n_ratio], "method": method}


def heat_dt_decay_check(n=2, samples=200, seed=0, N_t=16, scale=2.0):
    """sup over random pairs of (int |d_t K_t(x,y)|^2 t dt)^{1/2} |x-y|^n."""
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((samples, n)) * scale
    y = rng.standard_normal((samples, n)) * scale
    rule = temporal_rule(N_t, 1, n)
    sq = np.zeros(samples)
    for t, w in zip(rule.nodes, rule.weights):
        sq += w * mehler_kernel_dt(t, x, y) ** 2
    ratio = np.sqrt(sq) * np.linalg.norm(x - y, axis=1) ** n
    return {"n": n, "samples": samples, "sup_ratio": float(ratio.max()),
            "min_ratio": float(ratio.min())}


__all__ = ["heat_component_kernel", "heat_component_kernel_dt", "cz_grid",
           "verify_cz_estimates", "uniformity_spread", "aux_integral",
           "aux_integral_closed_form", "aux_integral_sweep", "heat_dt_decay_check"]
