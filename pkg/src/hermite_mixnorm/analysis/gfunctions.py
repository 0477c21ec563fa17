"""Littlewood-Paley g-functions of the Hermite semigroup.

Time derivatives are always spectral: d^k/dt^k e^{-tH} multiplies the
level-l part F_l of f by (-lam_l)^k e^{-lam_l t}. Then

    g_k(f, x)^2 = Gamma(2k) sum_{l,l'} lam^k lam'^k (lam + lam')^{-2k} F_l(x) F_l'(x)

in closed form, or the t-integral is done with a temporal rule.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .norms import maximal_fn
from ..operators import default_K_max, polar_radial_table
from ..quadrature import (gauss_jacobi, gauss_legendre, radial_exponent, sphere_area,
                          sphere_rule, temporal_rule)

DEFAULT_N_T = 16


@dataclass(frozen=True)
class GFunctionResult:
    k: int
    values: np.ndarray
    method: str
    temporal_rule: str = None
    truncation: float = None


def g_constant(k):
    """||g_k f||_2 / ||f||_2 = 2^{-k} Gamma(2k)^{1/2}."""
    return 2.0 ** -k * math.sqrt(math.gamma(2 * k))


def _pair_matrix(lam, k):
    L = np.add.outer(lam, lam)
    return np.exp(gammaln(2 * k) + k * np.log(np.outer(lam, lam)) - 2 * k * np.log(L))


def _closed_form(lam, F, k):
    """g^2 from level parts F (L, ...) with eigenvalues lam (L,)."""
    M = _pair_matrix(lam, k)
    flat = F.reshape(len(lam), -1)
    g2 = np.real(np.einsum("lp,lm,mp->p", np.conj(flat), M, flat))
    return np.clip(g2, 0.0, None).reshape(F.shape[1:])


def _temporal(lam, F, k, N_t, n):
    rule = temporal_rule(N_t, k, n)
    E = (-lam[None, :]) ** k * np.exp(-np.outer(rule.nodes, lam))       # (T, L)
    flat = F.reshape(len(lam), -1)
    U = E @ flat                                                         # (T, P)
    g2 = rule.weights @ np.abs(U) ** 2
    return g2.reshape(F.shape[1:]), rule.declared_weight


def g_k(f, k, method="spectral", points=None, N_t=DEFAULT_N_T):
    """g_k(f, x) at ``points`` (..., n) for a spectral object f
    (PolarSpectrum or HermiteCoefficients)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if points is None:
        raise ValueError("points are required")
    lam, F = f.eigen_components(points)
    if method == "spectral":
        g2, label = _closed_form(lam, F, k), None
    elif method == "temporal":
        g2, label = _temporal(lam, F, k, N_t, f.n)
    else:
        raise ValueError("method must be 'spectral' or 'temporal'")
    return GFunctionResult(k, np.sqrt(g2), method, label, getattr(f, "truncation", None))


def g_on_grid(f, k, radial, basis, method="spectral", N_t=DEFAULT_N_T):
    """g_k(f) on the polar grid of (radial, basis) for a PolarSpectrum f."""
    lam, F = f.level_fields(radial, basis)
    if method == "spectral":
        g2, label = _closed_form(lam, F, k), None
    elif method == "temporal":
        g2, label = _temporal(lam, F, k, N_t, f.n)
    else:
        raise ValueError("method must be 'spectral' or 'temporal'")
    return GFunctionResult(k, np.sqrt(g2), method, label, f.truncation)


def g_norm(f, k, radial, basis, method="spectral", N_t=DEFAULT_N_T):
    """||g_k f||_2 from the Gram matrix G_ll' = int F_l F_l' of the level parts.

    "spectral" contracts G with Gamma(2k) lam^k lam'^k (lam+lam')^{-2k};
    "temporal" integrates the quadratic form of the time derivatives with a
    temporal rule.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    lam, F = f.level_fields(radial, basis)
    W = np.outer(radial.weights, basis.rule.weights)
    flat = F.reshape(len(lam), -1)
    G = np.real((np.conj(flat) * W.ravel()) @ flat.T)
    if method == "spectral":
        val = float(np.sum(_pair_matrix(lam, k) * G))
    elif method == "temporal":
        rule = temporal_rule(N_t, k, f.n)
        E = (-lam[None, :]) ** k * np.exp(-np.outer(rule.nodes, lam))
        val = float(np.einsum("t,tl,lm,tm->", rule.weights, E, G, E))
    else:
        raise ValueError("method must be 'spectral' or 'temporal'")
    return math.sqrt(max(val, 0.0))


def _rule_dimension(rule):
    return int(round(radial_exponent(rule))) + 1


def component_coefficients(g, m, K_max=None):
    """Coefficients of a degree-m profile against r^m psi_j^{n/2+m-1}, 2j + m <= K_max.

    Returns (eigenvalues 4j + 2m + n, coefficients, radial table on g's nodes,
    truncation mass)."""
    n = _rule_dimension(g.rule)
    K_max = default_K_max(n) if K_max is None else K_max
    if m > K_max:
        raise ValueError("degree exceeds the level cap")
    j = np.arange((K_max - m) // 2 + 1)
    B = polar_radial_table(n, np.full(len(j), m), j, g.rule.nodes)
    b = B @ (g.rule.weights * g.values)
    lam = 4.0 * j + 2 * m + n
    norm2 = float(np.sum(g.rule.weights * np.abs(g.values) ** 2))
    trunc = 1.0 - float(np.sum(np.abs(b) ** 2)) / norm2 if norm2 > 0 else 0.0
    return lam, b, B, trunc


def g_k_component(g, m, k, method="spectral", K_max=None, N_t=DEFAULT_N_T):
    """g_{k,m}(g, r) on the nodes of g's (r^{n-1}) rule, via the Laguerre
    expansion of the heat component of degree m."""
    if k < 1:
        raise ValueError("k must be at least 1")
    lam, b, B, trunc = component_coefficients(g, m, K_max)
    F = b[:, None] * B
    n = _rule_dimension(g.rule)
    if method == "spectral":
        g2, label = _closed_form(lam, F, k), None
    elif method == "temporal":
        g2, label = _temporal(lam, F, k, N_t, n)
    else:
        raise ValueError("method must be 'spectral' or 'temporal'")
    return GFunctionResult(k, np.sqrt(g2), method, label, trunc)


def _offset_nodes(n, k, n_phi):
    """sigma = tan(phi) nodes and weights sin^{n-1} cos^{2k-n-1} dphi on [0, pi/2]."""
    rule = gauss_legendre(n_phi, 0.0, 0.5 * math.pi)
    phi = rule.nodes
    w = rule.weights * np.sin(phi) ** (n - 1) * np.cos(phi) ** (2 * k - n - 1)
    return np.tan(phi), w


def g_star(f, k, points, n_phi=32, sphere=None, N_t=8):
    """g_k^*(f, x)^2 = int int t^{-n/2} (1 + |x-y|^2/t)^{-k} |d/dt e^{-tH} f(y)|^2 dy t dt.

    y = x + sqrt(t) tan(phi) xi with xi on the sphere turns the spatial
    integral into a smooth one on [0, pi/2) x S^{n-1}.
    """
    n = f.n
    if k <= n / 2.0:
        raise ValueError("g* needs k > n/2")
    sphere = sphere_rule(n, 24) if sphere is None else sphere
    x = np.asarray(points, dtype=float).reshape(-1, n)
    sig, wphi = _offset_nodes(n, k, n_phi)
    trule = temporal_rule(N_t, 1, n)
    steps = sig[:, None, None] * sphere.nodes[None, :, :]               # (A, S, n)
    wang = np.outer(wphi, sphere.weights)                                # (A, S)
    out = np.zeros(len(x))
    for t, wt in zip(trule.nodes, trule.weights):
        y = x[:, None, None, :] + math.sqrt(t) * steps[None]
        lam, F = f.eigen_components(y)                                   # (L, P, A, S)
        u = np.tensordot(-lam * np.exp(-lam * t), F, axes=(0, 0))
        out += wt * np.sum(np.abs(u) ** 2 * wang, axis=(1, 2))
    return GFunctionResult(k, np.sqrt(out).reshape(np.shape(points)[:-1]), "nested",
                           trule.declared_weight)


def g_star_component(g, m, k, n_phi=32, n_v=32, N_t=8, K_max=None):
    """Radial g*_{k,m}: g* of the degree-m heat component, evaluated at |x| = r_i.

    The angular average over xi reduces to one Jacobi-weighted integral in
    v = xi . x/|x| since the component depends on |y| only.
    """
    n = _rule_dimension(g.rule)
    if k <= n / 2.0:
        raise ValueError("g* needs k > n/2")
    lam, b, _, trunc = component_coefficients(g, m, K_max)
    j = np.arange(len(lam))
    r = g.rule.nodes
    sig, wphi = _offset_nodes(n, k, n_phi)
    vr = gauss_jacobi(n_v, n)
    trule = temporal_rule(N_t, 1, n)
    out = np.zeros(len(r))
    for t, wt in zip(trule.nodes, trule.weights):
        st = math.sqrt(t) * sig
        rho2 = (r[:, None, None] ** 2 + st[None, :, None] ** 2
                + 2 * r[:, None, None] * st[None, :, None] * vr.nodes[None, None, :])
        rho = np.sqrt(np.clip(rho2, 0.0, None)).ravel()
        B = polar_radial_table(n, np.full(len(j), m), j, rho)          # (J, P)
        u = ((-lam * np.exp(-lam * t) * b) @ B).reshape(rho2.shape)
        out += wt * sphere_area(n - 1) * np.einsum("pav,a,v->p", np.abs(u) ** 2, wphi,
                                                   vr.weights)
    return GFunctionResult(k, np.sqrt(out), "nested", trule.declared_weight, trunc)


def maximal_domination(f_profiles, h_profiles, m, k, alpha=None, **kw):
    """Ratios int g*_{k,m}(f)^2 h r^{n-1} dr / int g_{1,m}(f)^2 M h r^{n-1} dr
    over a battery of (f, h) pairs; returns the array of ratios."""
    ratios = []
    for f in f_profiles:
        n = _rule_dimension(f.rule)
        a = n / 2.0 - 1.0 if alpha is None else alpha
        gs = g_star_component(f, m, k, **kw).values
        g1 = g_k_component(f, m, 1, K_max=kw.get("K_max")).values
        for h in h_profiles:
            Mh = maximal_fn(h, a).values
            lhs = float(np.sum(f.rule.weights * gs ** 2 * h.values))
            rhs = float(np.sum(f.rule.weights * g1 ** 2 * Mh))
            ratios.append(lhs / rhs)
    return np.array(ratios)


__all__ = ["GFunctionResult", "g_constant", "g_k", "g_on_grid", "g_norm", "g_k_component",
           "g_star", "g_star_component", "component_coefficients", "maximal_domination"]
