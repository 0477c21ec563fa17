"""One-dimensional and spherical quadrature rules.

Every rule carries its weight function in the weights: integrating f against
the declared weight is ``rule.integrate(f(rule.nodes))``.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaln

DEFAULT_R_MAX = 14.0


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray
    declared_weight: str

    def __post_init__(self):
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)

    @property
    def order(self):
        return len(self.nodes)

    def integrate(self, values, axis=-1):
        return np.tensordot(np.moveaxis(np.asarray(values), axis, -1),
                            self.weights, axes=([-1], [0]))


@dataclass(frozen=True)
class SphereRule:
    """Nodes on S^{n-1} (unit vectors, shape (N, n)) with positive weights."""
    n: int
    nodes: np.ndarray
    weights: np.ndarray
    order: int

    def __post_init__(self):
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)

    @property
    def size(self):
        return len(self.weights)

    def integrate(self, values, axis=-1):
        return np.tensordot(np.moveaxis(np.asarray(values), axis, -1),
                            self.weights, axes=([-1], [0]))


def sphere_area(n):
    """Surface measure of S^{n-1} (omega_{n-1}); n = 1 gives 2 (two points)."""
    return 2.0 * math.pi ** (n / 2.0) / math.gamma(n / 2.0)


def _rule(nodes, weights, label):
    order = np.argsort(nodes)
    return QuadratureRule(np.ascontiguousarray(nodes[order], dtype=float),
                          np.ascontiguousarray(weights[order], dtype=float), label)


def golub_welsch(diag, offdiag, mu0):
    """Gauss nodes/weights from the Jacobi matrix of a monic recurrence."""
    nodes, vecs = eigh_tridiagonal(diag, offdiag)
    return nodes, mu0 * vecs[0] ** 2


def gauss_legendre(N, a=-1.0, b=1.0):
    x, w = np.polynomial.legendre.leggauss(N)
    half = 0.5 * (b - a)
    return _rule(a + half * (x + 1.0), half * w, f"legendre on [{a:g},{b:g}]")


def gauss_jacobi(N, n):
    """Gauss rule on [-1, 1] for the weight (1 - u^2)^{(n-3)/2}.

    n = 2 is Gauss-Chebyshev with closed-form nodes, n = 3 Gauss-Legendre,
    any other n goes through Golub-Welsch on the Gegenbauer recurrence.
    Rules are cached; their arrays are read-only.
    """
    return _gauss_jacobi(int(N), int(n))


@lru_cache(maxsize=64)
def _gauss_jacobi(N, n):
    rule = _gauss_jacobi_build(N, n)
    rule.nodes.flags.writeable = False
    rule.weights.flags.writeable = False
    return rule


def _gauss_jacobi_build(N, n):
    if N < 1 or n < 2:
        raise ValueError("need N >= 1 and n >= 2")
    label = f"jacobi({(n - 3) / 2:g},{(n - 3) / 2:g}) on [-1,1]"
    if n == 2:
        i = np.arange(1, N + 1)
        nodes = np.cos((2 * i - 1) * math.pi / (2 * N))
        return _rule(nodes, np.full(N, math.pi / N), label)
    if n == 3:
        x, w = np.polynomial.legendre.leggauss(N)
        return _rule(x, w, label)
    lam = n / 2.0 - 1.0
    k = np.arange(1, N, dtype=float)
    beta = k * (k + 2 * lam - 1) / (4 * (k + lam) * (k + lam - 1))
    mu0 = math.exp(0.5 * math.log(math.pi) + gammaln(lam + 0.5) - gammaln(lam + 1.0))
    nodes, weights = golub_welsch(np.zeros(N), np.sqrt(beta), mu0)
    return _rule(nodes, weights, label)


def radial_rule(N, *, n=None, alpha=None, R_max=DEFAULT_R_MAX):
    """Mapped Gauss-Legendre rule on [0, R_max] against r^p dr.

    The exponent is p = n - 1 (Lebesgue measure in polar coordinates) or
    p = 2 alpha + 1 (the Laguerre measure mu_alpha); give exactly one.
    """
    if R_max <= 0:
        raise ValueError("R_max must be positive")
    if (n is None) == (alpha is None):
        raise ValueError("give exactly one of n or alpha")
    p = n - 1.0 if n is not None else 2.0 * alpha + 1.0
    x, w = np.polynomial.legendre.leggauss(N)
    r = 0.5 * R_max * (x + 1.0)
    return _rule(r, 0.5 * R_max * w * r ** p, f"radial(r^{p:g}) on [0,{R_max:g}]")


def radial_exponent(rule):
    """Recover p from a radial rule label (used for consistency checks)."""
    label = rule.declared_weight
    return float(label[label.index("r^") + 2:label.index(")")])


def temporal_rule(N, k, n=2, T_max=None, panels=24):
    """Rule on (0, T_max] against t^{2k-1} dt.

    [0, 1] is covered by Gauss-Legendre panels on the dyadic intervals
    [2^{-j-1}, 2^{-j}] (j < panels) plus [0, 2^{-panels}], each with N nodes,
    so integrands like e^{-lambda t} stay resolved for lambda up to ~2^panels.
    [1, T_max] uses Gauss-Legendre panels of unit length in log t.
    Default T_max = 40 / n.
    """
    if N < 1 or k < 1:
        raise ValueError("need N >= 1 and k >= 1")
    if T_max is None:
        T_max = 40.0 / n
    x, w = np.polynomial.legendre.leggauss(N)
    nodes, weights = [], []
    edges = [0.0] + [2.0 ** -j for j in range(panels, -1, -1)]
    for a, b in zip(edges[:-1], edges[1:]):
        t = a + 0.5 * (b - a) * (x + 1.0)
        nodes.append(t)
        weights.append(0.5 * (b - a) * w * t ** (2 * k - 1))
    if T_max > 1.0:
        span = math.log(T_max)
        n_log = max(1, math.ceil(span))
        for i in range(n_log):
            a = span * i / n_log
            h = span / n_log
            t = np.exp(a + 0.5 * h * (x + 1.0))
            nodes.append(t)
            weights.append(0.5 * h * w * t ** (2 * k))
    return _rule(np.concatenate(nodes), np.concatenate(weights),
                 f"temporal(t^{2 * k - 1}) on (0,{T_max:g}]")


def sphere_rule(n, order):
    """Rule on S^{n-1} exact for spherical harmonics of degree <= order.

    n = 2: 2*order + 1 equispaced points on the circle.
    n = 3: Gauss-Legendre in cos(theta) times the trapezoid rule in longitude.
    """
    if n not in (2, 3):
        raise ValueError("sphere rules exist for n = 2, 3 only")
    if n == 2:
        N = 2 * order + 1
        th = 2 * math.pi * np.arange(N) / N
        nodes = np.stack([np.cos(th), np.sin(th)], axis=1)
        return SphereRule(2, nodes, np.full(N, 2 * math.pi / N), order)
    n_theta = order // 2 + 1
    n_phi = order + 1
    z, wz = np.polynomial.legendre.leggauss(n_theta)
    phi = 2 * math.pi * np.arange(n_phi) / n_phi
    Z, PHI = np.meshgrid(z, phi, indexing="ij")
    rho = np.sqrt(1.0 - Z ** 2)
    nodes = np.stack([rho * np.cos(PHI), rho * np.sin(PHI), Z], axis=-1).reshape(-1, 3)
    weights = np.outer(wz, np.full(n_phi, 2 * math.pi / n_phi)).ravel()
    return SphereRule(3, nodes, weights, order)


def gauss_hermite_scaled(N):
    """Gauss-Hermite nodes with weights multiplied by e^{x^2}: integrates
    f(x) dx over R exactly when f = polynomial * e^{-x^2} of degree < 2N."""
    x, w = np.polynomial.hermite.hermgauss(N)
    return _rule(x, w * np.exp(x * x), "lebesgue on R (scaled hermite)")


def tensor_hermite_grid(N, n):
    """Points (N^n, n) and weights of the n-fold scaled Gauss-Hermite rule."""
    rule = gauss_hermite_scaled(N)
    axes = np.meshgrid(*([rule.nodes] * n), indexing="ij")
    pts = np.stack([a.ravel() for a in axes], axis=1)
    wax = np.meshgrid(*([rule.weights] * n), indexing="ij")
    w = np.prod(np.stack([a.ravel() for a in wax], axis=1), axis=1)
    return pts, w
