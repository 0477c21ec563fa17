"""Real spherical harmonics on S^1 and S^2, the Funk-Hecke transform and
the degree-by-degree decomposition of fields on R^n.

Index ordering is fixed: degree m ascending; within a degree n = 2 gives
[cos, sin] and n = 3 gives orders -m..m of the real harmonics. The index
j runs from 1 to d(m).
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .fields import PolarField, RadialProfile
from .quadrature import gauss_jacobi, sphere_area
from .specfun import bessel_I, exp_remainder, ultraspherical_all

DEFAULT_M_MAX = 24


def degree_dim(m, n):
    """Dimension d(m) of the space of degree-m spherical harmonics on S^{n-1}."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    if n == 2:
        return 1 if m == 0 else 2
    return math.comb(m + n - 1, n - 1) - (math.comb(m + n - 3, n - 1) if m >= 2 else 0)


def harmonic_index(n, M_max):
    """List of (m, j) pairs in basis order."""
    return [(m, j) for m in range(M_max + 1) for j in range(1, degree_dim(m, n) + 1)]


def _circle_harmonics(M_max, points):
    theta = np.arctan2(points[..., 1], points[..., 0])
    cols = [np.full(theta.shape, 1.0 / math.sqrt(2 * math.pi))]
    for m in range(1, M_max + 1):
        cols.append(np.cos(m * theta) / math.sqrt(math.pi))
        cols.append(np.sin(m * theta) / math.sqrt(math.pi))
    return np.stack(cols, axis=-1)


def _normalized_legendre(M_max, x):
    """Orthonormal associated Legendre factors Pbar[l][m](x) including
    sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!), m >= 0, by stable column recurrences."""
    s = np.sqrt(np.clip(1.0 - x * x, 0.0, None))
    P = {}
    pmm = np.full(x.shape, 1.0 / math.sqrt(4 * math.pi))
    for m in range(M_max + 1):
        if m > 0:
            pmm = -math.sqrt((2 * m + 1) / (2.0 * m)) * s * pmm
        P[(m, m)] = pmm
        if m + 1 <= M_max:
            P[(m + 1, m)] = math.sqrt(2 * m + 3) * x * pmm
        for l in range(m + 2, M_max + 1):
            a = math.sqrt((4 * l * l - 1.0) / (l * l - m * m))
            b = math.sqrt(((l - 1) ** 2 - m * m) / (4 * (l - 1) ** 2 - 1.0))
            P[(l, m)] = a * (x * P[(l - 1, m)] - b * P[(l - 2, m)])
    return P


def _sphere_harmonics(M_max, points):
    x, y, z = points[..., 0], points[..., 1], points[..., 2]
    phi = np.arctan2(y, x)
    P = _normalized_legendre(M_max, np.clip(z, -1.0, 1.0))
    cols = []
    root2 = math.sqrt(2.0)
    for l in range(M_max + 1):
        for order in range(-l, l + 1):
            if order < 0:
                cols.append(root2 * P[(l, -order)] * np.sin(-order * phi))
            elif order == 0:
                cols.append(P[(l, 0)])
            else:
                cols.append(root2 * P[(l, order)] * np.cos(order * phi))
    return np.stack(cols, axis=-1)


def real_harmonics(n, M_max, points):
    """Y_{m,j} at unit vectors ``points`` (..., n); returns (..., n_funcs)."""
    points = np.asarray(points, dtype=float)
    if n == 2:
        return _circle_harmonics(M_max, points)
    if n == 3:
        return _sphere_harmonics(M_max, points)
    raise ValueError("real harmonics are implemented for n = 2, 3")


@dataclass(frozen=True)
class SphericalHarmonicBasis:
    n: int
    M_max: int
    rule: object
    table: np.ndarray          # (Ns, n_funcs)
    index: list = field(repr=False)

    @property
    def size(self):
        return len(self.index)

    def d(self, m):
        return degree_dim(m, self.n)

    def degrees(self):
        return np.array([m for m, _ in self.index])

    def position(self, m, j):
        return self.index.index((m, j))

    def evaluate(self, points):
        return real_harmonics(self.n, self.M_max, points)

    def gram(self):
        return self.table.T @ (self.rule.weights[:, None] * self.table)


def build_basis(n, M_max, rule):
    """Tabulate the real orthonormal basis up to degree M_max on a sphere rule."""
    if rule.n != n:
        raise ValueError("sphere rule dimension does not match n")
    if rule.order < 2 * M_max:
        raise ValueError(f"sphere rule order {rule.order} < 2*M_max = {2 * M_max}")
    table = real_harmonics(n, M_max, rule.nodes)
    return SphericalHarmonicBasis(n, M_max, rule, table, harmonic_index(n, M_max))


@dataclass(frozen=True)
class HarmonicDecomposition:
    """Radial profiles f_{m,j}(r_i), stored as a (Nr, n_funcs) array."""
    n: int
    M_max: int
    radial: object
    coeffs: np.ndarray
    index: list = field(repr=False)

    def profile(self, m, j):
        k = self.index.index((m, j))
        return RadialProfile(self.radial, self.coeffs[:, k], self.n / 2.0 - 1.0)

    @property
    def profiles(self):
        return {mj: self.profile(*mj) for mj in self.index}

    def shell_energy(self):
        """sum_{m,j} f_{m,j}(r)^2 for each radial node."""
        return np.sum(self.coeffs ** 2, axis=1)


def decompose(f, basis):
    """f_{m,j}(r) = int_{S^{n-1}} f(r w) Y_{m,j}(w) dw by sphere quadrature."""
    if f.sphere is not basis.rule and f.sphere.size != basis.rule.size:
        raise ValueError("field is not sampled on the basis sphere nodes")
    coeffs = (f.values * basis.rule.weights[None, :]) @ basis.table
    return HarmonicDecomposition(f.n, basis.M_max, f.radial, coeffs, basis.index)


def resynthesize(d, basis):
    """Pointwise sum_{m,j} f_{m,j}(r) Y_{m,j}(w) on the basis sphere nodes."""
    return PolarField(d.n, d.radial, basis.rule, d.coeffs @ basis.table.T)


def funk_hecke_coefficient(F, m, n, rule=None, N=128):
    """lambda_m(F) = int_{-1}^{1} F(t) P_m^{n/2-1}(t) (1 - t^2)^{(n-3)/2} dt."""
    if rule is None:
        rule = gauss_jacobi(N, n)
    P = ultraspherical_all(m, n, rule.nodes)[m]
    return float(rule.integrate(F(rule.nodes) * P))


def verify_funk_hecke(F, basis, rule=None, n_samples=16, seed=0):
    """Residual of the Funk-Hecke identity over degrees, indices and samples.

    Left side: sphere quadrature of F(w . w') Y_{m,j}(w'). Right side:
    omega_{n-2} Y_{m,j}(w) lambda_m(F) from the 1-D Jacobi rule. The factor
    omega_{n-2} (area of S^{n-2}) is the normalization of the 1-D reduction.
    Returns a dict with the max absolute residual and its location.
    """
    n = basis.n
    if rule is None:
        rule = gauss_jacobi(160, n)
    rng = np.random.default_rng(seed)
    w = rng.standard_normal((n_samples, n))
    w /= np.linalg.norm(w, axis=1, keepdims=True)
    Yw = basis.evaluate(w)                                  # (S, F)
    dots = np.clip(w @ basis.rule.nodes.T, -1.0, 1.0)       # (S, Ns)
    lhs = (F(dots) * basis.rule.weights) @ basis.table      # (S, F)
    lam = np.array([funk_hecke_coefficient(F, m, n, rule) for m in range(basis.M_max + 1)])
    rhs = sphere_area(n - 1) * Yw * lam[basis.degrees()]
    resid = np.abs(lhs - rhs)
    s, k = np.unravel_index(np.argmax(resid), resid.shape)
    return {"max_residual": float(resid.max()), "at_index": basis.index[k],
            "sample": int(s), "lambda": lam}


def rodrigues_residual(m, n, u):
    """Difference between (1-u^2)^{(n-3)/2} P_m(u) and the Rodrigues form
    (-1)^m / (2^m ((n-1)/2)_m) (d/du)^m (1-u^2)^{(n-3)/2+m}, n >= 3.

    The m-th derivative is evaluated exactly: for odd n the power is a
    polynomial; for even n it is expanded by the general Leibniz rule on
    (1-u)^a (1+u)^a.
    """
    if n < 3:
        raise ValueError("Rodrigues check needs n >= 3")
    u = np.asarray(u, dtype=float)
    a = (n - 3) / 2.0 + m
    deriv = np.zeros(u.shape)
    for i in range(m + 1):
        # d^i (1-u)^a  = (-1)^i a(a-1)...(a-i+1) (1-u)^{a-i}
        fa = np.prod([a - q for q in range(i)]) * (-1) ** i
        fb = np.prod([a - q for q in range(m - i)])
        deriv += math.comb(m, i) * fa * (1 - u) ** (a - i) * fb * (1 + u) ** (a - m + i)
    poch = np.prod([(n - 1) / 2.0 + q for q in range(m)])
    rod = (-1) ** m / (2 ** m * poch) * deriv
    direct = (1 - u * u) ** ((n - 3) / 2.0) * ultraspherical_all(m, n, u)[m]
    return np.abs(rod - direct)


def exponential_coefficient(z, m, n, rule=None, N=64):
    """int_{-1}^{1} e^{zu} P_m^{n/2-1}(u) (1-u^2)^{(n-3)/2} du by Gauss-Jacobi quadrature.

    The Taylor polynomial of e^{zu} of degree < m is orthogonal to P_m and
    is dropped before quadrature; otherwise the O(1) terms would cancel
    down to a result of size ~ z^m / m!.
    """
    if rule is None:
        rule = gauss_jacobi(N, n)
    P = ultraspherical_all(m, n, rule.nodes)[m]
    return float(rule.integrate(exp_remainder(m, z * rule.nodes) * P))


def exponential_coefficient_bessel(z, m, n):
    """Gamma(1/2) Gamma((n-1)/2) (z/2)^{1-n/2} I_{n/2+m-1}(z)."""
    return (math.sqrt(math.pi) * math.gamma((n - 1) / 2.0) * (0.5 * z) ** (1 - n / 2.0)
            * bessel_I(n / 2.0 + m - 1.0, z))
