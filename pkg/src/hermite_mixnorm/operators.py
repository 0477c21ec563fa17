"""Hermite multipliers, semigroups, Bochner-Riesz means and component operators.

Two spectral representations are used:

* ``HermiteCoefficients``: Cartesian coefficients <f, Phi_a>, |a| <= K_max,
  stored level by level.
* ``PolarSpectrum``: coefficients against the polar eigenbasis
  r^m psi_k^{n/2+m-1}(r) Y_{m,j}(w), which has Hermite level 2k + m.
  It is much smaller than the Cartesian one at a given level when the
  angular degree is capped, and it is what probes and g-functions use.

Both expose ``levels``, ``eigenvalues``, ``coeffs``, ``with_coeffs`` and
``eigen_components`` so multipliers treat them alike.
"""

import csv
import itertools
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .fields import PolarField
from .harmonics import decompose, harmonic_index, real_harmonics, resynthesize
from .kernels import bochner_riesz_kernel, component_kernel, laguerre_kernel, mehler_kernel
from .quadrature import (gauss_hermite_scaled, gauss_jacobi, radial_exponent,
                         sphere_area)
from .specfun import hermite_functions_1d, laguerre_functions

DEFAULT_K_MAX = {2: 40, 3: 24}
MAX_TRUNCATION = 0.1
DECAY_TOL = 1e-12
_CHUNK = 2048


def default_K_max(n):
    return DEFAULT_K_MAX.get(n, 24)


# -- Cartesian coefficients ---------------------------------------------------

def multi_indices(n, K_max):
    """Multi-indices with |a| <= K_max, ordered by level, then lexicographically
    descending within a level. Shape (count, n)."""
    rows = []
    for k in range(K_max + 1):
        lev = [a for a in itertools.product(range(k, -1, -1), repeat=n) if sum(a) == k]
        rows.extend(lev)
    return np.array(rows, dtype=int).reshape(-1, n)


def hermite_basis(alphas, points):
    """Phi_a(x) for every multi-index row of ``alphas``; returns (P, count)."""
    points = np.asarray(points, dtype=float)
    flat = points.reshape(-1, points.shape[-1])
    kmax = int(alphas.max()) if alphas.size else 0
    out = np.ones((flat.shape[0], len(alphas)))
    for i in range(flat.shape[1]):
        h = hermite_functions_1d(kmax, flat[:, i])        # (kmax+1, P)
        out *= h[alphas[:, i]].T
    return out.reshape(points.shape[:-1] + (len(alphas),))


def _group_by_level(levels, terms, n_levels):
    indicator = (np.arange(n_levels)[:, None] == levels[None, :]).astype(float)
    flat = terms.reshape(len(levels), -1)
    return (indicator @ flat).reshape((n_levels,) + terms.shape[1:])


@dataclass(frozen=True)
class HermiteCoefficients:
    """Coefficients <f, Phi_a> for |a| <= K_max (level-ordered multi-indices)."""
    n: int
    K_max: int
    alphas: np.ndarray
    coeffs: np.ndarray
    truncation: float = None

    @classmethod
    def from_dict(cls, entries, n, K_max):
        alphas = multi_indices(n, K_max)
        pos = {tuple(a): i for i, a in enumerate(alphas)}
        c = np.zeros(len(alphas), dtype=complex if any(
            np.iscomplexobj(v) for v in entries.values()) else float)
        for a, v in entries.items():
            c[pos[tuple(a)]] = v
        return cls(n, K_max, alphas, c)

    @property
    def levels(self):
        return self.alphas.sum(axis=1)

    @property
    def eigenvalues(self):
        return 2 * self.levels + self.n

    def with_coeffs(self, coeffs):
        return replace(self, coeffs=np.asarray(coeffs))

    def coefficient(self, alpha):
        hit = np.all(self.alphas == np.asarray(alpha), axis=1)
        return self.coeffs[np.argmax(hit)] if hit.any() else 0.0

    def level(self, k):
        return self.coeffs[self.levels == k]

    def norm(self):
        """Plancherel norm (sum |c_a|^2)^{1/2}."""
        return float(np.sqrt(np.sum(np.abs(self.coeffs) ** 2)))

    def evaluate(self, points):
        points = np.asarray(points, dtype=float)
        flat = points.reshape(-1, self.n)
        out = np.empty(len(flat), dtype=self.coeffs.dtype)
        for a in range(0, len(flat), _CHUNK):
            out[a:a + _CHUNK] = hermite_basis(self.alphas, flat[a:a + _CHUNK]) @ self.coeffs
        return out.reshape(points.shape[:-1])

    def to_field(self, radial, sphere):
        pts = radial.nodes[:, None, None] * sphere.nodes[None, :, :]
        return PolarField(self.n, radial, sphere, self.evaluate(pts))

    def eigen_components(self, points):
        """(eigenvalues of each level, level parts F_l(x) of shape (L,) + batch)."""
        points = np.asarray(points, dtype=float)
        flat = points.reshape(-1, self.n)
        F = np.empty((self.K_max + 1, len(flat)), dtype=self.coeffs.dtype)
        for a in range(0, len(flat), _CHUNK):
            terms = hermite_basis(self.alphas, flat[a:a + _CHUNK]).T * self.coeffs[:, None]
            F[:, a:a + _CHUNK] = _group_by_level(self.levels, terms, self.K_max + 1)
        lam = 2.0 * np.arange(self.K_max + 1) + self.n
        return lam, F.reshape((self.K_max + 1,) + points.shape[:-1])

    def to_csv(self, path):
        levels = self.levels
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["level", "index", "value"])
            for k in range(self.K_max + 1):
                for i, v in enumerate(self.coeffs[levels == k]):
                    w.writerow([k, i, repr(v.item())])


def _check_decay(f):
    outer = np.max(np.abs(f.values[-1]))
    scale = max(1.0, float(np.max(np.abs(f.values))))
    if outer > DECAY_TOL * scale:
        raise ValueError(f"field does not decay at R_max: |f| = {outer:.3g} on the last shell")


def hermite_analyze(f, n=None, K_max=None, N=None, max_truncation=MAX_TRUNCATION):
    """Hermite coefficients of a PolarField or of a callable on R^n.

    A PolarField is integrated with its own polar rule; a callable is
    sampled on a tensor scaled Gauss-Hermite grid with N nodes per axis
    (default K_max + 40), where the transform factorizes axis by axis.
    The truncation mass 1 - sum|c|^2 / ||f||^2 is stored on the result.
    """
    if isinstance(f, PolarField):
        n = f.n
        K_max = default_K_max(n) if K_max is None else K_max
        _check_decay(f)
        alphas = multi_indices(n, K_max)
        pts = f.points.reshape(-1, n)
        wf = (f.weights * f.values).ravel()
        c = np.zeros(len(alphas), dtype=wf.dtype)
        for a in range(0, len(pts), _CHUNK):
            c += wf[a:a + _CHUNK] @ hermite_basis(alphas, pts[a:a + _CHUNK])
        norm2 = f.l2_norm() ** 2
    else:
        if n is None:
            raise ValueError("n is required for a callable")
        K_max = default_K_max(n) if K_max is None else K_max
        N = K_max + 40 if N is None else N
        rule = gauss_hermite_scaled(N)
        axes = np.meshgrid(*([rule.nodes] * n), indexing="ij")
        vals = np.asarray(f(np.stack(axes, axis=-1)))
        w = rule.weights
        wgrid = np.ones((N,) * n)
        for i in range(n):
            wgrid = wgrid * w.reshape((1,) * i + (N,) + (1,) * (n - i - 1))
        norm2 = float(np.sum(wgrid * np.abs(vals) ** 2))
        H = hermite_functions_1d(K_max, rule.nodes) * w      # (K+1, N)
        G = vals
        for _ in range(n):
            # contract the leading grid axis, append the coefficient axis
            G = np.tensordot(G, H, axes=([0], [1]))
        alphas = multi_indices(n, K_max)
        c = G[tuple(alphas.T)]
    captured = float(np.sum(np.abs(c) ** 2))
    trunc = 1.0 - captured / norm2 if norm2 > 0 else 0.0
    if trunc > max_truncation:
        raise ValueError(f"truncation mass {trunc:.3g} exceeds {max_truncation}")
    return HermiteCoefficients(n, K_max, alphas, c, trunc)


# -- polar spectrum -----------------------------------------------------------

def polar_layout(n, M_max, K_max):
    """(m, harmonic column, k) for every polar basis function of level <= K_max."""
    ms, cols, ks = [], [], []
    for col, (m, _) in enumerate(harmonic_index(n, M_max)):
        for k in range((K_max - m) // 2 + 1 if m <= K_max else 0):
            ms.append(m)
            cols.append(col)
            ks.append(k)
    return np.array(ms, dtype=int), np.array(cols, dtype=int), np.array(ks, dtype=int)


def polar_radial_table(n, m_arr, k_arr, r):
    """r^m psi_k^{n/2+m-1}(r) for each (m, k) pair; shape (count, len(r))."""
    r = np.asarray(r, dtype=float)
    out = np.zeros((len(m_arr), len(r)))
    with np.errstate(divide="ignore"):
        logr = np.log(r)
    for m in np.unique(m_arr):
        sel = np.flatnonzero(m_arr == m)
        kmax = int(k_arr[sel].max())
        scale = m * logr if m > 0 else None
        tab = laguerre_functions(kmax, n / 2.0 + m - 1.0, r, log_scale=scale)
        out[sel] = tab[k_arr[sel]]
    return out


@dataclass(frozen=True)
class PolarSpectrum:
    """Coefficients against r^m psi_k^{n/2+m-1}(r) Y_{m,j}(w), level 2k + m <= K_max."""
    n: int
    M_max: int
    K_max: int
    m: np.ndarray
    col: np.ndarray
    k: np.ndarray
    coeffs: np.ndarray
    truncation: float = None
    _index: list = field(default=None, repr=False)

    @classmethod
    def zeros(cls, n, M_max, K_max, dtype=float):
        m, col, k = polar_layout(n, M_max, K_max)
        return cls(n, M_max, K_max, m, col, k, np.zeros(len(m), dtype=dtype))

    @classmethod
    def random(cls, n, M_max, K_max, rng, decay=0.0):
        """Unit-norm Gaussian coefficients, optionally damped by exp(-decay * level)."""
        z = cls.zeros(n, M_max, K_max)
        c = rng.standard_normal(len(z.m)) * np.exp(-decay * (2 * z.k + z.m))
        return z.with_coeffs(c / np.linalg.norm(c))

    @property
    def index(self):
        return harmonic_index(self.n, self.M_max)

    @property
    def levels(self):
        return 2 * self.k + self.m

    @property
    def eigenvalues(self):
        return 2 * self.levels + self.n

    def with_coeffs(self, coeffs):
        return replace(self, coeffs=np.asarray(coeffs))

    def set(self, m, j, k, value):
        col = self.index.index((m, j))
        hit = np.flatnonzero((self.col == col) & (self.k == k))
        if len(hit) == 0:
            raise KeyError((m, j, k))
        c = self.coeffs.astype(np.result_type(self.coeffs, value)).copy()
        c[hit[0]] = value
        return self.with_coeffs(c)

    def norm(self):
        return float(np.sqrt(np.sum(np.abs(self.coeffs) ** 2)))

    def radial_table(self, r):
        return polar_radial_table(self.n, self.m, self.k, r)

    def profiles(self, r):
        """Radial profiles f_{m,j}(r), shape (len(r), number of harmonics)."""
        B = self.radial_table(r) * self.coeffs[:, None]
        out = np.zeros((len(self.index), B.shape[1]), dtype=B.dtype)
        np.add.at(out, self.col, B)
        return out.T

    def _table(self, basis):
        """Harmonic table columns of degree <= M_max (basis order is by degree)."""
        if basis.M_max < self.M_max:
            raise ValueError("basis degree is below the spectrum degree")
        return basis.table[:, :len(self.index)]

    def synthesize(self, radial, basis):
        prof = self.profiles(radial.nodes)
        return PolarField(self.n, radial, basis.rule, prof @ self._table(basis).T)

    def _polar(self, points):
        points = np.asarray(points, dtype=float)
        flat = points.reshape(-1, self.n)
        r = np.linalg.norm(flat, axis=1)
        omega = np.zeros_like(flat)
        omega[:, 0] = 1.0
        nz = r > 0
        omega[nz] = flat[nz] / r[nz, None]
        return points.shape[:-1], r, real_harmonics(self.n, self.M_max, omega)

    def evaluate(self, points):
        shape, r, Y = self._polar(points)
        return np.sum(self.profiles(r) * Y, axis=1).reshape(shape)

    def level_fields(self, radial, basis):
        """Level parts F_l on the polar grid, shape (K_max + 1, Nr, Ns)."""
        B = self.radial_table(radial.nodes) * self.coeffs[:, None]     # (count, Nr)
        Y = self._table(basis).T[self.col]                               # (count, Ns)
        F = np.zeros((self.K_max + 1, len(radial.nodes), Y.shape[1]),
                     dtype=np.result_type(B, Y))
        for lev in range(self.K_max + 1):
            sel = self.levels == lev
            if sel.any():
                F[lev] = B[sel].T @ Y[sel]
        lam = 2.0 * np.arange(self.K_max + 1) + self.n
        return lam, F

    def eigen_components(self, points):
        shape, r, Y = self._polar(points)
        terms = self.radial_table(r) * Y.T[self.col] * self.coeffs[:, None]
        F = _group_by_level(self.levels, terms, self.K_max + 1)
        lam = 2.0 * np.arange(self.K_max + 1) + self.n
        return lam, F.reshape((self.K_max + 1,) + shape)


def analyze_polar(f, basis, K_max=None):
    """Project a PolarField onto the polar eigenbasis (degrees <= basis.M_max)."""
    K_max = default_K_max(f.n) if K_max is None else K_max
    spec = PolarSpectrum.zeros(f.n, basis.M_max, K_max)
    prof = decompose(f, basis).coeffs                       # (Nr, n_harm)
    B = spec.radial_table(f.radial.nodes) * f.radial.weights
    c = np.einsum("ir,ri->i", B, prof[:, spec.col])
    norm2 = f.l2_norm() ** 2
    trunc = 1.0 - float(np.sum(np.abs(c) ** 2)) / norm2 if norm2 > 0 else 0.0
    return replace(spec, coeffs=c, truncation=trunc)


# -- multipliers ----------------------------------------------------------------

@dataclass(frozen=True)
class MultiplierSpec:
    """phi evaluated on eigenvalues 2k + n; ``table`` overrides phi by level."""
    phi: object
    name: str = "custom"
    params: dict = field(default_factory=dict)
    j_max: int = 4
    table: np.ndarray = None

    def at_levels(self, k, n, dtype=float):
        k = np.asarray(k)
        if self.table is not None:
            tab = np.asarray(self.table)
            out = np.zeros(k.shape, dtype=np.result_type(tab, dtype))
            inside = k < len(tab)
            out[inside] = tab[k[inside]]
            return out
        return self.phi((2 * k + n).astype(dtype))

    def constants(self, n, K_scan=10_000):
        return check_multiplier_condition(self, n, K_scan, self.j_max)["constants"]


def imaginary_power(tau):
    return MultiplierSpec(lambda lam: np.exp(1j * tau * np.log(lam)),
                          "imaginary-power", {"tau": tau})


def riesz_mean(R, delta):
    def phi(lam):
        base = np.clip(1.0 - lam / R, 0.0, None)
        return base ** delta if delta > 0 else (base > 0).astype(lam.dtype)
    return MultiplierSpec(phi, "riesz-mean", {"R": R, "delta": delta})


def semigroup(t):
    return MultiplierSpec(lambda lam: np.exp(-lam * t), "semigroup", {"t": t})


def tabulated(values):
    values = np.asarray(values)
    return MultiplierSpec(None, "tabulated", {"levels": len(values)}, table=values)


def multiplier_from_dict(d):
    """Build a multiplier from {"family": ..., parameters}."""
    fam = d.get("family")
    if fam == "imaginary-power":
        return imaginary_power(float(d.get("tau", 1.0)))
    if fam == "riesz-mean":
        return riesz_mean(float(d["R"]), float(d.get("delta", 1.0)))
    if fam == "semigroup":
        return semigroup(float(d.get("t", 1.0)))
    if fam == "tabulated":
        return tabulated(np.asarray(d["values"], dtype=float))
    raise ValueError(f"unknown multiplier family {fam!r}")


def apply_multiplier(spec, c):
    """c_a -> phi(2|a| + n) c_a."""
    phi = spec.at_levels(c.levels, c.n)
    return c.with_coeffs(phi * c.coeffs)


def check_multiplier_condition(spec, n, K_scan=10_000, j_max=None, bounds=None,
                               growth_tol=1.25):
    """Scan C_j = max_{k <= K_scan} |Delta^j phi(k)| (2k+n)^j, j = 0..j_max.

    Delta is the unit step in k. Values are taken in long double so high
    differences of slowly varying phi are not swamped by rounding. A
    constant passes when it does not keep growing with the scan: the full
    scan may exceed the half scan by at most ``growth_tol``. ``bounds``
    maps j to an optional caller bound.
    """
    j_max = spec.j_max if j_max is None else j_max
    if j_max < 1:
        raise ValueError("j_max must be at least 1")
    if spec.table is not None:
        K_scan = min(K_scan, len(spec.table) - 1 - j_max)
    k = np.arange(K_scan + j_max + 1)
    D = spec.at_levels(k, n, dtype=np.longdouble)
    half = K_scan // 2
    weight = (2 * np.arange(K_scan + 1, dtype=np.longdouble) + n)
    consts, halves, ok, failing = [], [], [], []
    for j in range(j_max + 1):
        if j:
            D = D[1:] - D[:-1]
        vals = np.abs(D[:K_scan + 1]) * weight ** j
        full, part = float(vals.max()), float(vals[:half + 1].max())
        good = full <= growth_tol * part or full == 0.0
        if bounds is not None and j in bounds:
            good = good and full <= bounds[j]
        consts.append(full)
        halves.append(part)
        ok.append(bool(good))
        if not good:
            failing.append(j)
    return {"name": spec.name, "params": dict(spec.params), "n": n, "K_scan": int(K_scan),
            "j_max": j_max, "constants": consts, "constants_half_scan": halves,
            "ok": ok, "failing": failing, "pass": not failing}


# -- kernel quadrature ----------------------------------------------------------

def _kernel_apply(kernel, f, points):
    """sum_y kernel(x, y) f(y) w(y) over the polar grid of f, at points (..., n)."""
    pts = np.asarray(points, dtype=float)
    flat = pts.reshape(-1, f.n)
    ygrid = f.points.reshape(-1, f.n)
    wf = (f.weights * f.values).ravel()
    out = np.empty(len(flat), dtype=wf.dtype)
    step = max(1, (1 << 22) // max(1, len(ygrid)))
    for a in range(0, len(flat), step):
        K = kernel(flat[a:a + step, None, :], ygrid[None, :, :])
        out[a:a + step] = K @ wf
    return out.reshape(pts.shape[:-1])


def _spectral_on_field(spec, f, K_max):
    c = hermite_analyze(f, K_max=K_max)
    return apply_multiplier(spec, c).to_field(f.radial, f.sphere)


def hermite_semigroup(t, f, path="spectral", points=None, K_max=None):
    """e^{-tH} f.

    Coefficient input (HermiteCoefficients or PolarSpectrum): spectral only.
    PolarField input: "kernel" integrates against the Mehler kernel with
    the field's polar rule, "spectral" goes through Hermite coefficients.
    With ``points`` the kernel path returns values at those points instead.
    """
    if t <= 0:
        raise ValueError("t must be positive")
    if path not in ("spectral", "kernel"):
        raise ValueError("path must be 'spectral' or 'kernel'")
    if not isinstance(f, PolarField):
        if path != "spectral":
            raise ValueError("the kernel path needs a sampled field")
        return apply_multiplier(semigroup(t), f)
    if path == "spectral":
        return _spectral_on_field(semigroup(t), f, K_max)
    target = f.points if points is None else points
    vals = _kernel_apply(lambda x, y: mehler_kernel(t, x, y), f, target)
    return f.with_values(vals) if points is None else vals


def bochner_riesz(R, delta, f, path="spectral", points=None, K_max=None):
    """S_R^delta f with multiplier (1 - (2k+n)/R)_+^delta."""
    if R <= 0 or delta < 0:
        raise ValueError("need R > 0 and delta >= 0")
    if path not in ("spectral", "kernel"):
        raise ValueError("path must be 'spectral' or 'kernel'")
    spec = riesz_mean(R, delta)
    if not isinstance(f, PolarField):
        if path != "spectral":
            raise ValueError("the kernel path needs a sampled field")
        return apply_multiplier(spec, f)
    if path == "spectral":
        return _spectral_on_field(spec, f, K_max)
    target = f.points if points is None else points
    vals = _kernel_apply(lambda x, y: bochner_riesz_kernel(R, delta, x, y), f, target)
    return f.with_values(vals) if points is None else vals


def _measure_weights(rule, alpha):
    """Weights of ``rule`` converted to the measure r^{2 alpha + 1} dr."""
    p = radial_exponent(rule)
    return rule.weights * rule.nodes ** (2 * alpha + 1 - p)


def laguerre_semigroup(t, alpha, g, points=None):
    """T_t^alpha g(r) = int K_t^alpha(r, s) g(s) s^{2 alpha + 1} ds by quadrature.

    ``g`` may live on any radial rule; its weights are converted to the
    Laguerre measure. Returns a RadialProfile on g's nodes, or values at
    ``points`` when given.
    """
    if t <= 0:
        raise ValueError("t must be positive")
    s = g.rule.nodes
    r = s if points is None else np.asarray(points, dtype=float)
    K = laguerre_kernel(t, alpha, r[:, None], s[None, :])
    vals = K @ (_measure_weights(g.rule, alpha) * g.values)
    return g.with_values(vals) if points is None else vals


def component_operator(K0, m, g, rule=None, N=160):
    """T_m g(r) = omega_{n-2} int K_m(r, s) g(s) s^{n-1} ds.

    K_m is the Jacobi-weighted component kernel; omega_{n-2} is the area
    of S^{n-2}, the factor left over by the Funk-Hecke reduction.
    """
    n = K0.n
    if abs(radial_exponent(g.rule) - (n - 1)) > 1e-12:
        raise ValueError("profile must live on the r^{n-1} radial rule")
    r = g.rule.nodes
    Km = component_kernel(K0, m, n, r[:, None], r[None, :], rule=rule, N=N)
    return g.with_values(sphere_area(n - 1) * (Km @ (g.rule.weights * g.values)))


@dataclass(frozen=True)
class ComponentReport:
    truncation: float
    degrees: int
    jacobi_nodes: int


def apply_via_components(K0, f, basis, rule=None, N=160, return_report=False):
    """Tf = sum_{m,j} (T_m f_{m,j})(r) Y_{m,j}(w) on the field's grid.

    ``truncation`` in the report is the relative L^2 mass of f above
    degree M_max (as seen by the sphere rule).
    """
    n = K0.n
    if rule is None:
        rule = gauss_jacobi(N, n)
    d = decompose(f, basis)
    r = f.radial.nodes
    degrees = basis.degrees()
    Km = component_kernel(K0, list(range(basis.M_max + 1)), n,
                          r[:, None], r[None, :], rule=rule)   # (M+1, Nr, Nr)
    wf = f.radial.weights[:, None] * d.coeffs                   # (Nr, n_harm)
    out = np.empty_like(d.coeffs)
    for m in range(basis.M_max + 1):
        cols = np.flatnonzero(degrees == m)
        out[:, cols] = sphere_area(n - 1) * (Km[m] @ wf[:, cols])
    res = resynthesize(replace(d, coeffs=out), basis)
    if not return_report:
        return res
    total = f.l2_norm() ** 2
    kept = float(np.sum(f.radial.weights * d.shell_energy()))
    trunc = 1.0 - kept / total if total > 0 else 0.0
    return res, ComponentReport(trunc, basis.M_max, rule.order)


def heat_component_closed_form(t, m, g, points=None):
    """r^m T_t^{n/2+m-1}(s^{-m} g)(r): the Laguerre form of the heat component."""
    n = int(round(radial_exponent(g.rule))) + 1
    alpha = n / 2.0 + m - 1.0
    s = g.rule.nodes
    inner = g.with_values(g.values * s ** (-m))
    r = s if points is None else np.asarray(points, dtype=float)
    vals = r ** m * laguerre_semigroup(t, alpha, inner, points=r)
    return g.with_values(vals) if points is None else vals


def hecke_bochner_constant(n):
    """Gamma(1/2) Gamma((n-1)/2) 2^{n/2-1}."""
    return math.sqrt(math.pi) * math.gamma((n - 1) / 2.0) * 2 ** (n / 2.0 - 1)


__all__ = [
    "HermiteCoefficients", "PolarSpectrum", "MultiplierSpec", "ComponentReport",
    "multi_indices", "hermite_basis", "hermite_analyze", "analyze_polar", "polar_layout",
    "polar_radial_table", "imaginary_power", "riesz_mean", "semigroup", "tabulated",
    "multiplier_from_dict", "apply_multiplier", "check_multiplier_condition",
    "hermite_semigroup", "bochner_riesz", "laguerre_semigroup", "component_operator",
    "apply_via_components", "heat_component_closed_form", "hecke_bochner_constant",
    "default_K_max",
]
