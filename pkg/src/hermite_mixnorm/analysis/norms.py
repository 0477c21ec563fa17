"""Mixed L^{p,2} norms, radial weights, A_p constants and the maximal function
on (R+, r^{2 alpha + 1} dr)."""

from dataclasses import dataclass, field

import numpy as np

from ..fields import RadialProfile
from ..quadrature import radial_exponent


def _shell_l2_sq(f):
    """Shell integrals of |f|^2 / a^2 and the scale a = max |f| (avoids
    underflow and overflow of the squares)."""
    a = float(np.max(np.abs(f.values))) if f.values.size else 0.0
    if a == 0.0 or not np.isfinite(a):
        return f.sphere.integrate(np.abs(f.values) ** 2), 1.0
    return f.sphere.integrate(np.abs(f.values / a) ** 2), a


def mixed_norm(f, p):
    """(int_0^inf (int_S |f(r w)|^2 dw)^{p/2} r^{n-1} dr)^{1/p}."""
    if p < 1:
        raise ValueError("p must be at least 1")
    inner, a = _shell_l2_sq(f)
    return a * float(np.sum(f.radial.weights * inner ** (p / 2.0)) ** (1.0 / p))


def weighted_mixed_norm(f, p, w):
    """Mixed norm with outer measure w(r) r^{n-1} dr; w sampled on f's radial nodes."""
    if p < 1:
        raise ValueError("p must be at least 1")
    wv = w.on(f.radial.nodes)
    inner, a = _shell_l2_sq(f)
    return a * float(np.sum(f.radial.weights * wv * inner ** (p / 2.0)) ** (1.0 / p))


@dataclass(frozen=True)
class Weight:
    """A positive radial weight. ``fn`` gives exact values anywhere; a
    sampled weight is interpolated linearly between its nodes."""
    fn: object
    alpha: float
    label: str = "weight"
    cache: dict = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def from_samples(cls, r, values, alpha, label="sampled"):
        r = np.asarray(r, dtype=float)
        values = np.asarray(values, dtype=float)
        if np.any(values <= 0):
            raise ValueError("weights must be positive")
        return cls(lambda x: np.interp(x, r, values), alpha, label)

    @classmethod
    def power(cls, gamma, alpha):
        return cls(lambda x: np.asarray(x, dtype=float) ** gamma, alpha, f"r^{gamma:g}")

    def on(self, r):
        vals = np.asarray(self.fn(np.asarray(r, dtype=float)), dtype=float)
        if np.any(~(vals > 0)):
            raise ValueError("weight must be positive on every node")
        return vals

    def scaled(self, c):
        return Weight(lambda x: c * self.fn(x), self.alpha, f"{c:g}*{self.label}")


def interval_family(family, levels=12, top=4, per_octave=8, local_span=16.0):
    """Endpoint pairs (a, b) of the interval family.

    "dyadic": all pairs from {0} and the geometric grid 2^{-levels}..2^{top}
    with ``per_octave`` points per octave. "local": those of length <= 1,
    together with [a, a+l] for a on a grid of step 1/per_octave up to
    ``local_span`` and l geometric in (0, 1].
    """
    grid = np.concatenate([[0.0], 2.0 ** (np.arange(-levels * per_octave,
                                                     top * per_octave + 1) / per_octave)])
    i, j = np.triu_indices(len(grid), k=1)
    a, b = grid[i], grid[j]
    if family == "dyadic":
        return a, b
    if family != "local":
        raise ValueError("family must be 'dyadic' or 'local'")
    keep = b - a <= 1.0
    starts = np.arange(0.0, local_span, 1.0 / per_octave)
    lens = 2.0 ** (-np.arange(0, levels * per_octave + 1) / per_octave)
    A, L = np.meshgrid(starts, lens, indexing="ij")
    return np.concatenate([a[keep], A.ravel()]), np.concatenate([b[keep], (A + L).ravel()])


_LOG_SPAN = 60.0 * np.log(2.0)


def _interval_integrals(fn, a, b, alpha, N=64):
    """int_a^b fn(r) r^{2 alpha + 1} dr for arrays of intervals.

    Integrates in log r (exact-ish for power-like integrands); an interval
    starting at 0 is cut at b 2^{-60}.
    """
    x, w = np.polynomial.legendre.leggauss(N)
    lo = np.where(a > 0, a, b * np.exp(-_LOG_SPAN))
    la, lb = np.log(lo), np.log(b)
    s = 0.5 * (la + lb)[:, None] + 0.5 * (lb - la)[:, None] * x
    r = np.exp(s)
    vals = fn(r) * r ** (2 * alpha + 2)
    return 0.5 * (lb - la) * (vals @ w)


def ap_constant(w, p, alpha=None, family="dyadic", **family_kw):
    """sup over the family of (avg_Q w)(avg_Q w^{-1/(p-1)})^{p-1} for mu_alpha."""
    if p <= 1:
        raise ValueError("p must exceed 1")
    alpha = w.alpha if alpha is None else alpha
    key = (p, alpha, family, tuple(sorted(family_kw.items())))
    if key in w.cache:
        return w.cache[key]
    a, b = interval_family(family, **family_kw)
    mass = (b ** (2 * alpha + 2) - a ** (2 * alpha + 2)) / (2 * alpha + 2)
    avg_w = _interval_integrals(w.fn, a, b, alpha) / mass
    avg_d = _interval_integrals(lambda r: w.fn(r) ** (-1.0 / (p - 1)), a, b, alpha) / mass
    val = float(np.max(avg_w * avg_d ** (p - 1)))
    w.cache[key] = val
    return val


def _mu_weights(profile, alpha):
    rule = profile.rule
    return rule.weights * rule.nodes ** (2 * alpha + 1 - radial_exponent(rule))


def maximal_radii(levels=10, top=4, per_octave=4):
    return 2.0 ** (np.arange(-levels * per_octave, top * per_octave + 1) / per_octave)


def maximal_fn(h, alpha, radii=None):
    """Centered maximal function on (R+, mu_alpha) over the nodes of h's rule.

    Balls B(r_i, rho) are the node sets with |r_l - r_i| <= rho; rho runs
    over ``radii`` (default geometric 2^{-10}..2^4) plus rho = 0. With
    radii="all" every inter-node distance is used, which is the exact
    discrete supremum.
    """
    r = h.rule.nodes
    mu = _mu_weights(h, alpha)
    vals = np.abs(h.values)
    cw = np.concatenate([[0.0], np.cumsum(mu)])
    cf = np.concatenate([[0.0], np.cumsum(mu * vals)])
    if isinstance(radii, str) and radii == "all":
        radii = np.unique(np.abs(r[:, None] - r[None, :]))
    elif radii is None:
        radii = maximal_radii()
    radii = np.concatenate([[0.0], np.asarray(radii, dtype=float)])
    best = vals.copy()
    for rho in radii:
        lo = np.searchsorted(r, r - rho * (1 + 1e-12), side="left")
        hi = np.searchsorted(r, r + rho * (1 + 1e-12), side="right")
        avg = (cf[hi] - cf[lo]) / (cw[hi] - cw[lo])
        best = np.maximum(best, avg)
    return RadialProfile(h.rule, best, alpha)


def a1_weight(v, alpha, q_prime=None, s=None):
    """u = (M_alpha v^s)^{1/s}, an A_1 weight for 1 < s; default s = (1 + q')/2."""
    if s is None:
        if q_prime is None:
            raise ValueError("give s or q_prime")
        s = 0.5 * (1.0 + q_prime)
    if s <= 1:
        raise ValueError("s must exceed 1")
    Mv = maximal_fn(v.with_values(np.abs(v.values) ** s), alpha)
    u = Mv.values ** (1.0 / s)
    return Weight.from_samples(v.rule.nodes, u, alpha, f"a1(s={s:g})"), s
