"""Randomized lower bounds for mixed-norm operator norms.

A probe evaluates ||T f|| / ||f|| in L^{p,2} over a fixed trial set and
keeps the largest ratio. This is a lower bound for the operator norm and
nothing more.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from ..fields import PolarField
from ..operators import PolarSpectrum, analyze_polar
from .norms import mixed_norm


@dataclass(frozen=True)
class Trial:
    id: str
    spectrum: PolarSpectrum


@dataclass(frozen=True)
class ProbeResult:
    p: float
    lower_bound: float
    argmax: str
    ratios: dict = field(repr=False)


def _bump_trial(tid, n, r0, width, m, radial, basis, K_max):
    col = basis.index.index((m, 1))

    def fn(pts):
        r = np.linalg.norm(pts, axis=-1)
        return np.exp(-0.5 * ((r - r0) / width) ** 2)
    prof = fn(radial.nodes[:, None] * np.eye(n)[0])                     # (Nr,)
    vals = np.outer(prof, basis.table[:, col])
    spec = analyze_polar(PolarField(n, radial, basis.rule, vals), basis, K_max)
    return Trial(tid, spec.with_coeffs(spec.coeffs / spec.norm()))


def default_trials(n, M_max, K_max, radial, basis, seed=0, R=None, n_random=6):
    """Random spectra, single polar modes and bumps near r = 0, 1, sqrt(R)."""
    rng = np.random.default_rng(seed)
    trials = []
    for i in range(n_random):
        decay = 0.0 if i % 2 == 0 else 0.1
        trials.append(Trial(f"random-{i}", PolarSpectrum.random(n, M_max, K_max, rng, decay)))
    zero = PolarSpectrum.zeros(n, M_max, K_max)
    for m, k in [(0, 0), (0, K_max // 4), (2, 1), (min(5, M_max), 3), (min(M_max, 8), 0)]:
        if 2 * k + m <= K_max:
            trials.append(Trial(f"mode-m{m}-k{k}", zero.set(m, 1, k, 1.0)))
    centers = [0.0, 1.0] + ([math.sqrt(R)] if R is not None else [])
    for r0 in centers:
        for m in (0, min(2, M_max)):
            trials.append(_bump_trial(f"bump-r{r0:.3g}-m{m}", n, r0, 0.35, m,
                                      radial, basis, K_max))
    return trials


def operator_norm_probe(apply, p, trials, radial=None, basis=None):
    """max over trials of mixed_norm(apply(f), p) / mixed_norm(f, p).

    ``apply`` maps a PolarSpectrum to a PolarSpectrum or a PolarField.
    Trials may be Trial objects, PolarSpectrum or PolarField instances.
    """
    if not trials:
        raise ValueError("trial set is empty")
    ratios = {}
    for i, tr in enumerate(trials):
        tid = tr.id if isinstance(tr, Trial) else f"trial-{i}"
        f = tr.spectrum if isinstance(tr, Trial) else tr
        out = apply(f)
        f_field = f if isinstance(f, PolarField) else f.synthesize(radial, basis)
        o_field = out if isinstance(out, PolarField) else out.synthesize(radial, basis)
        den = mixed_norm(f_field, p)
        ratios[tid] = mixed_norm(o_field, p) / den if den > 0 else 0.0
    best = max(ratios, key=lambda k: (ratios[k], k))
    return ProbeResult(p, ratios[best], best, ratios)


def conjecture_window(n, delta):
    """Open p-interval (2n/(n+1+2 delta), 2n/(n-1-2 delta)); upper end inf when
    delta >= (n-1)/2."""
    lo = 2.0 * n / (n + 1 + 2 * delta)
    den = n - 1 - 2 * delta
    hi = 2.0 * n / den if den > 0 else math.inf
    return lo, hi
