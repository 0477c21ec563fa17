"""g_k on random band-limited functions.

The L^2 ratio is the constant 2^{-k} Gamma(2k)^{1/2}; away from p = 2 the
ratio moves but stays bounded above and below.
"""

import numpy as np

from hermite_mixnorm.analysis import g_constant, g_norm, g_on_grid, mixed_norm
from hermite_mixnorm.fields import PolarField
from hermite_mixnorm.operators import PolarSpectrum
from hermite_mixnorm.verification import RunConfig

cfg = RunConfig(n=2, radial_N=120, M_max=12, K_max=24)
rad, basis = cfg.grid()
rng = np.random.default_rng(3)
fs = [PolarSpectrum.random(2, cfg.M_max, cfg.K_max, rng) for _ in range(10)]

for k in (1, 2):
    l2 = [g_norm(f, k, rad, basis) / f.norm() for f in fs]
    print(f"k = {k}: L2 ratio in [{min(l2):.10f}, {max(l2):.10f}], "
          f"expected {g_constant(k):.10f}")
    for p in (1.5, 3.0, 6.0):
        ratios = []
        for f in fs:
            G = PolarField(2, rad, basis.rule, g_on_grid(f, k, rad, basis).values)
            ratios.append(mixed_norm(G, p) / mixed_norm(f.synthesize(rad, basis), p))
        print(f"   p = {p}: [{min(ratios):.4f}, {max(ratios):.4f}]")
