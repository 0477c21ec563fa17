"""Heat semigroup on g(r) Y_m(w) against its radial reduction.

Runs e^{-tH} on g(r) Y_m by quadrature against the Mehler kernel and
compares with r^m Y_m T_t^{n/2+m-1}(r^{-m} g) for a few degrees.
"""

import numpy as np

from hermite_mixnorm.fields import PolarField, RadialProfile
from hermite_mixnorm.harmonics import real_harmonics
from hermite_mixnorm.operators import heat_component_closed_form, hermite_semigroup
from hermite_mixnorm.quadrature import radial_rule, sphere_rule

n, t = 2, 0.5
rad = radial_rule(64, n=n, R_max=10.0)
sph = sphere_rule(n, 40)
pts = np.random.default_rng(0).standard_normal((8, n))
r = np.linalg.norm(pts, axis=1)

print(" m   max |direct - reduced|   max |direct|")
for m in range(5):
    col = 0 if m == 0 else 2 * m - 1
    g = np.exp(-(rad.nodes - 1.5) ** 2) * rad.nodes ** m
    F = PolarField(n, rad, sph, np.outer(g, real_harmonics(n, m, sph.nodes)[:, col]))
    direct = hermite_semigroup(t, F, "kernel", points=pts)
    reduced = heat_component_closed_form(t, m, RadialProfile(rad, g, n / 2 - 1), points=r)
    reduced = reduced * real_harmonics(n, m, pts / r[:, None])[:, col]
    print(f"{m:2d}   {np.max(np.abs(direct - reduced)):.3e}              "
          f"{np.max(np.abs(direct)):.3e}")
