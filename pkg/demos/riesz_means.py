"""Lower bounds for the mixed-norm size of Bochner-Riesz means S_R^delta.

For delta above the critical index (n-1)/2 the probes stay flat in R.
At delta = 0 the interesting p lie in the conjectured window.
"""

from hermite_mixnorm.analysis import conjecture_window
from hermite_mixnorm.verification import RunConfig, riesz_scan_rows

cfg = RunConfig(n=2, radial_N=120, M_max=12, K_max=24)
Rs = [4.0, 16.0, 64.0]
for delta in (1.0, 0.0):
    lo, hi = conjecture_window(cfg.n, delta)
    print(f"delta = {delta}: window ({lo:.4f}, {hi})")
    for row in riesz_scan_rows(cfg, [delta], [1.5, 2.0, 4.0], Rs):
        if row[3] != "":
            print(f"  p = {row[2]:<4} R = {row[3]:<5} ratio >= {row[4]:.6f}  ({row[5]})")
