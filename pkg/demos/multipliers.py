"""Imaginary powers H^{i tau}: difference condition and probe ratios."""

from hermite_mixnorm.operators import check_multiplier_condition, imaginary_power
from hermite_mixnorm.verification import RunConfig, multiplier_report

cfg = RunConfig(n=2, radial_N=120, M_max=12, K_max=24)
for tau in (0.5, 1.0, 4.0):
    spec = imaginary_power(tau)
    cond = check_multiplier_condition(spec, cfg.n, j_max=4)
    consts = ", ".join(f"{c:.3g}" for c in cond["constants"])
    _, probes, _ = multiplier_report(cfg, spec, [1.5, 2.0, 4.0], K_scan=2000)
    ratios = ", ".join(f"p={c['id'].rsplit('.p', 1)[1]}: {c['observed']:.4f}" for c in probes)
    print(f"tau = {tau}: C_0..C_4 = [{consts}]  pass={cond['pass']}")
    print(f"   probes {ratios}")
