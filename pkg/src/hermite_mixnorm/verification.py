"""Verification suites. Each suite returns a list of check records

    {id, paper_ref, params, observed, bound_or_reference, tolerance, pass}

with deterministic content for a given configuration (no timings).
``paper_ref`` holds a short descriptive anchor of the identity checked.
"""

import math
from dataclasses import asdict, dataclass

import numpy as np

from .analysis import (conjecture_window, default_trials, g_constant, g_k, g_norm, g_on_grid,
                       aux_integral_sweep, maximal_domination, mixed_norm, operator_norm_probe,
                       uniformity_spread, verify_cz_estimates)
from .fields import PolarField, RadialProfile
from .harmonics import (build_basis, exponential_coefficient, exponential_coefficient_bessel,
                        real_harmonics, verify_funk_hecke)
from .kernels import (bochner_riesz_K0, bochner_riesz_kernel, heat_K0, mehler_generating,
                      mehler_kernel, projection_kernel, projection_kernels)
from .operators import (PolarSpectrum, apply_multiplier, apply_via_components, bochner_riesz,
                        check_multiplier_condition, default_K_max, hecke_bochner_constant,
                        heat_component_closed_form, hermite_semigroup, polar_radial_table,
                        riesz_mean)
from .quadrature import DEFAULT_R_MAX, radial_rule, sphere_rule

REPORT_VERSION = "1.0"
SUITES = ("mehler", "lemma31", "hecke-bochner", "funk-hecke", "gfun-l2", "cz", "projection")


@dataclass
class RunConfig:
    """Run parameters. Grid sizes default to desk scale; the sphere order
    defaults to 2 M_max so products of harmonics integrate exactly."""
    n: int = 2
    seed: int = 0
    radial_N: int = 200
    R_max: float = DEFAULT_R_MAX
    sphere_order: int = None
    M_max: int = 24
    K_max: int = None
    m_max: int = 4
    tol: float = None

    def __post_init__(self):
        if self.n not in (2, 3):
            raise ValueError("n must be 2 or 3")
        if self.K_max is None:
            self.K_max = default_K_max(self.n)
        if self.sphere_order is None:
            self.sphere_order = 2 * self.M_max
        if (self.radial_N < 16 or self.M_max < 1 or self.K_max < 1 or self.m_max < 0
                or self.sphere_order < self.M_max or self.R_max <= 0):
            raise ValueError("grid sizes are below the minimal values")
        if self.tol is not None and not self.tol > 0:
            raise ValueError("tol must be positive")

    def echo(self):
        return asdict(self)

    def tolerance(self, default):
        return default if self.tol is None else self.tol

    def grid(self):
        rad = radial_rule(self.radial_N, n=self.n, R_max=self.R_max)
        return rad, build_basis(self.n, self.M_max, sphere_rule(self.n, self.sphere_order))


def check(cid, ref, params, observed, reference, tolerance, passed):
    return {"id": cid, "paper_ref": ref, "params": params, "observed": observed,
            "bound_or_reference": reference, "tolerance": tolerance, "pass": bool(passed)}


# -- mehler ---------------------------------------------------------------------

def suite_mehler(cfg):
    rng = np.random.default_rng(cfg.seed)
    n = cfg.n
    tol = cfg.tolerance(1e-12)
    x = rng.uniform(-3, 3, (1000, n))
    y = rng.uniform(-3, 3, (1000, n))
    t = rng.uniform(0.05, 3.0, 1000)
    a = np.array([mehler_kernel(ti, xi, yi, "A") for ti, xi, yi in zip(t, x, y)])
    b = np.array([mehler_kernel(ti, xi, yi, "B") for ti, xi, yi in zip(t, x, y)])
    err = float(np.max(np.abs(a - b) / np.abs(a)))
    out = [check("mehler.factorization", "Mehler kernel factorized form", {"n": n, "samples": 1000},
                 err, 0.0, tol, err < tol)]
    ts = np.array([0.3, 0.7, 1.5])
    gen = mehler_generating(np.exp(-2 * ts), x[:50], y[:50])
    direct = np.stack([mehler_kernel(ti, x[:50], y[:50]) for ti in ts], axis=-1)
    err2 = float(np.max(np.abs(np.real(gen) * np.exp(-n * ts) - direct) / np.abs(direct)))
    out.append(check("mehler.generating", "Mehler formula for the generating function",
                     {"n": n, "t": ts.tolist()}, err2, 0.0, tol, err2 < tol))
    return out


# -- lemma31 --------------------------------------------------------------------

def suite_lemma31(cfg):
    tol = cfg.tolerance(1e-8)
    n = cfg.n
    worst, at = 0.0, None
    for m in range(11):
        for z in np.linspace(0.1, 20.0, 40):
            q = exponential_coefficient(z, m, n)
            b = exponential_coefficient_bessel(z, m, n)
            e = abs(q / b - 1.0)
            if e > worst:
                worst, at = e, [float(z), m]
    return [check("lemma31.bessel", "exponential Funk-Hecke coefficient as a Bessel function",
                  {"n": n, "z": [0.1, 20.0], "m_max": 10, "at": at}, worst, 0.0, tol, worst < tol)]


# -- hecke-bochner --------------------------------------------------------------

def _harmonic_column(n, m):
    return m * m if n == 3 else (2 * m - 1 if m else 0)


def hecke_bochner_checks(n, m_max, ts=(0.2, 0.5, 1.0), seed=0, tol=1e-6, const_tol=1e-6):
    """e^{-tH}(g Y_{m,1}) by direct quadrature against the Mehler kernel, compared
    with r^m Y T_t^{n/2+m-1}(s^{-m} g). The fitted constant is reported next to
    Gamma(1/2) Gamma((n-1)/2) 2^{n/2-1}."""
    rng = np.random.default_rng(seed)
    order = 40 if n == 2 else 36
    rad = radial_rule(64 if n == 2 else 56, n=n, R_max=10.0)
    sph = sphere_rule(n, order)
    cn = hecke_bochner_constant(n)
    pts = rng.standard_normal((40, n)) * 1.5
    r = np.linalg.norm(pts, axis=1)
    Yp = real_harmonics(n, m_max, pts / r[:, None])
    out, fitted = [], []
    for m in range(m_max + 1):
        col = _harmonic_column(n, m)

        def g(s, m=m):
            return np.exp(-(s - 1.5) ** 2) * s ** m
        Ys = real_harmonics(n, m_max, sph.nodes)[:, col]
        F = PolarField(n, rad, sph, np.outer(g(rad.nodes), Ys))
        prof = RadialProfile(rad, g(rad.nodes), n / 2.0 - 1.0)
        for t in ts:
            lhs = hermite_semigroup(t, F, "kernel", points=pts)
            rhs = heat_component_closed_form(t, m, prof, points=r) * Yp[:, col]
            c = float(lhs @ rhs / (rhs @ rhs))
            err = float(np.linalg.norm(lhs - rhs) / np.linalg.norm(lhs))
            fitted.append(c)
            out.append(check(f"hecke-bochner.identity.m{m}.t{t:g}",
                             "heat semigroup on g(r)Y reduces to the Laguerre semigroup",
                             {"n": n, "m": m, "t": t}, err, 0.0, tol, err < tol))
    spread = max(abs(c - 1.0) for c in fitted)
    out.append(check("hecke-bochner.constant", "Hecke-Bochner constant (reported against c_n)",
                     {"n": n, "c_n": cn, "fitted_mean": float(np.mean(fitted)),
                      "fitted_max_dev_from_1": spread,
                      "fitted_vs_c_n": abs(float(np.mean(fitted)) - cn)},
                     float(np.mean(fitted)), 1.0, const_tol, spread < const_tol))
    return out


def suite_hecke_bochner(cfg):
    return hecke_bochner_checks(cfg.n, cfg.m_max, seed=cfg.seed, tol=cfg.tolerance(1e-6))


# -- funk-hecke and the component pipeline ---------------------------------------

def pipeline_setup(n, seed):
    """Band-limited test field and grid for the component pipeline."""
    if n == 2:
        rad, sph, M, K = radial_rule(90, n=2, R_max=12.0), sphere_rule(2, 24), 12, 20
    else:
        rad, sph, M, K = radial_rule(64, n=3, R_max=10.0), sphere_rule(3, 24), 8, 12
    basis = build_basis(n, M, sph)
    f = PolarSpectrum.random(n, M, K, np.random.default_rng(seed), decay=0.05)
    return rad, basis, f


def pipeline_checks(n, seed=0, tol=1e-6, parseval_tol=1e-7, n_points=120):
    rad, basis, spec = pipeline_setup(n, seed)
    F = spec.synthesize(rad, basis)
    rng = np.random.default_rng(seed + 1)
    flat = rng.choice(F.values.size, n_points, replace=False)
    ir, js = np.unravel_index(flat, F.values.shape)
    pts = rad.nodes[ir, None] * basis.rule.nodes[js]
    R = 12.0 if n == 3 else 20.0
    out = []
    for name, K0, direct in [
        ("heat", heat_K0(0.5, n), lambda: hermite_semigroup(0.5, F, "kernel", points=pts)),
        ("bochner-riesz", bochner_riesz_K0(R, 1.0, n),
         lambda: bochner_riesz(R, 1.0, F, "kernel", points=pts)),
    ]:
        res, rep = apply_via_components(K0, F, basis, return_report=True)
        ref = direct()
        err = float(np.max(np.abs(res.values[ir, js] - ref)) / np.max(np.abs(ref)))
        out.append(check(f"funk-hecke.pipeline.{name}",
                         "operator as a sum of radial component operators",
                         {"n": n, "M_max": basis.M_max, "truncation": rep.truncation},
                         err, 0.0, tol, err < tol))
        shell = res.sphere.integrate(res.values ** 2)
        comp = np.sum(analyze_shell(res, basis) ** 2, axis=1)
        perr = float(np.max(np.abs(shell - comp)) / np.max(shell))
        out.append(check(f"funk-hecke.parseval.{name}", "shell Parseval identity",
                         {"n": n}, perr, 0.0, parseval_tol, perr < parseval_tol))
    return out


def analyze_shell(field_, basis):
    return (field_.values * basis.rule.weights) @ basis.table


def suite_funk_hecke(cfg):
    n = cfg.n
    tol = cfg.tolerance(1e-10)
    basis = build_basis(n, 16, sphere_rule(n, 40))
    out = []
    for name, F in [("exp3", lambda u: np.exp(3 * u)), ("linear", lambda u: u),
                    ("gauss", lambda u: np.exp(-2 * (1 - u)))]:
        res = verify_funk_hecke(F, basis, seed=cfg.seed)
        out.append(check(f"funk-hecke.identity.{name}", "Funk-Hecke formula",
                         {"n": n, "M_max": 16}, res["max_residual"], 0.0, tol,
                         res["max_residual"] < tol))
    return out + pipeline_checks(n, cfg.seed)


# -- g-functions ----------------------------------------------------------------

def gfun_l2_checks(cfg, trials=50, ks=(1, 2), tol=1e-7):
    rad, basis = cfg.grid()
    n = cfg.n
    rng = np.random.default_rng(cfg.seed)
    out = []
    for k in ks:
        const = g_constant(k)
        dev_s = dev_t = agree = 0.0
        for _ in range(trials):
            f = PolarSpectrum.random(n, cfg.M_max, cfg.K_max, rng)
            gs = g_norm(f, k, rad, basis) / f.norm()
            gt = g_norm(f, k, rad, basis, "temporal") / f.norm()
            dev_s, dev_t = max(dev_s, abs(gs - const)), max(dev_t, abs(gt - const))
            idx = rng.choice(rad.order, 8, replace=False)
            pts = rad.nodes[idx, None, None] * basis.rule.nodes[None, :, :]
            a = g_k(f, k, "spectral", pts).values
            b = g_k(f, k, "temporal", pts).values
            agree = max(agree, float(np.max(np.abs(a - b)) / np.max(a)))
        out.append(check(f"gfun-l2.identity.k{k}", "L^2 identity for g_k",
                         {"n": n, "k": k, "trials": trials, "path": "spectral"},
                         const + dev_s, const, tol, dev_s < tol))
        out.append(check(f"gfun-l2.temporal.k{k}", "L^2 identity for g_k",
                         {"n": n, "k": k, "trials": trials, "path": "temporal"},
                         const + dev_t, const, tol, dev_t < tol))
        out.append(check(f"gfun-l2.paths.k{k}", "g_k via closed form vs time quadrature",
                         {"n": n, "k": k}, agree, 0.0, tol, agree < tol))
    return out


def suite_gfun_l2(cfg):
    return gfun_l2_checks(cfg, tol=cfg.tolerance(1e-7))


# -- Calderon-Zygmund estimates ---------------------------------------------------

def cz_checks(n, spread_tol=1.2, sweep_tol=0.05):
    rep = verify_cz_estimates(list(range(13)), 1, n)
    si, sii = uniformity_spread(rep)
    out = [
        check("cz.bound-i.finite", "uniform temporal L^2 bound for the component kernels",
              {"n": n, "k": 1, "m": [0, 12]}, rep["sup_i"], "finite", None,
              math.isfinite(rep["sup_i"])),
        check("cz.bound-ii.finite", "uniform gradient bound for the component kernels",
              {"n": n, "k": 1, "m": [0, 12]}, rep["sup_ii"], "finite", None,
              math.isfinite(rep["sup_ii"])),
        check("cz.bound-i.uniform", "constants independent of m",
              {"n": n, "m": [4, 12], "per_m": [p["sup_i"] for p in rep["per_m"]]},
              si, spread_tol, None, si < spread_tol),
        check("cz.bound-ii.uniform", "constants independent of m",
              {"n": n, "m": [4, 12], "per_m": [p["sup_ii"] for p in rep["per_m"]]},
              sii, spread_tol, None, sii < spread_tol),
    ]
    coarse = aux_integral_sweep()
    fine = aux_integral_sweep(20, 24)
    closed = aux_integral_sweep(method="closed")
    change = abs(fine["sup_ratio"] - coarse["sup_ratio"]) / coarse["sup_ratio"]
    out.append(check("cz.aux-integral.refinement", "auxiliary integral bound, sup over the grid",
                     {"coarse": coarse["sup_ratio"], "fine": fine["sup_ratio"],
                      "closed_form": closed["sup_ratio"]},
                     change, sweep_tol, None, math.isfinite(fine["sup_ratio"])
                     and change < sweep_tol))
    return out


def suite_cz(cfg):
    return cz_checks(cfg.n)


# -- projections ----------------------------------------------------------------

def projection_checks(seed=0, tol=1e-8, rot_tol=1e-10):
    rng = np.random.default_rng(seed)
    x = rng.uniform(-2, 2, (200, 2))
    y = rng.uniform(-2, 2, (200, 2))
    direct = projection_kernels(8, x, y)
    diag_x = projection_kernels(8, x, x)
    diag_y = projection_kernels(8, y, y)
    worst = 0.0
    for k in range(9):
        c = projection_kernel(k, x, y, "contour")
        scale = np.sqrt(diag_x[k] * diag_y[k])
        worst = max(worst, float(np.max(np.abs(c - direct[k]) / scale)))
    out = [check("projection.contour", "projection kernels from the generating function",
                 {"n": 2, "k_max": 8}, worst, 0.0, tol, worst < tol)]
    th = rng.uniform(0, 2 * np.pi, 20)
    rot_err = 0.0
    for R, delta in [(12.0, 1.0), (20.0, 0.0), (30.0, 0.5)]:
        base = bochner_riesz_kernel(R, delta, x[:20], y[:20])
        for a in th[:5]:
            Q = np.array([[np.cos(a), -np.sin(a)], [np.sin(a), np.cos(a)]])
            rot = bochner_riesz_kernel(R, delta, x[:20] @ Q.T, y[:20] @ Q.T)
            rot_err = max(rot_err, float(np.max(np.abs(rot - base))))
    out.append(check("projection.rotation", "rotation invariance of the Riesz kernel",
                     {"n": 2}, rot_err, 0.0, rot_tol, rot_err < rot_tol))
    return out


def suite_projection(cfg):
    return projection_checks(cfg.seed, tol=cfg.tolerance(1e-8))


SUITE_FUNCS = {
    "mehler": suite_mehler,
    "lemma31": suite_lemma31,
    "hecke-bochner": suite_hecke_bochner,
    "funk-hecke": suite_funk_hecke,
    "gfun-l2": suite_gfun_l2,
    "cz": suite_cz,
    "projection": suite_projection,
}


def run_suite(name, cfg):
    names = SUITES if name == "all" else (name,)
    checks = []
    for s in names:
        checks.extend(SUITE_FUNCS[s](cfg))
    return sorted(checks, key=lambda c: c["id"])


def domination_battery(n=2, m_max=8, seed=0, k=2, n_f=2):
    """Ratios of the g* / maximal-function inequality per degree m."""
    rr = radial_rule(80, n=n, R_max=12.0)
    rng = np.random.default_rng(seed)
    r = rr.nodes
    hs = [RadialProfile(rr, np.ones_like(r), n / 2 - 1),
          RadialProfile(rr, ((r > 1) & (r < 2)) + 1e-3, n / 2 - 1),
          RadialProfile(rr, np.exp(-(r - 3) ** 2), n / 2 - 1),
          RadialProfile(rr, r ** -0.5, n / 2 - 1)]
    per_m = {}
    for m in range(m_max + 1):
        j = np.arange(6)
        B = polar_radial_table(n, np.full(6, m), j, r)
        fs = [RadialProfile(rr, rng.standard_normal(6) @ B, n / 2 - 1) for _ in range(n_f)]
        per_m[m] = maximal_domination(fs, hs, m, k, K_max=m + 12).tolist()
    return per_m


# -- experiments ----------------------------------------------------------------

RIESZ_COLUMNS = ("n", "delta", "p", "R", "norm_lower_bound", "trial_id_of_max")


def validate_ranges(n, deltas, ps, Rs):
    if not deltas or not ps or not Rs:
        raise ValueError("delta, p and R lists must be nonempty")
    if min(deltas) < 0:
        raise ValueError("delta must be nonnegative")
    if min(ps) < 1:
        raise ValueError("p must be at least 1")
    if min(Rs) <= n:
        raise ValueError(f"R must exceed the bottom eigenvalue {n}")


def riesz_scan_rows(cfg, deltas, ps, Rs):
    """Rows for the Riesz-means scan: two window rows per delta (the open
    p-interval of the conjecture, trial_id_of_max = window-lower/-upper)
    followed by one probe row per (delta, p, R)."""
    validate_ranges(cfg.n, deltas, ps, Rs)
    rad, basis = cfg.grid()
    rows = []
    for delta in deltas:
        lo, hi = conjecture_window(cfg.n, delta)
        rows.append([cfg.n, delta, lo, "", "", "window-lower"])
        rows.append([cfg.n, delta, hi, "", "", "window-upper"])
        for R in Rs:
            trials = default_trials(cfg.n, cfg.M_max, cfg.K_max, rad, basis, seed=cfg.seed, R=R)
            op = riesz_mean(R, delta)
            for p in ps:
                res = operator_norm_probe(lambda f: apply_multiplier(op, f), p, trials, rad, basis)
                rows.append([cfg.n, delta, p, R, res.lower_bound, res.argmax])
    return rows


def level_sup(spec, n, K_max):
    return float(np.max(np.abs(spec.at_levels(np.arange(K_max + 1), n))))


def multiplier_report(cfg, spec, ps, K_scan=10_000):
    """Condition constants C_j and L^{p,2} probe ratios for phi(H).

    Returns (condition checks, probe checks, probe rows)."""
    cond = check_multiplier_condition(spec, cfg.n, K_scan)
    cond_checks = []
    for j, (c, h, ok) in enumerate(zip(cond["constants"], cond["constants_half_scan"],
                                       cond["ok"])):
        cond_checks.append(check(f"multiplier.condition.j{j}",
                                 "difference condition on the multiplier",
                                 {"n": cfg.n, "j": j, "K_scan": cond["K_scan"],
                                  "half_scan": h, "growth_tol": 1.25},
                                 c, "bounded in the scan length", None, ok))
    rad, basis = cfg.grid()
    trials = default_trials(cfg.n, cfg.M_max, cfg.K_max, rad, basis, seed=cfg.seed)
    sup = level_sup(spec, cfg.n, cfg.K_max)
    tol = cfg.tolerance(1e-10)
    probe_checks, rows = [], []
    for p in ps:
        res = operator_norm_probe(lambda f: apply_multiplier(spec, f), p, trials, rad, basis)
        for tid in sorted(res.ratios):
            rows.append([spec.name, p, tid, res.ratios[tid]])
        if p == 2:
            probe_checks.append(check("multiplier.probe.p2", "spectral bound at p = 2",
                                      {"n": cfg.n, "argmax": res.argmax}, res.lower_bound,
                                      sup, tol, res.lower_bound <= sup + tol))
        else:
            probe_checks.append(check(f"multiplier.probe.p{p:g}", "mixed-norm estimate",
                                      {"n": cfg.n, "argmax": res.argmax}, res.lower_bound,
                                      "lower bound only", None, math.isfinite(res.lower_bound)))
    return cond_checks, probe_checks, rows


def gfun_report(cfg, ks, ps, trials=50):
    """||g_k f||_2 / ||f||_2 against 2^{-k} Gamma(2k)^{1/2}, and the bracket
    [min, max] of ||g_k f||_{p,2} / ||f||_{p,2} over random f for p != 2."""
    rad, basis = cfg.grid()
    tol = cfg.tolerance(1e-7)
    out = []
    for k in ks:
        rng = np.random.default_rng(cfg.seed)
        fs = [PolarSpectrum.random(cfg.n, cfg.M_max, cfg.K_max, rng) for _ in range(trials)]
        const = g_constant(k)
        ratios = [g_norm(f, k, rad, basis) / f.norm() for f in fs]
        dev = max(abs(r - const) for r in ratios)
        out.append(check(f"gfun.l2.k{k}", "L^2 identity for g_k",
                         {"n": cfg.n, "k": k, "trials": trials,
                          "min": min(ratios), "max": max(ratios)},
                         ratios[int(np.argmax([abs(r - const) for r in ratios]))],
                         const, tol, dev < tol))
        for p in ps:
            if p == 2:
                continue
            br = []
            for f in fs:
                F = f.synthesize(rad, basis)
                G = PolarField(cfg.n, rad, basis.rule, g_on_grid(f, k, rad, basis).values)
                br.append(mixed_norm(G, p) / mixed_norm(F, p))
            out.append(check(f"gfun.bracket.k{k}.p{p:g}", "two-sided mixed-norm g_k estimate",
                             {"n": cfg.n, "k": k, "p": p, "trials": trials},
                             [min(br), max(br)], "c1 > 0", None, min(br) > 0))
    return sorted(out, key=lambda c: c["id"])


__all__ = ["RunConfig", "SUITES", "run_suite", "check", "hecke_bochner_checks",
           "pipeline_checks", "gfun_l2_checks", "cz_checks", "projection_checks",
           "domination_battery", "REPORT_VERSION", "RIESZ_COLUMNS", "validate_ranges",
           "riesz_scan_rows", "multiplier_report", "gfun_report", "level_sup"]
