import math

import numpy as np
import pytest
from scipy.special import gamma

from hermite_mixnorm.analysis import (Trial, Weight, a1_weight, ap_constant, aux_integral,
                                      aux_integral_closed_form, aux_integral_sweep,
                                      conjecture_window, default_trials, g_constant, g_k,
                                      g_k_component, g_norm, g_on_grid, g_star, g_star_component,
                                      heat_dt_decay_check, maximal_domination, maximal_fn,
                                      mixed_norm, operator_norm_probe, uniformity_spread,
                                      verify_cz_estimates, weighted_mixed_norm)
from hermite_mixnorm.fields import PolarField, RadialProfile
from hermite_mixnorm.operators import (HermiteCoefficients, PolarSpectrum, apply_multiplier,
                                       hermite_analyze, polar_radial_table, semigroup)
from hermite_mixnorm.quadrature import radial_rule, sphere_area


# -- mixed norms ---------------------------------------------------------------

def test_mixed_norm_p2_is_l2(grid2, rng):
    rad, basis = grid2
    F = PolarSpectrum.random(2, 6, 10, rng).synthesize(rad, basis)
    assert mixed_norm(F, 2) == pytest.approx(F.l2_norm(), rel=1e-12)


@pytest.mark.parametrize("p", [1.0, 1.5, 3.0, 4.0])
def test_mixed_norm_radial(grid2, p):
    rad, basis = grid2
    F = PolarField.from_function(lambda x: np.exp(-np.sum(x ** 2, -1)), 2, rad, basis.rule)
    # int e^{-p r^2} r dr = 1/(2p)
    want = math.sqrt(sphere_area(2)) * (1 / (2 * p)) ** (1 / p)
    assert mixed_norm(F, p) == pytest.approx(want, rel=1e-10)


def test_mixed_norm_single_harmonic(grid3):
    rad, basis = grid3
    g = rad.nodes ** 2 * np.exp(-rad.nodes ** 2)
    F = PolarField(3, rad, basis.rule, np.outer(g, basis.table[:, basis.position(2, 3)]))
    p = 3.0
    want = np.sum(rad.weights * np.abs(g) ** p) ** (1 / p)
    assert mixed_norm(F, p) == pytest.approx(want, rel=1e-10)


def test_weighted_norm(grid2):
    rad, basis = grid2
    F = PolarField.from_function(lambda x: np.exp(-np.sum(x ** 2, -1)), 2, rad, basis.rule)
    one = Weight(lambda r: np.ones_like(r), 0.0)
    assert weighted_mixed_norm(F, 3, one) == pytest.approx(mixed_norm(F, 3), rel=1e-14)


def test_weighted_norm_power_weight():
    from hermite_mixnorm.harmonics import build_basis
    from hermite_mixnorm.quadrature import sphere_rule
    R, gam, p, a = 2.0, 1.5, 3.0, 0.5
    rad = radial_rule(60, n=2, R_max=R)
    basis = build_basis(2, 2, sphere_rule(2, 4))
    F = PolarField.from_function(lambda x: np.linalg.norm(x, axis=-1) ** a, 2, rad, basis.rule)
    # int_0^R r^{gam + a p + 1} dr on top of the angular factor (2 pi)^{p/2}
    e = gam + a * p + 1
    want = ((2 * math.pi) ** (p / 2) * R ** (e + 1) / (e + 1)) ** (1 / p)
    assert weighted_mixed_norm(F, p, Weight.power(gam, 0.0)) == pytest.approx(want, rel=1e-10)


def test_weighted_norm_unit_hermite(grid2):
    rad, basis = grid2
    c = HermiteCoefficients.from_dict({(2, 3): 1.0}, 2, 5)
    F = c.to_field(rad, basis.rule)
    one = Weight(lambda r: np.ones_like(r), 0.0)
    assert weighted_mixed_norm(F, 2, one) == pytest.approx(1.0, abs=1e-10)


def test_weight_must_be_positive():
    with pytest.raises(ValueError):
        Weight.from_samples([0, 1], [1.0, -1.0], 0.0)
    w = Weight(lambda r: r - 1.0, 0.0)
    with pytest.raises(ValueError):
        w.on(np.array([0.5, 2.0]))


# -- A_p -------------------------------------------------------------------------

def test_ap_constant_of_one():
    w = Weight(lambda r: np.ones_like(r), 0.0)
    assert ap_constant(w, 2.0) == pytest.approx(1.0, rel=1e-12)
    assert ap_constant(w, 3.0, family="local") == pytest.approx(1.0, rel=1e-9)


def test_ap_power_weights():
    alpha, p = 0.0, 2.0          # n = 2: finite iff -2 < gamma < 2
    inside = [ap_constant(Weight.power(g, alpha), p) for g in (-1.5, -0.5, 0.5, 1.5)]
    outside = [ap_constant(Weight.power(g, alpha), p) for g in (-2.5, 2.5)]
    assert max(inside) < 50
    assert min(outside) > 1e6


def test_ap_local_exponential():
    w = Weight(np.exp, 0.5)
    local = ap_constant(w, 2.0, family="local")
    glob = ap_constant(w, 2.0, family="dyadic")
    assert local < 2.0
    assert glob > 100 * local


def test_ap_is_cached():
    w = Weight.power(0.5, 0.0)
    a = ap_constant(w, 2.0)
    assert ap_constant(w, 2.0) is a


# -- maximal function ------------------------------------------------------------

def test_maximal_of_one():
    rule = radial_rule(80, n=3)
    h = RadialProfile(rule, np.ones(80), 0.5)
    assert np.allclose(maximal_fn(h, 0.5).values, 1.0, rtol=1e-13)


def test_maximal_dominates(rng):
    rule = radial_rule(80, n=2)
    h = RadialProfile(rule, rng.uniform(0, 1, 80), 0.0)
    assert np.all(maximal_fn(h, 0.0).values >= h.values)


def test_maximal_indicator_brute_force():
    rule = radial_rule(70, n=3, R_max=4)
    r = rule.nodes
    h = RadialProfile(rule, ((r >= 1) & (r <= 2)).astype(float), 0.5)
    M = maximal_fn(h, 0.5, radii="all").values
    mu = rule.weights                              # already r^2 dr = r^{2 alpha + 1} dr
    brute = np.zeros_like(r)
    for i in range(len(r)):
        for rho in np.abs(r - r[i]):
            sel = np.abs(r - r[i]) <= rho * (1 + 1e-12)
            brute[i] = max(brute[i], np.sum(mu[sel] * h.values[sel]) / np.sum(mu[sel]))
    assert np.allclose(M, brute, rtol=1e-13)


def test_a1_weight():
    rule = radial_rule(60, n=2)
    v = RadialProfile(rule, np.exp(-rule.nodes) + 0.1, 0.0)
    w, s = a1_weight(v, 0.0, q_prime=3.0)
    assert s == 2.0
    assert np.all(w.on(rule.nodes) > 0)
    with pytest.raises(ValueError):
        a1_weight(v, 0.0, s=1.0)


# -- g-functions ---------------------------------------------------------------

def test_g_constant():
    assert g_constant(1) == 0.5
    assert g_constant(2) == pytest.approx(math.sqrt(3 / 8), rel=1e-15)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_g_of_eigenfunction(grid2, k):
    rad, basis = grid2
    c = HermiteCoefficients.from_dict({(1, 2): 1.0}, 2, 4)
    pts = rad.nodes[::10, None, None] * basis.rule.nodes[None, ::3]
    g = g_k(c, k, "spectral", pts).values
    want = math.sqrt(gamma(2 * k) * 4.0 ** -k) * np.abs(c.evaluate(pts))
    assert np.allclose(g, want, rtol=1e-12, atol=1e-300)


def test_g_of_zero(grid2):
    rad, basis = grid2
    z = PolarSpectrum.zeros(2, 4, 8)
    assert np.all(g_on_grid(z, 1, rad, basis).values == 0)
    assert g_norm(z, 2, rad, basis) == 0.0


@pytest.mark.parametrize("k", [1, 2])
def test_g_methods_agree(grid2, rng, k):
    rad, basis = grid2
    f = PolarSpectrum.random(2, 8, 16, rng)
    pts = rad.nodes[::6, None, None] * basis.rule.nodes[None, :]
    a = g_k(f, k, "spectral", pts).values
    b = g_k(f, k, "temporal", pts).values
    assert np.max(np.abs(a - b)) / np.max(a) < 1e-7


@pytest.mark.parametrize("k", [1, 2])
def test_g_norm_identity(grid2, rng, k):
    rad, basis = grid2
    for _ in range(5):
        f = PolarSpectrum.random(2, 10, 20, rng)
        assert abs(g_norm(f, k, rad, basis) - g_constant(k)) < 1e-7
        assert abs(g_norm(f, k, rad, basis, "temporal") - g_constant(k)) < 1e-7


def test_g_norm_matches_grid_quadrature(grid2, rng):
    rad, basis = grid2
    f = PolarSpectrum.random(2, 10, 16, rng)
    G = g_on_grid(f, 1, rad, basis).values
    grid_norm = math.sqrt(np.sum(np.outer(rad.weights, basis.rule.weights) * G ** 2))
    assert grid_norm == pytest.approx(g_norm(f, 1, rad, basis), rel=1e-9)


def test_g_component_radial_matches_full(grid2, rng):
    rad, basis = grid2
    f = PolarSpectrum.zeros(2, 4, 12)
    for k, v in enumerate(rng.standard_normal(7)):
        f = f.set(0, 1, k, v)
    full = g_on_grid(f, 2, rad, basis).values[:, 0]
    prof = RadialProfile(rad, f.profiles(rad.nodes)[:, 0], 0.0)
    comp = g_k_component(prof, 0, 2, K_max=12).values
    assert np.allclose(comp, full * math.sqrt(sphere_area(2)), rtol=1e-8, atol=1e-14)


def test_g_component_eigenfunction():
    rule = radial_rule(120, n=3)
    m, j, k = 2, 3, 2
    B = polar_radial_table(3, np.array([m]), np.array([j]), rule.nodes)[0]
    out = g_k_component(RadialProfile(rule, B, 0.5), m, k, K_max=14)
    assert np.allclose(out.values, math.sqrt(gamma(2 * k) * 4.0 ** -k) * np.abs(B),
                       rtol=1e-8, atol=1e-12)


def test_g_component_shell_identity(grid2, rng):
    rad, basis = grid2
    f = PolarSpectrum.zeros(2, 4, 12)
    for k, v in enumerate(rng.standard_normal(5)):
        f = f.set(3, 2, k, v)
    prof = RadialProfile(rad, f.profiles(rad.nodes)[:, basis.position(3, 2)], 0.0)
    comp = g_k_component(prof, 3, 1, K_max=12).values
    full = g_on_grid(f, 1, rad, basis).values
    shell = basis.rule.integrate(full ** 2)
    assert np.max(np.abs(shell - comp ** 2)) / np.max(shell) < 1e-7


def test_g_star_dominates_g1(rng):
    f = PolarSpectrum.random(2, 4, 8, rng)
    pts = rng.uniform(-2, 2, (12, 2))
    g1 = g_k(f, 1, "spectral", pts).values
    gs = g_star(f, 2, pts).values
    # (1 + |z|^2/t)^{-k} >= 2^{-k} on |z| <= sqrt(t); the ball average of
    # |d_t u|^2 over |z| < sqrt(t) controls the pointwise value at small t
    assert np.all(np.isfinite(gs))
    assert np.all(gs > 0)
    ratio = g1 / gs
    assert ratio.max() < 10 * ratio.min() + 10


def test_g_star_ground_state_scaling():
    c = HermiteCoefficients.from_dict({(0, 0): 1.0}, 2, 2)
    pts = np.array([[0.3, -0.2], [1.0, 0.5]])
    a = g_star(c, 2, pts).values
    b = g_star(c.with_coeffs(3 * c.coeffs), 2, pts).values
    assert np.all(np.isfinite(a))
    assert np.allclose(b ** 2, 9 * a ** 2, rtol=1e-13)


def test_g_star_needs_large_k():
    c = HermiteCoefficients.from_dict({(0, 0): 1.0}, 2, 2)
    with pytest.raises(ValueError):
        g_star(c, 1, np.zeros((1, 2)))


def test_g_star_component_refinement():
    rule = radial_rule(40, n=2, R_max=10)
    B = polar_radial_table(2, np.full(3, 2), np.arange(3), rule.nodes)
    f = RadialProfile(rule, np.array([1.0, -0.5, 0.25]) @ B, 0.0)
    a = g_star_component(f, 2, 2).values
    b = g_star_component(f, 2, 2, n_phi=48, n_v=48, N_t=12).values
    assert np.max(np.abs(a - b)) / np.max(b) < 1e-4


def test_maximal_domination_constant_one_weight():
    # the outer r-integral must reach far: the offset weight has heavy tails
    rule = radial_rule(80, n=2, R_max=40)
    B = polar_radial_table(2, np.full(4, 1), np.arange(4), rule.nodes)
    f = RadialProfile(rule, np.array([1.0, 0.3, -0.2, 0.1]) @ B, 0.0)
    h = RadialProfile(rule, np.ones(80), 0.0)
    ratio = maximal_domination([f], [h], 1, 2, K_max=8)
    # for h = 1 the spatial integral of the (1 + |z|^2/t)^{-2} kernel is pi
    assert ratio[0] == pytest.approx(math.pi, rel=1e-4)


# -- kernel estimates -----------------------------------------------------------

def test_cz_small_scan():
    from hermite_mixnorm.analysis import cz_grid
    grid = cz_grid(N=8)
    rep = verify_cz_estimates([0, 2, 4, 6], 1, 2, grid=grid)
    assert np.isfinite(rep["sup_i"]) and np.isfinite(rep["sup_ii"])
    si, sii = uniformity_spread(rep)
    assert si < 1.2 and sii < 1.2


def test_cz_rejects_diagonal():
    with pytest.raises(ValueError):
        verify_cz_estimates([0], grid=(np.array([1.0]), np.array([1.01])))


def test_aux_integral_closed_form_matches_quadrature():
    for A, B, c, lam in [(2.0, 1.0, 0.5, 0.5), (5.0, 4.9, 2.0, 1.0), (1.0, 0.1, 1.0, 0.5)]:
        assert aux_integral(A, B, c, lam) == pytest.approx(
            aux_integral_closed_form(A, B, c, lam), rel=1e-10)


def test_aux_integral_sweep_stable():
    a = aux_integral_sweep()
    b = aux_integral_sweep(20, 24)
    assert np.isfinite(a["sup_ratio"])
    assert abs(b["sup_ratio"] - a["sup_ratio"]) / a["sup_ratio"] < 0.05


def test_heat_dt_decay_bounded():
    rep = heat_dt_decay_check(samples=100)
    assert np.isfinite(rep["sup_ratio"]) and rep["sup_ratio"] < 10


# -- probes ----------------------------------------------------------------------

def test_probe_identity(grid2):
    rad, basis = grid2
    trials = default_trials(2, 8, 16, rad, basis, n_random=2)
    res = operator_norm_probe(lambda f: f, 3.0, trials, rad, basis)
    assert res.lower_bound == pytest.approx(1.0, rel=1e-14)


def test_probe_semigroup(grid2):
    rad, basis = grid2
    trials = default_trials(2, 8, 16, rad, basis, n_random=2)
    t = 0.3
    res = operator_norm_probe(lambda f: apply_multiplier(semigroup(t), f), 2.0, trials,
                              rad, basis)
    assert res.lower_bound == pytest.approx(math.exp(-2 * t), rel=1e-10)


def test_probe_rejects_empty():
    with pytest.raises(ValueError):
        operator_norm_probe(lambda f: f, 2.0, [])


def test_probe_accepts_fields(grid2, rng):
    rad, basis = grid2
    F = PolarSpectrum.random(2, 4, 8, rng).synthesize(rad, basis)
    res = operator_norm_probe(lambda f: f.with_values(2 * f.values), 1.5, [F])
    assert res.lower_bound == pytest.approx(2.0, rel=1e-14)
    assert res.argmax == "trial-0"


def test_trial_ids_unique(grid2):
    rad, basis = grid2
    trials = default_trials(2, 8, 16, rad, basis, R=16.0)
    ids = [t.id for t in trials]
    assert len(ids) == len(set(ids))
    assert all(isinstance(t, Trial) for t in trials)


def test_conjecture_window():
    assert conjecture_window(2, 0.0) == pytest.approx((4 / 3, 4.0))
    lo, hi = conjecture_window(2, 1.0)
    assert lo == pytest.approx(0.8) and hi == math.inf
    assert conjecture_window(3, 0.5) == pytest.approx((1.2, 6.0))


def test_hermite_analyze_feeds_probe(grid2):
    rad, basis = grid2
    c = hermite_analyze(lambda p: np.exp(-0.5 * np.sum(p ** 2, -1)), n=2, K_max=4)
    assert c.truncation < 1e-12
