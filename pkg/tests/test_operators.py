import csv
import math

import numpy as np
import pytest

from hermite_mixnorm.fields import PolarField, RadialProfile
from hermite_mixnorm.harmonics import build_basis, decompose
from hermite_mixnorm.kernels import bochner_riesz_K0, heat_K0
from hermite_mixnorm.operators import (HermiteCoefficients, MultiplierSpec, PolarSpectrum,
                                       analyze_polar, apply_multiplier, apply_via_components,
                                       bochner_riesz, check_multiplier_condition,
                                       component_operator, heat_component_closed_form,
                                       hecke_bochner_constant, hermite_analyze, hermite_basis,
                                       hermite_semigroup, imaginary_power, laguerre_semigroup,
                                       multi_indices, multiplier_from_dict, riesz_mean,
                                       semigroup, tabulated)
from hermite_mixnorm.quadrature import radial_rule, sphere_rule
from hermite_mixnorm.specfun import laguerre_psi


def _phi(alpha):
    return lambda pts: hermite_basis(np.array([alpha]), pts.reshape(-1, len(alpha)))[:, 0] \
        .reshape(pts.shape[:-1])


def test_multi_indices_ordering():
    a = multi_indices(2, 2)
    assert a.tolist() == [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2]]
    assert len(multi_indices(3, 4)) == math.comb(4 + 3, 3)


def test_analyze_single_hermite_function():
    c = hermite_analyze(_phi((2, 1)), n=2, K_max=10)
    assert c.coefficient((2, 1)) == pytest.approx(1.0, abs=1e-12)
    others = np.delete(c.coeffs, np.flatnonzero(np.all(c.alphas == (2, 1), axis=1)))
    assert np.max(np.abs(others)) < 1e-10


def test_analyze_ground_state():
    c = hermite_analyze(lambda p: np.exp(-0.5 * np.sum(p ** 2, -1)), n=2, K_max=8)
    assert c.coefficient((0, 0)) == pytest.approx(math.sqrt(math.pi), rel=1e-13)
    assert np.max(np.abs(c.coeffs[1:])) < 1e-12


def test_plancherel():
    f = lambda p: _phi((1, 0))(p) + 2 * _phi((3, 2))(p)
    c = hermite_analyze(f, n=2, K_max=12)
    assert abs(np.sum(c.coeffs ** 2) - 5) < 1e-9
    assert c.truncation < 1e-12


def test_analyze_polar_field_matches_callable(grid2):
    rad, basis = grid2
    f = lambda p: _phi((2, 1))(p) - 0.5 * _phi((0, 3))(p)
    F = PolarField.from_function(f, 2, rad, basis.rule)
    c = hermite_analyze(F, K_max=8)
    assert c.coefficient((2, 1)) == pytest.approx(1.0, abs=1e-12)
    assert c.coefficient((0, 3)) == pytest.approx(-0.5, abs=1e-12)


def test_analyze_rejects_slow_decay(grid2):
    rad, basis = grid2
    F = PolarField.from_function(lambda p: 1.0 / (1 + np.sum(p ** 2, -1)), 2, rad, basis.rule)
    with pytest.raises(ValueError):
        hermite_analyze(F)


def test_truncation_guard():
    with pytest.raises(ValueError):
        hermite_analyze(_phi((12, 0)), n=2, K_max=6)


def test_coefficients_csv(tmp_path):
    c = HermiteCoefficients.from_dict({(1, 0): 2.0, (0, 2): -1.0}, 2, 2)
    c.to_csv(tmp_path / "c.csv")
    rows = list(csv.reader(open(tmp_path / "c.csv")))
    assert rows[0] == ["level", "index", "value"]
    assert rows[2] == ["1", "0", "2.0"]
    assert len(rows) == 1 + 6


def test_multiplier_identity():
    c = HermiteCoefficients.from_dict({(1, 0): 2.0, (0, 2): -1.0}, 2, 4)
    one = MultiplierSpec(lambda lam: np.ones_like(lam), "one")
    assert np.array_equal(apply_multiplier(one, c).coeffs, c.coeffs)


def test_imaginary_power_preserves_norm(rng):
    c = HermiteCoefficients.from_dict({}, 2, 10).with_coeffs(rng.standard_normal(66))
    out = apply_multiplier(imaginary_power(1.0), c)
    assert abs(out.norm() - c.norm()) < 1e-12


def test_semigroup_multiplier_vs_kernel(grid2):
    rad, basis = grid2
    f = lambda p: _phi((1, 1))(p) + 0.3 * _phi((0, 4))(p) + _phi((0, 0))(p)
    F = PolarField.from_function(f, 2, rad, basis.rule)
    c = hermite_analyze(F, K_max=10)
    spec = apply_multiplier(semigroup(0.5), c).to_field(rad, basis.rule)
    pts = F.points[::7, ::5]
    kern = hermite_semigroup(0.5, F, "kernel", points=pts)
    assert np.max(np.abs(kern - spec.values[::7, ::5])) / np.max(np.abs(kern)) < 1e-8


def test_semigroup_ground_state(grid2):
    rad, basis = grid2
    F = PolarField.from_function(_phi((0, 0)), 2, rad, basis.rule)
    t = 0.4
    out = hermite_semigroup(t, F, "kernel", points=F.points[::10, ::7])
    want = np.exp(-2 * t) * F.values[::10, ::7]
    assert np.max(np.abs(out - want)) / np.max(want) < 1e-9


def test_semigroup_paths_and_mass(grid2, rng):
    rad, basis = grid2
    spec = PolarSpectrum.random(2, 6, 12, rng, decay=0.2)
    F = spec.synthesize(rad, basis)
    t = 0.3
    a = hermite_semigroup(t, F, "spectral", K_max=12)
    b = hermite_semigroup(t, F, "kernel", points=F.points[::9, ::4])
    assert np.max(np.abs(a.values[::9, ::4] - b)) / np.max(np.abs(b)) < 1e-8
    c = hermite_analyze(F, K_max=12)
    pred = math.sqrt(np.sum(np.exp(-2 * c.eigenvalues * t) * c.coeffs ** 2))
    assert abs(a.l2_norm() - pred) / pred < 1e-8


def test_riesz_trivial(grid2):
    rad, basis = grid2
    F = PolarField.from_function(_phi((0, 0)), 2, rad, basis.rule)
    assert np.all(bochner_riesz(2.0, 1.0, F).values == 0)
    out = bochner_riesz(6.0, 1.0, F)
    assert np.max(np.abs(out.values - 2 / 3 * F.values)) < 1e-12


def test_riesz_paths_agree(grid2, rng):
    rad, basis = grid2
    F = PolarSpectrum.random(2, 6, 12, rng, decay=0.2).synthesize(rad, basis)
    a = bochner_riesz(14.0, 1.0, F, "spectral", K_max=12)
    pts = F.points[::11, ::6]
    b = bochner_riesz(14.0, 1.0, F, "kernel", points=pts)
    assert np.max(np.abs(a.values[::11, ::6] - b)) / np.max(np.abs(b)) < 1e-8


@pytest.mark.parametrize("alpha", [0.0, 0.5, 2.0])
def test_laguerre_semigroup_eigen(alpha):
    rule = radial_rule(160, alpha=alpha)
    t = 0.35
    for k, lam in [(0, 2 * alpha + 2), (2, 2 * alpha + 10)]:
        g = RadialProfile.from_function(lambda r: laguerre_psi(k, alpha, r), rule, alpha)
        out = laguerre_semigroup(t, alpha, g)
        want = np.exp(-lam * t) * g.values
        big = np.abs(want) > 1e-6 * np.abs(want).max()
        assert np.max(np.abs(out.values[big] / want[big] - 1)) < 1e-9


def test_laguerre_semigroup_positive():
    rule = radial_rule(100, alpha=0.5)
    g = RadialProfile.from_function(lambda r: ((r > 1) & (r < 2)).astype(float), rule, 0.5)
    assert np.all(laguerre_semigroup(0.2, 0.5, g).values >= 0)


@pytest.mark.parametrize("n", [2, 3])
def test_component_operator_m0_is_laguerre(n):
    rule = radial_rule(120, n=n, R_max=10)
    g = RadialProfile.from_function(lambda r: np.exp(-(r - 1.5) ** 2), rule, n / 2 - 1)
    a = component_operator(heat_K0(0.5, n), 0, g)
    b = laguerre_semigroup(0.5, n / 2 - 1, g)
    assert np.max(np.abs(a.values - b.values)) / np.max(np.abs(b.values)) < 1e-8


@pytest.mark.parametrize("n", [2, 3])
def test_component_operator_hecke_bochner(n):
    rule = radial_rule(120, n=n, R_max=10)
    for m in range(7):
        g = RadialProfile.from_function(lambda r: r ** m * np.exp(-(r - 1.5) ** 2), rule,
                                        n / 2 - 1)
        a = component_operator(heat_K0(0.5, n), m, g)
        b = heat_component_closed_form(0.5, m, g)
        assert np.max(np.abs(a.values - b.values)) / np.max(np.abs(b.values)) < 1e-7


def test_component_operator_high_degree_small_support():
    rule = radial_rule(60, n=2, R_max=0.01)
    g = RadialProfile.from_function(lambda r: np.ones_like(r), rule, 0.0)
    assert np.max(np.abs(component_operator(heat_K0(0.5, 2), 30, g).values)) < 1e-9


def test_hecke_bochner_constant_formula():
    assert hecke_bochner_constant(2) == pytest.approx(math.pi, rel=1e-15)
    assert hecke_bochner_constant(3) == pytest.approx(math.sqrt(2 * math.pi), rel=1e-15)


def _bump_field(rad, basis, m, j):
    col = basis.position(m, j)
    g = np.exp(-(rad.nodes - 1.5) ** 2) * rad.nodes ** m
    return PolarField(basis.n, rad, basis.rule, np.outer(g, basis.table[:, col])), g


def test_components_heat_cos2(grid2):
    rad, basis = grid2
    F, _ = _bump_field(rad, basis, 2, 1)
    res = apply_via_components(heat_K0(0.5, 2), F, basis)
    pts = F.points[::12, ::10]
    ref = hermite_semigroup(0.5, F, "kernel", points=pts)
    assert np.max(np.abs(res.values[::12, ::10] - ref)) / np.max(np.abs(ref)) < 1e-6


def test_components_radial_single_degree(grid2):
    rad, basis = grid2
    F = PolarField.from_function(lambda p: np.exp(-np.sum(p ** 2, -1)), 2, rad, basis.rule)
    res, rep = apply_via_components(heat_K0(0.3, 2), F, basis, return_report=True)
    d = decompose(res, basis)
    assert np.max(np.abs(d.coeffs[:, 1:])) < 1e-12 * np.max(np.abs(d.coeffs))
    assert rep.truncation < 1e-12


@pytest.mark.parametrize("n", [2, 3])
def test_prop32_end_to_end(n):
    rad = radial_rule(64 if n == 2 else 56, n=n, R_max=10)
    M = 4
    basis = build_basis(n, M, sphere_rule(n, 40 if n == 2 else 36))
    for m in range(M + 1):
        F, g = _bump_field(rad, basis, m, 1)
        prof = RadialProfile(rad, g, n / 2 - 1)
        for t in (0.2, 0.5, 1.0):
            pts = F.points[::8, ::(9 if n == 2 else 40)]
            lhs = hermite_semigroup(t, F, "kernel", points=pts)
            r = np.linalg.norm(pts, axis=-1)
            Y = basis.table[::(9 if n == 2 else 40), basis.position(m, 1)][None, :]
            rhs = heat_component_closed_form(t, m, prof, points=r.ravel()).reshape(r.shape) * Y
            assert np.linalg.norm(lhs - rhs) / np.linalg.norm(lhs) < 1e-6


def test_components_riesz(grid2, rng):
    rad, basis = grid2
    F = PolarSpectrum.random(2, 6, 12, rng, decay=0.1).synthesize(rad, basis)
    res = apply_via_components(bochner_riesz_K0(16.0, 1.0, 2), F, basis)
    spec = bochner_riesz(16.0, 1.0, F, K_max=12)
    assert np.max(np.abs(res.values - spec.values)) / np.max(np.abs(spec.values)) < 1e-8


def test_polar_spectrum_round_trip(grid2, rng):
    rad, basis = grid2
    s = PolarSpectrum.random(2, basis.M_max, 14, rng)
    back = analyze_polar(s.synthesize(rad, basis), basis, K_max=14)
    assert np.max(np.abs(back.coeffs - s.coeffs)) < 1e-10
    assert abs(s.norm() - s.synthesize(rad, basis).l2_norm()) < 1e-10


def test_polar_spectrum_is_eigenbasis(grid2):
    rad, basis = grid2
    s = PolarSpectrum.zeros(2, 8, 14).set(3, 2, 2, 1.0)
    F = s.synthesize(rad, basis)
    out = hermite_semigroup(0.25, F, "kernel", points=F.points[::8, ::6])
    lam = 2 * (2 * 2 + 3) + 2
    assert np.max(np.abs(out - np.exp(-lam * 0.25) * F.values[::8, ::6])) < 1e-10


def test_condition_constant_one():
    one = MultiplierSpec(lambda lam: np.ones_like(lam), "one")
    rep = check_multiplier_condition(one, 2, 1000)
    assert rep["constants"] == [1.0, 0.0, 0.0, 0.0, 0.0]
    assert rep["pass"]


def test_condition_imaginary_power():
    rep = check_multiplier_condition(imaginary_power(1.0), 2, 10_000, 4)
    assert rep["pass"]
    assert all(np.isfinite(rep["constants"]))


def test_condition_alternating_fails():
    alt = MultiplierSpec(lambda lam: np.cos(np.pi * (lam - 2) / 2), "alternating")
    rep = check_multiplier_condition(alt, 2, 2000)
    assert not rep["pass"]
    assert 1 in rep["failing"]


def test_multiplier_from_dict():
    assert multiplier_from_dict({"family": "semigroup", "t": 2}).params == {"t": 2.0}
    assert multiplier_from_dict({"family": "riesz-mean", "R": 8}).name == "riesz-mean"
    tab = multiplier_from_dict({"family": "tabulated", "values": [1, 0.5, 0.25]})
    assert np.array_equal(tab.at_levels(np.arange(5), 2), [1, 0.5, 0.25, 0, 0])
    with pytest.raises(ValueError):
        multiplier_from_dict({"family": "nope"})


def test_riesz_mean_multiplier_values():
    phi = riesz_mean(10.0, 2.0).at_levels(np.arange(6), 2)
    assert np.allclose(phi, [0.64, 0.36, 0.16, 0.04, 0.0, 0.0])
    assert tabulated([1.0]).params == {"levels": 1}
