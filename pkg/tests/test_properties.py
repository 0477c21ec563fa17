import math

import numpy as np
from hypothesis import given, settings, strategies as st
from scipy.special import iv

from hermite_mixnorm.analysis import conjecture_window, mixed_norm
from hermite_mixnorm.harmonics import build_basis, real_harmonics
from hermite_mixnorm.kernels import mehler_kernel
from hermite_mixnorm.operators import PolarSpectrum, apply_multiplier, riesz_mean, semigroup
from hermite_mixnorm.quadrature import radial_rule, sphere_rule
from hermite_mixnorm.specfun import bessel_I, ultraspherical_P

coord = st.floats(-3, 3, allow_nan=False)
times = st.floats(0.05, 3.0)
SETTINGS = settings(max_examples=40, deadline=None)

_RAD = radial_rule(60, n=2, R_max=10.0)
_BASIS = build_basis(2, 6, sphere_rule(2, 12))


@SETTINGS
@given(times, st.lists(coord, min_size=4, max_size=4))
def test_mehler_symmetric_positive(t, c):
    x, y = np.array(c[:2]), np.array(c[2:])
    a = mehler_kernel(t, x, y)
    assert a > 0
    assert math.isclose(a, mehler_kernel(t, y, x), rel_tol=1e-14)


@SETTINGS
@given(st.floats(0.0, 20.0), st.floats(0.01, 60.0))
def test_bessel_matches_scipy(alpha, z):
    assert math.isclose(float(bessel_I(alpha, z)), iv(alpha, z), rel_tol=1e-11)


@SETTINGS
@given(st.integers(0, 20), st.sampled_from([2, 3, 4]), st.floats(-1, 1))
def test_ultraspherical_bounded(m, n, u):
    assert math.isclose(float(ultraspherical_P(m, n, 1.0)), 1.0, rel_tol=1e-12)
    assert abs(float(ultraspherical_P(m, n, u))) <= 1 + 1e-12


@SETTINGS
@given(st.integers(0, 8), st.floats(0, 2 * math.pi))
def test_circle_harmonics_rotation(m, a):
    # the degree-m space is rotation invariant: the norm of the projection
    # of a rotated harmonic stays 1
    pts = sphere_rule(2, 24).nodes
    Q = np.array([[math.cos(a), -math.sin(a)], [math.sin(a), math.cos(a)]])
    Y = real_harmonics(2, 8, pts)
    Yr = real_harmonics(2, 8, pts @ Q.T)
    cols = [0] if m == 0 else [2 * m - 1, 2 * m]
    w = sphere_rule(2, 24).weights
    proj = (Yr[:, cols[0]] * w) @ Y[:, cols]
    assert math.isclose(float(np.sum(proj ** 2)), 1.0, rel_tol=1e-12)


@SETTINGS
@given(st.integers(0, 2 ** 31), st.floats(-5, 5), st.floats(1.0, 6.0))
def test_mixed_norm_homogeneous(seed, c, p):
    F = PolarSpectrum.random(2, 6, 10, np.random.default_rng(seed)).synthesize(_RAD, _BASIS)
    assert math.isclose(mixed_norm(F.with_values(c * F.values), p), abs(c) * mixed_norm(F, p),
                        rel_tol=1e-12, abs_tol=1e-300)


@SETTINGS
@given(st.integers(0, 2 ** 31), st.floats(1.0, 6.0))
def test_mixed_norm_triangle(seed, p):
    rng = np.random.default_rng(seed)
    F = PolarSpectrum.random(2, 6, 10, rng).synthesize(_RAD, _BASIS)
    G = PolarSpectrum.random(2, 6, 10, rng).synthesize(_RAD, _BASIS)
    lhs = mixed_norm(F.with_values(F.values + G.values), p)
    assert lhs <= mixed_norm(F, p) + mixed_norm(G, p) + 1e-12


@SETTINGS
@given(st.integers(0, 2 ** 31), times, times)
def test_semigroup_property(seed, s, t):
    f = PolarSpectrum.random(2, 6, 10, np.random.default_rng(seed))
    a = apply_multiplier(semigroup(s), apply_multiplier(semigroup(t), f))
    b = apply_multiplier(semigroup(s + t), f)
    assert np.allclose(a.coeffs, b.coeffs, rtol=1e-12, atol=1e-300)


@SETTINGS
@given(st.integers(0, 2 ** 31), st.floats(3.0, 200.0), st.floats(0.0, 3.0))
def test_riesz_mean_l2_contraction(seed, R, delta):
    f = PolarSpectrum.random(2, 6, 10, np.random.default_rng(seed))
    assert apply_multiplier(riesz_mean(R, delta), f).norm() <= f.norm() * (1 + 1e-14)


@SETTINGS
@given(st.sampled_from([2, 3, 4, 5]), st.floats(0.0, 5.0))
def test_conjecture_window_ordered(n, delta):
    lo, hi = conjecture_window(n, delta)
    assert 1 <= lo + 1e-15 < hi if delta < 0.5 * (n - 1) else lo < 2 and hi == math.inf
    assert lo < 2 < hi
