"""Sampled functions: radial profiles and fields on polar product grids."""

from dataclasses import dataclass

import numpy as np

from .quadrature import QuadratureRule, SphereRule, radial_exponent


@dataclass(frozen=True)
class RadialProfile:
    """Samples of a function of r >= 0 on the nodes of a radial rule.

    ``alpha`` is the measure exponent: the rule integrates against
    r^{2 alpha + 1} dr.
    """
    rule: QuadratureRule
    values: np.ndarray
    alpha: float

    @classmethod
    def from_function(cls, fn, rule, alpha):
        return cls(rule, np.asarray(fn(rule.nodes), dtype=float), alpha)

    @property
    def r(self):
        return self.rule.nodes

    def integrate(self):
        return float(self.rule.integrate(self.values))

    def with_values(self, values):
        return RadialProfile(self.rule, np.asarray(values), self.alpha)


@dataclass(frozen=True)
class PolarField:
    """f(r_i * omega_k) on radial nodes x sphere nodes, values shape (Nr, Ns)."""
    n: int
    radial: QuadratureRule
    sphere: SphereRule
    values: np.ndarray

    def __post_init__(self):
        if self.sphere.n != self.n:
            raise ValueError("sphere rule dimension does not match n")
        p = radial_exponent(self.radial)
        if abs(p - (self.n - 1)) > 1e-12:
            raise ValueError("radial rule must integrate against r^{n-1} dr")
        if self.values.shape != (self.radial.order, self.sphere.size):
            raise ValueError("values must have shape (Nr, Ns)")

    @classmethod
    def from_function(cls, fn, n, radial, sphere):
        """fn maps an array of points (..., n) to values (...)."""
        pts = grid_points(radial, sphere)
        return cls(n, radial, sphere, np.asarray(fn(pts), dtype=float))

    @property
    def points(self):
        return grid_points(self.radial, self.sphere)

    @property
    def weights(self):
        """Full polar quadrature weights, shape (Nr, Ns)."""
        return np.outer(self.radial.weights, self.sphere.weights)

    def with_values(self, values):
        return PolarField(self.n, self.radial, self.sphere, np.asarray(values))

    def l2_norm(self):
        return float(np.sqrt(np.sum(self.weights * np.abs(self.values) ** 2)))


def grid_points(radial, sphere):
    return radial.nodes[:, None, None] * sphere.nodes[None, :, :]
