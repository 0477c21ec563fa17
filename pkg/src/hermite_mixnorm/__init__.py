"""Hermite and Laguerre semigroups, spherical-harmonic reductions, mixed
L^{p,2} norms and Littlewood-Paley g-functions on R^n (n = 2, 3)."""

__version__ = "0.1.0"
