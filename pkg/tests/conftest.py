import numpy as np
import pytest

from hermite_mixnorm.harmonics import build_basis
from hermite_mixnorm.quadrature import radial_rule, sphere_rule


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def grid2():
    """Radial rule, harmonic basis (M_max = 12) for n = 2."""
    rad = radial_rule(120, n=2, R_max=12.0)
    return rad, build_basis(2, 12, sphere_rule(2, 24))


@pytest.fixture(scope="session")
def grid3():
    rad = radial_rule(80, n=3, R_max=10.0)
    return rad, build_basis(3, 6, sphere_rule(3, 12))


@pytest.fixture
def acceptance(request):
    """record(number, ok, detail) prints one PASS/FAIL line for a criterion."""
    lines = request.config.__dict__.setdefault("_acceptance_lines", {})

    def record(number, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {detail}"
        lines[number] = line
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.__dict__.get("_acceptance_lines")
    if lines:
        terminalreporter.section("acceptance criteria")
        for k in sorted(lines):
            terminalreporter.write_line(lines[k])
