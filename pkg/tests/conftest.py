"""Shared oracles and fixtures.

The oracles here deliberately avoid the package's evaluation path: series
are summed term by term with ``math.lgamma`` and Python's complex power,
and the special-case ratios come straight from their elementary closed
forms.
"""

import cmath
import math

import numpy as np
import pytest

from rabotnov import RabotnovParams, SeriesKind

_ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    """Record one acceptance-criterion verdict line."""

    def _report(number, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)

    return _report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def naive_coefficient(params, n):
    s = params.order
    return params.beta ** n * math.exp(math.lgamma(s) - math.lgamma(s * (n + 1)))


def naive_series(params, kind, z, n_terms=120):
    """Direct left-to-right summation of the series of ``kind`` at scalar z."""
    z = complex(z)
    total = 1.0 + 0j if kind is SeriesKind.DERIVATIVE else z
    for n in range(1, n_terms + 1):
        a = naive_coefficient(params, n)
        if a == 0:
            break
        if kind is SeriesKind.DERIVATIVE:
            total += (n + 1) * a * z ** n
        elif kind is SeriesKind.ALEXANDER:
            total += a / (n + 1) * z ** (n + 1)
        else:
            total += a * z ** (n + 1)
    return total


def _csch(w):
    return 1.0 / np.sinh(w)


def _d2(z):
    r = np.sqrt(z / 2.0)
    return 0.5 * np.cosh(r) + np.sinh(r) / np.sqrt(2.0 * z)


def _d3(z):
    r = np.sqrt(z)
    return 0.5 * np.cos(r / 2.0) + np.sin(r / 2.0) / r


# closed forms of the fourteen special-case ratios, same order as COROLLARIES
COROLLARY_CLOSED_FORMS = (
    lambda z: np.exp(-z / 3.0),
    lambda z: np.exp(z / 3.0),
    lambda z: -(1.0 / 3.0) * np.exp(-z / 3.0) * (z - 3.0),
    lambda z: -3.0 * np.exp(z / 3.0) / (z - 3.0),
    # sqrt(2/z) sinh sqrt(z/2), written with one root so branches agree
    lambda z: np.sinh(np.sqrt(z / 2.0)) / np.sqrt(z / 2.0),
    lambda z: np.sqrt(z / 2.0) * _csch(np.sqrt(z / 2.0)),
    _d2,
    lambda z: 1.0 / _d2(z),
    lambda z: (2.0 / np.sqrt(z)) * np.sin(np.sqrt(z) / 2.0),
    lambda z: (np.sqrt(z) / 2.0) / np.sin(np.sqrt(z) / 2.0),
    _d3,
    lambda z: 1.0 / _d3(z),
    lambda z: np.sinh(np.sqrt(z)) / np.sqrt(z),
    lambda z: np.sqrt(z) * _csch(np.sqrt(z)),
)


def boundary_scan(fn, radius=0.999, points=10**6):
    """Minimum of Re fn on a dense circle, and where it occurs."""
    theta = 2.0 * np.pi * np.arange(points) / points
    z = radius * np.exp(1j * theta)
    values = np.real(fn(z))
    k = int(np.argmin(values))
    return float(values[k]), complex(z[k])


def random_params(rng, count, max_beta_ratio, alpha_max=3.0, gamma_max=4.0):
    """Parameter sets with |beta| <= max_beta_ratio * (gamma + alpha) and random phase."""
    out = []
    for _ in range(count):
        alpha = float(rng.uniform(0.0, alpha_max))
        gamma_shape = float(rng.uniform(1.0, gamma_max))
        s = alpha + gamma_shape
        mod = float(rng.uniform(0.0, max_beta_ratio)) * s
        beta = cmath.rect(mod, float(rng.uniform(-math.pi, math.pi)))
        out.append(RabotnovParams(alpha=alpha, gamma_shape=gamma_shape, beta=beta))
    return out


def random_disk_points(rng, count, radius):
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, count))
    return r * np.exp(1j * rng.uniform(-np.pi, np.pi, count))
