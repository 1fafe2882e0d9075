"""Shared corpus fixtures and the acceptance-line collector."""

from functools import lru_cache

import numpy as np
import pytest

from willmore.io import load_surface
from willmore.numerics import ClosedForm

ACCEPTANCE_LINES = []


@lru_cache(maxsize=None)
def spec(name):
    return load_surface(name)


@lru_cache(maxsize=None)
def model(name, order=12):
    return spec(name).model(order)


@lru_cache(maxsize=None)
def inverted(name, order=12):
    return spec(name).inverted(order)


def enneper_inversion_closed_form():
    """Pointwise inversion of the global Enneper surface in the end chart ``z = 1/w``."""
    s = spec("enneper")
    cf = ClosedForm(s.global_data())
    c = np.array(s.center_floats())

    def psi(w):
        p = cf(1 / w) - c
        return p / p.dot(p)

    return psi


def fd_mean_curvature(f, z0, h=1e-3):
    """``Delta phi / (2 e^{2 lambda})`` by central differences."""
    c = f(z0)
    xp, xm, yp, ym = f(z0 + h), f(z0 - h), f(z0 + 1j * h), f(z0 - 1j * h)
    lap = (xp + xm + yp + ym - 4 * c) / h**2
    fx, fy = (xp - xm) / (2 * h), (yp - ym) / (2 * h)
    return lap / (2 * fx.dot(fx)), fx.dot(fy) / fx.dot(fx), fy.dot(fy) / fx.dot(fx)


@pytest.fixture
def corpus():
    return spec


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
