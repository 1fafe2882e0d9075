from fractions import Fraction

import numpy as np
import pytest

from conftest import inverted, model, spec
from willmore.geometry import conformality_defect
from willmore.rational import ExpansionFailure, Rational
from willmore.series import GaussRat, LaurentLogSeries
from willmore.surface import (
    WeierstrassData,
    conformal_completion,
    detect_multiplicity,
    invert_immersion,
    stereo_to_sphere,
    weierstrass_immersion,
)
from willmore.vectors import dot

ENNEPER = WeierstrassData(g_num=(0, 1), name="enneper at 0")


def enneper_closed(z):
    return np.array([
        np.real(0.5 * (z - z**3 / 3)),
        np.real(0.5j * (z + z**3 / 3)),
        np.real(z**2 / 2),
    ])


def catenoid_closed(z):
    return np.array([
        np.real(-0.5 * (1 / z + z)),
        np.real(0.5j * (-1 / z + z)),
        np.log(np.abs(z)),
    ])


def test_enneper_coefficients():
    m = weierstrass_immersion(ENNEPER, 8)
    x1, x2, x3 = m.phi
    assert x1.coeff(1, 0) == Fraction(1, 4)
    assert x1.coeff(3, 0) == Fraction(-1, 12)
    assert x2.coeff(1, 0) == GaussRat(0, Fraction(1, 4))
    assert x3.coeff(2, 0) == Fraction(1, 4)
    assert x3.coeff(1, 1) == 0


@pytest.mark.parametrize("z0", [0.3 + 0.1j, -0.2 + 0.4j])
def test_enneper_matches_closed_form(z0):
    m = weierstrass_immersion(ENNEPER, 8)
    got = np.array([c(z0) for c in m.phi]).real
    assert np.allclose(got, enneper_closed(z0), atol=1e-14)


def test_catenoid_matches_closed_form():
    m = model("catenoid")
    z0 = 0.4 - 0.3j
    got = np.array([c(z0) for c in m.phi]).real
    assert np.allclose(got, catenoid_closed(z0), atol=1e-12)


def test_inverted_catenoid_matches_pointwise_inversion():
    m = inverted("catenoid", 14)
    z0 = 0.05 + 0.02j
    p = catenoid_closed(z0)
    got = np.array([c(z0) for c in m.phi]).real
    assert np.allclose(got, p / p.dot(p), atol=1e-10)


def test_inverted_enneper_matches_pointwise_inversion():
    s = spec("enneper")
    m = inverted("enneper", 12)
    w = 0.04 + 0.03j
    p = enneper_closed(1 / w) - np.array(s.center_floats())
    got = np.array([c(w) for c in m.phi]).real
    assert np.allclose(got, p / p.dot(p), rtol=1e-6, atol=1e-9)


@pytest.mark.parametrize(
    "name, kind, theta0",
    [
        ("plane", "minimal_end", 1),
        ("catenoid", "minimal_end", 1),
        ("enneper", "minimal_end", 3),
        ("trinoid", "minimal_end", 1),
        ("henneberg_cover", "minimal_end", 3),
    ],
)
def test_end_multiplicities(name, kind, theta0):
    m = model(name)
    assert (m.kind, m.theta0) == (kind, theta0)
    im = inverted(name)
    assert im.kind == "willmore_branch"
    assert detect_multiplicity(im) == theta0


def test_regular_point_has_theta_one():
    m = weierstrass_immersion(ENNEPER, 6)
    assert (m.kind, m.theta0) == ("regular", 1)


def test_imaginary_period_is_rejected():
    data = WeierstrassData(g_num=(0,), f_num=((0, 1),), f_den=(0, 1))
    with pytest.raises(ExpansionFailure):
        weierstrass_immersion(data, 6)


def test_moebius_chart_shifts_the_expansion_point():
    g = Rational((0, 0, 1))
    h = g.compose_moebius(1, 1, 0, 1)
    s = h.laurent(4)
    # (w + 1)^2
    assert [s.coeff(k) for k in range(3)] == [1, 2, 1]


def test_stereographic_image_lies_on_unit_sphere():
    m = stereo_to_sphere(inverted("catenoid"))
    r2 = dot(m.phi, m.phi)
    assert r2 == LaurentLogSeries.constant(1, r2.trunc)
    assert m.ambient_kind == "sphere"


def test_inversion_is_an_involution():
    m = model("catenoid", 10)
    back = invert_immersion(invert_immersion(m))
    n = min(back.trunc, m.trunc)
    for a, b in zip(back.phi, m.phi):
        assert a.with_trunc(n) == b.with_trunc(n)


def test_conformal_completion_is_conformal():
    z, zb = LaurentLogSeries.monomial(1, 0, trunc=9), LaurentLogSeries.monomial(0, 1, trunc=9)
    h = z * z + zb * zb + (z * zb) * (z * zb) + z * z * z + zb * zb * zb
    m = conformal_completion(h, 9)
    assert conformality_defect(m).is_zero()
    assert not m.geo.H.is_zero()
