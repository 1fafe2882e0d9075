"""Holomorphic differentials built from the Weingarten tensor.

* the quartic form ``Q`` (two independent formulas),
* the pseudo Gauss map into the Lorentzian sphere,
* the cubic form ``T = e^{-2l} <dbar h0, J h0>`` in R^4,
* the octic form ``O`` in R^4 (with and without normal projections).

All dot products are complex bilinear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import Bidegree, TensorField
from .series import LaurentLogSeries, SeriesError
from .vectors import VectorSeries, dot

Q14 = Fraction(1, 4)
Q12 = Fraction(1, 2)


class NotMeromorphic(SeriesError):
    pass


@dataclass
class FormReport:
    form: TensorField
    pole_order: int | None
    antiholomorphic_defect: LaurentLogSeries
    is_holomorphic: bool
    is_meromorphic: bool
    leading_laurent: list

    @property
    def value(self):
        return self.form.value

    def to_json(self):
        terms = self.value.to_json()
        return {
            "bidegree": [self.form.bidegree.p, self.form.bidegree.q],
            "trunc": terms["trunc"],
            "terms": terms["terms"],
            "pole_order": self.pole_order,
            "dbar_defect_max": self.antiholomorphic_defect.max_abs(),
            "holomorphic": self.is_holomorphic,
            "meromorphic": self.is_meromorphic,
        }


def analyze(q, p, q_deg=0, ambient_dim=0):
    """Wrap a scalar coefficient series into a :class:`FormReport`."""
    defect = q.d_zbar()
    singular = {k: c for k, c in q.terms.items() if k[0] + k[1] < 0}
    merom = defect.is_zero() and all(b == 0 and pw == 0 for (_, b, pw) in singular)
    pole = -min(a + b for a, b, _ in singular) if singular else 0
    lead = []
    if q.terms:
        d0 = q.ord()
        lead = sorted((a, b, pw, c) for (a, b, pw), c in q.terms.items() if a + b == d0)
    return FormReport(
        form=TensorField(q, Bidegree(p, q_deg), ambient_dim),
        pole_order=pole if merom else None,
        antiholomorphic_defect=defect,
        is_holomorphic=merom and pole <= 0,
        is_meromorphic=merom,
        leading_laurent=lead,
    )


def pole_order(report):
    """Order of the pole of a meromorphic form (0 if none)."""
    if not report.is_meromorphic:
        raise NotMeromorphic("form has a dbar defect or logarithmic singular terms")
    return report.pole_order


# -- quartic form -----------------------------------------------------------


def quartic_coefficient(m):
    """``e^{-2l}(<d dbar h0, h0> - <d h0, dbar h0>) + (1/4 (k + |H|^2) + wp) <h0,h0> + <H,h0>^2``."""
    g = m.geo
    h0 = g.h0
    dh, dbh = h0.d_z(), h0.d_zbar()
    first = (dot(dbh.d_z(), h0) - dot(dh, dbh)) * g.inv_e2l
    k = g.H2 + g.kappa if g.kappa else g.H2
    hh = dot(h0, h0)
    Hh = dot(g.H, h0)
    return first + hh * (k.scale(Q14) + g.wp) + Hh * Hh


def bryant_quartic(m):
    return analyze(quartic_coefficient(m), 4, 0, m.ambient_dim)


def null_structure_check(alpha):
    """``Q(alpha) = <d dbar alpha, alpha> - <d alpha, dbar alpha>`` for a (2,0) field."""
    a = alpha.value if isinstance(alpha, TensorField) else alpha
    return dot(a.d_z().d_zbar(), a) - dot(a.d_z(), a.d_zbar())


def _require_sphere3(m):
    if m.ambient_kind != "sphere" or m.ambient_dim != 4:
        raise ValueError("this operation needs a surface in the unit 3-sphere of R^4")


def quartic_via_gauss_coefficient(m):
    """``e2l (<dN dN H, H0> - <dN H, dN H0>) + e2l^2/4 (1 + |H|^2) <H0, H0>``."""
    _require_sphere3(m)
    g = m.geo
    H = g.H
    H0 = g.h0 * g.inv_e2l
    dNH = g.normal_part(H.d_z())
    dNdNH = g.normal_part(dNH.d_z())
    dNH0 = g.normal_part(H0.d_z())
    one = LaurentLogSeries.constant(1, g.H2.trunc, m.exact)
    t1 = (dot(dNdNH, H0) - dot(dNH, dNH0)) * g.e2l
    t2 = dot(H0, H0) * (one + g.H2) * (g.e2l * g.e2l).scale(Q14)
    return t1 + t2


def quartic_via_gauss(m):
    return analyze(quartic_via_gauss_coefficient(m), 4, 0, m.ambient_dim)


def lorentz_dot(u, v):
    return dot(VectorSeries(u.comps[1:]), VectorSeries(v.comps[1:])) - u[0] * v[0]


def pseudo_gauss_map(m):
    """``psi = (H, phi H + n)`` in R^{1,4}, for surfaces in the 3-sphere."""
    _require_sphere3(m)
    g = m.geo
    Hs = g.H_scalar
    return VectorSeries([Hs] + list(m.phi * Hs + g.normal))


def pseudo_gauss_checks(m):
    """Series that must vanish: ``|psi|^2 - 1``, ``<d psi, d psi>`` and the energy density identity."""
    psi = pseudo_gauss_map(m)
    g = m.geo
    dpsi = psi.d_z()
    one = LaurentLogSeries.constant(1, psi.trunc, m.exact)
    energy = (lorentz_dot(dpsi, dpsi.conj()) - (dot(g.h0, g.h0bar) * g.inv_e2l).scale(Q12))
    return {
        "unit": lorentz_dot(psi, psi) - one,
        "conformal": lorentz_dot(dpsi, dpsi),
        "energy_density": energy,
    }


# -- forms in R^4 -----------------------------------------------------------


def _require_r4(m):
    if m.ambient_dim != 4 or m.ambient_kind != "euclidean":
        raise ValueError("Montiel forms are computed for surfaces in R^4")


def montiel_cubic(m):
    """``T = e^{-2l} <dbar h0, J h0>``."""
    _require_r4(m)
    g = m.geo
    t = dot(g.h0.d_zbar(), g.J(g.h0)) * g.inv_e2l
    return analyze(t, 3, 0, 4)


def _octic_polynomial(A, B, C, h, H2, inv, kappa):
    """The octic form as a polynomial in the normal derivatives of h0."""
    hh = dot(h, h)
    AA, BB, CC = dot(A, A), dot(B, B), dot(C, C)
    AB, AC, Ah, BC, Bh, Ch = dot(A, B), dot(A, C), dot(A, h), dot(B, C), dot(B, h), dot(C, h)
    k = H2 + kappa if kappa else H2
    inner = (
        (AA * hh).scale(Q14)
        + (BB * CC).scale(Q14)
        - (AB * Ch).scale(Q12)
        - (AC * Bh).scale(Q12)
        + (Ah * BC).scale(Q12)
    )
    mid = (Ah * hh).scale(Q12) - Bh * Ch + (BC * hh).scale(Q12)
    return inner * inv * inv + (k * mid * inv).scale(Q14) + (k * k * hh * hh).scale(Fraction(1, 64))


def octic_projected(m):
    """Octic coefficient with explicit metric normal projections."""
    _require_r4(m)
    g = m.geo
    h = g.h0
    C = g.normal_part(h.d_zbar())
    B = g.normal_part(h.d_z())
    A = g.normal_part(C.d_z())
    return _octic_polynomial(A, B, C, h, g.H2, g.inv_e2l, m.kappa)


def octic_tangent_free(m):
    """Octic coefficient with the tangential parts removed by closed formulas.

    For a normal field ``X`` the tangential parts of its derivatives are
    ``d^T X = -<X,H> d phi - e^{-2l} <X,h0> dbar phi`` and
    ``dbar^T X = -e^{-2l} <X, conj h0> d phi - <X,H> dbar phi``,
    so no projection operator is needed.
    """
    _require_r4(m)
    g = m.geo
    h, H, inv = g.h0, g.H, g.inv_e2l
    Hh = dot(H, h)
    C = h.d_zbar() + g.dphi * (dot(h, g.h0bar) * inv) + g.dbphi * Hh
    B = h.d_z() + g.dphi * Hh + g.dbphi * (dot(h, h) * inv)
    A = C.d_z() + g.dphi * dot(C, H) + g.dbphi * (dot(C, h) * inv)
    return _octic_polynomial(A, B, C, h, g.H2, inv, m.kappa)


def octic_literal(m):
    """Normal-derivative-free octic expression transcribed term by term.

    Kept for reference; it does not reproduce :func:`octic_projected`.
    """
    _require_r4(m)
    g = m.geo
    h, H, inv, wp = g.h0, g.H, g.inv_e2l, g.wp
    hb = g.h0bar
    dh, dbh = h.d_z(), h.d_zbar()
    ddh = dbh.d_z()
    hh = dot(h, h)
    hhb = dot(h, hb)
    Hh = dot(H, h)
    H2 = g.H2
    k = H2 + m.kappa if m.kappa else H2
    d_hhb = hhb.d_z()
    t1 = (d_hhb * dot(dbh, h) * hh * inv * inv * inv).scale(-Q14)
    inner = (
        (dot(ddh, ddh) * hh).scale(Q14)
        + (dot(dh, dh) * dot(dbh, dbh)).scale(Q14)
        - (dot(ddh, dh) * dot(dbh, h)).scale(Q12)
        - (dot(ddh, dbh) * dot(dh, h)).scale(Q12)
        + (dot(ddh, h) * dot(dh, dbh)).scale(Q12)
        - ((dot(H, dbh) * dot(dbh, h)).scale(2) + dot(H, dh) * d_hhb + Hh * dot(dbh, dbh)) * hh.scale(Q14)
        + (dot(H, (h * hh).d_zbar()) * dot(dbh, h)).scale(Q12)
        + (dot(H, (h * hhb).d_z()) * dot(dh, h)).scale(Q14)
    )
    t2 = inner * inv * inv
    t3 = (
        (dot(H, ddh) * Hh - dot(H, dh) * dot(H, dbh)) * hh
        - (dot(ddh, h) - dot(dh, dbh)) * (wp * hh + Hh * Hh)
    ) * inv
    t3 = t3.scale(Q14)
    t4 = (wp * (dot(ddh, h) * hh + dot(dh, h) * dot(dbh, h)) * inv).scale(Q14)
    t5 = (wp * (-(dot(dh, dh) * Hh) + hh * Hh * Hh - dot(dh, h) * dot(dbh, h))).scale(Q14)
    t6 = ((wp * hh) * (wp * hh) + H2 * hh * Hh + (wp * hh * Hh * Hh).scale(2)).scale(Fraction(1, 16))
    t7 = (
        k * ((dot(ddh, h) * hh).scale(Q12) - dot(dh, h) * dot(dbh, h) + (dot(dh, dbh) * hh).scale(Q12)) * inv
    ).scale(Q14)
    t8 = (k * k * hh * hh).scale(Fraction(1, 64)) - ((wp * hh + Hh * Hh) * (wp * hh + Hh * Hh)).scale(
        Fraction(1, 8)
    )
    return t1 + t2 + t3 + t4 + t5 + t6 + t7 + t8


def montiel_octic(m):
    """Octic form from the projected formula, with the tangent-free route as cross-check.

    The returned report carries ``agreement``: the difference of the two
    routes, which vanishes below trunc.
    """
    a = octic_projected(m)
    b = octic_tangent_free(m)
    rep = analyze(a, 8, 0, 4)
    rep.agreement = a - b
    rep.tangent_free = analyze(b, 8, 0, 4)
    return rep
