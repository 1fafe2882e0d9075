"""Conformal factor, mean curvature, Weingarten tensor and friends.

All quantities are expressed in the conformal chart ``z`` of the model:

* ``e2l = 2 <d phi, dbar phi>`` is the conformal factor ``e^{2 lambda}``;
* ``H = 2 e^{-2 lambda} d dbar phi`` is the mean curvature vector;
* ``h0 = 2 (d^2 phi - 2 (d lambda) d phi)`` is the coefficient of ``dz^2``
  of the Weingarten tensor;
* ``wp = e^{-4 lambda} <h0, conj h0>`` and ``K = |H|^2 - wp``.

For sphere models (``ambient_kind == "sphere"``) the reported mean curvature
is the one inside the unit sphere, ``H_S = H + phi``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .series import GaussRat, LaurentLogSeries, SeriesError
from .vectors import VectorSeries, cross, dot, hodge_cross4

HALF = Fraction(1, 2)


class NotNormal(SeriesError):
    pass


@dataclass(frozen=True)
class Bidegree:
    p: int
    q: int = 0

    def __add__(self, o):
        return Bidegree(self.p + o.p, self.q + o.q)


@dataclass(frozen=True)
class TensorField:
    """A scalar or vector series tagged with its bidegree ``dz^p dzbar^q``."""

    value: object
    bidegree: Bidegree
    ambient_dim: int = 0

    def is_zero(self):
        return self.value.is_zero()

    def to_json(self):
        return {
            "bidegree": [self.bidegree.p, self.bidegree.q],
            "value": self.value.to_json(),
        }


class Geometry:
    """Lazily computed local geometry of a :class:`SurfaceModel`."""

    def __init__(self, m):
        self.m = m
        self.exact = m.exact
        self.kappa = m.kappa
        self.i = GaussRat(0, 1) if m.exact else 1j

    @cached_property
    def dphi(self):
        return self.m.phi.d_z()

    @cached_property
    def dbphi(self):
        return self.m.phi.d_zbar()

    @cached_property
    def phi_x(self):
        return self.dphi + self.dbphi

    @cached_property
    def phi_y(self):
        return (self.dphi - self.dbphi) * self.i

    @cached_property
    def e2l(self):
        return dot(self.dphi, self.dbphi).scale(2)

    @cached_property
    def inv_e2l(self):
        return self.e2l.invert()

    @cached_property
    def d_lambda(self):
        return (self.inv_e2l * self.e2l.d_z()).scale(HALF)

    @cached_property
    def H_euclid(self):
        return self.dphi.d_zbar() * self.inv_e2l.scale(2)

    @cached_property
    def H(self):
        if self.kappa:
            return self.H_euclid + self.m.phi
        return self.H_euclid

    @cached_property
    def h0(self):
        d2 = self.dphi.d_z()
        return (d2 - self.dphi * self.d_lambda.scale(2)) * 2

    @cached_property
    def h0bar(self):
        return self.h0.conj()

    @cached_property
    def H2(self):
        return dot(self.H, self.H)

    @cached_property
    def wp(self):
        return dot(self.h0, self.h0bar) * self.inv_e2l * self.inv_e2l

    @cached_property
    def K(self):
        return dot(self.H_euclid, self.H_euclid) - self.wp

    @cached_property
    def normal(self):
        n = self.m.ambient_dim
        if n == 3 and self.m.ambient_kind == "euclidean":
            return cross(self.phi_x, self.phi_y) * self.inv_e2l
        if n == 4 and self.m.ambient_kind == "sphere":
            return hodge_cross4(self.m.phi, self.phi_x, self.phi_y) * self.inv_e2l
        raise ValueError("a unit normal exists only for surfaces in R^3 or S^3")

    @cached_property
    def H_scalar(self):
        return dot(self.H, self.normal)

    def J(self, v):
        if self.m.ambient_dim != 4 or self.m.ambient_kind != "euclidean":
            raise ValueError("J is defined for surfaces in R^4")
        if not (dot(v, self.dphi).is_zero() and dot(v, self.dbphi).is_zero()):
            raise NotNormal("vector field is not normal to the surface")
        return hodge_cross4(self.phi_x, self.phi_y, v) * self.inv_e2l

    def tangential_inner(self, a, b, c, d):
        """``<a dphi + b dbphi, c dphi + d dbphi>`` without forming the vectors."""
        return (a * d + b * c) * self.e2l.scale(HALF)

    def normal_part(self, v):
        """Orthogonal projection onto the normal bundle in the ambient space."""
        t = dot(v, self.dbphi) * self.dphi + dot(v, self.dphi) * self.dbphi
        return v - (t * self.inv_e2l.scale(2))


def conformal_factor(m):
    return TensorField(m.geo.e2l, Bidegree(1, 1), m.ambient_dim)


def conformality_defect(m):
    """``<d phi, d phi>``, which vanishes for conformal immersions."""
    return dot(m.geo.dphi, m.geo.dphi)


def mean_curvature(m):
    return m.geo.H


def weingarten(m):
    return TensorField(m.geo.h0, Bidegree(2, 0), m.ambient_dim)


def wp_norm(m):
    return m.geo.wp


def gauss_curvature(m):
    return TensorField(m.geo.K, Bidegree(0, 0), m.ambient_dim)


def unit_normal(m):
    return m.geo.normal


def normal_J(m, v):
    return m.geo.J(v)


def codazzi_defect(m):
    """``dbar h0 - e2l dH - (K - kappa) e2l dphi``; zero for every immersion."""
    g = m.geo
    k = g.K - g.kappa if g.kappa else g.K
    return g.h0.d_zbar() - g.H.d_z() * g.e2l - g.dphi * (k * g.e2l)


def liouville_defect(m):
    """``-4 d dbar lambda - e2l K`` written without logarithms."""
    g = m.geo
    F = g.e2l
    inv = g.inv_e2l
    lap = F * F.d_z().d_zbar() - F.d_z() * F.d_zbar()
    return (lap * inv * inv).scale(-2) - F * g.K


def weingarten_normality(m):
    """``<h0, d phi>``, zero when h0 is normal."""
    return dot(m.geo.h0, m.geo.dphi)


def real_vector(values, trunc, exact=True):
    return VectorSeries(LaurentLogSeries.constant(v, trunc, exact) for v in values)
