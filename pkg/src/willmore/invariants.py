"""Noether currents of the Willmore functional and their residues.

Each current is stored as the coefficient ``F`` of a (1,0)-form ``F dz``;
``Im(F dz)`` is closed exactly when ``Re(dbar F) = 0``.  The four currents
come from translations, rotations, the dilation and the inversions of
the ambient space:

* translation: ``T = dH + |H|^2 dphi + 2 e^{-2l} <H, h0> dbar phi``
* rotation:    ``phi ^ T + e^{-2l} h0 ^ dbar phi``
* dilation:    ``<phi, T>``
* inversion:   ``I(T) - e^{-2l} (dbar|phi|^2 h0 - 2 <phi, h0> dbar phi)``
  with ``I(X) = |phi|^2 X - 2 <phi, X> phi``.

Residues are ``RESIDUE_SCALE * (1/4pi) Im`` of the contour integral.  With
``RESIDUE_SCALE = 1/2`` the fourth residue of a minimal end equals its flux
``(1/4pi) Im`` of the integral of ``d phi``; ``literal=True`` drops the scale.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .series import LaurentLogSeries
from .surface import invert_immersion
from .vectors import VectorSeries, dot, wedge

RESIDUE_SCALE = Fraction(1, 2)
DIVERGENCE_NORMALIZATION = -4
KINDS = ("translation", "rotation", "dilation", "inversion")


@dataclass(frozen=True)
class Current:
    """Coefficient of ``dz`` of a conservation law.

    ``labels`` names the components: ``(i,)`` for vectors, ``(i, j)`` for the
    rotation 2-form and ``()`` for the scalar dilation current.
    """

    kind: str
    form: VectorSeries
    labels: tuple


@dataclass
class ResidueSet:
    gamma0: list
    gamma1: dict
    gamma2: object
    gamma3: list
    flux: list
    radius_independent: bool = True
    literal: bool = False
    extra: dict = field(default_factory=dict)

    def divergence_normalized(self):
        """The first residue in the divergence-form normalization (``-4 gamma0``)."""
        return [DIVERGENCE_NORMALIZATION * g for g in self.gamma0]

    def to_json(self):
        f = float
        return {
            "gamma0": [f(x) for x in self.gamma0],
            "gamma1": [[i, j, f(v)] for (i, j), v in sorted(self.gamma1.items())],
            "gamma2": [f(self.gamma2)],
            "gamma3": [f(x) for x in self.gamma3],
            "flux": None if self.flux is None else [f(x) for x in self.flux],
            "radius_independent": self.radius_independent,
            **{k: v for k, v in self.extra.items()},
        }


def _require_euclidean(m):
    if m.ambient_kind != "euclidean":
        raise ValueError("Noether currents are implemented for Euclidean models")


def translation_form(m):
    g = m.geo
    H = g.H_euclid
    t = H.d_z() + g.dphi * dot(H, H)
    return t + g.dbphi * (dot(H, g.h0) * g.inv_e2l).scale(2)


def noether_current(m, kind):
    """The current of the given symmetry ``kind`` as a :class:`Current`."""
    _require_euclidean(m)
    g = m.geo
    phi = m.phi
    n = len(phi)
    T = translation_form(m)
    if kind == "translation":
        return Current(kind, T, tuple((i,) for i in range(n)))
    if kind == "dilation":
        return Current(kind, VectorSeries([dot(phi, T)]), ((),))
    if kind == "rotation":
        a = wedge(phi, T)
        b = wedge(g.h0, g.dbphi)
        keys = list(combinations(range(n), 2))
        comps = [a[k] + b[k] * g.inv_e2l for k in keys]
        return Current(kind, VectorSeries(comps), tuple(keys))
    if kind == "inversion":
        r2 = dot(phi, phi)
        IT = T * r2 - phi * dot(phi, T).scale(2)
        corr = g.h0 * r2.d_zbar() - g.dbphi * dot(phi, g.h0).scale(2)
        return Current(kind, IT - corr * g.inv_e2l, tuple((i,) for i in range(n)))
    raise ValueError(f"unknown current kind {kind!r}")


def closedness_defect(c):
    """``Re(dbar F)`` componentwise; zero below trunc iff the current is conserved."""
    return c.form.d_zbar().real_part()


def willmore_residual(m):
    """Closedness defect of the translation current (the Willmore equation)."""
    return closedness_defect(noether_current(m, "translation"))


def current_residue(c, literal=False):
    scale = 1 if literal else RESIDUE_SCALE
    return [s.im_residue() * scale for s in c.form]


def flux(m):
    """``(1/4pi) Im`` of the contour integral of ``d phi``.

    Only meaningful for minimal germs, where ``Im(d phi dz)`` is closed;
    ``None`` is returned otherwise.
    """
    if not m.geo.H_euclid.is_zero():
        return None
    return [s.im_residue() for s in m.geo.dphi]


def residues(m, literal=False):
    """The four residues and the flux at ``z = 0``."""
    cur = {k: noether_current(m, k) for k in KINDS}
    r = {k: current_residue(c, literal) for k, c in cur.items()}
    defect = max(closedness_defect(c).max_abs() for c in cur.values())
    return ResidueSet(
        gamma0=r["translation"],
        gamma1=dict(zip(cur["rotation"].labels, r["rotation"])),
        gamma2=r["dilation"][0],
        gamma3=r["inversion"],
        flux=flux(m),
        literal=literal,
        extra={"closedness_max_defect": defect},
    )


def correspondence_check(m):
    """Compare the residues of ``m`` and of its inversion.

    Returns ``(report, rs_phi, rs_psi)`` where ``report`` maps each identity
    to the list of entrywise differences (all zero when it holds).
    """
    a = residues(m)
    b = residues(invert_immersion(m))
    report = {
        "gamma0_to_gamma3": [x - y for x, y in zip(a.gamma0, b.gamma3)],
        "gamma3_to_gamma0": [x - y for x, y in zip(a.gamma3, b.gamma0)],
        "gamma1_fixed": [a.gamma1[k] - b.gamma1[k] for k in sorted(a.gamma1)],
        "gamma2_flip": [a.gamma2 + b.gamma2],
    }
    return report, a, b


def correspondence_holds(report, tol=0):
    return all(abs(v) <= tol for vals in report.values() for v in vals)


def res00_translation_form(m):
    """Translation current written with normal derivatives (ambient 3 cross-check).

    ``e^{-2l} (dbar^N - dbar^T) h0 - |h0|_WP^2 d phi`` is rewritten through
    ``dbar^N h0 = P(dbar h0)`` and ``dbar^T h0 = dbar h0 - P(dbar h0)``; the
    result must coincide with ``translation_form`` up to sign conventions.
    """
    g = m.geo
    dbh0 = g.h0.d_zbar()
    nrm = g.normal_part(dbh0)
    tan = dbh0 - nrm
    return (nrm - tan) * g.inv_e2l - g.dphi * g.wp


def zero_vector(m):
    return VectorSeries(LaurentLogSeries.zero(m.trunc, m.exact) for _ in m.phi)
