"""Minimal immersions from Weierstrass data, inversion and stereographic projection."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .rational import ExpansionFailure, Rational, moebius_derivative
from .series import GaussRat, InsufficientOrder, LaurentLogSeries
from .vectors import VectorSeries, dot

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class WeierstrassData:
    """Gauss map ``g`` and height differential ``f dz`` as rational functions.

    ``chart`` is an optional Moebius map ``w -> (a w + b)/(c w + d)``
    precomposed before expanding at ``w = 0``.
    """

    g_num: tuple = (0,)
    g_den: tuple = (1,)
    f_num: tuple = (1,)
    f_den: tuple = (1,)
    chart: tuple | None = None
    ambient: int = 3
    name: str = ""

    def rationals(self):
        g = Rational(self.g_num, self.g_den)
        f = Rational(self.f_num, self.f_den)
        if self.chart is not None:
            a, b, c, d = self.chart
            g = g.compose_moebius(a, b, c, d)
            f = f.compose_moebius(a, b, c, d) * moebius_derivative(a, b, c, d)
        return g, f


@dataclass(frozen=True)
class SurfaceModel:
    """An immersion germ at ``z = 0`` plus the metadata the invariants need.

    ``kind`` is one of ``minimal_end``, ``willmore_branch`` or ``regular``;
    ``ambient_kind`` is ``euclidean`` or ``sphere``.  Geometry is computed
    lazily and cached on first access.
    """

    phi: VectorSeries
    ambient_kind: str = "euclidean"
    theta0: int = 1
    kind: str = "regular"
    name: str = ""
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def ambient_dim(self):
        return len(self.phi)

    @property
    def exact(self):
        return self.phi.exact

    @property
    def trunc(self):
        return self.phi.trunc

    @property
    def kappa(self):
        return 1 if self.ambient_kind == "sphere" else 0

    @cached_property
    def geo(self):
        from .geometry import Geometry

        return Geometry(self)

    @classmethod
    def from_phi(cls, phi, ambient_kind="euclidean", kind=None, name="", **meta):
        theta0, auto = _multiplicity(phi.d_z())
        return cls(phi, ambient_kind, theta0, kind or auto, name, meta)

    def padded(self, n=4):
        """Embed into a higher-dimensional Euclidean space by zero components."""
        return SurfaceModel(self.phi.padded(n), self.ambient_kind, self.theta0, self.kind, self.name, self.meta)

    def to_approx(self):
        phi = self.phi.map(LaurentLogSeries.to_approx)
        return SurfaceModel(phi, self.ambient_kind, self.theta0, self.kind, self.name, self.meta)

    def translated(self, vec):
        """Translate by a constant real vector (changes the inversion centre)."""
        phi = VectorSeries(c + v for c, v in zip(self.phi, vec))
        return SurfaceModel(phi, self.ambient_kind, self.theta0, self.kind, self.name, self.meta)

    def scaled(self, t):
        return SurfaceModel(self.phi * t, self.ambient_kind, self.theta0, self.kind, self.name, self.meta)


def _multiplicity(dphi):
    if dphi.is_zero():
        raise InsufficientOrder("d_z phi has no stored term below trunc")
    k = dphi.ord()
    if k <= -2:
        return -k - 1, "minimal_end"
    if k == -1:
        raise ExpansionFailure("d_z phi has a simple pole; no end or branch template applies")
    return k + 1, ("willmore_branch" if k > 0 else "regular")


def detect_multiplicity(m):
    """Branch order ``theta0`` read from the leading degree of ``d_z phi``."""
    return _multiplicity(m.phi.d_z())[0]


def weierstrass_phi(data, order, exact=True):
    """The three holomorphic components of ``Phi`` expanded to trunc ``order - 1``."""
    g, f = data.rationals()
    n = order - 1
    # g is expanded further because it is multiplied by f, which may have a pole
    fs = f.laurent(n + 8 + 2 * max(0, -_ord_rational(g)), exact)
    gs = g.laurent(n + 8 + 2 * max(0, -_ord_rational(f)), exact)
    one = LaurentLogSeries.constant(1, fs.trunc + gs.trunc + 100, exact)
    g2 = gs * gs
    i = GaussRat(0, 1) if exact else 1j
    phi1 = (fs * (one - g2)).scale(HALF)
    phi2 = (fs * (one + g2)).scale(i * HALF if exact else 0.5j)
    phi3 = fs * gs
    if any(c.trunc < n for c in (phi1, phi2, phi3)):
        raise ExpansionFailure("not enough terms in the Laurent expansion")
    return VectorSeries(c.with_trunc(n) for c in (phi1, phi2, phi3))


def _ord_rational(r):
    j = next((i for i, c in enumerate(r.num) if c), 0)
    k = next(i for i, c in enumerate(r.den) if c)
    return j - k


def integrate_real(Phi):
    """``phi = Re int Phi dz`` componentwise, with zero integration constants."""
    comps = []
    for s in Phi:
        terms = {}
        logc = None
        for (a, b, p), c in s.terms.items():
            if a == -1:
                logc = c
            else:
                terms[(a + 1, 0, 0)] = c / (a + 1) if s.exact else c / (a + 1)
        F = LaurentLogSeries(terms, s.trunc + 1, s.exact)
        phi = (F + F.conj()).scale(HALF)
        if logc is not None:
            if logc.imag != 0 if s.exact else abs(logc.imag) > 1e-10:
                raise ExpansionFailure("the 1/z coefficient of Phi has an imaginary part (nonzero period)")
            phi = phi + LaurentLogSeries.monomial(0, 0, 1, logc.real, phi.trunc, s.exact)
        comps.append(phi)
    return VectorSeries(comps)


def weierstrass_immersion(data, order, exact=True):
    """Minimal immersion germ ``Re int (f(1-g^2)/2, i f(1+g^2)/2, f g) dz`` at 0."""
    if order < 4:
        raise ValueError("order must be at least 4")
    Phi = weierstrass_phi(data, order, exact)
    phi = integrate_real(Phi)
    if data.ambient > 3:
        phi = phi.padded(data.ambient)
    m = SurfaceModel.from_phi(phi, name=data.name, weierstrass=data)
    return m


def invert_immersion(m):
    """Compose with the inversion ``x -> x / |x|^2`` centred at the origin."""
    r2 = dot(m.phi, m.phi)
    inv = r2.invert()
    psi = m.phi * inv
    kind = None
    if m.kind == "minimal_end":
        kind = "willmore_branch"
    out = SurfaceModel.from_phi(psi, m.ambient_kind, kind, name=f"inverted {m.name}".strip(), **m.meta)
    return out


def stereo_to_sphere(m):
    """Inverse stereographic projection ``(2 phi, |phi|^2 - 1) / (|phi|^2 + 1)``."""
    if m.ambient_kind != "euclidean":
        raise ValueError("stereographic projection needs a Euclidean model")
    r2 = dot(m.phi, m.phi)
    one = LaurentLogSeries.constant(1, r2.trunc, m.exact)
    inv = (r2 + one).invert()
    comps = [c.scale(2) * inv for c in m.phi] + [(r2 - one) * inv]
    phi = VectorSeries(comps)
    return SurfaceModel.from_phi(phi, "sphere", name=f"stereo {m.name}".strip(), **m.meta)


def conformal_completion(height, trunc=None):
    """A conformal immersion ``(Re w, Im w, height)`` with ``w = z + O(|z|^2)``.

    Solves ``d w * d conj(w) = -(d height)^2`` degree by degree, which makes
    ``<d phi, d phi> = 0``.  ``height`` must be real with no terms below
    degree 2; the resulting surfaces are generally not Willmore and serve as
    generic test germs.
    """
    if trunc is None:
        trunc = height.trunc
    exact = height.exact
    height = height.with_trunc(trunc)
    if height.ord() < 2:
        raise ValueError("height must vanish to second order")
    rhs = -(height.d_z() * height.d_z())
    one = LaurentLogSeries.constant(1, trunc, exact)
    s = LaurentLogSeries.zero(trunc, exact)
    for _ in range(trunc):
        nxt = (rhs * (one + s.conj().d_z()).invert()).antiderivative_z().with_trunc(trunc)
        if nxt == s:
            break
        s = nxt
    w = LaurentLogSeries.monomial(1, 0, 0, 1, trunc, exact) + s.conj()
    i = GaussRat(0, 1) if exact else 1j
    phi1 = (w + w.conj()).scale(HALF)
    phi2 = (w - w.conj()).scale(-i * HALF if exact else -0.5j)
    phi = VectorSeries([phi1, phi2, height]).with_trunc(trunc)
    return SurfaceModel.from_phi(phi, name="conformal completion")
