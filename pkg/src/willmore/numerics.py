"""Floating-point cross checks.

* evaluation of series at points,
* trapezoidal contour integrals of Noether currents on circles,
* the divergence form of the translation law for surfaces in R^3,
* the Willmore energy of an inverted minimal surface by 2-D quadrature.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .invariants import RESIDUE_SCALE, current_residue
from .rational import ExpansionFailure
from .series import SeriesError


class NonConvergent(SeriesError):
    pass


@dataclass
class SampledField:
    """Values of a field on a polar grid ``r_i e^{i t_j}``."""

    radii: np.ndarray
    angles: np.ndarray
    values: np.ndarray
    source: str = ""


@dataclass
class QuadratureReport:
    numeric: list
    symbolic: list
    max_diff: float
    tolerance: float

    @property
    def ok(self):
        return self.max_diff <= self.tolerance

    def to_json(self):
        return {
            "numeric": [float(x) for x in self.numeric],
            "symbolic": [float(x) for x in self.symbolic],
            "max_diff": self.max_diff,
            "ok": self.ok,
        }


def evaluate(series, z):
    """Value of a scalar or vector series at ``z`` and the truncation estimate ``|z|^trunc``."""
    if z == 0:
        raise ValueError("series are evaluated away from the origin")
    if hasattr(series, "comps"):
        val = np.array([s(z) for s in series])
    else:
        val = series(z)
    return val, abs(z) ** series.trunc


def circle(r, n):
    t = 2 * np.pi * np.arange(n) / n
    return t, r * np.exp(1j * t)


def sample_on_circle(series, r, n=256, source=""):
    t, z = circle(r, n)
    if hasattr(series, "comps"):
        vals = np.array([s(z) for s in series])
    else:
        vals = series(z)
    return SampledField(np.array([r]), t, vals, source)


def _contour(values, z, n):
    """Trapezoidal ``Im`` of the integral of ``F dz`` over the sampled circle."""
    return np.imag(np.sum(values * 1j * z, axis=-1) * (2 * np.pi / n))


def quad_residue(current, r=0.5, n=256, tol=1e-9, literal=False):
    """Residue of a current by the trapezoidal rule, compared with the symbolic one."""
    _, z = circle(r, n)
    vals = np.array([s(z) for s in current.form])
    scale = 1 if literal else float(RESIDUE_SCALE)
    num = scale * _contour(vals, z, n) / (4 * np.pi)
    sym = [float(x) for x in current_residue(current, literal)]
    diff = float(np.max(np.abs(num - np.array(sym)))) if len(sym) else 0.0
    return QuadratureReport(list(num), sym, diff, tol)


def radius_sweep(current, radii=(0.3, 0.5, 0.7), n=256):
    """Quadrature residues at several radii and their largest spread."""
    rows = [quad_residue(current, r, n).numeric for r in radii]
    arr = np.array(rows)
    return rows, float(np.max(arr.max(axis=0) - arr.min(axis=0)))


def divergence_residue(m, r=0.5, n=256):
    """``-(1/pi)`` times the flux of ``grad H n - H grad n - H^2 grad phi`` through ``|z| = r``.

    Only for surfaces in R^3; ``H`` is the scalar mean curvature.
    """
    if m.ambient_dim != 3 or m.ambient_kind != "euclidean":
        raise ValueError("the divergence form is written for surfaces in R^3")
    g = m.geo
    Hs, nrm, phi = g.H_scalar, g.normal, m.phi
    H2 = Hs * Hs
    t, z = circle(r, n)

    def ev(s):
        return np.array([c(z) for c in s]).real if hasattr(s, "comps") else s(z).real

    H, Hx, Hy, h2 = ev(Hs), ev(Hs.d_x()), ev(Hs.d_y()), ev(H2)
    N, Nx, Ny = ev(nrm), ev(nrm.d_x()), ev(nrm.d_y())
    Px, Py = ev(phi.d_x()), ev(phi.d_y())
    Vx = Hx * N - H * Nx - h2 * Px
    Vy = Hy * N - H * Ny - h2 * Py
    # outward normal ds = (cos t, sin t) r dt
    flux = np.sum(Vx * np.cos(t) + Vy * np.sin(t), axis=-1) * r * (2 * np.pi / n)
    return list(-flux / np.pi)


# -- Willmore energy --------------------------------------------------------


def _laurent_poly(r):
    """A rational function with monomial denominator as ``{power: complex}``."""
    nz = [i for i, c in enumerate(r.den) if c]
    if len(nz) != 1:
        raise ExpansionFailure("closed forms need a monomial denominator")
    k = nz[0]
    d = complex(r.den[k])
    return {i - k: complex(c) / d for i, c in enumerate(r.num) if c}


def _lmul(p, q):
    out = {}
    for a, x in p.items():
        for b, y in q.items():
            out[a + b] = out.get(a + b, 0) + x * y
    return out


def _ladd(p, q, s=1):
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + s * v
    return out


class ClosedForm:
    """Global minimal immersion ``Re`` of the integral of the Weierstrass form.

    Requires ``f``, ``f g`` and ``f g^2`` to be Laurent polynomials and every
    ``1/z`` coefficient to be real, so that the immersion is single valued.
    """

    def __init__(self, data):
        from .rational import Rational

        g = Rational(data.g_num, data.g_den)
        f = Rational(data.f_num, data.f_den)
        G, F = _laurent_poly(g), _laurent_poly(f)
        G2 = _lmul(G, G)
        one = {0: 1}
        self.Phi = [
            {k: 0.5 * v for k, v in _lmul(F, _ladd(one, G2, -1)).items()},
            {k: 0.5j * v for k, v in _lmul(F, _ladd(one, G2)).items()},
            _lmul(F, G),
        ]
        for comp in self.Phi:
            c = comp.get(-1, 0)
            if abs(c.imag) > 1e-14:
                raise ExpansionFailure("the immersion has a period around the origin")

    @staticmethod
    def _eval(p, z):
        return sum(c * z**k for k, c in p.items()) + 0 * z

    def Phi_at(self, z):
        return np.array([self._eval(p, z) for p in self.Phi])

    def __call__(self, z):
        out = []
        for p in self.Phi:
            acc = 0 * z
            for k, c in p.items():
                if k == -1:
                    acc = acc + c.real * np.log(np.abs(z))
                else:
                    acc = acc + c * z ** (k + 1) / (k + 1)
            out.append(np.real(acc))
        return np.array(out)


def energy_density(cf, center, z):
    """``4 <phi - c, n>^2 / |phi - c|^4`` times the area element, at parameter points ``z``.

    This is ``|H|^2 dA`` of the inversion of ``phi`` about ``c``.
    """
    P = cf.Phi_at(z)
    px, py = P.real, -P.imag
    nrm = np.cross(px, py, axis=0)
    area = np.sqrt(np.sum(nrm * nrm, axis=0))
    v = cf(z) - np.asarray(center, dtype=float).reshape(-1, *([1] * z.ndim))
    r2 = np.sum(v * v, axis=0)
    s = np.sum(v * nrm, axis=0)
    safe = np.where(area > 0, area, 1.0)
    return np.where(area > 0, 4 * s * s / safe / (r2 * r2), 0.0)


def energy_on_annulus(cf, center, L, panels_per_unit=2, nodes=24, n_theta=512):
    """Integral of the density over ``e^-L < |z| < e^L`` in ``(log r, theta)``."""
    x, w = np.polynomial.legendre.leggauss(nodes)
    npan = max(1, int(round(2 * L * panels_per_unit)))
    edges = np.linspace(-L, L, npan + 1)
    ts, ws = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        ts.append((b - a) / 2 * x + (a + b) / 2)
        ws.append((b - a) / 2 * w)
    s = np.concatenate(ts)
    ws = np.concatenate(ws)
    th = 2 * np.pi * np.arange(n_theta) / n_theta
    r = np.exp(s)
    Z = r[:, None] * np.exp(1j * th[None, :])
    dens = energy_density(cf, center, Z) * (r * r)[:, None]
    return float(np.sum(dens.sum(axis=1) * ws) * (2 * np.pi / n_theta))


def _aitken(a, b, c):
    den = (c - b) - (b - a)
    if den == 0:
        return c
    return c - (c - b) ** 2 / den


def willmore_energy(data, center, L0=3.0, step=1.0, max_steps=12, tol=1e-6, n_theta=512, nodes=24):
    """Willmore energy of the inversion about ``center`` of the minimal surface ``data``.

    The parameter annulus is widened step by step and the sequence is
    accelerated with Aitken's method; convergence means two successive
    extrapolants agree to ``tol`` relative.  Returns ``(value, history)``.
    """
    cf = ClosedForm(data)
    vals, extr = [], []
    for k in range(max_steps):
        L = L0 + k * step
        vals.append(energy_on_annulus(cf, center, L, nodes=nodes, n_theta=n_theta))
        if len(vals) >= 3:
            extr.append(_aitken(*vals[-3:]))
        if len(extr) >= 2 and abs(extr[-1] - extr[-2]) <= tol * abs(extr[-1]):
            return extr[-1], vals
    raise NonConvergent(f"energy did not settle: last values {vals[-3:]}")


__all__ = [
    "ClosedForm",
    "NonConvergent",
    "QuadratureReport",
    "SampledField",
    "circle",
    "divergence_residue",
    "energy_density",
    "energy_on_annulus",
    "evaluate",
    "quad_residue",
    "radius_sweep",
    "sample_on_circle",
    "willmore_energy",
]
