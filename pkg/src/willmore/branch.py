"""Branch-point expansions, cancellation laws and end bookkeeping.

At a branch point of multiplicity ``theta0`` the expected shape is::

    d phi = A0 z^(t-1) + A1 z^t + A2 z^(t+1)
            + C1/(4t) z zbar^t + conj(C1)/8 z^(t-1) zbar^2 + ...

with ``H = Re(C1 / z^(t-2)) + ...``.  Vectors are read from the exact
series; pairings are complex bilinear and computed after rescaling so that
``|A0|^2 = 1/2`` (the rescaling factor ``t`` may be irrational, so only
``t^2`` is stored and applied to the bilinear quantities).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .invariants import residues
from .series import GaussRat, InsufficientOrder, SeriesError


class ShapeMismatch(SeriesError):
    pass


class ParityViolation(SeriesError):
    pass


def _bdot(u, v):
    total = 0
    for a, b in zip(u, v):
        total = a * b + total
    return total


def _conj(u):
    return [c.conjugate() for c in u]


@dataclass
class BranchExpansion:
    theta0: int
    A0: list
    A1: list
    A2: list
    C1: list
    gamma0: list
    t2: object
    consistency: bool
    template_violations: list = field(default_factory=list)

    @property
    def alpha0(self):
        return _bdot(_conj(self.A0), self.A1) * self.t2

    @property
    def alpha1(self):
        return _bdot(_conj(self.A0), self.A2) * self.t2

    def pairings(self):
        """The cancellation pairings on the normalized vectors."""
        A0, A1, C1, t2 = self.A0, self.A1, self.C1, self.t2
        return {
            "<A0,A0>": _bdot(A0, A0) * t2,
            "<A0,A1>": _bdot(A0, A1) * t2,
            "<conj A0,A1>": _bdot(_conj(A0), A1) * t2,
            "<A0,C1>": _bdot(A0, C1) * t2,
            "<conj A0,C1>": _bdot(_conj(A0), C1) * t2,
            "<A1,C1>": _bdot(A1, C1) * t2,
            "|C1|^2 <A1,A1>": _bdot(C1, _conj(C1)) * _bdot(A1, A1) * t2 * t2,
        }

    def to_json(self):
        def cx(v):
            c = complex(v)
            return [c.real, c.imag]

        return {
            "theta0": self.theta0,
            "A0": [cx(c) for c in self.A0],
            "A1": [cx(c) for c in self.A1],
            "A2": [cx(c) for c in self.A2],
            "C1": [cx(c) for c in self.C1],
            "gamma0": [float(g) for g in self.gamma0],
            "scale_squared": float(self.t2),
            "alpha0": cx(self.alpha0),
            "alpha1": cx(self.alpha1),
            "consistency_slot_ok": self.consistency,
            "template_violations": [list(k) for k in self.template_violations],
            "pairings": {k: cx(v) for k, v in self.pairings().items()},
        }


def _slot(s, key, exact):
    return s.terms.get(key, GaussRat() if exact else 0j)


def extract_expansion(m, strict=False):
    """Read ``A0, A1, A2, C1`` from ``d phi`` at a branch point.

    Slots of degree at most ``theta0 + 1`` that the template does not
    predict are listed in ``template_violations``; with ``strict=True`` they
    raise :class:`ShapeMismatch` instead.
    """
    t = m.theta0
    dphi = m.geo.dphi
    if dphi.trunc < t + 2:
        raise InsufficientOrder(f"need trunc >= {t + 2} for d phi, have {dphi.trunc}")
    ex = m.exact
    A = [[_slot(s, (t - 1 + k, 0, 0), ex) for s in dphi] for k in range(3)]
    C1 = [_slot(s, (1, t, 0), ex) * (4 * t) for s in dphi]
    cons = [_slot(s, (t - 1, 2, 0), ex) for s in dphi]
    a0n = _bdot(A[0], _conj(A[0]))
    a0n = a0n.real
    if not a0n:
        raise InsufficientOrder("A0 vanishes")
    t2 = Fraction(1, 2) / Fraction(int(a0n.numerator), int(a0n.denominator)) if ex else 0.5 / a0n
    if ex:
        consistency = all(c * 8 == d.conjugate() for c, d in zip(cons, C1)) if t >= 3 else True
    else:
        consistency = all(abs(c * 8 - d.conjugate()) < 1e-8 for c, d in zip(cons, C1)) if t >= 3 else True
    allowed = {(t - 1, 0, 0), (t, 0, 0), (t + 1, 0, 0), (1, t, 0), (t - 1, 2, 0)}
    violations = []
    if t >= 3:
        for s in dphi:
            for key in s.terms:
                if key[0] + key[1] <= t + 1 and key not in allowed and key not in violations:
                    violations.append(key)
        violations.sort()
        if strict and violations:
            raise ShapeMismatch(f"slots outside the branch template: {violations}")
    try:
        gamma0 = residues(m).gamma0
    except SeriesError:
        gamma0 = [0] * len(dphi)
    return BranchExpansion(t, A[0], A[1], A[2], C1, gamma0, t2, consistency, violations)


def cancellation_check(e):
    """Each pairing with a flag telling whether it vanishes exactly."""
    out = {}
    for k, v in e.pairings().items():
        out[k] = {"value": v, "zero": (not v) if isinstance(v, GaussRat) else abs(v) < 1e-10}
    return out


def second_residue(m):
    """Largest ``a >= 0`` such that ``H`` has a pure ``z^-a`` (or ``zbar^-a``) term."""
    H = m.geo.H
    if H.trunc <= 0:
        raise InsufficientOrder("mean curvature known only below degree 0")
    best = 0
    for s in H:
        for (a, b, p) in s.terms:
            if p == 0 and a < 0 and b == 0:
                best = max(best, -a)
            if p == 0 and b < 0 and a == 0:
                best = max(best, -b)
    return best


@dataclass(frozen=True)
class EndStructure:
    genus: int
    end_multiplicities: tuple
    interior_branch_orders: tuple = ()

    @property
    def euler_characteristic(self):
        return 2 - 2 * self.genus


def jorge_meeks(e):
    """Degree of the Gauss map and total curvatures, in multiples of ``pi``.

    ``total_curvature_pi`` is the total curvature of the minimal surface
    (``-4 deg``); ``inverted_curvature_pi`` is the integral of the Gauss
    curvature of the compact inverted surface.
    """
    chi = e.euler_characteristic
    num = -chi + sum(m + 1 for m in e.end_multiplicities) - sum(t - 1 for t in e.interior_branch_orders)
    if num % 2:
        raise ParityViolation(f"the Gauss map degree would be {num}/2")
    deg = num // 2
    inv = 2 * chi + 2 * sum(m - 1 for m in e.end_multiplicities) + 2 * sum(t - 1 for t in e.interior_branch_orders)
    return {"deg_gauss": deg, "total_curvature_pi": -4 * deg, "inverted_curvature_pi": inv}


def predicted_energy(e):
    """Willmore energy of the inverted surface in multiples of ``pi``: ``4 sum m_j``."""
    return 4 * sum(e.end_multiplicities)
