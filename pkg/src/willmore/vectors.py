"""Vector-valued series and the small amount of multilinear algebra we need."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .series import GaussRat, LaurentLogSeries


class VectorSeries:
    """An n-tuple of :class:`LaurentLogSeries` sharing one backend.

    Used both for real immersions (``phi``, ``H``, the normal) and for
    complex vector fields such as ``h0``.  ``is_real`` checks the reality
    predicate componentwise.
    """

    __slots__ = ("comps",)

    def __init__(self, comps):
        self.comps = tuple(comps)

    # -- helpers ------------------------------------------------------------
    def __len__(self):
        return len(self.comps)

    def __iter__(self):
        return iter(self.comps)

    def __getitem__(self, i):
        return self.comps[i]

    @property
    def exact(self):
        return self.comps[0].exact

    @property
    def trunc(self):
        return min(c.trunc for c in self.comps)

    def ord(self):
        return min(c.ord() for c in self.comps)

    def map(self, fn):
        return VectorSeries(fn(c) for c in self.comps)

    def is_zero(self):
        return all(c.is_zero() for c in self.comps)

    def is_real(self):
        return all(c.is_real() for c in self.comps)

    def max_abs(self):
        return max(c.max_abs() for c in self.comps)

    def with_trunc(self, n):
        return self.map(lambda c: c.with_trunc(n))

    def __repr__(self):
        return "VectorSeries(" + ", ".join(map(repr, self.comps)) + ")"

    def __eq__(self, o):
        return isinstance(o, VectorSeries) and self.comps == o.comps

    __hash__ = None

    # -- linear structure -------------------------------------------------
    def __add__(self, o):
        return VectorSeries(a + b for a, b in zip(self.comps, o.comps))

    def __sub__(self, o):
        return VectorSeries(a - b for a, b in zip(self.comps, o.comps))

    def __neg__(self):
        return self.map(lambda c: -c)

    def __mul__(self, s):
        """Multiply by a scalar series or a number."""
        return VectorSeries(c * s for c in self.comps)

    __rmul__ = __mul__

    def conj(self):
        return self.map(LaurentLogSeries.conj)

    def d_z(self):
        return self.map(LaurentLogSeries.d_z)

    def d_zbar(self):
        return self.map(LaurentLogSeries.d_zbar)

    def d_x(self):
        return self.map(LaurentLogSeries.d_x)

    def d_y(self):
        return self.map(LaurentLogSeries.d_y)

    def real_part(self):
        return self.map(LaurentLogSeries.real_part)

    def padded(self, n):
        """Append zero components up to dimension ``n``."""
        c0 = self.comps[0]
        extra = [LaurentLogSeries.zero(self.trunc, c0.exact) for _ in range(n - len(self))]
        return VectorSeries(self.comps + tuple(extra))

    def to_json(self):
        return [c.to_json() for c in self.comps]

    @classmethod
    def from_json(cls, rows):
        return cls(LaurentLogSeries.from_json(r) for r in rows)


def dot(u, v):
    """Complex-bilinear dot product."""
    total = u[0] * v[0]
    for a, b in zip(u.comps[1:], v.comps[1:]):
        total = total + a * b
    return total


def norm2(u):
    """Hermitian square norm ``<u, conj u>``."""
    return dot(u, u.conj())


def wedge(u, v):
    """Components ``u_i v_j - u_j v_i`` for ``i < j``, keyed by ``(i, j)``."""
    return {(i, j): u[i] * v[j] - u[j] * v[i] for i, j in combinations(range(len(u)), 2)}


def cross(u, v):
    """Cross product in three dimensions."""
    return VectorSeries(
        [
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ]
    )


def _perm_sign(p):
    p = list(p)
    s = 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def hodge_cross4(a, b, c):
    """Generalized cross product in four dimensions.

    Returns ``w`` with ``<w, x> = det[a, b, c, x]``, i.e. ``*(a ^ b ^ c)``.
    """
    m = wedge(a, b)
    out = []
    for l in range(4):
        total = None
        for (i, j), mij in m.items():
            if l in (i, j):
                continue
            (k,) = {0, 1, 2, 3} - {i, j, l}
            t = mij * c[k]
            t = t if _perm_sign((i, j, k, l)) > 0 else -t
            total = t if total is None else total + t
        out.append(total)
    return VectorSeries(out)


def const_vector(values, trunc, exact=True):
    return VectorSeries(LaurentLogSeries.constant(v, trunc, exact) for v in values)


HALF = Fraction(1, 2)
I = GaussRat(0, 1)
