"""Truncated Laurent series in z, zbar and log|z|.

A series is a finite sum of monomials ``c * z**a * zbar**b * log(|z|)**p``
together with a truncation order ``N``: every monomial of total degree
``a + b < N`` is known exactly, everything else is unknown.  Log powers are
unrestricted below the truncation order, so ``O(|z|**N)`` really means
``O(|z|**(N - eps))``.

Two coefficient backends are supported.  The exact backend stores Gaussian
rationals (:class:`GaussRat`); the approximate backend stores Python complex
numbers and drops anything smaller than ``TAU`` in modulus.
"""

from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction
from numbers import Rational

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

TAU = 1e-10


class SeriesError(Exception):
    """Base class for errors raised by the series kernel."""


class BackendMismatch(SeriesError):
    pass


class LeadingPartNotInvertible(SeriesError):
    pass


class RIndependenceViolated(SeriesError):
    pass


class InsufficientOrder(SeriesError):
    pass


def _q(x):
    if isinstance(x, str):
        return _Q(Fraction(x))
    if isinstance(x, float):
        return _Q(Fraction(x))
    return _Q(x)


class GaussRat:
    """Gaussian rational ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _q(re)
        self.im = _q(im)

    @classmethod
    def _raw(cls, re, im):
        g = object.__new__(cls)
        g.re = re
        g.im = im
        return g

    @classmethod
    def coerce(cls, x):
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(x, 0)

    def __add__(self, o):
        if not isinstance(o, GaussRat):
            o = GaussRat.coerce(o)
        return GaussRat._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        if not isinstance(o, GaussRat):
            o = GaussRat.coerce(o)
        return GaussRat._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return GaussRat.coerce(o) - self

    def __neg__(self):
        return GaussRat._raw(-self.re, -self.im)

    def __mul__(self, o):
        if isinstance(o, GaussRat):
            a, b, c, d = self.re, self.im, o.re, o.im
            return GaussRat._raw(a * c - b * d, a * d + b * c)
        if isinstance(o, (int, Rational)) or type(o) is _Q:
            o = _Q(o)
            return GaussRat._raw(self.re * o, self.im * o)
        return self * GaussRat.coerce(o)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = GaussRat.coerce(o)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussRat._raw(o.re / n, -o.im / n)

    def __rtruediv__(self, o):
        return GaussRat.coerce(o) / self

    def conjugate(self):
        return GaussRat._raw(self.re, -self.im)

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def __abs__(self):
        return math.sqrt(float(self.abs2()))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, o):
        try:
            o = GaussRat.coerce(o)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if not self.im:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


def fmt_rational(x) -> str:
    x = Fraction(int(x.numerator), int(x.denominator))
    return f"{x.numerator}/{x.denominator}"


class LaurentLogSeries:
    """Truncated series ``sum c[a,b,p] z^a zbar^b log^p|z| + O(|z|^trunc)``.

    ``terms`` maps ``(a, b, p)`` to a coefficient.  Instances are treated as
    immutable.
    """

    __slots__ = ("terms", "trunc", "exact", "_ord", "_bydeg")

    def __init__(self, terms=None, trunc=0, exact=True, *, _clean=False):
        self.trunc = int(trunc)
        self.exact = exact
        self._ord = None
        self._bydeg = None
        if _clean:
            self.terms = terms
            return
        out = {}
        for (a, b, p), c in (terms or {}).items():
            if a + b >= self.trunc:
                continue
            if p < 0:
                raise ValueError("negative log power")
            if exact:
                c = GaussRat.coerce(c)
                if c:
                    out[(a, b, p)] = c
            else:
                c = complex(c)
                if abs(c) >= TAU:
                    out[(a, b, p)] = c
        self.terms = out

    # -- construction helpers -------------------------------------------
    @classmethod
    def _make(cls, terms, trunc, exact):
        if exact:
            terms = {k: v for k, v in terms.items() if v and k[0] + k[1] < trunc}
        else:
            terms = {k: v for k, v in terms.items() if abs(v) >= TAU and k[0] + k[1] < trunc}
        return cls(terms, trunc, exact, _clean=True)

    @classmethod
    def monomial(cls, a, b=0, p=0, coeff=1, trunc=None, exact=True):
        if trunc is None:
            trunc = a + b + 1
        return cls({(a, b, p): coeff}, trunc, exact)

    @classmethod
    def constant(cls, c, trunc, exact=True):
        return cls({(0, 0, 0): c}, trunc, exact)

    @classmethod
    def zero(cls, trunc, exact=True):
        return cls({}, trunc, exact, _clean=True)

    def one(self):
        return LaurentLogSeries.constant(1, self.trunc, self.exact)

    def with_trunc(self, n):
        """Lower the truncation order (raising it would invent information)."""
        n = min(n, self.trunc)
        return LaurentLogSeries._make(self.terms, n, self.exact)

    def to_approx(self):
        if not self.exact:
            return self
        return LaurentLogSeries({k: complex(v) for k, v in self.terms.items()}, self.trunc, False)

    # -- basic queries --------------------------------------------------
    def ord(self):
        """Minimal total degree of a stored term; a zero series reports ``trunc``."""
        if self._ord is None:
            self._ord = min((a + b for a, b, _ in self.terms), default=self.trunc)
        return self._ord

    def is_zero(self):
        return not self.terms

    def coeff(self, a, b=0, p=0):
        if a + b >= self.trunc:
            raise InsufficientOrder(f"slot ({a},{b},{p}) lies outside trunc {self.trunc}")
        return self.terms.get((a, b, p), GaussRat() if self.exact else 0j)

    def max_abs(self):
        return max((abs(complex(c)) for c in self.terms.values()), default=0.0)

    def max_log_power(self):
        return max((p for _, _, p in self.terms), default=0)

    def _by_degree(self):
        if self._bydeg is None:
            groups = defaultdict(list)
            for (a, b, p), c in self.terms.items():
                groups[a + b].append((a, b, p, c))
            self._bydeg = sorted(groups.items())
        return self._bydeg

    def is_real(self):
        for (a, b, p), c in self.terms.items():
            d = self.terms.get((b, a, p))
            if d is None:
                return False
            if self.exact:
                if c != d.conjugate():
                    return False
            elif abs(c - d.conjugate()) >= TAU:
                return False
        return True

    def __repr__(self):
        if not self.terms:
            return f"O(|z|^{self.trunc})"
        parts = []
        for (a, b, p), c in sorted(self.terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0])):
            mono = []
            if a:
                mono.append("z" if a == 1 else f"z^{a}")
            if b:
                mono.append("zb" if b == 1 else f"zb^{b}")
            if p:
                mono.append("L" if p == 1 else f"L^{p}")
            parts.append(f"{c}" + ("*" + "*".join(mono) if mono else ""))
        return " + ".join(parts) + f" + O(|z|^{self.trunc})"

    # -- ring operations ------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentLogSeries):
            if other.exact != self.exact:
                raise BackendMismatch("cannot mix exact and approximate series")
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return self + LaurentLogSeries.constant(other, self.trunc, self.exact)
        n = min(self.trunc, o.trunc)
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out[k] + v if k in out else v
        return LaurentLogSeries._make(out, n, self.exact)

    __radd__ = __add__

    def __neg__(self):
        return LaurentLogSeries(
            {k: -v for k, v in self.terms.items()}, self.trunc, self.exact, _clean=True
        )

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return self + (-other)
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if self.exact:
            c = GaussRat.coerce(c)
        else:
            c = complex(c)
        return LaurentLogSeries._make({k: v * c for k, v in self.terms.items()}, self.trunc, self.exact)

    def __mul__(self, other):
        if hasattr(other, "comps"):
            return NotImplemented
        o = self._coerce(other)
        if o is None:
            return self.scale(other)
        n = min(self.trunc + o.ord(), o.trunc + self.ord())
        out = {}
        right = o._by_degree()
        for d1, group in self._by_degree():
            lim = n - d1
            for d2, group2 in right:
                if d2 >= lim:
                    break
                for a, b, p, c in group:
                    for a2, b2, p2, c2 in group2:
                        k = (a + a2, b + b2, p + p2)
                        v = c * c2
                        if k in out:
                            out[k] = out[k] + v
                        else:
                            out[k] = v
        return LaurentLogSeries._make(out, n, self.exact)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LaurentLogSeries):
            return self * other.invert()
        if self.exact:
            return self.scale(GaussRat(1) / GaussRat.coerce(other))
        return self.scale(1 / complex(other))

    def __pow__(self, k):
        if k < 0:
            return self.invert() ** (-k)
        out = self.one()
        for _ in range(k):
            out = out * self
        return out

    def conj(self):
        return LaurentLogSeries(
            {(b, a, p): c.conjugate() for (a, b, p), c in self.terms.items()},
            self.trunc,
            self.exact,
            _clean=True,
        )

    def real_part(self):
        return (self + self.conj()).scale(Fraction(1, 2))

    def imag_part(self):
        return (self - self.conj()).scale(GaussRat(0, Fraction(-1, 2)) if self.exact else -0.5j)

    def shift(self, da, db):
        """Multiply by the monomial ``z^da zbar^db``."""
        return LaurentLogSeries(
            {(a + da, b + db, p): c for (a, b, p), c in self.terms.items()},
            self.trunc + da + db,
            self.exact,
            _clean=True,
        )

    # -- calculus -------------------------------------------------------
    def d_z(self):
        out = {}
        half = Fraction(1, 2) if self.exact else 0.5
        for (a, b, p), c in self.terms.items():
            if a:
                k = (a - 1, b, p)
                out[k] = out[k] + c * a if k in out else c * a
            if p:
                k = (a - 1, b, p - 1)
                v = c * (p * half)
                out[k] = out[k] + v if k in out else v
        return LaurentLogSeries._make(out, self.trunc - 1, self.exact)

    def d_zbar(self):
        return self.conj().d_z().conj()

    def d_x(self):
        return self.d_z() + self.d_zbar()

    def d_y(self):
        i = GaussRat(0, 1) if self.exact else 1j
        return (self.d_z() - self.d_zbar()).scale(i)

    def antiderivative_zbar(self):
        """Return ``u`` with ``d_zbar(u) == self`` below trunc; holomorphic constant 0."""
        out = {}
        memo = {}
        for (a, b, p), c in self.terms.items():
            for k, v in _antideriv_monomial(a, b, p, memo, self.exact):
                w = v * c
                out[k] = out[k] + w if k in out else w
        return LaurentLogSeries._make(out, self.trunc + 1, self.exact)

    def antiderivative_z(self):
        return self.conj().antiderivative_zbar().conj()

    def invert(self):
        """Multiplicative inverse; the leading part must be a single log-free monomial."""
        if not self.terms:
            raise LeadingPartNotInvertible("zero series")
        d0 = self.ord()
        lead = [(k, c) for k, c in self.terms.items() if k[0] + k[1] == d0]
        if len(lead) != 1 or lead[0][0][2] != 0:
            raise LeadingPartNotInvertible(f"leading part {lead} is not a single log-free monomial")
        (a0, b0, _), c0 = lead[0]
        inv_c = (GaussRat(1) / c0) if self.exact else 1 / c0
        window = self.trunc - d0
        # u = s / (c0 z^a0 zbar^b0) - 1, grouped by degree >= 1
        u = defaultdict(list)
        for (a, b, p), c in self.terms.items():
            if (a, b, p) == (a0, b0, 0):
                continue
            u[a + b - d0].append((a - a0, b - b0, p, c * inv_c))
        # (1 + u) t = 1 solved degree by degree
        one = GaussRat(1) if self.exact else 1 + 0j
        t = [{(0, 0, 0): one}]
        for d in range(1, window):
            acc = {}
            for j in range(1, d + 1):
                uj = u.get(j)
                if not uj:
                    continue
                for (a2, b2, p2), c2 in t[d - j].items():
                    for a, b, p, c in uj:
                        k = (a + a2, b + b2, p + p2)
                        v = c * c2
                        acc[k] = acc[k] + v if k in acc else v
            t.append({k: -v for k, v in acc.items() if (v if self.exact else abs(v) >= TAU)})
        out = {}
        for layer in t:
            for (a, b, p), c in layer.items():
                out[(a - a0, b - b0, p)] = c * inv_c
        return LaurentLogSeries._make(out, self.trunc - 2 * d0, self.exact)

    # -- residues -------------------------------------------------------
    def circle_pairing(self):
        """Contributions to the integral of ``f dz`` over ``|z| = r``.

        Each entry is ``(r_exponent, log_power, c)`` meaning a contribution
        ``2*pi*i * c * r**r_exponent * log(r)**log_power``.
        """
        out = []
        for (a, b, p), c in sorted(self.terms.items()):
            if b == a + 1:
                out.append((a + b + 1, p, c))
        return out

    def im_residue(self):
        """``(1/4pi) Im`` of the integral of ``f dz`` around the origin."""
        if self.trunc <= -1:
            raise InsufficientOrder("the 1/z slot is outside the reliable window")
        value = None
        for deg, p, c in self.circle_pairing():
            if deg == 0 and p == 0:
                value = c
                continue
            re = c.real
            if (re != 0) if self.exact else (abs(re) >= TAU):
                raise RIndependenceViolated(
                    f"contour integral depends on r: exponent {deg}, log power {p}, coeff {c}"
                )
        if value is None:
            return _Q(0) if self.exact else 0.0
        if self.exact:
            return value.real / 2
        return value.real / 2

    # -- evaluation -----------------------------------------------------
    def __call__(self, z):
        """Evaluate at a nonzero complex number or numpy array."""
        import numpy as np

        z = np.asarray(z, dtype=complex)
        zb = np.conj(z)
        L = np.log(np.abs(z))
        total = np.zeros_like(z)
        for (a, b, p), c in self.terms.items():
            total = total + complex(c) * z**a * zb**b * L**p
        return total if total.ndim else complex(total)

    # -- serialization --------------------------------------------------
    def to_json(self):
        rows = []
        for (a, b, p), c in sorted(self.terms.items()):
            if self.exact:
                rows.append({"a": a, "b": b, "p": p, "re": fmt_rational(c.re), "im": fmt_rational(c.im)})
            else:
                rows.append({"a": a, "b": b, "p": p, "re": c.real, "im": c.imag})
        return {"trunc": self.trunc, "exact": self.exact, "terms": rows}

    @classmethod
    def from_json(cls, obj):
        exact = obj.get("exact", True)
        terms = {}
        for row in obj["terms"]:
            k = (int(row["a"]), int(row["b"]), int(row["p"]))
            if exact:
                terms[k] = GaussRat(Fraction(str(row["re"])), Fraction(str(row["im"])))
            else:
                terms[k] = complex(float(row["re"]), float(row["im"]))
        return cls(terms, obj["trunc"], exact)

    def __eq__(self, other):
        if not isinstance(other, LaurentLogSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.exact == other.exact and self.terms == other.terms

    def __hash__(self):
        return hash((self.trunc, frozenset(self.terms)))


def _antideriv_monomial(a, b, p, memo, exact):
    """Antiderivative in zbar of ``z^a zbar^b L^p`` as a list of (key, coeff)."""
    key = (a, b, p)
    if key in memo:
        return memo[key]
    one = GaussRat(1) if exact else 1.0
    if b == -1:
        res = [((a, 0, p + 1), one * Fraction(2, p + 1) if exact else 2.0 / (p + 1))]
    else:
        inv = Fraction(1, b + 1) if exact else 1.0 / (b + 1)
        res = [((a, b + 1, p), one * inv)]
        if p:
            f = -Fraction(p, 2) * inv if exact else -(p / 2) * inv
            for k, v in _antideriv_monomial(a, b, p - 1, memo, exact):
                res.append((k, v * f))
    memo[key] = res
    return res


def z(trunc=100, exact=True):
    return LaurentLogSeries.monomial(1, 0, 0, 1, trunc, exact)


def zbar(trunc=100, exact=True):
    return LaurentLogSeries.monomial(0, 1, 0, 1, trunc, exact)


def log_abs(trunc=100, exact=True):
    return LaurentLogSeries.monomial(0, 0, 1, 1, trunc, exact)


def I(exact=True):
    """The imaginary unit in the requested backend."""
    return GaussRat(0, 1) if exact else 1j
