"""Polynomials and rational functions with Gaussian-rational coefficients.

Polynomials are plain lists of coefficients in ascending powers.  Only what
the Weierstrass construction needs is here: products, powers, composition
with a Moebius map and Laurent expansion at the origin.
"""

from __future__ import annotations

from fractions import Fraction

from .series import GaussRat, LaurentLogSeries, SeriesError


class ExpansionFailure(SeriesError):
    pass


def parse_coeff(x):
    """Accept ints, rationals, ``"p/q"`` strings, complex numbers or ``[re, im]`` pairs."""
    if isinstance(x, (list, tuple)):
        re, im = x
        return GaussRat(Fraction(str(re)), Fraction(str(im)))
    if isinstance(x, str):
        return GaussRat(Fraction(x))
    if isinstance(x, float):
        return GaussRat(Fraction(str(x)))
    return GaussRat.coerce(x)


def poly(coeffs):
    out = [parse_coeff(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return out


def padd(p, q):
    n = max(len(p), len(q))
    out = [GaussRat() for _ in range(n)]
    for i, c in enumerate(p):
        out[i] = out[i] + c
    for i, c in enumerate(q):
        out[i] = out[i] + c
    return poly(out)


def pmul(p, q):
    if not p or not q:
        return []
    out = [GaussRat() for _ in range(len(p) + len(q) - 1)]
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return poly(out)


def ppow(p, k):
    out = [GaussRat(1)]
    for _ in range(k):
        out = pmul(out, p)
    return out


def pscale(p, c):
    return poly([a * c for a in p])


class Rational:
    """A rational function ``num / den`` of one complex variable."""

    def __init__(self, num, den=(1,)):
        self.num = poly(num)
        self.den = poly(den)
        if not self.den:
            raise ExpansionFailure("zero denominator")

    def __mul__(self, o):
        return Rational(pmul(self.num, o.num), pmul(self.den, o.den))

    def compose_moebius(self, a, b, c, d):
        """Return ``self((a w + b) / (c w + d))`` as a rational function of ``w``."""
        top, bot = poly([b, a]), poly([d, c])
        n = max(len(self.num), len(self.den)) - 1
        num, den = [], []
        for k, coef in enumerate(self.num):
            num = padd(num, pscale(pmul(ppow(top, k), ppow(bot, n - k)), coef))
        for k, coef in enumerate(self.den):
            den = padd(den, pscale(pmul(ppow(top, k), ppow(bot, n - k)), coef))
        return Rational(num, den)

    def laurent(self, trunc, exact=True):
        """Laurent expansion at 0 as a holomorphic series with the given trunc."""
        num, den = self.num, self.den
        if not num:
            return LaurentLogSeries.zero(trunc, exact)
        j = next(i for i, c in enumerate(num) if c)
        k = next(i for i, c in enumerate(den) if c)
        shift = j - k
        num, den = num[j:], den[k:]
        nterms = trunc - shift
        inv0 = GaussRat(1) / den[0]
        out = []
        for n in range(max(nterms, 0)):
            acc = num[n] if n < len(num) else GaussRat()
            for i in range(1, min(n, len(den) - 1) + 1):
                acc = acc - den[i] * out[n - i]
            out.append(acc * inv0)
        terms = {(shift + n, 0, 0): c for n, c in enumerate(out)}
        s = LaurentLogSeries(terms, trunc, True)
        return s if exact else s.to_approx()


def moebius_derivative(a, b, c, d):
    """``d/dw (a w + b)/(c w + d)`` as a rational function."""
    det = parse_coeff(a) * parse_coeff(d) - parse_coeff(b) * parse_coeff(c)
    if not det:
        raise ExpansionFailure("degenerate Moebius chart")
    return Rational([det], pmul(poly([d, c]), poly([d, c])))
