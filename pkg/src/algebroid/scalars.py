"""Exact Gaussian-rational scalars.

Every quantity in this package is a element of Q(i): a complex number
a + b*i with rational a, b kept in canonical reduced form.  There is no
floating point anywhere; equality is structural equality of canonical
forms, and conjugation is the scalar-level star used by every antilinear
map downstream.
"""

from __future__ import annotations

from fractions import Fraction


class QRat:
    """Gaussian rational a + b*i with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("QRat is immutable")

    # -- arithmetic -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return QRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return QRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return QRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return QRat(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __neg__(self):
        return QRat(-self.re, -self.im)

    def inv(self):
        return ONE / self

    def conjugate(self):
        return QRat(self.re, -self.im)

    # -- comparisons / hashing --------------------------------------

    def __eq__(self, other):
        if isinstance(other, QRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_zero(self):
        return not (self.re or self.im)

    # -- text encoding ----------------------------------------------

    def __repr__(self):
        return "QRat(%r)" % (self.to_text(),)

    def __str__(self):
        return self.to_text()

    def to_text(self):
        """Human-readable form used in witnesses, e.g. '1/2+3i'."""
        if self.im == 0:
            return _frac_str(self.re)
        if self.re == 0:
            return _frac_str(self.im) + "i"
        sign = "+" if self.im > 0 else "-"
        return _frac_str(self.re) + sign + _frac_str(abs(self.im)) + "i"

    def to_json(self):
        """Canonical file encoding: {"re": "p/q", "im": "p/q"}."""
        return {"re": _frac_str(self.re), "im": _frac_str(self.im)}

    @staticmethod
    def from_json(obj):
        if isinstance(obj, str):
            return QRat(_parse_frac(obj))
        if isinstance(obj, int):
            return QRat(obj)
        if not isinstance(obj, dict) or set(obj) - {"re", "im"}:
            raise ValueError("bad scalar encoding: %r" % (obj,))
        return QRat(_parse_frac(obj.get("re", "0")), _parse_frac(obj.get("im", "0")))


def _coerce(x):
    if isinstance(x, QRat):
        return x
    if isinstance(x, (int, Fraction)):
        return QRat(x)
    raise TypeError("cannot mix QRat with %r" % type(x))


def _frac_str(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def _parse_frac(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    s = s.strip()
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


ZERO = QRat(0)
ONE = QRat(1)
I = QRat(0, 1)
MINUS_ONE = QRat(-1)


def qi(re=0, im=0) -> QRat:
    """Shorthand constructor (accepts ints, Fractions or 'p/q' strings)."""
    if isinstance(re, str):
        re = _parse_frac(re)
    if isinstance(im, str):
        im = _parse_frac(im)
    return QRat(re, im)
