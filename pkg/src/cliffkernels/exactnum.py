"""Exact rational and Gaussian-rational scalars.

Every number in this package is either a rational (gmpy2.mpq, arbitrary
precision, always in lowest terms with positive denominator) or a
GaussianRational a + b*i with rational a, b.  No floating point anywhere.
"""

from __future__ import annotations

import math
import re

from gmpy2 import mpq

Rational = mpq


def rational(num, den=1):
    """Exact rational from ints, strings ("3/4", "0.25") or Fractions."""
    if isinstance(num, str):
        s = num.strip()
        if "." in s:
            intpart, frac = s.split(".", 1)
            sign = -1 if intpart.strip().startswith("-") else 1
            whole = int(intpart) if intpart not in ("", "-", "+") else 0
            return (mpq(whole) + sign * mpq(int(frac or 0), 10 ** len(frac))) / den
        return mpq(s) / den
    return mpq(num, den)


def factorial(n: int) -> int:
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multi_factorial(exponents) -> int:
    """Product of factorials of the entries (the alpha! of a multi-index)."""
    out = 1
    for e in exponents:
        out *= math.factorial(e)
    return out


def pochhammer(a, k: int):
    """Rising factorial a(a+1)...(a+k-1); 1 for k = 0."""
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    out = mpq(1)
    a = mpq(a)
    for j in range(k):
        out *= a + j
    return out


class GaussianRational:
    """Exact complex scalar a + b*i with rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is mpq else mpq(re)
        self.im = im if type(im) is mpq else mpq(im)

    # -- constructors -------------------------------------------------

    @staticmethod
    def _raw(re, im) -> "GaussianRational":
        g = GaussianRational.__new__(GaussianRational)
        g.re = re
        g.im = im
        return g

    # -- structure ----------------------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def norm_sq(self):
        """|x|^2 as a plain rational."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(other.re - self.re, other.im - self.im)

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __mul__(self, other):
        if type(other) is GaussianRational:
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussianRational._raw(a * c - b * d, a * d + b * c)
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.norm_sq()
        if not n:
            raise ZeroDivisionError("division by zero GaussianRational")
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational._raw((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return GaussianRational(1) / self ** (-k)
        out = GaussianRational._raw(mpq(1), mpq(0))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_gaussian(self)


def _coerce(x):
    if type(x) is GaussianRational:
        return x
    if isinstance(x, (int, type(mpq()))):
        return GaussianRational._raw(mpq(x), mpq(0))
    if isinstance(x, GaussianRational):
        return x
    try:
        return GaussianRational._raw(mpq(x), mpq(0))
    except TypeError:
        return NotImplemented


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


def gaussian(re, im=0) -> GaussianRational:
    return GaussianRational(rational(re), rational(im))


def format_rational(x) -> str:
    return str(mpq(x))


def format_gaussian(x: GaussianRational) -> str:
    """Exact rendering: "3/4", "-1/2*i", "1+1/2*i", "1-1/2*i", "0"."""
    if not x.im:
        return str(x.re)
    imtxt = f"{x.im}*i"
    if not x.re:
        return imtxt
    if x.im > 0:
        return f"{x.re}+{imtxt}"
    return f"{x.re}-{-x.im}*i"


_TERM_RE = re.compile(r"[+-]?[^+-]*(?:[eE][+-]\d+)?")


def parse_rational(text: str):
    return rational(text)


def parse_gaussian(text: str) -> GaussianRational:
    """Parse "a+b*i" with exact fractions; accepts "i", "-i", "3/4", "1-i"."""
    s = text.strip().replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ValueError("empty scalar")
    re_part = mpq(0)
    im_part = mpq(0)
    # split into sign-prefixed chunks
    chunks = re.findall(r"[+-]?[^+-]+", s)
    if not chunks or "".join(chunks) != s:
        raise ValueError(f"cannot parse scalar {text!r}")
    for chunk in chunks:
        sign = -1 if chunk.startswith("-") else 1
        body = chunk.lstrip("+-")
        if body in ("i", "I"):
            im_part += sign
        elif body.endswith(("*i", "*I")):
            im_part += sign * rational(body[:-2])
        elif body.endswith(("i", "I")):
            im_part += sign * rational(body[:-1])
        else:
            re_part += sign * rational(body)
    return GaussianRational(re_part, im_part)
