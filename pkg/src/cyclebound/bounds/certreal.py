"""Outward-rounded interval arithmetic over MPFR.

Every :class:`CertReal` is a closed interval ``[lo, hi]`` of dyadic rationals
that is guaranteed to contain the real number it represents.  Endpoints are
computed with MPFR (via gmpy2) using directed rounding: lower endpoints are
rounded toward -inf and upper endpoints toward +inf.  Transcendental results
are additionally padded by one ulp in the outward direction.

Rounding contexts are explicit objects, never the thread-global gmpy2
context, so values can be built concurrently from several threads.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

import gmpy2
from gmpy2 import mpfr, mpq, mpz

Number = Union[int, Fraction]

DEFAULT_PREC = 128
MAX_PREC = 1024


class Outcome(enum.Enum):
    """Tri-state result of a certified comparison."""

    TRUE = "TRUE"
    FALSE = "FALSE"
    UNDECIDED = "UNDECIDED"

    def __bool__(self) -> bool:  # pragma: no cover - guard against misuse
        raise TypeError("Outcome is tri-state; compare against Outcome.TRUE explicitly")


@lru_cache(maxsize=None)
def _contexts(prec: int) -> tuple[gmpy2.context, gmpy2.context]:
    if prec < 2:
        raise ValueError(f"precision must be at least 2 bits, got {prec}")
    down = gmpy2.context(precision=prec, round=gmpy2.RoundDown)
    up = gmpy2.context(precision=prec, round=gmpy2.RoundUp)
    return down, up


def _to_mpq(x: Number) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


def _rat_down(x: Number, prec: int) -> mpfr:
    q = _to_mpq(x)
    return _contexts(prec)[0].div(mpz(q.numerator), mpz(q.denominator))


def _rat_up(x: Number, prec: int) -> mpfr:
    q = _to_mpq(x)
    return _contexts(prec)[1].div(mpz(q.numerator), mpz(q.denominator))


def _pad(lo: mpfr, hi: mpfr, prec: int) -> tuple[mpfr, mpfr]:
    down, up = _contexts(prec)
    return down.next_below(lo), up.next_above(hi)


class CertReal:
    """Closed interval enclosing one real number.

    ``lo`` and ``hi`` are exposed as exact :class:`fractions.Fraction` values;
    the MPFR endpoints are available as ``lo_mpfr`` / ``hi_mpfr``.
    """

    __slots__ = ("_lo", "_hi", "prec")

    def __init__(self, lo: mpfr, hi: mpfr, prec: int):
        if not (lo <= hi):
            raise ValueError(f"invalid interval [{lo}, {hi}]")
        self._lo = lo
        self._hi = hi
        self.prec = prec

    # -- construction -------------------------------------------------
    @classmethod
    def exact(cls, value: Number, prec: int = DEFAULT_PREC) -> "CertReal":
        """Tightest enclosure of a rational at ``prec`` bits."""
        return cls(_rat_down(value, prec), _rat_up(value, prec), prec)

    @classmethod
    def hull(cls, lo: Number, hi: Number, prec: int = DEFAULT_PREC) -> "CertReal":
        return cls(_rat_down(lo, prec), _rat_up(hi, prec), prec)

    @classmethod
    def factorial(cls, n: int, prec: int = DEFAULT_PREC) -> "CertReal":
        if n < 0:
            raise ValueError("factorial of a negative integer")
        return cls.exact(math.factorial(n), prec)

    # -- endpoints ----------------------------------------------------
    @property
    def lo(self) -> Fraction:
        p, q = self._lo.as_integer_ratio()
        return Fraction(int(p), int(q))

    @property
    def hi(self) -> Fraction:
        p, q = self._hi.as_integer_ratio()
        return Fraction(int(p), int(q))

    @property
    def lo_mpfr(self) -> mpfr:
        return self._lo

    @property
    def hi_mpfr(self) -> mpfr:
        return self._hi

    def width(self) -> Fraction:
        return self.hi - self.lo

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.mid())

    def contains(self, x: Number) -> bool:
        q = _to_mpq(x)
        return self._lo <= q <= self._hi

    def overlaps(self, other: "CertReal") -> bool:
        return self._lo <= other._hi and other._lo <= self._hi

    def within(self, other: "CertReal") -> bool:
        return other._lo <= self._lo and self._hi <= other._hi

    def inflate(self, rel: Fraction) -> "CertReal":
        """Widen by ``rel`` times the magnitude on each side."""
        mag = max(abs(self.lo), abs(self.hi))
        return CertReal.hull(self.lo - rel * mag, self.hi + rel * mag, self.prec)

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "CertReal":
        if isinstance(other, CertReal):
            return other
        if isinstance(other, (int, Fraction)):
            return CertReal.exact(other, self.prec)
        return NotImplemented

    def __neg__(self) -> "CertReal":
        return CertReal(-self._hi, -self._lo, self.prec)

    def __add__(self, other) -> "CertReal":
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        prec = max(self.prec, o.prec)
        down, up = _contexts(prec)
        return CertReal(down.add(self._lo, o._lo), up.add(self._hi, o._hi), prec)

    __radd__ = __add__

    def __sub__(self, other) -> "CertReal":
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        prec = max(self.prec, o.prec)
        down, up = _contexts(prec)
        return CertReal(down.sub(self._lo, o._hi), up.sub(self._hi, o._lo), prec)

    def __rsub__(self, other) -> "CertReal":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CertReal":
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        prec = max(self.prec, o.prec)
        down, up = _contexts(prec)
        a, b, c, d = self._lo, self._hi, o._lo, o._hi
        if a >= 0 and c >= 0:
            return CertReal(down.mul(a, c), up.mul(b, d), prec)
        los = [down.mul(x, y) for x in (a, b) for y in (c, d)]
        his = [up.mul(x, y) for x in (a, b) for y in (c, d)]
        return CertReal(min(los), max(his), prec)

    __rmul__ = __mul__

    def reciprocal(self) -> "CertReal":
        if self._lo <= 0 <= self._hi:
            raise ZeroDivisionError("interval contains zero")
        down, up = _contexts(self.prec)
        return CertReal(down.div(1, self._hi), up.div(1, self._lo), self.prec)

    def __truediv__(self, other) -> "CertReal":
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        prec = max(self.prec, o.prec)
        if o._lo <= 0 <= o._hi:
            raise ZeroDivisionError("interval divisor contains zero")
        down, up = _contexts(prec)
        a, b, c, d = self._lo, self._hi, o._lo, o._hi
        if a >= 0 and c > 0:
            return CertReal(down.div(a, d), up.div(b, c), prec)
        los = [down.div(x, y) for x in (a, b) for y in (c, d)]
        his = [up.div(x, y) for x in (a, b) for y in (c, d)]
        return CertReal(min(los), max(his), prec)

    def __rtruediv__(self, other) -> "CertReal":
        return self._coerce(other) / self

    def __pow__(self, e) -> "CertReal":
        if isinstance(e, int):
            return self.ipow(e)
        if isinstance(e, Fraction):
            return self.rpow(e)
        return NotImplemented

    def ipow(self, e: int) -> "CertReal":
        if e < 0:
            return self.ipow(-e).reciprocal()
        if e == 0:
            return CertReal.exact(1, self.prec)
        down, up = _contexts(self.prec)
        a, b = self._lo, self._hi
        if a >= 0:
            return CertReal(down.pow(a, e), up.pow(b, e), self.prec)
        if b <= 0:
            lo, hi = down.pow(-b, e), up.pow(-a, e)
            return CertReal(lo, hi, self.prec) if e % 2 == 0 else CertReal(-hi, -lo, self.prec)
        if e % 2 == 1:
            return CertReal(-up.pow(-a, e), up.pow(b, e), self.prec)
        return CertReal(mpfr(0), max(up.pow(-a, e), up.pow(b, e)), self.prec)

    def root(self, n: int) -> "CertReal":
        """Positive real n-th root (requires a nonnegative interval)."""
        if n < 1:
            raise ValueError("root index must be positive")
        if self._lo < 0:
            raise ValueError("root of an interval with negative part")
        down, up = _contexts(self.prec)
        return CertReal(down.rootn(self._lo, n), up.rootn(self._hi, n), self.prec)

    def rpow(self, e: Fraction) -> "CertReal":
        """``x**e`` for rational ``e``; ``x`` must be positive unless ``e`` is an integer."""
        e = Fraction(e)
        if e.denominator == 1:
            return self.ipow(e.numerator)
        if e < 0:
            return self.rpow(-e).reciprocal()
        if e.numerator > 64 and self._lo > 0:
            return (self.log() * e).exp()
        return self.ipow(e.numerator).root(e.denominator)

    def sqrt(self) -> "CertReal":
        return self.root(2)

    def exp(self) -> "CertReal":
        down, up = _contexts(self.prec)
        return CertReal(*_pad(down.exp(self._lo), up.exp(self._hi), self.prec), self.prec)

    def log(self) -> "CertReal":
        if self._lo <= 0:
            raise ValueError("log of an interval that is not strictly positive")
        down, up = _contexts(self.prec)
        return CertReal(*_pad(down.log(self._lo), up.log(self._hi), self.prec), self.prec)

    # -- rendering ----------------------------------------------------
    def __repr__(self) -> str:
        return f"CertReal([{render_down(self.lo)}, {render_up(self.hi)}], prec={self.prec})"

    def to_json(self, digits: int = 24) -> dict:
        return {"lo": render_down(self.lo, digits), "hi": render_up(self.hi, digits)}


def pi(prec: int = DEFAULT_PREC) -> CertReal:
    down, up = _contexts(prec)
    return CertReal(*_pad(down.const_pi(), up.const_pi(), prec), prec)


def euler_e(prec: int = DEFAULT_PREC) -> CertReal:
    return CertReal.exact(1, prec).exp()


# -- certified comparisons ---------------------------------------------

def _as_interval(x, prec: int) -> CertReal:
    return x if isinstance(x, CertReal) else CertReal.exact(x, prec)


def certified_lt(x, y) -> bool:
    """True only when ``x.hi < y.lo``."""
    prec = max(getattr(x, "prec", 2), getattr(y, "prec", 2), DEFAULT_PREC)
    return _as_interval(x, prec).hi_mpfr < _as_interval(y, prec).lo_mpfr


def certified_le(x, y) -> bool:
    prec = max(getattr(x, "prec", 2), getattr(y, "prec", 2), DEFAULT_PREC)
    return _as_interval(x, prec).hi_mpfr <= _as_interval(y, prec).lo_mpfr


def certified_gt(x, y) -> bool:
    return certified_lt(y, x)


def certified_ge(x, y) -> bool:
    """True only when ``x.lo >= y.hi``."""
    return certified_le(y, x)


def compare(x, y, rel: str) -> Outcome:
    """Decide ``x rel y`` from interval endpoints alone."""
    if rel == "<":
        if certified_lt(x, y):
            return Outcome.TRUE
        return Outcome.FALSE if certified_ge(x, y) else Outcome.UNDECIDED
    if rel == "<=":
        if certified_le(x, y):
            return Outcome.TRUE
        return Outcome.FALSE if certified_gt(x, y) else Outcome.UNDECIDED
    if rel == ">":
        return compare(y, x, "<")
    if rel == ">=":
        return compare(y, x, "<=")
    if rel == "==":
        if certified_lt(x, y) or certified_gt(x, y):
            return Outcome.FALSE
        return Outcome.UNDECIDED
    raise ValueError(f"unknown relation {rel!r}")


# -- decimal rendering ---------------------------------------------------

def _render(x: Fraction, digits: int, ceil: bool) -> str:
    if x == 0:
        return "0"
    if x.denominator == 1 and len(str(abs(x.numerator))) <= digits:
        return str(x.numerator)
    neg = x < 0
    ax = -x if neg else x
    # scale so that the rendered mantissa has ``digits`` significant digits
    exp10 = len(str(ax.numerator // ax.denominator)) if ax >= 1 else -_leading_zeros(ax)
    scale = digits - exp10
    scaled = ax * Fraction(10) ** scale
    round_up = ceil != neg
    n = -((-scaled.numerator) // scaled.denominator) if round_up else scaled.numerator // scaled.denominator
    s = str(n)
    if scale > 0:
        s = s.rjust(scale + 1, "0")
        s = s[:-scale] + "." + s[-scale:]
        s = s.rstrip("0").rstrip(".")
    else:
        s = s + "0" * (-scale)
    return ("-" if neg else "") + s


def _leading_zeros(x: Fraction) -> int:
    k = 0
    while x < Fraction(1, 10):
        x *= 10
        k += 1
    return k


def render_down(x: Fraction, digits: int = 24) -> str:
    """Decimal string that is <= ``x``."""
    return _render(Fraction(x), digits, ceil=False)


def render_up(x: Fraction, digits: int = 24) -> str:
    """Decimal string that is >= ``x``."""
    return _render(Fraction(x), digits, ceil=True)
