"""Exact symbolic values for tie resolution.

An :class:`Exact` is a finite sum ``sum_j c_j * core_j`` where each ``c_j`` is
a rational and each core is a product of atoms raised to rational powers.
Atoms are either primes (exponents normalised into ``(0, 1)``, with integral
parts folded into the coefficient) or opaque positive reals such as
``("alpha", 5)``, ``"pi"`` or ``"e"``.

Only *syntactic* cancellation is used: if a difference reduces to the empty
sum it is exactly zero.  A nonzero normal form is never taken as a proof of
inequality unless it is a single term, whose sign is the sign of its
coefficient because every atom is positive.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Hashable, Iterable, Mapping, Optional

Atom = Hashable
Core = frozenset  # of (atom, Fraction exponent) pairs

_FACTOR_LIMIT = 100_000


@lru_cache(maxsize=4096)
def factor_int(n: int) -> Optional[tuple[tuple[int, int], ...]]:
    """Prime factorisation by trial division; ``None`` if it would be too costly."""
    if n < 1:
        raise ValueError("factor_int expects a positive integer")
    out = []
    p = 2
    while p * p <= n and p <= _FACTOR_LIMIT:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        if p * p <= n:
            return None
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=1024)
def factorial_primes(n: int) -> tuple[tuple[int, int], ...]:
    """Prime exponents of ``n!`` via Legendre's formula."""
    out = []
    for p in range(2, n + 1):
        if all(p % q for q in range(2, math.isqrt(p) + 1)):
            e, q = 0, p
            while q <= n:
                e += n // q
                q *= p
            out.append((p, e))
    return tuple(out)


def _is_prime_atom(a: Atom) -> bool:
    return isinstance(a, int)


def _normalise(coef: Fraction, powers: Mapping[Atom, Fraction]) -> tuple[Fraction, Core]:
    core = []
    for atom, e in powers.items():
        e = Fraction(e)
        if e == 0:
            continue
        if _is_prime_atom(atom):
            whole = math.floor(e)
            frac = e - whole
            if whole:
                coef *= Fraction(atom) ** whole
            if frac:
                core.append((atom, frac))
        else:
            core.append((atom, e))
    return coef, frozenset(core)


class Exact:
    """Immutable exact value: rational combination of monomial cores."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Core, Fraction]):
        self.terms = {c: v for c, v in terms.items() if v != 0}

    # -- constructors -------------------------------------------------
    @classmethod
    def rational(cls, q) -> "Exact":
        return cls({frozenset(): Fraction(q)})

    @classmethod
    def monomial(cls, coef=1, powers: Optional[Mapping[Atom, Fraction]] = None) -> "Exact":
        c, core = _normalise(Fraction(coef), powers or {})
        return cls({core: c})

    @classmethod
    def atom(cls, name: Atom, exponent=1) -> "Exact":
        return cls.monomial(1, {name: Fraction(exponent)})

    @classmethod
    def root_of_rational(cls, q, exponent) -> Optional["Exact"]:
        """``q ** exponent`` for positive rational ``q``; ``None`` if ``q`` cannot be factored."""
        return cls.rational(q).pow(Fraction(exponent))

    # -- queries ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def sign(self) -> Optional[int]:
        """Exact sign when derivable syntactically, else ``None``."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            (coef,) = self.terms.values()
            return 1 if coef > 0 else -1
        if all(v > 0 for v in self.terms.values()):
            return 1
        if all(v < 0 for v in self.terms.values()):
            return -1
        return None

    def as_rational(self) -> Optional[Fraction]:
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and frozenset() in self.terms:
            return self.terms[frozenset()]
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Exact):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # mutable-looking mapping; not hashable

    def __repr__(self) -> str:
        if not self.terms:
            return "Exact(0)"
        parts = []
        for core, coef in sorted(self.terms.items(), key=lambda kv: repr(sorted(kv[0], key=repr))):
            factors = " * ".join(f"{a}^{e}" for a, e in sorted(core, key=repr))
            parts.append(f"{coef}" + (f" * {factors}" if factors else ""))
        return "Exact(" + " + ".join(parts) + ")"

    # -- arithmetic ---------------------------------------------------
    def __neg__(self) -> "Exact":
        return Exact({c: -v for c, v in self.terms.items()})

    def __add__(self, other) -> "Exact":
        other = _lift(other)
        out = dict(self.terms)
        for c, v in other.terms.items():
            out[c] = out.get(c, Fraction(0)) + v
        return Exact(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Exact":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "Exact":
        return _lift(other) - self

    def __mul__(self, other) -> "Exact":
        other = _lift(other)
        out: dict[Core, Fraction] = {}
        for c1, v1 in self.terms.items():
            for c2, v2 in other.terms.items():
                powers: dict[Atom, Fraction] = dict(c1)
                for a, e in c2:
                    powers[a] = powers.get(a, Fraction(0)) + e
                coef, core = _normalise(v1 * v2, powers)
                out[core] = out.get(core, Fraction(0)) + coef
        return Exact(out)

    __rmul__ = __mul__

    def pow(self, e) -> Optional["Exact"]:
        """Exact power, or ``None`` when not representable."""
        e = Fraction(e)
        if e.denominator == 1 and e >= 0:
            result = Exact.rational(1)
            for _ in range(e.numerator):
                result = result * self
            return result
        if len(self.terms) != 1:
            return None
        ((core, coef),) = self.terms.items()
        if coef < 0 and e.denominator != 1:
            return None
        sign = Fraction(-1) if coef < 0 and e.numerator % 2 else Fraction(1)
        powers: dict[Atom, Fraction] = {}
        for part, mult in ((abs(coef.numerator), 1), (coef.denominator, -1)):
            fac = factor_int(part)
            if fac is None:
                return None
            for p, k in fac:
                powers[p] = powers.get(p, Fraction(0)) + mult * k * e
        for a, x in core:
            powers[a] = powers.get(a, Fraction(0)) + x * e
        return Exact.monomial(sign, powers)

    def __truediv__(self, other) -> Optional["Exact"]:
        inv = _lift(other).pow(-1)
        return None if inv is None else self * inv


def _lift(x) -> Exact:
    if isinstance(x, Exact):
        return x
    if isinstance(x, (int, Fraction)):
        return Exact.rational(x)
    raise TypeError(f"cannot lift {type(x).__name__} to Exact")


def product(values: Iterable[Exact]) -> Exact:
    out = Exact.rational(1)
    for v in values:
        out = out * v
    return out
