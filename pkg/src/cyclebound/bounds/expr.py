"""Expression trees with certified evaluation and exact tie resolution.

An :class:`Expr` can be enclosed at any precision (``interval``) and, when
it is algebraic in the supported atoms, reduced to an exact normal form
(``exact``).  :func:`certify` decides a relation between two expressions:
intervals first, then the exact form for boundary cases, then doubling the
precision up to a cap.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Callable, Optional, Sequence

from . import functions as F
from .certreal import DEFAULT_PREC, MAX_PREC, CertReal, Outcome, compare, euler_e, pi
from .exact import Exact

_UNSET = object()


class Expr:
    """Base node.  Subclasses implement ``_interval`` and ``_exact``."""

    __slots__ = ("_exact_memo",)

    def __init__(self):
        self._exact_memo = _UNSET

    def interval(self, prec: int = DEFAULT_PREC) -> CertReal:
        return self._interval(prec)

    def exact(self) -> Optional[Exact]:
        if self._exact_memo is _UNSET:
            self._exact_memo = self._exact()
        return self._exact_memo

    def _interval(self, prec: int) -> CertReal:  # pragma: no cover - abstract
        raise NotImplementedError

    def _exact(self) -> Optional[Exact]:
        return None

    # operator sugar
    def __add__(self, other) -> "Expr":
        return Sum((self, lift(other)))

    def __radd__(self, other) -> "Expr":
        return Sum((lift(other), self))

    def __sub__(self, other) -> "Expr":
        return Sum((self, Prod((Const(-1), lift(other)))))

    def __rsub__(self, other) -> "Expr":
        return lift(other) - self

    def __neg__(self) -> "Expr":
        return Prod((Const(-1), self))

    def __mul__(self, other) -> "Expr":
        return Prod((self, lift(other)))

    def __rmul__(self, other) -> "Expr":
        return Prod((lift(other), self))

    def __truediv__(self, other) -> "Expr":
        return Prod((self, Pow(lift(other), Fraction(-1))))

    def __rtruediv__(self, other) -> "Expr":
        return lift(other) / self

    def __pow__(self, e) -> "Expr":
        return Pow(self, Fraction(e))


def lift(x) -> Expr:
    if isinstance(x, Expr):
        return x
    if isinstance(x, (int, Fraction)):
        return Const(x)
    raise TypeError(f"cannot use {type(x).__name__} in an expression")


class Const(Expr):
    __slots__ = ("value",)

    def __init__(self, value):
        super().__init__()
        self.value = Fraction(value)

    def _interval(self, prec):
        return CertReal.exact(self.value, prec)

    def _exact(self):
        return Exact.rational(self.value)

    def __repr__(self):
        return str(self.value)


class Leaf(Expr):
    """Named quantity with an interval evaluator and an optional exact form."""

    __slots__ = ("name", "_ev", "_ex")

    def __init__(self, name: str, ev: Callable[[int], CertReal], ex: Optional[Callable[[], Optional[Exact]]] = None):
        super().__init__()
        self.name = name
        self._ev = ev
        self._ex = ex

    def _interval(self, prec):
        return self._ev(prec)

    def _exact(self):
        return self._ex() if self._ex is not None else None

    def __repr__(self):
        return self.name


class Sum(Expr):
    __slots__ = ("parts",)

    def __init__(self, parts: Sequence[Expr]):
        super().__init__()
        self.parts = tuple(parts)

    def _interval(self, prec):
        return reduce(lambda a, b: a + b, (p.interval(prec) for p in self.parts))

    def _exact(self):
        out = Exact.rational(0)
        for p in self.parts:
            e = p.exact()
            if e is None:
                return None
            out = out + e
        return out

    def __repr__(self):
        return "(" + " + ".join(map(repr, self.parts)) + ")"


class Prod(Expr):
    __slots__ = ("parts",)

    def __init__(self, parts: Sequence[Expr]):
        super().__init__()
        self.parts = tuple(parts)

    def _interval(self, prec):
        return reduce(lambda a, b: a * b, (p.interval(prec) for p in self.parts))

    def _exact(self):
        out = Exact.rational(1)
        for p in self.parts:
            e = p.exact()
            if e is None:
                return None
            out = out * e
        return out

    def __repr__(self):
        return "*".join(map(repr, self.parts))


class Pow(Expr):
    __slots__ = ("base", "e")

    def __init__(self, base: Expr, e: Fraction):
        super().__init__()
        self.base = base
        self.e = Fraction(e)

    def _interval(self, prec):
        return self.base.interval(prec).rpow(self.e)

    def _exact(self):
        b = self.base.exact()
        return None if b is None else b.pow(self.e)

    def __repr__(self):
        return f"({self.base!r})^{self.e}"


class Log(Expr):
    __slots__ = ("arg",)

    def __init__(self, arg: Expr):
        super().__init__()
        self.arg = arg

    def _interval(self, prec):
        return self.arg.interval(prec).log()

    def _exact(self):
        a = self.arg.exact()
        if a is not None and a.as_rational() == 1:
            return Exact.rational(0)
        return None

    def __repr__(self):
        return f"log({self.arg!r})"


class Exp(Expr):
    __slots__ = ("arg",)

    def __init__(self, arg: Expr):
        super().__init__()
        self.arg = arg

    def _interval(self, prec):
        return self.arg.interval(prec).exp()

    def _exact(self):
        a = self.arg.exact()
        q = None if a is None else a.as_rational()
        return None if q is None else Exact.atom("e", q)

    def __repr__(self):
        return f"exp({self.arg!r})"


# -- named leaves ----------------------------------------------------------

def rho() -> Expr:
    return Leaf("rho", F.eval_rho, F.exact_rho)


def b(k: int) -> Expr:
    return Leaf(f"b({k})", lambda p: F.eval_b(k, p), lambda: F.exact_b(k))


def alpha(k: int) -> Expr:
    return Leaf(f"alpha({k})", lambda p: F.eval_alpha(k, p), lambda: F.exact_alpha(k))


def a(k: int) -> Expr:
    return Leaf(f"a({k})", lambda p: F.eval_a(k, p), lambda: F.exact_a(k))


def lam(k: int) -> Expr:
    return Leaf(f"lambda({k})", lambda p: F.eval_lambda(k, p), lambda: F.exact_lambda(k))


def phi(l: int, d: int) -> Expr:
    return Leaf(f"phi({l},{d})", lambda p: F.eval_phi(l, d, p), lambda: F.exact_phi(l, d))


def b_prime(k: int) -> Expr:
    return Const(F.eval_b_prime(k))


def a_prime(k: int) -> Expr:
    return Leaf(f"a'({k})", lambda p: F.eval_a_prime(k, p), lambda: F.exact_a_prime(k))


def gamma_d(d) -> Expr:
    d = Fraction(d)
    return Leaf(f"gamma_{d}", lambda p: F.eval_gamma_d(d, p), lambda: F.exact_gamma_d(d))


def f(k: int, n: int, l: int) -> Expr:
    """``f(k,n,l)``; the ``l = 1`` case uses the lambda-difference form."""
    if l == 1:
        body = Const(k) * alpha(k) * (lam(n) - lam(k))
        if n == k - 1 and k >= 4:
            # the recursion defining alpha(k) says this equals alpha(k-1) - alpha(k)
            def ex():
                if F.alpha_override_at(k):
                    return None
                return F.exact_alpha(k - 1) - F.exact_alpha(k)

            return Leaf(f"f({k},{n},1)", body.interval, ex)
        return body
    inner = Log(rho() ** (l - 1) * b(n + l) / b(n))
    return Const(k) * alpha(k) * (inner - Const(l) * lam(k))


def factorial(n: int) -> Expr:
    return Const(math.factorial(n))


def sqrt(x) -> Expr:
    return Pow(lift(x), Fraction(1, 2))


def pi_expr() -> Expr:
    return Leaf("pi", pi, lambda: Exact.atom("pi"))


def e_expr() -> Expr:
    return Leaf("e", euler_e, lambda: Exact.atom("e"))


def bregman(row_sums: Sequence[int]) -> Expr:
    rs = tuple(row_sums)
    return Leaf(f"bregman{rs}", lambda p: F.bregman_bound(rs, p), lambda: F.exact_bregman(rs))


def q_simple(deg_s: int, others: Sequence[int]) -> Expr:
    parts = [a(deg_s)] + [b(d) for d in others if d > 1]
    return Prod(parts)


def q_multi(deg_s: int, others: Sequence[int]) -> Expr:
    rational = Fraction(1)
    for d in others:
        rational *= F.eval_b_prime(d)
    return Prod((a_prime(deg_s), Const(rational)))


# -- certification ---------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`certify` with the certified slack ``lhs - rhs``."""

    outcome: Outcome
    margin: Optional[CertReal]
    prec: int
    exact: bool = False
    exact_margin: Optional[Fraction] = None

    @property
    def ok(self) -> bool:
        return self.outcome is Outcome.TRUE


_SIGN_TABLE = {
    "<": lambda s: s < 0,
    "<=": lambda s: s <= 0,
    ">": lambda s: s > 0,
    ">=": lambda s: s >= 0,
    "==": lambda s: s == 0,
}


def default_prec() -> int:
    env = os.environ.get("CYCLEBOUND_PREC")
    return int(env) if env else DEFAULT_PREC


def certify(lhs, rel: str, rhs, prec: Optional[int] = None, max_prec: Optional[int] = None) -> Verdict:
    """Decide ``lhs rel rhs`` with escalating precision.

    ``prec`` is the starting precision and ``max_prec`` the cap (default
    ``max(prec, MAX_PREC)``).  Exact normal forms settle boundary cases that
    intervals can never separate.
    """
    if rel not in _SIGN_TABLE:
        raise ValueError(f"unknown relation {rel!r}")
    lhs, rhs = lift(lhs), lift(rhs)
    prec = prec or default_prec()
    cap = max_prec if max_prec is not None else max(prec, MAX_PREC)
    diff = lhs - rhs
    p = prec
    exact_tried = False
    margin = None
    while True:
        margin = diff.interval(p)
        outcome = compare(margin, 0, rel)
        if outcome is not Outcome.UNDECIDED:
            return Verdict(outcome, margin, p)
        if not exact_tried:
            exact_tried = True
            ex = diff.exact()
            sign = None if ex is None else ex.sign()
            if sign is not None:
                ok = _SIGN_TABLE[rel](sign)
                return Verdict(
                    Outcome.TRUE if ok else Outcome.FALSE,
                    margin,
                    p,
                    exact=True,
                    exact_margin=ex.as_rational(),
                )
        if p * 2 > cap:
            return Verdict(Outcome.UNDECIDED, margin, p)
        p *= 2


def overlap(lhs, rhs, prec: Optional[int] = None) -> tuple[bool, CertReal, CertReal]:
    """Evaluate both sides at ``prec`` and report whether the enclosures meet."""
    prec = prec or default_prec()
    x, y = lift(lhs).interval(prec), lift(rhs).interval(prec)
    return x.overlaps(y), x, y
