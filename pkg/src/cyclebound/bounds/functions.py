"""Certified evaluation of the degree-sequence weight functions.

All evaluators return :class:`CertReal` enclosures.  Exact counterparts
(``exact_*``) return :class:`Exact` normal forms, or ``None`` when the value
is transcendental; they feed tie resolution in :mod:`cyclebound.bounds.expr`.
"""

from __future__ import annotations

import contextlib
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .certreal import DEFAULT_PREC, CertReal
from .exact import Exact, factorial_primes, factor_int

#: Approximate growth rate of a known 4-regular construction; constant only.
KAPPA2_APPROX = 1.356

# rho = (4/3)^(1/4) = 2^(1/2) * 3^(-1/4)
_RHO_POWERS = {2: Fraction(1, 2), 3: Fraction(-1, 4)}

_lock = threading.RLock()
_cache: dict[tuple, CertReal] = {}
_alpha_override: dict[int, Fraction] = {}


def _cached(key: tuple, compute):
    with _lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    value = compute()
    with _lock:
        # drop lower-precision entries for the same quantity
        for k in [k for k in _cache if k[:-1] == key[:-1] and k[-1] < key[-1]]:
            del _cache[k]
        _cache[key] = value
    return value


def clear_caches() -> None:
    with _lock:
        _cache.clear()


@contextlib.contextmanager
def perturbed_alpha(k: int, delta) -> Iterable[None]:
    """Fault-injection hook: shift alpha(k) by ``delta`` inside the block.

    Values of alpha above ``k`` follow through the recursion.  Exact forms of
    the perturbed quantities are disabled for the duration.
    """
    with _lock:
        _alpha_override[k] = Fraction(delta)
        _cache.clear()
    try:
        yield
    finally:
        with _lock:
            _alpha_override.pop(k, None)
            _cache.clear()


def alpha_override_at(k: int) -> bool:
    """True if alpha(k) itself is shifted, so the recursion breaks at k."""
    return k in _alpha_override


def _alpha_is_perturbed(k: int) -> bool:
    return any(j <= k for j in _alpha_override)


def _check_nonneg(k: int, name: str) -> None:
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"{name} requires a nonnegative integer, got {k!r}")


# -- constants ---------------------------------------------------------

def eval_rho(prec: int = DEFAULT_PREC) -> CertReal:
    return _cached(("rho", prec), lambda: CertReal.exact(Fraction(4, 3), prec).root(4))


def exact_rho() -> Exact:
    return Exact.monomial(1, _RHO_POWERS)


@dataclass(frozen=True)
class BoundConstants:
    rho: CertReal
    gamma: CertReal
    kappa1: CertReal


def constants(prec: int = DEFAULT_PREC) -> BoundConstants:
    two = CertReal.exact(2, prec)
    kappa1 = (two + two * two.sqrt()).root(5)
    return BoundConstants(rho=eval_rho(prec), gamma=eval_gamma_d(5, prec), kappa1=kappa1)


# -- b, b', a' ----------------------------------------------------------

def eval_b(k: int, prec: int = DEFAULT_PREC) -> CertReal:
    """``b(k) = ((k-1)! rho)^(1/(k-1))`` for ``k >= 2``; ``b(0) = b(1) = 1``."""
    _check_nonneg(k, "b")
    if k <= 1:
        return CertReal.exact(1, prec)

    def compute():
        return (CertReal.factorial(k - 1, prec) * eval_rho(prec)).root(k - 1)

    return _cached(("b", k, prec), compute)


def exact_b(k: int) -> Exact:
    _check_nonneg(k, "b")
    if k <= 1:
        return Exact.rational(1)
    powers = {p: Fraction(e, k - 1) for p, e in factorial_primes(k - 1)}
    for p, e in _RHO_POWERS.items():
        powers[p] = powers.get(p, Fraction(0)) + e / (k - 1)
    return Exact.monomial(1, powers)


def eval_b_prime(k: int) -> Fraction:
    """``b'(k) = k/2`` for ``k >= 2``; ``b'(0) = b'(1) = 1``.  Exact."""
    _check_nonneg(k, "b'")
    return Fraction(1) if k <= 1 else Fraction(k, 2)


def exact_a_prime(k: int) -> Exact:
    _check_nonneg(k, "a'")
    if k == 0:
        return Exact.rational(1)
    return Exact.rational(2) * Exact.rational(k).pow(Fraction(1, 2))


def eval_a_prime(k: int, prec: int = DEFAULT_PREC) -> CertReal:
    """``a'(k) = 2 sqrt(k)`` for ``k >= 1``; ``a'(0) = 1``."""
    _check_nonneg(k, "a'")
    if k == 0:
        return CertReal.exact(1, prec)
    return 2 * CertReal.exact(k, prec).sqrt()


# -- lambda, alpha, a ----------------------------------------------------

def eval_lambda(k: int, prec: int = DEFAULT_PREC) -> CertReal:
    """``log(b(k+1)/b(k))`` through the cancellation-free closed form."""
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"lambda requires an integer k >= 2, got {k!r}")

    def compute():
        ratio = CertReal.exact(Fraction(k**k, math.factorial(k)), prec) / eval_rho(prec)
        return ratio.log() / (k * (k - 1))

    return _cached(("lambda", k, prec), compute)


def eval_alpha(k: int, prec: int = DEFAULT_PREC) -> CertReal:
    _check_nonneg(k, "alpha")
    key = ("alpha", k, prec)
    with _lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    rho = eval_rho(prec)
    if k == 0:
        value = CertReal.exact(1, prec)
    elif k == 1:
        value = (2 / rho.ipow(5)).sqrt()
    elif k == 2:
        value = 2 / rho.ipow(3)
    elif k == 3:
        value = 6 / (rho.ipow(4) * eval_b(3, prec) * eval_b(5, prec))
    else:
        prev = eval_alpha(k - 1, prec)
        value = prev / (1 + k * (eval_lambda(k - 1, prec) - eval_lambda(k, prec)))
    if k in _alpha_override:
        value = value + _alpha_override[k]
    return _cached(key, lambda: value)


def exact_alpha(k: int) -> Exact:
    """Exact alpha(k); alpha(k) for k >= 4 is kept as an opaque positive atom."""
    _check_nonneg(k, "alpha")
    if _alpha_is_perturbed(k):
        return Exact.atom(("alpha~", k))
    rho = exact_rho()
    if k == 0:
        return Exact.rational(1)
    if k == 1:
        return (Exact.rational(2) * rho.pow(-5)).pow(Fraction(1, 2))
    if k == 2:
        return Exact.rational(2) * rho.pow(-3)
    if k == 3:
        return Exact.rational(6) * (rho.pow(4) * exact_b(3) * exact_b(5)).pow(-1)
    return Exact.atom(("alpha", k))


def eval_a(k: int, prec: int = DEFAULT_PREC) -> CertReal:
    return eval_alpha(k, prec) * eval_b(k, prec)


def exact_a(k: int) -> Exact:
    return exact_alpha(k) * exact_b(k)


def exact_lambda(k: int) -> Exact:
    return Exact.atom(("lambda", k))


# -- phi, f, well-behaved triples -------------------------------------------

def _check_phi(l: int, d: int) -> None:
    if not (isinstance(l, int) and isinstance(d, int)) or d < 1 or l < d:
        raise ValueError(f"phi requires integers l >= d >= 1, got l={l!r}, d={d!r}")


def eval_phi(l: int, d: int, prec: int = DEFAULT_PREC) -> CertReal:
    """``phi(l, d) = rho^(l-2) b(l-d+2)``."""
    _check_phi(l, d)
    return eval_rho(prec).ipow(l - 2) * eval_b(l - d + 2, prec)


def exact_phi(l: int, d: int) -> Exact:
    _check_phi(l, d)
    return exact_rho().pow(l - 2) * exact_b(l - d + 2)


def _check_f(k: int, n: int, l: int) -> None:
    if not all(isinstance(x, int) for x in (k, n, l)) or k < 2 or n < 2 or l < 1:
        raise ValueError(f"f requires k, n >= 2 and l >= 1, got ({k!r}, {n!r}, {l!r})")


def eval_f(k: int, n: int, l: int, prec: int = DEFAULT_PREC) -> CertReal:
    """``k alpha(k) (log(rho^(l-1) b(n+l) / b(n)) - l lambda(k))``."""
    _check_f(k, n, l)
    rho = eval_rho(prec)
    inner = (rho.ipow(l - 1) * eval_b(n + l, prec) / eval_b(n, prec)).log()
    return k * eval_alpha(k, prec) * (inner - l * eval_lambda(k, prec))


def eval_f_l1(k: int, n: int, prec: int = DEFAULT_PREC) -> CertReal:
    """Specialisation ``f(k, n, 1) = k alpha(k) (lambda(n) - lambda(k))``."""
    _check_f(k, n, 1)
    return k * eval_alpha(k, prec) * (eval_lambda(n, prec) - eval_lambda(k, prec))


# -- gamma_d and bounds ---------------------------------------------------

def _split_degree(d) -> tuple[int, int, Fraction, Fraction]:
    d = Fraction(d)
    if d < 2:
        raise ValueError(f"gamma_d requires d >= 2, got {d}")
    lo, hi = math.floor(d), math.ceil(d)
    if lo == hi:
        return lo, hi, Fraction(2, lo), Fraction(0)
    return lo, hi, 2 * (hi - d) / d, 2 * (d - lo) / d


def eval_gamma_d(d, prec: int = DEFAULT_PREC) -> CertReal:
    """Average-degree growth base; ``b(d)^(2/d)`` at integers, log-linear between."""
    lo, hi, e_lo, e_hi = _split_degree(d)
    value = eval_b(lo, prec).rpow(e_lo)
    if e_hi:
        value = value * eval_b(hi, prec).rpow(e_hi)
    return value


def exact_gamma_d(d) -> Optional[Exact]:
    lo, hi, e_lo, e_hi = _split_degree(d)
    value = exact_b(lo).pow(e_lo)
    if e_hi and value is not None:
        other = exact_b(hi).pow(e_hi)
        value = None if other is None else value * other
    return value


def _degrees_and_source(G, s) -> tuple[int, list[int]]:
    if not (isinstance(s, int) and 0 <= s < G.n):
        raise KeyError(f"unknown vertex {s!r}")
    degs = G.degrees()
    return degs[s], [d for v, d in enumerate(degs) if v != s]


def q_from_degrees(deg_s: int, others: Sequence[int], prec: int = DEFAULT_PREC) -> CertReal:
    value = eval_a(deg_s, prec)
    for d in others:
        if d > 1:
            value = value * eval_b(d, prec)
    return value


def bound_q(G, s: int, prec: int = DEFAULT_PREC) -> CertReal:
    """``q_s(G) = a(deg s) * prod_{v != s} b(deg v)`` using total degrees."""
    deg_s, others = _degrees_and_source(G, s)
    return q_from_degrees(deg_s, others, prec)


def q_prime_from_degrees(deg_s: int, others: Sequence[int], prec: int = DEFAULT_PREC) -> CertReal:
    rational = Fraction(1)
    for d in others:
        rational *= eval_b_prime(d)
    return eval_a_prime(deg_s, prec) * rational


def bound_q_prime(G, s: int, prec: int = DEFAULT_PREC) -> CertReal:
    """``q'_s(G) = a'(deg s) * prod_{v != s} b'(deg v)``."""
    deg_s, others = _degrees_and_source(G, s)
    return q_prime_from_degrees(deg_s, others, prec)


def bregman_bound(row_sums: Sequence[int], prec: int = DEFAULT_PREC) -> CertReal:
    """``prod_i (r_i!)^(1/r_i)``, an upper bound on the permanent of a 0/1 matrix."""
    if any((not isinstance(r, int)) or r < 1 for r in row_sums):
        raise ValueError("row sums must be positive integers")
    value = CertReal.exact(1, prec)
    for r, count in _counts(row_sums):
        value = value * CertReal.factorial(r, prec).rpow(Fraction(count, r))
    return value


def exact_bregman(row_sums: Sequence[int]) -> Exact:
    powers: dict[int, Fraction] = {}
    for r, count in _counts(row_sums):
        for p, e in factorial_primes(r):
            powers[p] = powers.get(p, Fraction(0)) + Fraction(e * count, r)
    return Exact.monomial(1, powers)


def _counts(values: Sequence[int]) -> list[tuple[int, int]]:
    out: dict[int, int] = {}
    for v in values:
        out[v] = out.get(v, 0) + 1
    return sorted(out.items())


__all__ = [
    "KAPPA2_APPROX",
    "BoundConstants",
    "bound_q",
    "bound_q_prime",
    "bregman_bound",
    "clear_caches",
    "constants",
    "eval_a",
    "eval_a_prime",
    "eval_alpha",
    "eval_b",
    "eval_b_prime",
    "eval_f",
    "eval_f_l1",
    "eval_gamma_d",
    "eval_lambda",
    "eval_phi",
    "eval_rho",
    "exact_a",
    "exact_a_prime",
    "exact_alpha",
    "exact_b",
    "exact_bregman",
    "exact_gamma_d",
    "exact_lambda",
    "exact_phi",
    "exact_rho",
    "factor_int",
    "perturbed_alpha",
    "q_from_degrees",
    "q_prime_from_degrees",
]
