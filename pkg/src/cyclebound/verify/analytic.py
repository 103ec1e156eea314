"""Suites for the scalar facts about rho, b, alpha, a, lambda, phi and f."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Optional

from ..bounds import expr as X
from ..bounds.certreal import Outcome
from ..bounds.expr import Const, Pow, a, alpha, b, lam, phi, rho
from ..bounds.wellbehaved import well_behaved_sides
from .common import RNG_ALGORITHM, Precision, check, check_bool, check_false, check_overlap, rng, slack
from .report import ClaimBuilder, ClaimOutcome, VerificationReport

Q = Fraction

GAMMA_NOTE = (
    "gamma = b(5)^(2/5) = (24 rho)^(1/10) = 442368^(1/40) ~ 1.38403; "
    "the closed form with exponent 1/10, 442368^(1/10) ~ 3.67, does not match and is treated as a typo"
)


def gamma() -> X.Expr:
    return Pow(b(5), Q(2, 5))


def kappa1() -> X.Expr:
    return Pow(Const(2) + Const(2) * X.sqrt(2), Q(1, 5))


# -- constants ---------------------------------------------------------------

def suite_constants(prec: Optional[int] = None, max_prec: Optional[int] = None) -> VerificationReport:
    """Named constants and the small table of directly computed values."""
    P = Precision.resolve(prec, max_prec)
    rep = VerificationReport("constants", params={"prec": P.prec, "max_prec": P.max_prec}, notes=[GAMMA_NOTE])

    def one(id, statement, anchor, lhs, rel, rhs):
        cb = ClaimBuilder(id, statement, anchor)
        check(cb, P, lhs, rel, rhs)
        rep.add(cb.build())

    g = gamma()
    one("gamma-closed-form", "b(5)^(2/5) = 442368^(1/40)", "cycle bound base gamma", g, "==", Pow(Const(442368), Q(1, 40)))
    one("gamma-power-40", "gamma^40 = b(5)^16 = 442368", "cycle bound base gamma", Pow(b(5), 16), "==", 442368)
    cb = ClaimBuilder("gamma-range", "1.38402 < gamma < 1.38404", "cycle bound base gamma")
    check(cb, P, g, ">", Const(Q(138402, 100000)))
    check(cb, P, g, "<", Const(Q(138404, 100000)))
    rep.add(cb.build())
    one("gamma-printed-exponent", "442368^(1/10) > gamma + 2 (the 1/10 exponent cannot be intended)",
        "cycle bound base gamma", Pow(Const(442368), Q(1, 10)), ">", g + 2)
    cb = ClaimBuilder("gamma-is-sup", "b(k)^(2/k) <= b(5)^(2/5) for 1 <= k <= 64", "cycle bound base gamma")
    for k in range(1, 65):
        check(cb, P, Pow(b(k), Q(2, k)), "<=", g, witness=k)
    rep.add(cb.build())

    one("alpha2-lower", "alpha(2) > 1.61", "alpha table", alpha(2), ">", Const(Q(161, 100)))
    one("alpha3-upper", "alpha(3) < 1.37", "alpha table", alpha(3), "<", Const(Q(137, 100)))
    for k, lo, hi in ((1, Q(11, 10), Q(12, 10)), (2, Q(17, 10), Q(18, 10))):
        cb = ClaimBuilder(f"a{k}-range", f"{float(lo)} < a({k}) < {float(hi)}", "monotonicity of a")
        check(cb, P, a(k), ">", Const(lo))
        check(cb, P, a(k), "<", Const(hi))
        rep.add(cb.build())
    one("a2-squared", "a(2)^2 = 3", "monotonicity of a", a(2) * a(2), "==", 3)
    one("a3-lower", "a(3) > 1.9", "monotonicity of a", a(3), ">", Const(Q(19, 10)))
    one("q-triangle", "a(2) b(2)^2 = 2", "path bound on a triangle", a(2) * b(2) * b(2), "==", 2)
    one("gamma4-upper", "gamma_4 < 1.365", "average-degree bound", X.gamma_d(4), "<", Const(Q(1365, 1000)))
    one("b6-upper", "b(6) < 2.643", "planar bound", b(6), "<", Const(Q(2643, 1000)))
    cb = ClaimBuilder("kappa1-range", "1.3700 < (2 + 2 sqrt 2)^(1/5) < 1.3702", "K4-ring lower bound")
    check(cb, P, kappa1(), ">", Const(Q(13700, 10000)))
    check(cb, P, kappa1(), "<", Const(Q(13702, 10000)))
    rep.add(cb.build())
    one("short-cycles-base", "1.37 < gamma", "short cycles are negligible", Const(Q(137, 100)), "<", g)
    one("alpha1-below-2", "alpha(1) < 2", "long-cycle accounting", alpha(1), "<", 2)

    cb = ClaimBuilder("gamma-d-window", "gamma_d <= kappa1 for d in [2, 4.24] and [7.18, 16] (grid of step 1/100)",
                      "average-degree remark")
    grid = [Q(j, 100) for j in range(200, 425)] + [Q(j, 100) for j in range(718, 1601)]
    for d in grid:
        check(cb, P, X.gamma_d(d), "<", kappa1(), witness=str(d))
    cb.note("checked on a grid, not on the whole interval")
    rep.add(cb.build())
    cb = ClaimBuilder("gamma-d-crossings", "gamma_d - kappa1 changes sign in (4.2537, 4.2539) and (7.1682, 7.1683)",
                      "average-degree remark")
    for d, rel in ((Q(42537, 10000), "<"), (Q(42539, 10000), ">"), (Q(71682, 10000), ">"), (Q(71683, 10000), "<")):
        check(cb, P, X.gamma_d(d), rel, kappa1(), witness=str(d))
    rep.add(cb.build())
    return rep


# -- monotonicity ------------------------------------------------------------

B_PRIME_NOTE = (
    "b'(d) = d/2 exceeds 3^(d/6) at d = 5 by a factor of about 1.00078, so the product of b'(deg v) is only "
    "bounded by (5/2)^(2m/5) ~ 1.44270^m rather than 3^(m/3) ~ 1.44225^m; the envelope holds for every other d"
)

def suite_monotonicity(K: int = 64, prec: Optional[int] = None, max_prec: Optional[int] = None) -> VerificationReport:
    if K < 6:
        raise ValueError("K must be at least 6")
    P = Precision.resolve(prec, max_prec)
    rep = VerificationReport("monotonicity", params={"K": K, "prec": P.prec, "max_prec": P.max_prec}, notes=[B_PRIME_NOTE])

    cb = ClaimBuilder("b-increasing", f"b(k) < b(k+1) for 2 <= k < {K}", "concavity of log b")
    for k in range(2, K):
        check(cb, P, b(k), "<", b(k + 1), k)
    rep.add(cb.build())

    cb = ClaimBuilder("lambda-positive", f"lambda(k) > 0 for 2 <= k <= {K}", "concavity of log b")
    for k in range(2, K + 1):
        check(cb, P, lam(k), ">", 0, k)
    rep.add(cb.build())

    cb = ClaimBuilder("ratio-decreasing", f"b(k+2)/b(k+1) < b(k+1)/b(k) for 2 <= k < {K - 1}", "concavity of log b")
    for k in range(2, K - 1):
        check(cb, P, b(k + 2) / b(k + 1), "<", b(k + 1) / b(k), k)
    rep.add(cb.build())

    cb = ClaimBuilder("lambda-decreasing", f"lambda(k+1) < lambda(k) for 2 <= k < {K}", "concavity of log b")
    for k in range(2, K):
        check(cb, P, lam(k + 1), "<", lam(k), k)
    rep.add(cb.build())

    cb = ClaimBuilder("ratio-spot-12", "b(14)/b(13) < b(13)/b(12)", "concavity of log b")
    check(cb, P, b(14) / b(13), "<", b(13) / b(12))
    rep.add(cb.build())

    cb = ClaimBuilder("b-over-k-decreasing", f"b(k+1)/(k+1) < b(k)/k for 1 <= k < {K}", "b(k)/k decreasing")
    for k in range(1, K):
        check(cb, P, b(k + 1) / (k + 1), "<", b(k) / k, k)
    rep.add(cb.build())

    cb = ClaimBuilder("a-increasing", f"a(k) < a(k+1) for 0 <= k < {K}", "monotonicity of a")
    for k in range(0, K):
        check(cb, P, a(k), "<", a(k + 1), k)
    rep.add(cb.build())

    cb = ClaimBuilder("k-alpha-increasing", f"k alpha(k) < (k+1) alpha(k+1) for 1 <= k < {K}", "k alpha(k) increasing")
    for k in range(1, K):
        check(cb, P, Const(k) * alpha(k), "<", Const(k + 1) * alpha(k + 1), k)
    rep.add(cb.build())

    cb = ClaimBuilder("alpha-decreasing", f"alpha(k+1) < alpha(k) for 2 <= k < {K}", "alpha decreasing")
    for k in range(2, K):
        check(cb, P, alpha(k + 1), "<", alpha(k), k)
    rep.add(cb.build())
    cb = ClaimBuilder("alpha-2-3", "alpha(2) > 1.61 and alpha(3) < 1.37", "alpha decreasing")
    check(cb, P, alpha(2), ">", Const(Q(161, 100)), 2)
    check(cb, P, alpha(3), "<", Const(Q(137, 100)), 3)
    rep.add(cb.build())

    sqrt2pi = X.sqrt(Const(2) * X.pi_expr())
    cb = ClaimBuilder("stirling", f"sqrt(2 pi) <= k! e^k / k^(k+1/2) <= e for 1 <= k <= {K}", "Stirling bounds")
    for k in range(1, K + 1):
        mid = X.factorial(k) * X.Exp(Const(k)) / Pow(Const(k), Q(2 * k + 1, 2))
        check(cb, P, sqrt2pi, "<=", mid, ("lower", k))
        check(cb, P, mid, "<=", X.e_expr(), ("upper", k))
    rep.add(cb.build())

    cb = ClaimBuilder(
        "lambda-stirling",
        f"1 - log sqrt(2 pi) >= k(k-1) lambda(k) - (k - log(rho e sqrt k)) >= 0 for 2 <= k <= {K}",
        "Stirling bound on lambda",
    )
    for k in range(2, K + 1):
        mid = Const(k * (k - 1)) * lam(k) - (Const(k) - X.Log(rho() * X.e_expr() * X.sqrt(k)))
        check(cb, P, mid, ">=", 0, ("lower", k))
        check(cb, P, Const(1) - X.Log(sqrt2pi), ">=", mid, ("upper", k))
    rep.add(cb.build())

    cb = ClaimBuilder("lambda-closed-form", f"closed-form lambda(k) meets log b(k+1) - log b(k), 2 <= k <= {K}",
                      "lambda definition")
    for k in range(2, K + 1):
        check_overlap(cb, P, lam(k), X.Log(b(k + 1)) - X.Log(b(k)), k)
    cb.note("interval consistency, not an inequality")
    rep.add(cb.build())

    cb = ClaimBuilder("b-recursion", f"b(k+1)^k = k b(k)^(k-1) for 2 <= k <= {K}", "recursion for b")
    for k in range(2, K + 1):
        check(cb, P, Pow(b(k + 1), k), "==", Const(k) * Pow(b(k), k - 1), k)
    rep.add(cb.build())

    cb = ClaimBuilder("b-below-b-prime", f"b(k) < k/2 for 3 <= k <= {K}", "simple versus multigraph weights")
    for k in range(3, K + 1):
        check(cb, P, b(k), "<", X.b_prime(k), k)
    rep.add(cb.build())

    cb = ClaimBuilder("b-prime-envelope", f"b'(d) <= 3^(d/6) for 0 <= d <= {K}, d != 5, equality at d = 0 and d = 6",
                      "multigraph envelope 3^(m/3)")
    for d in range(0, K + 1):
        if d != 5:
            check(cb, P, X.b_prime(d), "<=", Pow(Const(3), Q(d, 6)), d)
    check(cb, P, X.b_prime(6), "==", Pow(Const(3), Q(1)), "equality d=6")
    cb.note("d = 5 is excluded; see b-prime-envelope-d5")
    rep.add(cb.build())
    cb = ClaimBuilder("b-prime-envelope-d5", "b'(5) = 5/2 > 3^(5/6): the envelope 3^(d/6) fails at d = 5",
                      "multigraph envelope 3^(m/3)")
    check(cb, P, X.b_prime(5), ">", Pow(Const(3), Q(5, 6)), 5)
    rep.add(cb.build())
    cb = ClaimBuilder("b-prime-envelope-sharp", f"b'(d) <= (5/2)^(d/5) for 0 <= d <= {K}, equality at d = 0 and d = 5",
                      "multigraph envelope 3^(m/3)")
    for d in range(0, K + 1):
        check(cb, P, X.b_prime(d), "<=", Pow(Const(Q(5, 2)), Q(d, 5)), d)
    rep.add(cb.build())

    cb = ClaimBuilder("funnelbase-ineq", f"b(m) b(n-m+2) >= b(2) b(n) for 2 <= m <= n <= {K}", "funnel base inequality")
    for n in range(2, K + 1):
        for m in range(2, n + 1):
            check(cb, P, b(m) * b(n - m + 2), ">=", b(2) * b(n), (m, n))
    rep.add(cb.build())
    return rep


# -- funnel weight -------------------------------------------------------------

def _weight(l: int, d: int) -> X.Expr:
    return a(l) * phi(l, d) * b(d)


# thresholds c with p(l) > c, as tabulated
P_TABLE = {3: Q(3, 10), 4: Q(9, 10), 5: Q(1), 6: Q(2), 7: Q(3), 8: Q(5), 9: Q(7)}


def suite_funnelweight(L: int = 40, prec: Optional[int] = None, max_prec: Optional[int] = None) -> VerificationReport:
    """``p(l) = a(l) min_d phi(l,d) b(d) - l``: exact value at 2, table to 9, tail to L."""
    if L < 9:
        raise ValueError("L must be at least 9")
    P = Precision.resolve(prec, max_prec)
    rep = VerificationReport("funnelweight", params={"L": L, "prec": P.prec, "max_prec": P.max_prec})

    cb = ClaimBuilder("p2-zero", "p(2) = 0: a(2) phi(2,2) b(2) = alpha(2) rho^3 = 2 and a(2) phi(2,1) b(1) > 2",
                      "funnel weight lemma")
    check(cb, P, _weight(2, 2), "==", 2, "d=2")
    check(cb, P, alpha(2) * Pow(rho(), 3), "==", 2, "alpha(2) rho^3")
    check(cb, P, _weight(2, 1), ">", 2, "d=1")
    rep.add(cb.build())

    cb = ClaimBuilder("p2-d1", "a(2) phi(2,1) b(1) = a(2) b(3) > 2.53", "funnel weight lemma")
    check(cb, P, _weight(2, 1), ">", Const(Q(253, 100)))
    check(cb, P, _weight(2, 1), "==", a(2) * b(3))
    rep.add(cb.build())

    for l, c in P_TABLE.items():
        cb = ClaimBuilder(f"p{l}", f"p({l}) > {c}", "funnel weight lemma")
        for d in range(1, l + 1):
            check(cb, P, _weight(l, d) - l, ">", Const(c), d)
        rep.add(cb.build())

    cb = ClaimBuilder("induction-margin", "7 + 17(rho - 1) - rho > 7", "funnel weight lemma")
    check(cb, P, Const(7) + Const(17) * (rho() - 1) - rho(), ">", 7)
    rep.add(cb.build())

    cb = ClaimBuilder("p-tail", f"p(l) > 7 for 9 <= l <= {L}", "funnel weight lemma")
    for l in range(9, L + 1):
        for d in range(1, l + 1):
            check(cb, P, _weight(l, d) - l, ">", 7, (l, d))
    rep.add(cb.build())

    cb = ClaimBuilder("induction-step", f"a(l) phi(l,d) b(d) >= rho a(l-1) phi(l-1,d') b(d') for 10 <= l <= {L}",
                      "funnel weight lemma")
    for l in range(10, L + 1):
        for d in range(1, l + 1):
            dp = 1 if d == 1 else d - 1
            check(cb, P, _weight(l, d), ">=", rho() * _weight(l - 1, dp), (l, d))
    rep.add(cb.build())

    cb = ClaimBuilder("funnel-weight", f"a(l) phi(l,d) b(d) >= l for 1 <= d <= l <= {L}", "funnel weight lemma")
    for l in range(1, L + 1):
        for d in range(1, l + 1):
            check(cb, P, _weight(l, d), ">=", l, (l, d))
    rep.add(cb.build())
    return rep


# -- well-behaved triples ----------------------------------------------------

BASE_TRIPLES = ((2, 3, 1), (3, 2, 1), (4, 2, 3), (5, 3, 4))


def _wb(cb: ClaimBuilder, P: Precision, k: int, n: int, l: int):
    lhs, rhs = well_behaved_sides(k, n, l)
    return check(cb, P, lhs, ">=", rhs, (k, n, l))


def suite_wellbehaved(prec: Optional[int] = None, max_prec: Optional[int] = None, kmax: int = 30) -> VerificationReport:
    P = Precision.resolve(prec, max_prec)
    rep = VerificationReport("wellbehaved", params={"kmax": kmax, "prec": P.prec, "max_prec": P.max_prec})

    cb = ClaimBuilder("base-triples", "(2,3,1), (3,2,1), (4,2,3), (5,3,4) are well-behaved", "well-behaved triples")
    for t in BASE_TRIPLES:
        _wb(cb, P, *t)
    rep.add(cb.build())

    cb = ClaimBuilder("diagonal", f"(k,k,1) is well-behaved, both sides exactly 0, 2 <= k <= {kmax}", "well-behaved triples")
    for k in range(2, kmax + 1):
        v = _wb(cb, P, k, k, 1)
        if not v.exact:
            cb.note(f"k={k} decided by intervals")
    rep.add(cb.build())

    cb = ClaimBuilder("l1-grid", f"(k,n,1) well-behaved for 2 <= k,n <= {kmax}", "well-behaved triples")
    for k in range(2, kmax + 1):
        for n in range(2, kmax + 1):
            _wb(cb, P, k, n, 1)
    rep.add(cb.build())

    for n, l, k0 in ((2, 3, 4), (3, 4, 5)):
        cb = ClaimBuilder(f"family-{n}-{l}", f"(k,{n},{l}) well-behaved for {k0} <= k <= {kmax}", "well-behaved triples")
        for k in range(k0, kmax + 1):
            _wb(cb, P, k, n, l)
        rep.add(cb.build())

    # closure in k: f(k+1,n,l) >= f(k,n,l) - l(alpha(k+1) - alpha(k)) when k >= max(n, 3)
    cb = ClaimBuilder("closure-k", f"f(k+1,n,l) >= f(k,n,l) - l(alpha(k+1) - alpha(k)) along the certified ranges, k < {kmax}",
                      "well-behaved closure")
    steps = [(k, n, 1) for k in range(3, kmax) for n in range(2, k + 1)]
    steps += [(k, 2, 3) for k in range(4, kmax)] + [(k, 3, 4) for k in range(5, kmax)]
    for k, n, l in steps:
        rhs = X.f(k, n, l) - Const(l) * (alpha(k + 1) - alpha(k))
        check(cb, P, X.f(k + 1, n, l), ">=", rhs, (k, n, l))
    rep.add(cb.build())

    cb = ClaimBuilder("closure-n", f"f(k,n+1,1) >= f(k,n,1) - (n+1) alpha(n+1)(lambda(n) - lambda(n+1)), 3 <= n < {kmax}, k <= n",
                      "well-behaved closure")
    for n in range(3, kmax):
        for k in range(2, n + 1):
            rhs = X.f(k, n, 1) - Const(n + 1) * alpha(n + 1) * (lam(n) - lam(n + 1))
            check(cb, P, X.f(k, n + 1, 1), ">=", rhs, (k, n))
    rep.add(cb.build())

    cb = ClaimBuilder("alpha-step-identity", f"(x+1) alpha(x+1)(lambda(x+1) - lambda(x)) = alpha(x+1) - alpha(x), 3 <= x <= {kmax}",
                      "alpha recursion")
    width_ok = True
    for x in range(3, kmax + 1):
        lhs = Const(x + 1) * alpha(x + 1) * (lam(x + 1) - lam(x))
        rhs = alpha(x + 1) - alpha(x)
        check_overlap(cb, P, lhs, rhs, x)
        if x == 5:
            diff = (lhs - rhs).interval(P.prec)
            width_ok = diff.width() <= Q(1, 2 ** (P.prec // 2))
    cb.note("interval consistency; at x = 5 the difference has width <= 2^(-prec/2)" if width_ok else "x = 5 width above 2^(-prec/2)")
    if not width_ok:
        cb.add_outcome(ClaimOutcome.UNDECIDED, P.prec, None, "width at x=5")
    rep.add(cb.build())

    cb = ClaimBuilder("not-well-behaved-323", "(3,2,3) is not well-behaved", "case analysis of the main inequality")
    lhs, rhs = well_behaved_sides(3, 2, 3)
    check_false(cb, P, lhs, ">=", rhs)
    rep.add(cb.build())
    return rep


# -- case analysis -------------------------------------------------------------

P_SET = frozenset([(2, l) for l in range(3, 8)] + [(3, l) for l in range(4, 10)] + [(4, 7), (4, 8), (4, 9)])
RESIDUAL_FAMILIES = frozenset([(k, 2, 3) for k in range(4, 13)] + [(k, 3, 4) for k in range(5, 14)])

LCASES_NOTES = [
    "margin normalisation: every condition is written lhs < rhs and a failing condition's violation is lhs - rhs; "
    "a non-survivor's margin is the largest violation among its failing conditions",
    "ratio condition: lhs = rho^(l-1) b(n+l)/b(n), rhs = (b(n+1)/b(n))^l",
    "scan weight condition: lhs = a(l)(rho^(l-1) b(n+l) - b(n)), rhs = l a(n)",
    "removal condition: lhs = a(k) rho^(l-1) b(n+l) - a(k-l) b(n), rhs = l a(n); the subtracted term is dropped when k = l, "
    "where removing the last pair leaves an empty sequence with nothing to bound",
    "reduction condition: lhs = a(k) rho^(l-1) b(n+l) - a(k-1) rho^(l-2) b(n+l-1), rhs = a(n)",
    "with the subtracted term kept at k = l the tie at (3,2,3) reads a(3) rho^2 b(5) - a(0) b(2) = 3a(2) - b(2), not 3a(2); "
    "the exact identity is a(3) rho^2 b(5) = 3a(2), and keeping the term would let (3,2,3) and (4,3,4) through while neither is well-behaved",
]


def t1_sides(n: int, l: int):
    return Pow(rho(), l - 1) * b(n + l) / b(n), Pow(b(n + 1) / b(n), l)


def t4_sides(n: int, l: int):
    return a(l) * (Pow(rho(), l - 1) * b(n + l) - b(n)), Const(l) * a(n)


def t2_sides(k: int, n: int, l: int):
    lhs = a(k) * Pow(rho(), l - 1) * b(n + l)
    if k > l:
        lhs = lhs - a(k - l) * b(n)
    return lhs, Const(l) * a(n)


def t3_sides(k: int, n: int, l: int):
    lhs = a(k) * Pow(rho(), l - 1) * b(n + l) - a(k - 1) * Pow(rho(), l - 2) * b(n + l - 1)
    return lhs, a(n)


def _conditions(P: Precision, sides):
    """Certify each ``lhs < rhs``; return ``[(name, verdict, lhs, rhs)]``."""
    out = []
    for name, (lhs, rhs) in sides:
        out.append((name, X.certify(lhs, "<", rhs, P.prec, P.max_prec), lhs, rhs))
    return out


def _classify(conds) -> Outcome:
    outs = [v.outcome for _, v, _, _ in conds]
    if all(o is Outcome.TRUE for o in outs):
        return Outcome.TRUE
    if any(o is Outcome.FALSE for o in outs):
        return Outcome.FALSE
    return Outcome.UNDECIDED


def _margin_claim(cb: ClaimBuilder, P: Precision, conds, threshold: Fraction, witness) -> None:
    """Largest violation among failing conditions must be >= threshold."""
    best = None
    for name, v, lhs, rhs in conds:
        if v.outcome is not Outcome.FALSE:
            continue
        w = X.certify(lhs - rhs, ">=", Const(threshold), P.prec, P.max_prec)
        key = {Outcome.TRUE: 2, Outcome.UNDECIDED: 1, Outcome.FALSE: 0}[w.outcome]
        viol = w.margin + threshold if w.margin is not None else None
        if best is None or key > best[0] or (key == best[0] and viol is not None and viol.lo > best[2].lo):
            best = (key, w, viol, name)
    if best is None:
        cb.add_outcome(ClaimOutcome.UNDECIDED, P.prec, None, witness)
        return
    _, w, viol, name = best
    cb.add_outcome(ClaimOutcome.of(w.outcome), w.prec, viol, (*witness, name) if isinstance(witness, tuple) else witness)


def scan_pairs(P: Precision, n_max: int = 12, l_max: int = 39) -> dict:
    """Classify every ``(n, l)`` by the ratio and scan weight conditions."""
    out = {}
    for n in range(2, n_max + 1):
        for l in range(2, l_max + 1):
            conds = _conditions(P, (("ratio", t1_sides(n, l)), ("weight", t4_sides(n, l))))
            out[(n, l)] = (_classify(conds), conds)
    return out


def scan_triples(P: Precision, pairs=P_SET) -> dict:
    out = {}
    for n, l in sorted(pairs):
        for k in range(l, l + 10):
            conds = _conditions(
                P, (("ratio", t1_sides(n, l)), ("removal", t2_sides(k, n, l)), ("reduction", t3_sides(k, n, l)))
            )
            out[(k, n, l)] = (_classify(conds), conds)
    return out


def suite_lcases(prec: Optional[int] = None, max_prec: Optional[int] = None) -> VerificationReport:
    P = Precision.resolve(prec, max_prec)
    rep = VerificationReport("lcases", params={"prec": P.prec, "max_prec": P.max_prec}, notes=list(LCASES_NOTES))
    anchor = "case analysis of the main inequality"

    cb = ClaimBuilder("n-bound", "b(14)/b(13) < rho < b(13)/b(12), so the ratio condition forces n <= 12", anchor)
    check(cb, P, b(14) / b(13), "<", rho(), "n=13")
    check(cb, P, b(13) / b(12), ">", rho(), "n=12")
    rep.add(cb.build())

    cb = ClaimBuilder("b-shift-dominates-a", "b(n+2) >= a(n) for n in {2,3,4}, and alpha(5) < 1", anchor)
    for n in (2, 3, 4):
        check(cb, P, b(n + 2), ">=", a(n), n)
    check(cb, P, alpha(5), "<", 1, "alpha(5)")
    rep.add(cb.build())

    cb = ClaimBuilder("l-bound", "l > a(l)(rho^(l-1) - 1/alpha(12)) holds at l = 39 and fails for 40 <= l <= 80", anchor)

    def lb(l):
        return Const(l), a(l) * (Pow(rho(), l - 1) - Const(1) / alpha(12))

    check(cb, P, lb(39)[0], ">", lb(39)[1], 39)
    for l in range(40, 81):
        check_false(cb, P, lb(l)[0], ">", lb(l)[1], l)
    rep.add(cb.build())

    pairs = scan_pairs(P)
    survivors = {key for key, (o, _) in pairs.items() if o is Outcome.TRUE}
    undecided = {key for key, (o, _) in pairs.items() if o is Outcome.UNDECIDED}
    cb = ClaimBuilder("survivor-set", "pairs 2 <= n <= 12, 2 <= l <= 39 meeting both scan conditions are exactly P (14 pairs)", anchor)
    if undecided:
        cb.add_outcome(ClaimOutcome.UNDECIDED, P.max_prec, None, sorted(undecided))
    else:
        check_bool(cb, survivors == P_SET, sorted(survivors ^ P_SET) or sorted(survivors), P.prec)
    claim = cb.build()
    claim.instances = len(pairs)
    rep.add(claim)

    cb = ClaimBuilder("tie-22", "(n,l) = (2,2): rho b(4)/b(2) = (b(3)/b(2))^2 exactly", anchor)
    lhs, rhs = t1_sides(2, 2)
    check(cb, P, lhs, "==", rhs)
    rep.add(cb.build())

    cb = ClaimBuilder("scan-margins", "every other non-survivor fails by at least 0.03", anchor)
    for key, (o, conds) in sorted(pairs.items()):
        if key in survivors or key == (2, 2) or o is not Outcome.FALSE:
            continue
        _margin_claim(cb, P, conds, Q(3, 100), key)
    rep.add(cb.build())

    cb = ClaimBuilder("far-k", "a(l+10) rho^(l-2)(rho b(n+l) - b(n+l-1)) < a(n) holds on P only for (2,3) and (3,4)", anchor)
    sat = set()
    for n, l in sorted(P_SET):
        lhs = a(l + 10) * Pow(rho(), l - 2) * (rho() * b(n + l) - b(n + l - 1))
        v = X.certify(lhs, "<", a(n), P.prec, P.max_prec)
        if v.outcome is Outcome.TRUE:
            sat.add((n, l))
        cb.add_outcome(
            ClaimOutcome.UNDECIDED if v.outcome is Outcome.UNDECIDED else ClaimOutcome.CERTIFIED, v.prec, slack(v, "<"), (n, l)
        )
    if cb.outcome is not ClaimOutcome.UNDECIDED:
        check_bool(cb, sat == {(2, 3), (3, 4)}, sorted(sat), P.prec)
    rep.add(cb.build())

    triples = scan_triples(P)
    full = {key for key, (o, _) in triples.items() if o is Outcome.TRUE}
    und = {key for key, (o, _) in triples.items() if o is Outcome.UNDECIDED}
    cb = ClaimBuilder("residual-set", "for (n,l) in P and l <= k <= l+9 all three conditions hold only for (k,2,3), k >= 4 and (k,3,4), k >= 5", anchor)
    if und:
        cb.add_outcome(ClaimOutcome.UNDECIDED, P.max_prec, None, sorted(und))
    else:
        check_bool(cb, full == RESIDUAL_FAMILIES, sorted(full ^ RESIDUAL_FAMILIES) or None, P.prec)
    claim = cb.build()
    claim.instances = len(triples)
    rep.add(claim)

    cb = ClaimBuilder("tie-323", "(k,n,l) = (3,2,3): a(3) rho^2 b(5) = 3 a(2) exactly, so the removal condition fails", anchor)
    check(cb, P, a(3) * Pow(rho(), 2) * b(5), "==", Const(3) * a(2))
    rep.add(cb.build())

    cb = ClaimBuilder("tie-323-printed", "a(3) rho^2 b(5) - a(0) b(2) = 3 a(2) - b(2)", anchor)
    check(cb, P, a(3) * Pow(rho(), 2) * b(5) - a(0) * b(2), "==", Const(3) * a(2) - b(2))
    cb.note("the printed tie omits the - b(2); see report notes")
    rep.add(cb.build())

    cb = ClaimBuilder("residual-margins", "every other residual triple fails by at least 0.005", anchor)
    for key, (o, conds) in sorted(triples.items()):
        if key in full or key == (3, 2, 3) or o is not Outcome.FALSE:
            continue
        _margin_claim(cb, P, conds, Q(5, 1000), key)
    rep.add(cb.build())

    cb = ClaimBuilder("residual-well-behaved", "every residual survivor is well-behaved", anchor)
    for k, n, l in sorted(full):
        _wb(cb, P, k, n, l)
    rep.add(cb.build())
    return rep


# -- inequality property suites ------------------------------------------------

def main2_sides(ls, ns):
    k = sum(ls)
    lhs = X.Prod([a(k)] + [Pow(rho(), l - 1) * b(n + l) / b(n) for l, n in zip(ls, ns)])
    rhs = X.Sum([Const(0)] + [Const(l) * alpha(n) for l, n in zip(ls, ns)])
    return lhs, rhs


def mainineq_sides(ls, ds, ns):
    k = sum(ls)
    lhs = X.Prod([a(k)] + [phi(l, d) * b(n + d) for l, d, n in zip(ls, ds, ns)])
    rhs = X.Sum([Const(0)] + [Const(l) * alpha(n) for l, n in zip(ls, ns)]) * X.Prod([Const(1)] + [b(n) for n in ns])
    return lhs, rhs


def eqmain_sides(ls, ns):
    k = sum(ls)
    prod = Fraction(1)
    for l, n in zip(ls, ns):
        prod *= 1 + Fraction(l, n)
    lhs = X.sqrt(k) * Const(prod)
    rhs = Const(2) * X.Sum([Const(0)] + [Const(l) * Pow(Const(n), Q(-1, 2)) for l, n in zip(ls, ns)])
    return lhs, rhs


def scalar_holds(xs) -> tuple[Fraction, Fraction]:
    lhs = Fraction(1)
    for x in xs:
        lhs *= (1 + x) ** 2
    return lhs, 4 * sum(xs, Fraction(0))


INEQ_RANGES = {"c_max": 6, "l_max": 8, "n_min": 2, "n_max": 15}


def suite_inequalities(
    seed: int = 0, samples: int = 10_000, prec: Optional[int] = None, max_prec: Optional[int] = None
) -> VerificationReport:
    if samples < 1:
        raise ValueError("samples must be at least 1")
    P = Precision.resolve(prec, max_prec)
    rep = VerificationReport(
        "inequalities",
        params={"samples": samples, "prec": P.prec, "max_prec": P.max_prec, "rng": RNG_ALGORITHM, **INEQ_RANGES},
        seed=seed,
        notes=[
            "exhaustive part: c <= 2 with l <= 8, 2 <= n <= 15; the phi form with c = 2 uses l <= 4, n <= 8",
            "random part: c uniform in 1..6, l uniform in 1..8, d uniform in 1..l, n uniform in 2..15",
        ],
    )
    gen = rng(seed)
    lmax, nmin, nmax, cmax = INEQ_RANGES["l_max"], INEQ_RANGES["n_min"], INEQ_RANGES["n_max"], INEQ_RANGES["c_max"]
    singles = [(l, n) for l in range(1, lmax + 1) for n in range(nmin, nmax + 1)]

    def draw(with_d=False):
        c = int(gen.integers(1, cmax + 1))
        ls = [int(x) for x in gen.integers(1, lmax + 1, size=c)]
        ns = [int(x) for x in gen.integers(nmin, nmax + 1, size=c)]
        ds = [int(gen.integers(1, l + 1)) for l in ls] if with_d else None
        return ls, ns, ds

    # product of weight ratios
    cb = ClaimBuilder("main2-exhaustive", "a(k) prod rho^(l_i-1) b(n_i+l_i)/b(n_i) >= sum l_i alpha(n_i), c <= 2", "main inequality, equal-degree form")
    for c in (1, 2):
        for combo in itertools.combinations_with_replacement(singles, c):
            ls, ns = [x[0] for x in combo], [x[1] for x in combo]
            lhs, rhs = main2_sides(ls, ns)
            check(cb, P, lhs, ">=", rhs, (ls, ns))
    rep.add(cb.build())
    cb = ClaimBuilder("main2-random", f"same, {samples} random tuples with c <= {cmax}", "main inequality, equal-degree form")
    for _ in range(samples):
        ls, ns, _d = draw()
        lhs, rhs = main2_sides(ls, ns)
        check(cb, P, lhs, ">=", rhs, (ls, ns))
    rep.add(cb.build())

    # phi form
    triples = [(l, d, n) for l in range(1, lmax + 1) for d in range(1, l + 1) for n in range(nmin, nmax + 1)]
    small = [(l, d, n) for l, d, n in triples if l <= 4 and n <= 8]
    cb = ClaimBuilder("mainineq-exhaustive", "a(sum l_i) prod phi(l_i,d_i) b(n_i+d_i) >= (sum l_i alpha(n_i)) prod b(n_i), c <= 2", "main inequality")
    for combo in itertools.chain(((t,) for t in triples), itertools.combinations_with_replacement(small, 2)):
        ls, ds, ns = [t[0] for t in combo], [t[1] for t in combo], [t[2] for t in combo]
        lhs, rhs = mainineq_sides(ls, ds, ns)
        check(cb, P, lhs, ">=", rhs, (ls, ds, ns))
    rep.add(cb.build())
    cb = ClaimBuilder("mainineq-random", f"same, {samples} random tuples with c <= {cmax}", "main inequality")
    for _ in range(samples):
        ls, ns, ds = draw(with_d=True)
        lhs, rhs = mainineq_sides(ls, ds, ns)
        check(cb, P, lhs, ">=", rhs, (ls, ds, ns))
    rep.add(cb.build())

    # multigraph inequality
    cb = ClaimBuilder("eqmain-exhaustive", "sqrt(sum l_i) prod (1 + l_i/n_i) >= 2 sum l_i/sqrt(n_i), c <= 2", "multigraph path bound")
    for c in (1, 2):
        for combo in itertools.combinations_with_replacement(singles, c):
            ls, ns = [x[0] for x in combo], [x[1] for x in combo]
            lhs, rhs = eqmain_sides(ls, ns)
            check(cb, P, lhs, ">=", rhs, (ls, ns))
    rep.add(cb.build())
    cb = ClaimBuilder("eqmain-random", f"same, {samples} random tuples with c <= {cmax}", "multigraph path bound")
    for _ in range(samples):
        ls, ns, _d = draw()
        lhs, rhs = eqmain_sides(ls, ns)
        check(cb, P, lhs, ">=", rhs, (ls, ns))
    rep.add(cb.build())

    # scalar inequality on exact rationals
    grid = [Fraction(j, 4) for j in range(0, 17)]
    cb = ClaimBuilder("scalar-exhaustive", "prod (1 + x_i)^2 >= 4 sum x_i on x_i in {0, 1/4, ..., 4}, c <= 2", "multigraph path bound")
    for c in (1, 2):
        for xs in itertools.combinations_with_replacement(grid, c):
            lhs, rhs = scalar_holds(xs)
            check(cb, P, Const(lhs), ">=", Const(rhs), [str(x) for x in xs])
    rep.add(cb.build())
    cb = ClaimBuilder("scalar-random", f"same, {samples} random rational tuples with c <= {cmax}", "multigraph path bound")
    for _ in range(samples):
        c = int(gen.integers(1, cmax + 1))
        xs = [Fraction(int(p), int(q)) for p, q in zip(gen.integers(0, 65, size=c), gen.integers(1, 17, size=c))]
        lhs, rhs = scalar_holds(xs)
        check(cb, P, Const(lhs), ">=", Const(rhs), [str(x) for x in xs])
    rep.add(cb.build())

    for n in (2, 3, 4):
        cb = ClaimBuilder(f"k1-n{n}", f"a(1) b({n + 1})/b({n}) >= alpha({n})", "main inequality, single edge")
        check(cb, P, a(1) * b(n + 1) / b(n), ">=", alpha(n))
        rep.add(cb.build())
    cb = ClaimBuilder("k1-tail", f"a(1) b(n+1)/b(n) >= alpha(n) for 5 <= n <= {nmax}", "main inequality, single edge")
    for n in range(5, nmax + 1):
        check(cb, P, a(1) * b(n + 1) / b(n), ">=", alpha(n), n)
    rep.add(cb.build())

    cb = ClaimBuilder("boundary-recursion", "c = k, l_i = 1, n_i = k: both sides equal k alpha(k) (tight recursion), 2 <= k <= 10",
                      "main inequality, equal-degree form")
    for k in range(2, 11):
        lhs, rhs = main2_sides([1] * k, [k] * k)
        check_overlap(cb, P, lhs, rhs, k)
        check(cb, P, lhs, "==", rhs, k)
    rep.add(cb.build())
    return rep
