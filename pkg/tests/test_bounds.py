from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as O
from cyclebound.bounds import (
    CertReal,
    Outcome,
    certified_ge,
    certified_lt,
    certify,
    compare,
    is_well_behaved,
    overlap,
    render_down,
    render_up,
)
from cyclebound.bounds import expr as X
from cyclebound.bounds import functions as F
from cyclebound.bounds.exact import Exact, factor_int
from cyclebound.graphcore import Graph

PREC = 128


# -- CertReal ------------------------------------------------------------------

def test_exact_rational_is_point():
    x = CertReal.exact(Fraction(1, 3), PREC)
    assert x.lo <= Fraction(1, 3) <= x.hi
    assert x.width() < Fraction(1, 2**120)


def test_comparisons_need_separation():
    x = CertReal.hull(1, 2)
    y = CertReal.hull(Fraction(3, 2), 3)
    assert not certified_lt(x, y)
    assert compare(x, y, "<") is Outcome.UNDECIDED
    assert certified_lt(CertReal.hull(1, 2), CertReal.hull(Fraction(5, 2), 3))
    assert certified_ge(CertReal.hull(3, 4), CertReal.hull(1, 3))


def test_certified_lt_irreflexive():
    x = F.eval_b(5)
    assert not certified_lt(x, x)


@given(st.fractions(min_value=Fraction(1, 100), max_value=100), st.fractions(min_value=Fraction(1, 100), max_value=100))
@settings(max_examples=60, deadline=None)
def test_arithmetic_encloses(p, q):
    x, y = CertReal.exact(p, 64), CertReal.exact(q, 64)
    for iv, exact in ((x + y, p + q), (x - y, p - q), (x * y, p * q), (x / y, p / q)):
        assert iv.lo <= exact <= iv.hi


@given(st.fractions(min_value=Fraction(1, 50), max_value=50))
@settings(max_examples=40, deadline=None)
def test_transcendentals_enclose(p):
    import mpmath

    x = CertReal.exact(p, 96)
    mp_p = mpmath.mpf(p.numerator) / p.denominator
    assert O.contains(x.log(), mpmath.log(mp_p), Fraction(1, 2**80))
    assert O.contains(x.sqrt(), mpmath.sqrt(mp_p), Fraction(1, 2**80))
    assert O.contains(x.rpow(Fraction(2, 7)), mp_p ** (mpmath.mpf(2) / 7), Fraction(1, 2**80))


def test_prec_doubling_nests():
    for k in (3, 7, 20):
        lo, hi = F.eval_alpha(k, 64), F.eval_alpha(k, 128)
        assert lo.overlaps(hi)
        assert hi.width() <= lo.width()


def test_render_direction():
    x = Fraction(2, 3)
    assert Fraction(render_down(x, 10)) <= x <= Fraction(render_up(x, 10))
    assert render_up(Fraction(2), 5) == "2"


# -- exact layer ---------------------------------------------------------------

def test_factor_int():
    assert factor_int(442368) == ((2, 14), (3, 3))


def test_exact_rho_power():
    r = F.exact_rho()
    assert r.pow(4).as_rational() == Fraction(4, 3)
    assert (Exact.rational(3) - Exact.rational(3)).is_zero()


def test_exact_single_term_sign():
    assert Exact.atom("pi").sign() == 1
    assert (Exact.atom("pi") - Exact.atom("e")).sign() is None


# -- function values against a 200-digit oracle --------------------------------

@pytest.mark.parametrize("k", range(0, 30))
def test_b_oracle(k):
    assert O.contains(F.eval_b(k, PREC), O.b(k))


@pytest.mark.parametrize("k", range(2, 40))
def test_lambda_oracle(k):
    assert O.contains(F.eval_lambda(k, PREC), O.lam(k))


@pytest.mark.parametrize("k", range(0, 40))
def test_alpha_and_a_oracle(k):
    assert O.contains(F.eval_alpha(k, PREC), O.alpha(k), Fraction(1, 2**100))
    assert O.contains(F.eval_a(k, PREC), O.a(k), Fraction(1, 2**100))


@pytest.mark.parametrize("l,d", [(l, d) for l in range(1, 12) for d in range(1, l + 1)])
def test_phi_oracle(l, d):
    assert O.contains(F.eval_phi(l, d, PREC), O.phi(l, d))


@pytest.mark.parametrize("k,n,l", [(2, 3, 1), (3, 2, 1), (4, 2, 3), (5, 3, 4), (3, 2, 3), (6, 4, 2)])
def test_f_oracle(k, n, l):
    assert O.contains(F.eval_f(k, n, l, PREC), O.f(k, n, l), Fraction(1, 2**100))


@pytest.mark.parametrize("d", [2, Fraction(5, 2), 4, Fraction(9, 2), 5, 6])
def test_gamma_d_oracle(d):
    assert O.contains(F.eval_gamma_d(d, PREC), O.gamma_d(d))


def test_documented_values():
    assert F.eval_b(1).lo == F.eval_b(1).hi == 1
    assert abs(float(F.eval_b(2)) - 1.07457) < 1e-5
    assert abs(float(F.eval_b(4)) - 1.86121) < 1e-5
    assert F.eval_b_prime(1) == 1 and F.eval_b_prime(2) == 1 and F.eval_b_prime(7) == Fraction(7, 2)
    assert float(F.eval_a_prime(0)) == 1 and float(F.eval_a_prime(1)) == 2
    assert F.eval_a_prime(4).contains(4)
    assert abs(float(F.eval_lambda(2)) - 0.31061) < 1e-5
    assert abs(float(F.eval_a(2)) - 3**0.5) < 1e-12
    assert abs(float(F.eval_phi(2, 1)) - 1.46600) < 1e-5
    assert abs(float(F.eval_gamma_d(5)) - 1.38403) < 1e-5


def test_gamma_6_is_cube_root_of_b6():
    value = float(F.eval_gamma_d(6))
    assert abs(value - float(F.eval_b(6)) ** (1 / 3)) < 1e-12
    assert abs(value - 1.3826) < 1e-4


def test_argument_validation():
    with pytest.raises(ValueError):
        F.eval_lambda(1)
    with pytest.raises(ValueError):
        F.eval_phi(2, 3)
    with pytest.raises(ValueError):
        F.eval_phi(2, 0)
    with pytest.raises(ValueError):
        F.eval_f(1, 2, 1)
    with pytest.raises(ValueError):
        F.eval_gamma_d(1)
    with pytest.raises(ValueError):
        F.bregman_bound([2, 0])


def test_lambda_closed_form_cross_check():
    for k in range(2, 65):
        ok, _, _ = overlap(X.lam(k), X.Log(X.b(k + 1)) - X.Log(X.b(k)))
        assert ok


def test_b_recursion_overlap():
    for k in range(2, 65):
        ok, _, _ = overlap(X.Pow(X.b(k + 1), k), X.Const(k) * X.Pow(X.b(k), k - 1))
        assert ok


def test_f_l1_specialisation_agrees():
    for k in range(2, 8):
        for n in range(2, 8):
            assert F.eval_f(k, n, 1).overlaps(F.eval_f_l1(k, n))


def test_f_diagonal_is_zero():
    for k in range(2, 11):
        iv = F.eval_f(k, k, 1)
        assert iv.contains(0) and iv.width() <= Fraction(1, 2**64)


# -- exact anchors and ties ----------------------------------------------------

def test_exact_anchors():
    assert certify(X.a(2) * X.a(2), "==", 3).exact
    assert certify(X.Pow(X.b(5), Fraction(2, 5) * 40), "==", 442368).outcome is Outcome.TRUE
    assert F.eval_a(2).ipow(2).contains(3)


def test_tie_resolution_and_strictness():
    v = certify(X.a(2) * X.b(2) * X.b(2), "<=", 2)
    assert v.outcome is Outcome.TRUE and v.exact
    assert certify(X.a(2) * X.b(2) * X.b(2), "<", 2).outcome is Outcome.FALSE


def test_precision_escalation_and_fixed_precision():
    close = X.Const(1) + X.Const(Fraction(1, 2**100))
    assert certify(close, ">", 1, 16).outcome is Outcome.TRUE  # exact rationals
    near = X.b(5) + X.Const(Fraction(1, 2**200))
    assert certify(near, ">", X.b(5), 64, 64).outcome is Outcome.TRUE  # decided exactly
    # syntactic cancellation of the same atom settles this one without intervals
    assert certify(X.alpha(7) + X.Const(Fraction(1, 2**300)), ">", X.alpha(7), 64, 64).exact
    # logs have no exact form, so only precision can separate these
    tight = X.Exp(X.Log(X.b(5))) + X.Const(Fraction(1, 2**300))
    assert certify(tight, ">", X.b(5), 64, 128).outcome is Outcome.UNDECIDED
    v = certify(tight, ">", X.b(5), 64, 1024)
    assert v.outcome is Outcome.TRUE and v.prec == 512


def test_env_precision(monkeypatch):
    monkeypatch.setenv("CYCLEBOUND_PREC", "40")
    assert X.default_prec() == 40
    assert certify(X.b(3), "<", X.b(4)).prec == 40


def test_well_behaved_examples():
    assert is_well_behaved(5, 3, 4) is Outcome.TRUE
    for k in range(2, 13):
        assert is_well_behaved(k, k, 1) is Outcome.TRUE
    assert is_well_behaved(3, 2, 3) is Outcome.FALSE
    assert float(F.eval_f(3, 2, 3)) < 3 * (float(F.eval_alpha(2)) - float(F.eval_alpha(3)))


def test_alpha_recursion_tie_is_exact():
    for k in range(4, 12):
        v = certify(X.f(k, k - 1, 1), "==", X.alpha(k - 1) - X.alpha(k))
        assert v.outcome is Outcome.TRUE and v.exact


def test_perturbed_alpha_restores():
    base = F.eval_alpha(5)
    with F.perturbed_alpha(3, Fraction(1, 10)):
        assert float(F.eval_alpha(3)) > float(base)
        assert not F.eval_alpha(5).overlaps(base)
    assert F.eval_alpha(5).overlaps(base)


# -- graph-level bounds --------------------------------------------------------

def test_bound_q_examples():
    tri = Graph(3, [(0, 1), (1, 2), (0, 2)])
    q = F.bound_q(tri, 0)
    assert q.contains(2) and q.width() <= Fraction(1, 2**64)
    edge = Graph(2, [(0, 1)])
    assert 1.1 < float(F.bound_q(edge, 0)) < 1.2
    k4 = Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert O.contains(F.bound_q(k4, 0), O.a(3) * O.b(3) ** 3)
    assert abs(float(F.bound_q(k4, 0)) - 6.2914) < 1e-4
    with pytest.raises((KeyError, ValueError)):
        F.bound_q(tri, 5)


def test_bound_q_prime_examples():
    for l in range(2, 8):
        G = Graph(2, [(0, 1, l)])
        assert abs(float(F.bound_q_prime(G, 1)) - l**1.5) < 1e-9
    tri = Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert abs(float(F.bound_q_prime(tri, 0)) - 2 * 2**0.5) < 1e-12
    t3 = Graph(3, [(0, 1, 3), (1, 2, 3), (0, 2, 3)])
    assert abs(float(F.bound_q_prime(t3, 0)) - 44.09) < 0.01


def test_bregman_examples():
    assert F.bregman_bound([1, 1, 1]).contains(1)
    assert F.bregman_bound([3, 3, 3]).contains(6)
    assert F.bregman_bound([2, 2]).contains(2)


def test_constants():
    c = F.constants()
    assert c.rho.ipow(4).contains(Fraction(4, 3))
    assert 1.38402 < float(c.gamma) < 1.38404
    assert 1.3700 < float(c.kappa1) < 1.3702
