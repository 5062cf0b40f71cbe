import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import half_integers, small_rationals
from spoquant.contact import AFFINE_NAMES, GENERATORS, QUADRATIC_NAMES
from spoquant.grassmann import ONE, T1, T2, X, ZERO
from spoquant.operators import DiffOp, lie_op
from spoquant.sampling import random_symbol
from spoquant.symbols import (
    GradedSymbol, Symbol, calL, gamma, gamma_closed_form, gamma_vanishes_on_affine,
    lie_symbol, n_closed_form, principal_symbol, q_aff, q_aff_inv,
)

HALF = Fraction(1, 2)


def test_q_aff_examples():
    assert q_aff(Symbol(1, 0, X), 0) == DiffOp({(1, 0, 0): X})
    assert q_aff(Symbol(HALF, 0, T1, ONE), 0) == DiffOp({(0, 1, 0): T1, (0, 0, 1): ONE})
    assert q_aff(Symbol(2, 0, ZERO, ONE), 0) == DiffOp({(1, 1, 1): ONE})
    assert q_aff(Symbol(0, 1, X), 2).mu == 3


def test_q_aff_inv_examples():
    G = q_aff_inv(DiffOp({(1, 0, 0): X, (0, 1, 0): T1}))
    assert G == GradedSymbol(0, [Symbol(1, 0, X), Symbol(HALF, 0, T1)])
    D = DiffOp({(0, 1, 0): ONE}) @ DiffOp({(0, 1, 0): ONE})
    assert q_aff_inv(D) == GradedSymbol.of(Symbol(1, 0, -ONE))


def test_degree_zero_has_one_component():
    with pytest.raises(ValueError):
        Symbol(0, 0, ONE, X)
    with pytest.raises(ValueError):
        Symbol(Fraction(1, 3), 0, ONE)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), half_integers, small_rationals, small_rationals)
def test_q_aff_round_trip(seed, k, delta, lam):
    S = random_symbol(random.Random(seed), k, delta)
    assert q_aff_inv(q_aff(S, lam)) == (GradedSymbol.of(S))
    assert principal_symbol(q_aff(S, lam), k) == S


def test_graded_symbol_arithmetic():
    a = Symbol(1, 0, X)
    b = Symbol(HALF, 0, T1, T2)
    G = GradedSymbol.of(a) + b
    assert G.degrees() == [1, HALF]
    assert G - a == GradedSymbol.of(b)
    assert not (G - G)
    assert G[Fraction(3, 2)] == Symbol(Fraction(3, 2), 0, ZERO, ZERO)
    with pytest.raises(ValueError):
        G + Symbol(1, 1, X)


def test_lie_symbol_example():
    S = Symbol(HALF, Fraction(2, 5), ONE)
    assert lie_symbol(GENERATORS["t1t2"], S) == Symbol(HALF, Fraction(2, 5), ZERO, -HALF * ONE)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), half_integers, small_rationals, small_rationals)
def test_principal_symbol_is_equivariant(seed, k, delta, lam):
    # sigma(calL_f q_aff(S)) = L_f S: the symbol action is induced from operators
    S = random_symbol(random.Random(seed), k, delta)
    for name, f in GENERATORS.items():
        assert principal_symbol(lie_op(f, q_aff(S, lam)), k) == lie_symbol(f, S), name


def test_gamma_examples():
    lam = Fraction(3, 7)
    S = Symbol(1, Fraction(1, 5), ONE)
    expected = GradedSymbol(S.delta, [Symbol(HALF, S.delta, -T1, -T2), Symbol(0, S.delta, ONE * (-2 * lam))])
    assert gamma(GENERATORS["x^2"], S, lam) == expected
    assert gamma_closed_form("x^2", S, lam) == expected
    assert gamma(GENERATORS["x^2"], S, 0)[0] == Symbol(0, S.delta, ZERO)
    assert not gamma(GENERATORS["x"], Symbol(2, 1, X * X, T1 * X), lam)
    assert not gamma(GENERATORS["x^2"], Symbol(0, 1, X * X * X + T2), lam)
    with pytest.raises(ValueError):
        gamma_closed_form("x", S, lam)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), half_integers, small_rationals, small_rationals)
def test_gamma_matches_closed_form(seed, k, delta, lam):
    rng = random.Random(seed)
    S = random_symbol(rng, k, delta) + random_symbol(rng, k, delta)  # mixed parity on purpose
    for name in QUADRATIC_NAMES:
        assert gamma(GENERATORS[name], S, lam) == gamma_closed_form(name, S, lam), name
    assert gamma_vanishes_on_affine(S, lam)


def test_gamma_lowers_degree():
    S = Symbol(Fraction(5, 2), 1, X * T1, X * X * T2)
    for name in QUADRATIC_NAMES:
        assert max(gamma(GENERATORS[name], S, 2).degrees()) < S.k


def test_n_closed_form_examples():
    S = Symbol(1, Fraction(2, 9), X)
    expected = GradedSymbol(S.delta, [Symbol(HALF, S.delta, T1 * HALF, T2 * HALF), Symbol(0, S.delta, ONE * 2)])
    assert n_closed_form(S, 1) == expected
    assert not n_closed_form(Symbol(0, 1, X * X), 5)


def test_calL_on_affine_equals_L():
    S = Symbol(Fraction(3, 2), Fraction(1, 3), X * T1 + T2, X * X)
    for name in AFFINE_NAMES:
        assert calL(GENERATORS[name], S, 1) == GradedSymbol.of(lie_symbol(GENERATORS[name], S))
