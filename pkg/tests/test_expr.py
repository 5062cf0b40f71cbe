import warnings

import pytest
from hypothesis import given

from conftest import superfns
from spoquant.expr import ExprSyntaxError, format_superfn, parse_superfn
from spoquant.grassmann import Poly, SuperFn, T1T2, X, ZERO


def test_examples():
    assert parse_superfn("x^2*t1 + 3/2*t2") == SuperFn(0, Poly([0, 0, 1]), Poly(["3/2"]), 0)
    assert parse_superfn("t2*t1") == -T1T2
    assert parse_superfn("t1*t1") == ZERO


def test_precedence():
    assert parse_superfn("-x^2") == -(X * X)
    assert parse_superfn("2*(x + 1)^2 - 3") == X * X * 2 + X * 4 - 1
    assert parse_superfn("1 - -x") == X + 1
    assert parse_superfn(" x ^ 0 ") == SuperFn.const(1)


def test_odd_power_warns():
    with pytest.warns(UserWarning):
        assert parse_superfn("t1^2") == ZERO
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert parse_superfn("t2^1 * t1^0") == parse_superfn("t2")


@pytest.mark.parametrize("text, pos", [("x +", 3), ("2 * * x", 4), ("x^t1", 2), ("(x", 2), ("y", 0), ("x x", 2), ("x^1/2", 2)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(ExprSyntaxError) as info:
        parse_superfn(text)
    assert info.value.pos == pos


def test_format_canonical():
    assert format_superfn(ZERO) == "0"
    assert format_superfn(parse_superfn("3/2*t2 + x^2*t1 - x*t1*t2 - 1")) == "-1 + x^2*t1 + 3/2*t2 - x*t1*t2"


@given(superfns(max_degree=5))
def test_round_trip(f):
    assert parse_superfn(format_superfn(f)) == f
