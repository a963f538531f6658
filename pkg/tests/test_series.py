from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from dsehopf.rational import format_rational, parse_rational
from dsehopf.series import (TruncatedSeries, binomial_coefficient, binomial_power, compose,
                            exp_series, family_closed_form, family_parameters,
                            geometric_power, parse_series, polynomial, q_poly, solve_family,
                            variable)
from oracles import as_fraction, series_coeffs
from strategies import rationals

h = sympy.Symbol("h")


def sym(q):
    return sympy.Rational(q.numerator, q.denominator)


@pytest.mark.parametrize("text,value", [("3", 3), ("-7/3", Fraction(-7, 3)), (" 4/6 ", Fraction(2, 3)),
                                        ("+2", 2)])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1.5", "1e3", "x", "1/0", "", "2//3", "nan"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError, match="beta"):
        parse_rational(text, "beta")


def test_format_rational():
    assert format_rational(Fraction(6, 4)) == "3/2" and format_rational(5) == "5"


@given(st.lists(rationals, min_size=1, max_size=5), st.lists(rationals, min_size=1, max_size=5))
def test_polynomial_product_matches_sympy(a, b):
    pa = sum(sym(c) * h ** k for k, c in enumerate(a))
    pb = sum(sym(c) * h ** k for k, c in enumerate(b))
    want = sympy.Poly(sympy.expand(pa * pb), h).all_coeffs()[::-1] if sympy.expand(pa * pb) != 0 else [0]
    got = polynomial(a) * polynomial(b)
    assert all(got[k] == as_fraction(c) for k, c in enumerate(want))
    assert all(got[k] == 0 for k in range(len(want), got.order + 1))


def test_truncated_arithmetic_uses_smaller_order():
    s = TruncatedSeries([1, 1, 1, 1]) * TruncatedSeries([1, 2])
    assert s.order == 1 and s.coeffs == (1, 3)
    assert (TruncatedSeries([1, 2, 3]) + polynomial([0, 1])).order == 2
    with pytest.raises(IndexError):
        TruncatedSeries([1, 2])[2]
    assert polynomial([1, 2])[7] == 0


def test_q_poly_and_binomial_examples():
    assert q_poly(3, 1) == 1 and q_poly(2, 2) == 3 and q_poly(0, 5) == 1
    assert binomial_coefficient(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert geometric_power(1, 4).coeffs == (1, 1, 1, 1, 1)


@given(rationals)
def test_binomial_series_matches_sympy(gamma):
    want = series_coeffs((1 + h) ** sym(gamma), h, 5)
    got = binomial_power(polynomial([1, 1]), gamma, 5)
    assert [got[k] for k in range(6)] == [as_fraction(c) for c in want]


@given(rationals, st.lists(rationals, min_size=1, max_size=3))
def test_binomial_power_general_series(gamma, tail):
    s = polynomial([1] + tail)
    expr = 1 + sum(sym(c) * h ** (k + 1) for k, c in enumerate(tail))
    want = series_coeffs(expr ** sym(gamma), h, 4)
    got = binomial_power(s, gamma, 4)
    assert [got[k] for k in range(5)] == [as_fraction(c) for c in want]


def test_binomial_power_needs_unit_constant():
    with pytest.raises(ValueError):
        binomial_power(polynomial([2, 1]), Fraction(1, 2), 3)


def test_compose_exp_of_log():
    log1p = TruncatedSeries([0] + [Fraction((-1) ** (k + 1), k) for k in range(1, 7)])
    assert compose(exp_series(6), log1p, 6) == polynomial([1, 1]).extend(6)


def test_compose_polynomials_exact_and_order_guard():
    p = polynomial([1, 2, 1])
    q = polynomial([0, 1, 1])
    assert compose(p, q) == polynomial([1, 2, 3, 2, 1])
    with pytest.raises(ValueError):
        compose(exp_series(3), polynomial([1, 1]))
    with pytest.raises(ValueError):
        compose(exp_series(3), TruncatedSeries([0, 1, 1]), 5)


@given(st.lists(rationals, min_size=1, max_size=4), st.lists(rationals, min_size=1, max_size=3))
def test_compose_matches_sympy(pc, qc):
    p = polynomial(pc)
    q = polynomial([0] + qc)
    ep = sum(sym(c) * h ** k for k, c in enumerate(pc))
    eq = sum(sym(c) * h ** (k + 1) for k, c in enumerate(qc))
    want = series_coeffs(ep.subs(h, eq), h, 6)
    got = compose(p, q, 6)
    assert [got[k] for k in range(7)] == [as_fraction(c) for c in want]


@given(st.sampled_from([Fraction(1), Fraction(3), Fraction(-1, 2), Fraction(2, 3)]),
       st.sampled_from([Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(7, 3), Fraction(-2, 5)]))
def test_family_closed_forms(alpha, beta):
    p = solve_family(alpha, beta, 6)
    assert p == family_closed_form(alpha, beta, 6)
    want = series_coeffs((1 - sym(alpha * beta) * h) ** (-1 / sym(beta)), h, 6)
    assert [p[k] for k in range(7)] == [as_fraction(c) for c in want]
    # the differential system (1 - alpha beta h) P' = alpha P, coefficientwise
    d = p.derivative()
    for k in range(6):
        assert d[k] - alpha * beta * (d[k - 1] if k else 0) == alpha * p[k]


def test_family_special_cases():
    assert solve_family(2, 0, 5) == exp_series(5, 2)
    assert solve_family(0, 3, 4) == polynomial([1]).extend(4)
    assert solve_family(2, Fraction(-1, 2), 4) == polynomial([1, 2, 1]).extend(4)
    assert solve_family(1, -1, 4) == polynomial([1, 1]).extend(4)


def test_family_parameters():
    assert family_parameters(solve_family(3, Fraction(7, 3), 4)) == (3, Fraction(7, 3))
    assert family_parameters(polynomial([1, 0, 5])) is None
    assert family_parameters(TruncatedSeries([1, 2])) is None


def test_parse_series_forms():
    s = parse_series("1, 1, 1/2")
    assert s.at(4) == polynomial([1, 1, Fraction(1, 2)]).extend(4)
    f = parse_series("family:alpha=1,beta=1/2")
    assert f.at(3) == solve_family(1, Fraction(1, 2), 3)
    assert parse_series("family:α=2,β=0").at(2) == exp_series(2, 2)
    for bad in ["", "family:alpha=1", "family:gamma=1,beta=2", "1,x", "1,0.5"]:
        with pytest.raises(ValueError):
            parse_series(bad)


def test_series_repr_and_variable():
    assert "O(h^3)" in repr(TruncatedSeries([1, 2, 3]))
    assert variable() * variable() == polynomial([0, 0, 1])
