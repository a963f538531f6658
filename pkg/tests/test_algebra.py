from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dsehopf.algebra import (DOT, AlgebraElement, TensorElement, abelianize, abelianize_tensor,
                             algebra_power, apply_left, b_minus_linear, b_plus_linear,
                             coproduct, coproduct_by_cuts, counit, left_factor, power, product,
                             substitute_series, tensor, tensor_power, z_functional)
from dsehopf.series import TruncatedSeries, exp_series, polynomial
from dsehopf.trees import COMMUTATIVE, PLANAR, enumerate_trees, from_nested
from strategies import forests, rationals, trees


def el(nested_forest, mode=PLANAR, c=1):
    return AlgebraElement.from_forest([from_nested(n, mode) for n in nested_forest], mode, c)


def tens(left, right, mode=PLANAR, c=1):
    return tensor(el(left, mode), el(right, mode)) * c


def _delta_forest_elem(x):
    return coproduct(x)


def _delta_left(t: TensorElement) -> dict:
    """(Delta (x) Id) applied to a tensor, as a dict on triples."""
    out = {}
    for (l, r), c in t.terms.items():
        for (ll, lr), c2 in coproduct(AlgebraElement({l: 1}, t.mode)).terms.items():
            out[(ll, lr, r)] = out.get((ll, lr, r), 0) + c * c2
    return {k: v for k, v in out.items() if v}


def _delta_right(t: TensorElement) -> dict:
    out = {}
    for (l, r), c in t.terms.items():
        for (rl, rr), c2 in coproduct(AlgebraElement({r: 1}, t.mode)).terms.items():
            out[(l, rl, rr)] = out.get((l, rl, rr), 0) + c * c2
    return {k: v for k, v in out.items() if v}


def test_delta_ladder2():
    assert coproduct(el([[[]]])) == tens([[[]]], []) + tens([], [[[]]]) + tens([[]], [[]])


def test_delta_planar_corners_differ_only_in_pruned_order():
    d1 = coproduct(el([[[[]], []]]))
    d2 = coproduct(el([[[], [[]]]]))
    assert d1.coefficient((from_nested([[]]), DOT), (DOT,)) == 1
    assert d2.coefficient((DOT, from_nested([[]])), (DOT,)) == 1
    assert d1.coefficient((DOT, from_nested([[]])), (DOT,)) == 0


@pytest.mark.parametrize("mode", [PLANAR, COMMUTATIVE])
def test_recursion_matches_cuts_weight_7(mode):
    for t in enumerate_trees(7, mode):
        assert coproduct(AlgebraElement.from_tree(t, mode)) == coproduct_by_cuts(t, mode)


@pytest.mark.parametrize("mode", [PLANAR, COMMUTATIVE])
@given(data=st.data())
def test_coassociative(mode, data):
    t = data.draw(trees(mode))
    d = coproduct(AlgebraElement.from_tree(t, mode))
    assert _delta_left(d) == _delta_right(d)


@pytest.mark.parametrize("mode", [PLANAR, COMMUTATIVE])
@given(data=st.data())
def test_counit_laws(mode, data):
    f = data.draw(forests(mode))
    x = AlgebraElement.from_forest(f, mode)
    d = coproduct(x)
    left = AlgebraElement({}, mode)
    right = AlgebraElement({}, mode)
    for (l, r), c in d.terms.items():
        if l == ():
            left = left + AlgebraElement({r: c}, mode)
        if r == ():
            right = right + AlgebraElement({l: c}, mode)
    assert left == x and right == x


@pytest.mark.parametrize("mode", [PLANAR, COMMUTATIVE])
@given(data=st.data())
def test_coproduct_multiplicative(mode, data):
    x = AlgebraElement.from_forest(data.draw(forests(mode, 2)), mode)
    y = AlgebraElement.from_forest(data.draw(forests(mode, 2)), mode)
    assert coproduct(product(x, y)) == coproduct(x) * coproduct(y)


@given(trees(PLANAR))
def test_cocycle_identity(t):
    x = AlgebraElement({t.children: 1}, PLANAR)
    lhs = coproduct(b_plus_linear(x))
    rhs = tensor(b_plus_linear(x), AlgebraElement.one())
    for (l, r), c in coproduct(x).terms.items():
        rhs = rhs + tensor(AlgebraElement({l: c}), b_plus_linear(AlgebraElement({r: 1})))
    assert lhs == rhs


@given(trees(PLANAR))
def test_abelianization_commutes_with_coproduct(t):
    x = AlgebraElement.from_tree(t, PLANAR)
    assert abelianize_tensor(coproduct(x)) == coproduct(abelianize(x))


@given(forests(PLANAR, 2), forests(PLANAR, 2))
def test_z_is_an_epsilon_derivation(f, g):
    a = AlgebraElement.from_forest(f) + 1
    b = AlgebraElement.from_forest(g) + AlgebraElement.from_tree(DOT) * 3
    assert z_functional(product(a, b)) == z_functional(a) * counit(b) + counit(a) * z_functional(b)


def test_planar_product_is_noncommutative():
    a, b = el([[]]), el([[[]]])
    assert product(a, b) != product(b, a)
    ac, bc = el([[]], COMMUTATIVE), el([[[]]], COMMUTATIVE)
    assert product(ac, bc) == product(bc, ac)


def test_arithmetic_and_zero_terms():
    x = el([[]]) * Fraction(1, 2) + el([[[]]])
    assert (x - x) == AlgebraElement.zero()
    assert not (x - x)
    assert (x / 2).coefficient(DOT) == Fraction(1, 4)
    assert x.valuation() == 1 and AlgebraElement.zero().valuation() == float("inf")
    assert not x.is_homogeneous() and x.graded_component(2) == el([[[]]])
    with pytest.raises(ValueError):
        x + el([[]], COMMUTATIVE)


def test_power_and_truncation():
    x = el([[]]) + el([[[]]])
    assert power(x, 2, 3) == el([[], []]) + el([[[]], []]) + el([[], [[]]])
    assert power(x, 3).truncate(3) == el([[], [], []])


def test_b_minus_linear():
    assert b_minus_linear(el([[[]]]) * 2) == el([[]]) * 2
    with pytest.raises(ValueError):
        b_minus_linear(el([[], []]))


def test_substitute_series_exp():
    x = el([[]])
    e = substitute_series(exp_series(3), x, 3)
    assert e == 1 + x + el([[], []]) / 2 + el([[], [], []]) / 6


def test_substitute_needs_positive_valuation_for_true_series():
    with pytest.raises(ValueError):
        substitute_series(exp_series(3), el([[]]) + 1, 3)
    assert substitute_series(polynomial([1, 1]), el([[]]) + 1, 3) == el([[]]) + 2


@given(rationals, rationals)
def test_algebra_power_exponent_law(g1, g2):
    y = 1 + el([[]]) + el([[[]]]) * 2
    lhs = product(algebra_power(y, g1, 4), algebra_power(y, g2, 4), 4)
    assert lhs == algebra_power(y, g1 + g2, 4)


def test_algebra_power_integer_case():
    y = 1 + el([[]])
    assert algebra_power(y, 2, 5) == power(y, 2)
    with pytest.raises(ValueError):
        algebra_power(el([[]]), 2, 3)


def test_tensor_power_matches_square():
    t = tensor(1 + el([[]]), 1 + el([[]]))
    assert tensor_power(t, 2, 4) == (t * t).truncate(4)
    with pytest.raises(ValueError):
        tensor_power(tens([[]], []), 2, 3)


def test_apply_left_and_left_factor():
    d = coproduct(el([[[]]]))
    assert apply_left(d, z_functional) == el([[]])
    assert apply_left(d, counit) == el([[[]]])
    assert left_factor(d, (DOT,)) == el([[]])


def test_counit_rejects_tensors():
    with pytest.raises(TypeError):
        counit(tens([], []))


def test_series_substitution_truncates_to_known_order():
    p = TruncatedSeries([1, 1, 1])
    assert max(substitute_series(p, el([[]]), 5).weights()) == 2
