from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dsehopf.linalg import CoordinateSystem, Echelon, NotInSpan
from oracles import in_span

KEYS = ["a", "b", "c", "d"]
small = st.fractions(min_value=-3, max_value=3, max_denominator=4)
vectors = st.dictionaries(st.sampled_from(KEYS), small, max_size=4)


def _build(vs):
    e = Echelon(KEYS)
    for v in vs:
        e.add(v)
    return e


@given(st.lists(vectors, max_size=4), vectors)
def test_membership_matches_sympy_rank(vs, target):
    assert _build(vs).contains(target) == in_span(vs, target, KEYS)


@given(st.lists(vectors, max_size=4), vectors)
def test_reduce_differs_by_span_element(vs, target):
    e = _build(vs)
    rem = e.reduce(target)
    diff = {k: target.get(k, 0) - rem.get(k, 0) for k in KEYS}
    assert in_span(vs, diff, KEYS)
    assert all(k not in rem for k in (e.columns[p] for p in e.pivots))


@given(st.lists(vectors, max_size=4), st.randoms())
def test_echelon_is_canonical(vs, rnd):
    shuffled = list(vs)
    rnd.shuffle(shuffled)
    scaled = [{k: 3 * c for k, c in v.items()} for v in shuffled]
    assert _build(vs) == _build(scaled)


def test_rank_growth_and_outside_keys():
    e = Echelon(KEYS)
    assert e.add({"a": 1, "b": 2})
    assert not e.add({"a": Fraction(1, 2), "b": 1})
    assert e.rank == 1 and e.basis() == [{"a": 1, "b": 2}]
    with pytest.raises(KeyError):
        e.add({"z": 1})
    assert e.reduce({"z": 2}) == {"z": 2}


@given(st.lists(vectors, min_size=1, max_size=3), st.lists(small, min_size=3, max_size=3))
def test_coordinates_recover_combination(vs, coeffs):
    cs = CoordinateSystem(vs, KEYS)
    target = {k: sum(c * v.get(k, 0) for c, v in zip(coeffs, vs)) for k in KEYS}
    x = cs.solve(target)
    back = {k: sum(c * v.get(k, 0) for c, v in zip(x, vs)) for k in KEYS}
    assert back == target
    if cs.independent:
        assert x == list(coeffs[:len(vs)])


def test_coordinates_outside_span():
    cs = CoordinateSystem([{"a": 1}, {"b": 1}])
    assert cs.independent
    with pytest.raises(NotInSpan):
        cs.solve({"c": 1})
    assert not CoordinateSystem([{"a": 1}, {"a": 2}]).independent
