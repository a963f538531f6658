from fractions import Fraction

from hypothesis import strategies as st

from dsehopf.trees import from_nested

# nested lists: [] is a vertex, a list of lists is a root over those subtrees
nested_trees = st.recursive(st.just([]), lambda kids: st.lists(kids, max_size=3), max_leaves=6)

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def trees(mode):
    return nested_trees.map(lambda n: from_nested(n, mode))


def forests(mode, max_size=3):
    return st.lists(trees(mode), max_size=max_size)
