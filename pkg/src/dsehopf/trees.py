"""Rooted trees and forests, planar or commutative, with optional decorations.

A tree is a ``Tree(weight, deco, children)`` named tuple.  Because it is a
tuple, Python's own tuple ordering gives the canonical total order
(weight, then decoration, then children lexicographically), and hashing is
done in C.  A forest is a plain tuple of trees.  In commutative mode every
children tuple and every forest is sorted in *decreasing* canonical order,
so heavier subtrees come first.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

PLANAR = "planar"
COMMUTATIVE = "commutative"
MODES = (PLANAR, COMMUTATIVE)


class Tree(NamedTuple):
    weight: int
    deco: object
    children: tuple

    def __repr__(self) -> str:
        inner = "".join(repr(c) for c in self.children)
        label = "" if self.deco is None else f"{self.deco}"
        return f"[{label}{inner}]" if (inner or label) else "[]"


Forest = tuple
TreeOrForest = Union[Tree, tuple]


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    return mode


def make_tree(children: Iterable[Tree] = (), deco=None, mode: str = PLANAR) -> Tree:
    children = tuple(children)
    if mode == COMMUTATIVE:
        children = tuple(sorted(children, reverse=True))
    return Tree(1 + sum(c.weight for c in children), deco, children)


def make_forest(trees: Iterable[Tree], mode: str = PLANAR) -> Forest:
    trees = tuple(trees)
    if mode == COMMUTATIVE:
        return tuple(sorted(trees, reverse=True))
    return trees


def forest_weight(forest: Forest) -> int:
    return sum(t.weight for t in forest)


def from_nested(obj, mode: str = PLANAR) -> Tree:
    """Build an undecorated tree from nested lists: ``[]`` is a single vertex,
    ``[[], [[]]]`` a root carrying a leaf and a two-vertex ladder."""
    return make_tree((from_nested(c, mode) for c in obj), None, mode)


def to_nested(t: Tree) -> list:
    return [to_nested(c) for c in t.children]


def canonicalize(t: Tree, mode: str = COMMUTATIVE) -> Tree:
    if mode == PLANAR:
        return t
    return _canon(t)


@lru_cache(maxsize=None)
def _canon(t: Tree) -> Tree:
    children = tuple(sorted((_canon(c) for c in t.children), reverse=True))
    return Tree(t.weight, t.deco, children)


def canonicalize_forest(forest: Forest, mode: str = COMMUTATIVE) -> Forest:
    if mode == PLANAR:
        return forest
    return tuple(sorted((_canon(t) for t in forest), reverse=True))


def b_plus(forest: Forest, deco=None, mode: str = PLANAR) -> Tree:
    """Graft the trees of ``forest`` on a new common root."""
    return make_tree(forest, deco, mode)


def b_minus(t: Tree) -> Forest:
    """Delete the root of ``t``; inverse of :func:`b_plus`."""
    if not isinstance(t, Tree):
        if isinstance(t, tuple) and len(t) == 1 and isinstance(t[0], Tree):
            return t[0].children
        raise ValueError("b_minus is only defined on a single tree")
    return t.children


def ladder(n: int, deco=None) -> Tree:
    if n < 1:
        raise ValueError("a ladder has weight >= 1")
    t = Tree(1, deco, ())
    for w in range(2, n + 1):
        t = Tree(w, deco, (t,))
    return t


def is_ladder(t: Tree) -> bool:
    while t.children:
        if len(t.children) > 1:
            return False
        t = t.children[0]
    return True


def vertices(f: TreeOrForest) -> Iterator[Tree]:
    """Preorder walk over the vertices (as subtrees) of a tree or forest."""
    stack = [f] if isinstance(f, Tree) else list(reversed(f))
    while stack:
        t = stack.pop()
        yield t
        stack.extend(reversed(t.children))


def fertilities(f: TreeOrForest) -> list[int]:
    return [len(v.children) for v in vertices(f)]


def tree_factorial(f: TreeOrForest) -> int:
    out = 1
    for k in fertilities(f):
        out *= factorial(k)
    return out


def beta_int(i: int, beta) -> Fraction:
    """The deformed integer ``1 + beta (i - 1)``."""
    return 1 + Fraction(beta) * (i - 1)


def beta_int_factorial(i: int, beta) -> Fraction:
    out = Fraction(1)
    for j in range(1, i + 1):
        out *= beta_int(j, beta)
    return out


def beta_factorial(f: TreeOrForest, beta) -> Fraction:
    out = Fraction(1)
    for k in fertilities(f):
        out *= beta_int_factorial(k, beta)
    return out


def enumerate_trees(n: int, mode: str = COMMUTATIVE) -> list[Tree]:
    """All trees of weight ``n`` (canonical in commutative mode), sorted."""
    check_mode(mode)
    if n < 1:
        return []
    return list(_trees(n, mode))


def enumerate_forests(n: int, mode: str = COMMUTATIVE) -> list[Forest]:
    check_mode(mode)
    if n < 0:
        return []
    return list(_forests(n, mode))


@lru_cache(maxsize=None)
def _trees(n: int, mode: str) -> tuple:
    return tuple(sorted(Tree(n, None, f) for f in _forests(n - 1, mode)))


@lru_cache(maxsize=None)
def _forests(n: int, mode: str) -> tuple:
    if n == 0:
        return ((),)
    if mode == PLANAR:
        out = []
        for k in range(1, n + 1):
            for t in _trees(k, mode):
                for rest in _forests(n - k, mode):
                    out.append((t,) + rest)
        return tuple(sorted(out))
    pool = sorted((t for k in range(1, n + 1) for t in _trees(k, mode)), reverse=True)
    return tuple(sorted(_multisets(n, pool, 0)))


def _multisets(n: int, pool: Sequence[Tree], start: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for idx in range(start, len(pool)):
        t = pool[idx]
        if t.weight <= n:
            for rest in _multisets(n - t.weight, pool, idx):
                yield (t,) + rest


def count_planar_embeddings(t: Tree) -> int:
    """Number of distinct planar trees whose underlying rooted tree is ``t``."""
    t = _canon(t)
    out = 1
    for v in vertices(t):
        kids = v.children
        out *= factorial(len(kids))
        run = 1
        for a, b in zip(kids, kids[1:]):
            if a == b:
                run += 1
            else:
                out //= factorial(run)
                run = 1
        out //= factorial(run)
    return out
