"""Independent reference implementations used only by the tests.

Nothing here imports the package's tree, algebra or linear-algebra code;
trees are plain strings or nested tuples and linear algebra goes through sympy.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian

import sympy


# -- trees as depth sequences ------------------------------------------------

def depth_sequences(n):
    """Preorder depth sequences of planar rooted trees with n vertices."""
    def extend(seq):
        if len(seq) == n:
            yield tuple(seq)
            return
        for d in range(1, seq[-1] + 2):
            yield from extend(seq + [d])
    if n == 1:
        yield (0,)
        return
    yield from extend([0])


def seq_to_nested(seq):
    """Depth sequence to nested tuples (children in planar order)."""
    def build(i):
        depth = seq[i]
        kids, j = [], i + 1
        while j < len(seq) and seq[j] > depth:
            child, j = build(j)
            kids.append(child)
        return tuple(kids), j
    return build(0)[0]


def unordered_key(nested):
    return "(" + "".join(sorted(unordered_key(c) for c in nested)) + ")"


def planar_key(nested):
    return "(" + "".join(planar_key(c) for c in nested) + ")"


def count_trees(n):
    planar = {planar_key(seq_to_nested(s)) for s in depth_sequences(n)}
    commutative = {unordered_key(seq_to_nested(s)) for s in depth_sequences(n)}
    return len(commutative), len(planar)


# -- symbolic DSE solution on nested tuples -----------------------------------

ALPHA, BETA = sympy.symbols("alpha beta")


def symbolic_family(n_max):
    """``a_n`` for ``P = sum p_k h^k`` with p_{k+1} = alpha (1+k beta)/(k+1) p_k,
    by the defining recursion over compositions; planar trees as strings."""
    p = [sympy.Integer(1)]
    for k in range(n_max):
        p.append(sympy.expand(ALPHA * (1 + k * BETA) / (k + 1) * p[k]))
    a = {1: {"()": sympy.Integer(1)}}

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(1, total - parts + 2):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for n in range(1, n_max):
        out = {}
        for k in range(1, n + 1):
            for comp in compositions(n, k):
                for picks in cartesian(*[list(a[m].items()) for m in comp]):
                    key = "(" + "".join(t for t, _ in picks) + ")"
                    coeff = p[k]
                    for _, c in picks:
                        coeff *= c
                    out[key] = sympy.expand(out.get(key, 0) + coeff)
        a[n + 1] = {t: c for t, c in out.items() if c != 0}
    return a


def string_of_tree(t):
    """Package tree to the planar string form used above."""
    return "(" + "".join(string_of_tree(c) for c in t.children) + ")"


# -- linear algebra via sympy --------------------------------------------------

def in_span(vectors, target, keys=None):
    """Whether ``target`` (dict) is a rational combination of ``vectors`` (dicts)."""
    keys = sorted({k for v in vectors for k in v} | set(target), key=repr) if keys is None else keys
    if not vectors:
        return all(target.get(k, 0) == 0 for k in keys)
    m = sympy.Matrix([[sympy.Rational(str(Fraction(v.get(k, 0)))) for v in vectors] for k in keys])
    b = sympy.Matrix([sympy.Rational(str(Fraction(target.get(k, 0)))) for k in keys])
    return m.rank() == m.row_join(b).rank()


def series_coeffs(expr, h, n):
    s = sympy.series(expr, h, 0, n + 1).removeO()
    return [sympy.Rational(s.coeff(h, k)) for k in range(n + 1)]


def as_fraction(x):
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))
