"""Free Faa di Bruno construction in ``D`` non-commuting variables, realized
on planar trees decorated by triples ``(i, u1, u2)``.

Words are tuples of letters in ``1..D``.  A decoration ``(i, u1, u2)`` is the
vertex label ``i,(u1,u2)``; the "root label" of a tree is the ``i`` of its
root decoration.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product as cartesian
from typing import Iterable

from .algebra import AlgebraElement, TensorElement, b_plus_linear, coproduct, product, tensor
from .dse import solve
from .series import family_parameters, polynomial, solve_family
from .trees import PLANAR, Tree

Word = tuple


def as_word(w, d: int) -> Word:
    if isinstance(w, str):
        w = tuple(int(ch) for ch in w)
    w = tuple(int(x) for x in w)
    if not w:
        raise ValueError("words are non-empty")
    bad = [x for x in w if not 1 <= x <= d]
    if bad:
        raise ValueError(f"letters {bad} out of range 1..{d}")
    return w


def _check_letter(i: int, d: int) -> None:
    if not 1 <= i <= d:
        raise ValueError(f"index {i} out of range 1..{d}")


def splits(w: Word, k: int):
    """All ways to write ``w`` as ``k`` non-empty consecutive factors."""
    n = len(w)
    if k == 1:
        yield (w,)
        return
    for cut in range(1, n - k + 2):
        for rest in splits(w[cut:], k - 1):
            yield (w[:cut],) + rest


def y_element(i: int, w, d: int) -> AlgebraElement:
    """``Y^i_w``: the scalar ``delta(i, w)`` for one letter, otherwise
    ``sum over alpha, beta and w = w1 w2`` of ``B+_{i,(alpha,beta)}(Y^alpha_w1 Y^beta_w2)``."""
    w = as_word(w, d)
    _check_letter(i, d)
    return AlgebraElement(dict(_y(i, w, d)), PLANAR)


@lru_cache(maxsize=None)
def _y(i: int, w: Word, d: int) -> tuple:
    if len(w) == 1:
        return (((), 1),) if w[0] == i else ()
    out = AlgebraElement.zero(PLANAR)
    for cut in range(1, len(w)):
        w1, w2 = w[:cut], w[cut:]
        for a in range(1, d + 1):
            left = _y(a, w1, d)
            if not left:
                continue
            for b in range(1, d + 1):
                right = _y(b, w2, d)
                if right:
                    inner = product(AlgebraElement(dict(left), PLANAR),
                                    AlgebraElement(dict(right), PLANAR))
                    out = out + b_plus_linear(inner, (i, a, b))
    return tuple(sorted(out.terms.items()))


def multi_coproduct_rhs(i: int, w, d: int) -> TensorElement:
    """``sum_k sum_{w1..wk = w} sum_{alphas} Y^a1_w1 ... Y^ak_wk (x) Y^i_{a1..ak}``."""
    w = as_word(w, d)
    out = TensorElement({}, PLANAR)
    for k in range(1, len(w) + 1):
        for parts in splits(w, k):
            for letters in cartesian(range(1, d + 1), repeat=k):
                right = y_element(i, letters, d)
                if not right:
                    continue
                left = AlgebraElement.one(PLANAR)
                for a, part in zip(letters, parts):
                    left = product(left, y_element(a, part, d))
                    if not left:
                        break
                if left:
                    out = out + tensor(left, right)
    return out


def verify_multi_coproduct(i: int, w, d: int) -> bool:
    return coproduct(y_element(i, w, d)) == multi_coproduct_rhs(i, w, d)


def _root_label(t: Tree) -> int:
    return t.deco[0]


def is_admissible(t: Tree) -> bool:
    """Fertility at most 2; a single child carries root label ``a`` or ``b`` of its
    parent ``i,(a,b)``; two children carry ``a`` then ``b``."""
    if not isinstance(t.deco, tuple) or len(t.deco) != 3:
        raise ValueError("admissibility needs decorations (i, u1, u2)")
    _, a, b = t.deco
    kids = t.children
    if len(kids) > 2:
        return False
    if len(kids) == 1 and _root_label(kids[0]) not in (a, b):
        return False
    if len(kids) == 2 and (_root_label(kids[0]), _root_label(kids[1])) != (a, b):
        return False
    return all(is_admissible(c) for c in kids)


def words_of(t: Tree) -> frozenset:
    """Every word the inductive rules can assign to ``t``; with a
    single child labelled ``a = b`` both rules apply and both words are kept."""
    if not is_admissible(t):
        raise ValueError("words_of needs an admissible tree")
    return _words(t)


@lru_cache(maxsize=None)
def _words(t: Tree) -> frozenset:
    _, a, b = t.deco
    kids = t.children
    if not kids:
        return frozenset({(a, b)})
    if len(kids) == 2:
        return frozenset(u + v for u in _words(kids[0]) for v in _words(kids[1]))
    out = set()
    label = _root_label(kids[0])
    inner = _words(kids[0])
    if label == a:
        out.update(u + (b,) for u in inner)
    if label == b:
        out.update((a,) + u for u in inner)
    return frozenset(out)


@lru_cache(maxsize=None)
def admissible_trees(i: int, weight: int, d: int) -> tuple:
    """All admissible planar trees of the given weight with root label ``i``."""
    out = set()
    for a in range(1, d + 1):
        for b in range(1, d + 1):
            deco = (i, a, b)
            if weight == 1:
                out.add(Tree(1, deco, ()))
                continue
            for label in {a, b}:
                for c in admissible_trees(label, weight - 1, d):
                    out.add(Tree(weight, deco, (c,)))
            for k in range(1, weight - 1):
                for c1 in admissible_trees(a, k, d):
                    for c2 in admissible_trees(b, weight - 1 - k, d):
                        out.add(Tree(weight, deco, (c1, c2)))
    return tuple(sorted(out))


def generic_reconstruct(i: int, w, d: int) -> AlgebraElement:
    """Sum of the admissible trees with root label ``i`` whose word set contains ``w``."""
    w = as_word(w, d)
    _check_letter(i, d)
    if len(set(w)) != len(w):
        raise ValueError("generic_reconstruct needs pairwise distinct letters")
    if len(w) == 1:
        return y_element(i, w, d)
    terms = {(t,): 1 for t in admissible_trees(i, len(w) - 1, d) if w in _words(t)}
    return AlgebraElement(terms, PLANAR)


def strip_decorations(x: AlgebraElement) -> AlgebraElement:
    def strip(t: Tree) -> Tree:
        return Tree(t.weight, None, tuple(strip(c) for c in t.children))

    return x.map_forests(lambda f: tuple(strip(t) for t in f))


def d1_series(n: int):
    """``(1 + h)^2`` read to order ``n``."""
    return polynomial([1, 2, 1]).extend(max(n, 2))


def d1_reduction(n: int) -> bool:
    """With ``D = 1``, ``Y_k = Y^1_{1..1}`` (``k+1`` letters) is the weight-``k``
    component of the solution of ``X = B+((1 + X)^2)``, for every ``k <= n``."""
    if n < 2:
        raise ValueError("d1_reduction needs n >= 2")
    sol = solve(d1_series(n), n, PLANAR)
    return all(strip_decorations(y_element(1, (1,) * (k + 1), 1)) == sol.a(k)
               for k in range(1, n + 1))


def d1_family_parameters():
    """``(alpha, beta)`` with ``(1 + h)^2`` in the family, and whether the
    family series at those parameters is exactly ``(1 + h)^2``."""
    alpha, beta = family_parameters(polynomial([1, 2, 1]))
    fam = solve_family(alpha, beta, 6)
    exact = all(fam[k] == d1_series(6)[k] for k in range(7))
    return alpha, beta, exact


def all_words(d: int, max_len: int, min_len: int = 1) -> Iterable[Word]:
    for n in range(min_len, max_len + 1):
        yield from cartesian(range(1, d + 1), repeat=n)
