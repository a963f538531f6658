"""The free (commutative or associative) algebra on rooted trees, its coproduct,
counit, the Z functional and substitution of series into elements.

Coefficients are ints or Fractions.  Every coalgebra operation takes an
optional weight cap ``N``; the completed algebra is only ever seen through
such truncations.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Mapping

from ._backend import kernel
from .series import TruncatedSeries, binomial_series
from .trees import (COMMUTATIVE, PLANAR, Forest, Tree, canonicalize, canonicalize_forest,
                    check_mode, forest_weight, make_forest)

DOT = Tree(1, None, ())


class AlgebraElement:
    """Finite linear combination of forests."""

    __slots__ = ("terms", "mode")

    def __init__(self, terms: Mapping | None = None, mode: str = PLANAR):
        self.mode = check_mode(mode)
        self.terms = {f: c for f, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, mode: str = PLANAR) -> "AlgebraElement":
        return cls({(): 1}, mode)

    @classmethod
    def zero(cls, mode: str = PLANAR) -> "AlgebraElement":
        return cls({}, mode)

    @classmethod
    def from_forest(cls, forest: Iterable[Tree], mode: str = PLANAR, coeff=1) -> "AlgebraElement":
        return cls({make_forest(forest, mode): coeff}, mode)

    @classmethod
    def from_tree(cls, t: Tree, mode: str = PLANAR, coeff=1) -> "AlgebraElement":
        return cls({(canonicalize(t, mode),): coeff}, mode)

    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            if other.mode != self.mode:
                raise ValueError(f"mode mismatch: {self.mode} vs {other.mode}")
            return other
        return AlgebraElement({(): other}, self.mode)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for f, c in other.terms.items():
            out[f] = out.get(f, 0) + c
        return AlgebraElement(out, self.mode)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement({f: -c for f, c in self.terms.items()}, self.mode)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return product(self, other)
        return AlgebraElement({f: c * other for f, c in self.terms.items()}, self.mode)

    def __rmul__(self, other):
        if isinstance(other, AlgebraElement):
            return product(other, self)
        return AlgebraElement({f: other * c for f, c in self.terms.items()}, self.mode)

    def __truediv__(self, scalar):
        scalar = Fraction(scalar)
        return AlgebraElement({f: c / scalar for f, c in self.terms.items()}, self.mode)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.mode == other.mode and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.mode, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def coefficient(self, forest) -> Fraction:
        if isinstance(forest, Tree):
            forest = (canonicalize(forest, self.mode),)
        else:
            forest = canonicalize_forest(tuple(forest), self.mode)
        return Fraction(self.terms.get(forest, 0))

    def weights(self) -> set[int]:
        return {forest_weight(f) for f in self.terms}

    def graded_component(self, n: int) -> "AlgebraElement":
        return AlgebraElement({f: c for f, c in self.terms.items() if forest_weight(f) == n},
                              self.mode)

    def truncate(self, n: int | None) -> "AlgebraElement":
        if n is None:
            return self
        return AlgebraElement({f: c for f, c in self.terms.items() if forest_weight(f) <= n},
                              self.mode)

    def valuation(self) -> float | int:
        """Least weight carrying a nonzero term (``inf`` for zero)."""
        return min(self.weights(), default=float("inf"))

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def single_trees_only(self) -> bool:
        return all(len(f) == 1 for f in self.terms)

    def map_forests(self, fn: Callable[[Forest], Forest], mode: str | None = None) -> "AlgebraElement":
        out: dict = defaultdict(int)
        for f, c in self.terms.items():
            out[fn(f)] += c
        return AlgebraElement(out, mode or self.mode)

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: (forest_weight(kv[0]), kv[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for f, c in self.sorted_items():
            word = "".join(repr(t) for t in f) or "1"
            parts.append(f"{Fraction(c)}*{word}")
        return " + ".join(parts)


class TensorElement:
    """Finite linear combination of pairs of forests (an element of H (x) H)."""

    __slots__ = ("terms", "mode")

    def __init__(self, terms: Mapping | None = None, mode: str = PLANAR):
        self.mode = check_mode(mode)
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def __add__(self, other):
        if other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TensorElement(out, self.mode)

    __radd__ = __add__

    def __neg__(self):
        return TensorElement({k: -c for k, c in self.terms.items()}, self.mode)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            self._check(other)
            return TensorElement(kernel.convolve_pairs(self.terms, other.terms,
                                                       self.mode == COMMUTATIVE), self.mode)
        return TensorElement({k: c * other for k, c in self.terms.items()}, self.mode)

    def __rmul__(self, other):
        return TensorElement({k: other * c for k, c in self.terms.items()}, self.mode)

    def _check(self, other):
        if not isinstance(other, TensorElement) or other.mode != self.mode:
            raise ValueError("tensor operands must be TensorElements of the same mode")

    def __eq__(self, other):
        if isinstance(other, TensorElement):
            return self.mode == other.mode and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.mode, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def coefficient(self, left, right) -> Fraction:
        return Fraction(self.terms.get((_as_forest(left, self.mode), _as_forest(right, self.mode)), 0))

    def bidegree(self, p: int, q: int) -> "TensorElement":
        return TensorElement({(l, r): c for (l, r), c in self.terms.items()
                              if forest_weight(l) == p and forest_weight(r) == q}, self.mode)

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(forest_weight(l), forest_weight(r)) for l, r in self.terms}

    def truncate(self, n: int | None) -> "TensorElement":
        if n is None:
            return self
        return TensorElement({(l, r): c for (l, r), c in self.terms.items()
                              if forest_weight(l) + forest_weight(r) <= n}, self.mode)

    def sorted_items(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (forest_weight(kv[0][0]) + forest_weight(kv[0][1]), kv[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (l, r), c in self.sorted_items():
            lw = "".join(repr(t) for t in l) or "1"
            rw = "".join(repr(t) for t in r) or "1"
            parts.append(f"{Fraction(c)}*{lw}(x){rw}")
        return " + ".join(parts)


def _as_forest(x, mode):
    if isinstance(x, Tree):
        return (canonicalize(x, mode),)
    return canonicalize_forest(tuple(x), mode)


def tensor(a: AlgebraElement, b: AlgebraElement) -> TensorElement:
    if a.mode != b.mode:
        raise ValueError("mode mismatch")
    return TensorElement({(fa, fb): ca * cb for fa, ca in a.terms.items()
                          for fb, cb in b.terms.items()}, a.mode)


def _by_weight(terms: Mapping) -> dict[int, dict]:
    out: dict[int, dict] = defaultdict(dict)
    for f, c in terms.items():
        out[forest_weight(f)][f] = c
    return out


def product(a: AlgebraElement, b: AlgebraElement, n: int | None = None) -> AlgebraElement:
    """Concatenation product, dropping every term of weight above ``n``."""
    if a.mode != b.mode:
        raise ValueError(f"mode mismatch: {a.mode} vs {b.mode}")
    commutative = a.mode == COMMUTATIVE
    if n is None:
        return AlgebraElement(kernel.convolve(a.terms, b.terms, commutative), a.mode)
    out: dict = {}
    bw = _by_weight(b.terms)
    for wa, ga in _by_weight(a.terms).items():
        for wb, gb in bw.items():
            if wa + wb <= n:
                for f, c in kernel.convolve(ga, gb, commutative).items():
                    out[f] = out.get(f, 0) + c
    return AlgebraElement(out, a.mode)


def power(x: AlgebraElement, k: int, n: int | None = None) -> AlgebraElement:
    out = AlgebraElement.one(x.mode)
    for _ in range(k):
        out = product(out, x, n)
    return out


def b_plus_linear(x: AlgebraElement, deco=None) -> AlgebraElement:
    """Extend grafting on a root linearly; the result is a combination of trees."""
    out: dict = defaultdict(int)
    for f, c in x.terms.items():
        out[(Tree(forest_weight(f) + 1, deco, f),)] += c
    return AlgebraElement(out, x.mode)


def b_minus_linear(x: AlgebraElement) -> AlgebraElement:
    out: dict = defaultdict(int)
    for f, c in x.terms.items():
        if len(f) != 1:
            raise ValueError("b_minus is only defined on combinations of single trees")
        out[f[0].children] += c
    return AlgebraElement(out, x.mode)


@lru_cache(maxsize=None)
def _delta_tree(t: Tree, mode: str) -> dict:
    # 1-cocycle recursion: Delta B+(F) = B+(F) (x) 1 + (Id (x) B+) Delta(F)
    out = {((t,), ()): 1}
    for (left, right), c in _delta_forest(t.children, mode).items():
        key = (left, (Tree(forest_weight(right) + 1, t.deco, right),))
        out[key] = out.get(key, 0) + c
    return out


@lru_cache(maxsize=None)
def _delta_forest(forest: Forest, mode: str) -> dict:
    out = {((), ()): 1}
    commutative = mode == COMMUTATIVE
    for t in forest:
        out = kernel.convolve_pairs(out, _delta_tree(t, mode), commutative)
    return out


def coproduct(x: AlgebraElement, n: int | None = None) -> TensorElement:
    """Coproduct of ``x`` up to total weight ``n``."""
    out: dict = {}
    for f, c in x.truncate(n).terms.items():
        for k, v in _delta_forest(f, x.mode).items():
            out[k] = out.get(k, 0) + c * v
    return TensorElement(out, x.mode)


def coproduct_by_cuts(t: Tree, mode: str = PLANAR) -> TensorElement:
    """Coproduct of a single tree by explicit enumeration of admissible cuts.

    Exponential in the number of edges; kept as an independent check of
    :func:`coproduct`.
    """
    check_mode(mode)
    t = canonicalize(t, mode)
    nodes: list[Tree] = []
    parent: list[int] = []
    kids: list[list[int]] = []

    def walk(v: Tree, p: int):
        idx = len(nodes)
        nodes.append(v)
        parent.append(p)
        kids.append([])
        if p >= 0:
            kids[p].append(idx)
        for c in v.children:
            walk(c, idx)

    walk(t, -1)
    edges = list(range(1, len(nodes)))  # an edge is named by its lower vertex

    def ancestors(v):
        v = parent[v]
        while v >= 0:
            yield v
            v = parent[v]

    def rebuild(v, cut):
        ch = [rebuild(c, cut) for c in kids[v] if c not in cut]
        return make_forest_tree(nodes[v].deco, ch)

    def make_forest_tree(deco, ch):
        return Tree(1 + sum(c.weight for c in ch), deco, tuple(ch))

    out: dict = defaultdict(int)
    out[((t,), ())] += 1
    out[((), (t,))] += 1
    for r in range(1, len(edges) + 1):
        for cut in combinations(edges, r):
            cut_set = set(cut)
            if any(a in cut_set for v in cut for a in ancestors(v)):
                continue
            pruned = tuple(nodes[v] for v in sorted(cut))
            trunk = rebuild(0, cut_set)
            left = canonicalize_forest(pruned, mode)
            right = (canonicalize(trunk, mode),)
            out[(left, right)] += 1
    return TensorElement(out, mode)


def counit(x) -> Fraction:
    if isinstance(x, TensorElement):
        raise TypeError("counit acts on algebra elements")
    return Fraction(x.terms.get((), 0))


def z_functional(x: AlgebraElement) -> Fraction:
    """Coefficient of the single-vertex forest."""
    return Fraction(x.terms.get((DOT,), 0))


def abelianize(x: AlgebraElement) -> AlgebraElement:
    """Forget the planar structure (canonicalize every forest, merge terms)."""
    if x.mode != PLANAR:
        raise ValueError("abelianize expects a planar element")
    return x.map_forests(lambda f: canonicalize_forest(f, COMMUTATIVE), COMMUTATIVE)


def abelianize_tensor(x: TensorElement) -> TensorElement:
    out: dict = defaultdict(int)
    for (l, r), c in x.terms.items():
        out[(canonicalize_forest(l, COMMUTATIVE), canonicalize_forest(r, COMMUTATIVE))] += c
    return TensorElement(out, COMMUTATIVE)


def substitute_series(p: TruncatedSeries, x: AlgebraElement, n: int) -> AlgebraElement:
    """``sum_k p_k x^k`` up to weight ``n``.

    Needs ``val(x) >= 1`` unless ``p`` is a polynomial.  When ``p`` is only
    known to order ``M < n`` the result is cut at weight ``M``.
    """
    val = x.valuation()
    if val == 0 and not p.polynomial:
        raise ValueError("cannot substitute into an element of valuation 0 "
                         "unless the series is a polynomial")
    if val == 0:
        top = p.order
    else:
        top = p.available(n)
        n = top if not p.polynomial else n
    out = AlgebraElement.zero(x.mode)
    pw = AlgebraElement.one(x.mode)
    for k in range(top + 1):
        if p[k]:
            out = out + pw * p[k]
        if k < top:
            pw = product(pw, x, n)
            if not pw:
                break
    return out.truncate(n)


def algebra_power(y: AlgebraElement, gamma, n: int) -> AlgebraElement:
    """``y^gamma`` for ``y`` with constant term 1, through the binomial series."""
    if counit(y) != 1:
        raise ValueError("rational powers need an element with constant term 1")
    return substitute_series(binomial_series(gamma, n), y - 1, n)


def tensor_power(y: TensorElement, gamma, n: int) -> TensorElement:
    """``y^gamma`` in H (x) H for ``y`` with ``1 (x) 1`` coefficient 1."""
    one = TensorElement({((), ()): 1}, y.mode)
    if y.terms.get(((), ()), 0) != 1:
        raise ValueError("rational powers need an element with constant term 1")
    u = (y - one).truncate(n)
    out = one
    pw = one
    coeffs = binomial_series(gamma, n)
    for k in range(1, n + 1):
        pw = (pw * u).truncate(n)
        if not pw:
            break
        out = out + pw * coeffs[k]
    return out


def apply_left(x: TensorElement, fn: Callable[[AlgebraElement], Fraction]) -> AlgebraElement:
    """``(f (x) Id)(x)`` for a linear functional ``f`` given on single forests."""
    out: dict = defaultdict(int)
    for (l, r), c in x.terms.items():
        v = fn(AlgebraElement({l: 1}, x.mode))
        if v:
            out[r] += c * v
    return AlgebraElement(out, x.mode)


def left_factor(x: TensorElement, right) -> AlgebraElement:
    """The element ``a`` with ``x = ... + a (x) right + ...``."""
    right = _as_forest(right, x.mode)
    return AlgebraElement({l: c for (l, r), c in x.terms.items() if r == right}, x.mode)
