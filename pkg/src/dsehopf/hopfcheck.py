"""Exact verification layer: graded spans of generator families, Hopf
subalgebra membership, closed-form coproduct identities and Lie brackets.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .algebra import (AlgebraElement, TensorElement, algebra_power, coproduct, product,
                      tensor)
from .dse import b_generators, c_generators, family_solution, solve
from .linalg import CoordinateSystem, Echelon, NotInSpan
from .series import TruncatedSeries, family_parameters, solve_family
from .trees import COMMUTATIVE, PLANAR, forest_weight, from_nested


@dataclass
class GradedSpan:
    """Per weight ``n <= order``, the echelonized span of all monomials of
    total weight ``n`` in the generators."""

    mode: str
    order: int
    generators: list
    degrees: dict = field(default_factory=dict)    # n -> Echelon
    monomials: dict = field(default_factory=dict)  # n -> [(index tuple, element)]

    def dimension(self, n: int) -> int:
        return self.degrees[n].rank if n in self.degrees else 0

    def reduce(self, x: AlgebraElement) -> AlgebraElement:
        out: dict = {}
        by_weight: dict = defaultdict(dict)
        for f, c in x.terms.items():
            by_weight[forest_weight(f)][f] = c
        for n, vec in by_weight.items():
            if n in self.degrees:
                out.update(self.degrees[n].reduce(vec))
            else:
                out.update(vec)
        return AlgebraElement(out, self.mode)

    def contains(self, x: AlgebraElement) -> bool:
        return not self.reduce(x)

    def same_as(self, other: "GradedSpan", upto: int | None = None) -> bool:
        upto = min(self.order, other.order) if upto is None else upto
        return all(self.degrees[n] == other.degrees[n] for n in range(upto + 1))


@dataclass
class HopfVerdict:
    passed: bool
    order: int
    mode: str
    failing_weight: int | None = None
    residual: TensorElement | None = None
    candidate: tuple | None = None
    matches_family: bool | None = None


def graded_span(generators: Sequence[AlgebraElement], n: int) -> GradedSpan:
    """Echelonized monomial span of homogeneous ``generators`` up to weight ``n``."""
    gens = []
    mode = None
    for g in generators:
        if not g:
            continue
        if not g.is_homogeneous():
            raise ValueError("generators must be homogeneous")
        w = next(iter(g.weights()))
        if w < 1:
            raise ValueError("generators must have positive weight")
        if mode is None:
            mode = g.mode
        elif g.mode != mode:
            raise ValueError("generators of mixed modes")
        gens.append((w, g))
    mode = mode or PLANAR
    span = GradedSpan(mode, n, [g for _, g in gens])
    one = AlgebraElement.one(mode)
    mons: dict[int, list] = {0: [((), one)]}
    for m in range(1, n + 1):
        out = []
        for idx, (w, g) in enumerate(gens):
            if w > m:
                continue
            for rest_idx, rest in mons[m - w]:
                # commutative monomials: keep factor indices non-decreasing
                if mode == COMMUTATIVE and rest_idx and idx > rest_idx[0]:
                    continue
                out.append(((idx,) + rest_idx, product(g, rest)))
        mons[m] = out
    for m in range(n + 1):
        support = sorted({f for _, e in mons[m] for f in e.terms})
        ech = Echelon(support)
        for _, e in mons[m]:
            ech.add(e.terms)
        span.degrees[m] = ech
        span.monomials[m] = mons[m]
    return span


def tensor_residual(x: TensorElement, left: GradedSpan, right: GradedSpan | None = None) -> TensorElement:
    """Component of ``x`` outside ``left (x) right``.

    Uses ``U (x) V = (U (x) B) cap (A (x) V)``: reduce every left slice
    modulo ``U``, then reduce the right slices of what is left modulo ``V``.
    The remainder is zero iff ``x`` lies in ``U (x) V``.
    """
    right = left if right is None else right
    by_right: dict = defaultdict(dict)
    for (l, r), c in x.terms.items():
        by_right[r][l] = c
    residual: dict = {}
    kept: dict = defaultdict(dict)
    for r, vec in by_right.items():
        rem = left.reduce(AlgebraElement(vec, x.mode)).terms
        for l, c in vec.items():
            d = c - rem.get(l, 0)
            if d:
                kept[l][r] = d
        for l, c in rem.items():
            residual[(l, r)] = residual.get((l, r), 0) + c
    for l, vec in kept.items():
        rem = right.reduce(AlgebraElement(vec, x.mode)).terms
        for r, c in rem.items():
            residual[(l, r)] = residual.get((l, r), 0) + c
    return TensorElement(residual, x.mode)


def tensor_membership(x: TensorElement, span: GradedSpan) -> tuple[bool, TensorElement]:
    residual = tensor_residual(x, span)
    return (not residual), residual


def is_hopf(p: TruncatedSeries, n: int, mode: str = PLANAR) -> HopfVerdict:
    """Check ``Delta(a_k) in A (x) A`` for every ``k <= n``."""
    sol = solve(p, n, mode)
    span = graded_span(sol.components, n)
    verdict = HopfVerdict(True, n, mode)
    for k in range(1, n + 1):
        ok, residual = tensor_membership(coproduct(sol.a(k)), span)
        if not ok:
            verdict.passed = False
            verdict.failing_weight = k
            verdict.residual = residual
            break
    top = p.available(n - 1)
    params = family_parameters(p) if top >= 2 else None
    if params is not None:
        verdict.candidate = params
        fam = solve_family(*params, top)
        verdict.matches_family = all(p[k] == fam[k] for k in range(top + 1))
    elif top >= 1 and p[1] == 0:
        verdict.candidate = (Fraction(0), None)
        verdict.matches_family = all(p[k] == 0 for k in range(1, top + 1))
    return verdict


@lru_cache(maxsize=128)
def _family_span(alpha, beta, n: int, mode: str) -> GradedSpan:
    return graded_span(family_solution(alpha, beta, n, mode).components, n)


def spans_equal(alpha, beta, alpha2, beta2, n: int, mode: str = PLANAR) -> bool:
    a = _family_span(Fraction(alpha), Fraction(beta), n, mode)
    b = _family_span(Fraction(alpha2), Fraction(beta2), n, mode)
    return a.same_as(b)


def equality_predicate(alpha, beta, alpha2, beta2) -> bool:
    """Closed-form criterion for two family subalgebras to coincide."""
    return (beta == beta2 and alpha * alpha2 != 0) or (alpha == 0 and alpha2 == 0)


def _sum(parts, mode) -> AlgebraElement:
    out = AlgebraElement.zero(mode)
    for x in parts:
        out = out + x
    return out


def _power_tensor(base: AlgebraElement, exponent, right: AlgebraElement, n: int) -> TensorElement:
    room = n - min(right.weights(), default=0)
    if room < 0:
        return TensorElement({}, base.mode)
    return tensor(algebra_power(base, exponent, room), right).truncate(n)


def coproduct_closed_form_sides(beta, n: int, mode: str = PLANAR):
    """Both sides of ``Delta X = X (x) 1 + sum_k (1 - beta X)^(1 - k(1/beta + 1)) (x) a_k``."""
    beta = Fraction(beta)
    if beta == 0:
        raise ValueError("the exponent 1 - k(1/beta + 1) is singular at beta = 0")
    sol = family_solution(1, beta, n, mode)
    x = sol.total()
    lhs = coproduct(x, n)
    rhs = tensor(x, AlgebraElement.one(mode))
    base = 1 - x * beta
    for k in range(1, n + 1):
        rhs = rhs + _power_tensor(base, 1 - k * (1 / beta + 1), sol.a(k), n)
    return lhs, rhs


def verify_coproduct_closed_form(beta, n: int, mode: str = PLANAR) -> bool:
    lhs, rhs = coproduct_closed_form_sides(beta, n, mode)
    return lhs == rhs


def b_coproduct_sides(beta, n: int, mode: str = PLANAR):
    """Both sides of ``Delta Y = sum_k Y^(k(beta+1)+1) (x) b_k``."""
    beta = Fraction(beta)
    bs = b_generators(1, beta, n, mode)
    y = _sum(bs, mode)
    lhs = coproduct(y, n)
    rhs = TensorElement({}, mode)
    for k, b in enumerate(bs):
        rhs = rhs + _power_tensor(y, k * (beta + 1) + 1, b, n)
    return lhs, rhs


def verify_b_coproduct(beta, n: int, mode: str = PLANAR) -> bool:
    lhs, rhs = b_coproduct_sides(beta, n, mode)
    return lhs == rhs


def c_coproduct_sides(beta, beta_prime, n: int, mode: str = PLANAR):
    """Both sides of ``Delta Z = sum_l Z^(l(beta'+1)+1) (x) c_l``."""
    beta_prime = Fraction(beta_prime)
    cs = c_generators(beta, beta_prime, n, mode)
    z = _sum(cs, mode)
    lhs = coproduct(z, n)
    rhs = TensorElement({}, mode)
    for k, c in enumerate(cs):
        if c:
            rhs = rhs + _power_tensor(z, k * (beta_prime + 1) + 1, c, n)
    return lhs, rhs


def verify_c_coproduct(beta, beta_prime, n: int, mode: str = PLANAR) -> bool:
    lhs, rhs = c_coproduct_sides(beta, beta_prime, n, mode)
    return lhs == rhs


def _tensor_coordinates(x: TensorElement, left: CoordinateSystem, right: CoordinateSystem) -> dict:
    """Coefficients ``C[u, v]`` with ``x = sum C[u, v] m_u (x) m_v``."""
    by_right: dict = defaultdict(dict)
    for (l, r), c in x.terms.items():
        by_right[r][l] = c
    half: dict = defaultdict(dict)
    for r, vec in by_right.items():
        for u, c in enumerate(left.solve(vec)):
            if c:
                half[u][r] = c
    out = {}
    for u, vec in half.items():
        for v, c in enumerate(right.solve(vec)):
            if c:
                out[(u, v)] = c
    return out


def pairing_constants(beta, n: int, mode: str = COMMUTATIVE) -> dict:
    """``(T_i (x) T_j)(Delta X)`` for ``i + j <= n``, where ``T_m`` reads the
    coefficient of the one-letter monomial ``a_m`` in the generator basis."""
    sol = family_solution(1, beta, n, mode)
    span = graded_span(sol.components, n)
    systems = {}
    letter = {}
    for m in range(1, n + 1):
        mons = span.monomials[m]
        cs = CoordinateSystem([e.terms for _, e in mons], span.degrees[m].columns)
        if not cs.independent:
            raise RuntimeError(f"monomials of weight {m} are not independent")
        systems[m] = cs
        letter[m] = next(u for u, (idx, _) in enumerate(mons) if idx == (m - 1,))
    out = {}
    for i in range(1, n):
        for j in range(1, n - i + 1):
            part = coproduct(sol.a(i + j)).bidegree(i, j)
            try:
                coords = _tensor_coordinates(part, systems[i], systems[j])
            except NotInSpan as exc:
                raise RuntimeError(f"Delta(a_{i + j}) has a ({i},{j}) part outside A (x) A") from exc
            out[(i, j)] = coords.get((letter[i], letter[j]), Fraction(0))
    return out


def bracket_constants(beta, n: int, mode: str = COMMUTATIVE) -> dict:
    """``lambda_ij = (T_i (x) T_j - T_j (x) T_i)(Delta X)`` for ``i + j <= n``."""
    pair = pairing_constants(beta, n, mode)
    return {(i, j): pair[(i, j)] - pair[(j, i)] for (i, j) in pair}


class FdbModel:
    """Polynomial ring ``K[Y_1, Y_2, ...]`` truncated at degree ``order`` with
    the coproduct ``Delta(1 + sum Y_n) = sum_n (1 + sum Y_k)^(n+1) (x) Y_n``.

    Polynomials are ``{sorted index tuple: coeff}``; ``Y_0 = 1`` is ``()``.
    """

    def __init__(self, order: int):
        self.order = order
        self._powers = {1: {m: {(m,): Fraction(1)} if m else {(): Fraction(1)}
                            for m in range(order + 1)}}

    @staticmethod
    def degree(mono) -> int:
        return sum(mono)

    @staticmethod
    def mul(a: dict, b: dict) -> dict:
        out: dict = defaultdict(Fraction)
        for ma, ca in a.items():
            for mb, cb in b.items():
                out[tuple(sorted(ma + mb))] += ca * cb
        return {k: v for k, v in out.items() if v}

    def power_component(self, k: int, m: int) -> dict:
        """Degree-``m`` part of ``(1 + sum Y_n)^k``."""
        if k == 0:
            return {(): Fraction(1)} if m == 0 else {}
        if k not in self._powers:
            prev = k - 1
            comp = {}
            for mm in range(self.order + 1):
                acc: dict = defaultdict(Fraction)
                for d in range(mm + 1):
                    for mono, c in self.mul(self.power_component(prev, mm - d),
                                            self._powers[1][d]).items():
                        acc[mono] += c
                comp[mm] = {k_: v for k_, v in acc.items() if v}
            self._powers[k] = comp
        return self._powers[k].get(m, {})

    def coproduct(self, m: int) -> dict:
        """``Delta(Y_m)`` as ``{(left mono, right mono): coeff}``."""
        out: dict = defaultdict(Fraction)
        for n in range(0, m + 1):
            right = (n,) if n else ()
            for mono, c in self.power_component(n + 1, m - n).items():
                out[(mono, right)] += c
        return {k: v for k, v in out.items() if v}

    def evaluate(self, poly: dict, coeffs: Sequence) -> Fraction:
        """Evaluate at ``Y_k = coeffs[k]`` (``coeffs[0]`` is ignored)."""
        total = Fraction(0)
        for mono, c in poly.items():
            term = Fraction(c)
            for k in mono:
                term *= coeffs[k]
            total += term
        return total


def fdb_bracket(i: int, j: int, order: int | None = None) -> Fraction:
    """``[Z_i, Z_j](Y) = (Z_i (x) Z_j - Z_j (x) Z_i)(Delta Y)`` in the model."""
    if i < 1 or j < 1:
        raise ValueError("indices start at 1")
    order = i + j if order is None else order
    if i + j > order:
        raise ValueError("i + j exceeds the model truncation")
    delta = FdbModel(order).coproduct(i + j)
    return delta.get(((i,), (j,)), Fraction(0)) - delta.get(((j,), (i,)), Fraction(0))


def connes_moscovici_coefficients() -> dict:
    a4 = family_solution(1, 1, 4, COMMUTATIVE).a(4)
    return {
        "corner": a4.coefficient(from_nested([[[]], []], COMMUTATIVE)),
        "corolla": a4.coefficient(from_nested([[], [], []], COMMUTATIVE)),
    }


def connes_moscovici_distinct() -> bool:
    """The weight-4 generator of the (1,1) family gives the tree B+(ladder2 .)
    coefficient 2, where the Connes-Moscovici generator has 3."""
    c = connes_moscovici_coefficients()["corner"]
    return c == 2 and c != 3


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = defaultdict(Fraction)
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return {k: v for k, v in out.items() if v}


def _poly_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def _rising(linear: dict, k: int, nvars: int) -> dict:
    """``L (L+1) ... (L+k-1) / k!`` for a linear polynomial ``L``."""
    zero = (0,) * nvars
    out = {zero: Fraction(1)}
    for j in range(k):
        out = _poly_mul(out, _poly_add(linear, {zero: Fraction(j)}))
    return {m: c / factorial(k) for m, c in out.items()}


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def verify_poly_lemma(n: int, k: int) -> bool:
    """Sum over ``a_1 + ... + a_n = k`` of prod ``Q_{a_i}(X_i)`` equals ``Q_k(X_1 + ... + X_n)``,
    both sides expanded as exact polynomials."""
    if n < 1 or k < 1:
        raise ValueError("n, k >= 1")
    var = [{tuple(int(i == j) for i in range(n)): Fraction(1)} for j in range(n)]
    lhs: dict = {}
    for comp in _compositions(k, n):
        term = {(0,) * n: Fraction(1)}
        for j, a in enumerate(comp):
            term = _poly_mul(term, _rising(var[j], a, n))
        lhs = _poly_add(lhs, term)
    s: dict = {}
    for v in var:
        s = _poly_add(s, v)
    return lhs == _rising(s, k, n)
