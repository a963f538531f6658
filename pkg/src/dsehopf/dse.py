"""Combinatorial Dyson-Schwinger equation ``X = B+(P(X))`` and the generator
families built from its solution."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import (DOT, AlgebraElement, algebra_power, b_minus_linear, b_plus_linear,
                      product, substitute_series)
from .series import TruncatedSeries, exp_series, solve_family
from .trees import PLANAR, Tree, beta_factorial, check_mode, tree_factorial


@dataclass(frozen=True)
class DseSolution:
    series: TruncatedSeries
    mode: str
    order: int
    components: tuple  # a_1 .. a_N, a_n homogeneous of weight n

    def a(self, n: int) -> AlgebraElement:
        if 1 <= n <= self.order:
            return self.components[n - 1]
        if n < 1:
            raise ValueError("components start at weight 1")
        raise ValueError(f"solution only computed to weight {self.order}")

    def total(self, n: int | None = None) -> AlgebraElement:
        n = self.order if n is None else min(n, self.order)
        out = AlgebraElement.zero(self.mode)
        for k in range(1, n + 1):
            out = out + self.components[k - 1]
        return out


def _coefficients(p: TruncatedSeries, n: int) -> tuple:
    if p[0] != 1:
        raise ValueError("the series must have constant term 1")
    try:
        return tuple(p[k] for k in range(n))
    except IndexError:
        raise ValueError(f"series known to order {p.order}; weight {n} needs order {n - 1}") from None


def solve(p: TruncatedSeries, n: int, mode: str = PLANAR) -> DseSolution:
    """Unique solution of ``X = B+(P(X))`` up to weight ``n``."""
    check_mode(mode)
    if n < 1:
        raise ValueError("weight cap must be >= 1")
    coeffs = _coefficients(p, n)
    comps = _solve(coeffs, n, mode)
    return DseSolution(p, mode, n, comps)


@lru_cache(maxsize=256)
def _solve(coeffs: tuple, n: int, mode: str) -> tuple:
    a = {1: AlgebraElement({(DOT,): 1}, mode)}
    # powers[k][m]: weight-m component of X^k
    powers: dict[int, dict[int, AlgebraElement]] = {1: {1: a[1]}}
    for m in range(1, n):
        powers[1][m] = a[m]
        for k in range(2, m + 1):
            acc = AlgebraElement.zero(mode)
            for first in range(1, m - k + 2):
                rest = powers[k - 1].get(m - first)
                if rest:
                    acc = acc + product(a[first], rest)
            powers.setdefault(k, {})[m] = acc
        inner = AlgebraElement.zero(mode)
        for k in range(1, m + 1):
            if coeffs[k] and powers[k].get(m):
                inner = inner + powers[k][m] * coeffs[k]
        a[m + 1] = b_plus_linear(inner)
    return tuple(a[k] for k in range(1, n + 1))


def closed_coeff(t: Tree, alpha, beta) -> Fraction:
    """Coefficient of the planar tree ``t`` in the family solution:
    ``alpha^(|t|-1) [t]_beta! / t!``."""
    return Fraction(alpha) ** (t.weight - 1) * beta_factorial(t, beta) / tree_factorial(t)


def family_solution(alpha, beta, n: int, mode: str = PLANAR) -> DseSolution:
    return solve(solve_family(alpha, beta, n), n, mode)


def lp_apply(p: TruncatedSeries, x: DseSolution, a: AlgebraElement, n: int) -> AlgebraElement:
    """``L_P(a) = B+(P'(X) a)`` up to weight ``n``."""
    if a.mode != x.mode:
        raise ValueError("mode mismatch")
    if not a:
        return AlgebraElement.zero(a.mode)
    dp = substitute_series(p.derivative(), x.total(n - 1), n - 1)
    return b_plus_linear(product(dp, a, n - 1))


def lp_inverse_one(p: TruncatedSeries, n: int, mode: str = PLANAR) -> list[AlgebraElement]:
    """Graded pieces ``b_0 .. b_n`` of ``Y = (Id - L_P)^(-1)(1)``.

    Built by the recursion that splits ``P'(X) Y`` into its ``b_0 = 1`` part
    and the part carrying one ``b_m`` with ``m >= 1``; in planar mode that
    factor sits last, matching ``B+(P'(X) a)``.
    """
    if n == 0:
        return [AlgebraElement.one(mode)]
    sol = solve(p, n, mode)
    coeffs = _coefficients(p, n + 1)
    a = {k: sol.a(k) for k in range(1, n + 1)}
    powers = _power_components(a, n, mode)
    b = [AlgebraElement.one(mode)]
    for m in range(n):
        inner = AlgebraElement.zero(mode)
        # (j+1) p_{j+1} (X^j)_m, with (X^0)_0 = 1
        for j in range(0, m + 1):
            xj = powers.get(j, {}).get(m)
            if xj and j + 1 < len(coeffs) and coeffs[j + 1]:
                inner = inner + xj * ((j + 1) * coeffs[j + 1])
        # k p_k (X^(k-1))_(m - r) b_r
        for k in range(1, m + 1):
            if not coeffs[k]:
                continue
            for r in range(1, m + 1):
                xk = powers.get(k - 1, {}).get(m - r)
                if xk and b[r]:
                    inner = inner + product(xk, b[r]) * (k * coeffs[k])
        b.append(b_plus_linear(inner))
    return b


def _power_components(a: dict, n: int, mode: str) -> dict:
    powers = {0: {0: AlgebraElement.one(mode)}}
    for k in range(1, n + 1):
        powers[k] = {}
        for m in range(k, n + 1):
            acc = AlgebraElement.zero(mode)
            for first in range(1, m - k + 2):
                rest = powers[k - 1].get(m - first)
                if rest and first in a:
                    acc = acc + product(a[first], rest)
            powers[k][m] = acc
    return powers


def b_generators(alpha, beta, n: int, mode: str = PLANAR) -> list[AlgebraElement]:
    """``b_0 .. b_n`` with ``b_k = B-(a_{k+1}(alpha, beta))``."""
    sol = family_solution(alpha, beta, n + 1, mode)
    return [b_minus_linear(sol.a(k + 1)) for k in range(n + 1)]


def y_closed_form(alpha, beta, n: int, mode: str = PLANAR) -> AlgebraElement:
    """``(1 - beta X)^(-1/beta)`` up to weight ``n``; ``exp(X)`` when ``beta = 0``."""
    beta = Fraction(beta)
    x = family_solution(alpha, beta, max(n, 1), mode).total()
    if beta == 0:
        return substitute_series(exp_series(n), x, n)
    return algebra_power(1 - x * beta, -1 / beta, n)


def c_generators(beta, beta_prime, n: int, mode: str = PLANAR) -> list[AlgebraElement]:
    """Graded pieces ``c_0 .. c_n`` of ``Y(1, beta)^gamma``, ``gamma = (beta+1)/(beta'+1)``."""
    beta, beta_prime = Fraction(beta), Fraction(beta_prime)
    if beta_prime == -1:
        raise ValueError("beta' = -1 leaves gamma undefined")
    if beta == -1:
        raise ValueError("beta = -1 gives gamma = 0")
    gamma = (beta + 1) / (beta_prime + 1)
    y = AlgebraElement.zero(mode)
    for b in b_generators(1, beta, n, mode):
        y = y + b
    z = algebra_power(y, gamma, n)
    return [z.graded_component(k) for k in range(n + 1)]


def im_b_plus_squared(x: AlgebraElement) -> AlgebraElement:
    """Projection on trees whose root has exactly one child."""
    return AlgebraElement({f: c for f, c in x.terms.items()
                           if len(f) == 1 and len(f[0].children) == 1}, x.mode)
