"""Truncated one-variable formal power series over Q."""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .trees import beta_int_factorial


class TruncatedSeries:
    """Coefficients ``p_0 .. p_N``.

    ``polynomial=True`` means every coefficient past ``N`` is zero, so the
    series can be read at any order.  Otherwise coefficients past ``N`` are
    unknown and mixed-order arithmetic truncates to the smaller order.
    """

    __slots__ = ("coeffs", "polynomial")

    def __init__(self, coeffs: Iterable, polynomial: bool = False):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a series needs at least its constant term")
        self.coeffs = coeffs
        self.polynomial = polynomial

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError(k)
        if k < len(self.coeffs):
            return self.coeffs[k]
        if self.polynomial:
            return Fraction(0)
        raise IndexError(f"coefficient {k} is beyond the truncation order {self.order}")

    def available(self, n: int) -> int:
        """Largest order ``<= n`` at which this series is known."""
        return n if self.polynomial else min(n, self.order)

    def extend(self, n: int) -> "TruncatedSeries":
        """Same series read to order ``n`` (polynomials are zero-padded)."""
        if n <= self.order:
            return TruncatedSeries(self.coeffs[: n + 1], self.polynomial)
        if not self.polynomial:
            raise ValueError(f"series only known to order {self.order}, asked for {n}")
        return TruncatedSeries(self.coeffs + (Fraction(0),) * (n - self.order), True)

    truncate = extend

    def _order_with(self, other: "TruncatedSeries") -> int:
        if self.polynomial and other.polynomial:
            return max(self.order, other.order)
        if self.polynomial:
            return other.order
        if other.polynomial:
            return self.order
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries([other], polynomial=True)
        n = self._order_with(other)
        return TruncatedSeries([self[k] + other[k] for k in range(n + 1)],
                               self.polynomial and other.polynomial)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.polynomial)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries([c * x for x in self.coeffs], self.polynomial)
        n = self._order_with(other)
        poly = self.polynomial and other.polynomial
        if poly:
            n = self.order + other.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j, b in enumerate(other.coeffs[: n + 1 - i]):
                    out[i + j] += a * b
        return TruncatedSeries(out, poly)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = max(self.order, other.order)
        try:
            return all(self[k] == other[k] for k in range(n + 1))
        except IndexError:
            return False

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            return TruncatedSeries([0], self.polynomial)
        return TruncatedSeries([k * self.coeffs[k] for k in range(1, len(self.coeffs))],
                               self.polynomial)

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        tail = "" if self.polynomial else f" + O(h^{self.order + 1})"
        return f"TruncatedSeries([{body}]{tail})"


def polynomial(coeffs: Sequence) -> TruncatedSeries:
    return TruncatedSeries(coeffs, polynomial=True)


def variable() -> TruncatedSeries:
    return polynomial([0, 1])


def q_poly(k: int, lam) -> Fraction:
    """Rising factorial ``lam (lam+1) ... (lam+k-1) / k!``; coefficient of h^k in (1-h)^(-lam)."""
    lam = Fraction(lam)
    out = Fraction(1)
    for j in range(k):
        out *= lam + j
    return out / factorial(k)


def binomial_coefficient(gamma, k: int) -> Fraction:
    """``gamma (gamma-1) ... (gamma-k+1) / k!``; coefficient of h^k in (1+h)^gamma."""
    gamma = Fraction(gamma)
    out = Fraction(1)
    for j in range(k):
        out *= gamma - j
    return out / factorial(k)


def geometric_power(lam, n: int) -> TruncatedSeries:
    """``(1 - h)^(-lam)`` to order ``n``."""
    return TruncatedSeries([q_poly(k, lam) for k in range(n + 1)])


def binomial_series(gamma, n: int) -> TruncatedSeries:
    """``(1 + h)^gamma`` to order ``n``."""
    return TruncatedSeries([binomial_coefficient(gamma, k) for k in range(n + 1)])


def exp_series(n: int, scale=1) -> TruncatedSeries:
    scale = Fraction(scale)
    return TruncatedSeries([scale ** k / factorial(k) for k in range(n + 1)])


def solve_family(alpha, beta, n: int) -> TruncatedSeries:
    """The series ``P`` with ``P(0) = 1`` and ``(1 - alpha beta h) P' = alpha P``,
    built by its first-order coefficient recursion."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    p = [Fraction(1)]
    for k in range(n):
        p.append(alpha * (1 + k * beta) / (k + 1) * p[k])
    return TruncatedSeries(p)


def family_closed_form(alpha, beta, n: int) -> TruncatedSeries:
    """``p_k = alpha^k [k]_beta! / k!``."""
    alpha = Fraction(alpha)
    return TruncatedSeries([alpha ** k * beta_int_factorial(k, beta) / factorial(k)
                            for k in range(n + 1)])


def family_parameters(p: TruncatedSeries):
    """Candidate ``(alpha, beta) = (p_1, 2 p_2 / p_1^2 - 1)``, or None when ``p_1 = 0``."""
    if p.order < 2 and not p.polynomial:
        return None
    p1, p2 = p[1], p[2]
    if p1 == 0:
        return None
    return p1, 2 * p2 / (p1 * p1) - 1


def compose(p: TruncatedSeries, q: TruncatedSeries, n: int | None = None) -> TruncatedSeries:
    """``p(q(h))`` to order ``n``; needs ``q(0) = 0`` unless ``p`` is a polynomial."""
    if q.coeffs[0] != 0 and not p.polynomial:
        raise ValueError("composition p(q) needs q(0) = 0 when p is not a polynomial")
    exact = p.polynomial and q.polynomial
    if exact:
        known = p.order * q.order
    elif q.coeffs[0] == 0:
        known = min(s.order for s in (p, q) if not s.polynomial)
    else:
        known = q.order
    if n is None:
        n = known
    elif n > known and not exact:
        raise ValueError(f"composition only determined to order {known}, asked for {n}")
    qc = [q[k] if k <= q.order else Fraction(0) for k in range(n + 1)]
    top = p.order if p.polynomial else min(p.order, n)
    out = [Fraction(0)] * (n + 1)
    power = [Fraction(1)] + [Fraction(0)] * n
    for k in range(top + 1):
        c = p[k]
        if c:
            for j in range(n + 1):
                out[j] += c * power[j]
        if k < top:
            nxt = [Fraction(0)] * (n + 1)
            for i, a in enumerate(power):
                if a:
                    for j in range(n + 1 - i):
                        if qc[j]:
                            nxt[i + j] += a * qc[j]
            power = nxt
    return TruncatedSeries(out, polynomial=exact and n >= known)


def binomial_power(s: TruncatedSeries, gamma, n: int | None = None) -> TruncatedSeries:
    """``s^gamma`` for a series with constant term 1, via ``(1 - u)^gamma``
    expanded with the rising-factorial coefficients ``Q_k(-gamma)``."""
    if s[0] != 1:
        raise ValueError("binomial_power needs a series with constant term 1")
    n = s.available(n if n is not None else s.order)
    u = (1 - s).extend(n) if s.polynomial else (1 - s).truncate(n)
    outer = TruncatedSeries([q_poly(k, -Fraction(gamma)) for k in range(n + 1)])
    return compose(outer, TruncatedSeries(u.coeffs), n)


def parse_series(text: str) -> "SeriesSpec":
    """Parse ``"1,1,1/2"`` (a polynomial) or ``"family:alpha=1,beta=1/2"``."""
    from .rational import parse_rational

    text = text.strip()
    if text.startswith("family:"):
        params = {}
        for part in text[len("family:"):].split(","):
            key, sep, val = part.partition("=")
            key = key.strip().lower()
            key = {"α": "alpha", "β": "beta", "a": "alpha", "b": "beta"}.get(key, key)
            if not sep or key not in ("alpha", "beta"):
                raise ValueError(f"series: bad family parameter {part!r}")
            params[key] = parse_rational(val, f"series {key}")
        if set(params) != {"alpha", "beta"}:
            raise ValueError("series: family needs both alpha and beta")
        return SeriesSpec(family=(params["alpha"], params["beta"]))
    if not text:
        raise ValueError("series: empty")
    coeffs = [parse_rational(c, "series coefficient") for c in text.split(",")]
    return SeriesSpec(coeffs=coeffs)


class SeriesSpec:
    """A series that can be read at any order: a polynomial or a family member."""

    def __init__(self, coeffs=None, family=None):
        self.coeffs = coeffs
        self.family = family

    def at(self, n: int) -> TruncatedSeries:
        if self.family is not None:
            return solve_family(*self.family, n)
        return polynomial(self.coeffs).extend(max(n, len(self.coeffs) - 1))

    def __repr__(self):
        if self.family is not None:
            return f"family:alpha={self.family[0]},beta={self.family[1]}"
        return ",".join(str(c) for c in self.coeffs)
