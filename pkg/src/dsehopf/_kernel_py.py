"""Pure-Python hot kernels.  ``_kernel.pyx`` is a line-for-line typed twin.

Vectors are dense lists of Python ints.  An echelon basis is a pair of
parallel lists ``rows``/``pivots``: each row is primitive, has a positive
entry at its pivot and zeros at every other row's pivot (integer RREF).
"""
from math import gcd


def reduce_vector(vec, rows, pivots):
    """Reduce ``vec`` against the basis; return ``(num, den)`` with the
    remainder equal to ``num / den`` and ``gcd(num..., den) == 1``."""
    v = list(vec)
    den = 1
    n = len(v)
    for k in range(len(rows)):
        p = pivots[k]
        c = v[p]
        if c:
            row = rows[k]
            a = row[p]
            g = gcd(a, c)
            a //= g
            c //= g
            for j in range(n):
                v[j] = a * v[j] - c * row[j]
            den *= a
    g = gcd(den, *v)
    if g != 1:
        den //= g
        v = [x // g for x in v]
    return v, den


def insert_row(rows, pivots, vec):
    """Add ``vec`` to the basis in place.  Return its pivot column, or -1 if
    ``vec`` already lies in the span."""
    v, _ = reduce_vector(vec, rows, pivots)
    n = len(v)
    p = -1
    for j in range(n):
        if v[j]:
            p = j
            break
    if p < 0:
        return -1
    g = gcd(*v)
    if v[p] < 0:
        g = -g
    if g != 1:
        v = [x // g for x in v]
    a = v[p]
    for k in range(len(rows)):
        row = rows[k]
        c = row[p]
        if c:
            h = gcd(a, c)
            s = a // h
            t = c // h
            new = [s * row[j] - t * v[j] for j in range(n)]
            h = gcd(*new)
            if h != 1:
                new = [x // h for x in new]
            rows[k] = new
    pos = 0
    while pos < len(pivots) and pivots[pos] < p:
        pos += 1
    rows.insert(pos, v)
    pivots.insert(pos, p)
    return p


def convolve(a, b, commutative):
    """Product of two ``forest -> coeff`` maps (concatenation of forests)."""
    out = {}
    for fa, ca in a.items():
        for fb, cb in b.items():
            if commutative and fa and fb:
                f = tuple(sorted(fa + fb, reverse=True))
            else:
                f = fa + fb
            out[f] = out.get(f, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def convolve_pairs(a, b, commutative):
    """Product in H (x) H of two ``(left, right) -> coeff`` maps."""
    out = {}
    for (la, ra), ca in a.items():
        for (lb, rb), cb in b.items():
            if commutative:
                left = tuple(sorted(la + lb, reverse=True)) if la and lb else la + lb
                right = tuple(sorted(ra + rb, reverse=True)) if ra and rb else ra + rb
            else:
                left = la + lb
                right = ra + rb
            key = (left, right)
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}
