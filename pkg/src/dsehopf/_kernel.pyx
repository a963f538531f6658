# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernel_py``; same contracts, typed loops."""
from math import gcd


def reduce_vector(list vec, list rows, list pivots):
    cdef list v = list(vec)
    cdef list row
    cdef Py_ssize_t k, j, p
    cdef Py_ssize_t n = len(v)
    cdef Py_ssize_t m = len(rows)
    cdef object den = 1
    cdef object a, c, g
    for k in range(m):
        p = pivots[k]
        c = v[p]
        if c:
            row = <list>rows[k]
            a = row[p]
            g = gcd(a, c)
            a = a // g
            c = c // g
            for j in range(n):
                v[j] = a * v[j] - c * row[j]
            den = den * a
    g = gcd(den, *v)
    if g != 1:
        den = den // g
        for j in range(n):
            v[j] = v[j] // g
    return v, den


def insert_row(list rows, list pivots, list vec):
    cdef list v, row, new
    cdef Py_ssize_t j, k, p, pos
    cdef Py_ssize_t n
    cdef object a, c, g, h, s, t
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
        for j in range(n):
            v[j] = v[j] // g
    a = v[p]
    for k in range(len(rows)):
        row = <list>rows[k]
        c = row[p]
        if c:
            h = gcd(a, c)
            s = a // h
            t = c // h
            new = [None] * n
            for j in range(n):
                new[j] = s * row[j] - t * v[j]
            h = gcd(*new)
            if h != 1:
                for j in range(n):
                    new[j] = new[j] // h
            rows[k] = new
    pos = 0
    while pos < len(pivots) and <Py_ssize_t>pivots[pos] < p:
        pos += 1
    rows.insert(pos, v)
    pivots.insert(pos, p)
    return p


def convolve(dict a, dict b, bint commutative):
    cdef dict out = {}
    cdef tuple fa, fb, f
    cdef object ca, cb, prev
    for fa, ca in a.items():
        for fb, cb in b.items():
            if commutative and fa and fb:
                f = tuple(sorted(fa + fb, reverse=True))
            else:
                f = fa + fb
            prev = out.get(f)
            out[f] = ca * cb if prev is None else prev + ca * cb
    return {k: v for k, v in out.items() if v}


def convolve_pairs(dict a, dict b, bint commutative):
    cdef dict out = {}
    cdef tuple ka, kb, la, ra, lb, rb, left, right, key
    cdef object ca, cb, prev
    for ka, ca in a.items():
        la = <tuple>ka[0]
        ra = <tuple>ka[1]
        for kb, cb in b.items():
            lb = <tuple>kb[0]
            rb = <tuple>kb[1]
            if commutative:
                left = tuple(sorted(la + lb, reverse=True)) if la and lb else la + lb
                right = tuple(sorted(ra + rb, reverse=True)) if ra and rb else ra + rb
            else:
                left = la + lb
                right = ra + rb
            key = (left, right)
            prev = out.get(key)
            out[key] = ca * cb if prev is None else prev + ca * cb
    return {k: v for k, v in out.items() if v}
