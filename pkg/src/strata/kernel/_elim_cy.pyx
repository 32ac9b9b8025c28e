# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _elim_py.  Same two functions, same semantics.

Entries stay arbitrary-precision Python ints; the speedup comes from typed
loop counters and list indexing, which dominate at desk-scale matrix sizes.
"""

from math import gcd


cdef _make_primitive(list row, Py_ssize_t start):
    cdef Py_ssize_t j, n = len(row)
    g = 0
    lead = 0
    for j in range(start, n):
        x = row[j]
        if x:
            if g == 0:
                lead = x
            g = gcd(g, x)
            if g == 1 and lead > 0:
                return
    if g == 0:
        return
    if lead < 0:
        g = -g
    if g != 1:
        for j in range(start, n):
            row[j] = row[j] // g


def echelon_int(rows, bint reduce=True):
    cdef list m = [list(row_) for row_ in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t ncols = len(m[0]) if nrows else 0
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j, piv, k
    cdef list mr, mi, mk
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if (<list>m[i])[c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        _make_primitive(<list>m[r], c)
        mr = <list>m[r]
        a = mr[c]
        for i in range(r + 1, nrows):
            mi = <list>m[i]
            b = mi[c]
            if b:
                for j in range(c, ncols):
                    mi[j] = a * mi[j] - b * mr[j]
                _make_primitive(mi, c)
        pivots.append(c)
        r += 1
    if reduce:
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            mk = <list>m[k]
            a = mk[c]
            for i in range(k):
                mi = <list>m[i]
                b = mi[c]
                if b:
                    for j in range(ncols):
                        mi[j] = a * mi[j] - b * mk[j]
                    _make_primitive(mi, 0)
    return pivots, m


def echelon_mod(rows, p, bint reduce=True):
    cdef list m = [[x % p for x in row_] for row_ in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t ncols = len(m[0]) if nrows else 0
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j, piv, k
    cdef list mr, mi, mk
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if (<list>m[i])[c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        mr = <list>m[r]
        inv = pow(mr[c], -1, p)
        for j in range(c, ncols):
            mr[j] = (mr[j] * inv) % p
        for i in range(r + 1, nrows):
            mi = <list>m[i]
            b = mi[c]
            if b:
                for j in range(c, ncols):
                    mi[j] = (mi[j] - b * mr[j]) % p
        pivots.append(c)
        r += 1
    if reduce:
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            mk = <list>m[k]
            for i in range(k):
                mi = <list>m[i]
                b = mi[c]
                if b:
                    for j in range(c, ncols):
                        mi[j] = (mi[j] - b * mk[j]) % p
    return pivots, m
