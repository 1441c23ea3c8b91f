# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled poset kernels; same interface as ``_pykernels``.

Profiles arrive as int64, so callers must only route sizes whose scaled
Kraft sums fit in 63 bits.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def relation_matrix(profiles):
    cdef const long long[:, :] p = np.ascontiguousarray(profiles, dtype=np.int64)
    cdef Py_ssize_t n = p.shape[0], t = p.shape[1], i, j, k
    out = np.zeros((n, n), dtype=np.uint8)
    cdef unsigned char[:, :] rel = out
    cdef bint ok
    with nogil:
        for i in range(n):
            for j in range(n):
                ok = True
                for k in range(t):
                    if p[i, k] > p[j, k]:
                        ok = False
                        break
                rel[i, j] = ok
    return out


def transitive_reduction(rel):
    cdef const unsigned char[:, :] r = np.ascontiguousarray(rel, dtype=np.uint8)
    cdef Py_ssize_t n = r.shape[0], i, j, k
    out = np.zeros((n, n), dtype=np.uint8)
    cdef unsigned char[:, :] cov = out
    cdef bint between
    with nogil:
        for i in range(n):
            for j in range(n):
                if i == j or not r[i, j]:
                    continue
                between = False
                for k in range(n):
                    if k != i and k != j and r[i, k] and r[k, j]:
                        between = True
                        break
                cov[i, j] = not between
    return out


def bound_table(rel, bint lower):
    cdef const unsigned char[:, :] r = np.ascontiguousarray(rel, dtype=np.uint8)
    cdef Py_ssize_t n = r.shape[0], i, j, x
    cdef long long best
    cdef bint ok
    out = np.full((n, n), -1, dtype=np.int64)
    cdef long long[:, :] tab = out
    with nogil:
        for i in range(n):
            for j in range(i, n):
                best = -1
                for x in range(n):
                    if lower:
                        ok = r[x, i] and r[x, j]
                    else:
                        ok = r[i, x] and r[j, x]
                    if not ok:
                        continue
                    if best < 0:
                        best = x
                    elif lower and r[best, x]:
                        best = x
                    elif not lower and r[x, best]:
                        best = x
                if best < 0:
                    continue
                ok = True
                for x in range(n):
                    if lower and r[x, i] and r[x, j] and not r[x, best]:
                        ok = False
                        break
                    if not lower and r[i, x] and r[j, x] and not r[best, x]:
                        ok = False
                        break
                if ok:
                    tab[i, j] = best
                    tab[j, i] = best
    return out


def modular_violation(rel, meet, join):
    cdef const unsigned char[:, :] r = np.ascontiguousarray(rel, dtype=np.uint8)
    cdef const long long[:, :] mt = np.ascontiguousarray(meet, dtype=np.int64)
    cdef const long long[:, :] jt = np.ascontiguousarray(join, dtype=np.int64)
    cdef Py_ssize_t n = r.shape[0], x, y, z
    for x in range(n):
        for z in range(n):
            if not r[x, z]:
                continue
            for y in range(n):
                if jt[x, mt[y, z]] != mt[jt[x, y], z]:
                    return (x, y, z)
    return None
