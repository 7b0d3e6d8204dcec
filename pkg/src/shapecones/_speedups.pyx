# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels; same contract as ``_purekernels``."""


def fraction_free_reduce(list aug, Py_ssize_t n):
    cdef Py_ssize_t width, k, p, i, j
    cdef list rowk, rowi
    cdef object prev, pivot, f
    width = len(aug[0]) if n else 0
    prev = 1
    for k in range(n):
        p = k
        while p < n and (<list>aug[p])[k] == 0:
            p += 1
        if p == n:
            return 0
        if p != k:
            aug[k], aug[p] = aug[p], aug[k]
        rowk = <list>aug[k]
        pivot = rowk[k]
        for i in range(n):
            if i == k:
                continue
            rowi = <list>aug[i]
            f = rowi[k]
            if i < k:
                for j in range(width):
                    rowi[j] = (pivot * rowi[j] - f * rowk[j]) // prev
            elif f == 0:
                if prev != pivot:
                    for j in range(k + 1, width):
                        rowi[j] = (pivot * rowi[j]) // prev
            else:
                for j in range(k + 1, width):
                    rowi[j] = (pivot * rowi[j] - f * rowk[j]) // prev
            rowi[k] = 0
        prev = pivot
    if n == 0:
        return 1
    return prev


def int_left_matvec(v, list rows):
    cdef Py_ssize_t i, j, m
    cdef list out, row
    cdef object vi, x
    if not rows:
        return []
    m = len(<list>rows[0])
    out = [0] * m
    for i in range(len(rows)):
        vi = v[i]
        if vi == 0:
            continue
        row = <list>rows[i]
        for j in range(m):
            x = row[j]
            if x:
                out[j] += vi * x
    return out


def int_matmul(list a, list b):
    return [int_left_matvec(row, b) for row in a]
