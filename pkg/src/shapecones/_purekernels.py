"""Pure-Python integer kernels.

Mirror of ``_speedups.pyx``; both expose the same three functions and must
produce identical results.  Everything operates on Python ints so the callers
can stay exact by tracking one common denominator.
"""


def fraction_free_reduce(aug, n):
    """Fraction-free Gauss-Jordan elimination on an ``n x w`` integer matrix.

    ``aug`` is modified in place.  Pivots are chosen as the first nonzero
    entry at or below the diagonal.  On success every ``aug[i][i]`` equals the
    returned value ``d`` and the left ``n x n`` block is ``d * I``, so the
    right block divided by ``d`` is the solution.  Returns 0 if singular.
    """
    width = len(aug[0]) if n else 0
    prev = 1
    for k in range(n):
        p = k
        while p < n and aug[p][k] == 0:
            p += 1
        if p == n:
            return 0
        if p != k:
            aug[k], aug[p] = aug[p], aug[k]
        rowk = aug[k]
        pivot = rowk[k]
        for i in range(n):
            if i == k:
                continue
            rowi = aug[i]
            f = rowi[k]
            if i < k:
                # rows already reduced: their diagonal grows with the pivot
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


def int_left_matvec(v, rows):
    """Return ``v @ rows`` for an integer vector and integer row list."""
    if not rows:
        return []
    out = [0] * len(rows[0])
    for vi, row in zip(v, rows):
        if vi == 0:
            continue
        for j, x in enumerate(row):
            if x:
                out[j] += vi * x
    return out


def int_matmul(a, b):
    """Integer matrix product ``a @ b`` on row lists."""
    return [int_left_matvec(row, b) for row in a]
