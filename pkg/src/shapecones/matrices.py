"""Basis-change matrices between the positive orthant and the simplicial cones.

``matrix_M`` has the standard concave vectors as rows, ``matrix_N`` the
all-ones vector followed by the standard increasing convex vectors, and
``matrix_Z`` the step vectors.  A coefficient row ``lam >= 0`` maps to the
cone element ``lam @ M``; the inverses map back.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import StructuralViolation
from .exactnum import RMatrix, invert
from .generators import ConeKind, generators


def matrix_M(n: int) -> RMatrix:
    return generators(ConeKind.POSITIVE_CONCAVE, n).matrix()


def matrix_M_inverse(n: int) -> RMatrix:
    """Tridiagonal closed form of ``matrix_M(n)^-1``."""
    rows = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        if j in (0, n - 1):
            rows[j][j] = Fraction(1)
        else:
            diag = Fraction(2 * j * (n - 1 - j), n - 1)
            rows[j][j] = diag
            rows[j - 1][j] = rows[j + 1][j] = -diag / 2
    return RMatrix._trusted(tuple(tuple(r) for r in rows))


def matrix_N(n: int) -> RMatrix:
    return generators(ConeKind.INCREASING_CONVEX, n).matrix()


def matrix_Z(n: int) -> RMatrix:
    return generators(ConeKind.POSITIVE_INCREASING, n).matrix()


def generator_matrix(kind, n: int) -> RMatrix:
    return generators(kind, n).matrix()


@dataclass(frozen=True)
class StructureReport:
    is_centrally_symmetric: bool
    band_lower: int
    band_upper: int
    column_sums: tuple[Fraction, ...]
    row_sums: tuple[Fraction, ...]
    exceptional_columns: tuple[int, ...]
    exceptional_rows: tuple[int, ...]
    diagonals: tuple[int, ...]  # offsets j - i carrying a nonzero entry

    @property
    def diagonal_count(self) -> int:
        return len(self.diagonals)


def _modal_exceptions(sums) -> tuple[int, ...]:
    if not sums:
        return ()
    counts = Counter(sums)
    best = max(counts.values())
    modal = next(s for s in sums if counts[s] == best)
    return tuple(i + 1 for i, s in enumerate(sums) if s != modal)


def is_centrally_symmetric(a: RMatrix) -> bool:
    return a == a.reversed_both()


def structure_report(a: RMatrix) -> StructureReport:
    """Symmetry, band widths and exact row/column sums of a square matrix.

    Exceptional rows/columns (1-based) are those whose sum differs from the
    most frequent sum.
    """
    n = a.n_rows
    offsets = sorted({j - i for i in range(n) for j in range(n) if a[i, j] != 0})
    col = tuple(sum(a.column(j), Fraction(0)) for j in range(a.n_cols))
    row = tuple(sum(r, Fraction(0)) for r in a.rows)
    return StructureReport(
        is_centrally_symmetric=is_centrally_symmetric(a),
        band_lower=max([-o for o in offsets if o < 0], default=0),
        band_upper=max([o for o in offsets if o > 0], default=0),
        column_sums=col,
        row_sums=row,
        exceptional_columns=_modal_exceptions(col),
        exceptional_rows=_modal_exceptions(row),
        diagonals=tuple(offsets),
    )


def constant_except_one(sums) -> bool:
    """One value occurs at least ``len(sums) - 1`` times."""
    if len(sums) <= 1:
        return True
    return max(Counter(sums).values()) >= len(sums) - 1


def _inverse_band_check(n, inv, upper, name):
    rep = structure_report(inv)
    if rep.band_lower != 0 or rep.band_upper > upper:
        raise StructuralViolation(f"{name}({n}) has nonzeros outside 0 <= j-i <= {upper}")
    return rep


def matrix_N_inverse(n: int) -> RMatrix:
    """Exact inverse of ``matrix_N``, validated against its known structure.

    Checked: reciprocal diagonal, nonzeros only for ``0 <= j - i <= 2``, and
    zero row and column sums except the first column and the last row.
    """
    nmat = matrix_N(n)
    inv = invert(nmat)
    rep = _inverse_band_check(n, inv, 2, "N^-1")
    for i in range(n):
        if inv[i, i] * nmat[i, i] != 1:
            raise StructuralViolation(f"N^-1({n}) diagonal entry {i + 1} is not reciprocal")
    if any(s != 0 for s in rep.column_sums[1:]) or any(s != 0 for s in rep.row_sums[:-1]):
        raise StructuralViolation(f"N^-1({n}) has a nonzero row/column sum outside the exceptions")
    return inv


def matrix_Z_inverse(n: int) -> RMatrix:
    """Exact inverse of ``matrix_Z``: bidiagonal, column sums 0 except column 1."""
    inv = invert(matrix_Z(n))
    rep = _inverse_band_check(n, inv, 1, "Z^-1")
    if any(s != 0 for s in rep.column_sums[1:]):
        raise StructuralViolation(f"Z^-1({n}) has a nonzero column sum beyond column 1")
    return inv


def closed_form(which: str, n: int) -> RMatrix:
    """Dispatch by name: ``M``, ``Minv``, ``N``, ``Ninv``, ``Z``, ``Zinv``."""
    table = {
        "M": matrix_M,
        "Minv": matrix_M_inverse,
        "N": matrix_N,
        "Ninv": matrix_N_inverse,
        "Z": matrix_Z,
        "Zinv": matrix_Z_inverse,
    }
    try:
        fn = table[which]
    except KeyError:
        raise ValueError(f"unknown matrix {which!r}; choose from {', '.join(table)}") from None
    return fn(n)


MATRIX_NAMES = ("M", "Minv", "N", "Ninv", "Z", "Zinv")

# displayed n = 5 instances, used as golden values
GOLDEN_5 = {
    "M": (12, [[12, 9, 6, 3, 0], [0, 12, 8, 4, 0], [0, 6, 12, 6, 0], [0, 4, 8, 12, 0], [0, 3, 6, 9, 12]]),
    "Minv": (12, [[12, -9, 0, 0, 0], [0, 18, -12, 0, 0], [0, -9, 24, -9, 0], [0, 0, -12, 18, 0], [0, 0, 0, -9, 12]]),
    "N": (12, [[12, 12, 12, 12, 12], [0, 3, 6, 9, 12], [0, 0, 4, 8, 12], [0, 0, 0, 6, 12], [0, 0, 0, 0, 12]]),
    "Ninv": (1, [[1, -4, 3, 0, 0], [0, 4, -6, 2, 0], [0, 0, 3, -4, 1], [0, 0, 0, 2, -2], [0, 0, 0, 0, 1]]),
}


def golden(which: str) -> RMatrix:
    d, ints = GOLDEN_5[which]
    return RMatrix.from_integers(ints, d)
