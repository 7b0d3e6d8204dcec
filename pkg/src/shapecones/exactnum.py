"""Exact rational scalars and dense rational matrices.

Scalars are :class:`fractions.Fraction`, which keeps numerator and denominator
in lowest terms with a positive denominator.  Matrix kernels clear
denominators and run fraction-free integer elimination (see ``_kernels``).
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ._kernels import fraction_free_reduce, int_left_matvec, int_matmul
from .errors import DimensionMismatch, SingularMatrix

Rational = Fraction

_INT_RE = re.compile(r"[+-]?\d+")
_FRAC_RE = re.compile(r"([+-]?\d+)/(\d+)")
_DEC_RE = re.compile(r"([+-]?)(\d*)\.(\d*)")


def parse_rational(text: str) -> Fraction:
    """Parse ``"3"``, ``"-2/7"`` or a finite decimal such as ``"0.25"``.

    Decimals are read positionally, so ``"0.1"`` is exactly ``1/10``.
    Raises ``ValueError`` (``ZeroDivisionError`` for ``p/0``).
    """
    s = text.strip()
    if _INT_RE.fullmatch(s):
        return Fraction(int(s))
    m = _FRAC_RE.fullmatch(s)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return Fraction(int(m.group(1)), den)
    m = _DEC_RE.fullmatch(s)
    if m and (m.group(2) or m.group(3)):
        sign, whole, frac = m.groups()
        value = Fraction(int(whole or "0")) + Fraction(int(frac or "0"), 10 ** len(frac))
        return -value if sign == "-" else value
    raise ValueError(f"not an exact rational: {text!r}")


def to_rational(x) -> Fraction:
    """Coerce an int, Fraction or string to Fraction.  Floats are rejected."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(
        f"{type(x).__name__} is not accepted by the exact kernel; "
        "convert it at the boundary (e.g. parse its decimal string)"
    )


def is_canonical(q: Fraction) -> bool:
    """Check the lowest-terms, positive-denominator invariant."""
    return q.denominator > 0 and math.gcd(q.numerator, q.denominator) == 1


def format_rational(q: Fraction) -> str:
    """Render as ``p/q``, or a bare integer when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def common_denominator(values: Iterable[Fraction]) -> int:
    return math.lcm(1, *(q.denominator for q in values))


def to_integers(values: Sequence[Fraction]) -> tuple[list[int], int]:
    """Return ``(ints, D)`` with ``values[i] == ints[i] / D`` and ``D > 0``."""
    d = common_denominator(values)
    return [q.numerator * (d // q.denominator) for q in values], d


@dataclass(frozen=True)
class RMatrix:
    """Immutable dense matrix of Fractions stored row-major."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows):
        rows = tuple(tuple(to_rational(x) for x in row) for row in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch(len(rows[0]), [len(r) for r in rows], "row length")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n: int) -> "RMatrix":
        return cls._trusted(
            tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
        )

    @classmethod
    def _trusted(cls, rows) -> "RMatrix":
        # skips coercion; rows must already be tuples of Fractions
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        return obj

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "RMatrix":
        return RMatrix._trusted(tuple(zip(*self.rows)))

    def entries(self) -> Iterable[Fraction]:
        for row in self.rows:
            yield from row

    def to_integers(self) -> tuple[list[list[int]], int]:
        """Return ``(ints, D)`` with ``self == ints / D`` for one common ``D``."""
        d = common_denominator(self.entries())
        return [[q.numerator * (d // q.denominator) for q in row] for row in self.rows], d

    @classmethod
    def from_integers(cls, ints, d: int) -> "RMatrix":
        return cls._trusted(tuple(tuple(Fraction(x, d) for x in row) for row in ints))

    def __matmul__(self, other: "RMatrix") -> "RMatrix":
        if self.n_cols != other.n_rows:
            raise DimensionMismatch(self.n_cols, other.n_rows, "inner dimension")
        a, da = self.to_integers()
        b, db = other.to_integers()
        if not a or not b:
            return RMatrix._trusted(tuple(() for _ in range(self.n_rows)))
        return RMatrix.from_integers(int_matmul(a, b), da * db)

    def __neg__(self) -> "RMatrix":
        return RMatrix._trusted(tuple(tuple(-x for x in r) for r in self.rows))

    def reversed_both(self) -> "RMatrix":
        """The matrix rotated by 180 degrees: entry (i, j) -> (n-1-i, m-1-j)."""
        return RMatrix._trusted(tuple(tuple(reversed(r)) for r in reversed(self.rows)))

    def __str__(self) -> str:
        cells = [[format_rational(x) for x in r] for r in self.rows]
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)


def _check_square(a: RMatrix) -> None:
    if not a.is_square():
        raise DimensionMismatch(a.n_rows, a.n_cols, "column count of a square matrix")


def _reduce_rows(rows: list[list[int]], n: int) -> int:
    d = fraction_free_reduce(rows, n)
    if d == 0:
        raise SingularMatrix("elimination found no nonzero pivot")
    return d


def integer_inverse(a: RMatrix) -> tuple[list[list[int]], int]:
    """Return ``(B, d)`` with ``a^-1 == B / d`` (``d`` may be negative)."""
    _check_square(a)
    n = a.n_rows
    ints = []
    for row in a.rows:
        r, rd = to_integers(row)
        ints.append((r, rd))
    aug = [r + [rd if j == i else 0 for j in range(n)] for i, (r, rd) in enumerate(ints)]
    d = _reduce_rows(aug, n)
    return [row[n:] for row in aug], d


def invert(a: RMatrix) -> RMatrix:
    """Exact inverse by fraction-free Gauss-Jordan elimination."""
    b, d = integer_inverse(a)
    return RMatrix.from_integers(b, d)


def solve(a: RMatrix, b: Sequence) -> list[Fraction]:
    """Solve ``a @ x = b`` exactly for square nonsingular ``a``."""
    _check_square(a)
    n = a.n_rows
    if len(b) != n:
        raise DimensionMismatch(n, len(b))
    b = [to_rational(x) for x in b]
    aug = []
    for row, rhs in zip(a.rows, b):
        r, rd = to_integers(tuple(row) + (rhs,))
        aug.append(r)
    d = _reduce_rows(aug, n)
    return [Fraction(row[n], d) for row in aug]


def solve_left(v: Sequence, a: RMatrix) -> list[Fraction]:
    """Return ``lam`` with ``lam @ a == v`` exactly (coordinates in the row basis)."""
    _check_square(a)
    if len(v) != a.n_rows:
        raise DimensionMismatch(a.n_rows, len(v))
    return solve(a.transpose(), v)


class LeftSolver:
    """Factor ``a`` once, then solve ``lam @ a == v`` for many ``v``.

    Holds the inverse as integers over one denominator, so each solve is a
    single integer vector-matrix product.
    """

    def __init__(self, a: RMatrix):
        self.n = a.n_rows
        self._inv, self._d = integer_inverse(a)

    def __call__(self, v: Sequence[Fraction]) -> list[Fraction]:
        if len(v) != self.n:
            raise DimensionMismatch(self.n, len(v))
        ints, dv = to_integers(v)
        den = dv * self._d
        return [Fraction(x, den) for x in int_left_matvec(ints, self._inv)]

    def inverse(self) -> RMatrix:
        return RMatrix.from_integers(self._inv, self._d)


def left_combination(coeffs: Sequence[Fraction], rows: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Return ``sum(coeffs[i] * rows[i])`` exactly."""
    if len(coeffs) != len(rows):
        raise DimensionMismatch(len(rows), len(coeffs))
    if not rows:
        return []
    c, dc = to_integers(coeffs)
    dg = common_denominator(q for r in rows for q in r)
    g = [[q.numerator * (dg // q.denominator) for q in r] for r in rows]
    den = dc * dg
    return [Fraction(x, den) for x in int_left_matvec(c, g)]
