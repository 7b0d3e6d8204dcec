"""Generator families spanning the extreme rays of the shape cones.

Naming follows the usual notation: ``c(i)`` minimal standard concave vectors,
``a(i)`` / ``b(i)`` standard increasing / decreasing convex vectors, ``1`` the
all-ones vector, ``e(i)`` unit vectors, ``z(i)`` step vectors (``w(i)`` their
mirror images) and ``h(i)`` the increasing-concave ramps with a plateau
(``d(i)`` their mirror images).

The two mirrored families are indexed by kink position, so their generator
matrix is the increasing one rotated by 180 degrees and keeps its banded
inverse.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import IndexOutOfRange
from .exactnum import RMatrix


class ConeKind(str, enum.Enum):
    POSITIVE = "positive"
    POSITIVE_INCREASING = "positive_increasing"
    POSITIVE_DECREASING = "positive_decreasing"
    POSITIVE_CONCAVE = "positive_concave"
    POSITIVE_CONVEX = "positive_convex"
    INCREASING_CONVEX = "increasing_convex"
    DECREASING_CONVEX = "decreasing_convex"
    INCREASING_CONCAVE = "increasing_concave"
    DECREASING_CONCAVE = "decreasing_concave"

    def __str__(self):
        return self.value

    @property
    def simplicial(self) -> bool:
        return self is not ConeKind.POSITIVE_CONVEX

    @property
    def defining_predicates(self) -> tuple[str, ...]:
        """Shape predicates whose conjunction carves out this cone."""
        return _DEFINING[self]


_DEFINING = {
    ConeKind.POSITIVE: ("positive",),
    ConeKind.POSITIVE_INCREASING: ("positive", "increasing"),
    ConeKind.POSITIVE_DECREASING: ("positive", "decreasing"),
    ConeKind.POSITIVE_CONCAVE: ("positive", "concave"),
    ConeKind.POSITIVE_CONVEX: ("positive", "convex"),
    ConeKind.INCREASING_CONVEX: ("positive", "increasing", "convex"),
    ConeKind.DECREASING_CONVEX: ("positive", "decreasing", "convex"),
    ConeKind.INCREASING_CONCAVE: ("positive", "increasing", "concave"),
    ConeKind.DECREASING_CONCAVE: ("positive", "decreasing", "concave"),
}

SIMPLICIAL_KINDS = tuple(k for k in ConeKind if k.simplicial)


def _check(n, i, lo, hi):
    if n < 1:
        raise IndexOutOfRange(f"dimension must be >= 1, got {n}")
    if not lo <= i <= hi:
        raise IndexOutOfRange(f"index {i} outside {lo}..{hi} for n={n}")


def standard_concave(n: int, i: int) -> tuple[Fraction, ...]:
    """Minimal positive concave vector with maximum 1 attained at ``i``."""
    _check(n, i, 1, n)
    out = []
    for j in range(1, n + 1):
        if j < i:
            out.append(Fraction(j - 1, i - 1))
        elif j > i:
            out.append(Fraction(n - j, n - i))
        else:
            out.append(Fraction(1))
    return tuple(out)


def standard_increasing_convex(n: int, i: int) -> tuple[Fraction, ...]:
    """Largest increasing convex vector with max 1 and exactly ``i`` zeros."""
    _check(n, i, 1, n - 1)
    return tuple(Fraction(0) if j <= i else Fraction(j - i, n - i) for j in range(1, n + 1))


def standard_decreasing_convex(n: int, i: int) -> tuple[Fraction, ...]:
    return standard_increasing_convex(n, i)[::-1]


def step_vector(n: int, i: int) -> tuple[Fraction, ...]:
    _check(n, i, 1, n)
    return tuple(Fraction(int(j >= i)) for j in range(1, n + 1))


def unit_vector(n: int, i: int) -> tuple[Fraction, ...]:
    _check(n, i, 1, n)
    return tuple(Fraction(int(j == i)) for j in range(1, n + 1))


def standard_increasing_concave(n: int, i: int) -> tuple[Fraction, ...]:
    """Linear rise from 0 at index 1 to 1 at index ``i``, then flat.  ``i=1`` is all-ones."""
    _check(n, i, 1, n)
    if i == 1:
        return (Fraction(1),) * n
    return tuple(Fraction(min(j - 1, i - 1), i - 1) for j in range(1, n + 1))


def standard_decreasing_concave(n: int, i: int) -> tuple[Fraction, ...]:
    """Flat at 1 up to index ``i``, then a linear fall to 0 at index n.

    Indexed by the kink position, so this is the reverse of
    ``standard_increasing_concave(n, n - i + 1)``; ``i = n`` is all-ones.
    """
    _check(n, i, 1, n)
    return standard_increasing_concave(n, n - i + 1)[::-1]


def reversed_step_vector(n: int, i: int) -> tuple[Fraction, ...]:
    """Ones on indices ``1..i``, zeros after (reverse of ``step_vector(n, n-i+1)``)."""
    _check(n, i, 1, n)
    return tuple(Fraction(int(j <= i)) for j in range(1, n + 1))


def ones(n: int) -> tuple[Fraction, ...]:
    return (Fraction(1),) * n


@dataclass(frozen=True)
class GeneratorSet:
    kind: ConeKind
    n: int
    rows: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str, ...]

    def __len__(self):
        return len(self.rows)

    def matrix(self) -> RMatrix:
        return RMatrix._trusted(self.rows)

    def without(self, index: int) -> "GeneratorSet":
        """Copy with the generator at 0-based ``index`` dropped."""
        keep = [k for k in range(len(self.rows)) if k != index]
        return GeneratorSet(
            self.kind, self.n, tuple(self.rows[k] for k in keep), tuple(self.labels[k] for k in keep)
        )


def _family(n, name, fn, lo, hi):
    return [(f"{name}({i})", fn(n, i)) for i in range(lo, hi + 1)]


@lru_cache(maxsize=512)
def generators(kind, n: int) -> GeneratorSet:
    """Generators of ``kind`` in R^n in their fixed order (``1`` first where present)."""
    kind = ConeKind(kind)
    if n < 1:
        raise IndexOutOfRange(f"dimension must be >= 1, got {n}")
    if n == 1:
        return GeneratorSet(kind, 1, ((Fraction(1),),), ("1",))
    if kind is ConeKind.POSITIVE:
        pairs = _family(n, "e", unit_vector, 1, n)
    elif kind is ConeKind.POSITIVE_INCREASING:
        pairs = _family(n, "z", step_vector, 1, n)
    elif kind is ConeKind.POSITIVE_DECREASING:
        pairs = _family(n, "w", reversed_step_vector, 1, n)
    elif kind is ConeKind.POSITIVE_CONCAVE:
        pairs = _family(n, "c", standard_concave, 1, n)
    elif kind is ConeKind.INCREASING_CONVEX:
        pairs = [("1", ones(n))] + _family(n, "a", standard_increasing_convex, 1, n - 1)
    elif kind is ConeKind.DECREASING_CONVEX:
        pairs = [("1", ones(n))] + _family(n, "b", standard_decreasing_convex, 1, n - 1)
    elif kind is ConeKind.INCREASING_CONCAVE:
        pairs = _family(n, "h", standard_increasing_concave, 1, n)
    elif kind is ConeKind.DECREASING_CONCAVE:
        pairs = _family(n, "d", standard_decreasing_concave, 1, n)
    else:  # positive_convex, not simplicial
        pairs = _family(n, "a", standard_increasing_convex, 1, n - 1) + _family(
            n, "b", standard_decreasing_convex, 1, n - 1
        )
    labels, rows = zip(*pairs)
    return GeneratorSet(kind, n, tuple(rows), tuple(labels))
