"""Shape predicates for finite rational sequences.

All indices reported to callers are 1-based.  A witness index names the
defining inequality that fails:

* positive, log_concave, convex, concave: the entry / interior centre ``i``;
* increasing, decreasing, unimodal: ``i`` for the step ``a[i+1] - a[i]``.

Predicates are evaluated on integer numerators over a common denominator,
which is exact because every defining inequality is homogeneous.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import DimensionMismatch, NonPositiveEntry
from .exactnum import to_integers, to_rational

ShapeVector = tuple  # tuple[Fraction, ...] with at least one entry

PREDICATES = ("positive", "increasing", "decreasing", "convex", "concave", "unimodal", "log_concave")


def as_vector(values: Iterable) -> tuple[Fraction, ...]:
    v = tuple(to_rational(x) for x in values)
    if not v:
        raise DimensionMismatch("at least 1", 0)
    return v


def negate(v) -> tuple[Fraction, ...]:
    return tuple(-x for x in as_vector(v))


def forward_differences(v) -> tuple[Fraction, ...]:
    v = as_vector(v)
    return tuple(b - a for a, b in zip(v, v[1:]))


def second_differences(v) -> tuple[Fraction, ...]:
    v = as_vector(v)
    return tuple(v[i + 2] - 2 * v[i + 1] + v[i] for i in range(len(v) - 2))


def _first_step(ints, lo, sign, tol):
    # first i >= lo with sign * (a[i+1] - a[i]) < -tol, else None
    for i in range(lo, len(ints) - 1):
        if sign * (ints[i + 1] - ints[i]) < -tol:
            return i
    return None


def _violation_ints(ints, d, kind, eps):
    tol = eps * d
    n = len(ints)
    if kind == "positive":
        for i, x in enumerate(ints):
            if x < -tol:
                return i + 1
        return None
    if kind == "increasing":
        i = _first_step(ints, 0, 1, tol)
        return None if i is None else i + 1
    if kind == "decreasing":
        i = _first_step(ints, 0, -1, tol)
        return None if i is None else i + 1
    if kind in ("convex", "concave"):
        sign = 1 if kind == "convex" else -1
        for i in range(1, n - 1):
            if sign * (ints[i + 1] - 2 * ints[i] + ints[i - 1]) < -tol:
                return i + 1
        return None
    if kind == "unimodal":
        peak = 0
        while peak < n - 1 and ints[peak + 1] - ints[peak] >= -tol:
            peak += 1
        i = _first_step(ints, peak, -1, tol)
        return None if i is None else i + 1
    if kind == "log_concave":
        for i, x in enumerate(ints):
            if x <= 0:
                raise NonPositiveEntry(i + 1)
        tol2 = eps * d * d
        for i in range(1, n - 1):
            if ints[i] * ints[i] - ints[i - 1] * ints[i + 1] < -tol2:
                return i + 1
        return None
    raise ValueError(f"unknown predicate {kind!r}")


def violation(v, kind: str, eps=0) -> Optional[int]:
    """Smallest 1-based index where ``kind`` fails on ``v``, or ``None``.

    ``eps >= 0`` relaxes every inequality to ``>= -eps``.
    """
    ints, d = to_integers(as_vector(v))
    eps = to_rational(eps)
    if eps < 0:
        raise ValueError("eps must be >= 0")
    return _violation_ints(ints, d, kind, eps)


def predicate(v, kind: str, eps=0) -> bool:
    """True iff ``v`` satisfies ``kind``.

    Log-concavity is decided multiplicatively (a_i^2 >= a_{i-1} a_{i+1}) and
    raises :class:`NonPositiveEntry` unless every entry is > 0.
    """
    return violation(v, kind, eps) is None


@dataclass(frozen=True)
class ShapeReport:
    positive: bool
    increasing: bool
    decreasing: bool
    convex: bool
    concave: bool
    unimodal: bool
    log_concave: Optional[bool]  # None when some entry is <= 0
    witnesses: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in PREDICATES}


def classify(v, eps=0) -> ShapeReport:
    """Evaluate every predicate at once; failures carry their witness index."""
    ints, d = to_integers(as_vector(v))
    eps = to_rational(eps)
    if eps < 0:
        raise ValueError("eps must be >= 0")
    values = {}
    witnesses = {}
    for kind in PREDICATES:
        try:
            w = _violation_ints(ints, d, kind, eps)
        except NonPositiveEntry:
            values[kind] = None
            continue
        values[kind] = w is None
        if w is not None:
            witnesses[kind] = w
    return ShapeReport(witnesses=witnesses, **values)
