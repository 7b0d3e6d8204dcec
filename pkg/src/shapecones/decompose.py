"""Conic decompositions in the standard generator bases.

The greedy routines remove one kink per step: at the first interior index
whose second difference has the wrong sign for a generator-free vector, they
subtract the unique multiple of the generator that has its only kink there.
The matrix route solves the same coordinates by one exact linear solve.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .errors import NotInCone, StructuralViolation
from .exactnum import LeftSolver, RMatrix, format_rational, left_combination, solve, to_integers
from .generators import (
    ConeKind,
    generators,
    standard_decreasing_convex,
    standard_increasing_convex,
)
from .shapes import as_vector, violation

ZERO = Fraction(0)


@dataclass(frozen=True)
class Decomposition:
    kind: ConeKind
    labels: tuple[str, ...]
    coefficients: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.coefficients)

    @property
    def nonnegative(self) -> bool:
        return all(x >= 0 for x in self.coefficients)

    def reconstruct(self) -> tuple[Fraction, ...]:
        return tuple(left_combination(self.coefficients, generators(self.kind, self.n).rows))

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "labels": list(self.labels),
            "coefficients": [format_rational(x) for x in self.coefficients],
        }


@dataclass(frozen=True)
class ConvexCanonicalForm:
    """``c == baseline * 1 + sum(lam[i] * a(i+1)) + sum(theta[i] * b(i+1))``."""

    baseline: Fraction
    lam: tuple[Fraction, ...]
    theta: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.lam) + 1

    def reconstruct(self) -> tuple[Fraction, ...]:
        n = self.n
        out = [self.baseline] * n
        for i, (l, t) in enumerate(zip(self.lam, self.theta), start=1):
            if l:
                out = [x + l * y for x, y in zip(out, standard_increasing_convex(n, i))]
            if t:
                out = [x + t * y for x, y in zip(out, standard_decreasing_convex(n, i))]
        return tuple(out)

    def labelled(self) -> list[tuple[str, Fraction]]:
        pairs = [("1", self.baseline)]
        pairs += [(f"a({i})", x) for i, x in enumerate(self.lam, start=1)]
        pairs += [(f"b({i})", x) for i, x in enumerate(self.theta, start=1)]
        return pairs

    def as_dict(self) -> dict:
        return {
            "kind": ConeKind.POSITIVE_CONVEX.value,
            "baseline": format_rational(self.baseline),
            "lambda": [format_rational(x) for x in self.lam],
            "theta": [format_rational(x) for x in self.theta],
        }


@dataclass(frozen=True)
class Violation:
    predicate: str
    index: int

    def as_dict(self) -> dict:
        return {"predicate": self.predicate, "index": self.index}


@dataclass(frozen=True)
class MembershipCertificate:
    verdict: str  # "in_cone" | "out_of_cone"
    witness: Union[Decomposition, ConvexCanonicalForm, Violation]

    @property
    def in_cone(self) -> bool:
        return self.verdict == "in_cone"

    def as_dict(self) -> dict:
        return {"verdict": self.verdict, "witness": self.witness.as_dict()}


def first_violation(c, kind) -> Optional[Violation]:
    """First failing defining inequality of ``kind``, in predicate order."""
    kind = ConeKind(kind)
    for pred in kind.defining_predicates:
        idx = violation(c, pred)
        if idx is not None:
            return Violation(pred, idx)
    return None


def _require(c, kind):
    v = first_violation(c, kind)
    if v is not None:
        raise NotInCone(kind.value, v.predicate, v.index)


def _reduce(ints, d):
    g = math.gcd(d, *ints)
    return [x // g for x in ints], d // g


def _fracs(ints, d):
    return tuple(Fraction(x, d) for x in ints)


def _pick(candidates, rng):
    return candidates[0] if rng is None else rng.choice(candidates)


def decompose_concave_greedy(
    c, *, trace: Optional[list] = None, rng: Optional[random.Random] = None
) -> Decomposition:
    """Coordinates of a positive concave vector in the basis c(1)..c(n).

    Pass a list as ``trace`` to collect ``(index, coefficient, remainder)``
    after every subtraction (the first entry holds the remainder after the
    two end generators are removed).  ``rng`` picks a random singular index instead of
    the first one (the result is the same either way).
    """
    kind = ConeKind.POSITIVE_CONCAVE
    c = as_vector(c)
    _require(c, kind)
    n = len(c)
    labels = generators(kind, n).labels
    if n == 1:
        return Decomposition(kind, labels, (c[0],))
    lam = [ZERO] * n
    lam[0], lam[-1] = c[0], c[-1]
    # remainder kept as integers R over one denominator D, reduced every step
    cs, d = to_integers(c)
    r = [(n - 1) * x - cs[0] * (n - j) - cs[-1] * (j - 1) for j, x in enumerate(cs, start=1)]
    r, d = _reduce(r, d * (n - 1))
    if trace is not None:
        trace.append((None, None, _fracs(r, d)))
    while True:
        singular = [i for i in range(2, n) if 2 * r[i - 1] - r[i - 2] - r[i] > 0]
        if not singular:
            break
        i = _pick(singular, rng)
        kink = 2 * r[i - 1] - r[i - 2] - r[i]
        step = Fraction(kink * (i - 1) * (n - i), d * (n - 1))
        lam[i - 1] += step
        # c(i) scaled by (i-1)(n-i) is integral
        r = [
            (n - 1) * x - kink * ((j - 1) * (n - i) if j <= i else (i - 1) * (n - j))
            for j, x in enumerate(r, start=1)
        ]
        r, d = _reduce(r, d * (n - 1))
        if trace is not None:
            trace.append((i, step, _fracs(r, d)))
    if any(r):
        raise StructuralViolation(f"concave greedy left a nonzero remainder {_fracs(r, d)}")
    return Decomposition(kind, labels, tuple(lam))


def _increasing_convex_coords(c, trace, rng):
    n = len(c)
    if n == 1:
        return [c[0]]
    coef = [ZERO] * n  # aligned with (1, a(1), ..., a(n-1))
    coef[0] = c[0]
    cs, d = to_integers(c)
    r = [x - cs[0] for x in cs]
    if trace is not None:
        trace.append((None, None, _fracs(r, d)))
    while True:
        singular = [i for i in range(2, n) if r[i] - 2 * r[i - 1] + r[i - 2] > 0]
        if not singular:
            break
        i = _pick(singular, rng)
        kink = r[i] - 2 * r[i - 1] + r[i - 2]
        step = Fraction(kink * (n - i), d)
        coef[i] += step
        # a(i) scaled by (n-i) is max(0, j-i)
        r = [x - kink * (j - i) if j > i else x for j, x in enumerate(r, start=1)]
        if trace is not None:
            trace.append((i, step, _fracs(r, d)))
    # kink-free and zero at index 1: a multiple of a(1)
    top = r[-1]
    coef[1] += Fraction(top, d)
    r = [(n - 1) * x - top * (j - 1) for j, x in enumerate(r, start=1)]
    r, d = _reduce(r, d * (n - 1))
    if trace is not None:
        trace.append((1, coef[1], _fracs(r, d)))
    if any(r):
        raise StructuralViolation(f"convex greedy left a nonzero remainder {_fracs(r, d)}")
    return coef


def decompose_increasing_convex_greedy(c, *, trace=None, rng=None) -> Decomposition:
    """Coordinates of a positive increasing convex vector on (1, a(1), ..., a(n-1))."""
    kind = ConeKind.INCREASING_CONVEX
    c = as_vector(c)
    _require(c, kind)
    coef = _increasing_convex_coords(c, trace, rng)
    return Decomposition(kind, generators(kind, len(c)).labels, tuple(coef))


def decompose_decreasing_convex_greedy(c, *, trace=None, rng=None) -> Decomposition:
    """Mirror image of the increasing case, on (1, b(1), ..., b(n-1)).

    A ``trace`` records the remainders of the reversed vector.
    """
    kind = ConeKind.DECREASING_CONVEX
    c = as_vector(c)
    _require(c, kind)
    coef = _increasing_convex_coords(c[::-1], trace, rng)
    return Decomposition(kind, generators(kind, len(c)).labels, tuple(coef))


@lru_cache(maxsize=256)
def _solver(kind: ConeKind, n: int) -> LeftSolver:
    return LeftSolver(generators(kind, n).matrix())


def decompose_via_matrix(c, kind) -> Decomposition:
    """Coordinates of ``c`` in the generator basis of a simplicial ``kind``.

    Coefficients may be negative; ``c`` lies in the cone iff none is.
    """
    kind = ConeKind(kind)
    if not kind.simplicial:
        raise ValueError(f"{kind.value} is not simplicial; use decompose_convex_canonical")
    c = as_vector(c)
    gens = generators(kind, len(c))
    return Decomposition(kind, gens.labels, tuple(_solver(kind, len(c))(c)))


def _zero_interval(r):
    zeros = [j for j, x in enumerate(r) if x == 0]
    p, q = zeros[0], zeros[-1]
    if len(zeros) != q - p + 1:
        raise StructuralViolation(f"minimum set of a convex vector is not contiguous: {zeros}")
    return p, q


def decompose_convex_canonical(c) -> ConvexCanonicalForm:
    """Canonical form ``(min c) * 1 + sum lam_i a(i) + sum theta_i b(i)``.

    After removing the baseline, the part left of the minimum set is a
    decreasing convex vector and the part right of it an increasing one; each
    is decomposed greedily.
    """
    kind = ConeKind.POSITIVE_CONVEX
    c = as_vector(c)
    _require(c, kind)
    n = len(c)
    base = min(c)
    if n == 1:
        return ConvexCanonicalForm(base, (), ())
    r = [x - base for x in c]
    p, q = _zero_interval(r)
    dec = [x if j < p else ZERO for j, x in enumerate(r)]
    inc = [x if j > q else ZERO for j, x in enumerate(r)]
    lam = decompose_increasing_convex_greedy(inc).coefficients
    theta = decompose_decreasing_convex_greedy(dec).coefficients
    if lam[0] or theta[0]:
        raise StructuralViolation("monotone parts of the canonical split have a nonzero baseline")
    return ConvexCanonicalForm(base, lam[1:], theta[1:])


def convex_canonical_by_support(c) -> ConvexCanonicalForm:
    """Canonical form by one exact linear solve, independent of the greedy route.

    Any representation with baseline ``min c`` can only use generators that
    vanish on the minimum set ``[p, q]``: ``b(i)`` with ``i >= n - p + 1`` and
    ``a(i)`` with ``i >= q`` (1-based).  Matching the coordinates outside
    ``[p, q]`` gives a square triangular system.
    """
    c = as_vector(c)
    _require(c, ConeKind.POSITIVE_CONVEX)
    n = len(c)
    base = min(c)
    if n == 1:
        return ConvexCanonicalForm(base, (), ())
    r = [x - base for x in c]
    p0, q0 = _zero_interval(r)
    p, q = p0 + 1, q0 + 1
    unknowns = [("b", i) for i in range(n - p + 1, n)] + [("a", i) for i in range(q, n)]
    eqs = [j for j in range(n) if j < p0 or j > q0]
    lam = [ZERO] * (n - 1)
    theta = [ZERO] * (n - 1)
    if unknowns:
        cols = [
            standard_decreasing_convex(n, i) if fam == "b" else standard_increasing_convex(n, i)
            for fam, i in unknowns
        ]
        a = RMatrix._trusted(tuple(tuple(col[j] for col in cols) for j in eqs))
        x = solve(a, [r[j] for j in eqs])
        for (fam, i), val in zip(unknowns, x):
            (theta if fam == "b" else lam)[i - 1] = val
    return ConvexCanonicalForm(base, tuple(lam), tuple(theta))


def membership(c, kind) -> MembershipCertificate:
    """Decide ``c`` in cone ``kind`` and return a checkable certificate."""
    kind = ConeKind(kind)
    c = as_vector(c)
    if not kind.simplicial:
        v = first_violation(c, kind)
        if v is not None:
            return MembershipCertificate("out_of_cone", v)
        return MembershipCertificate("in_cone", decompose_convex_canonical(c))
    dec = decompose_via_matrix(c, kind)
    if dec.nonnegative:
        return MembershipCertificate("in_cone", dec)
    v = first_violation(c, kind)
    if v is None:
        raise StructuralViolation(
            f"negative coordinates for {kind.value} but no defining inequality fails"
        )
    return MembershipCertificate("out_of_cone", v)


def decompose(c, kind) -> Union[Decomposition, ConvexCanonicalForm]:
    """Nonnegative decomposition of ``c`` in the cone ``kind``; raises NotInCone."""
    kind = ConeKind(kind)
    c = as_vector(c)
    if kind is ConeKind.POSITIVE_CONCAVE:
        return decompose_concave_greedy(c)
    if kind is ConeKind.INCREASING_CONVEX:
        return decompose_increasing_convex_greedy(c)
    if kind is ConeKind.DECREASING_CONVEX:
        return decompose_decreasing_convex_greedy(c)
    if kind is ConeKind.POSITIVE_CONVEX:
        return decompose_convex_canonical(c)
    _require(c, kind)
    return decompose_via_matrix(c, kind)
