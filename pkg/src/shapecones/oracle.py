"""Independent checks: exact conic feasibility, extreme rays, seeded sampling.

``conic_feasibility`` is a phase-one simplex over Fractions with Bland's
least-index rule, so it terminates and its answers carry exact certificates.
It shares no code with the decomposition routines.

Sampling uses :class:`random.Random` (Mersenne Twister) seeded with the given
integer; one draw ``k = rng.randint(0, 64)`` is taken per generator, in
generator order, and the coefficient is ``k/64``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Union

from .errors import DimensionMismatch, ScaleLimitExceeded, StructuralViolation
from .exactnum import invert, left_combination
from .generators import ConeKind, GeneratorSet, generators
from .shapes import as_vector, predicate

DEFAULT_MAX_N = 8
PERTURBATION = Fraction(1, 1000)


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    coefficients: Optional[tuple[Fraction, ...]] = None  # when feasible
    separator: Optional[tuple[Fraction, ...]] = None  # when infeasible

    @property
    def verdict(self) -> str:
        return "feasible" if self.feasible else "infeasible"


def _dot(a, b):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def conic_feasibility(v, gens: Union[GeneratorSet, Sequence[Sequence]]) -> FeasibilityResult:
    """Decide whether ``v = sum(mu_i * g_i)`` has a solution with ``mu >= 0``.

    Feasible results carry ``mu``; infeasible ones carry ``y`` with
    ``y . g_i >= 0`` for every generator and ``y . v < 0`` (Farkas).
    """
    v = as_vector(v)
    rows = [as_vector(g) for g in (gens.rows if isinstance(gens, GeneratorSet) else gens)]
    n, m = len(v), len(rows)
    for g in rows:
        if len(g) != n:
            raise DimensionMismatch(n, len(g), "generator length")

    sign = [-1 if x < 0 else 1 for x in v]
    width = m + n
    # tableau rows: [A' | I | b'] with b' >= 0
    tab = []
    for j in range(n):
        row = [sign[j] * rows[i][j] for i in range(m)]
        row += [Fraction(int(k == j)) for k in range(n)]
        row.append(sign[j] * v[j])
        tab.append(row)
    basis = [m + j for j in range(n)]
    # reduced costs of the phase-one objective (sum of artificials)
    red = [-sum((tab[j][k] for j in range(n)), Fraction(0)) for k in range(m)] + [Fraction(0)] * n

    while True:
        enter = next((k for k in range(width) if red[k] < 0), None)
        if enter is None:
            break
        best = None
        for j in range(n):
            a = tab[j][enter]
            if a > 0:
                key = (tab[j][-1] / a, basis[j])
                if best is None or key < best[0]:
                    best = (key, j)
        if best is None:  # cannot happen: phase-one objective is bounded below
            raise StructuralViolation("phase-one simplex reported an unbounded ray")
        r = best[1]
        prow = tab[r]
        piv = prow[enter]
        prow = tab[r] = [x / piv for x in prow]
        for j in range(n):
            if j != r and tab[j][enter] != 0:
                f = tab[j][enter]
                tab[j] = [x - f * y for x, y in zip(tab[j], prow)]
        f = red[enter]
        red = [x - f * y for x, y in zip(red, prow[:width])]
        basis[r] = enter

    residual = sum((tab[j][-1] for j in range(n) if basis[j] >= m), Fraction(0))
    if residual == 0:
        mu = [Fraction(0)] * m
        for j, b in enumerate(basis):
            if b < m:
                mu[b] = tab[j][-1]
        ok = left_combination(mu, rows) == list(v) if rows else not any(v)
        if not ok:
            raise StructuralViolation("feasible simplex solution does not reconstruct v")
        return FeasibilityResult(True, coefficients=tuple(mu))
    # duals of the flipped system: pi_j = 1 - red(artificial j)
    y = tuple(-sign[j] * (1 - red[m + j]) for j in range(n))
    if any(_dot(y, g) < 0 for g in rows) or _dot(y, v) >= 0:
        raise StructuralViolation("infeasibility certificate failed its sign conditions")
    return FeasibilityResult(False, separator=y)


@dataclass(frozen=True)
class ExtremeRayReport:
    kind: ConeKind
    n: int
    labels: tuple[str, ...]
    results: tuple[FeasibilityResult, ...]  # generator k against all the others

    @property
    def extreme(self) -> tuple[bool, ...]:
        return tuple(not r.feasible for r in self.results)

    @property
    def extreme_count(self) -> int:
        return sum(self.extreme)

    @property
    def all_extreme(self) -> bool:
        return all(self.extreme)


def verify_extreme_rays(kind, n: int, max_n: int = DEFAULT_MAX_N) -> ExtremeRayReport:
    """Check each generator of ``kind`` is not a conic combination of the rest."""
    kind = ConeKind(kind)
    if n > max_n:
        raise ScaleLimitExceeded(f"n={n} exceeds the extreme-ray bound {max_n}")
    gens = generators(kind, n)
    results = tuple(conic_feasibility(g, gens.without(k)) for k, g in enumerate(gens.rows))
    return ExtremeRayReport(kind, n, gens.labels, results)


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def sample_coefficients(kind, n: int, seed) -> tuple[Fraction, ...]:
    rng = _rng(seed)
    return tuple(Fraction(rng.randint(0, 64), 64) for _ in generators(kind, n).rows)


def sample_in_cone(kind, n: int, seed) -> tuple[Fraction, ...]:
    """Seeded conic combination of the generators of ``kind``."""
    coeffs = sample_coefficients(kind, n, seed)
    return compose(kind, n, coeffs)


def compose(kind, n: int, coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(left_combination(list(coeffs), generators(kind, n).rows))


def sample_outside_cone(kind, n: int, seed) -> tuple[Fraction, ...]:
    """Seeded vector pushed 1/1000 past a tight inequality of ``kind``.

    Simplicial kinds: zero one coefficient (making its facet tight) and move
    one entry so that this coordinate turns negative.  Positive convex: drop
    the minimum to zero, then push that entry below zero.
    """
    kind = ConeKind(kind)
    rng = _rng(seed)
    coeffs = list(sample_coefficients(kind, n, rng))
    if not kind.simplicial:
        v = list(compose(kind, n, coeffs))
        low = min(v)
        v = [x - low for x in v]
        v[v.index(Fraction(0))] -= PERTURBATION
        return tuple(v)
    k = rng.randrange(len(coeffs))
    coeffs[k] = Fraction(0)
    v = list(compose(kind, n, coeffs))
    col = _generator_inverse(kind, n).column(k)
    j = next((j for j, x in enumerate(col) if x > 0), None)
    if j is not None:
        v[j] -= PERTURBATION
    else:
        j = next(j for j, x in enumerate(col) if x < 0)
        v[j] += PERTURBATION
    return tuple(v)


@lru_cache(maxsize=128)
def _generator_inverse(kind, n):
    return invert(generators(kind, n).matrix())


def brute_force_membership(v, kind) -> bool:
    """Membership from the defining inequalities alone."""
    return all(predicate(v, p) for p in ConeKind(kind).defining_predicates)
