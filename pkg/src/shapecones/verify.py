"""Self-check suite behind ``shapecones verify``."""
from __future__ import annotations

from dataclasses import dataclass

from .decompose import (
    decompose,
    decompose_concave_greedy,
    decompose_decreasing_convex_greedy,
    decompose_increasing_convex_greedy,
    decompose_via_matrix,
)
from .exactnum import RMatrix, invert
from .generators import (
    SIMPLICIAL_KINDS,
    ConeKind,
    ones,
    standard_decreasing_convex,
    standard_increasing_convex,
)
from .matrices import (
    GOLDEN_5,
    constant_except_one,
    generator_matrix,
    golden,
    matrix_M,
    matrix_M_inverse,
    matrix_N,
    matrix_N_inverse,
    matrix_Z,
    matrix_Z_inverse,
    structure_report,
)
from .oracle import compose, sample_coefficients, verify_extreme_rays

GREEDY = {
    ConeKind.POSITIVE_CONCAVE: decompose_concave_greedy,
    ConeKind.INCREASING_CONVEX: decompose_increasing_convex_greedy,
    ConeKind.DECREASING_CONVEX: decompose_decreasing_convex_greedy,
}


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag}  {self.name}" + (f": {self.detail}" if self.detail else "")


def _run(name, fn):
    try:
        res = fn()
    except Exception as exc:  # report, never abort the suite
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    if res is True or res is None:
        return Check(name, True)
    return Check(name, False, str(res))


def _golden():
    bad = []
    for which in GOLDEN_5:
        fn = {"M": matrix_M, "Minv": matrix_M_inverse, "N": matrix_N, "Ninv": matrix_N_inverse}[which]
        got = fn(5)
        want = golden(which)
        for i in range(5):
            for j in range(5):
                if got[i, j] != want[i, j]:
                    bad.append(f"{which}({i + 1},{j + 1}) = {got[i, j]} != {want[i, j]}")
    return "; ".join(bad) if bad else True


def _inverse_pair(a, b):
    n = a.n_rows
    eye = RMatrix.identity(n)
    return (a @ b == eye and b @ a == eye) or "product is not the identity"


def _m_structure(n):
    m, mi = matrix_M(n), matrix_M_inverse(n)
    rm, ri = structure_report(m), structure_report(mi)
    if not (rm.is_centrally_symmetric and ri.is_centrally_symmetric):
        return "M or M^-1 is not centrally symmetric"
    if ri.band_lower > 1 or ri.band_upper > 1:
        return f"M^-1 band ({ri.band_lower}, {ri.band_upper}) exceeds 1"
    inner = ri.column_sums[1:-1]
    if any(s != 0 for s in inner):
        return f"M^-1 inner column sums {inner} not all 0"
    return True


def _concave_family(n):
    for kind in (ConeKind.INCREASING_CONCAVE, ConeKind.DECREASING_CONCAVE):
        rep = structure_report(invert(generator_matrix(kind, n)))
        if rep.diagonal_count > 3:
            return f"{kind.value}: nonzeros on {rep.diagonal_count} diagonals"
        if not (constant_except_one(rep.row_sums) and constant_except_one(rep.column_sums)):
            return f"{kind.value}: row/column sums not constant up to one exception"
    return True


def _extreme(n):
    bad = []
    for kind in ConeKind:
        rep = verify_extreme_rays(kind, n, max_n=max(n, 1))
        want = (2 * n - 2 if n >= 2 else 1) if kind is ConeKind.POSITIVE_CONVEX else n
        if rep.extreme_count != want or not rep.all_extreme:
            bad.append(f"{kind.value}: {rep.extreme_count} extreme of {len(rep.labels)}, want {want}")
    return "; ".join(bad) if bad else True


def _round_trip(n, draws):
    for kind in SIMPLICIAL_KINDS:
        for seed in range(draws):
            lam = sample_coefficients(kind, n, seed)
            v = compose(kind, n, lam)
            if decompose_via_matrix(v, kind).coefficients != lam:
                return f"{kind.value} seed {seed}: matrix route lost the coefficients"
            if decompose(v, kind).coefficients != lam:
                return f"{kind.value} seed {seed}: decomposition lost the coefficients"
            if kind in GREEDY and GREEDY[kind](v).coefficients != lam:
                return f"{kind.value} seed {seed}: greedy disagrees"
    return True


def run_verification(n: int, max_extreme_n: int = 8, draws: int = 50) -> list[Check]:
    checks = [_run("golden n=5 matrices M, M^-1, N, N^-1", _golden)]
    checks.append(_run(f"M M^-1 = I (n={n})", lambda: _inverse_pair(matrix_M(n), matrix_M_inverse(n))))
    checks.append(_run(f"N N^-1 = I (n={n})", lambda: _inverse_pair(matrix_N(n), matrix_N_inverse(n))))
    checks.append(_run(f"Z Z^-1 = I (n={n})", lambda: _inverse_pair(matrix_Z(n), matrix_Z_inverse(n))))
    checks.append(
        _run(
            f"closed-form M^-1 equals eliminated inverse (n={n})",
            lambda: invert(matrix_M(n)) == matrix_M_inverse(n) or "entries differ",
        )
    )
    checks.append(_run(f"M, M^-1 symmetry, band and column sums (n={n})", lambda: _m_structure(n)))
    if n >= 2:
        checks.append(
            _run(
                f"a(1) + b(1) = 1 (n={n})",
                lambda: tuple(
                    x + y
                    for x, y in zip(standard_increasing_convex(n, 1), standard_decreasing_convex(n, 1))
                )
                == ones(n)
                or "sum differs from the all-ones vector",
            )
        )
        checks.append(_run(f"monotone concave inverses: band and sums (n={n})", lambda: _concave_family(n)))
    k = min(n, max_extreme_n)
    checks.append(_run(f"extreme rays of every cone (n={k})", lambda: _extreme(k)))
    checks.append(_run(f"decomposition round-trip, {draws} draws per kind (n={n})", lambda: _round_trip(n, draws)))
    return checks

