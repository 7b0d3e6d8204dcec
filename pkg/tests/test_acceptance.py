"""Release gate: one test per acceptance criterion, all exact.

Run ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion is
printed in the terminal summary) or ``python tests/test_acceptance.py``.
"""
import time
from fractions import Fraction as F

import pytest

from shapecones.decompose import (
    convex_canonical_by_support,
    decompose,
    decompose_concave_greedy,
    decompose_convex_canonical,
    decompose_decreasing_convex_greedy,
    decompose_increasing_convex_greedy,
    decompose_via_matrix,
    membership,
)
from shapecones.exactnum import RMatrix, invert
from shapecones.generators import (
    SIMPLICIAL_KINDS,
    ConeKind,
    ones,
    standard_decreasing_convex,
    standard_increasing_convex,
)
from shapecones.matrices import (
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
from shapecones.oracle import (
    brute_force_membership,
    compose,
    sample_coefficients,
    sample_in_cone,
    sample_outside_cone,
    verify_extreme_rays,
)

RESULTS = []
DRAWS = 1000

GREEDY = {
    ConeKind.POSITIVE_CONCAVE: decompose_concave_greedy,
    ConeKind.INCREASING_CONVEX: decompose_increasing_convex_greedy,
    ConeKind.DECREASING_CONVEX: decompose_decreasing_convex_greedy,
}


def criterion(number, name, budget=None):
    """Record a pass/fail line; fail if the stated runtime budget is exceeded."""

    def wrap(fn):
        def test():
            start = time.perf_counter()
            try:
                fn()
                elapsed = time.perf_counter() - start
                if budget is not None:
                    assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
            except BaseException as exc:
                RESULTS.append(f"FAIL  [{number}] {name}: {exc}")
                raise
            RESULTS.append(f"PASS  [{number}] {name} ({elapsed:.2f}s)")

        test.__name__ = fn.__name__
        return test

    return wrap


def _eq(got: RMatrix, want: RMatrix, what: str):
    assert got.shape == want.shape, f"{what}: shape {got.shape} != {want.shape}"
    for i in range(want.n_rows):
        for j in range(want.n_cols):
            assert got[i, j] == want[i, j], f"{what}({i + 1},{j + 1}) = {got[i, j]}, expected {want[i, j]}"


@criterion(1, "golden n=5 matrices M, M^-1, N, N^-1 match the displayed values exactly")
def test_1_golden_matrices():
    _eq(matrix_M(5), golden("M"), "M")
    _eq(matrix_M_inverse(5), golden("Minv"), "M^-1")
    _eq(matrix_N(5), golden("N"), "N")
    _eq(matrix_N_inverse(5), golden("Ninv"), "N^-1")


@criterion(2, "exact inverses for n = 1..64; closed-form M^-1 equals eliminated inverse", budget=10)
def test_2_exact_inverses():
    for n in range(1, 65):
        eye = RMatrix.identity(n)
        m, mi = matrix_M(n), matrix_M_inverse(n)
        assert m @ mi == eye, f"M M^-1 != I at n={n}"
        assert matrix_N(n) @ matrix_N_inverse(n) == eye, f"N N^-1 != I at n={n}"
        assert matrix_Z(n) @ matrix_Z_inverse(n) == eye, f"Z Z^-1 != I at n={n}"
        _eq(invert(m), mi, f"eliminated M^-1 (n={n})")


def _band(rep, lower, upper):
    return rep.band_lower <= lower and rep.band_upper <= upper


@criterion(3, "structural claims on M, M^-1, N^-1, Z^-1 for n = 2..64")
def test_3_structure():
    for n in range(2, 65):
        rm = structure_report(matrix_M(n))
        ri = structure_report(matrix_M_inverse(n))
        assert rm.is_centrally_symmetric and ri.is_centrally_symmetric, n
        assert _band(ri, 1, 1), n
        assert all(s == 0 for s in ri.column_sums[1:-1]), n

        rn = structure_report(matrix_N_inverse(n))
        assert _band(rn, 0, 2), n
        assert all(s == 0 for s in rn.column_sums[1:]), n
        assert all(s == 0 for s in rn.row_sums[:-1]), n

        rz = structure_report(matrix_Z_inverse(n))
        assert _band(rz, 0, 1), n
        assert all(s == 0 for s in rz.column_sums[1:]), n


@criterion(4, "decomposition round-trip and greedy/matrix agreement, 1000 draws per kind and n", budget=60)
def test_4_round_trip():
    for kind in SIMPLICIAL_KINDS:
        for n in (2, 3, 5, 8, 13, 20):
            for k in range(DRAWS):
                seed = f"rt-{kind.value}-{n}-{k}"
                lam = sample_coefficients(kind, n, seed)
                v = compose(kind, n, lam)
                via = decompose_via_matrix(v, kind).coefficients
                assert via == lam, (kind, n, k)
                if kind in GREEDY:
                    assert GREEDY[kind](v).coefficients == via, (kind, n, k)
                else:
                    assert decompose(v, kind).coefficients == via, (kind, n, k)


@criterion(5, "extreme rays: 2n-2 for the convex cone, n for each simplicial cone, n = 3..7", budget=60)
def test_5_extreme_rays():
    for n in range(3, 8):
        rep = verify_extreme_rays(ConeKind.POSITIVE_CONVEX, n)
        assert len(rep.labels) == 2 * n - 2 and rep.extreme_count == 2 * n - 2, n
        for kind in SIMPLICIAL_KINDS:
            rep = verify_extreme_rays(kind, n)
            assert len(rep.labels) == n and rep.extreme_count == n, (kind, n)


@criterion(6, "a(1) + b(1) = 1 exactly for n = 2..32")
def test_6_corrected_identity():
    for n in range(2, 33):
        s = tuple(x + y for x, y in zip(standard_increasing_convex(n, 1), standard_decreasing_convex(n, 1)))
        assert s == ones(n), n


@criterion(7, "canonical convex form: exact reconstruction, two routes agree, n = 3..12")
def test_7_canonical_convex():
    for n in range(3, 13):
        for k in range(DRAWS):
            v = sample_in_cone(ConeKind.POSITIVE_CONVEX, n, f"cc-{n}-{k}")
            form = decompose_convex_canonical(v)
            assert form.reconstruct() == v, (n, k)
            assert form.baseline == min(v)
            assert all(x >= 0 for x in form.lam + form.theta)
            assert convex_canonical_by_support(v) == form, (n, k)


@criterion(8, "membership agrees with brute-force predicates, 1000 in + 1000 out per kind, n = 2..10")
def test_8_oracle_agreement():
    disagreements = []
    for kind in ConeKind:
        for n in range(2, 11):
            for k in range(DRAWS):
                inside = sample_in_cone(kind, n, f"in-{kind.value}-{n}-{k}")
                outside = sample_outside_cone(kind, n, f"out-{kind.value}-{n}-{k}")
                if not (membership(inside, kind).in_cone and brute_force_membership(inside, kind)):
                    disagreements.append(("in", kind.value, n, k))
                if membership(outside, kind).in_cone or brute_force_membership(outside, kind):
                    disagreements.append(("out", kind.value, n, k))
    assert not disagreements, disagreements[:5]


@criterion(9, "monotone concave families: extreme rays n <= 7, inverse band/sum structure n = 2..64")
def test_9_derived_family():
    for kind in (ConeKind.INCREASING_CONCAVE, ConeKind.DECREASING_CONCAVE):
        for n in range(1, 8):
            assert verify_extreme_rays(kind, n).all_extreme, (kind, n)
        for n in range(2, 65):
            rep = structure_report(invert(generator_matrix(kind, n)))
            assert rep.diagonal_count <= 3, (kind, n, rep.diagonals)
            assert constant_except_one(rep.row_sums), (kind, n)
            assert constant_except_one(rep.column_sums), (kind, n)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
