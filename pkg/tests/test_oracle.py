from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rationals, vec
from shapecones.decompose import membership
from shapecones.errors import DimensionMismatch, ScaleLimitExceeded
from shapecones.generators import ConeKind, generators, ones, standard_increasing_convex
from shapecones.oracle import (
    brute_force_membership,
    compose,
    conic_feasibility,
    sample_coefficients,
    sample_in_cone,
    sample_outside_cone,
    verify_extreme_rays,
)

seeds = st.integers(0, 10**9)


def _dot(a, b):
    return sum((x * y for x, y in zip(a, b)), F(0))


def _check_result(res, v, rows):
    if res.feasible:
        assert all(x >= 0 for x in res.coefficients)
        total = [sum((c * g[j] for c, g in zip(res.coefficients, rows)), F(0)) for j in range(len(v))]
        assert total == list(v)
    else:
        assert all(_dot(res.separator, g) >= 0 for g in rows)
        assert _dot(res.separator, v) < 0


def test_constructed_feasible():
    gens = generators("positive_concave", 5)
    v = [x + 2 * y for x, y in zip(gens.rows[0], gens.rows[2])]
    res = conic_feasibility(v, gens)
    assert res.feasible and res.coefficients == vec(1, 0, 2, 0, 0)


def test_a1_not_generated_by_the_rest():
    n = 5
    gens = generators("positive_convex", n)
    rest = [g for lab, g in zip(gens.labels, gens.rows) if lab != "a(1)"] + [ones(n)]
    res = conic_feasibility(standard_increasing_convex(n, 1), rest)
    assert not res.feasible
    _check_result(res, standard_increasing_convex(n, 1), rest)


def test_negative_coordinate():
    res = conic_feasibility(vec(-1, 0, 0), generators("positive", 3))
    assert not res.feasible and res.separator == vec(1, 0, 0)


def test_empty_generator_list():
    assert conic_feasibility(vec(0, 0), []).feasible
    res = conic_feasibility(vec(0, 1), [])
    assert not res.feasible and _dot(res.separator, vec(0, 1)) < 0


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        conic_feasibility(vec(1, 2), [vec(1, 2, 3)])


def test_degenerate_cycling_prone_instance():
    # many parallel and zero generators exercise degenerate pivots
    rows = [vec(1, 1, 0), vec(2, 2, 0), vec(0, 0, 0), vec(0, 1, 1), vec(1, 2, 1), vec(1, 0, -1)]
    for v in (vec(1, 2, 1), vec(0, 0, 1), vec(3, 1, -2), vec(0, 0, 0)):
        _check_result(conic_feasibility(v, rows), v, rows)


@settings(max_examples=200, deadline=None)
@given(
    st.integers(1, 5).flatmap(
        lambda n: st.tuples(
            st.lists(rationals(5, 4), min_size=n, max_size=n),
            st.lists(st.lists(rationals(5, 4), min_size=n, max_size=n), min_size=0, max_size=7),
        )
    )
)
def test_feasibility_soundness(data):
    v, rows = data
    _check_result(conic_feasibility(v, rows), v, rows)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_extreme_rays_convex(n):
    rep = verify_extreme_rays("positive_convex", n)
    assert len(rep.labels) == 2 * n - 2 and rep.all_extreme


def test_extreme_rays_examples():
    assert verify_extreme_rays("positive_concave", 4).extreme == (True,) * 4
    assert verify_extreme_rays("positive", 3).extreme_count == 3
    for kind in ("increasing_concave", "decreasing_concave"):
        for n in range(1, 8):
            assert verify_extreme_rays(kind, n).all_extreme


def test_scale_limit():
    with pytest.raises(ScaleLimitExceeded):
        verify_extreme_rays("positive", 9)
    assert verify_extreme_rays("positive", 9, max_n=9).all_extreme


def test_sampling_contract():
    assert compose("positive_concave", 3, vec(0, 1, 0)) == vec(0, 1, 0)
    assert compose("positive_convex", 4, (F(0),) * 6) == vec(0, 0, 0, 0)
    assert sample_in_cone("positive_concave", 7, 42) == sample_in_cone("positive_concave", 7, 42)
    lam = sample_coefficients("increasing_convex", 6, 3)
    assert all(x.denominator in (1, 2, 4, 8, 16, 32, 64) and 0 <= x <= 1 for x in lam)


def test_sampling_golden():
    # portable stream: random.Random(seed), one randint(0, 64) per generator
    import random

    rng = random.Random(2024)
    want = tuple(F(rng.randint(0, 64), 64) for _ in range(4))
    assert sample_coefficients("positive_concave", 4, 2024) == want


def test_brute_force_examples():
    assert brute_force_membership(vec(1, 0, 1), "positive_convex")
    assert not brute_force_membership(vec(1, 0, 1), "positive_concave")
    assert brute_force_membership(vec(0, 1, 1), "increasing_concave")


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(list(ConeKind)), st.integers(1, 10), seeds)
def test_oracle_agreement(kind, n, seed):
    inside = sample_in_cone(kind, n, seed)
    outside = sample_outside_cone(kind, n, seed)
    assert membership(inside, kind).in_cone and brute_force_membership(inside, kind)
    assert not membership(outside, kind).in_cone and not brute_force_membership(outside, kind)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), seeds, st.booleans())
def test_concave_basis_feasibility_matches_predicates(n, seed, outside):
    kind = ConeKind.POSITIVE_CONCAVE
    v = sample_outside_cone(kind, n, seed) if outside else sample_in_cone(kind, n, seed)
    res = conic_feasibility(v, generators(kind, n))
    assert res.feasible == brute_force_membership(v, kind) == (not outside)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([ConeKind.INCREASING_CONCAVE, ConeKind.DECREASING_CONCAVE]), st.integers(1, 7), seeds)
def test_monotone_concave_family_generates_cone(kind, n, seed):
    # perturbed points stay outside, in-cone points are reachable by the solver
    assert conic_feasibility(sample_in_cone(kind, n, seed), generators(kind, n)).feasible
    assert not conic_feasibility(sample_outside_cone(kind, n, seed), generators(kind, n)).feasible


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([ConeKind.INCREASING_CONCAVE, ConeKind.DECREASING_CONCAVE]),
       st.lists(st.integers(-4, 4), min_size=1, max_size=6))
def test_monotone_concave_family_matches_predicates(kind, v):
    # arbitrary integer vectors: generated iff they satisfy the inequalities
    assert conic_feasibility(v, generators(kind, len(v))).feasible == brute_force_membership(v, kind)
