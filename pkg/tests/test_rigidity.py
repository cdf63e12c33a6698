from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lamina.dtcoord import InvalidVector, enumerate_curves, pants_curve, vector, zero
from lamina.isect import geometric_intersection
from lamina.rigidity import (ANOMALY, DISJOINT, INTERSECTING, PoolTooSmall, cutting_system,
                             disjointness_graph, exact_rank, intersection_vector,
                             p_alpha_member, projectivize, twist_invariance_audit,
                             verify_lemma2, zero_set_rank)
from conftest import decomposition

S12 = decomposition(1, 2)
POOL12 = enumerate_curves(S12, 3)


def test_exact_rank():
    assert exact_rank([]) == 0
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[Fraction(1, 2), 0], [0, 3], [1, 1]]) == 2


def test_zero_set_rank_examples(s11, s12):
    g0, g1 = pants_curve(s12, 0), pants_curve(s12, 1)
    assert zero_set_rank([g0], 4).rank == 3
    assert zero_set_rank([g0, g1], 4).rank == 2
    assert zero_set_rank([pants_curve(s11, 0)], 4).rank == 1


def test_zero_set_rank_rejects_mixed_surfaces(s11, s12):
    with pytest.raises(ValueError):
        zero_set_rank([pants_curve(s11, 0), pants_curve(s12, 0)], 2)
    with pytest.raises(ValueError):
        zero_set_rank([], 2)


def test_zero_set_rank_is_monotone_in_bound(s12):
    g0 = pants_curve(s12, 0)
    ranks = [zero_set_rank([g0], b).rank for b in range(1, 5)]
    assert ranks == sorted(ranks) and ranks[-1] == 3


@pytest.mark.parametrize("g,r,bound", [(1, 2, 4), (0, 5, 4)])
def test_lemma2_verdicts(g, r, bound):
    pd = decomposition(g, r)
    g0, g1 = pants_curve(pd, 0), pants_curve(pd, 1)
    res = verify_lemma2(g0, g1, bound)
    assert (res.verdict, res.disjoint, res.rank, res.expected) == (DISJOINT, True, 2, "=2")
    cross = next(c for c in enumerate_curves(pd, bound) if geometric_intersection(c, g0))
    res = verify_lemma2(g0, cross, bound)
    assert res.verdict == INTERSECTING and res.rank <= 1
    assert set(res.to_json()) == {"verdict", "disjoint", "rank", "expected", "dimension"}


def test_lemma2_input_errors(s11, s12):
    g0 = pants_curve(s12, 0)
    with pytest.raises(ValueError):
        verify_lemma2(g0, g0, 3)
    a = pants_curve(s11, 0)
    with pytest.raises(ValueError):
        verify_lemma2(a, vector(s11, (1, 0)), 3)


def test_lemma2_has_no_anomalies_on_two_holed_torus():
    for i, a in enumerate(POOL12):
        for b in POOL12[i + 1:]:
            assert verify_lemma2(a, b, 4).verdict != ANOMALY


def test_cutting_system_examples(s11, s12):
    a = pants_curve(s11, 0)
    assert cutting_system(a, enumerate_curves(s11, 3)) == [a]
    pool = enumerate_curves(s12, 4)
    for i in range(2):
        alpha = pants_curve(s12, i)
        system = cutting_system(alpha, pool, 4)
        assert system[0] == alpha
        assert zero_set_rank(system, 4).rank == 1
        assert all(geometric_intersection(alpha, c) == 0 for c in system)


def test_cutting_system_pool_too_small(s12):
    g0 = pants_curve(s12, 0)
    with pytest.raises(PoolTooSmall):
        cutting_system(g0, [g0], 4)


def test_projective_membership(s12):
    g0 = pants_curve(s12, 0)
    pm = projectivize(g0.scaled(3))
    assert p_alpha_member(pm, pants_curve(s12, 1))
    cross = next(c for c in POOL12 if geometric_intersection(c, g0))
    assert not p_alpha_member(projectivize(cross), g0)
    with pytest.raises(ValueError):
        projectivize(zero(s12))


@given(st.sampled_from(POOL12), st.integers(1, 6))
def test_projectivize_is_scale_invariant(c, k):
    assert projectivize(c) == projectivize(c.scaled(k))
    assert projectivize(c).vector.norm == 1


def test_disjointness_graph(s11, s12):
    g = disjointness_graph([pants_curve(s12, 0), pants_curve(s12, 1)])
    assert g.edges == [(0, 1)]
    dot = g.to_dot()
    assert dot.startswith("graph disjointness {") and "v0 -- v1;" in dot
    assert dot.index("v0 [") < dot.index("v1 [")
    assert disjointness_graph(enumerate_curves(s11, 4)).edges == []


def test_twist_audit_is_clean():
    out = twist_invariance_audit(POOL12, 0, range(-3, 4))
    assert out["violations"] == [] and out["checked"] == 7 * len(POOL12) * (len(POOL12) + 1) // 2


def test_intersection_vector(s12):
    assert intersection_vector(zero(s12), POOL12) == (0,) * len(POOL12)
    c = POOL12[3]
    assert intersection_vector(c.scaled(2), POOL12) == tuple(2 * x for x in intersection_vector(c, POOL12))
    with pytest.raises(ValueError):
        intersection_vector(c, [])
    with pytest.raises(InvalidVector):
        intersection_vector(vector(s12, (0, 0), (1, 0)), POOL12)
