import itertools

import pytest
from hypothesis import given, strategies as st

from lamina.dtcoord import (InvalidVector, enumerate_curves, handle_curves, pants_curve,
                            twist, vector, DTVector)
from lamina.isect import (ModelOverflow, filling_check, geometric_intersection,
                          intersection_table, is_disjoint, set_crossing_limit, DEFAULT_LIMIT)

from conftest import decomposition


def test_torus_examples(s11):
    assert geometric_intersection(vector(s11, (1, 0)), vector(s11, (1, 1))) == 1
    assert geometric_intersection(vector(s11, (1, 1)), vector(s11, (1, -1))) == 2
    assert not is_disjoint(vector(s11, (1, 0)), vector(s11, (0, 1)))


def test_four_holed_sphere_factor_two(s04):
    # (2,0) and (0,1) are the pair (1,0), (0,1); their curves meet twice
    assert geometric_intersection(vector(s04, (2, 0)), vector(s04, (0, 1))) == 2


def test_self_intersection_vanishes(s12):
    for c in enumerate_curves(s12, 4):
        assert geometric_intersection(c, c) == 0


def test_disjointness_definition(s12):
    g0, g1 = pants_curve(s12, 0), pants_curve(s12, 1)
    assert is_disjoint(g0, g1)
    assert not is_disjoint(g0, g0)


def test_coordinate_consistency(s12, s05):
    for pd in (s12, s05):
        for c in enumerate_curves(pd, 4):
            for i in range(pd.curve_count):
                assert geometric_intersection(c, pants_curve(pd, i)) == c.weights[i]


def test_frozen_values(s12, s20):
    # cross-checked against the branched-cover model and mod-2 homology
    assert geometric_intersection(vector(s12, (0, 0), (2, 0)), vector(s12, (1, 0), (0, 0))) == 1
    assert geometric_intersection(vector(s12, (0, 0), (2, 1)), vector(s12, (0, 0), (2, -1))) == 4
    assert geometric_intersection(vector(s12, (1, 0), (2, 0)), vector(s12, (1, 1), (0, 0))) == 1
    assert geometric_intersection(vector(s20, (0, 0), (2, 0), (0, 0)),
                                  vector(s20, (1, 0), (0, 0), (0, 0))) == 1
    assert geometric_intersection(vector(s20, (0, 0), (2, 0), (0, 0)),
                                  vector(s20, (0, 0), (0, 1), (0, 0))) == 2


def test_invalid_input_rejected(s04):
    with pytest.raises(InvalidVector):
        geometric_intersection(vector(s04, (1, 0)), vector(s04, (0, 1)))


def test_overflow_guard(s12):
    a = vector(s12, (6, 5), (8, -7))
    b = vector(s12, (8, 3), (6, 9))
    try:
        set_crossing_limit(10)
        with pytest.raises(ModelOverflow):
            geometric_intersection(a, b)
    finally:
        set_crossing_limit(DEFAULT_LIMIT)


def test_filling_examples(s11, s12):
    pool = enumerate_curves(s11, 4)
    assert filling_check(vector(s11, (1, 0)), vector(s11, (0, 1)), pool)
    g0, g1 = pants_curve(s12, 0), pants_curve(s12, 1)
    res = filling_check(g0, g1, enumerate_curves(s12, 3))
    assert not res
    assert geometric_intersection(res.witness, g0) == geometric_intersection(res.witness, g1) == 0
    a, b = vector(s11, (1, 0)), vector(s11, (1, 1))
    assert filling_check(a, b, [a])


def test_table_is_symmetric(s12):
    t = intersection_table(enumerate_curves(s12, 3))
    n = len(t.classes)
    for i in range(n):
        assert t.values[i][i] == 0
        for j in range(n):
            assert t.values[i][j] == t.values[j][i]
    assert t.to_csv().count("\n") == n + 1


def pool(g, r, b):
    return st.sampled_from(enumerate_curves(decomposition(g, r), b))


surfaces = [(1, 2, 4), (0, 5, 4), (2, 0, 3), (1, 3, 3)]
pairs = st.one_of(*[st.tuples(pool(g, r, b), pool(g, r, b)) for g, r, b in surfaces])


@given(pairs, st.data())
def test_twist_invariance(ab, data):
    a, b = ab
    i = data.draw(st.integers(0, a.decomposition.curve_count - 1))
    k = data.draw(st.integers(-3, 3))
    assert geometric_intersection(twist(a, i, k), twist(b, i, k)) == geometric_intersection(a, b)


@given(pairs, st.integers(1, 4), st.integers(1, 4))
def test_symmetry_and_bilinearity(ab, k, l):
    a, b = ab
    i = geometric_intersection(a, b)
    assert geometric_intersection(b, a) == i
    assert geometric_intersection(a.scaled(k), b.scaled(l)) == k * l * i


@given(st.integers(0, 8), st.integers(-8, 8), st.integers(0, 8), st.integers(-8, 8))
def test_torus_formula(m1, t1, m2, t2):
    pd = decomposition(1, 1)
    if (m1 == 0 and t1 <= 0) or (m2 == 0 and t2 <= 0):
        return
    a, b = vector(pd, (m1, t1)), vector(pd, (m2, t2))
    assert geometric_intersection(a, b) == abs(m1 * t2 - m2 * t1)


@pytest.mark.parametrize("g,r,b", [(1, 2, 4), (2, 0, 3), (2, 1, 3)])
def test_parity_matches_homology(g, r, b):
    # I(a, b) mod 2 is the mod-2 algebraic intersection, computed in the
    # symplectic basis of handle curves and their weight-one duals
    pd = decomposition(g, r)
    K = pd.curve_count
    hs = handle_curves(pd)
    duals = {h: DTVector(pd, tuple(int(i == h) for i in range(K)), (0,) * K) for h in hs}
    for x, y in itertools.combinations(enumerate_curves(pd, b), 2):
        algebraic = sum(geometric_intersection(x, duals[h]) * y.weights[h]
                        + x.weights[h] * geometric_intersection(y, duals[h]) for h in hs)
        assert (geometric_intersection(x, y) - algebraic) % 2 == 0
