from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from lamina.dtcoord import (DTVector, IndexOutOfRange, InvalidVector, canonicalize,
                            coordinate_intersection, decompose_multicurve, enumerate_curves,
                            from_json, integral_vectors, is_connected, mod2_class,
                            pants_curve, twist, validate_integral, vector, zero)

from conftest import decomposition


def test_validation_reports(s11, s04):
    assert "parity" in validate_integral(vector(s04, (1, 0)))
    assert validate_integral(vector(s11, (1, 0))) is None
    assert "folding" in validate_integral(vector(s11, (0, -2)))
    assert "integrality" in validate_integral(vector(s11, (Fraction(1, 2), 0)))
    assert "non-negativity" in validate_integral(vector(s11, (-2, 0)))


def test_canonicalize(s11, s12):
    assert canonicalize(vector(s11, (0, -3))) == vector(s11, (0, 3))
    assert canonicalize(vector(s11, (2, -1))) == vector(s11, (2, -1))
    assert canonicalize(zero(s12)) == zero(s12)
    v = vector(s12, (0, -2), (1, -1))
    assert canonicalize(canonicalize(v)) == canonicalize(v)


def test_decompose_examples(s11):
    # two parallel strands of the dual curve; single (2,1) strand pair is one loop
    (cls, k), = decompose_multicurve(vector(s11, (2, 0))).components
    assert cls == vector(s11, (1, 0)) and k == 2
    (cls, k), = decompose_multicurve(vector(s11, (0, 3))).components
    assert cls == pants_curve(s11, 0) and k == 3
    (cls, k), = decompose_multicurve(vector(s11, (2, 1))).components
    assert cls == vector(s11, (2, 1)) and k == 1


def test_decompose_rejects_invalid(s04):
    with pytest.raises(InvalidVector):
        decompose_multicurve(vector(s04, (1, 0)))


@given(st.integers(0, 12), st.integers(-12, 12))
def test_torus_decomposition_matches_gcd(m, t):
    pd = decomposition(1, 1)
    if m == 0:
        t = abs(t)
    if m == 0 and t == 0:
        return
    k = gcd(m, t)
    (cls, mult), = decompose_multicurve(vector(pd, (m, t))).components
    assert mult == k and cls == vector(pd, (m // k, t // k))


@given(st.integers(0, 6), st.integers(-10, 10))
def test_four_holed_sphere_decomposition_matches_gcd(h, t):
    pd = decomposition(0, 4)
    if h == 0:
        t = abs(t)
    if h == 0 and t == 0:
        return
    k = gcd(h, t)
    (cls, mult), = decompose_multicurve(vector(pd, (2 * h, t))).components
    assert mult == k and cls == vector(pd, (2 * h // k, t // k))


def test_enumeration_examples(s11, s04):
    got = {(int(v.weights[0]), int(v.twists[0])) for v in enumerate_curves(s11, 2)}
    assert got == {(0, 1), (1, 0), (1, 1), (1, -1)}
    got = {(int(v.weights[0]), int(v.twists[0])) for v in enumerate_curves(s04, 2)}
    assert got == {(0, 1), (2, 0)}
    # planar surfaces: only the pants curves have norm 1
    for g, r in [(0, 4), (0, 5), (0, 6)]:
        pd = decomposition(g, r)
        assert {c.key for c in enumerate_curves(pd, 1)} == \
            {pants_curve(pd, i).key for i in range(pd.curve_count)}
    # a self-glued handle pants also admits its weight-one dual curve
    for g, r in [(1, 2), (2, 0), (1, 3)]:
        pd = decomposition(g, r)
        K = pd.curve_count
        duals = {vector(pd, *[(1 if j == c else 0, 0) for j in range(K)]).key
                 for c, ((p, _), (q, _)) in enumerate(pd.gluing) if p == q}
        assert {c.key for c in enumerate_curves(pd, 1)} == \
            {pants_curve(pd, i).key for i in range(K)} | duals


def test_enumeration_counts_frozen():
    # counts from an exhaustive scan cross-checked with the torus model
    assert len(enumerate_curves(decomposition(1, 1), 6)) == 24
    assert len(enumerate_curves(decomposition(0, 4), 6)) == 12
    assert len(enumerate_curves(decomposition(1, 2), 4)) == 23
    assert len(enumerate_curves(decomposition(0, 5), 4)) == 13
    assert len(enumerate_curves(decomposition(2, 0), 3)) == 22


@pytest.mark.parametrize("g,r,b", [(1, 2, 3), (0, 5, 3), (2, 0, 2)])
def test_enumeration_sound_and_complete(g, r, b):
    pd = decomposition(g, r)
    cs = enumerate_curves(pd, b)
    for c in cs:
        (cls, k), = decompose_multicurve(c).components
        assert k == 1 and cls == c
    wider = {c.key for c in enumerate_curves(pd, b + 1) if c.norm <= b}
    assert wider == {c.key for c in cs}
    assert cs == sorted(cs, key=lambda v: (v.norm, v.weights, v.twists))


def test_twist_examples(s11):
    assert twist(vector(s11, (1, 0)), 0, 1) == vector(s11, (1, 1))
    assert twist(vector(s11, (0, 5)), 0, 7) == vector(s11, (0, 5))
    assert twist(vector(s11, (2, 1)), 0, -1) == vector(s11, (2, -1))
    with pytest.raises(IndexOutOfRange):
        twist(vector(s11, (1, 0)), 1, 1)


def test_coordinate_intersection(s12):
    v = vector(s12, (2, 0), (3, 1))
    assert coordinate_intersection(v, 1) == 3
    assert coordinate_intersection(pants_curve(s12, 1), 1) == 0
    assert coordinate_intersection(twist(v, 1, 4), 1) == 3
    assert coordinate_intersection(twist(v, 0, 4), 1) == 3
    with pytest.raises(IndexOutOfRange):
        coordinate_intersection(v, 2)


def test_mod2_examples(s05, s12):
    # first chain curve encloses the first two boundary components
    assert mod2_class(pants_curve(s05, 0)) == (1, 1, 0, 0)
    assert mod2_class(pants_curve(s05, 1)) == (1, 1, 1, 0)
    # separating stem curve on the two-holed torus is null-homologous mod 2
    assert mod2_class(pants_curve(s12, 1)) == (0, 0, 0)
    assert mod2_class(pants_curve(s12, 0)) == (0, 0, 1)
    assert mod2_class(vector(s12, (1, 0), (0, 0))) == (0, 1, 0)


def test_json_round_trip(s12):
    v = DTVector(s12, (Fraction(1, 2), 3), (Fraction(-7, 3), 0))
    obj = v.to_json()
    assert obj["weights"] == ["1/2", 3] and obj["twists"] == ["-7/3", 0]
    assert from_json(obj) == v


# random valid vectors on the two-holed torus and five-holed sphere
def valid_vectors(g, r, bound=6):
    pool = integral_vectors(decomposition(g, r), bound)
    return st.sampled_from(pool)


@given(st.one_of(valid_vectors(1, 2), valid_vectors(0, 5), valid_vectors(1, 3, 4)))
def test_reassembly(v):
    mc = decompose_multicurve(v)
    assert mc.reassemble(v.decomposition) == v
    keys = [c.key for c, _ in mc.components]
    assert len(keys) == len(set(keys))
    for c, _ in mc.components:
        assert is_connected(c)


@given(valid_vectors(1, 2), st.integers(1, 4))
def test_scaling_multiplies_multiplicities(v, k):
    a = decompose_multicurve(v).components
    b = decompose_multicurve(v.scaled(k)).components
    assert [(c.key, m * k) for c, m in a] == [(c.key, m) for c, m in b]


@given(valid_vectors(1, 2), st.integers(0, 1), st.integers(-4, 4), st.integers(-4, 4))
def test_twist_group_action(v, i, a, b):
    if v.weights[i] == 0:
        assert twist(v, i, a) == v
        return
    assert twist(twist(v, i, a), i, b) == twist(v, i, a + b)
    assert twist(twist(v, i, a), i, -a) == v


@given(valid_vectors(1, 2))
def test_doubled_vectors_are_null_mod_two(v):
    assert set(mod2_class(v.scaled(2))) <= {0}
