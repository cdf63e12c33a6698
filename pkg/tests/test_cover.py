import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lamina.cover import (NONSEPARATING_DOUBLED, SEPARATING, LiftTable, LiftTableMiss,
                          TABLE_PATH, base_decomposition, build_lift_table, classify_lift,
                          cover_model, deck_check, lambda_table, lift_table, lifted_intersection,
                          transfer, verify_cover_scaling)
from lamina.dtcoord import enumerate_curves, pants_curve, vector, zero
from lamina.isect import geometric_intersection

BASE = base_decomposition()
POOL4 = enumerate_curves(BASE, 4)


def test_two_sheeted_graph_is_two_holed_torus():
    m = cover_model()
    # discs for the lifted branch points fill in; two boundary circles remain
    assert m.graph.euler_characteristic() == 0
    assert len(m.spine.kept_faces) == 2


def test_classification_examples():
    g0, g1 = pants_curve(BASE, 0), pants_curve(BASE, 1)
    c = classify_lift(g0)
    assert (c.enclosed_parity, c.lift_type, c.weight) == (0, NONSEPARATING_DOUBLED, 2)
    c = classify_lift(g1)
    assert (c.enclosed_parity, c.lift_type, c.weight) == (1, SEPARATING, 1)
    # encloses branch points 0 and 3
    c = classify_lift(vector(BASE, (2, 0), (2, 0)))
    assert c.lift_type == NONSEPARATING_DOUBLED


def test_lambda_table():
    assert lambda_table(SEPARATING, SEPARATING).value == 1
    assert lambda_table(NONSEPARATING_DOUBLED, NONSEPARATING_DOUBLED).value == 1
    assert lambda_table(SEPARATING, NONSEPARATING_DOUBLED).value == 2
    assert lambda_table(NONSEPARATING_DOUBLED, SEPARATING).value == Fraction(1, 2)


def test_lambda_ratio_matches_lift_weights():
    # ratio of lifted-to-base intersections with a fixed separating-type test curve
    probe = pants_curve(BASE, 1)
    for c in POOL4:
        i = geometric_intersection(c, probe)
        if i == 0:
            continue
        lifted = geometric_intersection(transfer(c), transfer(probe))
        assert Fraction(lifted, 2 * i) == 1
        assert Fraction(classify_lift(c).weight, 1) in (1, 2)


def test_transfer_examples():
    top = transfer(zero(BASE))
    assert top.is_zero
    g0 = pants_curve(BASE, 0)
    t = transfer(g0)
    (target, w), = [lift_table().entries[g0.key]]
    assert w == 2 and t == target.scaled(2)
    sep = pants_curve(BASE, 1)
    assert transfer(sep.scaled(3)) == transfer(sep).scaled(3)


def test_transfer_is_additive_on_multicurves():
    g0, g1 = pants_curve(BASE, 0), pants_curve(BASE, 1)
    for a, b in [(g0, g1), (g0, vector(BASE, (0, 0), (2, 0))), (g1, vector(BASE, (2, 0), (0, 0)))]:
        assert geometric_intersection(a, b) == 0
        assert transfer(a + b) == transfer(a) + transfer(b)


def test_table_miss():
    small = LiftTable.from_json(build_lift_table(2, anchor_norm=2))
    far = next(c for c in enumerate_curves(BASE, 5) if c.key not in small.entries)
    with pytest.raises(LiftTableMiss):
        transfer(far, small)


def test_scaling_identity_at_bound_four():
    rep = verify_cover_scaling(POOL4)
    assert rep.ok and rep.pairs == len(POOL4) * (len(POOL4) + 1) // 2
    obj = rep.to_json()
    assert obj["lambda_table"]["Separating,NonseparatingDoubled"] == 2


def test_lifted_graph_scaling_without_the_table():
    for a in POOL4:
        for b in POOL4:
            w = classify_lift(a).weight * classify_lift(b).weight
            assert w * lifted_intersection(a, b) == 2 * geometric_intersection(a, b)


def test_deck_symmetry_fixes_every_lift():
    assert all(deck_check(c) for c in enumerate_curves(BASE, 6))


def test_anchors_determine_larger_classes():
    # classes of norm 6..8 are matched against the norm <= 5 anchors alone;
    # every pair among them is then a genuine check of the identity
    table = lift_table()
    assert table.bound >= 8
    late = [c for c in enumerate_curves(BASE, 7) if c.norm >= 6]
    rep = verify_cover_scaling(late, table)
    assert rep.ok


def test_serialized_table_is_current():
    stored = json.loads(TABLE_PATH.read_text())
    assert stored["schema_version"] == 1
    fresh = build_lift_table(stored["bound"], stored["anchor_norm"])
    assert fresh == stored


@given(st.sampled_from(POOL4), st.sampled_from(POOL4))
def test_weight_dichotomy_matches_parity(a, b):
    for c in (a, b):
        cls = classify_lift(c)
        assert cls.weight == (1 if cls.enclosed_parity else 2)
