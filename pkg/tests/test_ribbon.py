from hypothesis import given, strategies as st

from lamina.ribbon import canonical_cycle, invert, reduce_cyclic
from lamina.strands import dual_graph, outer_faces

from conftest import decomposition


def test_reduction_removes_backtracks():
    assert reduce_cyclic([0, 2, 3, 4]) == [0, 4]
    assert reduce_cyclic([1, 2, 4, 0]) == [2, 4]
    assert reduce_cyclic([6, 7]) == []


@given(st.lists(st.integers(0, 11), max_size=12))
def test_reduction_is_idempotent(w):
    r = reduce_cyclic(w)
    assert reduce_cyclic(r) == r


@given(st.lists(st.integers(0, 11), min_size=1, max_size=10), st.integers(0, 9))
def test_canonical_cycle_ignores_rotation_and_direction(w, k):
    k %= len(w)
    assert canonical_cycle(w[k:] + w[:k]) == canonical_cycle(w)
    assert canonical_cycle(invert(w)) == canonical_cycle(w)


def test_dual_graph_is_a_cut_system():
    for g, r in [(1, 1), (0, 4), (1, 2), (0, 5), (2, 0), (2, 1), (3, 0)]:
        pd = decomposition(g, r)
        G = dual_graph(pd)
        # boundary circles are faces, so the closed-up Euler characteristic is 2 - 2g
        assert G.euler_characteristic() == 2 - 2 * g
        assert len(outer_faces(pd)) == r
        assert all(len(f) == 2 for f in outer_faces(pd))
