"""Realization of integral Dehn-Thurston vectors as strand diagrams.

Cut system.  Each pants ``p`` is the double of a hexagon: a front hexagon
``F_p`` and a back hexagon ``B_p`` glued along three seams, seam ``s``
joining slot ``s`` to slot ``s + 1``.  The boundary circle of slot ``k``
carries a coordinate ``theta`` in ``[0, 1)`` increasing along the boundary
orientation induced from ``p``; seam ``k - 1`` ends at ``theta = 0`` and
seam ``k`` at ``theta = 1/2``, so ``(0, 1/2)`` is the front half.  Along a
pants curve the two circles are identified by ``theta_B = -theta_A`` with
seam endpoints matched, which glues front halves to back halves.

Dual ribbon graph.  Vertices ``F_p = 2p`` and ``B_p = 2p + 1``.  Seam
``(p, s)`` is edge ``3p + s`` from ``F_p`` to ``B_p``.  Pants curve ``c``
is cut into two arcs: edge ``3n + 2c`` crosses the half ``theta_A in
(0, 1/2)`` from ``F`` of the A pants to ``B`` of the B pants, edge
``3n + 2c + 1`` crosses the other half from ``B`` of A to ``F`` of B.

Arcs.  Inside a pants with slot weights ``x`` the arc counts are
``(x_i + x_j - x_k) / 2`` when the weights satisfy the triangle
inequalities; otherwise the long slot ``i`` carries ``(x_i - x_j - x_k)/2``
arcs returning to itself plus ``x_j`` and ``x_k`` arcs to the other slots.
Arcs between distinct slots stay in the front hexagon.  An arc returning
to slot ``i`` leaves from the front half, crosses seam ``i + 1`` and comes
back on the back half.  On the front half of slot ``i`` the endpoints are
grouped, in increasing ``theta``: arcs to slot ``i - 1``, arcs returning to
``i``, arcs to slot ``i + 1``.

Twist.  With ``m`` strands crossing a pants curve, order the A-side
endpoints ``P_0 < ... < P_{m-1}`` and the B-side endpoints, read in A
coordinates, ``Q_0 < ... < Q_{m-1}``.  Strand ``j`` runs through a collar
on the A side from ``P_j`` to the lift ``Q_{j+t}`` (index taken mod ``m``,
one extra turn per wrap), crossing the seams whose rays it passes.  A
positive twist therefore turns strands in the direction of increasing
``theta``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import floor

from .ribbon import RibbonGraph
from .surface import PantsDecomposition

HALF = Fraction(1, 2)


def seam_edge(p: int, s: int) -> int:
    return 3 * p + s % 3


def arc_edge(pd: PantsDecomposition, c: int, h: int) -> int:
    return 3 * pd.pants_count + 2 * c + h


@lru_cache(maxsize=None)
def dual_graph(pd: PantsDecomposition) -> RibbonGraph:
    n = pd.pants_count
    n_edges = 3 * n + 2 * pd.curve_count
    tails = [0] * (2 * n_edges)
    for p in range(n):
        for s in range(3):
            e = seam_edge(p, s)
            tails[2 * e] = 2 * p
            tails[2 * e + 1] = 2 * p + 1
    for c, ((pa, _), (pb, _)) in enumerate(pd.gluing):
        e0, e1 = arc_edge(pd, c, 0), arc_edge(pd, c, 1)
        tails[2 * e0], tails[2 * e0 + 1] = 2 * pa, 2 * pb + 1
        tails[2 * e1], tails[2 * e1 + 1] = 2 * pa + 1, 2 * pb

    def beta(p, k, front):
        kind, c, side = pd.slot_role((p, k))
        if kind != "curve":
            return None
        if front:
            return 2 * arc_edge(pd, c, 0) if side == 0 else 2 * arc_edge(pd, c, 1) + 1
        return 2 * arc_edge(pd, c, 1) if side == 0 else 2 * arc_edge(pd, c, 0) + 1

    rotation = {}
    for p in range(n):
        front = []
        for k in range(3):
            front += [beta(p, k, True), 2 * seam_edge(p, k)]
        back = []
        for k, s in ((0, 2), (2, 1), (1, 0)):
            back += [beta(p, k, False), 2 * seam_edge(p, s) + 1]
        rotation[2 * p] = [d for d in front if d is not None]
        rotation[2 * p + 1] = [d for d in back if d is not None]
    return RibbonGraph(tails, rotation)


def outer_faces(pd: PantsDecomposition) -> list[list[int]]:
    """Faces of the dual graph around the boundary components, in order."""
    faces = dual_graph(pd).faces()
    out = []
    for (p, k) in pd.outer:
        want = {seam_edge(p, k - 1), seam_edge(p, k)}
        match = [f for f in faces if len(f) == 2 and {d >> 1 for d in f} == want]
        if len(match) != 1:
            raise RuntimeError(f"boundary face of slot {(p, k)} not found")
        out.append(match[0])
    return out


def pants_curve_walk(pd: PantsDecomposition, c: int) -> list[int]:
    """Closed walk once around pants curve ``c`` in the A-side collar."""
    (p, k), _ = pd.gluing[c]
    return [2 * seam_edge(p, k), 2 * seam_edge(p, k - 1) + 1]


def arc_counts(x: tuple[int, int, int]) -> dict[tuple[int, int], int]:
    """Arc counts ``n[(i, j)]`` (``i <= j``) realizing slot weights ``x``."""
    out = {}
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        if x[i] > x[j] + x[k]:
            out[(i, i)] = (x[i] - x[j] - x[k]) // 2
            out[tuple(sorted((i, j)))] = x[j]
            out[tuple(sorted((i, k)))] = x[k]
            out[tuple(sorted((j, k)))] = 0
            return out
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        out[tuple(sorted((i, j)))] = (x[i] + x[j] - x[k]) // 2
    return out


Port = tuple[int, int, int, int]  # (pants, slot, half, index); half 0 front, 1 back


@dataclass
class Component:
    weights: tuple[int, ...]
    twists: tuple[int, ...]
    walk: list[int]


@dataclass
class StrandDiagram:
    """Arcs and gluings realizing one integral vector.

    ``arcs[u] = (v, route)`` joins port ``u`` to port ``v`` inside a pants;
    ``glue[u] = (v, route)`` joins ports across a pants curve.  Routes are
    the dual-graph darts traversed.  ``permutations[c]`` sends A-side strand
    index ``j`` to the B-side index it is glued to.
    """

    decomposition: PantsDecomposition
    weights: tuple[int, ...]
    twists: tuple[int, ...]
    ports: dict[tuple[int, int], list[Port]] = field(default_factory=dict)
    theta: dict[Port, Fraction] = field(default_factory=dict)
    arcs: dict[Port, tuple[Port, list[int]]] = field(default_factory=dict)
    glue: dict[Port, tuple[Port, list[int]]] = field(default_factory=dict)
    permutations: dict[int, list[int]] = field(default_factory=dict)
    a_order: dict[int, list[Port]] = field(default_factory=dict)
    b_order: dict[int, list[Port]] = field(default_factory=dict)

    def endpoint_count(self, c: int) -> tuple[int, int]:
        return len(self.a_order[c]), len(self.b_order[c])

    def components(self) -> list[Component]:
        return _trace(self)


def build_diagram(pd: PantsDecomposition, weights, twists) -> StrandDiagram:
    weights = tuple(int(w) for w in weights)
    twists = tuple(int(t) for t in twists)
    dg = StrandDiagram(pd, weights, twists)
    for p in range(pd.pants_count):
        x = []
        for k in range(3):
            c = pd.curve_of((p, k))
            x.append(0 if c is None else weights[c])
        counts = arc_counts(tuple(x))
        groups = {}
        for i in range(3):
            prev_, next_ = (i - 1) % 3, (i + 1) % 3
            groups[i] = (counts[tuple(sorted((i, prev_)))], counts.get((i, i), 0),
                         counts[tuple(sorted((i, next_)))])
        for i in range(3):
            a, ii, b = groups[i]
            nf, nb = a + ii + b, ii
            front = [(p, i, 0, f) for f in range(nf)]
            back = [(p, i, 1, f) for f in range(nb)]
            dg.ports[(p, i)] = front + back
            for f, port in enumerate(front):
                dg.theta[port] = Fraction(f + 1, nf + 1) * HALF
            for f, port in enumerate(back):
                dg.theta[port] = HALF + Fraction(f + 1, nb + 1) * HALF
        for i in range(3):
            j = (i + 1) % 3
            a_i, ii, b_i = groups[i]
            a_j = groups[j][0]
            assert b_i == a_j
            # arcs from slot i to slot i+1, nested around seam i
            for u in range(b_i):
                pu = (p, i, 0, a_i + ii + u)
                pv = (p, j, 0, b_i - 1 - u)
                dg.arcs[pu] = (pv, [])
                dg.arcs[pv] = (pu, [])
            # arcs returning to slot i, crossing seam i+1
            d = 2 * seam_edge(p, i + 1)
            for q in range(ii):
                pu = (p, i, 0, a_i + q)
                pv = (p, i, 1, ii - 1 - q)
                dg.arcs[pu] = (pv, [d])
                dg.arcs[pv] = (pu, [d ^ 1])
    for c, (sa, sb) in enumerate(pd.gluing):
        _glue_curve(dg, c, sa, sb)
    return dg


def _glue_curve(dg: StrandDiagram, c: int, sa, sb) -> None:
    pd = dg.decomposition
    m, t = dg.weights[c], dg.twists[c]
    p, k = sa
    q, _ = sb
    P = sorted(dg.ports[sa], key=lambda u: dg.theta[u])
    Q = sorted(dg.ports[sb], key=lambda u: (1 - dg.theta[u]) % 1)
    if len(P) != m or len(Q) != m:
        raise RuntimeError(f"endpoint count mismatch on curve {c}")
    dg.a_order[c], dg.b_order[c] = P, Q
    dg.permutations[c] = [(j + t) % m for j in range(m)] if m else []
    e0, e1 = arc_edge(pd, c, 0), arc_edge(pd, c, 1)
    for j in range(m):
        lifted = j + t
        wrap, idx = divmod(lifted, m)
        start = dg.theta[P[j]]
        end = (1 - dg.theta[Q[idx]]) % 1 + wrap
        route = []
        in_front = start < HALF
        # rays at multiples of 1/2 strictly between start and end
        lo, hi = (start, end) if end > start else (end, start)
        rays = [Fraction(r, 2) for r in range(floor(2 * lo) + 1, floor(2 * hi) + 1)
                if lo < Fraction(r, 2) < hi]
        if end < start:
            rays.reverse()
        for ray in rays:
            s = seam_edge(p, k) if ray % 1 == HALF else seam_edge(p, k - 1)
            route.append(2 * s if in_front else 2 * s + 1)
            in_front = not in_front
        assert in_front == ((end % 1) < HALF)
        route.append(2 * e0 if in_front else 2 * e1)
        dg.glue[P[j]] = (Q[idx], route)
        dg.glue[Q[idx]] = (P[j], [d ^ 1 for d in reversed(route)])


def _trace(dg: StrandDiagram) -> list[Component]:
    pd = dg.decomposition
    K = pd.curve_count
    a_index = {}
    b_index = {}
    for c in range(K):
        for j, u in enumerate(dg.a_order[c]):
            a_index[u] = (c, j)
        for j, u in enumerate(dg.b_order[c]):
            b_index[u] = (c, j)
    seen = set()
    comps = []
    for start in sorted(dg.arcs):
        if start in seen:
            continue
        walk: list[int] = []
        crossings: list[tuple[int, int]] = []  # (curve, A-side strand index)
        u = start
        while True:
            seen.add(u)
            v, route = dg.arcs[u]
            walk += route
            seen.add(v)
            w, route = dg.glue[v]
            walk += route
            if v in a_index:
                crossings.append(a_index[v])
            else:
                crossings.append(a_index[w])
            u = w
            if u == start:
                break
        weights = [0] * K
        for c, _ in crossings:
            weights[c] += 1
        twists = [0] * K
        for c in range(K):
            js = sorted(j for cc, j in crossings if cc == c)
            if not js:
                continue
            m = dg.weights[c]
            ks = sorted((j + dg.twists[c]) % m for j in js)
            k_pos = {kk: b for b, kk in enumerate(ks)}
            mm = len(js)
            offsets = set()
            for a, j in enumerate(js):
                wrap, kk = divmod(j + dg.twists[c], m)
                offsets.add(k_pos[kk] + mm * wrap - a)
            if len(offsets) != 1:
                raise RuntimeError("inconsistent component twist")
            twists[c] = offsets.pop()
        comps.append(Component(tuple(weights), tuple(twists), walk))
    for c in range(K):
        if dg.weights[c] == 0:
            for _ in range(dg.twists[c]):
                w = [0] * K
                t = [0] * K
                t[c] = 1
                comps.append(Component(tuple(w), tuple(t), pants_curve_walk(pd, c)))
    return comps
