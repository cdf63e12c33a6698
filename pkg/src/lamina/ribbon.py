"""Ribbon graphs, closed walks on them, and linking of lifts.

Edges are numbered ``0..E-1``; edge ``e`` carries the darts ``2e`` and
``2e + 1``, with ``d ^ 1`` the reverse of dart ``d``.  A dart is attached
to its tail vertex, and each vertex lists its darts in counterclockwise
order.  A closed walk is a sequence of darts ``d_0, ..., d_{n-1}`` with
``head(d_i) == tail(d_{i+1})`` cyclically.
"""
from __future__ import annotations

from dataclasses import dataclass


class RibbonGraph:
    def __init__(self, tails: list[int], rotation: dict[int, list[int]]):
        # tails[d] is the tail vertex of dart d
        self.tails = list(tails)
        self.rotation = {v: list(ds) for v, ds in rotation.items()}
        self._pos = {}
        for v, ds in self.rotation.items():
            n = len(ds)
            for i, d in enumerate(ds):
                if self.tails[d] != v:
                    raise ValueError(f"dart {d} listed at vertex {v} but has tail {self.tails[d]}")
                self._pos[d] = (v, i, n)

    @property
    def darts(self) -> list[int]:
        return sorted(self._pos)

    def head(self, d: int) -> int:
        return self.tails[d ^ 1]

    def next_ccw(self, d: int) -> int:
        v, i, n = self._pos[d]
        return self.rotation[v][(i + 1) % n]

    def ccw_index(self, d: int) -> int:
        return self._pos[d][1]

    def faces(self) -> list[list[int]]:
        """Boundary walks of the faces, as orbits of ``d -> next_ccw(d ^ 1)``."""
        seen = set()
        out = []
        for d in self.darts:
            if d in seen:
                continue
            orbit = []
            x = d
            while x not in seen:
                seen.add(x)
                orbit.append(x)
                x = self.next_ccw(x ^ 1)
            out.append(orbit)
        return out

    def euler_characteristic(self) -> int:
        v = len([x for x in self.rotation.values() if x])
        e = len(self._pos) // 2
        return v - e + len(self.faces())

    def without_edge(self, e: int) -> "RibbonGraph":
        drop = {2 * e, 2 * e + 1}
        rot = {v: [d for d in ds if d not in drop] for v, ds in self.rotation.items()}
        return RibbonGraph(self.tails, rot)

    def cyclic_order(self, a: int, b: int, c: int) -> bool:
        """True if darts ``a, b, c`` at one vertex occur in that ccw order."""
        ia, ib, ic = self.ccw_index(a), self.ccw_index(b), self.ccw_index(c)
        return (ia < ib < ic) or (ib < ic < ia) or (ic < ia < ib)


def reduce_cyclic(walk: list[int]) -> list[int]:
    """Free and cyclic reduction (remove backtracks ``d, d ^ 1``)."""
    out: list[int] = []
    for d in walk:
        if out and out[-1] == d ^ 1:
            out.pop()
        else:
            out.append(d)
    i, j = 0, len(out) - 1
    while i < j and out[i] == out[j] ^ 1:
        i += 1
        j -= 1
    return out[i:j + 1]


def invert(walk: list[int]) -> list[int]:
    return [d ^ 1 for d in reversed(walk)]


def canonical_cycle(walk: list[int]) -> tuple[int, ...]:
    """Lexicographically least rotation of the walk or of its inverse."""
    best = None
    for w in (walk, invert(walk)):
        n = len(w)
        for i in range(n):
            cand = tuple(w[i:] + w[:i])
            if best is None or cand < best:
                best = cand
    return best if best is not None else ()


class ModelOverflow(RuntimeError):
    """Word lengths exceed the configured crossing budget."""


def linked_lifts(graph: RibbonGraph, a: list[int], b: list[int],
                 limit: int | None = None) -> int:
    """Number of linked pairs of lifts of two reduced cyclic walks.

    For primitive, non-commensurable classes on a surface whose fundamental
    group is free on the spine ``graph``, this is their geometric
    intersection number.  Lifts of the walks are geodesics in the universal
    cover tree; two lifts meet in a vertex or a finite segment and are linked
    when they cross there, which is read off the ccw order at the two ends.
    """
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return 0
    if limit is not None and n * m > limit:
        raise ModelOverflow(f"crossing budget exceeded: {n}*{m} > {limit}")
    if canonical_cycle(a) == canonical_cycle(b):
        return 0
    tail = graph.tails
    cap = n + m
    count = 0
    for sign, bb in ((1, b), (-1, invert(b))):
        for i in range(n):
            v = tail[a[i]]
            a_in = a[i - 1] ^ 1
            for j in range(m):
                if tail[bb[j]] != v:
                    continue
                b_in = bb[j - 1] ^ 1
                if a_in == b_in:
                    continue
                length = 0
                while length < cap and a[(i + length) % n] == bb[(j + length) % m]:
                    length += 1
                if length >= cap:
                    # shared axis: same class up to orientation
                    continue
                a_out = a[(i + length) % n]
                b_out = bb[(j + length) % m]
                if length == 0:
                    if sign < 0 or a_out == b_in or b_out == a_in:
                        continue
                    # four distinct darts: linked iff they alternate
                    if graph.cyclic_order(a_in, b_in, a_out) != graph.cyclic_order(a_in, b_out, a_out):
                        count += 1
                    continue
                s1 = graph.cyclic_order(a[i], a_in, b_in)
                back = a[(i + length - 1) % n] ^ 1
                s2 = graph.cyclic_order(back, a_out, b_out)
                if s1 == s2:
                    count += 1
    return count


@dataclass
class Spine:
    """A ribbon graph obtained by absorbing disc faces, with the rewriting
    rules that carry walks from the original graph onto it."""

    graph: RibbonGraph
    substitutions: list[tuple[int, list[int]]]
    kept_faces: list[list[int]]

    def rewrite(self, walk: list[int]) -> list[int]:
        w = list(walk)
        for e, path in self.substitutions:
            rev = invert(path)
            out = []
            for d in w:
                if d == 2 * e:
                    out.extend(path)
                elif d == 2 * e + 1:
                    out.extend(rev)
                else:
                    out.append(d)
            w = reduce_cyclic(out)
        return reduce_cyclic(w)


def collapse_discs(graph: RibbonGraph, is_disc) -> Spine:
    """Delete one edge per disc face until only non-disc faces remain.

    ``is_disc(face)`` classifies the faces of ``graph``.  Each deletion
    merges a disc face into a neighbouring face; the merged face is a disc
    only if both parts were.  Traversals of a deleted dart are rerouted
    around the rest of the disc face boundary.
    """
    origin = {}
    disc = {}
    for f in graph.faces():
        key = min(f)
        disc[key] = bool(is_disc(f))
        for d in f:
            origin[d] = key
    # union-find over original faces
    parent = {k: k for k in disc}

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    g = graph
    subs: list[tuple[int, list[int]]] = []
    while True:
        target = None
        for f in g.faces():
            if disc[find(origin[f[0]])]:
                target = f
                break
        if target is None:
            break
        fset = set(target)
        chosen = next((i for i, d in enumerate(target) if (d ^ 1) not in fset), None)
        if chosen is None:
            raise ValueError("disc face borders only itself; nothing left to keep")
        d = target[chosen]
        rest = target[chosen + 1:] + target[:chosen]
        # d . rest bounds a disc, so d ~ rest^{-1}
        path = invert(rest)
        e = d >> 1
        if d & 1:
            path = invert(path)
        subs.append((e, path))
        a, b = find(origin[d]), find(origin[d ^ 1])
        parent[a] = b
        disc[b] = disc[a] and disc[b]
        g = g.without_edge(e)
    return Spine(g, subs, g.faces())
