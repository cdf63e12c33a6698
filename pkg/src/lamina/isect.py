"""Geometric intersection numbers of integral multicurves.

Each connected class is realized as a closed walk in the dual graph of the
cut system (see :mod:`lamina.strands`).  Absorbing the disc faces of that
graph leaves a ribbon spine of the surface whose fundamental group is free;
the intersection number of two classes is the number of linked pairs of
lifts of their reduced walks in the universal cover tree.

A closed surface has no such spine.  There the surface is punctured at one
vertex of the cut system (one face is kept instead of absorbed) and the
count is taken on the punctured surface; puncturing can only add
intersections, so the minimum over all vertices of the cut system is used.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .dtcoord import (DTVector, InvalidVector, component_walks, decompose_multicurve,
                      validate_integral, MulticurveClass)
from .ribbon import ModelOverflow, Spine, collapse_discs, linked_lifts
from .strands import dual_graph, outer_faces, StrandDiagram, build_diagram
from .surface import PantsDecomposition

DEFAULT_LIMIT = 10**6
_limit = DEFAULT_LIMIT


def set_crossing_limit(limit: int) -> None:
    global _limit
    _limit = int(limit)


@lru_cache(maxsize=None)
def spines(pd: PantsDecomposition) -> tuple[Spine, ...]:
    g = dual_graph(pd)
    boundary = {min(f) for f in outer_faces(pd)}
    if boundary:
        return (collapse_discs(g, lambda f: min(f) not in boundary),)
    out = []
    for keep in g.faces():
        k = min(keep)
        out.append(collapse_discs(g, lambda f, k=k: min(f) != k))
    return tuple(out)


@lru_cache(maxsize=500_000)
def _spine_word(pd: PantsDecomposition, key: tuple, index: int) -> tuple[int, ...]:
    walk = _walk_of(pd, key)
    return tuple(spines(pd)[index].rewrite(list(walk)))


@lru_cache(maxsize=500_000)
def _walk_of(pd: PantsDecomposition, key: tuple) -> tuple[int, ...]:
    K = pd.curve_count
    v = DTVector(pd, key[:K], key[K:])
    comps = component_walks(v)
    if len(comps) != 1 or comps[0][1] != 1:
        raise InvalidVector(f"{v} is not a connected class")
    return tuple(comps[0][2])


@lru_cache(maxsize=2_000_000)
def _class_pair(pd: PantsDecomposition, ka: tuple, kb: tuple) -> int:
    if ka == kb:
        return 0
    K = pd.curve_count
    # pants-curve coordinates are read off directly
    for x, y in ((ka, kb), (kb, ka)):
        if not any(x[:K]) and sum(x[K:]) == 1:
            return int(y[list(x[K:]).index(1)])
    best = None
    sp = spines(pd)
    for idx, s in enumerate(sp):
        wa = list(_spine_word(pd, ka, idx))
        wb = list(_spine_word(pd, kb, idx))
        val = linked_lifts(s.graph, wa, wb, limit=_limit)
        if best is None or val < best:
            best = val
        if best == 0:
            break
    return best


def class_intersection(a: DTVector, b: DTVector) -> int:
    """Intersection number of two connected classes."""
    if a.decomposition != b.decomposition:
        raise ValueError("classes live on different decompositions")
    ka, kb = sorted((a.key, b.key))
    return _class_pair(a.decomposition, ka, kb)


def class_intersection_raw(a: DTVector, b: DTVector) -> int:
    """Same as :func:`class_intersection` but never shortcuts pants curves."""
    pd = a.decomposition
    if a.key == b.key:
        return 0
    best = None
    for idx, s in enumerate(spines(pd)):
        wa = list(_spine_word(pd, a.key, idx))
        wb = list(_spine_word(pd, b.key, idx))
        val = linked_lifts(s.graph, wa, wb, limit=_limit)
        best = val if best is None else min(best, val)
    return best


def geometric_intersection(a: DTVector, b: DTVector) -> int:
    """I(a, b) for integral multicurves, bilinear over components."""
    for v in (a, b):
        err = validate_integral(v)
        if err:
            raise InvalidVector(err)
    if a.decomposition != b.decomposition:
        raise ValueError("vectors live on different decompositions")
    ca = decompose_multicurve(a).components
    cb = decompose_multicurve(b).components
    total = 0
    for x, k in ca:
        for y, l in cb:
            total += k * l * class_intersection(x, y)
    return total


def is_disjoint(a: DTVector, b: DTVector) -> bool:
    return a.key != b.key and class_intersection(a, b) == 0


@dataclass
class FillingResult:
    fills: bool
    witness: DTVector | None = None

    def __bool__(self):
        return self.fills


def filling_check(a: DTVector, b: DTVector, pool) -> FillingResult:
    """Pool-relative filling test: every member meets ``a`` or ``b``."""
    pool = list(pool)
    if not pool:
        raise ValueError("pool must be nonempty")
    for m in pool:
        if geometric_intersection(a, m) + geometric_intersection(b, m) == 0:
            return FillingResult(False, m)
    return FillingResult(True)


@dataclass
class IntersectionTable:
    classes: list[DTVector]
    values: list[list[int]] = field(default_factory=list)

    def to_csv(self) -> str:
        head = ["class"] + [str(c) for c in self.classes]
        lines = [",".join(f'"{h}"' for h in head)]
        for c, row in zip(self.classes, self.values):
            lines.append(",".join([f'"{c}"'] + [str(x) for x in row]))
        return "\n".join(lines) + "\n"


def intersection_table(classes) -> IntersectionTable:
    classes = list(classes)
    n = len(classes)
    values = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            values[i][j] = values[j][i] = geometric_intersection(classes[i], classes[j])
    return IntersectionTable(classes, values)


def strand_diagram(v: DTVector) -> StrandDiagram:
    err = validate_integral(v)
    if err:
        raise InvalidVector(err)
    return build_diagram(v.decomposition, v.weights, v.twists)


__all__ = ["geometric_intersection", "is_disjoint", "filling_check", "intersection_table",
           "IntersectionTable", "ModelOverflow", "class_intersection", "strand_diagram"]
