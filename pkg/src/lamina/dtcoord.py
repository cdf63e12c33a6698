"""Dehn-Thurston coordinates on a pants decomposition.

A vector assigns to each pants curve ``i`` a weight ``m_i >= 0`` (the
intersection number with that curve) and a twist ``t_i``.  Rational vectors
are points of ML; integral vectors satisfying the per-pants parity rule
encode multicurves.  At ``m_i = 0`` the pair ``(0, t)`` is identified with
``(0, -t)`` and stored with ``t >= 0``: it is ``t`` parallel copies of
pants curve ``i``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .strands import build_diagram, outer_faces, dual_graph, StrandDiagram
from .surface import PantsDecomposition, make_surface, standard_pants_decomposition


class InvalidVector(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


@dataclass(frozen=True)
class DTVector:
    decomposition: PantsDecomposition
    weights: tuple[Fraction, ...]
    twists: tuple[Fraction, ...]

    def __post_init__(self):
        K = self.decomposition.curve_count
        w = tuple(_frac(x) for x in self.weights)
        t = tuple(_frac(x) for x in self.twists)
        if len(w) != K or len(t) != K:
            raise ValueError(f"expected {K} weights and twists")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "twists", t)

    @property
    def key(self) -> tuple:
        return self.weights + self.twists

    @property
    def norm(self) -> Fraction:
        return sum(self.weights, Fraction(0)) + sum((abs(t) for t in self.twists), Fraction(0))

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.key)

    @property
    def is_zero(self) -> bool:
        return not any(self.key)

    def scaled(self, k) -> "DTVector":
        k = _frac(k)
        if k < 0:
            raise ValueError("scaling factor must be non-negative")
        return DTVector(self.decomposition, tuple(k * w for w in self.weights),
                        tuple(k * t for t in self.twists))

    def __add__(self, other: "DTVector") -> "DTVector":
        if other.decomposition != self.decomposition:
            raise ValueError("vectors live on different decompositions")
        return DTVector(self.decomposition,
                        tuple(a + b for a, b in zip(self.weights, other.weights)),
                        tuple(a + b for a, b in zip(self.twists, other.twists)))

    def __str__(self):
        parts = [f"({_fmt(m)},{_fmt(t)})" for m, t in zip(self.weights, self.twists)]
        return "[" + " ".join(parts) + "]"

    def to_json(self) -> dict:
        s = self.decomposition.surface
        return {"g": s.genus, "r": s.boundary_count,
                "weights": [_json_num(x) for x in self.weights],
                "twists": [_json_num(x) for x in self.twists]}


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _json_num(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def from_json(obj: dict, pd: PantsDecomposition | None = None) -> DTVector:
    if pd is None:
        pd = standard_pants_decomposition(make_surface(int(obj["g"]), int(obj["r"])))
    return DTVector(pd, tuple(_frac(x) for x in obj["weights"]),
                    tuple(_frac(x) for x in obj["twists"]))


def vector(pd: PantsDecomposition, *pairs) -> DTVector:
    """``vector(pd, (m0, t0), (m1, t1), ...)``."""
    return DTVector(pd, tuple(m for m, _ in pairs), tuple(t for _, t in pairs))


def pants_curve(pd: PantsDecomposition, i: int) -> DTVector:
    _check_index(pd, i)
    K = pd.curve_count
    return DTVector(pd, (0,) * K, tuple(1 if j == i else 0 for j in range(K)))


def zero(pd: PantsDecomposition) -> DTVector:
    K = pd.curve_count
    return DTVector(pd, (0,) * K, (0,) * K)


def _check_index(pd, i):
    if not 0 <= i < pd.curve_count:
        raise IndexOutOfRange(f"pants-curve index {i} outside [0, {pd.curve_count})")


def validate_integral(v: DTVector) -> str | None:
    """``None`` when ``v`` encodes a multicurve, else the first violation."""
    pd = v.decomposition
    for i, (m, t) in enumerate(zip(v.weights, v.twists)):
        if m.denominator != 1 or t.denominator != 1:
            return f"integrality: curve {i} has non-integral coordinate"
        if m < 0:
            return f"non-negativity: weight of curve {i} is {m}"
        if m == 0 and t < 0:
            return f"folding: curve {i} has weight 0 and twist {t} < 0"
    for p in range(pd.pants_count):
        total = 0
        for k in range(3):
            c = pd.curve_of((p, k))
            if c is not None:
                total += int(v.weights[c])
        if total % 2:
            return f"parity: pants {p} sees odd total weight {total}"
    return None


def canonicalize(v: DTVector) -> DTVector:
    twists = tuple(abs(t) if m == 0 else t for m, t in zip(v.weights, v.twists))
    return DTVector(v.decomposition, v.weights, twists)


@dataclass(frozen=True)
class MulticurveClass:
    """Connected component classes with multiplicities, in canonical order."""

    components: tuple[tuple[DTVector, int], ...]

    def reassemble(self, pd: PantsDecomposition) -> DTVector:
        total = zero(pd)
        for cls, k in self.components:
            total = total + cls.scaled(k)
        return total

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1 and self.components[0][1] == 1


def diagram(v: DTVector) -> StrandDiagram:
    err = validate_integral(v)
    if err:
        raise InvalidVector(err)
    return build_diagram(v.decomposition, v.weights, v.twists)


@lru_cache(maxsize=200_000)
def _decompose_cached(pd: PantsDecomposition, key: tuple) -> tuple:
    K = pd.curve_count
    dg = build_diagram(pd, key[:K], key[K:])
    counts: dict[tuple, int] = {}
    walks: dict[tuple, list[int]] = {}
    for comp in dg.components():
        k = tuple(Fraction(x) for x in comp.weights + comp.twists)
        counts[k] = counts.get(k, 0) + 1
        walks.setdefault(k, comp.walk)
    ordered = sorted(counts)
    return tuple((k, counts[k], tuple(walks[k])) for k in ordered)


def decompose_multicurve(v: DTVector) -> MulticurveClass:
    err = validate_integral(v)
    if err:
        raise InvalidVector(err)
    pd = v.decomposition
    K = pd.curve_count
    comps = tuple((DTVector(pd, k[:K], k[K:]), mult)
                  for k, mult, _ in _decompose_cached(pd, v.key))
    return MulticurveClass(comps)


def component_walks(v: DTVector) -> list[tuple[DTVector, int, list[int]]]:
    """Components with multiplicity and one dual-graph walk each."""
    err = validate_integral(v)
    if err:
        raise InvalidVector(err)
    pd = v.decomposition
    K = pd.curve_count
    return [(DTVector(pd, k[:K], k[K:]), mult, list(walk))
            for k, mult, walk in _decompose_cached(pd, v.key)]


def class_walk(c: DTVector) -> list[int]:
    (cls, mult, walk), = component_walks(c) or [(None, 0, [])]
    if mult != 1 or cls.key != c.key:
        raise InvalidVector(f"{c} is not a connected class")
    return walk


def is_connected(v: DTVector) -> bool:
    if validate_integral(v) is not None or v.is_zero:
        return False
    comps = _decompose_cached(v.decomposition, v.key)
    return len(comps) == 1 and comps[0][1] == 1


def integral_vectors(pd: PantsDecomposition, bound: int, include_zero: bool = False):
    """All valid integral vectors of norm at most ``bound``, sorted."""
    K = pd.curve_count
    out = []

    def rec(i, budget, ws, ts):
        if i == K:
            v = DTVector(pd, tuple(ws), tuple(ts))
            if validate_integral(v) is None and (include_zero or not v.is_zero):
                out.append(v)
            return
        for m in range(budget + 1):
            rest = budget - m
            lo = 0 if m == 0 else -rest
            for t in range(lo, rest + 1):
                rec(i + 1, rest - abs(t), ws + [m], ts + [t])

    rec(0, bound, [], [])
    out.sort(key=_order_key)
    return out


def _order_key(v: DTVector):
    return (v.norm, v.weights, v.twists)


def enumerate_curves(pd: PantsDecomposition, bound: int) -> list[DTVector]:
    if bound < 1:
        raise ValueError("bound must be positive")
    return [v for v in integral_vectors(pd, bound) if is_connected(v)]


def twist(v: DTVector, i: int, k: int) -> DTVector:
    _check_index(v.decomposition, i)
    twists = list(v.twists)
    twists[i] = twists[i] + k * v.weights[i]
    return canonicalize(DTVector(v.decomposition, v.weights, tuple(twists)))


def coordinate_intersection(v: DTVector, i: int) -> Fraction:
    _check_index(v.decomposition, i)
    return v.weights[i]


def _face_paths(pd: PantsDecomposition) -> list[set[int]]:
    """Edge sets crossed by dual arcs from boundary ``j`` to the last one."""
    g = dual_graph(pd)
    faces = g.faces()
    face_of = {}
    for idx, f in enumerate(faces):
        for d in f:
            face_of[d] = idx
    adj: dict[int, list[tuple[int, int]]] = {i: [] for i in range(len(faces))}
    for d in g.darts:
        if d & 1:
            continue
        a, b = face_of[d], face_of[d ^ 1]
        adj[a].append((b, d >> 1))
        adj[b].append((a, d >> 1))
    bfaces = [face_of[f[0]] for f in outer_faces(pd)]
    if not bfaces:
        return []
    root = bfaces[-1]
    prev = {root: None}
    queue = [root]
    for x in queue:
        for y, e in adj[x]:
            if y not in prev:
                prev[y] = (x, e)
                queue.append(y)
    paths = []
    for f in bfaces[:-1]:
        edges: set[int] = set()
        x = f
        while prev[x] is not None:
            x, e = prev[x]
            edges ^= {e}
        paths.append(edges)
    return paths


_FACE_PATHS: dict = {}


def boundary_parities(v: DTVector) -> tuple[int, ...]:
    """Mod-2 crossings with dual arcs from each boundary to the last one.

    On a planar surface entry ``j`` is 1 exactly when the curve separates
    boundary ``j`` from the last boundary component an odd number of times,
    i.e. when ``j`` lies on the far side.
    """
    pd = v.decomposition
    if pd not in _FACE_PATHS:
        _FACE_PATHS[pd] = _face_paths(pd)
    paths = _FACE_PATHS[pd]
    out = [0] * len(paths)
    for _, mult, walk in component_walks(v):
        for j, edges in enumerate(paths):
            out[j] ^= (mult * sum(1 for d in walk if (d >> 1) in edges)) & 1
    return tuple(out)


def handle_curves(pd: PantsDecomposition) -> list[int]:
    return [c for c, ((p, _), (q, _)) in enumerate(pd.gluing) if p == q]


def mod2_class(v: DTVector) -> tuple[int, ...]:
    """Z/2 homology class of an integral multicurve.

    Coordinates: boundary parities (see :func:`boundary_parities`), then for
    each handle curve ``c`` the mod-2 intersection with ``c`` and with its
    dual curve ``(1, 0)`` at ``c``.  Both pairings are nondegenerate on the
    span of boundary classes and handle classes.
    """
    from .isect import geometric_intersection

    err = validate_integral(v)
    if err:
        raise InvalidVector(err)
    pd = v.decomposition
    out = list(boundary_parities(v))
    K = pd.curve_count
    for c in handle_curves(pd):
        out.append(int(v.weights[c]) & 1)
        dual = DTVector(pd, tuple(1 if i == c else 0 for i in range(K)), (0,) * K)
        out.append(geometric_intersection(v, dual) & 1)
    return tuple(out)
