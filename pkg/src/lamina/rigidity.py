"""Zero sets of intersection functionals and the certificates built on them.

A zero set is sampled as all valid integral multicurves up to a norm bound
that have zero intersection with every constraint; its dimension is read
as the exact rank of the rational span of their DT vectors.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .dtcoord import (DTVector, decompose_multicurve, integral_vectors, twist,
                      validate_integral, InvalidVector)
from .isect import class_intersection, geometric_intersection, is_disjoint


class PoolTooSmall(LookupError):
    pass


def exact_rank(rows) -> int:
    """Rank over Q by fraction-exact Gaussian elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    rank = 0
    ncols = len(m[0])
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][col]:
                f = m[i][col] / p[col]
                m[i] = [a - f * b for a, b in zip(m[i], p)]
        rank += 1
        if rank == len(m):
            break
    return rank


def _pants_index(a: DTVector) -> int | None:
    if not any(a.weights) and sorted(a.twists) == [0] * (len(a.twists) - 1) + [1]:
        return list(a.twists).index(1)
    return None


@lru_cache(maxsize=None)
def _multicurves(pd, bound: int) -> tuple:
    return tuple(integral_vectors(pd, bound))


def vanishes(m: DTVector, alpha: DTVector) -> bool:
    """``I(m, alpha) == 0``; pants curves use the weight coordinate."""
    i = _pants_index(alpha)
    if i is not None:
        return m.weights[i] == 0
    return all(class_intersection(c, alpha) == 0
               for c, _ in decompose_multicurve(m).components)


@dataclass
class ZeroSetSample:
    constraints: list[DTVector]
    bound: int
    points: list[DTVector]
    rank: int


def zero_set_rank(constraints, bound: int) -> ZeroSetSample:
    constraints = list(constraints)
    if not constraints:
        raise ValueError("constraints must be nonempty")
    pd = constraints[0].decomposition
    if any(c.decomposition != pd for c in constraints):
        raise ValueError("constraints live on different decompositions")
    pts = [m for m in _multicurves(pd, bound) if all(vanishes(m, a) for a in constraints)]
    return ZeroSetSample(constraints, bound, pts, exact_rank([p.key for p in pts]))


DISJOINT = "Disjoint"
INTERSECTING = "Intersecting"
ANOMALY = "Anomaly"


@dataclass
class DichotomyResult:
    verdict: str
    disjoint: bool
    rank: int
    expected: str
    dimension: int

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "disjoint": self.disjoint, "rank": self.rank,
                "expected": self.expected, "dimension": self.dimension}


def verify_lemma2(alpha: DTVector, beta: DTVector, bound: int) -> DichotomyResult:
    if alpha.key == beta.key:
        raise ValueError("alpha and beta must differ")
    D = alpha.decomposition.surface.ml_dimension
    if D < 4:
        raise ValueError("the dichotomy needs ML dimension at least 4")
    disjoint = is_disjoint(alpha, beta)
    rank = zero_set_rank([alpha, beta], bound).rank
    if disjoint:
        expected = f"={D - 2}"
        verdict = DISJOINT if rank == D - 2 else ANOMALY
    else:
        expected = f"<={D - 3}"
        verdict = INTERSECTING if rank <= D - 3 else ANOMALY
    return DichotomyResult(verdict, disjoint, rank, expected, D)


def cutting_system(alpha: DTVector, pool, bound: int | None = None) -> list[DTVector]:
    """Greedy constraint set whose joint zero set is the ray of ``alpha``.

    Candidates are pool members disjoint from ``alpha``; at each step the
    first one (in pool order) giving the smallest rank is added.
    """
    pool = list(pool)
    if bound is None:
        bound = max(int(c.norm) for c in pool)
    chosen = [alpha]
    rank = zero_set_rank(chosen, bound).rank
    cands = [c for c in pool if c.key != alpha.key and is_disjoint(alpha, c)]
    while rank > 1:
        best = None
        for c in cands:
            if any(c.key == x.key for x in chosen):
                continue
            r = zero_set_rank(chosen + [c], bound).rank
            if r < rank and (best is None or r < best[0]):
                best = (r, c)
        if best is None:
            raise PoolTooSmall(f"stuck at rank {rank} with {len(chosen)} constraints")
        rank = best[0]
        chosen.append(best[1])
    return chosen


@dataclass(frozen=True)
class ProjectivePoint:
    vector: DTVector

    @property
    def integral_representative(self) -> DTVector:
        v = self.vector
        den = lcm(*(x.denominator for x in v.key))
        # an even multiple keeps every per-pants weight sum even
        return v.scaled(2 * den)


def projectivize(v: DTVector) -> ProjectivePoint:
    if v.is_zero:
        raise ValueError("the zero lamination has no projective class")
    return ProjectivePoint(v.scaled(1 / v.norm))


def p_alpha_member(pm: ProjectivePoint, alpha: DTVector) -> bool:
    return geometric_intersection(pm.integral_representative, alpha) == 0


@dataclass
class DisjointnessGraph:
    vertices: list[DTVector]
    edges: list[tuple[int, int]] = field(default_factory=list)

    def to_dot(self) -> str:
        lines = ["graph disjointness {"]
        for i, v in enumerate(self.vertices):
            lines.append(f'  v{i} [label="{v}"];')
        for i, j in self.edges:
            lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def disjointness_graph(pool) -> DisjointnessGraph:
    pool = list(pool)
    edges = [(i, j) for i in range(len(pool)) for j in range(i + 1, len(pool))
             if is_disjoint(pool[i], pool[j])]
    return DisjointnessGraph(pool, edges)


def twist_invariance_audit(pool, i: int, k_range) -> dict:
    pool = list(pool)
    violations = []
    checked = 0
    for k in k_range:
        tw = [twist(a, i, k) for a in pool]
        for x in range(len(pool)):
            for y in range(x, len(pool)):
                checked += 1
                before = class_intersection(pool[x], pool[y])
                after = class_intersection(tw[x], tw[y])
                if before != after:
                    violations.append({"a": str(pool[x]), "b": str(pool[y]), "k": k,
                                       "before": before, "after": after})
    return {"curve": i, "checked": checked, "violations": violations}


def intersection_vector(m: DTVector, pool) -> tuple[int, ...]:
    pool = list(pool)
    if not pool:
        raise ValueError("pool must be nonempty")
    err = validate_integral(m)
    if err:
        raise InvalidVector(err)
    return tuple(geometric_intersection(m, a) for a in pool)
