"""Hyperelliptic double cover of the five-holed sphere by Σ₁,₂.

Model.  On the standard chain decomposition of Σ₀,₅ the inner boundary
components ``b0..b3`` are the branch points and ``b4`` is the outer disc
boundary.  Two branch cuts are drawn as dual paths through the faces of
the cut-system graph, ``b0 -> b1`` and ``b2 -> b3``; an edge of the graph
carries voltage 1 when it is crossed an odd number of times.  The derived
two-sheeted graph is a cut system of Σ₁,₂: the lifts of ``b0..b3`` bound
discs (filled branch points) and ``b4`` lifts to the two boundary circles.

A curve enclosing an odd number of branch points has odd total voltage, so
its walk closes up only after two turns and the preimage is one separating
curve.  Even voltage gives two disjoint lifts, which are isotopic; the
preimage is then two parallel copies of one non-separating curve.

Identification.  Lifted classes are matched to DT classes on the standard
Σ₁,₂ decomposition by intersection numbers.  The lift of the first chain
curve (two parallel copies) plays the handle curve and the lift of the
second chain curve plays the separating stem curve, which fixes weights.
Twists of a few small anchor classes are then fixed by backtracking so
that all their mutual intersections agree; the first choices are gauge
freedom (a mapping class fixing both pants curves).  Larger classes are
determined by their intersections with the anchors.  The result is the
lift table.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .dtcoord import (DTVector, InvalidVector, class_walk, decompose_multicurve,
                      enumerate_curves, is_connected, mod2_class,
                      validate_integral, zero)
from .isect import class_intersection, geometric_intersection
from .ribbon import RibbonGraph, Spine, canonical_cycle, collapse_discs, linked_lifts
from .strands import dual_graph, outer_faces
from .surface import make_surface, standard_pants_decomposition

SCHEMA_VERSION = 1
TABLE_PATH = Path(__file__).with_name("data") / "lift_table.json"

SEPARATING = "Separating"
NONSEPARATING_DOUBLED = "NonseparatingDoubled"


class LiftTableMiss(KeyError):
    pass


def base_decomposition():
    return standard_pants_decomposition(make_surface(0, 5))


def cover_decomposition():
    return standard_pants_decomposition(make_surface(1, 2))


@dataclass(frozen=True)
class CoverClassification:
    source: DTVector
    enclosed_parity: int
    lift_type: str

    @property
    def weight(self) -> int:
        return 1 if self.lift_type == SEPARATING else 2


@dataclass(frozen=True)
class LambdaFactor:
    value: Fraction

    def __post_init__(self):
        if self.value not in (Fraction(1), Fraction(1, 2), Fraction(2)):
            raise ValueError(f"lambda must be 1, 1/2 or 2, got {self.value}")


def lambda_table(in_type: str, out_type: str) -> LambdaFactor:
    """Ratio of lift weights: out over in."""
    w = {SEPARATING: 1, NONSEPARATING_DOUBLED: 2}
    if in_type not in w or out_type not in w:
        raise ValueError("unknown lift type")
    return LambdaFactor(Fraction(w[out_type], w[in_type]))


def classify_lift(c: DTVector) -> CoverClassification:
    if not is_connected(c):
        raise InvalidVector(f"{c} is not a connected class")
    # boundary parities are taken against the outer boundary, so entry j
    # says whether branch point j is enclosed
    parity = sum(mod2_class(c)[:4]) & 1
    return CoverClassification(c, parity, SEPARATING if parity else NONSEPARATING_DOUBLED)


# -- the two-sheeted graph ---------------------------------------------------

@dataclass
class CoverModel:
    base: RibbonGraph
    voltage: list[int]
    graph: RibbonGraph
    spine: Spine

    def lift_dart(self, d: int, sheet: int) -> int:
        e = d >> 1
        if d & 1:
            return 2 * (2 * e + (sheet ^ self.voltage[e])) + 1
        return 2 * (2 * e + sheet)

    def lift_walk(self, walk, sheet: int = 0) -> list[int]:
        out = []
        s = sheet
        for turn in range(2):
            for d in walk:
                out.append(self.lift_dart(d, s))
                s ^= self.voltage[d >> 1]
            if s == sheet:
                break
        return out

    def spine_word(self, walk, sheet: int = 0) -> list[int]:
        return self.spine.rewrite(self.lift_walk(walk, sheet))


def _branch_cuts(pd) -> list[int]:
    g = dual_graph(pd)
    faces = g.faces()
    face_of = {d: i for i, f in enumerate(faces) for d in f}
    bfaces = [face_of[f[0]] for f in outer_faces(pd)]
    blocked = set(bfaces)
    adj: dict[int, list[tuple[int, int]]] = {i: [] for i in range(len(faces))}
    for d in g.darts:
        if d & 1 == 0:
            a, b = face_of[d], face_of[d ^ 1]
            adj[a].append((b, d >> 1))
            adj[b].append((a, d >> 1))
    n_edges = len(g.tails) // 2
    volt = [0] * n_edges
    for src, dst in ((bfaces[0], bfaces[1]), (bfaces[2], bfaces[3])):
        prev = {src: None}
        queue = [src]
        for x in queue:
            if x == dst:
                break
            if x in blocked and x != src:
                continue
            for y, e in adj[x]:
                if y not in prev:
                    prev[y] = (x, e)
                    queue.append(y)
        x = dst
        while prev[x] is not None:
            x, e = prev[x]
            volt[e] ^= 1
    return volt


@lru_cache(maxsize=None)
def cover_model() -> CoverModel:
    pd = base_decomposition()
    g = dual_graph(pd)
    volt = _branch_cuts(pd)
    n_edges = len(volt)
    tails = [0] * (4 * n_edges)
    model = CoverModel(g, volt, None, None)
    for s in (0, 1):
        for d in g.darts:
            tails[model.lift_dart(d, s)] = 2 * g.tails[d] + s
    rotation = {}
    for v, ds in g.rotation.items():
        for s in (0, 1):
            rotation[2 * v + s] = [model.lift_dart(d, s) for d in ds]
    lifted = RibbonGraph(tails, rotation)
    outer = set(outer_faces(pd)[-1])

    def is_disc(face):
        # a face is a boundary circle iff it projects onto the outer boundary
        return 2 * (face[0] >> 2) + (face[0] & 1) not in outer

    model.graph = lifted
    model.spine = collapse_discs(lifted, is_disc)
    return model


def lifted_intersection(a: DTVector, b: DTVector) -> int:
    """I of the single lifted components of two connected Σ₀,₅ classes."""
    if a.key == b.key:
        return 0
    m = cover_model()
    wa = m.spine_word(class_walk(a))
    wb = m.spine_word(class_walk(b))
    return linked_lifts(m.spine.graph, wa, wb)


def deck_check(c: DTVector) -> bool:
    """Both sheets give the same lifted class."""
    m = cover_model()
    w = class_walk(c)
    return canonical_cycle(m.spine_word(w, 0)) == canonical_cycle(m.spine_word(w, 1))


# -- lift table ----------------------------------------------------------------

def _candidates(pd, weights, twist_bound):
    out = []
    m0, m1 = weights
    for t0 in range(-twist_bound, twist_bound + 1):
        if m0 == 0 and t0 < 0:
            continue
        for t1 in range(-twist_bound, twist_bound + 1):
            if m1 == 0 and t1 < 0:
                continue
            v = DTVector(pd, (m0, m1), (t0, t1))
            if validate_integral(v) is None and is_connected(v):
                out.append(v)
    out.sort(key=lambda v: (v.norm, v.twists))
    return out


def build_lift_table(bound: int = 8, anchor_norm: int = 5,
                     twist_bound: int | None = None) -> dict:
    """Match every class of the Σ₀,₅ pool at ``bound`` to a Σ₁,₂ DT class.

    Classes of norm at most ``anchor_norm`` are matched jointly by
    backtracking.  Every other class must then be pinned down uniquely by
    its intersections with those anchors alone, so intersections among
    non-anchor images are never used to build the table.
    """
    base = base_decomposition()
    top = cover_decomposition()
    pool = enumerate_curves(base, bound)
    gamma = [DTVector(base, (0, 0), (1, 0)), DTVector(base, (0, 0), (0, 1))]
    if twist_bound is None:
        twist_bound = 2 * bound + 2
    assigned = [(gamma[0], DTVector(top, (0, 0), (1, 0))),
                (gamma[1], DTVector(top, (0, 0), (0, 1)))]
    rest = [c for c in pool if c.key not in {g.key for g in gamma}]
    anchors = [c for c in rest if c.norm <= anchor_norm]
    others = [c for c in rest if c.norm > anchor_norm]
    cross: dict = {}

    def lift_i(x, y):
        k = (x.key, y.key)
        if k not in cross:
            cross[k] = lifted_intersection(x, y)
        return cross[k]

    def options(c):
        found = _candidates(top, [lift_i(c, g) for g in gamma], twist_bound)
        if not found:
            raise LiftTableMiss(f"no Σ₁,₂ class with the lifted weights of {c}")
        return found

    def solve(i):
        if i == len(anchors):
            return True
        c = anchors[i]
        for cand in options(c):
            if any(cand.key == t.key for _, t in assigned):
                continue
            if all(lift_i(c, s) == class_intersection(cand, t) for s, t in assigned):
                assigned.append((c, cand))
                if solve(i + 1):
                    return True
                assigned.pop()
        return False

    if not solve(0):
        raise LiftTableMiss("no consistent identification of the anchor lifts")
    fixed = list(assigned)
    for c in others:
        ok = [v for v in options(c)
              if all(lift_i(c, s) == class_intersection(v, t) for s, t in fixed)]
        if len(ok) != 1:
            raise LiftTableMiss(f"{c}: {len(ok)} candidates match the anchors")
        assigned.append((c, ok[0]))
    rows = []
    for src, dst in assigned:
        cls = classify_lift(src)
        rows.append({"source": src.to_json(), "target": dst.to_json(),
                     "parity": cls.enclosed_parity, "lift_type": cls.lift_type,
                     "weight": cls.weight, "anchor": src.norm <= anchor_norm})
    rows.sort(key=lambda r: (r["source"]["weights"], r["source"]["twists"]))
    return {"schema_version": SCHEMA_VERSION, "bound": bound,
            "anchor_norm": anchor_norm, "entries": rows}


def save_lift_table(table: dict, path: Path = TABLE_PATH) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(table, sort_keys=True, indent=1) + "\n")


@dataclass
class LiftTable:
    bound: int
    entries: dict  # source key -> (target DTVector, weight)

    @classmethod
    def from_json(cls, obj: dict) -> "LiftTable":
        if obj.get("schema_version") != SCHEMA_VERSION:
            raise ValueError("lift table schema version mismatch")
        from .dtcoord import from_json
        base, top = base_decomposition(), cover_decomposition()
        entries = {}
        for r in obj["entries"]:
            src = from_json(r["source"], base)
            entries[src.key] = (from_json(r["target"], top), int(r["weight"]))
        return cls(int(obj["bound"]), entries)


_TABLE: LiftTable | None = None


def lift_table(bound: int | None = None) -> LiftTable:
    """The serialized table, regenerated in memory if it does not reach ``bound``."""
    global _TABLE
    if _TABLE is None and TABLE_PATH.exists():
        _TABLE = LiftTable.from_json(json.loads(TABLE_PATH.read_text()))
    if _TABLE is None or (bound is not None and _TABLE.bound < bound):
        _TABLE = LiftTable.from_json(build_lift_table(max(bound or 8, 8)))
    return _TABLE


def transfer(m: DTVector, table: LiftTable | None = None) -> DTVector:
    err = validate_integral(m)
    if err:
        raise InvalidVector(err)
    table = table or lift_table()
    top = cover_decomposition()
    total = zero(top)
    for c, k in decompose_multicurve(m).components:
        if c.key not in table.entries:
            raise LiftTableMiss(f"{c} is outside the lift table (bound {table.bound})")
        target, w = table.entries[c.key]
        total = total + target.scaled(w * k)
    return total


@dataclass
class ScalingReport:
    pairs: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        lam = {f"{a},{b}": _fmt(lambda_table(a, b).value)
               for a in (SEPARATING, NONSEPARATING_DOUBLED)
               for b in (SEPARATING, NONSEPARATING_DOUBLED)}
        return {"pairs": self.pairs, "violations": self.violations, "lambda_table": lam}


def _fmt(x: Fraction) -> str | int:
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def verify_cover_scaling(pool, table: LiftTable | None = None) -> ScalingReport:
    pool = list(pool)
    table = table or lift_table()
    images = [transfer(c, table) for c in pool]
    bad = []
    n = 0
    for i in range(len(pool)):
        for j in range(i, len(pool)):
            n += 1
            lhs = geometric_intersection(images[i], images[j])
            rhs = 2 * geometric_intersection(pool[i], pool[j])
            if lhs != rhs:
                bad.append({"a": str(pool[i]), "b": str(pool[j]), "lifted": lhs, "doubled": rhs})
    return ScalingReport(n, bad)
