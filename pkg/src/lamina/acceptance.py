"""The ten acceptance checks, shared by the test suite and ``verify all``.

Each check returns a :class:`CheckResult`; ``detail`` is JSON-ready.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cover import (base_decomposition, classify_lift, cover_model, deck_check, lift_table,
                    lifted_intersection, verify_cover_scaling)
from .dtcoord import class_walk, enumerate_curves, integral_vectors, twist
from .isect import class_intersection, geometric_intersection
from .rigidity import (ANOMALY, cutting_system, disjointness_graph, intersection_vector,
                       verify_lemma2, zero_set_rank)
from .surface import make_surface, standard_pants_decomposition
from .torus import (Induced, IntegerPLMap, NotInduced, WitnessNotFound, classify_pl_map,
                    find_noninduced_witness, intersect_pair, pair_of_vector)


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d} {self.name}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.passed,
                "detail": self.detail}


def _pd(g, r):
    return standard_pants_decomposition(make_surface(g, r))


def _formula_check(g, r, bound):
    pd = _pd(g, r)
    cs = enumerate_curves(pd, bound)
    bad = []
    n = 0
    for x, y in itertools.combinations_with_replacement(cs, 2):
        n += 1
        want = intersect_pair(pair_of_vector(x), pair_of_vector(y), pd.surface)
        got = class_intersection(x, y)
        if want != got:
            bad.append([str(x), str(y), want, got])
    return n, len(cs), bad


def torus_formula(bound: int = 6) -> CheckResult:
    n, k, bad = _formula_check(1, 1, bound)
    return CheckResult(1, "torus formula equivalence on S_1,1", not bad,
                       {"bound": bound, "classes": k, "pairs": n, "mismatches": bad[:20]})


def four_holed_doubling(bound: int = 6) -> CheckResult:
    n, k, bad = _formula_check(0, 4, bound)
    return CheckResult(2, "doubled formula on S_0,4", not bad,
                       {"bound": bound, "classes": k, "pairs": n, "mismatches": bad[:20]})


LEMMA2_CASES = ((1, 2, 4), (0, 5, 4), (2, 0, 3))


def lemma2_dichotomy(cases=LEMMA2_CASES) -> CheckResult:
    detail = {}
    ok = True
    for g, r, bound in cases:
        pd = _pd(g, r)
        pool = enumerate_curves(pd, bound)
        counts = {"disjoint": 0, "intersecting": 0, "anomalies": 0}
        examples = []
        for a, b in itertools.combinations(pool, 2):
            res = verify_lemma2(a, b, bound)
            counts["disjoint" if res.disjoint else "intersecting"] += 1
            if res.verdict == ANOMALY:
                counts["anomalies"] += 1
                if len(examples) < 5:
                    examples.append({"alpha": str(a), "beta": str(b), **res.to_json()})
        ok = ok and counts["anomalies"] == 0
        detail[f"S_{g},{r}"] = {"bound": bound, "dimension": pd.surface.ml_dimension,
                                **counts, "anomaly_examples": examples}
    return CheckResult(3, "zero-set rank dichotomy", ok, detail)


def cover_scaling(bound: int = 4) -> CheckResult:
    base = base_decomposition()
    pool = enumerate_curves(base, bound)
    report = verify_cover_scaling(pool, lift_table(bound))
    # second, table-free computation on the two-sheeted graph itself
    lifted_bad = []
    for a, b in itertools.combinations_with_replacement(pool, 2):
        w = classify_lift(a).weight * classify_lift(b).weight
        lhs = w * lifted_intersection(a, b)
        rhs = 2 * class_intersection(a, b)
        if lhs != rhs:
            lifted_bad.append([str(a), str(b), lhs, rhs])
    ok = report.ok and not lifted_bad
    return CheckResult(4, "cover scaling I(p a, p b) = 2 I(a, b)", ok,
                       {"bound": bound, "pairs": report.pairs,
                        "table_violations": report.violations[:20],
                        "lifted_graph_violations": lifted_bad[:20]})


def lift_dichotomy(bound: int = 4) -> CheckResult:
    base = base_decomposition()
    pool = enumerate_curves(base, bound)
    model = cover_model()
    table = lift_table(bound)
    bad = []
    counts = {"Separating": 0, "NonseparatingDoubled": 0}
    for c in pool:
        cls = classify_lift(c)
        counts[cls.lift_type] += 1
        walk = class_walk(c)
        turns = len(model.lift_walk(walk)) // len(walk)
        _, w = table.entries[c.key]
        fine = (cls.weight in (1, 2) and w == cls.weight
                and (cls.weight == 1) == (cls.enclosed_parity == 1)
                and turns == (2 if cls.enclosed_parity else 1)
                and deck_check(c))
        if not fine:
            bad.append(str(c))
    return CheckResult(5, "lift weight dichotomy", not bad,
                       {"bound": bound, "classes": len(pool), **counts, "failures": bad})


def gl2_classification(entry_range: int = 3) -> CheckResult:
    rng = range(-entry_range, entry_range + 1)
    n = induced = worst = 0
    bad = []
    for a1, b1, a2, b2 in itertools.product(rng, repeat=4):
        phi = IntegerPLMap(a1, b1, a2, b2)
        if phi.det == 0:
            continue
        n += 1
        kind = classify_pl_map(phi)
        if (kind == Induced) != (abs(phi.det) == 1):
            bad.append([a1, b1, a2, b2, kind])
            continue
        if kind == Induced:
            induced += 1
            continue
        try:
            w = find_noninduced_witness(phi, abs(phi.det) + 1)
            worst = max(worst, max(abs(w.pair.a), abs(w.pair.b)))
        except WitnessNotFound:
            bad.append([a1, b1, a2, b2, NotInduced])
    return CheckResult(6, "GL(2,Z) classification and witnesses", not bad,
                       {"maps": n, "induced": induced, "largest_witness": worst,
                        "failures": bad[:20]})


def pairing_properties(bound: int = 3, k_max: int = 5, twist_range: int = 5) -> CheckResult:
    pd = _pd(1, 2)
    pool = enumerate_curves(pd, bound)
    bad = {"symmetry": 0, "diagonal": 0, "bilinearity": 0, "twist": 0}
    for a in pool:
        if geometric_intersection(a, a) != 0:
            bad["diagonal"] += 1
    for a, b in itertools.combinations(pool, 2):
        i_ab = geometric_intersection(a, b)
        if i_ab != geometric_intersection(b, a):
            bad["symmetry"] += 1
        for k in range(1, k_max + 1):
            for l in range(1, k_max + 1):
                if geometric_intersection(a.scaled(k), b.scaled(l)) != k * l * i_ab:
                    bad["bilinearity"] += 1
        for i in range(pd.curve_count):
            for k in range(-twist_range, twist_range + 1):
                if geometric_intersection(twist(a, i, k), twist(b, i, k)) != i_ab:
                    bad["twist"] += 1
    return CheckResult(7, "pairing properties on S_1,2", not any(bad.values()),
                       {"bound": bound, "classes": len(pool), "violations": bad})


def embedding_certificate(bound: int = 3, pool_bound: int = 4) -> CheckResult:
    pd = _pd(1, 2)
    pool = enumerate_curves(pd, pool_bound)
    seen: dict = {}
    clashes = []
    ms = integral_vectors(pd, bound, include_zero=True)
    for m in ms:
        v = intersection_vector(m, pool)
        if v in seen:
            clashes.append([str(seen[v]), str(m)])
        seen.setdefault(v, m)
    return CheckResult(8, "intersection vectors separate multicurves", not clashes,
                       {"bound": bound, "pool_bound": pool_bound, "multicurves": len(ms),
                        "pool": len(pool), "clashes": clashes[:20]})


def cutting_systems(pool_bound: int = 4) -> CheckResult:
    detail = {}
    ok = True
    for g, r in ((1, 2), (0, 5)):
        pd = _pd(g, r)
        pool = enumerate_curves(pd, pool_bound)
        for i in range(pd.curve_count):
            alpha = pool[[c.key for c in pool].index(
                tuple([0] * pd.curve_count + [1 if j == i else 0 for j in range(pd.curve_count)]))]
            try:
                system = cutting_system(alpha, pool, pool_bound)
                rank = zero_set_rank(system, pool_bound).rank
                found = rank == 1
            except LookupError as err:
                system, rank, found = [], None, False
                detail[f"S_{g},{r} curve {i} error"] = str(err)
            ok = ok and found
            detail[f"S_{g},{r} curve {i}"] = {"system": [str(c) for c in system],
                                             "recheck_rank": rank}
    return CheckResult(9, "cutting systems of rank 1", ok, detail)


def torus_degeneracy(bounds=(1, 2, 3, 4, 5, 6)) -> CheckResult:
    pd = _pd(1, 1)
    edges = {}
    for b in bounds:
        edges[str(b)] = len(disjointness_graph(enumerate_curves(pd, b)).edges)
    return CheckResult(10, "S_1,1 disjointness graph is edgeless",
                       not any(edges.values()), {"edges_by_bound": edges})


CHECKS = (torus_formula, four_holed_doubling, lemma2_dichotomy, cover_scaling,
          lift_dichotomy, gl2_classification, pairing_properties, embedding_certificate,
          cutting_systems, torus_degeneracy)


def run_all(selected=None) -> list[CheckResult]:
    out = []
    for i, f in enumerate(CHECKS, start=1):
        if selected is None or i in selected:
            out.append(f())
    return out
