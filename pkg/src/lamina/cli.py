"""Command-line interface.

    lamina surface info -g G -r R
    lamina enumerate -g G -r R --bound B [--format json|csv]
    lamina intersect --a JSON --b JSON
    lamina table -g G -r R --bound B [--format csv|json]
    lamina lemma2 -g G -r R --alpha JSON --beta JSON --bound B
    lamina cut --alpha JSON --bound B
    lamina graph -g G -r R --bound B [--format dot|json|svg]
    lamina gl2 classify --matrix a1,b1,a2,b2 [--witness-bound N]
    lamina cover check --bound B
    lamina verify all --config FILE

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

SCHEMA_VERSION = 1
FORMATS = {"json", "csv", "dot", "svg"}


class UsageError(Exception):
    pass


class IOFailure(OSError):
    pass


@dataclass
class RunConfig:
    surface: tuple[int, int] = (1, 2)
    bounds: dict = field(default_factory=dict)
    output_dir: str | None = None
    format: str = "json"
    overflow_limit: int = 10**6
    threads: int = 1
    criteria: tuple[int, ...] = tuple(range(1, 11))

    def validate(self) -> None:
        if any(int(b) < 1 for b in self.bounds.values()):
            raise UsageError("bounds must be >= 1")
        if self.threads < 1:
            raise UsageError("threads must be >= 1")
        if self.format not in FORMATS:
            raise UsageError(f"format must be one of {sorted(FORMATS)}")
        if any(not 1 <= c <= 10 for c in self.criteria):
            raise UsageError("criteria are numbered 1..10")


def load_config(path: str) -> RunConfig:
    """Flat ``key = value`` file; ``#`` starts a comment."""
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"config file not found: {path}")
    cfg = RunConfig()
    for n, raw in enumerate(p.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{n}: expected key = value")
        key, val = (s.strip() for s in line.split("=", 1))
        try:
            if key == "surface":
                g, r = val.split(",")
                cfg.surface = (int(g), int(r))
            elif key.startswith("bound."):
                if key[6:] not in BOUND_KEYS:
                    raise UsageError(f"{path}:{n}: unknown bound {key!r}")
                cfg.bounds[key[6:]] = int(val)
            elif key == "output_dir":
                cfg.output_dir = val
            elif key == "format":
                cfg.format = val
            elif key == "overflow_limit":
                cfg.overflow_limit = int(val)
            elif key == "threads":
                cfg.threads = int(val)
            elif key == "criteria":
                cfg.criteria = tuple(int(x) for x in val.split(","))
            else:
                raise UsageError(f"{path}:{n}: unknown key {key!r}")
        except ValueError as err:
            raise UsageError(f"{path}:{n}: {err}") from None
    env = os.environ.get("LAMINA_THREADS")
    if env:
        cfg.threads = int(env)
    cfg.validate()
    return cfg


# -- emission ------------------------------------------------------------------

def _exact(obj):
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): _exact(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_exact(v) for v in obj]
    return obj


def dumps(obj) -> str:
    body = dict(_exact(obj)) if isinstance(obj, dict) else {"result": _exact(obj)}
    body.setdefault("schema_version", SCHEMA_VERSION)
    return json.dumps(body, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_report(results: dict, out_dir: str | None, name: str, stream=None) -> str:
    text = dumps(results)
    if out_dir:
        try:
            d = Path(out_dir)
            d.mkdir(parents=True, exist_ok=True)
            (d / f"{name}.json").write_text(text)
        except OSError as err:
            raise IOFailure(str(err)) from err
    (stream or sys.stdout).write(text)
    return text


# -- helpers -------------------------------------------------------------------

def _pd(g, r):
    from .surface import make_surface, standard_pants_decomposition
    return standard_pants_decomposition(make_surface(g, r))


def _vec(text: str, pd=None):
    from .dtcoord import from_json
    try:
        return from_json(json.loads(text), pd)
    except (ValueError, KeyError, TypeError) as err:
        raise UsageError(f"bad DT vector {text!r}: {err}") from None


# -- subcommands -----------------------------------------------------------------

def cmd_surface_info(a) -> int:
    pd = _pd(a.genus, a.boundary)
    s = pd.surface
    emit_report({"chi": s.euler_characteristic, "dim": s.ml_dimension,
                 "pants_curves": s.pants_curve_count, "pants": pd.pants_count,
                 "gluing": pd.gluing_table()}, None, "surface")
    return 0


def cmd_enumerate(a) -> int:
    from .dtcoord import enumerate_curves
    cs = enumerate_curves(_pd(a.genus, a.boundary), a.bound)
    if a.format == "csv":
        K = cs[0].decomposition.curve_count if cs else 0
        head = [f"m{i},t{i}" for i in range(K)]
        sys.stdout.write(",".join(head) + "\n")
        for c in cs:
            sys.stdout.write(",".join(f"{_exact(m)},{_exact(t)}"
                                      for m, t in zip(c.weights, c.twists)) + "\n")
    else:
        emit_report({"bound": a.bound, "classes": [c.to_json() for c in cs]}, None, "enumerate")
    return 0


def cmd_intersect(a) -> int:
    from .isect import geometric_intersection
    x, y = _vec(a.a), _vec(a.b)
    sys.stdout.write(f"{geometric_intersection(x, y)}\n")
    return 0


def cmd_table(a) -> int:
    from .dtcoord import enumerate_curves
    from .isect import intersection_table
    t = intersection_table(enumerate_curves(_pd(a.genus, a.boundary), a.bound))
    if a.format == "csv":
        sys.stdout.write(t.to_csv())
    else:
        emit_report({"classes": [str(c) for c in t.classes], "values": t.values}, None, "table")
    return 0


def cmd_lemma2(a) -> int:
    from .rigidity import ANOMALY, verify_lemma2
    pd = _pd(a.genus, a.boundary)
    res = verify_lemma2(_vec(a.alpha, pd), _vec(a.beta, pd), a.bound)
    emit_report(res.to_json(), None, "lemma2")
    return 1 if res.verdict == ANOMALY else 0


def cmd_cut(a) -> int:
    from .dtcoord import enumerate_curves
    from .rigidity import PoolTooSmall, cutting_system, zero_set_rank
    alpha = _vec(a.alpha)
    pool = enumerate_curves(alpha.decomposition, a.bound)
    try:
        system = cutting_system(alpha, pool, a.bound)
    except PoolTooSmall as err:
        emit_report({"found": False, "reason": str(err)}, None, "cut")
        return 1
    rank = zero_set_rank(system, a.bound).rank
    emit_report({"found": True, "system": [c.to_json() for c in system], "rank": rank},
                None, "cut")
    return 0


def cmd_graph(a) -> int:
    from .dtcoord import enumerate_curves
    from .rigidity import disjointness_graph
    pool = enumerate_curves(_pd(a.genus, a.boundary), a.bound)
    if a.format == "svg":
        if (a.genus, a.boundary) != (1, 1):
            raise UsageError("svg output is only available for -g 1 -r 1")
        from .torus import farey_svg, pair_of_vector
        sys.stdout.write(farey_svg([pair_of_vector(c) for c in pool]))
        return 0
    g = disjointness_graph(pool)
    if a.format == "dot":
        sys.stdout.write(g.to_dot())
    else:
        emit_report({"vertices": [str(v) for v in g.vertices],
                     "edges": [list(e) for e in g.edges]}, None, "graph")
    return 0


def cmd_gl2_classify(a) -> int:
    from .torus import (Degenerate, IntegerPLMap, NotInduced, WitnessNotFound,
                        classify_pl_map, find_noninduced_witness)
    try:
        a1, b1, a2, b2 = (int(x) for x in a.matrix.split(","))
    except ValueError:
        raise UsageError("--matrix expects four comma-separated integers") from None
    phi = IntegerPLMap(a1, b1, a2, b2)
    try:
        kind = classify_pl_map(phi)
    except Degenerate as err:
        emit_report({"classification": "Degenerate", "reason": str(err)}, None, "gl2")
        return 1
    out = {"classification": kind, "det": phi.det}
    if kind == NotInduced:
        bound = a.witness_bound or abs(phi.det) + 1
        try:
            w = find_noninduced_witness(phi, bound)
            out["witness"] = {"pair": [w.pair.a, w.pair.b], "c": w.c, "d": w.d,
                              "divisor": w.divisor}
        except WitnessNotFound as err:
            out["witness"] = None
            out["reason"] = str(err)
            emit_report(out, None, "gl2")
            return 1
    emit_report(out, None, "gl2")
    return 0


def cmd_cover_check(a) -> int:
    from .cover import base_decomposition, lift_table, verify_cover_scaling
    from .dtcoord import enumerate_curves
    pool = enumerate_curves(base_decomposition(), a.bound)
    rep = verify_cover_scaling(pool, lift_table(a.bound))
    emit_report(rep.to_json(), None, "cover")
    return 0 if rep.ok else 1


# config key ``bound.<name>`` -> (criterion, keyword of its check)
BOUND_KEYS = {"torus": (1, "bound"), "four_holed": (2, "bound"), "cover": (4, "bound"),
              "lift": (5, "bound"), "gl2_entries": (6, "entry_range"),
              "pairing": (7, "bound"), "embedding": (8, "bound"),
              "embedding_pool": (8, "pool_bound"), "cut_pool": (9, "pool_bound")}


def _run_check(job):
    from . import acceptance
    from .isect import set_crossing_limit
    number, kwargs, limit = job
    set_crossing_limit(limit)
    return acceptance.CHECKS[number - 1](**kwargs).to_json()


def cmd_verify_all(a) -> int:
    cfg = load_config(a.config)
    jobs = []
    for n in cfg.criteria:
        kw = {arg: cfg.bounds[k] for k, (c, arg) in BOUND_KEYS.items()
              if c == n and k in cfg.bounds}
        jobs.append((n, kw, cfg.overflow_limit))
    if cfg.threads > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as ex:
            results = list(ex.map(_run_check, jobs))
    else:
        results = [_run_check(j) for j in jobs]
    for r in results:
        tag = "PASS" if r["passed"] else "FAIL"
        sys.stderr.write(f"[{tag}] {r['criterion']:2d} {r['name']}\n")
    ok = all(r["passed"] for r in results)
    emit_report({"passed": ok, "criteria": results, "config": asdict(cfg)},
                cfg.output_dir, "verify")
    return 0 if ok else 1


# -- parser ----------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lamina", description="Curves and measured laminations on surfaces.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def surf(sp):
        sp.add_argument("-g", "--genus", type=int, required=True)
        sp.add_argument("-r", "--boundary", type=int, required=True)

    s = sub.add_parser("surface").add_subparsers(dest="sub", required=True, parser_class=_Parser)
    sp = s.add_parser("info")
    surf(sp)
    sp.set_defaults(func=cmd_surface_info)

    sp = sub.add_parser("enumerate")
    surf(sp)
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("intersect")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.set_defaults(func=cmd_intersect)

    sp = sub.add_parser("table")
    surf(sp)
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("lemma2")
    surf(sp)
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--bound", type=int, required=True)
    sp.set_defaults(func=cmd_lemma2)

    sp = sub.add_parser("cut")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--bound", type=int, required=True)
    sp.set_defaults(func=cmd_cut)

    sp = sub.add_parser("graph")
    surf(sp)
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--format", choices=["dot", "json", "svg"], default="dot")
    sp.set_defaults(func=cmd_graph)

    s = sub.add_parser("gl2").add_subparsers(dest="sub", required=True, parser_class=_Parser)
    sp = s.add_parser("classify")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--witness-bound", type=int, default=None)
    sp.set_defaults(func=cmd_gl2_classify)

    s = sub.add_parser("cover").add_subparsers(dest="sub", required=True, parser_class=_Parser)
    sp = s.add_parser("check")
    sp.add_argument("--bound", type=int, default=4)
    sp.set_defaults(func=cmd_cover_check)

    s = sub.add_parser("verify").add_subparsers(dest="sub", required=True, parser_class=_Parser)
    sp = s.add_parser("all")
    sp.add_argument("--config", required=True)
    sp.set_defaults(func=cmd_verify_all)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        for name in ("bound", "witness_bound"):
            v = getattr(args, name, None)
            if v is not None and v < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be >= 1")
        return args.func(args)
    except UsageError as err:
        sys.stderr.write(f"usage error: {err}\n\n{parser.format_help()}")
        return 2
    except ValueError as err:
        # invalid surfaces, vectors and the like
        sys.stderr.write(f"error: {err}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
