"""Command-line front end: ``edgezeta zeta|analyze|verify|pairs``.

Every report is deterministic for a given input; wall-clock timings are
only added with ``--timing``.  Exit status is 0 when all requested checks
pass, 1 when one fails and 2 for unreadable input or an exceeded cap.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Sequence

from .counting import Target, analyze_oracle
from .cycles import (
    are_isomorphic,
    brute_census,
    brute_clique_number,
    brute_count_edge_induced,
    brute_count_vertex_induced,
    brute_hamiltonian_count,
    euler_truncation_check,
    is_chordal_lexbfs,
    multivariate_euler_check,
)
from .graph import Graph, GraphError, cycle_graph, edge_induced, md2_core, to_symmetric_digraph
from .io import NamedGraph, ParseError, read_corpus, read_graph
from .poly import DEFAULT_SCALE_CAP, MultiPoly, ScaleCapExceeded, UniPoly
from .structure import classify_regularity, is_connected_regular
from .zeta import (
    ZetaOracle,
    arc_variable_names,
    bass_reciprocal,
    edge_zeta_reciprocal,
    ihara_reciprocal,
    signed_top_coefficient,
)

SCHEMA = 1
EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _coeffs(p: UniPoly) -> list[str]:
    return [str(c) for c in p.coeffs] or ["0"]


def _edge_zeta_dict(arcs, poly: MultiPoly) -> dict:
    names = arc_variable_names(arcs)
    terms = []
    for exps, c in sorted(poly.terms.items(), key=lambda kv: (sum(kv[0]), tuple(-e for e in kv[0]))):
        mono = " ".join(f"{names[i]}^{e}" if e > 1 else names[i] for i, e in enumerate(exps) if e)
        terms.append({"monomial": mono or "1", "coefficient": str(c)})
    return {"variables": names, "terms": terms}


def _emit(report: dict, as_json: bool, render) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        render(report)


def _load(path: str) -> NamedGraph:
    try:
        return read_graph(path)
    except (ParseError, GraphError) as exc:
        raise InputError(str(exc)) from exc


def _bass_status(g: Graph, p: UniPoly) -> str:
    if g.has_loops():
        return "skipped (loops)"
    return "pass" if bass_reciprocal(g) == p else "fail"


# ---------------------------------------------------------------------------
# zeta
# ---------------------------------------------------------------------------

def cmd_zeta(args: argparse.Namespace) -> int:
    ng = _load(args.file)
    g = ng.graph
    p = ihara_reciprocal(g)
    report: dict = {
        "schema": SCHEMA,
        "command": "zeta",
        "name": ng.name,
        "vertices": g.n,
        "edges": g.m,
        "reciprocal": _coeffs(p),
    }
    status = EXIT_OK
    if args.bass:
        report["bass_check"] = _bass_status(g, p)
        if report["bass_check"] == "fail":
            status = EXIT_FAILED
    if args.edge_zeta:
        arcs = to_symmetric_digraph(g)
        report["edge_zeta"] = _edge_zeta_dict(arcs, edge_zeta_reciprocal(arcs, cap=args.cap))

    def render(r: dict) -> None:
        print(f"graph: {r['name']} (n = {r['vertices']}, m = {r['edges']})")
        print(f"reciprocal: [{', '.join(r['reciprocal'])}]")
        print(f"polynomial: {p}")
        if "bass_check" in r:
            print(f"bass_check: {r['bass_check']}")
        if "edge_zeta" in r:
            parts = [f"{t['coefficient']}*{t['monomial']}" if t["monomial"] != "1" else t["coefficient"]
                     for t in r["edge_zeta"]["terms"]]
            print(f"edge_zeta ({len(parts)} terms): " + " + ".join(parts).replace("+ -", "- "))

    _emit(report, args.json, render)
    return status


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

def _oracle_check(core: Graph, counts: dict, max_cycle: int | None) -> list[str]:
    """Recompute every reported count by brute force; return the disagreements."""
    bad: list[str] = []

    def cmp(what: str, zeta_val, brute_val) -> None:
        if zeta_val != brute_val:
            bad.append(f"{what}: zeta={zeta_val} brute={brute_val}")

    for name, v in counts["s_e"].items():
        cmp(f"s_e[{name}]", v, brute_count_edge_induced(core, Target.parse(name).graph()))
    for name, v in counts["s_v"].items():
        cmp(f"s_v[{name}]", v, brute_count_vertex_induced(core, Target.parse(name).graph()))
    if counts["omega"] is not None and core.m:
        cmp("omega", counts["omega"], brute_clique_number(core))
    if counts["ham"] is not None:
        if core.n < 3:
            brute_ham = 0
        elif core.is_simple():
            brute_ham = brute_hamiltonian_count(core)
        else:
            brute_ham = brute_count_edge_induced(core, cycle_graph(core.n))
        cmp("ham", counts["ham"], brute_ham)
    if counts["holes"] is not None:
        top = core.n if max_cycle is None else min(core.n, max_cycle)
        census = brute_census(core, top)
        for k, v in counts["holes"].items():
            cmp(f"holes[{k}]", v, census.holes[int(k)])
        for k, v in counts["antiholes"].items():
            cmp(f"antiholes[{k}]", v, census.antiholes[int(k)])
        if counts["perfect"] is not None:
            cmp("perfect", counts["perfect"], census.perfect())
        if counts["chordal"] is not None:
            brute_chordal = is_chordal_lexbfs(core) if core.is_simple() else census.chordal()
            cmp("chordal", counts["chordal"], brute_chordal)
    return bad


def analysis_report(ng: NamedGraph, targets: list[Target] | None = None, max_cycle: int | None = None,
                    workers: int = 1, oracle_check: bool = False, timing: bool = False) -> tuple[dict, int]:
    """The full zeta-only analysis of one graph as a JSON-ready dict, plus an exit status."""
    t0 = time.perf_counter()
    g = ng.graph
    core = md2_core(g)
    kept = set(core.vertices)
    report: dict = {
        "schema": SCHEMA,
        "command": "analyze",
        "name": ng.name,
        "input": {"vertices": g.n, "edges": g.m, "format": ng.format},
        "md2_core": {
            "vertices": core.n,
            "edges": core.m,
            "pruned_vertices": [g.label(v) for v in g.vertices if v not in kept],
            "pruned_edges": g.m - core.m,
        },
    }
    oracle = ZetaOracle(core)
    p = oracle.full()
    report["reciprocal"] = _coeffs(p)
    report["edge_count_from_zeta"] = max(p.degree, 0) // 2
    verdict = classify_regularity(oracle) if core.m else None
    report["regularity"] = None if verdict is None else {"verdict": str(verdict), **verdict.to_dict()}
    report["connected"] = (
        is_connected_regular(oracle, verdict.k, verdict) if verdict is not None and verdict.is_regular() else None
    )
    counts = analyze_oracle(oracle, core.n, targets=targets, max_cycle=max_cycle, workers=workers).to_dict()
    report["counts"] = counts
    status = EXIT_OK
    if oracle_check:
        bad = _oracle_check(core, counts, max_cycle)
        report["oracle_check"] = {"ok": not bad, "divergent": bad}
        if bad:
            status = EXIT_FAILED
    if timing:
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 3), "queries": oracle.stats["queries"]}
    return report, status


def _render_analysis(r: dict) -> None:
    core = r["md2_core"]
    print(f"graph: {r['name']} (n = {r['input']['vertices']}, m = {r['input']['edges']})")
    pruned = ", ".join(core["pruned_vertices"]) or "none"
    print(f"md2 core: n = {core['vertices']}, m = {core['edges']} (pruned vertices: {pruned}; edges: {core['pruned_edges']})")
    print(f"reciprocal: [{', '.join(r['reciprocal'])}]")
    reg = r["regularity"]
    print(f"regularity: {reg['verdict'] if reg else 'n/a (no edges)'}")
    if reg and "ratio" in reg["evidence"]:
        print(f"  ratio: {reg['evidence']['ratio']}")
    if r["connected"] is not None:
        print(f"connected: {str(r['connected']).lower()}")
    c = r["counts"]
    rows = sorted(set(c["s_e"]) | set(c["s_v"]))
    if rows:
        print(f"{'target':<8}{'s_e':>8}{'s_v':>8}")
        for name in rows:
            print(f"{name:<8}{c['s_e'].get(name, '-'):>8}{c['s_v'].get(name, '-'):>8}")
    for key in ("omega", "ham", "chordal", "chordal_excluding_c4", "perfect"):
        if c[key] is not None:
            val = str(c[key]).lower() if isinstance(c[key], bool) else c[key]
            print(f"{key}: {val}")
    for key in ("holes", "antiholes"):
        if c[key]:
            print(f"{key}: " + ", ".join(f"{k}:{v}" for k, v in c[key].items()))
    if "oracle_check" in r:
        oc = r["oracle_check"]
        print("oracle_check: " + ("pass" if oc["ok"] else "FAIL"))
        for line in oc["divergent"]:
            print(f"  divergent: {line}")
    if "timing" in r:
        print(f"timing: {r['timing']['seconds']} s, {r['timing']['queries']} queries")


def _parse_targets(text: str | None) -> list[Target] | None:
    if text is None:
        return None
    try:
        return [Target.parse(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_analyze(args: argparse.Namespace) -> int:
    ng = _load(args.file)
    report, status = analysis_report(
        ng,
        targets=_parse_targets(args.targets),
        max_cycle=args.max_cycle,
        workers=args.threads,
        oracle_check=args.oracle_check,
        timing=args.timing,
    )
    _emit(report, args.json, _render_analysis)
    return status


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def verification_report(ng: NamedGraph, lmax: int = 12, samples: int = 32, seed: int = 0,
                        multivariate: int | None = None, cap: int = DEFAULT_SCALE_CAP) -> tuple[dict, int]:
    g = ng.graph
    checks: dict[str, dict] = {}
    euler = euler_truncation_check(g, lmax)
    checks["euler"] = {"status": "pass" if euler.ok else "fail", "lmax": lmax, "method": euler.method,
                       "prime_cycles": {str(k): str(v) for k, v in euler.cycle_counts.items()}}
    if not euler.ok:
        checks["euler"]["first_discrepancy"] = {
            "degree": euler.first_discrepancy, "euler": str(euler.expected), "determinant": str(euler.got)}
    p = ihara_reciprocal(g)
    checks["bass"] = {"status": _bass_status(g, p)}
    top_ok = p.coefficient(2 * g.m) == signed_top_coefficient(g)
    checks["top_coefficient"] = {"status": "pass" if top_ok else "fail",
                                 "value": str(p.coefficient(2 * g.m))}
    rng = random.Random(seed)
    oracle = ZetaOracle(g)
    bad = []
    for _ in range(samples):
        S = [j for j in range(g.m) if rng.random() < 0.5]
        if oracle.query(S) != ihara_reciprocal(edge_induced(g, S)):
            bad.append(S)
    checks["specialization"] = {"status": "pass" if not bad else "fail", "samples": samples, "seed": seed}
    if bad:
        checks["specialization"]["first_failure"] = bad[0]
    if multivariate is not None:
        arcs = to_symmetric_digraph(g)
        ok = multivariate_euler_check(arcs, multivariate, cap=cap)
        checks["edge_zeta_euler"] = {"status": "pass" if ok else "fail", "max_degree": multivariate}
    failed = any(c["status"] == "fail" for c in checks.values())
    report = {"schema": SCHEMA, "command": "verify", "name": ng.name, "checks": checks, "ok": not failed}
    return report, EXIT_FAILED if failed else EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    ng = _load(args.file)
    report, status = verification_report(ng, args.lmax, args.samples, args.seed, args.multivariate, args.cap)

    def render(r: dict) -> None:
        print(f"graph: {r['name']}")
        for name, c in r["checks"].items():
            print(f"{name}: {c['status']}")
        print("all checks: " + ("pass" if r["ok"] else "FAIL"))

    _emit(report, args.json, render)
    return status


# ---------------------------------------------------------------------------
# pairs
# ---------------------------------------------------------------------------

def _summary(g: Graph, max_vertices: int) -> dict:
    core = md2_core(g)
    out: dict = {"vertices": g.n, "components": len(g.components())}
    if core.n > max_vertices:
        return out
    c = analyze_oracle(ZetaOracle(core), core.n)
    out.update(ham=c.ham, omega=c.omega, chordal=c.chordal, perfect=c.perfect)
    return out


def _flags(a: dict, b: dict) -> list[str]:
    out = []
    labels = {"vertices": "vertex counts", "components": "component counts"}
    for key in ("vertices", "components"):
        if a[key] != b[key]:
            out.append(f"{labels[key]} differ ({a[key]} vs {b[key]})")
    names = {"ham": "Ham", "omega": "omega", "chordal": "chordal", "perfect": "perfect"}
    for key, label in names.items():
        if key in a and key in b and a[key] != b[key]:
            fmt = (lambda v: str(v).lower()) if isinstance(a[key], bool) else str
            out.append(f"same zeta, {label} differs ({fmt(a[key])} vs {fmt(b[key])})")
    return out


def pairs_report(graphs: Sequence[NamedGraph], max_vertices: int = 12) -> dict:
    buckets: dict[tuple[int, ...], list[NamedGraph]] = {}
    for ng in graphs:
        buckets.setdefault(ihara_reciprocal(ng.graph).coeffs, []).append(ng)
    out = []
    for key, members in buckets.items():
        distinct: list[NamedGraph] = []
        duplicates = []
        for ng in members:
            twin = next((d for d in distinct if are_isomorphic(d.graph, ng.graph)), None)
            if twin is None:
                distinct.append(ng)
            else:
                duplicates.append({"name": ng.name, "isomorphic_to": twin.name})
        entry: dict = {
            "reciprocal": [str(c) for c in key] or ["0"],
            "graphs": [d.name for d in distinct],
            "isomorphic_duplicates": duplicates,
            "flags": [],
        }
        if len(distinct) > 1:
            summaries = [_summary(d.graph, max_vertices) for d in distinct]
            for i in range(len(distinct)):
                for j in range(i + 1, len(distinct)):
                    for f in _flags(summaries[i], summaries[j]):
                        entry["flags"].append({"pair": [distinct[i].name, distinct[j].name], "flag": f})
        out.append(entry)
    return {"schema": SCHEMA, "command": "pairs", "graphs": len(graphs), "buckets": out}


def cmd_pairs(args: argparse.Namespace) -> int:
    graphs: list[NamedGraph] = []
    for path in args.corpus:
        try:
            graphs.extend(read_corpus(path))
        except (ParseError, GraphError) as exc:
            raise InputError(str(exc)) from exc
    report = pairs_report(graphs, args.max_vertices)

    def render(r: dict) -> None:
        print(f"{r['graphs']} graphs, {len(r['buckets'])} buckets")
        for i, b in enumerate(r["buckets"], 1):
            print(f"bucket {i}: size {len(b['graphs'])}: {', '.join(b['graphs'])}")
            for d in b["isomorphic_duplicates"]:
                print(f"  duplicate: {d['name']} is isomorphic to {d['isomorphic_to']}")
            for f in b["flags"]:
                print(f"  {f['pair'][0]} / {f['pair'][1]}: {f['flag']}")

    _emit(report, args.json, render)
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgezeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    z = sub.add_parser("zeta", help="print the reciprocal Ihara polynomial")
    z.add_argument("file")
    z.add_argument("--bass", action="store_true", help="cross-check against the three-term determinant")
    z.add_argument("--edge-zeta", action="store_true", help="also print the multivariate edge zeta polynomial")
    z.add_argument("--cap", type=int, default=DEFAULT_SCALE_CAP, help="maximum arc count for --edge-zeta")
    z.add_argument("--json", action="store_true")
    z.set_defaults(func=cmd_zeta)

    a = sub.add_parser("analyze", help="zeta-only structure and subgraph counts")
    a.add_argument("file")
    a.add_argument("--max-cycle", type=int, default=None, help="largest hole/antihole size to count")
    a.add_argument("--targets", default=None, help="comma-separated targets such as K3,C5,Cbar7")
    a.add_argument("--oracle-check", action="store_true", help="recompute every count by brute force")
    a.add_argument("--threads", type=int, default=1, help="worker threads for subset scans")
    a.add_argument("--timing", action="store_true", help="include wall-clock time (breaks byte-identical output)")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="Euler product, Bass and specialization identities")
    v.add_argument("file")
    v.add_argument("--lmax", type=int, default=12)
    v.add_argument("--samples", type=int, default=32, help="random edge subsets to specialize")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--multivariate", type=int, default=None, metavar="D",
                   help="also check the edge zeta Euler product to total degree D")
    v.add_argument("--cap", type=int, default=DEFAULT_SCALE_CAP)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("pairs", help="bucket a corpus by reciprocal polynomial")
    p.add_argument("corpus", nargs="+")
    p.add_argument("--max-vertices", type=int, default=12, help="skip invariant flags for larger md2 cores")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pairs)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ScaleCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
