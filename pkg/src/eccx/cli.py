"""Command-line front end.

Subcommands ``analyze``, ``verify``, ``construct`` and ``scan`` print JSON
(or CSV for flat tables).  Exit codes: 0 success, 1 internal error,
2 bad input, 3 theorem hypothesis violated, 4 verification FAIL.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import constructions, theorems
from .errors import EccxError, HypothesisError, NumericError, ParameterError, ParseError
from .formats import parse_graph6, read_graphs, serialize_graph6
from .graph import Graph, family, line_graph
from .linalg import COMPARE_TOL, GROUP_TOL, energy, group, sym_eigenvalues
from .metrics import (
    check_radius_bound,
    epsilon_wiener,
    is_epsilon_irreducible,
    is_epsilon_regular,
    profile,
)

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_FAIL = 0, 1, 2, 3, 4

CONSTRUCT_FAMILIES = ("pair12t", "pair6t1", "pair-sv", "pair-se", "triplet-sv", "triplet-se")
SCAN_FAMILIES = {
    "k3-svjoin-kn": "k3_svjoin_kn",
    "k11-sejoin-kn": "k11_sejoin_kn",
    "join-union-complete": "join_union_complete",
}

_NAMED = {"petersen": ("petersen", []), "prism": ("prism", [])}
_PATTERN = re.compile(r"^([KCPS])(\d+)(?:,(\d+))?$")


# ---------------------------------------------------------------------------
# operand specs


def parse_operand(spec: str) -> Graph:
    """Turn an operand spec into a graph.

    Accepted: ``K5``, ``K3,3``, ``C6``, ``P4``, ``S5`` (star on 5 vertices),
    ``petersen``, ``prism``, ``L(...)``, ``L2(...)``, ``g6:<code>`` and paths
    to graph6 / JSON files (the first graph is used).
    """
    s = spec.strip()
    for prefix, depth in (("L2(", 2), ("L(", 1)):
        if s.startswith(prefix) and s.endswith(")"):
            g = parse_operand(s[len(prefix):-1])
            inner = g.label
            for _ in range(depth):
                g = line_graph(g)
            return g.with_label(f"{prefix}{inner})")
    if s.startswith("g6:"):
        return parse_graph6(s[3:]).with_label(s[3:])
    if s.lower() in _NAMED:
        name, params = _NAMED[s.lower()]
        return family(name, params)
    m = _PATTERN.match(s)
    if m:
        kind, a, b = m.group(1), int(m.group(2)), m.group(3)
        if b is not None:
            if kind != "K":
                raise ParseError(f"two parameters only make sense for K, got {spec!r}")
            return family("complete_bipartite", [a, int(b)])
        name = {"K": "complete", "C": "cycle", "P": "path", "S": "star"}[kind]
        return family(name, [a]).with_label(s)
    path = Path(s)
    if path.is_file():
        graphs = read_graphs(path.read_text(encoding="utf-8"))
        return graphs[0].with_label(graphs[0].label or path.name)
    raise ParseError(f"unrecognised graph spec {spec!r}")


def _read_input(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text(encoding="utf-8")


def _threads() -> int:
    raw = os.environ.get("ECCX_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ParameterError(f"ECCX_THREADS must be an integer, got {raw!r}") from None


def _map(fn, items):
    """Apply ``fn`` to each item, possibly in parallel; results keep input order."""
    workers = min(_threads(), max(1, len(items)))
    if workers == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _positive(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"tolerance must be positive, got {text}")
    return value


def _csv(rows: list[list], header: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _spectrum_rows(label: str, spec) -> list[list]:
    return [[label, f"{v:.12g}", k] for v, k in spec]


# ---------------------------------------------------------------------------
# commands


def _analyze_one(g: Graph, group_tol: float) -> dict:
    prof = profile(g)
    spec = group(sym_eigenvalues(prof.eps_matrix), group_tol)
    try:
        bound = check_radius_bound(g)
        bound_json = {"rho": float(f"{bound.rho:.12g}"), "bound": float(f"{bound.bound:.12g}"),
                      "holds": True, "equality": bound.equality}
    except AssertionError as exc:
        bound_json = {"holds": False, "message": str(exc)}
    return {
        "label": g.label,
        "order": g.n,
        "graph6": serialize_graph6(g),
        "eccentricities": prof.ecc.tolist(),
        "radius": prof.radius,
        "diameter": prof.diameter,
        "eps_matrix": prof.eps_matrix.tolist(),
        "spectrum": spec.to_json(),
        "energy": float(f"{energy(spec):.12g}"),
        "wiener": int(epsilon_wiener(g)),
        "irreducible": is_epsilon_irreducible(g),
        "epsilon_regular": is_epsilon_regular(g),
        "self_centered": prof.radius == prof.diameter,
        "radius_bound": bound_json,
    }


def cmd_analyze(args) -> tuple[object, int]:
    graphs = [parse_operand(s) for s in args.graphs]
    if args.input:
        graphs += read_graphs(_read_input(args.input))
    if not graphs:
        raise ParseError("no graphs given; pass specs or --input")
    reports = _map(lambda g: _analyze_one(g, args.group_tol), graphs)
    if args.format == "csv":
        rows = []
        for i, rep in enumerate(reports):
            label = rep["label"] or f"#{i}"
            rows += [[label, e["value"], e["multiplicity"]] for e in rep["spectrum"]]
        return _csv(rows, ["graph", "value", "multiplicity"]), EXIT_OK
    return reports if len(reports) > 1 else reports[0], EXIT_OK


def _corpus_lines(text: str) -> list[list[str]]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def cmd_verify(args) -> tuple[object, int]:
    if args.input:
        jobs = _corpus_lines(_read_input(args.input))
        if args.theorem or args.operands:
            raise ParseError("give either a theorem with operands or --input, not both")
    else:
        if not args.theorem:
            raise ParseError("missing theorem id")
        jobs = [[args.theorem, *args.operands]]
    for job in jobs:
        if job[0] not in theorems.THEOREMS:
            raise ParseError(f"unknown theorem {job[0]!r}; expected one of {', '.join(theorems.THEOREMS)}")
    parsed = [(job[0], [parse_operand(s) for s in job[1:]]) for job in jobs]
    single = not args.input

    def run(item):
        tid, graphs = item
        try:
            return theorems.verify(tid, graphs, tol=args.tol, group_tol=args.group_tol).to_json()
        except HypothesisError as exc:
            if single:
                raise
            return {"theorem": tid, "operands": [g.label for g in graphs], "result": "SKIP", "reason": str(exc)}

    reports = _map(run, parsed)
    code = EXIT_FAIL if any(r["result"] == "FAIL" for r in reports) else EXIT_OK
    if args.format == "csv":
        rows = [[r["theorem"], " ".join(str(o) for o in r["operands"]), r.get("order", ""),
                 r.get("max_deviation", ""), r["result"]] for r in reports]
        return _csv(rows, ["theorem", "operands", "order", "max_deviation", "result"]), code
    return (reports[0] if single else reports), code


def cmd_construct(args) -> tuple[object, int]:
    if args.family == "pair12t":
        report = constructions.equienergetic_pair_12t(args.t)
    elif args.family == "pair6t1":
        report = constructions.equienergetic_pair_6t1(args.t)
    else:
        kind, op = args.family.split("-")
        report = constructions.subdivision_join_family(parse_operand(args.base), args.t, f"{op}_{kind}")
    if args.format == "csv":
        rows = []
        for (label, _), spec in zip(report.graphs, report.spectra):
            rows += _spectrum_rows(label, spec)
        return _csv(rows, ["graph", "value", "multiplicity"]), EXIT_OK
    return report.to_json(), EXIT_OK


def cmd_scan(args) -> tuple[object, int]:
    name = SCAN_FAMILIES[args.family]
    lo = args.min if args.min is not None else (1 if name == "join_union_complete" else 2)
    rows = constructions.integral_family_scan(name, lo, args.nmax)
    if args.format == "csv":
        table = [[" ".join(map(str, r.params)), r.is_integral, r.predicate,
                  "" if r.certificate is None else " ".join(map(str, r.certificate))] for r in rows]
        return _csv(table, ["params", "integral", "predicate", "certificate"]), EXIT_OK
    hits = [list(r.params) if len(r.params) > 1 else r.params[0] for r in rows if r.is_integral]
    return {
        "family": args.family,
        "range": [lo, args.nmax],
        "hits": hits,
        "all_agree": all(r.agree for r in rows),
        "rows": [{"params": list(r.params), "integral": r.is_integral, "predicate": r.predicate,
                  "certificate": None if r.certificate is None else list(r.certificate)} for r in rows],
    }, EXIT_OK


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--tol", type=_positive, default=COMPARE_TOL, help="spectrum comparison tolerance")
    common.add_argument("--group-tol", type=_positive, default=GROUP_TOL, help="eigenvalue grouping tolerance")

    parser = argparse.ArgumentParser(prog="eccx", description="Eccentricity matrices and their spectra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="eccentricity data for graphs")
    p.add_argument("graphs", nargs="*", help="graph specs such as K4, C5, petersen, g6:Bw")
    p.add_argument("--input", help="graph6 or JSON edge-list file, '-' for stdin")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", parents=[common], help="closed-form spectrum against numerics")
    p.add_argument("theorem", nargs="?", help=", ".join(theorems.THEOREMS))
    p.add_argument("operands", nargs="*")
    p.add_argument("--input", help="corpus file: one '<theorem> <operand>...' per line")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", parents=[common], help="equienergetic families")
    p.add_argument("family", choices=CONSTRUCT_FAMILIES)
    p.add_argument("t", type=int, help="the cubic graphs have 2t vertices")
    p.add_argument("--base", default="K3", help="regular base graph for the pair-/triplet- families")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("scan", parents=[common], help="integrality scans")
    p.add_argument("family", choices=tuple(SCAN_FAMILIES))
    p.add_argument("nmax", type=int)
    p.add_argument("--min", type=int, default=None)
    p.set_defaults(func=cmd_scan)
    return parser


def _emit(payload, args) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        payload, code = args.func(args)
        _emit(payload, args)
        return code
    except HypothesisError as exc:
        print(f"eccx: hypothesis not met: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except NumericError as exc:
        print(f"eccx: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (EccxError, OSError, ValueError) as exc:
        print(f"eccx: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001
        print(f"eccx: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
