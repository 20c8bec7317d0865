"""Command-line entry point: ``tepc gen|label|check|search|sweep|export``.

Exit codes: 0 success / TEPC, 1 certified not TEPC (or a failing sweep
row), 2 usage or input error, 3 degenerate case rejected.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from tepc import constructions as cons
from tepc import graphs
from tepc.errors import InvalidParameter, NotLabelable, UnsupportedSize
from tepc.io import (
    DocumentError,
    dump_json,
    graph_to_doc,
    labeling_to_doc,
    load_graph,
    load_labeling,
    to_dot,
)
from tepc.labeling import tally, verdict
from tepc.search import DEFAULT_EDGE_BUDGET, count_tepc, find_tepc

EXIT_OK = 0
EXIT_NOT_TEPC = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3

DEFAULT_ORACLE_MAX_EDGES = 16

GEN_FAMILIES = ("path", "cycle", "fan", "wheel", "paw", "corona-pp", "corona-pc")


class UsageError(Exception):
    pass


def _emit(obj, machine: bool, human: str) -> None:
    print(json.dumps(obj) if machine else human)


def _write_or_print(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


# --- gen -------------------------------------------------------------------

def _need(value: int | None, flag: str, family: str) -> int:
    if value is None:
        raise UsageError(f"family {family} requires {flag}")
    return value


def build_family(family: str, n: int | None, m: int | None) -> graphs.Graph:
    if family == "path":
        return graphs.build_path(_need(n, "-n", family))
    if family == "cycle":
        return graphs.build_cycle(_need(m, "-m", family))
    if family == "fan":
        return graphs.build_fan(_need(m, "-m", family))
    if family == "wheel":
        return graphs.build_wheel(_need(m, "-m", family))
    if family == "paw":
        return graphs.build_paw()
    n, m = _need(n, "-n", family), _need(m, "-m", family)
    if n < 1 or m < 1:
        raise InvalidParameter(f"invalid-parameter: n and m must be positive (n={n}, m={m})")
    if family == "corona-pp":
        return graphs.corona_path_path(n, m)[0]
    return graphs.corona_path_cycle(n, m)[0]


def cmd_gen(args: argparse.Namespace) -> int:
    g = build_family(args.family, args.n, args.m)
    text = json.dumps(graph_to_doc(g)) + "\n"
    _write_or_print(text, args.output)
    return EXIT_OK


# --- label -----------------------------------------------------------------

def _predicted(family: str, n: int, m: int) -> cons.PredictedTally | None:
    return cons.predicted_tally(family, n, m) if n >= 2 else None


def cmd_label(args: argparse.Namespace) -> int:
    family = args.family.upper()
    try:
        result = cons.label_corona(family, args.n, args.m)
    except NotLabelable as exc:
        print(f"error: {exc} (not-labelable)", file=sys.stderr)
        return EXIT_DEGENERATE
    t = tally(result.graph, result.labeling)
    pred = _predicted(family, args.n, args.m)
    record = {
        "family": family,
        "n": args.n,
        "m": args.m,
        "case": str(result.case),
        **verdict(t),
        "predicted": pred.as_dict() if pred else None,
    }
    if args.output:
        dump_json(labeling_to_doc(result.labeling), args.output)
    lines = [
        f"{family} n={args.n} m={args.m}  case {result.case}",
        f"e0={t.e0} e1={t.e1} v0={t.v0} v1={t.v1} gap={t.gap:+d}  tepc={t.is_tepc}",
    ]
    if pred:
        lines.append(
            f"predicted e0={pred.e0} e1={pred.e1} v0={pred.v0} v1={pred.v1} "
            f"[{pred.source.value}] match={pred.matches(t)}"
        )
        if pred.source is cons.Source.CORRECTED:
            lines.append(f"published vertex counts: v0={pred.stated_v0} v1={pred.stated_v1}")
    _emit(record, args.json, "\n".join(lines))
    return EXIT_OK if t.is_tepc else EXIT_NOT_TEPC


# --- check -----------------------------------------------------------------

def cmd_check(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    f = load_labeling(args.labeling, g)
    t = tally(g, f)
    _emit(
        verdict(t),
        args.json,
        f"e0={t.e0} e1={t.e1} v0={t.v0} v1={t.v1} gap={t.gap:+d}  "
        + ("TEPC" if t.is_tepc else "not TEPC"),
    )
    return EXIT_OK if t.is_tepc else EXIT_NOT_TEPC


# --- search ----------------------------------------------------------------

def cmd_search(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    run = count_tepc if args.count else find_tepc
    report = run(g, edge_budget=args.budget, jobs=args.jobs)
    doc = report.as_dict()
    human = "\n".join(f"{k}: {v}" for k, v in doc.items())
    _emit(doc, args.json, human)
    if report.witness is None and report.exhaustive:
        return EXIT_NOT_TEPC
    return EXIT_OK


# --- sweep -----------------------------------------------------------------

@dataclass
class SweepRow:
    family: str
    n: int
    m: int
    case: str
    tally: dict | None
    predicted: dict | None
    gap: int | None
    verdict: str  # pass | fail | excluded
    oracle_confirmed: bool | None

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def sweep_row(family: str, n: int, m: int, oracle_max_edges: int) -> SweepRow:
    family = family.upper()
    case = cons.case_of(family, n, m)
    if case.variant is cons.Variant.DEGENERATE:
        return SweepRow(family, n, m, str(case), None, None, None, "excluded (degree sequence (1,1))", None)
    result = cons.label_corona(family, n, m)
    t = tally(result.graph, result.labeling)
    pred = _predicted(family, n, m)
    oracle = None
    if result.graph.edge_count <= oracle_max_edges:
        oracle = find_tepc(result.graph, edge_budget=oracle_max_edges).witness is not None
    ok = t.is_tepc and (pred is None or pred.matches(t)) and oracle is not False
    return SweepRow(
        family, n, m, str(case), t.as_dict(), pred.as_dict() if pred else None,
        t.gap, "pass" if ok else "fail", oracle,
    )


def parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
        else:
            lo_i = hi_i = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use A..B or a single integer") from None
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo_i, hi_i + 1)


def _table(rows: list[SweepRow]) -> str:
    header = ("family", "n", "m", "case", "e0", "e1", "v0", "v1", "gap", "source", "oracle", "verdict")
    body = []
    for r in rows:
        t = r.tally or {}
        body.append((
            r.family, str(r.n), str(r.m), r.case.split("/")[1],
            *(str(t.get(k, "-")) for k in ("e0", "e1", "v0", "v1")),
            f"{r.gap:+d}" if r.gap is not None else "-",
            r.predicted["source"] if r.predicted else "-",
            {None: "-", True: "yes", False: "NO"}[r.oracle_confirmed],
            r.verdict,
        ))
    widths = [max(len(x) for x in col) for col in zip(header, *body)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    return "\n".join(fmt.format(*line).rstrip() for line in [header, *body])


def cmd_sweep(args: argparse.Namespace) -> int:
    family = args.family.upper()
    if family == "PC" and args.m_range.start < 3:
        raise InvalidParameter("P_n ∘ C_m sweeps need m >= 3")
    if args.n_range.start < 1 or args.m_range.start < 1:
        raise InvalidParameter("ranges must start at 1 or above")
    rows = [sweep_row(family, n, m, args.oracle_max_edges) for n in args.n_range for m in args.m_range]
    failed = [r for r in rows if r.verdict == "fail"]
    summary = {
        "rows": len(rows),
        "pass": sum(r.verdict == "pass" for r in rows),
        "excluded": sum(r.verdict.startswith("excluded") for r in rows),
        "fail": len(failed),
    }
    if args.json:
        for r in rows:
            print(json.dumps(r.as_dict()))
        print(json.dumps({"summary": summary}))
    else:
        print(_table(rows))
        print(f"\n{summary['pass']} pass, {summary['fail']} fail, {summary['excluded']} excluded")
    return EXIT_OK if not failed else EXIT_NOT_TEPC


# --- export ----------------------------------------------------------------

def cmd_export(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    f = load_labeling(args.labeling, g) if args.labeling else None
    _write_or_print(to_dot(g, f), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tepc", description="Total edge product cordial labeling toolkit")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable line-delimited JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a graph document")
    p.add_argument("--family", required=True, choices=GEN_FAMILIES)
    p.add_argument("-n", type=int)
    p.add_argument("-m", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("label", parents=[common], help="apply the constructive corona labeling")
    p.add_argument("family", choices=("pp", "pc", "PP", "PC"))
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("-o", "--output", help="labeling document to write")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("check", parents=[common], help="verify a labeling of a graph")
    p.add_argument("graph")
    p.add_argument("labeling")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", parents=[common], help="exhaustive search for a TEPC labeling")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=DEFAULT_EDGE_BUDGET, help="maximum edge count")
    p.add_argument("--count", action="store_true", help="count every TEPC labeling")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("sweep", parents=[common], help="label a parameter grid and tabulate verdicts")
    p.add_argument("family", choices=("pp", "pc", "PP", "PC"))
    p.add_argument("n_range", type=parse_range, metavar="N_RANGE")
    p.add_argument("m_range", type=parse_range, metavar="M_RANGE")
    p.add_argument("--oracle-max-edges", type=int, default=DEFAULT_ORACLE_MAX_EDGES)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("export", parents=[common], help="render a graph (and labeling) as DOT")
    p.add_argument("graph")
    p.add_argument("labeling", nargs="?")
    p.add_argument("--dot", action="store_true", help="DOT output (the only format)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidParameter, UnsupportedSize, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
