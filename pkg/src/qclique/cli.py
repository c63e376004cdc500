"""``clique`` command: read a DIMACS graph, run one or all engines, print a report."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .circuit import GateCounts, build_layout, build_oracle, export_gates, export_layout
from .graph import DimacsError, Graph, complement_edges, parse_dimacs, vertex_set, vertices_of
from .simulator import DEFAULT_SEED, ORACLE_COUNT, PAPER_CAP, GroverConfig
from .solver import BRUTE, MOLECULAR, QUANTUM, SolveReport, TraceEntry, reports_agree, solve

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2, 3
ENGINES = (QUANTUM, MOLECULAR, BRUTE)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="clique", description="Maximum clique via Grover search over a reversible oracle.")
    p.add_argument("path", help="DIMACS edge file, or '-' for stdin")
    p.add_argument("--engine", choices=(*ENGINES, "all"), default="all")
    p.add_argument("--mode", choices=(ORACLE_COUNT, PAPER_CAP), default=ORACLE_COUNT)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--retries", type=int, default=3)
    p.add_argument("--shots", type=int, default=1)
    p.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    p.add_argument("--dump-gates", metavar="PATH", help="write the oracle gate list for the answer size")
    p.add_argument("--dump-layout", metavar="PATH", help="write the wire name map")
    return p


def report_to_dict(r: SolveReport) -> dict:
    return {
        "engine": r.engine,
        "n": r.n,
        "theta": r.theta,
        "m": r.m,
        "clique_size": r.clique_size,
        "witness": vertices_of(r.witness),
        "trace": [
            {"w": t.w, "iterations": t.iterations, "marked": t.marked if t.marked is not None else -1,
             "accepted": t.accepted}
            for t in r.trace
        ],
        "resources": {
            "qubits": r.qubits,
            "hadamard": r.hadamard,
            "not": r.gate_counts.not_count,
            "cnot": r.gate_counts.cnot_count,
            "ccnot": r.gate_counts.ccnot_count,
            "oracle_calls": r.total_oracle_calls,
        },
        "seed": r.seed if r.seed is not None else -1,
    }


def report_from_dict(d: dict) -> SolveReport:
    res = d["resources"]
    return SolveReport(
        engine=d["engine"],
        n=d["n"],
        theta=d["theta"],
        m=d["m"],
        clique_size=d["clique_size"],
        witness=vertex_set(d["witness"]),
        trace=[TraceEntry(t["w"], t["iterations"], None if t["marked"] < 0 else t["marked"], t["accepted"])
               for t in d["trace"]],
        gate_counts=GateCounts(res["not"], res["cnot"], res["ccnot"]),
        qubits=res["qubits"],
        hadamard=res["hadamard"],
        total_oracle_calls=res["oracle_calls"],
        seed=None if d["seed"] < 0 else d["seed"],
    )


def emit_report(report: SolveReport, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report_to_dict(report), sort_keys=True)
    lines = [
        f"engine: {report.engine}",
        f"graph: n={report.n} theta={report.theta} m={report.m}",
        f"clique size: {report.clique_size}",
        f"witness: {' '.join(map(str, vertices_of(report.witness)))}",
    ]
    for t in report.trace:
        marked = "?" if t.marked is None else t.marked
        lines.append(f"  w={t.w} iterations={t.iterations} marked={marked} "
                     f"{'accepted' if t.accepted else 'rejected'}")
    if report.engine == QUANTUM:
        gc = report.gate_counts
        lines += [
            f"qubits: {report.qubits}",
            f"hadamard per call: {report.hadamard} (choice wires + kickback, applied implicitly by the simulator)",
            f"oracle gates: NOT={gc.not_count} CNOT={gc.cnot_count} CCNOT={gc.ccnot_count}",
            f"oracle calls: {report.total_oracle_calls}",
            f"seed: {report.seed}",
        ]
    return "\n".join(lines)


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_dimacs(sys.stdin.read())
    with open(path) as fh:
        return parse_dimacs(fh.read())


def run(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
        cfg = GroverConfig(mode=args.mode, retries=args.retries, seed=args.seed, shots=args.shots)
    except (UsageError, ValueError) as exc:
        print(f"clique: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        g = _read_graph(args.path)
    except (OSError, DimacsError, UnicodeDecodeError) as exc:
        print(f"clique: {exc}", file=sys.stderr)
        return EXIT_INPUT

    engines = ENGINES if args.engine == "all" else (args.engine,)
    reports = [solve(g, e, cfg) for e in engines]

    if args.dump_layout or args.dump_gates:
        edges = complement_edges(g)
        layout = build_layout(g.n, len(edges))
        if args.dump_layout:
            with open(args.dump_layout, "w") as fh:
                fh.write(export_layout(layout))
        if args.dump_gates:
            w = max(reports[0].clique_size, 1)
            with open(args.dump_gates, "w") as fh:
                fh.write(export_gates(layout, build_oracle(layout, edges, w)))

    agree = reports_agree(reports, g)
    if args.json:
        if len(reports) == 1:
            print(emit_report(reports[0], "json"))
        else:
            payload = {"reports": [report_to_dict(r) for r in reports], "agree": agree}
            print(json.dumps(payload, sort_keys=True))
    else:
        print("\n\n".join(emit_report(r) for r in reports))
        if len(reports) > 1:
            print(f"\ncross-validation: {'engines agree' if agree else 'MISMATCH'}")
    return EXIT_OK if agree else EXIT_MISMATCH


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
