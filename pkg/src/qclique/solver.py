"""Maximum-clique engines behind one report type: quantum (Grover), molecular, brute force."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import molecular
from .circuit import GateCounts, build_oracle, count_gates
from .graph import Graph, brute_force_max_clique, is_clique
from .simulator import (
    ORACLE_COUNT,
    GroverConfig,
    OracleBundle,
    doubling_schedule,
    grover_search,
    iteration_cap,
    optimal_iterations,
)

QUANTUM, MOLECULAR, BRUTE = "quantum", "molecular", "brute"


@dataclass
class TraceEntry:
    w: int
    iterations: int
    marked: int | None
    accepted: bool


@dataclass
class SolveReport:
    engine: str
    n: int
    theta: int
    m: int
    clique_size: int
    witness: int
    trace: list[TraceEntry] = field(default_factory=list)
    gate_counts: GateCounts = field(default_factory=GateCounts)
    qubits: int = 0
    hadamard: int = 0
    total_oracle_calls: int = 0
    wall_time: float = 0.0
    seed: int | None = None


def _verify(g: Graph, x: int, w: int) -> bool:
    return x.bit_count() == w and is_clique(g, x)


def solve_quantum(g: Graph, cfg: GroverConfig | None = None) -> SolveReport:
    """Try ``w = n, n-1, ..., 1``; accept the first measured choice that verifies classically."""
    cfg = cfg or GroverConfig()
    start = time.perf_counter()
    rng = np.random.default_rng(cfg.seed)
    bundle = OracleBundle.for_graph(g)
    table = bundle.marked_table()
    n, m = g.n, bundle.layout.m

    trace, calls = [], 0
    size, witness = 0, 0
    for w in range(n, 0, -1):
        mask = table[w]
        marked = int(mask.sum())
        if cfg.mode == ORACLE_COUNT:
            k = optimal_iterations(marked, n)
            if cfg.max_iterations is not None:
                k = min(k, cfg.max_iterations)
            schedule = [min(k, iteration_cap(n))]
        else:
            schedule = doubling_schedule(n, cfg.max_iterations)
        found = None
        for _ in range(cfg.retries + 1):
            for k in schedule:
                result = grover_search(n, mask, cfg, iterations=k, rng=rng)
                calls += k
                ok = _verify(g, result.measured, w)
                trace.append(TraceEntry(w, k, marked if cfg.mode == ORACLE_COUNT else None, ok))
                if ok:
                    found = result.measured
                    break
            if found is not None:
                break
        if found is not None:
            size, witness = w, found
            break

    return SolveReport(
        engine=QUANTUM,
        n=n,
        theta=g.theta,
        m=m,
        clique_size=size,
        witness=witness,
        trace=trace,
        gate_counts=count_gates(build_oracle(bundle.layout, bundle.edges, max(size, 1))),
        qubits=bundle.layout.total_wires,
        hadamard=n + 1,
        total_oracle_calls=calls,
        wall_time=time.perf_counter() - start,
        seed=cfg.seed,
    )


def solve_molecular(g: Graph, seed: int | None = None) -> SolveReport:
    start = time.perf_counter()
    result = molecular.algorithm_4_1(g, np.random.default_rng(seed))
    trace = [
        TraceEntry(w, 0, len(result.tubes[w]), w == result.answer_size)
        for w in range(g.n, max(result.answer_size, 1) - 1, -1)
    ]
    return SolveReport(
        engine=MOLECULAR,
        n=g.n,
        theta=g.theta,
        m=g.n * (g.n - 1) // 2 - g.theta,
        clique_size=result.answer_size,
        witness=result.answer,
        trace=trace,
        wall_time=time.perf_counter() - start,
        seed=seed,
    )


def solve_brute(g: Graph) -> SolveReport:
    start = time.perf_counter()
    size, witnesses = brute_force_max_clique(g)
    return SolveReport(
        engine=BRUTE,
        n=g.n,
        theta=g.theta,
        m=g.n * (g.n - 1) // 2 - g.theta,
        clique_size=size,
        witness=min(witnesses),
        wall_time=time.perf_counter() - start,
    )


def solve(g: Graph, engine: str, cfg: GroverConfig | None = None) -> SolveReport:
    cfg = cfg or GroverConfig()
    if engine == QUANTUM:
        return solve_quantum(g, cfg)
    if engine == MOLECULAR:
        return solve_molecular(g, cfg.seed)
    if engine == BRUTE:
        return solve_brute(g)
    raise ValueError(f"unknown engine {engine!r}")


def reports_agree(reports: list[SolveReport], g: Graph) -> bool:
    sizes = {r.clique_size for r in reports}
    return len(sizes) == 1 and all(_verify(g, r.witness, r.clique_size) for r in reports)


def cross_validate(g: Graph, seed: int | None = None) -> bool:
    """True iff all three engines agree on the clique size and every witness verifies."""
    cfg = GroverConfig(mode=ORACLE_COUNT) if seed is None else GroverConfig(mode=ORACLE_COUNT, seed=seed)
    return reports_agree([solve_quantum(g, cfg), solve_molecular(g, cfg.seed), solve_brute(g)], g)
