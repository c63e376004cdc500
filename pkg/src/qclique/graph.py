"""Simple undirected graphs, DIMACS parsing, and classical clique references.

Vertex sets are plain ints used as bitmasks: bit ``d - 1`` set means vertex
``d`` is a member (so the least significant bit is vertex 1).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 20


class DimacsError(ValueError):
    """Raised when DIMACS input cannot be turned into a graph."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self-loop on vertex {a}")
            if not a < b:
                raise ValueError(f"edge ({a}, {b}) is not normalized")
            if a < 1 or b > self.n:
                raise ValueError(f"edge ({a}, {b}) outside 1..{self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalizing each pair to ``(min, max)``."""
        return cls(n, frozenset((min(a, b), max(a, b)) for a, b in edges))

    @property
    def theta(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> list[int]:
        """Neighbour bitmask per vertex; index 0 is vertex 1."""
        adj = [0] * self.n
        for a, b in self.edges:
            adj[a - 1] |= 1 << (b - 1)
            adj[b - 1] |= 1 << (a - 1)
        return adj


def parse_dimacs(text: str | Iterable[str]) -> Graph:
    """Parse DIMACS edge format (``c`` comments, one ``p edge`` line, ``e`` lines)."""
    lines = text.splitlines() if isinstance(text, str) else text
    n = None
    declared = 0
    pairs = set()
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise DimacsError(f"line {lineno}: duplicate problem line")
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise DimacsError(f"line {lineno}: expected 'p edge <n> <e>'")
            try:
                n, declared = int(fields[2]), int(fields[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer size") from None
            if n < 1:
                raise DimacsError(f"line {lineno}: vertex count must be positive")
        elif tag == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: edge before problem line")
            if len(fields) != 3:
                raise DimacsError(f"line {lineno}: expected 'e <a> <b>'")
            try:
                a, b = int(fields[1]), int(fields[2])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer vertex") from None
            for v in (a, b):
                if not 1 <= v <= n:
                    raise DimacsError(f"line {lineno}: vertex {v} outside 1..{n}")
            if a == b:
                raise DimacsError(f"line {lineno}: self-loop on vertex {a}")
            pairs.add((min(a, b), max(a, b)))
        else:
            raise DimacsError(f"line {lineno}: unknown line type {tag!r}")
    if n is None:
        raise DimacsError("missing problem line")
    if len(pairs) != declared:
        logger.warning("problem line declares %d edges, found %d distinct", declared, len(pairs))
    return Graph(n, frozenset(pairs))


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(p for p in combinations(range(1, g.n + 1), 2) if p not in g.edges))


def complement_edges(g: Graph) -> list[tuple[int, int]]:
    """Complement edges in lexicographic order; position k-1 holds edge e_k."""
    return complement(g).sorted_edges()


def vertices_of(s: int) -> list[int]:
    """1-based vertex list of a vertex bitmask, ascending."""
    return [d + 1 for d in range(s.bit_length()) if s >> d & 1]


def vertex_set(vertices: Iterable[int]) -> int:
    s = 0
    for v in vertices:
        s |= 1 << (v - 1)
    return s


def is_clique(g: Graph, s: int) -> bool:
    if s >> g.n:
        raise ValueError(f"vertex set {s:b} wider than n={g.n}")
    members = vertices_of(s)
    return all(pair in g.edges for pair in combinations(members, 2))


def brute_force_max_clique(g: Graph, limit: int = EXHAUSTIVE_LIMIT) -> tuple[int, set[int]]:
    """Exhaustive maximum clique: ``(size, all maximum cliques as bitmasks)``."""
    if g.n > limit:
        raise ValueError(f"n={g.n} exceeds exhaustive limit {limit}")
    adj = g.adjacency()
    best, witnesses = 0, {0}
    for s in range(1, 1 << g.n):
        size = s.bit_count()
        if size < best:
            continue
        rest = s
        ok = True
        while rest:
            low = rest & -rest
            d = low.bit_length() - 1
            if (s & ~low) & ~adj[d]:
                ok = False
                break
            rest ^= low
        if not ok:
            continue
        if size > best:
            best, witnesses = size, {s}
        else:
            witnesses.add(s)
    return best, witnesses
