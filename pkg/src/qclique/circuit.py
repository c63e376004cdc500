"""Reversible oracle construction: register layout, edge evaluation, ones-counting, marking.

All gates are NOT / CNOT / CCNOT over flat wire indices.  Wires are laid out
from the least significant end in the reverse of the register's written
order: ``x_1..x_n`` first, then ``r``, ``c``, ``h``, ``f``, ``g``, ``z`` and
finally the kickback wire.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

NOT, CNOT, CCNOT = "NOT", "CNOT", "CCNOT"
_ARITY = {NOT: 0, CNOT: 1, CCNOT: 2}


@dataclass(frozen=True)
class Gate:
    kind: str
    controls: tuple[int, ...]
    target: int

    def __post_init__(self):
        if self.kind not in _ARITY:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if len(self.controls) != _ARITY[self.kind]:
            raise ValueError(f"{self.kind} takes {_ARITY[self.kind]} controls, got {self.controls}")
        if len({*self.controls, self.target}) != len(self.controls) + 1:
            raise ValueError(f"{self.kind} wires not distinct: {self.controls} -> {self.target}")

    def __str__(self):
        return " ".join([self.kind, *map(str, self.controls), str(self.target)])


def not_(t: int) -> Gate:
    return Gate(NOT, (), t)


def cnot(c: int, t: int) -> Gate:
    return Gate(CNOT, (c,), t)


def ccnot(c1: int, c2: int, t: int) -> Gate:
    return Gate(CCNOT, (c1, c2), t)


@dataclass
class RegisterLayout:
    """Name-to-wire map for every register of the oracle."""

    n: int
    m: int
    names: list[str] = field(default_factory=list)
    index: dict[str, int] = field(default_factory=dict)

    @property
    def total_wires(self) -> int:
        return len(self.names)

    def _add(self, name: str) -> None:
        self.index[name] = len(self.names)
        self.names.append(name)

    def x(self, b: int) -> int:
        return self.index[f"x_{b}"]

    def r(self, k: int) -> int:
        return self.index[f"r_{k}"]

    def c(self, k: int) -> int:
        return self.index[f"c_{k}"]

    def h(self, i: int, j: int, a: int) -> int:
        return self.index[f"h_{i}_{j}_{a}"]

    def f(self, i: int, j: int) -> int:
        return self.index[f"f_{i}_{j}"]

    def g(self, i: int, j: int) -> int:
        return self.index[f"g_{i}_{j}"]

    def z(self, i: int, j: int) -> int:
        return self.index[f"z_{i}_{j}"]

    @property
    def kickback(self) -> int:
        return self.index["kickback"]

    @property
    def legal(self) -> int:
        """The accumulated legality bit ``c_m`` (``c_0`` when there are no complement edges)."""
        return self.c(self.m)

    def initial_bits(self) -> list[int]:
        """Computational-basis value of every wire before superposition (kickback reads 0)."""
        bits = [0] * self.total_wires
        bits[self.z(0, 0)] = 1
        bits[self.c(0)] = 1
        for k in range(1, self.m + 1):
            bits[self.r(k)] = 1
        for i in range(self.n):
            for j in range(i + 1):
                bits[self.h(i, j, 0)] = 1
        return bits


def build_layout(n: int, m: int) -> RegisterLayout:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= m <= n * (n - 1) // 2:
        raise ValueError(f"m={m} outside 0..{n * (n - 1) // 2}")
    lay = RegisterLayout(n, m)
    for b in range(1, n + 1):
        lay._add(f"x_{b}")
    for k in range(1, m + 1):
        lay._add(f"r_{k}")
    for k in range(m + 1):
        lay._add(f"c_{k}")
    for i in range(n):
        for j in range(i + 1):
            for a in range(i - j + 2):
                lay._add(f"h_{i}_{j}_{a}")
    for i in range(n):
        for j in range(i + 1):
            lay._add(f"f_{i}_{j}")
    for i in range(n):
        for j in range(i + 1):
            lay._add(f"g_{i}_{j}")
    lay._add("z_0_0")
    for i in range(1, n + 1):
        for j in range(i + 1):
            lay._add(f"z_{i}_{j}")
    lay._add("kickback")
    return lay


def build_qec(layout: RegisterLayout, complement_edges: Sequence[tuple[int, int]]) -> list[Gate]:
    """Per complement edge: NAND of its endpoints into ``r_k``, then AND into ``c_k``."""
    if len(complement_edges) != layout.m:
        raise ValueError(f"expected {layout.m} complement edges, got {len(complement_edges)}")
    gates = []
    for k, (a, b) in enumerate(complement_edges, 1):
        for v in (a, b):
            if not 1 <= v <= layout.n:
                raise ValueError(f"edge endpoint {v} outside 1..{layout.n}")
        gates.append(ccnot(layout.x(a), layout.x(b), layout.r(k)))
        gates.append(ccnot(layout.c(k - 1), layout.r(k), layout.c(k)))
    return gates


def build_fmno(layout: RegisterLayout, i: int, j: int) -> list[Gate]:
    """Route a legal candidate from ``z_{i,j}`` into row ``i+1`` according to ``x_{i+1}``."""
    if not 0 <= j <= i <= layout.n - 1:
        raise ValueError(f"(i, j)=({i}, {j}) outside 0 <= j <= i <= {layout.n - 1}")
    L = layout
    guards = [L.z(i + 1, k) for k in range(j + 2, i + 2)]
    gates = [not_(w) for w in guards]
    for a in range(1, i - j + 1):
        gates.append(ccnot(L.h(i, j, a - 1), L.z(i + 1, j + 1 + a), L.h(i, j, a)))
    gates.append(ccnot(L.h(i, j, i - j), L.z(i, j), L.h(i, j, i - j + 1)))
    gates.append(ccnot(L.h(i, j, i - j + 1), L.x(i + 1), L.f(i, j)))
    gates.append(ccnot(L.legal, L.f(i, j), L.z(i + 1, j + 1)))
    gates.extend(not_(w) for w in guards)

    gates.append(not_(L.x(i + 1)))
    gates.append(ccnot(L.z(i, j), L.x(i + 1), L.g(i, j)))
    gates.append(ccnot(L.legal, L.g(i, j), L.z(i + 1, j)))
    gates.append(not_(L.x(i + 1)))
    return gates


def build_forward(layout: RegisterLayout, complement_edges: Sequence[tuple[int, int]]) -> list[Gate]:
    """Edge evaluation followed by every ones-counting stage; leaves ``z_{n,w}`` set iff marked."""
    gates = build_qec(layout, complement_edges)
    for i in range(layout.n):
        for j in range(i, -1, -1):
            gates.extend(build_fmno(layout, i, j))
    return gates


def invert(gates: Sequence[Gate]) -> list[Gate]:
    # every gate here is its own inverse
    return list(reversed(gates))


def build_oracle(layout: RegisterLayout, complement_edges: Sequence[tuple[int, int]], w: int) -> list[Gate]:
    """Compute, flip the kickback wire on ``z_{n,w}``, uncompute."""
    if not 1 <= w <= layout.n:
        raise ValueError(f"w={w} outside 1..{layout.n}")
    forward = build_forward(layout, complement_edges)
    return forward + [cnot(layout.z(layout.n, w), layout.kickback)] + invert(forward)


@dataclass(frozen=True)
class GateCounts:
    not_count: int = 0
    cnot_count: int = 0
    ccnot_count: int = 0

    @property
    def total(self) -> int:
        return self.not_count + self.cnot_count + self.ccnot_count


def count_gates(gates: Iterable[Gate]) -> GateCounts:
    tally = {NOT: 0, CNOT: 0, CCNOT: 0}
    for gate in gates:
        tally[gate.kind] += 1
    return GateCounts(tally[NOT], tally[CNOT], tally[CCNOT])


def export_layout(layout: RegisterLayout) -> str:
    return "".join(f"# {idx} {name}\n" for idx, name in enumerate(layout.names))


def export_gates(layout: RegisterLayout, gates: Iterable[Gate]) -> str:
    """Text gate list: a ``#`` header mapping wire names, then one gate per line."""
    return export_layout(layout) + "".join(f"{gate}\n" for gate in gates)


def parse_gates(text: str) -> list[Gate]:
    gates = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        kind, *wires = line.split()
        *controls, target = map(int, wires)
        gates.append(Gate(kind, tuple(controls), target))
    return gates
