"""Circuit execution: classical evaluation of the reversible oracle, hybrid Grover search,
and a full-register statevector run for tiny instances.

The hybrid engine keeps amplitudes only on the ``n`` choice wires.  Every
other wire holds a computational-basis value fixed by ``x``, so the oracle
reduces to negating the amplitudes of marked ``x``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .circuit import CCNOT, CNOT, NOT, Gate, RegisterLayout, build_forward, build_layout
from .graph import Graph, complement_edges

ORACLE_COUNT = "oracle-count"
PAPER_CAP = "paper-cap"
MAX_FULL_WIRES = 26
NORM_TOL = 1e-12
DEFAULT_SEED = 20240601


@dataclass
class BitRegister:
    """One basis state of the full register; the kickback wire is tracked as a sign."""

    bits: list[int]
    sign: int = 1

    def __getitem__(self, wire: int) -> int:
        return self.bits[wire]


@dataclass
class GroverConfig:
    mode: str = ORACLE_COUNT
    max_iterations: int | None = None
    retries: int = 3
    seed: int = DEFAULT_SEED
    shots: int = 1

    def __post_init__(self):
        if self.mode not in (ORACLE_COUNT, PAPER_CAP):
            raise ValueError(f"unknown Grover mode {self.mode!r}")
        if self.max_iterations is not None and self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        if self.retries < 0:
            raise ValueError("retries must be non-negative")
        if self.shots < 1:
            raise ValueError("shots must be at least 1")


def _check_wires(gates: Sequence[Gate], total: int) -> None:
    for gate in gates:
        for w in (*gate.controls, gate.target):
            if not 0 <= w < total:
                raise IndexError(f"{gate} touches wire {w}, register has {total}")


def eval_classical(gates: Sequence[Gate], layout: RegisterLayout, x: int) -> BitRegister:
    """Run ``gates`` on the initial register with choice bits loaded from ``x``."""
    if not 0 <= x < 1 << layout.n:
        raise ValueError(f"choice {x} does not fit n={layout.n}")
    _check_wires(gates, layout.total_wires)
    bits = layout.initial_bits()
    for b in range(1, layout.n + 1):
        bits[layout.x(b)] = x >> (b - 1) & 1
    kick = layout.kickback
    sign = 1
    for gate in gates:
        if gate.kind == NOT:
            flip = 1
        elif gate.kind == CNOT:
            flip = bits[gate.controls[0]]
        else:
            flip = bits[gate.controls[0]] & bits[gate.controls[1]]
        if not flip:
            continue
        if gate.target == kick:
            sign = -sign
        else:
            bits[gate.target] ^= 1
    return BitRegister(bits, sign)


def eval_all(gates: Sequence[Gate], layout: RegisterLayout) -> np.ndarray:
    """Classical evaluation for every choice at once: bool array ``(wires, 2**n)``.

    Row ``layout.kickback`` accumulates the parity of kickback flips (1 = negated).
    """
    _check_wires(gates, layout.total_wires)
    size = 1 << layout.n
    reg = np.zeros((layout.total_wires, size), dtype=bool)
    reg[np.asarray(layout.initial_bits(), dtype=bool)] = True
    xs = np.arange(size)
    for b in range(1, layout.n + 1):
        reg[layout.x(b)] = (xs >> (b - 1) & 1).astype(bool)
    for gate in gates:
        t = gate.target
        if gate.kind == NOT:
            np.logical_not(reg[t], out=reg[t])
        elif gate.kind == CNOT:
            reg[t] ^= reg[gate.controls[0]]
        else:
            reg[t] ^= reg[gate.controls[0]] & reg[gate.controls[1]]
    return reg


@dataclass
class OracleBundle:
    """Layout and forward gates for a graph, shared by every target size ``w``."""

    graph: Graph
    layout: RegisterLayout
    edges: list[tuple[int, int]]
    forward: list[Gate]

    @classmethod
    def for_graph(cls, g: Graph) -> "OracleBundle":
        edges = complement_edges(g)
        layout = build_layout(g.n, len(edges))
        return cls(g, layout, edges, build_forward(layout, edges))

    def marked_table(self) -> np.ndarray:
        """Bool array ``(n+1, 2**n)``: row ``w`` is the ``z_{n,w}`` bit for every choice."""
        reg = eval_all(self.forward, self.layout)
        n = self.layout.n
        return np.stack([reg[self.layout.z(n, w)] for w in range(n + 1)])


def marked_predicate(g: Graph, w: int) -> Callable[[int], bool]:
    """Predicate reading ``z_{n,w}`` after the forward half of the oracle for ``g``."""
    bundle = OracleBundle.for_graph(g)
    if not 1 <= w <= g.n:
        raise ValueError(f"w={w} outside 1..{g.n}")
    wire = bundle.layout.z(g.n, w)

    def predicate(x: int) -> bool:
        return bool(eval_classical(bundle.forward, bundle.layout, x)[wire])

    return predicate


def uniform_state(n: int) -> np.ndarray:
    size = 1 << n
    return np.full(size, 1 / math.sqrt(size), dtype=complex)


def apply_phase_oracle(amps: np.ndarray, marked: np.ndarray) -> np.ndarray:
    amps[marked] *= -1
    return amps


def apply_diffusion(amps: np.ndarray) -> np.ndarray:
    """Inversion about the mean, ``2|s><s| - I``."""
    mean = amps.mean()
    np.subtract(2 * mean, amps, out=amps)
    return amps


def optimal_iterations(marked: int, n: int) -> int:
    """``floor((pi/4) / asin(sqrt(M/N)))``; zero when nothing is marked."""
    if marked <= 0:
        return 0
    theta = math.asin(math.sqrt(marked / (1 << n)))
    return math.floor((math.pi / 4) / theta)


def iteration_cap(n: int) -> int:
    return math.ceil(2 ** (n / 2))


def doubling_schedule(n: int, cap: int | None = None) -> list[int]:
    """Attempt lengths 1, 2, 4, ... whose running total stays within the cap."""
    cap = iteration_cap(n) if cap is None else cap
    ks, total, k = [], 0, 1
    while total + k <= cap:
        ks.append(k)
        total += k
        k *= 2
    return ks or [cap]


@dataclass
class GroverResult:
    measured: int
    marked_mass: float
    iterations: int
    samples: list[int]
    amplitudes: np.ndarray


def _marked_mask(n: int, predicate) -> np.ndarray:
    if isinstance(predicate, np.ndarray):
        if predicate.shape != (1 << n,):
            raise ValueError(f"marked mask of shape {predicate.shape} does not fit n={n}")
        return predicate.astype(bool)
    return np.fromiter((bool(predicate(x)) for x in range(1 << n)), dtype=bool, count=1 << n)


def grover_search(
    n: int,
    predicate,
    cfg: GroverConfig,
    iterations: int | None = None,
    rng: np.random.Generator | None = None,
    marked_count: int | None = None,
) -> GroverResult:
    """Amplitude amplification over the choice register.

    ``predicate`` is a callable on choices or a precomputed bool mask.  With
    ``iterations`` omitted, oracle-count mode uses the optimal schedule for
    ``marked_count`` (counted from the predicate when not supplied) and
    paper-cap mode runs the full ``ceil(2**(n/2))`` cap.
    """
    if n < 1:
        raise ValueError("n must be positive")
    mask = _marked_mask(n, predicate)
    if iterations is None:
        if cfg.mode == ORACLE_COUNT:
            m = int(mask.sum()) if marked_count is None else marked_count
            iterations = optimal_iterations(m, n)
        else:
            iterations = iteration_cap(n)
        if cfg.max_iterations is not None:
            iterations = min(iterations, cfg.max_iterations)
    if rng is None:
        rng = np.random.default_rng(cfg.seed)

    amps = uniform_state(n)
    for _ in range(iterations):
        apply_phase_oracle(amps, mask)
        apply_diffusion(amps)
    probs = np.abs(amps) ** 2
    probs /= probs.sum()
    samples = rng.choice(probs.size, size=cfg.shots, p=probs).tolist()
    return GroverResult(samples[0], float(probs[mask].sum()), iterations, samples, amps)


def full_statevector_run(
    layout: RegisterLayout, gates: Sequence[Gate], w: int | None = None, iterations: int = 1
) -> np.ndarray:
    """Evolve the whole register: Hadamards on ``x`` and kickback, then ``iterations``
    rounds of the full oracle ``gates`` followed by diffusion on the ``x`` wires.

    Returns the flat amplitude vector; bit ``k`` of an index is wire ``k``.
    ``w`` is informational (the target size is already baked into ``gates``).
    """
    total = layout.total_wires
    if total > MAX_FULL_WIRES:
        raise ValueError(f"{total} wires exceeds the statevector bound of {MAX_FULL_WIRES}")
    _check_wires(gates, total)
    n = layout.n
    if w is not None and not 1 <= w <= n:
        raise ValueError(f"w={w} outside 1..{n}")

    base = sum(bit << k for k, bit in enumerate(layout.initial_bits()))
    psi = np.zeros(1 << total, dtype=complex)
    amp = 1 / math.sqrt(1 << (n + 1))
    kick = 1 << layout.kickback
    # x wires are the low n bits of the index, all initially 0
    for x in range(1 << n):
        psi[base | x] = amp
        psi[base | x | kick] = -amp

    tensor = psi.reshape((2,) * total)

    def axis(wire: int) -> int:
        return total - 1 - wire

    scratch = np.empty(1 << (total - 1), dtype=complex)
    for _ in range(iterations):
        for gate in gates:
            idx = [slice(None)] * total
            for c in gate.controls:
                idx[axis(c)] = 1
            idx[axis(gate.target)] = 0
            lo = tensor[tuple(idx)]
            idx[axis(gate.target)] = 1
            hi = tensor[tuple(idx)]
            tmp = scratch[: lo.size].reshape(lo.shape)
            np.copyto(tmp, lo)
            np.copyto(lo, hi)
            np.copyto(hi, tmp)
        rows = psi.reshape(-1, 1 << n)
        rows[:] = 2 * rows.mean(axis=1, keepdims=True) - rows
    return psi


def marginal_x(psi: np.ndarray, n: int) -> np.ndarray:
    """Probability distribution of the choice register from a full amplitude vector."""
    return (np.abs(psi.reshape(-1, 1 << n)) ** 2).sum(axis=0)
