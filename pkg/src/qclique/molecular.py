"""Set-algebra model of the DNA tube operations and the molecular clique algorithm.

A :class:`Tube` holds fixed-width bitstrings as a boolean occupancy mask over
``2**width`` integers.  Bit ``d - 1`` of a member is the value of ``x_d``, so
the string ``x_n ... x_1`` reads most-significant first.  Operations that the
lab protocol describes as consuming a tube leave the source empty.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import EXHAUSTIVE_LIMIT, Graph, complement_edges


class Tube:
    __slots__ = ("width", "mask")

    def __init__(self, width: int, mask: np.ndarray | None = None):
        if width < 0:
            raise ValueError("negative tube width")
        self.width = width
        if mask is None:
            mask = np.zeros(1 << width, dtype=bool)
        elif mask.shape != (1 << width,):
            raise ValueError(f"mask of shape {mask.shape} does not fit width {width}")
        self.mask = mask

    @classmethod
    def of(cls, width: int, members: Iterable[int]) -> "Tube":
        t = cls(width)
        for v in members:
            if not 0 <= v < 1 << width:
                raise ValueError(f"member {v} does not fit width {width}")
            t.mask[v] = True
        return t

    @classmethod
    def unit(cls) -> "Tube":
        """Width-0 tube holding the empty string."""
        return cls(0, np.ones(1, dtype=bool))

    def members(self) -> set[int]:
        return set(np.flatnonzero(self.mask).tolist())

    def clear(self) -> None:
        self.mask[:] = False

    def copy(self) -> "Tube":
        return Tube(self.width, self.mask.copy())

    def __len__(self) -> int:
        return int(self.mask.sum())

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.mask.size and bool(self.mask[v])

    def __eq__(self, other):
        if not isinstance(other, Tube):
            return NotImplemented
        return self.width == other.width and np.array_equal(self.mask, other.mask)

    def __repr__(self):
        body = ", ".join(format(v, f"0{self.width}b") for v in sorted(self.members()))
        return f"Tube(w={self.width}, {{{body}}})"


def _check_bit(bit: int) -> None:
    if bit not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {bit}")


def _check_growth(t: Tube, max_width: int | None) -> None:
    if max_width is not None and t.width >= max_width:
        raise ValueError(f"tube already at maximum width {max_width}")


def append_head(t: Tube, bit: int, max_width: int | None = None) -> Tube:
    """Prepend ``bit`` as the new most significant position of every member."""
    _check_bit(bit)
    _check_growth(t, max_width)
    size = 1 << t.width
    mask = np.zeros(2 * size, dtype=bool)
    mask[bit * size:(bit + 1) * size] = t.mask
    t.width += 1
    t.mask = mask
    return t


def append_tail(t: Tube, bit: int, max_width: int | None = None) -> Tube:
    """Append ``bit`` as the new least significant position of every member."""
    _check_bit(bit)
    _check_growth(t, max_width)
    mask = np.zeros(2 << t.width, dtype=bool)
    mask[bit::2] = t.mask
    t.width += 1
    t.mask = mask
    return t


def extract(t: Tube, position: int, value: int) -> tuple[Tube, Tube]:
    """Split ``t`` on bit ``x_position``; returns ``(plus, minus)`` and empties ``t``."""
    _check_bit(value)
    if not 1 <= position <= t.width:
        raise ValueError(f"position {position} outside 1..{t.width}")
    hit = (np.arange(t.mask.size) >> (position - 1) & 1) == value
    plus = Tube(t.width, t.mask & hit)
    minus = Tube(t.width, t.mask & ~hit)
    t.clear()
    return plus, minus


def merge(tubes: Sequence[Tube]) -> Tube:
    """Union of ``tubes``; every input is emptied."""
    if not tubes:
        raise ValueError("merge needs at least one tube")
    widths = {t.width for t in tubes if len(t)}
    if len(widths) > 1:
        raise ValueError(f"cannot merge tubes of widths {sorted(widths)}")
    width = widths.pop() if widths else tubes[0].width
    out = Tube(width)
    for t in tubes:
        if len(t):
            out.mask |= t.mask
        t.clear()
    return out


def discard(t: Tube) -> None:
    t.clear()


def amplify(t: Tube, copies: int) -> list[Tube]:
    if copies < 0:
        raise ValueError("negative copy count")
    out = [t.copy() for _ in range(copies)]
    discard(t)
    return out


def detect(t: Tube) -> bool:
    return bool(t.mask.any())


def read(t: Tube, rng: np.random.Generator) -> int:
    """Return one member chosen uniformly with ``rng``."""
    members = np.flatnonzero(t.mask)
    if members.size == 0:
        raise ValueError("cannot read an empty tube")
    return int(members[rng.integers(members.size)])


def construct_state_space(n: int) -> Tube:
    """All ``2**n`` strings, grown bit by bit from ``x_n`` down to ``x_1``."""
    if not 1 <= n <= EXHAUSTIVE_LIMIT:
        raise ValueError(f"n={n} outside 1..{EXHAUSTIVE_LIMIT}")
    gamma1 = append_tail(Tube.unit(), 1)
    gamma2 = append_tail(Tube.unit(), 0)
    beta0 = merge([gamma1, gamma2])
    for _ in range(n - 1, 0, -1):
        gamma1, gamma2 = amplify(beta0, 2)
        append_tail(gamma1, 1)
        append_tail(gamma2, 0)
        beta0 = merge([gamma1, gamma2])
    return beta0


@dataclass
class MolecularResult:
    tubes: list[Tube]
    answer: int
    answer_size: int


def algorithm_4_1(g: Graph, rng: np.random.Generator | None = None) -> MolecularResult:
    """Filter the state space by complement edges, then sort survivors by ones-count.

    ``tubes[i]`` ends up holding exactly the cliques of ``g`` with ``i``
    vertices; the answer is read from the highest non-empty tube.
    """
    if rng is None:
        rng = np.random.default_rng(0)
    n = g.n
    beta = [Tube(n) for _ in range(n + 1)]
    beta[0] = construct_state_space(n)

    for i, j in complement_edges(g):
        on, off = extract(beta[0], i, 1)
        on1, off1 = extract(on, j, 1)
        discard(on1)
        beta[0] = merge([off, off1])

    for i in range(n):
        for j in range(i, -1, -1):
            on, beta[j] = extract(beta[j], i + 1, 1)
            beta[j + 1] = merge([beta[j + 1], on])

    for i in range(n, 0, -1):
        if detect(beta[i]):
            return MolecularResult(beta, read(beta[i], rng), i)
    return MolecularResult(beta, read(beta[0], rng), 0)
