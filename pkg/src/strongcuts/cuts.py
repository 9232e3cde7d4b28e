"""Cut representations, S-T partitions and the strong-cut validator."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .ldg import reachability
from .cone import Cone
from .mis_enum import MisSet


class CutError(ValueError):
    pass


class CutInvariantError(RuntimeError):
    """An MIS failed to validate as a strong line cut (an upstream bug)."""


class Direction(str, enum.Enum):
    UNIDIRECTIONAL = "Unidirectional"
    BIDIRECTIONAL = "Bidirectional"


@dataclass(frozen=True)
class LineCut:
    root: int
    lines: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class NodeCut:
    root: int
    nodes: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class Partition:
    s_side: frozenset[int]
    t_side: frozenset[int]
    classification: Direction


@dataclass(frozen=True)
class StrongCutCheck:
    ok: bool
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _bitset(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


class CutChecker:
    """Per-cone precomputation shared by the validator and the converters."""

    def __init__(self, cone: Cone):
        self.cone = cone
        n = len(cone.nodes)
        self.tails = [t for t, _ in cone.local_lines]
        self.heads = [h for _, h in cone.local_lines]
        self.topo = cone.local_topo
        self.fanin: list[list[int]] = [[] for _ in range(n)]
        self.fanout: list[list[int]] = [[] for _ in range(n)]
        for i, (t, h) in enumerate(cone.local_lines):
            self.fanin[h].append(i)
            self.fanout[t].append(i)
        self.is_input = [False] * n
        for v in cone.inputs:
            self.is_input[cone.index[v]] = True
        self.root = cone.index[cone.root]
        reach = reachability(cone)
        self.reach = [_bitset(row) for row in reach]
        # dependent[a]: bitset of lines sharing some path with line a
        before = reach[np.ix_(self.heads, self.tails)]
        shared = before | before.T
        np.fill_diagonal(shared, False)
        self.dependent = [_bitset(row) for row in shared]

    def forward(self, removed: set[int]) -> list[bool]:
        """Nodes reachable from some cone input without using ``removed``."""
        seen = list(self.is_input)
        for v in self.topo:
            if seen[v]:
                continue
            for i in self.fanin[v]:
                if i not in removed and seen[self.tails[i]]:
                    seen[v] = True
                    break
        return seen

    def backward(self, removed: set[int]) -> list[bool]:
        """Nodes that reach the root without using ``removed``."""
        seen = [False] * len(self.is_input)
        seen[self.root] = True
        for v in reversed(self.topo):
            if seen[v]:
                continue
            for i in self.fanout[v]:
                if i not in removed and seen[self.heads[i]]:
                    seen[v] = True
                    break
        return seen

    def on_common_path(self, a: int, b: int) -> bool:
        tails, heads, reach = self.tails, self.heads, self.reach
        return bool(reach[heads[a]] >> tails[b] & 1 or reach[heads[b]] >> tails[a] & 1)

    def check(self, lines: Iterable[int]) -> StrongCutCheck:
        lines = sorted(set(lines))
        m = self.cone.line_count
        for i in lines:
            if not 0 <= i < m:
                raise CutError(f"line {i} not in cone")
        removed = set(lines)
        fwd = self.forward(removed)
        if fwd[self.root]:
            return StrongCutCheck(False, "does not disconnect")
        chosen = sum(1 << i for i in lines)
        for a in lines:
            clash = self.dependent[a] & chosen
            if clash:
                b = (clash & -clash).bit_length() - 1
                return StrongCutCheck(False, f"lines on common path ({min(a, b)},{max(a, b)})")
        bwd = self.backward(removed)
        for i in lines:
            if not (fwd[self.tails[i]] and bwd[self.heads[i]]):
                return StrongCutCheck(False, f"not minimal: line {i} is redundant")
        return StrongCutCheck(True)

    def partition(self, lines: Iterable[int]) -> Partition:
        removed = set(lines)
        bwd = self.backward(removed)
        nodes = self.cone.nodes
        if any(bwd[self.cone.index[v]] for v in self.cone.inputs):
            raise CutError("not a cut: root still reachable from an input")
        backward_edge = any(
            bwd[t] and not bwd[h] for t, h in zip(self.tails, self.heads)
        )
        return Partition(
            s_side=frozenset(v for i, v in enumerate(nodes) if not bwd[i]),
            t_side=frozenset(v for i, v in enumerate(nodes) if bwd[i]),
            classification=Direction.BIDIRECTIONAL if backward_edge else Direction.UNIDIRECTIONAL,
        )


def line_cut_to_partition(cone: Cone, cut: LineCut) -> Partition:
    """T side: nodes still reaching the root once the cut lines are removed."""
    return CutChecker(cone).partition(cut.lines)


def line_cut_to_node_cut(cone: Cone, cut: LineCut) -> NodeCut:
    return NodeCut(cut.root, tuple(sorted({cone.lines[i][0] for i in cut.lines})))


def is_strong_line_cut(cone: Cone, lines: Iterable[int]) -> StrongCutCheck:
    """Disconnecting, pairwise path-independent and minimal (checked in
    that order; the first failed clause is reported)."""
    return CutChecker(cone).check(lines)


def mis_to_line_cut(
    cone: Cone, mis: MisSet, checker: CutChecker | None = None
) -> LineCut:
    checker = checker or CutChecker(cone)
    result = checker.check(mis.members)
    if not result:
        raise CutInvariantError(
            f"MIS {list(mis.members)} of cone {cone.root} is not a strong cut: "
            f"{result.violation}"
        )
    return LineCut(cone.root, tuple(mis.members))
