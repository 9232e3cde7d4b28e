"""Bounded maximal-independent-set enumeration over a pruned LDG."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .prune import PrunedLdg


@dataclass(frozen=True, order=True)
class MisSet:
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass
class MisEnumStats:
    candidates: int = 0
    emitted: int = 0
    seconds: float = 0.0


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def enumerate_candidates(pruned: PrunedLdg, k: int) -> Iterator[int]:
    """Yield (as bitsets) every MIS of the pruned graph with at most ``k``
    members, in lexicographic order of their sorted member lists.

    Branches on the lowest undecided vertex, include-branch first. An
    excluded vertex must end up adjacent to an included one; a branch dies
    as soon as some excluded vertex has no undecided neighbour left.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    masks = pruned.masks
    start = sum(1 << v for v in pruned.surviving)
    # (chosen, size, undecided, excluded)
    stack = [(0, 0, start, 0)]
    while stack:
        chosen, size, undecided, excluded = stack.pop()
        if not undecided:
            if not excluded:
                yield chosen
            continue
        if size >= k:
            continue
        x = excluded
        dead = False
        while x:
            low = x & -x
            if not masks[low.bit_length() - 1] & undecided:
                dead = True
                break
            x ^= low
        if dead:
            continue
        low = undecided & -undecided
        v = low.bit_length() - 1
        nv = masks[v]
        stack.append((chosen, size, undecided ^ low, excluded | low))
        stack.append((chosen | low, size + 1, undecided & ~(nv | low), excluded & ~nv))


def enumerate_mis(
    pruned: PrunedLdg, k: int, stats: MisEnumStats | None = None
) -> Iterator[MisSet]:
    """Stream every MIS of the base LDG with at most ``k`` members.

    Candidates from the pruned graph are re-checked for maximality against
    the base LDG: a deleted vertex may extend a set that looks maximal in
    the pruned graph.
    """
    base_masks = pruned.base.masks
    full = (1 << pruned.base.vertex_count) - 1
    for cand in enumerate_candidates(pruned, k):
        if stats is not None:
            stats.candidates += 1
        members = _bits(cand)
        covered = cand
        for v in members:
            covered |= base_masks[v]
        if covered != full:
            continue
        if stats is not None:
            stats.emitted += 1
        yield MisSet(tuple(members))
