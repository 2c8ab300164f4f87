"""Noncrossing partitions of B = {0} | {marked parts} and the subgroups A_L."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInput, NotAPartition
from .f2 import F2Subgroup, bits, pair_span, subgroup_span
from .partitions import OrbitDatum


@dataclass(frozen=True)
class NoncrossingPartition:
    """Canonical form: base ascending, blocks sorted inside and by minimum.

    When 0 is in the base it is the minimum, so the block L0 containing it is
    ``blocks[0]``.
    """

    base: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    @property
    def zero_block(self) -> tuple[int, ...]:
        return self.blocks[0]

    @property
    def other_blocks(self) -> tuple[tuple[int, ...], ...]:
        return self.blocks[1:]

    def block_of(self, v: int) -> tuple[int, ...]:
        for blk in self.blocks:
            if v in blk:
                return blk
        raise KeyError(v)

    def to_dict(self) -> dict:
        return {"base": list(self.base), "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_dict(cls, d: dict) -> NoncrossingPartition:
        p = make_ncp(d["blocks"], d["base"])
        if not is_noncrossing(p.blocks, p.base):
            raise InvalidInput("blocks are crossing")
        return p

    def __str__(self):
        return " ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


def make_ncp(blocks: Iterable[Iterable[int]], base: Iterable[int]) -> NoncrossingPartition:
    base = tuple(sorted(base))
    blocks = [tuple(sorted(b)) for b in blocks]
    _check_partition(blocks, base)
    blocks.sort(key=lambda b: b[0])
    return NoncrossingPartition(base, tuple(blocks))


def _check_partition(blocks, base) -> None:
    seen: list[int] = []
    for b in blocks:
        if not b:
            raise NotAPartition("empty block")
        seen.extend(b)
    if len(seen) != len(set(seen)):
        raise NotAPartition("blocks overlap")
    if sorted(seen) != sorted(base):
        raise NotAPartition(f"blocks cover {sorted(seen)}, base is {sorted(base)}")


def is_noncrossing(blocks: Sequence[Iterable[int]], base: Iterable[int]) -> bool:
    """Any two intervals spanned inside different blocks are disjoint or nested."""
    blocks = [sorted(b) for b in blocks]
    _check_partition(blocks, list(base))
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            for a in blocks[i]:
                for b in blocks[i]:
                    if b < a:
                        continue
                    for c in blocks[j]:
                        for d in blocks[j]:
                            if d < c:
                                continue
                            disjoint = b < c or d < a
                            nested = (a <= c and d <= b) or (c <= a and b <= d)
                            if not (disjoint or nested):
                                return False
    return True


def _ncp_indexes(lo: int, hi: int) -> Iterator[list[list[int]]]:
    """Noncrossing partitions of the index range [lo, hi)."""
    if lo >= hi:
        yield []
        return
    rest = list(range(lo + 1, hi))
    # choose the other members of the block containing lo
    for mask in range(1 << len(rest)):
        chosen = [lo] + [rest[k] for k in range(len(rest)) if mask >> k & 1]
        gaps = [(a + 1, b) for a, b in zip(chosen, chosen[1:])] + [(chosen[-1] + 1, hi)]
        yield from _combine_gaps(chosen, gaps)


def _combine_gaps(block, gaps):
    if not gaps:
        yield [block]
        return
    (glo, ghi), others = gaps[0], gaps[1:]
    for sub in _ncp_indexes(glo, ghi):
        for tail in _combine_gaps(block, others):
            yield sub + tail


def enumerate_ncp(base: Iterable[int]) -> list[NoncrossingPartition]:
    base = tuple(sorted(base))
    out = []
    for idx_blocks in _ncp_indexes(0, len(base)):
        out.append(make_ncp([[base[i] for i in b] for b in idx_blocks], base))
    out.sort(key=lambda p: p.blocks)
    return out


def block_weight(block: Iterable[int], datum: OrbitDatum) -> int:
    """r(L): total multiplicity of the marked parts in the block."""
    return sum(datum.mults[datum.index_of(v) - 1] for v in block if v != 0)


def is_even_ncp(p: NoncrossingPartition, datum: OrbitDatum) -> bool:
    return (
        0 in p.zero_block
        and set(p.base) == datum.b_lambda
        and is_noncrossing(p.blocks, p.base)
        and all(block_weight(b, datum) % 2 == 0 for b in p.other_blocks)
    )


def enumerate_even_ncp(datum: OrbitDatum) -> list[NoncrossingPartition]:
    return [
        p for p in enumerate_ncp(datum.b_lambda)
        if all(block_weight(b, datum) % 2 == 0 for b in p.other_blocks)
    ]


def ncp_group(p: NoncrossingPartition, datum: OrbitDatum) -> F2Subgroup:
    """A_L: t_i t_j inside each block other than L0, and t_i for 2x_i in L0
    (t_i t_j inside L0 when the isogeny is SO)."""
    ell = datum.ell
    gens: list[int] = []
    for blk in p.other_blocks:
        gens += pair_span(ell, [datum.index_of(v) for v in blk])
    zero = [datum.index_of(v) for v in p.zero_block if v != 0]
    if datum.lie_type != "C" and datum.isogeny == "SO":
        gens += pair_span(ell, zero)
    else:
        gens += [bits(i) for i in zero]
    return subgroup_span(ell, gens)


def s_set(datum: OrbitDatum) -> frozenset[F2Subgroup]:
    return frozenset(ncp_group(p, datum) for p in enumerate_even_ncp(datum))


# --- reconstruction from block end points --------------------------------

def endpoints(p: NoncrossingPartition) -> list[tuple[int, int]]:
    """(min, max) of each block other than L0."""
    return [(b[0], b[-1]) for b in p.other_blocks]


def ncp_from_endpoints(intervals: Iterable[tuple[int, int]], base: Iterable[int]) -> NoncrossingPartition:
    """Rebuild an NCP with 0 in L0 from the end points of its other blocks.

    Each block is its interval minus the intervals strictly nested in it; L0 is
    whatever is left.
    """
    base = tuple(sorted(base))
    intervals = sorted(set(intervals))
    blocks = []
    for lo, hi in intervals:
        inner = [(c, d) for c, d in intervals if (c, d) != (lo, hi) and lo <= c and d <= hi]
        blk = [
            v for v in base
            if lo <= v <= hi and not any(c <= v <= d for c, d in inner)
        ]
        blocks.append(blk)
    used = {v for b in blocks for v in b}
    zero = [v for v in base if v not in used]
    return make_ncp([zero] + blocks, base)


# --- ASCII arc diagram ------------------------------------------------------

def render_ncp_diagram(p: NoncrossingPartition) -> str:
    """Arcs joining consecutive members of a block, drawn above the points.

    An arc is raised one level above the highest arc nested under it.
    """
    base = list(p.base)
    width = max(len(str(v)) for v in base) + 2
    pos = {v: k * width + width // 2 for k, v in enumerate(base)}
    arcs = [(a, b) for blk in p.blocks for a, b in zip(blk, blk[1:])]
    level: dict[tuple[int, int], int] = {}
    for a, b in sorted(arcs, key=lambda ab: ab[1] - ab[0]):
        inside = [level[x] for x in level if a <= x[0] and x[1] <= b and x != (a, b)]
        level[(a, b)] = 1 + max(inside, default=0)
    height = max(level.values(), default=0)
    ncols = len(base) * width
    canvas = [[" "] * ncols for _ in range(height)]
    for (a, b), h in level.items():
        top = height - h
        xa, xb = pos[a], pos[b]
        for x in range(xa + 1, xb):
            if canvas[top][x] == " ":
                canvas[top][x] = "-"
        canvas[top][xa] = canvas[top][xb] = "+"
        for y in range(top + 1, height):
            for x in (xa, xb):
                if canvas[y][x] in (" ", "-"):
                    canvas[y][x] = "|"
    labels = [" "] * ncols
    for v, x in pos.items():
        s = str(v)
        start = x - (len(s) - 1) // 2
        for k, ch in enumerate(s):
            labels[start + k] = ch
    lines = ["".join(r).rstrip() for r in canvas] + ["".join(labels).rstrip()]
    return "\n".join(lines)
