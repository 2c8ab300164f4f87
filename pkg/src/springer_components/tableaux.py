"""Standard and admissible domino tableaux.

Boxes are addressed 0-based internally as ``(row, col)``; column parity
conventions (odd/even column) always refer to the 1-based column ``col + 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from .errors import InvalidInput, UnclassifiableDomino
from .partitions import is_classical

Shape = tuple[int, ...]


class DominoKind(str, enum.Enum):
    N = "N"
    IPLUS = "I+"
    IMINUS = "I-"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Domino:
    label: int
    boxes: tuple[tuple[int, int], tuple[int, int]]

    @property
    def horizontal(self) -> bool:
        return self.boxes[0][0] == self.boxes[1][0]

    @property
    def orientation(self) -> str:
        return "H" if self.horizontal else "V"

    @property
    def column(self) -> int:
        """1-based column of the left (horizontal) or only (vertical) column."""
        return min(c for _, c in self.boxes) + 1

    @property
    def row(self) -> int:
        """1-based top row."""
        return min(r for r, _ in self.boxes) + 1


@dataclass(frozen=True)
class DominoTableau:
    shape: Shape
    grid: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        """Number of dominoes n."""
        return sum(self.shape) // 2

    @property
    def has_center_box(self) -> bool:
        return sum(self.shape) % 2 == 1

    def label_at(self, row: int, col: int) -> int:
        return self.grid[row][col]

    @cached_property
    def dominoes(self) -> dict[int, Domino]:
        boxes: dict[int, list[tuple[int, int]]] = {}
        for r, row in enumerate(self.grid):
            for c, lab in enumerate(row):
                boxes.setdefault(lab, []).append((r, c))
        out = {}
        for lab in sorted(boxes):
            if lab == 0:
                continue
            a, b = sorted(boxes[lab])
            out[lab] = Domino(lab, (a, b))
        return out

    def flat(self) -> tuple[int, ...]:
        return tuple(x for row in self.grid for x in row)

    def truncate(self, i: int) -> DominoTableau:
        """The tableau T^i made of the dominoes labelled at most i."""
        rows = tuple(tuple(x for x in row if x <= i) for row in self.grid)
        rows = tuple(r for r in rows if r)
        return DominoTableau(tuple(len(r) for r in rows), rows)

    def prefix_shapes(self) -> list[Shape]:
        return [self.truncate(i).shape for i in range(1, self.size + 1)]

    def to_dict(self) -> dict:
        return {"shape": list(self.shape), "grid": [list(r) for r in self.grid]}

    @classmethod
    def from_dict(cls, d: dict) -> DominoTableau:
        shape = tuple(int(x) for x in d["shape"])
        grid = tuple(tuple(int(x) for x in row) for row in d["grid"])
        t = cls(shape, grid)
        check_standard(t)
        return t


def check_standard(t: DominoTableau) -> None:
    """Raise InvalidInput unless ``t`` is a standard domino tableau."""
    shape = t.shape
    if list(shape) != sorted(shape, reverse=True) or any(x <= 0 for x in shape):
        raise InvalidInput(f"shape {shape} is not a partition")
    if tuple(len(r) for r in t.grid) != shape:
        raise InvalidInput("grid rows do not match the shape")
    n = t.size
    seen: dict[int, list[tuple[int, int]]] = {}
    for r, row in enumerate(t.grid):
        for c, lab in enumerate(row):
            seen.setdefault(lab, []).append((r, c))
    want = set(range(1, n + 1)) | ({0} if t.has_center_box else set())
    if set(seen) != want:
        raise InvalidInput(f"labels {sorted(seen)} are not {sorted(want)}")
    if t.has_center_box and seen[0] != [(0, 0)]:
        raise InvalidInput("label 0 must cover exactly box (1,1)")
    for lab, bx in seen.items():
        if lab == 0:
            continue
        if len(bx) != 2:
            raise InvalidInput(f"label {lab} covers {len(bx)} boxes")
        (r1, c1), (r2, c2) = sorted(bx)
        if abs(r1 - r2) + abs(c1 - c2) != 1:
            raise InvalidInput(f"label {lab} is not a domino")
    for r, row in enumerate(t.grid):
        for c, lab in enumerate(row):
            if c + 1 < len(row) and row[c + 1] < lab:
                raise InvalidInput(f"rows not weakly increasing at ({r + 1},{c + 1})")
            if r + 1 < len(t.grid) and c < len(t.grid[r + 1]) and t.grid[r + 1][c] < lab:
                raise InvalidInput(f"columns not weakly increasing at ({r + 1},{c + 1})")


def removable_dominoes(shape: Shape) -> list[tuple[Shape, tuple[tuple[int, int], tuple[int, int]]]]:
    """Dominoes whose removal from ``shape`` leaves a partition shape."""
    out = []
    rows = list(shape)
    for r, length in enumerate(rows):
        below = rows[r + 1] if r + 1 < len(rows) else 0
        if length - 2 >= below:
            new = rows[:]
            new[r] -= 2
            out.append((_strip(new), ((r, length - 2), (r, length - 1))))
        if r + 1 < len(rows) and rows[r + 1] == length:
            below2 = rows[r + 2] if r + 2 < len(rows) else 0
            if below2 < length:
                new = rows[:]
                new[r] -= 1
                new[r + 1] -= 1
                out.append((_strip(new), ((r, length - 1), (r + 1, length - 1))))
    return out


def _strip(rows: list[int]) -> Shape:
    return tuple(x for x in rows if x > 0)


def _base(shape: Shape) -> Shape:
    return (1,) if sum(shape) % 2 else ()


@lru_cache(maxsize=None)
def _grids(shape: Shape, lie_type: str | None) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All label grids of ``shape``; with ``lie_type`` only admissible ones."""
    if shape == _base(shape):
        return (((0,),),) if shape else ((),)
    if sum(shape) < 2:
        return ()
    n = sum(shape) // 2
    out = []
    for smaller, (b1, b2) in removable_dominoes(shape):
        if sum(smaller) % 2 and (0, 0) in (b1, b2):
            continue
        if lie_type is not None and smaller != _base(shape) and not is_classical(smaller, lie_type):
            continue
        for g in _grids(smaller, lie_type):
            rows = [list(r) for r in g]
            while len(rows) < len(shape):
                rows.append([])
            for (r, c) in (b1, b2):
                assert len(rows[r]) == c
                rows[r].append(n)
            out.append(tuple(tuple(r) for r in rows))
    return tuple(out)


def _sorted_tableaux(shape: Shape, grids) -> list[DominoTableau]:
    tabs = [DominoTableau(shape, g) for g in set(grids)]
    tabs.sort(key=DominoTableau.flat)
    return tabs


def enumerate_sdt(shape: Sequence[int]) -> list[DominoTableau]:
    """All standard domino tableaux of ``shape``, ordered lexicographically by
    the row-major label grid."""
    shape = tuple(shape)
    if list(shape) != sorted(shape, reverse=True) or any(x <= 0 for x in shape):
        raise InvalidInput(f"shape {shape} is not a partition")
    if not shape:
        return [DominoTableau((), ())]
    return _sorted_tableaux(shape, _grids(shape, None))


def domino_kind(t: DominoTableau, label: int, lie_type: str = "C") -> DominoKind:
    d = t.dominoes.get(label)
    if d is None:
        raise InvalidInput(f"label {label} not in tableau")
    odd_col = d.column % 2 == 1
    if lie_type == "C":
        n_parity, plus_parity = True, False
    elif lie_type in ("B", "D"):
        n_parity, plus_parity = False, True
    else:
        raise InvalidInput(f"unknown Lie type {lie_type!r}")
    if d.horizontal:
        if odd_col == n_parity:
            return DominoKind.N
        raise UnclassifiableDomino(
            f"horizontal domino {label} starts in column {d.column} (type {lie_type})"
        )
    return DominoKind.IPLUS if odd_col == plus_parity else DominoKind.IMINUS


def domino_kinds(t: DominoTableau, lie_type: str = "C") -> dict[int, DominoKind]:
    return {lab: domino_kind(t, lab, lie_type) for lab in t.dominoes}


def is_admissible(t: DominoTableau, lie_type: str = "C") -> bool:
    return all(is_classical(s, lie_type) for s in t.prefix_shapes())


def enumerate_admissible(shape: Sequence[int], lie_type: str = "C") -> list[DominoTableau]:
    """Admissible tableaux, same order as :func:`enumerate_sdt`.

    Admissibility is closed under truncation, so the recursion prunes at the
    first non-classical prefix shape instead of filtering afterwards.
    """
    shape = tuple(shape)
    if not shape:
        return [DominoTableau((), ())]
    if not is_classical(shape, lie_type):
        return []
    return _sorted_tableaux(shape, _grids(shape, lie_type))
