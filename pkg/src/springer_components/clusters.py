"""Inductive cluster decomposition of admissible type-C domino tableaux.

Dominoes are added in label order.  The state is a set of clusters (sets of
domino labels) and a map ``b`` from the numbers ``{0} | {even parts of the
current shape}`` to clusters:

* N domino in columns 2i-1, 2i: merge b(2i-2), the domino and b(2i) (if 2i is
  already a part).
* I+ domino in column 2i: merge the domino with b(2i), or start a new cluster
  when 2i is not yet a part.
* I- domino in column 2i+1: merge the domino with b(2i).

Every number previously pointing at a merged cluster points at the merge, and a
part that disappears from the shape is dropped from ``b``.  The induction starts
from a virtual empty cluster attached to 0, which the first domino joins.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .errors import NotAdmissible
from .tableaux import DominoKind, DominoTableau, domino_kinds, is_admissible

_VIRTUAL = 0  # id of the starting cluster; real ids are domino labels >= 1


@dataclass(frozen=True)
class ClusterDecomposition:
    tableau: DominoTableau
    cluster_of: dict[int, int]  # domino label -> cluster id
    b_map: dict[int, int]  # element of B -> cluster id
    kinds: dict[int, DominoKind]

    @property
    def clusters(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for lab in sorted(self.cluster_of):
            out.setdefault(self.cluster_of[lab], []).append(lab)
        return {cid: tuple(v) for cid, v in sorted(out.items())}

    @property
    def open_set(self) -> frozenset[int]:
        return frozenset(self.b_map.values())

    @property
    def closed_set(self) -> frozenset[int]:
        return frozenset(self.clusters) - self.open_set

    @property
    def base_cluster(self) -> int:
        """The cluster b(0), whose sign is always +."""
        return self.b_map[0]

    @property
    def signed_clusters(self) -> tuple[int, ...]:
        """Clusters carrying a free sign: every cluster except b(0)."""
        return tuple(c for c in self.clusters if c != self.base_cluster)

    @property
    def iplus_members(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {c: [] for c in self.clusters}
        for lab, kind in sorted(self.kinds.items()):
            if kind is DominoKind.IPLUS:
                out[self.cluster_of[lab]].append(lab)
        return {c: tuple(v) for c, v in out.items()}

    def preimage(self, cluster: int) -> frozenset[int]:
        return frozenset(v for v, c in self.b_map.items() if c == cluster)

    def to_dict(self) -> dict:
        return {
            "clusters": {str(c): list(m) for c, m in self.clusters.items()},
            "b_map": {str(v): c for v, c in sorted(self.b_map.items(), key=lambda kv: (kv[0] != 0, -kv[0]))},
            "open": sorted(self.open_set),
        }


def _even_parts(shape_rows: list[int]) -> Counter:
    return Counter(x for x in shape_rows if x > 0 and x % 2 == 0)


def cluster_trace(t: DominoTableau) -> Iterator[tuple[dict[int, int], dict[int, int]]]:
    """Yield ``(cluster_of, b_map)`` after each domino is added.

    The k-th state is the decomposition of ``t.truncate(k)``.
    """
    if t.has_center_box:
        raise NotAdmissible("cluster decompositions are defined for type C only")
    kinds = domino_kinds(t, "C")
    rows = [0] * len(t.shape)
    cluster_of: dict[int, int] = {}
    members: dict[int, set[int]] = {_VIRTUAL: set()}
    b: dict[int, int] = {0: _VIRTUAL}

    def merge(ids: list[int], new_label: int) -> int:
        ids = sorted(set(ids))
        combined = {new_label}
        for cid in ids:
            combined |= members.pop(cid)
        nid = min(combined)
        members[nid] = combined
        for lab in combined:
            cluster_of[lab] = nid
        for v, cid in b.items():
            if cid in ids:
                b[v] = nid
        return nid

    for lab in range(1, t.size + 1):
        d = t.dominoes[lab]
        kind = kinds[lab]
        before = _even_parts(rows)
        col = d.column
        if kind is DominoKind.N:
            i = (col + 1) // 2  # columns 2i-1, 2i
            ids = [b[2 * i - 2]]
            if before[2 * i]:
                ids.append(b[2 * i])
            nid = merge(ids, lab)
            b[2 * i] = nid
        elif kind is DominoKind.IPLUS:
            i = col // 2
            if before[2 * i]:
                nid = merge([b[2 * i]], lab)
            else:
                nid = merge([], lab)
            b[2 * i] = nid
        else:
            i = (col - 1) // 2
            merge([b[2 * i]], lab)
        for r, _c in d.boxes:
            rows[r] += 1
        after = _even_parts(rows)
        for v in list(b):
            if v and not after[v]:
                del b[v]
        assert set(b) == {0} | set(after), (t.grid, lab, b, after)
        yield dict(cluster_of), dict(b)


def clusters(t: DominoTableau) -> ClusterDecomposition:
    if not is_admissible(t, "C"):
        raise NotAdmissible(f"tableau {t.grid} is not admissible of type C")
    cluster_of: dict[int, int] = {}
    b: dict[int, int] = {0: _VIRTUAL}
    for cluster_of, b in cluster_trace(t):
        pass
    return ClusterDecomposition(t, cluster_of, b, domino_kinds(t, "C"))


def open_partition(d: ClusterDecomposition) -> list[frozenset[int]]:
    """Blocks of B given by the preimages of the open clusters; the block
    containing 0 comes first, the rest ordered by their smallest element."""
    blocks = [d.preimage(c) for c in d.open_set]
    return sorted(blocks, key=lambda blk: (0 not in blk, min(blk)))
