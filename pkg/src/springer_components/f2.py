"""Subgroups and quotients of elementary abelian 2-groups (Z/2)^l.

A group element is an ``int`` bit-vector: bit ``i - 1`` is the exponent of the
generator ``t_i``.  In text and JSON the vector is written as a bit string
whose first character is ``t_1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch, InvalidInput


def bits(i: int) -> int:
    """The generator t_i (1-based) as a vector."""
    return 1 << (i - 1)


def vec_from_str(s: str) -> int:
    if any(c not in "01" for c in s):
        raise InvalidInput(f"not a bit string: {s!r}")
    return sum(1 << k for k, c in enumerate(s) if c == "1")


def vec_to_str(v: int, rank: int) -> str:
    return "".join("1" if v >> k & 1 else "0" for k in range(rank))


def vec_support(v: int) -> list[int]:
    """1-based indexes of generators appearing in ``v``."""
    out, k = [], 1
    while v:
        if v & 1:
            out.append(k)
        v >>= 1
        k += 1
    return out


def _lowbit(v: int) -> int:
    return (v & -v).bit_length() - 1


def _rref(rank: int, vectors: Iterable[int]) -> tuple[int, ...]:
    rows: dict[int, int] = {}  # pivot bit -> row
    for v in vectors:
        if v < 0 or v >> rank:
            raise DimensionMismatch(f"vector {v:b} does not fit in rank {rank}")
        for p, row in rows.items():
            if v >> p & 1:
                v ^= row
        if not v:
            continue
        p = _lowbit(v)
        for q in rows:
            if rows[q] >> p & 1:
                rows[q] ^= v
        rows[p] = v
    return tuple(rows[p] for p in sorted(rows))


@dataclass(frozen=True, order=True)
class F2Subgroup:
    """Subgroup in reduced row-echelon form.

    Pivots are the lowest-index generators of each row and every pivot column
    is zero in the other rows, so two spans are equal exactly when the
    dataclasses compare equal.
    """

    ambient_rank: int
    basis: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def order(self) -> int:
        return 1 << len(self.basis)

    def is_trivial(self) -> bool:
        return not self.basis

    def __contains__(self, v: int) -> bool:
        for row in self.basis:
            if v >> _lowbit(row) & 1:
                v ^= row
        return v == 0

    def elements(self) -> Iterator[int]:
        for k in range(self.order):
            v = 0
            for j, row in enumerate(self.basis):
                if k >> j & 1:
                    v ^= row
            yield v

    def issubgroup(self, other: F2Subgroup) -> bool:
        return all(row in other for row in self.basis)

    def join(self, other: F2Subgroup) -> F2Subgroup:
        if other.ambient_rank != self.ambient_rank:
            raise DimensionMismatch("ambient ranks differ")
        return subgroup_span(self.ambient_rank, self.basis + other.basis)

    def generator_names(self) -> list[str]:
        return [monomial(row) for row in self.basis]

    def __str__(self):
        if not self.basis:
            return "1"
        return "<" + ", ".join(self.generator_names()) + ">"

    def to_dict(self) -> dict:
        return {
            "ambient_rank": self.ambient_rank,
            "basis": [vec_to_str(v, self.ambient_rank) for v in self.basis],
        }

    @classmethod
    def from_dict(cls, d: dict) -> F2Subgroup:
        rank = int(d["ambient_rank"])
        vecs = []
        for s in d["basis"]:
            if len(s) != rank:
                raise DimensionMismatch(f"bit string {s!r} has length != {rank}")
            vecs.append(vec_from_str(s))
        return subgroup_span(rank, vecs)


def monomial(v: int, names: Sequence[str] | None = None) -> str:
    idx = vec_support(v)
    if not idx:
        return "1"
    if names is None:
        return "".join(f"t{i}" for i in idx)
    return "".join(names[i - 1] for i in idx)


def subgroup_span(ambient_rank: int, generators: Iterable[int]) -> F2Subgroup:
    if ambient_rank < 0:
        raise DimensionMismatch("negative ambient rank")
    return F2Subgroup(ambient_rank, _rref(ambient_rank, generators))


def trivial(ambient_rank: int) -> F2Subgroup:
    return F2Subgroup(ambient_rank, ())


def full(ambient_rank: int) -> F2Subgroup:
    return subgroup_span(ambient_rank, [bits(i) for i in range(1, ambient_rank + 1)])


def even_weight(ambient_rank: int) -> F2Subgroup:
    """The subgroup spanned by t_i t_{i+1}."""
    return subgroup_span(
        ambient_rank, [bits(i) | bits(i + 1) for i in range(1, ambient_rank)]
    )


def pair_span(ambient_rank: int, indexes: Sequence[int]) -> list[int]:
    """Generators t_i t_j for i, j in ``indexes`` (consecutive pairs suffice)."""
    idx = sorted(indexes)
    return [bits(a) | bits(b) for a, b in zip(idx, idx[1:])]


@dataclass(frozen=True)
class F2Quotient:
    """A quotient map (Z/2)^l -> (Z/2)^e.

    ``projection[j]`` is the image of ``t_{j+1}`` written in the basis of the
    classes of ``t_{m_1}, ..., t_{m_e}`` (``quotient_basis_indexes``).
    """

    kernel: F2Subgroup
    quotient_basis_indexes: tuple[int, ...]
    projection: tuple[int, ...]

    @property
    def ambient_rank(self) -> int:
        return self.kernel.ambient_rank

    @property
    def rank(self) -> int:
        return len(self.quotient_basis_indexes)

    def __call__(self, v: int) -> int:
        out = 0
        for i in vec_support(v):
            out ^= self.projection[i - 1]
        return out

    def basis_names(self) -> list[str]:
        return [f"t{m}" for m in self.quotient_basis_indexes]

    def describe(self, s: F2Subgroup) -> str:
        """Render a subgroup of the quotient using the names t_{m_i}."""
        if not s.basis:
            return "1"
        names = self.basis_names()
        return "<" + ", ".join(monomial(v, names) for v in s.basis) + ">"

    @classmethod
    def from_kernel(cls, kernel: F2Subgroup, basis_indexes: Sequence[int]) -> F2Quotient:
        """Quotient by ``kernel`` whose basis is the classes of t_m, m in basis_indexes."""
        rank = kernel.ambient_rank
        basis_indexes = tuple(basis_indexes)
        if kernel.rank + len(basis_indexes) != rank:
            raise DimensionMismatch(
                f"kernel rank {kernel.rank} + {len(basis_indexes)} quotient generators != {rank}"
            )
        # echelon rows tagged with the quotient coordinates they carry
        rows: dict[int, tuple[int, int]] = {}

        def reduce(v: int, tag: int) -> tuple[int, int]:
            for p in sorted(rows):
                if v >> p & 1:
                    rv, rt = rows[p]
                    v ^= rv
                    tag ^= rt
            return v, tag

        seeds = [(row, 0) for row in kernel.basis]
        seeds += [(bits(m), 1 << k) for k, m in enumerate(basis_indexes)]
        for v, tag in seeds:
            v, tag = reduce(v, tag)
            if not v:
                raise DimensionMismatch("quotient generators are dependent modulo the kernel")
            rows[_lowbit(v)] = (v, tag)
        proj = []
        for j in range(1, rank + 1):
            v, tag = reduce(bits(j), 0)
            assert v == 0
            proj.append(tag)
        return cls(kernel, basis_indexes, tuple(proj))


def identity_quotient(rank: int) -> F2Quotient:
    return F2Quotient.from_kernel(trivial(rank), range(1, rank + 1))


def subgroup_image(s: F2Subgroup, q: F2Quotient) -> F2Subgroup:
    if s.ambient_rank != q.ambient_rank:
        raise DimensionMismatch(
            f"subgroup of rank {s.ambient_rank} cannot be mapped by a quotient of (Z/2)^{q.ambient_rank}"
        )
    return subgroup_span(q.rank, (q(v) for v in s.basis))


def all_subgroups(rank: int) -> list[F2Subgroup]:
    """Every subgroup of (Z/2)^rank (brute force, small rank only)."""
    start = trivial(rank)
    seen = {start}
    frontier = [start]
    while frontier:
        s = frontier.pop()
        for v in range(1, 1 << rank):
            if v in s:
                continue
            t = subgroup_span(rank, s.basis + (v,))
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    return sorted(seen)
