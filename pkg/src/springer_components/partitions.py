"""Partitions of classical nilpotent orbits and their marked-part data."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidInput, NotClassicalType

LIE_TYPES = ("B", "C", "D")
ISOGENIES = ("O", "SO")


def multiplicities(parts: Sequence[int]) -> Counter:
    return Counter(parts)


def classical_violation(parts: Sequence[int], lie_type: str) -> str | None:
    """Return a reason string if ``parts`` is not a partition of ``lie_type``."""
    total = sum(parts)
    mult = Counter(parts)
    if lie_type == "C":
        if total % 2:
            return f"total {total} is odd"
        bad = sorted(p for p, m in mult.items() if p % 2 == 1 and m % 2 == 1)
        if bad:
            return f"odd part(s) {bad} have odd multiplicity"
        return None
    if lie_type in ("B", "D"):
        want = 1 if lie_type == "B" else 0
        if total % 2 != want:
            return f"total {total} has the wrong parity for type {lie_type}"
        bad = sorted(p for p, m in mult.items() if p % 2 == 0 and m % 2 == 1)
        if bad:
            return f"even part(s) {bad} have odd multiplicity"
        return None
    raise InvalidInput(f"unknown Lie type {lie_type!r}")


def is_classical(parts: Sequence[int], lie_type: str) -> bool:
    return classical_violation(parts, lie_type) is None


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]
    lie_type: str

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def rank(self) -> int:
        """Rank n of the Lie algebra (sp_2n, so_2n+1 or so_2n)."""
        return self.total // 2

    def __str__(self):
        return format_parts(self.parts)


def validate_partition(parts: Sequence[int], lie_type: str) -> Partition:
    if lie_type not in LIE_TYPES:
        raise InvalidInput(f"unknown Lie type {lie_type!r}")
    parts = list(parts)
    if not parts:
        raise InvalidInput("partition must be nonempty")
    if any((not isinstance(p, int)) or p < 1 for p in parts):
        raise InvalidInput(f"parts must be positive integers: {parts}")
    parts = tuple(sorted(parts, reverse=True))
    why = classical_violation(parts, lie_type)
    if why:
        raise NotClassicalType(f"{format_parts(parts)} is not of type {lie_type}: {why}")
    return Partition(parts, lie_type)


@dataclass(frozen=True)
class OrbitDatum:
    """Marked parts of a classical partition.

    ``marked_parts`` holds ``(x_i, r_i)`` with the marked parts themselves
    (``2x_i`` in type C, ``2x_i + 1`` in types B/D) strictly decreasing, so
    generator ``t_i`` belongs to the i-th largest marked part.
    """

    partition: Partition
    marked_parts: tuple[tuple[int, int], ...]
    isogeny: str = "O"

    @property
    def lie_type(self) -> str:
        return self.partition.lie_type

    @property
    def ell(self) -> int:
        return len(self.marked_parts)

    @property
    def values(self) -> tuple[int, ...]:
        """The marked parts in decreasing order (the nonzero elements of B)."""
        off = 0 if self.lie_type == "C" else 1
        return tuple(2 * x + off for x, _ in self.marked_parts)

    @property
    def mults(self) -> tuple[int, ...]:
        return tuple(r for _, r in self.marked_parts)

    @property
    def b_lambda(self) -> frozenset[int]:
        return frozenset((0,) + self.values)

    def index_of(self, value: int) -> int:
        """1-based generator index of a marked part."""
        return self.values.index(value) + 1

    def value_of(self, index: int) -> int:
        return self.values[index - 1]

    def prefix_sums(self) -> tuple[int, ...]:
        out, s = [], 0
        for r in self.mults:
            s += r
            out.append(s)
        return tuple(out)

    def all_mults_even(self) -> bool:
        return all(r % 2 == 0 for r in self.mults)


def orbit_datum(p: Partition, isogeny: str = "O") -> OrbitDatum:
    if isogeny not in ISOGENIES:
        raise InvalidInput(f"unknown isogeny {isogeny!r}")
    if p.lie_type == "C":
        isogeny = "O"
    parity = 0 if p.lie_type == "C" else 1
    mult = Counter(p.parts)
    marked = tuple(
        ((v - parity) // 2, mult[v])
        for v in sorted(mult, reverse=True)
        if v % 2 == parity
    )
    return OrbitDatum(p, marked, isogeny)


def datum_for(parts: Sequence[int], lie_type: str = "C", isogeny: str = "O") -> OrbitDatum:
    return orbit_datum(validate_partition(parts, lie_type), isogeny)


def springer_fiber_dim(p: Partition) -> int:
    """Dimension of the Springer fiber of a type-C partition.

    ``dim B_e = (dim g^e - n) / 2``, where with ``p_i`` the multiplicity of the
    part ``i``::

        dim g^e = sum_i i p_i (p_i / 2 + sum_{j > i} p_j) + sum_{i odd} p_i / 2
    """
    if p.lie_type != "C":
        raise InvalidInput("springer_fiber_dim is implemented for type C only")
    mult = Counter(p.parts)
    sizes = sorted(mult)
    # work with 2 * dim g^e to stay in integers
    twice = 0
    for k, i in enumerate(sizes):
        above = sum(mult[j] for j in sizes[k + 1:])
        twice += i * mult[i] * (mult[i] + 2 * above)
        if i % 2:
            twice += mult[i]
    num = twice - 2 * p.rank
    assert num % 4 == 0 and num >= 0, (p, twice)
    return num // 4


def centralizer_dim(p: Partition) -> int:
    """dim g^e for a type-C partition (same formula as springer_fiber_dim)."""
    return 2 * springer_fiber_dim(p) + p.rank


# --- enumeration and parsing helpers -------------------------------------

def integer_partitions(total: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of ``total`` as weakly decreasing tuples, reverse-lex."""
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in integer_partitions(total - first, first):
            yield (first,) + rest


def classical_partitions(total: int, lie_type: str) -> Iterator[Partition]:
    for parts in integer_partitions(total):
        if is_classical(parts, lie_type):
            yield Partition(parts, lie_type)


def sweep_partitions(max_total: int, lie_type: str = "C") -> Iterator[Partition]:
    """Classical partitions of every admissible total up to ``max_total``."""
    start = 1 if lie_type == "B" else 2
    for total in range(start, max_total + 1, 2):
        yield from classical_partitions(total, lie_type)


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_parts(text: str) -> list[int]:
    """Parse ``"4,4,2,2"`` or exponent shorthand ``"100^3,38^3,16^2"``."""
    parts: list[int] = []
    for tok in text.split(","):
        if not tok.strip():
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise InvalidInput(f"cannot parse partition token {tok!r}")
        value, exp = int(m.group(1)), int(m.group(2) or 1)
        parts.extend([value] * exp)
    if not parts:
        raise InvalidInput("empty partition")
    return parts


def format_parts(parts: Sequence[int]) -> str:
    mult = Counter(parts)
    toks = []
    for v in sorted(mult, reverse=True):
        toks.append(f"{v}^{mult[v]}" if mult[v] > 1 else str(v))
    return "(" + ",".join(toks) + ")"
