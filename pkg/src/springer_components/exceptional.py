"""Permutation characters of small symmetric groups and the multiplicity solver.

A transitive A_e-set A_e/A contributes to the permutation character the
number of cosets gA fixed by x, i.e. #{gA : g^-1 x g in A}.  Stacking these
rows for the candidate stabilizers gives a table T, and the multiplicities a
of the orbits satisfy T^t a = chi.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .errors import (
    InconsistentCharacter,
    InvalidInput,
    NegativeMultiplicity,
    NonIntegralSolution,
    SingularTable,
)

Perm = tuple[int, ...]  # images of 0..n-1


def compose(p: Perm, q: Perm) -> Perm:
    """p after q."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def from_cycles(n: int, cycles: Sequence[Sequence[int]]) -> Perm:
    """Permutation of degree n from 1-based cycles, e.g. [(1, 2), (3, 4)]."""
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            if not (1 <= a <= n and 1 <= b <= n):
                raise InvalidInput(f"cycle {tuple(cyc)} is not on 1..{n}")
            img[a - 1] = b - 1
    return tuple(img)


def cycle_type(p: Perm) -> tuple[int, ...]:
    seen = set()
    lengths = []
    for i in range(len(p)):
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            j = p[j]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def closure(n: int, gens: Sequence[Perm]) -> frozenset[Perm]:
    ident = tuple(range(n))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(s, g)
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(group)


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> frozenset[Perm]:
    return frozenset(permutations(range(n)))


# class representatives in the order used by the printed tables
_CLASS_CYCLES = {
    2: [[], [(1, 2)]],
    3: [[], [(1, 2)], [(1, 2, 3)]],
    4: [[], [(1, 2)], [(1, 2, 3)], [(1, 2), (3, 4)], [(1, 2, 3, 4)]],
    5: [[], [(1, 2)], [(1, 2, 3)], [(1, 2), (3, 4)], [(1, 2, 3, 4)], [(1, 2), (3, 4, 5)], [(1, 2, 3, 4, 5)]],
}


def _cycle_label(cycles) -> str:
    return "".join("(" + "".join(map(str, c)) + ")" for c in cycles) or "()"


@dataclass(frozen=True)
class SymGroup:
    degree: int

    @property
    def class_reps(self) -> list[Perm]:
        return [from_cycles(self.degree, c) for c in _CLASS_CYCLES[self.degree]]

    @property
    def class_labels(self) -> list[str]:
        return [_cycle_label(c) for c in _CLASS_CYCLES[self.degree]]

    def class_sizes(self) -> list[int]:
        types = [cycle_type(r) for r in self.class_reps]
        counts = [0] * len(types)
        for g in symmetric_group(self.degree):
            counts[types.index(cycle_type(g))] += 1
        return counts

    @property
    def order(self) -> int:
        return len(symmetric_group(self.degree))


def sym_group(n: int) -> SymGroup:
    if n not in _CLASS_CYCLES:
        raise InvalidInput(f"symmetric groups of degree {n} are not supported (2..5)")
    return SymGroup(n)


def fixed_cosets(n: int, subgroup: frozenset[Perm], x: Perm) -> int:
    """#{gA : x gA = gA} = #{g : g^-1 x g in A} / |A|."""
    hits = sum(1 for g in symmetric_group(n) if compose(inverse(g), compose(x, g)) in subgroup)
    return hits // len(subgroup)


def perm_character(n: int, generators: Sequence[Perm]) -> list[int]:
    """Fixed-coset counts on the classes of S_n, in table order."""
    for g in generators:
        if len(g) != n or sorted(g) != list(range(n)):
            raise InvalidInput(f"{g} is not a permutation of degree {n}")
    sub = closure(n, list(generators))
    return [fixed_cosets(n, sub, x) for x in sym_group(n).class_reps]


# --- stabilizer families ---------------------------------------------------

@dataclass(frozen=True)
class Candidate:
    name: str
    generators: tuple[tuple[tuple[int, ...], ...], ...]  # generators as cycle lists

    def perms(self, n: int) -> list[Perm]:
        return [from_cycles(n, g) for g in self.generators]


@dataclass(frozen=True)
class StabilizerFamily:
    label: str
    degree: int
    candidates: tuple[Candidate, ...]

    def row_names(self) -> list[str]:
        return [f"S{self.degree}/{c.name}" for c in self.candidates]


def _cand(name, *gens) -> Candidate:
    return Candidate(name, tuple(tuple(tuple(c) for c in g) for g in gens))


TRIVIAL = _cand("1")
_S = {
    2: _cand("S2", [(1, 2)]),
    3: _cand("S3", [(1, 2)], [(1, 2, 3)]),
    4: _cand("S4", [(1, 2)], [(1, 2, 3, 4)]),
    5: _cand("S5", [(1, 2)], [(1, 2, 3, 4, 5)]),
}
C3 = _cand("C3", [(1, 2, 3)])
S2xS2 = _cand("S2xS2", [(1, 2)], [(3, 4)])
D4 = _cand("D4", [(1, 2, 3, 4)], [(1, 3)])
S3xS2 = _cand("S3xS2", [(1, 2, 3)], [(1, 2)], [(4, 5)])


def builtin_families() -> dict[str, StabilizerFamily]:
    """Candidate stabilizer sets, rows in the order the tables print them."""
    fams = [
        StabilizerFamily("S2", 2, (TRIVIAL, _S[2])),
        StabilizerFamily("S3", 3, (TRIVIAL, _S[2], _S[3])),
        StabilizerFamily("G2(a1)", 3, (_S[2], _S[3])),
        StabilizerFamily("E8(b6)", 3, (C3, _S[2], _S[3])),
        StabilizerFamily("S4", 4, (_S[4], _S[3], D4, S2xS2, _S[2])),
        StabilizerFamily("S5", 5, (_S[5], _S[4], S3xS2, D4, _S[3], S2xS2, _S[2])),
    ]
    return {f.label: f for f in fams}


_ALIASES = {"G_2(a_1)": "G2(a1)", "E_8(b_6)": "E8(b6)", "S3C3": "E8(b6)"}


def get_family(label: str) -> StabilizerFamily:
    fams = builtin_families()
    key = _ALIASES.get(label, label)
    if key not in fams:
        raise InvalidInput(f"unknown family {label!r}; known: {', '.join(fams)}")
    return fams[key]


# --- tables and the solver -------------------------------------------------

@dataclass(frozen=True)
class CharTable:
    family: StabilizerFamily
    rows: tuple[tuple[int, ...], ...]

    @property
    def row_names(self) -> list[str]:
        return self.family.row_names()

    @property
    def column_labels(self) -> list[str]:
        return sym_group(self.family.degree).class_labels

    def to_dict(self) -> dict:
        return {
            "family": self.family.label,
            "columns": self.column_labels,
            "rows": {name: list(r) for name, r in zip(self.row_names, self.rows)},
        }


def _rank(rows: Sequence[Sequence[Fraction]]) -> int:
    m = [list(map(Fraction, r)) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def table_rank(table: CharTable) -> int:
    return _rank(table.rows)


def is_invertible(table: CharTable) -> bool:
    """Rows independent, so T^t a = chi has at most one solution."""
    return table_rank(table) == len(table.rows)


def build_table(family: StabilizerFamily, check: bool = True) -> CharTable:
    """Stacked permutation characters; with ``check`` a dependent table raises."""
    n = family.degree
    rows = tuple(tuple(perm_character(n, c.perms(n))) for c in family.candidates)
    if check and _rank(rows) < len(rows):
        raise SingularTable(f"the rows of the {family.label} table are linearly dependent")
    return CharTable(family, rows)


def solve_exact(table: CharTable, chi: Sequence[int]) -> list[Fraction]:
    """The unique rational a with T^t a = chi (T may have more columns than rows)."""
    k, c = len(table.rows), len(table.rows[0])
    if len(chi) != c:
        raise InvalidInput(f"chi has {len(chi)} values, the group has {c} classes")
    # augmented system: one equation per conjugacy class
    aug = [[Fraction(table.rows[i][j]) for i in range(k)] + [Fraction(chi[j])] for j in range(c)]
    r = 0
    pivots = []
    for col in range(k):
        piv = next((i for i in range(r, c) if aug[i][col] != 0), None)
        if piv is None:
            raise SingularTable(f"the {table.family.label} table is singular")
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][col]
        aug[r] = [v / p for v in aug[r]]
        for i in range(c):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    for i in range(r, c):
        if aug[i][k] != 0:
            raise InconsistentCharacter(f"chi={list(chi)} is not in the span of the {table.family.label} rows")
    return [aug[i][k] for i in range(k)]


def solve_multiplicities(table: CharTable, chi: Sequence[int]) -> list[int]:
    sol = solve_exact(table, chi)
    names = table.row_names
    for name, v in zip(names, sol):
        if v.denominator != 1:
            raise NonIntegralSolution(f"multiplicity of {name} would be {v}")
    for name, v in zip(names, sol):
        if v < 0:
            raise NegativeMultiplicity(f"multiplicity of {name} would be {v}")
    return [int(v) for v in sol]


def multiplicities_dict(table: CharTable, a: Sequence[int]) -> dict:
    return {"multiplicities": dict(zip(table.row_names, a))}


def character_of(table: CharTable, a: Sequence[int]) -> list[int]:
    """T^t a: the character of the A_e-set with orbit multiplicities a."""
    return [sum(ai * row[j] for ai, row in zip(a, table.rows)) for j in range(len(table.rows[0]))]


def s3_closed_form(chi: Sequence[int]) -> tuple[Fraction, Fraction, Fraction]:
    """(a1, a2, a3) for the {1, S2, S3} family by the printed elimination formulas."""
    c1, c12, c123 = (Fraction(x) for x in chi)
    a3 = c123
    a2 = c1 - 2 * c12 - c123
    a1 = c12 - (c1 - c123) / 3
    return a1, a2, a3
