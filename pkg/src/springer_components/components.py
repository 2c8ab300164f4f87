"""Irreducible components of type-C Springer fibers as signed tableau classes.

A component is an admissible tableau together with a sign on every cluster
other than b(0) (whose sign is pinned to +).  The generator t_i flips the sign
of the open cluster b(2x_i).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable

from .clusters import ClusterDecomposition, clusters
from .errors import Infeasible, InvalidInput
from .f2 import F2Subgroup, bits, full, subgroup_span
from .partitions import OrbitDatum
from .tableaux import DominoKind, DominoTableau, enumerate_admissible

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class SignedClass:
    tableau: DominoTableau
    signs: tuple[tuple[int, int], ...]  # (cluster id, +1 | -1) for every cluster
    decomposition: ClusterDecomposition = field(compare=False, repr=False, hash=False)

    @cached_property
    def sign_of(self) -> dict[int, int]:
        return dict(self.signs)

    @property
    def marked_values(self) -> tuple[int, ...]:
        """Distinct even parts of the shape, decreasing (2x_1 > ... > 2x_l)."""
        return tuple(sorted({p for p in self.tableau.shape if p % 2 == 0}, reverse=True))

    @property
    def ell(self) -> int:
        return len(self.marked_values)

    def sign_vector(self) -> tuple[int, ...]:
        """Signs of the non-base clusters as 0 (+) / 1 (-), in cluster-id order."""
        d = self.decomposition
        return tuple(0 if self.sign_of[c] > 0 else 1 for c in d.signed_clusters)

    def with_signs(self, new: dict[int, int]) -> SignedClass:
        return SignedClass(self.tableau, tuple(sorted(new.items())), self.decomposition)

    def to_dict(self) -> dict:
        return {
            "tableau": self.tableau.to_dict(),
            "signs": {str(c): "+" if s > 0 else "-" for c, s in self.signs},
        }


def classes_of_tableau(t: DominoTableau, d: ClusterDecomposition | None = None) -> list[SignedClass]:
    d = d or clusters(t)
    base = d.base_cluster
    free = d.signed_clusters
    out = []
    for choice in product((1, -1), repeat=len(free)):
        signs = dict(zip(free, choice))
        signs[base] = 1
        out.append(SignedClass(t, tuple(sorted(signs.items())), d))
    return out


def count_components(datum: OrbitDatum) -> int:
    """|Irr| without materializing the classes."""
    return sum(1 << len(clusters(t).signed_clusters) for t in _tableaux(datum))


def _tableaux(datum: OrbitDatum) -> list[DominoTableau]:
    if datum.lie_type != "C":
        raise InvalidInput("components are implemented for type C only")
    return enumerate_admissible(datum.partition.parts, "C")


def _check_budget(datum: OrbitDatum, budget: int) -> list[tuple[DominoTableau, ClusterDecomposition]]:
    pairs = [(t, clusters(t)) for t in _tableaux(datum)]
    total = sum(1 << len(d.signed_clusters) for _, d in pairs)
    if total > budget:
        raise Infeasible(f"{total} components exceed the budget of {budget}")
    return pairs


def enumerate_components(datum: OrbitDatum, budget: int = DEFAULT_BUDGET) -> list[SignedClass]:
    out = []
    for t, d in _check_budget(datum, budget):
        out.extend(classes_of_tableau(t, d))
    return out


def act(i: int, c: SignedClass) -> SignedClass:
    """Action of the generator t_i."""
    if not 1 <= i <= c.ell:
        raise InvalidInput(f"generator index {i} out of range 1..{c.ell}")
    d = c.decomposition
    target = d.b_map[c.marked_values[i - 1]]
    if target == d.base_cluster:
        return c
    signs = dict(c.signs)
    signs[target] = -signs[target]
    return c.with_signs(signs)


def act_element(x: int, c: SignedClass) -> SignedClass:
    """Action of the group element with bit-vector ``x``."""
    for i in range(1, c.ell + 1):
        if x >> (i - 1) & 1:
            c = act(i, c)
    return c


def stabilizer(c: SignedClass) -> F2Subgroup:
    """t_i t_j for b(2x_i) = b(2x_j) and t_i for 2x_i in the preimage of b(0)."""
    d = c.decomposition
    vals = c.marked_values
    gens = []
    for i, vi in enumerate(vals, 1):
        if d.b_map[vi] == d.base_cluster:
            gens.append(bits(i))
        for j in range(i + 1, len(vals) + 1):
            if d.b_map[vi] == d.b_map[vals[j - 1]]:
                gens.append(bits(i) | bits(j))
    return subgroup_span(len(vals), gens)


def brute_force_stabilizer(c: SignedClass) -> F2Subgroup:
    ell = c.ell
    fixed = [x for x in range(1 << ell) if act_element(x, c) == c]
    return subgroup_span(ell, fixed)


@dataclass(frozen=True)
class Orbit:
    representative: SignedClass
    size: int
    stabilizer: F2Subgroup
    brute_stabilizer: F2Subgroup

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "stabilizer": self.stabilizer.to_dict(),
            "representative": self.representative.to_dict(),
        }


@dataclass(frozen=True)
class OrbitReport:
    datum: OrbitDatum
    orbits: tuple[Orbit, ...]

    @property
    def stab_set(self) -> frozenset[F2Subgroup]:
        return frozenset(o.stabilizer for o in self.orbits)

    @property
    def total(self) -> int:
        return sum(o.size for o in self.orbits)

    def consistent(self) -> bool:
        """Formula and brute-force stabilizers agree and |orbit| |stab| = |A_e|."""
        group_order = 1 << self.datum.ell
        return all(
            o.stabilizer == o.brute_stabilizer and o.size * o.stabilizer.order == group_order
            for o in self.orbits
        )

    def to_dict(self) -> dict:
        return {
            "partition": list(self.datum.partition.parts),
            "orbits": [o.to_dict() for o in self.orbits],
            "stab_set": [s.to_dict() for s in sorted(self.stab_set)],
        }


def orbits_of(classes: Iterable[SignedClass], group: F2Subgroup) -> list[list[SignedClass]]:
    """Orbits of ``group`` (a subgroup of A_e) on a set of classes, each orbit
    sorted so its first element has the least sign vector."""
    elems = list(group.elements())
    remaining = sorted(classes, key=lambda c: (c.tableau.flat(), c.sign_vector()))
    seen: set[SignedClass] = set()
    out = []
    for c in remaining:
        if c in seen:
            continue
        orb = {act_element(x, c) for x in elems}
        seen |= orb
        out.append(sorted(orb, key=SignedClass.sign_vector))
    return out


def orbit_report(datum: OrbitDatum, budget: int = DEFAULT_BUDGET) -> OrbitReport:
    group = full(datum.ell)
    orbits = []
    for t, d in _check_budget(datum, budget):
        for orb in orbits_of(classes_of_tableau(t, d), group):
            rep = orb[0]
            orbits.append(Orbit(rep, len(orb), stabilizer(rep), brute_force_stabilizer(rep)))
    return OrbitReport(datum, tuple(orbits))


# --- good clusters and the K_e quotient --------------------------------------

def good_open_clusters(d: ClusterDecomposition, datum: OrbitDatum) -> frozenset[int]:
    """Open clusters C with 2x_m in b^-1(C) iff 2x_{m+1} in b^-1(C) whenever
    r_1 + ... + r_m is odd; the missing 2x_{l+1} counts as lying over b(0)."""
    vals = datum.values
    ell = datum.ell
    odd = [m for m, s in enumerate(datum.prefix_sums(), 1) if s % 2]
    good = set()
    for cl in d.open_set:
        pre = d.preimage(cl)
        ok = True
        for m in odd:
            here = vals[m - 1] in pre
            nxt = vals[m] in pre if m < ell else cl == d.base_cluster
            if here != nxt:
                ok = False
                break
        if ok:
            good.add(cl)
    return frozenset(good)


def enumerate_good_classes(datum: OrbitDatum, budget: int = DEFAULT_BUDGET) -> list[SignedClass]:
    out = []
    for t, d in _check_budget(datum, budget):
        good = good_open_clusters(d, datum)
        pinned = (d.open_set - good) - {d.base_cluster}
        out.extend(
            c for c in classes_of_tableau(t, d)
            if all(c.sign_of[p] > 0 for p in pinned)
        )
    return out


def iplus_count(t: DominoTableau) -> int:
    d = clusters(t)
    return sum(1 for k in d.kinds.values() if k is DominoKind.IPLUS)
