"""Lusztig's canonical quotient, Temperley-Lieb patterns and the subgroups H_sigma.

For a type-C datum with multiplicities r_1, ..., r_l the kernel K_e is spanned
by t_m t_{m+1} over the m with r_1 + ... + r_m odd (t_{l+1} = 1).  The
quotient has basis the classes of t_{m_1}, ..., t_{m_e}, the indexes with even
prefix sum, and TL patterns live on Z = {1} | {2m_i, 2m_i + 1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidInput, PatternMismatch, ScopeError
from .f2 import F2Quotient, F2Subgroup, bits, subgroup_image, subgroup_span
from .ncp import NoncrossingPartition, enumerate_even_ncp, ncp_group, make_ncp
from .partitions import OrbitDatum

MAX_TL_RANK = 12


def _require_c(datum: OrbitDatum) -> None:
    if datum.lie_type != "C":
        raise InvalidInput("the canonical quotient is implemented for type C only")


def ke_subgroup(datum: OrbitDatum) -> F2Subgroup:
    _require_c(datum)
    ell = datum.ell
    gens = []
    for m, s in enumerate(datum.prefix_sums(), 1):
        if s % 2:
            gens.append(bits(m) | (bits(m + 1) if m < ell else 0))
    return subgroup_span(ell, gens)


def quotient_indexes(datum: OrbitDatum) -> tuple[int, ...]:
    return tuple(m for m, s in enumerate(datum.prefix_sums(), 1) if s % 2 == 0)


def canonical_quotient(datum: OrbitDatum) -> F2Quotient:
    return F2Quotient.from_kernel(ke_subgroup(datum), quotient_indexes(datum))


# --- TL patterns --------------------------------------------------------------

@dataclass(frozen=True)
class TLPattern:
    z: tuple[int, ...]
    singleton: int
    pairs: tuple[tuple[int, int], ...]  # each (a, b) with a < b, sorted

    def to_dict(self) -> dict:
        return {"z": list(self.z), "singleton": self.singleton, "pairs": [list(p) for p in self.pairs]}

    @classmethod
    def from_dict(cls, d: dict) -> TLPattern:
        p = make_tl(d["z"], d["singleton"], d["pairs"])
        check_tl(p)
        return p

    def __str__(self):
        sets = [f"{{{self.singleton}}}"] + [f"{{{a},{b}}}" for a, b in self.pairs]
        return "{" + ", ".join(sets) + "}"


def make_tl(z: Sequence[int], singleton: int, pairs) -> TLPattern:
    return TLPattern(
        tuple(sorted(z)),
        int(singleton),
        tuple(sorted(tuple(sorted((int(a), int(b)))) for a, b in pairs)),
    )


def check_tl(p: TLPattern) -> None:
    """Raise InvalidInput unless ``p`` is a TL pattern of ``p.z``."""
    used = [p.singleton] + [x for ab in p.pairs for x in ab]
    if sorted(used) != list(p.z):
        raise InvalidInput("singleton and pairs do not partition Z")
    d = p.singleton
    if d % 2 == 0:
        raise InvalidInput(f"singleton {d} is even")
    for a, b in p.pairs:
        if (a - d) * (b - d) <= 0:
            raise InvalidInput(f"pair {{{a},{b}}} straddles the singleton {d}")
    for i, (a, b) in enumerate(p.pairs):
        for c, e in p.pairs[i + 1:]:
            if a < c < b < e or c < a < e < b:
                raise InvalidInput(f"pairs {{{a},{b}}} and {{{c},{e}}} cross")


def tl_zset(datum: OrbitDatum) -> tuple[int, ...]:
    z = [1]
    for m in quotient_indexes(datum):
        z += [2 * m, 2 * m + 1]
    return tuple(z)


def _matchings(points: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    """Noncrossing perfect matchings of an ordered point list."""
    if not points:
        yield []
        return
    first = points[0]
    for k in range(1, len(points), 2):
        inner, outer = points[1:k], points[k + 1:]
        for a in _matchings(inner):
            for b in _matchings(outer):
                yield [(first, points[k])] + a + b


def enumerate_tl_on(z: Sequence[int]) -> list[TLPattern]:
    z = tuple(sorted(z))
    out = []
    for pos, d in enumerate(z):
        if d % 2 == 0:
            continue
        left, right = z[:pos], z[pos + 1:]
        if len(left) % 2 or len(right) % 2:
            continue
        for ml in _matchings(left):
            for mr in _matchings(right):
                out.append(make_tl(z, d, ml + mr))
    out.sort(key=lambda p: (p.singleton, p.pairs))
    return out


def enumerate_tl(datum: OrbitDatum) -> list[TLPattern]:
    e = len(quotient_indexes(datum))
    if e > MAX_TL_RANK:
        raise InvalidInput(f"quotient rank {e} exceeds the cap {MAX_TL_RANK}")
    return enumerate_tl_on(tl_zset(datum))


def h_sigma(pattern: TLPattern, datum: OrbitDatum) -> F2Subgroup:
    """Subgroup of the quotient, in the coordinates of t_{m_1}, ..., t_{m_e}.

    A pair {2m_a, 2m_b + 1} (even member smaller) gives t_{m_a} t_{m_{b+1}} when
    b < e and t_{m_a} when b = e; the other pairs contribute nothing.
    """
    ms = quotient_indexes(datum)
    if pattern.z != tl_zset(datum):
        raise PatternMismatch(f"pattern on {pattern.z} does not match Z = {tl_zset(datum)}")
    e = len(ms)
    even_pos = {2 * m: k for k, m in enumerate(ms, 1)}
    odd_pos = {2 * m + 1: k for k, m in enumerate(ms, 1)}
    gens = []
    for a, b in pattern.pairs:
        if a in even_pos and b in odd_pos:
            i1, j = even_pos[a], odd_pos[b]
            gens.append(bits(i1) | (bits(j + 1) if j < e else 0))
    return subgroup_span(e, gens)


# --- the NCP <-> TL bijection (all multiplicities even) ------------------------

def _require_even(datum: OrbitDatum) -> None:
    _require_c(datum)
    if not datum.all_mults_even():
        raise ScopeError("the NCP/TL bijection needs every multiplicity even; map through the quotient first")


def ncp_to_tl(p: NoncrossingPartition, datum: OrbitDatum) -> TLPattern:
    """A block with index range [a+1, b] becomes the pair {2a+1, 2b}; the other
    pairs are the unique even-odd completion."""
    _require_even(datum)
    ell = datum.ell
    z = tuple(range(1, 2 * ell + 2))
    fixed = []
    for blk in p.other_blocks:
        idx = sorted(datum.index_of(v) for v in blk)
        fixed.append((2 * idx[0] - 1, 2 * idx[-1]))
    used = {x for ab in fixed for x in ab}
    stack: list[int] = []
    pairs = list(fixed)
    lonely = []
    for x in z:
        if x in used:
            continue
        if x % 2 == 0:
            stack.append(x)
        elif stack:
            pairs.append((stack.pop(), x))
        else:
            lonely.append(x)
    if len(lonely) != 1 or stack:
        raise InvalidInput(f"{p} does not complete to a TL pattern")
    t = make_tl(z, lonely[0], pairs)
    check_tl(t)
    return t


def tl_to_ncp(t: TLPattern, datum: OrbitDatum) -> NoncrossingPartition:
    """Pairs {2a+1 < 2b} become blocks with index range [a+1, b] minus the
    ranges nested inside; L0 collects the rest."""
    _require_even(datum)
    if t.z != tl_zset(datum):
        raise PatternMismatch(f"pattern on {t.z} does not match Z = {tl_zset(datum)}")
    ranges = [((a + 1) // 2, b // 2) for a, b in t.pairs if a % 2 == 1 and b % 2 == 0]
    blocks = []
    for lo, hi in ranges:
        inner = [r for r in ranges if r != (lo, hi) and lo <= r[0] and r[1] <= hi]
        idx = [i for i in range(lo, hi + 1) if not any(c <= i <= d for c, d in inner)]
        blocks.append([datum.value_of(i) for i in idx])
    used = {v for b in blocks for v in b}
    zero = [v for v in datum.b_lambda if v not in used]
    return make_ncp([zero] + blocks, datum.b_lambda)


# --- the theorem check ------------------------------------------------------------

@dataclass(frozen=True)
class EvidenceReport:
    datum: OrbitDatum
    quotient: F2Quotient
    ncp_images: tuple[tuple[NoncrossingPartition, F2Subgroup, F2Subgroup], ...]
    tl_groups: tuple[tuple[TLPattern, F2Subgroup], ...]

    @property
    def image_set(self) -> frozenset[F2Subgroup]:
        return frozenset(img for _, _, img in self.ncp_images)

    @property
    def h_set(self) -> frozenset[F2Subgroup]:
        return frozenset(h for _, h in self.tl_groups)

    @property
    def passed(self) -> bool:
        return self.image_set == self.h_set

    def to_dict(self) -> dict:
        q = self.quotient
        return {
            "partition": list(self.datum.partition.parts),
            "quotient_basis": list(q.quotient_basis_indexes),
            "kernel": q.kernel.to_dict(),
            "ncp_images": [
                {"ncp": p.to_dict(), "group": a.to_dict(), "image": img.to_dict(),
                 "image_text": q.describe(img)}
                for p, a, img in self.ncp_images
            ],
            "tl_groups": [
                {"pattern": t.to_dict(), "h_sigma": h.to_dict(), "h_text": q.describe(h)}
                for t, h in self.tl_groups
            ],
            "verdict": "pass" if self.passed else "fail",
        }


def verify_evidence(datum: OrbitDatum) -> EvidenceReport:
    q = canonical_quotient(datum)
    images = []
    for p in enumerate_even_ncp(datum):
        a = ncp_group(p, datum)
        images.append((p, a, subgroup_image(a, q)))
    tls = [(t, h_sigma(t, datum)) for t in enumerate_tl(datum)]
    return EvidenceReport(datum, q, tuple(images), tuple(tls))
