import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from springer_components.errors import DimensionMismatch
from springer_components.f2 import (
    F2Quotient,
    F2Subgroup,
    all_subgroups,
    bits,
    full,
    identity_quotient,
    subgroup_image,
    subgroup_span,
    vec_from_str,
    vec_to_str,
)


def span_by_brute_force(rank, gens):
    out = {0}
    for g in gens:
        out |= {x ^ g for x in out}
    return out


def test_bit_strings_put_t1_first():
    assert vec_to_str(bits(1), 3) == "100"
    assert vec_from_str("001") == bits(3)
    assert vec_from_str(vec_to_str(0b101, 3)) == 0b101


def test_span_of_independent_generators():
    s = subgroup_span(3, [vec_from_str("110"), vec_from_str("001")])
    assert sorted(vec_to_str(v, 3) for v in s.basis) == ["001", "110"]


def test_span_of_dependent_triple_has_rank_two():
    gens = [vec_from_str(x) for x in ("110", "011", "101")]
    s = subgroup_span(3, gens)
    assert s.rank == 2
    # {110, 011} spans the same group even though the reduced form differs
    assert s == subgroup_span(3, [vec_from_str("110"), vec_from_str("011")])
    assert set(s.elements()) == span_by_brute_force(3, gens)


def test_empty_span_is_trivial():
    s = subgroup_span(2, [])
    assert s.basis == () and s.is_trivial() and str(s) == "1"


def test_str_uses_generator_names():
    s = subgroup_span(3, [bits(1) | bits(2), bits(3)])
    assert str(s) == "<t1t2, t3>"


def test_json_round_trip_and_rank_check():
    s = subgroup_span(3, [bits(1) | bits(2), bits(3)])
    assert F2Subgroup.from_dict(s.to_dict()) == s
    assert s.to_dict() == {"ambient_rank": 3, "basis": ["110", "001"]}
    with pytest.raises(DimensionMismatch):
        F2Subgroup.from_dict({"ambient_rank": 3, "basis": ["11"]})


vectors = st.integers(min_value=0, max_value=(1 << 6) - 1)


@given(st.lists(vectors, max_size=8))
def test_span_matches_closure_and_is_idempotent(gens):
    s = subgroup_span(6, gens)
    assert set(s.elements()) == span_by_brute_force(6, gens)
    assert subgroup_span(6, s.basis) == s
    assert all(v in s for v in gens)


@given(st.lists(vectors, max_size=6), st.lists(vectors, max_size=6))
def test_equal_spans_compare_equal(a, b):
    sa, sb = subgroup_span(6, a), subgroup_span(6, b)
    assert (sa == sb) == (set(sa.elements()) == set(sb.elements()))


def test_quotient_example_from_the_tl_chain():
    kernel = subgroup_span(3, [bits(1) | bits(2)])
    q = F2Quotient.from_kernel(kernel, (2, 3))
    s = subgroup_span(3, [bits(1) | bits(2), bits(2) | bits(3)])
    img = subgroup_image(s, q)
    assert img == subgroup_span(2, [bits(1) | bits(2)])
    assert q.describe(img) == "<t2t3>"
    assert subgroup_image(kernel, q).is_trivial()
    assert subgroup_image(full(3), q) == full(2)


def test_image_rejects_wrong_rank():
    with pytest.raises(DimensionMismatch):
        subgroup_image(full(2), identity_quotient(3))


def _quotients(rank):
    for kernel in all_subgroups(rank):
        for idx in itertools.combinations(range(1, rank + 1), rank - kernel.rank):
            try:
                yield F2Quotient.from_kernel(kernel, idx)
            except DimensionMismatch:
                continue


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_image_order_is_index_of_intersection(rank):
    subs = all_subgroups(rank)
    for q in _quotients(rank):
        for j in range(1, rank + 1):
            assert q(bits(j)) is not None
        for v in q.kernel.elements():
            assert q(v) == 0
        for s in subs:
            inter = sum(1 for v in s.elements() if v in q.kernel)
            assert subgroup_image(s, q).order == s.order // inter


def test_all_subgroups_count():
    # Gaussian binomial sums: 1, 2, 5, 16, 67
    assert [len(all_subgroups(r)) for r in range(5)] == [1, 2, 5, 16, 67]


def test_image_order_identity_rank_six_exhaustive_on_kernels():
    rank = 6
    subs = all_subgroups(rank)
    assert len(subs) == 2825
    kernels = [k for k in subs if k.rank <= 2]
    for kernel in kernels[:40]:
        pivots = set()
        for row in kernel.basis:
            pivots.add((row & -row).bit_length())
        idx = [j for j in range(1, rank + 1) if j not in pivots]
        q = F2Quotient.from_kernel(kernel, idx)
        for s in subs[::7]:
            inter = sum(1 for v in s.elements() if v in kernel)
            assert subgroup_image(s, q).order * inter == s.order
