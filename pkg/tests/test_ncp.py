import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from springer_components.errors import NotAPartition
from springer_components.f2 import bits, full, subgroup_span, trivial
from springer_components.ncp import (
    NoncrossingPartition,
    endpoints,
    enumerate_even_ncp,
    enumerate_ncp,
    is_noncrossing,
    make_ncp,
    ncp_from_endpoints,
    ncp_group,
    render_ncp_diagram,
    s_set,
)
from springer_components.partitions import datum_for

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]
EX = [100] * 3 + [38] * 3 + [16] * 2


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]


def crossing_free(blocks):
    """No a < c < b < d with a, b in one block and c, d in another."""
    for i, x in enumerate(blocks):
        for y in blocks[i + 1:]:
            for a in x:
                for b in x:
                    for c in y:
                        for d in y:
                            if a < c < b < d or c < a < d < b:
                                return False
    return True


def test_is_noncrossing_examples():
    assert is_noncrossing([[0, 4], [2]], [0, 2, 4])
    assert not is_noncrossing([[0, 2], [1, 3]], [0, 1, 2, 3])
    assert all(is_noncrossing(p, [1, 2, 3]) for p in set_partitions([1, 2, 3]))
    with pytest.raises(NotAPartition):
        is_noncrossing([[0], [0, 1]], [0, 1])
    with pytest.raises(NotAPartition):
        is_noncrossing([[0]], [0, 1])


@pytest.mark.parametrize("m", range(0, 9))
def test_catalan_counts_and_brute_force(m):
    base = list(range(m + 1))
    ours = {p.blocks for p in enumerate_ncp(base)}
    brute = {make_ncp(p, base).blocks for p in set_partitions(base) if crossing_free(p)}
    assert ours == brute
    assert len(ours) == CATALAN[m + 1]


def test_example_orbit_has_five_even_ncps():
    d = datum_for(EX)
    got = {str(p): ncp_group(p, d) for p in enumerate_even_ncp(d)}
    t1, t2, t3 = bits(1), bits(2), bits(3)
    assert got == {
        "{0,16} {38,100}": subgroup_span(3, [t1 | t2, t3]),
        "{0,38,100} {16}": subgroup_span(3, [t1, t2]),
        "{0,16,38,100}": full(3),
        "{0} {16} {38,100}": subgroup_span(3, [t1 | t2]),
        "{0} {16,38,100}": subgroup_span(3, [t1 | t2, t2 | t3]),
    }
    assert len(s_set(d)) == 5


def test_small_even_ncps():
    assert len(enumerate_even_ncp(datum_for([2, 2]))) == 2
    assert s_set(datum_for([2, 2])) == {full(1), trivial(1)}
    (p,) = enumerate_even_ncp(datum_for([2, 1, 1]))
    assert p.blocks == ((0, 2),)
    assert len(s_set(datum_for([4, 4, 2, 2]))) == 5


def test_singletons_give_trivial_group():
    d = datum_for([6, 6, 4, 4, 2, 2])
    p = make_ncp([[0], [2], [4], [6]], d.b_lambda)
    assert ncp_group(p, d).is_trivial()


def test_all_even_mults_give_every_ncp():
    d = datum_for([8, 8, 6, 6, 4, 4, 2, 2])
    assert len(enumerate_even_ncp(d)) == len(enumerate_ncp(d.b_lambda)) == CATALAN[5]


def test_odd_parts_do_not_matter():
    for parts in ([4, 2, 2], [6, 4, 4, 2], [4, 4, 2]):
        for extra in ([1, 1], [3, 3], [5, 5, 1, 1]):
            assert s_set(datum_for(parts + extra)) == s_set(datum_for(parts))


def test_bd_groups():
    d = datum_for([5, 3, 3, 1], "D")
    assert [b for b in d.values] == [5, 3, 1]
    o, so = datum_for([5, 3, 3, 1], "D", "O"), datum_for([5, 3, 3, 1], "D", "SO")
    p = make_ncp([[0, 1, 3, 5]], o.b_lambda)
    assert ncp_group(p, o) == full(3)
    assert ncp_group(p, so) == subgroup_span(3, [bits(1) | bits(2), bits(2) | bits(3)])
    # every SO group lives in the even-weight part
    for q in enumerate_even_ncp(so):
        for v in ncp_group(q, so).basis:
            assert bin(v).count("1") % 2 == 0


@pytest.mark.parametrize("ell", range(0, 9))
def test_endpoint_reconstruction(ell):
    base = [0] + [2 * i for i in range(1, ell + 1)]
    for p in enumerate_ncp(base):
        if 0 not in p.zero_block:
            continue
        assert ncp_from_endpoints(endpoints(p), base) == p


def test_json_round_trip():
    d = datum_for(EX)
    for p in enumerate_even_ncp(d):
        assert NoncrossingPartition.from_dict(p.to_dict()) == p
    p = make_ncp([[38, 100], [0, 16]], d.b_lambda)
    assert p.to_dict() == {"base": [0, 16, 38, 100], "blocks": [[0, 16], [38, 100]]}


def test_diagrams():
    d = datum_for([2, 2])
    assert render_ncp_diagram(make_ncp([[0], [2]], d.b_lambda)).splitlines() == [" 0  2"]
    assert render_ncp_diagram(make_ncp([[0, 2]], d.b_lambda)) == " +--+\n 0  2"
    pic = render_ncp_diagram(make_ncp([[0], [16, 38, 100]], datum_for(EX).b_lambda))
    top, labels = pic.splitlines()
    assert top.count("+") == 3 and labels.split() == ["0", "16", "38", "100"]
    assert top.index("+") > labels.index("16") - 2


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 6), st.data())
def test_random_ncp_is_noncrossing(m, data):
    base = list(range(m + 1))
    p = data.draw(st.sampled_from(enumerate_ncp(base)))
    assert crossing_free([list(b) for b in p.blocks])
