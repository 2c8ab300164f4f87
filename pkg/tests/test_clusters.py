import pytest

from springer_components.clusters import cluster_trace, clusters, open_partition
from springer_components.errors import NotAdmissible
from springer_components.ncp import is_even_ncp, make_ncp
from springer_components.partitions import datum_for, sweep_partitions
from springer_components.tableaux import DominoKind, DominoTableau, enumerate_admissible

T_44_FIRST = DominoTableau((4, 4, 2, 2), ((1, 2, 3, 4), (1, 2, 3, 4), (5, 6), (5, 6)))
T_44_SECOND = DominoTableau((4, 4, 2, 2), ((1, 3, 5, 5), (1, 3, 6, 6), (2, 4), (2, 4)))
T3_22 = DominoTableau((2, 2), ((1, 1), (2, 2)))
T1_22 = DominoTableau((2, 2), ((1, 2), (1, 2)))


def test_first_44_example():
    d = clusters(T_44_FIRST)
    assert set(d.clusters.values()) == {(1, 5), (2, 3), (4,), (6,)}
    assert d.b_map == {0: 1, 4: 4, 2: 6}
    assert d.closed_set == {2}
    assert d.to_dict() == {
        "clusters": {"1": [1, 5], "2": [2, 3], "4": [4], "6": [6]},
        "b_map": {"0": 1, "4": 4, "2": 6},
        "open": [1, 4, 6],
    }
    assert open_partition(d) == [frozenset({0}), frozenset({2}), frozenset({4})]


def test_second_44_example():
    d = clusters(T_44_SECOND)
    assert set(d.clusters.values()) == {(1, 2), (3, 4, 5, 6)}
    assert d.b_map == {0: 1, 2: 3, 4: 3}
    assert d.closed_set == frozenset()
    assert open_partition(d) == [frozenset({0}), frozenset({2, 4})]


def test_22_examples():
    d = clusters(T3_22)
    assert list(d.clusters.values()) == [(1, 2)]
    assert d.b_map == {0: 1, 2: 1}
    d = clusters(T1_22)
    assert d.b_map == {0: 1, 2: 2}
    assert open_partition(clusters(enumerate_admissible((2,))[0])) == [frozenset({0, 2})]


def test_inadmissible_is_rejected():
    with pytest.raises(NotAdmissible):
        clusters(DominoTableau((3, 3), ((1, 2, 2), (1, 3, 3))))


def all_decompositions(max_total):
    for p in sweep_partitions(max_total):
        for t in enumerate_admissible(p.parts, "C"):
            yield p, t, clusters(t)


def test_open_partition_is_an_even_ncp():
    for p, _t, d in all_decompositions(16):
        datum = datum_for(p.parts)
        blocks = open_partition(d)
        ncp = make_ncp(blocks, datum.b_lambda)
        assert 0 in ncp.zero_block
        assert is_even_ncp(ncp, datum), (p, blocks)


def test_structural_invariants():
    for p, t, d in all_decompositions(12):
        # clusters partition the dominoes
        labels = sorted(l for members in d.clusters.values() for l in members)
        assert labels == list(range(1, t.size + 1))
        assert set(d.b_map) == set(datum_for(p.parts).b_lambda)
        assert d.open_set == set(d.b_map.values())
        # every cluster but b(0) has an I+ domino, and I+ labels are listed once
        iplus = d.iplus_members
        for cid in d.clusters:
            if cid != d.base_cluster:
                assert iplus[cid]
        flat = sorted(l for v in iplus.values() for l in v)
        assert flat == sorted(l for l, k in d.kinds.items() if k is DominoKind.IPLUS)
        # ids are minimal labels
        assert all(cid == min(m) for cid, m in d.clusters.items())


def test_prefix_consistency():
    for _p, t, d in all_decompositions(12):
        states = list(cluster_trace(t))
        for i in range(1, t.size + 1):
            sub = clusters(t.truncate(i))
            assert (sub.cluster_of, sub.b_map) == states[i - 1]
        assert (d.cluster_of, d.b_map) == states[-1]
