from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from springer_components.errors import InvalidInput, UnclassifiableDomino
from springer_components.partitions import integer_partitions, is_classical
from springer_components.tableaux import (
    DominoKind,
    DominoTableau,
    domino_kind,
    enumerate_admissible,
    enumerate_sdt,
    is_admissible,
)

# the tableaux of shape (3,3) as drawn in the worked example
T1_33 = DominoTableau((3, 3), ((1, 2, 3), (1, 2, 3)))
T2_33 = DominoTableau((3, 3), ((1, 2, 2), (1, 3, 3)))
T3_33 = DominoTableau((3, 3), ((1, 1, 3), (2, 2, 3)))


def brute_force_sdt(shape):
    """Every tiling of the diagram (minus box (1,1) for odd totals) by dominoes,
    then every labelling that is weakly increasing along rows and columns."""
    boxes = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    odd = len(boxes) % 2 == 1
    free = set(boxes) - ({(0, 0)} if odd else set())
    tilings = []

    def tile(left, acc):
        if not left:
            tilings.append(list(acc))
            return
        r, c = min(left)
        for other in ((r, c + 1), (r + 1, c)):
            if other in left:
                tile(left - {(r, c), other}, acc + [((r, c), other)])

    tile(frozenset(free), [])
    out = set()
    for tiling in tilings:
        for labels in permutations(range(1, len(tiling) + 1)):
            grid = [[0] * length for length in shape]
            for lab, (a, b) in zip(labels, tiling):
                grid[a[0]][a[1]] = grid[b[0]][b[1]] = lab
            ok = all(
                (c + 1 >= len(grid[r]) or grid[r][c] <= grid[r][c + 1])
                and (r + 1 >= len(grid) or c >= len(grid[r + 1]) or grid[r][c] <= grid[r + 1][c])
                for r in range(len(grid))
                for c in range(len(grid[r]))
            )
            if ok:
                out.add(tuple(tuple(row) for row in grid))
    return out


def test_sdt_of_33_is_the_three_printed_tableaux():
    tabs = enumerate_sdt((3, 3))
    assert set(tabs) == {T1_33, T2_33, T3_33}
    assert [t.flat() for t in tabs] == sorted(t.flat() for t in tabs)


def test_small_counts():
    assert len(enumerate_sdt((2,))) == 1
    assert len(enumerate_sdt((2, 2))) == 2
    assert enumerate_sdt((3,)) == [DominoTableau((3,), ((0, 1, 1),))]
    assert enumerate_sdt((2, 1)) == []


def test_invalid_shape():
    with pytest.raises(InvalidInput):
        enumerate_sdt((1, 2))


SHAPES = [s for total in range(1, 11) for s in integer_partitions(total)]


@pytest.mark.parametrize("shape", SHAPES, ids=str)
def test_enumeration_matches_brute_force(shape):
    got = {t.grid for t in enumerate_sdt(shape)}
    assert got == brute_force_sdt(shape)


def test_kinds_from_the_worked_example():
    assert domino_kind(T1_33, 2, "C") is DominoKind.IPLUS
    assert [domino_kind(T1_33, i, "C") for i in (1, 3)] == [DominoKind.IMINUS] * 2
    assert domino_kind(T3_33, 1, "C") is DominoKind.N
    assert domino_kind(T3_33, 2, "C") is DominoKind.N
    with pytest.raises(UnclassifiableDomino):
        domino_kind(T2_33, 2, "C")


def test_bd_kinds_swap_parities():
    t = DominoTableau((3, 2), ((0, 1, 1), (2, 2)))
    assert domino_kind(t, 1, "B") is DominoKind.N
    with pytest.raises(UnclassifiableDomino):
        domino_kind(t, 2, "B")
    v = DominoTableau((2, 2, 1), ((0, 1), (2, 1), (2,)))
    assert domino_kind(v, 1, "B") is DominoKind.IMINUS
    assert domino_kind(v, 2, "B") is DominoKind.IPLUS


def test_admissibility_examples():
    assert not is_admissible(T2_33, "C")
    assert is_admissible(T1_33, "C") and is_admissible(T3_33, "C")
    assert is_admissible(enumerate_sdt((2,))[0], "C")
    assert set(enumerate_admissible((3, 3), "C")) == {T1_33, T3_33}
    assert len(enumerate_admissible((2, 2), "C")) == 2
    assert len(enumerate_admissible((2, 1, 1), "C")) == 1


@pytest.mark.parametrize("lie_type", ["B", "C", "D"])
def test_admissible_is_the_filtered_sdt_list(lie_type):
    for total in range(1, 12):
        for shape in integer_partitions(total):
            if not is_classical(shape, lie_type):
                assert enumerate_admissible(shape, lie_type) == []
                continue
            want = [t for t in enumerate_sdt(shape) if is_admissible(t, lie_type)]
            assert enumerate_admissible(shape, lie_type) == want


@pytest.mark.parametrize("lie_type", ["B", "C", "D"])
def test_admissible_dominoes_always_classify(lie_type):
    for total in range(1, 13):
        for shape in integer_partitions(total):
            for t in enumerate_admissible(shape, lie_type):
                for lab in t.dominoes:
                    domino_kind(t, lab, lie_type)


def test_truncation_of_admissible_stays_admissible():
    for t in enumerate_admissible((4, 4, 2, 2), "C"):
        for i in range(1, t.size + 1):
            s = t.truncate(i)
            assert is_admissible(s, "C")
            assert s.grid in {u.grid for u in enumerate_admissible(s.shape, "C")}


def test_json_round_trip():
    for t in enumerate_sdt((4, 3, 1)):
        assert DominoTableau.from_dict(t.to_dict()) == t
    assert T1_33.to_dict() == {"shape": [3, 3], "grid": [[1, 2, 3], [1, 2, 3]]}
    with pytest.raises(InvalidInput):
        DominoTableau.from_dict({"shape": [2, 2], "grid": [[2, 2], [1, 1]]})


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([s for s in SHAPES if sum(s) >= 4]))
def test_labels_increase_with_truncation(shape):
    for t in enumerate_sdt(shape):
        sizes = [sum(t.truncate(i).shape) for i in range(1, t.size + 1)]
        assert sizes == [2 * i + (sum(shape) % 2) for i in range(1, t.size + 1)]
