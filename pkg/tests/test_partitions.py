import pytest

from conftest import random_gt_pattern, random_spgt_pattern
from lppqs.characters import character_jt
from lppqs.partitions import (
    EMPTY,
    GTPattern,
    Partition,
    SpGTPattern,
    Tableau,
    enumerate_patterns,
    gt_type,
    interlaces,
    pattern_to_tableau,
    tableau_to_pattern,
)


def test_partition_normalization_and_indexing():
    p = Partition([2, 1, 0, 0])
    assert p == Partition([2, 1])
    assert len(p) == 2
    assert p.size() == 3
    assert p[0] == 2 and p[1] == 1 and p[5] == 0
    assert Partition([]) == EMPTY
    assert not EMPTY


def test_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])


@pytest.mark.parametrize(
    "mu, lam, dual, expected",
    [
        ((), (), False, True),
        ((1,), (2, 1), False, True),
        ((1,), (3, 2), False, False),
        ((1, 1), (2, 1), True, True),
        ((0,), (2,), True, False),
        ((2, 1), (2, 1), False, True),
        ((3,), (2,), False, False),
    ],
)
def test_interlaces_cases(mu, lam, dual, expected):
    assert interlaces(Partition(mu), Partition(lam), dual=dual) is expected


def test_gt_type_examples():
    assert gt_type(GTPattern([[0], [0, 0], [0, 0, 0]])) == (0, 0, 0)
    assert gt_type(GTPattern([[1], [2, 1]])) == (1, 2)
    assert gt_type(SpGTPattern([[2], [2], [2, 1], [2, 1]])) == (2, 0, 1, 0)


def test_pattern_validation():
    with pytest.raises(ValueError):
        GTPattern([[1], [0, 0]])  # 1 does not fit between 0 and 0
    with pytest.raises(ValueError):
        GTPattern([[1, 2]])  # wrong row length
    with pytest.raises(ValueError):
        SpGTPattern([[1], [1], [1, 2]])  # odd number of rows
    with pytest.raises(ValueError):
        SpGTPattern([[1], [2], [2, 0], [2, 1], [3, 1], [3, 2, 1]])


def test_convert_small_example():
    z = GTPattern([[1], [2, 1]])
    t = pattern_to_tableau(z)
    assert t.kind == "ssyt"
    assert t.rows == ((1, 2), (2,))
    assert tableau_to_pattern(t) == z


def test_convert_empty():
    z = GTPattern([[0], [0, 0], [0, 0, 0]])
    t = pattern_to_tableau(z)
    assert t.rows == ()
    assert tableau_to_pattern(Tableau("ssyt", 3, [])) == z


def test_convert_symplectic_counts_match_type():
    z = SpGTPattern([[2], [2], [2, 1], [2, 1]])
    t = pattern_to_tableau(z)
    ty = gt_type(z)
    for i in range(1, 3):
        assert t.symbol_count(2 * i - 1) == ty[2 * i - 2]
        assert t.symbol_count(2 * i) == ty[2 * i - 1]
    assert tableau_to_pattern(t) == z


def test_convert_round_trip_random(rng):
    for _ in range(500):
        z = random_gt_pattern(rng, rng.randint(1, 4))
        assert tableau_to_pattern(pattern_to_tableau(z)) == z
    for _ in range(500):
        z = random_spgt_pattern(rng, rng.randint(1, 3))
        assert tableau_to_pattern(pattern_to_tableau(z)) == z


def test_from_tableau_rejects_bad_fillings():
    with pytest.raises(ValueError):
        Tableau("ssyt", 2, [[2, 1]])  # row decreases
    with pytest.raises(ValueError):
        Tableau("ssyt", 2, [[1, 1], [1]])  # column not strict
    with pytest.raises(ValueError):
        Tableau("spt", 1, [[1], [2]])  # row 2 entry below the cutoff
    with pytest.raises(ValueError):
        Tableau("oot", 1, [[3, 3]])  # two INF in one row
    # INF may repeat down a column (vertical strip)
    t = Tableau("oot", 2, [[5], [5]])
    assert t.symbol_count(5) == 2


def test_enumerate_single_row_forced():
    for k in (0, 1, 5):
        pats = list(enumerate_patterns("ordinary", 1, Partition([k] if k else [])))
        assert len(pats) == 1


def test_enumerate_small_cases():
    pats = list(enumerate_patterns("ordinary", 2, Partition([1])))
    assert [p.rows for p in pats] == [((0,), (1, 0)), ((1,), (1, 0))]
    sp = list(enumerate_patterns("symplectic", 2, Partition([1])))
    assert len(sp) == 2
    assert len(list(enumerate_patterns("ordinary", 2, Partition([2, 1])))) == 2


def test_enumerate_rejects_long_shapes():
    with pytest.raises(ValueError):
        list(enumerate_patterns("ordinary", 2, Partition([1, 1, 1])))
    with pytest.raises(ValueError):
        list(enumerate_patterns("symplectic", 2, Partition([1, 1])))


def test_enumerate_emits_sorted_streams():
    pats = list(enumerate_patterns("ordinary", 3, Partition([2, 1])))
    keys = [tuple(x for row in p.rows for x in row) for p in pats]
    assert keys == sorted(keys)
    assert len(keys) == len(set(keys))


def test_type_nonnegative_and_sums_to_size():
    for kind, height, shape in [
        ("ordinary", 3, Partition([2, 1])),
        ("symplectic", 4, Partition([2, 1])),
    ]:
        for z in enumerate_patterns(kind, height, shape):
            ty = gt_type(z)
            assert all(v >= 0 for v in ty)
            assert sum(ty) == shape.size()


def _box_3x3():
    out = set()
    for a in range(4):
        for b in range(a + 1):
            for c in range(b + 1):
                out.add(Partition([x for x in (a, b, c) if x]))
    return sorted(out, key=lambda p: p.parts)


def test_pattern_counts_match_principal_specialization():
    # |GT_n(lam)| = s_lam(1, ..., 1) and |SpGT_2n(lam)| = sp_lam at all ones
    for n in (1, 2, 3):
        for lam in _box_3x3():
            if len(lam) > n:
                continue
            count = len(list(enumerate_patterns("ordinary", n, lam)))
            assert count == character_jt("schur", lam, n).specialize([1] * n)
            sp_count = len(list(enumerate_patterns("symplectic", 2 * n, lam)))
            assert sp_count == character_jt("symplectic", lam, n).specialize([1] * n)


def test_oot_count_matches_determinant():
    # the INF rule is fixed by the determinant side: vertical strips, so the
    # stacked-INF tableau is counted
    for n in (1, 2):
        for lam in _box_3x3():
            if len(lam) > n:
                continue
            count = len(list(enumerate_patterns("odd_orthogonal", 2 * n, lam)))
            assert count == character_jt("odd_orthogonal", lam, n).specialize([1] * n)
