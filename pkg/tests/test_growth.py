import pytest

from conftest import random_cover, random_partition
from lppqs.growth import (
    apply_local,
    col_rsk_local,
    greene_oracle,
    grow_grid,
    invert_local,
    row_rsk_local,
)
from lppqs.partitions import EMPTY, Partition, interlaces

P = Partition


def test_row_rule_examples():
    assert row_rsk_local(EMPTY, EMPTY, EMPTY, 5) == P([5])
    assert row_rsk_local(P([2]), P([1]), P([1]), 3) == P([5])


def test_col_rule_examples():
    assert col_rsk_local(EMPTY, EMPTY, EMPTY, 5) == P([5])
    assert col_rsk_local(P([2]), P([1]), P([1]), 3) == P([4, 1])


def test_local_rules_reject_bad_input():
    with pytest.raises(ValueError):
        row_rsk_local(P([1]), P([1]), P([2]), 0)  # kappa not below alpha
    with pytest.raises(ValueError):
        col_rsk_local(P([3]), P([1]), P([2]), 1)
    with pytest.raises(ValueError):
        row_rsk_local(EMPTY, EMPTY, EMPTY, -1)


def test_invert_examples():
    assert invert_local("col", EMPTY, EMPTY, P([7])) == (EMPTY, 7)
    assert invert_local("col", P([2]), P([1]), P([4, 1])) == (P([1]), 3)
    assert invert_local("row", P([2]), P([1]), P([5])) == (P([1]), 3)


def test_invert_rejects_non_interlacing():
    with pytest.raises(ValueError):
        invert_local("row", P([3]), EMPTY, P([1]))
    with pytest.raises(ValueError):
        invert_local("col", P([2, 2]), P([2]), P([2, 1]))


def test_local_round_trips_and_conservation(rng):
    for rule in ("row", "col"):
        for _ in range(1000):
            kappa = random_partition(rng)
            alpha = random_cover(rng, kappa)
            beta = random_cover(rng, kappa)
            g = rng.randint(0, 6)
            nu = apply_local(rule, alpha, beta, kappa, g)
            assert interlaces(alpha, nu) and interlaces(beta, nu)
            assert kappa.size() + nu.size() == alpha.size() + beta.size() + g
            assert invert_local(rule, alpha, beta, nu) == (kappa, g)


def test_grow_grid_zero_matrix():
    grid = grow_grid([[0, 0, 0], [0, 0, 0]], "row")
    for i in range(3):
        for j in range(4):
            assert grid.entry(i, j) == EMPTY


def test_grow_grid_corners():
    w = [[1, 2], [0, 3]]
    assert grow_grid(w, "row").corner() == P([6])
    assert grow_grid(w, "col").corner() == P([5, 1])


def test_grow_grid_rejects_negative():
    with pytest.raises(ValueError):
        grow_grid([[1, -1]], "row")


def test_boundary_chains_interlace_and_track_margins(rng):
    for _ in range(50):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        mat = [[rng.randint(0, 4) for _ in range(n)] for _ in range(m)]
        for rule in ("row", "col"):
            grid = grow_grid(mat, rule)
            north = grid.north_chain()
            east = grid.east_chain()
            for lo, hi in zip(north, north[1:]):
                assert interlaces(lo, hi)
            for lo, hi in zip(east, east[1:]):
                assert interlaces(lo, hi)
            # row k sum = |entry(m, k)| - |entry(m, k-1)|, col k likewise
            for k in range(1, n + 1):
                row_sum = sum(mat[i][k - 1] for i in range(m))
                assert row_sum == east[k].size() - east[k - 1].size()
            for k in range(1, m + 1):
                col_sum = sum(mat[k - 1][j] for j in range(n))
                assert col_sum == north[k].size() - north[k - 1].size()


def test_cell_conservation_everywhere(rng):
    for _ in range(30):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        mat = [[rng.randint(0, 4) for _ in range(n)] for _ in range(m)]
        for rule in ("row", "col"):
            grid = grow_grid(mat, rule)
            for i in range(1, m + 1):
                for j in range(1, n + 1):
                    lhs = grid.entry(i - 1, j - 1).size() + grid.entry(i, j).size()
                    rhs = (
                        grid.entry(i - 1, j).size()
                        + grid.entry(i, j - 1).size()
                        + mat[i - 1][j - 1]
                    )
                    assert lhs == rhs


def test_greene_oracle_examples():
    w = [[1, 2], [0, 3]]
    assert greene_oracle(w, 1, "up_right") == 6
    assert greene_oracle(w, 1, "down_right") == 5
    assert greene_oracle([[0, 0], [0, 0]], 2, "up_right") == 0
    with pytest.raises(ValueError):
        greene_oracle(w, 3, "up_right")


def test_greene_full_cover_square(rng):
    for _ in range(10):
        mat = [[rng.randint(0, 4) for _ in range(3)] for _ in range(3)]
        total = sum(sum(row) for row in mat)
        assert greene_oracle(mat, 3, "up_right") == total
        assert greene_oracle(mat, 3, "down_right") == total


def test_growth_matches_oracle(rng):
    for _ in range(60):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        mat = [[rng.randint(0, 4) for _ in range(n)] for _ in range(m)]
        lam = grow_grid(mat, "row").corner()
        mu = grow_grid(mat, "col").corner()
        for k in range(1, min(m, n) + 1):
            assert sum(lam[i] for i in range(k)) == greene_oracle(mat, k, "up_right")
            assert sum(mu[i] for i in range(k)) == greene_oracle(mat, k, "down_right")


def _interlacing_above(alpha, beta, size):
    """All nu with alpha < nu > beta and |nu| = size."""
    floor = [max(alpha[0], beta[0])]
    length = min(len(alpha), len(beta)) + 1
    for s in range(1, length):
        floor.append(max(alpha[s], beta[s]))
    out = []

    def rec(s, acc, remaining):
        if s == length:
            if remaining == 0:
                out.append(Partition(acc))
            return
        lo = floor[s]
        hi = remaining if s == 0 else min(alpha[s - 1], beta[s - 1], remaining)
        for v in range(lo, hi + 1):
            rec(s + 1, acc + [v], remaining - v)

    rec(0, [], size)
    return out


def _interlacing_below_both(alpha, beta):
    """All kappa with alpha > kappa < beta."""
    length = min(len(alpha), len(beta))
    out = []

    def rec(s, acc):
        if s == length:
            out.append(Partition(acc))
            return
        lo = max(alpha[s + 1], beta[s + 1])
        hi = min(alpha[s], beta[s])
        for v in range(lo, hi + 1):
            rec(s + 1, acc + [v])

    rec(0, [])
    return out


@pytest.mark.parametrize("rule", ["row", "col"])
def test_transport_is_a_degree_preserving_bijection(rule):
    # for fixed alpha, beta the rule matches {(kappa, g)} with {nu} so that
    # |nu| = |alpha| + |beta| + g - |kappa|, exactly, degree by degree
    cases = [
        (EMPTY, EMPTY),
        (P([1]), P([1])),
        (P([2]), P([1])),
        (P([2, 1]), P([2])),
        (P([3, 1]), P([2, 2])),
    ]
    for alpha, beta in cases:
        for d in range(0, 9):
            nus = set(_interlacing_above(alpha, beta, d))
            images = set()
            for kappa in _interlacing_below_both(alpha, beta):
                g = d + kappa.size() - alpha.size() - beta.size()
                if g < 0:
                    continue
                nu = apply_local(rule, alpha, beta, kappa, g)
                assert nu.size() == d
                assert nu not in images  # injectivity
                images.add(nu)
            assert images == nus
