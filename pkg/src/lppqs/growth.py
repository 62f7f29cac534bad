"""Local growth rules, their inverses, grid growth, and a path oracle.

Two (max, +) local rules transport a pair (kappa, g) with
alpha > kappa < beta to a partition nu with alpha < nu > beta, conserving
|kappa| + |nu| = |alpha| + |beta| + g.  Grown over a matrix they compute,
at the far corner, the shapes whose partial sums are maxima over
non-intersecting lattice paths (the oracle checks this by brute force).

Matrix convention: ``weights[i][j]`` sits in the unit square with
top-right corner (i+1, j+1); the first index runs east, the second north.
Up-right paths step east or north; down-right paths step east or south.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .partitions import EMPTY, Partition, interlaces

ROW = "row"
COL = "col"


def _check_local_input(alpha: Partition, beta: Partition, kappa: Partition, g: int):
    if g < 0:
        raise ValueError("g must be non-negative")
    if not interlaces(kappa, alpha) or not interlaces(kappa, beta):
        raise ValueError(
            f"kappa must interlace below alpha and beta: {kappa!r}, {alpha!r}, {beta!r}"
        )


def row_rsk_local(alpha: Partition, beta: Partition, kappa: Partition, g: int) -> Partition:
    """Row-insertion local rule.

    nu_1 = max(alpha_1, beta_1) + g and, for s >= 2,
    nu_s = max(alpha_s, beta_s) + min(alpha_{s-1}, beta_{s-1}) - kappa_{s-1}.
    """
    _check_local_input(alpha, beta, kappa, g)
    ell = min(len(alpha), len(beta)) + 1
    nu = [max(alpha[0], beta[0]) + g]
    for s in range(1, ell):
        nu.append(max(alpha[s], beta[s]) + min(alpha[s - 1], beta[s - 1]) - kappa[s - 1])
    return Partition(nu)


def col_rsk_local(alpha: Partition, beta: Partition, kappa: Partition, g: int) -> Partition:
    """Column-insertion local rule.

    Runs s = ell down to 1 with a carried g_s:
    nu_s = min(max(alpha_s, beta_s) + g_s, kappa_{s-1}), where kappa_0 acts
    as +infinity, so nu_1 = max(alpha_1, beta_1) + g_1.
    """
    _check_local_input(alpha, beta, kappa, g)
    ell = min(len(alpha), len(beta)) + 1
    nu = [0] * ell
    gs = g
    for s in range(ell, 0, -1):
        grown = max(alpha[s - 1], beta[s - 1]) + gs
        if s == 1:
            nu[0] = grown
        else:
            cap = kappa[s - 2]
            nu[s - 1] = min(grown, cap)
            gs = (
                gs
                - min(gs, cap - max(alpha[s - 1], beta[s - 1]))
                + min(alpha[s - 2], beta[s - 2])
                - cap
            )
    return Partition(nu)


def invert_local(
    rule: str, alpha: Partition, beta: Partition, nu: Partition
) -> tuple[Partition, int]:
    """Recover (kappa, g) such that the forward rule maps them to nu.

    Rejects nu that does not interlace above alpha and beta, and inputs
    whose reconstruction is inconsistent (negative g or invalid kappa).
    """
    if not interlaces(alpha, nu) or not interlaces(beta, nu):
        raise ValueError(
            f"nu must interlace above alpha and beta: {nu!r}, {alpha!r}, {beta!r}"
        )
    ell = min(len(alpha), len(beta)) + 1
    if rule == ROW:
        g = nu[0] - max(alpha[0], beta[0])
        kappa_parts = [
            max(alpha[s], beta[s]) + min(alpha[s - 1], beta[s - 1]) - nu[s]
            for s in range(1, ell)
        ]
    elif rule == COL:
        gs = nu[0] - max(alpha[0], beta[0])
        kappa_parts = []
        for s in range(1, ell):
            k = max(min(alpha[s - 1], beta[s - 1]) - gs, nu[s])
            kappa_parts.append(k)
            gs = nu[s] + gs - max(alpha[s], beta[s]) - min(alpha[s - 1], beta[s - 1]) + k
        g = gs
    else:
        raise ValueError(f"unknown rule {rule!r}")
    if g < 0:
        raise ValueError("inconsistent input: reconstructed g is negative")
    try:
        kappa = Partition(kappa_parts)
    except ValueError as exc:
        raise ValueError(f"inconsistent input: {exc}") from exc
    if not interlaces(kappa, alpha) or not interlaces(kappa, beta):
        raise ValueError("inconsistent input: kappa does not interlace")
    return kappa, g


def apply_local(rule: str, alpha, beta, kappa, g) -> Partition:
    if rule == ROW:
        return row_rsk_local(alpha, beta, kappa, g)
    if rule == COL:
        return col_rsk_local(alpha, beta, kappa, g)
    raise ValueError(f"unknown rule {rule!r}")


class GrowthGrid:
    """Partitions on the lattice points of an m-by-n rectangle.

    entry(i, j) is the partition at lattice point (i, j), 0 <= i <= m,
    0 <= j <= n, with the empty partition on both axes.
    """

    __slots__ = ("dims", "rule", "entries")

    def __init__(self, dims: tuple[int, int], rule: str, entries):
        self.dims = dims
        self.rule = rule
        self.entries = entries

    def entry(self, i: int, j: int) -> Partition:
        return self.entries[i][j]

    def corner(self) -> Partition:
        m, n = self.dims
        return self.entries[m][n]

    def north_chain(self) -> list[Partition]:
        """Partitions along the north edge, (0, n) to (m, n)."""
        m, n = self.dims
        return [self.entries[i][n] for i in range(m + 1)]

    def east_chain(self) -> list[Partition]:
        """Partitions along the east edge, (m, 0) to (m, n)."""
        m, n = self.dims
        return [self.entries[m][j] for j in range(n + 1)]

    def __repr__(self) -> str:
        return f"GrowthGrid(dims={self.dims}, rule={self.rule!r})"


def grow_grid(weights: Sequence[Sequence[int]], rule: str) -> GrowthGrid:
    """Grow the full rectangle of a weight matrix with the chosen rule."""
    m = len(weights)
    n = len(weights[0]) if m else 0
    if m < 1 or n < 1:
        raise ValueError("matrix must be at least 1x1")
    if any(len(row) != n for row in weights):
        raise ValueError("ragged weight matrix")
    if any(w < 0 for row in weights for w in row):
        raise ValueError("weights must be non-negative")
    entries = [[EMPTY] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            entries[i][j] = apply_local(
                rule,
                entries[i - 1][j],
                entries[i][j - 1],
                entries[i - 1][j - 1],
                weights[i - 1][j - 1],
            )
    return GrowthGrid((m, n), rule, entries)


# --- brute-force non-intersecting path oracle --------------------------------

UP_RIGHT = "up_right"
DOWN_RIGHT = "down_right"


@lru_cache(maxsize=None)
def _monotone_paths(
    start: tuple[int, int], end: tuple[int, int], dj: int
) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All lattice paths of unit steps (+1, 0) and (0, dj) from start to end."""
    si, sj = start
    ei, ej = end
    if (ej - sj) * dj < 0 or si > ei:
        return ()
    if start == end:
        return ((start,),)
    out = []
    if si < ei:
        for tail in _monotone_paths((si + 1, sj), end, dj):
            out.append((start,) + tail)
    if sj != ej:
        for tail in _monotone_paths((si, sj + dj), end, dj):
            out.append((start,) + tail)
    return tuple(out)


def greene_oracle(weights: Sequence[Sequence[int]], k: int, direction: str) -> int:
    """Exact maximum total weight of k vertex-disjoint monotone paths.

    up_right: path r runs from square (1, r) to (m, n-k+r);
    down_right: path r runs from square (1, n+1-r) to (m, k+1-r).
    Exhaustive search; intended for small matrices only.
    """
    m = len(weights)
    n = len(weights[0]) if m else 0
    if not 1 <= k <= min(m, n):
        raise ValueError(f"k must lie in 1..min(m, n) = {min(m, n)}")
    if direction == UP_RIGHT:
        slots = [((1, r), (m, n - k + r)) for r in range(1, k + 1)]
        dj = 1
    elif direction == DOWN_RIGHT:
        slots = [((1, n + 1 - r), (m, k + 1 - r)) for r in range(1, k + 1)]
        dj = -1
    else:
        raise ValueError(f"unknown direction {direction!r}")

    cell_bit = {}
    cell_weight = []
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            cell_bit[(i, j)] = len(cell_weight)
            cell_weight.append(weights[i - 1][j - 1])

    candidates = []
    for start, end in slots:
        paths = []
        for path in _monotone_paths(start, end, dj):
            mask = 0
            total = 0
            for cell in path:
                mask |= 1 << cell_bit[cell]
                total += cell_weight[cell_bit[cell]]
            paths.append((mask, total))
        if not paths:
            raise ValueError("a path slot admits no monotone path")
        candidates.append(paths)

    best = -1

    def search(r: int, used: int, total: int):
        nonlocal best
        if r == k:
            best = max(best, total)
            return
        for mask, wsum in candidates[r]:
            if mask & used:
                continue
            search(r + 1, used | mask, total + wsum)

    search(0, 0, 0)
    if best < 0:
        raise ValueError("no disjoint path family exists")
    return best
