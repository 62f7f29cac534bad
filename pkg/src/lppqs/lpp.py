"""Last passage percolation in three planar geometries.

Squares are addressed by the cartesian coordinates (i, j) of their top-right
corner, i running east and j north.  The three domains are

* p2hlr: squares with i <= j and i + j <= 2n + 1 (n^2 + n squares); polymers
  run from (1, 1) to the anti-diagonal i + j = 2n + 1;
* p2pr:  squares with i <= j <= n (n(n+1)/2 squares); polymers run from
  (1, 1) to (n, n);
* p2l:   squares with i + j <= n + 1 (n(n+1)/2 squares); polymers run from
  (1, 1) to the anti-diagonal i + j = n + 1.

Column i carries variable x_i.  Row j carries x_j (p2pr), x_{n+1-j} (p2l),
and x_j for j <= n, x_{2n+1-j} for j > n (p2hlr).  A square contributes
(column * row)^w, except squares on the diagonal i = j of p2hlr/p2pr which
contribute column^w only.
"""

from __future__ import annotations

from typing import Mapping

from .characters import LaurentPolynomial
from .growth import COL, ROW, apply_local, invert_local
from .partitions import EMPTY, GTPattern, Partition, SpGTPattern

P2HLR = "p2hlr"
P2PR = "p2pr"
P2L = "p2l"
KINDS = (P2HLR, P2PR, P2L)


class EnumerationBudgetError(RuntimeError):
    """Raised when an exhaustive enumeration exceeds its node budget."""


class Geometry:
    """One of the three triangular domains at a given size n."""

    __slots__ = ("kind", "n")

    def __init__(self, kind: str, n: int):
        if kind not in KINDS:
            raise ValueError(f"unknown geometry kind {kind!r}")
        if n < 1:
            raise ValueError("n must be positive")
        self.kind = kind
        self.n = int(n)

    def contains(self, i: int, j: int) -> bool:
        if i < 1 or j < 1:
            return False
        n = self.n
        if self.kind == P2HLR:
            return i <= j and i + j <= 2 * n + 1
        if self.kind == P2PR:
            return i <= j <= n
        return i + j <= n + 1

    def squares(self) -> list[tuple[int, int]]:
        """All squares, sorted row-major (j ascending, then i)."""
        n = self.n
        out = []
        jmax = 2 * n if self.kind == P2HLR else n
        for j in range(1, jmax + 1):
            for i in range(1, n + 1):
                if self.contains(i, j):
                    out.append((i, j))
        return out

    def is_diagonal(self, i: int, j: int) -> bool:
        """Reflecting-boundary square (only p2hlr/p2pr have one)."""
        return self.kind in (P2HLR, P2PR) and i == j

    def terminal_squares(self) -> list[tuple[int, int]]:
        n = self.n
        if self.kind == P2HLR:
            return [(i, 2 * n + 1 - i) for i in range(1, n + 1)]
        if self.kind == P2PR:
            return [(n, n)]
        return [(i, n + 1 - i) for i in range(1, n + 1)]

    def row_variable(self, j: int) -> int:
        """0-based index of the variable attached to row j."""
        n = self.n
        if self.kind == P2PR:
            return j - 1
        if self.kind == P2L:
            return n - j
        return j - 1 if j <= n else 2 * n - j

    def variable_exponent(self, i: int, j: int) -> tuple[int, ...]:
        """Exponent vector contributed by one unit of weight in square (i, j)."""
        exps = [0] * self.n
        exps[i - 1] += 1
        if not self.is_diagonal(i, j):
            exps[self.row_variable(j)] += 1
        return tuple(exps)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Geometry)
            and (self.kind, self.n) == (other.kind, other.n)
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.n))

    def __repr__(self) -> str:
        return f"Geometry({self.kind!r}, n={self.n})"


class Filling:
    """Non-negative integer weights on the squares of a geometry."""

    __slots__ = ("geometry", "weights")

    def __init__(self, geometry: Geometry, weights: Mapping[tuple[int, int], int]):
        squares = geometry.squares()
        support = set(squares)
        clean = {}
        for sq, w in weights.items():
            sq = (int(sq[0]), int(sq[1]))
            w = int(w)
            if sq not in support:
                raise ValueError(f"square {sq} outside the domain of {geometry!r}")
            if w < 0:
                raise ValueError(f"negative weight at {sq}")
            clean[sq] = w
        self.geometry = geometry
        self.weights = {sq: clean.get(sq, 0) for sq in squares}

    def __getitem__(self, sq: tuple[int, int]) -> int:
        return self.weights[sq]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Filling)
            and self.geometry == other.geometry
            and self.weights == other.weights
        )

    def __hash__(self) -> int:
        return hash((self.geometry, tuple(sorted(self.weights.items()))))

    def __repr__(self) -> str:
        nz = {sq: w for sq, w in self.weights.items() if w}
        return f"Filling({self.geometry!r}, {nz})"

    def total(self) -> int:
        return sum(self.weights.values())

    # plain text grid: one line per row j, top row first; '-' marks squares
    # outside the domain; columns i = 1..n
    def to_text(self) -> str:
        geo = self.geometry
        n = geo.n
        jmax = 2 * n if geo.kind == P2HLR else n
        lines = []
        for j in range(jmax, 0, -1):
            cells = [
                str(self.weights[(i, j)]) if geo.contains(i, j) else "-"
                for i in range(1, n + 1)
            ]
            lines.append(" ".join(cells))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, kind: str, text: str) -> "Filling":
        rows = [line.split() for line in text.strip().splitlines()]
        if not rows:
            raise ValueError("empty filling file")
        n = len(rows) // 2 if kind == P2HLR else len(rows)
        geo = Geometry(kind, n)
        jmax = 2 * n if kind == P2HLR else n
        if len(rows) != jmax:
            raise ValueError(f"expected {jmax} lines for {kind} n={n}")
        weights = {}
        for line_no, cells in enumerate(rows):
            j = jmax - line_no
            if len(cells) != n:
                raise ValueError(f"line {line_no + 1}: expected {n} cells")
            for idx, cell in enumerate(cells):
                i = idx + 1
                if geo.contains(i, j):
                    if cell == "-":
                        raise ValueError(f"square ({i}, {j}) is inside the domain")
                    weights[(i, j)] = int(cell)
                elif cell != "-":
                    raise ValueError(f"square ({i}, {j}) is outside the domain")
        return cls(geo, weights)


def lpp_time(filling: Filling) -> int:
    """Maximum weight of an up-right polymer from (1, 1) to the terminal set."""
    geo = filling.geometry
    dp: dict[tuple[int, int], int] = {}
    for (i, j) in geo.squares():
        best = 0
        seen = False
        for pi, pj in ((i - 1, j), (i, j - 1)):
            if (pi, pj) in dp:
                best = max(best, dp[(pi, pj)])
                seen = True
        if not seen and (i, j) != (1, 1):
            raise AssertionError(f"unreachable square ({i}, {j})")
        dp[(i, j)] = best + filling.weights[(i, j)]
    return max(dp[sq] for sq in geo.terminal_squares())


def weight_of(filling: Filling) -> LaurentPolynomial:
    """Monomial weight of a filling in x_1 ... x_n."""
    geo = filling.geometry
    exps = [0] * geo.n
    for (i, j), w in filling.weights.items():
        if w:
            for k, e in enumerate(geo.variable_exponent(i, j)):
                exps[k] += w * e
    return LaurentPolynomial.monomial(exps, geo.n)


def generating_series(
    geometry: Geometry, bound: int, node_budget: int = 2_000_000
) -> LaurentPolynomial:
    """Sum of weight_of(W) over all fillings with lpp_time(W) <= bound.

    Pruned exhaustive enumeration: every square of each geometry can reach a
    terminal square, so any partial passage time above the bound kills the
    branch.  Raises EnumerationBudgetError past the node budget.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    geo = geometry
    squares = geo.squares()
    evecs = [geo.variable_exponent(i, j) for (i, j) in squares]
    preds: list[list[int]] = []
    index = {sq: k for k, sq in enumerate(squares)}
    for (i, j) in squares:
        preds.append(
            [index[p] for p in ((i - 1, j), (i, j - 1)) if p in index]
        )
    nsq = len(squares)
    dp = [0] * nsq
    exps = [0] * geo.n
    terms: dict[tuple[int, ...], int] = {}
    nodes = 0

    def rec(k: int):
        nonlocal nodes
        if k == nsq:
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + 1
            return
        base = max((dp[p] for p in preds[k]), default=0)
        evec = evecs[k]
        top = bound - base
        for w in range(0, top + 1):
            nodes += 1
            if nodes > node_budget:
                raise EnumerationBudgetError(
                    f"enumeration exceeded {node_budget} nodes"
                )
            dp[k] = base + w
            rec(k + 1)
            if w < top:
                for v, e in enumerate(evec):
                    exps[v] += e
        for v, e in enumerate(evec):
            exps[v] -= top * e

    rec(0)
    out = LaurentPolynomial(geo.n)
    out.terms = terms
    return out


# --- the quarter-square bijection -------------------------------------------


class OscillatingTableau:
    """Triangular integer array whose diagonals form an up-down chain.

    Entry (i, j) lives on the same index set as the p2hlr squares; the k-th
    diagonal (k = 2n - j + i) carries the k-th partition of the boundary
    chain, largest part innermost.
    """

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: Mapping[tuple[int, int], int]):
        self.n = n
        self.entries = dict(entries)

    def diagonal_chain(self) -> list[Partition]:
        """Boundary partitions, outermost diagonal (k = 0, empty) first."""
        chain = [EMPTY]
        for k in range(1, 2 * self.n + 1):
            m = (k + 1) // 2
            parts = [self.entries[(i, 2 * self.n - k + i)] for i in range(m, 0, -1)]
            chain.append(Partition(parts))
        return chain

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OscillatingTableau)
            and (self.n, self.entries) == (other.n, other.entries)
        )

    def __repr__(self) -> str:
        return f"OscillatingTableau(n={self.n}, {self.entries})"


def _grow_p2hlr(filling: Filling) -> dict[tuple[int, int], Partition]:
    """Row-rule growth over the quarter square with the reflecting diagonal.

    At a diagonal square (i, i) the missing south neighbour is replaced by
    the west neighbour (i-1, i), which is the symmetric extension's value.
    """
    geo = filling.geometry
    n = geo.n
    pts: dict[tuple[int, int], Partition] = {(i, 0): EMPTY for i in (0, 1)}
    for j in range(0, 2 * n + 1):
        pts[(0, j)] = EMPTY
    for (i, j) in geo.squares():
        alpha = pts[(i - 1, j)]
        beta = pts[(i - 1, i)] if i == j else pts[(i, j - 1)]
        kappa = pts[(i - 1, j - 1)]
        pts[(i, j)] = apply_local(ROW, alpha, beta, kappa, filling.weights[(i, j)])
    return pts


def _chain_points(n: int) -> list[tuple[int, int]]:
    """Lattice points of the north-east boundary chain, k = 0 .. 2n."""
    return [(0, 2 * n)] + [
        ((k + 1) // 2, 2 * n - k // 2) for k in range(1, 2 * n + 1)
    ]


def oscillating_tableau(filling: Filling) -> OscillatingTableau:
    """Boundary chain of the quarter-square growth, slid back into the triangle."""
    geo = filling.geometry
    if geo.kind != P2HLR:
        raise ValueError("oscillating tableaux come from the p2hlr geometry")
    n = geo.n
    pts = _grow_p2hlr(filling)
    entries = {}
    for k in range(1, 2 * n + 1):
        part = pts[_chain_points(n)[k]]
        m = (k + 1) // 2
        for i in range(1, m + 1):
            entries[(i, 2 * n - k + i)] = part[m - i]
    return OscillatingTableau(n, entries)


def bz_map(obj, u: int, direction: str = "forward"):
    """Bijection between bounded quarter-square fillings and half patterns.

    forward: Filling (p2hlr, passage time <= u) -> SpGTPattern of height 2n
    with first part of the shape <= u.  inverse: the reverse.  The map is
    growth along the triangle, extraction of the boundary chain, and
    entrywise subtraction from u along diagonals.
    """
    if direction == "forward":
        filling = obj
        if not isinstance(filling, Filling) or filling.geometry.kind != P2HLR:
            raise ValueError("forward direction expects a p2hlr filling")
        n = filling.geometry.n
        time = lpp_time(filling)
        if time > u:
            raise ValueError(f"passage time {time} exceeds the bound {u}")
        pts = _grow_p2hlr(filling)
        chain_pts = _chain_points(n)
        rows = []
        for k in range(1, 2 * n + 1):
            part = pts[chain_pts[k]]
            m = (k + 1) // 2
            rows.append(tuple(u - part[m - 1 - jj] for jj in range(m)))
        return SpGTPattern(rows)

    if direction == "inverse":
        z = obj
        if not isinstance(z, SpGTPattern):
            raise ValueError("inverse direction expects a symplectic pattern")
        n = z.letters()
        if z.shape()[0] > u:
            raise ValueError("pattern shape exceeds the bound")
        geo = Geometry(P2HLR, n)
        # rebuild the boundary chain
        chain = [EMPTY]
        for k in range(1, 2 * n + 1):
            m = (k + 1) // 2
            row = z.rows[k - 1]
            parts = [u - row[m - 1 - r] for r in range(m)]
            if parts and parts[-1] < 0:
                raise ValueError("pattern entries exceed the bound")
            chain.append(Partition(parts))
        pts: dict[tuple[int, int], Partition] = {}
        for k, pt in enumerate(_chain_points(n)):
            pts[pt] = chain[k]
        for i in (0, 1):
            pts.setdefault((i, 0), EMPTY)
        weights = {}
        for (i, j) in reversed(geo.squares()):
            nu = pts[(i, j)]
            alpha = pts[(i - 1, j)]
            beta = pts[(i - 1, i)] if i == j else pts[(i, j - 1)]
            kappa, g = invert_local(ROW, alpha, beta, nu)
            weights[(i, j)] = g
            prev = pts.get((i - 1, j - 1))
            if prev is not None and prev != kappa:
                raise ValueError("inconsistent pattern: growth does not match")
            pts[(i - 1, j - 1)] = kappa
        for j in range(0, 2 * n + 1):
            if pts.get((0, j), EMPTY) != EMPTY:
                raise ValueError("inconsistent pattern: non-empty axis partition")
        return Filling(geo, weights)

    raise ValueError(f"unknown direction {direction!r}")


# --- the point-to-line bijection ---------------------------------------------


def _p2l_matrix(filling: Filling) -> list[list[int]]:
    """Flip the triangle upside down, double the hypotenuse, reflect.

    Returns the symmetric n x n matrix M with M[i-1][j-1] the entry of
    square (i, j), indexed from the bottom-left corner.
    """
    geo = filling.geometry
    n = geo.n
    mat = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i < j:
                mat[i - 1][j - 1] = filling.weights[(i, n + 1 - j)]
            elif i > j:
                mat[i - 1][j - 1] = filling.weights[(j, n + 1 - i)]
            else:
                mat[i - 1][j - 1] = 2 * filling.weights[(i, n + 1 - i)]
    return mat


def p2l_map(obj, direction: str = "forward"):
    """Bijection between point-to-line fillings and even-shaped patterns.

    forward: Filling (p2l) -> GTPattern of height n whose shape has all
    parts even and first part twice the passage time.  The filling is made
    into a symmetric matrix (flip, double the hypotenuse, reflect) and grown
    with the column rule; the north boundary chain is the pattern.
    """
    if direction == "forward":
        filling = obj
        if not isinstance(filling, Filling) or filling.geometry.kind != P2L:
            raise ValueError("forward direction expects a p2l filling")
        n = filling.geometry.n
        mat = _p2l_matrix(filling)
        pts = [[EMPTY] * (n + 1) for _ in range(n + 1)]
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                pts[i][j] = apply_local(
                    COL, pts[i - 1][j], pts[i][j - 1], pts[i - 1][j - 1], mat[i - 1][j - 1]
                )
        for i in range(n + 1):
            if pts[i][n] != pts[n][i]:
                raise AssertionError("symmetric input grew an asymmetric diagram")
        return GTPattern.from_chain([pts[i][n] for i in range(n + 1)])

    if direction == "inverse":
        z = obj
        if not isinstance(z, GTPattern):
            raise ValueError("inverse direction expects an ordinary pattern")
        n = z.height()
        if not z.shape().has_even_rows():
            raise ValueError("pattern shape must have even rows")
        chain = z.to_chain()
        pts: list[list[Partition | None]] = [[None] * (n + 1) for _ in range(n + 1)]
        for i in range(n + 1):
            pts[i][n] = chain[i]
            pts[n][i] = chain[i]
            pts[i][0] = EMPTY
            pts[0][i] = EMPTY
        mat = [[0] * n for _ in range(n)]
        for j in range(n, 0, -1):
            for i in range(n, 0, -1):
                kappa, g = invert_local(COL, pts[i - 1][j], pts[i][j - 1], pts[i][j])
                mat[i - 1][j - 1] = g
                prev = pts[i - 1][j - 1]
                if prev is not None and prev != kappa:
                    raise ValueError("inconsistent pattern: growth does not match")
                pts[i - 1][j - 1] = kappa
        weights = {}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if mat[i - 1][j - 1] != mat[j - 1][i - 1]:
                    raise ValueError("reconstruction is not symmetric")
        for i in range(1, n + 1):
            if mat[i - 1][i - 1] % 2:
                raise ValueError("reconstruction has an odd hypotenuse entry")
        geo = Geometry(P2L, n)
        for i in range(1, n + 1):
            for jj in range(1, n + 2 - i):
                jprime = n + 1 - jj  # >= i inside the triangle
                if i < jprime:
                    weights[(i, jj)] = mat[i - 1][jprime - 1]
                else:
                    weights[(i, jj)] = mat[i - 1][i - 1] // 2
        return Filling(geo, weights)

    raise ValueError(f"unknown direction {direction!r}")
