"""Partitions, interlacing relations, Gelfand-Tsetlin patterns and tableaux.

Three pattern/tableau kinds are supported:

* ordinary   -- triangular patterns of height n <-> semi-standard Young
                tableaux on the alphabet 1 < 2 < ... < n;
* symplectic -- half-triangular patterns of height 2n (row i has ceil(i/2)
                entries) <-> tableaux on 1 < 1' < 2 < 2' < ... < n < n'
                whose row-i entries are >= i in the alphabet order;
* odd_orthogonal -- tableaux on the symplectic alphabet extended by a top
                symbol INF, where the INF cells form a vertical strip (at
                most one INF per row; INF may repeat down a column).

Everything here is an immutable value; all functions are pure.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class Partition:
    """Weakly decreasing positive integers; trailing zeros are dropped.

    Indexing is 0-based and total: ``p[i]`` is 0 for every i >= len(p).
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(x) for x in parts)
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        if any(a < b for a, b in zip(ps, ps[1:])):
            raise ValueError(f"parts must be weakly decreasing: {ps}")
        if ps and ps[-1] < 0:
            raise ValueError(f"parts must be non-negative: {ps}")
        self.parts = ps

    def __len__(self) -> int:
        return len(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("partition parts are indexed from 0")
        return self.parts[i] if i < len(self.parts) else 0

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, (tuple, list)):
            return self == Partition(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    def contains(self, other: "Partition") -> bool:
        """True iff ``other`` fits inside this diagram row by row."""
        return all(other[i] <= self[i] for i in range(len(other)))

    def pad(self, length: int) -> tuple[int, ...]:
        """Parts padded with zeros to the given length."""
        if length < len(self.parts):
            raise ValueError(f"cannot pad {self!r} to length {length}")
        return self.parts + (0,) * (length - len(self.parts))

    def has_even_rows(self) -> bool:
        return all(p % 2 == 0 for p in self.parts)


EMPTY = Partition()


def interlaces(mu: Partition, lam: Partition, dual: bool = False) -> bool:
    """Whether ``mu`` interlaces upwards with ``lam``.

    Plain interlacing (mu < lam): lam_i >= mu_i >= lam_{i+1} for all i.
    Dual interlacing: mu inside lam with lam_i - mu_i in {0, 1} for all i
    (the skew diagram lam/mu is a vertical strip).
    """
    top = max(len(mu), len(lam))
    if dual:
        return all(lam[i] - mu[i] in (0, 1) for i in range(top))
    return all(lam[i] >= mu[i] >= lam[i + 1] for i in range(top))


def _chain_from_rows(rows: Sequence[Sequence[int]]) -> list[Partition]:
    chain = [EMPTY]
    for row in rows:
        chain.append(Partition(row))
    return chain


class GTPattern:
    """Triangular interlacing integer array; row i has i entries.

    Equivalent to the chain of partitions empty = l(0) < l(1) < ... < l(n)
    read off row by row (row i, zero-padded, is l(i)).
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        for i, row in enumerate(rows, start=1):
            if len(row) != i:
                raise ValueError(f"row {i} must have {i} entries, got {row}")
            if row[-1] < 0:
                raise ValueError(f"entries must be non-negative: {row}")
        chain = _chain_from_rows(rows)
        for lo, hi in zip(chain, chain[1:]):
            if not interlaces(lo, hi):
                raise ValueError(f"rows do not interlace: {lo!r} vs {hi!r}")
        self.rows = rows

    def height(self) -> int:
        return len(self.rows)

    def shape(self) -> Partition:
        return Partition(self.rows[-1]) if self.rows else EMPTY

    def to_chain(self) -> list[Partition]:
        return _chain_from_rows(self.rows)

    @classmethod
    def from_chain(cls, chain: Sequence[Partition]) -> "GTPattern":
        """Build from [empty, l(1), ..., l(n)] (leading empty partition)."""
        if not chain or chain[0] != EMPTY:
            raise ValueError("chain must start with the empty partition")
        return cls([lam.pad(i) for i, lam in enumerate(chain) if i > 0])

    def __eq__(self, other) -> bool:
        return isinstance(other, GTPattern) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(("GT", self.rows))

    def __repr__(self) -> str:
        return f"GTPattern({list(map(list, self.rows))})"


class SpGTPattern:
    """Half-triangular interlacing array of height 2n; row i has ceil(i/2) entries.

    Entries beyond a row's stored length count as 0, which makes the rows,
    zero-padded, an interlacing chain with length(l(i)) <= ceil(i/2).
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if len(rows) % 2 != 0:
            raise ValueError("a symplectic pattern has an even number of rows")
        for i, row in enumerate(rows, start=1):
            want = (i + 1) // 2
            if len(row) != want:
                raise ValueError(f"row {i} must have {want} entries, got {row}")
            if row[-1] < 0:
                raise ValueError(f"entries must be non-negative: {row}")
        chain = _chain_from_rows(rows)
        for lo, hi in zip(chain, chain[1:]):
            if not interlaces(lo, hi):
                raise ValueError(f"rows do not interlace: {lo!r} vs {hi!r}")
        self.rows = rows

    def height(self) -> int:
        return len(self.rows)

    def letters(self) -> int:
        """Number n of base alphabet letters (height = 2n)."""
        return len(self.rows) // 2

    def shape(self) -> Partition:
        return Partition(self.rows[-1]) if self.rows else EMPTY

    def to_chain(self) -> list[Partition]:
        return _chain_from_rows(self.rows)

    @classmethod
    def from_chain(cls, chain: Sequence[Partition]) -> "SpGTPattern":
        if not chain or chain[0] != EMPTY:
            raise ValueError("chain must start with the empty partition")
        return cls([lam.pad((i + 1) // 2) for i, lam in enumerate(chain) if i > 0])

    def __eq__(self, other) -> bool:
        return isinstance(other, SpGTPattern) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(("SpGT", self.rows))

    def __repr__(self) -> str:
        return f"SpGTPattern({list(map(list, self.rows))})"


def gt_type(z: GTPattern | SpGTPattern) -> tuple[int, ...]:
    """Row-sum increments of a pattern; length = height, entries >= 0."""
    sums = [0] + [sum(row) for row in z.rows]
    return tuple(b - a for a, b in zip(sums, sums[1:]))


# --- tableaux ---------------------------------------------------------------
#
# Symbol encoding: SSYT uses 1..n directly.  For the barred alphabets the
# code of letter i is 2i-1 and of i' (barred) is 2i, so codes are ordered
# exactly like the alphabet; INF gets code 2n+1.

SSYT = "ssyt"
SPT = "spt"
OOT = "oot"


def infinity_code(n: int) -> int:
    return 2 * n + 1


def symbol_name(kind: str, n: int, code: int) -> str:
    if kind == SSYT:
        return str(code)
    if code == infinity_code(n):
        return "inf"
    letter = (code + 1) // 2
    return f"{letter}'" if code % 2 == 0 else str(letter)


class Tableau:
    """Semi-standard filling of a Young diagram over one of three alphabets.

    kind 'ssyt': codes 1..n, rows weakly increase, columns strictly increase.
    kind 'spt':  codes 1..2n, same rules plus row-i entries >= code 2i-1.
    kind 'oot':  'spt' rules for codes 1..2n; the INF cells (code 2n+1) form
                 a vertical strip on top: at most one INF per row, INF may
                 sit directly below another INF.
    """

    __slots__ = ("kind", "n", "rows")

    def __init__(self, kind: str, n: int, rows: Sequence[Sequence[int]]):
        if kind not in (SSYT, SPT, OOT):
            raise ValueError(f"unknown tableau kind {kind!r}")
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if any(len(row) == 0 for row in rows):
            raise ValueError("tableau rows must be non-empty")
        self.kind = kind
        self.n = int(n)
        self.rows = rows
        self._validate()

    def _validate(self) -> None:
        # with rows sorted, the cells carrying symbols <= k form a prefix of
        # each row, and strip conditions on those sub-shapes encode exactly
        # the column rules
        n, kind = self.n, self.kind
        top = infinity_code(n) if kind == OOT else (n if kind == SSYT else 2 * n)
        if kind in (SPT, OOT) and len(self.rows) > n:
            raise ValueError(f"at most {n} rows for {n} base letters")
        if any(c < 1 or c > top for row in self.rows for c in row):
            raise ValueError("symbol code out of range")
        if any(a > b for row in self.rows for a, b in zip(row, row[1:])):
            raise ValueError("rows must weakly increase")
        chain = [self.subshape(k) for k in range(top + 1)]
        for k, (lo, hi) in enumerate(zip(chain, chain[1:]), start=1):
            last = kind == OOT and k == top
            if not interlaces(lo, hi, dual=last):
                what = "vertical" if last else "horizontal"
                raise ValueError(
                    f"cells of symbol {symbol_name(kind, n, k)} do not form a "
                    f"{what} strip"
                )
            if kind in (SPT, OOT) and not last and len(hi) > (k + 1) // 2:
                raise ValueError(f"row restriction violated at symbol code {k}")

    def shape(self) -> Partition:
        return Partition(len(row) for row in self.rows)

    def subshape(self, code: int) -> Partition:
        """Shape occupied by cells with symbol code <= code."""
        return Partition(sum(1 for c in row if c <= code) for row in self.rows)

    def symbol_count(self, code: int) -> int:
        return sum(1 for row in self.rows for c in row if c == code)

    def letter_weight(self) -> tuple[int, ...]:
        """Per-letter signed multiplicities.

        SSYT: count of each letter.  Barred alphabets: count(i) - count(i')
        per base letter i; INF contributes nothing.
        """
        if self.kind == SSYT:
            return tuple(self.symbol_count(i) for i in range(1, self.n + 1))
        return tuple(
            self.symbol_count(2 * i - 1) - self.symbol_count(2 * i)
            for i in range(1, self.n + 1)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tableau)
            and (self.kind, self.n, self.rows) == (other.kind, other.n, other.rows)
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.n, self.rows))

    def __repr__(self) -> str:
        pretty = [
            " ".join(symbol_name(self.kind, self.n, c) for c in row)
            for row in self.rows
        ]
        return f"Tableau({self.kind}, n={self.n}, [{'; '.join(pretty)}])"


def _rows_from_chain(chain: Sequence[Partition]) -> list[list[int]]:
    """Label the cells of lam(k)/lam(k-1) with k, returning tableau rows."""
    final = chain[-1]
    rows = [[0] * final[r] for r in range(len(final))]
    for k in range(1, len(chain)):
        lo, hi = chain[k - 1], chain[k]
        for r in range(len(hi)):
            for c in range(lo[r], hi[r]):
                rows[r][c] = k
    return rows


def pattern_to_tableau(z: GTPattern | SpGTPattern) -> Tableau:
    """Bijection from patterns to tableaux (ordinary -> ssyt, symplectic -> spt)."""
    if isinstance(z, GTPattern):
        return Tableau(SSYT, z.height(), _rows_from_chain(z.to_chain()))
    if isinstance(z, SpGTPattern):
        return Tableau(SPT, z.letters(), _rows_from_chain(z.to_chain()))
    raise TypeError(f"expected a pattern, got {type(z).__name__}")


def tableau_to_pattern(t: Tableau) -> GTPattern | SpGTPattern:
    """Inverse of :func:`pattern_to_tableau`; rejects kind 'oot'."""
    if t.kind == SSYT:
        return GTPattern.from_chain([t.subshape(k) for k in range(t.n + 1)])
    if t.kind == SPT:
        return SpGTPattern.from_chain([t.subshape(k) for k in range(2 * t.n + 1)])
    raise ValueError("odd orthogonal tableaux have no pattern form here")


# --- enumeration ------------------------------------------------------------

ORDINARY = "ordinary"
SYMPLECTIC = "symplectic"
ODD_ORTHOGONAL = "odd_orthogonal"


def _interlacings_below(lam: Partition, max_len: int) -> Iterator[Partition]:
    """All mu < lam with at most max_len parts."""
    if len(lam) > max_len + 1:
        return
    k = min(len(lam), max_len)
    if k == 0:
        yield EMPTY
        return

    def rec(j: int, prefix: list[int]) -> Iterator[Partition]:
        if j == k:
            yield Partition(prefix)
            return
        for v in range(lam[j + 1], lam[j] + 1):
            prefix.append(v)
            yield from rec(j + 1, prefix)
            prefix.pop()

    yield from rec(0, [])


def _chains_to(lam: Partition, lengths: Sequence[int]) -> Iterator[list[Partition]]:
    """Chains empty < l(1) < ... < l(h) = lam with len(l(i)) <= lengths[i-1]."""
    h = len(lengths)
    if h == 0:
        if lam == EMPTY:
            yield [EMPTY]
        return
    if len(lam) > lengths[-1]:
        return

    def walk(i: int, top: Partition) -> Iterator[list[Partition]]:
        if i == 1:
            if interlaces(EMPTY, top):
                yield [EMPTY, top]
            return
        for mu in _interlacings_below(top, lengths[i - 2]):
            for head in walk(i - 1, mu):
                yield head + [top]

    yield from walk(h, lam)


def _dual_subpartitions(lam: Partition) -> Iterator[Partition]:
    """All nu with nu <' lam (lam/nu a vertical strip)."""

    def rec(j: int, prefix: list[int]) -> Iterator[Partition]:
        if j == len(lam):
            yield Partition(prefix)
            return
        for d in (0, 1):
            v = lam[j] - d
            if v < 0 or (prefix and v > prefix[-1]):
                continue
            prefix.append(v)
            yield from rec(j + 1, prefix)
            prefix.pop()

    yield from rec(0, [])


def enumerate_patterns(
    kind: str, height: int, shape: Partition
) -> Iterator[GTPattern | SpGTPattern | Tableau]:
    """All patterns (or, for odd_orthogonal, tableaux) of given height and shape.

    height counts rows: n for ordinary, 2n for the two barred kinds.  The
    stream is sorted lexicographically on the row-major entry vector (for
    odd_orthogonal, on the row-major symbol codes), so its order is stable.
    """
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    if kind == ORDINARY:
        if len(shape) > height:
            raise ValueError(f"shape {shape!r} too long for height {height}")
        lengths = list(range(1, height + 1))
        pats = [GTPattern.from_chain(c) for c in _chains_to(shape, lengths)]
        pats.sort(key=lambda p: tuple(x for row in p.rows for x in row))
        yield from pats
        return
    if kind == SYMPLECTIC:
        if height % 2 != 0:
            raise ValueError("symplectic height must be even (2n rows)")
        n = height // 2
        if len(shape) > n:
            raise ValueError(f"shape {shape!r} too long for {n} letters")
        lengths = [(i + 1) // 2 for i in range(1, height + 1)]
        pats = [SpGTPattern.from_chain(c) for c in _chains_to(shape, lengths)]
        pats.sort(key=lambda p: tuple(x for row in p.rows for x in row))
        yield from pats
        return
    if kind == ODD_ORTHOGONAL:
        if height % 2 != 0:
            raise ValueError("odd orthogonal height must be even (2n rows)")
        n = height // 2
        if len(shape) > n:
            raise ValueError(f"shape {shape!r} too long for {n} letters")
        lengths = [(i + 1) // 2 for i in range(1, height + 1)]
        tabs = []
        for nu in _dual_subpartitions(shape):
            for chain in _chains_to(nu, lengths):
                # labelling the final dual step puts code 2n+1 = INF in place
                rows = _rows_from_chain(chain + [shape])
                tabs.append(Tableau(OOT, n, rows))
        tabs.sort(key=lambda t: tuple(x for row in t.rows for x in row))
        yield from tabs
        return
    raise ValueError(f"unknown pattern kind {kind!r}")
