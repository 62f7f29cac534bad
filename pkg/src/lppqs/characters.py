"""Exact Laurent-polynomial arithmetic and classical character formulas.

Characters of three families are computed two independent ways: as
determinants of complete homogeneous symmetric functions, and as generating
series over the tableaux/patterns enumerated by :mod:`lppqs.partitions`.
All arithmetic is exact (Python ints and fractions); no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

from .partitions import (
    ODD_ORTHOGONAL,
    ORDINARY,
    SYMPLECTIC,
    Partition,
    enumerate_patterns,
    gt_type,
)

ExponentVector = tuple[int, ...]


class LaurentPolynomial:
    """Sparse multivariate Laurent polynomial with integer coefficients.

    Terms map exponent vectors (length nvars, entries of any sign) to
    non-zero integers.  Instances are treated as immutable values.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[ExponentVector, int] | None = None):
        self.nvars = int(nvars)
        clean: dict[ExponentVector, int] = {}
        if terms:
            for exps, coef in terms.items():
                if len(exps) != self.nvars:
                    raise ValueError(
                        f"exponent vector {exps} has wrong length for {self.nvars} variables"
                    )
                if coef != 0:
                    clean[tuple(int(e) for e in exps)] = int(coef)
        self.terms = clean

    # constructors
    @classmethod
    def zero(cls, nvars: int) -> "LaurentPolynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, c: int, nvars: int) -> "LaurentPolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPolynomial":
        return cls.constant(1, nvars)

    @classmethod
    def monomial(cls, exps: Sequence[int], nvars: int, coef: int = 1) -> "LaurentPolynomial":
        return cls(nvars, {tuple(exps): coef})

    @classmethod
    def variable(cls, index: int, nvars: int, power: int = 1) -> "LaurentPolynomial":
        """The monomial x_{index+1}^power."""
        exps = [0] * nvars
        exps[index] = power
        return cls.monomial(exps, nvars)

    # predicates
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise ValueError(
                    f"variable counts differ: {self.nvars} vs {other.nvars}"
                )
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.nvars)
        return NotImplemented

    # ring operations
    def __add__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coef in other.terms.items():
            new = terms.get(exps, 0) + coef
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        out = LaurentPolynomial(self.nvars)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        out = LaurentPolynomial(self.nvars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[ExponentVector, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(exps, 0) + c1 * c2
                if new:
                    terms[exps] = new
                else:
                    del terms[exps]
        out = LaurentPolynomial(self.nvars)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = LaurentPolynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.nvars)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    # substitutions
    def invert_variable(self, index: int) -> "LaurentPolynomial":
        """Substitute x_{index+1} -> 1/x_{index+1}."""
        terms: dict[ExponentVector, int] = {}
        for exps, coef in self.terms.items():
            e = list(exps)
            e[index] = -e[index]
            terms[tuple(e)] = coef
        out = LaurentPolynomial(self.nvars)
        out.terms = terms
        return out

    def permute_variables(self, perm: Sequence[int]) -> "LaurentPolynomial":
        """Substitute x_{k+1} -> x_{perm[k]+1} for each k."""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError(f"not a permutation of 0..{self.nvars - 1}: {perm}")
        terms: dict[ExponentVector, int] = {}
        for exps, coef in self.terms.items():
            e = [0] * self.nvars
            for k, x in enumerate(exps):
                e[perm[k]] = x
            terms[tuple(e)] = coef
        out = LaurentPolynomial(self.nvars)
        out.terms = terms
        return out

    def specialize(self, values: Sequence[Fraction | int]) -> Fraction:
        """Exact evaluation at non-zero rationals (zero allowed only where no
        negative exponent occurs)."""
        if len(values) != self.nvars:
            raise ValueError(f"need {self.nvars} values, got {len(values)}")
        vals = [Fraction(v) for v in values]
        for i, v in enumerate(vals):
            if v == 0 and any(e[i] < 0 for e in self.terms):
                raise ZeroDivisionError(
                    f"variable x{i + 1} appears with a negative exponent"
                )
        total = Fraction(0)
        for exps, coef in self.terms.items():
            term = Fraction(coef)
            for v, e in zip(vals, exps):
                if e:
                    term *= v**e
            total += term
        return total

    # canonical text: terms ascending by exponent vector, each rendered as
    # "coef" or "coef * x1^e1 x2^e2" listing only non-zero exponents
    def canonical_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps in sorted(self.terms):
            coef = self.terms[exps]
            factors = " ".join(
                f"x{i + 1}^{e}" for i, e in enumerate(exps) if e != 0
            )
            pieces.append(f"{coef} * {factors}" if factors else str(coef))
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPolynomial<{self.nvars}>({self.canonical_text()})"


# --- complete homogeneous symmetric functions -------------------------------


def ordinary_variables(n: int) -> list[ExponentVector]:
    """x_1, ..., x_n as exponent vectors."""
    out = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        out.append(tuple(e))
    return out


def symplectic_variables(n: int) -> list[ExponentVector]:
    """x_1, 1/x_1, ..., x_n, 1/x_n."""
    out = []
    for i in range(n):
        for sign in (1, -1):
            e = [0] * n
            e[i] = sign
            out.append(tuple(e))
    return out


def odd_orthogonal_variables(n: int) -> list[ExponentVector]:
    """x_1, 1/x_1, ..., x_n, 1/x_n, 1."""
    return symplectic_variables(n) + [(0,) * n]


def complete_homogeneous(
    k: int, monomials: Sequence[ExponentVector], nvars: int
) -> LaurentPolynomial:
    """h_k of the listed monomials: sum over all size-k multisets of products.

    h_k = 0 for k < 0 and h_0 = 1, matching the generating series
    prod_i 1/(1 - m_i z).
    """
    if k < 0:
        return LaurentPolynomial.zero(nvars)
    table = [LaurentPolynomial.one(nvars)] + [
        LaurentPolynomial.zero(nvars) for _ in range(k)
    ]
    for mono in monomials:
        m = LaurentPolynomial.monomial(mono, nvars)
        for d in range(1, k + 1):
            table[d] = table[d] + m * table[d - 1]
    return table[k]


# --- determinants over the polynomial ring ----------------------------------


def _det_cofactor(mat: list[list[LaurentPolynomial]], nvars: int) -> LaurentPolynomial:
    size = len(mat)
    if size == 0:
        return LaurentPolynomial.one(nvars)
    if size == 1:
        return mat[0][0]
    total = LaurentPolynomial.zero(nvars)
    for i in range(size):
        if mat[i][0].is_zero():
            continue
        minor = [row[1:] for k, row in enumerate(mat) if k != i]
        cof = mat[i][0] * _det_cofactor(minor, nvars)
        total = total + (cof if i % 2 == 0 else -cof)
    return total


def exact_divide(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    """Quotient p / q when the division is exact; raises otherwise."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPolynomial.zero(p.nvars)
    lead_q = max(q.terms)
    out = LaurentPolynomial.zero(p.nvars)
    rem = p
    steps = 0
    limit = len(p.terms) * len(q.terms) + len(p.terms) + 1
    while rem:
        steps += 1
        if steps > limit:
            raise ArithmeticError("inexact polynomial division")
        lead_r = max(rem.terms)
        coef, div = divmod(rem.terms[lead_r], q.terms[lead_q])
        if div:
            raise ArithmeticError("inexact polynomial division")
        mono = LaurentPolynomial.monomial(
            tuple(a - b for a, b in zip(lead_r, lead_q)), p.nvars, coef
        )
        out = out + mono
        rem = rem - mono * q
        if rem and max(rem.terms) >= lead_r:
            raise ArithmeticError("inexact polynomial division")
    return out


def _det_bareiss(mat: list[list[LaurentPolynomial]], nvars: int) -> LaurentPolynomial:
    size = len(mat)
    if size == 0:
        return LaurentPolynomial.one(nvars)
    m = [row[:] for row in mat]
    sign = 1
    prev = LaurentPolynomial.one(nvars)
    for k in range(size - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, size):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPolynomial.zero(nvars)
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
            m[i][k] = LaurentPolynomial.zero(nvars)
        prev = m[k][k]
    det = m[size - 1][size - 1]
    return det if sign == 1 else -det


def determinant(mat: list[list[LaurentPolynomial]], nvars: int) -> LaurentPolynomial:
    """Fraction-free determinant: cofactor expansion up to 6x6, Bareiss above."""
    return _det_cofactor(mat, nvars) if len(mat) <= 6 else _det_bareiss(mat, nvars)


# --- characters -------------------------------------------------------------

SCHUR = "schur"


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def character_jt(family: str, lam, n: int) -> LaurentPolynomial:
    """Character by determinant of complete homogeneous functions.

    schur:          det[ h_{l_i - i + j}(x) ]
    symplectic:     (1/2) det[ h_{l_i - i + j}(x, 1/x) + h_{l_i - i - j + 2}(x, 1/x) ]
    odd_orthogonal: det[ h_{l_i - i + j}(x, 1/x, 1) - h_{l_i - i - j}(x, 1/x, 1) ]

    The symplectic determinant is provably even; halving is checked and an
    inexact division raises.
    """
    lam = _as_partition(lam)
    ell = len(lam)
    if ell > n:
        raise ValueError(f"shape {lam!r} needs more than {n} variables")
    if ell == 0:
        if family not in (SCHUR, SYMPLECTIC, ODD_ORTHOGONAL):
            raise ValueError(f"unknown character family {family!r}")
        # empty determinant; the symplectic halving comes from the doubled
        # first column, which is absent here
        return LaurentPolynomial.one(n)
    if family == SCHUR:
        mono = ordinary_variables(n)
        h = _h_table(mono, n, lam[0] + ell)
        mat = [[h(lam[i] - i + j) for j in range(ell)] for i in range(ell)]
        return determinant(mat, n)
    if family == SYMPLECTIC:
        mono = symplectic_variables(n)
        h = _h_table(mono, n, lam[0] + ell + 1)
        mat = [
            [h(lam[i] - i + j) + h(lam[i] - i - j) for j in range(ell)]
            for i in range(ell)
        ]
        det = determinant(mat, n)
        half = {}
        for exps, coef in det.terms.items():
            if coef % 2:
                raise ArithmeticError(
                    f"symplectic determinant has odd coefficient at {exps}"
                )
            half[exps] = coef // 2
        out = LaurentPolynomial(n)
        out.terms = half
        return out
    if family == ODD_ORTHOGONAL:
        mono = odd_orthogonal_variables(n)
        h = _h_table(mono, n, lam[0] + ell)
        mat = [
            [h(lam[i] - i + j) - h(lam[i] - i - j - 2) for j in range(ell)]
            for i in range(ell)
        ]
        return determinant(mat, n)
    raise ValueError(f"unknown character family {family!r}")


def _h_table(monomials, nvars, top):
    """Shared h_0..h_top evaluations with total indexing (h_k = 0 for k < 0)."""
    table = [LaurentPolynomial.one(nvars)] + [
        LaurentPolynomial.zero(nvars) for _ in range(max(top, 0))
    ]
    for mono in monomials:
        m = LaurentPolynomial.monomial(mono, nvars)
        for d in range(1, len(table)):
            table[d] = table[d] + m * table[d - 1]
    zero = LaurentPolynomial.zero(nvars)

    def h(k: int) -> LaurentPolynomial:
        if k < 0:
            return zero
        if k >= len(table):
            raise IndexError(f"h_{k} beyond precomputed range {len(table) - 1}")
        return table[k]

    return h


def character_tab(family: str, lam, n: int) -> LaurentPolynomial:
    """Character as the generating series of tableaux of the given shape."""
    lam = _as_partition(lam)
    if len(lam) > n:
        raise ValueError(f"shape {lam!r} needs more than {n} variables")
    total = LaurentPolynomial.zero(n)
    if family == SCHUR:
        for z in enumerate_patterns(ORDINARY, n, lam):
            total = total + LaurentPolynomial.monomial(gt_type(z), n)
        return total
    if family == SYMPLECTIC:
        for z in enumerate_patterns(SYMPLECTIC, 2 * n, lam):
            ty = gt_type(z)
            exps = tuple(ty[2 * i] - ty[2 * i + 1] for i in range(n))
            total = total + LaurentPolynomial.monomial(exps, n)
        return total
    if family == ODD_ORTHOGONAL:
        for t in enumerate_patterns(ODD_ORTHOGONAL, 2 * n, lam):
            total = total + LaurentPolynomial.monomial(t.letter_weight(), n)
        return total
    raise ValueError(f"unknown character family {family!r}")


# --- bounded sums and the product identity ----------------------------------


def box_partitions(
    u: int, n: int, even_rows_only: bool = False
) -> Iterator[Partition]:
    """Partitions inside the u-by-n box, ascending colexicographically.

    Colex compares the zero-padded n-tuple (l_1, ..., l_n) from the right.
    """
    if u < 0 or n < 0:
        raise ValueError("box dimensions must be non-negative")

    def rec(j: int, cap: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if j == n:
            yield tuple(prefix)
            return
        step = 2 if even_rows_only else 1
        for v in range(0, cap + 1, step):
            prefix.append(v)
            yield from rec(j + 1, v, prefix)
            prefix.pop()

    all_tuples = list(rec(0, u, []))
    all_tuples.sort(key=lambda t: t[::-1])
    for t in all_tuples:
        yield Partition(t)


def bounded_schur_sum(u: int, n: int, even_rows_only: bool = False) -> LaurentPolynomial:
    """Sum of Schur polynomials over the u-by-n box, optionally even-row only."""
    if u < 0:
        raise ValueError("bound must be non-negative")
    total = LaurentPolynomial.zero(n)
    for lam in box_partitions(u, n, even_rows_only):
        total = total + character_jt(SCHUR, lam, n)
    return total


def okada_product(u: int, n: int) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """Both sides of the bounded symplectic-sum product identity.

    Left: sum of symplectic characters over shapes with first part <= u.
    Right: sp over the floor(u/2)^n rectangle times the odd orthogonal
    character over the ceil(u/2)^n rectangle.
    """
    if u < 0:
        raise ValueError("bound must be non-negative")
    lhs = LaurentPolynomial.zero(n)
    for lam in box_partitions(u, n):
        lhs = lhs + character_jt(SYMPLECTIC, lam, n)
    s, t = u // 2, (u + 1) // 2
    rhs = character_jt(SYMPLECTIC, Partition([s] * n), n) * character_jt(
        ODD_ORTHOGONAL, Partition([t] * n), n
    )
    return lhs, rhs


def product_of_variables(n: int, power: int = 1) -> LaurentPolynomial:
    """(x_1 x_2 ... x_n)^power as a monomial."""
    return LaurentPolynomial.monomial((power,) * n, n)
