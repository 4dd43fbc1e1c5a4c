"""Exact rational scalars and dense matrices.

Every computation in this package runs over Q, represented by
``fractions.Fraction`` (always in lowest terms, positive denominator).
There is no floating point anywhere: the statements we verify are
equalities of dimensions, so tolerances would make them meaningless.

Rationals serialize as strings ``"p/q"`` or ``"p"`` in all JSON formats.

The kernel basis returned by :meth:`Matrix.kernel_basis` is the canonical
one read off the reduced row echelon form: free columns in increasing
index order, with a 1 in the free coordinate of each basis vector.
Ranks are computed by fraction-free (Bareiss) elimination on
denominator-cleared integer rows.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction


def rational(value) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            denominator = int(den)
            if denominator == 0:
                raise ValueError(f"zero denominator in rational {value!r}")
            return Fraction(int(num), denominator)
        return Fraction(int(text))
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(x: Fraction) -> str:
    return str(x)


def binomial(k: int, l: int) -> int:
    """C(k, l), with the convention that it is 0 outside 0 <= l <= k."""
    if l < 0 or l > k or k < 0:
        return 0
    return math.comb(k, l)


def _clear_row(row: Sequence[Fraction]) -> list[int]:
    """Scale a rational row to coprime integers (empty gcd -> zero row)."""
    lcm = 1
    for x in row:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in row]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


class Matrix:
    """Immutable dense matrix over Q."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable]) -> None:
        data = tuple(tuple(rational(x) for x in row) for row in entries)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("ragged rows")
        else:
            width = 0
        object.__setattr__(self, "entries", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)])

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"Matrix({[list(map(str, row)) for row in self.entries]})"

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.entries)) if self.rows else Matrix([])

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = other.transpose().entries
        return Matrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries]
        )

    def scale(self, c) -> "Matrix":
        c = rational(c)
        return Matrix([[c * x for x in row] for row in self.entries])

    def apply_row(self, vector: Sequence) -> tuple[Fraction, ...]:
        """Row vector times matrix."""
        vec = [rational(x) for x in vector]
        if len(vec) != self.rows:
            raise ValueError("shape mismatch")
        return tuple(
            sum(vec[i] * self.entries[i][j] for i in range(self.rows))
            for j in range(self.cols)
        )

    def apply(self, vector: Sequence) -> tuple[Fraction, ...]:
        """Matrix times column vector."""
        vec = [rational(x) for x in vector]
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.entries)

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and its pivot columns."""
        m = [list(row) for row in self.entries]
        pivots: list[int] = []
        pivot_row = 0
        for col in range(self.cols):
            pivot = next(
                (i for i in range(pivot_row, self.rows) if m[i][col] != 0), None
            )
            if pivot is None:
                continue
            m[pivot_row], m[pivot] = m[pivot], m[pivot_row]
            inv = 1 / m[pivot_row][col]
            m[pivot_row] = [x * inv for x in m[pivot_row]]
            for i in range(self.rows):
                if i != pivot_row and m[i][col] != 0:
                    factor = m[i][col]
                    m[i] = [x - factor * y for x, y in zip(m[i], m[pivot_row])]
            pivots.append(col)
            pivot_row += 1
            if pivot_row == self.rows:
                break
        return Matrix(m), tuple(pivots)

    def rank(self) -> int:
        """Exact rank by fraction-free Bareiss elimination."""
        m = [_clear_row(row) for row in self.entries]
        m = [row for row in m if any(row)]
        if not m:
            return 0
        rank = 0
        prev = 1
        for col in range(self.cols):
            pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
            if pivot is None:
                continue
            m[rank], m[pivot] = m[pivot], m[rank]
            lead = m[rank][col]
            for i in range(rank + 1, len(m)):
                if any(m[i]):
                    f = m[i][col]
                    m[i] = [
                        (lead * m[i][j] - f * m[rank][j]) // prev
                        for j in range(self.cols)
                    ]
            prev = lead
            rank += 1
            if rank == len(m):
                break
        return rank

    def kernel_basis(self) -> list[tuple[Fraction, ...]]:
        """Canonical basis of the right null space.

        One vector per free column of the RREF, free columns taken in
        increasing order, and each vector normalized so its free
        coordinate equals 1.
        """
        reduced, pivots = self.rref()
        free = [j for j in range(self.cols) if j not in pivots]
        basis = []
        for f in free:
            vec = [Fraction(0)] * self.cols
            vec[f] = Fraction(1)
            for i, p in enumerate(pivots):
                vec[p] = -reduced[i, f]
            basis.append(tuple(vec))
        return basis

    def nullity(self) -> int:
        return self.cols - self.rank()

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return Fraction(1)
        m = [list(row) for row in self.entries]
        sign = 1
        for col in range(n):
            pivot = next((i for i in range(col, n) if m[i][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                sign = -sign
            for i in range(col + 1, n):
                if m[i][col] != 0:
                    factor = m[i][col] / m[col][col]
                    m[i] = [x - factor * y for x, y in zip(m[i], m[col])]
        result = Fraction(sign)
        for i in range(n):
            result *= m[i][i]
        return result

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        augmented = Matrix(
            [
                list(self.entries[i]) + [1 if i == j else 0 for j in range(n)]
                for i in range(n)
            ]
        )
        reduced, pivots = augmented.rref()
        if pivots != tuple(range(n)):
            raise ValueError("matrix is singular")
        return Matrix([reduced.row(i)[n:] for i in range(n)])

    def solve(self, rhs: Sequence) -> tuple[Fraction, ...] | None:
        """One exact solution of ``self @ x = rhs``, or None if inconsistent.

        With several solutions, returns the one with zeros in the free
        coordinates (canonical particular solution).
        """
        vec = [rational(x) for x in rhs]
        if len(vec) != self.rows:
            raise ValueError("shape mismatch")
        augmented = Matrix(
            [list(row) + [vec[i]] for i, row in enumerate(self.entries)]
        )
        reduced, pivots = augmented.rref()
        if self.cols in pivots:
            return None
        solution = [Fraction(0)] * self.cols
        for i, p in enumerate(pivots):
            solution[p] = reduced[i, self.cols]
        return tuple(solution)

    def row_space_rref(self) -> "Matrix":
        """Canonical form of the row span (RREF with zero rows dropped)."""
        reduced, pivots = self.rref()
        return Matrix([reduced.row(i) for i in range(len(pivots))])

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries]

    @classmethod
    def from_json(cls, data) -> "Matrix":
        return cls(data)
