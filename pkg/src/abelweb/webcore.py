"""Constant webs of type (r, n): general position and closed-form bounds.

A constant foliation of type (r, n) on V = Q^(rn) is the family of
parallel affine subspaces cut out by r independent linear forms, stored
as the rows of an r x (rn) matrix.  A constant web is a list of d such
foliations.  The general-position condition (PG) asks that the wedge of
any delta <= min(d, n) of the generator normals is nonzero.

The closed-form quantities:

* q_of(r, n, d)        = d - r(n-1) - 2
* degree_bound(...h)   = C(r-1+h, r-1) * max(d - (r+h)(n-1) - 1, 0)
* rho_bound(r, n, d)   = sum of the degree bounds over h
* h_cutoff(r, n, d)    = first degree whose relation space provably vanishes
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .errors import DegenerateWebError
from .exactalg import Matrix, binomial
from .multilinear import ExteriorForm, wedge, wedge_rows


class ConstantFoliation:
    """One codimension-r foliation, given by the rows of its defining map."""

    __slots__ = ("r", "n", "matrix", "_span")

    def __init__(self, r: int, n: int, matrix: Matrix):
        if matrix.rows != r or matrix.cols != r * n:
            raise ValueError(f"expected a {r}x{r * n} coefficient matrix")
        if matrix.rank() != r:
            raise DegenerateWebError("not a foliation: coefficient matrix is rank deficient")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "_span", None)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("ConstantFoliation is immutable")

    def row_span(self) -> Matrix:
        """Canonical (RREF) form of the row span; foliation identity."""
        if self._span is None:
            object.__setattr__(self, "_span", self.matrix.row_space_rref())
        return self._span

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ConstantFoliation)
            and (self.r, self.n) == (other.r, other.n)
            and self.row_span() == other.row_span()
        )

    def __hash__(self) -> int:
        return hash((self.r, self.n, self.row_span()))

    def __repr__(self) -> str:
        return f"ConstantFoliation(r={self.r}, n={self.n}, {self.matrix!r})"


class ConstantWeb:
    """A list of d constant foliations sharing one type (r, n).

    Construction never refuses a web that fails general position; the
    ``pg`` result is computed lazily and rank computations gate on it.
    """

    __slots__ = ("r", "n", "foliations", "_pg")

    def __init__(self, r: int, n: int, foliations: Sequence[ConstantFoliation]):
        foliations = tuple(foliations)
        if not foliations:
            raise ValueError("a web needs at least one foliation")
        if r < 1 or n < 2:
            raise ValueError("web type requires r >= 1, n >= 2")
        for f in foliations:
            if (f.r, f.n) != (r, n):
                raise ValueError("foliation type mismatch")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "foliations", foliations)
        object.__setattr__(self, "_pg", None)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("ConstantWeb is immutable")

    @property
    def d(self) -> int:
        return len(self.foliations)

    @property
    def ambient_dim(self) -> int:
        return self.r * self.n

    def foliation_set(self) -> frozenset:
        return frozenset(self.foliations)

    def pg(self) -> tuple[bool, tuple[int, ...] | None]:
        if self._pg is None:
            object.__setattr__(self, "_pg", check_pg(self))
        return self._pg

    def is_pg(self) -> bool:
        return self.pg()[0]

    def require_pg(self, allow_degenerate: bool = False) -> None:
        ok, failing = self.pg()
        if not ok and not allow_degenerate:
            raise DegenerateWebError(
                f"web not in general position: normals of foliations {failing} wedge to zero"
            )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ConstantWeb)
            and (self.r, self.n) == (other.r, other.n)
            and self.foliations == other.foliations
        )

    def __hash__(self) -> int:
        return hash((self.r, self.n, self.foliations))

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "foliations": [f.matrix.to_json() for f in self.foliations],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ConstantWeb":
        r, n = int(data["r"]), int(data["n"])
        foliations = [
            ConstantFoliation(r, n, Matrix.from_json(rows))
            for rows in data["foliations"]
        ]
        return cls(r, n, foliations)


def generator_normal(foliation: ConstantFoliation) -> ExteriorForm:
    """The r-form obtained by wedging the defining rows; never zero."""
    normal = wedge_rows(foliation.matrix.entries)
    if normal.is_zero:
        raise DegenerateWebError("not a foliation: generator normal vanishes")
    return normal


def check_pg(web: ConstantWeb) -> tuple[bool, tuple[int, ...] | None]:
    """Test the general-position condition.

    Returns ``(True, None)`` or ``(False, subset)`` where ``subset`` is
    the lexicographically first failing index set (1-based).
    """
    normals = [generator_normal(f) for f in web.foliations]
    for delta in range(1, min(web.d, web.n) + 1):
        for subset in itertools.combinations(range(web.d), delta):
            product = normals[subset[0]]
            for j in subset[1:]:
                product = wedge(product, normals[j])
            if product.is_zero:
                return False, tuple(j + 1 for j in subset)
    return True, None


def q_of(r: int, n: int, d: int) -> int:
    if r < 1 or n < 2 or d < 1:
        raise ValueError("q_of requires r >= 1, n >= 2, d >= 1")
    return d - r * (n - 1) - 2


def degree_bound(r: int, n: int, d: int, h: int) -> int:
    """Upper bound for the dimension of the degree-h relation space."""
    if r < 1 or n < 2:
        raise ValueError("bounds require r >= 1, n >= 2")
    return binomial(r - 1 + h, r - 1) * max(d - (r + h) * (n - 1) - 1, 0)


def h_cutoff(r: int, n: int, d: int) -> int:
    """Smallest h with d <= (r+h)(n-1)+1; all higher relation spaces vanish."""
    if r < 1 or n < 2:
        raise ValueError("bounds require r >= 1, n >= 2")
    h = 0
    while d > (r + h) * (n - 1) + 1:
        h += 1
    return h


def rho_bound(r: int, n: int, d: int) -> int:
    """The optimal total rank bound: sum of the per-degree bounds."""
    return sum(degree_bound(r, n, d, h) for h in range(h_cutoff(r, n, d)))
