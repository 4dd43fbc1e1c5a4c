"""Homogeneous polynomials and the exterior algebra of a dual space.

Two fixed orders are used in every serialized basis so that artifacts
compare bit-exactly across runs:

* monomials of a fixed degree are listed in graded lexicographic order,
  i.e. exponent tuples sorted lexicographically with the first variable
  dominant ((h,0,...,0) first);
* basis k-forms are indexed by strictly increasing index subsets listed
  in colexicographic order (compare largest elements first).

Indices are 0-based throughout the in-memory API.

Polynomial multiplication is naive convolution; every degree in scope is
tiny, so exactness and simplicity win over clever algorithms.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .exactalg import Matrix, binomial, rational


@lru_cache(maxsize=None)
def monomial_exponents(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent tuples of the given total degree, in graded-lex order."""
    if nvars == 0:
        return ((),) if degree == 0 else ()
    if nvars == 1:
        return ((degree,),)
    result = []
    for first in range(degree, -1, -1):
        for rest in monomial_exponents(nvars - 1, degree - first):
            result.append((first,) + rest)
    return tuple(result)


@lru_cache(maxsize=None)
def monomial_position(nvars: int, degree: int) -> dict[tuple[int, ...], int]:
    return {e: i for i, e in enumerate(monomial_exponents(nvars, degree))}


class HomogeneousPoly:
    """A homogeneous polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "degree", "coeffs")

    def __init__(self, nvars: int, degree: int, coeffs: Mapping | None = None):
        cleaned: dict[tuple[int, ...], Fraction] = {}
        for expo, c in (coeffs or {}).items():
            expo = tuple(expo)
            c = rational(c)
            if len(expo) != nvars or sum(expo) != degree or min(expo, default=0) < 0:
                raise ValueError(f"bad exponent {expo} for degree {degree}")
            if c != 0:
                cleaned[expo] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", cleaned)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("HomogeneousPoly is immutable")

    @classmethod
    def zero(cls, nvars: int, degree: int) -> "HomogeneousPoly":
        return cls(nvars, degree)

    @classmethod
    def constant(cls, nvars: int, value) -> "HomogeneousPoly":
        return cls(nvars, 0, {(0,) * nvars: rational(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "HomogeneousPoly":
        expo = [0] * nvars
        expo[index] = 1
        return cls(nvars, 1, {tuple(expo): 1})

    @classmethod
    def linear_form(cls, coefficients: Sequence) -> "HomogeneousPoly":
        """Degree-1 polynomial with the given covector of coefficients."""
        coefficients = [rational(c) for c in coefficients]
        n = len(coefficients)
        coeffs = {}
        for i, c in enumerate(coefficients):
            expo = [0] * n
            expo[i] = 1
            coeffs[tuple(expo)] = c
        return cls(n, 1, coeffs)

    @classmethod
    def from_vector(cls, nvars: int, degree: int, vector: Sequence) -> "HomogeneousPoly":
        basis = monomial_exponents(nvars, degree)
        if len(vector) != len(basis):
            raise ValueError("coefficient vector has wrong length")
        return cls(nvars, degree, dict(zip(basis, vector)))

    def coefficient(self, expo: Sequence[int]) -> Fraction:
        return self.coeffs.get(tuple(expo), Fraction(0))

    def vector(self) -> tuple[Fraction, ...]:
        """Coefficients in the fixed graded-lex monomial order."""
        return tuple(
            self.coeffs.get(e, Fraction(0))
            for e in monomial_exponents(self.nvars, self.degree)
        )

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HomogeneousPoly)
            and self.nvars == other.nvars
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.degree, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*x^{e}" for e, c in sorted(self.coeffs.items()))
        return f"HomogeneousPoly({terms or '0'})"

    def _check_compatible(self, other: "HomogeneousPoly"):
        if self.nvars != other.nvars or self.degree != other.degree:
            raise ValueError("mixed polynomial spaces")

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        self._check_compatible(other)
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            coeffs[e] = coeffs.get(e, Fraction(0)) + c
        return HomogeneousPoly(self.nvars, self.degree, coeffs)

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "HomogeneousPoly":
        c = rational(c)
        return HomogeneousPoly(
            self.nvars, self.degree, {e: c * v for e, v in self.coeffs.items()}
        )

    def __mul__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        if self.nvars != other.nvars:
            raise ValueError("mixed polynomial spaces")
        coeffs: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                coeffs[e] = coeffs.get(e, Fraction(0)) + c1 * c2
        return HomogeneousPoly(self.nvars, self.degree + other.degree, coeffs)

    def power(self, k: int) -> "HomogeneousPoly":
        result = HomogeneousPoly.constant(self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def evaluate(self, point: Sequence) -> Fraction:
        values = [rational(x) for x in point]
        total = Fraction(0)
        for expo, c in self.coeffs.items():
            term = c
            for v, e in zip(values, expo):
                term *= v**e
            total += term
        return total


def poly_space_dim(nvars: int, degree: int) -> int:
    return binomial(nvars - 1 + degree, nvars - 1)


def substitute(poly: HomogeneousPoly, forms: Sequence[Sequence]) -> HomogeneousPoly:
    """Pull a polynomial back along linear forms.

    Substitutes ``forms[i]`` (a covector on the target space) for the
    i-th variable of ``poly``; the result is homogeneous of the same
    degree in ``len(forms[0])`` variables.
    """
    if len(forms) != poly.nvars:
        raise ValueError("one linear form per variable is required")
    linear = [HomogeneousPoly.linear_form(f) for f in forms]
    nvars = linear[0].nvars if linear else 0
    if any(f.nvars != nvars for f in linear):
        raise ValueError("forms live on different spaces")
    result = HomogeneousPoly.zero(nvars, poly.degree)
    power_cache: dict[tuple[int, int], HomogeneousPoly] = {}
    for expo, c in poly.coeffs.items():
        term = HomogeneousPoly.constant(nvars, c)
        for i, e in enumerate(expo):
            if e:
                key = (i, e)
                if key not in power_cache:
                    power_cache[key] = linear[i].power(e)
                term = term * power_cache[key]
        result = result + term
    return result


@lru_cache(maxsize=None)
def index_subsets(ambient_dim: int, grade: int) -> tuple[tuple[int, ...], ...]:
    """Strictly increasing index subsets, in colexicographic order."""
    combos = itertools.combinations(range(ambient_dim), grade)
    return tuple(sorted(combos, key=lambda s: tuple(reversed(s))))


@lru_cache(maxsize=None)
def subset_position(ambient_dim: int, grade: int) -> dict[tuple[int, ...], int]:
    return {s: i for i, s in enumerate(index_subsets(ambient_dim, grade))}


def _merge_sign(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Sign of the permutation sorting the concatenation a + b."""
    inversions = sum(1 for x in a for y in b if x > y)
    return -1 if inversions % 2 else 1


class ExteriorForm:
    """An element of Lambda^k of an N-dimensional dual space."""

    __slots__ = ("ambient_dim", "grade", "coeffs")

    def __init__(self, ambient_dim: int, grade: int, coeffs: Mapping | None = None):
        if grade < 0 or grade > ambient_dim:
            raise ValueError("grade exceeds ambient dimension")
        cleaned: dict[tuple[int, ...], Fraction] = {}
        for subset, c in (coeffs or {}).items():
            subset = tuple(subset)
            c = rational(c)
            if len(subset) != grade or list(subset) != sorted(set(subset)):
                raise ValueError(f"bad index subset {subset}")
            if subset and (subset[0] < 0 or subset[-1] >= ambient_dim):
                raise ValueError(f"index out of range in {subset}")
            if c != 0:
                cleaned[subset] = c
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "grade", grade)
        object.__setattr__(self, "coeffs", cleaned)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("ExteriorForm is immutable")

    @classmethod
    def zero(cls, ambient_dim: int, grade: int) -> "ExteriorForm":
        return cls(ambient_dim, grade)

    @classmethod
    def covector(cls, coefficients: Sequence) -> "ExteriorForm":
        coefficients = [rational(c) for c in coefficients]
        return cls(
            len(coefficients),
            1,
            {(i,): c for i, c in enumerate(coefficients)},
        )

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, subset: Sequence[int]) -> Fraction:
        return self.coeffs.get(tuple(subset), Fraction(0))

    def vector(self) -> tuple[Fraction, ...]:
        """Coefficients in the fixed colex subset order."""
        return tuple(
            self.coeffs.get(s, Fraction(0))
            for s in index_subsets(self.ambient_dim, self.grade)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExteriorForm)
            and self.ambient_dim == other.ambient_dim
            and self.grade == other.grade
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.grade, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*e{list(s)}" for s, c in sorted(self.coeffs.items()))
        return f"ExteriorForm({terms or '0'})"

    def _check_compatible(self, other: "ExteriorForm"):
        if self.ambient_dim != other.ambient_dim or self.grade != other.grade:
            raise ValueError("mixed exterior algebra components")

    def __add__(self, other: "ExteriorForm") -> "ExteriorForm":
        self._check_compatible(other)
        coeffs = dict(self.coeffs)
        for s, c in other.coeffs.items():
            coeffs[s] = coeffs.get(s, Fraction(0)) + c
        return ExteriorForm(self.ambient_dim, self.grade, coeffs)

    def __sub__(self, other: "ExteriorForm") -> "ExteriorForm":
        return self + other.scale(-1)

    def scale(self, c) -> "ExteriorForm":
        c = rational(c)
        return ExteriorForm(
            self.ambient_dim, self.grade, {s: c * v for s, v in self.coeffs.items()}
        )


def wedge(a: ExteriorForm, b: ExteriorForm) -> ExteriorForm:
    """Wedge product; sign given by the subset-merge permutation parity."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("mixed exterior algebras")
    grade = a.grade + b.grade
    if grade > a.ambient_dim:
        raise ValueError("grade exceeds ambient dimension")
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for s, cs in a.coeffs.items():
        set_s = set(s)
        for t, ct in b.coeffs.items():
            if set_s.intersection(t):
                continue
            merged = tuple(sorted(s + t))
            value = _merge_sign(s, t) * cs * ct
            coeffs[merged] = coeffs.get(merged, Fraction(0)) + value
    return ExteriorForm(a.ambient_dim, grade, coeffs)


def wedge_all(forms: Sequence[ExteriorForm]) -> ExteriorForm:
    if not forms:
        raise ValueError("empty wedge")
    result = forms[0]
    for form in forms[1:]:
        result = wedge(result, form)
    return result


def wedge_rows(rows: Sequence[Sequence]) -> ExteriorForm:
    """Wedge of covectors; subset coefficients are the maximal minors.

    Equivalent to wedging the rows one by one, but computed directly as
    the k x k minors of the stacked row matrix.
    """
    matrix = Matrix(rows)
    k = matrix.rows
    n = matrix.cols
    if k > n:
        raise ValueError("grade exceeds ambient dimension")
    coeffs = {}
    for subset in index_subsets(n, k):
        minor = Matrix([[matrix[i, j] for j in subset] for i in range(k)])
        coeffs[subset] = minor.det()
    return ExteriorForm(n, k, coeffs)
