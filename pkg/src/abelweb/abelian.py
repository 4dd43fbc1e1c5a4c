"""Abelian-relation spaces of constant webs, degree by degree.

A degree-h relation of a web with foliation maps kappa_j and generator
normals Omega_j is a d-tuple (c_1, ..., c_d) of degree-h homogeneous
polynomials in r variables with

    sum_j  c_j(kappa_j) * Omega_j  =  0.

The relation space R(h) is the kernel of the linear map assembling the
left-hand side in the space Sym^h(V*) (x) Lambda^r(V*).  The matrix
layout is fixed once and for all: rows are indexed by (degree-h monomial
in rn variables, graded-lex) x (r-subset, colex); columns by (foliation
j) x (degree-h monomial in r variables, graded-lex).

A computed dimension exceeding the per-degree bound on a general-position
web would contradict a proven statement, so it aborts with
InternalContradictionError instead of returning.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateWebError, InternalContradictionError
from .exactalg import Matrix
from .multilinear import (
    HomogeneousPoly,
    monomial_exponents,
    monomial_position,
    poly_space_dim,
    subset_position,
    substitute,
)
from .webcore import (
    ConstantWeb,
    degree_bound,
    generator_normal,
    h_cutoff,
    q_of,
    rho_bound,
)


class RelationBasisElement:
    """One abelian relation, re-verified exactly on construction."""

    __slots__ = ("degree", "components")

    def __init__(self, web: ConstantWeb, degree: int, components: Sequence[HomogeneousPoly]):
        components = tuple(components)
        if len(components) != web.d:
            raise ValueError("one polynomial component per foliation is required")
        for c in components:
            if c.nvars != web.r or c.degree != degree:
                raise ValueError("component has wrong polynomial space")
        _verify_relation(web, components)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("RelationBasisElement is immutable")

    def vector(self) -> tuple[Fraction, ...]:
        """Concatenated component coefficients, foliation-major."""
        out: list[Fraction] = []
        for c in self.components:
            out.extend(c.vector())
        return tuple(out)


def _verify_relation(web: ConstantWeb, components: Sequence[HomogeneousPoly]) -> None:
    total: dict[tuple, Fraction] = {}
    for foliation, c in zip(web.foliations, components):
        if c.is_zero:
            continue
        normal = generator_normal(foliation)
        poly = substitute(c, foliation.matrix.entries)
        for expo, pc in poly.coeffs.items():
            for subset, nc in normal.coeffs.items():
                key = (expo, subset)
                total[key] = total.get(key, Fraction(0)) + pc * nc
    if any(v != 0 for v in total.values()):
        raise InternalContradictionError("claimed abelian relation does not sum to zero")


def relation_matrix(web: ConstantWeb, h: int) -> Matrix:
    """The assembled map from E_r(h)^d to Sym^h(V*) (x) Lambda^r(V*)."""
    r, n, d = web.r, web.n, web.d
    rn = r * n
    mono_pos = monomial_position(rn, h)
    sub_pos = subset_position(rn, r)
    n_subsets = len(sub_pos)
    dim_e = poly_space_dim(r, h)
    rows = len(mono_pos) * n_subsets
    cols = d * dim_e
    entries = [[Fraction(0)] * cols for _ in range(rows)]
    basis = monomial_exponents(r, h)
    for j, foliation in enumerate(web.foliations):
        normal = generator_normal(foliation)
        for b, expo in enumerate(basis):
            col = j * dim_e + b
            poly = substitute(
                HomogeneousPoly(r, h, {expo: 1}), foliation.matrix.entries
            )
            for mono, pc in poly.coeffs.items():
                base = mono_pos[mono] * n_subsets
                for subset, nc in normal.coeffs.items():
                    entries[base + sub_pos[subset]][col] += pc * nc
    return Matrix(entries)


def _guard_bound(web: ConstantWeb, h: int, dim: int) -> None:
    if web.is_pg():
        bound = degree_bound(web.r, web.n, web.d, h)
        if dim > bound:
            raise InternalContradictionError(
                f"dim R({h}) = {dim} exceeds the proven bound {bound} "
                f"for a general-position web of type ({web.r},{web.n}), d={web.d}"
            )


def relation_space_dim(web: ConstantWeb, h: int, allow_degenerate: bool = False) -> int:
    """dim R(h), computed from the rank of the assembled matrix."""
    web.require_pg(allow_degenerate)
    matrix = relation_matrix(web, h)
    dim = matrix.cols - matrix.rank()
    _guard_bound(web, h, dim)
    return dim


def relation_space(
    web: ConstantWeb, h: int, allow_degenerate: bool = False
) -> list[RelationBasisElement]:
    """Canonical kernel basis of the degree-h relation space."""
    web.require_pg(allow_degenerate)
    matrix = relation_matrix(web, h)
    kernel = matrix.kernel_basis()
    _guard_bound(web, h, len(kernel))
    dim_e = poly_space_dim(web.r, h)
    basis = []
    for vec in kernel:
        components = [
            HomogeneousPoly.from_vector(web.r, h, vec[j * dim_e : (j + 1) * dim_e])
            for j in range(web.d)
        ]
        basis.append(RelationBasisElement(web, h, components))
    return basis


class DegreeReport:
    __slots__ = ("h", "dim", "bound", "saturated")

    def __init__(self, h: int, dim: int, bound: int):
        self.h = h
        self.dim = dim
        self.bound = bound
        self.saturated = dim == bound

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "dim": self.dim,
            "bound": self.bound,
            "saturated": self.saturated,
        }


class RankReport:
    """Per-degree dimensions, bounds and totals for one web."""

    def __init__(self, web: ConstantWeb, per_degree: Sequence[DegreeReport]):
        self.r, self.n, self.d = web.r, web.n, web.d
        self.per_degree = tuple(per_degree)
        self.total_rank = sum(item.dim for item in per_degree)
        self.rho = rho_bound(web.r, web.n, web.d)
        self.maximal_rank = self.total_rank == self.rho
        self.semi_extremal = _semi_extremal_from_dims(
            web, {item.h: item.dim for item in per_degree}
        )
        if self.total_rank > self.rho:
            raise InternalContradictionError("total rank exceeds the proven bound")

    def dim(self, h: int) -> int:
        for item in self.per_degree:
            if item.h == h:
                return item.dim
        return 0

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "d": self.d,
            "per_degree": [item.to_json() for item in self.per_degree],
            "total_rank": self.total_rank,
            "rho": self.rho,
            "semi_extremal": self.semi_extremal,
            "maximal_rank": self.maximal_rank,
        }

    def to_tsv(self) -> str:
        lines = ["h\tdim\tbound\tsaturated"]
        for item in self.per_degree:
            lines.append(
                f"{item.h}\t{item.dim}\t{item.bound}\t{str(item.saturated).lower()}"
            )
        lines.append(f"total\t{self.total_rank}\trho={self.rho}\t"
                     f"maximal={str(self.maximal_rank).lower()}")
        return "\n".join(lines) + "\n"


def _semi_extremal_from_dims(web: ConstantWeb, dims: dict[int, int]) -> bool:
    r, n, d = web.r, web.n, web.d
    if q_of(r, n, d) < n - 1:
        return False
    dim0 = dims.get(0)
    dim1 = dims.get(1)
    if dim0 is None:
        dim0 = relation_space_dim(web, 0)
    if dim1 is None:
        dim1 = relation_space_dim(web, 1)
    return dim0 == d - r * (n - 1) - 1 and dim1 == r * (d - (r + 1) * (n - 1) - 1)


def total_rank(
    web: ConstantWeb,
    allow_degenerate: bool = False,
    paranoid: bool = False,
    parallel: bool = False,
) -> RankReport:
    """Rank report over all degrees below the provable cutoff.

    ``paranoid`` additionally computes the first provably-zero degree and
    asserts it really vanishes.
    """
    web.require_pg(allow_degenerate)
    cutoff = h_cutoff(web.r, web.n, web.d)
    degrees = list(range(cutoff))
    if parallel and len(degrees) > 1:
        with ThreadPoolExecutor() as pool:
            dims = list(
                pool.map(lambda h: relation_space_dim(web, h, allow_degenerate), degrees)
            )
    else:
        dims = [relation_space_dim(web, h, allow_degenerate) for h in degrees]
    if paranoid:
        extra = relation_space_dim(web, cutoff, allow_degenerate)
        if extra != 0:
            raise InternalContradictionError(
                f"dim R({cutoff}) = {extra}, expected 0 beyond the cutoff"
            )
    per_degree = [
        DegreeReport(h, dim, degree_bound(web.r, web.n, web.d, h))
        for h, dim in zip(degrees, dims)
    ]
    return RankReport(web, per_degree)


def is_semi_extremal(web: ConstantWeb, allow_degenerate: bool = False) -> bool:
    """True iff R(0) and R(1) are both of maximal dimension (and q >= n-1)."""
    web.require_pg(allow_degenerate)
    r, n, d = web.r, web.n, web.d
    if q_of(r, n, d) < n - 1:
        return False
    return _semi_extremal_from_dims(
        web,
        {
            0: relation_space_dim(web, 0, allow_degenerate),
            1: relation_space_dim(web, 1, allow_degenerate),
        },
    )


def subweb(web: ConstantWeb, indices: Sequence[int]) -> ConstantWeb:
    """Restriction to the 1-based foliation indices, order preserved."""
    indices = list(indices)
    if len(set(indices)) != len(indices):
        raise ValueError("subweb indices must be distinct")
    for i in indices:
        if not 1 <= i <= web.d:
            raise ValueError(f"foliation index {i} outside 1..{web.d}")
    return ConstantWeb(web.r, web.n, [web.foliations[i - 1] for i in indices])
