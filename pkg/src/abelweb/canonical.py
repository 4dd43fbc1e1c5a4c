"""Vandermonde weights, Lagrange interpolation, and canonical web data.

For d pairwise distinct parameters tau_1..tau_d the weights

    c_j = 1 / prod_{k != j} (tau_j - tau_k)

solve the moment system sum_j tau_j^rho c_j = delta_{rho, d-1}.  They
drive everything here: the general solution of the truncated moment
system, the polynomial identity

    sum_j P(t)/(t - tau_j) c_j f(tau_j) = f(t)    for deg f <= d-1,

and the canonical data of a moment web — a relation basis in a fixed
order, the resulting points [1 : tau_j : ... : tau_j^q : 0 : ... : 0],
and the degree-q curve through them.

Univariate polynomials are plain ascending coefficient lists of exact
rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DegenerateWebError, InternalContradictionError
from .exactalg import Matrix, binomial, rational
from .multilinear import HomogeneousPoly
from .webcore import q_of
from .abelian import RelationBasisElement, relation_space, total_rank
from .grassmann import MomentWebSpec, ProjectivePoint, moment_web


def _strip(coeffs: Sequence) -> list[Fraction]:
    coeffs = [rational(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mul(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _poly_eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    total = Fraction(0)
    for c in reversed(list(p)):
        total = total * x + c
    return total


def _check_distinct(taus: Sequence) -> tuple[Fraction, ...]:
    taus = tuple(rational(t) for t in taus)
    if len(set(taus)) != len(taus):
        raise ValueError("parameters must be distinct")
    return taus


def vandermonde_weights(taus: Sequence) -> tuple[Fraction, ...]:
    """The unique solution of sum_j tau_j^rho c_j = delta_{rho, d-1}."""
    taus = _check_distinct(taus)
    weights = []
    for j, tj in enumerate(taus):
        denom = Fraction(1)
        for k, tk in enumerate(taus):
            if k != j:
                denom *= tj - tk
        weights.append(1 / denom)
    return tuple(weights)


def _cofactor(taus: Sequence[Fraction], j: int) -> list[Fraction]:
    """prod_{k != j} (t - tau_k), i.e. P(t)/(t - tau_j)."""
    poly = [Fraction(1)]
    for k, tk in enumerate(taus):
        if k != j:
            poly = _poly_mul(poly, [-tk, Fraction(1)])
    return poly


def check_general_solution(
    r: int, n: int, taus: Sequence, f_coeffs: Sequence
) -> tuple[Fraction, ...]:
    """z_j = c_j f(tau_j) for deg f <= q(d), with the moment equations re-checked.

    Every exact solution of the truncated system
    sum_j tau_j^rho z_j = 0 (rho = 0..r(n-1)) arises this way; see
    solution_polynomial for the converse direction.
    """
    taus = _check_distinct(taus)
    d = len(taus)
    q = q_of(r, n, d)
    f = _strip(f_coeffs)
    if len(f) - 1 > q:
        raise ValueError(f"polynomial degree exceeds q(d) = {q}")
    weights = vandermonde_weights(taus)
    z = tuple(c * _poly_eval(f, t) for c, t in zip(weights, taus))
    for rho in range(r * (n - 1) + 1):
        moment = sum(t**rho * zj for t, zj in zip(taus, z))
        if moment != 0:
            raise InternalContradictionError(
                f"moment {rho} of a weighted polynomial solution is {moment}, not 0"
            )
    return z


def solution_polynomial(
    r: int, n: int, taus: Sequence, z: Sequence
) -> tuple[Fraction, ...]:
    """The polynomial f of degree <= q(d) with z_j = c_j f(tau_j).

    Raises ValueError when z does not solve the moment system, and
    InternalContradictionError if a genuine solution needs degree above
    q(d) — the solution space provably has dimension q(d)+1.
    """
    taus = _check_distinct(taus)
    z = [rational(v) for v in z]
    if len(z) != len(taus):
        raise ValueError("one value per parameter is required")
    d = len(taus)
    q = q_of(r, n, d)
    for rho in range(r * (n - 1) + 1):
        if sum(t**rho * zj for t, zj in zip(taus, z)) != 0:
            raise ValueError("values do not solve the moment system")
    # Lagrange basis through (tau_j, z_j / c_j) collapses to
    # f = sum_j z_j * P(t)/(t - tau_j)
    f = [Fraction(0)] * d
    for j, zj in enumerate(z):
        if zj != 0:
            for e, c in enumerate(_cofactor(taus, j)):
                f[e] += zj * c
    f = _strip(f)
    if len(f) - 1 > q:
        raise InternalContradictionError(
            f"moment-system solution interpolates to degree {len(f) - 1} > q(d) = {q}"
        )
    return tuple(f)


def lagrange_identity(taus: Sequence, f_coeffs: Sequence) -> bool:
    """Whether sum_j P(t)/(t-tau_j) c_j f(tau_j) = f(t) holds identically.

    True for every f of degree <= d-1 and false beyond — the left-hand
    side has degree < d, so it can only reproduce f up to that bound.
    """
    taus = _check_distinct(taus)
    f = _strip(f_coeffs)
    weights = vandermonde_weights(taus)
    total = [Fraction(0)] * len(taus)
    for j, (cj, tj) in enumerate(zip(weights, taus)):
        value = cj * _poly_eval(f, tj)
        if value != 0:
            for e, c in enumerate(_cofactor(taus, j)):
                total[e] += value * c
    return _strip(total) == f


def dimension_formula(r: int, n: int, q: int) -> int:
    """Closed form for the maximal rank of webs with q(d) = q.

    Writing q = rho(n-1) + m - 1 with rho >= 1 and 1 <= m <= n-1, the
    value is (n-1) C(r+rho, r+1) + m C(r+rho, r); it agrees with the sum
    of per-degree bounds at d = q + r(n-1) + 2.
    """
    if r < 1 or n < 2:
        raise ValueError("formula requires r >= 1, n >= 2")
    if q < n - 1:
        raise ValueError("formula requires q >= n-1")
    rho, rem = divmod(q, n - 1)
    m = rem + 1
    return (n - 1) * binomial(r + rho, r + 1) + m * binomial(r + rho, r)


class CanonicalData:
    """Relation-basis data of a moment web at the origin.

    N is the rank minus one; points are the d images of the origin under
    the relation-basis maps; curve_coeffs are the q+1 vector coefficients
    of the degree-q polynomial curve through all of them.
    """

    __slots__ = ("N", "q", "taus", "weights", "points", "curve_coeffs")

    def __init__(self, N, q, taus, weights, points, curve_coeffs):
        self.N = N
        self.q = q
        self.taus = tuple(taus)
        self.weights = tuple(weights)
        self.points = tuple(points)
        self.curve_coeffs = tuple(tuple(v) for v in curve_coeffs)

    def point_at(self, t) -> ProjectivePoint:
        """The curve evaluated at parameter t."""
        t = rational(t)
        coords = [Fraction(0)] * (self.N + 1)
        for rho, vec in enumerate(self.curve_coeffs):
            for i, c in enumerate(vec):
                coords[i] += t**rho * c
        return ProjectivePoint(coords)

    def fresh_parameter(self) -> Fraction:
        return max(self.taus) + 1

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "q": self.q,
            "taus": [str(t) for t in self.taus],
            "weights": [str(c) for c in self.weights],
            "points": [p.to_json() for p in self.points],
            "curve": [[str(c) for c in vec] for vec in self.curve_coeffs],
        }


def _extend_basis(rows: list, candidates: list, target: int) -> None:
    """Greedily append candidate vectors while the rank grows."""
    for vec in candidates:
        if len(rows) == target:
            return
        if Matrix(rows + [list(vec)]).rank() == len(rows) + 1:
            rows.append(list(vec))
    if len(rows) != target:
        raise InternalContradictionError(
            "kernel basis fails to complete the designated relations"
        )


def canonical_data(spec: MomentWebSpec) -> CanonicalData:
    """Ordered relation basis, points, and curve of a moment web.

    The basis order is fixed: the q+1 weighted power relations
    z_j = c_j tau_j^rho of degree 0, then the r weighted linear relations
    z_j = c_j y_a, then the canonical remainder degree by degree.  With
    that order the j-th point is [1 : tau_j : ... : tau_j^q : 0 : ... : 0]
    and the curve through them is [1 : t : ... : t^q : 0 : ... : 0]; both
    facts are asserted rather than assumed.
    """
    r, n = spec.r, spec.n
    d = len(spec.taus)
    q = q_of(r, n, d)
    if q < n - 1:
        raise ValueError(
            f"canonical data requires at least (r+1)(n-1)+2 = {(r + 1) * (n - 1) + 2} parameters"
        )
    web = moment_web(spec)
    report = total_rank(web)
    if not report.maximal_rank or not report.semi_extremal:
        raise InternalContradictionError("moment web fails to saturate the rank bounds")
    weights = vandermonde_weights(spec.taus)

    # designated degree-0 block: z_j = c_j tau_j^rho, rho = 0..q
    basis: list[RelationBasisElement] = []
    for rho in range(q + 1):
        components = [
            HomogeneousPoly.constant(r, c * t**rho)
            for c, t in zip(weights, spec.taus)
        ]
        basis.append(RelationBasisElement(web, 0, components))
    if report.dim(0) != q + 1:
        raise InternalContradictionError(
            f"degree-0 relation space has dimension {report.dim(0)}, expected {q + 1}"
        )

    # designated degree-1 block: z_j = c_j y_a, a = 1..r
    designated1 = []
    for a in range(r):
        components = [
            HomogeneousPoly(r, 1, {tuple(1 if i == a else 0 for i in range(r)): c})
            for c in weights
        ]
        designated1.append(RelationBasisElement(web, 1, components))
    basis.extend(designated1)

    # canonical remainder, degree by degree
    kernel1 = relation_space(web, 1)
    rows = [list(el.vector()) for el in designated1]
    chosen: list[RelationBasisElement] = []
    for el in kernel1:
        if len(rows) == len(kernel1):
            break
        candidate = list(el.vector())
        if Matrix(rows + [candidate]).rank() == len(rows) + 1:
            rows.append(candidate)
            chosen.append(el)
    if len(rows) != len(kernel1):
        raise InternalContradictionError(
            "degree-1 kernel basis fails to complete the designated relations"
        )
    basis.extend(chosen)
    h = 2
    while True:
        space = relation_space(web, h)
        if not space:
            break
        basis.extend(space)
        h += 1

    if len(basis) != report.total_rank:
        raise InternalContradictionError(
            f"assembled {len(basis)} relations, expected rank {report.total_rank}"
        )
    N = report.total_rank - 1

    # evaluation at the origin: constants survive, positive degrees vanish
    columns = []
    for j in range(d):
        column = [
            el.components[j].coefficient((0,) * r) if el.degree == 0 else Fraction(0)
            for el in basis
        ]
        columns.append(column)

    points = []
    for j, column in enumerate(columns):
        point = ProjectivePoint(column)
        expected = tuple(spec.taus[j] ** rho for rho in range(q + 1)) + (
            Fraction(0),
        ) * (N - q)
        if point.coords != expected:
            raise InternalContradictionError(
                f"point {j + 1} differs from its displayed coordinate form"
            )
        points.append(point)
    if len(set(points)) != d:
        raise InternalContradictionError("canonical points are not pairwise distinct")

    # curve z(t) = sum_j P(t)/(t - tau_j) z_j; must close at degree q
    curve = [[Fraction(0)] * (N + 1) for _ in range(d)]
    for j, column in enumerate(columns):
        for e, c in enumerate(_cofactor(spec.taus, j)):
            if c != 0:
                for i, zc in enumerate(column):
                    curve[e][i] += c * zc
    for e in range(q + 1, d):
        if any(c != 0 for c in curve[e]):
            raise InternalContradictionError(
                f"canonical curve has a nonzero coefficient in degree {e} > q = {q}"
            )
    curve_coeffs = curve[: q + 1]

    data = CanonicalData(N, q, spec.taus, weights, points, curve_coeffs)
    for tau, point in zip(spec.taus, points):
        if data.point_at(tau) != point:
            raise InternalContradictionError(
                "canonical curve fails to interpolate its defining points"
            )
    return data
