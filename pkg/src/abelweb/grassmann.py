"""Moment-curve webs, normal-form recovery, and almost-Grassmannian bases.

The central objects are webs of the form F(p_1), ..., F(p_d): fix an
invertible rn x rn matrix whose rows m_{a,alpha} are read as a covector
basis indexed by pairs (a, alpha) with a < r, alpha < n (a-major
flattening, row index a*n + alpha), and attach to every point
p = [xi_1 : ... : xi_n] of P^{n-1} the codimension-r foliation cut out by

    sum_alpha  xi_alpha m_{a,alpha} = 0,        a = 1, ..., r.

Moment webs take the points on the rational normal curve
[1 : tau : ... : tau^(n-1)]; they realize every rank bound with equality.
Recovery goes the other way: from a semi-extremal web alone, rebuild a
basis and points exhibiting it as F(p_j), and certify with the
Castelnuovo minimal-span criterion that the points lie on a common
rational normal curve.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DegenerateWebError, InternalContradictionError
from .exactalg import Matrix, rational
from .multilinear import monomial_exponents, substitute, wedge, ExteriorForm
from .webcore import ConstantFoliation, ConstantWeb, generator_normal, q_of
from .abelian import relation_space, relation_space_dim, subweb as take_subweb


class ProjectivePoint:
    """A point of projective space, canonicalized on construction.

    The stored coordinates are scaled so the first nonzero one equals 1,
    making equality and hashing well defined.
    """

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        coords = tuple(rational(c) for c in coords)
        lead = next((c for c in coords if c != 0), None)
        if lead is None:
            raise ValueError("projective point needs a nonzero coordinate")
        object.__setattr__(self, "coords", tuple(c / lead for c in coords))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("ProjectivePoint is immutable")

    @classmethod
    def unit(cls, n: int, index: int) -> "ProjectivePoint":
        return cls([1 if i == index else 0 for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjectivePoint) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return "[" + " : ".join(str(c) for c in self.coords) + "]"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]


def moment_point(n: int, tau) -> ProjectivePoint:
    """[1 : tau : ... : tau^(n-1)]."""
    tau = rational(tau)
    return ProjectivePoint([tau**k for k in range(n)])


class MomentWebSpec:
    """Type, parameters, and covector basis of a moment web."""

    __slots__ = ("r", "n", "taus", "base_change")

    def __init__(self, r: int, n: int, taus: Sequence, base_change: Matrix | None = None):
        if r < 1 or n < 2:
            raise ValueError("web type requires r >= 1, n >= 2")
        taus = tuple(rational(t) for t in taus)
        if len(set(taus)) != len(taus):
            raise ValueError("parameters must be distinct")
        if base_change is None:
            base_change = Matrix.identity(r * n)
        if base_change.rows != r * n or base_change.cols != r * n:
            raise ValueError(f"base change must be {r * n}x{r * n}")
        if not base_change.is_invertible():
            raise ValueError("base change must be invertible")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "taus", taus)
        object.__setattr__(self, "base_change", base_change)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("MomentWebSpec is immutable")

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "taus": [str(t) for t in self.taus],
            "base_change": self.base_change.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "MomentWebSpec":
        base = data.get("base_change")
        return cls(
            int(data["r"]),
            int(data["n"]),
            data["taus"],
            Matrix.from_json(base) if base is not None else None,
        )


def foliation_from_point(basis: Matrix, p: ProjectivePoint) -> ConstantFoliation:
    """The foliation F(p): rows sum_alpha xi_alpha m_{a,alpha}, a = 1..r."""
    n = len(p.coords)
    if basis.rows != basis.cols or basis.rows % n != 0:
        raise ValueError("basis shape incompatible with the point's space")
    r = basis.rows // n
    rows = []
    for a in range(r):
        row = [Fraction(0)] * basis.cols
        for alpha, xi in enumerate(p.coords):
            if xi != 0:
                block = basis.row(a * n + alpha)
                row = [x + xi * y for x, y in zip(row, block)]
        rows.append(row)
    return ConstantFoliation(r, n, Matrix(rows))


def moment_web(spec: MomentWebSpec) -> ConstantWeb:
    foliations = [
        foliation_from_point(spec.base_change, moment_point(spec.n, tau))
        for tau in spec.taus
    ]
    return ConstantWeb(spec.r, spec.n, foliations)


def omega_expansion(basis: Matrix, r: int, n: int) -> list[ExteriorForm]:
    """Coefficient forms K_0..K_{r(n-1)} of Omega(t) = wedge_a sum_alpha t^(alpha-1) m_{a,alpha}.

    The generator normal of the moment foliation at tau is then exactly
    sum_rho tau^rho K_rho.
    """
    rn = r * n
    if basis.rows != rn or basis.cols != rn:
        raise ValueError(f"basis must be {rn}x{rn}")
    # polynomial in t with exterior-form coefficients, degree-indexed dict
    poly: dict[int, ExteriorForm] = {0: ExteriorForm(rn, 0, {(): 1})}
    for a in range(r):
        next_poly: dict[int, ExteriorForm] = {}
        for alpha in range(n):
            row_form = ExteriorForm.covector(basis.row(a * n + alpha))
            for deg, form in poly.items():
                term = wedge(form, row_form)
                key = deg + alpha
                next_poly[key] = next_poly.get(key, term.scale(0)) + term
        poly = next_poly
    return [
        poly.get(rho, ExteriorForm.zero(rn, r)) for rho in range(r * (n - 1) + 1)
    ]


def veronese(p: ProjectivePoint, r: int) -> ProjectivePoint:
    """All degree-r monomials of the coordinates, graded-lex order."""
    coords = []
    for expo in monomial_exponents(len(p.coords), r):
        value = Fraction(1)
        for c, e in zip(p.coords, expo):
            value *= c**e
        coords.append(value)
    return ProjectivePoint(coords)


def normals_span_rank(web: ConstantWeb) -> int:
    """Rank of the d generator normals inside Lambda^r V*."""
    return Matrix([generator_normal(f).vector() for f in web.foliations]).rank()


def castelnuovo_rnc_test(points: Sequence[ProjectivePoint], r: int) -> bool:
    """Minimal-span criterion for lying on a rational normal curve.

    True iff the degree-r monomial images of the points span a space of
    dimension exactly r(n-1)+1, the minimum for points in general
    position; this holds iff they lie on a common rational normal curve
    of degree n-1.  Requires d >= r(n-1)+1, strengthened to d >= 2n+1
    when r = 2.
    """
    if not points:
        raise ValueError("empty point list")
    n = len(points[0].coords)
    d = len(points)
    threshold = 2 * n + 1 if r == 2 else r * (n - 1) + 1
    if d < threshold:
        raise ValueError("below Castelnuovo threshold")
    images = Matrix([veronese(p, r).coords for p in points])
    return images.rank() == r * (n - 1) + 1


class AdaptedStructure:
    """A covector basis and points exhibiting a web as F(p_1), ..., F(p_d)."""

    __slots__ = ("basis", "points", "permutation")

    def __init__(
        self,
        basis: Matrix,
        points: Sequence[ProjectivePoint],
        permutation: Sequence[int] | None = None,
    ):
        if not basis.is_invertible():
            raise DegenerateWebError("adapted basis must be invertible")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "points", tuple(points))
        object.__setattr__(
            self, "permutation", tuple(permutation) if permutation is not None else None
        )

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("AdaptedStructure is immutable")

    def rebuild(self) -> ConstantWeb:
        """The web F(p_j) cut by this structure, in point order."""
        n = len(self.points[0].coords)
        r = self.basis.rows // n
        return ConstantWeb(
            r, n, [foliation_from_point(self.basis, p) for p in self.points]
        )

    def to_json(self) -> dict:
        data = {
            "basis": self.basis.to_json(),
            "points": [p.to_json() for p in self.points],
        }
        if self.permutation is not None:
            data["permutation"] = list(self.permutation)
        return data

    @classmethod
    def from_json(cls, data: dict) -> "AdaptedStructure":
        return cls(
            Matrix.from_json(data["basis"]),
            [ProjectivePoint(c) for c in data["points"]],
            data.get("permutation"),
        )


def _recover_base_case(web: ConstantWeb) -> AdaptedStructure:
    """Recovery for webs of the critical order d = (r+1)(n-1)+2."""
    r, n, d = web.r, web.n, web.d

    dim0 = relation_space_dim(web, 0)
    if dim0 != d - r * (n - 1) - 1:
        raise DegenerateWebError(
            "web is not semi-extremal / degenerate: "
            f"degree-0 relation space has dimension {dim0}"
        )
    relations = relation_space(web, 1)
    if len(relations) != r:
        raise DegenerateWebError(
            "web is not semi-extremal / degenerate: "
            f"degree-1 relation space has dimension {len(relations)}"
        )

    # u_{a,j}: the linear component of relation a along foliation j,
    # pulled back to a covector on the ambient space
    u = [
        [
            substitute(comp, web.foliations[j].matrix.entries).vector()
            for j, comp in enumerate(rel.components)
        ]
        for rel in relations
    ]
    for j in range(d):
        block = Matrix([u[a][j] for a in range(r)])
        if block.rank() != r or block.row_space_rref() != web.foliations[j].row_span():
            raise DegenerateWebError(
                "web is not semi-extremal / degenerate: recovered covectors "
                f"do not cut out foliation {j + 1}"
            )

    basis = Matrix([u[a][alpha] for a in range(r) for alpha in range(n)])
    if not basis.is_invertible():
        raise DegenerateWebError(
            "web is not semi-extremal / degenerate: recovered covector basis is singular"
        )

    # express the normal of each foliation alpha <= n in the normals of
    # foliations n+1..d; the coefficient columns are the missing points
    tail = Matrix([generator_normal(f).vector() for f in web.foliations[n:]])
    if tail.rank() != d - n:
        raise DegenerateWebError(
            "web is not semi-extremal / degenerate: normals of foliations "
            f"{n + 1}..{d} are linearly dependent"
        )
    system = tail.transpose()
    xi = []
    for alpha in range(n):
        omega = generator_normal(web.foliations[alpha]).vector()
        solution = system.solve(omega)
        if solution is None:
            raise DegenerateWebError(
                "web is not semi-extremal / degenerate: basis normal "
                f"{alpha + 1} lies outside the span of the remaining normals"
            )
        xi.append(solution)

    points = [ProjectivePoint.unit(n, j) for j in range(n)]
    for idx in range(d - n):
        coords = [xi[alpha][idx] for alpha in range(n)]
        if all(c == 0 for c in coords):
            raise DegenerateWebError(
                "web is not semi-extremal / degenerate: foliation "
                f"{n + idx + 1} received no point coordinates"
            )
        points.append(ProjectivePoint(coords))
    return AdaptedStructure(basis, points)


def _point_from_block_matrix(basis_inv: Matrix, foliation: ConstantFoliation, r: int, n: int, k: int) -> ProjectivePoint:
    """Read p_k off a foliation expressed in the recovered coordinates.

    Each defining covector, written in the m-basis and reshaped r x n,
    must be rank 1 with one common right factor; that factor is the point.
    """
    xi: tuple[Fraction, ...] | None = None
    rows_m = [basis_inv.apply_row(row) for row in foliation.matrix.entries]
    blocks = [
        [coeffs[a * n : (a + 1) * n] for a in range(r)] for coeffs in rows_m
    ]
    for block in blocks:
        for row in block:
            if any(c != 0 for c in row):
                xi = row
                break
        if xi is not None:
            break
    if xi is None:
        raise DegenerateWebError(
            f"web is not semi-extremal / degenerate: foliation {k} vanishes"
        )
    lead_pos = next(i for i, c in enumerate(xi) if c != 0)
    for block in blocks:
        for row in block:
            # proportional to xi: cross-ratios with the leading entry agree
            factor = row[lead_pos] / xi[lead_pos]
            if any(c != factor * x for c, x in zip(row, xi)):
                raise DegenerateWebError(
                    "web is not semi-extremal / degenerate: foliation "
                    f"{k} is not of the form F(p) in the recovered coordinates"
                )
    return ProjectivePoint(xi)


def recover_normal_form(
    web: ConstantWeb, subweb_indices: Sequence[int] | None = None
) -> AdaptedStructure:
    """Rebuild an adapted structure (basis, points) from a semi-extremal web.

    The construction runs on a subweb of the critical order
    d0 = (r+1)(n-1)+2 — by default foliations 1..d0 — and extends to the
    remaining foliations by expressing their covectors in the recovered
    coordinates.  ``subweb_indices`` overrides the choice (1-based, must
    contain 1..n+1 and have length d0); structures from different
    admissible choices agree up to the basis group C (x) A.
    """
    r, n, d = web.r, web.n, web.d
    if r < 2:
        raise ValueError("recovery requires r >= 2")
    q = q_of(r, n, d)
    if q < n - 1:
        raise ValueError(
            f"recovery requires at least (r+1)(n-1)+2 = {(r + 1) * (n - 1) + 2} foliations"
        )
    web.require_pg()
    d0 = (r + 1) * (n - 1) + 2

    if subweb_indices is None:
        subweb_indices = list(range(1, d0 + 1))
    else:
        subweb_indices = list(subweb_indices)
        if len(subweb_indices) != d0:
            raise ValueError(f"recovery subweb must have exactly {d0} foliations")
        if any(i not in subweb_indices for i in range(1, n + 2)):
            raise ValueError("recovery subweb must contain foliations 1..n+1")

    base = _recover_base_case(take_subweb(web, subweb_indices))
    basis = base.basis
    basis_inv = basis.inverse()

    points: list[ProjectivePoint | None] = [None] * d
    for pos, j in enumerate(subweb_indices):
        points[j - 1] = base.points[pos]
    for k in range(d):
        if points[k] is None:
            points[k] = _point_from_block_matrix(
                basis_inv, web.foliations[k], r, n, k + 1
            )

    for k in range(d):
        rebuilt = foliation_from_point(basis, points[k])
        if rebuilt != web.foliations[k]:
            raise DegenerateWebError(
                "web is not semi-extremal / degenerate: recovered structure "
                f"fails to cut out foliation {k + 1}"
            )

    threshold = 2 * n + 1 if r == 2 else r * (n - 1) + 1
    if d >= threshold and not castelnuovo_rnc_test(points, r):
        # semi-extremality was verified above, which provably places the
        # points on a rational normal curve
        raise InternalContradictionError(
            "recovered points of a semi-extremal web fail the rational-normal-curve test"
        )
    permutation = None if subweb_indices == list(range(1, d0 + 1)) else subweb_indices
    return AdaptedStructure(basis, points, permutation)


class RncFit:
    """A rational normal curve through given points, in fitted coordinates.

    ``transform`` maps the ambient space so the first n+1 points become
    the standard frame; the coordinate-wise inverse (Cremona) map then
    straightens the curve to the line through ``line_a`` and ``line_b``.
    ``parameters[i]`` is the affine parameter of point n+1+i (1-based
    numbering: points n+1..d), pinned so point n+2 gets 0 and point n+3
    gets 1; any other choice differs by a Moebius reparametrization.
    """

    __slots__ = ("transform", "line_a", "line_b", "parameters")

    def __init__(self, transform: Matrix, line_a, line_b, parameters):
        self.transform = transform
        self.line_a = tuple(line_a)
        self.line_b = tuple(line_b)
        self.parameters = tuple(parameters)

    def point_at(self, s) -> ProjectivePoint:
        """The curve point with affine parameter s."""
        s = rational(s)
        z = [(1 - s) * a + s * b for a, b in zip(self.line_a, self.line_b)]
        if any(c == 0 for c in z):
            raise DegenerateWebError(f"parameter {s} hits a frame point")
        y = [1 / c for c in z]
        return ProjectivePoint(self.transform.inverse().apply(y))

    def to_json(self) -> dict:
        return {
            "transform": self.transform.to_json(),
            "line_a": [str(c) for c in self.line_a],
            "line_b": [str(c) for c in self.line_b],
            "parameters": [str(s) for s in self.parameters],
        }


def fit_rnc(points: Sequence[ProjectivePoint]) -> RncFit:
    """Fit a rational normal curve of degree n-1 through >= n+3 points.

    Raises DegenerateWebError("not on a common RNC") when no such curve
    exists, and a general-position error when the first n+1 points do
    not form a projective frame.
    """
    points = list(points)
    if not points:
        raise ValueError("empty point list")
    n = len(points[0].coords)
    d = len(points)
    if d < n + 3:
        raise ValueError(f"fitting needs at least n+3 = {n + 3} points")

    frame = Matrix(list(zip(*(p.coords for p in points[:n]))))
    if not frame.is_invertible():
        raise DegenerateWebError("first n points are not in general position")
    frame_inv = frame.inverse()
    v = frame_inv.apply(points[n].coords)
    if any(c == 0 for c in v):
        raise DegenerateWebError("first n+1 points are not in general position")
    transform = Matrix(
        [[entry / v[i] for entry in frame_inv.row(i)] for i in range(n)]
    )

    # Cremona images of the non-frame points; on a curve through the
    # frame these are collinear
    images = []
    for p in points[n:]:
        y = transform.apply(p.coords)
        if any(c == 0 for c in y):
            raise DegenerateWebError("not on a common RNC")
        images.append(tuple(1 / c for c in y))
    line_a, line_b = images[1], images[2]
    span = Matrix([line_a, line_b])
    if span.rank() != 2:
        raise DegenerateWebError("degenerate: coincident points on the candidate curve")
    if Matrix(images).rank() > 2:
        raise DegenerateWebError("not on a common RNC")

    system = Matrix(list(zip(line_a, line_b)))
    parameters = []
    for image in images:
        solution = system.solve(image)
        if solution is None:
            raise DegenerateWebError("not on a common RNC")
        lam, mu = solution
        if lam + mu == 0:
            raise DegenerateWebError("degenerate parametrization on the fitted line")
        parameters.append(mu / (lam + mu))
    return RncFit(transform, line_a, line_b, parameters)


def akivis_structure(foliations: Sequence[ConstantFoliation]) -> Matrix:
    """The unique covector basis adapted to n+1 foliations in general position.

    Decomposes each defining covector of the last foliation in the joint
    basis of the first n; the block-alpha components are the rows
    m_{a,alpha}.  The first n foliations are then cut by the blocks and
    the last by the row sums.
    """
    foliations = list(foliations)
    if not foliations:
        raise ValueError("empty foliation list")
    r, n = foliations[0].r, foliations[0].n
    if len(foliations) != n + 1:
        raise ValueError(f"exactly n+1 = {n + 1} foliations are required")
    ConstantWeb(r, n, foliations).require_pg()

    joint = Matrix(
        [
            foliations[alpha].matrix.row(b)
            for alpha in range(n)
            for b in range(r)
        ]
    )
    joint_inv = joint.inverse()
    rows = [[None] * n for _ in range(r)]
    for a in range(r):
        coeffs = joint_inv.apply_row(foliations[n].matrix.row(a))
        for alpha in range(n):
            row = [Fraction(0)] * (r * n)
            for b in range(r):
                c = coeffs[alpha * r + b]
                if c != 0:
                    source = foliations[alpha].matrix.row(b)
                    row = [x + c * y for x, y in zip(row, source)]
            rows[a][alpha] = row
    basis = Matrix([rows[a][alpha] for a in range(r) for alpha in range(n)])
    if not basis.is_invertible():
        raise DegenerateWebError(
            "foliations admit no adapted basis: block decomposition is singular"
        )
    return basis


def structures_equivalent(basis1: Matrix, basis2: Matrix, r: int, n: int) -> bool:
    """Whether two adapted bases differ by an element of the structure group.

    The change of basis g with basis2 = g . basis1, rearranged into the
    r^2 x n^2 matrix M[(a,b),(alpha,beta)] = g[(a,alpha),(b,beta)], has
    rank 1 exactly when g is a Kronecker product C (x) A.
    """
    rn = r * n
    for basis in (basis1, basis2):
        if basis.rows != rn or basis.cols != rn:
            raise ValueError(f"bases must be {rn}x{rn}")
        if not basis.is_invertible():
            raise ValueError("bases must be invertible")
    g = basis2 * basis1.inverse()
    rearranged = Matrix(
        [
            [g[a * n + alpha, b * n + beta] for alpha in range(n) for beta in range(n)]
            for a in range(r)
            for b in range(r)
        ]
    )
    return rearranged.rank() == 1
