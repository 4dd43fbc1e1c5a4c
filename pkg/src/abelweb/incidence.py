"""Tangent webs of incidence varieties of plane arrangements.

Fix homogeneous coordinates [eta_1 : .. : eta_r : xi_1 : .. : xi_n] on
P^(r+n-1) and the base (n-1)-plane {eta = 0}.  An arrangement of d
r-planes, each given as the kernel of n-1 independent linear forms,
meets the base plane in d points (when transverse); the web of all
(n-1)-planes through the arrangement is, to first order at the base
plane, the constant web F(p_1), ..., F(p_d) in the chart coordinates
x_{a,alpha} with the identity covector basis.
"""

from __future__ import annotations

from typing import Sequence

from .errors import DegenerateWebError
from .exactalg import Matrix
from .webcore import ConstantWeb
from .grassmann import ProjectivePoint, foliation_from_point


class PlaneArrangement:
    """d r-planes in P^(r+n-1), each cut out by n-1 independent forms."""

    __slots__ = ("r", "n", "planes")

    def __init__(self, r: int, n: int, planes: Sequence[Matrix]):
        if r < 1 or n < 2:
            raise ValueError("arrangement type requires r >= 1, n >= 2")
        planes = tuple(planes)
        if not planes:
            raise ValueError("an arrangement needs at least one plane")
        for plane in planes:
            if plane.rows != n - 1 or plane.cols != r + n:
                raise ValueError(f"each plane needs a {n - 1}x{r + n} form matrix")
            if plane.rank() != n - 1:
                raise ValueError("plane forms are not independent")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "planes", planes)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("PlaneArrangement is immutable")

    @property
    def d(self) -> int:
        return len(self.planes)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "planes": [plane.to_json() for plane in self.planes],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PlaneArrangement":
        return cls(
            int(data["r"]),
            int(data["n"]),
            [Matrix.from_json(rows) for rows in data["planes"]],
        )


def intersect_with_base_plane(arr: PlaneArrangement) -> list[ProjectivePoint]:
    """The d intersection points with {eta = 0}, as points of P^(n-1).

    Each plane must meet the base plane transversally in a single point;
    anything else (empty, positive-dimensional, or a plane containing
    the base plane) is rejected.
    """
    r, n = arr.r, arr.n
    eta_rows = [
        [1 if j == a else 0 for j in range(r + n)] for a in range(r)
    ]
    points = []
    for idx, plane in enumerate(arr.planes):
        stacked = Matrix(list(plane.entries) + eta_rows)
        kernel = stacked.kernel_basis()
        if len(kernel) != 1:
            raise DegenerateWebError(
                "arrangement not in general position w.r.t. base plane: "
                f"plane {idx + 1} meets it in a {len(kernel)}-dimensional set"
            )
        points.append(ProjectivePoint(kernel[0][r:]))
    return points


def tangent_incidence_web(arr: PlaneArrangement) -> ConstantWeb:
    """The constant web F(p_j) at the intersection points, identity basis."""
    points = intersect_with_base_plane(arr)
    if len(set(points)) != len(points):
        raise DegenerateWebError(
            "arrangement meets base plane in fewer than d points"
        )
    basis = Matrix.identity(arr.r * arr.n)
    return ConstantWeb(
        arr.r, arr.n, [foliation_from_point(basis, p) for p in points]
    )
