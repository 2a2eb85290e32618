"""Square roots of I2 as transformations of the cartesian plane.

Each triangular root family factors into two named elementary maps, e.g.

    [[1, b], [0, -1]] = [[1, 0], [0, -1]] [[1, b], [0, 1]]

(reflection in the x-axis after a shear parallel to it).  The general root
with a = rho*cos(phi), b = rho*sin(phi) is an affine-looking sum

    R = R3 R2 R1 + R4,

R1 a clockwise rotation by phi, R2 the x-axis reflection, R3 magnification
by rho, and R4 = [[0, 0], [kappa, 0]] an additive shear with
kappa = (1 - rho^2)/(rho*sin(phi)).

Note the maps the triangular factors perform, (x, y) -> (x + b*y, y) and
(x, y) -> (x, c*x + y), displace each point by an amount proportional to
its other coordinate: shears, not rigid translations, which is what keeps
every factor linear.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DegenerateAngle, InvalidCount, NotAnInvolution, WrongDecomposer
from .mat2 import DEFAULT_TOL, Mat2, Tolerance, Vec2
from .roots import RootFamily, RootTag, classify_involution, is_involution


class TransformKind(enum.Enum):
    REFLECT_X = "reflect_x"                  # (x, y) -> (x, -y)
    REFLECT_Y = "reflect_y"                  # (x, y) -> (-x, y)
    POINT_REFLECT_ORIGIN = "point_reflect_origin"
    SHEAR_X = "shear_x"                      # (x, y) -> (x + b*y, y)
    SHEAR_Y = "shear_y"                      # (x, y) -> (x, c*x + y)
    ROTATE_CLOCKWISE = "rotate_clockwise"
    MAGNIFY = "magnify"
    SHEAR_Y_ADD = "shear_y_add"              # additive term [[0, 0], [kappa, 0]]


@dataclass(frozen=True)
class ElementaryTransform:
    kind: TransformKind
    matrix: Mat2
    param: float | None = None
    additive: bool = False

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind.value, "matrix": self.matrix.to_json_dict(),
                     "additive": self.additive}
        if self.param is not None:
            out["param"] = self.param
        return out


def reflect_x() -> ElementaryTransform:
    return ElementaryTransform(TransformKind.REFLECT_X, Mat2(1.0, 0.0, 0.0, -1.0))


def reflect_y() -> ElementaryTransform:
    return ElementaryTransform(TransformKind.REFLECT_Y, Mat2(-1.0, 0.0, 0.0, 1.0))


def point_reflect_origin() -> ElementaryTransform:
    return ElementaryTransform(TransformKind.POINT_REFLECT_ORIGIN, -Mat2.identity())


def shear_x(b: float) -> ElementaryTransform:
    return ElementaryTransform(TransformKind.SHEAR_X, Mat2(1.0, float(b), 0.0, 1.0), param=float(b))


def shear_y(c: float) -> ElementaryTransform:
    return ElementaryTransform(TransformKind.SHEAR_Y, Mat2(1.0, 0.0, float(c), 1.0), param=float(c))


def rotate_clockwise(phi: float) -> ElementaryTransform:
    phi = float(phi)
    return ElementaryTransform(
        TransformKind.ROTATE_CLOCKWISE,
        Mat2(math.cos(phi), math.sin(phi), -math.sin(phi), math.cos(phi)),
        param=phi,
    )


def magnify(rho: float) -> ElementaryTransform:
    rho = float(rho)
    return ElementaryTransform(TransformKind.MAGNIFY, Mat2.scalar(rho), param=rho)


def shear_y_add(kappa: float) -> ElementaryTransform:
    return ElementaryTransform(
        TransformKind.SHEAR_Y_ADD, Mat2(0.0, 0.0, float(kappa), 0.0),
        param=float(kappa), additive=True,
    )


@dataclass(frozen=True)
class Decomposition:
    """Ordered multiplicative factors plus an optional additive term.

    Factors apply right to left, so recompose() multiplies them in the
    listed order, matching matrix products written left to right.
    """

    factors: tuple[ElementaryTransform, ...]
    additive_part: ElementaryTransform | None = None

    def recompose(self) -> Mat2:
        product = Mat2.identity()
        for factor in self.factors:
            product = product @ factor.matrix
        if self.additive_part is not None:
            product = product + self.additive_part.matrix
        return product

    def apply(self, p: Vec2) -> Vec2:
        return self.recompose().apply(p)

    def to_json_dict(self) -> dict:
        out: dict = {"factors": [f.to_json_dict() for f in self.factors]}
        if self.additive_part is not None:
            out["additive_part"] = self.additive_part.to_json_dict()
        return out


def apply(transform: Mat2, p: Vec2) -> Vec2:
    """The plane map (x, y) -> (a*x + b*y, c*x + d*y)."""
    return transform.apply(p)


def decompose_case(family: RootFamily) -> Decomposition:
    """Factor a scalar or triangular root into its named elementary maps."""
    tag = family.tag
    if tag is RootTag.IDENTITY:
        return Decomposition((magnify(1.0),))
    if tag is RootTag.NEG_IDENTITY:
        return Decomposition((point_reflect_origin(),))
    if tag is RootTag.UPPER_B_PLUS_MINUS:
        return Decomposition((reflect_x(), shear_x(family.b)))
    if tag is RootTag.UPPER_B_MINUS_PLUS:
        return Decomposition((shear_x(family.b), reflect_y()))
    if tag is RootTag.LOWER_C_PLUS_MINUS:
        return Decomposition((shear_y(family.c), reflect_x()))
    if tag is RootTag.LOWER_C_MINUS_PLUS:
        return Decomposition((reflect_y(), shear_y(family.c)))
    raise WrongDecomposer("general roots decompose via decompose_general")


def decompose_general(m: Mat2, tol: Tolerance = DEFAULT_TOL) -> Decomposition:
    """Magnified rotation-reflection plus additive shear for a general root.

    Requires an involution with b != 0 (sin(phi) away from zero); b ~ 0
    roots are triangular and belong to decompose_case.  The additive
    coefficient (1 - rho^2)/(rho*sin(phi)) is evaluated as the residual
    c - rho*sin(phi), which is the same number without the cancellation.
    """
    if not is_involution(m, tol):
        raise NotAnInvolution(f"{m} does not square to I2")
    if abs(m.b) <= tol.exact_tol:
        raise DegenerateAngle("sin(phi) ~ 0: decompose as a triangular case")
    rho = math.hypot(m.a, m.b)
    phi = math.atan2(m.b, m.a)
    kappa = m.c - rho * math.sin(phi)
    return Decomposition(
        (magnify(rho), reflect_x(), rotate_clockwise(phi)),
        additive_part=shear_y_add(kappa),
    )


def decompose(m: Mat2, tol: Tolerance = DEFAULT_TOL) -> Decomposition:
    """Decompose any square root of I2 per its family classification."""
    family = classify_involution(m, tol)
    if family.tag is RootTag.GENERAL:
        return decompose_general(m, tol)
    return decompose_case(family)


def orbit(transform: Mat2, p: Vec2, steps: int) -> list[Vec2]:
    """[p, Tp, T^2 p, ...] with steps applications of the map."""
    if steps < 1:
        raise InvalidCount(f"need steps >= 1, got {steps}")
    points = [p]
    for _ in range(steps):
        points.append(transform.apply(points[-1]))
    return points
