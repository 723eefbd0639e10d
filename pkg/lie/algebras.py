"""
The commutative 2x2 algebras A = diag(x, y), B = [[x, y], [y, x]] and
C = [[x, y], [-y, x]] with exact rational entries, and the determinant-one
subgroups of B (the hyperbola x^2 - y^2 = 1) and C (the circle x^2 + y^2 = 1).
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Union

from groups.errors import DegreeMismatchError, InvalidElementError

Rational = Union[int, Fraction, str]


class AlgebraKind(str, Enum):
    A = "A"
    B = "B"
    C = "C"


@dataclass(frozen=True)
class TwoByTwo:
    """Element (x, y) of algebra A, B or C."""
    kind: AlgebraKind
    x: Fraction
    y: Fraction

    def __post_init__(self):
        try:
            object.__setattr__(self, "kind", AlgebraKind(self.kind))
        except ValueError:
            raise InvalidElementError(f"Unknown algebra kind {self.kind!r}; use A, B or C") from None
        try:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise InvalidElementError(f"Entries must be exact rationals: {e}") from None

    @classmethod
    def one(cls, kind: Union[str, AlgebraKind]) -> "TwoByTwo":
        return cls(kind, Fraction(1), Fraction(0))

    def matrix(self) -> List[List[Fraction]]:
        x, y = self.x, self.y
        if self.kind is AlgebraKind.A:
            return [[x, Fraction(0)], [Fraction(0), y]]
        if self.kind is AlgebraKind.B:
            return [[x, y], [y, x]]
        return [[x, y], [-y, x]]

    def __add__(self, other: "TwoByTwo") -> "TwoByTwo":
        return algebra_add(self, other)

    def __mul__(self, other: "TwoByTwo") -> "TwoByTwo":
        return algebra_mul(self, other)

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "x": str(self.x), "y": str(self.y)}


def _same_kind(a: TwoByTwo, b: TwoByTwo) -> None:
    if a.kind is not b.kind:
        raise DegreeMismatchError(f"Cannot combine kind {a.kind.value} with kind {b.kind.value}")


def algebra_add(a: TwoByTwo, b: TwoByTwo) -> TwoByTwo:
    _same_kind(a, b)
    return TwoByTwo(a.kind, a.x + b.x, a.y + b.y)


def algebra_mul(a: TwoByTwo, b: TwoByTwo) -> TwoByTwo:
    """Matrix product written in (x, y) coordinates."""
    _same_kind(a, b)
    x, y, u, v = a.x, a.y, b.x, b.y
    if a.kind is AlgebraKind.A:
        return TwoByTwo(a.kind, x * u, y * v)
    if a.kind is AlgebraKind.B:
        return TwoByTwo(a.kind, x * u + y * v, x * v + y * u)
    return TwoByTwo(a.kind, x * u - y * v, x * v + y * u)


def algebra_det(a: TwoByTwo) -> Fraction:
    """A: xy, B: x^2 - y^2, C: x^2 + y^2."""
    if a.kind is AlgebraKind.A:
        return a.x * a.y
    if a.kind is AlgebraKind.B:
        return a.x * a.x - a.y * a.y
    return a.x * a.x + a.y * a.y


def algebra_inverse(a: TwoByTwo) -> TwoByTwo:
    det = algebra_det(a)
    if det == 0:
        raise InvalidElementError(f"{a} is not invertible")
    if a.kind is AlgebraKind.A:
        return TwoByTwo(a.kind, 1 / a.x, 1 / a.y)
    # B and C: adjugate over the determinant
    return TwoByTwo(a.kind, a.x / det, -a.y / det)


def det_kernel_member(a: TwoByTwo) -> bool:
    """det = 1 in B (SO(1,1)) or C (SO(2)); kind A has no such subgroup here."""
    if a.kind is AlgebraKind.A:
        raise InvalidElementError("det_kernel_member is defined for kinds B and C only")
    return algebra_det(a) == 1


def pythagorean_point(m: int, k: int) -> TwoByTwo:
    """Rational point of the unit circle from the parameter t = m/k."""
    t = Fraction(m, k)
    return TwoByTwo(AlgebraKind.C, (1 - t * t) / (1 + t * t), 2 * t / (1 + t * t))


def hyperbolic_point(m: int, k: int) -> TwoByTwo:
    """Rational point of x^2 - y^2 = 1 from the parameter t = m/k, |t| != 1."""
    t = Fraction(m, k)
    if abs(t) == 1:
        raise InvalidElementError("Parameter +-1 has no point on the hyperbola")
    return TwoByTwo(AlgebraKind.B, (1 + t * t) / (1 - t * t), 2 * t / (1 - t * t))
