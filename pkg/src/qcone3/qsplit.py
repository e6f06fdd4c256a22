"""Quaternion-pair view of the algebra and the quadratic cone.

The even subalgebra spanned by (1, e23, e13, e12) is a copy of the
quaternions, and the two central idempotents w+ = (1 + e123)/2 and
w- = (1 - e123)/2 decompose the whole algebra into two such copies:
every element x has a unique representation x = w+ p + w- q.  The
:func:`split`/:func:`join` pair moves between the eight Clifford
coefficients and the two quaternions; the linear system they solve is a
signed permutation up to a factor 1/2, so both directions are closed form
and exact.

The quadratic cone consists of the elements whose trace and norm are real;
in coordinates that is ``x123 = 0`` together with
``x2*x13 - x1*x23 - x3*x12 = 0``, and in the pair picture it is exactly the
couples (p, q) sharing real part and imaginary modulus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .clifford3 import EPS, CliffordElement
from .errors import NotImaginaryUnit, NotInCone, SingularElement


@dataclass(frozen=True, slots=True)
class Quat:
    """Quaternion on the even-subalgebra basis (1, e23, e13, e12).

    Field names carry the basis label they multiply.  The triple
    i = e23, j = -e13, k = e12 satisfies the usual quaternion relations
    under the Clifford product, but all data in this library is stated in
    the (w, a23, a13, a12) coordinates to avoid sign-convention drift.
    """

    w: float = 0.0
    a23: float = 0.0
    a13: float = 0.0
    a12: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "w", float(self.w))
        object.__setattr__(self, "a23", float(self.a23))
        object.__setattr__(self, "a13", float(self.a13))
        object.__setattr__(self, "a12", float(self.a12))

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other: "Quat | float") -> "Quat":
        o = _as_quat(other)
        return Quat(self.w + o.w, self.a23 + o.a23, self.a13 + o.a13, self.a12 + o.a12)

    __radd__ = __add__

    def __sub__(self, other: "Quat | float") -> "Quat":
        o = _as_quat(other)
        return Quat(self.w - o.w, self.a23 - o.a23, self.a13 - o.a13, self.a12 - o.a12)

    def __rsub__(self, other: "Quat | float") -> "Quat":
        return _as_quat(other) - self

    def __neg__(self) -> "Quat":
        return Quat(-self.w, -self.a23, -self.a13, -self.a12)

    def __mul__(self, other: "Quat | float") -> "Quat":
        if isinstance(other, (int, float)):
            s = float(other)
            return Quat(self.w * s, self.a23 * s, self.a13 * s, self.a12 * s)
        # Product table of the even subalgebra under the Clifford product:
        # e23*e13 = -e12, e13*e23 = e12, e23*e12 = e13, e12*e23 = -e13,
        # e13*e12 = -e23, e12*e13 = e23, and each squares to -1.
        x0, x1, x2, x3 = self.w, self.a23, self.a13, self.a12
        y0, y1, y2, y3 = other.w, other.a23, other.a13, other.a12
        return Quat(
            x0 * y0 - x1 * y1 - x2 * y2 - x3 * y3,
            x0 * y1 + x1 * y0 - x2 * y3 + x3 * y2,
            x0 * y2 + x2 * y0 + x1 * y3 - x3 * y1,
            x0 * y3 + x3 * y0 - x1 * y2 + x2 * y1,
        )

    def __rmul__(self, other: float) -> "Quat":
        if isinstance(other, (int, float)):
            return self * other
        return NotImplemented

    def __truediv__(self, scalar: float) -> "Quat":
        return self * (1.0 / float(scalar))

    # -- conjugation, norms, parts ------------------------------------------------

    def conj(self) -> "Quat":
        return Quat(self.w, -self.a23, -self.a13, -self.a12)

    def re(self) -> float:
        return self.w

    def im(self) -> "Quat":
        return Quat(0.0, self.a23, self.a13, self.a12)

    def im_modulus(self) -> float:
        return math.sqrt(self.a23**2 + self.a13**2 + self.a12**2)

    def modulus_sq(self) -> float:
        return self.w**2 + self.a23**2 + self.a13**2 + self.a12**2

    def modulus(self) -> float:
        return math.sqrt(self.modulus_sq())

    def inverse(self, tol: float = EPS) -> "Quat":
        n = self.modulus_sq()
        if math.sqrt(n) <= tol:
            raise SingularElement("quaternion modulus below tolerance")
        return self.conj() / n

    def power(self, n: int, tol: float = EPS) -> "Quat":
        if n < 0:
            return self.inverse(tol).power(-n)
        result = Quat(1.0)
        base = self
        k = n
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_unit_imaginary(self, tol: float = EPS) -> bool:
        sq = self * self
        return (
            abs(sq.w + 1.0) <= tol
            and abs(sq.a23) <= tol
            and abs(sq.a13) <= tol
            and abs(sq.a12) <= tol
        )

    def isclose(self, other: "Quat | float", tol: float = EPS) -> bool:
        o = _as_quat(other)
        return (
            abs(self.w - o.w) <= tol
            and abs(self.a23 - o.a23) <= tol
            and abs(self.a13 - o.a13) <= tol
            and abs(self.a12 - o.a12) <= tol
        )

    def is_zero(self, tol: float = EPS) -> bool:
        return self.modulus() <= tol

    def to_clifford(self) -> CliffordElement:
        return CliffordElement(
            (self.w, 0.0, 0.0, 0.0, self.a12, self.a13, self.a23, 0.0)
        )

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.w, self.a23, self.a13, self.a12)


def _as_quat(value: "Quat | float") -> Quat:
    if isinstance(value, Quat):
        return value
    if isinstance(value, (int, float)):
        return Quat(float(value))
    raise TypeError(f"cannot interpret {type(value).__name__} as a quaternion")


Q_ONE = Quat(1.0)
Q_ZERO = Quat()
Q23 = Quat(0.0, 1.0, 0.0, 0.0)
Q13 = Quat(0.0, 0.0, 1.0, 0.0)
Q12 = Quat(0.0, 0.0, 0.0, 1.0)


class QuatPair(NamedTuple):
    """Ordered couple (p, q) with x = w+ p + w- q."""

    p: Quat
    q: Quat

    def __str__(self) -> str:
        from .grammar import format_quat_pair

        return format_quat_pair(self.p, self.q)


def split(x: CliffordElement) -> QuatPair:
    """Quaternion pair of an element; closed-form inverse of :func:`join`."""
    c = x.coeffs
    p = Quat(c[0] + c[7], c[6] - c[1], c[5] + c[2], c[4] - c[3])
    q = Quat(c[0] - c[7], c[6] + c[1], c[5] - c[2], c[4] + c[3])
    return QuatPair(p, q)


def join(p: "Quat | QuatPair", q: Quat | None = None) -> CliffordElement:
    """Element w+ p + w- q from its quaternion pair."""
    if q is None:
        p, q = p  # type: ignore[misc]
    assert isinstance(p, Quat)
    return CliffordElement(
        (
            0.5 * (p.w + q.w),
            0.5 * (q.a23 - p.a23),
            0.5 * (p.a13 - q.a13),
            0.5 * (q.a12 - p.a12),
            0.5 * (p.a12 + q.a12),
            0.5 * (p.a13 + q.a13),
            0.5 * (p.a23 + q.a23),
            0.5 * (p.w - q.w),
        )
    )


def cone_residuals(x: CliffordElement) -> tuple[float, float]:
    """The two defining quantities of the cone; both vanish on it."""
    c = x.coeffs
    return c[7], c[2] * c[5] - c[1] * c[6] - c[3] * c[4]


def in_cone(x: CliffordElement, tol: float = EPS) -> bool:
    r1, r2 = cone_residuals(x)
    return abs(r1) <= tol and abs(r2) <= tol


def is_sqrt_minus_one(x: CliffordElement, tol: float = EPS) -> bool:
    """True when both split components square to -1 within tol."""
    p, q = split(x)
    return (p * p).isclose(-1.0, tol) and (q * q).isclose(-1.0, tol)


def inverse(x: CliffordElement, tol: float = EPS) -> CliffordElement:
    """Componentwise quaternionic inverse.

    The algebra has zero divisors (each idempotent annihilates the other),
    so inversion fails exactly when a split component has modulus <= tol.
    """
    p, q = split(x)
    return join(p.inverse(tol), q.inverse(tol))


def power(x: CliffordElement, n: int, tol: float = EPS) -> CliffordElement:
    """Integer power via the split; agrees with repeated multiplication."""
    p, q = split(x)
    return join(p.power(n, tol), q.power(n, tol))


class SphereDescriptor(NamedTuple):
    """A quaternionic 2-sphere {Re = center, |Im| = radius}.

    Radius 0 collapses to the single real point ``center``.
    """

    center: float
    radius: float

    def is_point(self, tol: float = EPS) -> bool:
        return abs(self.radius) <= tol

    def sample(self, unit: Quat) -> Quat:
        return Quat(self.center) + unit * self.radius


class ConePoint:
    """A certified point of the quadratic cone with cached slice data.

    Stored as (alpha, beta, i1, i2) with beta >= 0, representing the couple
    (alpha + i1*beta, alpha + i2*beta).  Real points carry ``i1 = i2 =
    None``.  Negative beta on construction is normalized by flipping both
    units, which names the same point.
    """

    __slots__ = ("alpha", "beta", "i1", "i2")

    def __init__(
        self,
        alpha: float,
        beta: float,
        i1: Quat | None,
        i2: Quat | None,
        tol: float = EPS,
    ):
        alpha = float(alpha)
        beta = float(beta)
        if beta < 0.0:
            beta = -beta
            i1 = -i1 if i1 is not None else None
            i2 = -i2 if i2 is not None else None
        if beta <= tol:
            beta = 0.0
            i1 = i2 = None
        else:
            if i1 is None or i2 is None:
                raise NotImaginaryUnit("non-real cone point needs both slice units")
            if not (i1.is_unit_imaginary(tol) and i2.is_unit_imaginary(tol)):
                raise NotImaginaryUnit("slice units must square to -1")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "i1", i1)
        object.__setattr__(self, "i2", i2)

    def __setattr__(self, name, value):
        raise AttributeError("ConePoint is immutable")

    @property
    def is_real(self) -> bool:
        return self.i1 is None

    @property
    def p(self) -> Quat:
        if self.is_real:
            return Quat(self.alpha)
        return Quat(self.alpha) + self.i1 * self.beta

    @property
    def q(self) -> Quat:
        if self.is_real:
            return Quat(self.alpha)
        return Quat(self.alpha) + self.i2 * self.beta

    @property
    def pair(self) -> QuatPair:
        return QuatPair(self.p, self.q)

    @property
    def element(self) -> CliffordElement:
        return join(self.p, self.q)

    @property
    def trace_value(self) -> float:
        return 2.0 * self.alpha

    @property
    def norm_value(self) -> float:
        return self.alpha**2 + self.beta**2

    @classmethod
    def from_element(cls, x: CliffordElement, tol: float = EPS) -> "ConePoint":
        scale = 1.0 + x.max_abs()
        r1, r2 = cone_residuals(x)
        if abs(r1) > tol * scale or abs(r2) > tol * scale * scale:
            raise NotInCone(
                f"cone residuals ({r1:.3e}, {r2:.3e}) exceed tolerance"
            )
        p, q = split(x)
        alpha = 0.5 * (p.re() + q.re())
        beta = 0.5 * (p.im_modulus() + q.im_modulus())
        if beta <= tol * scale:
            return cls(alpha, 0.0, None, None, tol)
        return cls(alpha, beta, p.im() / beta, q.im() / beta, tol)

    def __repr__(self) -> str:
        if self.is_real:
            return f"ConePoint({self.alpha!r})"
        return f"ConePoint({self.alpha!r}, {self.beta!r}, {self.i1!r}, {self.i2!r})"


def cone_point(x: float, y: float, i1: Quat, i2: Quat, tol: float = EPS) -> ConePoint:
    """The cone point with split (x + i1*y, x + i2*y)."""
    if y == 0.0:
        return ConePoint(x, 0.0, None, None, tol)
    if not (i1.is_unit_imaginary(tol) and i2.is_unit_imaginary(tol)):
        raise NotImaginaryUnit("slice units must square to -1")
    return ConePoint(x, y, i1, i2, tol)


def in_ball(point: ConePoint, radius: float) -> bool:
    """Membership in {n(x) < R}; R compares against the squared modulus."""
    if radius <= 0.0:
        raise ValueError("ball radius must be positive")
    return point.norm_value < radius
