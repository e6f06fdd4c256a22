"""Cauchy kernel, slice contours, and numerical reproduction checks.

The quaternionic kernel is ``S(s, q) = (q^2 - 2 Re(s) q + |s|^2)^{-1}
(conj(s) - q)``; it reduces to ``(s - q)^{-1}`` when s and q commute and is
singular exactly when q lies on the 2-sphere of s (same real part and
imaginary modulus).  Joining the two component kernels gives the two-slice
kernel, whose singular set is the corresponding product of spheres.

Contours are circles with real center inside a slice plane, traversed
counterclockwise.  With the parametrization ``s = x0 + r e^{I t}`` the
oriented slice measure is ``r e^{I t} dt``, and the reproduction integral

    value = (1/2 pi) integral S(s, p) * (r e^{I t}) * F(s) dt

recovers polynomial values at any point whose distance from the center is
below the radius, regardless of the point's own slice unit.  All quadrature
is the trapezoid rule on the periodic parameter, which converges
geometrically for these integrands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .clifford3 import EPS, CliffordElement
from .bislice import BiSlicePoly, QuatPoly
from .errors import NotImaginaryUnit, OnSingularSphere, PointOutsideContour
from .qsplit import ConePoint, Quat, Q23, join

DEFAULT_NODES = 512


@dataclass(frozen=True, slots=True)
class SliceContour:
    """Circle x0 + r e^{I t} inside the plane of the unit I."""

    center: float
    radius: float
    unit: Quat
    nodes: int = DEFAULT_NODES

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("contour radius must be positive")
        if self.nodes < 16:
            raise ValueError("at least 16 quadrature nodes required")
        if not self.unit.is_unit_imaginary():
            raise NotImaginaryUnit("contour unit must square to -1")

    def point(self, theta: float) -> Quat:
        return Quat(self.center + self.radius * math.cos(theta)) + self.unit * (
            self.radius * math.sin(theta)
        )

    def phase(self, theta: float) -> Quat:
        """r e^{I theta}, the slice measure density."""
        return Quat(self.radius * math.cos(theta)) + self.unit * (
            self.radius * math.sin(theta)
        )

    def thetas(self) -> list[float]:
        return [2.0 * math.pi * k / self.nodes for k in range(self.nodes)]

    def contains(self, q: Quat) -> bool:
        dist = math.hypot(q.re() - self.center, q.im_modulus())
        return dist < self.radius


def cauchy_kernel_quat(s: Quat, q: Quat, tol: float = EPS) -> Quat:
    """Kernel value; fails on the sphere of s where the modulus vanishes."""
    denom = q * q - q * (2.0 * s.re()) + Quat(s.modulus_sq())
    scale = 1.0 + q.modulus_sq() + s.modulus_sq()
    if denom.modulus() <= tol * scale:
        raise OnSingularSphere(
            f"kernel singular: point on the sphere of Re={s.re():.6g}, "
            f"|Im|={s.im_modulus():.6g}"
        )
    return denom.inverse(tol) * (s.conj() - q)


def cauchy_kernel(s: ConePoint, x: ConePoint, tol: float = EPS) -> CliffordElement:
    """Two-slice kernel, the join of the component kernels."""
    try:
        kp = cauchy_kernel_quat(s.p, x.p, tol)
    except OnSingularSphere as exc:
        raise OnSingularSphere(f"first component: {exc}") from None
    try:
        kq = cauchy_kernel_quat(s.q, x.q, tol)
    except OnSingularSphere as exc:
        raise OnSingularSphere(f"second component: {exc}") from None
    return join(kp, kq)


def contour_integral(contour: SliceContour, fn: Callable[[Quat], Quat]) -> Quat:
    """Trapezoid value of the closed integral of ds f(s).

    The differential of the parametrization is I r e^{I t} dt, kept on the
    left of the integrand.
    """
    step = 2.0 * math.pi / contour.nodes
    acc = Quat()
    for theta in contour.thetas():
        acc = acc + contour.unit * contour.phase(theta) * fn(contour.point(theta))
    return acc * step


def contour_integral_vanishes(
    poly: BiSlicePoly, contour_i: SliceContour, contour_j: SliceContour
) -> tuple[float, float]:
    """Magnitudes of the closed integrals of the two split components."""
    fp, fq = poly.split()
    vi = contour_integral(contour_i, fp.eval)
    vj = contour_integral(contour_j, fq.eval)
    return vi.modulus(), vj.modulus()


def _reconstruct_component(
    poly: QuatPoly, contour: SliceContour, target: Quat, tol: float
) -> Quat:
    acc = Quat()
    for theta in contour.thetas():
        s = contour.point(theta)
        acc = acc + cauchy_kernel_quat(s, target, tol) * contour.phase(theta) * poly.eval(s)
    return acc / contour.nodes


def cauchy_reconstruct(
    poly: BiSlicePoly,
    contour_i: SliceContour,
    contour_j: SliceContour,
    x: "ConePoint | CliffordElement",
    tol: float = EPS,
) -> CliffordElement:
    """Reproduce poly(x) from its values on two slice circles."""
    point = x if isinstance(x, ConePoint) else ConePoint.from_element(x, tol)
    fp, fq = poly.split()
    if not contour_i.contains(point.p):
        raise PointOutsideContour("first component outside its contour disc")
    if not contour_j.contains(point.q):
        raise PointOutsideContour("second component outside its contour disc")
    vp = _reconstruct_component(fp, contour_i, point.p, tol)
    vq = _reconstruct_component(fq, contour_j, point.q, tol)
    return join(vp, vq)


def _unit_or_fallback(primary: Quat | None, *fallbacks: Quat | None) -> Quat:
    for u in (primary, *fallbacks):
        if u is not None:
            return u
    return Q23


def kernel_regularity_residual(
    s: ConePoint, x: ConePoint, h: float = 1e-4, tol: float = EPS
) -> tuple[float, float]:
    """Finite-difference regularity residuals of the kernel.

    Returns (left, right): the left residual applies the two-slice operator
    in the second argument along the slices of x; the right residual applies
    the right-sided operator ``(d_u + d_v (.) I)/2`` in the first argument
    along the slices of s.  Both are O(h^2) away from the singular spheres.
    """
    u1 = _unit_or_fallback(x.i1, s.i1)
    u2 = _unit_or_fallback(x.i2, s.i2)
    su1 = _unit_or_fallback(s.i1, x.i1)
    su2 = _unit_or_fallback(s.i2, x.i2)

    def left_side(sq: Quat, base: float, beta: float, unit: Quat) -> Quat:
        du = (
            cauchy_kernel_quat(sq, Quat(base + h) + unit * beta, tol)
            - cauchy_kernel_quat(sq, Quat(base - h) + unit * beta, tol)
        ) / (2 * h)
        dv = (
            cauchy_kernel_quat(sq, Quat(base) + unit * (beta + h), tol)
            - cauchy_kernel_quat(sq, Quat(base) + unit * (beta - h), tol)
        ) / (2 * h)
        return (du + unit * dv) * 0.5

    left = join(
        left_side(s.p, x.alpha, x.beta, u1), left_side(s.q, x.alpha, x.beta, u2)
    ).magnitude()

    def right_side(target: Quat, base: float, beta: float, unit: Quat) -> Quat:
        du = (
            cauchy_kernel_quat(Quat(base + h) + unit * beta, target, tol)
            - cauchy_kernel_quat(Quat(base - h) + unit * beta, target, tol)
        ) / (2 * h)
        dv = (
            cauchy_kernel_quat(Quat(base) + unit * (beta + h), target, tol)
            - cauchy_kernel_quat(Quat(base) + unit * (beta - h), target, tol)
        ) / (2 * h)
        return (du + dv * unit) * 0.5

    right = join(
        right_side(x.p, s.alpha, s.beta, su1), right_side(x.q, s.alpha, s.beta, su2)
    ).magnitude()
    return left, right
