"""Polynomials over the algebra with right coefficients and their calculus.

A polynomial here is a finite coefficient sequence a0..ad representing
``sum x^n a_n`` (variable powers on the left).  Splitting every coefficient
turns such a polynomial into a pair of quaternionic polynomials, and
evaluation, the star product, the regular conjugate and the symmetrization
all descend to the components.

The star product of two polynomials is coefficient convolution with the
noncommutative rule ``c_k = sum_{i+j=k} a_i b_j``.  Where the left factor is
invertible at a point the product also has the pointwise form
``f(x) * g(f(x)^{-1} x f(x))``; both forms are implemented and cross-checked
in the tests.
"""

from __future__ import annotations

from typing import Callable, Iterable, NamedTuple, Sequence

from .clifford3 import EPS, CliffordElement, ZERO, scalar
from .errors import NotImaginaryUnit, NotInvertibleAtPoint, NotOrthogonal, RealPoint
from .qsplit import ConePoint, Quat, QuatPair, join, split


class QuatPoly:
    """Quaternionic polynomial with right coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Quat | float]):
        tup = tuple(c if isinstance(c, Quat) else Quat(float(c)) for c in coeffs)
        object.__setattr__(self, "coeffs", tup if tup else (Quat(),))

    def __setattr__(self, name, value):
        raise AttributeError("QuatPoly is immutable")

    def degree(self, tol: float = EPS) -> int:
        for k in range(len(self.coeffs) - 1, -1, -1):
            if not self.coeffs[k].is_zero(tol):
                return k
        return -1

    def eval(self, p: Quat) -> Quat:
        # Horner nesting keeps the coefficients on the right:
        # a0 + p(a1 + p(a2 + ...)).
        acc = Quat()
        for a in reversed(self.coeffs):
            acc = p * acc + a
        return acc

    def star(self, other: "QuatPoly") -> "QuatPoly":
        out = [Quat() for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero(0.0):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return QuatPoly(out)

    def conj_coeffs(self) -> "QuatPoly":
        return QuatPoly(a.conj() for a in self.coeffs)

    def symmetrization(self) -> "QuatPoly":
        return self.star(self.conj_coeffs())

    def scale(self, s: float) -> "QuatPoly":
        return QuatPoly(a * s for a in self.coeffs)

    def max_coeff(self) -> float:
        return max(a.modulus() for a in self.coeffs)

    def trimmed(self, tol: float = EPS) -> "QuatPoly":
        d = self.degree(tol)
        return QuatPoly(self.coeffs[: d + 1]) if d >= 0 else QuatPoly((Quat(),))

    def __repr__(self) -> str:
        return f"QuatPoly({self.coeffs!r})"

    @classmethod
    def from_factors(cls, constants: Sequence[Quat]) -> "QuatPoly":
        """Expand (p - c1)*(p - c2)*... by convolution."""
        poly = cls((Quat(1.0),))
        for c in constants:
            poly = poly.star(cls((-c, Quat(1.0))))
        return poly


class BiSlicePoly:
    """Polynomial over the full algebra with right coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[CliffordElement | float]):
        tup = tuple(
            c if isinstance(c, CliffordElement) else scalar(float(c)) for c in coeffs
        )
        object.__setattr__(self, "coeffs", tup if tup else (ZERO,))

    def __setattr__(self, name, value):
        raise AttributeError("BiSlicePoly is immutable")

    def degree(self, tol: float = EPS) -> int:
        for k in range(len(self.coeffs) - 1, -1, -1):
            if not self.coeffs[k].is_zero(tol):
                return k
        return -1

    def split(self) -> tuple[QuatPoly, QuatPoly]:
        pairs = [split(a) for a in self.coeffs]
        return QuatPoly(p for p, _ in pairs), QuatPoly(q for _, q in pairs)

    def eval(self, x: "CliffordElement | ConePoint") -> CliffordElement:
        p, q = _point_pair(x)
        fp, fq = self.split()
        return join(fp.eval(p), fq.eval(q))

    def max_coeff(self) -> float:
        return max(a.magnitude() for a in self.coeffs)

    def __repr__(self) -> str:
        return f"BiSlicePoly({self.coeffs!r})"

    @classmethod
    def from_factors(
        cls, constants: Sequence[CliffordElement], lead: float = 1.0
    ) -> "BiSlicePoly":
        """Expand lead*(x - c1)*(x - c2)*... by convolution."""
        poly = cls((scalar(lead),))
        for c in constants:
            poly = star_mul(poly, cls((-c, scalar(1.0))))
        return poly

    @classmethod
    def monomial(cls, n: int, coeff: CliffordElement | float = 1.0) -> "BiSlicePoly":
        c = coeff if isinstance(coeff, CliffordElement) else scalar(float(coeff))
        return cls([ZERO] * n + [c])


def _point_pair(x: "CliffordElement | ConePoint") -> QuatPair:
    if isinstance(x, ConePoint):
        return x.pair
    return split(x)


def split_poly(poly: BiSlicePoly) -> tuple[QuatPoly, QuatPoly]:
    return poly.split()


def eval_poly(poly: BiSlicePoly, x: "CliffordElement | ConePoint") -> CliffordElement:
    return poly.eval(x)


def star_mul(f: BiSlicePoly, g: BiSlicePoly) -> BiSlicePoly:
    """Coefficient convolution c_k = sum_{i+j=k} a_i b_j."""
    out: list[CliffordElement] = [ZERO] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a.is_zero(0.0):
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] = out[i + j] + a * b
    return BiSlicePoly(out)


def star_mul_pointwise(
    f: BiSlicePoly,
    g: BiSlicePoly,
    x: "CliffordElement | ConePoint",
    tol: float = EPS,
) -> CliffordElement:
    """Pointwise star product f(x) g(f(x)^{-1} x f(x)).

    Requires f(x) to be invertible componentwise.  When both components of
    f(x) vanish the product vanishes too and 0 is returned; when exactly one
    vanishes the conjugation is undefined and the call fails.
    """
    p, q = _point_pair(x)
    fp, fq = f.split()
    gp, gq = g.split()
    a = fp.eval(p)
    b = fq.eval(q)
    a_zero = a.modulus() <= tol
    b_zero = b.modulus() <= tol
    if a_zero and b_zero:
        return ZERO
    if a_zero or b_zero:
        raise NotInvertibleAtPoint(
            "left factor has exactly one vanishing split component"
        )
    ainv = a.inverse(tol)
    binv = b.inverse(tol)
    return join(a * gp.eval(ainv * p * a), b * gq.eval(binv * q * b))


def regular_conjugate(poly: BiSlicePoly) -> BiSlicePoly:
    """Coefficientwise conjugation; splits to the componentwise conjugates."""
    return BiSlicePoly(a.conj() for a in poly.coeffs)


def symmetrization(poly: BiSlicePoly) -> BiSlicePoly:
    return star_mul(poly, regular_conjugate(poly))


class SliceSamples(NamedTuple):
    """Component values on two sampling slices, for the representation formula.

    ``f_plus``/``f_minus`` are the first component at alpha +/- w1*beta and
    ``g_plus``/``g_minus`` the second component at alpha +/- w2*beta.
    """

    f_plus: Quat
    f_minus: Quat
    g_plus: Quat
    g_minus: Quat
    w1: Quat
    w2: Quat


def sample_slice_values(
    poly: BiSlicePoly, x: ConePoint, w1: Quat, w2: Quat, tol: float = EPS
) -> SliceSamples:
    """Evaluate the split components of ``poly`` on the slices of w1, w2."""
    if not (w1.is_unit_imaginary(tol) and w2.is_unit_imaginary(tol)):
        raise NotImaginaryUnit("sampling units must square to -1")
    fp, fq = poly.split()
    a, b = x.alpha, x.beta
    return SliceSamples(
        fp.eval(Quat(a) + w1 * b),
        fp.eval(Quat(a) - w1 * b),
        fq.eval(Quat(a) + w2 * b),
        fq.eval(Quat(a) - w2 * b),
        w1,
        w2,
    )


def representation_formula(
    samples: SliceSamples, x: ConePoint, tol: float = EPS
) -> CliffordElement:
    """Rebuild the value at ``x`` from two-point samples on arbitrary slices.

    Componentwise this is the slice-function reconstruction
    ``(F+ + F-)/2 - (I W / 2)(F+ - F-)``: the even part is slice
    independent and the odd part transports from the sampling unit W to the
    target unit I.  At real points the odd parts vanish and the even parts
    pass through unchanged.
    """
    if not (samples.w1.is_unit_imaginary(tol) and samples.w2.is_unit_imaginary(tol)):
        raise NotImaginaryUnit("sampling units must square to -1")
    even_p = (samples.f_plus + samples.f_minus) * 0.5
    even_q = (samples.g_plus + samples.g_minus) * 0.5
    if x.is_real:
        return join(even_p, even_q)
    odd_p = (samples.f_plus - samples.f_minus) * 0.5
    odd_q = (samples.g_plus - samples.g_minus) * 0.5
    val_p = even_p - x.i1 * samples.w1 * odd_p
    val_q = even_q - x.i2 * samples.w2 * odd_q
    return join(val_p, val_q)


def _inner(u: Quat, v: Quat) -> float:
    return u.w * v.w + u.a23 * v.a23 + u.a13 * v.a13 + u.a12 * v.a12


def splitting_projection(
    poly: QuatPoly, i: Quat, k: Quat, tol: float = EPS
) -> tuple[tuple[complex, ...], tuple[complex, ...]]:
    """Decompose the restriction to the plane of ``i`` as A + B*k.

    ``i`` and ``k`` must be orthogonal imaginary units.  Each coefficient is
    projected onto span{1, i} and span{k, i*k}; the two complex coefficient
    sequences A, B are holomorphic data on that plane and reassemble the
    restriction exactly.
    """
    if not (i.is_unit_imaginary(tol) and k.is_unit_imaginary(tol)):
        raise NotImaginaryUnit("plane units must square to -1")
    if abs(_inner(i, k)) > tol:
        raise NotOrthogonal("plane units must be perpendicular")
    ik = i * k
    a = tuple(complex(_inner(c, Quat(1.0)), _inner(c, i)) for c in poly.coeffs)
    b = tuple(complex(_inner(c, k), _inner(c, ik)) for c in poly.coeffs)
    return a, b


def complex_on_slice(z: complex, unit: Quat) -> Quat:
    """Embed a complex number into the plane spanned by 1 and ``unit``."""
    return Quat(z.real) + unit * z.imag


def reassemble_splitting(
    a: Sequence[complex], b: Sequence[complex], i: Quat, k: Quat, z: complex
) -> Quat:
    """Evaluate A(z) + B(z)*k back in the quaternions; test oracle for the
    splitting projection."""
    az = sum((z**n) * c for n, c in enumerate(a))
    bz = sum((z**n) * c for n, c in enumerate(b))
    return complex_on_slice(az, i) + complex_on_slice(bz, i) * k


SliceMap = Callable[[float, float], CliffordElement]


def slice_map(target: "BiSlicePoly | Callable", x: ConePoint) -> SliceMap:
    """The restriction (u, v) -> value along the slices of ``x``.

    Accepts a polynomial (evaluated through its split) or a callable taking
    a CliffordElement.
    """
    if x.is_real:
        raise RealPoint("slice restriction needs a non-real base point")
    i1, i2 = x.i1, x.i2
    if isinstance(target, BiSlicePoly):
        fp, fq = target.split()

        def phi(u: float, v: float) -> CliffordElement:
            return join(fp.eval(Quat(u) + i1 * v), fq.eval(Quat(u) + i2 * v))

        return phi

    def phi_fn(u: float, v: float) -> CliffordElement:
        return target(join(Quat(u) + i1 * v, Quat(u) + i2 * v))

    return phi_fn


def dbar_residual(
    target: "BiSlicePoly | Callable", x: ConePoint, h: float = 1e-5
) -> float:
    """Finite-difference residual of the two-slice regularity operator.

    Applies (1/2)[w+ (d_u + I d_v) + w- (d_u + J d_v)] with central
    differences of step h along the slices of ``x``; O(h^2) for regular
    targets, O(1) for maps such as pointwise conjugation.
    """
    phi = slice_map(target, x)
    u, v = x.alpha, x.beta
    du = (phi(u + h, v) - phi(u - h, v)) / (2.0 * h)
    dv = (phi(u, v + h) - phi(u, v - h)) / (2.0 * h)
    pu, qu = split(du)
    pv, qv = split(dv)
    res_p = (pu + x.i1 * pv) * 0.5
    res_q = (qu + x.i2 * qv) * 0.5
    return join(res_p, res_q).magnitude()


def dbar_residual_single(
    target: "BiSlicePoly | Callable", x: ConePoint, h: float = 1e-5
) -> float:
    """Residual of the one-operator form (1/2)(d_u + K d_v), K = join(I, J).

    Algebraically identical to :func:`dbar_residual`; computed through full
    Clifford products as an independent expression tree.
    """
    phi = slice_map(target, x)
    u, v = x.alpha, x.beta
    du = (phi(u + h, v) - phi(u - h, v)) / (2.0 * h)
    dv = (phi(u, v + h) - phi(u, v - h)) / (2.0 * h)
    k = join(x.i1, x.i2)
    return ((du + k * dv) * 0.5).magnitude()
