"""Zero sets of quadratic polynomials over the algebra, and multiplicities.

A quadratic (x - alpha)*(x - beta) splits into the two quaternionic
quadratics (p - a1)*(p - b1) and (q - a2)*(q - b2).  Each side has one of
three zero shapes:

* the whole 2-sphere through a, when b = conj(a) (collapsing to the single
  real point a when a is real);
* the single point a, when b lies on the sphere of a but is not conj(a);
* the point pair {a, (b - conj(a))^{-1} b (b - conj(a))}, when a and b lie
  on different spheres.

The zero set of the joined quadratic is the product of the two component
sets, reported structurally (a shape per side) and flattened into pairs.
Case tags follow the shape combination: 1.1/1.2 sphere-sphere (same or
different sphere data), 2 sphere-point, 3 sphere-pair, 4 pair-pair,
5 point-point, 6 point-pair, with mirrored configurations sharing a tag.
Predicate ties resolve toward the more degenerate shape, which stays a
correct zero description under perturbation.

Multiplicity counting works on fully factored input.  Per component and per
base sphere (center x, radius y > 0) the engine first divides out the
largest power of the central real quadratic (t - x)^2 + y^2, then strips
left roots on the sphere one at a time.  With n, m the spherical exponents
of the two sides and the point counts added per side, the four reported
figures are 2n+2m (carried by the sphere pair), the point-pair total, 2n +
q-side points, and p-side points + 2m.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bislice import BiSlicePoly, QuatPoly
from .clifford3 import EPS, CliffordElement
from .errors import UnfactoredInput
from .qsplit import ConePoint, Quat, SphereDescriptor, split


def same_sphere(a: Quat, b: Quat, tol: float = EPS) -> bool:
    scale = 1.0 + max(a.modulus(), b.modulus())
    return (
        abs(a.re() - b.re()) <= tol * scale
        and abs(a.im_modulus() - b.im_modulus()) <= tol * scale
    )


def is_conjugate_pair(a: Quat, b: Quat, tol: float = EPS) -> bool:
    scale = 1.0 + max(a.modulus(), b.modulus())
    return (b - a.conj()).modulus() <= tol * scale


@dataclass(frozen=True, slots=True)
class QuatQuadraticZeros:
    """Zero shape of one quaternionic quadratic (p - a)*(p - b)."""

    kind: str  # "sphere" | "point" | "two_points"
    sphere: SphereDescriptor | None
    points: tuple[Quat, ...]

    def parts(self) -> tuple:
        """Sphere descriptor or the point list, for pairing."""
        if self.kind == "sphere":
            return (self.sphere,)
        return self.points

    def sample(self, units: Sequence[Quat]) -> list[Quat]:
        """Concrete representatives: sphere shapes expand over the units."""
        if self.kind == "sphere":
            return [self.sphere.sample(u) for u in units]
        return list(self.points)


def conjugate_by(value: Quat, by: Quat, tol: float = EPS) -> Quat:
    return by.inverse(tol) * value * by


def quat_quadratic_zeros(a: Quat, b: Quat, tol: float = EPS) -> QuatQuadraticZeros:
    """Classify the zeros of (p - a)*(p - b).

    The left constant a is always a zero.  The shape depends on whether b
    is the conjugate of a (sphere), shares its sphere (double point), or
    lies elsewhere (second point conjugate to b).
    """
    if is_conjugate_pair(a, b, tol):
        sphere = SphereDescriptor(a.re(), a.im_modulus())
        if sphere.is_point(tol):
            sphere = SphereDescriptor(a.re(), 0.0)
        return QuatQuadraticZeros("sphere", sphere, ())
    if same_sphere(a, b, tol):
        return QuatQuadraticZeros("point", None, (a,))
    mover = b - a.conj()
    second = conjugate_by(b, mover, tol)
    return QuatQuadraticZeros("two_points", None, (a, second))


def split_factors(
    alpha: CliffordElement, beta: CliffordElement
) -> tuple[tuple[Quat, Quat], tuple[Quat, Quat]]:
    """Component constants ((a1, b1), (a2, b2)) of the two linear factors."""
    a1, a2 = split(alpha)
    b1, b2 = split(beta)
    return (a1, b1), (a2, b2)


@dataclass(frozen=True, slots=True)
class ZeroSetQuadratic:
    """Classified zero set of (x - alpha)*(x - beta)."""

    case: str
    side_p: QuatQuadraticZeros
    side_q: QuatQuadraticZeros
    pairs: tuple[tuple[object, object], ...]

    def sample_elements(self, units: Sequence[Quat]) -> list[CliffordElement]:
        """Joined representatives of every reported zero, spheres sampled."""
        from .qsplit import join

        out = []
        for ps in self.side_p.sample(units):
            for qs in self.side_q.sample(units):
                out.append(join(ps, qs))
        return out


def _case_tag(side_p: QuatQuadraticZeros, side_q: QuatQuadraticZeros, tol: float) -> str:
    kinds = {side_p.kind, side_q.kind}
    if kinds == {"sphere"}:
        sp, sq = side_p.sphere, side_q.sphere
        same = (
            abs(sp.center - sq.center) <= tol * (1 + abs(sp.center) + abs(sq.center))
            and abs(sp.radius - sq.radius) <= tol * (1 + sp.radius + sq.radius)
        )
        return "1.1" if same else "1.2"
    if kinds == {"sphere", "point"}:
        return "2"
    if kinds == {"sphere", "two_points"}:
        return "3"
    if kinds == {"two_points"}:
        return "4"
    if kinds == {"point"}:
        return "5"
    return "6"  # point with two_points


def classify_split(
    a1: Quat, b1: Quat, a2: Quat, b2: Quat, tol: float = EPS
) -> ZeroSetQuadratic:
    """Classification from the component factor constants."""
    side_p = quat_quadratic_zeros(a1, b1, tol)
    side_q = quat_quadratic_zeros(a2, b2, tol)
    pairs = tuple((ps, qs) for ps in side_p.parts() for qs in side_q.parts())
    return ZeroSetQuadratic(_case_tag(side_p, side_q, tol), side_p, side_q, pairs)


def classify_quadratic(
    alpha: CliffordElement, beta: CliffordElement, tol: float = EPS
) -> ZeroSetQuadratic:
    """Zero set of (x - alpha)*(x - beta) for any alpha, beta in the algebra.

    The factor constants need not lie in the cone; the zero pairs are
    reported in the two-component picture and need not be cone points
    either (a sphere pair with different radii, for instance).
    """
    (a1, b1), (a2, b2) = split_factors(alpha, beta)
    return classify_split(a1, b1, a2, b2, tol)


# -- multiplicity engine -----------------------------------------------------------


def left_divide_linear(poly: QuatPoly, root: Quat) -> tuple[QuatPoly, Quat]:
    """Write poly = (p - root) * quotient + remainder (remainder constant)."""
    d = poly.degree(0.0)
    if d < 1:
        return QuatPoly((Quat(),)), poly.coeffs[0] if poly.coeffs else Quat()
    q = [Quat()] * d
    q[d - 1] = poly.coeffs[d]
    for k in range(d - 1, 0, -1):
        q[k - 1] = poly.coeffs[k] + root * q[k]
    remainder = poly.coeffs[0] + root * q[0]
    return QuatPoly(q), remainder


def divide_real_quadratic(
    poly: QuatPoly, base: SphereDescriptor, tol: float = EPS
) -> QuatPoly | None:
    """Exact quotient by (t - center)^2 + radius^2, or None if not divisible.

    The divisor has real coefficients, so it is central and ordinary long
    division applies.
    """
    d = poly.degree(tol)
    if d < 2:
        return None
    s1 = -2.0 * base.center
    s0 = base.center**2 + base.radius**2
    work = list(poly.coeffs[: d + 1])
    q = [Quat()] * (d - 1)
    for k in range(d, 1, -1):
        qk = work[k]
        q[k - 2] = qk
        work[k - 1] = work[k - 1] - qk * s1
        work[k - 2] = work[k - 2] - qk * s0
    scale = 1.0 + poly.max_coeff()
    if work[0].modulus() <= tol * scale and work[1].modulus() <= tol * scale:
        return QuatPoly(q)
    return None


def root_on_sphere(
    poly: QuatPoly, base: SphereDescriptor, tol: float = EPS
) -> Quat | None:
    """A zero of poly on the given sphere, found through the restriction.

    On the sphere, powers of p = x + I y are C_k + I D_k with (C_k, D_k)
    the real and imaginary parts of (x + iy)^k, so the value is C + I D
    with C, D independent of I.  A zero exists iff -C D^{-1} is a unit
    imaginary, and then equals x + (-C D^{-1}) y.
    """
    d = poly.degree(tol)
    if d < 0:
        return None
    z = complex(base.center, base.radius)
    c_sum = Quat()
    d_sum = Quat()
    zn = complex(1.0, 0.0)
    for k in range(d + 1):
        coeff = poly.coeffs[k]
        if zn.real != 0.0:
            c_sum = c_sum + coeff * zn.real
        if zn.imag != 0.0:
            d_sum = d_sum + coeff * zn.imag
        zn *= z
    scale = 1.0 + poly.max_coeff() * max(1.0, abs(z)) ** max(d, 1)
    if d_sum.modulus() <= tol * scale:
        return None
    unit = -(c_sum * d_sum.inverse(tol))
    if not unit.is_unit_imaginary(100 * tol):
        return None
    root = Quat(base.center) + unit * base.radius
    if poly.eval(root).modulus() > 100 * tol * scale:
        return None
    return root


def _real_root_count(poly: QuatPoly, x: float, tol: float) -> tuple[int, QuatPoly]:
    count = 0
    current = poly
    while current.degree(tol) >= 1:
        scale = 1.0 + current.max_coeff() * max(1.0, abs(x)) ** current.degree(tol)
        if current.eval(Quat(x)).modulus() > 100 * tol * scale:
            break
        current, _ = left_divide_linear(current, Quat(x))
        count += 1
    return count, current


def sphere_zero_structure(
    poly: QuatPoly, base: SphereDescriptor, tol: float = EPS
) -> tuple[int, tuple[Quat, ...]]:
    """(spherical exponent, extracted point roots) of poly at one base.

    For a real base (radius 0) the spherical exponent is zero and plain
    real-root extraction supplies the point count.
    """
    if base.is_point(tol):
        count, _ = _real_root_count(poly, base.center, tol)
        return 0, tuple(Quat(base.center) for _ in range(count))
    power = 0
    current = poly
    while True:
        reduced = divide_real_quadratic(current, base, tol)
        if reduced is None:
            break
        current = reduced
        power += 1
    points: list[Quat] = []
    while True:
        root = root_on_sphere(current, base, tol)
        if root is None:
            break
        current, _ = left_divide_linear(current, root)
        points.append(root)
    return power, tuple(points)


@dataclass(frozen=True, slots=True)
class MultiplicityReport:
    """The four multiplicity figures of a factored polynomial at one base."""

    base: SphereDescriptor
    four_dimensional: int
    isolated: int
    first_kind: int
    second_kind: int
    p_spherical_power: int
    q_spherical_power: int
    p_points: tuple[Quat, ...]
    q_points: tuple[Quat, ...]

    @property
    def isolated_location(self) -> tuple[Quat | None, Quat | None]:
        return (
            self.p_points[0] if self.p_points else None,
            self.q_points[0] if self.q_points else None,
        )


def multiplicities(
    factors: Sequence[CliffordElement],
    base: SphereDescriptor,
    tol: float = EPS,
) -> MultiplicityReport:
    """Multiplicity figures of prod (x - factor_k) at the given base.

    With n, m the spherical exponents of the two component polynomials and
    the per-side point-root counts on the base sphere, reports 2n+2m
    (four-dimensional spherical), the point total (isolated), 2n + q-points
    (first kind) and p-points + 2m (second kind).
    """
    if not factors:
        raise UnfactoredInput("need at least one linear factor")
    fp = QuatPoly.from_factors([split(c).p for c in factors])
    fq = QuatPoly.from_factors([split(c).q for c in factors])
    n_sph, p_points = sphere_zero_structure(fp, base, tol)
    m_sph, q_points = sphere_zero_structure(fq, base, tol)
    return MultiplicityReport(
        base=base,
        four_dimensional=2 * n_sph + 2 * m_sph,
        isolated=len(p_points) + len(q_points),
        first_kind=2 * n_sph + len(q_points),
        second_kind=len(p_points) + 2 * m_sph,
        p_spherical_power=n_sph,
        q_spherical_power=m_sph,
        p_points=p_points,
        q_points=q_points,
    )


def candidate_bases(constants: Sequence[Quat], tol: float = EPS) -> list[SphereDescriptor]:
    """Distinct sphere data of the factor constants (zeros live on these)."""
    bases: list[SphereDescriptor] = []
    for c in constants:
        cand = SphereDescriptor(c.re(), c.im_modulus())
        if cand.radius <= tol:
            cand = SphereDescriptor(c.re(), 0.0)
        for known in bases:
            if (
                abs(known.center - cand.center) <= tol * (1 + abs(cand.center))
                and abs(known.radius - cand.radius) <= tol * (1 + cand.radius)
            ):
                break
        else:
            bases.append(cand)
    return bases


def component_multiplicity_total(
    constants: Sequence[Quat], tol: float = EPS
) -> int:
    """Sum over candidate bases of 2*spherical + point counts for one side."""
    poly = QuatPoly.from_factors(list(constants))
    total = 0
    for base in candidate_bases(constants, tol):
        n_sph, points = sphere_zero_structure(poly, base, tol)
        total += 2 * n_sph + len(points)
    return total


def fta_witness(factors: Sequence[CliffordElement], tol: float = EPS) -> ConePoint:
    """A root of prod (x - factor_k): the leading constant is a left root."""
    if not factors:
        raise UnfactoredInput("need at least one linear factor")
    return ConePoint.from_element(factors[0], tol)


def verify_zeros(
    poly: BiSlicePoly,
    zero_set: ZeroSetQuadratic,
    units: Sequence[Quat],
    tol: float = 1e-9,
) -> float:
    """Largest |poly| over sampled representatives of the zero set."""
    worst = 0.0
    for x in zero_set.sample_elements(units):
        worst = max(worst, poly.eval(x).magnitude())
    return worst
