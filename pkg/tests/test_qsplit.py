"""Splitting isomorphism, cone membership, inverses and powers."""

import random

import pytest

from qcone3 import (
    E0,
    E1,
    E2,
    E12,
    E23,
    E123,
    ConePoint,
    Quat,
    cone_point,
    in_ball,
    in_cone,
    inverse,
    is_sqrt_minus_one,
    join,
    norm_n,
    power,
    split,
    trace,
)
from qcone3.errors import NotImaginaryUnit, NotInCone, SingularElement
from qcone3.qsplit import Q12, Q13, Q23, cone_residuals
from helpers import rand_cone_point, rand_element, rand_unit_imaginary


def test_quaternion_triple_relations():
    # the (1, i, j, k) view with i = e23, j = -e13, k = e12
    i, j, k = Q23, -Q13, Q12
    assert (i * j).isclose(k)
    assert (j * k).isclose(i)
    assert (k * i).isclose(j)
    assert (j * i).isclose(-k)
    for unit in (i, j, k):
        assert (unit * unit).isclose(Quat(-1.0))


def test_split_examples():
    assert split(E1) == ((-Q23), Q23)
    assert split(E12) == (Q12, Q12)
    assert str(split(E1)) == "(-e23 | e23)"
    p, q = split(E2 + E23)
    assert p.isclose(Q13 + Q23)
    # the second component satisfies x = w+ p + w- q, which pins its sign
    assert q.isclose(Q23 - Q13)
    assert join(p, q).isclose(E2 + E23)


def test_join_examples():
    assert join(Quat(1.0), Quat(1.0)).isclose(E0)
    assert join(-Q23, Q23).isclose(E1)
    p = Quat(0.5, -1.0, 2.0, 0.25)
    emb = join(p, p)
    assert emb.c0 == p.w and emb.c23 == p.a23 and emb.c13 == p.a13 and emb.c12 == p.a12
    assert emb.c1 == emb.c2 == emb.c3 == emb.c123 == 0.0


def test_round_trip_random():
    rng = random.Random(0)
    for _ in range(1000):
        x = rand_element(rng, 3.0)
        assert join(split(x)).isclose(x, 1e-12)
        p, q = split(x)
        p2, q2 = split(join(p, q))
        assert p2.isclose(p, 1e-12) and q2.isclose(q, 1e-12)


def test_split_is_algebra_homomorphism():
    rng = random.Random(1)
    for _ in range(300):
        x = rand_element(rng)
        y = rand_element(rng)
        px, qx = split(x)
        py, qy = split(y)
        pz, qz = split(x * y)
        scale = 1.0 + pz.modulus() + qz.modulus()
        assert pz.isclose(px * py, 1e-12 * scale)
        assert qz.isclose(qx * qy, 1e-12 * scale)


def test_in_cone_examples():
    assert in_cone(E1)
    assert not in_cone(E123)
    assert not in_cone(E1 + E23)


def test_cone_characterization_matches_component_data():
    rng = random.Random(2)
    for _ in range(500):
        x = rand_cone_point(rng).element
        p, q = split(x)
        assert in_cone(x, 1e-10)
        assert abs(p.re() - q.re()) < 1e-10
        assert abs(p.im_modulus() - q.im_modulus()) < 1e-10
    for _ in range(500):
        y = rand_element(rng)
        _, r2 = cone_residuals(y)
        if abs(y.c123) < 1e-6 and abs(r2) < 1e-6:
            continue  # too close to the boundary to assert either way
        p, q = split(y)
        component_eq = (
            abs(p.re() - q.re()) < 1e-10
            and abs(p.im_modulus() - q.im_modulus()) < 1e-10
        )
        assert in_cone(y, 1e-10) == component_eq


def test_cone_residual_identity():
    # the quadratic cone equation equals a quarter of the difference of the
    # squared imaginary moduli of the split components
    rng = random.Random(3)
    for _ in range(300):
        x = rand_element(rng, 2.0)
        p, q = split(x)
        _, r2 = cone_residuals(x)
        expected = 0.25 * (p.im_modulus() ** 2 - q.im_modulus() ** 2)
        assert abs(r2 - expected) < 1e-12 * (1 + abs(r2))


def test_is_sqrt_minus_one():
    assert is_sqrt_minus_one(E1)
    assert is_sqrt_minus_one(E12)
    assert not is_sqrt_minus_one(E12 + E23)
    rng = random.Random(4)
    for _ in range(100):
        u = rand_unit_imaginary(rng)
        v = rand_unit_imaginary(rng)
        x = join(u, v)
        assert is_sqrt_minus_one(x)
        assert in_cone(x, 1e-10)
        assert (x * x).isclose(-E0, 1e-12)


def test_inverse_examples():
    assert inverse(2 * E0).isclose(0.5 * E0)
    assert inverse(E12).isclose(-E12)
    with pytest.raises(SingularElement):
        inverse((E0 + E123) / 2)


def test_inverse_random():
    rng = random.Random(5)
    for _ in range(200):
        x = rand_element(rng) + 3 * E0  # shifted away from the zero divisors
        assert (x * inverse(x)).isclose(E0, 1e-10)
        assert (inverse(x) * x).isclose(E0, 1e-10)


def test_power_examples():
    assert power(E1, 2).isclose(-E0)
    rng = random.Random(6)
    for _ in range(20):
        assert power(rand_element(rng), 0).isclose(E0)
    x = E0 + E1
    assert power(x, 3).isclose(x * x * x, 1e-12)
    assert power(x, 3).isclose(-2 * E0 + 2 * E1)


def test_power_matches_repeated_mul():
    rng = random.Random(7)
    for _ in range(300):
        x = rand_element(rng)
        n = rng.randint(0, 8)
        direct = E0
        for _ in range(n):
            direct = direct * x
        scale = 1.0 + direct.max_abs()
        assert power(x, n).isclose(direct, 1e-12 * scale)


def test_negative_power():
    x = 2 * E0 + E1
    assert power(x, -2).isclose(inverse(x * x), 1e-12)
    with pytest.raises(SingularElement):
        power((E0 + E123) / 2, -1)


def test_trace_norm_split_formula():
    rng = random.Random(8)
    for _ in range(200):
        x = rand_element(rng)
        p, q = split(x)
        tp, tq = split(trace(x))
        assert tp.isclose(p + p.conj(), 1e-12)
        assert tq.isclose(q + q.conj(), 1e-12)
        npp, nq = split(norm_n(x))
        assert npp.isclose(p * p.conj(), 1e-12 * (1 + npp.modulus()))
        assert nq.isclose(q * q.conj(), 1e-12 * (1 + nq.modulus()))


def test_cone_point_trace_norm_real():
    rng = random.Random(9)
    for _ in range(200):
        pt = rand_cone_point(rng)
        x = pt.element
        t = trace(x)
        n = norm_n(x)
        assert abs(t.c0 - pt.trace_value) < 1e-12
        assert abs(n.c0 - pt.norm_value) < 1e-12 * (1 + pt.norm_value)
        assert max(abs(c) for c in t.coeffs[1:]) < 1e-12
        assert max(abs(c) for c in n.coeffs[1:]) < 1e-12 * (1 + pt.norm_value)


def test_cone_point_examples():
    assert cone_point(0, 1, Q23, Q23).element.isclose(E23)
    assert cone_point(0, 1, -Q23, Q23).element.isclose(E1)
    assert cone_point(3, 0, Q23, Q13).element.isclose(3 * E0)
    with pytest.raises(NotImaginaryUnit):
        cone_point(0, 1, Q23 + Q13, Q23)


def test_cone_point_from_element():
    pt = ConePoint.from_element(E1)
    assert pt.alpha == 0 and abs(pt.beta - 1) < 1e-14
    assert pt.i1.isclose(-Q23) and pt.i2.isclose(Q23)
    with pytest.raises(NotInCone):
        ConePoint.from_element(E123)


def test_cone_point_negative_beta_normalizes():
    u1, u2 = -Q23, Q13
    a = cone_point(0.5, -0.75, u1, u2)
    b = cone_point(0.5, 0.75, -u1, -u2)
    assert a.element.isclose(b.element, 1e-14)
    assert a.beta == b.beta > 0


def test_in_ball():
    assert in_ball(ConePoint.from_element(E1), 2)
    assert not in_ball(ConePoint.from_element(E1), 1)  # strict, squared norm
    assert in_ball(ConePoint.from_element(3 * E0), 10)
    # ball membership agrees with both component norms
    rng = random.Random(10)
    for _ in range(100):
        pt = rand_cone_point(rng)
        r = rng.uniform(0.1, 5.0)
        components = max(pt.p.modulus_sq(), pt.q.modulus_sq())
        assert in_ball(pt, r) == (components < r)
