import math

import numpy as np
import pytest

import oracles
from spinorspace import (
    DoubleCoverAngle,
    IDENTITY_ROTATION,
    KSQuadruple,
    Spinor,
    SpinorRotation,
    Tolerance,
    compose,
    conjugate,
    quadruple_from_spinor,
    scaled_residual,
    spinor_from_quadruple,
    su2_matrix,
    wrap_4pi,
)

SQRT2 = math.sqrt(2.0)


def test_spinor_from_quadruple_frozen():
    s = spinor_from_quadruple(KSQuadruple(0.0, 1.0, 0.0, 1.0))
    assert s.c1 == 1.0 + 0.0j and s.c2 == 1.0 + 0.0j
    z = spinor_from_quadruple(KSQuadruple(0.0, 0.0, 0.0, 0.0))
    assert z.c1 == 0.0 and z.c2 == 0.0
    s = spinor_from_quadruple(KSQuadruple(1.0, 0.0, 0.0, 0.0))
    assert s.c1 == 0.0 and s.c2 == 1.0j


def test_quadruple_from_spinor_frozen():
    assert quadruple_from_spinor(Spinor(1.0 + 0.0j, 1.0 + 0.0j)).as_tuple() == (0.0, 1.0, 0.0, 1.0)
    assert quadruple_from_spinor(Spinor(SQRT2 + 0.0j, 0.0j)).as_tuple() == (0.0, SQRT2, 0.0, 0.0)


def test_bijection_round_trip_exact():
    # component shuffling only, so the round trip is bitwise
    rng = np.random.default_rng(11)
    for _ in range(200):
        q = KSQuadruple(*rng.normal(size=4))
        assert quadruple_from_spinor(spinor_from_quadruple(q)).as_tuple() == q.as_tuple()
        s = Spinor(complex(*rng.normal(size=2)), complex(*rng.normal(size=2)))
        back = spinor_from_quadruple(quadruple_from_spinor(s))
        assert back.c1 == s.c1 and back.c2 == s.c2


def test_su2_matrix_frozen():
    assert np.array_equal(su2_matrix(IDENTITY_ROTATION), np.eye(2, dtype=complex))
    assert np.array_equal(su2_matrix(SpinorRotation(0.0, 0.0, 0.0, 1.0)),
                          np.array([[-1.0j, 0.0], [0.0, 1.0j]]))
    assert np.array_equal(su2_matrix(SpinorRotation(0.0, 0.0, 1.0, 0.0)),
                          np.array([[0.0, -1.0], [1.0, 0.0]], dtype=complex))


def test_su2_matrix_is_pauli_sum():
    rng = np.random.default_rng(5)
    for _ in range(100):
        v = oracles.haar_quadruple(rng)
        diff = su2_matrix(SpinorRotation(*v)) - oracles.b_matrix(*v)
        assert float(np.max(np.abs(diff))) <= 1e-15


def test_su2_matrix_unitary_det_one():
    rng = np.random.default_rng(7)
    for _ in range(100):
        b = su2_matrix(SpinorRotation(*oracles.haar_quadruple(rng)))
        assert float(np.max(np.abs(b @ b.conj().T - np.eye(2)))) <= 1e-15
        assert abs(np.linalg.det(b) - 1.0) <= 1e-15


def test_compose_identity_and_inverse():
    rng = np.random.default_rng(2)
    eye = np.array([1.0, 0.0, 0.0, 0.0])
    for _ in range(100):
        r = SpinorRotation(*oracles.haar_quadruple(rng))
        assert scaled_residual(np.array(compose(IDENTITY_ROTATION, r).as_tuple()),
                               np.array(r.as_tuple())) <= 1e-15
        assert scaled_residual(np.array(compose(r, IDENTITY_ROTATION).as_tuple()),
                               np.array(r.as_tuple())) <= 1e-15
        assert scaled_residual(np.array(compose(r, conjugate(r)).as_tuple()), eye) <= 1e-15
        assert scaled_residual(np.array(compose(conjugate(r), r).as_tuple()), eye) <= 1e-15


def test_compose_matches_matrix_product():
    """The quaternion formula against plain complex 2x2 multiplication."""
    rng = np.random.default_rng(3)
    for _ in range(200):
        a = SpinorRotation(*oracles.haar_quadruple(rng))
        b = SpinorRotation(*oracles.haar_quadruple(rng))
        left = su2_matrix(compose(a, b))
        right = oracles.b_matrix(*a.as_tuple()) @ oracles.b_matrix(*b.as_tuple())
        assert float(np.max(np.abs(left - right))) <= 1e-13


def test_compose_associative():
    rng = np.random.default_rng(13)
    for _ in range(100):
        a, b, c = (SpinorRotation(*oracles.haar_quadruple(rng)) for _ in range(3))
        left = compose(compose(a, b), c)
        right = compose(a, compose(b, c))
        assert scaled_residual(np.array(left.as_tuple()), np.array(right.as_tuple())) <= 1e-14


def test_wrap_4pi_window():
    assert wrap_4pi(0.0) == 0.0
    assert wrap_4pi(2.0 * math.pi) == 2.0 * math.pi
    assert wrap_4pi(-2.0 * math.pi) == 2.0 * math.pi
    assert wrap_4pi(4.0 * math.pi) == 0.0
    assert abs(wrap_4pi(5.0 * math.pi) - math.pi) <= 1e-14
    assert abs(wrap_4pi(-5.0 * math.pi) + math.pi) <= 1e-14
    for k in range(-20, 21):
        v = wrap_4pi(0.37 * k)
        assert -2.0 * math.pi < v <= 2.0 * math.pi


def test_double_cover_angle_sheets():
    a = DoubleCoverAngle(math.pi)
    partner = a.sheet_partner()
    assert abs(partner.value + math.pi) <= 1e-15
    assert abs(partner.sheet_partner().value - a.value) <= 1e-15
    assert abs((-a).value + math.pi) <= 1e-14
    assert abs((a + 4.0 * math.pi).value - a.value) <= 1e-14
    with pytest.raises(ValueError):
        DoubleCoverAngle(float("inf"))


def test_constructors_reject_nonfinite():
    with pytest.raises(ValueError):
        Spinor(complex(float("nan"), 0.0), 0.0j)
    with pytest.raises(ValueError):
        KSQuadruple(float("inf"), 0.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        SpinorRotation(float("nan"), 0.0, 0.0, 0.0)


def test_rotation_norm_gate():
    with pytest.raises(ValueError):
        SpinorRotation(1.0, 1.0, 0.0, 0.0)
    # sub-slack deviations are silently renormalized
    r = SpinorRotation(1.0 + 1e-8, 0.0, 0.0, 0.0)
    assert abs(r.c4 - 1.0) <= 1e-15
    norm = math.sqrt(sum(v * v for v in r.as_tuple()))
    assert abs(norm - 1.0) <= 1e-15


def test_norm_sq_accessors():
    s = Spinor(3.0 + 4.0j, 0.0j)
    assert s.norm_sq == 25.0
    q = KSQuadruple(1.0, 2.0, 3.0, 4.0)
    assert q.norm_sq == 30.0
    assert np.array_equal(q.as_array(), np.array([1.0, 2.0, 3.0, 4.0]))


def test_tolerance_and_scaled_residual():
    tol = Tolerance(1e-12, 1e-12)
    assert tol.ok(1.0, 1.0 + 1e-13)
    assert not tol.ok(1.0, 1.0 + 1e-9)
    with pytest.raises(ValueError):
        Tolerance(0.0, 1e-12)
    assert scaled_residual(1.0, 1.0) == 0.0
    # normalization kicks in only above unit magnitude
    assert scaled_residual(2e6, 1e6) == 0.5
    assert scaled_residual(np.zeros(3), np.zeros(3)) == 0.0
