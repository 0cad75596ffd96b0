import math

import numpy as np
import pytest

import oracles
from spinorspace import (
    IDENTITY_ROTATION,
    VECTOR_PARAMETER_LIMIT,
    KSQuadruple,
    Spinor,
    SpinorRotation,
    compose,
    conjugate,
    elementary_so4,
    extract_so3,
    linear_system_matrix,
    quadruple_from_spinor,
    rotate_spinor,
    rotation_from_axis_angle,
    s_factorization_check,
    s_matrix,
    s_outside_su2_image,
    scaled_residual,
    so3_from_rotation,
    so3_from_vector_parameter,
    su2_matrix,
    su2_real4,
    vector_parameter,
)

INV_SQRT2 = math.sqrt(0.5)
SQRT2 = math.sqrt(2.0)


def random_rotation(rng):
    v = rng.normal(size=4)
    v = v / np.linalg.norm(v)
    return SpinorRotation(v[3], v[0], v[1], v[2])


# ---------------------------------------------------------------- SO(3) maps

def test_so3_from_rotation_frozen():
    assert np.array_equal(so3_from_rotation(IDENTITY_ROTATION), np.eye(3))
    half_turn = so3_from_rotation(SpinorRotation(0.0, 0.0, 0.0, 1.0))
    assert scaled_residual(half_turn, np.diag([-1.0, -1.0, 1.0])) <= 1e-15


def test_so3_from_rotation_matches_trace_oracle():
    rng = np.random.default_rng(30)
    for _ in range(300):
        r = random_rotation(rng)
        direct = so3_from_rotation(r)
        via_trace = oracles.so3_of_quadruple(r.c4, r.c1, r.c2, r.c3)
        assert scaled_residual(direct, via_trace) <= 1e-13
        assert scaled_residual(direct.T @ direct, np.eye(3)) <= 1e-13
        assert abs(np.linalg.det(direct) - 1.0) <= 1e-13


def test_so3_double_cover_sign():
    rng = np.random.default_rng(31)
    for _ in range(200):
        r = random_rotation(rng)
        neg = SpinorRotation(-r.c4, -r.c1, -r.c2, -r.c3)
        assert scaled_residual(so3_from_rotation(r), so3_from_rotation(neg)) <= 1e-14


def test_rotation_from_axis_angle():
    r = rotation_from_axis_angle((0.0, 0.0, 1.0), math.pi)
    assert abs(r.c4) <= 1e-16 and abs(r.c3 - 1.0) <= 1e-15
    with pytest.raises(ValueError):
        rotation_from_axis_angle((0.0, 0.0, 0.0), 1.0)
    rng = np.random.default_rng(32)
    for _ in range(200):
        axis = rng.normal(size=3)
        angle = float(rng.uniform(-2.0 * math.pi, 2.0 * math.pi))
        got = so3_from_rotation(rotation_from_axis_angle(tuple(axis), angle))
        want = oracles.rodrigues(axis / np.linalg.norm(axis), angle)
        assert scaled_residual(got, want) <= 1e-13


def test_so3_from_vector_parameter_frozen():
    assert np.array_equal(so3_from_vector_parameter(np.zeros(3)), np.eye(3))
    quarter = so3_from_vector_parameter(np.array([0.0, 0.0, 1.0]))
    assert scaled_residual(quarter, oracles.rz(0.5 * math.pi)) <= 1e-15


def test_vector_parameter_chart():
    rng = np.random.default_rng(33)
    for _ in range(300):
        c = rng.normal(size=3) * float(rng.uniform(0.1, 5.0))
        lift = np.concatenate(([1.0], c))
        lift = lift / np.linalg.norm(lift)
        r = SpinorRotation(lift[0], lift[1], lift[2], lift[3])
        assert scaled_residual(so3_from_vector_parameter(c), so3_from_rotation(r)) <= 1e-13
        assert scaled_residual(vector_parameter(r), c) <= 1e-13
    with pytest.raises(ValueError):
        vector_parameter(SpinorRotation(0.0, 0.0, 0.0, 1.0))
    # the gate scales with |C|: barely-representable charts still convert
    big = SpinorRotation(1.0, 0.0, 0.0, 0.9 * VECTOR_PARAMETER_LIMIT)
    assert np.isfinite(vector_parameter(big)).all()


def test_extract_so3_dual_route():
    assert scaled_residual(extract_so3(np.eye(2, dtype=complex)), np.eye(3)) <= 1e-15
    rng = np.random.default_rng(34)
    for _ in range(300):
        r = random_rotation(rng)
        assert scaled_residual(extract_so3(su2_matrix(r)), so3_from_rotation(r)) <= 1e-13


# ------------------------------------------------------------- spinor action

def test_rotate_spinor_matches_matrix_action():
    rng = np.random.default_rng(35)
    for _ in range(300):
        r = random_rotation(rng)
        s = Spinor(complex(*rng.normal(size=2)), complex(*rng.normal(size=2)))
        got = rotate_spinor(r, s)
        want = oracles.b_matrix(r.c4, r.c1, r.c2, r.c3) @ oracles.column(s)
        assert abs(got.c1 - want[0]) <= 1e-13 and abs(got.c2 - want[1]) <= 1e-13


def test_su2_real4_frozen():
    assert np.array_equal(su2_real4(IDENTITY_ROTATION), np.eye(4))
    m = su2_real4(SpinorRotation(0.0, 0.0, 0.0, 1.0))
    want = np.zeros((4, 4))
    # storage order (q4, q1, q2, q3): the c3 generator sends it to (q3, q2, -q1, -q4)
    want[0, 3] = 1.0
    want[1, 2] = 1.0
    want[2, 1] = -1.0
    want[3, 0] = -1.0
    assert np.array_equal(m, want)


def test_su2_real4_is_the_spinor_action():
    rng = np.random.default_rng(36)
    for _ in range(300):
        r = random_rotation(rng)
        s = Spinor(complex(*rng.normal(size=2)), complex(*rng.normal(size=2)))
        q = quadruple_from_spinor(s).as_array()
        via_real = su2_real4(r) @ q
        via_complex = oracles.storage_of_column(
            oracles.b_matrix(r.c4, r.c1, r.c2, r.c3) @ oracles.column(s))
        assert scaled_residual(via_real, via_complex) <= 1e-13


def test_su2_real4_homomorphism_and_orthogonality():
    rng = np.random.default_rng(37)
    for _ in range(200):
        a, b = random_rotation(rng), random_rotation(rng)
        assert scaled_residual(su2_real4(compose(a, b)),
                               su2_real4(a) @ su2_real4(b)) <= 1e-13
        m = su2_real4(a)
        assert scaled_residual(m.T @ m, np.eye(4)) <= 1e-13
        assert abs(np.linalg.det(m) - 1.0) <= 1e-13


def test_linear_system_matrix():
    rng = np.random.default_rng(38)
    for _ in range(200):
        s = Spinor(complex(*rng.normal(size=2)), complex(*rng.normal(size=2)))
        g = linear_system_matrix(quadruple_from_spinor(s))
        assert np.array_equal(g, oracles.action_matrix(s))
        q = quadruple_from_spinor(s).as_array()
        assert np.array_equal(g @ np.array([1.0, 0.0, 0.0, 0.0]), q)
        # columns are orthogonal with common norm |q|^2
        gram = g.T @ g
        assert scaled_residual(gram, float(q @ q) * np.eye(4)) <= 1e-13


# ------------------------------------------------------------ SO(4) elements

def test_elementary_so4_frozen():
    for label in ("2-3", "3-1", "1-2", "4-1", "4-2", "4-3"):
        assert np.array_equal(elementary_so4(label, 0.0), np.eye(4))
    quarter = elementary_so4("4-2", 0.5 * math.pi)
    q = np.array([4.0, 1.0, 2.0, 3.0])  # storage (q4, q1, q2, q3)
    assert scaled_residual(quarter @ q, np.array([-2.0, 1.0, 4.0, 3.0])) <= 1e-15
    with pytest.raises(ValueError):
        elementary_so4("1-4", 1.0)


def test_elementary_so4_orthogonal():
    rng = np.random.default_rng(39)
    for label in ("2-3", "3-1", "1-2", "4-1", "4-2", "4-3"):
        for _ in range(30):
            m = elementary_so4(label, float(rng.uniform(-7.0, 7.0)))
            assert scaled_residual(m.T @ m, np.eye(4)) <= 1e-15
            assert abs(np.linalg.det(m) - 1.0) <= 1e-14


def test_s_matrix_frozen():
    s = s_matrix()
    assert scaled_residual(s.T @ s, np.eye(4)) <= 1e-15
    assert abs(np.linalg.det(s) - 1.0) <= 1e-14
    got = s @ np.array([0.0, 1.0, 0.0, 1.0])
    assert scaled_residual(got, np.array([0.0, 0.0, 0.0, SQRT2])) <= 1e-15


def test_s_factorization():
    scan = s_factorization_check()
    assert scan.best_angles == (0.25 * math.pi, 0.25 * math.pi)
    assert scan.best_residual <= 1e-15
    assert len(scan.residuals) == 64
    others = [r for b1, b2, r in scan.residuals if (b1, b2) != scan.best_angles]
    assert min(others) > 0.1
    direct = elementary_so4("4-2", 0.25 * math.pi) @ elementary_so4("3-1", 0.25 * math.pi)
    assert scaled_residual(s_matrix(), direct) <= 1e-15


def test_s_outside_su2_image():
    cert = s_outside_su2_image()
    assert abs(cert.residual - SQRT2) <= 1e-15
    assert cert.residual > 0.1
    assert cert.parameter == "c2"
    assert cert.witness_entries == ((0, 2), (1, 3))
    assert abs(cert.implied_values[0] + INV_SQRT2) <= 1e-15
    assert abs(cert.implied_values[1] - INV_SQRT2) <= 1e-15
    # the same fit applied to a genuine member recovers it with zero residual
    rng = np.random.default_rng(40)
    r = random_rotation(rng)
    member = s_outside_su2_image(su2_real4(r))
    assert member.residual <= 1e-13
    fit = np.array(member.best_fit)
    want = np.array([r.c4, r.c1, r.c2, r.c3])
    if fit @ want < 0.0:
        fit = -fit
    assert scaled_residual(fit, want) <= 1e-13


def test_conjugate_inverts():
    rng = np.random.default_rng(41)
    for _ in range(200):
        r = random_rotation(rng)
        assert scaled_residual(su2_real4(conjugate(r)), su2_real4(r).T) <= 1e-13
