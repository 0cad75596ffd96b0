"""Matrix realizations of the spinor rotation: SU(2), SO(3) and SO(4).

One unit parameter quadruple c = (c4, c) drives three pictures of the same
rotation: the 2x2 unitary B(c) acting on spinors, the 3x3 orthogonal matrix
acting on projected vectors, and the 4x4 orthogonal matrix acting on real KS
quadruples. The module also covers the elementary SO(4) plane rotations, the
fixed bridge matrix S, and the certificate showing S is not itself of the
4x4-from-SU(2) form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import KSQuadruple, Spinor, SpinorRotation
from .spinor_maps import S_BRIDGE

PAULI = np.array([
    [[0.0, 1.0], [1.0, 0.0]],
    [[0.0, -1.0j], [1.0j, 0.0]],
    [[1.0, 0.0], [0.0, -1.0]],
], dtype=complex)

# Rotations within 1e-9 of a half turn have no vector parameter; reject them
# rather than return an exploding quotient.
VECTOR_PARAMETER_LIMIT = 1e-9


def _cross_matrix(v: np.ndarray) -> np.ndarray:
    return np.array([
        [0.0, -v[2], v[1]],
        [v[2], 0.0, -v[0]],
        [-v[1], v[0], 0.0],
    ])


def so3_from_rotation(rot: SpinorRotation) -> np.ndarray:
    """The 3x3 orthogonal matrix O = I + 2 (c4 K + K^2), K the cross matrix of c.

    Satisfies project(B(c) xi).x = O @ project(xi).x for every spinor.
    """
    k = _cross_matrix(rot.vec)
    return np.eye(3) + 2.0 * (rot.c4 * k + k @ k)


def vector_parameter(rot: SpinorRotation) -> np.ndarray:
    """Quotient chart C = c / c4 on rotations, defined away from half turns."""
    if abs(rot.c4) < VECTOR_PARAMETER_LIMIT:
        raise ValueError(
            f"rotation too close to a half turn for the vector parameter: c4 = {rot.c4!r}")
    return rot.vec / rot.c4


def rotation_from_vector_parameter(C) -> SpinorRotation:
    """Inverse chart, fixing the c4 > 0 representative."""
    c = np.asarray(C, dtype=float)
    c4 = 1.0 / math.sqrt(1.0 + float(c @ c))
    return SpinorRotation(c4, c4 * c[0], c4 * c[1], c4 * c[2])


def so3_from_vector_parameter(C) -> np.ndarray:
    """O = I + 2 (K_C + K_C^2) / (1 + |C|^2), bypassing the unit quadruple."""
    c = np.asarray(C, dtype=float)
    k = _cross_matrix(c)
    return np.eye(3) + 2.0 * (k + k @ k) / (1.0 + float(c @ c))


def extract_so3(matrix: np.ndarray) -> np.ndarray:
    """Recover the orthogonal matrix of a 2x2 unitary: O_kl = Re tr(sigma^k B sigma^l B^dag) / 2."""
    b = np.asarray(matrix, dtype=complex)
    bdag = b.conj().T
    out = np.empty((3, 3))
    for l in range(3):
        xl = b @ PAULI[l] @ bdag
        for k in range(3):
            out[k, l] = 0.5 * float(np.real(np.sum(PAULI[k] * xl.T)))
    return out


def rotate_spinor(rot: SpinorRotation, s: Spinor) -> Spinor:
    """Apply B(c) to a spinor without forming the matrix."""
    c4, c1, c2, c3 = rot.as_tuple()
    z1, z2 = s.c1, s.c2
    return Spinor(complex(c4, -c3) * z1 + complex(-c2, -c1) * z2,
                  complex(c2, -c1) * z1 + complex(c4, c3) * z2)


def _real4_pattern(c4: float, c1: float, c2: float, c3: float) -> np.ndarray:
    # Row order (q4', q1', q2', q3'), column order (q4, q1, q2, q3); no unit
    # constraint so the same pattern can serve as a fitting basis.
    return np.array([
        [c4, -c1, c2, c3],
        [c1, c4, c3, -c2],
        [-c2, -c3, c4, -c1],
        [-c3, c2, c1, c4],
    ])


def su2_real4(rot: SpinorRotation) -> np.ndarray:
    """The 4x4 orthogonal matrix acting on (q4, q1, q2, q3) quadruples.

    Conjugate to B(c) under the component bijection: applying it to the
    quadruple of a spinor matches rotate_spinor on the spinor itself.
    """
    return _real4_pattern(*rot.as_tuple())


def linear_system_matrix(q: KSQuadruple) -> np.ndarray:
    """The matrix G with G @ (c4, c1, c2, c3) = su2_real4(c) @ q for all c.

    Same bilinear map as su2_real4, resolved along the parameter instead of
    the point. Columns are orthogonal with squared norm |q|^2, so G is
    invertible for every nonzero quadruple.
    """
    q4, q1, q2, q3 = q.as_tuple()
    return np.array([
        [q4, -q1, q2, q3],
        [q1, q4, -q3, q2],
        [q2, -q3, -q4, -q1],
        [q3, q2, q1, -q4],
    ])


ELEMENTARY_PLANES = {
    "2-3": (2, 3),
    "3-1": (1, 3),
    "1-2": (1, 2),
    "4-1": (4, 1),
    "4-2": (4, 2),
    "4-3": (4, 3),
}

# Position of index digit d in the (q4, q1, q2, q3) storage order.
_STORAGE_POSITION = {4: 0, 1: 1, 2: 2, 3: 3}


def elementary_so4(label: str, angle: float) -> np.ndarray:
    """Plane rotation S_{i-j}(angle) of the quadruple space.

    Acts as q_i' = cos q_i - sin q_j, q_j' = sin q_i + cos q_j on the index
    pair of the label and as identity elsewhere.
    """
    if label not in ELEMENTARY_PLANES:
        raise ValueError(
            f"unknown plane label {label!r}; valid labels: {sorted(ELEMENTARY_PLANES)}")
    i, j = ELEMENTARY_PLANES[label]
    pi, pj = _STORAGE_POSITION[i], _STORAGE_POSITION[j]
    c, s = math.cos(angle), math.sin(angle)
    out = np.eye(4)
    out[pi, pi] = c
    out[pi, pj] = -s
    out[pj, pi] = s
    out[pj, pj] = c
    return out


def s_matrix() -> np.ndarray:
    """The fixed U -> V bridge matrix (fresh copy)."""
    return S_BRIDGE.copy()


@dataclass(frozen=True, slots=True)
class FactorizationScan:
    """Result of scanning S_{4-2}(b1) S_{3-1}(b2) products against a target."""

    best_angles: tuple
    best_residual: float
    residuals: tuple


def s_factorization_check(target: np.ndarray | None = None,
                          angles=None) -> FactorizationScan:
    """Scan elementary-rotation products for the bridge matrix.

    Tries S_{4-2}(b1) @ S_{3-1}(b2) over a grid of angle pairs (multiples of
    pi/4 by default) and reports every residual. The two factors act on
    disjoint coordinate pairs, so they commute and the order scanned is the
    only order needed. The winner is (pi/4, pi/4) with residual at rounding
    level.
    """
    if target is None:
        target = S_BRIDGE
    if angles is None:
        angles = [k * math.pi / 4.0 for k in range(-3, 5)]
    scanned = []
    best = None
    for b1 in angles:
        left = elementary_so4("4-2", b1)
        for b2 in angles:
            product = left @ elementary_so4("3-1", b2)
            residual = float(np.max(np.abs(product - target)))
            scanned.append((b1, b2, residual))
            if best is None or residual < best[2]:
                best = (b1, b2, residual)
    return FactorizationScan(best_angles=(best[0], best[1]),
                             best_residual=best[2],
                             residuals=tuple(scanned))


@dataclass(frozen=True, slots=True)
class NonMembershipCertificate:
    """Proof data that a 4x4 matrix is not of the su2_real4 pattern.

    best_fit is the unconstrained least-squares parameter quadruple,
    residual the Frobenius distance at that optimum, and the two witness
    entries pin incompatible values of one parameter.
    """

    target: np.ndarray
    best_fit: np.ndarray
    residual: float
    parameter: str
    witness_entries: tuple
    implied_values: tuple


def s_outside_su2_image(target: np.ndarray | None = None) -> NonMembershipCertificate:
    """Least-squares certificate that the bridge matrix has no SU(2) preimage.

    The 16 pattern entries are linear in (c4, c1, c2, c3) with orthogonal
    coefficient columns, so the fit is exact when and only when the target has
    the pattern. For S the entries (0, 2) and (1, 3) demand c2 = -1/sqrt(2)
    and c2 = +1/sqrt(2) at once, leaving Frobenius residual sqrt(2).
    """
    if target is None:
        target = S_BRIDGE
    target = np.asarray(target, dtype=float)
    basis = np.column_stack([
        _real4_pattern(1.0, 0.0, 0.0, 0.0).ravel(),
        _real4_pattern(0.0, 1.0, 0.0, 0.0).ravel(),
        _real4_pattern(0.0, 0.0, 1.0, 0.0).ravel(),
        _real4_pattern(0.0, 0.0, 0.0, 1.0).ravel(),
    ])
    fit, _, _, _ = np.linalg.lstsq(basis, target.ravel(), rcond=None)
    residual = float(np.linalg.norm(basis @ fit - target.ravel()))
    # Pattern entry (0, 2) reads +c2, entry (1, 3) reads -c2.
    return NonMembershipCertificate(
        target=target,
        best_fit=fit,
        residual=residual,
        parameter="c2",
        witness_entries=((0, 2), (1, 3)),
        implied_values=(float(target[0, 2]), float(-target[1, 3])),
    )


def rotation_from_axis_angle(axis, angle: float) -> SpinorRotation:
    """Unit quadruple (cos(angle/2), sin(angle/2) axis_hat)."""
    a = np.asarray(axis, dtype=float)
    norm = float(np.linalg.norm(a))
    if norm == 0.0:
        raise ValueError("rotation axis must be nonzero")
    h = 0.5 * float(angle)
    s = math.sin(h) / norm
    return SpinorRotation(math.cos(h), s * a[0], s * a[1], s * a[2])


__all__ = [
    "PAULI", "VECTOR_PARAMETER_LIMIT", "ELEMENTARY_PLANES",
    "so3_from_rotation", "vector_parameter", "rotation_from_vector_parameter",
    "so3_from_vector_parameter", "extract_so3", "rotate_spinor", "su2_real4",
    "linear_system_matrix", "elementary_so4", "s_matrix",
    "FactorizationScan", "s_factorization_check",
    "NonMembershipCertificate", "s_outside_su2_image",
    "rotation_from_axis_angle",
]
