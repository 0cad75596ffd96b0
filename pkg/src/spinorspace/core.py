"""Scalar, spinor, quadruple and rotation-parameter types.

Everything downstream is built from the four value types here: two-component
complex spinors, real KS quadruples stored in index-4-first order, unit
quaternion rotation parameters for SU(2), and the angle type for the 4pi
double cover. All values are immutable; all operations are pure functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi
FOUR_PI = 4.0 * math.pi

# Norm deviation absorbed silently by normalizing constructors; anything worse
# is treated as a logic error in the caller.
NORM_SLACK = 1e-6


def wrap_4pi(angle: float) -> float:
    """Reduce an angle modulo 4pi into the canonical window (-2pi, 2pi].

    The double cover identifies angle with angle + 4pi but keeps angle and
    angle + 2pi distinct (opposite spinor sheet).
    """
    a = angle % FOUR_PI
    if a > TWO_PI:
        a -= FOUR_PI
    return a


@dataclass(frozen=True, slots=True)
class DoubleCoverAngle:
    """Angle on the 4pi double cover, canonical range (-2pi, 2pi].

    value and value + 2pi are distinct points; value and value + 4pi are the
    same point. Construction canonicalizes.
    """

    value: float

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError("double-cover angle must be finite")
        object.__setattr__(self, "value", wrap_4pi(self.value))

    def __add__(self, other) -> "DoubleCoverAngle":
        shift = other.value if isinstance(other, DoubleCoverAngle) else float(other)
        return DoubleCoverAngle(self.value + shift)

    def __neg__(self) -> "DoubleCoverAngle":
        return DoubleCoverAngle(-self.value)

    def sheet_partner(self) -> "DoubleCoverAngle":
        """The same base point on the opposite sheet (value + 2pi)."""
        return DoubleCoverAngle(self.value + TWO_PI)


def angle_value(phi) -> float:
    """Canonical float value of a double-cover angle given as float or DoubleCoverAngle."""
    if isinstance(phi, DoubleCoverAngle):
        return phi.value
    return wrap_4pi(float(phi))


@dataclass(frozen=True, slots=True)
class Spinor:
    """Two-component complex spinor (carries xi, eta and Psi alike)."""

    c1: complex
    c2: complex

    def __post_init__(self):
        c1, c2 = complex(self.c1), complex(self.c2)
        if not (math.isfinite(c1.real) and math.isfinite(c1.imag)
                and math.isfinite(c2.real) and math.isfinite(c2.imag)):
            raise ValueError("spinor components must be finite")
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)

    @property
    def norm_sq(self) -> float:
        return (self.c1.real * self.c1.real + self.c1.imag * self.c1.imag
                + self.c2.real * self.c2.real + self.c2.imag * self.c2.imag)


@dataclass(frozen=True, slots=True)
class KSQuadruple:
    """Real 4-tuple (q4, q1, q2, q3), the paper-order column layout.

    Bijective with Spinor via c1 = q1 + i q2, c2 = q3 + i q4; the round trip
    is exact. The same container holds U, V, u and w quadruples.
    """

    q4: float
    q1: float
    q2: float
    q3: float

    def __post_init__(self):
        vals = (float(self.q4), float(self.q1), float(self.q2), float(self.q3))
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("quadruple entries must be finite")
        object.__setattr__(self, "q4", vals[0])
        object.__setattr__(self, "q1", vals[1])
        object.__setattr__(self, "q2", vals[2])
        object.__setattr__(self, "q3", vals[3])

    def as_tuple(self) -> tuple:
        return (self.q4, self.q1, self.q2, self.q3)

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple())

    @property
    def norm_sq(self) -> float:
        return self.q4 * self.q4 + self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3


@dataclass(frozen=True, slots=True)
class SpinorRotation:
    """Unit 4-tuple (c4, c1, c2, c3) parameterizing B(c) = c4 I - i sigma^j c_j.

    Construction normalizes inputs whose norm deviates from 1 by less than
    1e-6 and rejects anything worse, so accumulated round-off is absorbed but
    logic errors are not masked.
    """

    c4: float
    c1: float
    c2: float
    c3: float

    def __post_init__(self):
        c4, c1, c2, c3 = (float(self.c4), float(self.c1), float(self.c2), float(self.c3))
        norm = math.sqrt(c4 * c4 + c1 * c1 + c2 * c2 + c3 * c3)
        if not math.isfinite(norm) or abs(norm - 1.0) >= NORM_SLACK:
            raise ValueError(f"rotation parameters must be unit norm, got norm {norm!r}")
        object.__setattr__(self, "c4", c4 / norm)
        object.__setattr__(self, "c1", c1 / norm)
        object.__setattr__(self, "c2", c2 / norm)
        object.__setattr__(self, "c3", c3 / norm)

    def as_tuple(self) -> tuple:
        return (self.c4, self.c1, self.c2, self.c3)

    @property
    def vec(self) -> np.ndarray:
        return np.array([self.c1, self.c2, self.c3])


IDENTITY_ROTATION = SpinorRotation(1.0, 0.0, 0.0, 0.0)


@dataclass(frozen=True, slots=True)
class EtaProjection:
    """Vector-model projection: component j of the decomposition is a_j + i x_j."""

    a: np.ndarray
    x: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", np.asarray(self.a, dtype=float))
        object.__setattr__(self, "x", np.asarray(self.x, dtype=float))
        if self.a.shape != (3,) or self.x.shape != (3,):
            raise ValueError("projection parts must be 3-vectors")


@dataclass(frozen=True, slots=True)
class Tolerance:
    """Scale-aware comparison policy: |lhs - rhs| <= absolute + relative * max(|lhs|, |rhs|)."""

    absolute: float = 1e-12
    relative: float = 1e-12

    def __post_init__(self):
        if not (self.absolute > 0 and self.relative > 0):
            raise ValueError("tolerance parts must be positive")

    def ok(self, lhs: float, rhs: float) -> bool:
        return abs(lhs - rhs) <= self.absolute + self.relative * max(abs(lhs), abs(rhs))


DEFAULT_TOLERANCE = Tolerance()


def scaled_residual(lhs, rhs) -> float:
    """Magnitude-scaled disagreement: max|lhs - rhs| / max(1, |lhs|, |rhs|).

    Accepts scalars or array-likes; a value <= tol implies the Tolerance rule
    with absolute = relative = tol.
    """
    left = np.asarray(lhs, dtype=float)
    right = np.asarray(rhs, dtype=float)
    diff = float(np.max(np.abs(left - right))) if left.size else 0.0
    scale = max(1.0, float(np.max(np.abs(left))) if left.size else 0.0,
                float(np.max(np.abs(right))) if right.size else 0.0)
    return diff / scale


def spinor_from_quadruple(q: KSQuadruple) -> Spinor:
    """Exact bijection: c1 = q1 + i q2, c2 = q3 + i q4."""
    return Spinor(complex(q.q1, q.q2), complex(q.q3, q.q4))


def quadruple_from_spinor(s: Spinor) -> KSQuadruple:
    """Exact inverse of spinor_from_quadruple."""
    return KSQuadruple(s.c2.imag, s.c1.real, s.c1.imag, s.c2.real)


def su2_matrix(rot: SpinorRotation) -> np.ndarray:
    """The 2x2 complex matrix B(c) = c4 I - i sigma^j c_j.

    Entries: [[c4 - i c3, -c2 - i c1], [c2 - i c1, c4 + i c3]]. Unitary with
    det +1 for unit parameters.
    """
    c4, c1, c2, c3 = rot.as_tuple()
    return np.array([[complex(c4, -c3), complex(-c2, -c1)],
                     [complex(c2, -c1), complex(c4, c3)]])


def compose(r1: SpinorRotation, r2: SpinorRotation) -> SpinorRotation:
    """Quaternion product matching su2_matrix(r1) @ su2_matrix(r2)."""
    a4, a1, a2, a3 = r1.as_tuple()
    b4, b1, b2, b3 = r2.as_tuple()
    return SpinorRotation(
        a4 * b4 - a1 * b1 - a2 * b2 - a3 * b3,
        a4 * b1 + b4 * a1 + a2 * b3 - a3 * b2,
        a4 * b2 + b4 * a2 + a3 * b1 - a1 * b3,
        a4 * b3 + b4 * a3 + a1 * b2 - a2 * b1,
    )


def conjugate(rot: SpinorRotation) -> SpinorRotation:
    """Inverse rotation (c4, -c)."""
    return SpinorRotation(rot.c4, -rot.c1, -rot.c2, -rot.c3)
