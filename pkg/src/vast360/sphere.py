"""Unit-sphere geometry: directions, spherical coordinates, rotations.

Coordinate convention used by the whole package (every other module refers
to this one and never redefines it):

* +x points at (theta=0, phi=0), +y at (theta=pi/2, phi=0), +z at the
  north pole (phi=pi/2).
* theta is the azimuth in [0, 2*pi), phi the elevation in [-pi/2, pi/2].
* Rotations compose intrinsically as Z(yaw) - Y(pitch) - X(roll), with
  yaw counterclockwise seen from +z, pitch raising the view toward +z,
  and roll about the view axis.  Hence
  ``apply_rotation(rotation_from_ypr(yaw, pitch, 0), X_AXIS)`` equals
  ``sph_to_vec(yaw, pitch)``.

Directions are plain numpy arrays of shape (3,) or (..., 3), unit norm.
All functions are pure; all values immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi
X_AXIS = np.array([1.0, 0.0, 0.0])
Y_AXIS = np.array([0.0, 1.0, 0.0])
Z_AXIS = np.array([0.0, 0.0, 1.0])

_POLE_EPS = 1.0 - 1e-12


@dataclass(frozen=True)
class SphericalCoord:
    """Azimuth/elevation pair in radians; theta wraps, bad phi raises."""

    theta: float
    phi: float

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise ValueError("spherical coordinates must be finite")
        if not -math.pi / 2 <= self.phi <= math.pi / 2:
            raise ValueError(f"elevation {self.phi!r} outside [-pi/2, pi/2]")
        object.__setattr__(self, "theta", self.theta % TWO_PI)

    @classmethod
    def from_degrees(cls, azimuth: float, elevation: float) -> "SphericalCoord":
        return cls(math.radians(azimuth), math.radians(elevation))

    def to_degrees(self) -> tuple[float, float]:
        return math.degrees(self.theta), math.degrees(self.phi)

    @classmethod
    def from_vec(cls, v: np.ndarray) -> "SphericalCoord":
        theta, phi = vec_to_sph(v)
        return cls(float(theta), float(phi))

    @property
    def vec(self) -> np.ndarray:
        return sph_to_vec(self.theta, self.phi)


def sph_to_vec(theta, phi) -> np.ndarray:
    """(theta, phi) -> unit vector; accepts scalars or broadcastable arrays."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    cp = np.cos(phi)
    return np.stack(
        np.broadcast_arrays(cp * np.cos(theta), cp * np.sin(theta), np.sin(phi)),
        axis=-1,
    )


def vec_to_sph(v: np.ndarray):
    """Unit vector -> (theta, phi); theta=0 at the poles by convention."""
    v = np.asarray(v, dtype=float)
    x, y, z = v[..., 0], v[..., 1], v[..., 2]
    theta = np.mod(np.arctan2(y, x), TWO_PI)
    theta = np.where(np.abs(z) >= _POLE_EPS, 0.0, theta)
    phi = np.arcsin(np.clip(z, -1.0, 1.0))
    if v.ndim == 1:
        return float(theta), float(phi)
    return theta, phi


def unit_vector(x, y, z) -> np.ndarray:
    """Build a unit vector from components, normalizing defensively."""
    return normalize(np.array([x, y, z], dtype=float))


def normalize(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    n = np.linalg.norm(v, axis=-1, keepdims=True)
    if np.any(n == 0.0):
        raise ValueError("cannot normalize a zero vector")
    return v / n


def orthodromic_distance(a: np.ndarray, b: np.ndarray):
    """Great-circle distance in radians, in [0, pi].

    Computed as atan2(|a x b|, a.b): stable near 0 and pi, where the
    acos form loses the digits tie-breaking depends on.  Broadcasts.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    cross = np.cross(a, b)
    d = np.arctan2(np.linalg.norm(cross, axis=-1), np.sum(a * b, axis=-1))
    return float(d) if np.ndim(d) == 0 else d


def rotation_from_ypr(yaw: float, pitch: float, roll: float) -> np.ndarray:
    """Intrinsic Z(yaw)-Y(pitch)-X(roll) rotation matrix.

    Positive pitch raises the rotated +x axis toward +z (elevation-positive
    sign convention, fixed here once for the whole package).
    """
    cy, sy = math.cos(yaw), math.sin(yaw)
    cp, sp = math.cos(pitch), math.sin(pitch)
    cr, sr = math.cos(roll), math.sin(roll)
    rz = np.array([[cy, -sy, 0.0], [sy, cy, 0.0], [0.0, 0.0, 1.0]])
    ry = np.array([[cp, 0.0, -sp], [0.0, 1.0, 0.0], [sp, 0.0, cp]])
    rx = np.array([[1.0, 0.0, 0.0], [0.0, cr, -sr], [0.0, sr, cr]])
    return rz @ ry @ rx


def apply_rotation(r: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Rotate direction(s) v by the 3x3 matrix r."""
    return np.asarray(v, dtype=float) @ np.asarray(r, dtype=float).T


def inverse_rotation(r: np.ndarray) -> np.ndarray:
    return np.asarray(r, dtype=float).T


def is_rotation(r: np.ndarray, tol: float = 1e-9) -> bool:
    r = np.asarray(r, dtype=float)
    if r.shape != (3, 3):
        return False
    ortho = np.max(np.abs(r @ r.T - np.eye(3))) <= tol
    return bool(ortho and abs(np.linalg.det(r) - 1.0) <= tol)


def rotation_align(src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    """Minimal rotation taking unit vector src onto dst (deterministic)."""
    src = np.asarray(src, dtype=float)
    dst = np.asarray(dst, dtype=float)
    axis = np.cross(src, dst)
    s = np.linalg.norm(axis)
    c = float(np.dot(src, dst))
    if s < 1e-15:
        if c > 0.0:
            return np.eye(3)
        # antipodal: rotate by pi about a fixed perpendicular axis
        e1, _ = tangent_basis(src)
        axis, s, c = e1, 0.0, -1.0
    else:
        axis = axis / s
    k = np.array(
        [
            [0.0, -axis[2], axis[1]],
            [axis[2], 0.0, -axis[0]],
            [-axis[1], axis[0], 0.0],
        ]
    )
    return np.eye(3) + s * k + (1.0 - c) * (k @ k)


def tangent_basis(p: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Deterministic orthonormal basis (e1, e2) of the tangent plane at p."""
    p = np.asarray(p, dtype=float)
    ref = Z_AXIS if abs(float(p[2])) < 0.9 else X_AXIS
    e1 = normalize(np.cross(ref, p))
    e2 = np.cross(p, e1)
    return e1, e2


def move_on_sphere(p: np.ndarray, bearing: float, distance: float) -> np.ndarray:
    """Walk along the great circle leaving p with the given bearing.

    Bearing 0 follows the first tangent-basis axis; pi/2 the second.
    """
    e1, e2 = tangent_basis(p)
    t = math.cos(bearing) * e1 + math.sin(bearing) * e2
    return math.cos(distance) * np.asarray(p, dtype=float) + math.sin(distance) * t


def slerp(a: np.ndarray, b: np.ndarray, t: float) -> np.ndarray:
    """Spherical linear interpolation between unit vectors a and b."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    omega = orthodromic_distance(a, b)
    if omega < 1e-12:
        return a.copy()
    if omega > math.pi - 1e-9:
        raise ValueError("slerp undefined for antipodal endpoints")
    so = math.sin(omega)
    return (math.sin((1.0 - t) * omega) / so) * a + (math.sin(t * omega) / so) * b
