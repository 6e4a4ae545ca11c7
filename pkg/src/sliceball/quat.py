"""Quaternion arithmetic, slice decomposition and seeded samplers.

A quaternion q = w + x i + y j + z k is stored as four real components.
Every point q with nonreal part lies on exactly one complex slice
C_I = {x + y I} where I is a unit imaginary quaternion (I^2 = -1); the
helpers here move between q and its slice coordinates and split tangent
vectors into components parallel and orthogonal to a slice.

Values are treated as immutable: all operations return new instances.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, SingularValueError

EPS_ZERO = 1e-13            # magnitudes at or below this count as zero
DEFAULT_BOUNDARY_MARGIN = 1e-3   # samplers stay inside |q| <= 1 - margin

_REAL = (int, float)


class Quaternion:
    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0.0, x=0.0, y=0.0, z=0.0):
        self.w = w
        self.x = x
        self.y = y
        self.z = z

    # -- algebra -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x,
                              self.y + other.y, self.z + other.z)
        if isinstance(other, _REAL):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w - other.w, self.x - other.x,
                              self.y - other.y, self.z - other.z)
        if isinstance(other, _REAL):
            return Quaternion(self.w - other, self.x, self.y, self.z)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _REAL):
            return Quaternion(other - self.w, -self.x, -self.y, -self.z)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            w1, x1, y1, z1 = self.w, self.x, self.y, self.z
            w2, x2, y2, z2 = other.w, other.x, other.y, other.z
            return Quaternion(
                w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
                w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
                w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
                w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
            )
        if isinstance(other, _REAL):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        # real scalars commute with every quaternion
        if isinstance(other, _REAL):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, _REAL):
            return Quaternion(self.w / other, self.x / other,
                              self.y / other, self.z / other)
        return NotImplemented

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __pos__(self):
        return self

    def __abs__(self):
        return math.sqrt(self.w * self.w + self.x * self.x
                         + self.y * self.y + self.z * self.z)

    def norm_sq(self):
        return (self.w * self.w + self.x * self.x
                + self.y * self.y + self.z * self.z)

    def conj(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def inv(self):
        """Multiplicative inverse conj(q) / |q|^2."""
        n = self.norm_sq()
        if n <= EPS_ZERO * EPS_ZERO:
            raise SingularValueError(
                "cannot invert quaternion with |q| <= %g" % EPS_ZERO)
        return Quaternion(self.w / n, -self.x / n, -self.y / n, -self.z / n)

    # -- structure -----------------------------------------------------

    @property
    def re(self):
        return self.w

    @property
    def im(self):
        """Imaginary part as a quaternion (not a scalar)."""
        return Quaternion(0.0, self.x, self.y, self.z)

    def im_norm(self):
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def components(self):
        return (self.w, self.x, self.y, self.z)

    @classmethod
    def from_components(cls, seq):
        w, x, y, z = seq
        return cls(float(w), float(x), float(y), float(z))

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return (self.w == other.w and self.x == other.x
                    and self.y == other.y and self.z == other.z)
        if isinstance(other, _REAL):
            return self.w == other and self.x == 0.0 and self.y == 0.0 \
                and self.z == 0.0
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return "Quaternion(%r, %r, %r, %r)" % (self.w, self.x, self.y, self.z)


ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def max_component_diff(p, q):
    return max(abs(p.w - q.w), abs(p.x - q.x), abs(p.y - q.y), abs(p.z - q.z))


def is_imaginary_unit(q, tol=1e-9):
    return abs(q.w) <= tol and abs(abs(q) - 1.0) <= tol


def as_imaginary_unit(q, tol=1e-9):
    """Validate and exactly normalize a unit imaginary quaternion."""
    if not is_imaginary_unit(q, tol):
        raise DomainError("expected a unit imaginary quaternion, got %r" % (q,))
    n = q.im_norm()
    return Quaternion(0.0, q.x / n, q.y / n, q.z / n)


@dataclass(frozen=True)
class SliceCoords:
    """Coordinates q = x + y I on the slice C_I, with y >= 0."""
    unit: Quaternion
    x: float
    y: float

    def point(self):
        u = self.unit
        return Quaternion(self.x, self.y * u.x, self.y * u.y, self.y * u.z)

    def as_complex(self):
        return complex(self.x, self.y)


def slice_decompose(q):
    """Write q = x + y I with y = |Im q| >= 0.

    Real axis points (y <= EPS_ZERO) sit on every slice; the unit
    defaults to i there and y is clamped to exactly 0.
    """
    y = q.im_norm()
    if y <= EPS_ZERO:
        return SliceCoords(I, q.w, 0.0)
    return SliceCoords(Quaternion(0.0, q.x / y, q.y / y, q.z / y), q.w, y)


def project_slice(unit, alpha):
    """Split alpha into its component in C_I and the orthogonal complement.

    pi_I(alpha) = (alpha - I alpha I) / 2 commutes with I,
    pi_I_perp(alpha) = (alpha + I alpha I) / 2 anticommutes with I,
    and the two are orthogonal for Re(a conj(b)).
    """
    s = unit * alpha * unit
    return (alpha - s) * 0.5, (alpha + s) * 0.5


# -- samplers ----------------------------------------------------------
# All sampling goes through an explicit numpy Generator so runs are
# reproducible from a seed alone; components are coerced to plain floats.

def random_ball_point(rng, margin=DEFAULT_BOUNDARY_MARGIN):
    """Uniform draw from the solid ball |q| <= 1 - margin."""
    v = _unit_vector(rng, 4)
    r = (1.0 - margin) * rng.random() ** 0.25
    return Quaternion(r * v[0], r * v[1], r * v[2], r * v[3])


def random_imaginary_unit(rng):
    v = _unit_vector(rng, 3)
    return Quaternion(0.0, v[0], v[1], v[2])


def random_unit_quaternion(rng):
    v = _unit_vector(rng, 4)
    return Quaternion(v[0], v[1], v[2], v[3])


def random_tangent(rng):
    """Standard Gaussian 4-vector, the generic tangent direction."""
    g = rng.standard_normal(4)
    return Quaternion(float(g[0]), float(g[1]), float(g[2]), float(g[3]))


def _unit_vector(rng, dim):
    while True:
        g = rng.standard_normal(dim)
        n = math.sqrt(float(g @ g))
        if n > 1e-12:
            return [float(c) / n for c in g]
