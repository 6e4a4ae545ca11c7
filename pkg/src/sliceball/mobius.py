"""Classical and regular Moebius transformations of the unit ball.

A matrix A = [[a, c], [b, d]] with quaternion entries belongs to the
symmetry group of the ball when A^* diag(1,-1) A = diag(1,-1), i.e.

    |a|^2 - |b|^2 = 1,   |d|^2 - |c|^2 = 1,   conj(a) c - conj(b) d = 0.

The classical transformation F_A(q) = (qc + d)^{-1} (qa + b) preserves
the ball but is not slice regular.  Its regular counterpart replaces
the quotient with the *-inverse,

    rF_A(q) = (qc + d)^{-*} * (qa + b),

and every such map factors uniquely through the canonical form

    rF(q) = (q conj(a) - 1)^{-*} * (q - a) . u,   |a| < 1, |u| = 1,

where a is the unique zero in the ball and u a unit constant acting by
right multiplication.  matrix_to_canonical recovers (a, u) numerically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConversionError, DomainError, PreconditionError
from .quat import (DEFAULT_BOUNDARY_MARGIN, I, J, K, ONE, Quaternion, ZERO,
                   max_component_diff)
from .series import RegularPowerSeries

_NEWTON_CAP = 100
_NEWTON_DAMPING = 0.5
_NEWTON_RESIDUAL = 5e-14
_DEGENERATE_ZERO = 1e-8


@dataclass(frozen=True)
class SpOneOneMatrix:
    """Ball symmetry matrix [[a, c], [b, d]] with quaternion entries."""
    a: Quaternion
    b: Quaternion
    c: Quaternion
    d: Quaternion

    def residual(self):
        """Largest deviation from the three defining relations."""
        r1 = abs(self.a.norm_sq() - self.b.norm_sq() - 1.0)
        r2 = abs(self.d.norm_sq() - self.c.norm_sq() - 1.0)
        r3 = abs(self.a.conj() * self.c - self.b.conj() * self.d)
        return max(r1, r2, r3)

    def is_valid(self, tol=1e-10):
        return self.residual() <= tol

    def violated_relation(self, tol):
        """Name of the first defining relation broken beyond tol, or None."""
        if abs(self.a.norm_sq() - self.b.norm_sq() - 1.0) > tol:
            return "|a|^2 - |b|^2 = 1"
        if abs(self.d.norm_sq() - self.c.norm_sq() - 1.0) > tol:
            return "|d|^2 - |c|^2 = 1"
        if abs(self.a.conj() * self.c - self.b.conj() * self.d) > tol:
            return "conj(a) c - conj(b) d = 0"
        return None

    @classmethod
    def identity(cls):
        return cls(ONE, ZERO, ZERO, ONE)

    @classmethod
    def diagonal(cls, u, v):
        return cls(u, ZERO, ZERO, v)


def classical_apply(A, q):
    """F_A(q) = (qc + d)^{-1} (qa + b)."""
    if abs(q) >= 1.0:
        raise DomainError("classical transformation is applied inside the ball")
    return (q * A.c + A.d).inv() * (q * A.a + A.b)


def classical_differential(A, q, alpha):
    """Directional derivative of F_A at q, by the quotient rule."""
    den = (q * A.c + A.d).inv()
    num = q * A.a + A.b
    return -(den * (alpha * A.c) * den * num) + den * (alpha * A.a)


@dataclass(frozen=True)
class RegularMobius:
    """Canonical pair (a, u): q -> (q conj(a) - 1)^{-*} * (q - a) . u."""
    a: Quaternion
    u: Quaternion


def regular_apply(m, q):
    """Closed-form evaluation of the canonical regular transformation.

    Expanding the *-quotient gives the one-line rational form

        (q^2 |a|^2 - 2 q Re(a) + 1)^{-1} (q^2 a - q (a^2 + 1) + a) u.
    """
    if abs(q) >= 1.0:
        raise DomainError("regular transformation is applied inside the ball")
    a = m.a
    q2 = q * q
    den = q2 * a.norm_sq() - q * (2.0 * a.w) + 1
    num = q2 * a - q * (a * a + 1) + a
    return den.inv() * num * m.u


def _linear_factor_series(m):
    # f(q) = q conj(a) - 1 and g(q) = q - a for the canonical pair
    f = RegularPowerSeries([-ONE, m.a.conj()])
    g = RegularPowerSeries([-m.a, ONE])
    return f, g


def regular_apply_via_series(m, q, margin=DEFAULT_BOUNDARY_MARGIN):
    """Same map through series primitives only.

    Uses f^{-*} * g = (1/f^s) . (f^c * g) pointwise: the slice scalar
    f^s(q)^{-1} multiplies the evaluated convolution f^c * g.
    """
    if abs(q) >= 1.0 - margin:
        raise DomainError("series evaluation stays a margin inside the ball")
    f, g = _linear_factor_series(m)
    sym = f.symmetrize()
    num = f.conjugate().star(g)
    return sym.eval(q).inv() * num.eval(q) * m.u


def regular_differential(m, q, alpha):
    """Directional derivative of the canonical map at any q in the ball.

    Differentiates the rational closed form; d(q^2) applied to alpha is
    q alpha + alpha q (order matters).  At q = a it reduces to

        (1 - a^2)^{-1} (a alpha a - alpha) / (1 - |a|^2) . u.
    """
    a = m.a
    q2 = q * q
    sym = q * alpha + alpha * q
    den = q2 * a.norm_sq() - q * (2.0 * a.w) + 1
    num = q2 * a - q * (a * a + 1) + a
    dden = sym * a.norm_sq() - alpha * (2.0 * a.w)
    dnum = sym * a - alpha * (a * a + 1)
    di = den.inv()
    return (di * dnum - di * dden * di * num) * m.u


def matrix_regular_series(A):
    """Symmetrization and convolution series of rF_A = (qc+d)^{-*} * (qa+b)."""
    f = RegularPowerSeries([A.d, A.c])
    g = RegularPowerSeries([A.b, A.a])
    return f.symmetrize(), f.conjugate().star(g)


def matrix_regular_apply(A, q):
    """Evaluate the regular transformation of a matrix through its series."""
    if abs(q) >= 1.0:
        raise DomainError("regular transformation is applied inside the ball")
    sym, num = matrix_regular_series(A)
    return sym.eval(q).inv() * num.eval(q)


def _matrix_regular_differential(sym, num, q, alpha):
    # derivative of S(q)^{-1} N(q) for quadratic S (real coeffs) and N
    s1, s2 = sym.coeffs[1].w, sym.coeffs[2].w
    n1, n2 = num.coeffs[1], num.coeffs[2]
    pair = q * alpha + alpha * q
    ds = pair * s2 + alpha * s1
    dn = pair * n2 + alpha * n1
    si = sym.eval(q).inv()
    return si * dn - si * ds * si * num.eval(q)


def matrix_regular_differential(A, q, alpha):
    sym, num = matrix_regular_series(A)
    return _matrix_regular_differential(sym, num, q, alpha)


def matrix_to_canonical(A, tol=1e-10):
    """Factor rF_A as the canonical pair (a, u).

    a is the unique zero of rF_A in the ball, located by damped Newton
    started at the zero -b a^{-1} of the classical map (|a| >= 1 for a
    valid matrix, so the start always exists; 0 is the fallback).  The
    unit u then comes from rF_A(0) = a u, or from the differential at
    the zero when a is numerically 0, since rF(q) = -q u there.
    """
    if not A.is_valid(1e-8):
        raise PreconditionError(
            "matrix violates %s" % A.violated_relation(1e-8))
    sym, num = matrix_regular_series(A)

    try:
        q = -(A.b * A.a.inv())
        if abs(q) >= 1.0:
            q = ZERO
    except ArithmeticError:
        q = ZERO

    basis = (ONE, I, J, K)
    converged = False
    for _ in range(_NEWTON_CAP):
        val = sym.eval(q).inv() * num.eval(q)
        if abs(val) <= _NEWTON_RESIDUAL:
            converged = True
            break
        cols = [_matrix_regular_differential(sym, num, q, e) for e in basis]
        jac = np.array([[c.w for c in cols], [c.x for c in cols],
                        [c.y for c in cols], [c.z for c in cols]])
        rhs = -np.array(val.components())
        step = np.linalg.solve(jac, rhs)
        q = q + Quaternion(*(float(s) * _NEWTON_DAMPING for s in step))
        r = abs(q)
        if r >= 1.0 - 1e-9:
            q = q * ((1.0 - 1e-6) / r)
    if not converged:
        raise ConversionError("zero search did not converge in %d iterations"
                              % _NEWTON_CAP)

    a = q
    if abs(a) > _DEGENERATE_ZERO:
        u = a.inv() * (A.d.inv() * A.b)
    else:
        u = -_matrix_regular_differential(sym, num, a, ONE) \
            * (1.0 - a.norm_sq())
    u = u / abs(u)
    return RegularMobius(a, u)


def normalize_pair(m1, m2, tol=1e-10):
    """Unit u with m1 = R_u after m2, for canonical maps sharing a zero."""
    if max_component_diff(m1.a, m2.a) > tol:
        raise PreconditionError("canonical forms have different zeros")
    return m2.u.inv() * m1.u


def conjugation_cu(u, q):
    """C_u(q) = u^{-1} q u.  Slice preserving but not regular-linear."""
    _require_unit(u)
    return u.inv() * q * u


def rotation_ru(u, q):
    """R_u(q) = q u.  Regular, fixes 0."""
    _require_unit(u)
    return q * u


def _require_unit(u):
    if abs(abs(u) - 1.0) > 1e-9:
        raise PreconditionError("expected a unit quaternion, |u| = %g" % abs(u))


def random_sp11(rng, max_boost=1.5):
    """Random ball symmetry via the rotation-boost-rotation factorization.

    diag(u1, v1) . [[cosh t, sinh t], [sinh t, cosh t]] . diag(u2, v2)
    with unit quaternions on the diagonals and t uniform on [0, max_boost].
    """
    from .quat import random_unit_quaternion
    u1 = random_unit_quaternion(rng)
    v1 = random_unit_quaternion(rng)
    u2 = random_unit_quaternion(rng)
    v2 = random_unit_quaternion(rng)
    t = float(rng.uniform(0.0, max_boost))
    ch, sh = math.cosh(t), math.sinh(t)
    return SpOneOneMatrix(a=(u1 * u2) * ch, c=(u1 * v2) * sh,
                          b=(v1 * u2) * sh, d=(v1 * v2) * ch)
