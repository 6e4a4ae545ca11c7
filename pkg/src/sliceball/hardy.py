"""Hardy-space reproducing kernels and the pseudo-hyperbolic distance.

The reproducing kernel of the slice-regular Hardy space of the ball is
k_q(w) = sum_n w^n conj(q)^n, so inner products of kernels reduce to

    <k_p, k_q> = sum_n q^n conj(p)^n,      ||k_q||^2 = 1 / (1 - |q|^2),

and the pseudo-hyperbolic distance is the defect of the normalized
kernels from alignment:

    delta(p, q) = sqrt(1 - |<k_p/||k_p||, k_q/||k_q||>|^2).

delta(0, q) = |q|, and on a common slice delta is the classical disk
pseudo-hyperbolic distance |p - q| / |1 - q conj(p)|.  The square root
of the split tangent norm is its infinitesimal form, probed here by
step extrapolation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PreconditionError
from .geometry import arcozzi_sarfatti_norm
from .quat import Quaternion, slice_decompose

DEFAULT_DELTA_TOL = 1e-10
_ORDER_CAP = 2_000_000


def _check_ball(label, q):
    if abs(q) >= 1.0:
        raise DomainError("%s must lie in the open unit ball" % label)


def kernel_norm_sq(q):
    """||k_q||^2 = 1 / (1 - |q|^2)."""
    _check_ball("q", q)
    return 1.0 / (1.0 - q.norm_sq())


def kernel_inner(p, q, n_terms):
    """Truncated kernel pairing sum_{n=0}^{N} q^n conj(p)^n.

    Powers of a quaternion stay on its slice, so q^n and conj(p)^n are
    complex powers lifted back along the slice units of q and p; the
    whole sum collapses to four real dot products over n.
    """
    _check_ball("p", p)
    _check_ball("q", q)
    sq = slice_decompose(q)
    sp = slice_decompose(p)
    n = np.arange(n_terms + 1)
    zq = complex(sq.x, sq.y) ** n
    zp = complex(sp.x, -sp.y) ** n      # conj(p) on the slice of p
    s00 = float(zq.real @ zp.real)
    s01 = float(zq.real @ zp.imag)
    s10 = float(zq.imag @ zp.real)
    s11 = float(zq.imag @ zp.imag)
    u, v = sq.unit, sp.unit
    dot = u.x * v.x + u.y * v.y + u.z * v.z
    cx = u.y * v.z - u.z * v.y
    cy = u.z * v.x - u.x * v.z
    cz = u.x * v.y - u.y * v.x
    return Quaternion(s00 - s11 * dot,
                      s01 * v.x + s10 * u.x + s11 * cx,
                      s01 * v.y + s10 * u.y + s11 * cy,
                      s01 * v.z + s10 * u.z + s11 * cz)


@dataclass(frozen=True)
class KernelTruncation:
    """Truncation order with its a-priori geometric tail bound."""
    order: int
    tail_bound: float


def tail_bound(p, q, order):
    """(|p| |q|)^{order+1} / (1 - |p| |q|), bounding the omitted tail."""
    r = abs(p) * abs(q)
    if r < 1e-300:
        return 0.0
    return r ** (order + 1) / (1.0 - r)


def truncation_for(p, q, tol=DEFAULT_DELTA_TOL):
    """Smallest order whose tail bound drops below tol."""
    _check_ball("p", p)
    _check_ball("q", q)
    r = abs(p) * abs(q)
    if r < 1e-300:
        return KernelTruncation(order=0, tail_bound=0.0)
    n = max(0, int(math.ceil(math.log(tol * (1.0 - r)) / math.log(r))) - 1)
    while n <= _ORDER_CAP and tail_bound(p, q, n) >= tol:
        n += 1
    if n > _ORDER_CAP:
        raise DomainError(
            "points too close to the boundary for tolerance %g" % tol)
    while n > 0 and tail_bound(p, q, n - 1) < tol:
        n -= 1
    return KernelTruncation(order=n, tail_bound=tail_bound(p, q, n))


def _cos_sq(p, q, order):
    inner = kernel_inner(p, q, order)
    return inner.norm_sq() * (1.0 - p.norm_sq()) * (1.0 - q.norm_sq())


def delta_detail(p, q, tol=DEFAULT_DELTA_TOL):
    """delta(p, q) together with the truncation actually used.

    The kernel tail is driven to tol^2 / 4; through the square root
    that keeps the error of delta itself below tol even when the two
    points nearly coincide.
    """
    trunc = truncation_for(p, q, 0.25 * tol * tol)
    c2 = _cos_sq(p, q, trunc.order)
    d = math.sqrt(max(1.0 - c2, 0.0))
    return d, trunc


def delta(p, q, tol=DEFAULT_DELTA_TOL):
    """Pseudo-hyperbolic distance between two points of the ball."""
    return delta_detail(p, q, tol)[0]


def _neville_at_zero(ts, values):
    p = list(values)
    n = len(ts)
    prev = p[0]
    for level in range(1, n):
        for i in range(n - level):
            p[i] = (ts[i] * p[i + 1] - ts[i + level] * p[i]) \
                / (ts[i] - ts[i + level])
        prev = p[1] if n - level > 1 else prev
    return p[0], abs(p[0] - prev)


@dataclass(frozen=True)
class InfinitesimalProbe:
    """Extrapolated limit of delta(q, q + t alpha) / t with the tangent
    norm it should reproduce."""
    limit: float
    norm: float
    ratio: float
    conclusive: bool
    step_values: tuple


def infinitesimal_ratio(q, alpha, steps=(1e-2, 5e-3, 2.5e-3, 1.25e-3),
                        tol=1e-12):
    """Probe the infinitesimal form of delta along alpha at q.

    Evaluates delta(q, q + t alpha) / t on the given decreasing steps
    and extrapolates the polynomial error model to t = 0.  The reported
    ratio compares the limit to sqrt of the split tangent norm; the
    probe is conclusive when the extrapolation table has settled.
    """
    if abs(alpha) <= 1e-12:
        raise PreconditionError("probe direction must be nonzero")
    steps = tuple(float(t) for t in steps)
    if len(steps) < 3 or any(t <= 0 for t in steps) \
            or any(a <= b for a, b in zip(steps, steps[1:])):
        raise PreconditionError("steps must be positive and decreasing")
    _check_ball("q", q)
    if abs(q + alpha * steps[0]) >= 1.0:
        raise DomainError("largest probe step leaves the unit ball")
    values = tuple(delta(q, q + alpha * t, tol) / t for t in steps)
    limit, settle = _neville_at_zero(steps, values)
    norm = math.sqrt(arcozzi_sarfatti_norm(q, alpha))
    conclusive = settle <= 1e-5 * (abs(limit) + 1.0) and limit > 0.0
    return InfinitesimalProbe(limit=limit, norm=norm,
                              ratio=limit / norm if norm > 0 else math.inf,
                              conclusive=conclusive, step_values=values)
