"""Named verification suites for every documented invariant.

Each check draws its own deterministic sample stream (seeded from the
run seed and a stable hash of the check name, so execution order never
matters), measures the worst violation of one mathematical statement,
and compares it against a tolerance derived from the run
configuration.  Pinned tolerances scale linearly with atol / rtol
relative to their defaults, so tightening either flag makes every
check strictly harder.
"""
from __future__ import annotations

import math
import zlib
from dataclasses import dataclass, field

import numpy as np

from . import geometry, hardy, mobius
from .config import DEFAULT_ATOL, DEFAULT_RTOL, RunConfig
from .quat import (I, J, K, ONE, Quaternion, ZERO, max_component_diff,
                   project_slice, random_ball_point, random_imaginary_unit,
                   random_tangent, random_unit_quaternion, slice_decompose)
from .series import RegularPowerSeries

_BASIS = (ONE, I, J, K)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    claim: str
    samples: int
    max_error: float
    tolerance: float
    passed: bool
    details: dict = field(default_factory=dict)


class Worst:
    """Track the sample whose error/allowed ratio is worst."""

    def __init__(self, default_allowed=1.0):
        self.error = 0.0
        self.allowed = default_allowed
        self._ratio = 0.0

    def add(self, error, allowed):
        ratio = error / allowed
        if ratio >= self._ratio:
            self._ratio = ratio
            self.error = error
            self.allowed = allowed

    @property
    def passed(self):
        return self._ratio <= 1.0


def _atol_scale(config):
    return config.atol / DEFAULT_ATOL


def _rtol_scale(config):
    return config.rtol / DEFAULT_RTOL


def _rel_q(v1, v2):
    return max_component_diff(v1, v2) / max(abs(v1), abs(v2), 1e-12)


def _rel_s(x, y):
    return abs(x - y) / max(abs(x), abs(y), 1e-12)


def _ball(rng, radius):
    # uniform in the solid ball of the given radius
    return random_ball_point(rng, margin=0.0) * radius


def _slice_point(rng, unit, radius):
    while True:
        x = float(rng.uniform(-radius, radius))
        y = float(rng.uniform(0.0, radius))
        if x * x + y * y < radius * radius:
            return Quaternion(x, y * unit.x, y * unit.y, y * unit.z)


def _slice_tangent(rng, unit):
    g = rng.standard_normal(2)
    return Quaternion(float(g[0]), float(g[1]) * unit.x,
                      float(g[1]) * unit.y, float(g[1]) * unit.z)


# ----------------------------------------------------------------- quat

def check_norm_multiplicative(config, rng):
    w = Worst()
    for _ in range(config.samples):
        p, q = random_tangent(rng), random_tangent(rng)
        scale = abs(p) * abs(q)
        w.add(abs(abs(p * q) - scale),
              1e-12 * max(1.0, scale) * _atol_scale(config))
    return w


def check_projection_resolution(config, rng):
    w = Worst()
    for _ in range(config.samples):
        unit = random_imaginary_unit(rng)
        a = random_tangent(rng)
        par, perp = project_slice(unit, a)
        allowed = config.atol + config.rtol * max(1.0, abs(a))
        w.add(max_component_diff(par + perp, a), allowed)
        w.add(max_component_diff(project_slice(unit, par)[0], par), allowed)
        w.add(abs((par * perp.conj()).w),
              config.atol + config.rtol * max(1.0, a.norm_sq()))
    return w


def check_projection_anticommute(config, rng):
    w = Worst()
    for _ in range(config.samples):
        unit = random_imaginary_unit(rng)
        a = random_tangent(rng)
        perp = project_slice(unit, a)[1]
        w.add(max_component_diff(unit * perp, -(perp * unit)),
              config.atol + config.rtol * max(1.0, abs(a)))
    return w


def check_slice_roundtrip(config, rng):
    w = Worst()
    for _ in range(config.samples):
        q = random_ball_point(rng, config.boundary_margin)
        w.add(max_component_diff(slice_decompose(q).point(), q),
              1e-14 * _atol_scale(config))
    return w


# --------------------------------------------------------------- series

def _random_series(rng, max_order, scale=0.7):
    order = int(rng.integers(0, max_order + 1))
    return RegularPowerSeries(
        [random_tangent(rng) * scale for _ in range(order + 1)])


def _coeff_scale(*fs):
    return max(abs(c) for f in fs for c in f.coeffs)


def check_star_associative(config, rng):
    w = Worst()
    for _ in range(max(10, config.samples // 5)):
        f = _random_series(rng, 8)
        g = _random_series(rng, 8)
        h = _random_series(rng, 8)
        lhs = f.star(g).star(h)
        rhs = f.star(g.star(h))
        scale = max(1.0, _coeff_scale(lhs, rhs))
        for a, b in zip(lhs.coeffs, rhs.coeffs):
            w.add(max_component_diff(a, b),
                  1e-12 * scale * _atol_scale(config))
    return w


def check_symmetrization_commutes(config, rng):
    w = Worst()
    for _ in range(max(10, config.samples // 5)):
        f = _random_series(rng, 8)
        lhs = f.star(f.conjugate())
        rhs = f.conjugate().star(f)
        scale = max(1.0, _coeff_scale(lhs, rhs))
        for a, b in zip(lhs.coeffs, rhs.coeffs):
            w.add(max_component_diff(a, b),
                  1e-12 * scale * _atol_scale(config))
    return w


def check_symmetrization_real(config, rng):
    w = Worst()
    for _ in range(max(10, config.samples // 5)):
        sym = _random_series(rng, 8).symmetrize()
        scale = max(1.0, _coeff_scale(sym))
        for c in sym.coeffs:
            w.add(c.im_norm(), 1e-13 * scale * _atol_scale(config))
    return w


def check_slice_evaluation_homomorphism(config, rng):
    w = Worst()
    for _ in range(config.samples):
        unit = random_imaginary_unit(rng)
        f = RegularPowerSeries([_slice_tangent(rng, unit)
                                for _ in range(int(rng.integers(1, 7)))])
        g = RegularPowerSeries([_slice_tangent(rng, unit)
                                for _ in range(int(rng.integers(1, 7)))])
        q = _slice_point(rng, unit, 0.9)
        lhs = f.star(g).eval(q)
        rhs = f.eval(q) * g.eval(q)
        w.add(max_component_diff(lhs, rhs),
              config.atol + config.rtol * 10.0 * max(1.0, abs(lhs), abs(rhs)))
    return w


def _reciprocal_friendly(rng):
    # spectrum kept away from the ball so the reciprocal series converges
    # fast on |q| <= 0.5: either a Moebius linear factor or a perturbation
    # of a unit constant with geometrically decaying coefficients
    if rng.random() < 0.5:
        a = _ball(rng, 0.9)
        return RegularPowerSeries([-ONE, a.conj()])
    coeffs = [random_unit_quaternion(rng)]
    for n in range(1, int(rng.integers(2, 7))):
        coeffs.append(random_tangent(rng) * (0.5 * 0.25 ** n))
    return RegularPowerSeries(coeffs)


def check_reciprocal_residual(config, rng):
    w = Worst()
    for _ in range(max(10, config.samples // 5)):
        f = _reciprocal_friendly(rng)
        recip = f.reciprocal_series(config.truncation)
        q = _ball(rng, 0.5)
        allowed = 1e-9 * _rtol_scale(config)
        w.add(abs(recip.star(f).eval(q) - 1), allowed)
        w.add(abs(f.star(recip).eval(q) - 1), allowed)
    return w


# --------------------------------------------------------------- mobius

def _random_canonical(rng, radius=0.9):
    return mobius.RegularMobius(_ball(rng, radius),
                                random_unit_quaternion(rng))


def check_generator_valid(config, rng):
    w = Worst()
    for _ in range(config.samples):
        w.add(mobius.random_sp11(rng).residual(),
              1e-12 * _atol_scale(config))
    return w


def check_ball_preserved(config, rng):
    worst_norm = 0.0
    n = config.samples
    for _ in range(n):
        A = mobius.random_sp11(rng)
        m = _random_canonical(rng)
        q = random_ball_point(rng, config.boundary_margin)
        worst_norm = max(worst_norm, abs(mobius.classical_apply(A, q)),
                         abs(mobius.regular_apply(m, q)))
    return CheckResult("", "", "", n, worst_norm, 1.0, worst_norm < 1.0)


def check_fixed_points(config, rng):
    w = Worst()
    for _ in range(config.samples):
        m = _random_canonical(rng)
        q = _ball(rng, 0.9)
        allowed = config.atol + config.rtol
        w.add(abs(mobius.regular_apply(m, m.a)), allowed)
        w.add(max_component_diff(mobius.regular_apply(m, ZERO), m.a * m.u),
              allowed)
        w.add(max_component_diff(
            mobius.regular_apply(mobius.RegularMobius(ZERO, ONE), q), -q),
            allowed)
    return w


def check_closed_vs_series(config, rng):
    w = Worst()
    for _ in range(config.samples):
        m = _random_canonical(rng)
        q = _ball(rng, 0.7)
        w.add(max_component_diff(mobius.regular_apply(m, q),
                                 mobius.regular_apply_via_series(m, q)),
              1e-10 * _rtol_scale(config))
    return w


def check_differential_fd(config, rng, h=1e-5):
    w = Worst()
    allowed = 1e-6 * _rtol_scale(config)
    for _ in range(config.samples):
        q = _ball(rng, 0.9)
        alpha = random_tangent(rng)
        m = _random_canonical(rng)
        ana = mobius.regular_differential(m, q, alpha)
        fd = (mobius.regular_apply(m, q + alpha * h)
              - mobius.regular_apply(m, q - alpha * h)) / (2.0 * h)
        w.add(_rel_q(ana, fd), allowed)
        A = mobius.random_sp11(rng)
        ana = mobius.classical_differential(A, q, alpha)
        fd = (mobius.classical_apply(A, q + alpha * h)
              - mobius.classical_apply(A, q - alpha * h)) / (2.0 * h)
        w.add(_rel_q(ana, fd), allowed)
    return w


def check_origin_isotropy(config, rng):
    w = Worst()
    for _ in range(config.samples):
        u = random_unit_quaternion(rng)
        q = random_ball_point(rng, config.boundary_margin)
        rot = mobius.RegularMobius(ZERO, u)
        w.add(max_component_diff(mobius.regular_apply(rot, q), q * (-u)),
              config.atol + config.rtol)
        a = _ball(rng, 0.9)
        if abs(a) > 1e-6:
            moved = abs(mobius.regular_apply(mobius.RegularMobius(a, u),
                                             ZERO))
            if moved <= 1e-6:
                w.add(math.inf, 1.0)
    return w


def check_injectivity(config, rng):
    threshold = 1e-9
    min_sep = math.inf
    for _ in range(config.samples):
        m = _random_canonical(rng)
        q1 = _ball(rng, 0.9)
        q2 = _ball(rng, 0.9)
        while abs(q1 - q2) <= 1e-6:
            q2 = _ball(rng, 0.9)
        sep = abs(mobius.regular_apply(m, q1) - mobius.regular_apply(m, q2))
        min_sep = min(min_sep, sep)
    return CheckResult("", "", "", config.samples,
                       max(0.0, threshold - min_sep), threshold,
                       min_sep > threshold,
                       details={"min_separation": min_sep})


def check_canonical_roundtrip(config, rng):
    w = Worst()
    n_mat = max(5, config.samples // 10)
    allowed = 1e-8 * _rtol_scale(config)
    for _ in range(n_mat):
        A = mobius.random_sp11(rng)
        m = mobius.matrix_to_canonical(A)
        if abs(m.a) >= 1.0 or abs(abs(m.u) - 1.0) > 1e-12:
            w.add(math.inf, 1.0)
            continue
        for _ in range(20):
            q = _ball(rng, 0.7)
            w.add(max_component_diff(mobius.regular_apply(m, q),
                                     mobius.matrix_regular_apply(A, q)),
                  allowed)
    return w


def check_normalize_pair(config, rng):
    w = Worst()
    for _ in range(max(10, config.samples // 5)):
        a = _ball(rng, 0.9)
        m1 = mobius.RegularMobius(a, random_unit_quaternion(rng))
        m2 = mobius.RegularMobius(a, random_unit_quaternion(rng))
        u = mobius.normalize_pair(m1, m2)
        for _ in range(5):
            q = _ball(rng, 0.9)
            w.add(max_component_diff(mobius.regular_apply(m1, q),
                                     mobius.regular_apply(m2, q) * u),
                  1e-12 * _rtol_scale(config))
    return w


# ------------------------------------------------------------- geometry

def _tangent_triple(rng, radius=0.9):
    return _ball(rng, radius), random_tangent(rng), random_tangent(rng)


def check_hermitian_u_independent(config, rng):
    w = Worst()
    inner = max(2, config.samples // 20)
    allowed = 1e-11 * _rtol_scale(config)
    for _ in range(config.samples):
        q, a, b = _tangent_triple(rng)
        ref = geometry.slice_hermitian_via_definition(q, a, b, ONE)
        scale = max(abs(ref), 1e-12)
        for _ in range(inner):
            u = random_unit_quaternion(rng)
            val = geometry.slice_hermitian_via_definition(q, a, b, u)
            w.add(max_component_diff(val, ref) / scale, allowed)
    return w


def check_hermitian_closed_form(config, rng):
    w = Worst()
    allowed = 1e-11 * _rtol_scale(config)
    for _ in range(config.samples):
        q, a, b = _tangent_triple(rng)
        u = random_unit_quaternion(rng)
        w.add(_rel_q(geometry.slice_hermitian_via_definition(q, a, b, u),
                     geometry.slice_hermitian(q, a, b)), allowed)
    return w


def check_riemannian_triple(config, rng):
    w = Worst()
    allowed = 1e-11 * _rtol_scale(config)
    for _ in range(config.samples * 10):
        q, a, b = _tangent_triple(rng)
        closed = geometry.slice_riemannian(q, a, b, "closed")
        corrected = geometry.slice_riemannian(q, a, b, "corrected")
        via_h = geometry.slice_riemannian(q, a, b, "via-h")
        w.add(_rel_s(closed, corrected), allowed)
        w.add(_rel_s(closed, via_h), allowed)
    return w


def check_riemannian_vs_split_norm(config, rng):
    w = Worst()
    allowed = 1e-11 * _rtol_scale(config)
    for _ in range(config.samples * 10):
        q = _ball(rng, 0.9)
        a = random_tangent(rng)
        w.add(_rel_s(geometry.slice_riemannian(q, a, a),
                     geometry.arcozzi_sarfatti_norm(q, a)), allowed)
    return w


def check_split_scalar_identity(config, rng):
    w = Worst()
    for _ in range(config.samples * 10):
        q = random_ball_point(rng, config.boundary_margin)
        lhs = (1 - q * q).norm_sq() - 4.0 * q.im.norm_sq()
        rhs = (1.0 - q.norm_sq()) ** 2
        w.add(abs(lhs - rhs), 1e-13 * _atol_scale(config))
    return w


def check_hermitian_symmetric(config, rng):
    w = Worst()
    for _ in range(config.samples):
        q, a, b = _tangent_triple(rng)
        hab = geometry.slice_hermitian(q, a, b)
        hba = geometry.slice_hermitian(q, b, a)
        w.add(max_component_diff(hab, hba.conj()),
              config.atol + config.rtol * max(1.0, abs(hab)))
    return w


def check_hermitian_positive(config, rng):
    w = Worst()
    for _ in range(config.samples):
        q, a, _ = _tangent_triple(rng)
        for v in (a, a * 1e-8):
            h = geometry.slice_hermitian(q, v, v)
            w.add(h.im_norm(), config.atol + config.rtol * max(1.0, abs(h)))
            if h.w <= 0.0:
                w.add(math.inf, 1.0)
    return w


def check_decomposition(config, rng):
    w = Worst()
    for _ in range(config.samples):
        q, a, b = _tangent_triple(rng)
        tv = geometry.tensor_value(q, a, b)
        g_closed = geometry.slice_riemannian(q, a, b, "closed")
        recon = Quaternion(g_closed, 0, 0, 0) + tv.omega
        w.add(max_component_diff(tv.h, recon),
              config.atol + config.rtol * max(1.0, abs(tv.h)))
    return w


def check_kahler_antisymmetric(config, rng):
    w = Worst()
    for _ in range(config.samples):
        q, a, b = _tangent_triple(rng)
        oab = geometry.slice_kahler(q, a, b)
        oba = geometry.slice_kahler(q, b, a)
        w.add(max_component_diff(oab, -oba),
              config.atol + config.rtol * max(1.0, abs(oab)))
    return w


def check_kahler_rank(config, rng):
    n = max(5, config.samples // 10)
    failures = 0
    for _ in range(n):
        if geometry.kahler_rank(_ball(rng, 0.9)) != 4:
            failures += 1
    return CheckResult("", "", "", n, float(failures), 0.5, failures == 0)


def check_hyperbolic_invariance(config, rng):
    w = Worst()
    allowed = 1e-8 * _rtol_scale(config)
    for _ in range(max(5, config.samples // 5)):
        A = mobius.random_sp11(rng)
        q, a, b = _tangent_triple(rng)
        image = mobius.classical_apply(A, q)
        da = mobius.classical_differential(A, q, a)
        db = mobius.classical_differential(A, q, b)
        w.add(_rel_s(geometry.hyperbolic_metric(image, da, db),
                     geometry.hyperbolic_metric(q, a, b)), allowed)
    return w


def check_origin_noninvariance(config, rng):
    report = geometry.noninvariance_witness(rng, config.samples)
    passed = report.violation_found \
        and report.g_max_error <= 1e-12 * _atol_scale(config)
    return CheckResult("", "", "", config.samples, report.g_max_error,
                       1e-12 * _atol_scale(config), passed,
                       details={"violation_found": report.violation_found,
                                "omega_violation": report.omega_violation})


def _check_representation(config, rng, tensor):
    w = Worst()
    allowed = 1e-11 * _rtol_scale(config)
    fns = {"G": geometry.slice_riemannian, "H": geometry.slice_hermitian,
           "Omega": geometry.slice_kahler}
    direct = fns[tensor]
    for _ in range(config.samples):
        q, a, b = _tangent_triple(rng)
        u = random_unit_quaternion(rng)
        lhs = direct(q, a, b)
        rhs = geometry.representation_transform(u, tensor, q, a, b)
        if tensor == "G":
            w.add(_rel_s(lhs, rhs), allowed)
        else:
            w.add(_rel_q(lhs, rhs), allowed)
    return w


def check_representation_riemannian(config, rng):
    return _check_representation(config, rng, "G")


def check_representation_hermitian(config, rng):
    return _check_representation(config, rng, "H")


def check_representation_kahler(config, rng):
    return _check_representation(config, rng, "Omega")


def check_slice_restriction_metric(config, rng):
    w = Worst()
    allowed = 1e-11 * _rtol_scale(config)
    for _ in range(config.samples):
        unit = random_imaginary_unit(rng)
        q = _slice_point(rng, unit, 0.9)
        a = _slice_tangent(rng, unit)
        b = _slice_tangent(rng, unit)
        g_i = geometry.slice_restriction_metric(unit, q, a, b)
        w.add(_rel_s(g_i, geometry.slice_riemannian(q, a, b)), allowed)
        w.add(_rel_s(g_i, geometry.hyperbolic_metric(q, a, b)), allowed)
    return w


def check_slice_restriction_kahler(config, rng):
    w = Worst()
    allowed = 1e-11 * _rtol_scale(config)
    for _ in range(config.samples):
        unit = random_imaginary_unit(rng)
        q = _slice_point(rng, unit, 0.9)
        a = _slice_tangent(rng, unit)
        b = _slice_tangent(rng, unit)
        omega_i = geometry.slice_restriction_kahler(unit, q, a, b)
        w.add(_rel_q(geometry.slice_kahler(q, a, b), unit * omega_i),
              allowed)
    return w


def check_segment_length(config, rng):
    w = Worst()
    allowed = 1e-6 * _rtol_scale(config)
    for r in (0.3, 0.5, 0.7):
        unit = random_imaginary_unit(rng)
        target = math.atanh(r)
        for metric in ("Ghat", "G"):
            pts = [unit * (r * k / 4000.0) for k in range(4001)]
            w.add(abs(geometry.curve_length(pts, metric) - target), allowed)
    return w


def check_distance_self(config, rng):
    w = Worst()
    for _ in range(3):
        p = _ball(rng, 0.9)
        res = geometry.distance_estimate(p, p)
        w.add(res.distance, 1e-9)
        if not res.converged:
            w.add(math.inf, 1.0)
    return w


# ---------------------------------------------------------------- hardy

def check_delta_origin(config, rng):
    w = Worst()
    allowed = 1e-10 * _rtol_scale(config)
    for _ in range(config.samples):
        q = random_ball_point(rng, config.boundary_margin)
        w.add(abs(hardy.delta(ZERO, q, config.delta_tol) - abs(q)), allowed)
    return w


def check_delta_symmetric(config, rng):
    w = Worst()
    for _ in range(config.samples):
        p, q = _ball(rng, 0.9), _ball(rng, 0.9)
        w.add(abs(hardy.delta(p, q, config.delta_tol)
                  - hardy.delta(q, p, config.delta_tol)),
              2.0 * config.delta_tol)
    return w


def check_delta_range(config, rng):
    w = Worst()
    for _ in range(config.samples):
        p, q = _ball(rng, 0.9), _ball(rng, 0.9)
        d = hardy.delta(p, q, config.delta_tol)
        w.add(max(-d, d - 1.0, 0.0), 1e-15)
    return w


def check_delta_slice_form(config, rng):
    w = Worst()
    allowed = 1e-9 * _rtol_scale(config)
    for _ in range(config.samples):
        unit = random_imaginary_unit(rng)
        p = _slice_point(rng, unit, 0.9)
        q = _slice_point(rng, unit, 0.9)
        zp = slice_decompose(p).as_complex()
        zq = slice_decompose(q).as_complex()
        # points share a slice, so the classical disk formula applies
        closed = abs(zp - zq) / abs(1.0 - zq * zp.conjugate())
        w.add(abs(hardy.delta(p, q, config.delta_tol) - closed), allowed)
    return w


def check_delta_triangle(config, rng):
    w = Worst()
    allowed = 4.0 * config.delta_tol
    for _ in range(config.samples * 10):
        p, q, r = _ball(rng, 0.9), _ball(rng, 0.9), _ball(rng, 0.9)
        dpr = hardy.delta(p, r, config.delta_tol)
        dpq = hardy.delta(p, q, config.delta_tol)
        dqr = hardy.delta(q, r, config.delta_tol)
        w.add(max(0.0, dpr - dpq - dqr), allowed)
    return w


def check_infinitesimal_slice_ratio(config, rng):
    w = Worst()
    allowed = 1e-4 * _rtol_scale(config)
    for _ in range(max(3, config.samples // 50)):
        unit = random_imaginary_unit(rng)
        q = _slice_point(rng, unit, 0.8)
        a = _slice_tangent(rng, unit)
        if abs(a) < 1e-3:
            continue
        probe = hardy.infinitesimal_ratio(q, a)
        if not probe.conclusive:
            w.add(math.inf, 1.0)
        w.add(abs(probe.ratio - 1.0), allowed)
    return w


# -------------------------------------------------------------- registry

@dataclass(frozen=True)
class CheckDef:
    suite: str
    name: str
    claim: str
    fn: callable


CHECKS = [
    CheckDef("quat", "norm-multiplicative",
             "abs(p q) equals abs(p) abs(q)", check_norm_multiplicative),
    CheckDef("quat", "projection-resolution",
             "slice projections resolve the identity, are idempotent "
             "and mutually orthogonal", check_projection_resolution),
    CheckDef("quat", "projection-anticommute",
             "I anticommutes with the orthogonal projection of any tangent",
             check_projection_anticommute),
    CheckDef("quat", "slice-roundtrip",
             "x + y I rebuilds q from its slice coordinates",
             check_slice_roundtrip),
    CheckDef("series", "star-associative",
             "the *-product is associative", check_star_associative),
    CheckDef("series", "symmetrization-commutes",
             "f * f^c equals f^c * f coefficientwise",
             check_symmetrization_commutes),
    CheckDef("series", "symmetrization-real",
             "every coefficient of f^s is real",
             check_symmetrization_real),
    CheckDef("series", "slice-evaluation-homomorphism",
             "on a common slice, evaluation turns * into the pointwise "
             "product", check_slice_evaluation_homomorphism),
    CheckDef("series", "reciprocal-residual",
             "f * f^{-*} evaluates to 1 on |q| <= 1/2",
             check_reciprocal_residual),
    CheckDef("mobius", "generator-valid",
             "sampled matrices satisfy the defining relations of the "
             "ball symmetry group", check_generator_valid),
    CheckDef("mobius", "ball-preserved",
             "classical and regular transformations map the ball into "
             "itself", check_ball_preserved),
    CheckDef("mobius", "fixed-points",
             "the canonical map sends a to 0 and 0 to a u; a = 0 gives "
             "minus the identity", check_fixed_points),
    CheckDef("mobius", "closed-vs-series",
             "closed-form and series evaluations of the regular map agree",
             check_closed_vs_series),
    CheckDef("mobius", "differential-fd",
             "analytic differentials match central finite differences",
             check_differential_fd),
    CheckDef("mobius", "origin-isotropy",
             "canonical maps fixing 0 are exactly the right rotations",
             check_origin_isotropy),
    CheckDef("mobius", "injectivity",
             "separated inputs stay separated under the regular map",
             check_injectivity),
    CheckDef("mobius", "canonical-roundtrip",
             "matrix_to_canonical reproduces the matrix map on samples",
             check_canonical_roundtrip),
    CheckDef("mobius", "normalize-pair",
             "canonical maps sharing a zero differ by a right rotation",
             check_normalize_pair),
    CheckDef("geometry", "hermitian-u-independent",
             "the Hermitian tensor does not depend on the unit chosen in "
             "its definition", check_hermitian_u_independent),
    CheckDef("geometry", "hermitian-closed-form",
             "the definition of H matches its closed form",
             check_hermitian_closed_form),
    CheckDef("geometry", "riemannian-triple-agreement",
             "closed, corrected and via-H routes to G agree",
             check_riemannian_triple),
    CheckDef("geometry", "riemannian-vs-split-norm",
             "G equals the split tangent norm along the slice of q",
             check_riemannian_vs_split_norm),
    CheckDef("geometry", "split-scalar-identity",
             "|1 - q^2|^2 - 4 |Im q|^2 equals (1 - |q|^2)^2",
             check_split_scalar_identity),
    CheckDef("geometry", "hermitian-symmetric",
             "H(a, b) equals conj(H(b, a))", check_hermitian_symmetric),
    CheckDef("geometry", "hermitian-positive",
             "H(a, a) is real and positive down to tiny tangents",
             check_hermitian_positive),
    CheckDef("geometry", "decomposition-h-g-omega",
             "H decomposes as G + Omega", check_decomposition),
    CheckDef("geometry", "kahler-antisymmetric",
             "Omega(a, b) equals -Omega(b, a)", check_kahler_antisymmetric),
    CheckDef("geometry", "kahler-rank",
             "Omega has full rank 4 against the standard basis",
             check_kahler_rank),
    CheckDef("geometry", "hyperbolic-invariance",
             "the hyperbolic metric is invariant under classical "
             "pushforward", check_hyperbolic_invariance),
    CheckDef("geometry", "origin-noninvariance-witness",
             "a diagonal symmetry violates Omega_0 while G_0 stays "
             "invariant", check_origin_noninvariance),
    CheckDef("geometry", "representation-riemannian",
             "G transforms by unit conjugation of point and tangents",
             check_representation_riemannian),
    CheckDef("geometry", "representation-hermitian",
             "H transforms by unit conjugation with u^{-1} . u wrapping",
             check_representation_hermitian),
    CheckDef("geometry", "representation-kahler",
             "Omega transforms by unit conjugation with u^{-1} . u "
             "wrapping", check_representation_kahler),
    CheckDef("geometry", "slice-restriction-metric",
             "G restricts on each slice to the classical disk metric",
             check_slice_restriction_metric),
    CheckDef("geometry", "slice-restriction-kahler",
             "Omega restricts on each slice to I times the disk area form",
             check_slice_restriction_kahler),
    CheckDef("geometry", "segment-length",
             "radial segments have hyperbolic length atanh(r) under both "
             "metrics", check_segment_length),
    CheckDef("geometry", "distance-self",
             "the geodesic estimate between a point and itself is 0",
             check_distance_self),
    CheckDef("hardy", "delta-origin",
             "delta(0, q) equals |q|", check_delta_origin),
    CheckDef("hardy", "delta-symmetric",
             "delta is symmetric in its arguments", check_delta_symmetric),
    CheckDef("hardy", "delta-range",
             "delta takes values in [0, 1)", check_delta_range),
    CheckDef("hardy", "delta-slice-form",
             "on a common slice delta is the classical disk "
             "pseudo-hyperbolic distance", check_delta_slice_form),
    CheckDef("hardy", "delta-triangle",
             "delta satisfies the triangle inequality",
             check_delta_triangle),
    CheckDef("hardy", "infinitesimal-slice-ratio",
             "on slices the infinitesimal form of delta is the split "
             "tangent norm", check_infinitesimal_slice_ratio),
]


def _rng_for(seed, suite, name):
    key = zlib.crc32(("%s/%s" % (suite, name)).encode("utf-8"))
    return np.random.default_rng(np.random.SeedSequence([seed, key]))


def _matches(check, pattern):
    if pattern is None:
        return True
    full = "%s/%s" % (check.suite, check.name)
    return pattern in full


def run_checks(config=None, pattern=None):
    """Run all (or the matching) checks; returns CheckResult list."""
    config = config or RunConfig()
    results = []
    for check in CHECKS:
        if not _matches(check, pattern):
            continue
        rng = _rng_for(config.seed, check.suite, check.name)
        out = check.fn(config, rng)
        if isinstance(out, Worst):
            results.append(CheckResult(
                suite=check.suite, name=check.name, claim=check.claim,
                samples=config.samples, max_error=out.error,
                tolerance=out.allowed, passed=out.passed))
        else:
            results.append(CheckResult(
                suite=check.suite, name=check.name, claim=check.claim,
                samples=out.samples, max_error=out.max_error,
                tolerance=out.tolerance, passed=out.passed,
                details=out.details))
    return results
