import math

import numpy as np
import pytest

from conftest import assert_qclose
from sliceball import (I, J, K, ONE, PreconditionError, Quaternion,
                       arcozzi_sarfatti_norm, classical_differential,
                       conjugation_cu, curve_length, distance_estimate,
                       hyperbolic_metric, kahler_rank, max_component_diff,
                       noninvariance_witness, random_ball_point,
                       random_imaginary_unit, random_sp11,
                       random_unit_quaternion, representation_transform,
                       classical_apply, slice_hermitian,
                       slice_hermitian_via_definition, slice_kahler,
                       slice_restriction_kahler, slice_restriction_metric,
                       slice_riemannian, tensor_value)

HALF_I = Quaternion(0.0, 0.5, 0.0, 0.0)


def test_tensor_spot_values_on_slice_tangent():
    # q = i/2, alpha = beta = j: the orthogonal part carries all of it
    h = slice_hermitian(HALF_I, J, J)
    assert_qclose(h, Quaternion(0.64), atol=1e-14)
    assert abs(slice_riemannian(HALF_I, J, J) - 0.64) <= 1e-14
    assert abs(slice_riemannian(HALF_I, J, J, formula="corrected")
               - 0.64) <= 1e-14
    assert abs(slice_riemannian(HALF_I, J, J, formula="via-h")
               - 0.64) <= 1e-14
    assert abs(arcozzi_sarfatti_norm(HALF_I, J) - 0.64) <= 1e-14
    assert abs(hyperbolic_metric(HALF_I, J, J) - 16.0 / 9.0) <= 1e-14
    assert abs(arcozzi_sarfatti_norm(HALF_I, ONE) - 16.0 / 9.0) <= 1e-14


def test_tensor_spot_value_off_diagonal():
    # q = i/2, alpha = j, beta = 1: H is purely imaginary along j
    h = slice_hermitian(HALF_I, J, ONE)
    assert_qclose(h, Quaternion(0.0, 0.0, 16.0 / 15.0, 0.0), atol=1e-14)
    assert abs(slice_riemannian(HALF_I, J, ONE)) <= 1e-14
    assert_qclose(slice_kahler(HALF_I, J, ONE),
                  Quaternion(0.0, 0.0, 16.0 / 15.0, 0.0), atol=1e-14)


def test_origin_values():
    zero = Quaternion()
    assert_qclose(slice_hermitian(zero, I, J), I * J.conj(), atol=1e-15)
    assert abs(slice_riemannian(zero, I, I) - 1.0) <= 1e-15
    assert abs(hyperbolic_metric(zero, I, I) - 1.0) <= 1e-15


def test_scalar_split_identity(rng):
    for _ in range(500):
        q = random_ball_point(rng)
        q2 = q * q
        lhs = (1.0 - q2).norm_sq() - 4.0 * q.im_norm() ** 2
        rhs = (1.0 - q.norm_sq()) ** 2
        assert abs(lhs - rhs) <= 1e-13


def test_riemannian_formulas_agree(rng):
    for _ in range(300):
        q = random_ball_point(rng)
        alpha = Quaternion(*rng.standard_normal(4))
        beta = Quaternion(*rng.standard_normal(4))
        g1 = slice_riemannian(q, alpha, beta)
        g2 = slice_riemannian(q, alpha, beta, formula="corrected")
        g3 = slice_riemannian(q, alpha, beta, formula="via-h")
        scale = max(abs(g1), 1.0)
        assert abs(g1 - g2) <= 1e-11 * scale
        assert abs(g1 - g3) <= 1e-11 * scale


def test_riemannian_equals_split_norm(rng):
    for _ in range(300):
        q = random_ball_point(rng)
        alpha = Quaternion(*rng.standard_normal(4))
        got = slice_riemannian(q, alpha, alpha)
        want = arcozzi_sarfatti_norm(q, alpha)
        assert abs(got - want) <= 1e-11 * max(want, 1.0)


def test_hermitian_closed_form_vs_definition(rng):
    for _ in range(100):
        q = random_ball_point(rng)
        alpha = Quaternion(*rng.standard_normal(4))
        beta = Quaternion(*rng.standard_normal(4))
        closed = slice_hermitian(q, alpha, beta)
        defn = slice_hermitian_via_definition(q, alpha, beta)
        assert max_component_diff(closed, defn) <= 1e-11 * max(abs(closed),
                                                               1.0)
        u = random_unit_quaternion(rng)
        defn_u = slice_hermitian_via_definition(q, alpha, beta, u)
        assert max_component_diff(defn, defn_u) <= 1e-11 * max(abs(closed),
                                                               1.0)


def test_hermitian_structure(rng):
    for _ in range(200):
        q = random_ball_point(rng)
        alpha = Quaternion(*rng.standard_normal(4))
        beta = Quaternion(*rng.standard_normal(4))
        h_ab = slice_hermitian(q, alpha, beta)
        h_ba = slice_hermitian(q, beta, alpha)
        assert max_component_diff(h_ab, h_ba.conj()) <= 1e-11 * max(
            abs(h_ab), 1.0)
        h_aa = slice_hermitian(q, alpha, alpha)
        assert abs(h_aa.im) <= 1e-11 * max(abs(h_aa), 1.0)
        assert h_aa.re >= -1e-13
        # G and Omega are the real and imaginary parts of H
        tv = tensor_value(q, alpha, beta)
        assert abs(tv.g - h_ab.re) <= 1e-13 * max(abs(h_ab), 1.0)
        assert max_component_diff(tv.omega + Quaternion(tv.g), h_ab) \
            <= 1e-13 * max(abs(h_ab), 1.0)


def test_kahler_antisymmetric(rng):
    for _ in range(200):
        q = random_ball_point(rng)
        alpha = Quaternion(*rng.standard_normal(4))
        beta = Quaternion(*rng.standard_normal(4))
        w_ab = slice_kahler(q, alpha, beta)
        w_ba = slice_kahler(q, beta, alpha)
        assert max_component_diff(w_ab, -w_ba) <= 1e-11 * max(abs(w_ab), 1.0)
        assert abs(slice_kahler(q, alpha, alpha)) <= 1e-11 * max(
            abs(w_ab), 1.0)


def test_kahler_rank_is_full():
    # the quaternion-valued 2-form pairs nondegenerately everywhere
    assert kahler_rank(Quaternion()) == 4
    assert kahler_rank(Quaternion(0.3)) == 4
    assert kahler_rank(HALF_I) == 4
    assert kahler_rank(Quaternion(0.2, 0.1, -0.3, 0.2)) == 4


def test_hyperbolic_invariance(rng):
    for _ in range(100):
        A = random_sp11(rng)
        q = random_ball_point(rng)
        if abs(q) > 0.9:
            continue
        alpha = Quaternion(*rng.standard_normal(4))
        beta = Quaternion(*rng.standard_normal(4))
        fq = classical_apply(A, q)
        fa = classical_differential(A, q, alpha)
        fb = classical_differential(A, q, beta)
        got = hyperbolic_metric(fq, fa, fb)
        want = hyperbolic_metric(q, alpha, beta)
        assert abs(got - want) <= 1e-8 * max(abs(want), 1.0)


def test_noninvariance_witness():
    report = noninvariance_witness()
    assert report.violation_found
    assert report.omega_violation > 1.0
    assert report.g_max_error <= 1e-12
    assert_qclose(report.witness_d, I)
    assert_qclose(report.witness_a, ONE)


def test_representation_formulas(rng):
    # representation_transform carries (q, alpha, beta) through the
    # unit conjugation and wraps; the result equals the direct value
    for _ in range(100):
        u = random_unit_quaternion(rng)
        q = random_ball_point(rng)
        alpha = Quaternion(*rng.standard_normal(4))
        beta = Quaternion(*rng.standard_normal(4))

        g = slice_riemannian(q, alpha, beta)
        got = representation_transform(u, "G", q, alpha, beta)
        assert abs(got - g) <= 1e-11 * max(abs(g), 1.0)

        h = slice_hermitian(q, alpha, beta)
        got = representation_transform(u, "H", q, alpha, beta)
        assert max_component_diff(got, h) <= 1e-11 * max(abs(h), 1.0)

        w = slice_kahler(q, alpha, beta)
        got = representation_transform(u, "Omega", q, alpha, beta)
        assert max_component_diff(got, w) <= 1e-11 * max(abs(h), 1.0)

        # the same equivariance written out with conjugation_cu, which
        # conjugates by u^{-1}
        uq = conjugation_cu(u, q)
        ua = conjugation_cu(u, alpha)
        ub = conjugation_cu(u, beta)
        assert abs(slice_riemannian(uq, ua, ub) - g) <= 1e-11 * max(
            abs(g), 1.0)
        assert max_component_diff(slice_hermitian(uq, ua, ub),
                                  u.inv() * h * u) <= 1e-11 * max(abs(h), 1.0)
        assert max_component_diff(slice_kahler(uq, ua, ub),
                                  u.inv() * w * u) <= 1e-11 * max(abs(h), 1.0)


def test_slice_restrictions(rng):
    for _ in range(100):
        unit = random_imaginary_unit(rng)
        x, y = rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7)
        if math.hypot(x, y) > 0.9:
            continue
        q = Quaternion(x) + y * unit
        s, t = rng.standard_normal(2)
        alpha = Quaternion(s) + t * unit
        beta_c = rng.standard_normal(2)
        beta = Quaternion(beta_c[0]) + beta_c[1] * unit

        # on slice tangents the metric is the hyperbolic one
        got = slice_restriction_metric(unit, q, alpha, beta)
        want = hyperbolic_metric(q, alpha, beta)
        assert abs(got - want) <= 1e-11 * max(abs(want), 1.0)
        assert abs(slice_riemannian(q, alpha, beta) - want) <= 1e-11 * max(
            abs(want), 1.0)

        # the restricted 2-form lies along the slice unit
        omega = slice_kahler(q, alpha, beta)
        w_i = slice_restriction_kahler(unit, q, alpha, beta)
        assert max_component_diff(omega, w_i * unit) <= 1e-11 * max(
            abs(omega), 1.0)


def test_slice_restriction_requires_slice_tangents():
    with pytest.raises(PreconditionError):
        slice_restriction_metric(I, HALF_I, J, ONE)
    with pytest.raises(PreconditionError):
        slice_restriction_kahler(I, Quaternion(0.5, 0.7, 0.0, 0.0), ONE, J)


def test_curve_length_segment():
    n = 4000
    pts = [Quaternion(0.5 * k / n) for k in range(n + 1)]
    want = math.atanh(0.5)
    assert abs(curve_length(pts, "Ghat") - want) <= 1e-6
    assert abs(curve_length(pts, "G") - want) <= 1e-6
    with pytest.raises(PreconditionError):
        curve_length([Quaternion()])
    with pytest.raises(ValueError):
        curve_length(pts[:2], "bogus")


def test_distance_estimate_self(rng):
    p = random_ball_point(rng, 0.2)
    res = distance_estimate(p, p)
    assert res.converged
    assert res.distance <= 1e-9


def test_distance_estimate_radial():
    res = distance_estimate(Quaternion(), Quaternion(0.5), metric="Ghat")
    assert res.converged
    assert abs(res.distance - math.atanh(0.5)) <= 1e-4
    res = distance_estimate(Quaternion(), HALF_I, metric="G")
    assert res.converged
    assert abs(res.distance - math.atanh(0.5)) <= 1e-4


def test_distance_estimate_curved():
    # closed form for the real hyperbolic 4-ball with ds = |dq|/(1-|q|^2)
    p, q = Quaternion(0.5), HALF_I
    rho = math.sqrt(0.5 / (0.5 + 0.75 * 0.75))
    exact = math.atanh(rho)
    res = distance_estimate(p, q, metric="Ghat")
    assert res.converged
    assert abs(res.distance - exact) <= 1e-3
