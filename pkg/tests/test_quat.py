import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import assert_qclose, oracle_mul, to_vec
from sliceball import (DomainError, I, J, K, ONE, Quaternion,
                       SingularValueError, as_imaginary_unit,
                       is_imaginary_unit, max_component_diff, project_slice,
                       random_ball_point, random_imaginary_unit,
                       random_unit_quaternion, slice_decompose)

components = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
quats = st.builds(Quaternion, components, components, components, components)


def test_hamilton_table():
    assert I * J == K
    assert J * K == I
    assert K * I == J
    assert J * I == -K
    assert I * I == Quaternion(-1.0)
    assert J * J == Quaternion(-1.0)
    assert K * K == Quaternion(-1.0)


@given(quats, quats)
def test_product_matches_matrix_oracle(p, q):
    assert_qclose(p * q, oracle_mul(p, q), atol=1e-9)


@given(quats, quats)
def test_norm_multiplicative(p, q):
    assert abs(abs(p * q) - abs(p) * abs(q)) <= 1e-9 * (1 + abs(p) * abs(q))


@given(quats, quats)
def test_conjugation_reverses_products(p, q):
    assert_qclose((p * q).conj(), q.conj() * p.conj(), atol=1e-9)


def test_inverse():
    q = Quaternion(1.0, 2.0, 3.0, 4.0)
    assert_qclose(q * q.inv(), ONE, atol=1e-15)
    assert_qclose(q.inv() * q, ONE, atol=1e-15)
    with pytest.raises(SingularValueError):
        Quaternion().inv()


def test_real_imaginary_split():
    q = Quaternion(1.5, -2.0, 0.25, 3.0)
    assert q.re == 1.5
    assert_qclose(q.im, Quaternion(0.0, -2.0, 0.25, 3.0))
    assert_qclose(Quaternion(q.re) + q.im, q)
    assert q.im_norm() == abs(q.im)


def test_scalar_arithmetic():
    q = Quaternion(1.0, 2.0, 3.0, 4.0)
    assert_qclose(2.0 * q, q * 2.0)
    assert_qclose(q / 2.0, Quaternion(0.5, 1.0, 1.5, 2.0))
    assert_qclose(1.0 + q, Quaternion(2.0, 2.0, 3.0, 4.0))
    assert_qclose(1.0 - q, Quaternion(0.0, -2.0, -3.0, -4.0))
    assert Quaternion(3.0) == 3.0


def test_slice_decompose_roundtrip(rng):
    for _ in range(200):
        q = random_ball_point(rng)
        sc = slice_decompose(q)
        assert sc.y >= 0.0
        assert abs(abs(sc.unit) - 1.0) <= 1e-15
        assert_qclose(sc.point(), q, atol=1e-14)
        assert sc.as_complex() == complex(sc.x, sc.y)


def test_slice_decompose_near_real_defaults_to_i():
    sc = slice_decompose(Quaternion(0.3, 1e-15, 0.0, 0.0))
    assert sc.unit == I
    assert sc.y == 0.0
    assert sc.x == 0.3


def test_project_slice_spot():
    par, perp = project_slice(I, Quaternion(2.0, 3.0, 4.0, 5.0))
    assert_qclose(par, Quaternion(2.0, 3.0, 0.0, 0.0))
    assert_qclose(perp, Quaternion(0.0, 0.0, 4.0, 5.0))

    s = 1.0 / math.sqrt(2.0)
    unit = as_imaginary_unit(Quaternion(0.0, s, s, 0.0))
    par, perp = project_slice(unit, J)
    assert_qclose(par, Quaternion(0.0, 0.5, 0.5, 0.0), atol=1e-15)
    assert_qclose(perp, Quaternion(0.0, -0.5, 0.5, 0.0), atol=1e-15)


def test_projection_properties(rng):
    for _ in range(100):
        unit = random_imaginary_unit(rng)
        alpha = Quaternion(*rng.standard_normal(4))
        par, perp = project_slice(unit, alpha)
        assert_qclose(par + perp, alpha, atol=1e-13)
        # parallel part commutes with the slice unit, orthogonal part
        # anticommutes
        assert max_component_diff(unit * par, par * unit) <= 1e-13
        assert max_component_diff(unit * perp, -(perp * unit)) <= 1e-13
        # orthogonal for the real part of alpha conj(beta)
        assert abs((par * perp.conj()).re) <= 1e-13


def test_imaginary_unit_validation():
    assert is_imaginary_unit(I)
    assert is_imaginary_unit(Quaternion(0.0, 0.6, 0.8, 0.0))
    assert not is_imaginary_unit(Quaternion(1.0))
    assert not is_imaginary_unit(Quaternion(0.0, 3.0, 4.0, 0.0))
    with pytest.raises(DomainError):
        as_imaginary_unit(Quaternion(0.5, 1.0, 0.0, 0.0))
    with pytest.raises(DomainError):
        as_imaginary_unit(Quaternion(0.0, 0.0, 2.0, 0.0))
    with pytest.raises(DomainError):
        as_imaginary_unit(Quaternion())
    # near-unit inputs come out exactly normalized
    u = as_imaginary_unit(Quaternion(0.0, 0.0, 1.0 + 1e-12, 0.0))
    assert abs(u * u + ONE) <= 1e-15
    assert_qclose(u, J, atol=1e-11)


def test_samplers(rng):
    for _ in range(200):
        q = random_ball_point(rng, 1e-3)
        assert abs(q) < 1.0 - 1e-3
        assert all(isinstance(c, float) for c in q.components())
    for _ in range(50):
        unit = random_imaginary_unit(rng)
        assert unit.re == 0.0
        assert abs(abs(unit) - 1.0) <= 1e-12
        u = random_unit_quaternion(rng)
        assert abs(abs(u) - 1.0) <= 1e-12


def test_ball_sampler_covers_radii(rng):
    radii = sorted(abs(random_ball_point(rng)) for _ in range(500))
    assert radii[0] < 0.4 and radii[-1] > 0.9


def test_components_roundtrip():
    q = Quaternion(0.1, -0.2, 0.3, -0.4)
    assert Quaternion.from_components(q.components()) == q
    assert to_vec(q).tolist() == [0.1, -0.2, 0.3, -0.4]
