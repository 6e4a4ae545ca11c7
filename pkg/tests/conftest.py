import numpy as np
import pytest

from sliceball import Quaternion


def to_vec(q):
    return np.array([q.w, q.x, q.y, q.z], dtype=float)


def from_vec(v):
    return Quaternion(float(v[0]), float(v[1]), float(v[2]), float(v[3]))


def left_matrix(q):
    # matrix of p -> q p on components; an independent product oracle
    w, x, y, z = q.w, q.x, q.y, q.z
    return np.array([[w, -x, -y, -z],
                     [x, w, -z, y],
                     [y, z, w, -x],
                     [z, -y, x, w]])


def oracle_mul(p, q):
    return from_vec(left_matrix(p) @ to_vec(q))


def assert_qclose(actual, expected, atol=1e-12, rtol=0.0):
    np.testing.assert_allclose(to_vec(actual), to_vec(expected),
                               atol=atol, rtol=rtol)


@pytest.fixture
def rng():
    return np.random.default_rng(20260817)
