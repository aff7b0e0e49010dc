import numpy as np
import pytest

from ellalg import _accel
from ellalg.theta import (PoleError, ThetaEvaluator, basis_period_factor, evaluator, lambda_kernel,
                          odd_theta, theta1, theta1_period_factors)

OMEGAS = [1j, 0.3 + 0.8j, -0.4 + 0.5j]
TOL = 1e-10


def rel(a, b):
    a, b = np.asarray(a), np.asarray(b)
    return float(np.max(np.abs(a - b) / np.maximum(np.abs(a), np.abs(b))))


def points(seed, omega, m=100):
    rng = np.random.default_rng(seed)
    # spread over several fundamental domains to exercise the reduction
    return rng.uniform(-2, 2, m) + omega * rng.uniform(-2, 2, m)


@pytest.mark.parametrize("omega", OMEGAS)
def test_theta1_zero_odd_derivative(omega):
    th = odd_theta(omega)
    assert abs(th(0.0)) < 1e-14
    z = points(1, omega)
    assert rel(th(-z), -th(z)) < TOL
    h = 1e-6
    assert abs((th(h) - th(-h)) / (2 * h) - 1) < 1e-8


@pytest.mark.parametrize("omega", OMEGAS)
def test_theta1_quasi_periods(omega):
    z = points(2, omega)
    f1, fw = theta1_period_factors(z, omega)
    assert rel(theta1(z + 1, omega), f1 * theta1(z, omega)) < TOL
    assert rel(theta1(z + omega, omega), fw * theta1(z, omega)) < TOL


@pytest.mark.parametrize("n", [1, 3, 4, 5, 7])
@pytest.mark.parametrize("omega", OMEGAS)
def test_basis_quasi_periods(n, omega):
    ev = evaluator(n, omega)
    z = points(3 + n, omega)
    base = ev.basis(z)
    assert rel(ev.basis(z + 1), base) < TOL
    assert rel(ev.basis(z + omega), basis_period_factor(n, z, omega)[:, None] * base) < TOL
    eig = np.exp(2j * np.pi * np.arange(n) / n)
    assert rel(ev.basis(z + 1.0 / n), eig * base) < TOL


@pytest.mark.parametrize("n", [3, 4, 5])
def test_basis_zero_at_origin(n):
    v = evaluator(n).at_zero()
    assert abs(v[0]) < 1e-14 * np.abs(v).max()


@pytest.mark.parametrize("tol", [1e-6, 1e-10, 1e-16])
@pytest.mark.parametrize("n", [2, 3, 5, 7, 9])
def test_truncation_self_consistency(n, tol):
    z = points(4, 1j, 40)
    a = ThetaEvaluator(n, 1j, trunc_tol=tol).basis(z)
    b = ThetaEvaluator(n, 1j, trunc_tol=tol / 2).basis(z)
    scale = np.abs(a).max(axis=1, keepdims=True)
    assert np.max(np.abs(a - b) / scale) <= 10 * tol


@pytest.mark.parametrize("n", [3, 4, 5, 7])
def test_basis_independent_and_nonvanishing(n):
    ev = evaluator(n)
    z = points(5, 1j, 3 * n)
    vals = ev.basis(z)
    norms = np.linalg.norm(vals, axis=1)
    assert np.all(norms > 0)
    vals = vals / norms[:, None]
    s = np.linalg.svd(vals, compute_uv=False)
    assert s[-1] > 1e-8 * s[0]


def test_lambda_kernel_pole():
    with pytest.raises(PoleError):
        lambda_kernel(0.2 + 0.1j, 0.2 + 0.1j, 3, 0.1 + 0.05j)


def test_bad_omega():
    with pytest.raises(ValueError):
        ThetaEvaluator(3, -1j)


@pytest.mark.skipif(not _accel.HAVE_NUMBA, reason="numba not installed")
@pytest.mark.parametrize("n", [3, 5])
def test_backends_agree(n):
    ev = evaluator(n)
    z = points(6, 1j, 50)
    a = ev.basis(z, backend="numpy")
    b = ev.basis(z, backend="numba")
    assert rel(a, b) < 1e-13
    rng = np.random.default_rng(0)
    mats = rng.normal(size=(20, 5, 5)) + 1j * rng.normal(size=(20, 5, 5))
    assert np.allclose(_accel.permanents(mats, "numpy"), _accel.permanents(mats, "numba"),
                       rtol=1e-12, atol=0)


def test_permanent_small():
    m = np.array([[[1, 2], [3, 4]]], dtype=np.complex128)
    assert _accel.permanents(m, "numpy")[0] == 1 * 4 + 2 * 3
