"""Theta functions on the curve C / (Z + omega Z).

Order-n basis, j in Z/n:

    theta_j(z) = sum_{J = j mod n} exp(pi i omega (J^2 - n J)/n + 2 pi i J (z + 3/(2n)))

with
    theta_j(z + 1)     = theta_j(z)
    theta_j(z + omega) = -exp(-2 pi i n z) theta_j(z)
    theta_j(z + 1/n)   = exp(2 pi i j/n) theta_j(z)
    theta_0(0)         = 0.

The odd order-one function is theta1(z) = exp(-pi i z) theta^{(1)}_0(z) / D,
D chosen so that theta1'(0) = 1.  See docs/theta_conventions.md.
"""
from functools import lru_cache

import numpy as np

from . import _accel


class PoleError(ZeroDivisionError):
    """A kernel denominator vanished at the requested point."""


class ThetaEvaluator:
    """Order-n theta basis at a fixed modular parameter omega."""

    def __init__(self, n: int, omega: complex = 1j, trunc_tol: float = 1e-16):
        omega = complex(omega)
        if omega.imag <= 0:
            raise ValueError("need Im(omega) > 0")
        if n < 1:
            raise ValueError("order must be positive")
        self.n = int(n)
        self.omega = omega
        self.trunc_tol = float(trunc_tol)
        # after reduction |Im z| <= Im(omega)/2, so a term is bounded by
        # exp(-pi Im(omega) (J^2 - 2 n |J|) / n); keep terms above tol * 1e-3
        cut = -np.log(self.trunc_tol) + np.log(1e3)
        Jmax = self.n
        while np.pi * omega.imag * (Jmax ** 2 - 2 * self.n * Jmax) / self.n < cut:
            Jmax += 1
        J = np.arange(-Jmax, Jmax + 1)
        self._J = J.astype(np.float64)
        self._grp = np.mod(J, self.n).astype(np.int64)
        shift = 3.0 / (2 * self.n)
        self._logc = (1j * np.pi * omega * (J * J - self.n * J) / self.n
                      + 2j * np.pi * J * shift).astype(np.complex128)

    def _reduce(self, z):
        z = np.asarray(z, dtype=np.complex128)
        b = np.round(z.imag / self.omega.imag)
        w = z - b * self.omega
        a = np.round(w.real)
        return w - a, b

    def _factor(self, z0, b):
        # theta(z0 + b omega) = (-1)^b exp(-2 pi i n (b z0 + omega b (b-1)/2)) theta(z0)
        return ((-1.0) ** b) * np.exp(-2j * np.pi * self.n * (b * z0 + self.omega * b * (b - 1) / 2))

    def basis(self, z, backend=None):
        """All n basis values; output shape z.shape + (n,)."""
        z = np.asarray(z, dtype=np.complex128)
        z0, b = self._reduce(z)
        raw = _accel.theta_sums(z0.ravel(), self._J, self._logc, self._grp, self.n, backend)
        raw = raw.reshape(z.shape + (self.n,))
        return raw * self._factor(z0, b)[..., None]

    def __call__(self, j: int, z):
        return self.basis(z)[..., int(j) % self.n]

    def at_zero(self):
        return self.basis(np.zeros(1))[0]


@lru_cache(maxsize=64)
def evaluator(n: int, omega: complex = 1j) -> ThetaEvaluator:
    return ThetaEvaluator(n, omega)


class OddTheta:
    """Odd order-one theta function with zeros at the lattice, derivative 1 at 0."""

    def __init__(self, omega: complex = 1j):
        self.base = ThetaEvaluator(1, omega)
        self.omega = self.base.omega
        J, logc = self.base._J, self.base._logc
        self._deriv0 = complex(np.sum(np.exp(logc) * 2j * np.pi * J))

    def __call__(self, z):
        z = np.asarray(z, dtype=np.complex128)
        return np.exp(-1j * np.pi * z) * self.base.basis(z)[..., 0] / self._deriv0


@lru_cache(maxsize=16)
def odd_theta(omega: complex = 1j) -> OddTheta:
    return OddTheta(omega)


def theta1(z, omega: complex = 1j):
    return odd_theta(omega)(z)


def theta_basis(n: int, j: int, z, omega: complex = 1j):
    return evaluator(n, omega)(j, z)


def _checked_ratio(num, den, rtol=1e-12):
    den = np.asarray(den)
    if np.any(np.abs(den) < rtol):
        raise PoleError("theta denominator vanishes at a requested point")
    return num / den


def lambda_kernel(x, y, n: int, tau: complex, omega: complex = 1j):
    """theta(x - y - n tau) / theta(x - y)."""
    th = odd_theta(omega)
    u = np.asarray(x) - np.asarray(y)
    return _checked_ratio(th(u - n * tau), th(u))


def tn_kernel(x, y, n: int, tau: complex, omega: complex = 1j):
    """theta(u + 2 n tau) theta(u - n tau) / theta(u)^2 with u = x - y."""
    th = odd_theta(omega)
    u = np.asarray(x) - np.asarray(y)
    return _checked_ratio(th(u + 2 * n * tau) * th(u - n * tau), th(u) ** 2)


# quasi-period multipliers of the documented convention
def basis_period_factor(n: int, z, omega: complex = 1j):
    """theta_j(z + omega) / theta_j(z)."""
    return -np.exp(-2j * np.pi * n * np.asarray(z))


def theta1_period_factors(z, omega: complex = 1j):
    """(theta1(z + 1)/theta1(z), theta1(z + omega)/theta1(z))."""
    z = np.asarray(z)
    return -np.ones_like(z), -np.exp(-1j * np.pi * omega) * np.exp(-2j * np.pi * z)
