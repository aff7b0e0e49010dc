"""Hot loops: theta q-series sums and batched permanents.

Each kernel has a numba version and a plain numpy version.  Setting
ELLALG_NO_NUMBA=1 (or running without numba installed) selects numpy.
"""
import os

import numpy as np

TWO_PI_I = 2j * np.pi


def _numba_wanted() -> bool:
    return os.environ.get("ELLALG_NO_NUMBA", "").strip().lower() not in ("1", "true", "yes", "on")


try:
    if not _numba_wanted():
        raise ImportError("numba disabled by environment")
    from numba import njit
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


# -- numpy reference kernels ------------------------------------------------

def theta_sums_numpy(z, J, logc, grp, n):
    """out[i, g] = sum over k with grp[k] == g of exp(logc[k] + 2 pi i J[k] z[i])."""
    terms = np.exp(logc[None, :] + TWO_PI_I * np.outer(z, J))
    out = np.zeros((z.shape[0], n), dtype=np.complex128)
    for g in range(n):
        out[:, g] = terms[:, grp == g].sum(axis=1)
    return out


def _subset_table(m):
    bits = ((np.arange(1, 2 ** m)[:, None] >> np.arange(m)) & 1).astype(np.float64)
    signs = (-1.0) ** (m - bits.sum(axis=1))
    return bits, signs


def permanents_numpy(mats):
    """Ryser permanents of a stack of square matrices, shape (B, m, m)."""
    B, m, _ = mats.shape
    if m == 0:
        return np.ones(B, dtype=np.complex128)
    bits, signs = _subset_table(m)
    rows = np.einsum("bij,sj->bsi", mats, bits)
    return (np.prod(rows, axis=2) * signs[None, :]).sum(axis=1)


# -- numba kernels ----------------------------------------------------------

if HAVE_NUMBA:
    @njit(cache=True)
    def _theta_sums_nb(z, J, logc, grp, n):
        N = z.shape[0]
        L = J.shape[0]
        out = np.zeros((N, n), dtype=np.complex128)
        for i in range(N):
            zi = z[i]
            for k in range(L):
                out[i, grp[k]] += np.exp(logc[k] + 2j * np.pi * J[k] * zi)
        return out

    @njit(cache=True)
    def _permanents_nb(mats):
        B = mats.shape[0]
        m = mats.shape[1]
        out = np.zeros(B, dtype=np.complex128)
        if m == 0:
            out[:] = 1.0
            return out
        rowsum = np.zeros(m, dtype=np.complex128)
        for b in range(B):
            rowsum[:] = 0.0
            total = 0.0 + 0.0j
            gray_prev = 0
            for s in range(1, 2 ** m):
                gray = s ^ (s >> 1)
                diff = gray ^ gray_prev
                j = 0
                while (diff >> j) != 1:
                    j += 1
                if gray & diff:
                    for i in range(m):
                        rowsum[i] += mats[b, i, j]
                else:
                    for i in range(m):
                        rowsum[i] -= mats[b, i, j]
                gray_prev = gray
                p = 1.0 + 0.0j
                for i in range(m):
                    p *= rowsum[i]
                cnt = 0
                g = gray
                while g:
                    cnt += g & 1
                    g >>= 1
                if (m - cnt) % 2 == 0:
                    total += p
                else:
                    total -= p
            out[b] = total
        return out


def theta_sums(z, J, logc, grp, n, backend=None):
    z = np.ascontiguousarray(z, dtype=np.complex128).ravel()
    use_nb = HAVE_NUMBA if backend is None else (backend == "numba")
    if use_nb:
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but unavailable")
        return _theta_sums_nb(z, J, logc, grp, n)
    return theta_sums_numpy(z, J, logc, grp, n)


def permanents(mats, backend=None):
    mats = np.ascontiguousarray(mats, dtype=np.complex128)
    use_nb = HAVE_NUMBA if backend is None else (backend == "numba")
    if use_nb:
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but unavailable")
        return _permanents_nb(mats)
    return permanents_numpy(mats)


def backend_name() -> str:
    return "numba" if HAVE_NUMBA else "numpy"
