"""Dense linear algebra over GF(2^m).

Matrices are 2-D int64 numpy arrays of field elements, vectors are 1-D.
"""

from __future__ import annotations

import numpy as np

from . import poly
from .errors import DimensionError, NotACodewordBasis, SingularMatrix
from .field import Field


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def diag(values) -> np.ndarray:
    return np.diag(np.asarray(values, dtype=np.int64))


def mat_mul(field: Field, a, b) -> np.ndarray:
    """Matrix product ``a @ b``; counts ``rows * inner * cols`` multiplications."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    prod = field.vmul(a[:, :, None], b[None, :, :])
    return np.bitwise_xor.reduce(prod, axis=1)


def vec_mat(field: Field, v, a) -> np.ndarray:
    """Row vector times matrix, ``v @ a``."""
    v = np.asarray(v, dtype=np.int64)
    if v.ndim != 1:
        raise DimensionError("expected a vector")
    return mat_mul(field, v[None, :], a)[0]


def mat_vec(field: Field, a, v) -> np.ndarray:
    """Matrix times column vector, ``a @ v``."""
    v = np.asarray(v, dtype=np.int64)
    if v.ndim != 1:
        raise DimensionError("expected a vector")
    return mat_mul(field, a, v[:, None])[:, 0]


def mat_inv(field: Field, a) -> np.ndarray:
    """Gauss-Jordan inverse with first-nonzero pivoting."""
    a = np.asarray(a, dtype=np.int64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"cannot invert non-square {a.shape}")
    n = a.shape[0]
    work = np.concatenate([a, identity(n)], axis=1)
    for col in range(n):
        nz = np.flatnonzero(work[col:, col])
        if nz.size == 0:
            raise SingularMatrix(f"no pivot in column {col}")
        piv = col + int(nz[0])
        if piv != col:
            work[[col, piv]] = work[[piv, col]]
        work[col] = field.vmul(work[col], field.inv(int(work[col, col])))
        for r in range(n):
            if r != col and work[r, col]:
                work[r] ^= field.vmul(work[col], int(work[r, col]))
    return work[:, n:].copy()


def rank(field: Field, a) -> int:
    work = np.array(a, dtype=np.int64)
    rows, cols = work.shape
    r = 0
    for col in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(work[r:, col])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        work[[r, piv]] = work[[piv, r]]
        work[r] = field.vmul(work[r], field.inv(int(work[r, col])))
        for i in range(r + 1, rows):
            if work[i, col]:
                work[i] ^= field.vmul(work[r], int(work[i, col]))
        r += 1
    return r


def solve_transform(field: Field, g_a, g) -> np.ndarray:
    """Find ``A`` with ``g_a == A @ g`` for a banded generator matrix ``g``.

    Row ``i`` of ``g`` holds the generator polynomial shifted right by ``i``,
    so row ``r`` of ``A`` is the quotient of row ``r`` of ``g_a`` (as a
    polynomial) by ``g(x)``.  A nonzero remainder means the row is not a
    codeword.
    """
    g_a = np.asarray(g_a, dtype=np.int64)
    g = np.asarray(g, dtype=np.int64)
    if g_a.shape != g.shape or g.ndim != 2:
        raise DimensionError(f"shape mismatch {g_a.shape} vs {g.shape}")
    k, n = g.shape
    if k >= n:
        raise DimensionError("generator matrix must have fewer rows than columns")
    gen = poly.trim(g[0])
    if gen.size != n - k + 1 or gen[0] == 0:
        raise DimensionError("g is not a banded generator matrix")
    a = np.zeros((k, k), dtype=np.int64)
    for r in range(k):
        quot, rem = poly.poly_divmod(field, g_a[r], gen)
        if rem.size:
            raise NotACodewordBasis(f"row {r} of the generator matrix is not a codeword")
        a[r, : quot.size] = quot
    if rank(field, a) < k:
        raise SingularMatrix("generator matrix rows are linearly dependent")
    return a


def cyclic_complete(u) -> np.ndarray:
    """Extend a k x n matrix to n x n; each new row is the previous one
    cyclically shifted right by one position."""
    u = np.asarray(u, dtype=np.int64)
    if u.ndim != 2:
        raise DimensionError("expected a matrix")
    k, n = u.shape
    if k >= n:
        raise DimensionError(f"cyclic completion needs rows < cols, got {u.shape}")
    out = np.zeros((n, n), dtype=np.int64)
    out[:k] = u
    for i in range(k, n):
        out[i] = np.roll(out[i - 1], 1)
    return out
