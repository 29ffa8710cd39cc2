"""Univariate polynomials over GF(2^m), coefficients in ascending order."""

from __future__ import annotations

import numpy as np

from .errors import DivisionByZero
from .field import Field


def trim(p) -> np.ndarray:
    p = np.asarray(p, dtype=np.int64)
    nz = np.flatnonzero(p)
    if nz.size == 0:
        return p[:0].copy()
    return p[: nz[-1] + 1].copy()


def degree(p) -> int:
    """Degree of ``p``; ``-1`` for the zero polynomial."""
    nz = np.flatnonzero(np.asarray(p))
    return int(nz[-1]) if nz.size else -1


def poly_mul(field: Field, a, b) -> np.ndarray:
    a = trim(a)
    b = trim(b)
    if a.size == 0 or b.size == 0:
        return np.zeros(0, dtype=np.int64)
    prod = field.vmul(a[:, None], b[None, :])
    out = np.zeros(a.size + b.size - 1, dtype=np.int64)
    for i in range(a.size):
        out[i : i + b.size] ^= prod[i]
    return out


def poly_divmod(field: Field, num, den) -> tuple[np.ndarray, np.ndarray]:
    """Quotient and remainder of ``num / den``."""
    num = trim(num)
    den = trim(den)
    if den.size == 0:
        raise DivisionByZero("polynomial division by zero")
    rem = num.copy()
    dd = den.size - 1
    if rem.size - 1 < dd:
        return np.zeros(0, dtype=np.int64), rem
    quot = np.zeros(rem.size - dd, dtype=np.int64)
    lead_inv = field.inv(int(den[-1]))
    for i in range(rem.size - 1, dd - 1, -1):
        c = int(rem[i])
        if c == 0:
            continue
        coef = field.mul(c, lead_inv)
        quot[i - dd] = coef
        rem[i - dd : i + 1] ^= field.vmul(den, coef)
    return quot, trim(rem[:dd])


def poly_eval(field: Field, p, x: int) -> int:
    """Horner evaluation of ``p`` at ``x``."""
    acc = 0
    for c in reversed(np.asarray(p).tolist()):
        acc = field.mul(acc, x) ^ c
    return acc


def poly_from_roots(field: Field, roots) -> np.ndarray:
    """Monic ``prod (x - r)``."""
    p = np.array([1], dtype=np.int64)
    for r in roots:
        p = poly_mul(field, p, [r, 1])
    return p
