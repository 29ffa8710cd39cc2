"""Length-n Galois Field Fourier Transform by direct matrix product."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import DimensionError
from .field import Field
from .linalg import vec_mat


@dataclass(frozen=True, eq=False)
class GfftPlan:
    """Cached transform matrices ``F[i, j] = alpha^(ij)`` and
    ``F_inv[i, j] = alpha^(-ij)``.

    No ``1/n`` factor is needed in the inverse: ``n`` divides ``2^m - 1`` and
    is therefore odd, so ``n * 1 == 1`` in characteristic 2.
    """

    field: Field
    n: int
    f_matrix: np.ndarray = dc_field(repr=False)
    f_inv_matrix: np.ndarray = dc_field(repr=False)

    @classmethod
    def build(cls, field: Field, n: int | None = None) -> GfftPlan:
        n = field.n if n is None else n
        if n != field.n:
            raise DimensionError(f"transform length {n} differs from order of alpha {field.n}")
        idx = np.arange(n)
        outer = np.outer(idx, idx)
        f = field.vpow_alpha(outer)
        f_inv = field.vpow_alpha(-outer)
        f.flags.writeable = False
        f_inv.flags.writeable = False
        return cls(field, n, f, f_inv)

    def _check(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64)
        if v.shape != (self.n,):
            raise DimensionError(f"expected length {self.n}, got shape {v.shape}")
        return v

    def forward(self, v) -> np.ndarray:
        """``v @ F``: output ``j`` is ``sum_i v_i alpha^(ij)``."""
        return vec_mat(self.field, self._check(v), self.f_matrix)

    def inverse(self, v) -> np.ndarray:
        """``v @ F_inv``: output ``j`` is ``sum_i v_i alpha^(-ij)``."""
        return vec_mat(self.field, self._check(v), self.f_inv_matrix)


def gfft_forward(plan: GfftPlan, v) -> np.ndarray:
    return plan.forward(v)


def gfft_inverse(plan: GfftPlan, v) -> np.ndarray:
    return plan.inverse(v)


def cyclic_shift(v, s: int) -> np.ndarray:
    """Right cyclic shift by ``s``: ``out[i] = v[(i - s) mod n]``."""
    v = np.asarray(v, dtype=np.int64)
    if v.size == 0:
        return v.copy()
    return np.roll(v, s % v.size)
