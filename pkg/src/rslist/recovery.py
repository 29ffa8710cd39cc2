"""Recovering generator-matrix-encoded messages from list-decoder output.

A list decoder working on the evaluation map returns message polynomials
``f`` for the narrow-sense code.  With ``G_a = A G`` the original message is
``m^T = (A^T)^-1 (W_k)^-1 (Finv_k)^-1 (D_k)^-1 f^T`` where the ``_k``
subscripts denote upper-left ``k x k`` blocks.  :func:`precompute` folds the
four factors into one ``k x k`` matrix ``B`` once per code and generator;
:func:`recover_message` then costs ``k^2`` multiplications per list element.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .code import RsCodeSpec, build_generator_matrix, validate_generator
from .errors import (
    DimensionError,
    SpectrumStructureViolation,
    TrailingNonzero,
    ZeroMultiplier,
)
from .gfft import GfftPlan, cyclic_shift
from .linalg import diag, mat_inv, mat_mul, mat_vec, solve_transform


@dataclass(frozen=True, eq=False)
class RecoveryTransform:
    spec: RsCodeSpec
    a_inv_t: np.ndarray = dc_field(repr=False)
    d_inv: np.ndarray = dc_field(repr=False)
    w_inv: np.ndarray = dc_field(repr=False)
    f_inv_kk_inv: np.ndarray = dc_field(repr=False)
    b_matrix: np.ndarray = dc_field(repr=False)
    uses_w: bool = True

    def recompose(self) -> np.ndarray:
        """Multiply the stored factors back together (audit check for ``b_matrix``)."""
        fld = self.spec.field
        out = mat_mul(fld, self.a_inv_t, diag(self.w_inv))
        out = mat_mul(fld, out, self.f_inv_kk_inv)
        return mat_mul(fld, out, diag(self.d_inv))


def compute_spectrum_diagonal(spec: RsCodeSpec, plan: GfftPlan | None = None) -> np.ndarray:
    """Inverse GFFT of ``(g_0, ..., g_{n-k}, 0, ..., 0)`` shifted right by ``b - 1``.

    Entry ``j`` equals ``gbar(alpha^-j)``; the first ``k`` are nonzero and the
    rest vanish for any consistent code.
    """
    if plan is None:
        plan = GfftPlan.build(spec.field)
    if plan.n != spec.n or plan.field != spec.field:
        raise DimensionError("GFFT plan does not match the code")
    padded = np.zeros(spec.n, dtype=np.int64)
    padded[: spec.g_coeffs.size] = spec.g_coeffs
    spectrum = cyclic_shift(plan.inverse(padded), spec.b - 1)
    k = spec.k
    if np.any(spectrum[:k] == 0) or np.any(spectrum[k:] != 0):
        raise SpectrumStructureViolation(
            f"spectrum of g has wrong zero pattern for {spec.descriptor()}")
    return spectrum


def precompute(spec: RsCodeSpec, g_a, plan: GfftPlan | None = None,
               skip_identity_w: bool = True) -> RecoveryTransform:
    """Build ``B`` for generator ``g_a``.  Performed once per code and generator.

    With ``b == 1`` the ``W`` factor is the identity and is left out of the
    product unless ``skip_identity_w`` is False.
    """
    fld = spec.field
    k = spec.k
    if plan is None:
        plan = GfftPlan.build(fld)
    g_a = validate_generator(spec, g_a)

    g = build_generator_matrix(spec)
    a = solve_transform(fld, g_a, g)
    a_inv_t = mat_inv(fld, a.T)

    spectrum = compute_spectrum_diagonal(spec, plan)
    d_inv = fld.vinv(spectrum[:k])
    w_inv = fld.vpow_alpha(-(spec.b - 1) * np.arange(k))
    f_inv_kk_inv = mat_inv(fld, plan.f_inv_matrix[:k, :k])

    uses_w = spec.b != 1 or not skip_identity_w
    b_matrix = a_inv_t
    if uses_w:
        b_matrix = mat_mul(fld, b_matrix, diag(w_inv))
    b_matrix = mat_mul(fld, b_matrix, f_inv_kk_inv)
    b_matrix = mat_mul(fld, b_matrix, diag(d_inv))

    for arr in (a_inv_t, d_inv, w_inv, f_inv_kk_inv, b_matrix):
        arr.flags.writeable = False
    return RecoveryTransform(spec, a_inv_t, d_inv, w_inv, f_inv_kk_inv, b_matrix, uses_w)


def recover_message(t: RecoveryTransform, f) -> np.ndarray:
    """``B f^T`` for one list element; exactly ``k^2`` multiplications.

    ``f`` may carry more than ``k`` coordinates provided the extra ones are zero.
    """
    f = np.asarray(f, dtype=np.int64)
    k = t.spec.k
    if f.ndim != 1 or f.size < k or f.size > t.spec.n:
        raise DimensionError(f"list element must have length {k}..{t.spec.n}, got {f.shape}")
    if np.any(f[k:] != 0):
        raise TrailingNonzero("list element has nonzero coefficients beyond degree k-1")
    return mat_vec(t.spec.field, t.b_matrix, f[:k])


def recover_by_scaling(field, v, word) -> np.ndarray:
    """Divide ``word`` componentwise by the GRS column multipliers ``v``; ``n`` multiplications."""
    v = np.asarray(v, dtype=np.int64)
    word = np.asarray(word, dtype=np.int64)
    if v.shape != word.shape or v.ndim != 1:
        raise DimensionError(f"shape mismatch {v.shape} vs {word.shape}")
    if np.any(v == 0):
        raise ZeroMultiplier("column multipliers must be nonzero")
    return field.vmul(word, field.vinv(v))
