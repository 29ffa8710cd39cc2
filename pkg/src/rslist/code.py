"""Reed-Solomon code construction and encoders.

An ``(n, k)`` code with first zero exponent ``b`` has generator polynomial
``g(x) = prod_{i=b}^{b+n-k-1} (x - alpha^i)``.  Scaling coordinate ``i`` of
any codeword by ``alpha^((b-1)i)`` lands in the narrow-sense code whose zeros
are ``alpha, ..., alpha^(n-k)``; that scaling is :func:`narrow_sense_transform`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import poly
from .errors import DimensionError, InvalidCodeParameters, NotACodewordBasis, ZeroMultiplier
from .field import Field
from .linalg import vec_mat

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RsCodeSpec:
    field: Field
    n: int
    k: int
    b: int
    g_coeffs: np.ndarray = dc_field(repr=False)
    w_diag: np.ndarray = dc_field(repr=False)

    @property
    def zero_exponents(self) -> list[int]:
        return [(self.b + i) % self.n for i in range(self.n - self.k)]

    @property
    def zeros_wrap(self) -> bool:
        """True when the zero exponents run past ``alpha^(n-1)``."""
        return self.b + self.n - self.k - 1 >= self.n

    @property
    def gbar_coeffs(self) -> np.ndarray:
        idx = np.arange(self.g_coeffs.size)
        with_scale = self.field.vpow_alpha((self.b - 1) * idx)
        return self.field.vmul(self.g_coeffs, with_scale)

    def descriptor(self) -> str:
        return f"rscode n={self.n} k={self.k} b={self.b}"

    def _key(self):
        return (self.field, self.n, self.k, self.b)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RsCodeSpec) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())


def normalize_b(b: int, n: int) -> int:
    b %= n
    return n if b == 0 else b


def build_code(field: Field, n: int, k: int, b: int = 1) -> RsCodeSpec:
    if n != field.n:
        raise InvalidCodeParameters(f"n={n} must equal the order of alpha ({field.n})")
    if not 1 <= k < n:
        raise InvalidCodeParameters(f"need 1 <= k < n, got k={k}, n={n}")
    b = normalize_b(b, n)
    roots = [field.pow_alpha(b + i) for i in range(n - k)]
    g = poly.poly_from_roots(field, roots)
    w = field.vpow_alpha((b - 1) * np.arange(n))
    g.flags.writeable = False
    w.flags.writeable = False
    spec = RsCodeSpec(field, n, k, b, g, w)
    if spec.zeros_wrap:
        log.warning("zeros of %s wrap past alpha^%d: exponents %s",
                    spec.descriptor(), n - 1, spec.zero_exponents)
    return spec


def _banded(coeffs: np.ndarray, k: int, n: int) -> np.ndarray:
    out = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        out[i, i : i + coeffs.size] = coeffs
    return out


def build_generator_matrix(spec: RsCodeSpec) -> np.ndarray:
    """k x n matrix whose row ``i`` is ``g`` shifted right by ``i``."""
    return _banded(spec.g_coeffs, spec.k, spec.n)


def build_gbar_matrix(spec: RsCodeSpec) -> np.ndarray:
    """Banded matrix over ``gbar_i = g_i alpha^((b-1)i)``; generates the narrow-sense code."""
    return _banded(spec.gbar_coeffs, spec.k, spec.n)


def is_codeword(spec: RsCodeSpec, c) -> bool:
    _, rem = poly.poly_divmod(spec.field, c, spec.g_coeffs)
    return rem.size == 0


def validate_generator(spec: RsCodeSpec, g_a) -> np.ndarray:
    """Check shape and that every row of ``g_a`` is a codeword; returns a read-only copy.

    Rank is not checked here; a rank-deficient matrix surfaces as
    ``SingularMatrix`` when the recovery transform is built.
    """
    g_a = np.array(g_a, dtype=np.int64)
    if g_a.shape != (spec.k, spec.n):
        raise DimensionError(f"generator must be {spec.k}x{spec.n}, got {g_a.shape}")
    for r, row in enumerate(g_a):
        if not is_codeword(spec, row):
            raise NotACodewordBasis(f"row {r} is not a codeword of {spec.descriptor()}")
    g_a.flags.writeable = False
    return g_a


def _check_len(v, length: int, what: str) -> np.ndarray:
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (length,):
        raise DimensionError(f"{what} must have length {length}, got shape {v.shape}")
    return v


def encode_generator(spec: RsCodeSpec, g_a, msg) -> np.ndarray:
    msg = _check_len(msg, spec.k, "message")
    return vec_mat(spec.field, msg, g_a)


def evaluation_matrix(field: Field, n: int, k: int) -> np.ndarray:
    """k x n matrix with entry ``(j, i) = alpha^(ij)``."""
    return field.vpow_alpha(np.outer(np.arange(k), np.arange(n)))


def encode_evaluation(spec: RsCodeSpec, msg) -> np.ndarray:
    """``(m(1), m(alpha), ..., m(alpha^(n-1)))`` for ``m(x) = sum msg_j x^j``."""
    msg = _check_len(msg, spec.k, "message")
    return vec_mat(spec.field, msg, evaluation_matrix(spec.field, spec.n, spec.k))


def narrow_sense_transform(spec: RsCodeSpec, v) -> np.ndarray:
    """Scale coordinate ``i`` by ``alpha^((b-1)i)``; costs ``n - 1`` multiplications."""
    v = _check_len(v, spec.n, "word")
    out = v.copy()
    out[1:] = spec.field.vmul(v[1:], spec.w_diag[1:])
    return out


def build_grs_generator(field: Field, n: int, k: int, v) -> np.ndarray:
    """k x n matrix with entry ``(j, i) = v_i alpha^(ij)``."""
    v = _check_len(v, n, "column multipliers")
    if np.any(v == 0):
        raise ZeroMultiplier("column multipliers must be nonzero")
    return field.vmul(evaluation_matrix(field, n, k), v[None, :])


def grs_multipliers(spec: RsCodeSpec, scale: int = 1) -> np.ndarray:
    """Multipliers ``v_i = scale * alpha^((1-b)i)``, the GRS form whose row space is this code."""
    if scale == 0:
        raise ZeroMultiplier("scale must be nonzero")
    return spec.field.vmul(spec.field.vpow_alpha((1 - spec.b) * np.arange(spec.n)), scale)
