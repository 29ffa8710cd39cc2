"""Guruswami-Sudan internals: Koetter interpolation and Roth-Ruckenstein root finding.

Bivariate polynomials are 2-D arrays ``Q[j, i]`` holding the coefficient of
``y^j x^i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import ParameterTooSmall
from .field import Field

MAX_MULTIPLICITY = 64


def _binom2(top: int, bottom: int) -> int:
    # Lucas: C(top, bottom) is odd iff bottom's bits are a subset of top's.
    return 1 if (top & bottom) == bottom else 0


@dataclass(frozen=True)
class GsParameters:
    multiplicity: int
    weighted_degree: int
    max_y_degree: int
    constraints: int


def _monomial_count(wdeg: int, v: int, max_y: int) -> int:
    return sum(max(0, wdeg - v * j + 1) for j in range(max_y + 1))


def parameters_for(n: int, k: int, radius: int, multiplicity: int) -> GsParameters | None:
    """Interpolation sizes for a given multiplicity, or None if they cannot reach ``radius``.

    A candidate agreeing with the received word in ``n - radius`` places makes
    ``Q(x, f(x))`` vanish to order ``r`` at each, so ``Q(x, f(x)) = 0`` once its
    weighted degree is below ``r (n - radius)``.  A nonzero ``Q`` exists when
    monomials outnumber the ``n r (r + 1) / 2`` interpolation constraints.
    """
    r = multiplicity
    v = k - 1
    wdeg = r * (n - radius) - 1
    if wdeg < 0:
        return None
    constraints = n * r * (r + 1) // 2
    if v == 0:
        max_y = constraints // (wdeg + 1)
    else:
        max_y = wdeg // v
    if _monomial_count(wdeg, v, max_y) <= constraints:
        return None
    return GsParameters(r, wdeg, max_y, constraints)


def choose_parameters(n: int, k: int, radius: int,
                      multiplicity: int | None = None) -> GsParameters:
    if not 0 <= radius < n:
        raise ParameterTooSmall(f"radius {radius} outside [0, {n})")
    if multiplicity is not None:
        params = parameters_for(n, k, radius, multiplicity)
        if params is not None:
            return params
    for r in range(1, MAX_MULTIPLICITY + 1):
        params = parameters_for(n, k, radius, r)
        if params is not None:
            if multiplicity is None:
                return params
            raise ParameterTooSmall(
                f"multiplicity {multiplicity} cannot reach radius {radius}; use {r}",
                suggested_multiplicity=r)
    raise ParameterTooSmall(
        f"no multiplicity up to {MAX_MULTIPLICITY} reaches radius {radius} "
        f"for n={n}, k={k}")


def _hasse_weights(field: Field, x0: int, y0: int, a: int, b: int,
                   shape: tuple[int, int]) -> np.ndarray:
    rows, cols = shape
    xw = np.zeros(cols, dtype=np.int64)
    for i in range(a, cols):
        if _binom2(i, a):
            xw[i] = field.pow(x0, i - a)
    yw = np.zeros(rows, dtype=np.int64)
    for j in range(b, rows):
        if _binom2(j, b):
            yw[j] = field.pow(y0, j - b)
    return field.vmul(yw[:, None], xw[None, :])


def interpolate(field: Field, xs, ys, params: GsParameters, k: int) -> np.ndarray:
    """Koetter's iterative interpolation.

    Returns a nonzero ``Q`` of minimal ``(1, k-1)``-weighted degree with a
    zero of multiplicity ``params.multiplicity`` at every ``(xs[p], ys[p])``.
    Ties between candidate pivots break on (weighted degree, y-degree).
    """
    r = params.multiplicity
    v = k - 1
    rows = params.max_y_degree + 1
    cols = params.constraints + 1
    polys = np.zeros((rows, rows, cols), dtype=np.int64)
    for j in range(rows):
        polys[j, j, 0] = 1
    order_key = (np.arange(cols)[None, :] + v * np.arange(rows)[:, None]) * rows \
        + np.arange(rows)[:, None]

    def lead(p: np.ndarray) -> int:
        nz = p != 0
        return int(order_key[nz].max()) if nz.any() else -1

    leads = [lead(p) for p in polys]
    for x0, y0 in zip(xs, ys):
        x0 = int(x0)
        y0 = int(y0)
        for b in range(r):
            for a in range(r - b):
                weights = _hasse_weights(field, x0, y0, a, b, (rows, cols))
                disc = np.bitwise_xor.reduce(
                    field.vmul(polys, weights[None]).reshape(rows, -1), axis=1)
                active = np.flatnonzero(disc)
                if active.size == 0:
                    continue
                star = min(active.tolist(), key=lambda j: leads[j])
                d_star = int(disc[star])
                q_star = polys[star].copy()
                for j in active.tolist():
                    if j == star:
                        continue
                    polys[j] = field.vmul(polys[j], d_star) ^ field.vmul(q_star, int(disc[j]))
                    leads[j] = lead(polys[j])
                shifted = np.zeros_like(q_star)
                shifted[:, 1:] = q_star[:, :-1]
                polys[star] = shifted ^ field.vmul(q_star, x0)
                leads[star] = lead(polys[star])
    best = min(range(rows), key=lambda j: leads[j])
    return polys[best]


def _strip_x(q: np.ndarray) -> np.ndarray:
    cols = np.flatnonzero(q.any(axis=0))
    return q[:, cols[0]:] if cols.size else q


def _eval_all(field: Field, coeffs: np.ndarray) -> np.ndarray:
    """Evaluate a univariate polynomial at every field element."""
    pts = np.arange(field.q, dtype=np.int64)
    acc = np.zeros(field.q, dtype=np.int64)
    for c in coeffs[::-1]:
        acc = field.vmul(acc, pts) ^ int(c)
    return acc


def _substitute(field: Field, q: np.ndarray, gamma: int) -> np.ndarray:
    """``Q(x, x*y + gamma)``."""
    rows, cols = q.shape
    shifted = np.zeros_like(q)
    for j in range(rows):
        if not q[j].any():
            continue
        for l in range(j + 1):
            if _binom2(j, l):
                shifted[l] ^= field.vmul(q[j], field.pow(gamma, j - l))
    out = np.zeros((rows, cols + rows - 1), dtype=np.int64)
    for l in range(rows):
        out[l, l : l + cols] = shifted[l]
    return out


def roth_ruckenstein(field: Field, q: np.ndarray, k: int) -> list[tuple[int, ...]]:
    """All ``f`` of degree below ``k`` that could satisfy ``Q(x, f(x)) = 0``.

    Every true root is returned.  The recursion stops at depth ``k``, so a
    returned ``f`` is not guaranteed to be a root; callers filter by distance.
    """
    found: list[tuple[int, ...]] = []

    def recurse(poly: np.ndarray, prefix: tuple[int, ...]) -> None:
        if len(prefix) == k:
            found.append(prefix)
            return
        poly = _strip_x(poly)
        at_zero = poly[:, 0]
        nz = np.flatnonzero(at_zero)
        if nz.size == 0 or nz[-1] == 0:
            return
        values = _eval_all(field, at_zero[: nz[-1] + 1])
        for gamma in np.flatnonzero(values == 0).tolist():
            recurse(_substitute(field, poly, gamma), prefix + (gamma,))

    recurse(np.asarray(q, dtype=np.int64), ())
    return found


def gs_radius(n: int, k: int) -> int:
    """Largest ``t`` with ``t < n - sqrt((k-1) n)``, in exact integer arithmetic."""
    u = isqrt((k - 1) * n) + 1
    return n - u
