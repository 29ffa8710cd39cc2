"""List decoders for the evaluation-map (narrow-sense) code.

Both decoders return message-polynomial coefficient vectors ``f`` such that
the evaluation encoding of ``f`` lies within the radius of the received word.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np

from . import gs
from .code import RsCodeSpec, evaluation_matrix
from .errors import DimensionError, InstanceTooLarge
from .field import Field, uncounted
from .linalg import mat_mul

BRUTE_FORCE_LIMIT = 1 << 24
_CHUNK = 1 << 16
CACHE_LIMIT = 1 << 20


def decoding_radius(n: int, k: int) -> int:
    """Largest error count strictly below ``n - sqrt((k-1) n)``."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    return gs.gs_radius(n, k)


@dataclass(frozen=True)
class DecoderConfig:
    kind: Literal["brute_force", "guruswami_sudan"] = "guruswami_sudan"
    radius: int | Literal["auto"] = "auto"
    multiplicity: int | Literal["auto"] = "auto"

    def resolve_radius(self, n: int, k: int) -> int:
        return decoding_radius(n, k) if self.radius == "auto" else int(self.radius)


@dataclass(frozen=True)
class ListDecodeOutput:
    candidates: tuple[tuple[int, ...], ...]
    distances: tuple[int, ...]
    radius_used: int

    def __len__(self) -> int:
        return len(self.candidates)

    def __contains__(self, f) -> bool:
        return tuple(int(x) for x in f) in self.candidates


def hamming_distance(a, b) -> int:
    return int(np.count_nonzero(np.asarray(a) != np.asarray(b)))


def _message_block(field: Field, k: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((idx.size, k), dtype=np.int64)
    for j in range(k):
        digits[:, j] = idx % field.q
        idx = idx // field.q
    return digits


def _codeword_blocks(field: Field, n: int, k: int):
    ev = evaluation_matrix(field, n, k)
    total = field.q ** k
    for start in range(0, total, _CHUNK):
        msgs = _message_block(field, k, start, min(total, start + _CHUNK))
        with uncounted():
            yield msgs, mat_mul(field, msgs, ev)


@lru_cache(maxsize=8)
def _codebook(field: Field, n: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    blocks = list(_codeword_blocks(field, n, k))
    msgs = np.concatenate([m for m, _ in blocks]).astype(np.uint16)
    words = np.concatenate([w for _, w in blocks]).astype(np.uint16)
    msgs.flags.writeable = False
    words.flags.writeable = False
    return msgs, words


def _check_received(spec: RsCodeSpec, received) -> np.ndarray:
    received = np.asarray(received, dtype=np.int64)
    if received.shape != (spec.n,):
        raise DimensionError(f"received word must have length {spec.n}, got {received.shape}")
    return received


def _package(cands: list[tuple[int, ...]], dists: list[int], radius: int) -> ListDecodeOutput:
    pairs = sorted(set(zip(cands, dists)))
    return ListDecodeOutput(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs), radius)


def decode_brute_force(spec: RsCodeSpec, received, radius: int) -> ListDecodeOutput:
    """Exhaustive search over all ``q^k`` messages."""
    received = _check_received(spec, received)
    fld = spec.field
    total = fld.q ** spec.k
    if total > BRUTE_FORCE_LIMIT:
        raise InstanceTooLarge(f"q^k = {total} exceeds brute-force limit {BRUTE_FORCE_LIMIT}")
    if total <= CACHE_LIMIT:
        blocks = [_codebook(fld, spec.n, spec.k)]
    else:
        blocks = _codeword_blocks(fld, spec.n, spec.k)
    cands: list[tuple[int, ...]] = []
    dists: list[int] = []
    for msgs, words in blocks:
        d = np.count_nonzero(words != received[None, :], axis=1)
        for i in np.flatnonzero(d <= radius).tolist():
            cands.append(tuple(msgs[i].tolist()))
            dists.append(int(d[i]))
    return _package(cands, dists, radius)


def decode_guruswami_sudan(spec: RsCodeSpec, received,
                           cfg: DecoderConfig = DecoderConfig()) -> ListDecodeOutput:
    """Interpolate through ``(alpha^i, received_i)``, factor, filter by distance."""
    received = _check_received(spec, received)
    fld = spec.field
    radius = cfg.resolve_radius(spec.n, spec.k)
    mult = None if cfg.multiplicity == "auto" else int(cfg.multiplicity)
    params = gs.choose_parameters(spec.n, spec.k, radius, mult)
    xs = fld.vpow_alpha(np.arange(spec.n))
    q = gs.interpolate(fld, xs, received, params, spec.k)
    ev = evaluation_matrix(fld, spec.n, spec.k)
    cands: list[tuple[int, ...]] = []
    dists: list[int] = []
    for f in gs.roth_ruckenstein(fld, q, spec.k):
        word = mat_mul(fld, np.array(f, dtype=np.int64)[None, :], ev)[0]
        d = hamming_distance(word, received)
        if d <= radius:
            cands.append(f)
            dists.append(d)
    return _package(cands, dists, radius)


def list_decode(spec: RsCodeSpec, received, cfg: DecoderConfig = DecoderConfig()) -> ListDecodeOutput:
    if cfg.kind == "brute_force":
        return decode_brute_force(spec, received, cfg.resolve_radius(spec.n, spec.k))
    if cfg.kind == "guruswami_sudan":
        return decode_guruswami_sudan(spec, received, cfg)
    raise ValueError(f"unknown decoder kind {cfg.kind!r}")
