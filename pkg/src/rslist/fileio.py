"""Text formats for matrices, vectors and recovery transforms.

Elements are lowercase hex, whitespace separated.  A matrix is a header line
``matrix <rows> <cols>`` followed by one line per row.  Lines starting with
``#`` are comments.
"""

from __future__ import annotations

from typing import Iterable, TextIO

import numpy as np

from .code import RsCodeSpec, build_code
from .errors import FormatError
from .field import Field
from .recovery import RecoveryTransform


def format_vector(v) -> str:
    return " ".join(format(int(x), "x") for x in np.ravel(v))


def parse_vector(field: Field, line: str) -> np.ndarray:
    return np.array([field.parse_element(tok) for tok in line.split()], dtype=np.int64)


def format_matrix(a) -> str:
    a = np.asarray(a)
    lines = [f"matrix {a.shape[0]} {a.shape[1]}"]
    lines.extend(format_vector(row) for row in a)
    return "\n".join(lines) + "\n"


def _content_lines(lines: Iterable[str]) -> list[str]:
    return [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]


def _read_matrix_at(field: Field, lines: list[str], pos: int) -> tuple[np.ndarray, int]:
    head = lines[pos].split()
    if len(head) != 3 or head[0] != "matrix":
        raise FormatError(f"expected 'matrix <rows> <cols>', got {lines[pos]!r}")
    rows, cols = int(head[1]), int(head[2])
    if pos + rows >= len(lines):
        raise FormatError("matrix truncated")
    body = [parse_vector(field, lines[pos + 1 + r]) for r in range(rows)]
    for r, row in enumerate(body):
        if row.size != cols:
            raise FormatError(f"matrix row {r} has {row.size} entries, expected {cols}")
    return np.array(body, dtype=np.int64).reshape(rows, cols), pos + 1 + rows


def parse_matrix(field: Field, text: str) -> np.ndarray:
    lines = _content_lines(text.splitlines())
    if not lines:
        raise FormatError("empty matrix file")
    mat, _ = _read_matrix_at(field, lines, 0)
    return mat


def parse_code_descriptor(field: Field, line: str) -> RsCodeSpec:
    parts = line.split()
    if not parts or parts[0] != "rscode":
        raise FormatError(f"bad code descriptor {line!r}")
    try:
        kv = dict(p.split("=", 1) for p in parts[1:])
        return build_code(field, int(kv["n"]), int(kv["k"]), int(kv["b"]))
    except (KeyError, ValueError) as exc:
        raise FormatError(f"bad code descriptor {line!r}") from exc


def write_transform(t: RecoveryTransform, out: TextIO) -> None:
    spec = t.spec
    out.write(spec.field.descriptor() + "\n")
    out.write(spec.descriptor() + "\n")
    out.write("# b_matrix\n" + format_matrix(t.b_matrix))
    out.write("# a_inv_t\n" + format_matrix(t.a_inv_t))
    if t.uses_w:
        out.write("# w_inv\n" + format_matrix(t.w_inv[None, :]))
    out.write("# f_inv_kk_inv\n" + format_matrix(t.f_inv_kk_inv))
    out.write("# d_inv\n" + format_matrix(t.d_inv[None, :]))


def read_transform(text: str) -> RecoveryTransform:
    raw = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(raw) < 2:
        raise FormatError("transform file too short")
    field = Field.from_descriptor(raw[0])
    spec = parse_code_descriptor(field, raw[1])
    blocks: dict[str, np.ndarray] = {}
    label = None
    pos = 2
    while pos < len(raw):
        line = raw[pos]
        if line.startswith("#"):
            label = line[1:].strip()
            pos += 1
            continue
        if label is None:
            raise FormatError("unlabelled matrix block in transform file")
        blocks[label], pos = _read_matrix_at(field, raw, pos)
        label = None
    missing = {"b_matrix", "a_inv_t", "f_inv_kk_inv", "d_inv"} - blocks.keys()
    if missing:
        raise FormatError(f"transform file lacks {sorted(missing)}")
    uses_w = "w_inv" in blocks
    w_inv = blocks["w_inv"][0] if uses_w else np.ones(spec.k, dtype=np.int64)
    t = RecoveryTransform(spec, blocks["a_inv_t"], blocks["d_inv"][0], w_inv,
                          blocks["f_inv_kk_inv"], blocks["b_matrix"], uses_w)
    if not np.array_equal(t.recompose(), t.b_matrix):
        raise FormatError("b_matrix does not match the product of its factors")
    return t
