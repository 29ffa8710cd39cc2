"""GF(2^m) arithmetic with log/antilog tables.

Elements are plain integers in ``[0, 2^m)``; bit ``i`` is the coefficient of
``x^i`` in the polynomial basis.  Vectors and matrices are numpy integer
arrays of such values.

Multiplications can be tallied with :func:`count_multiplications`.  The
active counter lives in a :class:`contextvars.ContextVar`, so concurrent
tasks each see their own counter and nothing is shared globally.
"""

from __future__ import annotations

import contextvars
import re
from contextlib import contextmanager
from typing import Iterator

import numpy as np

from .errors import (
    DivisionByZero,
    FormatError,
    InvalidFieldParameters,
    InvalidSubgroupOrder,
    PolynomialNotPrimitive,
)

MAX_DEGREE = 16


class MulCounter:
    """Running tally of field multiplications.

    In schematic mode (the default) every multiplication counts once,
    whatever the operands.  With ``schematic=False`` products where either
    operand is 0 or 1 are free.  Counts propagate to the enclosing counter,
    so nested phases add up to the outer total.
    """

    def __init__(self, schematic: bool = True, parent: MulCounter | None = None):
        self.schematic = schematic
        self.parent = parent
        self.total = 0

    def add(self, count: int) -> None:
        c: MulCounter | None = self
        while c is not None:
            c.total += count
            c = c.parent

    def __repr__(self) -> str:
        return f"MulCounter(total={self.total}, schematic={self.schematic})"


_ACTIVE: contextvars.ContextVar[MulCounter | None] = contextvars.ContextVar(
    "rslist_mul_counter", default=None
)


@contextmanager
def count_multiplications(schematic: bool = True) -> Iterator[MulCounter]:
    counter = MulCounter(schematic, parent=_ACTIVE.get())
    token = _ACTIVE.set(counter)
    try:
        yield counter
    finally:
        _ACTIVE.reset(token)


@contextmanager
def uncounted() -> Iterator[None]:
    """Suspend multiplication counting inside the block."""
    token = _ACTIVE.set(None)
    try:
        yield
    finally:
        _ACTIVE.reset(token)


def _poly_degree(p: int) -> int:
    return p.bit_length() - 1


class Field:
    """GF(2^m) together with a designated element ``alpha`` of order ``n``.

    Parameters
    ----------
    m : int
        Extension degree, ``1 <= m <= 16``.
    primitive_poly : int
        Degree-``m`` primitive polynomial over GF(2), constant term in bit 0.
    n : int, optional
        Order of ``alpha``; must divide ``2^m - 1``.  Defaults to ``2^m - 1``,
        in which case ``alpha`` is the root of ``primitive_poly``.
    """

    __slots__ = ("m", "primitive_poly", "n", "q", "alpha", "_exp", "_log",
                 "_exp_np", "_log_np", "_alpha_pows")

    def __init__(self, m: int, primitive_poly: int, n: int | None = None):
        if not 1 <= m <= MAX_DEGREE:
            raise InvalidFieldParameters(f"extension degree m={m} outside [1, {MAX_DEGREE}]")
        if _poly_degree(primitive_poly) != m:
            raise InvalidFieldParameters(
                f"polynomial 0x{primitive_poly:x} does not have degree {m}")
        q = 1 << m
        order = q - 1
        if n is None:
            n = order
        if n < 1 or order % n:
            raise InvalidSubgroupOrder(f"n={n} does not divide 2^{m} - 1 = {order}")

        exp = [0] * (2 * order)
        log = [-1] * q
        v = 1
        for i in range(order):
            if log[v] != -1:
                raise PolynomialNotPrimitive(
                    f"0x{primitive_poly:x} is not primitive: x has order {i}")
            exp[i] = v
            log[v] = i
            v <<= 1
            if v & q:
                v ^= primitive_poly
            if v == 0:
                raise PolynomialNotPrimitive(f"0x{primitive_poly:x} is divisible by x")
        if v != 1:
            raise PolynomialNotPrimitive(f"0x{primitive_poly:x} is not primitive")
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        log[0] = 0  # never read for zero operands; keeps numpy indexing in range

        self.m = m
        self.primitive_poly = primitive_poly
        self.n = n
        self.q = q
        self._exp = tuple(exp)
        self._log = tuple(log)
        self._exp_np = np.array(exp, dtype=np.int64)
        self._log_np = np.array(log, dtype=np.int64)
        self._exp_np.flags.writeable = False
        self._log_np.flags.writeable = False
        step = order // n
        self.alpha = exp[step]
        self._alpha_pows = tuple(exp[(step * i) % order] for i in range(n))

    # ------------------------------------------------------------------
    # identity and serialization
    # ------------------------------------------------------------------
    def _key(self) -> tuple[int, int, int]:
        return (self.m, self.primitive_poly, self.n)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"Field(m={self.m}, primitive_poly=0x{self.primitive_poly:x}, n={self.n})"

    def descriptor(self) -> str:
        return f"field m={self.m} poly=0x{self.primitive_poly:x} n={self.n}"

    @classmethod
    def from_descriptor(cls, text: str) -> Field:
        """Parse ``field m=<int> poly=0x<hex> n=<int>``."""
        match = re.fullmatch(
            r"\s*(?:field\s+)?m=(\d+)\s+poly=(0x[0-9a-fA-F]+|\d+)\s+n=(\d+)\s*", text)
        if not match:
            raise FormatError(f"bad field descriptor: {text!r}")
        m, poly, n = match.groups()
        return cls(int(m), int(poly, 0), int(n))

    @staticmethod
    def format_element(a: int) -> str:
        return format(int(a), "x")

    def parse_element(self, token: str) -> int:
        value = int(token, 16)
        if not 0 <= value < self.q:
            raise FormatError(f"element {token!r} outside GF(2^{self.m})")
        return value

    # ------------------------------------------------------------------
    # scalar arithmetic
    # ------------------------------------------------------------------
    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        counter = _ACTIVE.get()
        if counter is not None and (counter.schematic or (a > 1 and b > 1)):
            counter.add(1)
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        """``a / b``; counted as one multiplication."""
        if b == 0:
            raise DivisionByZero("division by zero")
        counter = _ACTIVE.get()
        if counter is not None and (counter.schematic or (a > 1 and b > 1)):
            counter.add(1)
        if a == 0:
            return 0
        return self._exp[(self._log[a] - self._log[b]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def pow_alpha(self, e: int) -> int:
        """``alpha^(e mod n)``; ``e`` may be negative."""
        return self._alpha_pows[e % self.n]

    def log(self, a: int) -> int:
        """Discrete log of ``a`` to the base of the primitive root (not alpha)."""
        if a == 0:
            raise DivisionByZero("log of zero")
        return self._log[a]

    def antilog(self, i: int) -> int:
        return self._exp[i % (self.q - 1)]

    def alpha_log(self, a: int) -> int:
        """Exponent ``e`` in ``[0, n)`` with ``alpha^e == a``."""
        if a == 0:
            raise DivisionByZero("log of zero")
        step = (self.q - 1) // self.n
        lg = self._log[a]
        if lg % step:
            raise ValueError(f"{a:#x} is not a power of alpha")
        return lg // step

    def elements(self) -> range:
        return range(self.q)

    # ------------------------------------------------------------------
    # vectorized arithmetic on numpy arrays
    # ------------------------------------------------------------------
    def vmul(self, a, b) -> np.ndarray:
        """Elementwise product with broadcasting; counts one per output entry."""
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64),
                                   np.asarray(b, dtype=np.int64))
        out = self._exp_np[self._log_np[a] + self._log_np[b]]
        out[(a == 0) | (b == 0)] = 0
        counter = _ACTIVE.get()
        if counter is not None:
            if counter.schematic:
                counter.add(int(out.size))
            else:
                counter.add(int(np.count_nonzero((a > 1) & (b > 1))))
        return out

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self._exp_np[(self.q - 1 - self._log_np[a]) % (self.q - 1)]

    def vpow_alpha(self, e) -> np.ndarray:
        e = np.asarray(e, dtype=np.int64) % self.n
        return np.asarray(self._alpha_pows, dtype=np.int64)[e]

    def array(self, values) -> np.ndarray:
        """Validate and convert to an int64 array of field elements."""
        arr = np.array(values, dtype=np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= self.q):
            raise ValueError(f"values outside GF(2^{self.m})")
        return arr
