"""Bit-packed linear algebra over GF(2).

Packing: a vector of length ``n`` is stored in one Python ``int`` whose bit
``i`` is coordinate ``i`` (little-endian, coordinate 0 in the least
significant bit).  Bits at positions ``>= n`` are always zero.  String forms
list coordinate 0 first, so ``"110"`` has bits 0 and 1 set.

:func:`to_words` converts rows to little-endian ``uint64`` word arrays for the
numpy enumeration paths in :mod:`sdc.codes`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


def lowbit(x: int) -> int:
    """Index of the least significant set bit of ``x`` (``x > 0``)."""
    return (x & -x).bit_length() - 1


def bits_of(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def parse_bits(s: str) -> int:
    x = 0
    for i, ch in enumerate(s):
        if ch == "1":
            x |= 1 << i
        elif ch != "0":
            raise ValueError(f"invalid bit character {ch!r}")
    return x


def format_bits(x: int, n: int) -> str:
    return "".join("1" if (x >> i) & 1 else "0" for i in range(n))


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set beyond vector length")

    @classmethod
    def from_str(cls, s: str) -> "BitVector":
        return cls(len(s), parse_bits(s))

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        x = 0
        for i in support:
            x |= 1 << i
        return cls(length, x)

    def __str__(self) -> str:
        return format_bits(self.bits, self.length)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.length, self.bits ^ other.bits)

    __add__ = __xor__

    def __and__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.length, self.bits & other.bits)

    def dot(self, other: "BitVector") -> int:
        self._check(other)
        return (self.bits & other.bits).bit_count() & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> list[int]:
        return bits_of(self.bits)

    def _check(self, other: "BitVector") -> None:
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} != {other.length}")


@dataclass(frozen=True)
class BitMatrix:
    """Matrix over GF(2); each row is an int bitset of width ``cols``."""

    cols: int
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for r in self.rows:
            if r < 0 or r >> self.cols:
                raise ValueError("row wider than matrix")

    @classmethod
    def from_strs(cls, strs: Sequence[str], cols: int | None = None) -> "BitMatrix":
        strs = list(strs)
        if cols is None:
            if not strs:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(strs[0])
        for s in strs:
            if len(s) != cols:
                raise ValueError(f"ragged row {s!r}, expected {cols} columns")
        return cls(cols, tuple(parse_bits(s) for s in strs))

    @classmethod
    def from_vectors(cls, vecs: Sequence[BitVector], cols: int | None = None) -> "BitMatrix":
        if cols is None:
            if not vecs:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = vecs[0].length
        for v in vecs:
            if v.length != cols:
                raise ValueError(f"ragged rows: {v.length} != {cols}")
        return cls(cols, tuple(v.bits for v in vecs))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.rows[i])

    def vectors(self) -> list[BitVector]:
        return [BitVector(self.cols, r) for r in self.rows]

    def to_strs(self) -> list[str]:
        return [format_bits(r, self.cols) for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(self.to_strs())

    def to_array(self) -> np.ndarray:
        """Dense 0/1 ``uint8`` array of shape (nrows, cols)."""
        out = np.zeros((self.nrows, self.cols), dtype=np.uint8)
        for i, r in enumerate(self.rows):
            for j in bits_of(r):
                out[i, j] = 1
        return out

    def transpose(self) -> "BitMatrix":
        cols = [0] * self.cols
        for i, r in enumerate(self.rows):
            for j in bits_of(r):
                cols[j] |= 1 << i
        return BitMatrix(self.nrows, tuple(cols))

    def mul_vec(self, v: int) -> int:
        """``M v^T`` as an int whose bit ``i`` is ``row_i . v``."""
        out = 0
        for i, r in enumerate(self.rows):
            if (r & v).bit_count() & 1:
                out |= 1 << i
        return out


def _rref_rows(rows: Sequence[int], order: Sequence[int] | None = None):
    """Gauss-Jordan elimination on int rows.

    ``order`` is the column priority for pivot selection (default ascending).
    Returns ``(rows, pivots)`` with zero rows dropped; row ``i`` has pivot
    ``pivots[i]`` and every other returned row is zero there.
    """
    work = [r for r in rows if r]
    out: list[int] = []
    pivots: list[int] = []
    if order is None:
        # ascending priority: lowest set bit of the remaining rows
        while work:
            low = min(lowbit(r) for r in work)
            mask = 1 << low
            i = next(i for i, r in enumerate(work) if r & mask)
            p = work.pop(i)
            work = [r ^ p if r & mask else r for r in work]
            work = [r for r in work if r]
            out = [r ^ p if r & mask else r for r in out]
            out.append(p)
            pivots.append(low)
        return out, pivots
    for c in order:
        if not work:
            break
        mask = 1 << c
        i = next((i for i, r in enumerate(work) if r & mask), None)
        if i is None:
            continue
        p = work.pop(i)
        work = [r ^ p if r & mask else r for r in work]
        work = [r for r in work if r]
        out = [r ^ p if r & mask else r for r in out]
        out.append(p)
        pivots.append(c)
    return out, pivots


def reduce_rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form with zero rows removed, plus pivot columns."""
    rows, pivots = _rref_rows(m.rows)
    return BitMatrix(m.cols, tuple(rows)), pivots


def pivots_of(m: BitMatrix) -> list[int]:
    """Pivot columns of a matrix already in RREF."""
    return [lowbit(r) for r in m.rows]


def is_rref(m: BitMatrix) -> bool:
    piv = []
    for r in m.rows:
        if not r:
            return False
        piv.append(lowbit(r))
    if any(a >= b for a, b in zip(piv, piv[1:])):
        return False
    mask = sum(1 << p for p in piv)
    return all((r & mask) == (1 << p) for r, p in zip(m.rows, piv))


def rank(m: BitMatrix) -> int:
    return len(_rref_rows(m.rows)[0])


def rank_of_rows(rows: Iterable[int]) -> int:
    """Rank of int rows via an incremental XOR basis keyed by leading bit."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = r
                break
            r ^= b
    return len(basis)


def kernel(m: BitMatrix) -> BitMatrix:
    """Basis (in RREF) of ``{v : m v^T = 0}``."""
    red, piv = _rref_rows(m.rows)
    pivset = set(piv)
    basis = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = 1 << f
        for r, p in zip(red, piv):
            if (r >> f) & 1:
                v |= 1 << p
        basis.append(v)
    rows, _ = _rref_rows(basis)
    return BitMatrix(m.cols, tuple(rows))


def left_kernel(rows: Sequence[int]) -> list[int]:
    """Basis of ``{lam : sum_j lam_j rows[j] = 0}``, each ``lam`` an int over row indices."""
    # tag each row with its index above the data bits
    width = max((r.bit_length() for r in rows), default=0)
    tagged = [r | (1 << (width + j)) for j, r in enumerate(rows)]
    red, piv = _rref_rows(tagged)
    data_mask = (1 << width) - 1
    return [r >> width for r, p in zip(red, piv) if p >= width and not r & data_mask]


def contains(m: BitMatrix, v: BitVector | int) -> bool:
    """Membership of ``v`` in the row space of an RREF matrix."""
    if isinstance(v, BitVector):
        if v.length != m.cols:
            raise ValueError(f"length mismatch: {v.length} != {m.cols}")
        x = v.bits
    else:
        x = v
    for r in m.rows:
        if (x >> lowbit(r)) & 1:
            x ^= r
    return x == 0


def reduce_mod(m: BitMatrix, x: int) -> int:
    """Canonical representative of ``x`` modulo the row space of RREF ``m``."""
    for r in m.rows:
        if (x >> lowbit(r)) & 1:
            x ^= r
    return x


def to_words(rows: Sequence[int], n: int) -> np.ndarray:
    """Rows as a ``(len(rows), ceil(n/64))`` little-endian ``uint64`` array."""
    nw = max(1, (n + 63) // 64)
    out = np.zeros((len(rows), nw), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, r in enumerate(rows):
        for w in range(nw):
            out[i, w] = (r >> (64 * w)) & mask
    return out


def from_words(words: np.ndarray) -> int:
    x = 0
    for w, val in enumerate(words.tolist()):
        x |= int(val) << (64 * w)
    return x
