"""Binary linear codes and their classical invariants."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .combinatorics import revolving_door
from .gf2la import (
    BitMatrix,
    BitVector,
    _rref_rows,
    contains,
    format_bits,
    from_words,
    kernel,
    lowbit,
    parse_bits,
    to_words,
)

#: full-enumeration guard on the dimension
MAX_ENUM_DIM = 28

_BLOCK_BITS = 16


class EnumerationTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class LinearCode:
    """A binary [n, k] code held by its RREF generator matrix.

    Equality is equality of the RREF matrices, i.e. of the codes as sets.
    """

    n: int
    gen: BitMatrix

    def __post_init__(self):
        if self.gen.cols != self.n:
            raise ValueError(f"generator has {self.gen.cols} columns, code length {self.n}")

    @property
    def k(self) -> int:
        return self.gen.nrows

    @property
    def rows(self) -> tuple[int, ...]:
        return self.gen.rows

    def __contains__(self, v: BitVector | int) -> bool:
        return contains(self.gen, v)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}])"

    @classmethod
    def from_strs(cls, strs: Sequence[str], n: int | None = None) -> "LinearCode":
        return from_generators(BitMatrix.from_strs(strs, n).vectors(), n)

    def codewords(self) -> list[int]:
        """All codewords as ints (small k only)."""
        _guard(self.k)
        words = [0]
        for r in self.rows:
            words += [w ^ r for w in words]
        return words


def _canonical(n: int, rows: Sequence[int]) -> LinearCode:
    red, _ = _rref_rows(rows)
    return LinearCode(n, BitMatrix(n, tuple(red)))


def from_generators(rows: Sequence[BitVector], n: int | None = None) -> LinearCode:
    """Canonical code spanned by ``rows``; dependent rows are dropped."""
    rows = list(rows)
    if n is None:
        if not rows:
            raise ValueError("length of the zero code must be given")
        n = rows[0].length
    for r in rows:
        if r.length != n:
            raise ValueError(f"ragged generator rows: length {r.length} != {n}")
    return _canonical(n, [r.bits for r in rows])


def code_from_ints(n: int, rows: Sequence[int]) -> LinearCode:
    return _canonical(n, rows)


def dual(c: LinearCode) -> LinearCode:
    return LinearCode(c.n, kernel(c.gen))


def is_self_orthogonal(c: LinearCode) -> bool:
    rows = c.rows
    return all(
        (a & b).bit_count() % 2 == 0 for i, a in enumerate(rows) for b in rows[i:]
    )


def is_self_dual(c: LinearCode) -> bool:
    return 2 * c.k == c.n and is_self_orthogonal(c)


def is_doubly_even(c: LinearCode) -> bool:
    """All weights divisible by 4.

    Checked on generators: weights 0 mod 4 and even pairwise overlaps, which
    makes ``wt(a+b) = wt(a) + wt(b) - 2|a&b|`` stay 0 mod 4.
    """
    rows = c.rows
    if any(r.bit_count() % 4 for r in rows):
        return False
    return all((a & b).bit_count() % 2 == 0 for i, a in enumerate(rows) for b in rows[i + 1:])


def direct_sum(*codes: LinearCode) -> LinearCode:
    rows: list[int] = []
    shift = 0
    for c in codes:
        rows += [r << shift for r in c.rows]
        shift += c.n
    return _canonical(shift, rows)


# --- enumeration --------------------------------------------------------


def _guard(k: int) -> None:
    if k > MAX_ENUM_DIM:
        raise EnumerationTooLarge(
            f"dimension {k} exceeds the enumeration limit {MAX_ENUM_DIM}"
        )


def codeword_blocks(c: LinearCode) -> Iterator[np.ndarray]:
    """Yield every codeword once, packed as ``uint64`` word rows, in blocks.

    The low ``min(k, 16)`` generators are tabulated; the rest are walked in
    Gray-code order, each block being the table XOR one offset.
    """
    _guard(c.k)
    words = to_words(c.rows, c.n)
    lo = min(c.k, _BLOCK_BITS)
    table = np.zeros((1, words.shape[1]), dtype=np.uint64)
    for i in range(lo):
        table = np.concatenate([table, table ^ words[i]])
    high = words[lo:]
    offset = np.zeros(words.shape[1], dtype=np.uint64)
    yield table
    for step in range(1, 1 << len(high)):
        offset = offset ^ high[lowbit(step)]
        yield table ^ offset


def block_weights(block: np.ndarray) -> np.ndarray:
    return np.bitwise_count(block).sum(axis=1, dtype=np.int64)


def block_to_ints(block: np.ndarray) -> list[int]:
    if block.shape[1] == 1:
        return [int(x) for x in block[:, 0].tolist()]
    return [from_words(row) for row in block]


def min_distance_bruteforce(c: LinearCode) -> int:
    if c.k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    best = c.n + 1
    for block in codeword_blocks(c):
        w = block_weights(block)
        w = w[w > 0]
        if w.size:
            best = min(best, int(w.min()))
    return best


@dataclass(frozen=True)
class WeightEnumerator:
    coefficients: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i]

    def total(self) -> int:
        return sum(self.coefficients)

    def min_distance(self) -> int:
        return next(i for i, a in enumerate(self.coefficients) if i and a)

    def __str__(self) -> str:
        terms = [f"{a}*y^{i}" if i else str(a) for i, a in enumerate(self.coefficients) if a]
        return " + ".join(terms)


def weight_enumerator(c: LinearCode) -> WeightEnumerator:
    counts = np.zeros(c.n + 1, dtype=np.int64)
    for block in codeword_blocks(c):
        counts += np.bincount(block_weights(block), minlength=c.n + 1)
    return WeightEnumerator(tuple(int(x) for x in counts))


def krawtchouk(n: int, j: int, i: int) -> int:
    return sum((-1) ** s * comb(i, s) * comb(n - i, j - s) for s in range(j + 1))


def macwilliams(we: WeightEnumerator) -> WeightEnumerator:
    """Weight enumerator of the dual code, in exact integer arithmetic."""
    n = we.n
    size = we.total()
    out = []
    for j in range(n + 1):
        s = sum(a * krawtchouk(n, j, i) for i, a in enumerate(we.coefficients))
        q, rem = divmod(s, size)
        if rem:
            raise ValueError("not the weight enumerator of a linear code")
        out.append(q)
    return WeightEnumerator(tuple(out))


def words_of_weight(c: LinearCode, w: int) -> list[int]:
    out: list[int] = []
    for block in codeword_blocks(c):
        sel = block[block_weights(block) == w]
        if sel.size:
            out += block_to_ints(sel)
    return sorted(out)


# --- minimum distance by information sets --------------------------------


def _information_sets(c: LinearCode) -> list[tuple[list[int], int]]:
    """Systematic generator matrices over successive information sets.

    Columns not yet used as pivots get priority, so early sets are disjoint.
    Returns ``(rows, fresh)`` pairs where ``fresh`` counts the pivots that do
    not belong to any earlier set.
    """
    unused = list(range(c.n))
    used: set[int] = set()
    out = []
    while unused:
        order = unused + sorted(used)
        rows, piv = _rref_rows(c.rows, order)
        fresh = sum(1 for p in piv if p not in used)
        if fresh == 0:
            break
        out.append((rows, fresh))
        used.update(piv)
        unused = [i for i in unused if i not in used]
    return out


def min_distance(c: LinearCode) -> int:
    """Exact minimum distance by Brouwer-Zimmermann enumeration.

    Each systematic matrix ``G_j`` is walked over combinations of ``w`` rows
    (revolving-door, one XOR pair per step).  A codeword not yet met uses more
    than ``w`` rows of every ``G_j`` and so has weight at least
    ``sum_j max(0, w + 1 - (k - fresh_j))`` on the disjoint fresh columns.
    """
    k = c.k
    if k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    sets = _information_sets(c)
    upper = min(r.bit_count() for r in c.rows)
    for w in range(1, k + 1):
        for rows, _ in sets:
            cur = 0
            for i in range(w):
                cur ^= rows[i]
            best = cur.bit_count()
            for out, inn in revolving_door(k, w):
                cur ^= rows[out] ^ rows[inn]
                wt = cur.bit_count()
                if wt < best:
                    best = wt
            upper = min(upper, best)
        lower = sum(max(0, w + 1 - (k - fresh)) for _, fresh in sets)
        if lower >= upper:
            return upper
    return upper


# --- shadow and extremality ---------------------------------------------


@dataclass(frozen=True)
class Shadow:
    """The coset ``representative + subcode``."""

    representative: BitVector
    subcode: LinearCode

    def __contains__(self, v: BitVector | int) -> bool:
        x = v.bits if isinstance(v, BitVector) else v
        return (x ^ self.representative.bits) in self.subcode

    def elements(self) -> list[int]:
        r = self.representative.bits
        return sorted(w ^ r for w in self.subcode.codewords())


def shadow(c: LinearCode) -> Shadow:
    """Solutions of ``v . x = wt(v)/2 (mod 2)`` over the generators ``v``.

    For self-dual ``c`` the right-hand side is linear on ``c`` so the solution
    set is a coset of ``c``.  A particular solution sits on the pivot columns:
    RREF row ``i`` meets it only at pivot ``i``.
    """
    if not is_self_dual(c):
        raise ValueError("shadow requires a self-dual code")
    rep = 0
    for r in c.rows:
        if (r.bit_count() // 2) & 1:
            rep |= 1 << lowbit(r)
    return Shadow(BitVector(c.n, rep), c)


def extremal_bound(n: int) -> int:
    if n % 2 or n < 2:
        raise ValueError(f"extremal bound needs an even length >= 2, got {n}")
    return 4 * (n // 24) + (6 if n % 24 == 22 else 4)


def is_extremal(c: LinearCode) -> bool:
    if not is_self_dual(c):
        raise ValueError("extremality is defined for self-dual codes")
    return min_distance(c) == extremal_bound(c.n)


# --- fixtures -----------------------------------------------------------


def repetition(n: int) -> LinearCode:
    return _canonical(n, [(1 << n) - 1])


def extended_hamming_8() -> LinearCode:
    """First-order Reed-Muller code RM(1,3)."""
    return LinearCode.from_strs(["11111111", "11110000", "11001100", "10101010"])


def c4() -> LinearCode:
    return LinearCode.from_strs(["1010", "0101"])


def i2_sum(m: int) -> LinearCode:
    """Direct sum of ``m`` copies of the [2,1] repetition code."""
    return direct_sum(*[repetition(2)] * m)


def extended_qr(p: int) -> LinearCode:
    """Extended binary quadratic-residue code of prime length ``p = +-1 mod 8``.

    The cyclic shifts of ``1 + sum_{r in QR} x^r`` (extended by a parity bit)
    span the even-weight subcode; the all-ones word completes it.
    """
    if p % 8 not in (1, 7):
        raise ValueError("binary QR codes need p = +-1 mod 8")
    qr = {(i * i) % p for i in range(1, p)}
    base = 1 | sum(1 << r for r in qr)
    rows = []
    mask = (1 << p) - 1
    for s in range(p):
        v = ((base << s) | (base >> (p - s))) & mask
        rows.append(v | ((v.bit_count() & 1) << p))
    rows.append((1 << (p + 1)) - 1)
    return _canonical(p + 1, rows)


def golay_24() -> LinearCode:
    return extended_qr(23)


_FIXTURES = {
    "extended_hamming_8": extended_hamming_8,
    "golay_24": golay_24,
    "c4": c4,
}


def construct(name: str) -> LinearCode:
    """Build a named fixture.

    Names: ``repetition_N``, ``extended_hamming_8``, ``golay_24``, ``c4``,
    ``i2_M`` (M copies of repetition_2), ``eqr_P``; ``a+b`` is a direct sum.
    """
    if "+" in name:
        return direct_sum(*[construct(part.strip()) for part in name.split("+")])
    if name in _FIXTURES:
        return _FIXTURES[name]()
    head, _, tail = name.rpartition("_")
    if tail.isdigit():
        if head == "repetition":
            return repetition(int(tail))
        if head == "i2":
            return i2_sum(int(tail))
        if head == "eqr":
            return extended_qr(int(tail))
    raise KeyError(f"unknown fixture {name!r}")
