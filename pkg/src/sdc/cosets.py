"""Coset-leader weights via syndrome coverage.

Overcode reduction: every proper overcode of ``C`` contains some ``C + <v>``
with ``v`` outside ``C``, and ``d(E2) <= d(E1)`` whenever ``E1 <= E2``.  So a
proper overcode of distance ``>= d`` exists iff some coset ``C + v`` has
leader weight ``>= d``, i.e. iff some nonzero syndrome is not reached by any
vector of weight ``< d``.  Then ``C + <v>`` has distance ``min(d(C), wt(C+v))``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import LinearCode, code_from_ints, dual, min_distance
from .combinatorics import revolving_door
from .gf2la import BitVector

#: guard on the redundancy n - k (table has 2^(n-k) entries)
MAX_REDUNDANCY = 26


class TableTooLarge(ValueError):
    pass


def syndrome_columns(c: LinearCode) -> list[int]:
    """Syndrome of each unit vector against the RREF parity-check matrix.

    Bit ``i`` of a syndrome is the check against row ``i`` of ``dual(c).gen``.
    """
    h = dual(c).gen
    cols = [0] * c.n
    for i, row in enumerate(h.rows):
        for j in range(c.n):
            if (row >> j) & 1:
                cols[j] |= 1 << i
    return cols


@dataclass
class SyndromeTable:
    """Syndromes reached by vectors of weight ``<= threshold``.

    ``covered`` holds one byte per syndrome (0 or 1), indexed by the syndrome
    integer.  ``counts[w]`` is the number of syndromes first reached at
    weight ``w``, i.e. the number of cosets with leader weight ``w``.
    """

    redundancy: int
    threshold: int
    covered: bytearray
    counts: list[int]
    columns: list[int]

    @property
    def size(self) -> int:
        return 1 << self.redundancy

    def covered_count(self) -> int:
        return sum(self.counts)

    def is_covered(self, s: int) -> bool:
        return bool(self.covered[s])

    def is_full(self) -> bool:
        return self.covered_count() == self.size

    def first_uncovered(self) -> int | None:
        i = self.covered.find(0)
        return None if i < 0 else i

    def extend(self) -> None:
        """Raise the threshold by one, marking syndromes of the next weight."""
        w = self.threshold + 1
        n = len(self.columns)
        if w > n:
            self.threshold = w
            self.counts.append(0)
            return
        cols = self.columns
        cov = self.covered
        fresh = 0
        s = 0
        for i in range(w):
            s ^= cols[i]
        if not cov[s]:
            cov[s] = 1
            fresh += 1
        for out, inn in revolving_door(n, w):
            s ^= cols[out] ^ cols[inn]
            if not cov[s]:
                cov[s] = 1
                fresh += 1
        self.threshold = w
        self.counts.append(fresh)


def _check_redundancy(c: LinearCode) -> int:
    r = c.n - c.k
    if r > MAX_REDUNDANCY:
        raise TableTooLarge(f"redundancy {r} exceeds the table limit {MAX_REDUNDANCY}")
    return r


def syndrome_coverage(c: LinearCode, w: int) -> SyndromeTable:
    """Mark the syndromes of all vectors of weight ``<= w``.

    Weight classes are walked in revolving-door order so each step costs two
    column XORs.
    """
    r = _check_redundancy(c)
    cov = bytearray(1 << r)
    cov[0] = 1
    table = SyndromeTable(r, 0, cov, [1], syndrome_columns(c))
    while table.threshold < w and not table.is_full():
        table.extend()
    while table.threshold < w:
        table.threshold += 1
        table.counts.append(0)
    return table


def solve_syndrome(c: LinearCode, s: int) -> BitVector:
    """A vector with syndrome ``s``, supported on the parity-check pivots."""
    h = dual(c).gen
    x = 0
    for i, row in enumerate(h.rows):
        if (s >> i) & 1:
            x |= 1 << ((row & -row).bit_length() - 1)
    return BitVector(c.n, x)


def syndrome_of(c: LinearCode, v: BitVector) -> int:
    return dual(c).gen.mul_vec(v.bits)


@dataclass(frozen=True)
class OvercodeWitness:
    """A coset ``C + representative`` of leader weight at least ``leader_weight_at_least``."""

    representative: BitVector
    syndrome: int
    leader_weight_at_least: int
    overcode_distance: int

    def overcode(self, c: LinearCode) -> LinearCode:
        return code_from_ints(c.n, list(c.rows) + [self.representative.bits])


def has_overcode_with_distance(c: LinearCode, d: int) -> OvercodeWitness | None:
    """Witness coset for an overcode of distance ``>= min(d, d(C))``, or ``None``.

    ``None`` is definitive: every proper overcode has distance ``< d``.
    """
    if d < 1:
        raise ValueError("distance must be >= 1")
    table = syndrome_coverage(c, d - 1)
    s = table.first_uncovered()
    if s is None:
        return None
    rep = solve_syndrome(c, s)
    eff = d if c.k == 0 else min(d, min_distance(c))
    return OvercodeWitness(rep, s, d, eff)


def covering_radius(c: LinearCode) -> int:
    r = _check_redundancy(c)
    cov = bytearray(1 << r)
    cov[0] = 1
    table = SyndromeTable(r, 0, cov, [1], syndrome_columns(c))
    while not table.is_full():
        table.extend()
    return table.threshold


def coset_leader_census(c: LinearCode) -> list[int]:
    """Number of cosets per leader weight, from a full coverage sweep."""
    r = _check_redundancy(c)
    cov = bytearray(1 << r)
    cov[0] = 1
    table = SyndromeTable(r, 0, cov, [1], syndrome_columns(c))
    while not table.is_full():
        table.extend()
    return table.counts
