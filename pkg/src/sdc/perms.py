"""Coordinate permutations and cycle types.

Points are 0-based internally; every string form (cycle notation, parsing)
is 1-based.  A permutation ``p`` acts on vectors by ``(p.v)_i = v_{p^-1(i)}``:
the entry at coordinate ``j`` moves to coordinate ``p(j)``.  Products follow
function composition, ``(p * q)(i) = p(q(i))``, so ``(p*q).v = p.(q.v)``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

from .gf2la import BitVector


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images do not form a bijection")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]], one_based: bool = True) -> "Permutation":
        img = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            pts = [c - 1 for c in cyc] if one_based else list(cyc)
            for p in pts:
                if not 0 <= p < n:
                    raise ValueError(f"point {p + one_based} outside 1..{n}" if one_based else f"point {p} outside 0..{n-1}")
                if p in seen:
                    raise ValueError(f"point {p + one_based} repeated in cycles")
                seen.add(p)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                img[a] = b
        return cls(tuple(img))

    @classmethod
    def parse(cls, text: str, n: int) -> "Permutation":
        """Parse 1-based cycle notation such as ``"(1,2)(3,4)"``; ``"()"`` is the identity."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*(\d+(\s*,\s*\d+)*)?\s*\)\s*)*", text):
            raise ValueError(f"malformed cycle notation {text!r}")
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", text):
            if body.strip():
                cycles.append([int(x) for x in body.split(",")])
        return cls.from_cycles(n, cycles)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def __pow__(self, e: int) -> "Permutation":
        if e < 0:
            return self.inverse() ** (-e)
        result = Permutation.identity(self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Cycles (0-based), each starting at its smallest point, sorted by that point."""
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycle_type(self) -> "CycleType":
        return CycleType.from_lengths(len(c) for c in self.cycles(include_fixed=True))

    def apply_int(self, x: int) -> int:
        out = 0
        img = self.images
        while x:
            low = x & -x
            out |= 1 << img[low.bit_length() - 1]
            x ^= low
        return out

    def apply(self, v: BitVector) -> BitVector:
        if v.length != self.n:
            raise ValueError(f"length mismatch: vector {v.length}, permutation {self.n}")
        return BitVector(v.length, self.apply_int(v.bits))

    def commutes_with(self, other: "Permutation") -> bool:
        return self * other == other * self

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(i + 1) for i in c) + ")" for c in cyc)


def apply(p: Permutation, v: BitVector) -> BitVector:
    return p.apply(v)


def cycle_type(p: Permutation) -> "CycleType":
    return p.cycle_type()


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths as sorted ``(length, count)`` pairs."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        merged: Counter[int] = Counter()
        for length, count in self.parts:
            if length < 1 or count < 0:
                raise ValueError(f"bad cycle-type term {length}^{count}")
            merged[length] += count
        object.__setattr__(
            self, "parts", tuple(sorted((l, c) for l, c in merged.items() if c))
        )

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> "CycleType":
        return cls(tuple(Counter(lengths).items()))

    @classmethod
    def parse(cls, spec: str) -> "CycleType":
        """Parse comma-separated ``len^count`` terms, e.g. ``"4^9"`` or ``"5^7,1"``."""
        parts = []
        for term in spec.split(","):
            term = term.strip()
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", term)
            if not m:
                raise ValueError(f"bad cycle-type term {term!r}")
            parts.append((int(m.group(1)), int(m.group(2) or 1)))
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(l * c for l, c in self.parts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.parts)

    def order(self) -> int:
        return lcm(1, *(l for l, _ in self.parts))

    def lengths(self) -> list[int]:
        """Cycle lengths, longest first."""
        return sorted((l for l, c in self.parts for _ in range(c)), reverse=True)

    def __str__(self) -> str:
        return ",".join(f"{l}^{c}" if c > 1 else str(l) for l, c in sorted(self.parts, reverse=True))


def partitions(n: int, largest: int | None = None) -> Iterable[tuple[int, ...]]:
    """Integer partitions of ``n`` in non-increasing order."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest
