"""Backtracking search for code automorphisms of a prescribed cycle type.

Every automorphism permutes the minimum-weight codewords ``W``, so it also
preserves the pair-incidence matrix ``M[i][j] = |{w in W : i, j in w}|``.
The search builds the permutation one whole cycle at a time and prunes with

* coordinate classes: the refinement of the incidence signatures, a point
  maps only inside its class and every cycle lies inside one class;
* pair incidence: ``M[a][a'] == M[s(a)][s(a')]`` for all mapped ``a, a'``;
* words: a word whose points are all mapped must land in ``W``;
* class capacity: the remaining cycle lengths must still tile the free
  points of every class;

and a returned candidate is checked against the full code.  All conditions
are necessary, so an exhausted search is a proof of non-existence.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .codes import LinearCode, block_to_ints, block_weights, codeword_blocks, _guard
from .gf2la import bits_of
from .modstruct import verify_automorphism
from .perms import CycleType, Permutation, apply, cycle_type

log = logging.getLogger(__name__)

#: beyond this many minimum-weight words the next weight class is used
WORD_SET_CAP = 10**6

__all__ = [
    "Permutation",
    "CycleType",
    "apply",
    "cycle_type",
    "verify_automorphism",
    "orbit_quotient_action",
    "min_weight_words",
    "coordinate_signatures",
    "find_automorphism_with_cycle_type",
    "search_automorphism",
]


def orbit_quotient_action(h: Permutation, g: Permutation) -> Permutation:
    """Permutation induced by ``h`` on the orbits of the involution ``g``.

    Orbits are numbered by smallest point, as in ``normalize_involution``.
    """
    from .modstruct import involution_orbits

    if not h.commutes_with(g):
        raise ValueError("h does not commute with g")
    orbits = involution_orbits(g)
    where = {}
    for t, (a, b) in enumerate(orbits):
        where[a] = where[b] = t
    return Permutation(tuple(where[h(a)] for a, _ in orbits))


def weight_classes(c: LinearCode, count: int = 2) -> list[tuple[int, list[int]]]:
    """The ``count`` lowest nonzero weights with their codewords (sorted ints)."""
    _guard(c.k)
    buckets: dict[int, list[int]] = {}
    for block in codeword_blocks(c):
        w = block_weights(block)
        nz = w[w > 0]
        if not nz.size:
            continue
        for wt in np.unique(nz).tolist():
            if len(buckets) >= count and wt > max(buckets):
                continue
            buckets.setdefault(wt, []).extend(block_to_ints(block[w == wt]))
            if len(buckets) > count:
                del buckets[max(buckets)]
    return [(wt, sorted(buckets[wt])) for wt in sorted(buckets)]


def min_weight_words(c: LinearCode) -> list[int]:
    """All codewords of minimum weight, as sorted ints."""
    if c.k == 0:
        return []
    return weight_classes(c, 1)[0][1]


def _search_words(c: LinearCode) -> tuple[int, list[int], bool]:
    classes = weight_classes(c, 2) if c.k else []
    if not classes:
        return 0, [], False
    wt, words = classes[0]
    if len(words) > WORD_SET_CAP and len(classes) > 1:
        log.info("%d words of weight %d exceed the cap; using weight %d", len(words), wt, classes[1][0])
        wt, words = classes[1]
        return wt, words, True
    return wt, words, False


def pair_incidence(n: int, words: list[int]) -> np.ndarray:
    if not words:
        return np.zeros((n, n), dtype=np.int64)
    inc = np.zeros((len(words), n), dtype=np.int64)
    for r, w in enumerate(words):
        inc[r, bits_of(w)] = 1
    return inc.T @ inc


def coordinate_signatures(c: LinearCode, words: list[int] | None = None) -> list[tuple]:
    """Per coordinate: (words through it, sorted pair counts with the others)."""
    words = min_weight_words(c) if words is None else words
    m = pair_incidence(c.n, words)
    out = []
    for i in range(c.n):
        row = sorted(int(m[i, j]) for j in range(c.n) if j != i)
        out.append((int(m[i, i]), tuple(row)))
    return out


def refine_classes(m: np.ndarray) -> list[int]:
    """Stable colouring of the weighted graph ``m``, as canonical class ids."""
    n = m.shape[0]
    colour = [0] * n
    rows = m.tolist()
    while True:
        keys = [
            (colour[i], rows[i][i], tuple(sorted((colour[j], rows[i][j]) for j in range(n) if j != i)))
            for i in range(n)
        ]
        ids = {key: t for t, key in enumerate(sorted(set(keys)))}
        new = [ids[key] for key in keys]
        if len(ids) == len(set(colour)):
            return new
        colour = new


@dataclass
class SearchResult:
    witness: Permutation | None
    nodes: int = 0
    word_weight: int = 0
    word_count: int = 0
    fallback: bool = False
    classes: list[int] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.witness is not None


class _Search:
    def __init__(self, c: LinearCode, t: CycleType):
        self.c = c
        self.n = c.n
        wt, words, fallback = _search_words(c)
        self.word_weight, self.words, self.fallback = wt, words, fallback
        self.wordset = set(words)
        self.m = pair_incidence(self.n, words).tolist()
        self.cls = refine_classes(np.array(self.m)) if self.n else []
        self.point_words: list[list[int]] = [[] for _ in range(self.n)]
        self.word_pts = [bits_of(w) for w in words]
        for idx, pts in enumerate(self.word_pts):
            for p in pts:
                self.point_words[p].append(idx)
        self.lengths = sorted(t.as_dict())
        self.remaining = dict(t.as_dict())
        self.img = [-1] * self.n
        self.free = [True] * self.n
        self.mapped: list[int] = []
        self.word_hits = [0] * len(words)
        ncls = max(self.cls, default=-1) + 1
        self.class_free = [0] * ncls
        for k in self.cls:
            self.class_free[k] += 1
        self.nodes = 0

    # -- assignments ------------------------------------------------------

    def _assign(self, a: int, b: int) -> bool:
        m = self.m
        ma, mb = m[a], m[b]
        img = self.img
        for p in self.mapped:
            if ma[p] != mb[img[p]]:
                return False
        if ma[a] != mb[b]:
            return False
        img[a] = b
        self.mapped.append(a)
        hits = self.word_hits
        ok = True
        done = []
        for idx in self.point_words[a]:
            hits[idx] += 1
            done.append(idx)
            if hits[idx] == self.word_weight:
                image = 0
                for p in self.word_pts[idx]:
                    image |= 1 << img[p]
                if image not in self.wordset:
                    ok = False
                    break
        if not ok:
            for idx in done:
                hits[idx] -= 1
            self.mapped.pop()
            img[a] = -1
        return ok

    def _unassign(self, a: int) -> None:
        hits = self.word_hits
        for idx in self.point_words[a]:
            hits[idx] -= 1
        self.mapped.pop()
        self.img[a] = -1

    # -- capacity ---------------------------------------------------------

    def _tileable(self) -> bool:
        counts = tuple(self.remaining[l] for l in self.lengths)
        return _tile(tuple(sorted(f for f in self.class_free if f)), tuple(self.lengths), counts)

    # -- branching --------------------------------------------------------

    def _pick_point(self) -> int:
        best = None
        best_key = None
        for x in range(self.n):
            if not self.free[x]:
                continue
            mx = self.m[x]
            link = sum(1 for p in self.mapped if mx[p])
            key = (self.class_free[self.cls[x]], -link, x)
            if best_key is None or key < best_key:
                best, best_key = x, key
        return best

    def run(self) -> Permutation | None:
        if not self._tileable():
            return None
        return self._descend(self.n)

    def _descend(self, free_points: int) -> Permutation | None:
        self.nodes += 1
        if free_points == 0:
            p = Permutation(tuple(self.img))
            return p if verify_automorphism(self.c, p) else None
        x = self._pick_point()
        k = self.cls[x]
        for length in self.lengths:
            if not self.remaining[length] or length > self.class_free[k]:
                continue
            cyc = [x]
            self.free[x] = False
            self.remaining[length] -= 1
            self.class_free[k] -= length
            found = None
            if self._tileable():
                found = self._extend_cycle(cyc, length, free_points - length)
            self.class_free[k] += length
            self.remaining[length] += 1
            self.free[x] = True
            if found is not None:
                return found
        return None

    def _extend_cycle(self, cyc: list[int], length: int, free_after: int) -> Permutation | None:
        last = cyc[-1]
        if len(cyc) == length:
            if not self._assign(last, cyc[0]):
                return None
            found = self._descend(free_after)
            self._unassign(last)
            return found
        k = self.cls[cyc[0]]
        for y in range(self.n):
            if not self.free[y] or self.cls[y] != k:
                continue
            if not self._assign(last, y):
                continue
            self.free[y] = False
            cyc.append(y)
            found = self._extend_cycle(cyc, length, free_after)
            cyc.pop()
            self.free[y] = True
            self._unassign(last)
            if found is not None:
                return found
        return None


@lru_cache(maxsize=None)
def _tile(frees: tuple[int, ...], lengths: tuple[int, ...], counts: tuple[int, ...]) -> bool:
    """Can the cycles (``counts[i]`` of ``lengths[i]``) exactly fill bins ``frees``?"""
    if not frees:
        return not any(counts)
    first, rest = frees[0], frees[1:]
    return _fill(first, rest, lengths, counts, 0)


def _fill(room: int, rest: tuple[int, ...], lengths, counts, start: int) -> bool:
    if room == 0:
        return _tile(rest, lengths, counts)
    for i in range(start, len(lengths)):
        if counts[i] and lengths[i] <= room:
            nc = counts[:i] + (counts[i] - 1,) + counts[i + 1:]
            if _fill(room - lengths[i], rest, lengths, nc, i):
                return True
    return False


def search_automorphism(c: LinearCode, t: CycleType) -> SearchResult:
    if t.n != c.n:
        raise ValueError(f"cycle type {t} sums to {t.n}, code length is {c.n}")
    s = _Search(c, t)
    witness = s.run()
    return SearchResult(witness, s.nodes, s.word_weight, len(s.words), s.fallback, s.cls)


def find_automorphism_with_cycle_type(c: LinearCode, t: CycleType) -> Permutation | None:
    """An automorphism of ``c`` with cycle type ``t``, or ``None`` if there is none."""
    return search_automorphism(c, t).witness
