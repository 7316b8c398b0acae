"""Revolving-door (minimal change) enumeration of combinations.

Successive t-subsets of ``range(n)`` differ by one element out and one in,
so quantities that are XOR-sums over the subset (syndromes, codewords) can be
updated with two XORs per step.  This is Knuth's Algorithm R
(TAOCP 7.2.1.3).
"""

from __future__ import annotations

from typing import Iterator


def revolving_door(n: int, t: int) -> Iterator[tuple[int, int]]:
    """Yield ``(out, in)`` swaps walking all t-subsets of ``range(n)``.

    The walk starts at ``{0, ..., t-1}``; the number of swaps yielded is
    ``C(n, t) - 1``.
    """
    if t < 0 or t > n:
        raise ValueError(f"need 0 <= t <= n, got t={t}, n={n}")
    if t == 0 or t == n:
        return
    if t == 1:
        for i in range(n - 1):
            yield i, i + 1
        return
    # c[1..t] is the current combination, c[t+1] = n is a sentinel
    c = [0] + list(range(t)) + [n]
    odd = t & 1
    while True:
        if odd:
            if c[1] + 1 < c[2]:
                yield c[1], c[1] + 1
                c[1] += 1
                continue
            j = 2
        else:
            if c[1] > 0:
                yield c[1], c[1] - 1
                c[1] -= 1
                continue
            j = 2
            # R3 even case jumps straight to R5
            if c[j] + 1 < c[j + 1]:
                yield j - 2, c[j] + 1
                c[j - 1] = c[j]
                c[j] += 1
                continue
            j += 1
            if j > t:
                return
        while True:
            # R4: c[j] == c[j-1] + 1
            if c[j] >= j:
                yield c[j], j - 2
                c[j] = c[j - 1]
                c[j - 1] = j - 2
                break
            j += 1
            # R5: c[j-1] == j - 2
            if c[j] + 1 < c[j + 1]:
                yield j - 2, c[j] + 1
                c[j - 1] = c[j]
                c[j] += 1
                break
            j += 1
            if j > t:
                return


def revolving_door_sets(n: int, t: int) -> Iterator[frozenset[int]]:
    """The subsets themselves, in revolving-door order (for tests and small n)."""
    cur = set(range(t))
    yield frozenset(cur)
    for out, inn in revolving_door(n, t):
        cur.remove(out)
        cur.add(inn)
        yield frozenset(cur)
