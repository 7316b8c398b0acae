import random

from sdc.codes import code_from_ints
from sdc.perms import Permutation


def random_code(rng: random.Random, n: int, k: int):
    """Span of ``k`` random vectors; redrawn until nonzero when ``k > 0``."""
    while True:
        c = code_from_ints(n, [rng.getrandbits(n) for _ in range(k)])
        if c.k or not k:
            return c


def random_two_power_perm(rng: random.Random, n: int, lengths=(1, 2, 4)) -> Permutation:
    pts = list(range(n))
    rng.shuffle(pts)
    cycles = []
    i = 0
    while i < n:
        L = rng.choice([l for l in lengths if l <= n - i])
        cycles.append(pts[i:i + L])
        i += L
    return Permutation.from_cycles(n, cycles, one_based=False)


def invariant_code(rng: random.Random, p: Permutation, gens: int):
    """Span of the ``<p>``-orbits of ``gens`` random vectors."""
    q = p.order()
    rows = []
    for _ in range(gens):
        v = rng.getrandbits(p.n)
        for _ in range(q):
            rows.append(v)
            v = p.apply_int(v)
    return code_from_ints(p.n, rows)


def corrupt_non_self_dual(c):
    """Flip one redundancy bit of the first generator (keeps rank, breaks duality)."""
    rows = list(c.rows)
    rows[0] ^= 1 << (c.n - 1)
    return code_from_ints(c.n, rows)
