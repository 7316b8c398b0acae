"""Cyclic 2-group actions on binary codes.

Over GF(2) the group ring of ``<g>``, ``|g| = q = 2^a``, is
``F2[X]/(X^q)`` with ``X = g - 1``, whose indecomposable modules are the
Jordan blocks ``V_i = R/(X^i)``, ``1 <= i <= q``.  A code invariant under
``g`` is such a module; the multiplicity of each ``V_i`` is read off the
ranks ``r_i`` of ``X^i`` restricted to the code:
``m_i = r_{i-1} - 2 r_i + r_{i+1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .codes import LinearCode, code_from_ints, dual, is_self_dual, min_distance
from .gf2la import left_kernel, rank_of_rows
from .perms import Permutation


class NotAnAutomorphism(ValueError):
    pass


def is_power_of_two(q: int) -> bool:
    return q > 0 and q & (q - 1) == 0


def verify_automorphism(c: LinearCode, p: Permutation) -> bool:
    """True iff ``p`` maps every generator, hence the code, into ``c``."""
    if p.n != c.n:
        raise ValueError(f"length mismatch: code {c.n}, permutation {p.n}")
    return all(p.apply_int(r) in c for r in c.rows)


@dataclass(frozen=True)
class CodeAction:
    code: LinearCode
    perm: Permutation
    q: int
    verified: bool = True

    @property
    def k(self) -> int:
        return self.code.k

    def x_image(self, x: int) -> int:
        """``(g - 1) x``."""
        return self.perm.apply_int(x) ^ x


def make_action(c: LinearCode, p: Permutation) -> CodeAction:
    q = p.order()
    if not is_power_of_two(q):
        raise ValueError(f"permutation order {q} is not a power of two")
    if not verify_automorphism(c, p):
        raise NotAnAutomorphism(f"{p} does not stabilize the code")
    return CodeAction(c, p, q)


def rank_profile(a: CodeAction) -> list[int]:
    """``[r_0, ..., r_q]`` with ``r_i = rank (g-1)^i`` on the code."""
    images = list(a.code.rows)
    prof = [rank_of_rows(images)]
    for _ in range(a.q):
        images = [a.x_image(x) for x in images]
        prof.append(rank_of_rows(images))
    return prof


@dataclass(frozen=True)
class CyclicDecomposition:
    """Multiplicities ``multiplicities[i-1]`` of the Jordan blocks ``V_i``."""

    q: int
    multiplicities: tuple[int, ...]
    rank_profile: tuple[int, ...]

    @property
    def dim(self) -> int:
        return sum(i * m for i, m in enumerate(self.multiplicities, start=1))

    def multiplicity(self, i: int) -> int:
        return self.multiplicities[i - 1]

    def reconstructed_profile(self) -> list[int]:
        """Rank profile of ``sum_i m_i V_i``: ``X^j`` has rank ``max(0, i - j)`` on ``V_i``."""
        return [
            sum(m * max(0, i - j) for i, m in enumerate(self.multiplicities, start=1))
            for j in range(self.q + 1)
        ]

    def is_free(self) -> bool:
        return all(m == 0 for m in self.multiplicities[:-1])

    def __str__(self) -> str:
        terms = [f"V{i}^{m}" for i, m in enumerate(self.multiplicities, start=1) if m]
        return " + ".join(terms) if terms else "0"


def decompose(a: CodeAction) -> CyclicDecomposition:
    r = rank_profile(a) + [0]
    mult = tuple(r[i - 1] - 2 * r[i] + r[i + 1] for i in range(1, a.q + 1))
    return CyclicDecomposition(a.q, mult, tuple(r[:-1]))


def is_free(a: CodeAction) -> bool:
    return decompose(a).is_free()


def restriction_to_involution(a: CodeAction) -> CodeAction:
    """The action of ``g^(q/2)``, the unique element of order 2 in ``<g>``."""
    if a.q == 1:
        return a
    return CodeAction(a.code, a.perm ** (a.q // 2), 2)


def is_free_by_restriction(a: CodeAction) -> bool:
    """Freeness decided on the order-2 subgroup: its fixed code has dim ``k/2``."""
    if a.q == 1:
        return True
    return 2 * fixed_code(restriction_to_involution(a)).k == a.k


def free_rank_obstruction(dim: int, group_order: int) -> int | Fraction:
    """Rank ``dim / group_order`` a free module would need.

    An ``int`` when integral; otherwise the non-integral ``Fraction`` is
    returned as the obstruction.
    """
    if dim <= 0 or group_order <= 0:
        raise ValueError("dimension and group order must be positive")
    rank = Fraction(dim, group_order)
    return int(rank) if rank.denominator == 1 else rank


def fixed_code(a: CodeAction) -> LinearCode:
    """``{c in C : g c = c}``, the kernel of ``g - 1`` on the code."""
    rows = a.code.rows
    combos = left_kernel([a.x_image(x) for x in rows])
    words = []
    for lam in combos:
        w = 0
        j = 0
        while lam:
            if lam & 1:
                w ^= rows[j]
            lam >>= 1
            j += 1
        words.append(w)
    return code_from_ints(a.code.n, words)


# --- involutions in standard form ----------------------------------------


def involution_orbits(p: Permutation) -> list[tuple[int, int]]:
    """Transpositions of a fixed-point-free involution, sorted by smallest point."""
    if p.n % 2 or any(p(i) == i for i in range(p.n)) or not (p * p).is_identity():
        raise ValueError(f"{p} is not a fixed-point-free involution")
    return [c for c in p.cycles()]


def normalize_involution(p: Permutation) -> Permutation:
    """Relabeling ``tau`` with ``tau p tau^-1 = (1,2)(3,4)...``.

    Orbit ``t`` (by smallest point) goes to the pair ``(2t, 2t+1)``.
    """
    img = [0] * p.n
    for t, (a, b) in enumerate(involution_orbits(p)):
        img[a] = 2 * t
        img[b] = 2 * t + 1
    return Permutation(tuple(img))


def standard_involution(n: int) -> Permutation:
    return Permutation.from_cycles(n, [(i, i + 1) for i in range(0, n, 2)], one_based=False)


def relabel(c: LinearCode, tau: Permutation) -> LinearCode:
    return code_from_ints(c.n, [tau.apply_int(r) for r in c.rows])


def normalized_action(a: CodeAction) -> CodeAction:
    """The same action after relabeling so the involution is in standard form."""
    tau = normalize_involution(a.perm)
    return CodeAction(relabel(a.code, tau), tau * a.perm * tau.inverse(), 2)


def _require_standard(a: CodeAction) -> None:
    if a.perm != standard_involution(a.code.n):
        raise ValueError("action is not the standard involution (1,2)(3,4)...; normalize first")


def _pair_project(x: int, n: int, xor: bool) -> int:
    out = 0
    for t in range(n // 2):
        a = (x >> (2 * t)) & 1
        b = (x >> (2 * t + 1)) & 1
        if (a ^ b) if xor else a:
            out |= 1 << t
    return out


def pi_map(a: CodeAction) -> LinearCode:
    """Fixed code projected to one coordinate per involution orbit."""
    _require_standard(a)
    fc = fixed_code(a)
    return code_from_ints(a.code.n // 2, [_pair_project(x, a.code.n, False) for x in fc.rows])


def phi_map(a: CodeAction) -> LinearCode:
    """Image of ``c -> (c_1+c_2, c_3+c_4, ...)``."""
    _require_standard(a)
    return code_from_ints(a.code.n // 2, [_pair_project(x, a.code.n, True) for x in a.code.rows])


@dataclass(frozen=True)
class DualityChainReport:
    phi_subset_pi: bool
    pi_equals_phi_dual: bool
    dims: tuple[int, int]
    distance_bound_ok: bool
    pi_distance: int | None = None
    code_distance: int | None = None

    @property
    def holds(self) -> bool:
        return self.phi_subset_pi and self.pi_equals_phi_dual and self.distance_bound_ok


def duality_chain_check(a: CodeAction) -> DualityChainReport:
    """Check ``Phi(C) <= pi(C(g)) = Phi(C)^perp`` and ``d(pi(C(g))) >= ceil(d(C)/2)``."""
    if not is_self_dual(a.code):
        raise ValueError("duality chain check requires a self-dual code")
    std = normalized_action(a)
    pi = pi_map(std)
    phi = phi_map(std)
    subset = all(r in pi for r in phi.rows)
    equal = pi == dual(phi)
    d_code = min_distance(std.code)
    d_pi = min_distance(pi) if pi.k else None
    bound_ok = d_pi is None or d_pi >= ceil(d_code / 2)
    return DualityChainReport(subset, equal, (pi.k, phi.k), bound_ok, d_pi, d_code)
