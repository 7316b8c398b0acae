"""Search circulant constructions for self-dual [36,18,8] codes.

Two families, generator ``[I_18 | B]``:

* bordered double circulant: ``B = [[a, 1...1], [1^T, A]]`` with ``A`` a
  17x17 circulant;
* four-circulant: ``B = [[A, B], [B^T, A^T]]`` with 9x9 circulants.

Codes are grouped by the number of weight-8 words (distinct counts give
inequivalent codes) and the first of each group is written as a GEN file.
"""

import argparse
import sys
import time
from pathlib import Path

from sdc.codes import code_from_ints, is_self_dual, min_distance, weight_enumerator
from sdc.genfile import save_code_file


def circulant(first: int, m: int) -> list[int]:
    mask = (1 << m) - 1
    return [((first << s) | (first >> (m - s))) & mask for s in range(m)]


def transpose_first_row(a: int, m: int) -> int:
    b = a & 1
    for j in range(1, m):
        if (a >> (m - j)) & 1:
            b |= 1 << j
    return b


def systematic(right: list[int], k: int):
    return code_from_ints(2 * k, [(1 << i) | (r << k) for i, r in enumerate(right)])


def bordered(alpha: int, a: int):
    m = 17
    right = [alpha | (((1 << m) - 1) << 1)] + [1 | (r << 1) for r in circulant(a, m)]
    return systematic(right, 18)


def four_circulant(a: int, b: int):
    m = 9
    A, B = circulant(a, m), circulant(b, m)
    At, Bt = circulant(transpose_first_row(a, m), m), circulant(transpose_first_row(b, m), m)
    right = [A[i] | (B[i] << m) for i in range(m)] + [Bt[i] | (At[i] << m) for i in range(m)]
    return systematic(right, 18)


def candidates(family: str):
    if family == "bordered":
        for alpha in (0, 1):
            for a in range(1 << 17):
                yield f"bdc_{alpha}_{a}", lambda alpha=alpha, a=a: bordered(alpha, a)
    else:
        for a in range(1 << 9):
            for b in range(1 << 9):
                if (a.bit_count() + b.bit_count()) % 2:
                    yield f"fc_{a}_{b}", lambda a=a, b=b: four_circulant(a, b)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out", type=Path)
    ap.add_argument("--family", choices=["bordered", "four", "both"], default="both")
    ap.add_argument("--limit", type=int, default=0, help="stop after this many codes (0 = all classes)")
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    families = ["bordered", "four"] if args.family == "both" else [args.family]
    seen: dict[int, str] = {}
    t0 = time.time()
    for fam in families:
        for name, build in candidates(fam):
            c = build()
            if not is_self_dual(c) or min_distance(c) != 8:
                continue
            a8 = weight_enumerator(c)[8]
            if a8 in seen:
                continue
            seen[a8] = name
            save_code_file(args.out / f"{name}.gen", c, f"{name} [36,18,8] A8={a8}")
            print(f"{name}: A8={a8}  ({time.time() - t0:.0f}s)", flush=True)
            if args.limit and len(seen) >= args.limit:
                return 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
