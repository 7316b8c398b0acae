"""Time each pipeline stage on a directory of [36,18] GEN files.

Useful for estimating a full database run: the overcode stage dominates.
Defaults to the two circulant codes shipped with the tests.
"""

import argparse
import time
from pathlib import Path

from sdc.autsearch import search_automorphism
from sdc.codes import is_self_dual, min_distance
from sdc.cosets import has_overcode_with_distance
from sdc.genfile import read_code_file
from sdc.perms import CycleType
from sdc.pipeline import database_files

DEFAULT_DIR = Path(__file__).resolve().parent.parent / "tests" / "data"


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("directory", nargs="?", type=Path, default=DEFAULT_DIR)
    args = ap.parse_args()

    total = 0.0
    for path in database_files(args.directory):
        c = read_code_file(path).code
        sd, t_sd = timed(is_self_dual, c)
        d, t_d = timed(min_distance, c)
        wit, t_over = timed(has_overcode_with_distance, c, 8)
        r4, t4 = timed(search_automorphism, c, CycleType.parse("4^9"))
        r5, t5 = timed(search_automorphism, c, CycleType.parse("5^7,1"))
        row = t_sd + t_d + t_over + t4 + t5
        total += row
        print(f"{path.name}: self_dual={sd} ({t_sd:.3f}s) d={d} ({t_d:.3f}s) "
              f"overcode={'yes' if wit else 'none'} ({t_over:.2f}s) "
              f"4^9={'yes' if r4.found else 'none'} ({t4:.2f}s, {r4.nodes} nodes) "
              f"5^7,1={'yes' if r5.found else 'none'} ({t5:.2f}s, {r5.nodes} nodes)")
    print(f"total {total:.1f}s")


if __name__ == "__main__":
    main()
