"""Batch check of a database of self-dual [36,18,8] codes.

For an extremal [72,36,16] code ``C`` with an involution ``g``, ``pi(C(g))``
contains a self-dual [36,18,>=8] code ``D``; if no proper overcode of any
such ``D`` keeps distance 8 then ``pi(C(g)) = D`` has dimension 18 and ``C``
is free over ``<g>``.  The
exclusions of Z4 x Z2 and Z10 reduce to the absence, in every such ``D``, of
automorphisms of cycle type 4^9 and 5^7,1.  This module runs those checks on
each code of a directory of GEN files and folds them into verdicts.  The
module-theoretic steps for order-8 cyclic and Q8 subgroups are arithmetic.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from .autsearch import search_automorphism
from .codes import is_self_dual, min_distance
from .cosets import MAX_REDUNDANCY, has_overcode_with_distance
from .genfile import GenFormatError, read_code_file
from .modstruct import free_rank_obstruction
from .perms import CycleType

log = logging.getLogger(__name__)

LENGTH, DIM, DISTANCE = 36, 18, 8
EXTREMAL_DIM = 36  # dimension of the putative [72,36,16] code
TYPE_Z4 = CycleType.parse("4^9")
TYPE_Z10 = CycleType.parse("5^7,1")
EXPECTED_COUNT = 41


@dataclass
class CodeRecord:
    label: str
    file: str
    n: int | None = None
    k: int | None = None
    self_dual: bool | None = None
    min_distance: int | None = None
    overcode_free_at_8: bool | None = None
    has_4_9_automorphism: bool | None = None
    has_5_7_1_automorphism: bool | None = None
    error: str | None = None
    flags: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def flagged(self) -> bool:
        return bool(self.flags)

    @property
    def valid_member(self) -> bool:
        return (
            self.error is None
            and (self.n, self.k) == (LENGTH, DIM)
            and self.self_dual is True
            and self.min_distance == DISTANCE
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["flagged"] = self.flagged
        return d


def check_code_file(path: Path | str) -> CodeRecord:
    """Run every per-code stage on one GEN file."""
    path = Path(path)
    t0 = time.perf_counter()
    rec = CodeRecord(label=path.stem, file=path.name)
    try:
        cf = read_code_file(path)
    except (GenFormatError, OSError, UnicodeDecodeError) as exc:
        rec.error = str(exc)
        rec.flags.append("parse_error")
        return rec
    c = cf.code
    rec.label = cf.label or path.stem
    rec.n, rec.k = c.n, c.k
    if (c.n, c.k) != (LENGTH, DIM):
        rec.flags.append(f"parameters=[{c.n},{c.k}]")
    rec.self_dual = is_self_dual(c)
    if not rec.self_dual:
        rec.flags.append("not_self_dual")
    if c.k:
        rec.min_distance = min_distance(c)
    if rec.min_distance != DISTANCE:
        rec.flags.append(f"min_distance={rec.min_distance}")
    if c.n - c.k <= MAX_REDUNDANCY:
        rec.overcode_free_at_8 = has_overcode_with_distance(c, DISTANCE) is None
        if not rec.overcode_free_at_8:
            rec.flags.append("overcode_with_distance_8")
    # the searches only bear on verdicts for genuine [36,18,8] members
    if rec.valid_member:
        rec.has_4_9_automorphism = search_automorphism(c, TYPE_Z4).found
        rec.has_5_7_1_automorphism = search_automorphism(c, TYPE_Z10).found
        if rec.has_4_9_automorphism:
            rec.flags.append("automorphism_4^9")
        if rec.has_5_7_1_automorphism:
            rec.flags.append("automorphism_5^7,1")
    rec.seconds = round(time.perf_counter() - t0, 3)
    return rec


def _obstruction(dim: int, order: int) -> dict:
    rank = free_rank_obstruction(dim, order)
    return {
        "dim": dim,
        "group_order": order,
        "rank": str(rank),
        "obstruction": isinstance(rank, Fraction),
    }


def obstructions() -> dict:
    return {
        "involution": _obstruction(EXTREMAL_DIM, 2),
        "order_8": _obstruction(EXTREMAL_DIM, 8),
        "q8": _obstruction(EXTREMAL_DIM, 8),
    }


def _verdict(ok: bool) -> str:
    return "reproduced" if ok else "not reproduced"


def verdicts(records: list[CodeRecord], obs: dict) -> dict[str, str]:
    members = bool(records) and all(r.valid_member for r in records)
    main = members and all(r.overcode_free_at_8 is True for r in records)
    order8 = main and obs["order_8"]["obstruction"]
    q8 = main and obs["q8"]["obstruction"]
    z4 = members and all(r.has_4_9_automorphism is False for r in records)
    z10 = members and all(r.has_5_7_1_automorphism is False for r in records)
    return {
        "involutions_act_freely": _verdict(main),
        "no_element_of_order_8": _verdict(order8),
        "no_q8": _verdict(q8),
        "no_z4_x_z2": _verdict(z4),
        "sylow_2_subgroup": _verdict(order8 and q8 and z4),
        "no_element_of_order_10": _verdict(z10),
    }


@dataclass
class VerificationReport:
    directory: str
    codes: list[CodeRecord]
    obstructions: dict
    verdicts: dict[str, str]
    tool_version: str = __version__

    @property
    def all_reproduced(self) -> bool:
        return all(v == "reproduced" for v in self.verdicts.values())

    @property
    def flagged_files(self) -> list[str]:
        return [r.file for r in self.codes if r.flagged]

    def to_dict(self) -> dict:
        return {
            "directory": self.directory,
            "code_count": len(self.codes),
            "expected_count": EXPECTED_COUNT,
            "codes": [r.to_dict() for r in self.codes],
            "obstructions": self.obstructions,
            "verdicts": self.verdicts,
            "all_reproduced": self.all_reproduced,
            "tool_version": self.tool_version,
        }

    def summary(self) -> str:
        lines = [f"{len(self.codes)} codes in {self.directory}"]
        if len(self.codes) != EXPECTED_COUNT:
            lines.append(f"note: expected {EXPECTED_COUNT} codes")
        for r in self.codes:
            status = "ok" if not r.flagged else "FLAGGED " + ", ".join(r.flags)
            lines.append(
                f"  {r.file}: d={r.min_distance} self_dual={r.self_dual} "
                f"overcode_free_at_8={r.overcode_free_at_8} 4^9={r.has_4_9_automorphism} "
                f"5^7,1={r.has_5_7_1_automorphism} [{status}] {r.seconds:.1f}s"
            )
        for name, ob in self.obstructions.items():
            kind = "obstruction" if ob["obstruction"] else "rank"
            lines.append(f"free rank {ob['dim']}/{ob['group_order']} ({name}): {ob['rank']} {kind}")
        for name, v in self.verdicts.items():
            lines.append(f"{name}: {v}")
        return "\n".join(lines)


def thread_count() -> int:
    raw = os.environ.get("SDC_THREADS", "").strip()
    n = int(raw) if raw else 0
    return n if n > 0 else (os.cpu_count() or 1)


def database_files(directory: Path | str) -> list[Path]:
    d = Path(directory)
    if not d.is_dir():
        raise FileNotFoundError(f"no such directory: {d}")
    files = sorted(p for p in d.iterdir() if p.is_file() and p.suffix == ".gen")
    if not files:
        raise FileNotFoundError(f"no .gen files in {d}")
    return files


def verify_paper(directory: Path | str, threads: int | None = None) -> VerificationReport:
    """Check every ``*.gen`` file of ``directory`` (sorted by name)."""
    files = database_files(directory)
    workers = min(threads or thread_count(), len(files))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            records = list(pool.map(check_code_file, files))
    else:
        records = []
        for f in files:
            records.append(check_code_file(f))
            log.info("%s done in %.1fs", f.name, records[-1].seconds)
    obs = obstructions()
    return VerificationReport(str(directory), records, obs, verdicts(records, obs))
