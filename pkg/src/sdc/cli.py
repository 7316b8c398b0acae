"""Tools for binary self-dual codes: distances, cosets, module structure, automorphisms.

Exit codes: 0 computed (and, for ``verify-paper``, every verdict
reproduced); 1 computed but a checked property failed; 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .autsearch import search_automorphism
from .codes import (
    EnumerationTooLarge,
    LinearCode,
    construct,
    dual,
    is_doubly_even,
    is_extremal,
    is_self_dual,
    min_distance,
    min_distance_bruteforce,
    shadow,
)
from .cosets import TableTooLarge, has_overcode_with_distance
from .genfile import GenFormatError, read_code_file, write_code_file
from .modstruct import (
    NotAnAutomorphism,
    decompose,
    duality_chain_check,
    fixed_code,
    is_free_by_restriction,
    make_action,
)
from .perms import CycleType, Permutation


class UsageError(Exception):
    pass


def load_code(spec: str) -> tuple[LinearCode, str]:
    """A GEN file path, or ``fixture:NAME`` for a built-in code."""
    if spec.startswith("fixture:"):
        name = spec[len("fixture:"):]
        try:
            return construct(name), name
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    try:
        cf = read_code_file(spec)
    except OSError as exc:
        raise UsageError(f"cannot read {spec}: {exc.strerror or exc}") from None
    except GenFormatError as exc:
        raise UsageError(f"{spec}: {exc}") from None
    return cf.code, cf.label


def _perm(args, c: LinearCode) -> Permutation:
    try:
        return Permutation.parse(args.perm, c.n)
    except ValueError as exc:
        raise UsageError(f"--perm: {exc}") from None


def _action(args, c: LinearCode):
    try:
        return make_action(c, _perm(args, c))
    except NotAnAutomorphism as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, record: dict, text: str) -> None:
    if args.json:
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_info(args) -> int:
    c, label = load_code(args.file)
    sd = is_self_dual(c)
    d = min_distance(c) if c.k else None
    rec = {
        "label": label,
        "n": c.n,
        "k": c.k,
        "min_distance": d,
        "self_dual": sd,
        "doubly_even": is_doubly_even(c),
        "extremal": is_extremal(c) if sd else None,
    }
    text = "\n".join(f"{k}: {v}" for k, v in rec.items())
    _emit(args, rec, text)
    return 0


def cmd_mindist(args) -> int:
    c, _ = load_code(args.file)
    if not c.k:
        raise UsageError("the zero code has no minimum distance")
    d = min_distance_bruteforce(c) if args.brute else min_distance(c)
    _emit(args, {"min_distance": d, "method": "bruteforce" if args.brute else "information_sets"}, str(d))
    return 0


def cmd_dual(args) -> int:
    c, label = load_code(args.file)
    dc = dual(c)
    text = write_code_file(dc, f"dual of {label}" if label else "")
    _emit(args, {"n": dc.n, "k": dc.k, "rows": dc.gen.to_strs()}, text.rstrip("\n"))
    return 0


def cmd_shadow(args) -> int:
    c, _ = load_code(args.file)
    if not is_self_dual(c):
        raise UsageError("shadow requires a self-dual code")
    sh = shadow(c)
    rep = sh.representative
    rec = {"representative": str(rep), "equals_code": rep.bits in c}
    if c.k <= 20:
        weights = sorted({w.bit_count() for w in sh.elements()})
        rec["min_weight"] = weights[0]
    text = "\n".join(f"{k}: {v}" for k, v in rec.items())
    _emit(args, rec, text)
    return 0


def cmd_decompose(args) -> int:
    c, _ = load_code(args.file)
    a = _action(args, c)
    dec = decompose(a)
    rec = {
        "q": dec.q,
        "rank_profile": list(dec.rank_profile),
        "multiplicities": {f"V{i}": m for i, m in enumerate(dec.multiplicities, start=1)},
        "free": dec.is_free(),
        "free_by_restriction": is_free_by_restriction(a),
    }
    text = (
        f"order {dec.q}\nrank profile {list(dec.rank_profile)}\n"
        f"decomposition {dec}\nfree {dec.is_free()}"
    )
    _emit(args, rec, text)
    return 0


def cmd_fixedcode(args) -> int:
    c, _ = load_code(args.file)
    fc = fixed_code(_action(args, c))
    _emit(args, {"n": fc.n, "k": fc.k, "rows": fc.gen.to_strs()}, write_code_file(fc).rstrip("\n"))
    return 0


def cmd_dualitychain(args) -> int:
    c, _ = load_code(args.file)
    if not is_self_dual(c):
        raise UsageError("duality chain needs a self-dual code")
    a = _action(args, c)
    try:
        rep = duality_chain_check(a)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rec = {
        "phi_subset_pi": rep.phi_subset_pi,
        "pi_equals_phi_dual": rep.pi_equals_phi_dual,
        "dims": list(rep.dims),
        "distance_bound_ok": rep.distance_bound_ok,
        "pi_distance": rep.pi_distance,
        "code_distance": rep.code_distance,
        "holds": rep.holds,
    }
    _emit(args, rec, "\n".join(f"{k}: {v}" for k, v in rec.items()))
    return 0 if rep.holds else 1


def cmd_overcodes(args) -> int:
    c, _ = load_code(args.file)
    wit = has_overcode_with_distance(c, args.distance)
    if wit is None:
        _emit(args, {"distance": args.distance, "witness": None}, "none")
    else:
        rec = {
            "distance": args.distance,
            "witness": str(wit.representative),
            "syndrome": wit.syndrome,
            "overcode_distance": wit.overcode_distance,
        }
        _emit(args, rec, f"witness {wit.representative} (overcode distance {wit.overcode_distance})")
    return 0


def cmd_autsearch(args) -> int:
    c, _ = load_code(args.file)
    try:
        t = CycleType.parse(args.cycle_type)
    except ValueError as exc:
        raise UsageError(f"--cycle-type: {exc}") from None
    if t.n != c.n:
        raise UsageError(f"cycle type {t} sums to {t.n}, code length is {c.n}")
    res = search_automorphism(c, t)
    rec = {
        "cycle_type": str(t),
        "found": res.found,
        "witness": str(res.witness) if res.found else None,
        "nodes": res.nodes,
        "word_weight": res.word_weight,
        "word_count": res.word_count,
        "fallback_weight_class": res.fallback,
    }
    _emit(args, rec, str(res.witness) if res.found else "none")
    return 0


def cmd_verify_paper(args) -> int:
    from .pipeline import verify_paper

    try:
        report = verify_paper(args.dir)
    except FileNotFoundError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, report.to_dict(), report.summary())
    return 0 if report.all_reproduced else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    p = argparse.ArgumentParser(prog="sdc", description=__doc__.splitlines()[0], parents=[common])
    p.add_argument("--version", action="version", version=f"sdc {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, perm=False):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(func=func)
        if name != "verify-paper":
            sp.add_argument("file", help="GEN file, or fixture:NAME")
        if perm:
            sp.add_argument("--perm", required=True, help='1-based cycles, e.g. "(1,2)(3,4)"')
        return sp

    add("info", cmd_info, "length, dimension, distance, self-duality")
    add("mindist", cmd_mindist, "minimum distance").add_argument(
        "--brute", action="store_true", help="full enumeration instead of information sets")
    add("dual", cmd_dual, "dual code in GEN format")
    add("shadow", cmd_shadow, "shadow of a self-dual code")
    add("decompose", cmd_decompose, "Jordan-block decomposition under a 2-power permutation", perm=True)
    add("fixedcode", cmd_fixedcode, "subcode fixed by a permutation", perm=True)
    add("dualitychain", cmd_dualitychain, "check Phi(C) <= pi(C(g)) = Phi(C)^perp", perm=True)
    add("overcodes", cmd_overcodes, "overcode with a distance threshold").add_argument(
        "--distance", type=int, required=True)
    add("autsearch", cmd_autsearch, "automorphism with a given cycle type").add_argument(
        "--cycle-type", required=True, help='comma-separated len^count terms, e.g. "4^9" or "5^7,1"')
    vp = add("verify-paper", cmd_verify_paper, "run the database checks on a directory of GEN files")
    vp.add_argument("dir")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (EnumerationTooLarge, TableTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
