"""Command-line front end: construction, classification, invariants,
enumeration, verification, transversals and isomorphism testing, all over
JSON.  Exit codes: 0 success, 1 usage/input error, 2 verification
discrepancy."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import families as fam
from . import oracle
from .congruence import transversal, congruence_normal_form
from .fp import Mat2
from .pcgroup import GroupData, group_for, i_minmax, subgroup_enum_bound

CASE_FLAGS = {"I": "I", "II": "II", "IIIa": "III-a", "IIIb": "III-b", "IV": "IV"}


class CliError(Exception):
    pass


def _load_datum(path: str) -> GroupData:
    try:
        with open(path) as fh:
            return GroupData.from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CliError(f"cannot read group datum from {path}: {exc}") from None


def _emit(obj, args) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _type_from_args(args) -> fam.IsoType:
    params = {}
    for name in ("n", "m", "s", "t", "r"):
        val = getattr(args, name)
        if val is not None:
            params[name] = val
    for flag, name in (("nu", "nu"), ("nu1", "nu1"), ("nu2", "nu2")):
        val = getattr(args, flag)
        if val is not None:
            params[name] = val
    if args.variant is not None:
        params["variant"] = args.variant
    if "n" not in params or "m" not in params:
        mn = fam.minimal_nm(args.type, args.p)
        if mn is None:
            raise CliError(f"family {args.type} does not occur for p={args.p}")
        params.setdefault("n", mn[0])
        params.setdefault("m", mn[1])
    # fill unset family parameters with their first admissible value
    fmly = fam.FAMILIES.get(args.type)
    if fmly is None:
        raise CliError(f"unknown family tag {args.type!r}")
    for name, rng in fmly.params:
        if name not in params:
            params[name] = list(rng(args.p))[0]
    return fam.IsoType.of(args.type, **params)


def cmd_construct(args) -> int:
    T = _type_from_args(args)
    data = fam.construct(T, args.p)
    if args.presentation:
        print(fam.angle_presentation(fam.presentation(T, args.p)))
    else:
        out = data.to_json()
        out["order"] = data.order
        out["type"] = str(T)
        _emit(out, args)
    return 0


def cmd_classify(args) -> int:
    from .classifier import classify_group

    data = _load_datum(args.input)
    T = classify_group(data)
    _emit({"type": T.tag, "params": T.as_dict()}, args)
    return 0


def cmd_invariants(args) -> int:
    data = _load_datum(args.input)
    g = group_for(data)
    s = g.structure()
    out = {
        "order": s.order,
        "derived_order": s.derived_subgroup.order,
        "g3_order": s.G3.order,
        "center_order": s.center.order,
        "frattini_order": s.frattini.order,
        "d": s.d,
        "abelianization": list(s.abelianization_type),
        "order_histogram": {str(k): v for k, v in sorted(s.order_histogram.items())},
    }
    if data.order <= subgroup_enum_bound():
        imin, imax = g.i_minmax()
        out["i_min"] = imin
        out["i_max"] = imax
        out["a_t"] = imax + 1
    else:
        out["i_min"] = out["i_max"] = None
        out["note"] = "order exceeds the subgroup enumeration bound"
    _emit(out, args)
    return 0


def cmd_enumerate(args) -> int:
    case = CASE_FLAGS[args.case]
    data = oracle.enumerate_case(case, args.p, args.n, args.m)
    _emit([d.to_json() for d in data], args)
    return 0


def cmd_verify(args) -> int:
    case = CASE_FLAGS[args.case]
    rep = oracle.verify_classification(case, args.p, args.n, args.m)
    out = rep.to_json()
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(out, fh, indent=2, sort_keys=True)
    _emit(out, args)
    return 0 if rep.ok else 2


def cmd_transversal(args) -> int:
    invertible = not args.singular
    classes = transversal(args.p, invertible)
    _emit(
        [
            {
                "representative": [list(r) for r in cls.representative.entries],
                "family": cls.family,
                "nu": cls.nu,
                "r": cls.r,
            }
            for cls in classes
        ],
        args,
    )
    return 0


def cmd_iso(args) -> int:
    if len(args.input) != 2:
        raise CliError("iso needs exactly two --input files")
    g = _load_datum(args.input[0])
    h = _load_datum(args.input[1])
    result = oracle.brute_iso(g, h)
    _emit({"isomorphic": bool(result)}, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pgatlas",
        description="finite p-group central extensions: construct, classify, verify",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, with_type=False, with_case=False, with_nm=False):
        sp.add_argument("--p", type=int, default=None)
        if with_type:
            sp.add_argument("--type", type=str, required=True)
            sp.add_argument("--n", type=int, default=None)
            sp.add_argument("--m", type=int, default=None)
            sp.add_argument("--s", type=int, default=None)
            sp.add_argument("--t", type=int, default=None)
            sp.add_argument("--nu", type=int, default=None)
            sp.add_argument("--nu1", type=int, default=None)
            sp.add_argument("--nu2", type=int, default=None)
            sp.add_argument("--r", type=int, default=None)
            sp.add_argument("--variant", type=int, default=None)
        if with_case:
            sp.add_argument("--case", choices=sorted(CASE_FLAGS), required=True)
        if with_nm:
            sp.add_argument("--n", type=int, required=True)
            sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--json", action="store_true", help="JSON output (default)")
        sp.add_argument("--presentation", action="store_true")

    sp = sub.add_parser("construct", help="construct a family member")
    common(sp, with_type=True)
    sp.set_defaults(fn=cmd_construct, need_p=True)

    sp = sub.add_parser("classify", help="classify a group datum")
    sp.add_argument("--input", type=str, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_classify, need_p=False)

    sp = sub.add_parser("invariants", help="structure record of a datum")
    sp.add_argument("--input", type=str, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_invariants, need_p=False)

    sp = sub.add_parser("enumerate", help="admissible data of one space")
    common(sp, with_case=True, with_nm=True)
    sp.set_defaults(fn=cmd_enumerate, need_p=True)

    sp = sub.add_parser("verify", help="re-derive one classification space")
    common(sp, with_case=True, with_nm=True)
    sp.add_argument("--report", type=str, default=None)
    sp.set_defaults(fn=cmd_verify, need_p=True)

    sp = sub.add_parser("transversal", help="congruence transversal")
    sp.add_argument("--p", type=int, required=True)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--invertible", action="store_true")
    group.add_argument("--singular", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_transversal, need_p=True)

    sp = sub.add_parser("iso", help="brute-force isomorphism test")
    sp.add_argument("--input", type=str, action="append", required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_iso, need_p=False)

    return ap


def run(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        if getattr(args, "need_p", False) and args.p is None:
            raise CliError("--p is required")
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
