"""Command line interface: ``braidkit <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 coset budget overflow.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .abelian import abelianization
from .catalog import FAMILIES, catalog_build, family_params
from .cosets import DEFAULT_MAX_COSETS, Completed, enumerate_cosets
from .garside import braid_nf
from .maps import bkl_to_canonical, canonical_to_reduced, reduced_to_canonical
from .presentation import PresentationSyntaxError, load, serialize
from .verify import (
    VerificationReport, run_acceptance_suite, verify_abelianization, verify_bkl, verify_oracle_agreement,
    verify_parabolic_index, verify_proof_steps, verify_quotient_orders, verify_roundtrip, verify_sb2,
    verify_soundness, verify_structural_coincidence,
)
from .words import Alphabet, BraidkitError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_OVERFLOW = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _family_args(p: argparse.ArgumentParser, required: bool = True):
    p.add_argument("--family", required=required, metavar="FAMILY")
    for key in ("n", "d", "e", "r"):
        p.add_argument(f"--{key}", type=int)
    p.add_argument("--torsion", action="store_true", help="add the finite-quotient relations")


def _params(args) -> dict:
    return {k: getattr(args, k) for k in ("n", "d", "e", "r") if getattr(args, k, None) is not None}


def _presentation(args):
    if getattr(args, "pres", None):
        return load(args.pres)
    if not args.family:
        raise UsageError("give --pres or --family")
    return catalog_build(args.family, _params(args), torsion=args.torsion)


def cmd_list_families(args) -> int:
    for f in FAMILIES:
        params = " ".join(f"{k}>={v}" for k, v in family_params(f).items())
        print(f"{f}\t{params}" if params else f)
    return EXIT_OK


def cmd_build(args) -> int:
    text = serialize(_presentation(args))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_translate(args) -> int:
    if args.family == "bkl":
        m = bkl_to_canonical(args.n)
    elif args.direction == "to-canonical":
        m = reduced_to_canonical(args.family, args.n)
    else:
        m = canonical_to_reduced(args.family, args.n)
    if args.word is None:
        print(m)
    else:
        print(m(m.source.word(args.word)))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite == "paper":
        only = [int(c) for c in args.criteria.split(",")] if args.criteria else None
        report = run_acceptance_suite(only)
    else:
        if not args.check:
            raise UsageError("give --check or --suite")
        report = _single_check(args)
    print(report.summary())
    if args.json:
        Path(args.json).write_text(report.to_json())
    if report.overall == "pass":
        return EXIT_OK
    return EXIT_OVERFLOW if report.only_overflow_failures else EXIT_FAIL


def _single_check(args) -> VerificationReport:
    params = _params(args)
    check, family = args.check, args.family
    if check in ("soundness", "quotient_order", "abelianization") and not family:
        raise UsageError(f"--check {check} needs --family")
    if check == "soundness":
        return verify_soundness(family, params)
    if check == "quotient_order":
        if args.torsion:
            params["torsion"] = True
        return verify_quotient_orders(family, params, max_cosets=args.max_cosets)
    if check == "abelianization":
        if args.torsion:
            params["torsion"] = True
        return verify_abelianization(family, params)
    if check == "parabolic_index":
        return verify_parabolic_index()
    if check == "roundtrip":
        return verify_roundtrip(family or "artin", args.n or 4)
    if check == "proof_steps":
        return verify_proof_steps(args.n or 4)
    if check == "bkl":
        return verify_bkl(args.n or 4)
    if check == "structural":
        return verify_structural_coincidence(args.r or 3)
    if check == "oracle_agreement":
        return verify_oracle_agreement(args.samples)
    if check == "sb2":
        return verify_sb2(args.samples)
    raise UsageError(f"unknown check {check}")


def _subgroup(p, text: str | None):
    if not text:
        return []
    return [p.word(w.strip()) for w in text.split(";") if w.strip()]


def cmd_enumerate(args) -> int:
    p = _presentation(args)
    res = enumerate_cosets(p, _subgroup(p, args.subgroup), args.max_cosets)
    if isinstance(res, Completed):
        print(f"index={res.index}")
        return EXIT_OK
    print("overflow")
    return EXIT_OVERFLOW


def cmd_abelianize(args) -> int:
    print(abelianization(_presentation(args)))
    return EXIT_OK


def cmd_nf(args) -> int:
    alpha = Alphabet(f"s{i}" for i in range(1, args.n))
    print(braid_nf(alpha.word(args.word), args.n))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list-families", help="list catalog families and their parameters")
    p.set_defaults(func=cmd_list_families)

    p = sub.add_parser("build", help="write a catalog presentation in the .pres format")
    _family_args(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("translate", help="print a generator map or translate a word")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--direction", choices=("to-canonical", "to-reduced"), default="to-canonical")
    p.add_argument("--word")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("verify", help="run verification checks")
    _family_args(p, required=False)
    p.add_argument("--check", choices=("soundness", "quotient_order", "parabolic_index", "roundtrip", "proof_steps",
                                       "bkl", "abelianization", "structural", "oracle_agreement", "sb2"))
    p.add_argument("--suite", choices=("paper",))
    p.add_argument("--criteria", help="comma separated criterion numbers (with --suite)")
    p.add_argument("--max-cosets", type=int)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="coset enumeration")
    p.add_argument("--pres")
    _family_args(p, required=False)
    p.add_argument("--subgroup", help='subgroup generators, e.g. "s1;s s1 s^-1"')
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("abelianize", help="invariant factors of the abelianization")
    p.add_argument("--pres")
    _family_args(p, required=False)
    p.set_defaults(func=cmd_abelianize)

    p = sub.add_parser("nf", help="Garside normal form of a braid word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_nf)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except PresentationSyntaxError as exc:
        print(f"braidkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, BraidkitError, ValueError, KeyError, OSError) as exc:
        print(f"braidkit: {exc}", file=sys.stderr)
        return EXIT_USAGE


run_cli = main
