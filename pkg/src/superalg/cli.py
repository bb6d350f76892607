"""Command-line interface.

Subcommands: family (emit an SDF file), check (identity residuals), series,
charseq, derivations, annihilator, invariants, catalog, errata, verify.
Exit codes: 0 success / all claims pass, 1 verification failure, 2 input
error.  SDF (a JSON document) is the single interchange format; every
subcommand that analyses an algebra consumes one.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import families
from .core import (EVEN, ODD, char_sequence, check_leibniz, check_lie,
                   derived_series, fingerprint, lower_central_series,
                   right_annihilator, sdf_dumps, sdf_loads)
from .derivations import derivation_space
from .errors import (DegenerateSamplingError, InputError, NotNilpotentError,
                     SuperalgError)
from .exactmath import format_rational
from .verify import render_text, run_claims


def _default_seed() -> int:
    raw = os.environ.get("SUPERALG_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"SUPERALG_SEED must be an integer, got {raw!r}") from None


def _load_algebra(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return sdf_loads(text)


def _parse_params(pairs: list[str]) -> dict[str, object]:
    params: dict[str, object] = {}
    for pair in pairs:
        if "=" not in pair:
            raise InputError(f"--param expects name=value, got {pair!r}")
        name, _, raw = pair.partition("=")
        name = name.strip()
        raw = raw.strip()
        if name == "t":
            try:
                params[name] = int(raw)
            except ValueError:
                raise InputError(f"t must be an integer, got {raw!r}") from None
        else:
            try:
                params[name] = Fraction(raw)
            except (ValueError, ZeroDivisionError):
                raise InputError(f"bad rational value {raw!r} for {name}") from None
    return params


def _cmd_family(args) -> int:
    info = families.family_info(args.family_id)
    size = args.n if info.size_name == "n" else args.m
    wrong = args.m if info.size_name == "n" else args.n
    if size is None:
        raise InputError(f"{args.family_id} is sized by --{info.size_name}")
    if wrong is not None:
        raise InputError(f"{args.family_id} is sized by --{info.size_name}, "
                         f"not --{'m' if info.size_name == 'n' else 'n'}")
    params = _parse_params(args.param)
    if args.zeros:
        for name in families.parameter_names(args.family_id, size):
            params.setdefault(name, Fraction(0))
    algebra = families.build(args.family_id, size, params, args.errata)
    text = sdf_dumps(algebra)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    return 0


def _cmd_check(args) -> int:
    algebra = _load_algebra(args.file)
    residuals = check_leibniz(algebra) if args.identity == "leibniz" \
        else check_lie(algebra)
    if not residuals:
        print(f"{args.identity}: ok ({algebra.name}, "
              f"dims {algebra.n_even}|{algebra.n_odd})")
        return 0
    print(f"{args.identity}: {len(residuals)} residual(s) in {algebra.name}")
    for r in residuals:
        print(f"  {r}")
    return 1


def _cmd_series(args) -> int:
    algebra = _load_algebra(args.file)
    series = (lower_central_series(algebra) if args.type == "lower-central"
              else derived_series(algebra))
    for idx, term in enumerate(series, start=1):
        de, do = term.dims()
        print(f"term {idx}: dims {de}|{do}")
    last = series[-1]
    print("stabilizes at zero" if last.is_zero()
          else f"stabilizes at dims {last.dims()[0]}|{last.dims()[1]}")
    return 0


def _cmd_charseq(args) -> int:
    algebra = _load_algebra(args.file)
    even, odd = char_sequence(algebra, samples=args.samples, seed=args.seed,
                              bound=args.bound)
    print(f"characteristic sequence (sampled max, seed={args.seed}, "
          f"samples={args.samples}): "
          f"({', '.join(map(str, even))} | {', '.join(map(str, odd))})")
    return 0


def _cmd_derivations(args) -> int:
    algebra = _load_algebra(args.file)
    degree = EVEN if args.degree == "even" else ODD
    space = derivation_space(algebra, degree)
    payload = {
        "degree": args.degree,
        "dim": space.dim,
        "basis": [[[format_rational(m.entries[i][j]) for j in range(m.cols)]
                   for i in range(m.rows)] for m in space.basis],
    }
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_annihilator(args) -> int:
    algebra = _load_algebra(args.file)
    ann = right_annihilator(algebra)
    de, do = ann.dims()
    print(f"right annihilator dims {de}|{do}")
    for parity, part, labels in (("even", ann.even, algebra.even_basis),
                                 ("odd", ann.odd, algebra.odd_basis)):
        for row in part.entries:
            terms = [f"{format_rational(c)}*{lab}"
                     for c, lab in zip(row, labels) if c]
            print(f"  {parity}: " + " + ".join(terms))
    return 0


def _cmd_invariants(args) -> int:
    algebra = _load_algebra(args.file)
    print(json.dumps(fingerprint(algebra, seed=args.seed).as_dict(), indent=2))
    return 0


def _cmd_catalog(args) -> int:
    print(json.dumps(families.list_families(), indent=2))
    return 0


def _cmd_errata(args) -> int:
    sizes = range(args.sizes[0], args.sizes[1] + 1)
    entries = families.errata_ledger(list(sizes))
    if args.family:
        entries = [e for e in entries if e.family_id == args.family]
    print(json.dumps([e.as_dict() for e in entries], indent=2))
    return 0


def _cmd_verify(args) -> int:
    selected = None
    if args.claims and args.claims != "all":
        prefixes = [c.strip() for c in args.claims.split(",") if c.strip()]
        from .verify import claim_ids
        selected = [cid for cid in claim_ids()
                    if any(cid == p or cid.startswith(p) for p in prefixes)]
        if not selected:
            raise InputError(f"no claims match {args.claims!r}")
    report = run_claims(selected, args.n_range, args.seed)
    rendered = (json.dumps(report.as_dict(), indent=2) if args.json
                else render_text(report))
    if args.report:
        with open(args.report, "w", encoding="utf-8") as handle:
            handle.write(rendered + "\n")
        summary = report.summary()
        print(f"report written to {args.report}: {summary['pass']} pass, "
              f"{summary['fail']} fail")
    else:
        print(rendered)
    return 0 if report.all_ok else 1


def _range_pair(text: str) -> tuple[int, int]:
    try:
        lo, _, hi = text.partition("..")
        pair = (int(lo), int(hi))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if pair[0] > pair[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return pair


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superalg",
        description="Exact construction and verification of the built-in "
                    "catalog of graded algebra families.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="build a catalog family and emit SDF")
    p.add_argument("family_id", choices=list(families.FAMILY_IDS))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--param", action="append", default=[],
                   metavar="NAME=VALUE")
    p.add_argument("--zeros", action="store_true",
                   help="set every unspecified parameter to 0")
    p.add_argument("--errata", choices=[families.VERBATIM, families.CORRECTED],
                   default=families.CORRECTED)
    p.add_argument("-o", "--output", default="-", metavar="FILE")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("check", help="evaluate an identity on an SDF algebra")
    p.add_argument("file")
    p.add_argument("--identity", choices=["leibniz", "lie"], default="leibniz")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("series", help="lower central or derived series dims")
    p.add_argument("file")
    p.add_argument("--type", choices=["lower-central", "derived"],
                   default="lower-central")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("charseq", help="sampled characteristic sequence")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--bound", type=int, default=5)
    p.set_defaults(func=_cmd_charseq)

    p = sub.add_parser("derivations", help="superderivation space basis")
    p.add_argument("file")
    p.add_argument("--degree", choices=["even", "odd"], default="even")
    p.set_defaults(func=_cmd_derivations)

    p = sub.add_parser("annihilator", help="right annihilator basis")
    p.add_argument("file")
    p.set_defaults(func=_cmd_annihilator)

    p = sub.add_parser("invariants", help="fingerprint of an SDF algebra")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("catalog", help="the family catalog as JSON")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("errata", help="the errata ledger as JSON")
    p.add_argument("--family", default=None)
    p.add_argument("--sizes", type=_range_pair, default=(3, 8), metavar="A..B")
    p.set_defaults(func=_cmd_errata)

    p = sub.add_parser("verify", help="run the claim verification pipeline")
    p.add_argument("--claims", default="all",
                   help="comma-separated claim ids or prefixes (default: all)")
    p.add_argument("--n-range", type=_range_pair, default=None, metavar="A..B")
    p.add_argument("--report", default=None, metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "seed") and args.seed is None:
            args.seed = _default_seed()
        return args.func(args)
    except (InputError, NotNilpotentError, DegenerateSamplingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SuperalgError as exc:
        print(f"verification error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
