#!/usr/bin/env python3
"""
Command line front end for the equivariant motivic zeta engine

    equimot zeta a1 --group 2 --char 1 --json
    equimot zeta curve --genus 0 --group 1 --expand 4
    equimot verify p1 --q 5 --r 2 --nmax 8
    equimot realize --q 5 --r 2 --g 1 --element sym3.json

Results go to stdout, logging and diagnostics to stderr. Exit codes are
listed in config.EXIT_CODES.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional, Sequence

import pandas as pd

from abelian_groups import AbelianGroup, character_at, group_to_json, make_group
from config import EXIT_CODES, LOGGING_CONFIG, OUTPUT_CONFIG
from errors import EnumerationTooLargeError, EquimotError, InvalidArgumentError
from ff_realize import GeneratorTable, make_scenario, p1_table, realize
from groth_ring import element_from_json
from motivic_zeta import CurveSpec, zeta_affine_line, zeta_affine_space, zeta_curve
from power_series import RationalWitness, ps_expand, render_series, series_to_json, witness_to_json
from verification_suites import SUITES, summarize

logger = logging.getLogger(__name__)


def setup_logging(verbose: bool = False) -> None:
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if LOGGING_CONFIG["log_file"]:
        handlers.append(logging.FileHandler(LOGGING_CONFIG["log_file"]))
    logging.basicConfig(
        level=logging.INFO if verbose else getattr(logging, LOGGING_CONFIG["level"]),
        format=LOGGING_CONFIG["format"],
        handlers=handlers,
        force=True,
    )


def parse_int_list(text: str, what: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InvalidArgumentError(f"{what} must be comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='Emit canonical JSON instead of text')
    common.add_argument('--verbose', action='store_true', help='Log progress to stderr')
    common.add_argument('--group', type=str, help='Cyclic factors d1,d2,... of G')

    parser = argparse.ArgumentParser(prog='equimot', description='Equivariant motivic zeta functions')
    commands = parser.add_subparsers(dest='command', required=True)

    zeta = commands.add_parser('zeta', parents=[common], help='Compute a rational zeta witness')
    zeta.add_argument('kind', choices=['a1', 'ak', 'curve'])
    zeta.add_argument('--char', type=str, help='Character index (comma-separated for ak)')
    zeta.add_argument('--chi', action='append', help='Character residues a1,a2,...; repeatable')
    zeta.add_argument('--genus', type=int, default=0, help='Curve genus')
    zeta.add_argument('--expand', type=int, help='Also expand the series to order N')

    verify = commands.add_parser('verify', parents=[common], help='Run a verification suite')
    verify.add_argument('suite', choices=sorted(SUITES))
    verify.add_argument('--order', type=int, help='Truncation order (cross)')
    verify.add_argument('--q', type=int, help='Prime field size (a1, p1)')
    verify.add_argument('--r', type=int, help='Order of the cyclic group (a1, p1)')
    verify.add_argument('--nmax', type=int, help='Largest symmetric power checked')
    verify.add_argument('--fallback', action='store_true',
                        help='Count by scalars when enumeration exceeds the bound (p1)')
    verify.add_argument('--p', type=int, help='Curve prime (weil)')
    verify.add_argument('--a', type=int, help='Curve coefficient a (weil)')
    verify.add_argument('--b', type=int, help='Curve coefficient b (weil)')

    realize_cmd = commands.add_parser('realize', parents=[common], help='Realize an element as an integer')
    realize_cmd.add_argument('--element', type=str, help='Element JSON file (default: stdin)')
    realize_cmd.add_argument('--table', type=str, help='GeneratorTable JSON file')
    realize_cmd.add_argument('--q', type=int, help='Prime field size of the P^1 scenario')
    realize_cmd.add_argument('--r', type=int, help='Order of the cyclic group of the P^1 scenario')
    realize_cmd.add_argument('--g', type=str, help='Group element residues e1,e2,...')
    return parser


def _group(args, default: Sequence[int] = (1,)) -> AbelianGroup:
    if args.group is None:
        return make_group(default)
    return make_group(parse_int_list(args.group, "--group"))


def _selected_characters(args, group: AbelianGroup) -> list:
    if args.char is not None and args.chi:
        raise InvalidArgumentError("use either --char or --chi, not both")
    if args.char is not None:
        return [character_at(group, index) for index in parse_int_list(args.char, "--char")]
    if args.chi:
        return [group.character(parse_int_list(text, "--chi")) for text in args.chi]
    return []


def _print_banner(title: str) -> None:
    print(title)
    print("=" * OUTPUT_CONFIG["banner_width"])


def _dump(payload) -> None:
    print(json.dumps(payload, indent=OUTPUT_CONFIG["json_indent"]))


def cmd_zeta(args) -> int:
    group = _group(args)
    if args.expand is not None and args.expand < 0:
        raise InvalidArgumentError(f"--expand must be nonnegative, got {args.expand}")

    if args.kind == 'curve':
        witness: RationalWitness = zeta_curve(CurveSpec(args.genus, group))
        title = f"🧮 Zeta function of a genus {args.genus} curve, G = {group}"
    else:
        chars = _selected_characters(args, group)
        if args.kind == 'a1':
            if len(chars) != 1:
                raise InvalidArgumentError("zeta a1 needs exactly one character")
            witness = zeta_affine_line(chars[0], group)
            title = f"🧮 Zeta function of A^1 with character {chars[0]}, G = {group}"
        else:
            if not chars:
                raise InvalidArgumentError("zeta ak needs at least one character")
            witness = zeta_affine_space(chars, group)
            title = f"🧮 Zeta function of A^{len(chars)}, characters {' '.join(map(str, chars))}, G = {group}"

    series = ps_expand(witness, args.expand) if args.expand is not None else None
    if args.json:
        payload = {"group": group_to_json(group), "witness": witness_to_json(witness)}
        if series is not None:
            payload["series"] = series_to_json(series)
        _dump(payload)
        return EXIT_CODES["ok"]

    _print_banner(title)
    print(f"numerator:   {witness.num}")
    print(f"denominator: {witness.den}")
    if len(witness.den_factors) > 1:
        print(f"factors:     {' * '.join(f'[{factor}]' for factor in witness.den_factors)}")
    if series is not None:
        print()
        print(f"📈 Expansion to order {series.order}")
        print(render_series(series))
    return EXIT_CODES["ok"]


def _run_suite(args) -> pd.DataFrame:
    if (args.q is None) != (args.r is None):
        raise InvalidArgumentError("--q and --r go together")
    scenarios = [(args.q, args.r)] if args.q is not None else None

    if args.suite == 'cross':
        groups = [_group(args).divisors] if args.group is not None else None
        return SUITES['cross'](groups=groups, order=args.order, space_groups=groups, curve_groups=groups)
    if args.suite == 'a1':
        return SUITES['a1'](scenarios=scenarios, nmax=args.nmax)
    if args.suite == 'p1':
        return SUITES['p1'](scenarios=scenarios, nmax=args.nmax, fallback=args.fallback)
    return SUITES['weil'](p=args.p, a=args.a, b=args.b, nmax=args.nmax)


def print_report(name: str, df: pd.DataFrame) -> None:
    summary = summarize(df)
    _print_banner(f"🔬 Verification suite: {name}")
    print(f"Checks: {summary['total']}")
    print(f"✅ Passed: {summary['passed']}")
    print(f"❌ Failed: {summary['failed']}")
    failures = df[~df["passed"]]
    if len(failures):
        print()
        print("Failed checks:")
        for _, row in failures.iterrows():
            print(f"  - {row['case']} n={row['n']}: expected {row['expected']}, got {row['actual']}")


def cmd_verify(args) -> int:
    df = _run_suite(args)
    summary = summarize(df)
    if summary["total"] == 0:
        raise InvalidArgumentError(f"suite {args.suite} ran no checks with these arguments")
    if args.json:
        _dump({
            "suite": args.suite,
            "summary": summary,
            "checks": json.loads(df.to_json(orient="records")),
        })
    else:
        print_report(args.suite, df)
    return EXIT_CODES["ok"] if summary["failed"] == 0 else EXIT_CODES["failed"]


def _read_json(path: Optional[str]):
    try:
        if path is None:
            return json.load(sys.stdin)
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InvalidArgumentError(f"cannot read JSON from {path or 'stdin'}: {e}")


def cmd_realize(args) -> int:
    if args.table is None and args.q is None:
        raise InvalidArgumentError("realize needs --table FILE or a scenario (--q, --r, --g)")
    if args.table is not None:
        group = _group(args, default=(args.r,) if args.r else (1,))
        table = GeneratorTable.from_json(_read_json(args.table), group)
    else:
        if args.r is None or args.g is None:
            raise InvalidArgumentError("a scenario needs --q, --r and --g")
        sc = make_scenario(args.q, args.r)
        group = sc.group
        g = group.element(parse_int_list(args.g, "--g"))
        table = p1_table(sc, g, CurveSpec(0, group))

    elem = element_from_json(_read_json(args.element), group)
    value = realize(elem, table)
    if args.json:
        _dump({"value": value})
    else:
        print(value)
    return EXIT_CODES["ok"]


COMMANDS = {
    'zeta': cmd_zeta,
    'verify': cmd_verify,
    'realize': cmd_realize,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one command and return its exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_CODES["ok"] if e.code == 0 else EXIT_CODES["usage"]

    setup_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except EnumerationTooLargeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CODES["resource"]
    except EquimotError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CODES["usage"]


if __name__ == "__main__":
    sys.exit(main())
