# Copyright SDSLIB CONTRIBUTORS 2024

"""
Command line interface.

Exit codes: 0 success or EXISTS, 1 NOT_EXISTS or failed verification,
2 UNKNOWN or a search guard, 3 input error.
"""

import argparse
import logging
import sys
from typing import List, Optional

import pydantic

import sdslib.config as cfg
from sdslib.catalog.feasible import feasible_params
from sdslib.catalog.registry import WitnessRecord, registry
from sdslib.catalog.witness_io import read_witnesses, write_witnesses
from sdslib.compress import Content, compress_family, sds_compressed_constants
from sdslib.config_logs import init_logging
from sdslib.enumeration import enumerate_classes
from sdslib.enums import EquivMode, ExistenceStatus, ParamStatus, WitnessSource
from sdslib.exception import InputError, SdsException
from sdslib.params import SdsParams
from sdslib.search.decide import decide_two_block
from sdslib.sequence import associated_sequence, is_complementary
from sdslib.symmetry import count_classes

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_EXISTS = 1
EXIT_UNKNOWN = 2
EXIT_INPUT = 3

_STATUS_EXIT = {
    ExistenceStatus.EXISTS: EXIT_OK,
    ExistenceStatus.NOT_EXISTS: EXIT_NOT_EXISTS,
    ExistenceStatus.UNKNOWN: EXIT_UNKNOWN,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _cmd_params(args) -> int:
    status = ParamStatus[args.status.upper()] if args.status else None
    records = feasible_params(args.vmax, status=status)
    if args.count:
        print(len(records))
        return EXIT_OK
    for rec in records:
        line = f"{rec.get_name()}\tn={rec.params.n}\t{rec.status.name}"
        if rec.provenance:
            line += f"\t{rec.provenance}"
        print(line)
    return EXIT_OK


def _print_verification(records: List[WitnessRecord]) -> int:
    failed = 0
    for rec in records:
        print(f"{rec.get_name()}\t{'OK' if rec.verified else 'FAIL'}")
        failed += not rec.verified
    return EXIT_OK if failed == 0 else EXIT_NOT_EXISTS


def _cmd_verify(args) -> int:
    return _print_verification(read_witnesses(args.file))


def _cmd_compress(args) -> int:
    records = read_witnesses(args.file)
    mismatches = 0
    for rec in records:
        if rec.params.v % args.m != 0:
            raise InputError(f"m={args.m} does not divide v={rec.params.v} for {rec.get_name()}")
        d = rec.params.v // args.m
        compressed = compress_family([associated_sequence(b) for b in rec.blocks], d)
        constants = is_complementary(compressed)
        expected = sds_compressed_constants(rec.params, args.m)
        print(f"{rec.get_name()}\tm={args.m}\td={d}\tconstants={constants}\texpected={expected}")
        for seq in compressed:
            print(f"  {seq}")
        mismatches += constants != expected
    return EXIT_OK if mismatches == 0 else EXIT_NOT_EXISTS


def _cmd_enumerate(args) -> int:
    content = Content.from_str(args.content, args.m)
    if content.length != args.length:
        raise InputError(f"Content {content} has length {content.length}, expected {args.length}")
    mode = EquivMode.from_str(args.mode)
    if args.count_only:
        print(count_classes(content, mode))
        return EXIT_OK
    count = 0
    for seq in enumerate_classes(content, mode):
        print(seq)
        count += 1
    logger.info("%d %s classes for content %s", count, mode.name.lower(), content)
    return EXIT_OK


def _cmd_search(args) -> int:
    params = SdsParams.from_str(args.params)
    seeds = None
    if args.seeds:
        seeds = [list(rec.blocks) for rec in read_witnesses(args.seeds)]
    result = decide_two_block(
        params,
        args.strategy,
        seeds=seeds,
        tol=args.tol,
        jobs=args.jobs,
        max_classes=args.max_classes,
    )
    print(result.report)
    print(f"status: {result.status.name}, witnesses: {len(result.witnesses)}")
    if args.out and result.witnesses:
        write_witnesses(
            args.out,
            (
                WitnessRecord.checked(f"{params.get_name()}#{i}", params, blocks, WitnessSource.SEARCH)
                for i, blocks in enumerate(result.witnesses, start=1)
            ),
        )
    if args.report:
        result.report.save_json(args.report)
    return _STATUS_EXIT[result.status]


def _cmd_registry(args) -> int:
    records = registry()
    if args.verify:
        return _print_verification(
            [WitnessRecord.checked(r.label, r.params, list(r.blocks), r.source) for r in records]
        )
    for rec in records:
        print(rec.get_name())
        for block in rec.blocks:
            print(f"  {block}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """
    Argument parser with one subcommand per operation.
    """
    parser = _Parser(prog="sdslib", description="Supplementary difference sets: verify, compress, enumerate, search")
    parser.add_argument("--config", help="TOML configuration file")
    parser.add_argument("--verbose", action="store_true", help="debug logging to the console")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="list feasible parameter sets")
    p.add_argument("--vmax", type=int, required=True)
    p.add_argument("--status", choices=[s.name.lower() for s in ParamStatus])
    p.add_argument("--count", action="store_true", help="print only the number of records")
    p.set_defaults(func=_cmd_params)

    p = sub.add_parser("verify", help="verify witnesses in a JSON-lines file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("compress", help="compress witnesses and check their constants")
    p.add_argument("file")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_compress)

    p = sub.add_parser("enumerate", help="enumerate necklaces, bracelets or charmed bracelets")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--content", required=True, help="value:count pairs, e.g. --content=-2:3,0:6,2:14")
    p.add_argument("--mode", choices=["necklace", "bracelet", "charmed"], default="necklace")
    p.add_argument("--m", type=int, help="alphabet parameter, inferred from the content by default")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("search", help="decide existence of a two-block SDS")
    p.add_argument("--params", required=True, help='e.g. "46;21,6;10"')
    p.add_argument("--strategy", default="compress2", help="direct, compress2 or compress3")
    p.add_argument("--jobs", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--max-classes", type=int)
    p.add_argument("--seeds", help="JSON-lines witness file; search only their compressions")
    p.add_argument("--out", help="write found witnesses to this JSON-lines file")
    p.add_argument("--report", help="write the search report as JSON")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("registry", help="list the published witnesses")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_cmd_registry)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line interface and return the exit code.
    """
    try:
        args = build_parser().parse_args(argv)
        if args.config:
            cfg.load(args.config)
        if args.verbose:
            cfg.set_value("logging.level", "DEBUG")
            cfg.set_value("logging.console", "yes")
        if args.config or args.verbose:
            init_logging(cfg.as_dict())
        return args.func(args)
    except (SdsException, pydantic.ValidationError, OSError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
