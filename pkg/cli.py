"""Command-line front end: `burge <command> [input]`.

Inputs are JSON read from a file (positional, or `--graph`, `--tableau`,
`--array` by command), or from stdin when the path is `-` or omitted.
Results go to stdout, diagnostics to stderr. Exit status is 2 for malformed
input, 1 for a failed verification and 0 otherwise.
"""
import argparse
import json
import logging
import sys
from typing import Any, List, Optional, Union

from burge import decode, encode, standardize_burge_array, tableau_graph
from crystal import ARRAYS, TABLEAUX, crystal_for_shape
from graph import BurgeArray, SimpleGraph, to_burge_array
from partition import Partition, is_hook, is_threshold
from pvfree import pv_report
from storage import StorageHandler
from tableau import Tableau
from verify import MUTATIONS, SUITES, VerifyConfig, run_all

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2


def input_path(args) -> Optional[str]:
    """The named input option wins over the positional path."""
    return args.input_file or args.input


def read_json(path: Optional[str]) -> Any:
    if path in (None, '-'):
        text = sys.stdin.read()
    else:
        with open(path, 'r') as f:
            text = f.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"malformed JSON input: {str(e)}") from e


def load_array(data: Any) -> BurgeArray:
    """Accept either a graph {"n", "edges"} or a Burge array {"top", "bottom"}."""
    if isinstance(data, dict) and "edges" in data:
        return to_burge_array(SimpleGraph.from_json(data))
    return BurgeArray.from_json(data)


def parse_shape(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition(())
    try:
        values = [int(p) for p in text.split(',')]
    except ValueError as e:
        raise ValueError(f"shape must be comma-separated integers, got {text!r}") from e
    return Partition(tuple(values))


def emit(payload: Union[str, Any]) -> None:
    if isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        sys.stdout.write(json.dumps(payload) + "\n")


def cmd_encode(args) -> int:
    emit(encode(load_array(read_json(input_path(args)))).to_json())
    return EXIT_OK


def cmd_decode(args) -> int:
    tableau = Tableau.from_json(read_json(input_path(args)))
    emit(tableau_graph(tableau, args.n).to_json() if args.n is not None else decode(tableau).to_json())
    return EXIT_OK


def cmd_shape(args) -> int:
    shape = encode(load_array(read_json(input_path(args)))).shape
    emit({"shape": shape.to_json(), "threshold": is_threshold(shape), "hook": is_hook(shape)})
    return EXIT_OK


def cmd_pvcheck(args) -> int:
    emit(pv_report(load_array(read_json(input_path(args)))))
    return EXIT_OK


def cmd_standardize(args) -> int:
    array = load_array(read_json(input_path(args)))
    if args.alphabet:
        alphabet = [int(c) for c in args.alphabet.split(',')]
    else:
        alphabet = list(range(1, 2 * len(array) + 1))
    emit(standardize_burge_array(array, alphabet).to_json())
    return EXIT_OK


def cmd_crystal(args) -> int:
    family = ARRAYS if args.objects == 'arrays' else TABLEAUX
    crystal = crystal_for_shape(parse_shape(args.shape), args.max_letter, family)
    emit(crystal.to_dot() if args.format == 'dot' else crystal.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    config = VerifyConfig(max_n=args.max_n, workers=args.workers, mutation=args.mutation, fast=args.fast)
    names = None if args.suite == 'all' else [args.suite]
    report = run_all(config, names)
    if args.json:
        emit(report.to_json())
    else:
        lines = []
        for suite in report.suites:
            lines.append(f"{'PASS' if suite.ok else 'FAIL'} {suite.name} ({suite.checked} checks)")
            lines.extend(f"    {message}" for message in suite.failures)
        failing = sum(not s.ok for s in report.suites)
        lines.append("all suites passed" if report.ok else f"{failing} suite(s) failed")
        emit("\n".join(lines) + "\n")
    if args.timings:
        for suite in report.suites:
            sys.stderr.write(f"{suite.name}: {suite.seconds:.3f}s\n")
    if args.save:
        filename = StorageHandler(args.save).save_report(report.to_json(timings=True), config.max_n)
        logger.info(f"Report saved as {filename}")
    return EXIT_OK if report.ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="burge", description="Burge correspondence, PV-free arrays and crystals")
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    def with_input(name: str, help_text: str, option: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("input", nargs="?", default="-", help="JSON file, or - for stdin")
        sub.add_argument(f"--{option}", dest="input_file", metavar="FILE", default=None,
                         help="JSON file; same as the positional path")
        return sub

    with_input("encode", "graph or Burge array -> threshold tableau", "graph").set_defaults(func=cmd_encode)
    decode_parser = with_input("decode", "threshold tableau -> Burge array (or graph with --n)", "tableau")
    decode_parser.add_argument("--n", type=int, default=None, help="vertex count; emit a graph")
    decode_parser.set_defaults(func=cmd_decode)
    with_input("shape", "shape of a graph or Burge array", "graph").set_defaults(func=cmd_shape)
    with_input("pvcheck", "peak/valley report for a graph or Burge array", "array").set_defaults(func=cmd_pvcheck)
    standardize_parser = with_input("standardize", "standardize a Burge array", "array")
    standardize_parser.add_argument("--alphabet", default="", help="comma-separated increasing letters (default 1..2r)")
    standardize_parser.set_defaults(func=cmd_standardize)

    crystal_parser = commands.add_parser("crystal", help="generate a crystal for a shape")
    crystal_parser.add_argument("--objects", choices=["arrays", "tableaux"], default="arrays")
    crystal_parser.add_argument("--shape", required=True, help="comma-separated parts, e.g. 2,1,1")
    crystal_parser.add_argument("--max-letter", type=int, required=True)
    crystal_parser.add_argument("--format", choices=["dot", "json"], default="json")
    crystal_parser.set_defaults(func=cmd_crystal)

    verify_parser = commands.add_parser("verify", help="run verification suites")
    verify_parser.add_argument("suite", nargs="?", default="all", choices=["all"] + list(SUITES))
    verify_parser.add_argument("--max-n", type=int, default=5)
    verify_parser.add_argument("--json", action="store_true", help="emit the report as JSON")
    verify_parser.add_argument("--timings", action="store_true", help="per-suite timings on stderr")
    verify_parser.add_argument("--workers", type=int, default=1)
    verify_parser.add_argument("--mutation", choices=list(MUTATIONS), default=None)
    verify_parser.add_argument("--fast", action="store_true", help="skip per-step validation in encoding")
    verify_parser.add_argument("--save", metavar="DIR", default=None, help="also store the report in DIR")
    verify_parser.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (ValueError, TypeError, KeyError, OSError) as e:
        logger.error(f"Invalid input: {str(e)}")
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
