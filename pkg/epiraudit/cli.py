"""Command-line interface for epiraudit."""

import argparse
import logging
import re
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import pandas as pd

from . import __version__
from .analysis import SUITES
from .auditor import ProtocolAuditor
from .config import InternalConfig
from .exceptions import AuditError, ParseError
from .utils import get_parallel_info

OUTPUT_FORMATS = ["csv", "json", "text"]


@dataclass
class RunConfig:
    """Everything one invocation needs, gathered from the parsed arguments."""

    command: str
    p: int = 2
    n_values: List[int] = field(default_factory=list)
    modulus: Optional[str] = None
    F: str = "g"
    x: Optional[int] = None
    s: Optional[List[int]] = None
    r: Optional[int] = None
    R: Optional[List[str]] = None
    N: int = 1
    i: int = 1
    r_prime: Optional[int] = None
    restricted: bool = True
    strict: bool = False
    seed: int = InternalConfig.default_seed
    output_format: str = "text"
    output_file: Optional[str] = None
    workers: Optional[int] = None


def print_version(verbose: bool = False):
    """Print version information."""
    print(f"epiraudit v{__version__}")
    print("Correctness audit of the extended private information retrieval protocol")
    print("over GF(p^n): counterexample, exact failure tables and bound checks.")
    if verbose:
        for key, value in get_parallel_info().items():
            print(f"  {key}: {value}")


def parse_n_range(text: str) -> List[int]:
    """``2..9``, ``2-9`` or ``5``."""
    match = re.fullmatch(r"\s*(\d+)\s*(?:(?:\.\.|-)\s*(\d+)\s*)?", text)
    if not match:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}; use 2..9, 2-9 or 5")
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) else low
    if low < 2 or high < low:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}; need 2 <= low <= high")
    return list(range(low, high + 1))


def report_parse_error(error: ParseError):
    print(f"❌ Parse error: {error}", file=sys.stderr)
    if error.text:
        print(f"   {error.text}", file=sys.stderr)
        print(f"   {' ' * error.position}^", file=sys.stderr)


def write_output(content: str, output_file: Optional[str]) -> int:
    if output_file:
        try:
            with open(output_file, "w", encoding="utf-8") as f:
                f.write(content)
            print(f"✅ Output written to: {output_file}", file=sys.stderr)
        except OSError as e:
            print(f"❌ Failed to write output file: {e}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(content)
    return 0


def render_transcript(transcript, fmt: str) -> str:
    if fmt == "json":
        return transcript.extract_json()
    if fmt == "csv":
        data = transcript.extract_data()
        decoded = data["decode"]["decoded"] or {}
        # one-row summary; the full record needs json or text
        row = {
            "protocol": data["protocol"],
            "x": data["keys"]["x"],
            "r": data["query"]["r"],
            "decoded": decoded.get("element", ""),
            "expected": data["decode"]["expected"]["element"],
            "success": data["success"],
            "claim_precondition": data["claim_precondition"],
        }
        return pd.DataFrame([row]).to_csv(index=False, lineterminator="\n")
    return transcript.extract_text()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epiraudit",
        description="Audit the correctness of the extended PIR protocol over GF(p^n)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Reproduce the failing execution over GF(2^3)
  epiraudit demo-counterexample

  # Exact failure probabilities for n = 2..9 with F = g
  epiraudit -o csv failure-table 2..9 --F g

  # h(n) and omega(n) for the default n list, with a brute-force column
  epiraudit bounds-table --crosscheck

  # Lemma and bound checks (exit code names the first failing check)
  epiraudit verify cosets
  epiraudit verify all

  # One execution, unset parameters drawn from the seed
  epiraudit run --restricted --n 3 --x 6 --F g --s 6 --r 1 --R "g^2+g"
  epiraudit --seed 7 run --full --n 4 --N 3 --i 2
        """,
    )
    parser.add_argument("--output", "-o", choices=OUTPUT_FORMATS, default="text", help="Output format (default: text)")
    parser.add_argument("--output-file", "-f", help="Output file path (if not specified, prints to stdout)")
    parser.add_argument("--workers", type=int, help=f"Worker processes (default: ${InternalConfig.workers_env_var} or CPU count)")
    parser.add_argument("--seed", type=int, default=InternalConfig.default_seed, help="Seed for drawn parameters")
    parser.add_argument("--progress", action="store_true", help="Show progress bars during enumeration")
    parser.add_argument("--version", action="store_true", help="Show version information and exit")
    parser.add_argument("--verbose", "-v", action="store_true", help="Enable verbose output")

    subparsers = parser.add_subparsers(dest="command")

    demo = subparsers.add_parser("demo-counterexample", help="Replay the failing execution over GF(2^3)")
    demo.add_argument("--block", help="Use another database block, e.g. g or g^2")

    table = subparsers.add_parser("failure-table", help="Exact failure probability per n")
    table.add_argument("range", type=parse_n_range, help="Degrees: 2..9, 2-9 or 5")
    table.add_argument("--F", default="g", help="Polynomial to evaluate (default: g)")
    table.add_argument("--p", type=int, default=2, help="Characteristic (default: 2)")
    table.add_argument("--modulus", help="Primitive modulus overriding the built-in one")

    bounds = subparsers.add_parser("bounds-table", help="h(n) and omega(n)")
    bounds.add_argument("--n", type=int, nargs="+", help="Degrees (default: the standard list of 18)")
    bounds.add_argument("--p", type=int, default=2, help="Characteristic (default: 2)")
    bounds.add_argument("--crosscheck", action="store_true", help="Add a brute-force omega column where tractable")

    verify = subparsers.add_parser("verify", help="Run a verification suite")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--n-max", type=int, help="Largest field degree for the bounds suite")

    run = subparsers.add_parser("run", help="Execute the protocol once")
    mode = run.add_mutually_exclusive_group()
    mode.add_argument("--restricted", action="store_true", help="Single block, deterministic database (default)")
    mode.add_argument("--full", action="store_true", help="N blocks with re-randomisation")
    run.add_argument("--p", type=int, default=2)
    run.add_argument("--n", type=int, required=True)
    run.add_argument("--modulus")
    run.add_argument("--x", type=int, help="Secret key")
    run.add_argument("--F", default="g")
    run.add_argument("--s", type=int, nargs="+", help="Encryption exponents (one or N)")
    run.add_argument("--r", type=int, help="Blinding residue")
    run.add_argument("--R", nargs="+", help="Database blocks (one or N)")
    run.add_argument("--N", type=int, default=1)
    run.add_argument("--i", type=int, default=1)
    run.add_argument("--rprime", type=int, help="Exponent of the database's Enc(1)")
    run.add_argument("--strict", action="store_true", help="Reject blocks outside the valid set")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(
        command=args.command,
        seed=args.seed,
        output_format=args.output,
        output_file=args.output_file,
        workers=args.workers,
    )
    if args.command == "failure-table":
        config.n_values, config.F, config.p, config.modulus = args.range, args.F, args.p, args.modulus
    elif args.command == "bounds-table":
        config.n_values = list(args.n) if args.n else list(InternalConfig.bounds_table_n)
        config.p = args.p
    elif args.command == "run":
        config.p, config.n_values, config.modulus, config.F = args.p, [args.n], args.modulus, args.F
        config.x, config.s, config.r, config.R = args.x, args.s, args.r, args.R
        config.N, config.i, config.r_prime = args.N, args.i, args.rprime
        config.restricted = not args.full
        config.strict = args.strict
    return config


def cmd_demo_counterexample(auditor: ProtocolAuditor, config: RunConfig, block: Optional[str]) -> int:
    transcript = auditor.demo_counterexample(block)
    status = write_output(render_transcript(transcript, config.output_format), config.output_file)
    if block is None:
        deviations = auditor.golden_deviations(transcript)
        for deviation in deviations:
            print(f"❌ Deviation from the reference execution: {deviation}", file=sys.stderr)
        if deviations:
            return 1
        print("✅ Failure reproduced: decoded g^2+g, F(R) = g", file=sys.stderr)
        if transcript.refutes_claim:
            print("✅ The correctness claim's precondition held, so this execution refutes it", file=sys.stderr)
        return status
    if not auditor.consistent_with_indicator(transcript):
        print("❌ Transcript disagrees with the success indicator", file=sys.stderr)
        return 1
    verdict = "succeeded" if transcript.success else "failed"
    print(f"✅ Execution at block {block} {verdict}, consistent with the success indicator", file=sys.stderr)
    return status


def cmd_failure_table(auditor: ProtocolAuditor, config: RunConfig) -> int:
    table = auditor.failure_table(config.n_values, config.F, config.modulus)
    return write_output(table.export(config.output_format), config.output_file)


def cmd_bounds_table(auditor: ProtocolAuditor, config: RunConfig, crosscheck: bool) -> int:
    table = auditor.bounds_table(config.n_values, crosscheck=crosscheck)
    return write_output(table.export(config.output_format), config.output_file)


def cmd_verify(auditor: ProtocolAuditor, config: RunConfig, suite: str, n_max: Optional[int]) -> int:
    report = auditor.verify(suite, n_max=n_max)
    status = write_output(report.export(config.output_format), config.output_file)
    if report.passed:
        print(f"✅ {report.summary()}", file=sys.stderr)
        return status
    first = report.first_failure
    print(f"❌ {report.summary()}; first failing check: {first.check} ({first.subject})", file=sys.stderr)
    return report.exit_code


def cmd_run(auditor: ProtocolAuditor, config: RunConfig) -> int:
    transcript = auditor.run(
        n=config.n_values[0],
        restricted=config.restricted,
        F_text=config.F,
        x=config.x,
        s=config.s,
        r=config.r,
        R=config.R,
        N=config.N,
        i=config.i,
        r_prime=config.r_prime,
        modulus=config.modulus,
    )
    status = write_output(render_transcript(transcript, config.output_format), config.output_file)
    marker = "✅" if transcript.success else "❌"
    print(f"{marker} Execution {'succeeded' if transcript.success else 'failed'}", file=sys.stderr)
    return status


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI function."""
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    if args.version:
        print_version(args.verbose)
        return 0
    if not args.command:
        parser.error("No command specified.")

    config = config_from_args(args)
    auditor = ProtocolAuditor(
        p=config.p,
        seed=config.seed,
        workers=config.workers,
        strict=config.strict,
        show_progress=args.progress,
    )

    try:
        if config.command == "demo-counterexample":
            return cmd_demo_counterexample(auditor, config, args.block)
        if config.command == "failure-table":
            return cmd_failure_table(auditor, config)
        if config.command == "bounds-table":
            return cmd_bounds_table(auditor, config, args.crosscheck)
        if config.command == "verify":
            return cmd_verify(auditor, config, args.suite, args.n_max)
        return cmd_run(auditor, config)
    except ParseError as e:
        report_parse_error(e)
        return 1
    except AuditError as e:
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"❌ Invalid arguments: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
