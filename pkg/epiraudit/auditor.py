"""Main auditor class behind every command."""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .analysis import (
    box_size,
    eta,
    in_class_P,
    indicator_H,
    omega_bruteforce,
    omega_h,
    run_suite,
)
from .analysis.lemmas import CHECKS
from .config import InternalConfig
from .exceptions import NonPrimitiveGenerator
from .gf import FieldCtx, builtin_modulus, field_new, format_elem, format_kpoly, parse_elem, parse_kpoly, parse_lpoly
from .protocol import FullProtocol, QuerySpec, RestrictedProtocol, draw_missing
from .result import TableResult, Transcript, VerificationReport
from .utils import format_decimal

logger = logging.getLogger(__name__)

# The reference failing execution over GF(2^3)
DEMO_N = 3
DEMO_X = 6
DEMO_F = "g"
DEMO_S = 6
DEMO_R = 1
DEMO_BLOCK = "g^2+g"
DEMO_GOLDEN = {
    "y": "g^2+1",
    "query": ("g^2+1", "g^2+g"),
    "response": ("g+1", "g^2"),
    "decoded": "g^2+g",
    "expected": "g",
}

FAILURE_COLUMNS = ["n", "modulus", "F", "eta_exact_num", "eta_exact_den", "eta_5dp"]
BOUND_COLUMNS = ["n", "h", "omega_exact_num", "omega_exact_den", "omega_5dp"]


def failure_columns(rows: Sequence[Dict[str, object]]) -> List[str]:
    """The failure-table schema, plus the half-even rendering when some row rounds differently."""
    columns = list(FAILURE_COLUMNS)
    if any(row["eta_5dp"] != row["eta_5dp_half_even"] for row in rows):
        columns.append("eta_5dp_half_even")
    return columns


class ProtocolAuditor:
    """Runs protocol executions, failure tables, bound tables and verification suites."""

    def __init__(
        self,
        p: int = 2,
        seed: int = InternalConfig.default_seed,
        workers: Optional[int] = None,
        strict: bool = InternalConfig.strict_blocks,
        table_cap: Optional[int] = None,
        show_progress: bool = InternalConfig.show_progress,
    ):
        """Initialize the auditor.

        Args:
            p: Field characteristic used by every command
            seed: Seed for parameters the caller leaves unset
            workers: Worker processes for enumeration (None: detect)
            strict: Whether the database rejects invalid blocks
            table_cap: Largest field order to build tables for (None: config default)
            show_progress: Show tqdm bars during enumeration
        """
        self.p = p
        self.seed = seed
        self.workers = workers
        self.strict = strict
        self.table_cap = table_cap
        self.show_progress = show_progress
        self._fields: Dict[Tuple[int, int, Tuple[int, ...]], FieldCtx] = {}

    def field(self, n: int, modulus: Optional[str] = None) -> FieldCtx:
        """GF(p^n) for the given or built-in modulus, cached.

        Raises:
            UnknownModulus: no modulus given and none is built in
            ReducibleModulus: the given modulus factors
            NonPrimitiveGenerator: the given modulus is irreducible but not primitive
        """
        poly = parse_kpoly(modulus, self.p) if modulus else builtin_modulus(self.p, n)
        key = (self.p, n, poly.coeffs)
        if key not in self._fields:
            ctx = field_new(self.p, n, poly, table_cap=self.table_cap)
            if not ctx.alpha_primitive:
                raise NonPrimitiveGenerator(f"modulus {format_kpoly(poly)} is irreducible but not primitive")
            logger.info(f"built GF({self.p}^{n}) with modulus {format_kpoly(poly)}")
            self._fields[key] = ctx
        return self._fields[key]

    # ------------------------------------------------------------------
    # counterexample

    def demo_counterexample(self, block: Optional[str] = None) -> Transcript:
        """The failing restricted execution over GF(2^3), optionally at another block."""
        ctx = field_new(2, DEMO_N, builtin_modulus(2, DEMO_N))
        R = parse_elem(ctx, block or DEMO_BLOCK)
        F = parse_lpoly(ctx, DEMO_F)
        return RestrictedProtocol(ctx, strict=self.strict).run(DEMO_X, F, DEMO_S, DEMO_R, R)

    @staticmethod
    def golden_deviations(transcript: Transcript) -> List[str]:
        """Steps of the default demo that differ from the reference execution."""
        ctx = transcript.ctx

        def show(a):
            return "undefined" if a is None else format_elem(ctx, a)

        observed = {
            "y": show(transcript.y),
            "query": (show(transcript.query[0].c1), show(transcript.query[0].c2)) if transcript.query else None,
            "response": (show(transcript.response.c1), show(transcript.response.c2)) if transcript.response else None,
            "decoded": show(transcript.decoded),
            "expected": show(transcript.expected),
        }
        deviations = [f"{step}: expected {DEMO_GOLDEN[step]}, got {observed[step]}" for step in DEMO_GOLDEN if observed[step] != DEMO_GOLDEN[step]]
        if transcript.success:
            deviations.append("execution succeeded but the reference one fails")
        return deviations

    @staticmethod
    def consistent_with_indicator(transcript: Transcript) -> bool:
        """Transcript success agrees with the analytic success indicator."""
        ctx = transcript.ctx
        analytic = indicator_H(ctx, transcript.x, transcript.F, transcript.exponents[0], transcript.r, transcript.blocks[0])
        return bool(analytic) == transcript.success

    # ------------------------------------------------------------------
    # tables

    def failure_table(self, n_values: Sequence[int], F_text: str = "g", modulus: Optional[str] = None) -> TableResult:
        """One row per n with the exact and rounded mean failure probability.

        Raises:
            UnknownModulus: n outside the built-in set and no modulus given
        """
        rows = []
        membership: Dict[int, bool] = {}
        for n in n_values:
            ctx = self.field(n, modulus)
            F = parse_lpoly(ctx, F_text)
            member = in_class_P(ctx, F)
            if not member:
                logger.info(f"F = {F_text} is outside the primitive-coefficient class; value is exploratory")
            stats = eta(ctx, F, workers=self.workers, show_progress=self.show_progress)
            row = stats.as_row()
            membership[n] = member
            rows.append(row)
            logger.info(f"n={n}: eta = {row['eta_5dp']}")
        columns = failure_columns(rows)
        rows = [{column: row[column] for column in columns} for row in rows]
        return TableResult(rows, columns, {"table": "failure", "p": self.p, "F": F_text, "in_class_P": membership})

    def bounds_table(self, n_values: Optional[Sequence[int]] = None, crosscheck: bool = False) -> TableResult:
        """Rows (n, h(n), omega(n)); with ``crosscheck`` a brute-force column where tractable."""
        n_values = list(InternalConfig.bounds_table_n if n_values is None else n_values)
        columns = list(BOUND_COLUMNS)
        if crosscheck:
            columns += ["omega_bruteforce_5dp", "agrees"]
        rows = []
        for n in n_values:
            record = omega_h(self.p, n)
            row = record.as_row()
            if crosscheck:
                brute = self._bruteforce_if_tractable(n)
                row["omega_bruteforce_5dp"] = None if brute is None else format_decimal(brute)
                row["agrees"] = None if brute is None else brute == record.omega
            rows.append(row)
        return TableResult(rows, columns, {"table": "bounds", "p": self.p})

    def _bruteforce_if_tractable(self, n: int):
        if box_size(self.p, n) <= InternalConfig.bruteforce_max_points:
            return omega_bruteforce(self.p, n, "box")
        if n <= 16:
            return omega_bruteforce(self.p, n, "vertices")
        logger.info(f"skipping brute force for n={n}: box and vertex sets too large")
        return None

    # ------------------------------------------------------------------
    # verification

    def verify(self, suite: str, n_max: Optional[int] = None) -> VerificationReport:
        """Run a verification suite; the report carries the exit code."""
        records = run_suite(suite, workers=self.workers, n_max=n_max)
        report = VerificationReport(suite, records, CHECKS)
        logger.info(report.summary())
        return report

    # ------------------------------------------------------------------
    # single executions

    def run(
        self,
        n: int,
        restricted: bool = True,
        F_text: str = "g",
        x: Optional[int] = None,
        s: Optional[Sequence[int]] = None,
        r: Optional[int] = None,
        R: Optional[Sequence[str]] = None,
        N: int = 1,
        i: int = 1,
        r_prime: Optional[int] = None,
        modulus: Optional[str] = None,
    ) -> Transcript:
        """One execution; parameters left unset are drawn from the seeded generator.

        Raises:
            ParseError: F or a block does not parse
            InvalidBlock: strict mode and a block is outside the valid set
        """
        ctx = self.field(n, modulus)
        if restricted and N != 1:
            raise ValueError("the restricted protocol has exactly one block")
        F = parse_lpoly(ctx, F_text)
        spec = QuerySpec(F, i, N)
        blocks = None if R is None else [parse_elem(ctx, text) for text in R]
        rng = np.random.default_rng(self.seed)
        x, randomness, db = draw_missing(ctx, rng, spec, x=x, r=r, exponents=s, r_prime=r_prime, blocks=blocks)
        if restricted:
            return RestrictedProtocol(ctx, strict=self.strict).run(x, F, randomness.exponents[0], randomness.r, db.blocks[0])
        return FullProtocol(ctx, strict=self.strict).run(x, spec, db, randomness)
