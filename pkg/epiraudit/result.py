"""Result classes: protocol transcripts, tables and verification reports."""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from .config import InternalConfig
from .elgamal import Ciphertext
from .gf import Elem, FieldCtx, LPoly, format_annotated, format_kpoly, format_lpoly

logger = logging.getLogger(__name__)


def _elem_data(ctx: FieldCtx, a: Optional[Elem]) -> Optional[Dict[str, Any]]:
    if a is None:
        return None
    return {"element": format_annotated(ctx, a), "coeffs": list(a.coeffs)}


def _show(ctx: FieldCtx, a: Optional[Elem]) -> str:
    if a is None:
        return "undefined"
    return f"{format_annotated(ctx, a)} {list(a.coeffs)}"


def _show_pair(ctx: FieldCtx, c: Optional[Ciphertext]) -> str:
    if c is None:
        return "undefined"
    return f"({format_annotated(ctx, c.c1)}, {format_annotated(ctx, c.c2)})"


@dataclass
class Transcript:
    """One execution of the restricted (N = 1) or full protocol.

    ``success`` is true exactly when a value was decoded and it equals
    ``expected`` = F(R_i). ``claim_precondition`` records whether no block
    had G(R_j) = 0 or Y(R_j) = 0; a failed transcript with the precondition
    holding refutes the protocol's correctness claim.
    """

    protocol: str
    ctx: FieldCtx = field(repr=False, compare=False)
    x: int
    y: Elem
    F: LPoly
    i: int
    N: int
    blocks: Tuple[Elem, ...]
    valid: Tuple[bool, ...]
    exponents: Tuple[int, ...]
    r: int
    r_prime: Optional[int]
    plaintext: Elem
    expected: Elem
    claim_precondition: bool
    query: Tuple[Ciphertext, ...] = ()
    evaluated: Tuple[Ciphertext, ...] = ()
    response: Optional[Ciphertext] = None
    decrypted: Optional[Elem] = None
    decoded: Optional[Elem] = None
    success: bool = False
    failure_reason: Optional[str] = None

    @property
    def refutes_claim(self) -> bool:
        return self.claim_precondition and not self.success

    def extract_data(self) -> Dict[str, Any]:
        """Structured form of the transcript, every element in both notations."""
        ctx = self.ctx
        return {
            "protocol": self.protocol,
            "field": {"p": ctx.p, "n": ctx.n, "modulus": format_kpoly(ctx.modulus)},
            "keys": {"x": self.x, "y": _elem_data(ctx, self.y)},
            "query": {
                "F": format_lpoly(ctx, self.F),
                "i": self.i,
                "N": self.N,
                "r": self.r,
                "exponents": list(self.exponents),
                "plaintext": _elem_data(ctx, self.plaintext),
                "ciphertexts": [
                    {"c1": _elem_data(ctx, c.c1), "c2": _elem_data(ctx, c.c2)} for c in self.query
                ],
            },
            "database": {
                "blocks": [_elem_data(ctx, b) for b in self.blocks],
                "valid": list(self.valid),
                "evaluated": [
                    {"c1": _elem_data(ctx, c.c1), "c2": _elem_data(ctx, c.c2)} for c in self.evaluated
                ],
                "r_prime": self.r_prime,
                "response": None
                if self.response is None
                else {"c1": _elem_data(ctx, self.response.c1), "c2": _elem_data(ctx, self.response.c2)},
            },
            "decode": {
                "decrypted": _elem_data(ctx, self.decrypted),
                "decoded": _elem_data(ctx, self.decoded),
                "expected": _elem_data(ctx, self.expected),
            },
            "success": self.success,
            "failure_reason": self.failure_reason,
            "claim_precondition": self.claim_precondition,
        }

    def extract_json(self, indent: int = 2) -> str:
        return json.dumps(self.extract_data(), indent=indent) + "\n"

    def extract_text(self) -> str:
        """Five-step listing of the execution."""
        ctx = self.ctx
        title = "Restricted" if self.protocol == "restricted" else "Full"
        lines = [
            f"{title} EPIR execution over GF({ctx.p}^{ctx.n}) = GF({ctx.p})[t]/({format_kpoly(ctx.modulus)})",
            f"i.   User: sk = x = {self.x}, y = g^x = {_show(ctx, self.y)}",
            f"ii.  User: F(t) = {format_lpoly(ctx, self.F)}, i = {self.i}, N = {self.N}, r = {self.r}, "
            f"s = {', '.join(str(s) for s in self.exponents)}",
            f"     plaintext F(alpha)+r = {_show(ctx, self.plaintext)}",
        ]
        for j, c in enumerate(self.query, start=1):
            lines.append(f"     C_{j} = {_show_pair(ctx, c)}")
        for j, block in enumerate(self.blocks, start=1):
            marker = "" if self.valid[j - 1] else "  (not a valid block)"
            lines.append(f"iii. DB: R_{j} = {_show(ctx, block)}{marker}")
        for j, c in enumerate(self.evaluated, start=1):
            lines.append(f"     C_{j}(R_{j}) = (V(R_{j}), W(R_{j})) = {_show_pair(ctx, c)}")
        if self.r_prime is not None:
            lines.append(f"iv.  DB: r' = {self.r_prime}, sends Enc(1) x prod C_j(R_j) = {_show_pair(ctx, self.response)}")
        else:
            lines.append(f"iv.  DB: sends C(R) = {_show_pair(ctx, self.response)}")
        lines.append(f"v.   User: Dec(sk, C(R)) = {_show(ctx, self.decrypted)}")
        lines.append(f"     output Dec(sk, C(R)) - r = {_show(ctx, self.decoded)}")
        lines.append(f"     F(R_{self.i}) = {_show(ctx, self.expected)}")
        if self.success:
            lines.append("verdict: SUCCESS")
        else:
            reason = self.failure_reason or "decoded value differs from F(R)"
            lines.append(f"verdict: FAILURE ({reason})")
        lines.append(f"claim precondition held: {'yes' if self.claim_precondition else 'no'}")
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return self.extract_text()


class TableResult:
    """Rows of a report table with CSV, JSON and text exports."""

    def __init__(self, rows: Sequence[Dict[str, Any]], columns: Sequence[str], metadata: Optional[Dict[str, Any]] = None):
        self.rows = [dict(row) for row in rows]
        self.columns = list(columns)
        self.metadata = metadata or {}

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=self.columns)

    def extract_data(self) -> Dict[str, Any]:
        return {"metadata": self.metadata, "columns": self.columns, "rows": self.rows}

    def extract_json(self, indent: int = 2) -> str:
        return json.dumps(self.extract_data(), indent=indent, default=str) + "\n"

    def extract_csv(self) -> str:
        return self.to_dataframe().to_csv(index=False, lineterminator="\n")

    def extract_text(self) -> str:
        if not self.rows:
            return "(no rows)\n"
        return self.to_dataframe().to_string(index=False) + "\n"

    def export(self, fmt: str) -> str:
        """Render in one of ``csv``, ``json`` or ``text``."""
        exporters = {"csv": self.extract_csv, "json": self.extract_json, "text": self.extract_text}
        if fmt not in exporters:
            raise ValueError(f"unsupported output format: {fmt}")
        return exporters[fmt]()

    def __len__(self) -> int:
        return len(self.rows)

    def __str__(self) -> str:
        return self.extract_text()

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(rows={len(self.rows)}, columns={self.columns})"


class VerificationReport(TableResult):
    """Lemma-check records plus the exit status they imply.

    Records are objects with ``check``, ``holds`` and ``as_row()``; the exit
    code is 0 when all hold, otherwise the configured base plus the index of
    the first failing check name in ``check_order``.
    """

    COLUMNS = ["check", "subject", "lhs", "rhs", "holds"]

    def __init__(self, suite: str, records: Sequence[Any], check_order: Sequence[str]):
        super().__init__([record.as_row() for record in records], self.COLUMNS, {"suite": suite})
        self.suite = suite
        self.records = list(records)
        self.check_order = list(check_order)

    @property
    def failures(self) -> List[Any]:
        return [record for record in self.records if not record.holds]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> Optional[Any]:
        failures = self.failures
        if not failures:
            return None
        return min(failures, key=lambda record: self.check_order.index(record.check))

    @property
    def exit_code(self) -> int:
        first = self.first_failure
        if first is None:
            return 0
        return InternalConfig.verify_exit_base + self.check_order.index(first.check)

    def summary(self) -> str:
        checks = sorted({record.check for record in self.records}, key=self.check_order.index)
        return f"{self.suite}: {len(self.records)} records over {len(checks)} checks, {len(self.failures)} failed"
