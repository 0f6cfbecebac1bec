"""Exact failure probabilities of the restricted protocol.

For key x, exponent s, blinding r and block R the execution succeeds
exactly when V(R) != 0 and E(R) = 0, where V and W are the K-polynomial
forms of g^s and y^s (F(alpha) + r) and E(t) = W(t) - V(t)^x (F(t) + r).
epsilon(x) is the failing fraction over all (s, r, R) and eta the mean of
epsilon over all keys.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool
from typing import Dict, Iterable, Optional, Tuple

import numpy as np
from tqdm import tqdm

from ..config import InternalConfig
from ..exceptions import IntractableSize
from ..gf import Elem, FieldCtx, LPoly, format_kpoly, format_lpoly
from ..protocol import blinded_plaintext, run_restricted, valid_block_codes, valid_blocks
from ..utils import both_renderings, get_worker_count

logger = logging.getLogger(__name__)

ENGINES = ("vectorized", "scalar")


def indicator_H(ctx: FieldCtx, x: int, F: LPoly, s: int, r: int, R: Elem) -> int:
    """1 if V(R) != 0 and E(R) = 0, else 0."""
    plaintext = blinded_plaintext(ctx, F, r)
    y = ctx.pow(ctx.alpha, x)
    V = ctx.repr_as_kpoly(ctx.pow(ctx.alpha, s))
    W = ctx.repr_as_kpoly(ctx.mul(ctx.pow(y, s), plaintext))
    v_value = ctx.eval_kpoly(V, R)
    if v_value.is_zero():
        return 0
    shifted = ctx.add(ctx.eval_lpoly(F, R), ctx.embed(r))
    e_value = ctx.sub(ctx.eval_kpoly(W, R), ctx.mul(ctx.pow(v_value, x), shifted))
    return 1 if e_value.is_zero() else 0


def evaluation_table(ctx: FieldCtx, codes: np.ndarray) -> np.ndarray:
    """P[k, j] = (K-polynomial form of g^k) evaluated at the block with code ``codes[j]``.

    Row k serves both V for exponent s = k and W whenever y^s (F(alpha)+r) = g^k.
    """
    codes = np.asarray(codes, dtype=np.int64)
    powers = ctx.power_codes(codes[:, None], np.arange(ctx.n, dtype=np.int64)[None, :])
    basis = ctx.digits(powers)  # block, power j, digit
    coefficients = ctx.digits(ctx.antilog_table)  # k, power j
    evaluated = np.tensordot(coefficients, basis, axes=([1], [1])) % ctx.p
    return ctx.codes_from_digits(evaluated)


def _successes_vectorized(ctx: FieldCtx, x: int, F: LPoly, codes: np.ndarray) -> int:
    q = ctx.q
    table = evaluation_table(ctx, codes)
    v_nonzero = table != 0
    v_to_x = ctx.power_codes(table, x)
    f_values = ctx.eval_lpoly_codes(F, codes)
    exponents = np.arange(q, dtype=np.int64)
    successes = 0
    for r in range(ctx.p):
        shifted = ctx.add_codes(f_values, np.full(f_values.shape, r, dtype=np.int64))
        target = ctx.mul_codes(v_to_x, shifted[None, :])
        plaintext_code = ctx.code(blinded_plaintext(ctx, F, r))
        if plaintext_code == 0:
            w_values = np.zeros_like(table)
        else:
            w_rows = (x * exponents + int(ctx.log_table[plaintext_code])) % q
            w_values = table[w_rows]
        successes += int(np.count_nonzero(v_nonzero & (w_values == target)))
    return successes


def _successes_scalar(ctx: FieldCtx, x: int, F: LPoly, blocks: Iterable[Elem]) -> int:
    blocks = list(blocks)
    return sum(
        indicator_H(ctx, x, F, s, r, R) for s in range(ctx.q) for r in range(ctx.p) for R in blocks
    )


def epsilon(ctx: FieldCtx, x: int, F: LPoly, engine: str = "vectorized") -> Fraction:
    """Failure probability for key x, exact.

    Args:
        ctx: Field with primitive alpha
        x: Secret key in Z_q
        F: The user's polynomial
        engine: ``"vectorized"`` (numpy kernel) or ``"scalar"`` (indicator loop)
    """
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")
    codes = valid_block_codes(ctx, x)
    total = ctx.p * ctx.q * len(codes)
    if engine == "vectorized":
        successes = _successes_vectorized(ctx, x, F, codes)
    else:
        successes = _successes_scalar(ctx, x, F, (ctx.from_code(c) for c in codes))
    return Fraction(total - successes, total)


def transcript_failure_fraction(ctx: FieldCtx, x: int, F: LPoly) -> Fraction:
    """Failing fraction of actually executed restricted transcripts over all (s, r, R).

    Tuples with F(alpha) + r = 0 abort with ZeroPlaintext and count as failures,
    so this agrees with ``epsilon`` whenever F(alpha) lies outside GF(p).
    """
    blocks = valid_blocks(ctx, x)
    failures = 0
    for s in range(ctx.q):
        for r in range(ctx.p):
            for R in blocks:
                if not run_restricted(ctx, x, F, s, r, R).success:
                    failures += 1
    return Fraction(failures, ctx.p * ctx.q * len(blocks))


@dataclass
class FailureStats:
    """Per-key failure probabilities and their mean for one field and F."""

    p: int
    n: int
    modulus: str
    F: str
    epsilons: Dict[int, Fraction] = field(repr=False)
    eta: Fraction

    @property
    def eta_5dp(self) -> str:
        return both_renderings(self.eta)[0]

    @property
    def eta_5dp_half_even(self) -> str:
        return both_renderings(self.eta)[1]

    def as_row(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "modulus": self.modulus,
            "F": self.F,
            "eta_exact_num": self.eta.numerator,
            "eta_exact_den": self.eta.denominator,
            "eta_5dp": self.eta_5dp,
            "eta_5dp_half_even": self.eta_5dp_half_even,
        }


def _epsilon_task(args: Tuple[FieldCtx, int, LPoly, str]) -> Tuple[int, Fraction]:
    ctx, x, F, engine = args
    return x, epsilon(ctx, x, F, engine)


def eta(
    ctx: FieldCtx,
    F: LPoly,
    workers: Optional[int] = None,
    engine: str = "vectorized",
    show_progress: bool = InternalConfig.show_progress,
) -> FailureStats:
    """Mean failure probability over all keys x in Z_q, exact.

    Per-key values are computed in a process pool when more than one worker
    is available and merged by key, so the result never depends on the
    worker count.

    Raises:
        IntractableSize: p > 2 and p^n above the configured enumeration limit
    """
    if ctx.p > 2 and ctx.size > InternalConfig.max_eta_order_odd_p:
        raise IntractableSize(
            f"eta over GF({ctx.p}^{ctx.n}) exceeds the enumeration limit {InternalConfig.max_eta_order_odd_p}"
        )
    workers = min(get_worker_count(workers), ctx.q)
    tasks = [(ctx, x, F, engine) for x in range(ctx.q)]
    desc = f"eta GF({ctx.p}^{ctx.n})"
    logger.info(f"enumerating eta over GF({ctx.p}^{ctx.n}) with {workers} worker(s)")
    epsilons: Dict[int, Fraction] = {}
    if workers > 1:
        with Pool(workers) as pool:
            for x, value in tqdm(pool.imap_unordered(_epsilon_task, tasks), total=len(tasks), desc=desc, disable=not show_progress):
                epsilons[x] = value
    else:
        for task in tqdm(tasks, desc=desc, disable=not show_progress):
            x, value = _epsilon_task(task)
            epsilons[x] = value
    epsilons = dict(sorted(epsilons.items()))
    mean = sum(epsilons.values(), Fraction(0)) / ctx.q
    logger.info(f"eta(GF({ctx.p}^{ctx.n}), F={format_lpoly(ctx, F)}) = {mean} ~ {both_renderings(mean)[0]}")
    return FailureStats(
        p=ctx.p,
        n=ctx.n,
        modulus=format_kpoly(ctx.modulus),
        F=format_lpoly(ctx, F),
        epsilons=epsilons,
        eta=mean,
    )
