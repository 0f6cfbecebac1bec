"""Protocol data types and the individual message steps.

The user holds a key pair (x, y = g^x) and a function F in L[t]; the
database holds blocks R_1..R_N. The user encrypts F(alpha) + r under the
target index and encryptions of 1 elsewhere. The database reads each
ciphertext component as a K-polynomial in alpha, substitutes its block and
multiplies everything together with a fresh encryption of 1. The user
decrypts and subtracts r.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ..elgamal import Ciphertext, ElGamal, KeyPair, PublicKey
from ..exceptions import DegenerateCiphertext, InvalidBlock, TrivialCiphertext, ZeroPlaintext
from ..gf import Elem, FieldCtx, LPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuerySpec:
    """A retrieve(F, i) request over N blocks."""

    F: LPoly
    i: int = 1
    N: int = 1

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"block count must be >= 1, got {self.N}")
        if not 1 <= self.i <= self.N:
            raise ValueError(f"target index must lie in [1, {self.N}], got {self.i}")


@dataclass(frozen=True)
class Database:
    blocks: Tuple[Elem, ...]

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("a database needs at least one block")

    @property
    def N(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class Randomness:
    """Random choices of one full execution.

    Attributes:
        r: blinding residue added to F(alpha)
        exponents: ElGamal exponents s_1..s_N of the query ciphertexts
        r_prime: exponent of the database's encryption of 1
    """

    r: int
    exponents: Tuple[int, ...]
    r_prime: int = 0


@dataclass(frozen=True)
class DecodeFailure:
    """Returned by ``user_decode`` when the response cannot be decrypted."""

    reason: str


def valid_block_codes(ctx: FieldCtx, x: int) -> np.ndarray:
    """Codes of {beta in G : Y(beta) = G(beta)^x, G(beta) != 0}, in generator-power order."""
    betas = ctx.antilog_table
    Y = ctx.repr_as_kpoly(ctx.pow(ctx.alpha, x))
    G = ctx.repr_as_kpoly(ctx.alpha)
    y_values = ctx.eval_kpoly_codes(Y, betas)
    g_values = ctx.eval_kpoly_codes(G, betas)
    mask = (y_values == ctx.power_codes(g_values, x % ctx.q)) & (g_values != 0)
    return betas[mask]


def valid_blocks(ctx: FieldCtx, x: int) -> List[Elem]:
    """Valid database blocks for the session key x, found by scanning the whole group."""
    return [ctx.from_code(code) for code in valid_block_codes(ctx, x)]


def is_valid_block(ctx: FieldCtx, x: int, R: Elem) -> bool:
    if R.is_zero():
        return False
    Y = ctx.repr_as_kpoly(ctx.pow(ctx.alpha, x))
    G = ctx.repr_as_kpoly(ctx.alpha)
    g_value = ctx.eval_kpoly(G, R)
    return not g_value.is_zero() and ctx.eval_kpoly(Y, R) == ctx.pow(g_value, x)


def claim_precondition(ctx: FieldCtx, x: int, blocks: Sequence[Elem]) -> bool:
    """True when no block has G(R_j) = 0 or Y(R_j) = 0."""
    Y = ctx.repr_as_kpoly(ctx.pow(ctx.alpha, x))
    G = ctx.repr_as_kpoly(ctx.alpha)
    return all(
        not ctx.eval_kpoly(G, R).is_zero() and not ctx.eval_kpoly(Y, R).is_zero() for R in blocks
    )


def blinded_plaintext(ctx: FieldCtx, F: LPoly, r: int) -> Elem:
    """F(alpha) + r."""
    return ctx.add(ctx.eval_lpoly(F, ctx.alpha), ctx.embed(r))


def user_query(
    ctx: FieldCtx,
    elgamal: ElGamal,
    keys: KeyPair,
    spec: QuerySpec,
    r: int,
    exponents: Sequence[int],
) -> List[Ciphertext]:
    """Encrypt F(alpha) + r at index i and 1 at every other index.

    Raises:
        ZeroPlaintext: F(alpha) + r = 0
    """
    if len(exponents) != spec.N:
        raise ValueError(f"need {spec.N} exponents, got {len(exponents)}")
    plaintext = blinded_plaintext(ctx, spec.F, r)
    if plaintext.is_zero():
        raise ZeroPlaintext(f"F(alpha) + r = 0 for r = {r}")
    return [
        elgamal.encrypt(keys.pk, plaintext, s) if j == spec.i else elgamal.encrypt_one(keys.pk, s)
        for j, s in enumerate(exponents, start=1)
    ]


def db_respond_restricted(ctx: FieldCtx, R: Elem, C: Ciphertext) -> Ciphertext:
    """C(R) = (V(R), W(R)) with V, W the K-polynomial forms of C's components.

    Raises:
        TrivialCiphertext: a component of C is 0
    """
    if not C.is_nontrivial():
        raise TrivialCiphertext("ciphertext has a zero component")
    V = ctx.repr_as_kpoly(C.c1)
    W = ctx.repr_as_kpoly(C.c2)
    return Ciphertext(ctx.eval_kpoly(V, R), ctx.eval_kpoly(W, R))


def db_respond_full(
    ctx: FieldCtx,
    elgamal: ElGamal,
    pk: PublicKey,
    db: Database,
    ciphertexts: Sequence[Ciphertext],
    r_prime: int,
) -> Tuple[Ciphertext, List[Ciphertext]]:
    """Enc(1; r') times the product of every C_j(R_j).

    Returns:
        The response and the per-block evaluations C_j(R_j)

    Raises:
        TrivialCiphertext: some C_j has a zero component
    """
    if len(ciphertexts) != db.N:
        raise ValueError(f"{len(ciphertexts)} ciphertexts for {db.N} blocks")
    evaluated = [db_respond_restricted(ctx, R, C) for R, C in zip(db.blocks, ciphertexts)]
    response = elgamal.encrypt_one(pk, r_prime)
    for c in evaluated:
        response = elgamal.multiply(response, c)
    return response, evaluated


def user_decode(
    ctx: FieldCtx, elgamal: ElGamal, sk: int, response: Ciphertext, r: int
) -> Union[Elem, DecodeFailure]:
    """Dec(sk, response) - r, or a DecodeFailure when the first component is 0."""
    try:
        decrypted = elgamal.decrypt(sk, response)
    except DegenerateCiphertext as e:
        logger.debug(f"decode failed: {e}")
        return DecodeFailure(str(e))
    return ctx.sub(decrypted, ctx.embed(r))


def check_blocks(ctx: FieldCtx, x: int, blocks: Sequence[Elem], strict: bool) -> List[bool]:
    """Validity flag per block; strict mode rejects the first invalid one.

    Raises:
        InvalidBlock: strict is set and a block lies outside the valid set
    """
    flags = [is_valid_block(ctx, x, R) for R in blocks]
    for j, ok in enumerate(flags, start=1):
        if not ok:
            if strict:
                raise InvalidBlock(f"block R_{j} is not valid for the session key")
            logger.debug(f"block R_{j} is outside the valid set; continuing")
    return flags


def draw_missing(
    ctx: FieldCtx,
    rng: np.random.Generator,
    spec: QuerySpec,
    x: Optional[int] = None,
    r: Optional[int] = None,
    exponents: Optional[Sequence[int]] = None,
    r_prime: Optional[int] = None,
    blocks: Optional[Sequence[Elem]] = None,
) -> Tuple[int, Randomness, Database]:
    """Complete a partially specified execution with seeded draws.

    Draw order is fixed (x, exponents, r, r', blocks) so the same seed and
    the same overrides always give the same execution. A drawn r with
    F(alpha) + r = 0 is re-drawn; an explicit one is kept and left to fail.
    Missing blocks are drawn uniformly from the valid set for x.
    """
    scheme = ElGamal(ctx)
    if x is None:
        x = scheme.random_exponent(rng)
    if exponents is None:
        exponents = [scheme.random_exponent(rng) for _ in range(spec.N)]
    elif len(exponents) == 1 and spec.N > 1:
        exponents = list(exponents) * spec.N
    if r is None:
        r = int(rng.integers(0, ctx.p))
        while blinded_plaintext(ctx, spec.F, r).is_zero():
            logger.warning(f"F(alpha) + r = 0 for drawn r = {r}; drawing again")
            r = int(rng.integers(0, ctx.p))
    if r_prime is None:
        r_prime = scheme.random_exponent(rng)
    if blocks is None:
        codes = valid_block_codes(ctx, x)
        blocks = [ctx.from_code(codes[int(rng.integers(0, len(codes)))]) for _ in range(spec.N)]
    elif len(blocks) == 1 and spec.N > 1:
        blocks = list(blocks) * spec.N
    randomness = Randomness(r=r, exponents=tuple(int(s) for s in exponents), r_prime=r_prime)
    return x, randomness, Database(tuple(blocks))
