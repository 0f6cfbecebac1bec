"""Base class for protocol runners."""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

from ..config import InternalConfig
from ..elgamal import Ciphertext, ElGamal, KeyPair
from ..exceptions import DegenerateCiphertext, TrivialCiphertext, ZeroPlaintext
from ..gf import FieldCtx, format_kpoly
from ..result import Transcript
from .messages import (
    DecodeFailure,
    Database,
    QuerySpec,
    Randomness,
    blinded_plaintext,
    check_blocks,
    claim_precondition,
    db_respond_full,
    user_decode,
    user_query,
)

logger = logging.getLogger(__name__)


class BaseProtocol(ABC):
    """Shared user and database steps of every protocol variant."""

    name = "base"

    def __init__(self, ctx: FieldCtx, strict: bool = InternalConfig.strict_blocks):
        """Initialize the runner.

        Args:
            ctx: Field the protocol runs over; alpha must be primitive
            strict: Whether the database rejects blocks outside the valid set
        """
        self.ctx = ctx
        self.strict = strict
        self.elgamal = ElGamal(ctx)

    @abstractmethod
    def run(self, *args, **kwargs) -> Transcript:
        """Execute once and return the transcript. Never raises on protocol-level failures."""
        pass

    def execute(self, x: int, spec: QuerySpec, db: Database, randomness: Randomness) -> Transcript:
        """Run the message flow shared by both variants.

        Raises:
            InvalidBlock: strict mode and a block outside the valid set
        """
        ctx = self.ctx
        if db.N != spec.N:
            raise ValueError(f"query is over {spec.N} blocks, database holds {db.N}")
        keys: KeyPair = self.elgamal.keygen(x)
        flags = check_blocks(ctx, x, db.blocks, self.strict)
        transcript = Transcript(
            protocol=self.name,
            ctx=ctx,
            x=x,
            y=keys.pk.y,
            F=spec.F,
            i=spec.i,
            N=spec.N,
            blocks=tuple(db.blocks),
            valid=tuple(flags),
            exponents=tuple(randomness.exponents),
            r=randomness.r,
            r_prime=self._reported_r_prime(randomness),
            plaintext=blinded_plaintext(ctx, spec.F, randomness.r),
            expected=ctx.eval_lpoly(spec.F, db.blocks[spec.i - 1]),
            claim_precondition=claim_precondition(ctx, x, db.blocks),
        )
        try:
            query: List[Ciphertext] = user_query(ctx, self.elgamal, keys, spec, randomness.r, randomness.exponents)
            transcript.query = tuple(query)
            response, evaluated = db_respond_full(ctx, self.elgamal, keys.pk, db, query, randomness.r_prime)
            transcript.evaluated = tuple(evaluated)
            transcript.response = response
            if not response.c1.is_zero():
                transcript.decrypted = self.elgamal.decrypt(keys.sk, response)
            decoded = user_decode(ctx, self.elgamal, keys.sk, response, randomness.r)
        except (ZeroPlaintext, TrivialCiphertext, DegenerateCiphertext) as e:
            transcript.failure_reason = f"{type(e).__name__}: {e}"
            logger.info(f"{self.name} execution aborted: {transcript.failure_reason}")
            return transcript

        if isinstance(decoded, DecodeFailure):
            transcript.failure_reason = f"undecodable response: {decoded.reason}"
        else:
            transcript.decoded = decoded
            transcript.success = decoded == transcript.expected
            if not transcript.success:
                transcript.failure_reason = "decoded value differs from F(R)"
        logger.debug(f"{self.name} execution x={x} success={transcript.success}")
        return transcript

    def _reported_r_prime(self, randomness: Randomness) -> Optional[int]:
        return randomness.r_prime

    def get_metadata(self) -> Dict[str, Any]:
        """Describe the runner configuration."""
        return {
            "protocol": self.name,
            "runner": self.__class__.__name__,
            "p": self.ctx.p,
            "n": self.ctx.n,
            "modulus": format_kpoly(self.ctx.modulus),
            "strict": self.strict,
        }
