"""The restricted protocol: one block and a deterministic database."""

import logging

from ..config import InternalConfig
from ..gf import Elem, FieldCtx, LPoly
from ..result import Transcript
from .base import BaseProtocol
from .messages import Database, QuerySpec, Randomness

logger = logging.getLogger(__name__)


class RestrictedProtocol(BaseProtocol):
    """N = 1 and no re-randomisation: the database answers C(R) as is."""

    name = "restricted"

    def run(self, x: int, F: LPoly, s: int, r: int, R: Elem) -> Transcript:
        # Enc(1) with exponent 0 is (1, 1), so the shared flow adds nothing
        return self.execute(x, QuerySpec(F, 1, 1), Database((R,)), Randomness(r, (s,), 0))

    def _reported_r_prime(self, randomness: Randomness):
        return None


def run_restricted(
    ctx: FieldCtx, x: int, F: LPoly, s: int, r: int, R: Elem, strict: bool = InternalConfig.strict_blocks
) -> Transcript:
    """Execute the restricted protocol once.

    Args:
        ctx: Field with primitive alpha
        x: Secret key in Z_q
        F: The user's polynomial
        s: Encryption exponent in Z_q
        r: Blinding residue mod p
        R: The database block

    Returns:
        Transcript whose ``success`` is decoded == F(R)
    """
    return RestrictedProtocol(ctx, strict=strict).run(x, F, s, r, R)
