"""The full N-block protocol with database re-randomisation."""

import logging

from ..config import InternalConfig
from ..gf import FieldCtx
from ..result import Transcript
from .base import BaseProtocol
from .messages import Database, QuerySpec, Randomness

logger = logging.getLogger(__name__)


class FullProtocol(BaseProtocol):
    name = "full"

    def run(self, x: int, spec: QuerySpec, db: Database, randomness: Randomness) -> Transcript:
        if len(randomness.exponents) != spec.N:
            raise ValueError(f"need {spec.N} exponents, got {len(randomness.exponents)}")
        return self.execute(x, spec, db, randomness)


def run_full(
    ctx: FieldCtx,
    x: int,
    spec: QuerySpec,
    db: Database,
    randomness: Randomness,
    strict: bool = InternalConfig.strict_blocks,
) -> Transcript:
    """Execute the full protocol once; ``expected`` is F(R_i)."""
    return FullProtocol(ctx, strict=strict).run(x, spec, db, randomness)
