"""Protocol runners and message steps."""

from .base import BaseProtocol
from .full import FullProtocol, run_full
from .messages import (
    Database,
    DecodeFailure,
    QuerySpec,
    Randomness,
    blinded_plaintext,
    check_blocks,
    claim_precondition,
    db_respond_full,
    db_respond_restricted,
    draw_missing,
    is_valid_block,
    user_decode,
    user_query,
    valid_block_codes,
    valid_blocks,
)
from .restricted import RestrictedProtocol, run_restricted

__all__ = [
    "BaseProtocol",
    "FullProtocol",
    "RestrictedProtocol",
    "run_full",
    "run_restricted",
    "Database",
    "DecodeFailure",
    "QuerySpec",
    "Randomness",
    "blinded_plaintext",
    "check_blocks",
    "claim_precondition",
    "db_respond_full",
    "db_respond_restricted",
    "draw_missing",
    "is_valid_block",
    "user_decode",
    "user_query",
    "valid_block_codes",
    "valid_blocks",
]
