"""
epiraudit - correctness audit of the extended private information retrieval
protocol over finite fields GF(p^n).
"""

__version__ = "0.1.0"

from .auditor import ProtocolAuditor
from .config import InternalConfig
from .elgamal import Ciphertext, ElGamal, KeyPair, PublicKey
from .exceptions import AuditError
from .result import TableResult, Transcript, VerificationReport

__all__ = [
    "ProtocolAuditor",
    "InternalConfig",
    "Ciphertext",
    "ElGamal",
    "KeyPair",
    "PublicKey",
    "AuditError",
    "TableResult",
    "Transcript",
    "VerificationReport",
]
