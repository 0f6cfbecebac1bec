"""ElGamal encryption over the multiplicative group of GF(p^n)."""

import logging
from dataclasses import dataclass

import numpy as np

from .exceptions import DegenerateCiphertext, NonPrimitiveGenerator, ZeroPlaintext
from .gf import Elem, FieldCtx

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PublicKey:
    q: int
    g: Elem
    y: Elem


@dataclass(frozen=True)
class KeyPair:
    pk: PublicKey
    sk: int

    @property
    def x(self) -> int:
        return self.sk


@dataclass(frozen=True)
class Ciphertext:
    c1: Elem
    c2: Elem

    def is_nontrivial(self) -> bool:
        """Both components nonzero, i.e. the pair lies in G x G."""
        return not self.c1.is_zero() and not self.c2.is_zero()


class ElGamal:
    """ElGamal over G = L^x with g = alpha.

    All randomness is passed in explicitly (exponents) or drawn from a
    caller-supplied ``numpy.random.Generator``; nothing here touches ambient
    entropy, so transcripts are reproducible.
    """

    def __init__(self, ctx: FieldCtx):
        if not ctx.alpha_primitive:
            raise NonPrimitiveGenerator(
                f"alpha is not primitive for modulus {ctx.modulus.coeffs}; ElGamal needs g = alpha"
            )
        self.ctx = ctx
        self.g = ctx.alpha

    def random_exponent(self, rng: np.random.Generator) -> int:
        return int(rng.integers(0, self.ctx.q))

    def keygen(self, x: int) -> KeyPair:
        """Key pair with secret x in Z_q and y = g^x."""
        if not 0 <= x < self.ctx.q:
            raise ValueError(f"secret key must lie in Z_{self.ctx.q}, got {x}")
        y = self.ctx.pow(self.g, x)
        return KeyPair(PublicKey(self.ctx.q, self.g, y), x)

    def encrypt(self, pk: PublicKey, m: Elem, s: int) -> Ciphertext:
        """(g^s, y^s m)."""
        if m.is_zero():
            raise ZeroPlaintext("0 is not in the group L^x")
        if not 0 <= s < self.ctx.q:
            raise ValueError(f"encryption exponent must lie in Z_{self.ctx.q}, got {s}")
        ctx = self.ctx
        return Ciphertext(ctx.pow(pk.g, s), ctx.mul(ctx.pow(pk.y, s), m))

    def encrypt_one(self, pk: PublicKey, s: int) -> Ciphertext:
        return self.encrypt(pk, self.ctx.one, s)

    def decrypt(self, sk: int, c: Ciphertext) -> Elem:
        """c2 * c1^(-x)."""
        if c.c1.is_zero():
            raise DegenerateCiphertext("first ciphertext component is 0")
        ctx = self.ctx
        return ctx.mul(c.c2, ctx.pow(c.c1, -sk))

    def multiply(self, c: Ciphertext, other: Ciphertext) -> Ciphertext:
        """Componentwise product; decrypts to the product of the plaintexts."""
        ctx = self.ctx
        return Ciphertext(ctx.mul(c.c1, other.c1), ctx.mul(c.c2, other.c2))
