"""Polynomials over K = GF(p), backed by galois, and the integer helpers built on it."""

import logging
from functools import lru_cache
from typing import List

import galois

from .types import KPoly

logger = logging.getLogger(__name__)


def is_prime(value: int) -> bool:
    return value >= 2 and bool(galois.is_prime(value))


def prime_factors(value: int) -> List[int]:
    """Distinct prime factors of value, ascending."""
    if value < 2:
        return []
    primes, _ = galois.factors(value)
    return sorted(int(prime) for prime in primes)


def divisors(value: int) -> List[int]:
    """Positive divisors of value, ascending."""
    return sorted(int(d) for d in galois.divisors(value))


def mobius(value: int) -> int:
    if value == 1:
        return 1
    primes, multiplicities = galois.factors(value)
    if any(m > 1 for m in multiplicities):
        return 0
    return -1 if len(primes) % 2 else 1


@lru_cache(maxsize=None)
def prime_field(p: int):
    """The galois field class GF(p)."""
    return galois.GF(p)


def to_galois(poly: KPoly) -> galois.Poly:
    return galois.Poly(list(reversed(poly.coeffs)) or [0], field=prime_field(poly.p))


def from_galois(poly: galois.Poly) -> KPoly:
    p = int(poly.field.characteristic)
    return KPoly(tuple(int(c) for c in reversed(poly.coeffs)), p)


def kpoly_monic(a: KPoly) -> KPoly:
    if a.is_zero():
        return a
    inverse = pow(a.coeffs[-1], -1, a.p)
    return KPoly(tuple(inverse * c for c in a.coeffs), a.p)


def kpoly_irreducible(poly: KPoly) -> bool:
    """Rabin's irreducibility test over GF(p), as galois runs it.

    P of degree n is irreducible iff t^(p^n) = t mod P and
    gcd(t^(p^(n/r)) - t, P) = 1 for every prime r dividing n.
    """
    if poly.degree < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    return bool(to_galois(kpoly_monic(poly)).is_irreducible())


def kpoly_primitive(poly: KPoly) -> bool:
    """Irreducible, and t has order p^n - 1 modulo poly."""
    if poly.degree < 1 or poly.coefficient(0) == 0:
        return False
    return bool(to_galois(kpoly_monic(poly)).is_primitive())


def irreducible_polynomials(p: int, d: int):
    """Monic irreducible polynomials of degree d over GF(p), in increasing code order."""
    for poly in galois.irreducible_polys(p, d):
        yield from_galois(poly)


def smallest_primitive(p: int, n: int) -> KPoly:
    return from_galois(galois.primitive_poly(p, n, method="min"))


def kpoly_code(poly: KPoly) -> int:
    """Integer code sum c_k p^k of a polynomial."""
    code = 0
    for c in reversed(poly.coeffs):
        code = code * poly.p + c
    return code
