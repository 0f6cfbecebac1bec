"""Finite extension fields GF(p^n) with log/antilog tables."""

import logging
from math import gcd
from typing import Iterator, List, Optional, Sequence

import numpy as np

from ..config import InternalConfig
from ..exceptions import (
    NonPrimeP,
    ReducibleModulus,
    TableCapExceeded,
    ZeroElement,
    ZeroInverse,
)
from .kpoly import is_prime, kpoly_irreducible
from .types import Elem, KPoly, LPoly

logger = logging.getLogger(__name__)


class FieldCtx:
    """The field L = GF(p^n) = K[t]/(modulus), K = GF(p).

    Elements are addressed internally by their *code* sum c_j p^j, where c_j
    is the coefficient of alpha^j. ``antilog_table[k]`` is the code of
    generator^k and ``log_table[code]`` its inverse (-1 at code 0). When the
    modulus is primitive the generator is alpha itself, which is the setting
    the protocol needs (g = alpha).

    A context is immutable after construction and is safe to share between
    worker processes.
    """

    def __init__(self, p: int, n: int, modulus: KPoly, table_cap: Optional[int] = None):
        if not is_prime(p):
            raise NonPrimeP(f"characteristic {p} is not prime")
        if n < 2:
            raise ValueError(f"extension degree must be >= 2, got {n}")
        if modulus.p != p:
            modulus = KPoly(modulus.coeffs, p)
        if modulus.degree != n or not modulus.is_monic():
            raise ValueError(f"modulus must be monic of degree {n}")
        cap = InternalConfig.table_cap if table_cap is None else table_cap
        if p ** n > cap:
            raise TableCapExceeded(f"field order {p}^{n} exceeds the table cap {cap}")
        if not kpoly_irreducible(modulus):
            raise ReducibleModulus(f"modulus {modulus.coeffs} is reducible over GF({p})")

        self.p = p
        self.n = n
        self.modulus = modulus
        self.size = p ** n
        self.q = self.size - 1
        self._weights = [p ** j for j in range(n)]
        self.weights = np.array(self._weights, dtype=np.int64)

        antilog, alpha_order = self._walk(self._alpha_digits())
        self.alpha_primitive = alpha_order == self.q
        if self.alpha_primitive:
            self._antilog = antilog
        else:
            logger.warning(
                f"modulus of GF({p}^{n}) is not primitive (alpha has order {alpha_order}); "
                f"tables use the smallest primitive element instead"
            )
            self._antilog = self._tables_from_smallest_generator()
        self._log = [-1] * self.size
        for k, code in enumerate(self._antilog):
            self._log[code] = k
        self.antilog_table = np.array(self._antilog, dtype=np.int64)
        self.log_table = np.array(self._log, dtype=np.int64)
        logger.debug(f"built GF({p}^{n}) tables, alpha primitive: {self.alpha_primitive}")

    # ------------------------------------------------------------------
    # table construction

    def _alpha_digits(self) -> List[int]:
        return [0, 1] + [0] * (self.n - 2)

    def _digits_to_code(self, digits: Sequence[int]) -> int:
        return sum(c * w for c, w in zip(digits, self._weights))

    def _code_to_digits(self, code: int) -> List[int]:
        digits = []
        for _ in range(self.n):
            digits.append(code % self.p)
            code //= self.p
        return digits

    def _mulmod_digits(self, a: Sequence[int], b: Sequence[int]) -> List[int]:
        p, n = self.p, self.n
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        m = self.modulus.coeffs
        for k in range(2 * n - 2, n - 1, -1):
            top = prod[k] % p
            if top:
                for j in range(n):
                    prod[k - n + j] -= top * m[j]
            prod[k] = 0
        return [c % p for c in prod[:n]]

    def _walk(self, step: List[int]):
        """Powers of the element with digit vector ``step`` until they return to 1."""
        one = [1] + [0] * (self.n - 1)
        codes = [1]
        current = one
        while True:
            current = self._mulmod_digits(current, step)
            if current == one or len(codes) > self.q:
                return codes, len(codes)
            codes.append(self._digits_to_code(current))

    def _tables_from_smallest_generator(self) -> List[int]:
        for code in range(2, self.size):
            codes, order = self._walk(self._code_to_digits(code))
            if order == self.q:
                return codes
        raise ReducibleModulus("no primitive element found; modulus cannot be irreducible")

    # ------------------------------------------------------------------
    # construction of elements

    def elem(self, coeffs: Sequence[int]) -> Elem:
        """Validated element from its alpha-basis coefficients (length exactly n)."""
        values = tuple(int(c) for c in coeffs)
        if len(values) != self.n:
            raise ValueError(f"element needs {self.n} coefficients, got {len(values)}")
        if any(c < 0 or c >= self.p for c in values):
            raise ValueError(f"coefficients must lie in [0, {self.p})")
        return Elem(values)

    def from_code(self, code: int) -> Elem:
        return Elem(tuple(self._code_to_digits(int(code))))

    def code(self, a: Elem) -> int:
        return self._digits_to_code(a.coeffs)

    def embed(self, c: int) -> Elem:
        """The residue c mod p as a constant of L."""
        return Elem((c % self.p,) + (0,) * (self.n - 1))

    @property
    def zero(self) -> Elem:
        return Elem((0,) * self.n)

    @property
    def one(self) -> Elem:
        return self.embed(1)

    @property
    def alpha(self) -> Elem:
        return Elem(tuple(self._alpha_digits()))

    @property
    def generator(self) -> Elem:
        """The primitive element the tables are built on (alpha when primitive)."""
        return self.from_code(self._antilog[1 % self.q])

    def gen_pow(self, k: int) -> Elem:
        return self.from_code(self._antilog[k % self.q])

    def group_elements(self) -> Iterator[Elem]:
        """Nonzero elements in the order g^0, g^1, ..., g^(q-1)."""
        for code in self._antilog:
            yield self.from_code(code)

    def all_elements(self) -> Iterator[Elem]:
        for code in range(self.size):
            yield self.from_code(code)

    # ------------------------------------------------------------------
    # arithmetic

    def add(self, a: Elem, b: Elem) -> Elem:
        return Elem(tuple((x + y) % self.p for x, y in zip(a.coeffs, b.coeffs)))

    def sub(self, a: Elem, b: Elem) -> Elem:
        return Elem(tuple((x - y) % self.p for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a: Elem) -> Elem:
        return Elem(tuple((-x) % self.p for x in a.coeffs))

    def log(self, a: Elem) -> int:
        """Discrete logarithm to the table generator."""
        k = self._log[self.code(a)]
        if k < 0:
            raise ZeroElement("the zero element has no logarithm")
        return k

    def mul(self, a: Elem, b: Elem) -> Elem:
        ca, cb = self.code(a), self.code(b)
        if ca == 0 or cb == 0:
            return self.zero
        return self.from_code(self._antilog[(self._log[ca] + self._log[cb]) % self.q])

    def pow(self, a: Elem, e: int) -> Elem:
        ca = self.code(a)
        if ca == 0:
            if e > 0:
                return self.zero
            if e == 0:
                return self.one
            raise ZeroInverse("zero raised to a negative power")
        return self.from_code(self._antilog[(self._log[ca] * e) % self.q])

    def inv(self, a: Elem) -> Elem:
        ca = self.code(a)
        if ca == 0:
            raise ZeroInverse("the zero element has no inverse")
        return self.from_code(self._antilog[(-self._log[ca]) % self.q])

    def div(self, a: Elem, b: Elem) -> Elem:
        return self.mul(a, self.inv(b))

    def order(self, a: Elem) -> int:
        """Multiplicative order: the smallest m >= 1 with a^m = 1."""
        ca = self.code(a)
        if ca == 0:
            raise ZeroElement("the zero element has no multiplicative order")
        return self.q // gcd(self._log[ca], self.q)

    def is_primitive(self, a: Elem) -> bool:
        return self.order(a) == self.q

    def frobenius(self, a: Elem, j: int = 1) -> Elem:
        """a^(p^j)."""
        return self.pow(a, self.p ** (j % self.n))

    # ------------------------------------------------------------------
    # basis representation and evaluation

    def repr_as_kpoly(self, a: Elem) -> KPoly:
        """The unique P in K[t], deg P < n, with P(alpha) = a."""
        return KPoly(a.coeffs, self.p)

    def eval_kpoly(self, poly: KPoly, beta: Elem) -> Elem:
        acc = self.zero
        for c in reversed(poly.coeffs):
            acc = self.add(self.mul(acc, beta), self.embed(c))
        return acc

    def eval_lpoly(self, poly: LPoly, beta: Elem) -> Elem:
        acc = self.zero
        for c in reversed(poly.coeffs):
            acc = self.add(self.mul(acc, beta), c)
        return acc

    # ------------------------------------------------------------------
    # vectorised helpers on integer codes

    def digits(self, codes: np.ndarray) -> np.ndarray:
        """Coefficient vectors of an array of codes; adds a trailing axis of length n."""
        return (np.asarray(codes, dtype=np.int64)[..., None] // self.weights) % self.p

    def codes_from_digits(self, digits: np.ndarray) -> np.ndarray:
        return (np.asarray(digits, dtype=np.int64) % self.p * self.weights).sum(axis=-1)

    def add_codes(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        return self.codes_from_digits(self.digits(a) + self.digits(b))

    def mul_codes(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        product = self.antilog_table[(self.log_table[a] + self.log_table[b]) % self.q]
        return np.where((a == 0) | (b == 0), 0, product)

    def power_codes(self, a: np.ndarray, e) -> np.ndarray:
        """Elementwise a^e for nonnegative exponents (scalar or array)."""
        a = np.asarray(a, dtype=np.int64)
        e = np.asarray(e, dtype=np.int64)
        powered = self.antilog_table[(self.log_table[a] * e) % self.q]
        return np.where(a == 0, np.where(e == 0, 1, 0), powered)

    def eval_kpoly_codes(self, poly: KPoly, betas: np.ndarray) -> np.ndarray:
        """Evaluate a K-polynomial at every code in ``betas`` at once."""
        betas = np.asarray(betas, dtype=np.int64)
        acc = np.zeros(betas.shape + (self.n,), dtype=np.int64)
        for j, c in enumerate(poly.coeffs):
            if c:
                acc += c * self.digits(self.power_codes(betas, j))
        return self.codes_from_digits(acc)

    def eval_lpoly_codes(self, poly: LPoly, betas: np.ndarray) -> np.ndarray:
        """Horner evaluation of an L-polynomial at every code in ``betas``."""
        betas = np.asarray(betas, dtype=np.int64)
        acc = np.zeros(betas.shape, dtype=np.int64)
        for c in reversed(poly.coeffs):
            acc = self.add_codes(self.mul_codes(acc, betas), np.full(betas.shape, self.code(c), dtype=np.int64))
        return acc

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, n={self.n}, modulus={self.modulus.coeffs})"


def field_new(p: int, n: int, modulus: KPoly, table_cap: Optional[int] = None) -> FieldCtx:
    """Build GF(p^n) = GF(p)[t]/(modulus).

    Raises:
        NonPrimeP: p is not prime
        ReducibleModulus: the modulus factors over GF(p)
        TableCapExceeded: p^n is above the configured cap
    """
    return FieldCtx(p, n, modulus, table_cap=table_cap)
