"""Value types for GF(p), GF(p^n) and polynomials over them."""

from dataclasses import dataclass, field
from typing import Iterable, Tuple


@dataclass(frozen=True)
class Elem:
    """An element of L = GF(p^n) as coefficients of 1, alpha, ..., alpha^(n-1).

    Elements are only meaningful together with the FieldCtx that built them;
    use ``FieldCtx.elem`` to construct validated instances.
    """

    coeffs: Tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def in_prime_field(self) -> bool:
        """True when the element lies in K = GF(p), i.e. only the constant slot is set."""
        return not any(self.coeffs[1:])


def _strip(coeffs: Iterable[int]) -> Tuple[int, ...]:
    values = list(coeffs)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class KPoly:
    """A polynomial over K = GF(p), lowest degree first, kept canonical.

    Coefficients are reduced mod p and trailing zeros are dropped, so the
    zero polynomial has an empty coefficient tuple.
    """

    coeffs: Tuple[int, ...]
    p: int = 2

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(c % self.p for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0


@dataclass(frozen=True)
class LPoly:
    """A polynomial over L = GF(p^n) with Elem coefficients, lowest degree first."""

    coeffs: Tuple[Elem, ...] = field(default_factory=tuple)

    def __post_init__(self):
        values = list(self.coeffs)
        while values and values[-1].is_zero():
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs
