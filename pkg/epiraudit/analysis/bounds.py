"""Irreducible-polynomial counts and the omega(n) / h(n) bound.

phi_n(z) = sum(z_d) / sum(d z_d) over the box 0 <= z_1 <= p - 1,
1 <= z_n <= N_p(n) and 0 <= z_d <= N_p(d) otherwise, where N_p(d) counts
monic irreducible polynomials of degree d over GF(p). omega(n) is the
maximum of phi_n on the box and 1 - omega(n) bounds the failure
probability from below.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..config import InternalConfig
from ..exceptions import IntractableSize
from ..gf import divisors, is_prime
from ..gf.kpoly import irreducible_polynomials, mobius
from ..utils import format_decimal
from .cosets import count_cosets_of_size

logger = logging.getLogger(__name__)

COUNT_METHODS = ("auto", "cosets", "enumerate", "mobius")


def _count_mobius(p: int, d: int) -> int:
    return sum(mobius(e) * p ** (d // e) for e in divisors(d)) // d


def _count_cosets(p: int, d: int) -> int:
    # size-1 cosets give t - c for c != 0; t itself is the extra one
    count = count_cosets_of_size(p, d)
    return count + 1 if d == 1 else count


def _count_enumerate(p: int, d: int) -> int:
    return sum(1 for _ in irreducible_polynomials(p, d))


@lru_cache(maxsize=None)
def count_irreducible(p: int, d: int, method: str = "auto") -> int:
    """Number of monic irreducible polynomials of degree d over GF(p).

    Args:
        p: Prime characteristic
        d: Degree >= 1
        method: ``"cosets"`` counts cyclotomic cosets of size d mod p^d - 1,
            ``"enumerate"`` walks the irreducible polynomials one by one,
            ``"mobius"`` uses the necklace formula, and
            ``"auto"`` counts cosets while p^d is within the table cap

    Returns:
        N_p(d)
    """
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if method not in COUNT_METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {COUNT_METHODS}")
    if method == "auto":
        if p ** d <= InternalConfig.table_cap:
            return _count_cosets(p, d)
        logger.warning(f"p^d = {p}^{d} is above the table cap; counting N_{p}({d}) with the Mobius formula")
        return _count_mobius(p, d)
    if method == "cosets":
        return _count_cosets(p, d)
    if method == "enumerate":
        return _count_enumerate(p, d)
    return _count_mobius(p, d)


def coset_capacity(p: int, d: int) -> int:
    """Upper bound on the number of classes of size d in a valid block set.

    Size-1 classes are the nonzero constants, so d = 1 allows p - 1 (just one for p = 2).
    """
    if d == 1:
        return p - 1
    return count_irreducible(p, d)


def phi(z: Sequence[int]) -> Fraction:
    """phi_n(z) with z = (z_1, ..., z_n)."""
    numerator = sum(z)
    denominator = sum((d + 1) * value for d, value in enumerate(z))
    return Fraction(numerator, denominator)


@dataclass
class BoundRecord:
    """omega_p(n) with the cutoff h(n) and the maximising vector xi."""

    p: int
    n: int
    h: int
    omega: Fraction
    xi: Tuple[int, ...] = field(repr=False)
    counts: Dict[int, int] = field(default_factory=dict, repr=False)

    @property
    def omega_5dp(self) -> str:
        return format_decimal(self.omega)

    def as_row(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "h": self.h,
            "omega_exact_num": self.omega.numerator,
            "omega_exact_den": self.omega.denominator,
            "omega_5dp": self.omega_5dp,
        }


def structured_vector(p: int, n: int, h: int) -> Tuple[int, ...]:
    """(p-1, N_p(2), ..., N_p(h), 0, ..., 0, 1)."""
    z = [0] * n
    z[0] = p - 1
    for d in range(2, h + 1):
        z[d - 1] = count_irreducible(p, d)
    z[n - 1] = 1
    return tuple(z)


def omega_h(p: int, n: int, scan_all: bool = False) -> BoundRecord:
    """omega_p(n) and the smallest maximising cutoff h(n) in {1, ..., n-1}.

    Adding all N_p(d) classes of size d raises the ratio S/T exactly when
    d S < T, and once that fails it fails for every larger d, so the scan
    stops there unless ``scan_all`` is set. Ties keep the smaller cutoff.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    S = (p - 1) + 1
    T = (p - 1) + n
    best = Fraction(S, T)
    h = 1
    counts: Dict[int, int] = {}
    for d in range(2, n):
        if not scan_all and d * S >= T:
            break
        N = count_irreducible(p, d)
        counts[d] = N
        S += N
        T += d * N
        value = Fraction(S, T)
        if value > best:
            best, h = value, d
    record = BoundRecord(p=p, n=n, h=h, omega=best, xi=structured_vector(p, n, h), counts={d: counts[d] for d in range(2, h + 1)})
    logger.debug(f"omega_{p}({n}) = {best} with h = {h}")
    return record


def _box_bounds(p: int, n: int) -> List[Tuple[int, int]]:
    bounds = [(0, p - 1)]
    bounds += [(0, count_irreducible(p, d)) for d in range(2, n)]
    bounds.append((1, count_irreducible(p, n)))
    return bounds


def box_size(p: int, n: int) -> int:
    size = 1
    for lo, hi in _box_bounds(p, n):
        size *= hi - lo + 1
    return size


def _bruteforce_box(p: int, n: int) -> Fraction:
    bounds = _box_bounds(p, n)
    points = box_size(p, n)
    if points > InternalConfig.bruteforce_max_points:
        raise IntractableSize(f"box for n={n}, p={p} has {points} points (limit {InternalConfig.bruteforce_max_points})")
    numerator = np.zeros((1,) * n, dtype=np.int64)
    denominator = np.zeros((1,) * n, dtype=np.int64)
    for axis, (lo, hi) in enumerate(bounds):
        shape = [1] * n
        shape[axis] = hi - lo + 1
        values = np.arange(lo, hi + 1, dtype=np.int64).reshape(shape)
        numerator = numerator + values
        denominator = denominator + (axis + 1) * values
    ratio = numerator / denominator
    top = ratio.max()
    candidates = np.argwhere(ratio >= top - 1e-12)
    best = max(
        Fraction(int(numerator[tuple(index)]), int(denominator[tuple(index)])) for index in candidates
    )
    logger.debug(f"box search over {points} points for n={n}, p={p}: {best}")
    return best


def _bruteforce_vertices(p: int, n: int) -> Fraction:
    bounds = _box_bounds(p, n)
    return max(phi(corner) for corner in itertools.product(*bounds))


def omega_bruteforce(p: int, n: int, strategy: str = "box") -> Fraction:
    """Maximum of phi_n by exhaustive search, the oracle for ``omega_h``.

    Args:
        p: Prime characteristic
        n: Degree >= 2
        strategy: ``"box"`` scans every point of the box; ``"vertices"`` scans
            only its corners, where a linear-fractional objective peaks

    Raises:
        IntractableSize: the box has more points than the configured limit
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if strategy == "box":
        return _bruteforce_box(p, n)
    if strategy == "vertices":
        return _bruteforce_vertices(p, n)
    raise ValueError(f"unknown strategy {strategy!r}")
