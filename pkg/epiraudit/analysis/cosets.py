"""Cyclotomic cosets mod q and the decomposition of the valid block set."""

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np

from ..exceptions import ViolatedPartition
from ..gf import Elem, FieldCtx
from ..protocol import valid_block_codes

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CosetTable:
    """All cyclotomic cosets C_u = {u p^k mod q}, keyed by their smallest member."""

    q: int
    p: int
    cosets: Tuple[Tuple[int, Tuple[int, ...]], ...]
    partition_ok: bool = True

    @property
    def representatives(self) -> List[int]:
        return [u for u, _ in self.cosets]

    def members(self, u: int) -> Tuple[int, ...]:
        for rep, members in self.cosets:
            if rep == u:
                return members
        raise KeyError(f"{u} is not a coset representative mod {self.q}")

    def representative_map(self) -> Dict[int, int]:
        """Map each residue to the representative of its coset."""
        return {j: u for u, members in self.cosets for j in members}

    def sizes(self) -> Counter:
        """Number of cosets of each size."""
        return Counter(len(members) for _, members in self.cosets)


@lru_cache(maxsize=64)
def cyclotomic_cosets(q: int, p: int = 2) -> CosetTable:
    """Partition Z_q into orbits under multiplication by p.

    Raises:
        ViolatedPartition: the orbits do not partition Z_q
    """
    seen = [False] * q
    cosets = []
    for u in range(q):
        if seen[u]:
            continue
        members = []
        j = u
        while not seen[j]:
            seen[j] = True
            members.append(j)
            j = (j * p) % q
        if j != u:
            raise ViolatedPartition(f"orbit of {u} mod {q} re-entered at {j}")
        cosets.append((u, tuple(sorted(members))))
    total = sum(len(members) for _, members in cosets)
    if total != q:
        raise ViolatedPartition(f"cosets mod {q} cover {total} residues")
    logger.debug(f"{len(cosets)} cyclotomic cosets mod {q} (base {p})")
    return CosetTable(q, p, tuple(cosets), True)


def orbit_sizes(q: int, p: int, n: int) -> np.ndarray:
    """Coset size of every residue mod q = p^n - 1, without materialising the cosets."""
    residues = np.arange(q, dtype=np.int64)
    sizes = np.full(q, n, dtype=np.int64)
    for e in range(n - 1, 0, -1):
        if n % e == 0:
            fixed = (residues * pow(p, e, q)) % q == residues
            sizes[fixed] = e
    return sizes


def count_cosets_of_size(p: int, d: int) -> int:
    """Number of cyclotomic cosets mod p^d - 1 having exactly d members."""
    q = p ** d - 1
    sizes = orbit_sizes(q, p, d)
    return int(np.count_nonzero(sizes == d)) // d


@dataclass
class CosetDecomposition:
    """The valid block set for key x written as a union of conjugacy classes D_u.

    Attributes:
        x: The secret key
        U: Representatives u whose class D_u = {g^j : j in C_u} lies in the valid set
        D: The classes themselves, keyed by representative
        lambdas: Number of classes of each size d (d divides n)
        size: Number of valid blocks
    """

    x: int
    U: Tuple[int, ...]
    D: Dict[int, Tuple[Elem, ...]] = field(repr=False)
    lambdas: Dict[int, int]
    size: int

    def class_size(self, u: int) -> int:
        return len(self.D[u])


def decompose(ctx: FieldCtx, x: int) -> CosetDecomposition:
    """Split the valid block set of key x into conjugacy classes.

    Raises:
        ViolatedPartition: the valid set is not a union of whole classes, or the
            class sizes do not add up
    """
    table = cyclotomic_cosets(ctx.q, ctx.p)
    rep_of = table.representative_map()
    codes = valid_block_codes(ctx, x)
    exponents = {int(k) for k in ctx.log_table[codes]}
    U = sorted({rep_of[k] for k in exponents})
    D: Dict[int, Tuple[Elem, ...]] = {}
    for u in U:
        members = table.members(u)
        missing = [j for j in members if j not in exponents]
        if missing:
            raise ViolatedPartition(f"x={x}: class of g^{u} is only partly valid (missing g^{missing[0]})")
        D[u] = tuple(ctx.gen_pow(j) for j in members)
    lambdas: Dict[int, int] = {}
    for u in U:
        d = len(D[u])
        lambdas[d] = lambdas.get(d, 0) + 1
    size = len(exponents)
    if sum(d * count for d, count in lambdas.items()) != size:
        raise ViolatedPartition(f"x={x}: class sizes do not sum to {size}")
    return CosetDecomposition(x=x, U=tuple(U), D=D, lambdas=lambdas, size=size)
