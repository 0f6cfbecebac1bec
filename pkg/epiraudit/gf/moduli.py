"""Registry of defining polynomials."""

import logging
from functools import lru_cache
from typing import Dict

from ..exceptions import UnknownModulus
from .kpoly import kpoly_primitive, smallest_primitive
from .notation import parse_kpoly
from .types import KPoly

logger = logging.getLogger(__name__)

# Minimal polynomials of g over GF(2) behind the reference failure table.
BUILTIN_MODULI: Dict[int, str] = {
    2: "t^2+t+1",
    3: "t^3+t+1",
    4: "t^4+t+1",
    5: "t^5+t^2+1",
    6: "t^6+t^4+t^3+t+1",
    7: "t^7+t+1",
    8: "t^8+t^4+t^3+t^2+1",
    9: "t^9+t^4+1",
}


def is_primitive_polynomial(poly: KPoly) -> bool:
    """True when poly is irreducible and t generates (K[t]/poly)^x."""
    return kpoly_primitive(poly)


@lru_cache(maxsize=None)
def find_primitive_modulus(p: int, n: int) -> KPoly:
    """Smallest monic primitive polynomial of degree n over GF(p), by coefficient code."""
    if n < 1:
        raise UnknownModulus(f"no primitive polynomial of degree {n} over GF({p})")
    return smallest_primitive(p, n)


def builtin_modulus(p: int, n: int) -> KPoly:
    """The modulus used when the caller supplies none.

    For p = 2 this is the reference polynomial for n = 2..9 and an error
    otherwise; for odd p the smallest primitive polynomial is used.
    """
    if p == 2:
        if n not in BUILTIN_MODULI:
            raise UnknownModulus(f"no built-in modulus for n={n}; pass a primitive modulus")
        return parse_kpoly(BUILTIN_MODULI[n], 2)
    modulus = find_primitive_modulus(p, n)
    logger.info(f"using smallest primitive modulus for GF({p}^{n}): {modulus.coeffs}")
    return modulus
