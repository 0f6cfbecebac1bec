"""Arithmetic in K = GF(p) and L = GF(p^n)."""

from .types import Elem, KPoly, LPoly
from .field import FieldCtx, field_new
from .kpoly import divisors, from_galois, is_prime, kpoly_irreducible, to_galois
from .notation import (
    format_annotated,
    format_elem,
    format_kpoly,
    format_lpoly,
    format_power,
    parse_elem,
    parse_kpoly,
    parse_lpoly,
)
from .moduli import BUILTIN_MODULI, builtin_modulus, find_primitive_modulus, is_primitive_polynomial

__all__ = [
    "Elem",
    "KPoly",
    "LPoly",
    "FieldCtx",
    "field_new",
    "divisors",
    "is_prime",
    "from_galois",
    "kpoly_irreducible",
    "to_galois",
    "format_annotated",
    "format_elem",
    "format_kpoly",
    "format_lpoly",
    "format_power",
    "parse_elem",
    "parse_kpoly",
    "parse_lpoly",
    "BUILTIN_MODULI",
    "builtin_modulus",
    "find_primitive_modulus",
    "is_primitive_polynomial",
]
