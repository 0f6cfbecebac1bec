"""Text notation for field elements and polynomials.

Grammar (whitespace ignored)::

    poly   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := NUMBER | 'g' ['^' NUMBER] | 't' ['^' NUMBER]

``NUMBER`` factors are residues mod p, ``g^j`` is a power of the field
generator and ``t^k`` the indeterminate. ``g^4*t^2 + t + 1`` is the
canonical form of an L-polynomial; ``g^2+g`` is an element.
"""

import re
from typing import Dict, List, NamedTuple, Tuple

from ..exceptions import ParseError
from .field import FieldCtx
from .types import Elem, KPoly, LPoly

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<sym>[gt])|(?P<op>[-+*^]))")


class _Factor(NamedTuple):
    kind: str  # "num", "g" or "t"
    value: int
    position: int


class _Term(NamedTuple):
    sign: int
    factors: Tuple[_Factor, ...]
    position: int


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append((kind, match.group(kind), start))
        pos = match.end()
    return tokens


def _parse_terms(text: str) -> List[_Term]:
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression", 0, text)
    terms: List[_Term] = []
    i = 0

    def peek(offset: int = 0):
        return tokens[i + offset] if i + offset < len(tokens) else None

    def expect_number() -> int:
        token = peek()
        if token is None or token[0] != "num":
            raise ParseError("expected an exponent after '^'", token[2] if token else len(text), text)
        return int(token[1])

    sign = 1
    if peek() and peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if peek()[1] == "-" else 1
        i += 1
    while True:
        factors: List[_Factor] = []
        term_start = peek()[2] if peek() else len(text)
        while True:
            token = peek()
            if token is None:
                raise ParseError("expected a factor", len(text), text)
            kind, value, position = token
            if kind == "num":
                factors.append(_Factor("num", int(value), position))
                i += 1
            elif kind == "sym":
                i += 1
                exponent = 1
                nxt = peek()
                if nxt and nxt[0] == "op" and nxt[1] == "^":
                    i += 1
                    exponent = expect_number()
                    i += 1
                factors.append(_Factor(value, exponent, position))
            else:
                raise ParseError(f"unexpected operator {value!r}", position, text)
            nxt = peek()
            if nxt and nxt[0] == "op" and nxt[1] == "*":
                i += 1
                continue
            break
        terms.append(_Term(sign, tuple(factors), term_start))
        nxt = peek()
        if nxt is None:
            return terms
        if nxt[0] == "op" and nxt[1] in "+-":
            sign = -1 if nxt[1] == "-" else 1
            i += 1
            if peek() is None:
                raise ParseError("expression ends with an operator", len(text), text)
            continue
        raise ParseError(f"unexpected token {nxt[1]!r}", nxt[2], text)


def _lpoly_terms(ctx: FieldCtx, text: str) -> Tuple[Dict[int, Elem], Dict[int, int]]:
    """Coefficients by t-degree, plus the text position of the first term of each degree."""
    coefficients: Dict[int, Elem] = {}
    positions: Dict[int, int] = {}
    for term in _parse_terms(text):
        coefficient = ctx.embed(term.sign)
        degree = 0
        for factor in term.factors:
            if factor.kind == "num":
                coefficient = ctx.mul(coefficient, ctx.embed(factor.value))
            elif factor.kind == "g":
                coefficient = ctx.mul(coefficient, ctx.gen_pow(factor.value))
            else:
                degree += factor.value
        coefficients[degree] = ctx.add(coefficients.get(degree, ctx.zero), coefficient)
        positions.setdefault(degree, term.position)
    return coefficients, positions


def parse_lpoly(ctx: FieldCtx, text: str) -> LPoly:
    """Parse a polynomial with coefficients in L, e.g. ``g^4*t^2 + t + 1``."""
    coefficients, _ = _lpoly_terms(ctx, text)
    top = max(coefficients)
    return LPoly(tuple(coefficients.get(k, ctx.zero) for k in range(top + 1)))


def parse_elem(ctx: FieldCtx, text: str) -> Elem:
    """Parse a field element, e.g. ``g^2+g`` or ``g^4``."""
    coefficients, positions = _lpoly_terms(ctx, text)
    for degree in sorted(coefficients):
        if degree > 0 and not coefficients[degree].is_zero():
            raise ParseError("a field element cannot contain t", positions[degree], text)
    return coefficients.get(0, ctx.zero)


def parse_kpoly(text: str, p: int = 2) -> KPoly:
    """Parse a polynomial over GF(p), e.g. ``t^3+t+1``."""
    coefficients: Dict[int, int] = {}
    for term in _parse_terms(text):
        coefficient = term.sign
        degree = 0
        for factor in term.factors:
            if factor.kind == "num":
                coefficient *= factor.value
            elif factor.kind == "g":
                raise ParseError("g is not allowed in a GF(p) polynomial", factor.position, text)
            else:
                degree += factor.value
        coefficients[degree] = coefficients.get(degree, 0) + coefficient
    top = max(coefficients)
    return KPoly(tuple(coefficients.get(k, 0) for k in range(top + 1)), p)


def _monomial(symbol: str, k: int) -> str:
    if k == 1:
        return symbol
    return f"{symbol}^{k}"


def format_power(ctx: FieldCtx, a: Elem) -> str:
    """``g^k`` form of an element (``0`` and ``1`` print as themselves)."""
    if a.is_zero():
        return "0"
    k = ctx.log(a)
    return "1" if k == 0 else _monomial("g", k)


def format_elem(ctx: FieldCtx, a: Elem) -> str:
    """Basis form of an element as a K-polynomial in g, e.g. ``g^2+g``.

    Only meaningful when g = alpha; other fields print the power form.
    """
    if not ctx.alpha_primitive:
        return format_power(ctx, a)
    terms = []
    for j in range(ctx.n - 1, -1, -1):
        c = a.coeffs[j]
        if c == 0:
            continue
        if j == 0:
            terms.append(str(c))
        else:
            base = _monomial("g", j)
            terms.append(base if c == 1 else f"{c}*{base}")
    return "+".join(terms) if terms else "0"


def format_annotated(ctx: FieldCtx, a: Elem) -> str:
    """``g^4 = g^2+g``; just one form when both coincide."""
    power, basis = format_power(ctx, a), format_elem(ctx, a)
    return power if power == basis else f"{power} = {basis}"


def format_kpoly(poly: KPoly) -> str:
    """``t^3+t+1``."""
    terms = []
    for k in range(poly.degree, -1, -1):
        c = poly.coefficient(k)
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            base = _monomial("t", k)
            terms.append(base if c == 1 else f"{c}*{base}")
    return "+".join(terms) if terms else "0"


def _format_coefficient(ctx: FieldCtx, c: Elem) -> str:
    if c.in_prime_field():
        return str(c.coeffs[0])
    return format_power(ctx, c)


def format_lpoly(ctx: FieldCtx, poly: LPoly) -> str:
    """``g^4*t^2 + t + 1``; re-parses to an equal LPoly."""
    terms = []
    for k in range(poly.degree, -1, -1):
        c = poly.coeffs[k]
        if c.is_zero():
            continue
        coefficient = _format_coefficient(ctx, c)
        if k == 0:
            terms.append(coefficient)
        elif coefficient == "1":
            terms.append(_monomial("t", k))
        else:
            terms.append(f"{coefficient}*{_monomial('t', k)}")
    return " + ".join(terms) if terms else "0"
