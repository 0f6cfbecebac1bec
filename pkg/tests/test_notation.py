"""Tests for the element and polynomial text notation."""

import pytest

from epiraudit.exceptions import ParseError
from epiraudit.gf import (
    builtin_modulus,
    field_new,
    format_annotated,
    format_elem,
    format_kpoly,
    format_lpoly,
    format_power,
    parse_elem,
    parse_kpoly,
    parse_lpoly,
)


class TestNotation:
    """Test cases for parsing and formatting over GF(2^3)."""

    def setup_method(self):
        """Set up test fixtures."""
        self.ctx = field_new(2, 3, builtin_modulus(2, 3))

    def test_power_and_basis_forms_agree(self):
        """Test that power and basis forms parse alike."""
        ctx = self.ctx
        assert parse_elem(ctx, "g^4") == parse_elem(ctx, "g^2+g")
        assert parse_elem(ctx, "g^6") == parse_elem(ctx, "g^2 + 1")
        assert parse_elem(ctx, "-g") == ctx.alpha
        assert parse_elem(ctx, "g^7") == ctx.one

    def test_format_element(self):
        """Test element formatting."""
        ctx = self.ctx
        g4 = ctx.gen_pow(4)
        assert format_power(ctx, g4) == "g^4"
        assert format_elem(ctx, g4) == "g^2+g"
        assert format_annotated(ctx, g4) == "g^4 = g^2+g"
        assert format_annotated(ctx, ctx.alpha) == "g"
        assert format_annotated(ctx, ctx.one) == "1"
        assert format_annotated(ctx, ctx.zero) == "0"

    def test_lpoly_canonical_form(self):
        """Test the canonical form of L[t] polynomials."""
        ctx = self.ctx
        F = parse_lpoly(ctx, "g^4*t^2 + t + 1")
        assert F.degree == 2
        assert F.coeffs[2] == ctx.gen_pow(4)
        assert format_lpoly(ctx, F) == "g^4*t^2 + t + 1"
        assert parse_lpoly(ctx, format_lpoly(ctx, F)) == F

    def test_like_terms_combine(self):
        """Test that like terms combine."""
        ctx = self.ctx
        F = parse_lpoly(ctx, "t + g + t")
        assert F.degree == 0
        assert F.coeffs[0] == ctx.alpha

    def test_kpoly(self):
        """Test parsing polynomials over GF(p)."""
        assert parse_kpoly("t^3+t+1").coeffs == (1, 1, 0, 1)
        assert parse_kpoly("t^2-1", 3).coeffs == (2, 0, 1)
        assert format_kpoly(parse_kpoly("t^8+t^4+t^3+t^2+1")) == "t^8+t^4+t^3+t^2+1"

    def test_odd_characteristic_coefficients(self):
        """Test elements with coefficients in GF(3)."""
        ctx = field_new(3, 2, builtin_modulus(3, 2))
        a = parse_elem(ctx, "2*g+1")
        assert a.coeffs == (1, 2)
        assert format_elem(ctx, a) == "2*g+1"


class TestParseErrors:
    """Test cases for rejected input and reported positions."""

    def setup_method(self):
        """Set up test fixtures."""
        self.ctx = field_new(2, 3, builtin_modulus(2, 3))

    def test_element_with_indeterminate(self):
        """Test the error position for t in an element."""
        with pytest.raises(ParseError) as info:
            parse_elem(self.ctx, "g^2+t")
        assert info.value.position == 4

    def test_missing_exponent(self):
        """Test a caret without an exponent."""
        with pytest.raises(ParseError) as info:
            parse_lpoly(self.ctx, "g^")
        assert info.value.position == 2
        assert info.value.text == "g^"

    def test_trailing_operator(self):
        """Test a trailing plus sign."""
        with pytest.raises(ParseError):
            parse_lpoly(self.ctx, "g+")

    def test_unknown_character(self):
        """Test an unknown character."""
        with pytest.raises(ParseError) as info:
            parse_elem(self.ctx, "g$")
        assert info.value.position == 1

    def test_empty_input(self):
        """Test empty input."""
        with pytest.raises(ParseError):
            parse_elem(self.ctx, "   ")

    def test_generator_in_prime_field_polynomial(self):
        """Test that g is rejected over GF(p)."""
        with pytest.raises(ParseError):
            parse_kpoly("g+1")


if __name__ == "__main__":
    pytest.main([__file__])
