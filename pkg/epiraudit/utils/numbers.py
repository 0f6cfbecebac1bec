"""Decimal rendering of exact rationals."""

from fractions import Fraction
from typing import Tuple

from ..config import InternalConfig


def _render(scaled: int, places: int) -> str:
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    if places == 0:
        return f"{sign}{digits}"
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def format_decimal(value: Fraction, places: int = InternalConfig.decimal_places, mode: str = "half_up") -> str:
    """Render an exact rational with a fixed number of decimals.

    Args:
        value: The rational to render
        places: Digits after the decimal point
        mode: ``"half_up"`` (ties away from zero) or ``"half_even"``

    Returns:
        The rendering, e.g. ``"0.61111"``
    """
    value = Fraction(value)
    scaled_value = value * 10 ** places
    if mode == "half_up":
        magnitude = abs(scaled_value)
        scaled = (magnitude.numerator * 2 + magnitude.denominator) // (2 * magnitude.denominator)
        if value < 0:
            scaled = -scaled
    elif mode == "half_even":
        scaled = round(scaled_value)
    else:
        raise ValueError(f"unknown rounding mode: {mode}")
    return _render(scaled, places)


def both_renderings(value: Fraction, places: int = InternalConfig.decimal_places) -> Tuple[str, str]:
    """(half-up, half-even); they differ only on exact ties at the last place."""
    return format_decimal(value, places, "half_up"), format_decimal(value, places, "half_even")
