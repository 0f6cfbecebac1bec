"""Tests for decimal rendering and worker detection."""

from fractions import Fraction

import pytest

from epiraudit.config import InternalConfig
from epiraudit.utils import both_renderings, format_decimal, get_cpu_count, get_parallel_info, get_worker_count


class TestFormatDecimal:
    """Test cases for exact decimal rendering."""

    def test_plain_values(self):
        """Test rounding of plain values."""
        assert format_decimal(Fraction(2, 3)) == "0.66667"
        assert format_decimal(Fraction(1, 2)) == "0.50000"
        assert format_decimal(Fraction(-1, 3)) == "-0.33333"
        assert format_decimal(Fraction(1)) == "1.00000"

    def test_ties(self):
        """Test half-up and half-even ties."""
        assert both_renderings(Fraction(1, 200000)) == ("0.00001", "0.00000")
        assert both_renderings(Fraction(3, 200000)) == ("0.00002", "0.00002")

    def test_places(self):
        """Test the number of decimal places."""
        assert format_decimal(Fraction(5, 2), places=0) == "3"
        assert format_decimal(Fraction(5, 2), places=0, mode="half_even") == "2"
        assert format_decimal(Fraction(1, 8), places=2) == "0.13"

    def test_unknown_mode(self):
        """Test that an unknown rounding mode is rejected."""
        with pytest.raises(ValueError):
            format_decimal(Fraction(1, 3), mode="down")


class TestWorkers:
    """Test cases for worker-count resolution."""

    def test_explicit_request(self, monkeypatch):
        """Test an explicit worker count."""
        monkeypatch.setenv(InternalConfig.workers_env_var, "5")
        assert get_worker_count(3) == 3
        with pytest.raises(ValueError):
            get_worker_count(0)

    def test_environment_variable(self, monkeypatch):
        """Test the worker count from the environment."""
        monkeypatch.setenv(InternalConfig.workers_env_var, "2")
        assert get_worker_count() == 2

    @pytest.mark.parametrize("value", ["abc", "0", "-3"])
    def test_invalid_environment_variable(self, monkeypatch, value):
        """Test an invalid environment value."""
        monkeypatch.setenv(InternalConfig.workers_env_var, value)
        assert get_worker_count() == get_cpu_count()

    def test_parallel_info(self, monkeypatch):
        """Test the parallel-info summary."""
        monkeypatch.delenv(InternalConfig.workers_env_var, raising=False)
        info = get_parallel_info()
        assert info["env_value"] is None
        assert info["workers"] == info["cpu_count"] >= 1


if __name__ == "__main__":
    pytest.main([__file__])
