"""Tests for irreducible counts and the omega(n) bound."""

from fractions import Fraction

import pytest

from epiraudit.analysis import (
    box_size,
    coset_capacity,
    count_irreducible,
    omega_bruteforce,
    omega_h,
    phi,
    structured_vector,
)
from epiraudit.config import InternalConfig
from epiraudit.exceptions import IntractableSize
from epiraudit.gf.kpoly import mobius

# (n, h(n), omega(n) to five decimals)
REFERENCE_BOUNDS = [
    (2, 1, "0.66667"),
    (3, 1, "0.50000"),
    (4, 2, "0.42857"),
    (5, 2, "0.37500"),
    (6, 2, "0.33333"),
    (7, 3, "0.31250"),
    (12, 4, "0.24242"),
    (20, 5, "0.19718"),
    (34, 6, "0.16547"),
    (57, 7, "0.14236"),
    (98, 8, "0.12478"),
    (169, 9, "0.11101"),
    (296, 10, "0.09996"),
    (522, 11, "0.09089"),
    (934, 12, "0.08332"),
    (1681, 13, "0.07692"),
    (3058, 14, "0.07143"),
    (5596, 15, "0.06667"),
]


class TestIrreducibleCounts:
    """Test cases for N_p(d)."""

    def test_small_binary_counts(self):
        """Test N_2(d) for d = 1..4."""
        assert [count_irreducible(2, d) for d in range(1, 5)] == [2, 1, 2, 3]

    def test_small_ternary_counts(self):
        """Test N_3(d) for d = 1..4."""
        assert [count_irreducible(3, d) for d in range(1, 5)] == [3, 3, 8, 18]

    @pytest.mark.parametrize("d", range(1, 9))
    def test_methods_agree(self, d):
        """Test that coset, enumeration and Mobius counts agree."""
        values = {count_irreducible(2, d, method) for method in ("cosets", "enumerate", "mobius")}
        assert len(values) == 1

    @pytest.mark.parametrize("d", range(2, 13))
    def test_upper_bound(self, d):
        """Test N_2(d) <= (2^d - 2)/d."""
        assert count_irreducible(2, d) <= Fraction(2 ** d - 2, d)

    def test_invalid_arguments(self):
        """Test rejection of a bad degree, characteristic or method."""
        with pytest.raises(ValueError):
            count_irreducible(2, 0)
        with pytest.raises(ValueError):
            count_irreducible(4, 2)
        with pytest.raises(ValueError):
            count_irreducible(2, 3, "guess")

    def test_mobius(self):
        """Test the Mobius function on small values."""
        assert [mobius(k) for k in (1, 2, 3, 4, 6, 30)] == [1, -1, -1, 0, 1, -1]

    def test_capacity(self):
        """Test class capacities, including size 1."""
        assert coset_capacity(2, 1) == 1
        assert coset_capacity(3, 1) == 2
        assert coset_capacity(2, 4) == 3


class TestOmega:
    """Test cases for h(n) and omega(n)."""

    @pytest.mark.parametrize("n,h,omega", REFERENCE_BOUNDS)
    def test_reference_rows(self, n, h, omega):
        """Test h(n) and omega(n) against the reference bound table."""
        record = omega_h(2, n)
        assert record.h == h
        assert record.omega_5dp == omega

    def test_exact_values(self):
        """Test exact omega values."""
        assert omega_h(2, 2).omega == Fraction(2, 3)
        assert omega_h(2, 4).omega == Fraction(3, 7)
        assert omega_h(2, 7).omega == Fraction(5, 16)

    def test_maximiser(self):
        """Test the maximising vector and its class counts."""
        record = omega_h(2, 7)
        assert record.xi == (1, 1, 2, 0, 0, 0, 1)
        assert phi(record.xi) == record.omega
        assert record.counts == {2: 1, 3: 2}

    def test_structured_vector(self):
        """Test the structured vector for a given cutoff."""
        assert structured_vector(2, 4, 1) == (1, 0, 0, 1)
        assert structured_vector(3, 3, 2) == (2, 3, 1)

    def test_phi(self):
        """Test phi on hand-computed vectors."""
        assert phi((1, 0, 1)) == Fraction(1, 2)
        assert phi((1, 1, 2, 0, 0, 0, 1)) == Fraction(5, 16)

    @pytest.mark.parametrize("n", range(2, 61))
    def test_early_stop_matches_full_scan(self, n):
        """Test that stopping early gives the full-scan result."""
        assert omega_h(2, n) == omega_h(2, n, scan_all=True)

    def test_sequence_properties(self):
        """Test monotonicity and the omega floor up to n = 600."""
        records = [omega_h(2, n) for n in range(2, 601)]
        for before, after in zip(records, records[1:]):
            assert after.h >= before.h
            assert after.omega < before.omega
        for record in records:
            if record.n >= 7:
                assert record.omega >= Fraction(5, record.n + 9)

    def test_odd_characteristic(self):
        """Test omega_3(2)."""
        record = omega_h(3, 2)
        assert record.omega == Fraction(3, 4)
        assert record.h == 1

    def test_rejects_small_n(self):
        """Test that n = 1 is rejected."""
        with pytest.raises(ValueError):
            omega_h(2, 1)


class TestBruteForce:
    """Test cases for the exhaustive maximum of phi_n."""

    @pytest.mark.parametrize("n", range(2, 8))
    def test_box_agrees(self, n):
        """Test the box search against the structured scan."""
        assert omega_bruteforce(2, n, "box") == omega_h(2, n).omega

    @pytest.mark.slow
    def test_box_agrees_n8(self):
        """Test the box search at n = 8."""
        assert omega_bruteforce(2, 8, "box") == omega_h(2, 8).omega

    @pytest.mark.parametrize("n", range(2, 13))
    def test_vertices_agree(self, n):
        """Test the vertex search against the structured scan."""
        assert omega_bruteforce(2, n, "vertices") == omega_h(2, n).omega

    @pytest.mark.parametrize("p", InternalConfig.omega_odd_p)
    @pytest.mark.parametrize("n", range(2, InternalConfig.omega_odd_max_n + 1))
    def test_vertices_agree_odd_p(self, p, n):
        """Test the vertex search in characteristic 3 and 5."""
        assert omega_bruteforce(p, n, "vertices") == omega_h(p, n).omega

    def test_box_size(self):
        """Test box sizes."""
        assert box_size(2, 3) == 8
        assert box_size(2, 8) <= InternalConfig.bruteforce_max_points

    def test_intractable_box(self, monkeypatch):
        """Test that an oversized box is refused."""
        monkeypatch.setattr(InternalConfig, "bruteforce_max_points", 10)
        with pytest.raises(IntractableSize):
            omega_bruteforce(2, 5, "box")

    def test_unknown_strategy(self):
        """Test that an unknown strategy is rejected."""
        with pytest.raises(ValueError):
            omega_bruteforce(2, 3, "random")


if __name__ == "__main__":
    pytest.main([__file__])
