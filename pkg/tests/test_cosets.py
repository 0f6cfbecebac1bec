"""Tests for cyclotomic cosets and the valid-set decomposition."""

from collections import Counter

import numpy as np
import pytest

from epiraudit.analysis import count_cosets_of_size, count_irreducible, cyclotomic_cosets, decompose
from epiraudit.analysis.cosets import orbit_sizes
from epiraudit.gf import builtin_modulus, field_new


class TestCyclotomicCosets:
    """Test cases for the partition of Z_q under multiplication by p."""

    def test_q7(self):
        """Test the cosets of 2 modulo 7."""
        table = cyclotomic_cosets(7, 2)
        assert table.cosets == ((0, (0,)), (1, (1, 2, 4)), (3, (3, 5, 6)))
        assert table.representatives == [0, 1, 3]
        assert table.members(3) == (3, 5, 6)

    def test_q15_sizes(self):
        """Test coset sizes modulo 15."""
        assert cyclotomic_cosets(15, 2).sizes() == Counter({1: 1, 2: 1, 4: 3})

    def test_representative_map(self):
        """Test the member to representative map."""
        mapping = cyclotomic_cosets(15, 2).representative_map()
        assert mapping[10] == 5
        assert mapping[9] == 3
        assert len(mapping) == 15

    def test_unknown_representative(self):
        """Test lookup of a non-representative."""
        with pytest.raises(KeyError):
            cyclotomic_cosets(7, 2).members(2)

    @pytest.mark.parametrize("n", range(2, 10))
    def test_sizes_divide_n(self, n):
        """Test that every coset size divides n."""
        assert all(n % d == 0 for d in cyclotomic_cosets(2 ** n - 1, 2).sizes())

    def test_orbit_sizes(self):
        """Test orbit sizes of the decomposition."""
        np.testing.assert_array_equal(orbit_sizes(7, 2, 3), [1, 3, 3, 3, 3, 3, 3])
        sizes = orbit_sizes(80, 3, 4)
        table = cyclotomic_cosets(80, 3)
        for u, members in table.cosets:
            assert all(sizes[j] == len(members) for j in members)

    @pytest.mark.parametrize("d", range(2, 9))
    def test_full_size_cosets_match_irreducible_count(self, d):
        """Test full-size cosets against the irreducible count."""
        assert count_cosets_of_size(2, d) == count_irreducible(2, d, "enumerate")

    def test_size_one_cosets(self):
        """Test the cosets of size one."""
        # only {0}; N_2(1) = 2 also counts t
        assert count_cosets_of_size(2, 1) == 1
        assert count_cosets_of_size(3, 1) == 2


class TestDecomposition:
    """Test cases for the valid block set as a union of conjugacy classes."""

    def test_reference_key(self):
        """Test the decomposition for the demo key."""
        ctx = field_new(2, 3, builtin_modulus(2, 3))
        decomposition = decompose(ctx, 6)
        assert decomposition.U == (1,)
        assert decomposition.size == 3
        assert decomposition.lambdas == {3: 1}
        assert set(decomposition.D[1]) == {ctx.alpha, ctx.gen_pow(2), ctx.gen_pow(4)}

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_one_always_in_U(self, n):
        """Test that the class of g is always valid."""
        ctx = field_new(2, n, builtin_modulus(2, n))
        for x in range(ctx.q):
            decomposition = decompose(ctx, x)
            assert 1 in decomposition.U
            assert sum(d * count for d, count in decomposition.lambdas.items()) == decomposition.size

    def test_odd_characteristic(self):
        """Test the decomposition over GF(9)."""
        ctx = field_new(3, 2, builtin_modulus(3, 2))
        for x in range(ctx.q):
            decomposition = decompose(ctx, x)
            assert 1 in decomposition.U
            assert all(decomposition.class_size(u) in (1, 2) for u in decomposition.U)


if __name__ == "__main__":
    pytest.main([__file__])
