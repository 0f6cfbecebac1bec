"""Tests for exact failure probabilities."""

from fractions import Fraction

import pytest

from epiraudit.analysis import decompose, epsilon, eta, evaluation_table, indicator_H, transcript_failure_fraction
from epiraudit.config import InternalConfig
from epiraudit.exceptions import IntractableSize
from epiraudit.gf import builtin_modulus, field_new, parse_lpoly
from epiraudit.protocol import run_restricted, valid_block_codes, valid_blocks

# Mean failure probability for F = g with the built-in moduli, five decimals
REFERENCE_ETA = {
    2: "0.61111",
    3: "0.74271",
    4: "0.81537",
    5: "0.83630",
    6: "0.87719",
    7: "0.87895",
    8: "0.89809",
    9: "0.90358",
}


def _field(n, p=2):
    return field_new(p, n, builtin_modulus(p, n))


class TestEta:
    """Test cases for the reference failure table."""

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
    def test_reference_values(self, n):
        """Test eta against reference values for small n."""
        ctx = _field(n)
        stats = eta(ctx, parse_lpoly(ctx, "g"), workers=1)
        assert REFERENCE_ETA[n] in (stats.eta_5dp, stats.eta_5dp_half_even)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [8, 9])
    def test_reference_values_large_fields(self, n):
        """Test eta against reference values for large n."""
        ctx = _field(n)
        stats = eta(ctx, parse_lpoly(ctx, "g"))
        assert REFERENCE_ETA[n] in (stats.eta_5dp, stats.eta_5dp_half_even)

    def test_eta_is_mean_of_epsilons(self):
        """Test that eta averages epsilon over keys."""
        ctx = _field(3)
        F = parse_lpoly(ctx, "g")
        stats = eta(ctx, F, workers=1)
        assert list(stats.epsilons) == list(range(ctx.q))
        assert stats.eta == sum(stats.epsilons.values(), Fraction(0)) / ctx.q
        assert stats.epsilons[6] == epsilon(ctx, 6, F)

    def test_worker_count_does_not_change_result(self):
        """Test that worker count leaves eta unchanged."""
        ctx = _field(4)
        F = parse_lpoly(ctx, "g")
        assert eta(ctx, F, workers=1).eta == eta(ctx, F, workers=2).eta

    def test_row(self):
        """Test the fields of a failure-table row."""
        ctx = _field(2)
        row = eta(ctx, parse_lpoly(ctx, "g"), workers=1).as_row()
        assert row["modulus"] == "t^2+t+1"
        assert row["F"] == "g"
        assert Fraction(row["eta_exact_num"], row["eta_exact_den"]) > 0

    def test_odd_characteristic(self):
        """Test eta over GF(9)."""
        ctx = _field(2, p=3)
        stats = eta(ctx, parse_lpoly(ctx, "g"), workers=1)
        assert 0 < stats.eta <= 1

    def test_odd_characteristic_size_limit(self, monkeypatch):
        """Test the size limit for odd characteristic."""
        monkeypatch.setattr(InternalConfig, "max_eta_order_odd_p", 8)
        ctx = _field(2, p=3)
        with pytest.raises(IntractableSize):
            eta(ctx, parse_lpoly(ctx, "g"), workers=1)


class TestEpsilon:
    """Test cases for per-key failure probabilities and their oracles."""

    def test_positive_for_every_key_at_n2(self):
        """Test 0 < epsilon <= 1 for every key over GF(4)."""
        ctx = _field(2)
        F = parse_lpoly(ctx, "g")
        assert all(0 < epsilon(ctx, x, F) <= 1 for x in range(ctx.q))

    def test_lower_bound_from_decomposition(self):
        """Test epsilon >= 1 - |U|/size."""
        ctx = _field(4)
        F = parse_lpoly(ctx, "g")
        for x in range(ctx.q):
            decomposition = decompose(ctx, x)
            assert epsilon(ctx, x, F) >= 1 - Fraction(len(decomposition.U), decomposition.size)

    @pytest.mark.parametrize("text", ["g", "t+g", "g^2*t^2+1", "t"])
    def test_engines_agree(self, text):
        """Test that both epsilon engines agree."""
        ctx = _field(3)
        F = parse_lpoly(ctx, text)
        for x in range(ctx.q):
            assert epsilon(ctx, x, F, "vectorized") == epsilon(ctx, x, F, "scalar")

    def test_engines_agree_odd_characteristic(self):
        """Test that both engines agree over GF(9)."""
        ctx = _field(2, p=3)
        F = parse_lpoly(ctx, "g")
        for x in range(ctx.q):
            assert epsilon(ctx, x, F, "vectorized") == epsilon(ctx, x, F, "scalar")

    @pytest.mark.parametrize("n", [2, 3])
    def test_executed_transcripts_agree(self, n):
        """Test epsilon against executed transcripts."""
        ctx = _field(n)
        F = parse_lpoly(ctx, "g")
        for x in range(ctx.q):
            assert transcript_failure_fraction(ctx, x, F) == epsilon(ctx, x, F)

    def test_indicator_matches_transcripts(self):
        """Test the success indicator against transcripts."""
        ctx = _field(3)
        F = parse_lpoly(ctx, "g")
        for x in range(ctx.q):
            for R in valid_blocks(ctx, x):
                for s in range(ctx.q):
                    for r in range(ctx.p):
                        assert bool(indicator_H(ctx, x, F, s, r, R)) == run_restricted(ctx, x, F, s, r, R).success

    def test_reference_execution_indicator(self):
        """Test the indicator on the demo keys."""
        ctx = _field(3)
        F = parse_lpoly(ctx, "g")
        assert indicator_H(ctx, 6, F, 6, 1, ctx.gen_pow(4)) == 0

    def test_evaluation_table(self):
        """Test the table of basis polynomials evaluated at the blocks."""
        ctx = _field(3)
        codes = valid_block_codes(ctx, 6)
        table = evaluation_table(ctx, codes)
        assert table.shape == (ctx.q, len(codes))
        for k in range(ctx.q):
            V = ctx.repr_as_kpoly(ctx.gen_pow(k))
            for j, code in enumerate(codes):
                assert ctx.from_code(table[k, j]) == ctx.eval_kpoly(V, ctx.from_code(code))

    def test_unknown_engine(self):
        """Test that an unknown engine is rejected."""
        ctx = _field(2)
        with pytest.raises(ValueError):
            epsilon(ctx, 0, parse_lpoly(ctx, "g"), engine="gpu")


if __name__ == "__main__":
    pytest.main([__file__])
