"""Tests for the ProtocolAuditor facade."""

import pytest

from epiraudit import ProtocolAuditor
from epiraudit.auditor import FAILURE_COLUMNS, failure_columns
from epiraudit.exceptions import NonPrimitiveGenerator, ReducibleModulus, UnknownModulus
from epiraudit.gf import format_elem
from epiraudit.protocol import is_valid_block


class TestProtocolAuditor:
    """Test cases for ProtocolAuditor."""

    def setup_method(self):
        """Set up test fixtures."""
        self.auditor = ProtocolAuditor(workers=1)

    def test_demo_matches_reference_execution(self):
        """Test the demo transcript decodes g^2+g instead of g."""
        transcript = self.auditor.demo_counterexample()
        assert self.auditor.golden_deviations(transcript) == []
        assert transcript.refutes_claim
        assert self.auditor.consistent_with_indicator(transcript)

    @pytest.mark.parametrize("block", ["g", "g^2", "g^2+g", "1", "g+1"])
    def test_demo_with_other_blocks_matches_indicator(self, block):
        """Test that other blocks agree with the success indicator."""
        transcript = self.auditor.demo_counterexample(block)
        assert self.auditor.consistent_with_indicator(transcript)

    def test_demo_with_other_block_deviates(self):
        """Test that the block g deviates from the golden transcript."""
        transcript = self.auditor.demo_counterexample("g")
        assert self.auditor.golden_deviations(transcript)

    def test_field_is_cached(self):
        """Test that the auditor reuses field contexts."""
        assert self.auditor.field(3) is self.auditor.field(3)

    def test_field_with_modulus_override(self):
        """Test a field built from an explicit modulus."""
        ctx = self.auditor.field(3, "t^3+t^2+1")
        assert ctx.alpha_primitive
        with pytest.raises(NonPrimitiveGenerator):
            self.auditor.field(4, "t^4+t^3+t^2+t+1")
        with pytest.raises(ReducibleModulus):
            self.auditor.field(3, "t^3+1")

    def test_failure_table(self):
        """Test failure-table rows against reference values."""
        table = self.auditor.failure_table([2, 3])
        assert [row["n"] for row in table.rows] == [2, 3]
        assert table.rows[0]["eta_5dp"] == "0.61111"
        assert table.rows[1]["eta_5dp"] == "0.74271"
        assert table.metadata["in_class_P"] == {2: True, 3: True}
        assert table.metadata["F"] == "g"

    def test_failure_table_schema(self):
        """Test that the failure table keeps the exact column order."""
        table = self.auditor.failure_table([2, 3])
        header = table.extract_csv().splitlines()[0].split(",")
        assert header[:6] == ["n", "modulus", "F", "eta_exact_num", "eta_exact_den", "eta_5dp"]
        assert set(header[6:]) <= {"eta_5dp_half_even"}
        assert all(set(row) == set(header) for row in table.rows)

    def test_failure_columns_add_half_even_only_on_disagreement(self):
        """Test that the half-even column appears only when a rendering differs."""
        same = {"eta_5dp": "0.50000", "eta_5dp_half_even": "0.50000"}
        tie = {"eta_5dp": "0.12346", "eta_5dp_half_even": "0.12345"}
        assert failure_columns([same]) == FAILURE_COLUMNS
        assert failure_columns([same, tie]) == FAILURE_COLUMNS + ["eta_5dp_half_even"]

    def test_failure_table_outside_class(self):
        """Test a polynomial outside the primitive-coefficient class."""
        table = self.auditor.failure_table([2], F_text="t")
        assert table.metadata["in_class_P"] == {2: False}
        assert "in_class_P" not in table.columns

    def test_failure_table_without_modulus(self):
        """Test that a degree without a built-in modulus is rejected."""
        with pytest.raises(UnknownModulus):
            self.auditor.failure_table([10])

    def test_failure_table_odd_characteristic(self):
        """Test the failure table over GF(3^n)."""
        table = ProtocolAuditor(p=3, workers=1).failure_table([2])
        assert table.rows[0]["modulus"] == "t^2+t+2"

    def test_bounds_table_defaults_to_reference_rows(self):
        """Test the default degrees of the bounds table."""
        table = self.auditor.bounds_table()
        assert len(table) == 18
        assert table.rows[-1]["n"] == 5596
        assert table.rows[-1]["omega_5dp"] == "0.06667"

    def test_bounds_table_crosscheck(self):
        """Test the bounds table with every count method cross-checked."""
        table = self.auditor.bounds_table([2, 3, 4, 5, 12], crosscheck=True)
        assert "agrees" in table.columns
        assert all(row["agrees"] for row in table.rows)

    def test_verify(self):
        """Test a passing verification report."""
        report = self.auditor.verify("cosets")
        assert report.passed
        assert report.exit_code == 0

    def test_run_with_reference_parameters(self):
        """Test a restricted run with the demo keys."""
        transcript = self.auditor.run(3, x=6, s=[6], r=1, R=["g^2+g"])
        assert format_elem(transcript.ctx, transcript.decoded) == "g^2+g"
        assert not transcript.success

    def test_run_is_seeded(self):
        """Test that seeded runs repeat."""
        first = ProtocolAuditor(seed=5).run(4)
        second = ProtocolAuditor(seed=5).run(4)
        assert (first.x, first.exponents, first.r, first.blocks) == (second.x, second.exponents, second.r, second.blocks)
        assert is_valid_block(first.ctx, first.x, first.blocks[0])

    def test_run_full(self):
        """Test a full N-block run."""
        transcript = self.auditor.run(4, restricted=False, N=3, i=2)
        assert transcript.protocol == "full"
        assert len(transcript.blocks) == 3
        assert all(transcript.valid)
        assert transcript.r_prime is not None

    def test_restricted_run_has_one_block(self):
        """Test that the restricted protocol sends a single block."""
        with pytest.raises(ValueError):
            self.auditor.run(3, N=2)


if __name__ == "__main__":
    pytest.main([__file__])
