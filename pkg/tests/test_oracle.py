"""Brute-force labeling oracle: hand values, witness order, guard."""

from __future__ import annotations

import pytest

from codeswitch import (
    Code,
    DEFAULT_GATESET,
    CodeMembership,
    GateSetConfig,
    TooLargeError,
    brute_force_min_switches,
    parse_circuit,
)


class TestHandValues:
    def test_fully_forced_alternation(self):
        c = parse_circuit("qubits 1\nh 0\nt 0\nh 0\n")
        assert brute_force_min_switches(c, DEFAULT_GATESET).optimum == 2

    def test_single_gate(self):
        c = parse_circuit("qubits 1\nt 0\n")
        result = brute_force_min_switches(c, DEFAULT_GATESET)
        assert result.optimum == 0
        assert result.witness == {(0, 0): Code.B}

    def test_identities_do_not_count(self):
        c = parse_circuit("qubits 1\nh 0\nid 0\nid 0\nh 0\n")
        assert brute_force_min_switches(c, DEFAULT_GATESET).optimum == 0

    def test_mixed_pair_both_modes(self, one_way_gain_text):
        c = parse_circuit(one_way_gain_text)
        assert brute_force_min_switches(c, DEFAULT_GATESET, one_way=False).optimum == 1
        assert brute_force_min_switches(c, DEFAULT_GATESET, one_way=True).optimum == 0

    def test_one_way_witness_uses_mixed_state(self, one_way_gain_text):
        c = parse_circuit(one_way_gain_text)
        w = brute_force_min_switches(c, DEFAULT_GATESET, one_way=True).witness
        assert w[(0, 0)] is Code.B  # forced
        assert w[(1, 1)] is Code.A  # forced
        assert w[(2, 0)] is Code.B  # control side of the mixed state
        assert w[(2, 1)] is Code.A  # target side of the mixed state

    def test_frozen_gap_circuit(self, greedy_gap_text):
        c = parse_circuit(greedy_gap_text)
        assert brute_force_min_switches(c, DEFAULT_GATESET).optimum == 4

    def test_free_chain_needs_no_switch(self):
        c = parse_circuit("qubits 3\ncx 0 1\ncx 1 2\ncx 0 2\n")
        result = brute_force_min_switches(c, DEFAULT_GATESET)
        assert result.optimum == 0
        # all-A beats all-B lexicographically among the zero-switch labelings
        assert set(result.witness.values()) == {Code.A}

    def test_witness_is_lexicographically_least(self):
        # one free 2-qubit gate between two forced regions, equal cost both
        # ways: the A labeling of the free gate must win the tie
        c = parse_circuit("qubits 2\nh 0\nt 1\ncx 0 1\nh 0\nt 1\n")
        result = brute_force_min_switches(c, DEFAULT_GATESET)
        assert result.optimum == 2
        assert result.witness[(2, 0)] is Code.A
        assert result.witness[(2, 1)] is Code.A


class TestOneWayDirection:
    def test_reversed_operands_cannot_use_mixed_state(self):
        # h on the control and t on the target: the only mixed state allowed
        # is control=B/target=A, which fights both forced neighbors here
        c = parse_circuit("qubits 2\nh 0\nt 1\ncx 0 1\n")
        assert brute_force_min_switches(c, DEFAULT_GATESET, one_way=False).optimum == 1
        assert brute_force_min_switches(c, DEFAULT_GATESET, one_way=True).optimum == 1

    def test_one_way_requires_rule(self):
        config = GateSetConfig(
            membership={
                "h": CodeMembership.CODE_A_ONLY,
                "t": CodeMembership.CODE_B_ONLY,
                "cx": CodeMembership.BOTH,
            }
        )
        c = parse_circuit("qubits 2\ncx 0 1\n")
        with pytest.raises(ValueError, match="one-way"):
            brute_force_min_switches(c, config, one_way=True)


class TestGuard:
    def test_too_large_raises_before_enumerating(self):
        c = parse_circuit("qubits 2\n" + "cx 0 1\nh 0\nh 1\n" * 5)
        with pytest.raises(TooLargeError) as err:
            brute_force_min_switches(c, DEFAULT_GATESET, max_combinations=16)
        assert err.value.free_variables == 5
        assert err.value.combinations == 32

    def test_guard_counts_three_state_variables(self):
        c = parse_circuit("qubits 2\n" + "cx 0 1\nh 0\nh 1\n" * 3)
        with pytest.raises(TooLargeError) as err:
            brute_force_min_switches(
                c, DEFAULT_GATESET, one_way=True, max_combinations=26
            )
        assert err.value.combinations == 27
