"""Independent brute-force optimum for small circuits.

Enumerates code labelings directly, with none of the flow machinery:
forced gates are constants, each free gate is one variable (its operands
move together), and in one-way mode a matching 2-qubit gate becomes a
three-state variable covering the two uniform labelings plus the single
legal mixed one. The optimum is the minimum number of adjacent
(temporal) node pairs with different labels.

Deliberately simple and exponential; guarded so it cannot be launched on
instances it cannot finish.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping

from .circuit import Circuit, validate_against_gateset
from .gateset import Code, CodeMembership, GateSetConfig

#: enumeration guard: at most 2**24 candidate labelings
MAX_COMBINATIONS = 1 << 24


class TooLargeError(RuntimeError):
    def __init__(self, free_variables: int, combinations: int) -> None:
        self.free_variables = free_variables
        self.combinations = combinations
        super().__init__(
            f"{free_variables} free variables span {combinations} labelings, "
            f"beyond the {MAX_COMBINATIONS} guard"
        )


@dataclass(frozen=True)
class OracleResult:
    optimum: int
    witness: Mapping[tuple[int, int], Code]


def brute_force_min_switches(
    circuit: Circuit,
    config: GateSetConfig,
    one_way: bool = False,
    max_combinations: int = MAX_COMBINATIONS,
) -> OracleResult:
    """Exhaustive minimum switch count with lexicographically least witness.

    The witness tie-break orders node labels by (gate index, operand
    position) with code A before code B, so equal-optimum runs always
    return the same labeling.
    """
    validate_against_gateset(circuit, config)
    rule = config.one_way_cnot
    if one_way and rule is None:
        raise ValueError("one-way mode requires a one-way rule in the gate set")

    gates = circuit.non_identity_gates()
    nodes: list[tuple[int, int]] = []
    node_index: dict[tuple[int, int], int] = {}
    for gate in gates:
        for q in gate.qubits:
            node_index[(gate.index, q)] = len(nodes)
            nodes.append((gate.index, q))

    labels: list[Code | None] = [None] * len(nodes)
    variables: list[tuple[list[int], list[tuple[Code, ...]]]] = []
    for gate in gates:
        ids = [node_index[(gate.index, q)] for q in gate.qubits]
        forced = config.forced_code(gate.kind)
        if forced is not None:
            for i in ids:
                labels[i] = forced
            continue
        uniform = [tuple([Code.A] * len(ids)), tuple([Code.B] * len(ids))]
        if (
            one_way
            and rule is not None
            and gate.kind == rule.kind
            and gate.arity == 2
        ):
            states = uniform + [(rule.control_code, rule.target_code)]
        else:
            states = uniform
        variables.append((ids, states))

    combinations = 1
    for _, states in variables:
        combinations *= len(states)
    if combinations > max_combinations:
        raise TooLargeError(len(variables), combinations)

    pairs: list[tuple[int, int]] = []
    last: dict[int, tuple[int, int]] = {}
    for gate in gates:
        for q in gate.qubits:
            if q in last:
                pairs.append((node_index[last[q]], node_index[(gate.index, q)]))
            last[q] = (gate.index, q)

    best_count: int | None = None
    best_labels: tuple[Code, ...] | None = None
    state_lists = [states for _, states in variables]
    id_lists = [ids for ids, _ in variables]
    for choice in product(*state_lists):
        for ids, state in zip(id_lists, choice):
            for i, code in zip(ids, state):
                labels[i] = code
        count = sum(1 for a, b in pairs if labels[a] is not labels[b])
        if best_count is None or count < best_count:
            best_count = count
            best_labels = tuple(labels)  # type: ignore[arg-type]
        elif count == best_count:
            candidate = tuple(labels)
            assert best_labels is not None
            if tuple(c.value for c in candidate) < tuple(c.value for c in best_labels):
                best_labels = candidate  # type: ignore[assignment]

    # product() over zero variables still yields one (empty) labeling, so
    # fully forced circuits take the loop exactly once
    assert best_count is not None and best_labels is not None
    return OracleResult(
        optimum=best_count,
        witness={nodes[i]: best_labels[i] for i in range(len(nodes))},
    )
