"""From a minimum cut back to circuit-level results.

Nodes on the cut's source side are assigned code A, sink side code B.
Cut temporal edges become switch operations. A re-scheduling pass then
measures the depth impact: each switch occupies d_switch consecutive
exclusive steps on its own qubit between its two gates, overlapping
freely with every other qubit, so a switch placed inside a long enough
idle window costs no depth at all.

greedy_baseline provides the comparison point: a single left-to-right
pass that switches operands on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .circuit import Circuit, Gate
from .gateset import Code, CodeMembership, GateSetConfig
from .mincut import Cut
from .network import EdgeKind, FlowNetwork


@dataclass(frozen=True)
class CodeAssignment:
    """Code per (gate index, qubit) node; qubits with no gates default to
    the preferred code A."""

    codes: Mapping[tuple[int, int], Code]
    default_code: Code = Code.A

    def code_of(self, gate_index: int, qubit: int) -> Code:
        return self.codes[(gate_index, qubit)]


@dataclass(frozen=True)
class SwitchOp:
    qubit: int
    after_gate: int
    before_gate: int
    from_code: Code
    to_code: Code
    spans_idle: int


@dataclass(frozen=True)
class ScheduleParams:
    d_switch: int = 2

    def __post_init__(self) -> None:
        if self.d_switch < 1:
            raise ValueError("d_switch must be a positive integer")


@dataclass(frozen=True)
class CompileMetrics:
    switch_count: int
    ops_in_code_a: int
    ops_in_code_b: int
    depth_no_switch: int
    depth_with_switch: int


@dataclass(frozen=True)
class CompiledCircuit:
    circuit: Circuit
    assignment: CodeAssignment
    switches: tuple[SwitchOp, ...]
    metrics: CompileMetrics
    cut_cost: Fraction


class InconsistentCutError(RuntimeError):
    """Cut temporal edges disagree with the derived code assignment."""


def _terminal_connected(net: FlowNetwork) -> set[int]:
    """Nodes with an undirected edge path to either terminal."""
    adjacency: dict[int, list[int]] = {}
    for e in net.edges:
        adjacency.setdefault(e.tail, []).append(e.head)
        adjacency.setdefault(e.head, []).append(e.tail)
    reached: set[int] = set()
    stack = [n for n in (0, 1) if n < net.num_nodes]
    reached.update(stack)
    while stack:
        u = stack.pop()
        for v in adjacency.get(u, ()):
            if v not in reached:
                reached.add(v)
                stack.append(v)
    return reached


def extract_assignment(cut: Cut, net: FlowNetwork) -> CodeAssignment:
    """Source side -> code A, sink side -> code B.

    Components with no path to either terminal (circuits made purely of
    free multi-qubit gates) land on the sink side by canonical tie-break;
    they are reassigned to the preferred code A, which never touches a cut
    edge because a minimum cut cannot split such a component.
    """
    connected = _terminal_connected(net)
    codes: dict[tuple[int, int], Code] = {}
    for (gate_index, qubit), node in net.node_map.items():
        if node not in connected:
            codes[(gate_index, qubit)] = Code.A
        elif node in cut.source_side:
            codes[(gate_index, qubit)] = Code.A
        else:
            codes[(gate_index, qubit)] = Code.B
    return CodeAssignment(codes=codes, default_code=Code.A)


def _temporal_pairs(circuit: Circuit) -> Iterable[tuple[int, Gate, Gate]]:
    """(qubit, earlier gate, later gate) per consecutive non-identity pair."""
    last: dict[int, Gate] = {}
    for gate in circuit.gates:
        if gate.is_identity:
            continue
        for q in gate.qubits:
            if q in last:
                yield q, last[q], gate
            last[q] = gate


def extract_switches(
    cut: Cut, assignment: CodeAssignment, circuit: Circuit, net: FlowNetwork
) -> tuple[SwitchOp, ...]:
    """One switch per cut temporal edge, ordered by (qubit, after_gate)."""
    cut_pairs = {
        frozenset((e.tail, e.head))
        for e in cut.cut_edges
        if e.kind is EdgeKind.TEMPORAL
    }
    switches: list[SwitchOp] = []
    seen_pairs: set[frozenset[int]] = set()
    for qubit, earlier, later in _temporal_pairs(circuit):
        code_a = assignment.code_of(earlier.index, qubit)
        code_b = assignment.code_of(later.index, qubit)
        pair = frozenset(
            (net.node_of(earlier.index, qubit), net.node_of(later.index, qubit))
        )
        if code_a is not code_b:
            if pair not in cut_pairs:
                raise InconsistentCutError(
                    f"assignment changes across uncut temporal edge on qubit {qubit} "
                    f"between gates {earlier.index} and {later.index}"
                )
            seen_pairs.add(pair)
            switches.append(
                SwitchOp(
                    qubit=qubit,
                    after_gate=earlier.index,
                    before_gate=later.index,
                    from_code=code_a,
                    to_code=code_b,
                    spans_idle=later.time_step - earlier.time_step - 1,
                )
            )
        elif pair in cut_pairs:
            raise InconsistentCutError(
                f"cut temporal edge on qubit {qubit} between gates "
                f"{earlier.index} and {later.index} joins equal codes"
            )
    if seen_pairs != cut_pairs:
        raise InconsistentCutError("cut temporal edges do not match circuit pairs")
    switches.sort(key=lambda s: (s.qubit, s.after_gate))
    return tuple(switches)


def _makespan(circuit: Circuit, switches: Iterable[SwitchOp], d_switch: int) -> int:
    """ASAP makespan with switches as exclusive d_switch-step windows.

    Identity gates stay 1-step timing markers, so without switches this
    reproduces the plain ASAP depth, and a switch whose gap already holds
    enough idle steps adds nothing.
    """
    by_before = {}
    for s in switches:
        by_before[(s.qubit, s.before_gate)] = s
    ready = [0] * circuit.num_qubits
    last_end = [0] * circuit.num_qubits  # end of last non-identity gate
    makespan = 0
    for gate in circuit.gates:
        start = 0
        for q in gate.qubits:
            earliest = ready[q]
            if (q, gate.index) in by_before:
                earliest = max(earliest, last_end[q] + d_switch)
            start = max(start, earliest)
        end = start + 1
        for q in gate.qubits:
            ready[q] = end
            if not gate.is_identity:
                last_end[q] = end
        makespan = max(makespan, end)
    return makespan


def schedule_with_switches(compiled: CompiledCircuit, params: ScheduleParams) -> int:
    """Depth of the compiled circuit once switch windows are inserted."""
    return _makespan(compiled.circuit, compiled.switches, params.d_switch)


def _metrics(
    circuit: Circuit,
    assignment: CodeAssignment,
    switches: tuple[SwitchOp, ...],
    d_switch: int,
) -> CompileMetrics:
    ops_a = sum(1 for c in assignment.codes.values() if c is Code.A)
    ops_b = sum(1 for c in assignment.codes.values() if c is Code.B)
    return CompileMetrics(
        switch_count=len(switches),
        ops_in_code_a=ops_a,
        ops_in_code_b=ops_b,
        depth_no_switch=circuit.depth,
        depth_with_switch=_makespan(circuit, switches, d_switch),
    )


def greedy_baseline(
    circuit: Circuit, config: GateSetConfig, d_switch: int = 2
) -> CompiledCircuit:
    """Single-pass baseline: switch on demand, never look ahead.

    Qubits adopt the code of their first gate without a switch. A forced
    gate switches any operand sitting in the other code. A free gate with
    operands in different codes switches everything onto the first
    operand's (the control's) code. Mixed-code execution of free gates is
    never used, so this is the conservative discipline the cut-based pass
    is measured against.
    """
    current: dict[int, Code] = {}
    previous: dict[int, Gate] = {}
    codes: dict[tuple[int, int], Code] = {}
    switches: list[SwitchOp] = []

    def put(qubit: int, gate: Gate, code: Code) -> None:
        held = current.get(qubit)
        if held is not None and held is not code:
            prev = previous[qubit]
            switches.append(
                SwitchOp(
                    qubit=qubit,
                    after_gate=prev.index,
                    before_gate=gate.index,
                    from_code=held,
                    to_code=code,
                    spans_idle=gate.time_step - prev.time_step - 1,
                )
            )
        current[qubit] = code
        codes[(gate.index, qubit)] = code

    for gate in circuit.gates:
        if gate.is_identity:
            continue
        forced = config.forced_code(gate.kind)
        if forced is not None:
            target = forced
        else:
            held = [current[q] for q in gate.qubits if q in current]
            membership = config.membership_of(gate.kind)
            assert membership is CodeMembership.BOTH
            if not held:
                target = Code.A
            else:
                lead = current.get(gate.qubits[0])
                target = lead if lead is not None else held[0]
        for q in gate.qubits:
            put(q, gate, target)
        for q in gate.qubits:
            previous[q] = gate

    switches.sort(key=lambda s: (s.qubit, s.after_gate))
    ordered = tuple(switches)
    assignment = CodeAssignment(codes=codes, default_code=Code.A)
    return CompiledCircuit(
        circuit=circuit,
        assignment=assignment,
        switches=ordered,
        metrics=_metrics(circuit, assignment, ordered, d_switch),
        cut_cost=Fraction(len(ordered)),
    )


def result_json_dict(compiled: CompiledCircuit) -> dict:
    """Stable JSON-ready result structure."""
    return {
        "num_switches": compiled.metrics.switch_count,
        "switches": [
            {
                "qubit": s.qubit,
                "after_gate": s.after_gate,
                "before_gate": s.before_gate,
                "from": s.from_code.value,
                "to": s.to_code.value,
                "spans_idle": s.spans_idle,
            }
            for s in compiled.switches
        ],
        "assignment": [
            {"gate": gate_index, "qubit": qubit, "code": code.value}
            for (gate_index, qubit), code in sorted(compiled.assignment.codes.items())
        ],
        "ops_in_code_a": compiled.metrics.ops_in_code_a,
        "ops_in_code_b": compiled.metrics.ops_in_code_b,
        "depth_no_switch": compiled.metrics.depth_no_switch,
        "depth_with_switch": compiled.metrics.depth_with_switch,
        "cut_cost": f"{compiled.cut_cost.numerator}/{compiled.cut_cost.denominator}",
    }
