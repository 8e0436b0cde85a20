"""Reduction from code assignment to minimum s-t cut.

The network has one node per (non-identity gate, operand qubit) plus the
two terminals. The source terminal stands for code A, the sink terminal
for code B; after a minimum cut, nodes on the source side run in code A
and nodes on the sink side in code B.

Construction:
  * temporal edges, both directions, between consecutive non-identity
    gates on the same qubit; cutting one means switching that qubit's code
    in the gap, so their capacity is the unit of cost,
  * infinite coupling edges among the operand nodes of a multi-qubit gate,
    forcing the operands into one code (one-way mode keeps only the
    control -> target direction, legalizing control in B with target in A),
  * infinite terminal edges pinning single-code gates to their terminal,
  * optional bias edges (source -> node at b_source, node -> sink at
    b_sink, strictly b_sink < b_source < 1) on every free node, steering
    ties toward code A without ever outbidding a temporal edge,
  * optional idle bonus: a temporal edge spanning t_idle idle steps gets
    capacity 1 - t_idle/(n_temp*(t_idle+1)) < 1, so among cuts with the
    same edge count the solver prefers switching inside idle windows. The
    discount of a whole cut stays below 1, which keeps the optimal number
    of cut edges unchanged.

"Infinite" is a finite sentinel: the sum of all finite capacities plus
one. No finite cut can afford it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import TextIO

from .circuit import Circuit, asap_schedule, validate_against_gateset
from .gateset import Code, CodeMembership, GateSetConfig

SOURCE = 0
SINK = 1


class EdgeKind(Enum):
    TEMPORAL = "temporal"
    GATE_COUPLING = "gate_coupling"
    TERMINAL = "terminal"
    BIAS = "bias"


@dataclass(frozen=True)
class CapEdge:
    tail: int
    head: int
    capacity: Fraction
    kind: EdgeKind


@dataclass(frozen=True)
class BiasCapacities:
    """Per-node code preference. source charges a node assigned to code B,
    sink charges a node assigned to code A."""

    source: Fraction
    sink: Fraction

    def __post_init__(self) -> None:
        if not (0 < self.sink < self.source < 1):
            raise ValueError("bias capacities must satisfy 0 < b_sink < b_source < 1")

    @classmethod
    def from_ratio(cls, ratio: Fraction) -> BiasCapacities:
        """CLI convention: b_sink = ratio, b_source = 2 * ratio."""
        return cls(source=2 * Fraction(ratio), sink=Fraction(ratio))


@dataclass(frozen=True)
class BuildOptions:
    one_way_cnot: bool = False
    idle_bonus: bool = False
    bias: BiasCapacities | None = None
    switch_duration: int = 2  # used by scheduling, carried for provenance

    def __post_init__(self) -> None:
        if self.switch_duration < 1:
            raise ValueError("switch_duration must be a positive integer")


@dataclass(frozen=True)
class FlowNetwork:
    num_nodes: int
    edges: tuple[CapEdge, ...]
    node_map: dict[tuple[int, int], int]  # (gate index, qubit) -> node id
    node_gates: tuple[tuple[int, int] | None, ...]  # node id -> (gate, qubit)
    temporal_edge_count: int  # temporal pairs, the n_temp of the idle bonus
    infinite_sentinel: Fraction

    def node_of(self, gate_index: int, qubit: int) -> int:
        return self.node_map[(gate_index, qubit)]

    def gate_qubit(self, node: int) -> tuple[int, int] | None:
        return self.node_gates[node]

    def is_infinite(self, edge: CapEdge) -> bool:
        return edge.kind in (EdgeKind.GATE_COUPLING, EdgeKind.TERMINAL)


def temporal_capacity(t_idle: int, n_temp: int) -> Fraction:
    """Idle-discounted capacity of one temporal edge.

    Strictly between 1 - 1/n_temp and 1 (inclusive at 1 when t_idle = 0),
    monotonically decreasing in t_idle.
    """
    if t_idle < 0:
        raise ValueError("idle time cannot be negative")
    if n_temp < 1:
        raise ValueError("n_temp must be a positive integer")
    return 1 - Fraction(t_idle, n_temp * (t_idle + 1))


def idle_time(circuit: Circuit, qubit: int, first, second) -> int:
    """Idle steps a qubit spends between two of its gates."""
    if qubit not in first.qubits or qubit not in second.qubits:
        raise ValueError("both gates must act on the qubit")
    gap = second.time_step - first.time_step - 1
    if gap < 0:
        raise ValueError("gates are not in temporal order")
    return gap


def build_network(circuit: Circuit, config: GateSetConfig, options: BuildOptions) -> FlowNetwork:
    """Construct the cut network for an ASAP-scheduled circuit.

    Timing is normalized with a fresh ASAP pass (a no-op for circuits that
    came out of parse/generate). Gate indices in node_map refer to the
    caller's gate list, which the pass never reorders.
    """
    validate_against_gateset(circuit, config)
    circuit = asap_schedule(circuit)
    rule = config.one_way_cnot
    if options.one_way_cnot and rule is None:
        raise ValueError("one-way mode requires a one-way rule in the gate set")

    non_identity = circuit.non_identity_gates()
    per_qubit = [0] * circuit.num_qubits
    for gate in non_identity:
        for q in gate.qubits:
            per_qubit[q] += 1
    n_temp = sum(max(0, c - 1) for c in per_qubit)

    node_map: dict[tuple[int, int], int] = {}
    node_gates: list[tuple[int, int] | None] = [None, None]
    # capacity None marks an infinite edge, patched to the sentinel below
    raw: list[tuple[int, int, Fraction | None, EdgeKind]] = []
    last: list[tuple[int, int] | None] = [None] * circuit.num_qubits  # (time_step, node)

    for gate in non_identity:
        ids = []
        for q in gate.qubits:
            node = len(node_gates)
            node_gates.append((gate.index, q))
            node_map[(gate.index, q)] = node
            ids.append(node)
        for q, node in zip(gate.qubits, ids):
            if last[q] is not None:
                prev_step, prev_node = last[q]
                if options.idle_bonus:
                    cap = temporal_capacity(gate.time_step - prev_step - 1, n_temp)
                else:
                    cap = Fraction(1)
                raw.append((prev_node, node, cap, EdgeKind.TEMPORAL))
                raw.append((node, prev_node, cap, EdgeKind.TEMPORAL))
            last[q] = (gate.time_step, node)
        membership = config.membership_of(gate.kind)
        if gate.arity >= 2:
            one_way_here = (
                options.one_way_cnot
                and rule is not None
                and gate.kind == rule.kind
                and gate.arity == 2
                and membership is CodeMembership.BOTH
            )
            if one_way_here:
                raw.append((ids[0], ids[1], None, EdgeKind.GATE_COUPLING))
            else:
                for i, u in enumerate(ids):
                    for j, v in enumerate(ids):
                        if i != j:
                            raw.append((u, v, None, EdgeKind.GATE_COUPLING))
        if membership is CodeMembership.CODE_A_ONLY:
            for node in ids:
                raw.append((SOURCE, node, None, EdgeKind.TERMINAL))
                raw.append((node, SOURCE, None, EdgeKind.TERMINAL))
        elif membership is CodeMembership.CODE_B_ONLY:
            for node in ids:
                raw.append((node, SINK, None, EdgeKind.TERMINAL))
                raw.append((SINK, node, None, EdgeKind.TERMINAL))
        elif options.bias is not None:
            for node in ids:
                raw.append((SOURCE, node, options.bias.source, EdgeKind.BIAS))
                raw.append((node, SINK, options.bias.sink, EdgeKind.BIAS))

    finite = [cap for _, _, cap, _ in raw if cap is not None]
    if options.bias is not None:
        smallest_temporal = min(
            (cap for _, _, cap, kind in raw if kind is EdgeKind.TEMPORAL and cap is not None),
            default=Fraction(1),
        )
        if options.bias.source >= smallest_temporal:
            raise ValueError("bias capacities must stay below the smallest temporal capacity")
    sentinel = sum(finite, Fraction(0)) + 1
    edges = tuple(
        CapEdge(tail, head, sentinel if cap is None else cap, kind)
        for tail, head, cap, kind in raw
    )
    return FlowNetwork(
        num_nodes=len(node_gates),
        edges=edges,
        node_map=node_map,
        node_gates=tuple(node_gates),
        temporal_edge_count=n_temp,
        infinite_sentinel=sentinel,
    )


def terminal_code(node: int) -> Code | None:
    """Code represented by a terminal node id, None for gate nodes."""
    if node == SOURCE:
        return Code.A
    if node == SINK:
        return Code.B
    return None


def capacity_scale(net: FlowNetwork) -> int:
    """Least common denominator turning every capacity into an integer."""
    return math.lcm(1, *(e.capacity.denominator for e in net.edges))


def export_dimacs(net: FlowNetwork, stream: TextIO) -> None:
    """Write the network in DIMACS max-flow format.

    Capacities are scaled to integers by the least common denominator;
    infinite edges are written with the scaled sentinel value.
    """
    scale = capacity_scale(net)
    stream.write(f"p max {net.num_nodes} {len(net.edges)}\n")
    stream.write(f"n {SOURCE + 1} s\n")
    stream.write(f"n {SINK + 1} t\n")
    for e in net.edges:
        cap = e.capacity * scale
        stream.write(f"a {e.tail + 1} {e.head + 1} {cap.numerator}\n")


@dataclass(frozen=True)
class DimacsProblem:
    """Parsed DIMACS max-flow instance, node ids as written (1-based)."""

    num_nodes: int
    source: int
    sink: int
    arcs: tuple[tuple[int, int, int], ...]


def parse_dimacs(text: str) -> DimacsProblem:
    num_nodes = None
    num_arcs = None
    source = None
    sink = None
    arcs: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if len(fields) != 4 or fields[1] != "max":
                raise ValueError(f"line {lineno}: malformed problem line")
            num_nodes, num_arcs = int(fields[2]), int(fields[3])
        elif fields[0] == "n":
            if len(fields) != 3 or fields[2] not in ("s", "t"):
                raise ValueError(f"line {lineno}: malformed node descriptor")
            if fields[2] == "s":
                source = int(fields[1])
            else:
                sink = int(fields[1])
        elif fields[0] == "a":
            if len(fields) != 4:
                raise ValueError(f"line {lineno}: malformed arc descriptor")
            arcs.append((int(fields[1]), int(fields[2]), int(fields[3])))
        else:
            raise ValueError(f"line {lineno}: unknown descriptor {fields[0]!r}")
    if num_nodes is None or source is None or sink is None:
        raise ValueError("incomplete DIMACS header")
    if num_arcs is not None and num_arcs != len(arcs):
        raise ValueError(f"expected {num_arcs} arcs, found {len(arcs)}")
    return DimacsProblem(num_nodes, source, sink, tuple(arcs))
