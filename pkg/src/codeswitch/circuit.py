"""Circuit model: gates, ASAP timing, and the plain-text circuit format.

A circuit is an ordered list of gates over `num_qubits` logical qubits.
List order is the execution order used for all scheduling; identity gates
are kept as explicit 1-step idle markers so that generated circuits retain
their timing structure.

Text format (one gate per line, 0-based decimal qubit indices)::

    qubits 3
    h 0
    cx 0 1      # control target
    t 1
    id 2

'#' starts a comment, blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .gateset import IDENTITY, GateSetConfig, UnknownGateError


@dataclass(frozen=True)
class Gate:
    """One gate application.

    index is the position in the circuit's gate list, qubits the operand
    tuple (control first for 2-qubit kinds), time_step the ASAP slot.
    """

    index: int
    kind: str
    qubits: tuple[int, ...]
    time_step: int = 0

    @property
    def is_identity(self) -> bool:
        return self.kind == IDENTITY

    @property
    def arity(self) -> int:
        return len(self.qubits)


@dataclass(frozen=True)
class Circuit:
    num_qubits: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self) -> None:
        if self.num_qubits < 1:
            raise ValueError("num_qubits must be positive")
        for pos, gate in enumerate(self.gates):
            if gate.index != pos:
                raise ValueError(f"gate at position {pos} has index {gate.index}")
            if not gate.qubits:
                raise ValueError(f"gate {pos} has no operands")
            if len(set(gate.qubits)) != len(gate.qubits):
                raise ValueError(f"gate {pos} repeats an operand qubit")
            for q in gate.qubits:
                if not 0 <= q < self.num_qubits:
                    raise ValueError(f"gate {pos} operand {q} out of range")

    @property
    def depth(self) -> int:
        """ASAP makespan: one more than the largest time step, 0 if empty."""
        return max((g.time_step for g in self.gates), default=-1) + 1

    def non_identity_gates(self) -> list[Gate]:
        return [g for g in self.gates if not g.is_identity]

    def gates_on_qubit(self, qubit: int, include_identity: bool = False) -> list[Gate]:
        return [
            g
            for g in self.gates
            if qubit in g.qubits and (include_identity or not g.is_identity)
        ]


def asap_schedule(circuit: Circuit) -> Circuit:
    """Reassign time steps as-soon-as-possible.

    Every gate (identity included) occupies one time step on each of its
    operand qubits; a gate starts right after the latest preceding gate on
    any of its qubits. Idempotent: rescheduling a scheduled circuit is a
    no-op.
    """
    ready = [0] * circuit.num_qubits
    scheduled = []
    for gate in circuit.gates:
        start = max(ready[q] for q in gate.qubits)
        scheduled.append(replace(gate, time_step=start))
        for q in gate.qubits:
            ready[q] = start + 1
    return Circuit(circuit.num_qubits, tuple(scheduled))


class CircuitParseError(ValueError):
    """Raised on malformed circuit text; carries the 1-based line number."""

    def __init__(self, message: str, line: int) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}")


# gate name -> arity for the text format
_FORMAT_GATES = {"h": 1, "t": 1, IDENTITY: 1, "cx": 2}


def parse_circuit(text: str) -> Circuit:
    """Parse the plain-text format into an ASAP-scheduled circuit."""
    num_qubits: int | None = None
    gates: list[Gate] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if num_qubits is None:
            if fields[0] != "qubits" or len(fields) != 2:
                raise CircuitParseError("expected 'qubits <n>' header", lineno)
            try:
                num_qubits = int(fields[1])
            except ValueError:
                raise CircuitParseError("qubit count is not an integer", lineno) from None
            if num_qubits < 1:
                raise CircuitParseError("qubit count must be positive", lineno)
            continue
        name = fields[0]
        if name == "qubits":
            raise CircuitParseError("duplicate 'qubits' header", lineno)
        if name not in _FORMAT_GATES:
            raise CircuitParseError(f"unknown gate name {name!r}", lineno)
        arity = _FORMAT_GATES[name]
        if len(fields) != 1 + arity:
            raise CircuitParseError(
                f"{name!r} takes {arity} qubit operand(s), got {len(fields) - 1}", lineno
            )
        try:
            operands = tuple(int(f) for f in fields[1:])
        except ValueError:
            raise CircuitParseError("operands must be decimal integers", lineno) from None
        for q in operands:
            if not 0 <= q < num_qubits:
                raise CircuitParseError(f"qubit index {q} out of range", lineno)
        if len(set(operands)) != len(operands):
            raise CircuitParseError("duplicate operand qubit", lineno)
        gates.append(Gate(index=len(gates), kind=name, qubits=operands))
    if num_qubits is None:
        raise CircuitParseError("missing 'qubits <n>' header", max(1, len(text.splitlines())))
    return asap_schedule(Circuit(num_qubits, tuple(gates)))


def format_circuit(circuit: Circuit) -> str:
    """Inverse of parse_circuit (up to comments and blank lines)."""
    lines = [f"qubits {circuit.num_qubits}"]
    for gate in circuit.gates:
        lines.append(" ".join([gate.kind, *[str(q) for q in gate.qubits]]))
    return "\n".join(lines) + "\n"


def validate_against_gateset(circuit: Circuit, config: GateSetConfig) -> None:
    """Check every non-identity gate kind has a membership; raise if not."""
    for gate in circuit.gates:
        if gate.is_identity:
            continue
        if config.membership_of(gate.kind) is None:
            raise UnknownGateError(gate.kind, gate.index)
