"""End-to-end pass: circuit in, verified minimal switch placement out.

Every run re-checks its own certificate: the cut is re-verified from
scratch and the max-flow value must equal the cut cost exactly (rational
arithmetic, no tolerance). A failure of either check is a bug in the
solver, never valid output, and raises InternalVerificationError.
"""

from __future__ import annotations

from .circuit import Circuit, asap_schedule, validate_against_gateset
from .extract import (
    CompiledCircuit,
    CompileMetrics,
    extract_assignment,
    extract_switches,
    _makespan,
)
from .gateset import Code, DEFAULT_GATESET, GateSetConfig
from .mincut import max_flow, min_cut, verify_cut
from .network import BuildOptions, build_network


class InternalVerificationError(RuntimeError):
    """The solver's certificate failed re-verification."""


def compile_circuit(
    circuit: Circuit,
    config: GateSetConfig = DEFAULT_GATESET,
    options: BuildOptions = BuildOptions(),
) -> CompiledCircuit:
    """Compute a provably minimal set of code switches for the circuit."""
    circuit = asap_schedule(circuit)
    validate_against_gateset(circuit, config)
    net = build_network(circuit, config, options)
    flow = max_flow(net)
    cut = min_cut(net, flow)
    violation = verify_cut(net, cut)
    if violation is not None:
        raise InternalVerificationError(f"{violation.kind}: {violation.message}")
    if flow.value != cut.cost:
        raise InternalVerificationError(
            f"duality gap: max flow {flow.value} != min cut cost {cut.cost}"
        )
    assignment = extract_assignment(cut, net)
    switches = extract_switches(cut, assignment, circuit, net)
    ops_a = sum(1 for c in assignment.codes.values() if c is Code.A)
    ops_b = len(assignment.codes) - ops_a
    metrics = CompileMetrics(
        switch_count=len(switches),
        ops_in_code_a=ops_a,
        ops_in_code_b=ops_b,
        depth_no_switch=circuit.depth,
        depth_with_switch=_makespan(circuit, switches, options.switch_duration),
    )
    return CompiledCircuit(
        circuit=circuit,
        assignment=assignment,
        switches=switches,
        metrics=metrics,
        cut_cost=cut.cost,
    )
