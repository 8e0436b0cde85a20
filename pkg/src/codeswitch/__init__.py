"""Minimal code switching for circuits over two complementary gate sets.

The pipeline reduces code assignment to a minimum s-t cut: build a flow
network from the circuit, solve it exactly, verify the max-flow/min-cut
certificate, and read switch placements off the cut temporal edges.
"""

from .bench import (
    BenchRecord,
    BiasSweepRecord,
    run_bench,
    run_bias_sweep,
    summarize,
    write_records_csv,
)
from .circuit import (
    Circuit,
    CircuitParseError,
    Gate,
    asap_schedule,
    format_circuit,
    parse_circuit,
    validate_against_gateset,
)
from .compiler import InternalVerificationError, compile_circuit
from .extract import (
    CodeAssignment,
    CompiledCircuit,
    CompileMetrics,
    InconsistentCutError,
    ScheduleParams,
    SwitchOp,
    extract_assignment,
    extract_switches,
    greedy_baseline,
    result_json_dict,
    schedule_with_switches,
)
from .gateset import (
    Code,
    CodeMembership,
    DEFAULT_GATESET,
    GateSetConfig,
    OneWayRule,
    UnknownGateError,
)
from .generate import GenDistribution, NAMED_DISTRIBUTIONS, generate_random
from .mincut import (
    Cut,
    CutViolation,
    FlowState,
    UnboundedCutError,
    max_flow,
    min_cut,
    verify_cut,
)
from .network import (
    BiasCapacities,
    BuildOptions,
    CapEdge,
    EdgeKind,
    FlowNetwork,
    SINK,
    SOURCE,
    build_network,
    capacity_scale,
    export_dimacs,
    idle_time,
    parse_dimacs,
    temporal_capacity,
)
from .oracle import OracleResult, TooLargeError, brute_force_min_switches

__version__ = "0.1.0"

__all__ = [
    "BenchRecord",
    "BiasCapacities",
    "BiasSweepRecord",
    "BuildOptions",
    "CapEdge",
    "Circuit",
    "CircuitParseError",
    "Code",
    "CodeAssignment",
    "CodeMembership",
    "CompileMetrics",
    "CompiledCircuit",
    "Cut",
    "CutViolation",
    "DEFAULT_GATESET",
    "EdgeKind",
    "FlowNetwork",
    "FlowState",
    "Gate",
    "GateSetConfig",
    "GenDistribution",
    "InconsistentCutError",
    "InternalVerificationError",
    "NAMED_DISTRIBUTIONS",
    "OneWayRule",
    "OracleResult",
    "SINK",
    "SOURCE",
    "ScheduleParams",
    "SwitchOp",
    "TooLargeError",
    "UnboundedCutError",
    "UnknownGateError",
    "asap_schedule",
    "brute_force_min_switches",
    "build_network",
    "capacity_scale",
    "compile_circuit",
    "export_dimacs",
    "extract_assignment",
    "extract_switches",
    "format_circuit",
    "generate_random",
    "greedy_baseline",
    "idle_time",
    "max_flow",
    "min_cut",
    "parse_circuit",
    "parse_dimacs",
    "result_json_dict",
    "run_bench",
    "run_bias_sweep",
    "schedule_with_switches",
    "summarize",
    "temporal_capacity",
    "validate_against_gateset",
    "verify_cut",
    "write_records_csv",
]
