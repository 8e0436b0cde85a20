"""Benchmark harness: seeded circuit families, CSV records, bias sweeps.

Replicate seeds are base_seed + replicate index, so any row of a run can
be regenerated in isolation. Records are emitted in deterministic order.
"""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import IO, Iterable, Sequence

from .compiler import compile_circuit
from .circuit import Circuit
from .gateset import DEFAULT_GATESET, GateSetConfig
from .generate import NAMED_DISTRIBUTIONS, generate_random
from .network import BiasCapacities, BuildOptions


@dataclass(frozen=True)
class BenchRecord:
    n: int
    steps: int
    dist: str
    seed: int
    num_switches: int
    ops_in_code_a: int
    ops_in_code_b: int
    depth_no_switch: int
    depth_with_switch: int
    wall_ms: float
    options: str


@dataclass(frozen=True)
class BiasSweepRecord:
    ratio: Fraction
    b_source: Fraction
    b_sink: Fraction
    extra_switches: int
    extra_code_a_nodes: int


def options_fingerprint(options: BuildOptions) -> str:
    bias = "none"
    if options.bias is not None:
        bias = f"{options.bias.source}:{options.bias.sink}"
    return (
        f"one_way={int(options.one_way_cnot)};idle_bonus={int(options.idle_bonus)};"
        f"bias={bias};d_switch={options.switch_duration}"
    )


def run_bench(
    sizes: Sequence[int],
    reps: int,
    dist_name: str,
    options: BuildOptions = BuildOptions(),
    base_seed: int = 0,
    config: GateSetConfig = DEFAULT_GATESET,
    steps_per_size: int | None = None,
) -> list[BenchRecord]:
    """Compile reps random circuits per size; steps defaults to 2n."""
    dist = NAMED_DISTRIBUTIONS[dist_name]
    fingerprint = options_fingerprint(options)
    records: list[BenchRecord] = []
    for n in sizes:
        steps = 2 * n if steps_per_size is None else steps_per_size
        for rep in range(reps):
            seed = base_seed + rep
            circuit = generate_random(n, steps, dist, seed)
            t0 = time.perf_counter()
            compiled = compile_circuit(circuit, config, options)
            wall_ms = (time.perf_counter() - t0) * 1000.0
            m = compiled.metrics
            records.append(
                BenchRecord(
                    n=n,
                    steps=steps,
                    dist=dist_name,
                    seed=seed,
                    num_switches=m.switch_count,
                    ops_in_code_a=m.ops_in_code_a,
                    ops_in_code_b=m.ops_in_code_b,
                    depth_no_switch=m.depth_no_switch,
                    depth_with_switch=m.depth_with_switch,
                    wall_ms=round(wall_ms, 3),
                    options=fingerprint,
                )
            )
    return records


def write_records_csv(records: Iterable[BenchRecord | BiasSweepRecord], stream: IO[str]) -> None:
    records = list(records)
    if not records:
        return
    names = [f.name for f in fields(records[0])]
    writer = csv.writer(stream)
    writer.writerow(names)
    for record in records:
        writer.writerow([getattr(record, name) for name in names])


def summarize(records: Sequence[BenchRecord]) -> list[str]:
    """Mean/std lines per circuit size, for quick reading on stderr."""
    lines = []
    sizes = sorted({r.n for r in records})
    for n in sizes:
        group = [r for r in records if r.n == n]
        switches = [r.num_switches for r in group]
        overhead = [r.depth_with_switch - r.depth_no_switch for r in group]
        std = statistics.stdev(switches) if len(switches) > 1 else 0.0
        lines.append(
            f"n={n}: {len(group)} runs, switches mean={statistics.mean(switches):.2f} "
            f"std={std:.2f}, depth overhead mean={statistics.mean(overhead):.2f}"
        )
    return lines


def run_bias_sweep(
    circuit: Circuit,
    ratios: Sequence[Fraction],
    config: GateSetConfig = DEFAULT_GATESET,
    base_options: BuildOptions = BuildOptions(),
) -> list[BiasSweepRecord]:
    """Deltas of each biased run against the unbiased optimum.

    extra_switches can only be bought by moving at least
    extra_switches / (b_source - b_sink) nodes into code A; with the
    ratio convention that denominator is the ratio itself.
    """
    if base_options.bias is not None:
        raise ValueError("base options must be unbiased")
    unbiased = compile_circuit(circuit, config, base_options)
    k0 = unbiased.metrics.switch_count
    a0 = unbiased.metrics.ops_in_code_a
    records = []
    for ratio in ratios:
        bias = BiasCapacities.from_ratio(Fraction(ratio))
        options = BuildOptions(
            one_way_cnot=base_options.one_way_cnot,
            idle_bonus=base_options.idle_bonus,
            bias=bias,
            switch_duration=base_options.switch_duration,
        )
        compiled = compile_circuit(circuit, config, options)
        records.append(
            BiasSweepRecord(
                ratio=Fraction(ratio),
                b_source=bias.source,
                b_sink=bias.sink,
                extra_switches=compiled.metrics.switch_count - k0,
                extra_code_a_nodes=compiled.metrics.ops_in_code_a - a0,
            )
        )
    return records
