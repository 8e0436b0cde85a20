"""Command line front end.

Subcommands: gen, compile, oracle, bench, bias-sweep.
Exit codes: 0 success, 1 input/validation error, 2 internal verification
failure, 3 oracle instance too large.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .bench import run_bench, run_bias_sweep, summarize, write_records_csv
from .circuit import CircuitParseError, format_circuit, parse_circuit
from .compiler import InternalVerificationError, compile_circuit
from .extract import InconsistentCutError, result_json_dict
from .gateset import DEFAULT_GATESET, UnknownGateError
from .generate import NAMED_DISTRIBUTIONS, generate_random
from .mincut import UnboundedCutError
from .network import BiasCapacities, BuildOptions
from .oracle import TooLargeError, brute_force_min_switches

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2
EXIT_TOO_LARGE = 3


def _add_compile_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--one-way", action="store_true", help="allow mixed-code CNOTs (control in B, target in A)")
    parser.add_argument("--idle-bonus", action="store_true", help="prefer switch placement inside idle windows")
    parser.add_argument("--bias", type=Fraction, default=None, metavar="R", help="code preference ratio: b_sink=R, b_source=2R")
    parser.add_argument("--d-switch", type=int, default=2, metavar="K", help="steps one switch occupies (default 2)")


def _build_options(args: argparse.Namespace) -> BuildOptions:
    bias = None
    if args.bias is not None:
        bias = BiasCapacities.from_ratio(args.bias)
    return BuildOptions(
        one_way_cnot=args.one_way,
        idle_bonus=args.idle_bonus,
        bias=bias,
        switch_duration=args.d_switch,
    )


def _read_circuit(path: str):
    return parse_circuit(Path(path).read_text())


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _cmd_gen(args: argparse.Namespace) -> int:
    dist = NAMED_DISTRIBUTIONS[args.dist]
    circuit = generate_random(args.qubits, args.steps, dist, args.seed)
    _write_output(format_circuit(circuit), args.output)
    return EXIT_OK


def _cmd_compile(args: argparse.Namespace) -> int:
    circuit = _read_circuit(args.input)
    compiled = compile_circuit(circuit, DEFAULT_GATESET, _build_options(args))
    if args.format == "json":
        text = json.dumps(result_json_dict(compiled), indent=2) + "\n"
    else:
        m = compiled.metrics
        lines = [
            f"switches: {m.switch_count}",
            f"cut cost: {compiled.cut_cost}",
            f"ops in code A: {m.ops_in_code_a}",
            f"ops in code B: {m.ops_in_code_b}",
            f"depth without switches: {m.depth_no_switch}",
            f"depth with switches: {m.depth_with_switch}",
        ]
        for s in compiled.switches:
            lines.append(
                f"switch qubit {s.qubit} after gate {s.after_gate} before gate "
                f"{s.before_gate} {s.from_code.value}->{s.to_code.value} idle {s.spans_idle}"
            )
        text = "\n".join(lines) + "\n"
    _write_output(text, args.output)
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    circuit = _read_circuit(args.input)
    options = BuildOptions(one_way_cnot=args.one_way)
    result = brute_force_min_switches(circuit, DEFAULT_GATESET, one_way=args.one_way)
    compiled = compile_circuit(circuit, DEFAULT_GATESET, options)
    if compiled.metrics.switch_count == result.optimum:
        print(f"optimum={result.optimum} MATCH")
        return EXIT_OK
    print(
        f"optimum={result.optimum} MISMATCH compiler={compiled.metrics.switch_count}",
        file=sys.stderr,
    )
    return EXIT_VERIFY


def _cmd_bench(args: argparse.Namespace) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    records = run_bench(
        sizes,
        args.reps,
        args.dist,
        options=_build_options(args),
        base_seed=args.seed,
    )
    with open(args.out, "w", newline="") as stream:
        write_records_csv(records, stream)
    for line in summarize(records):
        print(line, file=sys.stderr)
    return EXIT_OK


def _cmd_bias_sweep(args: argparse.Namespace) -> int:
    if args.input is not None:
        circuit = _read_circuit(args.input)
    else:
        dist = NAMED_DISTRIBUTIONS[args.dist]
        circuit = generate_random(args.qubits, args.steps, dist, args.seed)
    ratios = [Fraction(r) for r in args.ratios.split(",") if r]
    base = BuildOptions(one_way_cnot=args.one_way)
    records = run_bias_sweep(circuit, ratios, DEFAULT_GATESET, base)
    if args.out is not None:
        with open(args.out, "w", newline="") as stream:
            write_records_csv(records, stream)
    for r in records:
        print(
            f"ratio={r.ratio} extra_switches={r.extra_switches} "
            f"extra_code_a_nodes={r.extra_code_a_nodes}"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codeswitch",
        description="Minimal code-switch placement for two-code circuits",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a seeded random circuit")
    gen.add_argument("--qubits", type=int, required=True)
    gen.add_argument("--steps", type=int, required=True)
    gen.add_argument("--dist", choices=sorted(NAMED_DISTRIBUTIONS), default="even")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output", default=None)
    gen.set_defaults(func=_cmd_gen)

    comp = sub.add_parser("compile", help="compile a circuit file")
    comp.add_argument("input")
    _add_compile_options(comp)
    comp.add_argument("--format", choices=("json", "text"), default="json")
    comp.add_argument("-o", "--output", default=None)
    comp.set_defaults(func=_cmd_compile)

    orc = sub.add_parser("oracle", help="brute-force check of the compiled optimum")
    orc.add_argument("input")
    orc.add_argument("--one-way", action="store_true")
    orc.set_defaults(func=_cmd_oracle)

    bench = sub.add_parser("bench", help="run seeded benchmark batches to CSV")
    bench.add_argument("--sizes", required=True, help="comma-separated qubit counts")
    bench.add_argument("--reps", type=int, default=10)
    bench.add_argument("--dist", choices=sorted(NAMED_DISTRIBUTIONS), default="even")
    bench.add_argument("--seed", type=int, default=0)
    _add_compile_options(bench)
    bench.add_argument("--out", required=True, help="CSV output path")
    bench.set_defaults(func=_cmd_bench)

    sweep = sub.add_parser("bias-sweep", help="compare biased runs against the unbiased optimum")
    sweep.add_argument("input", nargs="?", default=None)
    sweep.add_argument("--qubits", type=int, default=8)
    sweep.add_argument("--steps", type=int, default=16)
    sweep.add_argument("--dist", choices=sorted(NAMED_DISTRIBUTIONS), default="even")
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--one-way", action="store_true")
    sweep.add_argument("--ratios", default="0.1,0.01,0.001")
    sweep.add_argument("--out", default=None)
    sweep.set_defaults(func=_cmd_bias_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for bad flags; bad flags are
        # input errors under this tool's exit-code contract
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        return args.func(args)
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (InternalVerificationError, InconsistentCutError, UnboundedCutError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (CircuitParseError, UnknownGateError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
