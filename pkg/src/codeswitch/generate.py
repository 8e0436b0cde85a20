"""Seeded random benchmark circuits.

Generation walks time steps; within a step it walks not-yet-occupied
qubits in ascending index order and samples a gate kind from the
distribution. Every (qubit, step) slot ends up occupied by exactly one
gate, identity included, so the generated circuit is a dense grid whose
ASAP depth equals `steps`.

The no-repeat constraint forbids the *same gate* on a qubit in two
consecutive steps (an identity in between lifts it). Gate identity
includes operands, so:
  * a single-qubit kind equal to the previous step's gate on that qubit
    is rejection-resampled,
  * a 2-qubit gate pairs the scanned qubit with a uniformly random free
    qubit of the same step, excluding only the partner that would repeat
    the exact previous pairing; a fresh partner is always legal even
    right after another 2-qubit gate. If no partner is available the
    slot degrades to an identity.

With this rule the realized per-gate kind frequencies track the
distribution weights (each 2-qubit gate counted once), which is what the
named distributions are calibrated against.

Given equal arguments the result is byte-identical across runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .circuit import Circuit, Gate
from .gateset import IDENTITY

# bounded rejection so degenerate distributions (single kind with weight 1)
# terminate; any distribution with a second nonzero weight never hits this
_MAX_RESAMPLE = 1000

_KINDS = ("h", "t", "cx", IDENTITY)


@dataclass(frozen=True)
class GenDistribution:
    """Sampling weights for the four generated gate kinds."""

    p_h: float
    p_t: float
    p_cnot: float
    p_id: float

    def __post_init__(self) -> None:
        probs = (self.p_h, self.p_t, self.p_cnot, self.p_id)
        if any(p < 0 or p > 1 for p in probs):
            raise ValueError("probabilities must lie in [0, 1]")
        if abs(sum(probs) - 1.0) > 1e-9:
            raise ValueError("probabilities must sum to 1")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.p_h, self.p_t, self.p_cnot, self.p_id)


NAMED_DISTRIBUTIONS: dict[str, GenDistribution] = {
    "even": GenDistribution(p_h=0.15, p_t=0.15, p_cnot=0.15, p_id=0.55),
    "cnot-heavy": GenDistribution(p_h=0.10, p_t=0.10, p_cnot=0.30, p_id=0.50),
}


def _sample_kind(rng: random.Random, dist: GenDistribution, forbidden: str | None) -> str:
    cumulative = []
    total = 0.0
    for p in dist.as_tuple():
        total += p
        cumulative.append(total)
    for _ in range(_MAX_RESAMPLE):
        u = rng.random() * total
        for kind, bound in zip(_KINDS, cumulative):
            if u < bound:
                break
        else:
            kind = _KINDS[-1]
        if kind == IDENTITY or kind != forbidden:
            return kind
    return IDENTITY


def generate_random(num_qubits: int, steps: int, dist: GenDistribution, seed: int) -> Circuit:
    """Generate a dense random circuit; deterministic in all arguments."""
    if num_qubits < 1:
        raise ValueError("num_qubits must be positive")
    if steps < 0:
        raise ValueError("steps must be non-negative")
    rng = random.Random(seed)
    gates: list[Gate] = []
    prev_kind = [IDENTITY] * num_qubits
    # previous step's 2-qubit partner per qubit, or -1 (used to ban exact
    # pair repeats; pairs are mutual so one side's record suffices)
    prev_partner = [-1] * num_qubits
    for step in range(steps):
        taken = [False] * num_qubits
        kind_now = [IDENTITY] * num_qubits
        partner_now = [-1] * num_qubits
        for q in range(num_qubits):
            if taken[q]:
                continue
            forbidden = prev_kind[q] if prev_kind[q] in ("h", "t") else None
            kind = _sample_kind(rng, dist, forbidden)
            if kind == "cx":
                pool = [
                    p
                    for p in range(num_qubits)
                    if p != q and not taken[p] and prev_partner[q] != p
                ]
                if not pool:
                    kind = IDENTITY
                else:
                    partner = pool[rng.randrange(len(pool))]
                    taken[q] = taken[partner] = True
                    kind_now[q] = kind_now[partner] = "cx"
                    partner_now[q] = partner
                    partner_now[partner] = q
                    gates.append(
                        Gate(index=len(gates), kind="cx", qubits=(q, partner), time_step=step)
                    )
                    continue
            taken[q] = True
            kind_now[q] = kind
            gates.append(Gate(index=len(gates), kind=kind, qubits=(q,), time_step=step))
        prev_kind = kind_now
        prev_partner = partner_now
    return Circuit(num_qubits, tuple(gates))
