"""Gate-set model: which code can execute which gate kind.

The compiler targets architectures with two complementary codes. Code A
executes one transversal gate set, code B the other, and some gate kinds
(typically the 2-qubit entangler) are transversal in both. Membership of
each gate kind drives the whole pipeline: gates with a single-code
membership are forced, gates available in both codes are free to be placed
on either side of the cut.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

IDENTITY = "id"


class Code(Enum):
    """The two codes a qubit can be encoded in at any point in time."""

    A = "A"
    B = "B"

    def other(self) -> Code:
        return Code.B if self is Code.A else Code.A


class CodeMembership(Enum):
    CODE_A_ONLY = "code_a_only"
    CODE_B_ONLY = "code_b_only"
    BOTH = "both"


@dataclass(frozen=True)
class OneWayRule:
    """Mixed-code execution rule for a 2-qubit kind with BOTH membership.

    When enabled, the named gate may also run with its operands in
    different codes, but only with the control in `control_code` and the
    target in `target_code`. The opposite mixed configuration stays
    forbidden.
    """

    kind: str
    control_code: Code = Code.B
    target_code: Code = Code.A


@dataclass(frozen=True)
class GateSetConfig:
    """Membership table plus the optional one-way rule.

    `membership` maps gate kind names to their code membership. Identity
    gates are idle markers and must not appear in the table.
    """

    membership: Mapping[str, CodeMembership]
    one_way_cnot: OneWayRule | None = None

    def __post_init__(self) -> None:
        if IDENTITY in self.membership:
            raise ValueError("identity gates carry no code membership")
        rule = self.one_way_cnot
        if rule is not None:
            if self.membership.get(rule.kind) is not CodeMembership.BOTH:
                raise ValueError(
                    f"one-way rule references {rule.kind!r} which does not have BOTH membership"
                )
            if rule.control_code is rule.target_code:
                raise ValueError("one-way rule must name two distinct codes")

    def membership_of(self, kind: str) -> CodeMembership | None:
        """Membership of a gate kind, or None for identity/unknown kinds."""
        return self.membership.get(kind)

    def forced_code(self, kind: str) -> Code | None:
        """The single code a kind is restricted to, or None if free/unknown."""
        m = self.membership.get(kind)
        if m is CodeMembership.CODE_A_ONLY:
            return Code.A
        if m is CodeMembership.CODE_B_ONLY:
            return Code.B
        return None


#: Default two-code target: H forced into code A, T forced into code B,
#: CNOT transversal in both. The one-way rule (applied only when a build
#: explicitly opts in) allows mixed CNOTs with control in B and target in A.
DEFAULT_GATESET = GateSetConfig(
    membership={
        "h": CodeMembership.CODE_A_ONLY,
        "t": CodeMembership.CODE_B_ONLY,
        "cx": CodeMembership.BOTH,
    },
    one_way_cnot=OneWayRule(kind="cx"),
)


class UnknownGateError(ValueError):
    """A circuit gate kind has no membership in the gate-set config."""

    def __init__(self, kind: str, gate_index: int) -> None:
        self.kind = kind
        self.gate_index = gate_index
        super().__init__(f"gate {gate_index}: kind {kind!r} not in gate set")
