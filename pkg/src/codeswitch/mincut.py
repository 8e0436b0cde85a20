"""Exact maximum flow and minimum s-t cut over rational capacities.

All capacities are scaled to integers by their least common denominator,
so the solver works in exact integer arithmetic end to end (Python ints,
so the scale may exceed machine words without loss). The kernel is a
level-graph blocking-flow algorithm: repeated BFS ranking plus DFS
augmentation along level-increasing arcs.

The returned cut is canonical: its source side is the set of nodes
reachable from the source in the residual graph, which is the unique
inclusion-minimal source side among all minimum cuts and is independent
of which maximum flow was found.

verify_cut re-checks a cut from scratch (partition, cut-edge set, cost,
disconnection) without trusting the solver.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .network import CapEdge, FlowNetwork, SINK, SOURCE, capacity_scale


@dataclass(frozen=True)
class FlowState:
    """A maximum flow: exact value plus per-arc flow keyed by (tail, head).

    Parallel edges are merged by capacity summation before solving, so one
    (tail, head) key covers them jointly. Arcs with zero flow are omitted.
    """

    value: Fraction
    flow: Mapping[tuple[int, int], Fraction]


@dataclass(frozen=True)
class Cut:
    source_side: frozenset[int]
    sink_side: frozenset[int]
    cut_edges: tuple[CapEdge, ...]
    cost: Fraction


class UnboundedCutError(RuntimeError):
    """Every s-t cut crosses an infinite edge; the gate set is ill-formed."""


@dataclass(frozen=True)
class CutViolation:
    kind: str
    message: str


def _merge_arcs(net: FlowNetwork, scale: int) -> dict[tuple[int, int], int]:
    merged: dict[tuple[int, int], int] = {}
    for e in net.edges:
        if e.tail == e.head:
            raise ValueError("self-loop edge in network")
        scaled = e.capacity * scale
        key = (e.tail, e.head)
        merged[key] = merged.get(key, 0) + scaled.numerator
    return merged


def _blocking_flow_max_flow(
    num_nodes: int,
    source: int,
    sink: int,
    pairs: list[tuple[int, int, int, int]],
) -> tuple[int, list[int]]:
    """Integer max flow. pairs holds (u, v, cap_uv, cap_vu) per node pair;
    returns (value, residual) with residual aligned 2 slots per pair."""
    to: list[int] = []
    cap: list[int] = []
    nxt: list[int] = []
    head = [-1] * num_nodes
    for u, v, cap_uv, cap_vu in pairs:
        to.append(v)
        cap.append(cap_uv)
        nxt.append(head[u])
        head[u] = len(to) - 1
        to.append(u)
        cap.append(cap_vu)
        nxt.append(head[v])
        head[v] = len(to) - 1

    total = 0
    level = [-1] * num_nodes
    while True:
        for i in range(num_nodes):
            level[i] = -1
        level[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            e = head[u]
            while e != -1:
                v = to[e]
                if cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
                e = nxt[e]
        if level[sink] < 0:
            return total, cap
        cur = head[:]
        path: list[int] = []
        u = source
        while True:
            if u == sink:
                bottleneck = min(cap[e] for e in path)
                total += bottleneck
                for e in path:
                    cap[e] -= bottleneck
                    cap[e ^ 1] += bottleneck
                for i, e in enumerate(path):
                    if cap[e] == 0:
                        del path[i:]
                        break
                u = to[path[-1]] if path else source
                continue
            e = cur[u]
            while e != -1 and not (cap[e] > 0 and level[to[e]] == level[u] + 1):
                e = nxt[e]
                cur[u] = e
            if e == -1:
                # dead end in this level graph; prune and back out
                level[u] = -1
                if u == source:
                    break
                last = path.pop()
                u = to[last ^ 1]
                cur[u] = nxt[last]
            else:
                path.append(e)
                u = to[e]


def max_flow(net: FlowNetwork) -> FlowState:
    """Exact maximum flow from SOURCE to SINK."""
    scale = capacity_scale(net)
    merged = _merge_arcs(net, scale)
    pairs: list[tuple[int, int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for u, v in merged:
        if (u, v) in seen or (v, u) in seen:
            continue
        seen.add((u, v))
        pairs.append((u, v, merged[(u, v)], merged.get((v, u), 0)))
    value, residual = _blocking_flow_max_flow(net.num_nodes, SOURCE, SINK, pairs)
    flow: dict[tuple[int, int], Fraction] = {}
    for i, (u, v, cap_uv, _) in enumerate(pairs):
        net_forward = cap_uv - residual[2 * i]
        if net_forward > 0:
            flow[(u, v)] = Fraction(net_forward, scale)
        elif net_forward < 0:
            flow[(v, u)] = Fraction(-net_forward, scale)
    return FlowState(value=Fraction(value, scale), flow=flow)


def min_cut(net: FlowNetwork, flow: FlowState) -> Cut:
    """Canonical minimum cut derived from a maximum flow.

    The source side is the residual-reachable set; ties between equal-cost
    cuts are thereby always broken toward the smallest source side.
    """
    merged: dict[tuple[int, int], Fraction] = {}
    directions: list[tuple[int, int]] = []
    for e in net.edges:
        key = (e.tail, e.head)
        if key not in merged:
            directions.append(key)
        merged[key] = merged.get(key, Fraction(0)) + e.capacity
    # flow across an edge opens a residual arc backwards even where the
    # network itself has no reverse edge (one-way couplings)
    for u, v in list(directions):
        if (v, u) not in merged:
            merged[(v, u)] = Fraction(0)
            directions.append((v, u))
    adjacency: dict[int, list[int]] = {}
    for u, v in directions:
        residual = merged[(u, v)] - flow.flow.get((u, v), 0) + flow.flow.get((v, u), 0)
        if residual > 0:
            adjacency.setdefault(u, []).append(v)
    reached = [False] * net.num_nodes
    reached[SOURCE] = True
    queue = deque([SOURCE])
    while queue:
        u = queue.popleft()
        for v in adjacency.get(u, ()):
            if not reached[v]:
                reached[v] = True
                queue.append(v)
    if reached[SINK]:
        raise ValueError("flow is not maximum: sink is residual-reachable")
    source_side = frozenset(i for i in range(net.num_nodes) if reached[i])
    sink_side = frozenset(i for i in range(net.num_nodes) if not reached[i])
    cut_edges = tuple(e for e in net.edges if reached[e.tail] and not reached[e.head])
    cost = sum((e.capacity for e in cut_edges), Fraction(0))
    if cost >= net.infinite_sentinel:
        raise UnboundedCutError(
            f"minimum cut cost {cost} reaches the infinite sentinel {net.infinite_sentinel}"
        )
    return Cut(source_side=source_side, sink_side=sink_side, cut_edges=cut_edges, cost=cost)


def verify_cut(net: FlowNetwork, cut: Cut) -> CutViolation | None:
    """Re-check a cut against the network; None when all properties hold.

    Checked in order: the two sides partition the nodes with the terminals
    separated; cut_edges is exactly the set of source-to-sink edges; the
    cost is their capacity sum; removing them disconnects the terminals.
    """
    nodes = frozenset(range(net.num_nodes))
    if cut.source_side & cut.sink_side:
        return CutViolation("partition", "source and sink sides overlap")
    if (cut.source_side | cut.sink_side) != nodes:
        return CutViolation("partition", "sides do not cover all nodes")
    if SOURCE not in cut.source_side or SINK not in cut.sink_side:
        return CutViolation("partition", "terminals on wrong sides")
    crossing = [
        e for e in net.edges if e.tail in cut.source_side and e.head in cut.sink_side
    ]
    listed = list(cut.cut_edges)
    for e in crossing:
        if e not in listed:
            return CutViolation(
                "cut_edges", f"crossing edge {e.tail}->{e.head} missing from cut_edges"
            )
        listed.remove(e)
    if listed:
        e = listed[0]
        return CutViolation("cut_edges", f"edge {e.tail}->{e.head} listed but not crossing")
    cost = sum((e.capacity for e in crossing), Fraction(0))
    if cost != cut.cost:
        return CutViolation("cost", f"stated cost {cut.cost} != recomputed {cost}")
    removed = {(e.tail, e.head) for e in crossing}
    adjacency: dict[int, list[int]] = {}
    for e in net.edges:
        if (e.tail, e.head) not in removed:
            adjacency.setdefault(e.tail, []).append(e.head)
    reached = [False] * net.num_nodes
    reached[SOURCE] = True
    queue = deque([SOURCE])
    while queue:
        u = queue.popleft()
        for v in adjacency.get(u, ()):
            if not reached[v]:
                reached[v] = True
                queue.append(v)
    if reached[SINK]:
        return CutViolation("disconnection", "sink reachable after removing cut edges")
    return None
