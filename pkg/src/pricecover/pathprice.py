"""Longest-path pricing for monotone assignment steps.

Given an acyclic preference graph, ``path_price`` repeatedly extracts the
most valuable remaining path (vertex count plus the label already fixed at
its endpoint), labels the path's unlabeled vertices back to front, deletes
the path's edges, and repeats until no edges remain. The labels that come
out equal the longest-path depth of each vertex: the number of edges on the
longest directed path leaving it.

Turning a label into the surcharge ``label + (max cost - own cost)`` gives
every set the price ``label + max cost``, so along every preference edge the
rejected set is strictly pricier than the chosen one. A buyer who always
takes the cheapest covering set therefore reproduces the assignment exactly,
and the chosen set is the unique minimizer among the buyer's options.

``longest_path_oracle`` recomputes the depths with a plain reverse
topological scan. It exists to cross-check the pricer and stays independent
of the path-extraction process above.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .assignment import PreferenceGraph, find_cycle
from .errors import InputError, UnpriceableError
from .model import SetId

# Partial map SetId -> nonnegative depth; a missing key means "unset" and is
# treated as 0 when a path value is evaluated.
LengthLabels = dict[SetId, int]


@dataclass(frozen=True)
class PricingScheme:
    """Posted surcharges and resulting prices, indexed by set id.

    price[s] == surcharge[s] + cost[s] == labels[s] + max_cost for every s.
    """

    surcharge: tuple[Fraction, ...]
    price: tuple[Fraction, ...]
    labels: tuple[int, ...]
    max_cost: Fraction


def _topological_order(num_vertices: int, adj: list[list[SetId]]) -> list[SetId]:
    indegree = [0] * num_vertices
    for successors in adj:
        for w in successors:
            indegree[w] += 1
    queue = deque(v for v in range(num_vertices) if indegree[v] == 0)
    order: list[SetId] = []
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in adj[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                queue.append(w)
    if len(order) != num_vertices:
        raise InputError("graph contains a cycle")
    return order


def next_path(graph: PreferenceGraph, labels: Mapping[SetId, int]) -> list[SetId]:
    """Most valuable path of the current graph.

    The value of a path v_1..v_k is k plus the label of v_k (0 if unset) and a
    path must use at least one edge. Ties go to the lexicographically smallest
    vertex-id sequence. Raises InputError on an edgeless or cyclic graph.
    """
    if not graph.edges:
        raise InputError("next_path needs a graph with at least one edge")
    adj = graph.successors()
    order = _topological_order(graph.num_vertices, adj)

    # suffix[v] = (value, sequence) of the best path starting at v, where the
    # path may stop at v itself; sequences compare lexicographically.
    suffix: dict[SetId, tuple[int, tuple[SetId, ...]]] = {}
    for v in reversed(order):
        best_value = 1 + labels.get(v, 0)
        best_seq: tuple[SetId, ...] = (v,)
        for w in adj[v]:
            value_w, seq_w = suffix[w]
            cand_value = 1 + value_w
            cand_seq = (v,) + seq_w
            if cand_value > best_value or (cand_value == best_value and cand_seq < best_seq):
                best_value, best_seq = cand_value, cand_seq
        suffix[v] = (best_value, best_seq)

    best: tuple[int, tuple[SetId, ...]] | None = None
    for v in range(graph.num_vertices):
        for w in adj[v]:
            value_w, seq_w = suffix[w]
            cand = (1 + value_w, (v,) + seq_w)
            if best is None or cand[0] > best[0] or (cand[0] == best[0] and cand[1] < best[1]):
                best = cand
    assert best is not None
    return list(best[1])


def path_price(graph: PreferenceGraph, costs: Sequence[Fraction]) -> PricingScheme:
    """Price an acyclic preference graph so a greedy buyer follows its edges.

    ``costs[s]`` is the base cost of set s; len(costs) must equal the number
    of vertices. A cyclic graph raises UnpriceableError with a witness.
    """
    cost_list = tuple(Fraction(c) for c in costs)
    if len(cost_list) != graph.num_vertices:
        raise InputError(
            f"got {len(cost_list)} costs for a graph on {graph.num_vertices} vertices"
        )
    cycle = find_cycle(graph)
    if cycle is not None:
        raise UnpriceableError(cycle)

    labels: LengthLabels = {}
    remaining = set(graph.edges)
    while remaining:
        current = PreferenceGraph(graph.num_vertices, tuple(remaining))
        seq = next_path(current, labels)
        if seq[-1] not in labels:
            labels[seq[-1]] = 0
        for i in range(len(seq) - 2, -1, -1):
            if seq[i] not in labels:
                labels[seq[i]] = labels[seq[i + 1]] + 1
        for edge in zip(seq, seq[1:]):
            remaining.discard(edge)

    depth = tuple(labels.get(v, 0) for v in range(graph.num_vertices))
    top = max(cost_list, default=Fraction(0))
    surcharge = tuple(depth[v] + (top - cost_list[v]) for v in range(graph.num_vertices))
    price = tuple(surcharge[v] + cost_list[v] for v in range(graph.num_vertices))
    return PricingScheme(surcharge=surcharge, price=price, labels=depth, max_cost=top)


def longest_path_oracle(graph: PreferenceGraph) -> tuple[int, ...]:
    """Edges on the longest directed path leaving each vertex (0 if none).

    Independent check for the labels produced by path_price. Raises
    InputError on a cyclic graph.
    """
    adj = graph.successors()
    order = _topological_order(graph.num_vertices, adj)
    depth = [0] * graph.num_vertices
    for v in reversed(order):
        for w in adj[v]:
            if depth[w] + 1 > depth[v]:
                depth[v] = depth[w] + 1
    return tuple(depth)
