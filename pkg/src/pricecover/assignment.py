"""Assignment schemes, their preference graphs, and the monotonicity test.

An assignment scheme maps every currently uncovered element to the set the
algorithm would buy for it if it arrived next. The induced preference graph
has vertex set equal to the whole family and an edge (S, T) whenever some
uncovered element lying in both S and T is assigned to T: the scheme prefers
T over S there, so any price table reproducing the scheme must make S
strictly pricier than T. A step is monotone exactly when this graph is
acyclic; only monotone steps can be reproduced by posted prices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .model import CoverState, ElementId, SetId, SetSystem, sets_covering

# Total map from each currently uncovered element to the set that would be
# bought for it. Domain must be exactly the uncovered elements.
AssignmentScheme = dict[ElementId, SetId]


@dataclass(frozen=True)
class PreferenceGraph:
    """Digraph on set ids; edges point from the rejected set to the chosen one."""

    num_vertices: int
    edges: tuple[tuple[SetId, SetId], ...]

    def __post_init__(self):
        deduped = tuple(sorted({(int(u), int(v)) for u, v in self.edges}))
        for u, v in deduped:
            if u == v:
                raise InputError(f"self edge on vertex {u}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise InputError(f"edge ({u}, {v}) out of range for {self.num_vertices} vertices")
        object.__setattr__(self, "edges", deduped)

    def successors(self) -> list[list[SetId]]:
        """Adjacency lists, ascending within each list."""
        adj: list[list[SetId]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
        return adj


def build_preference_graph(
    system: SetSystem, state: CoverState, scheme: AssignmentScheme
) -> PreferenceGraph:
    """Induce the preference graph of one assignment step.

    The scheme must cover exactly the uncovered elements and send each to a
    set that contains it; anything else raises InputError.
    """
    uncovered = set(state.uncovered())
    stray = set(scheme) - uncovered
    if stray:
        raise InputError(
            f"scheme assigns element {min(stray)} that is covered or out of range"
        )
    edges: set[tuple[SetId, SetId]] = set()
    for e in sorted(uncovered):
        if e not in scheme:
            raise InputError(f"scheme missing uncovered element {e}")
        chosen = scheme[e]
        covering = sets_covering(system, e)
        if chosen not in covering:
            raise InputError(f"scheme sends element {e} to set {chosen} which does not contain it")
        for other in covering:
            if other != chosen:
                edges.add((other, chosen))
    return PreferenceGraph(system.num_sets, tuple(edges))


def find_cycle(graph: PreferenceGraph) -> list[SetId] | None:
    """First cycle found by depth-first search, or None if the graph is acyclic.

    The witness is a vertex sequence v_1..v_k with v_1 == v_k and every
    consecutive pair an edge, rotated to start at its smallest vertex id so
    reruns report the same cycle.
    """
    adj = graph.successors()
    # 0 = unvisited, 1 = on the current search path, 2 = finished
    color = [0] * graph.num_vertices
    path: list[SetId] = []
    for start in range(graph.num_vertices):
        if color[start]:
            continue
        color[start] = 1
        path.append(start)
        stack = [(start, iter(adj[start]))]
        while stack:
            vertex, successors = stack[-1]
            nxt = next(successors, None)
            if nxt is None:
                stack.pop()
                color[vertex] = 2
                path.pop()
                continue
            if color[nxt] == 1:
                cycle = path[path.index(nxt) :] + [nxt]
                return _rotate_to_smallest(cycle)
            if color[nxt] == 0:
                color[nxt] = 1
                path.append(nxt)
                stack.append((nxt, iter(adj[nxt])))
    return None


def _rotate_to_smallest(cycle: list[SetId]) -> list[SetId]:
    core = cycle[:-1]
    pivot = core.index(min(core))
    rotated = core[pivot:] + core[:pivot]
    return rotated + [rotated[0]]


def is_monotone_step(
    system: SetSystem, state: CoverState, scheme: AssignmentScheme
) -> tuple[bool, list[SetId] | None]:
    """Whether this step's preference graph is acyclic; witness cycle if not."""
    cycle = find_cycle(build_preference_graph(system, state, scheme))
    return (cycle is None, cycle)


def graph_to_dict(graph: PreferenceGraph) -> dict:
    """Dump format for debugging and the CLI: {"edges": [[u, v], ...]}."""
    return {"edges": [[u, v] for u, v in graph.edges]}
