"""Shared builders, brute-force oracles, and negative-control stubs."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import hypothesis.strategies as st

import pricecover as pc


def system_of(universe_size, sets):
    """sets: iterable of (members, cost)."""
    return pc.SetSystem(
        universe_size,
        tuple(pc.CoverSet(frozenset(members), Fraction(cost)) for members, cost in sets),
    )


def gadget_three():
    # Elements a=0, b=1, c=2; sets A={a,c}, B={b,c}, C={a,b}, unit costs.
    return system_of(3, [({0, 2}, 1), ({1, 2}, 1), ({0, 1}, 1)])


def gadget_three_scheme():
    # a -> C, b -> C, c -> A
    return {0: 2, 1: 2, 2: 0}


def gadget_two(cost_a=1, cost_b=1):
    # Two elements, each in both sets.
    return system_of(2, [({0, 1}, cost_a), ({0, 1}, cost_b)])


def random_valid_system(rng, max_n=8, max_m=6, max_f=4):
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_m)
    membership = [[] for _ in range(m)]
    for e in range(n):
        for sid in rng.sample(range(m), rng.randint(1, min(max_f, m))):
            membership[sid].append(e)
    kept = [sid for sid in range(m) if membership[sid]]
    return system_of(
        n,
        [(membership[sid], Fraction(rng.randint(1, 12), rng.randint(1, 4))) for sid in kept],
    )


def scheme_from_ranks(system, state, ranks):
    """Scheme induced by a strict price ordering (rank per set id)."""
    return {
        e: min(pc.sets_covering(system, e), key=lambda sid: ranks[sid])
        for e in state.uncovered()
    }


def all_schemes(system, state):
    """Every total assignment of uncovered elements to covering sets."""
    uncovered = state.uncovered()
    options = [pc.sets_covering(system, e) for e in uncovered]
    for combo in product(*options):
        yield dict(zip(uncovered, combo))


def enumerate_paths(graph):
    """All directed paths with at least one edge, as vertex tuples."""
    adj = graph.successors()
    paths = []

    def extend(path):
        for w in adj[path[-1]]:
            nxt = path + (w,)
            paths.append(nxt)
            extend(nxt)

    for v in range(graph.num_vertices):
        extend((v,))
    return paths


def brute_next_path(graph, labels):
    """Exhaustive reference for next_path on tiny graphs."""
    paths = enumerate_paths(graph)

    def value(path):
        return len(path) + labels.get(path[-1], 0)

    top = max(value(p) for p in paths)
    return list(min(p for p in paths if value(p) == top))


def random_dag(rng, max_vertices=10, edge_prob=None):
    v = rng.randint(1, max_vertices)
    if edge_prob is None:
        edge_prob = rng.uniform(0.05, 0.5)
    order = list(range(v))
    rng.shuffle(order)
    edges = [
        (order[i], order[j])
        for i in range(v)
        for j in range(i + 1, v)
        if rng.random() < edge_prob
    ]
    return pc.PreferenceGraph(v, tuple(edges))


def crossed_pair_scheme(system, state):
    """Greedy filler, except the first two elements sharing two sets are
    assigned to opposite shared sets, creating a 2-cycle whenever one exists."""
    uncovered = state.uncovered()
    scheme = {
        e: min(pc.sets_covering(system, e), key=lambda sid: (system.sets[sid].cost, sid))
        for e in uncovered
    }
    for i, first in enumerate(uncovered):
        for second in uncovered[i + 1 :]:
            common = sorted(
                set(pc.sets_covering(system, first)) & set(pc.sets_covering(system, second))
            )
            if len(common) >= 2:
                scheme[first] = common[0]
                scheme[second] = common[1]
                return scheme
    return scheme


def crossed_pair_stub(system):
    return pc.SchemeAlgorithm(system, crossed_pair_scheme)


@st.composite
def small_systems(draw, max_elements=6, max_sets=5):
    n = draw(st.integers(1, max_elements))
    provisional = draw(st.integers(1, max_sets))
    placements = [
        draw(st.sets(st.integers(0, provisional - 1), min_size=1, max_size=provisional))
        for _ in range(n)
    ]
    membership: dict[int, list[int]] = {}
    for e, sids in enumerate(placements):
        for sid in sids:
            membership.setdefault(sid, []).append(e)
    kept = sorted(membership)
    return system_of(
        n,
        [
            (membership[sid], Fraction(draw(st.integers(1, 12)), draw(st.integers(1, 4))))
            for sid in kept
        ],
    )


@st.composite
def small_dags(draw, max_vertices=8):
    v = draw(st.integers(1, max_vertices))
    perm = draw(st.permutations(list(range(v))))
    pairs = [(perm[i], perm[j]) for i in range(v) for j in range(i + 1, v)]
    if not pairs:
        return pc.PreferenceGraph(v, ())
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return pc.PreferenceGraph(v, tuple(edges))
