import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings

import pricecover as pc
from helpers import (
    all_schemes,
    brute_next_path,
    gadget_three,
    gadget_three_scheme,
    gadget_two,
    random_dag,
    small_dags,
)


def three_gadget_graph():
    system = gadget_three()
    return pc.build_preference_graph(system, pc.CoverState(system), gadget_three_scheme())


def test_next_path_three_gadget():
    # B -> A -> C beats every other path: 3 vertices, endpoint label unset.
    assert pc.next_path(three_gadget_graph(), {}) == [1, 0, 2]


def test_next_path_single_edge():
    graph = pc.PreferenceGraph(2, ((0, 1),))
    assert pc.next_path(graph, {}) == [0, 1]


def test_next_path_prefers_labeled_endpoint():
    # Path u -> v with l(v)=5 scores 7, path x -> y with unset labels scores 2.
    graph = pc.PreferenceGraph(4, ((0, 1), (2, 3)))
    assert pc.next_path(graph, {1: 5}) == [0, 1]
    # and the path may stop at a big label instead of continuing
    chain = pc.PreferenceGraph(3, ((0, 1), (1, 2)))
    assert pc.next_path(chain, {1: 5}) == [0, 1]


def test_next_path_lexicographic_tie_break():
    # Two disjoint single edges tie at value 2; (0, 3) beats (1, 2).
    graph = pc.PreferenceGraph(4, ((1, 2), (0, 3)))
    assert pc.next_path(graph, {}) == [0, 3]
    # Diamond: both 3-vertex paths tie; [0, 1, 3] < [0, 2, 3].
    diamond = pc.PreferenceGraph(4, ((0, 1), (0, 2), (1, 3), (2, 3)))
    assert pc.next_path(diamond, {}) == [0, 1, 3]


def test_next_path_needs_edges():
    with pytest.raises(pc.InputError):
        pc.next_path(pc.PreferenceGraph(3, ()), {})


def test_next_path_rejects_cycles():
    with pytest.raises(pc.InputError):
        pc.next_path(pc.PreferenceGraph(2, ((0, 1), (1, 0))), {})


def test_next_path_matches_brute_force():
    rng = random.Random(31)
    checked = 0
    for _ in range(200):
        graph = random_dag(rng, max_vertices=7)
        if not graph.edges:
            continue
        labels = {
            v: rng.randint(0, 6)
            for v in range(graph.num_vertices)
            if rng.random() < 0.5
        }
        assert pc.next_path(graph, labels) == brute_next_path(graph, labels)
        checked += 1
    assert checked > 100


def test_path_price_three_gadget_unit_costs():
    pricing = pc.path_price(three_gadget_graph(), [Fraction(1)] * 3)
    assert pricing.labels == (1, 2, 0)
    assert pricing.surcharge == (1, 2, 0)
    assert pricing.price == (2, 3, 1)
    assert pricing.max_cost == 1


def test_path_price_edgeless():
    pricing = pc.path_price(pc.PreferenceGraph(2, ()), [Fraction(1), Fraction(3)])
    assert pricing.labels == (0, 0)
    assert pricing.surcharge == (2, 0)
    assert pricing.price == (3, 3)


def test_path_price_chain():
    graph = pc.PreferenceGraph(3, ((0, 1), (1, 2)))
    pricing = pc.path_price(graph, [Fraction(1)] * 3)
    assert pricing.price == (3, 2, 1)


def test_path_price_rejects_cycle_with_witness():
    with pytest.raises(pc.UnpriceableError, match="not monotone") as exc_info:
        pc.path_price(pc.PreferenceGraph(2, ((0, 1), (1, 0))), [Fraction(1)] * 2)
    assert exc_info.value.cycle == [0, 1, 0]


def test_path_price_checks_cost_count():
    with pytest.raises(pc.InputError):
        pc.path_price(pc.PreferenceGraph(2, ((0, 1),)), [Fraction(1)])


def test_longest_path_oracle_examples():
    assert pc.longest_path_oracle(three_gadget_graph()) == (1, 2, 0)
    assert pc.longest_path_oracle(pc.PreferenceGraph(3, ((0, 1), (1, 2)))) == (2, 1, 0)
    assert pc.longest_path_oracle(pc.PreferenceGraph(1, ())) == (0,)
    with pytest.raises(pc.InputError):
        pc.longest_path_oracle(pc.PreferenceGraph(2, ((0, 1), (1, 0))))


@given(graph=small_dags())
@settings(max_examples=150, deadline=None)
def test_labels_equal_longest_path_depths(graph):
    costs = [Fraction(1 + (v % 5), 2) for v in range(graph.num_vertices)]
    pricing = pc.path_price(graph, costs)
    assert pricing.labels == pc.longest_path_oracle(graph)


@given(graph=small_dags())
@settings(max_examples=150, deadline=None)
def test_pricing_invariants(graph):
    rng = random.Random(graph.num_vertices * 1000 + len(graph.edges))
    costs = [Fraction(rng.randint(1, 16), 4) for _ in range(graph.num_vertices)]
    pricing = pc.path_price(graph, costs)
    top = max(costs, default=Fraction(0))
    assert pricing.max_cost == top
    for v in range(graph.num_vertices):
        assert pricing.surcharge[v] >= 0
        assert pricing.price[v] == pricing.surcharge[v] + costs[v]
        assert pricing.price[v] == pricing.labels[v] + top
    for u, v in graph.edges:
        assert pricing.price[u] > pricing.price[v]


def _derived_scheme(system, state, prices):
    """What a cheapest-set buyer does under a posted price table; None when
    some element's cheapest covering set is not unique."""
    scheme = {}
    for e in state.uncovered():
        candidates = pc.sets_covering(system, e)
        cheapest = min(prices[sid] for sid in candidates)
        winners = [sid for sid in candidates if prices[sid] == cheapest]
        if len(winners) != 1:
            return None
        scheme[e] = winners[0]
    return scheme


@pytest.mark.parametrize("system", [gadget_two(), gadget_two(1, 3), gadget_three()])
def test_scheme_pricing_round_trip(system):
    # Monotone schemes are reproduced exactly by their computed prices;
    # cyclic schemes are reproduced by no strict price ordering at all.
    state = pc.CoverState(system)
    costs = [cover_set.cost for cover_set in system.sets]
    for scheme in all_schemes(system, state):
        graph = pc.build_preference_graph(system, state, scheme)
        cycle = pc.find_cycle(graph)
        if cycle is None:
            pricing = pc.path_price(graph, costs)
            assert _derived_scheme(system, state, pricing.price) == scheme
        else:
            with pytest.raises(pc.UnpriceableError):
                pc.path_price(graph, costs)
            for ordering in permutations(range(system.num_sets)):
                ranks = {sid: rank for rank, sid in enumerate(ordering)}
                assert _derived_scheme(system, state, ranks) != scheme
