"""Exact offline optimum for covering a target subset of elements.

The primary method is a dynamic program over the bitmask of covered targets
(state = subset already covered, transition = add one set containing the
lowest uncovered target). It is exact and fast up to DP_TARGET_LIMIT targets.
Beyond that, an exact branch-and-bound takes over: it seeds an upper bound
with a cost-effectiveness greedy pass, always branches on the uncovered
target with the fewest candidate sets, and prunes with the weak but sound
bound "spent so far + cheapest way to cover any single uncovered target".
The search is capped by a node budget; exceeding it raises CapacityError
rather than returning an inexact answer.

Costs are scaled to integers by the common denominator first, so every
comparison on either path is exact. A naive enumeration over all 2^m
subfamilies backs both methods in the test suite.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .errors import CapacityError, InputError
from .model import ElementId, SetId, SetSystem, sets_covering

DP_TARGET_LIMIT = 16
ENUMERATION_SET_LIMIT = 20
DEFAULT_NODE_BUDGET = 200_000


def _checked_targets(system: SetSystem, targets: Iterable[ElementId]) -> list[ElementId]:
    out = sorted(set(targets))
    for t in out:
        system.check_element(t)
        if not sets_covering(system, t):
            raise InputError(f"target element {t} lies in no set")
    return out


def _scaled_costs(system: SetSystem) -> tuple[int, list[int]]:
    denom = math.lcm(*(cover_set.cost.denominator for cover_set in system.sets)) if system.sets else 1
    return denom, [int(cover_set.cost * denom) for cover_set in system.sets]


def _target_masks(system: SetSystem, targets: list[ElementId]) -> list[int]:
    position = {t: i for i, t in enumerate(targets)}
    masks = []
    for cover_set in system.sets:
        mask = 0
        for e in cover_set.members:
            if e in position:
                mask |= 1 << position[e]
        masks.append(mask)
    return masks


def optimal_cover_cost(
    system: SetSystem,
    targets: Iterable[ElementId],
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[Fraction, frozenset[SetId]]:
    """Minimum total cost of a subfamily covering all targets, with witness.

    Every target must lie in at least one set. Instances with at most
    DP_TARGET_LIMIT distinct targets run the bitmask DP; larger ones run the
    budgeted branch-and-bound and raise CapacityError if the budget runs out.
    """
    target_list = _checked_targets(system, targets)
    if not target_list:
        return Fraction(0), frozenset()
    if len(target_list) <= DP_TARGET_LIMIT:
        return _dp_optimum(system, target_list)
    return _bnb_optimum(system, target_list, node_budget)


def _dp_optimum(system: SetSystem, targets: list[ElementId]) -> tuple[Fraction, frozenset[SetId]]:
    denom, icosts = _scaled_costs(system)
    masks = _target_masks(system, targets)
    k = len(targets)
    full = (1 << k) - 1
    candidates = [
        [sid for sid in sets_covering(system, t)] for t in targets
    ]
    best: list[int | None] = [None] * (full + 1)
    parent: list[tuple[int, SetId] | None] = [None] * (full + 1)
    best[0] = 0
    for mask in range(full):
        cost_here = best[mask]
        if cost_here is None:
            continue
        lowest_unset = (~mask & (mask + 1)).bit_length() - 1
        for sid in candidates[lowest_unset]:
            new_mask = mask | masks[sid]
            new_cost = cost_here + icosts[sid]
            if best[new_mask] is None or new_cost < best[new_mask]:
                best[new_mask] = new_cost
                parent[new_mask] = (mask, sid)
    assert best[full] is not None
    witness = set()
    mask = full
    while mask:
        prev, sid = parent[mask]
        witness.add(sid)
        mask = prev
    return Fraction(best[full], denom), frozenset(witness)


def _greedy_upper_bound(
    icosts: list[int], masks: list[int], full: int
) -> tuple[int, frozenset[SetId]]:
    # Cost-effectiveness greedy: most newly covered targets per unit cost,
    # compared by cross-multiplication to stay exact.
    covered = 0
    chosen: set[SetId] = set()
    total = 0
    while covered != full:
        pick = None
        pick_new = 0
        for sid, mask in enumerate(masks):
            new = (mask | covered) ^ covered
            gain = new.bit_count()
            if gain == 0:
                continue
            if pick is None or gain * icosts[pick] > pick_new * icosts[sid] or (
                gain * icosts[pick] == pick_new * icosts[sid] and icosts[sid] < icosts[pick]
            ):
                pick, pick_new = sid, gain
        covered |= masks[pick]
        chosen.add(pick)
        total += icosts[pick]
    return total, frozenset(chosen)


def _bnb_optimum(
    system: SetSystem, targets: list[ElementId], node_budget: int
) -> tuple[Fraction, frozenset[SetId]]:
    denom, icosts = _scaled_costs(system)
    masks = _target_masks(system, targets)
    k = len(targets)
    full = (1 << k) - 1
    candidates = [
        sorted(sets_covering(system, t), key=lambda sid: (icosts[sid], sid)) for t in targets
    ]
    cheapest_cover = [icosts[options[0]] for options in candidates]

    best_cost, best_witness = _greedy_upper_bound(icosts, masks, full)
    nodes = 0
    stack: list[tuple[int, int, tuple[SetId, ...]]] = [(0, 0, ())]
    while stack:
        covered, spent, chosen = stack.pop()
        nodes += 1
        if nodes > node_budget:
            raise CapacityError(f"optimum search exceeded the node budget of {node_budget}")
        if covered == full:
            if spent < best_cost:
                best_cost, best_witness = spent, frozenset(chosen)
            continue
        remaining_floor = 0
        branch_options = None
        for i in range(k):
            if covered & (1 << i):
                continue
            if cheapest_cover[i] > remaining_floor:
                remaining_floor = cheapest_cover[i]
            if branch_options is None or len(candidates[i]) < len(branch_options):
                branch_options = candidates[i]
        if spent + remaining_floor >= best_cost:
            continue
        # Push in reverse so the cheapest candidate is explored first.
        for sid in reversed(branch_options):
            stack.append((covered | masks[sid], spent + icosts[sid], chosen + (sid,)))
    return Fraction(best_cost, denom), best_witness


def enumerate_optimum(
    system: SetSystem, targets: Iterable[ElementId]
) -> tuple[Fraction, frozenset[SetId]]:
    """Try every one of the 2^m subfamilies. Cross-check only; m is capped."""
    target_list = _checked_targets(system, targets)
    m = system.num_sets
    if m > ENUMERATION_SET_LIMIT:
        raise CapacityError(f"enumeration over 2^{m} subfamilies refused")
    if not target_list:
        return Fraction(0), frozenset()
    denom, icosts = _scaled_costs(system)
    masks = _target_masks(system, target_list)
    full = (1 << len(target_list)) - 1
    best_cost: int | None = None
    best_family = 0
    for family in range(1 << m):
        covered = 0
        spent = 0
        for sid in range(m):
            if family & (1 << sid):
                covered |= masks[sid]
                spent += icosts[sid]
        if covered == full and (best_cost is None or spent < best_cost):
            best_cost, best_family = spent, family
    assert best_cost is not None
    witness = frozenset(sid for sid in range(m) if best_family & (1 << sid))
    return Fraction(best_cost, denom), witness
