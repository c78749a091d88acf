"""Simulation engines: direct purchases versus posted-price purchases.

``run_direct`` lets the algorithm buy sets itself. ``run_priced`` instead
posts a price table before every arrival (base cost plus surcharge from the
longest-path pricer), has a greedy buyer take the unique cheapest covering
set, and only then tells the algorithm what was bought. Prices are recomputed
from scratch before each arrival; the pricing step never sees the upcoming
request (``compute_step_pricing`` takes no request argument), which is what
makes the posted prices honest.

Surcharges are not real costs: a transcript's total is the sum of base costs
of the purchased sets, and the per-event price is diagnostic. For a monotone
algorithm the two engines produce identical purchase sequences.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algorithms import OnlineAlgorithm
from .assignment import AssignmentScheme, PreferenceGraph, build_preference_graph, find_cycle
from .errors import InputError, InvariantViolationError, ProtocolViolationError, UnpriceableError
from .model import CoverState, ElementId, Instance, SetId, cost_of, sets_covering, validate
from .pathprice import PricingScheme, path_price


@dataclass(frozen=True)
class TranscriptEvent:
    """One served request: a purchase (set id and price paid) or a no-op."""

    request: ElementId
    purchased: SetId | None
    price_paid: Fraction | None


@dataclass(frozen=True)
class Transcript:
    events: tuple[TranscriptEvent, ...]
    total_cost: Fraction

    @property
    def purchased_sets(self) -> tuple[SetId, ...]:
        return tuple(ev.purchased for ev in self.events if ev.purchased is not None)


@dataclass(frozen=True)
class StepPricing:
    """Everything the server posts before one arrival."""

    scheme: AssignmentScheme
    graph: PreferenceGraph
    pricing: PricingScheme


# Test/diagnostic hook: called with (request_index, state, step) right after
# prices are posted and before the arrival is processed.
PricingHook = Callable[[int, CoverState, StepPricing], None]


def compute_step_pricing(algorithm: OnlineAlgorithm, state: CoverState) -> StepPricing:
    """Post prices for the current state. Deliberately takes no request."""
    scheme = algorithm.assignment_scheme(state)
    graph = build_preference_graph(algorithm.system, state, scheme)
    cycle = find_cycle(graph)
    if cycle is not None:
        raise UnpriceableError(cycle)
    costs = tuple(cover_set.cost for cover_set in algorithm.system.sets)
    return StepPricing(scheme=scheme, graph=graph, pricing=path_price(graph, costs))


def _check_run_inputs(algorithm: OnlineAlgorithm, instance: Instance) -> None:
    if algorithm.system != instance.system:
        raise InputError("algorithm is bound to a different set system than the instance")
    problems = validate(instance)
    if problems:
        raise InputError("invalid instance: " + "; ".join(problems))


def serve_arrival(algorithm: OnlineAlgorithm, state: CoverState, e: ElementId) -> TranscriptEvent:
    """Direct-protocol service of one uncovered arrival."""
    purchased = algorithm.on_arrival(e, state)
    system = algorithm.system
    if not 0 <= purchased < system.num_sets or e not in system.sets[purchased].members:
        raise ProtocolViolationError(
            f"algorithm bought set {purchased} which does not cover element {e}"
        )
    state.purchase(purchased)
    return TranscriptEvent(e, purchased, system.sets[purchased].cost)


def run_direct(algorithm: OnlineAlgorithm, instance: Instance) -> Transcript:
    """Serve the request sequence with the algorithm buying sets itself."""
    _check_run_inputs(algorithm, instance)
    state = CoverState(instance.system)
    events: list[TranscriptEvent] = []
    for e in instance.requests:
        if state.is_covered(e):
            events.append(TranscriptEvent(e, None, None))
        else:
            events.append(serve_arrival(algorithm, state, e))
    return Transcript(tuple(events), cost_of(instance.system, state.purchased))


def run_priced(
    algorithm: OnlineAlgorithm,
    instance: Instance,
    on_pricing: PricingHook | None = None,
) -> Transcript:
    """Serve the request sequence through posted prices and a greedy buyer.

    Raises UnpriceableError (with the request index and witness cycle) the
    first time the algorithm's scheme is not monotone. A price table whose
    minimum over some arriving element's sets is not unique raises
    InvariantViolationError: the pricer guarantees uniqueness, so that would
    signal a pricing bug, not a property of the input.
    """
    _check_run_inputs(algorithm, instance)
    system = instance.system
    state = CoverState(system)
    events: list[TranscriptEvent] = []
    for index, e in enumerate(instance.requests):
        try:
            step = compute_step_pricing(algorithm, state)
        except UnpriceableError as exc:
            raise UnpriceableError(exc.cycle, request_index=index) from None
        if on_pricing is not None:
            on_pricing(index, state, step)
        if state.is_covered(e):
            events.append(TranscriptEvent(e, None, None))
            continue
        candidates = sets_covering(system, e)
        prices = step.pricing.price
        cheapest = min(prices[sid] for sid in candidates)
        buyers = [sid for sid in candidates if prices[sid] == cheapest]
        if len(buyers) != 1:
            raise InvariantViolationError(
                f"posted prices give element {e} {len(buyers)} cheapest sets {buyers}"
            )
        purchased = buyers[0]
        state.purchase(purchased)
        algorithm.observe_purchase(e, purchased)
        events.append(TranscriptEvent(e, purchased, prices[purchased]))
    return Transcript(tuple(events), cost_of(system, state.purchased))


def transcripts_equal(a: Transcript, b: Transcript) -> bool:
    """True iff per-request actions match exactly (prices are diagnostic)."""
    if len(a.events) != len(b.events):
        return False
    return all(
        ea.request == eb.request and ea.purchased == eb.purchased
        for ea, eb in zip(a.events, b.events)
    )


def transcript_json_lines(transcript: Transcript) -> list[str]:
    """One JSON line per event plus a final summary line with the total cost."""
    lines = []
    for ev in transcript.events:
        if ev.purchased is None:
            action: object = "noop"
        else:
            action = {"buy": ev.purchased, "price": str(ev.price_paid)}
        lines.append(json.dumps({"request": ev.request, "action": action}))
    lines.append(json.dumps({"total_cost": str(transcript.total_cost)}))
    return lines
