"""Instance generators: worst cases for greedy, a counting adversary that
meets the frequency lower bound, and seeded random instances for fuzzing."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .engine import Transcript, TranscriptEvent, serve_arrival
from .errors import InputError
from .model import CoverSet, CoverState, Instance, SetSystem, cost_of


def greedy_killer(n: int, epsilon) -> Instance:
    """n unit-cost singletons plus one set of everything at cost 1 + epsilon.

    Requesting every element in order makes the cheapest-set rule pay n while
    buying the big set once would have cost 1 + epsilon, so its competitive
    ratio grows linearly with n even though every element lies in just 2 sets.
    """
    if n < 1:
        raise InputError(f"need n >= 1, got {n}")
    eps = Fraction(epsilon)
    if eps <= 0:
        raise InputError(f"need epsilon > 0, got {eps}")
    singletons = [CoverSet(frozenset({e}), Fraction(1)) for e in range(n)]
    everything = CoverSet(frozenset(range(n)), 1 + eps)
    system = SetSystem(n, tuple(singletons + [everything]))
    return Instance(system, tuple(range(n)))


@dataclass(frozen=True)
class AdversaryOutcome:
    """The instance an adaptive adversary ended up producing, the transcript
    it extracted, and the offline optimum of the requested elements."""

    instance: Instance
    transcript: Transcript
    opt_cost: Fraction


def _counting_system(k: int) -> SetSystem:
    # Element id v-1 stands for the binary number v in 1..2^k - 1 (number 0
    # has no set bits, so it cannot belong to any set and is not an element).
    top = (1 << k) - 1
    sets = []
    for bit in range(k):
        members = frozenset(v - 1 for v in range(1, top + 1) if (v >> bit) & 1)
        sets.append(CoverSet(members, Fraction(1)))
    return SetSystem(top, tuple(sets))


def binary_adversary(k: int, algorithm_factory) -> AdversaryOutcome:
    """Adaptive driver forcing any online algorithm to k purchases at OPT 1.

    Elements are the binary numbers 1..2^k - 1 (as ids shifted down by one);
    set i holds the numbers whose i-th bit is set, all at unit cost. The
    first request is the all-ones number; after the algorithm buys set i the
    next request clears bit i, and the game stops when the pending number
    would be 0. Every request is uncovered on arrival, so the algorithm pays
    k, while the set bought last contains every requested number and covers
    them alone: the offline optimum is 1 and the ratio meets the frequency.
    """
    if k < 1:
        raise InputError(f"need k >= 1, got {k}")
    system = _counting_system(k)
    algorithm = algorithm_factory(system)
    state = CoverState(system)
    requests: list[int] = []
    events: list[TranscriptEvent] = []
    current = (1 << k) - 1
    while current:
        e = current - 1
        requests.append(e)
        event = serve_arrival(algorithm, state, e)
        events.append(event)
        current &= ~(1 << event.purchased)
    transcript = Transcript(tuple(events), cost_of(system, state.purchased))
    return AdversaryOutcome(Instance(system, tuple(requests)), transcript, Fraction(1))


def random_instance(
    n: int,
    m: int,
    f_max: int,
    cost_range=(Fraction(1, 4), Fraction(4)),
    seed: int = 0,
    allow_repeats: bool = True,
) -> Instance:
    """Seeded random instance; identical parameters give identical output.

    Each element is placed in 1..f_max uniformly chosen sets (so the
    frequency never exceeds f_max), sets that end up empty are dropped and
    the ids compacted, and costs are drawn uniformly from an evenly spaced
    32-step rational grid over cost_range to keep them exact. Requests are a
    shuffled random subset of the elements, optionally with repeats mixed in.
    """
    if n < 1 or m < 1 or f_max < 1:
        raise InputError(f"counts must be positive, got n={n} m={m} f_max={f_max}")
    lo, hi = Fraction(cost_range[0]), Fraction(cost_range[1])
    if lo <= 0 or hi < lo:
        raise InputError(f"cost range must be positive and ordered, got ({lo}, {hi})")

    rng = random.Random(seed)
    membership: list[list[int]] = [[] for _ in range(m)]
    for e in range(n):
        placements = rng.sample(range(m), rng.randint(1, min(f_max, m)))
        for sid in placements:
            membership[sid].append(e)

    kept = [sid for sid in range(m) if membership[sid]]
    sets = tuple(
        CoverSet(frozenset(membership[sid]), lo + (hi - lo) * Fraction(rng.randint(0, 32), 32))
        for sid in kept
    )
    system = SetSystem(n, sets)

    subset = rng.sample(range(n), rng.randint(1, n))
    requests = list(subset)
    rng.shuffle(requests)
    if allow_repeats:
        extras = rng.randint(0, max(0, len(subset) // 3))
        requests.extend(rng.choice(subset) for _ in range(extras))
        rng.shuffle(requests)
    return Instance(system, tuple(requests))
