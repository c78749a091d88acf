"""Set system instances, cover state, and the JSON instance format.

Costs are exact ``fractions.Fraction`` values on every arithmetic path.
Tightness tests and price comparisons elsewhere in the package rely on exact
equality, so nothing here ever converts to float.

Element ids are 0-based indices into the universe; set ids are 0-based
indices into the set family and double as the fixed tie-break ordering used
by the algorithms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import InputError

ElementId = int
SetId = int


@dataclass(frozen=True)
class CoverSet:
    """One purchasable set: its member elements and a positive cost."""

    members: frozenset[ElementId]
    cost: Fraction

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        object.__setattr__(self, "cost", Fraction(self.cost))


@dataclass(frozen=True)
class SetSystem:
    """Immutable universe plus set family.

    A covering index (element -> ascending list of set ids containing it) is
    built once at construction; members outside the universe are skipped here
    and reported by ``validate``.
    """

    universe_size: int
    sets: tuple[CoverSet, ...]
    _covering: tuple[tuple[SetId, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(self.sets))
        covering: list[list[SetId]] = [[] for _ in range(max(self.universe_size, 0))]
        for sid, cover_set in enumerate(self.sets):
            for e in cover_set.members:
                if 0 <= e < self.universe_size:
                    covering[e].append(sid)
        object.__setattr__(self, "_covering", tuple(tuple(ids) for ids in covering))

    @property
    def num_sets(self) -> int:
        return len(self.sets)

    def check_set_id(self, sid: SetId) -> None:
        if not 0 <= sid < len(self.sets):
            raise InputError(f"set id {sid} out of range for family of {len(self.sets)}")

    def check_element(self, e: ElementId) -> None:
        if not 0 <= e < self.universe_size:
            raise InputError(f"element {e} out of range for universe of {self.universe_size}")


@dataclass(frozen=True)
class Instance:
    """A set system together with the online request sequence."""

    system: SetSystem
    requests: tuple[ElementId, ...]

    def __post_init__(self):
        object.__setattr__(self, "requests", tuple(self.requests))


def sets_covering(system: SetSystem, e: ElementId) -> list[SetId]:
    """Ascending ids of the sets containing element e."""
    system.check_element(e)
    return list(system._covering[e])


def frequency(system: SetSystem) -> int:
    """Largest number of sets any one element lies in."""
    if system.universe_size <= 0:
        return 0
    return max(len(ids) for ids in system._covering)


def cost_of(system: SetSystem, family: Iterable[SetId]) -> Fraction:
    """Total cost of a family of set ids (duplicates counted once)."""
    total = Fraction(0)
    for sid in sorted(set(family)):
        system.check_set_id(sid)
        total += system.sets[sid].cost
    return total


def validate(instance: Instance) -> list[str]:
    """Check instance invariants; returns a list of violations, empty if ok."""
    system = instance.system
    problems: list[str] = []
    if system.universe_size < 0:
        problems.append(f"negative universe size {system.universe_size}")
    for sid, cover_set in enumerate(system.sets):
        if not cover_set.members:
            problems.append(f"set {sid}: empty member list")
        for e in sorted(cover_set.members):
            if not 0 <= e < system.universe_size:
                problems.append(f"set {sid}: member {e} out of range")
        if cover_set.cost <= 0:
            problems.append(f"set {sid}: nonpositive cost {cover_set.cost}")
    for e in range(system.universe_size):
        if not system._covering[e]:
            problems.append(f"element {e}: not covered by any set")
    for idx, e in enumerate(instance.requests):
        if not 0 <= e < system.universe_size:
            problems.append(f"request {idx}: element {e} out of range")
        elif not system._covering[e]:
            problems.append(f"request {idx}: uncoverable request for element {e}")
    return problems


class CoverState:
    """Purchased sets and covered elements of one run.

    Single-owner mutable: exactly one engine or driver updates it, algorithms
    only read it. Purchases are irrevocable and recorded in order.
    """

    def __init__(self, system: SetSystem):
        self.system = system
        self.purchased: list[SetId] = []
        self.covered: set[ElementId] = set()
        self._purchased_set: set[SetId] = set()

    def is_covered(self, e: ElementId) -> bool:
        self.system.check_element(e)
        return e in self.covered

    def uncovered(self) -> list[ElementId]:
        """Ascending ids of currently uncovered elements."""
        return [e for e in range(self.system.universe_size) if e not in self.covered]

    def purchase(self, sid: SetId) -> None:
        self.system.check_set_id(sid)
        if sid in self._purchased_set:
            raise InputError(f"set {sid} already purchased")
        self.purchased.append(sid)
        self._purchased_set.add(sid)
        self.covered.update(
            e for e in self.system.sets[sid].members if 0 <= e < self.system.universe_size
        )

    def total_cost(self) -> Fraction:
        return cost_of(self.system, self.purchased)


def instance_to_dict(instance: Instance) -> dict:
    return {
        "universe_size": instance.system.universe_size,
        "sets": [
            {
                "id": sid,
                "cost": str(cover_set.cost),
                "elements": sorted(cover_set.members),
            }
            for sid, cover_set in enumerate(instance.system.sets)
        ],
        "requests": list(instance.requests),
    }


def instance_from_dict(data: dict) -> Instance:
    """Parse the JSON instance format; malformed shapes raise InputError."""
    if not isinstance(data, dict):
        raise InputError("instance document must be a JSON object")
    try:
        universe_size = data["universe_size"]
        raw_sets = data["sets"]
        raw_requests = data["requests"]
    except KeyError as missing:
        raise InputError(f"instance document missing key {missing}") from None
    if not isinstance(universe_size, int) or isinstance(universe_size, bool):
        raise InputError("universe_size must be an integer")
    if not isinstance(raw_sets, list) or not isinstance(raw_requests, list):
        raise InputError("sets and requests must be arrays")

    entries = []
    for entry in raw_sets:
        if not isinstance(entry, dict):
            raise InputError("each set entry must be an object")
        try:
            sid, cost, elements = entry["id"], entry["cost"], entry["elements"]
        except KeyError as missing:
            raise InputError(f"set entry missing key {missing}") from None
        if not isinstance(sid, int) or isinstance(sid, bool):
            raise InputError("set id must be an integer")
        if not isinstance(elements, list) or any(
            not isinstance(e, int) or isinstance(e, bool) for e in elements
        ):
            raise InputError(f"set {sid}: elements must be an array of integers")
        try:
            parsed_cost = Fraction(str(cost))
        except (ValueError, ZeroDivisionError):
            raise InputError(f"set {sid}: unparseable cost {cost!r}") from None
        entries.append((sid, CoverSet(frozenset(elements), parsed_cost)))

    entries.sort(key=lambda pair: pair[0])
    ids = [sid for sid, _ in entries]
    if ids != list(range(len(ids))):
        raise InputError(f"set ids must be exactly 0..{len(ids) - 1}, got {ids}")
    if any(not isinstance(e, int) or isinstance(e, bool) for e in raw_requests):
        raise InputError("requests must be an array of integers")

    system = SetSystem(universe_size, tuple(cover_set for _, cover_set in entries))
    return Instance(system, tuple(raw_requests))


def save_instance(instance: Instance, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(instance_to_dict(instance), handle, indent=2)
        handle.write("\n")


def load_instance(path) -> Instance:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read instance file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None
    return instance_from_dict(data)
