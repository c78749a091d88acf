"""Online covering algorithms behind one uniform server-side interface.

Every algorithm exposes three operations:

* ``assignment_scheme(state)``: the full map uncovered element -> set that
  would be bought for it, computable on demand before any arrival;
* ``on_arrival(e, state)``: serve an uncovered arrival directly, returning
  the purchased set id (and updating internal state);
* ``observe_purchase(e, s)``: what the server learns after a priced buyer
  purchased s on element e. Covered arrivals are never observed.

``on_arrival`` must agree with the current assignment scheme and is
implemented here as "look up the choice, then observe it", so direct runs and
priced runs share one state-update path.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Callable

from .errors import InputError, InvariantViolationError, ProtocolViolationError
from .model import CoverState, ElementId, SetId, SetSystem, sets_covering


class OnlineAlgorithm(ABC):
    """Base class binding an algorithm to one set system."""

    name = "abstract"

    def __init__(self, system: SetSystem):
        self.system = system

    @abstractmethod
    def assignment_scheme(self, state: CoverState) -> dict[ElementId, SetId]:
        """Current choice for every uncovered element."""

    def choice_for(self, e: ElementId, state: CoverState) -> SetId:
        """Choice for one element; must equal assignment_scheme(state)[e]."""
        scheme = self.assignment_scheme(state)
        if e not in scheme:
            raise InputError(f"element {e} is covered or out of range")
        return scheme[e]

    def on_arrival(self, e: ElementId, state: CoverState) -> SetId:
        if state.is_covered(e):
            raise InputError(f"element {e} is already covered; covered arrivals are no-ops")
        chosen = self.choice_for(e, state)
        self.observe_purchase(e, chosen)
        return chosen

    def observe_purchase(self, e: ElementId, purchased: SetId) -> None:
        return None


class Greedy(OnlineAlgorithm):
    """Buy the cheapest covering set, ties to the smallest set id.

    Equivalent to posting no surcharges at all, so its scheme is induced by
    the base costs and is always monotone.
    """

    name = "greedy"

    def choice_for(self, e: ElementId, state: CoverState) -> SetId:
        candidates = sets_covering(self.system, e)
        if not candidates:
            raise InputError(f"element {e} lies in no set")
        return min(candidates, key=lambda sid: (self.system.sets[sid].cost, sid))

    def assignment_scheme(self, state: CoverState) -> dict[ElementId, SetId]:
        return {e: self.choice_for(e, state) for e in state.uncovered()}


class PrimalDual(OnlineAlgorithm):
    """Raise the arriving element's dual until some covering set goes tight.

    Keeps one dual value per element, all starting at 0. A set's slack is its
    cost minus the duals of its members; feasibility (slack >= 0 everywhere)
    is preserved because each raise is by the minimum slack among the sets
    containing the arriving element. The purchased set is the smallest-id
    tight one, equivalently the lexicographic minimum by (slack, id) before
    the raise. Its total cost never exceeds frequency times the offline
    optimum of the requested elements.
    """

    name = "primal-dual"

    def __init__(self, system: SetSystem):
        super().__init__(system)
        self.duals: dict[ElementId, Fraction] = {}

    def dual_sum(self, sid: SetId) -> Fraction:
        self.system.check_set_id(sid)
        return sum(
            (self.duals.get(e, Fraction(0)) for e in self.system.sets[sid].members),
            Fraction(0),
        )

    def slack(self, sid: SetId) -> Fraction:
        return self.system.sets[sid].cost - self.dual_sum(sid)

    def _all_slacks(self) -> list[Fraction]:
        slacks = [cover_set.cost for cover_set in self.system.sets]
        for e, y in self.duals.items():
            if y == 0:
                continue
            for sid in sets_covering(self.system, e):
                slacks[sid] -= y
        return slacks

    def choice_for(self, e: ElementId, state: CoverState) -> SetId:
        candidates = sets_covering(self.system, e)
        if not candidates:
            raise InputError(f"element {e} lies in no set")
        return min(candidates, key=lambda sid: (self.slack(sid), sid))

    def assignment_scheme(self, state: CoverState) -> dict[ElementId, SetId]:
        slacks = self._all_slacks()
        scheme: dict[ElementId, SetId] = {}
        for e in state.uncovered():
            candidates = sets_covering(self.system, e)
            if not candidates:
                raise InputError(f"element {e} lies in no set")
            scheme[e] = min(candidates, key=lambda sid: (slacks[sid], sid))
        return scheme

    def observe_purchase(self, e: ElementId, purchased: SetId) -> None:
        candidates = sets_covering(self.system, e)
        if purchased not in candidates:
            raise ProtocolViolationError(
                f"set {purchased} does not cover element {e}"
            )
        raise_by = min(self.slack(sid) for sid in candidates)
        if raise_by < 0:
            raise InvariantViolationError("dual slack went negative")
        if raise_by:
            self.duals[e] = self.duals.get(e, Fraction(0)) + raise_by
        if self.slack(purchased) != 0:
            raise InvariantViolationError(
                f"purchased set {purchased} is not tight after the dual raise"
            )

    def dual_feasible(self) -> bool:
        """True iff no set's dual sum exceeds its cost."""
        return all(s >= 0 for s in self._all_slacks())


class SchemeAlgorithm(OnlineAlgorithm):
    """Adapter running an arbitrary assignment rule, monotone or not.

    The rule is a callable (system, state) -> scheme dict. Useful for
    scripted behavior and deliberately broken negative controls in tests.
    """

    name = "scheme"

    def __init__(
        self,
        system: SetSystem,
        scheme_fn: Callable[[SetSystem, CoverState], dict[ElementId, SetId]],
    ):
        super().__init__(system)
        self._scheme_fn = scheme_fn

    def assignment_scheme(self, state: CoverState) -> dict[ElementId, SetId]:
        return dict(self._scheme_fn(self.system, state))


ALGORITHMS: dict[str, type[OnlineAlgorithm]] = {
    Greedy.name: Greedy,
    PrimalDual.name: PrimalDual,
}
