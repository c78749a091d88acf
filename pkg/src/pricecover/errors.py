"""Exception types shared across the package."""

from __future__ import annotations


class InputError(ValueError):
    """Malformed instance data, ids out of range, or bad parameters."""


class CapacityError(RuntimeError):
    """Exact optimum search would exceed the configured size or node budget."""


class ProtocolViolationError(RuntimeError):
    """An algorithm purchased a set that does not cover the arriving element."""


class InvariantViolationError(RuntimeError):
    """Internal consistency failure, e.g. a posted price table whose minimum
    over some element's sets is not unique, or duals desynced from purchases."""


class UnpriceableError(RuntimeError):
    """An assignment step whose preference graph contains a cycle.

    No posted prices can reproduce such a step with a greedy buyer. Carries
    the offending cycle as a vertex sequence (first == last) and, when raised
    by the priced engine, the index of the request being served.
    """

    def __init__(self, cycle, request_index=None):
        self.cycle = list(cycle)
        self.request_index = request_index
        arrow = " -> ".join(str(v) for v in self.cycle)
        if request_index is None:
            msg = f"not monotone: preference cycle {arrow}"
        else:
            msg = f"unpriceable step at request index {request_index}: preference cycle {arrow}"
        super().__init__(msg)
