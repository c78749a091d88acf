"""Online set cover served directly or through dynamically posted prices.

The package runs online covering algorithms (cheapest-set greedy and a
frequency-competitive primal-dual), certifies each step's assignment scheme
as monotone via its preference graph, converts monotone steps into posted
prices with a longest-path pricer so a greedy buyer reproduces the
algorithm's purchases, and verifies competitive ratios against an exact
offline optimum. All arithmetic is exact rationals.
"""

from .algorithms import ALGORITHMS, Greedy, OnlineAlgorithm, PrimalDual, SchemeAlgorithm
from .assignment import (
    AssignmentScheme,
    PreferenceGraph,
    build_preference_graph,
    find_cycle,
    graph_to_dict,
    is_monotone_step,
)
from .engine import (
    StepPricing,
    Transcript,
    TranscriptEvent,
    compute_step_pricing,
    run_direct,
    run_priced,
    serve_arrival,
    transcript_json_lines,
    transcripts_equal,
)
from .errors import (
    CapacityError,
    InputError,
    InvariantViolationError,
    ProtocolViolationError,
    UnpriceableError,
)
from .generators import AdversaryOutcome, binary_adversary, greedy_killer, random_instance
from .harness import (
    FUZZ_CHECKS,
    AdversaryReport,
    FuzzReport,
    RunSummary,
    TrialFailure,
    adversary_report,
    format_fuzz_report,
    fuzz_campaign,
    summarize_run,
)
from .model import (
    CoverSet,
    CoverState,
    ElementId,
    Instance,
    SetId,
    SetSystem,
    cost_of,
    frequency,
    instance_from_dict,
    instance_to_dict,
    load_instance,
    save_instance,
    sets_covering,
    validate,
)
from .optimum import enumerate_optimum, optimal_cover_cost
from .pathprice import (
    LengthLabels,
    PricingScheme,
    longest_path_oracle,
    next_path,
    path_price,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "FUZZ_CHECKS",
    "AdversaryOutcome",
    "AdversaryReport",
    "AssignmentScheme",
    "CapacityError",
    "CoverSet",
    "CoverState",
    "ElementId",
    "FuzzReport",
    "Greedy",
    "InputError",
    "Instance",
    "InvariantViolationError",
    "LengthLabels",
    "OnlineAlgorithm",
    "PreferenceGraph",
    "PricingScheme",
    "PrimalDual",
    "ProtocolViolationError",
    "RunSummary",
    "SchemeAlgorithm",
    "SetId",
    "SetSystem",
    "StepPricing",
    "Transcript",
    "TranscriptEvent",
    "TrialFailure",
    "UnpriceableError",
    "adversary_report",
    "binary_adversary",
    "build_preference_graph",
    "compute_step_pricing",
    "cost_of",
    "enumerate_optimum",
    "find_cycle",
    "format_fuzz_report",
    "frequency",
    "fuzz_campaign",
    "graph_to_dict",
    "greedy_killer",
    "instance_from_dict",
    "instance_to_dict",
    "is_monotone_step",
    "load_instance",
    "longest_path_oracle",
    "next_path",
    "optimal_cover_cost",
    "path_price",
    "random_instance",
    "run_direct",
    "run_priced",
    "save_instance",
    "serve_arrival",
    "sets_covering",
    "summarize_run",
    "transcript_json_lines",
    "transcripts_equal",
    "validate",
]
