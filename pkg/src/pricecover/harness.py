"""Reporting layer the CLI sits on: run summaries, the fuzz campaign, and
adversary reports. Everything here is plain library code so tests can drive
it without going through argument parsing."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algorithms import ALGORITHMS, PrimalDual
from .engine import (
    StepPricing,
    Transcript,
    run_direct,
    run_priced,
    transcripts_equal,
)
from .errors import InputError, UnpriceableError
from .generators import AdversaryOutcome, binary_adversary, random_instance
from .model import CoverState, Instance, SetId, frequency, save_instance
from .optimum import optimal_cover_cost
from .pathprice import longest_path_oracle

FUZZ_CHECKS = ("mimicry", "cost-bound", "acyclic-steps", "label-oracle")


@dataclass(frozen=True)
class RunSummary:
    algorithm: str
    engine: str
    transcript: Transcript
    opt_cost: Fraction
    opt_witness: frozenset[SetId]
    ratio: Fraction | None
    frequency: int


def summarize_run(instance: Instance, algorithm_name: str, engine: str) -> RunSummary:
    """Run one algorithm on one instance and compare against the optimum."""
    try:
        factory = ALGORITHMS[algorithm_name]
    except KeyError:
        raise InputError(f"unknown algorithm {algorithm_name!r}") from None
    if engine == "direct":
        transcript = run_direct(factory(instance.system), instance)
    elif engine == "priced":
        transcript = run_priced(factory(instance.system), instance)
    else:
        raise InputError(f"unknown engine {engine!r}")
    opt_cost, witness = optimal_cover_cost(instance.system, set(instance.requests))
    ratio = None if opt_cost == 0 else transcript.total_cost / opt_cost
    return RunSummary(
        algorithm=algorithm_name,
        engine=engine,
        transcript=transcript,
        opt_cost=opt_cost,
        opt_witness=witness,
        ratio=ratio,
        frequency=frequency(instance.system),
    )


@dataclass(frozen=True)
class TrialFailure:
    trial: int
    seed: int
    check: str
    detail: str
    instance: Instance


@dataclass
class FuzzReport:
    trials: int
    seed: int
    check_passes: dict[str, int]
    failures: list[TrialFailure] = field(default_factory=list)
    counterexample_path: str | None = None

    @property
    def all_ok(self) -> bool:
        return not self.failures


def _step_issues(step: StepPricing) -> list[str]:
    """Pricing-step properties beyond acyclicity, empty when all hold."""
    issues = []
    oracle = longest_path_oracle(step.graph)
    if step.pricing.labels != oracle:
        issues.append(f"labels {step.pricing.labels} != longest-path depths {oracle}")
    for u, v in step.graph.edges:
        if not step.pricing.price[u] > step.pricing.price[v]:
            issues.append(f"edge ({u}, {v}) but price[{u}] <= price[{v}]")
    return issues


def fuzz_campaign(
    trials: int,
    seed: int,
    max_universe: int = 16,
    max_sets: int = 16,
    max_frequency: int = 6,
    algorithm_factory=PrimalDual,
    out_dir: str | None = None,
) -> FuzzReport:
    """Random-instance campaign over the dual-route checks.

    Per trial: the direct and priced engines must produce identical purchase
    sequences, the total cost must stay within frequency times the exact
    optimum, every step's preference graph must be acyclic, and every posted
    pricing must carry longest-path labels (checked against the independent
    oracle) ordered strictly along the preference edges. Trials are keyed by
    index and fully reproducible from the campaign seed. On failure the first
    counterexample instance is saved as a replayable JSON file.
    """
    if trials < 1:
        raise InputError(f"need trials >= 1, got {trials}")
    master = random.Random(seed)
    trial_seeds = [master.randrange(2**62) for _ in range(trials)]
    passes = {check: 0 for check in FUZZ_CHECKS}
    failures: list[TrialFailure] = []

    for index, trial_seed in enumerate(trial_seeds):
        rng = random.Random(trial_seed)
        instance = random_instance(
            n=rng.randint(2, max_universe),
            m=rng.randint(2, max_sets),
            f_max=rng.randint(1, max_frequency),
            seed=rng.randrange(2**62),
        )
        system = instance.system
        trial_failures: list[tuple[str, str]] = []

        direct = run_direct(algorithm_factory(system), instance)
        opt_cost, _ = optimal_cover_cost(system, set(instance.requests))
        bound = frequency(system) * opt_cost
        if direct.total_cost <= bound:
            passes["cost-bound"] += 1
        else:
            trial_failures.append(
                ("cost-bound", f"cost {direct.total_cost} exceeds f*OPT = {bound}")
            )

        pricing_issues: list[str] = []

        def check_step(step_index: int, state: CoverState, step: StepPricing) -> None:
            for issue in _step_issues(step):
                pricing_issues.append(f"step {step_index}: {issue}")

        priced: Transcript | None = None
        try:
            priced = run_priced(algorithm_factory(system), instance, on_pricing=check_step)
            passes["acyclic-steps"] += 1
        except UnpriceableError as exc:
            trial_failures.append(("acyclic-steps", str(exc)))
        if pricing_issues:
            trial_failures.append(("label-oracle", "; ".join(pricing_issues)))
        else:
            passes["label-oracle"] += 1
        if priced is not None and transcripts_equal(direct, priced):
            passes["mimicry"] += 1
        else:
            detail = "priced run aborted" if priced is None else (
                f"direct bought {direct.purchased_sets}, priced bought {priced.purchased_sets}"
            )
            trial_failures.append(("mimicry", detail))

        for check, detail in trial_failures:
            failures.append(TrialFailure(index, trial_seed, check, detail, instance))

    report = FuzzReport(trials=trials, seed=seed, check_passes=passes, failures=failures)
    if failures and out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
        first = failures[0]
        path = os.path.join(out_dir, f"counterexample-trial-{first.trial}.json")
        save_instance(first.instance, path)
        report.counterexample_path = path
    return report


def format_fuzz_report(report: FuzzReport) -> list[str]:
    lines = [f"fuzz: {report.trials} trials, seed {report.seed}"]
    for check in FUZZ_CHECKS:
        lines.append(f"  check {check}: {report.check_passes[check]}/{report.trials}")
    if report.failures:
        first = report.failures[0]
        lines.append(
            f"  FIRST FAILURE trial {first.trial} (seed {first.seed}) "
            f"check {first.check}: {first.detail}"
        )
        if report.counterexample_path:
            lines.append(f"  counterexample saved to {report.counterexample_path}")
    else:
        lines.append("  all checks passed")
    return lines


@dataclass(frozen=True)
class AdversaryReport:
    k: int
    algorithm: str
    outcome: AdversaryOutcome
    oracle_opt: Fraction
    ratio: Fraction

    @property
    def matches_frequency(self) -> bool:
        return self.ratio == self.k


def adversary_report(k: int, algorithm_name: str) -> AdversaryReport:
    """Drive the counting adversary and verify its claimed optimum."""
    try:
        factory = ALGORITHMS[algorithm_name]
    except KeyError:
        raise InputError(f"unknown algorithm {algorithm_name!r}") from None
    outcome = binary_adversary(k, factory)
    oracle_opt, _ = optimal_cover_cost(
        outcome.instance.system, set(outcome.instance.requests)
    )
    ratio = outcome.transcript.total_cost / oracle_opt
    return AdversaryReport(
        k=k, algorithm=algorithm_name, outcome=outcome, oracle_opt=oracle_opt, ratio=ratio
    )
