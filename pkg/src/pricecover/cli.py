"""Command line front end. Exit code 0 means every assertion passed."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .algorithms import ALGORITHMS
from .engine import compute_step_pricing, transcript_json_lines
from .errors import CapacityError, InputError, InvariantViolationError, ProtocolViolationError, UnpriceableError
from .generators import greedy_killer, random_instance
from .harness import adversary_report, format_fuzz_report, fuzz_campaign, summarize_run
from .model import CoverState, instance_to_dict, load_instance, save_instance, validate
from .optimum import optimal_cover_cost


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}") from None


def _load_checked(path):
    instance = load_instance(path)
    problems = validate(instance)
    if problems:
        raise InputError(f"invalid instance {path}: " + "; ".join(problems))
    return instance


def _ratio_fields(ratio):
    if ratio is None:
        return {"ratio": "n/a", "ratio_decimal": None}
    return {"ratio": str(ratio), "ratio_decimal": float(ratio)}


def _cmd_run(args) -> int:
    instance = _load_checked(args.instance)
    summary = summarize_run(instance, args.alg, args.engine)
    for line in transcript_json_lines(summary.transcript)[:-1]:
        print(line)
    print(
        json.dumps(
            {
                "total_cost": str(summary.transcript.total_cost),
                "opt_cost": str(summary.opt_cost),
                **_ratio_fields(summary.ratio),
                "frequency": summary.frequency,
            }
        )
    )
    return 0


def _cmd_fuzz(args) -> int:
    report = fuzz_campaign(
        trials=args.trials,
        seed=args.seed,
        max_universe=args.max_n,
        max_sets=args.max_m,
        max_frequency=args.max_f,
        out_dir=args.out,
    )
    for line in format_fuzz_report(report):
        print(line)
    return 0 if report.all_ok else 1


def _cmd_adversary(args) -> int:
    report = adversary_report(args.k, args.alg)
    print(f"k = {report.k}, algorithm = {report.algorithm}")
    print(f"algorithm cost = {report.outcome.transcript.total_cost}")
    print(f"opt cost (oracle) = {report.oracle_opt}")
    print(f"ratio = {report.ratio} (~{float(report.ratio):.6g})")
    if not report.matches_frequency:
        print(f"FAIL: ratio {report.ratio} != k = {report.k}", file=sys.stderr)
        return 1
    return 0


def _emit_instance(instance, out) -> None:
    if out is None:
        json.dump(instance_to_dict(instance), sys.stdout, indent=2)
        print()
    else:
        save_instance(instance, out)


def _cmd_gen(args) -> int:
    if args.generator == "greedy-killer":
        instance = greedy_killer(args.n, args.eps)
    else:
        instance = random_instance(
            n=args.n,
            m=args.m,
            f_max=args.f_max,
            cost_range=(args.cost_lo, args.cost_hi),
            seed=args.seed,
        )
    _emit_instance(instance, args.out)
    return 0


def _cmd_opt(args) -> int:
    instance = _load_checked(args.instance)
    cost, witness = optimal_cover_cost(instance.system, set(instance.requests))
    print(json.dumps({"opt_cost": str(cost), "witness": sorted(witness)}))
    return 0


def _cmd_price_table(args) -> int:
    instance = _load_checked(args.instance)
    algorithm = ALGORITHMS[args.alg](instance.system)
    step = compute_step_pricing(algorithm, CoverState(instance.system))
    handle = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.writer(handle)
        writer.writerow(["set_id", "cost", "label", "surcharge", "price"])
        for sid, cover_set in enumerate(instance.system.sets):
            writer.writerow(
                [
                    sid,
                    str(cover_set.cost),
                    step.pricing.labels[sid],
                    str(step.pricing.surcharge[sid]),
                    str(step.pricing.price[sid]),
                ]
            )
    finally:
        if args.out:
            handle.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pricecover",
        description="Online set cover served directly or through posted prices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="serve an instance and report cost against the optimum")
    run.add_argument("--instance", required=True)
    run.add_argument("--alg", choices=sorted(ALGORITHMS), default="primal-dual")
    run.add_argument("--engine", choices=["direct", "priced"], default="direct")
    run.set_defaults(func=_cmd_run)

    fuzz = sub.add_parser("fuzz", help="random dual-route checking campaign")
    fuzz.add_argument("--trials", type=int, default=200)
    fuzz.add_argument("--seed", type=int, default=0)
    fuzz.add_argument("--max-n", type=int, default=16)
    fuzz.add_argument("--max-m", type=int, default=16)
    fuzz.add_argument("--max-f", type=int, default=6)
    fuzz.add_argument("--out", default="counterexamples")
    fuzz.set_defaults(func=_cmd_fuzz)

    adversary = sub.add_parser("adversary", help="counting adversary forcing ratio k")
    adversary.add_argument("--k", type=int, required=True)
    adversary.add_argument("--alg", choices=sorted(ALGORITHMS), default="primal-dual")
    adversary.set_defaults(func=_cmd_adversary)

    gen = sub.add_parser("gen", help="emit an instance as JSON")
    gen.add_argument("generator", choices=["greedy-killer", "random"])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--eps", type=_fraction, default=Fraction(1, 100))
    gen.add_argument("--m", type=int, default=8)
    gen.add_argument("--f-max", type=int, default=3)
    gen.add_argument("--cost-lo", type=_fraction, default=Fraction(1, 4))
    gen.add_argument("--cost-hi", type=_fraction, default=Fraction(4))
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out")
    gen.set_defaults(func=_cmd_gen)

    opt = sub.add_parser("opt", help="exact offline optimum of the requested elements")
    opt.add_argument("--instance", required=True)
    opt.set_defaults(func=_cmd_opt)

    table = sub.add_parser("price-table", help="posted prices before the first arrival, as CSV")
    table.add_argument("--instance", required=True)
    table.add_argument("--alg", choices=sorted(ALGORITHMS), default="primal-dual")
    table.add_argument("--out")
    table.set_defaults(func=_cmd_price_table)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnpriceableError as exc:
        print(
            json.dumps(
                {
                    "error": "unpriceable step",
                    "request_index": exc.request_index,
                    "cycle": exc.cycle,
                }
            ),
            file=sys.stderr,
        )
        return 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CapacityError, ProtocolViolationError, InvariantViolationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
