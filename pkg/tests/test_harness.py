from fractions import Fraction

import pytest

import pricecover as pc
from helpers import crossed_pair_stub


def test_summarize_greedy_on_killer():
    instance = pc.greedy_killer(100, Fraction(1, 100))
    summary = pc.summarize_run(instance, "greedy", "direct")
    assert summary.transcript.total_cost == 100
    assert summary.opt_cost == Fraction(101, 100)
    assert summary.opt_witness == frozenset({100})
    assert summary.ratio == Fraction(10000, 101)
    assert summary.frequency == 2


def test_summarize_primal_dual_respects_frequency_bound():
    instance = pc.greedy_killer(100, Fraction(1, 100))
    for engine in ("direct", "priced"):
        summary = pc.summarize_run(instance, "primal-dual", engine)
        assert summary.transcript.total_cost == Fraction(201, 100)
        assert summary.ratio <= summary.frequency


def test_summarize_rejects_unknown_names():
    instance = pc.greedy_killer(2, Fraction(1, 2))
    with pytest.raises(pc.InputError, match="unknown algorithm"):
        pc.summarize_run(instance, "dual-fitting", "direct")
    with pytest.raises(pc.InputError, match="unknown engine"):
        pc.summarize_run(instance, "greedy", "offline")


def test_fuzz_campaign_clean_run():
    report = pc.fuzz_campaign(trials=30, seed=7, max_universe=10, max_sets=10)
    assert report.all_ok
    assert report.failures == []
    assert report.counterexample_path is None
    assert report.check_passes == {check: 30 for check in pc.FUZZ_CHECKS}
    lines = pc.format_fuzz_report(report)
    assert lines[0] == "fuzz: 30 trials, seed 7"
    assert "  all checks passed" in lines
    assert any("check mimicry: 30/30" in line for line in lines)


def test_fuzz_campaign_is_reproducible():
    a = pc.fuzz_campaign(trials=10, seed=3, max_universe=8, max_sets=8)
    b = pc.fuzz_campaign(trials=10, seed=3, max_universe=8, max_sets=8)
    assert a.check_passes == b.check_passes
    assert a.failures == b.failures


def test_fuzz_campaign_catches_broken_rule(tmp_path):
    report = pc.fuzz_campaign(
        trials=25,
        seed=1,
        max_universe=6,
        max_sets=6,
        max_frequency=4,
        algorithm_factory=crossed_pair_stub,
        out_dir=str(tmp_path),
    )
    assert not report.all_ok
    assert any(f.check == "acyclic-steps" for f in report.failures)
    assert report.counterexample_path is not None
    replay = pc.load_instance(report.counterexample_path)
    assert pc.validate(replay) == []
    first = report.failures[0]
    assert replay == first.instance
    lines = pc.format_fuzz_report(report)
    assert any("FIRST FAILURE" in line for line in lines)
    assert any("counterexample saved" in line for line in lines)


def test_fuzz_campaign_rejects_bad_trials():
    with pytest.raises(pc.InputError):
        pc.fuzz_campaign(trials=0, seed=0)


@pytest.mark.parametrize("name", sorted(pc.ALGORITHMS))
def test_adversary_report_meets_frequency(name):
    report = pc.adversary_report(4, name)
    assert report.oracle_opt == 1
    assert report.ratio == 4
    assert report.matches_frequency
    assert report.outcome.transcript.total_cost == 4


def test_adversary_report_rejects_unknown_algorithm():
    with pytest.raises(pc.InputError, match="unknown algorithm"):
        pc.adversary_report(3, "nope")
