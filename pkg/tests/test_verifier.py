from collections import Counter

import pytest

from gorlab import verifier
from gorlab.fields import GF, QQ
from gorlab.specio import AlgebraSpec
from gorlab.verifier import Instance, SuiteConfig, run_check, run_suite

CUBE = AlgebraSpec("monomial_quotient", GF(3), ["x", "y"], ["x^3", "x^2*y", "x*y^2", "y^3"])
SG378 = AlgebraSpec("numerical_semigroup", GF(2), generators=[3, 7, 8])


def test_catalog_is_complete():
    assert len(verifier.CHECK_IDS) == 16 and set(verifier.CHECKS) == set(verifier.CHECK_IDS)


def test_main_equality_on_cube_ring():
    assert run_check("THM_M_EQ", Instance("cube", CUBE)).verdict == "pass"


def test_trace_image_on_378_records_residue_drop():
    res = run_check("LEM_L22", Instance("378", SG378))
    assert res.verdict == "pass"
    row = [r for r in res.payload["reductions"] if r["c"] == 3][0]
    assert row["residue"] == 1 and row["residue_drop"] == 1 and res.payload["residue"] == 2


def test_type_two_theorem_filters_type_three():
    assert run_check("THM_5", Instance("cube", CUBE)).verdict == "hypothesis_not_met"


def test_reduction_premise_on_378():
    res = run_check("THM_26", Instance("378", SG378))
    # a = 3 fails the premise (3 + 2 = 5 is not in K), other elements are tested
    assert res.verdict == "pass"
    assert all(case["a"] != 3 for case in res.payload["cases"])


def test_kind_mismatch():
    assert run_check("THM_B", Instance("cube", CUBE)).verdict == "hypothesis_not_met"


def test_capacity_maps_to_skip(monkeypatch):
    from gorlab.modules import ModuleLimits
    monkeypatch.setattr(ModuleLimits, "max_module_dim", 4)
    res = run_check("COR_C14", Instance("cube", CUBE))
    assert res.verdict == "skipped" and res.reason.startswith("capacity")


def test_unknown_maps_to_skip():
    spec = AlgebraSpec("monomial_quotient", QQ, ["x", "y"], ["x^2", "x*y", "y^3"])
    cfg = SuiteConfig()
    inst = Instance("qq", spec)
    ctx = verifier.make_context(inst, cfg)
    ctx.__dict__["wag"] = verifier.wag_search(ctx.alg, trials=0)
    assert ctx.wag.verdict == "unknown"
    assert run_check("LEM_58", inst, cfg, ctx).verdict == "skipped"


def test_dim_cap_gives_skips_and_no_fails():
    cfg = SuiteConfig(max_dim=3, random_count=6, semigroup_count=4, suites=("all",))
    rep = run_suite(cfg)
    tally = rep.summary["total"]
    assert tally["fail"] == 0 and tally["skipped"] > 0
    assert sum(tally.values()) == len(rep.results)


def test_seed_change_keeps_pinned_verdicts():
    def verdicts(seed):
        cfg = SuiteConfig(seed=seed, suites=("pinned",))
        return Counter((r.check_id, r.instance_id, r.verdict) for r in run_suite(cfg).results)

    assert verdicts(0) == verdicts(11)


def test_summary_matches_results():
    cfg = SuiteConfig(random_count=4, semigroup_count=4, suites=("pinned",))
    rep = run_suite(cfg)
    by = rep.summary["by_check"]
    for cid, counts in by.items():
        assert sum(counts.values()) == sum(1 for r in rep.results if r.check_id == cid)


def test_engine_error_is_failure_with_replay(monkeypatch):
    def boom(ctx):
        raise ZeroDivisionError("x")

    monkeypatch.setitem(verifier.CHECKS, "HHS_AG_NG", boom)
    res = run_check("HHS_AG_NG", Instance("378", SG378, seed=5))
    assert res.verdict == "fail" and res.payload["replay"]["seed"] == 5
    assert verifier.replay(res.payload["replay"]).verdict == "fail"
