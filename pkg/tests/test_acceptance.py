"""Acceptance criteria 1 to 10; each prints one PASS/FAIL line."""

import itertools
import random
from collections import Counter

import numpy as np
import pytest

from gorlab import families
from gorlab.algebra import algebra_from_monomial_quotient, quotient_algebra
from gorlab.classify import classify, is_wag_certificate, trace_ideal_and_residue, wag_bruteforce, wag_search
from gorlab.fields import GF
from gorlab.linalg import Subspace
from gorlab.numsgp import NumericalSemigroup, artinian_reduction, ext1_canonical_type2, trace_and_residue_ns
from gorlab.specio import AlgebraSpec
from gorlab.verifier import Instance, SuiteConfig, make_context, pinned_instances, run_check

CFG = SuiteConfig(homological_max_dim=12, max_dim=40, extension_degrees=(1, 2), sv_max_dim=6)
CUBE = ["x^3", "x^2*y", "x*y^2", "y^3"]
FOURTH = ["x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4"]


def report(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\nCRITERION {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def random_corpus(count=100, seed=2024):
    """Distinct seeded random monomial algebras over GF(2) and GF(3) with dim <= 10."""
    rng = random.Random(seed)
    seen, out, k = set(), [], 0
    while len(out) < count:
        p, nvars = (2, 3)[k % 2], (1, 2, 3)[k % 3]
        k += 1
        s = rng.getrandbits(32)
        spec = families.gen_random_monomial(s, nvars, 4, GF(p), max_dim=10)
        key = (p, tuple(spec.vars), tuple(spec.generators))
        if key not in seen:
            seen.add(key)
            out.append(Instance(f"random/{len(out)}/GF{p}", spec, s))
    return out


def family_corpus():
    out = []
    f = GF(2)
    for exps in ([2, 2], [2, 3], [3, 3]):
        for k, spec in enumerate(families.gen_c5(["x", "y"], exps, 1, 4, f)):
            out.append(Instance(f"c5/xy/{exps}/{k}", spec, 1))
    for k, spec in enumerate(families.gen_c5(["x", "y", "z"], [2, 2, 2], 1, 4, f)):
        out.append(Instance(f"c5/xyz/{k}", spec, 1))
    for a, b, c in itertools.product((2, 3), repeat=3):
        for form in "abc":
            out.append(Instance(f"e51{form}/{a}{b}{c}", families.gen_e51(a, b, c, form, f), 1))
    return out


def l57_corpus():
    return [Instance(f"l57/{n},{p}/GF{q}", families.gen_l57(n, p, GF(q)), 0)
            for n, p, q in itertools.product((1, 2, 3, 4), (2, 3), (2, 3))]


@pytest.fixture(scope="module")
def artinian_results():
    """Every artinian check on random + pinned + family instances, keyed by check id."""
    insts = random_corpus() + [i for i in pinned_instances((2, 3)) if not i.is_semigroup] + family_corpus()
    out = {}
    for inst in insts:
        ctx = make_context(inst, CFG)
        for cid in ("THM_M_EQ", "PROP_1_D0", "COR_C14", "LEM_4_D0", "LEM_58", "THM_5", "THM_511",
                    "HV_NG_SVAG"):
            out.setdefault(cid, []).append((inst, run_check(cid, inst, CFG, ctx)))
    return out


@pytest.fixture(scope="module")
def semigroups():
    gens = families.gen_random_semigroup(2024, 4, 13, 60)
    return [Instance(f"sg/{g}", AlgebraSpec("numerical_semigroup", GF(2), generators=g), 0) for g in gens]


def verdicts(rows):
    return Counter(r.verdict for _, r in rows)


def fails(rows):
    return [f"{i.instance_id}: {r.reason}" for i, r in rows if r.verdict == "fail"]


def test_criterion_01_pinned_semigroup_values(capsys):
    s = NumericalSemigroup([3, 7, 8])
    tr, res = trace_and_residue_ns(s)
    red = artinian_reduction(s, 3, GF(2))
    _, red_res = trace_ideal_and_residue(red)
    ok = (tr.generators() == [6, 7, 8] and res == 2 and red.dim == 3 and red.m_powers[1].dim == 0
          and red_res == 1)
    report(capsys, 1, ok, f"<3,7,8>: trace head {tr.generators()}, residue {res}; R/(t^3) dim {red.dim}, "
                          f"m^2 dim {red.m_powers[1].dim}, residue {red_res}")


def test_criterion_02_main_equalities(capsys, artinian_results):
    rows = [x for x in artinian_results["THM_M_EQ"] + artinian_results["PROP_1_D0"]
            if x[0].instance_id.startswith(("random/", "pinned/"))]
    n_random = len({i.instance_id for i, _ in rows if i.instance_id.startswith("random/")})
    dims_ok = all(i.spec.build().dim <= 10 for i, _ in rows if i.instance_id.startswith("random/"))
    v = verdicts(rows)
    ok = n_random >= 100 and dims_ok and v["pass"] == len(rows)
    report(capsys, 2, ok, f"{n_random} random + pinned rings, verdicts {dict(v)}, fails {fails(rows)[:3]}")


def test_criterion_03_containments_and_annihilators(capsys, artinian_results):
    rows = [x for x in artinian_results["COR_C14"] + artinian_results["LEM_4_D0"]
            if x[0].instance_id.startswith(("random/", "pinned/"))]
    witnesses = min(r.payload.get("witnesses", 99) for _, r in artinian_results["THM_M_EQ"]
                    if r.verdict == "pass")
    wdims = min(len(r.payload["witness_dims"]) for _, r in artinian_results["LEM_4_D0"] if r.verdict == "pass")
    v = verdicts(rows)
    ok = v["pass"] == len(rows) and witnesses >= 5 and wdims >= 5
    report(capsys, 3, ok, f"verdicts {dict(v)}, witness modules per ring {wdims}, fails {fails(rows)[:3]}")


def test_criterion_04_cube_and_fourth_power(capsys):
    cube = algebra_from_monomial_quotient(["x", "y"], CUBE, GF(3))
    rec = classify(cube, sv=False)
    cert = rec.wag_element_w is not None and is_wag_certificate(cube, rec.wag_element_w)
    fourth = algebra_from_monomial_quotient(["x", "y"], FOURTH, GF(3))
    w4 = wag_search(fourth)
    # oracle: every socle hyperplane quotient keeps socle dim >= 2, and no generator of omega works
    f = fourth.field
    soc = fourth.socle.basis
    hyper = set()
    oracle = True
    for lam in itertools.product(range(3), repeat=4):
        if any(lam):
            rows = [c for c in itertools.product(range(3), repeat=4)
                    if sum(a * b for a, b in zip(lam, c)) % 3 == 0]
            sub = Subspace(f, fourth.dim, f.matmul(np.array(rows, dtype=np.int64), soc))
            if sub.key not in hyper:
                hyper.add(sub.key)
                oracle &= quotient_algebra(fourth, sub).socle.dim >= 2
    oracle &= wag_bruteforce(fourth) is None
    ok = (rec.weakly_almost_gorenstein == "yes" and cert and not rec.nearly_gorenstein
          and w4.verdict == "no" and w4.exhaustive and oracle and len(hyper) == 40)
    report(capsys, 4, ok, f"(x,y)^3: WAG {rec.weakly_almost_gorenstein}, certificate {cert}, "
                          f"NG {rec.nearly_gorenstein}; (x,y)^4 over GF(3): WAG {w4.verdict} "
                          f"(exhaustive {w4.exhaustive}), oracle over {len(hyper)} hyperplanes {oracle}")


def test_criterion_05_cyclic_cover(capsys, artinian_results):
    rows = artinian_results["LEM_58"]
    v = verdicts(rows)
    ok = v["fail"] == 0 and v["skipped"] == 0 and v["pass"] > 0
    report(capsys, 5, ok, f"{v['pass']} WAG instances checked, verdicts {dict(v)}, fails {fails(rows)[:3]}")


def test_criterion_06_type_two_and_ag(capsys, artinian_results, semigroups):
    rows = artinian_results["THM_5"]
    sg_rows = [(i, run_check("HHS_AG_NG", i, CFG)) for i in semigroups]
    v, w = verdicts(rows), verdicts(sg_rows)
    ok = v["fail"] == 0 and v["skipped"] == 0 and v["pass"] > 0 and w["fail"] == 0 and w["pass"] > 0
    report(capsys, 6, ok, f"type 2 + WAG: {dict(v)}; semigroups AG => NG: {dict(w)}")


def test_criterion_07_round_trip(capsys, semigroups):
    ctxs = [(i, make_context(i, CFG)) for i in semigroups]
    b = [(i, run_check("THM_B", i, CFG, c)) for i, c in ctxs]
    c_rows = [(i, run_check("THM_C", i, CFG, c)) for i, c in ctxs]
    vb, vc = verdicts(b), verdicts(c_rows)
    embdim_ok = all(len(i.spec.generators) <= 4 for i in semigroups)
    ok = len(semigroups) >= 50 and embdim_ok and vb["pass"] == len(b) and vc["pass"] == len(c_rows)
    report(capsys, 7, ok, f"{len(semigroups)} semigroups: NG routes {dict(vb)}, AG routes {dict(vc)}, "
                          f"fails {(fails(b) + fails(c_rows))[:3]}")


def test_criterion_08_type_two_semigroups(capsys, semigroups):
    targets = [i for i in semigroups if len(i.spec.generators) == 3
               and not NumericalSemigroup(i.spec.generators).is_symmetric]
    rows = [(i, run_check("SEC4_TYPE2", i, CFG)) for i in targets]
    v = verdicts(rows)
    e = ext1_canonical_type2(NumericalSemigroup([3, 7, 8]))
    ok = len(targets) > 0 and v["pass"] == len(rows) and e.ext1_values == [2, 5] and not e.m_kills
    report(capsys, 8, ok, f"{len(targets)} 3-generated non-symmetric: {dict(v)}; <3,7,8> Ext^1 values "
                          f"{e.ext1_values}, m_kills {e.m_kills}")


def test_criterion_09_families(capsys):
    fam = family_corpus()
    wag = Counter(wag_search(i.spec.build()).verdict for i in fam)
    l57 = l57_corpus()
    l57_ok = []
    for i in l57:
        alg = i.spec.build()
        res = run_check("LEM_57", i, CFG)
        l57_ok.append(alg.socle.dim == len(i.spec.vars) and res.verdict == "pass")
    ok = len(fam) >= 20 and wag["yes"] == len(fam) and all(l57_ok)
    report(capsys, 9, ok, f"{len(fam)} c5/e51 instances WAG verdicts {dict(wag)}; "
                          f"{sum(l57_ok)}/{len(l57)} l57 instances with type n and Gorenstein socle quotient")


def test_criterion_10_safety(capsys, artinian_results):
    t511 = artinian_results["THM_511"]
    hv = artinian_results["HV_NG_SVAG"]
    v511, vhv = verdicts(t511), verdicts(hv)
    ran = sum(1 for i, r in hv if r.verdict == "pass" and i.spec.field == GF(2))
    ok = v511["fail"] == 0 and v511["skipped"] == 0 and vhv["fail"] == 0 and ran > 0
    report(capsys, 10, ok, f"WAG certificate and self-duality {dict(v511)}; NG => SV {dict(vhv)} ({ran} enumerations over GF(2)), "
                           f"fails {(fails(t511) + fails(hv))[:3]}")
