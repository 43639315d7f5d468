import itertools
import random

import numpy as np
import pytest

from gorlab import families
from gorlab.algebra import algebra_from_monomial_quotient, quotient_algebra
from gorlab.classify import (
    classify,
    enumerate_ideals,
    is_wag_certificate,
    l57_family_check,
    cyclic_cover_numbers,
    block_presentation_shape,
    max_ideal_self_dual,
    socle_quotient_gorenstein,
    sv_almost_gorenstein,
    trace_ideal_and_residue,
    wag_bruteforce,
    wag_search,
)
from gorlab.fields import GF, QQ
from gorlab.linalg import CapacityError, Subspace
from gorlab.modules import annihilator, canonical_module, ext1, minimal_presentation

CUBE = ["x^3", "x^2*y", "x*y^2", "y^3"]
FOURTH = ["x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4"]


def mq(vars_, gens, p=3):
    return algebra_from_monomial_quotient(vars_, gens, GF(p) if p else QQ)


def label_span(alg, labels):
    rows = np.eye(alg.dim, dtype=np.int64)[[alg.labels.index(x) for x in labels]]
    return Subspace(alg.field, alg.dim, rows)


def test_trace_of_gorenstein_ring_is_unit_ideal():
    alg = mq(["x"], ["x^3"])
    tr, res = trace_ideal_and_residue(alg)
    assert tr == alg.unit_ideal() and res == 0


def test_square_zero_two_vars_is_nearly_gorenstein():
    alg = mq(["x", "y"], ["x^2", "x*y", "y^2"])
    tr, res = trace_ideal_and_residue(alg)
    assert res == 1 and tr == alg.maximal_ideal


@pytest.mark.parametrize("p", [2, 3, 0])
def test_trace_of_cube_ring(p):
    alg = mq(["x", "y"], CUBE, p)
    tr, res = trace_ideal_and_residue(alg)
    assert not tr.contains(alg.maximal_ideal)
    # frozen: tr = m^2, residue 3; oracle is ann Ext^1(omega, Omega omega)
    assert res == 3 and tr == label_span(alg, ["x^2", "x*y", "y^2"])
    om = canonical_module(alg)
    pres = minimal_presentation(om)
    assert annihilator(ext1(om, pres.syzygy, pres)) == tr


@pytest.mark.parametrize("p", [2, 3])
def test_wag_cube_ring_with_certificate(p):
    alg = mq(["x", "y"], CUBE, p)
    w = wag_search(alg)
    assert w.verdict == "yes" and w.exhaustive
    assert is_wag_certificate(alg, w.w)
    assert alg.socle.contains(w.ideal) and quotient_algebra(alg, w.ideal).socle.dim == 1


def test_wag_square_zero_ring():
    assert wag_search(mq(["x", "y"], ["x^2", "x*y", "y^2"])).verdict == "yes"


def test_wag_fourth_power_is_no_with_subspace_oracle():
    alg = mq(["x", "y"], FOURTH, 3)
    w = wag_search(alg)
    assert w.verdict == "no" and w.exhaustive
    # dim soc(R/I) >= 4 - dim I, so only socle hyperplanes could work; each is the kernel of a functional
    f = alg.field
    soc = alg.socle.basis
    hyperplanes = set()
    for lam in itertools.product(range(3), repeat=4):
        if not any(lam):
            continue
        rows = [c for c in itertools.product(range(3), repeat=4) if sum(a * b for a, b in zip(lam, c)) % 3 == 0]
        sub = Subspace(f, alg.dim, f.matmul(np.array(rows, dtype=np.int64), soc))
        assert sub.dim == 3
        if sub.key not in hyperplanes:
            hyperplanes.add(sub.key)
            assert quotient_algebra(alg, sub).socle.dim >= 2
    assert len(hyperplanes) == 40
    assert wag_bruteforce(alg) is None


def test_wag_agrees_with_bruteforce_on_random_algebras():
    for k in range(30):
        p = (2, 3)[k % 2]
        spec = families.gen_random_monomial(1000 + k, 2 + k % 2, 3, GF(p), max_dim=9)
        alg = spec.build()
        fast = wag_search(alg)
        slow = wag_bruteforce(alg)
        assert (fast.verdict == "yes") == (slow is not None), spec.generators


def test_wag_over_rationals_finds_certificate():
    alg = mq(["x", "y"], CUBE, 0)
    w = wag_search(alg, seed=1)
    assert w.verdict == "yes" and not w.exhaustive
    assert is_wag_certificate(alg, w.w)


def test_wag_capacity():
    alg = mq(["x", "y"], ["x^6", "x^5*y", "x^4*y^2", "x^3*y^3", "x^2*y^4", "x*y^5", "y^6"], 3)
    with pytest.raises(CapacityError):
        wag_search(alg, cap=100)


def test_classify_gorenstein_ring():
    rec = classify(mq(["x"], ["x^5"]))
    assert rec.gorenstein and rec.nearly_gorenstein and rec.residue == 0
    assert rec.weakly_almost_gorenstein == "yes" and rec.sv_almost_gorenstein == "yes"
    assert rec.max_ideal_self_dual == "yes"


def test_classify_cube_ring_over_gf2():
    rec = classify(mq(["x", "y"], CUBE, 2), extension_degrees=(1, 2))
    assert rec.type == 3 and rec.residue == 3 and not rec.nearly_gorenstein
    assert rec.weakly_almost_gorenstein == "yes" and rec.wag_by_field == {"GF(2)": "yes", "GF(2^2)": "yes"}
    assert rec.max_ideal_self_dual == "yes" and not rec.soc_quotient_gorenstein
    # ideal (x): 0:(0:(x)) = m is not inside (x):m = (x, m^2)
    assert rec.sv_almost_gorenstein == "no"


def test_sv_witness_by_hand():
    alg = mq(["x", "y"], CUBE, 2)
    sv = sv_almost_gorenstein(alg)
    assert sv.verdict == "no"
    x = alg.ideal(alg.basis_vector(alg.labels.index("x")))
    double = alg.annihilator_of(alg.annihilator_of(x))
    assert double == alg.maximal_ideal
    assert not alg.colon(x, alg.maximal_ideal).contains(double)


def brute_ideals_gf2(alg):
    """All ideals of a small GF(2)-algebra by spanning every set of at most dim vectors."""
    f = alg.field
    vecs = [np.array(v, dtype=np.int64) for v in itertools.product((0, 1), repeat=alg.dim)]
    found = set()
    for r in range(alg.dim + 1):
        for combo in itertools.combinations(vecs[1:], r):
            sub = Subspace(f, alg.dim, np.array(combo) if combo else None)
            if sub.dim == r and alg.is_ideal(sub):
                found.add(sub.key)
    return found


@pytest.mark.parametrize("gens", [["x^2", "x*y", "y^2"], ["x^2", "y^2"], ["x^4"], ["x^2", "x*y", "y^3"]])
def test_ideal_enumeration_matches_brute_force(gens):
    alg = mq(["x", "y"] if "y^2" in gens or "y^3" in gens else ["x"], gens, 2)
    fast = {i.key for i in enumerate_ideals(alg)}
    assert fast == brute_ideals_gf2(alg)


def test_cyclic_cover_and_block_presentation_on_cube_ring():
    alg = mq(["x", "y"], CUBE, 3)
    w = wag_search(alg)
    nums = cyclic_cover_numbers(alg, w.w)
    assert nums == {"type": 3, "coker_dim": 2, "kernel_dim": 2, "kernel_in_socle": True}
    shape = block_presentation_shape(alg, w.w)
    assert shape["ok"] and shape["q"] == (3 - 1) * 2 + 2


@pytest.mark.parametrize("n,p,typ", [(1, 3, 1), (2, 3, 2), (3, 2, 3)])
def test_l57_family(n, p, typ):
    alg = families.gen_l57(n, p, GF(2)).build()
    out = l57_family_check(alg)
    assert out["ok"] and out["type"] == typ and out["soc_quotient_gorenstein"]


def test_socle_quotient_flags():
    assert not socle_quotient_gorenstein(mq(["x", "y"], CUBE))
    # Gorenstein ring whose socle quotient is not Gorenstein
    assert not socle_quotient_gorenstein(mq(["x", "y"], ["x^2", "y^2"]))
    assert socle_quotient_gorenstein(mq(["x"], ["x^4"]))


def test_self_dual_without_wag():
    # m/soc R = k + (uniserial of length 2) is self-dual, yet no socle line has a Gorenstein quotient
    alg = mq(["x", "y"], ["x^2", "x*y^2", "y^4"], 2)
    assert wag_search(alg).verdict == "no"
    assert wag_search(alg.over(GF(2, 2))).verdict == "no"
    assert max_ideal_self_dual(alg) == "yes"


def test_wag_base_field_extension_consistent():
    rng = random.Random(5)
    for k in range(8):
        alg = families.gen_random_monomial(rng.getrandbits(20), 2, 3, GF(2), max_dim=8).build()
        small = wag_search(alg).verdict
        big = wag_search(alg.over(GF(2, 2))).verdict
        assert small != "yes" or big == "yes"
