import itertools

import numpy as np
import pytest

from gorlab.algebra import (
    AlgebraError,
    algebra_from_monomial_quotient,
    algebra_from_table,
    format_monomial,
    parse_monomial,
    quotient_algebra,
    standard_monomials,
)
from gorlab.fields import GF, QQ
from gorlab.linalg import Subspace


def mq(vars_, gens, p=2):
    return algebra_from_monomial_quotient(vars_, gens, GF(p) if p else QQ)


def brute_socle_dim_gf2(alg):
    """Count vectors killed by every basis element of m, over GF(2)."""
    m = alg.maximal_ideal.basis
    count = 0
    for v in itertools.product((0, 1), repeat=alg.dim):
        v = np.array(v, dtype=np.int64)
        if all(not alg.product(a, v).any() for a in m):
            count += 1
    return int(round(np.log2(count)))


def test_truncated_polynomial_ring():
    a = mq(["x"], ["x^3"])
    assert a.dim == 3 and a.labels == ["1", "x", "x^2"]
    assert a.socle.dim == 1 and a.is_gorenstein


def test_square_of_maximal_ideal_two_vars():
    a = mq(["x", "y"], ["x^2", "x*y", "y^2"])
    assert a.dim == 3 and a.edim == 2 and a.loewy_length == 2


def test_all_degree_three_monomials():
    a = mq(["x", "y"], ["x^3", "x^2*y", "x*y^2", "y^3"])
    assert a.dim == 6
    assert a.socle == Subspace(a.field, 6, np.eye(6, dtype=np.int64)[[a.labels.index(m) for m in
                                                                          ("x^2", "x*y", "y^2")]])


def test_complete_intersection_socle():
    a = mq(["x", "y"], ["x^2", "y^2"])
    assert a.socle.dim == 1
    assert a.socle.basis[0][a.labels.index("x*y")] == 1


@pytest.mark.parametrize("gens", [["x^2", "x*y", "y^3"], ["x^3", "y^2", "x*y"], ["x^2", "y^2", "z^2", "x*y*z"],
                                  ["x^2", "y^3", "x*y^2"]])
def test_socle_matches_enumeration(gens):
    vars_ = ["x", "y", "z"][:3 if "z^2" in gens else 2]
    a = mq(vars_, gens)
    assert a.socle.dim == brute_socle_dim_gf2(a)


def test_standard_monomials_match_box_scan():
    gens = [(3, 0), (1, 1), (0, 4)]
    want = [e for e in itertools.product(range(4), range(5)) if not any(all(x >= g for x, g in zip(e, gg))
                                                                        for gg in gens)]
    assert sorted(standard_monomials(2, gens)) == sorted(want)


def test_standard_monomials_need_pure_powers():
    with pytest.raises(AlgebraError):
        standard_monomials(2, [(2, 0), (1, 1)])


def test_parse_and_format_round_trip():
    vs = ["x", "y", "z"]
    for text in ["x^2*y", "z", "x*y*z^3"]:
        assert format_monomial(parse_monomial(text, vs), vs) == text
    assert parse_monomial("x^2 y", vs) == (2, 1, 0)
    assert format_monomial((0, 0, 0), vs) == "1"
    with pytest.raises(AlgebraError):
        parse_monomial("x^2*w", vs)


def test_colon_and_annihilator():
    a = mq(["x", "y"], ["x^3", "x^2*y", "x*y^2", "y^3"])
    x = a.ideal(a.basis_vector(a.labels.index("x")))
    ann = a.annihilator_of(x)
    # 0 : (x) = m^2
    assert ann == a.m_powers[1]
    assert a.annihilator_of(a.m_powers[1]) == a.maximal_ideal


def test_quotient_by_socle_is_square_zero():
    a = mq(["x", "y"], ["x^3", "x^2*y", "x*y^2", "y^3"])
    q = quotient_algebra(a, a.socle)
    assert q.dim == 3 and q.m_powers[1].dim == 0


@pytest.mark.parametrize("p", [2, 3, 5])
def test_quotient_by_generic_socle_line_is_gorenstein(p):
    f = GF(p)
    a = mq(["x", "y"], ["x^2", "x*y", "y^3"], p)
    v = f.zeros(a.dim)
    v[a.labels.index("x")] = 1
    v[a.labels.index("y^2")] = p - 1
    q = quotient_algebra(a, a.ideal(v))
    assert q.socle.dim == 1


def test_quotient_by_zero_is_same_algebra():
    a = mq(["x", "y"], ["x^2", "y^2"])
    assert quotient_algebra(a, a.zero_ideal()).same_as(a)


def test_table_validation_rejects_noncommutative():
    f = GF(2)
    t = np.zeros((2, 2, 2), dtype=np.int64)
    t[0, 0, 0] = t[0, 1, 1] = t[1, 0, 1] = 1
    algebra_from_table(f, t)
    t[1, 1, 0] = 1  # e1^2 = 1 makes e1 a unit: not local
    with pytest.raises(AlgebraError):
        algebra_from_table(f, t)


def test_base_change_keeps_socle():
    a = mq(["x", "y"], ["x^3", "x^2*y", "x*y^2", "y^3"])
    b = a.over(GF(2, 3))
    assert b.socle.dim == 3 and b.dim == 6


def test_rational_field():
    a = mq(["x", "y"], ["x^2", "y^2"], p=0)
    assert a.is_gorenstein
