from math import gcd
from functools import reduce

import pytest

from gorlab import families
from gorlab.fields import GF


def test_c5_first_output_is_cube_ring():
    out = families.gen_c5(["x", "y"], [2, 2], 0, 4, GF(3))
    assert out[0].generators == ["x^3", "x^2*y", "x*y^2", "y^3"]
    assert len(out) == 4
    # J = I appears among the subsets and is the complete intersection itself
    assert any(o.generators == ["x^2", "y^2"] for o in out)


def test_c5_rejects_linear_powers():
    with pytest.raises(families.FamilyError):
        families.gen_c5(["x", "y"], [1, 2], 0, 2, GF(2))


def test_e51_forms():
    f = GF(2)
    assert set(families.gen_e51(2, 2, 2, "a", f).generators) == {"x^2", "y^2", "x*z^2", "y*z^2", "z^3"}
    assert set(families.gen_e51(2, 2, 2, "b", f).generators) == {
        "x^2", "x*y^2", "y^3", "y^2*z", "x*z^2", "y*z^2", "z^3"}
    c = families.gen_e51(2, 2, 2, "c", f).generators
    assert len(c) == 9 and "x^3" in c and "x^2*y" in c


def test_l57_shapes():
    assert families.gen_l57(1, 3, GF(2)).generators == ["x^3"]
    assert set(families.gen_l57(2, 3, GF(2)).generators) == {"x^3", "x*y", "y^2"}
    assert families.gen_l57(3, 2, GF(2)).build().socle.dim == 3


def test_random_monomial_determinism_and_bounds():
    a = families.gen_random_monomial(42, 2, 4, GF(3))
    b = families.gen_random_monomial(42, 2, 4, GF(3))
    assert a == b
    for seed in range(40):
        spec = families.gen_random_monomial(seed, 1 + seed % 3, 4, GF(2), max_dim=10)
        assert spec.build().dim <= 10
    one = families.gen_random_monomial(7, 1, 5, GF(2))
    assert one.generators[0].startswith("x") and one.build().dim <= 5


def test_random_semigroups():
    out = families.gen_random_semigroup(1, 4, 13, 30)
    assert out[:2] == [[3, 7, 8], [3, 4, 5]]
    assert all(reduce(gcd, g) == 1 and len(g) <= 4 for g in out)
    assert len({tuple(g) for g in out}) == len(out) == 30
    assert out == families.gen_random_semigroup(1, 4, 13, 30)
