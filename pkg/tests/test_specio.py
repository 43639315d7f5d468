import pytest
from hypothesis import given, settings, strategies as st

from gorlab import families
from gorlab.fields import GF, QQ
from gorlab.numsgp import NumericalSemigroup, artinian_reduction
from gorlab.specio import SpecError, parse_spec, print_spec, spec_from_algebra


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3, 5]), st.integers(1, 3))
def test_monomial_round_trip(seed, p, nvars):
    spec = families.gen_random_monomial(seed, nvars, 3, GF(p)).normalized()
    assert parse_spec(print_spec(spec)) == spec


def test_structure_constant_round_trip():
    alg = artinian_reduction(NumericalSemigroup([3, 7, 8]), 6, GF(3))
    spec = spec_from_algebra(alg, "r6").normalized()
    back = parse_spec(print_spec(spec))
    assert back == spec
    assert back.build().same_as(alg)


def test_rational_coefficients_round_trip():
    text = """schema: gorlab/1
kind: structure_constants
field: {char: 0}
basis: ['1', e]
products:
- [0, 0, 0, 1]
- [0, 1, 1, 1]
"""
    spec = parse_spec(text)
    assert spec.field == QQ and parse_spec(print_spec(spec)) == spec


def test_semigroup_spec():
    spec = parse_spec("schema: gorlab/1\nkind: numerical_semigroup\ngenerators: [3, 7, 8]\n")
    assert isinstance(spec.build(), NumericalSemigroup)


@pytest.mark.parametrize("text,line", [
    ("schema: gorlab/2\nkind: numerical_semigroup\n", 1),
    ("schema: gorlab/1\nkind: nope\n", 2),
    ("schema: gorlab/1\nkind: monomial_quotient\nfield: {char: 2}\nvars: [x, y]\ngenerators: [x^2]\n", 5),
    ("schema: gorlab/1\nkind: monomial_quotient\nfield: {char: 6}\nvars: [x]\ngenerators: [x^2]\n", 3),
    ("schema: gorlab/1\nkind: numerical_semigroup\ngenerators: [4, 6]\n", 3),
])
def test_parse_errors_carry_position(text, line):
    with pytest.raises(SpecError) as err:
        parse_spec(text)
    assert err.value.line == line and err.value.column is not None


def test_yaml_syntax_error_position():
    with pytest.raises(SpecError) as err:
        parse_spec("schema: gorlab/1\nkind: [unclosed\n")
    assert err.value.line is not None
