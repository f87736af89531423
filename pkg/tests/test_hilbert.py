from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pqkverify import golden as G
from pqkverify.exact import ParamAffine
from pqkverify.exact.parse import parse_expression
from pqkverify.hilbert import (
    admissible_pairs,
    ahat_bounds,
    bound_inequalities,
    cg_coefficients,
    congruences,
    solve_f_values,
)

DATA = solve_f_values(5)


def aff(text):
    return parse_expression(text, ParamAffine.param)


@pytest.mark.parametrize("q", sorted(G.HILBERT_VALUES))
def test_printed_values(q):
    assert DATA.values[q] == aff(G.HILBERT_VALUES[q])


def test_polynomial_reproduces_values():
    assert DATA.polynomial.degree == 11
    for q, v in DATA.values.items():
        assert DATA(q) == v


@pytest.mark.parametrize("m", range(1, 12))
def test_cg_rank_identity(m):
    assert cg_coefficients(m).virtual_rank() == 0


def test_projective_space_instance():
    vals = {"d": ParamAffine(78), "v": ParamAffine(1024)}
    # A-hat from consistency of f(9) with the projective space value
    f9 = DATA(9).substitute(vals)
    A = (comb(15, 11) - f9.constant) / f9.coeff("A")
    assert A == 0
    vals["A"] = ParamAffine(A)
    for q in range(4):
        assert DATA(5 + 2 * q).substitute(vals) == comb(11 + 2 * q, 11)


@given(st.integers(-40, 40), st.integers(-10, 10), st.integers(1, 300), st.integers(0, 11))
def test_affine_interpolant_evaluates_like_values(A_num, d, v, q):
    vals = {"A": Fraction(A_num, 7), "d": d, "v": v}
    assert DATA(q).evaluate(vals) == DATA.values[q].evaluate(vals)


def test_ahat_bounds_exact():
    b = ahat_bounds()
    assert b.lower == Fraction(1053, 32768)
    assert b.upper == Fraction(182325, 262144)
    assert b.combination == aff(G.AHAT_LOWER_COMBINATION)


def test_ahat_bounds_decimal_outward():
    assert ahat_bounds().decimal(10) == G.AHAT_BOUNDS_DECIMAL


def test_bound_inequalities_shape():
    lo, hi = bound_inequalities(0, DATA)
    assert lo.form == ParamAffine(1)
    assert hi.form == ParamAffine(0)


def test_congruence_factoring_is_exact():
    res = congruences()
    assert res.modulus == 140
    assert [str(c) for c in res.conditions] == ["d = 1 mod 7", "v = 4 mod 20"]
    brute = {(d, v) for d in range(140) for v in range(140) if DATA(9).evaluate({"A": 0, "d": d, "v": v}).denominator == 1}
    assert res.residues == brute
    # the residue set is the intersection of the two conditions
    assert res.is_conjunction()


def test_admissible_pairs():
    got = {}
    for d, v in admissible_pairs():
        got.setdefault(d, []).append(v)
    assert got == G.ADMISSIBLE_PAIRS
