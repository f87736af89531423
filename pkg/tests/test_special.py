from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pqkverify import golden as G
from pqkverify.exact import NumberField, UniPoly
from pqkverify.exact.parse import parse_expression
from pqkverify.special import (
    dim16_search,
    dim16_volume_relations,
    dim20_b4_1,
    dim24_b4_1,
    root_combination_sweep,
)
from pqkverify.special import element_charpoly


@pytest.fixture(scope="module")
def d16():
    return dim16_search()


@pytest.fixture(scope="module")
def d24():
    return dim24_b4_1(sweep=True)


def test_dim16_unique_hit(d16):
    h = G.DIM16_HIT
    assert d16.hits == [(h["x"], Fraction(h["d"]))]
    assert d16.v(Fraction(h["x"])) == h["v"] and d16.b4(Fraction(h["x"])) == h["b4"]


def test_dim16_branches(d16):
    by = {b.betti: b for b in d16.branches}
    assert set(by) == {(3, 0, 4), (3, 2, 3)}
    assert by[(3, 2, 3)].rejected and by[(3, 2, 3)].values["c4^2"] == G.DIM16_BRANCHES[(3, 2, 3)]["c4sq"]
    assert not by[(3, 0, 4)].rejected
    assert d16.surviving == [tuple(Fraction(x) for x in G.DIM16_DATUM[:2]) + G.DIM16_DATUM[2:]]


def test_dim16_c4u2_is_branch_independent(d16):
    values = {b.values["c4*u^2"] for b in d16.branches}
    assert values == {Fraction(51, 32)}


def test_dim16_rational_parts(d16):
    x = UniPoly.x()
    num = parse_expression(G.DIM16["d_num"], {"x": x})
    den = parse_expression(G.DIM16["den"], {"x": x})
    assert d16.d.num * den == num * d16.d.den


def test_dim16_volume_relations():
    rel = dim16_volume_relations()
    for key, name in (("d_from_v", "d"), ("b4_from_v", "b4")):
        const, slope = rel[name]
        for xv in range(-4, 5):
            for vv in (1, 7, 84):
                printed = parse_expression(G.DIM16[key], {"x": Fraction(xv), "v": Fraction(vv)})
                assert printed == const(Fraction(xv)) + slope(Fraction(xv)) * vv


def test_dim20_b4_one():
    b = dim20_b4_1(5).unique
    assert b is not None
    for key, want in G.DIM20.items():
        got = b.values.get("u^5" if key == "u5" else key, Fraction(1) if key == "b4" else None)
        assert got == want, key


def test_dim16_b4_one():
    b = dim20_b4_1(4).unique
    want = G.DIM16_ALL_MULTIPLES
    assert (b.values["d"], b.values["b6"], b.values["b8"], b.values["u^4"]) == (want["d"], want["b6"], want["b8"], want["u4"])


def test_dim24_rational_branches(d24):
    assert sorted(d24.rational_d()) == sorted(G.DIM24_RATIONAL_D)


def test_dim24_septic_and_reduction(d24):
    assert d24.septic_printed_variable == parse_expression(G.DIM24_SEPTIC, {"x": UniPoly.x()})
    assert d24.d_coeffs == G.DIM24_D_COEFFS


def test_dim24_roots(d24):
    ours = [r.value for r in d24.roots]
    for p in G.DIM24_ROOTS:
        assert min(abs(p - o) for o in ours) < 1e-6


def test_dim24_no_integral_conjugate(d24):
    assert d24.integral_conjugates() == []
    # the consistent assignment (one root everywhere) stays far from integers
    assert all(abs(z - round(z.real)) > 1e-2 for z in d24.consistent_d)


def test_dim24_sweep_closest_combination(d24):
    s = d24.sweep
    assert s.combinations == 7**6
    assert s.argmin == (2, 2, 4, 4, 2, 6)
    assert 1e-6 < s.min_distance < 1e-5


@given(st.integers(-30, 30), st.integers(-30, 30).filter(lambda q: q != 0), st.sampled_from([2, 3, 5, 7]))
def test_charpoly_quadratic(p, q, m):
    f = NumberField(UniPoly((-m, 0, 1)))
    cp = element_charpoly(f, UniPoly((p, q)))
    assert cp == UniPoly((p * p - m * q * q, -2 * p, 1))


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3), st.integers(-9, 9))
def test_sweep_finds_exact_integers(coeffs, c0):
    # with roots 1 and 2 and integral coefficients every combination is integral
    sweep = root_combination_sweep({0: Fraction(c0), 1: Fraction(coeffs[0]), 2: Fraction(coeffs[1])}, [1, 2])
    assert sweep.min_distance == 0
    assert sweep.combinations == 2**6
