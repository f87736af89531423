from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from pqkverify.exact import (
    InfeasibleSystem,
    NumberField,
    ParamAffine,
    RatFunc,
    Ring,
    UniPoly,
    interpolate,
    rational_roots,
    real_roots,
    solve_over_qx,
    solve_parametric,
)
from pqkverify.exact.parse import ParseError, parse_expression
from strategies import SMALL_RING, affines, graded_polys, small_fraction, unipolys


# -- graded ring ------------------------------------------------------------------


@given(graded_polys(), graded_polys(), graded_polys())
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a
    assert a - a == SMALL_RING.zero()


@given(graded_polys(), graded_polys(), st.integers(0, 8))
def test_truncation_is_ideal_quotient(a, b, w):
    assert (a * b).truncate(w) == (a.truncate(w) * b.truncate(w)).truncate(w)


def test_pqk_ring_layout():
    r = Ring.pqk(5)
    assert r.names == ("u", "c2", "c4", "c6", "c8", "c10")
    assert r.truncation == 10
    assert len(r.monomials(10)) == 19


def test_products_above_truncation_vanish():
    r = Ring.pqk(2)
    assert r.var("u") ** 3 == r.zero()


# -- affine forms and parsing -------------------------------------------------------


@given(affines(), affines(), small_fraction)
def test_affine_linear(a, b, k):
    assert (a + b) * k == a * k + b * k
    vals = {"a": Fraction(3), "b": Fraction(-2, 7)}
    assert (a + b).evaluate(vals) == a.evaluate(vals) + b.evaluate(vals)


def test_affine_rejects_products():
    with pytest.raises(ValueError):
        ParamAffine.param("a") * ParamAffine.param("b")


def test_parse_implicit_multiplication():
    r = Ring.pqk(3)
    got = parse_expression("c2(3 c4 - u^2) + c2c4", r.var)
    c2, c4, u = r.var("c2"), r.var("c4"), r.var("u")
    assert got == c2 * (c4 * 3 - u * u) + c2 * c4


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_expression("3 $ 4", {})
    with pytest.raises(ParseError):
        parse_expression("(1 + 2", {})


# -- linear algebra -------------------------------------------------------------------

matrices = st.integers(1, 5).flatmap(
    lambda n: st.integers(1, 5).flatmap(
        lambda m: st.lists(st.lists(small_fraction, min_size=m, max_size=m), min_size=n, max_size=n)
    )
)


@given(matrices, st.data())
def test_solver_back_substitution(rows, data):
    ncols = len(rows[0])
    x0 = [data.draw(affines(("p", "q"))) for _ in range(ncols)]
    rhs = [sum((x * c for x, c in zip(x0, r)), ParamAffine()) for r in rows]
    sol = solve_parametric(rows, rhs)
    assert sol.conditions == []
    vals = sol.all_values()
    for r, b in zip(rows, rhs):
        lhs = sum((vals[u] * c for u, c in zip(sol.unknowns, r)), ParamAffine())
        assert lhs == b


@given(matrices, st.data())
def test_solver_conditions_or_infeasible(rows, data):
    rhs = [data.draw(affines(("p",))) for _ in rows]
    try:
        sol = solve_parametric(rows, rhs)
    except InfeasibleSystem:
        return
    vals = sol.all_values()
    for r, b in zip(rows, rhs):
        residual = sum((vals[u] * c for u, c in zip(sol.unknowns, r)), ParamAffine()) - b
        # with p fixed to satisfy every condition, each residual vanishes
        if residual.is_zero():
            continue
        assert sol.conditions
        cond = sol.conditions[0]
        if cond.coeff("p"):
            p = -cond.constant / cond.coeff("p")
            if all(c.evaluate({"p": p}) == 0 for c in sol.conditions):
                assert residual.evaluate({"p": p}) == 0


def test_solver_infeasible_row():
    with pytest.raises(InfeasibleSystem):
        solve_parametric([[1, 1], [2, 2]], [1, 3])


def test_solver_leftmost_pivots():
    sol = solve_parametric([[1, 1, 0]], [ParamAffine.param("a")], ["x", "y", "z"])
    assert sol.free == ("y", "z")
    assert sol.values["x"] == ParamAffine.param("a") - ParamAffine.param("y")


def test_solver_over_qx_matches_pointwise():
    x = UniPoly.x()
    rows = [[RatFunc(x), RatFunc(1)], [RatFunc(1), RatFunc(x * x + 1)]]
    sol = solve_over_qx(rows, [RatFunc(1), RatFunc(x)], ["a", "b"])
    for xv in (Fraction(2), Fraction(-3, 5)):
        pt = solve_parametric([[xv, 1], [1, xv * xv + 1]], [1, xv], ["a", "b"])
        for name in ("a", "b"):
            assert sol.values[name][0](xv) == pt.values[name].constant


# -- univariate polynomials -------------------------------------------------------------


@given(unipolys(12), st.integers(0, 6))
def test_interpolation_roundtrip(p, shift):
    pts = [(Fraction(i - shift), p(Fraction(i - shift))) for i in range(max(p.degree, 0) + 1)]
    assert interpolate(pts) == p


@given(unipolys(6), unipolys(4))
def test_divmod_identity(a, b):
    assume(not b.is_zero())
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(unipolys(7))
def test_real_roots_residual(p):
    assume(p.degree >= 1)
    norm = float(sum(abs(c) for c in p.coeffs))
    for precision in (8, 12):
        for r in real_roots(p, precision):
            val = sum(float(c) * r.value**i for i, c in enumerate(p.coeffs))
            assert abs(val) < 10 ** (3 - precision) * norm * max(1.0, abs(r.value)) ** p.degree


@given(st.lists(st.builds(Fraction, st.integers(-30, 30), st.integers(1, 5)), min_size=1, max_size=4, unique=True))
def test_rational_roots_exact(roots):
    p = UniPoly.from_roots(roots) * UniPoly((1, 0, 1))
    assert rational_roots(p) == sorted(roots)


def test_number_field_inverse():
    f = NumberField(UniPoly((-2, 0, 1)))
    a = UniPoly((1, 1))
    assert f.mul(a, f.inverse(a)) == UniPoly((1,))


def test_ratfunc_reduces():
    x = UniPoly.x()
    r = RatFunc(x * x - 1, x - 1)
    assert r == RatFunc(x + 1)
    assert r(Fraction(3)) == 4
