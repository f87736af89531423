"""Twisted Dirac indices as linear forms in characteristic numbers, the
fundamental linear system built from them, and positivity estimates."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .charclass import ahat_class, bundle_E, bundle_H, exterior0, symmetric
from .exact.affine import ParamAffine
from .exact.graded import Exponents, GradedPoly, Ring
from .exact.linalg import Solution, solve_parametric

__all__ = [
    "ConstraintSet",
    "Equation",
    "LinearForm",
    "UnresolvedMonomial",
    "fundamental_system",
    "index_form",
    "monomial_basis",
    "parabola_bound",
    "positivity_form",
    "solve_fundamental",
    "volume_param",
]


class UnresolvedMonomial(ValueError):
    pass


@lru_cache(maxsize=None)
def _ring(n: int) -> Ring:
    return Ring.pqk(n)


@lru_cache(maxsize=None)
def _ahat(n: int) -> GradedPoly:
    return ahat_class(_ring(n))


@lru_cache(maxsize=None)
def _ch_lambda0(n: int, p: int) -> GradedPoly:
    return exterior0(p, bundle_E(_ring(n))).character


@lru_cache(maxsize=None)
def _ch_sym(n: int, q: int) -> GradedPoly:
    return symmetric(q, bundle_H(_ring(n))).character


def monomial_basis(n: int) -> list[Exponents]:
    """Top-weight monomials, i.e. the characteristic numbers of a 4n-manifold."""
    ring = _ring(n)
    return ring.monomials(ring.truncation)


@dataclass(frozen=True)
class LinearForm:
    """A linear combination of characteristic numbers."""

    ring: Ring
    coeffs: Mapping[Exponents, Fraction]
    label: str = ""
    genuine: bool = True

    @classmethod
    def from_poly(cls, poly: GradedPoly, label: str = "", genuine: bool = True) -> "LinearForm":
        top = poly.component(poly.ring.truncation)
        return cls(poly.ring, dict(top.terms), label, genuine)

    @classmethod
    def monomial(cls, ring: Ring, name: str) -> "LinearForm":
        from .exact.graded import parse_monomial

        return cls(ring, {parse_monomial(ring, name): Fraction(1)}, name)

    def coefficient(self, name_or_exps) -> Fraction:
        if isinstance(name_or_exps, str):
            return self.poly[name_or_exps]
        return self.coeffs.get(tuple(name_or_exps), Fraction(0))

    @property
    def poly(self) -> GradedPoly:
        return GradedPoly(self.ring, self.coeffs)

    def row(self, basis: Sequence[Exponents]) -> list[Fraction]:
        return [self.coeffs.get(m, Fraction(0)) for m in basis]

    def evaluate(self, values: Mapping[str, ParamAffine]) -> ParamAffine:
        """Substitute characteristic numbers given as affine forms keyed by monomial name."""
        out = ParamAffine()
        for e, c in self.coeffs.items():
            name = self.ring.monomial_str(e)
            if name not in values:
                raise UnresolvedMonomial(name)
            out = out + ParamAffine.lift(values[name]) * c
        return out

    def __str__(self):
        return str(self.poly)


def index_form(p: int, q: int, n: int) -> LinearForm:
    """i^{p,q}: top-weight part of A-hat * ch(Lambda_0^p E) * ch(S^q H).

    Pairs with n + p + q odd do not come from a global bundle; they are marked
    ``genuine=False`` and should be read as formal expressions.
    """
    if not 0 <= p <= 2 * n or q < 0:
        raise ValueError(f"index i^({p},{q}) out of range for n={n}")
    poly = _ahat(n) * _ch_lambda0(n, p) * _ch_sym(n, q)
    return LinearForm.from_poly(poly, f"i^{{{p},{q}}}", (n + p + q) % 2 == 0)


def volume_param(n: int) -> str:
    return f"u{n}"


@dataclass(frozen=True)
class Equation:
    lhs: LinearForm
    rhs: ParamAffine
    source: str = "index"  # "index" or "definition"


@dataclass
class ConstraintSet:
    n: int
    equations: list[Equation] = field(default_factory=list)
    betti_relation: ParamAffine | None = None

    @property
    def basis(self) -> list[Exponents]:
        return monomial_basis(self.n)

    def index_equations(self) -> list[Equation]:
        return [e for e in self.equations if e.source == "index"]

    def __len__(self):
        return len(self.equations)


def betti_param(j: int, b2_zero: bool) -> ParamAffine:
    if j < 0:
        return ParamAffine(0)
    if j == 0:
        return ParamAffine(1)
    if j == 2 and b2_zero:
        return ParamAffine(0)
    return ParamAffine.param(f"b{j}")


def betti_relation_form(n: int, b2_zero: bool = True) -> ParamAffine:
    """sum_p (6p(n-1-p) - (n-1)(n-3)) b_{2p} - n(n-1)/2 b_{2n}, which vanishes."""
    out = ParamAffine()
    for p in range(n):
        out = out + betti_param(2 * p, b2_zero) * (6 * p * (n - 1 - p) - (n - 1) * (n - 3))
    return out - betti_param(2 * n, b2_zero) * Fraction(n * (n - 1), 2)


def fundamental_system(
    n: int,
    b2_zero: bool = True,
    definitions: Mapping[tuple[int, int], str] | None = None,
    volume: bool = True,
    include_betti_relation: bool = False,
) -> ConstraintSet:
    """Index equations i^{k,l} = 0 (k+l<n), = (-1)^k (b_2k + b_2k-2) (k+l=n), i^{0,n+2} = d.

    ``definitions`` add equations i^{p,q} = name that introduce further
    parameters (e.g. the A-hat genus); with ``volume`` the top power of u
    is tied to the parameter ``u<n>``.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    eqs: list[Equation] = []
    for total in range(n):
        for k in range(total + 1):
            l = total - k
            if (n + k + l) % 2 == 0:
                eqs.append(Equation(index_form(k, l, n), ParamAffine(0)))
    for k in range(n + 1):
        rhs = (betti_param(2 * k, b2_zero) + betti_param(2 * k - 2, b2_zero)) * (-1) ** k
        eqs.append(Equation(index_form(k, n - k, n), rhs))
    eqs.append(Equation(index_form(0, n + 2, n), ParamAffine.param("d")))
    for (p, q), name in (definitions or {}).items():
        eqs.append(Equation(index_form(p, q, n), ParamAffine.param(name), "definition"))
    if volume:
        ring = _ring(n)
        eqs.append(Equation(LinearForm.monomial(ring, f"u^{n}"), ParamAffine.param(volume_param(n)), "definition"))
    cs = ConstraintSet(n, eqs)
    if include_betti_relation:
        cs.betti_relation = betti_relation_form(n, b2_zero)
    return cs


def default_definitions(n: int) -> dict[tuple[int, int], str]:
    defs = {(0, 0): "A"}
    if n == 5:
        defs[(1, 6)] = "I16"
    return defs


def solve_system(cs: ConstraintSet) -> Solution:
    basis = cs.basis
    ring = _ring(cs.n)
    names = [ring.monomial_str(m) for m in basis]
    rows = [e.lhs.row(basis) for e in cs.equations]
    rhs = [e.rhs for e in cs.equations]
    sol = solve_parametric(rows, rhs, names)
    if cs.betti_relation is not None:
        sol.conditions.append(cs.betti_relation)
    return sol


def solve_fundamental(
    n: int,
    b2_zero: bool = True,
    definitions: Mapping[tuple[int, int], str] | None = None,
    include_betti_relation: bool = False,
) -> Solution:
    """Parametric solution of the fundamental system.

    Characteristic numbers that stay undetermined are listed in ``free``;
    consistency conditions among the parameters land in ``conditions``.
    """
    defs = default_definitions(n) if definitions is None else definitions
    return solve_system(fundamental_system(n, b2_zero, defs, True, include_betti_relation))


def to_volume(form: ParamAffine, n: int) -> ParamAffine:
    """Rewrite u^n in terms of the quaternionic volume v = 4^n u^n."""
    return form.substitute({volume_param(n): ParamAffine.param("v") / 4**n})


def eliminate(form: ParamAffine, conditions: Iterable[ParamAffine], prefer: Sequence[str]) -> ParamAffine:
    """Use vanishing conditions to remove parameters, trying ``prefer`` in order."""
    for cond in conditions:
        for name in prefer:
            c = cond.coeff(name)
            if c:
                value = (ParamAffine.param(name) * c - cond) / c
                form = form.substitute({name: value})
                break
    return form


def positivity_form(
    k,
    l,
    m,
    n_c,
    solution: Solution | None = None,
    n: int = 5,
    allow_free: bool = False,
    fixes: Mapping[str, object] | None = None,
    eliminate_with: Sequence[str] = (),
) -> ParamAffine:
    """<(k c2^2 + l c2 u + m u^2 + n_c c4)^2 u, [M]> in terms of the parameters.

    Float coefficients are allowed; the result then carries floats.  Raises
    UnresolvedMonomial if a free characteristic number survives, unless
    ``allow_free``.  ``fixes`` substitutes parameter values (e.g. d=0) and
    ``eliminate_with`` lists parameters to remove via the solution's conditions.
    """
    if solution is None:
        solution = solve_fundamental(n)
    ring = _ring(n)
    u, c2, c4 = ring.var("u"), ring.var("c2"), ring.var("c4")
    pieces = {"c2^2": c2 * c2, "c2*u": c2 * u, "u^2": u * u, "c4": c4}
    cs = {"c2^2": k, "c2*u": l, "u^2": m, "c4": n_c}
    # expand the square symbolically so float coefficients never enter GradedPoly
    total = ParamAffine()
    e = list(pieces)
    for i, a in enumerate(e):
        for j, b in enumerate(e):
            coef = cs[a] * cs[b]
            if coef == 0:
                continue
            mono = (pieces[a] * pieces[b] * u).component(ring.truncation)
            for exps, c in mono.terms.items():
                total = total + solution.value(ring.monomial_str(exps)) * (coef * c)
    if fixes:
        total = total.substitute(fixes)
    if eliminate_with:
        total = eliminate(total, solution.conditions, eliminate_with)
    total = _drop_zero(total)
    leftover = [f for f in solution.free if f in total.coeffs]
    if leftover and not allow_free:
        raise UnresolvedMonomial(", ".join(leftover))
    return total


def _drop_zero(form: ParamAffine, tol: float = 1e-9) -> ParamAffine:
    coeffs = {}
    for key, c in form.coeffs.items():
        if isinstance(c, float) and abs(c) < tol:
            continue
        coeffs[key] = c
    return ParamAffine(form.constant, coeffs)


def euler_combination(n_c: float, m: float) -> tuple[float, float, float, float]:
    """Coefficients (k, l, m, n) with k = -n and l = -2 sqrt(-m n - 18 n^2)."""
    return (-n_c, -2 * math.sqrt(-m * n_c - 18 * n_c * n_c), m, n_c)


@dataclass
class ParabolaBound:
    apex_num: ParamAffine
    apex_den: ParamAffine
    coefficients: tuple[ParamAffine, ParamAffine, ParamAffine]
    bound: Callable
    rectangle_max: float
    argmax: tuple[float, int]
    profile: dict = field(default_factory=dict)

    def apex(self, A, v):
        return self.apex_num.evaluate({"A": A, "v": v}) / self.apex_den.evaluate({"A": A, "v": v})


def parabola_bound(
    d_fixed=0,
    A_range: tuple = (Fraction(1053, 32768), Fraction(182325, 262144)),
    v_range: tuple[int, int] = (1, 1024),
    solution: Solution | None = None,
) -> ParabolaBound:
    """Bound on i^{1,6} from <(c2 u + m u^2)^2 u, [M]> >= 0, optimised over m.

    The inequality reads i^{1,6} <= a0 + a1 m + a2 m^2 with a_i affine in
    (A, v); its apex gives the sharpest bound g(A, v) = a0 - a1^2 / (4 a2),
    which is then maximised over A in A_range and integral v in v_range.
    """
    if solution is None:
        solution = solve_fundamental(5)
    fixes = {"d": d_fixed}

    def part(l, m):
        form = positivity_form(0, l, m, 0, solution, fixes=fixes)
        return to_volume(form, 5)

    f0 = part(1, 0)  # c2^2 u^3
    # (c2u + m u^2)^2 u = c2^2u^3 + 2 m c2u^4 + m^2 u^5
    c2u4 = to_volume(solution.value("c2*u^4").substitute(fixes), 5)
    u5 = to_volume(solution.value("u^5"), 5)
    ci = f0.coeff("I16")
    if ci == 0:
        raise ValueError("i^{1,6} does not enter the inequality")
    # f0 + 2m c2u4 + m^2 u5 >= 0 with f0 = ci*I16 + rest, ci < 0  =>  I16 <= (rest + ...)/(-ci)
    rest = f0 - ParamAffine(0, {"I16": ci})
    a0, a1, a2 = rest / (-ci), c2u4 * 2 / (-ci), u5 / (-ci)
    apex_num = -a1 / 2
    apex_den = a2
    # normalise the apex to an integral-coefficient numerator over a multiple of v
    scale = apex_den.coeff("v")
    apex_num, apex_den = apex_num / scale, apex_den / scale
    den = apex_num.common_denominator()
    apex_num, apex_den = apex_num * den, apex_den * den

    def g(A, v):
        vals = {"A": A, "v": v}
        x0, x1, x2 = (c.evaluate(vals) for c in (a0, a1, a2))
        if x2 == 0:
            raise ZeroDivisionError("v = 0")
        return x0 - x1 * x1 / (4 * x2)

    A_lo, A_hi = (float(a) for a in A_range)
    best = None
    profile = {}
    for v in range(v_range[0], v_range[1] + 1):
        # g is concave in A for fixed v: maximise exactly, then clip to the interval
        A_star = _concave_argmax(lambda A: g(A, v), A_lo, A_hi)
        val = g(A_star, v)
        profile[v] = (A_star, val)
        if best is None or val > best[0]:
            best = (val, A_star, v)
    return ParabolaBound(apex_num, apex_den, (a0, a1, a2), g, best[0], (best[1], best[2]), profile)


def _concave_argmax(fn, lo: float, hi: float) -> float:
    # the bound is a quadratic in A, so three samples determine it
    mid = (lo + hi) / 2
    y0, y1, y2 = fn(lo), fn(mid), fn(hi)
    h = (hi - lo) / 2
    curv = (y0 - 2 * y1 + y2) / (h * h)
    if curv >= 0:
        return lo if y0 >= y2 else hi
    slope = (y2 - y0) / (2 * h)
    x = mid - slope / curv
    return min(max(x, lo), hi)
