"""Special-case searches in dimensions 16, 20 and 24.

Each search replaces c2 by x*u in some of the characteristic numbers, turns
the remaining parameters (d, Betti numbers) into unknowns and solves the
resulting linear system over Q(x).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .exact.affine import ParamAffine
from .exact.graded import Exponents
from .exact.linalg import QxSolution, solve_over_qx
from .exact.unipoly import NumberField, RatFunc, UniPoly, rational_roots, real_roots
from .index import Equation, _ring, fundamental_system, index_form

__all__ = [
    "Branch",
    "C2System",
    "Dim16Report",
    "Dim20Report",
    "Dim24Report",
    "c2_branches",
    "c2_system",
    "dim16_search",
    "dim16_volume_relations",
    "dim20_b4_1",
    "dim24_b4_1",
]

MODES = ("pure", "all")


@dataclass
class C2System:
    """Linear system over Q[x] after the substitution c2 -> x*u.

    In mode ``"pure"`` only the numbers c2^a u^b are rewritten (as x^a u^(a+b));
    in mode ``"all"`` every monomial containing c2 is.
    """

    n: int
    mode: str
    unknowns: list[str]
    rows: list[list[UniPoly]]
    rhs: list[Fraction]

    def solve(self) -> QxSolution:
        return solve_over_qx(self.rows, self.rhs, self.unknowns)


def _reduce(exps: Exponents, ic2: int, iu: int, mode: str) -> tuple[Exponents, int]:
    a = exps[ic2]
    if not a:
        return exps, 0
    others = any(e for i, e in enumerate(exps) if i not in (ic2, iu))
    if mode == "pure" and others:
        return exps, 0
    out = list(exps)
    out[ic2] = 0
    out[iu] += a
    return tuple(out), a


def c2_system(
    n: int,
    equations: Sequence[Equation],
    params: Sequence[str],
    mode: str = "pure",
    fixed: Mapping[str, Fraction] | None = None,
) -> C2System:
    """Build the Q[x] system; ``params`` become unknowns, ``fixed`` are substituted first."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    ring = _ring(n)
    ic2, iu = ring.index("c2"), ring.index("u")
    fixed = {k: Fraction(v) for k, v in (fixed or {}).items()}
    reduced: list[Exponents] = []
    for m in ring.monomials(ring.truncation):
        t, _ = _reduce(m, ic2, iu, mode)
        if t not in reduced:
            reduced.append(t)
    unknowns = [ring.monomial_str(m) for m in reduced] + [p for p in params if p not in fixed]
    col = {name: j for j, name in enumerate(unknowns)}
    rows, rhs = [], []
    for eq in equations:
        row = [UniPoly() for _ in unknowns]
        for e, c in eq.lhs.coeffs.items():
            t, a = _reduce(e, ic2, iu, mode)
            j = col[ring.monomial_str(t)]
            row[j] = row[j] + UniPoly([0] * a + [c])
        r = eq.rhs.substitute({k: ParamAffine(v) for k, v in fixed.items()})
        for p, c in r.coeffs.items():
            if p not in col:
                raise ValueError(f"parameter {p} is neither an unknown nor fixed")
            row[col[p]] = row[col[p]] - c
        rows.append(row)
        rhs.append(r.constant)
    return C2System(n, mode, unknowns, rows, rhs)


def _betti_names(n: int, b2_zero: bool) -> list[str]:
    return [f"b{2 * k}" for k in range(2 if b2_zero else 1, n + 1)]


def _at(value: tuple[RatFunc, dict[str, RatFunc]], x, free: Mapping[str, Fraction]) -> Fraction:
    const, deps = value
    return const(x) - sum((f(x) * free[k] for k, f in deps.items()), Fraction(0))


# -- dimension 16 ---------------------------------------------------------------


@dataclass
class Dim16Branch:
    betti: tuple[int, int, int]
    values: dict[str, Fraction]
    rejected: bool
    reason: str = ""


@dataclass
class Dim16Report:
    d: RatFunc
    b4: RatFunc
    v: RatFunc
    hits: list[tuple[int, Fraction]]
    x: int | None
    branches: list[Dim16Branch]
    solution: QxSolution
    full_condition: UniPoly

    @property
    def surviving(self) -> list[tuple]:
        out = []
        for br in self.branches:
            if not br.rejected:
                out.append((br.values["d"], br.values["v"]) + br.betti)
        return out


def _dim16_system(mode: str, with_i15: bool = True) -> C2System:
    cs = fundamental_system(4, True, {}, volume=False)
    eqs = list(cs.equations)
    if with_i15:
        eqs.append(Equation(index_form(1, 5, 4), ParamAffine(0)))
    return c2_system(4, eqs, ["d"] + _betti_names(4, True), mode)


def dim16_search(x_range: tuple[int, int] = (-200, 200), d_range: tuple[int, int] = (8, 55)) -> Dim16Report:
    """c2 = x*u in dimension 16 with b2 = 0 and i^{1,5} = 0.

    Integrality of x comes from the geometry; the sweep covers ``x_range``.
    Integral hits with d in [d_lo, d_hi) are expanded into the Betti branches
    allowed by the Betti relation and Hard-Lefschetz, and a branch is rejected
    when it forces c4^2 < 0 (the intersection form is positive definite).
    """
    system = _dim16_system("pure")
    sol = system.solve()
    d, b4 = sol.values["d"][0], sol.values["b4"][0]
    v = sol.values["u^4"][0] * 256
    hits = []
    for x in range(x_range[0], x_range[1] + 1):
        try:
            dx = d(Fraction(x))
        except ZeroDivisionError:
            continue
        if dx.denominator == 1 and d_range[0] <= dx < d_range[1]:
            hits.append((x, dx))
    branches = []
    xs = hits[0][0] if len(hits) == 1 else None
    if xs is not None:
        x = Fraction(xs)
        rb4 = b4(x)
        free = sol.free
        for b6, b8 in _dim16_betti(rb4):
            pick = {"b8": Fraction(b8)} if "b8" in free else {}
            vals = {name: _at(sol.values[name], x, pick) for name in sol.values}
            vals.update(pick)
            vals["v"] = v(x)
            if vals.get("b6") != b6:
                continue
            c4sq = vals["c4^2"]
            rejected = c4sq < 0
            branches.append(
                Dim16Branch((int(rb4), b6, b8), vals, rejected, f"c4^2 = {c4sq} < 0" if rejected else "")
            )
    full = _dim16_system("all").solve().condition_gcd()
    return Dim16Report(d, b4, v, hits, xs, branches, sol, full)


def dim16_volume_relations() -> dict[str, tuple[RatFunc, RatFunc]]:
    """d and b4 as a + b*v over Q(x) before i^{1,5} = 0 is imposed; v = 256 u^4."""
    system = _dim16_system("pure", with_i15=False)
    order = [k for k in system.unknowns if k != "u^4"] + ["u^4"]
    idx = [system.unknowns.index(k) for k in order]
    sol = solve_over_qx([[r[i] for i in idx] for r in system.rows], system.rhs, order)
    out = {}
    for name in ("d", "b4"):
        const, deps = sol.values[name]
        out[name] = (const, RatFunc(0) - deps.get("u^4", RatFunc(0)) / 256)
    return out


def _dim16_betti(b4: Fraction) -> list[tuple[int, int]]:
    """(b6, b8) with -1 + 3 b4 - b6 = 2 b8, b8 >= b4 >= 1, b6 >= 0."""
    if b4.denominator != 1:
        return []
    out = []
    for b6 in range(0, int(3 * b4)):
        twice = -1 + 3 * b4 - b6
        if twice >= 0 and twice % 2 == 0 and twice // 2 >= b4:
            out.append((b6, int(twice // 2)))
    return out


# -- branch analysis ------------------------------------------------------------


@dataclass
class Branch:
    """One solution family of a C2System.

    Rational branches carry the exact value ``x`` and all unknowns; an
    algebraic branch carries the irreducible ``modulus`` its x must satisfy
    and ``d`` reduced modulo it.
    """

    kind: str  # "rational", "degenerate" or "algebraic"
    x: Fraction | None = None
    values: dict[str, Fraction] = field(default_factory=dict)
    free: tuple[str, ...] = ()
    modulus: UniPoly | None = None
    d_mod: UniPoly | None = None

    @property
    def d(self):
        return self.values.get("d")


def _solve_at(system: C2System, x: Fraction):
    from .exact.linalg import InfeasibleSystem, solve_parametric

    rows = [[c(x) for c in r] for r in system.rows]
    try:
        return solve_parametric(rows, system.rhs, system.unknowns)
    except InfeasibleSystem:
        return None


def _squarefree_factors(g: UniPoly) -> tuple[list[Fraction], UniPoly]:
    """Rational roots of g and the remaining squarefree cofactor."""
    sf = g.squarefree()
    roots = rational_roots(sf)
    rest = sf
    for r in roots:
        rest = rest.exact_div(UniPoly((-r, 1)))
    return roots, rest.monic()


def c2_branches(system: C2System) -> tuple[QxSolution, list[Branch]]:
    """All solution branches: roots of the consistency conditions plus the
    finitely many x where a generic pivot vanishes, each re-solved exactly."""
    sol = system.solve()
    branches: list[Branch] = []
    seen: set[Fraction] = set()
    g = sol.condition_gcd()
    if not g.is_zero():
        roots, rest = _squarefree_factors(g)
        for r in roots:
            exact = _solve_at(system, r)
            if exact is not None:
                seen.add(r)
                branches.append(Branch("rational", r, {k: v.constant for k, v in exact.values.items() if v.is_constant()}, exact.free))
        if rest.degree >= 1:
            num, den = sol.values["d"][0].num, sol.values["d"][0].den
            field_ = NumberField(rest)
            branches.append(Branch("algebraic", modulus=rest, d_mod=field_.div(num, den)))
    specials: set[Fraction] = set()
    for p in sol.pivots:
        specials.update(rational_roots(p.num))
        specials.update(rational_roots(p.den))
    for name, (const, deps) in sol.values.items():
        specials.update(rational_roots(const.den))
        for f in deps.values():
            specials.update(rational_roots(f.den))
    for r in sorted(specials - seen):
        exact = _solve_at(system, r)
        if exact is not None:
            vals = {k: v.constant for k, v in exact.values.items() if v.is_constant()}
            branches.append(Branch("degenerate", r, vals, exact.free))
    return sol, branches


def compose(p: UniPoly, q: UniPoly) -> UniPoly:
    out = UniPoly()
    for c in reversed(p.coeffs):
        out = out * q + c
    return out


# -- dimension 20 ---------------------------------------------------------------


@dataclass
class Dim20Report:
    n: int
    branches: list[Branch]
    integral: list[Branch]

    @property
    def unique(self) -> Branch | None:
        return self.integral[0] if len(self.integral) == 1 else None


def _b4_one_system(n: int) -> C2System:
    cs = fundamental_system(n, True, {}, volume=False)
    return c2_system(n, cs.equations, ["d"] + _betti_names(n, True), "all", fixed={"b4": 1})


def dim20_b4_1(n: int = 5) -> Dim20Report:
    """b2 = 0, b4 = 1 and every monomial containing c2 rewritten through c2 = x*u.

    With b4 = 1 the Betti relation forces the cohomology of a projective space
    in dimension 20, hence all c_2i are multiples of u^i; the same computation
    at n = 4 serves as the 16-dimensional analogue.
    """
    _, branches = c2_branches(_b4_one_system(n))
    integral = [b for b in branches if b.d is not None and b.d.denominator == 1 and not b.free]
    return Dim20Report(n, branches, integral)


# -- dimension 24 ---------------------------------------------------------------

# the printed root variable is y = 1 - x for c2 = x*u
_PRINTED_SHIFT = UniPoly((1, -1))

# exponent of the root symbol in each printed monomial, in printed order
SWEEP_POWERS = (1, 2, 6, 5, 4, 3)


@dataclass
class SweepResult:
    combinations: int
    min_distance: float
    argmin: tuple[int, ...]
    closest: complex


@dataclass
class Dim24Report:
    branches: list[Branch]
    septic: UniPoly
    septic_printed_variable: UniPoly
    d_coeffs: dict[int, Fraction]
    roots: list
    sweep: SweepResult | None
    consistent_d: list[complex] = field(default_factory=list)
    d_charpoly: UniPoly | None = None

    def integral_conjugates(self) -> list[Fraction]:
        """Integers among the values of d at the roots, decided exactly."""
        return [r for r in rational_roots(self.d_charpoly) if r.denominator == 1]

    def rational_d(self) -> list[Fraction]:
        return [b.d for b in self.branches if b.kind != "algebraic" and b.d is not None]


def dim24_b4_1(sweep: bool = True, precision: int = 15) -> Dim24Report:
    """b2 = 0, b4 = 1 in dimension 24 with c2 = x*u in every monomial containing c2.

    The algebraic branch is reported in the variable y = 1 - x, in which d is
    a polynomial of degree 6 modulo the septic.  The sweep evaluates that
    polynomial with each power fed by an independently chosen root.
    """
    _, branches = c2_branches(_b4_one_system(6))
    alg = [b for b in branches if b.kind == "algebraic"]
    if len(alg) != 1:
        raise ArithmeticError(f"expected one algebraic branch, found {len(alg)}")
    septic_x = alg[0].modulus
    septic_y = compose(septic_x, _PRINTED_SHIFT).primitive()
    field_y = NumberField(septic_y)
    d_y = field_y.reduce(compose(alg[0].d_mod, _PRINTED_SHIFT))
    coeffs = {k: d_y[k] for k in range(septic_y.degree)}
    roots = real_roots(septic_y, precision)
    result = root_combination_sweep(coeffs, [r.value for r in roots]) if sweep else None
    consistent = [d_y(r.value) for r in roots]
    charpoly = element_charpoly(field_y, d_y)
    return Dim24Report(branches, septic_x, septic_y, coeffs, roots, result, consistent, charpoly)


def element_charpoly(field_: NumberField, a: UniPoly) -> UniPoly:
    """Characteristic polynomial of multiplication by a on Q[y]/(modulus).

    Its roots are the values of a at the roots of the modulus, so a has an
    integral value at some root exactly when this polynomial has an integral root.
    """
    deg = field_.modulus.degree
    basis = [UniPoly([0] * i + [1]) for i in range(deg)]
    cols = [field_.mul(a, b) for b in basis]
    mat = [[cols[j][i] for j in range(deg)] for i in range(deg)]
    # Faddeev-LeVerrier
    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * deg for _ in range(deg)]
    ident = [[Fraction(int(i == j)) for j in range(deg)] for i in range(deg)]
    c = Fraction(1)
    for k in range(1, deg + 1):
        m = [[sum((mat[i][t] * m[t][j] for t in range(deg)), Fraction(0)) + c * ident[i][j] for j in range(deg)] for i in range(deg)]
        am = [[sum((mat[i][t] * m[t][j] for t in range(deg)), Fraction(0)) for j in range(deg)] for i in range(deg)]
        c = -sum((am[i][i] for i in range(deg)), Fraction(0)) / k
        coeffs.append(c)
    return UniPoly(list(reversed(coeffs)))


def root_combination_sweep(coeffs: Mapping[int, Fraction], roots: Sequence[complex]) -> SweepResult:
    """Distance from the nearest integer of d over every assignment of roots to
    the symbols x1..x6 (a complex value counts by its full modulus)."""
    base = complex(coeffs.get(0, 0))
    tables = [[complex(coeffs.get(k, 0)) * r**k for r in roots] for k in SWEEP_POWERS]
    best = (math.inf, (), 0j)
    count = 0
    for combo in itertools.product(range(len(roots)), repeat=len(SWEEP_POWERS)):
        val = base + sum(tables[i][j] for i, j in enumerate(combo))
        dist = abs(val - round(val.real))
        count += 1
        if dist < best[0]:
            best = (dist, combo, val)
    return SweepResult(count, best[0], best[1], best[2])
