"""The Hilbert polynomial q -> i^{0,q} and what its values say about d, v and A-hat.

Parameters: ``A`` is the A-hat genus, ``d`` the isometry dimension and ``v``
the quaternionic volume (4u)^n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_CEILING, ROUND_FLOOR, Decimal, localcontext
from fractions import Fraction
from math import comb

from .exact.affine import ParamAffine
from .exact.linalg import solve_parametric
from .exact.unipoly import UniPoly, evaluate_affine, interpolate

__all__ = [
    "AhatBounds",
    "CGDecomposition",
    "Congruence",
    "CongruenceResult",
    "HilbertData",
    "Inequality",
    "admissible_pairs",
    "ahat_bounds",
    "bound_inequalities",
    "cg_coefficients",
    "congruences",
    "solve_f_values",
]


@dataclass(frozen=True)
class CGDecomposition:
    """(H-2)^m = sum_j coeffs[j] * S^(m-j) H."""

    m: int
    coeffs: tuple[int, ...]

    def virtual_rank(self) -> int:
        return sum(c * (self.m - j + 1) for j, c in enumerate(self.coeffs))


def cg_coefficients(m: int) -> CGDecomposition:
    if m < 0:
        raise ValueError("m must be non-negative")
    binom = lambda a, b: comb(a, b) if b >= 0 else 0
    return CGDecomposition(m, tuple((-1) ** j * (binom(2 * m, j) - binom(2 * m, j - 2)) for j in range(m + 1)))


@dataclass
class HilbertData:
    n: int
    values: dict[int, ParamAffine]
    polynomial: UniPoly

    def __call__(self, q) -> ParamAffine:
        return evaluate_affine(self.polynomial, q)


def _known_values(n: int) -> dict[int, ParamAffine]:
    known = {0: ParamAffine.param("A"), n: ParamAffine(1), n + 2: ParamAffine.param("d")}
    for q in range(1, n):
        if (n + q) % 2 == 0:
            known[q] = ParamAffine(0)
    return known


def solve_f_values(n: int = 5) -> HilbertData:
    """Values f(0..2n+1) from the known indices and the Clebsch-Gordan relations.

    <A-hat ch((H-2)^m), [M]> is u^n for m = n and vanishes for m > n, since
    ch(H) - 2 starts in weight one.  u^n is written as v / 4^n.
    """
    known = _known_values(n)
    top = 2 * n + 1
    unknown = [q for q in range(top + 1) if q not in known]
    volume = ParamAffine.param("v") / 4**n
    rows, rhs = [], []
    for m in range(n, top + 1):
        cg = cg_coefficients(m)
        row = [Fraction(0)] * len(unknown)
        target = volume if m == n else ParamAffine(0)
        for j, c in enumerate(cg.coeffs):
            q = m - j
            if q in known:
                target = target - known[q] * c
            else:
                row[unknown.index(q)] += c
        rows.append(row)
        rhs.append(target)
    sol = solve_parametric(rows, rhs, [f"f{q}" for q in unknown])
    if sol.free or sol.conditions:
        raise ArithmeticError("Hilbert value system is not uniquely solvable")
    values = dict(known)
    for q in unknown:
        values[q] = sol.values[f"f{q}"]
    values = dict(sorted(values.items()))
    poly = interpolate(list(values.items()))
    if poly.degree > top:
        raise ArithmeticError("interpolant degree exceeds 2n+1")
    return HilbertData(n, values, poly)


@dataclass(frozen=True)
class Inequality:
    """``form >= 0`` (strict when ``strict``)."""

    form: ParamAffine
    label: str = ""
    strict: bool = False

    def holds(self, values) -> bool:
        val = self.form.evaluate(values)
        return val > 0 if self.strict else val >= 0


def bound_inequalities(q: int, data: HilbertData | None = None) -> tuple[Inequality, Inequality]:
    """0 <= f(n+2q) <= C(2n+1+2q, 2n+1), the projective space value."""
    if q < 0:
        raise ValueError("q must be non-negative")
    data = data or solve_f_values()
    n = data.n
    f = data(n + 2 * q)
    cap = comb(2 * n + 1 + 2 * q, 2 * n + 1)
    return Inequality(f, f"f({n + 2 * q}) >= 0"), Inequality(ParamAffine(cap) - f, f"f({n + 2 * q}) <= {cap}")


def c2u4_constraint(d=None) -> ParamAffine:
    """c2 u^4 - u^5 >= 0 with the solved c2 u^4, in (A, d, v); n = 5."""
    from .index import solve_fundamental, to_volume

    sol = solve_fundamental(5, True, {(0, 0): "A"})
    form = to_volume(sol.value("c2*u^4") - ParamAffine.param("u5"), 5)
    return form if d is None else form.substitute({"d": ParamAffine(d)})


@dataclass
class AhatBounds:
    lower: Fraction
    upper: Fraction
    combination: ParamAffine
    weights: tuple[Fraction, Fraction]

    def decimal(self, digits: int = 10) -> tuple[str, str]:
        """Strict bounds rounded outward: lower down, upper up."""
        return _decimal(self.lower, digits, ROUND_FLOOR), _decimal(self.upper, digits, ROUND_CEILING)


def _decimal(x: Fraction, digits: int, mode: str) -> str:
    with localcontext() as ctx:
        ctx.prec = 60
        val = Decimal(x.numerator) / Decimal(x.denominator)
        return str(val.quantize(Decimal(1).scaleb(-digits), rounding=mode))


def ahat_bounds(d: int = 0, v_range: tuple[int, int] = (1, 1024)) -> AhatBounds:
    """Bounds on A-hat for fixed d.

    Upper: f(11) <= 12376 at the smallest volume.  Lower: the combination of
    f(9) >= 0 and c2 u^4 >= u^5 in which v cancels.
    """
    data = solve_f_values(5)
    f9, _ = bound_inequalities(2, data)
    _, cap11 = bound_inequalities(3, data)
    prep = c2u4_constraint()
    gamma = -f9.form.coeff("v") / prep.coeff("v")
    combo = f9.form + prep * gamma
    combo = combo / combo.coeff("A") * Fraction(32768, 448)
    if combo.coeff("v") != 0:
        raise ArithmeticError("volume did not cancel")
    at_d = combo.substitute({"d": ParamAffine(d)})
    lower = -at_d.constant / at_d.coeff("A")
    up = cap11.form.substitute({"d": ParamAffine(d), "v": ParamAffine(v_range[0])})
    upper = -up.constant / up.coeff("A")
    return AhatBounds(lower, upper, combo, (Fraction(1), gamma))


# -- congruences ----------------------------------------------------------------


@dataclass(frozen=True)
class Congruence:
    var: str
    residue: int
    modulus: int

    def holds(self, value: int) -> bool:
        return value % self.modulus == self.residue

    def __str__(self):
        return f"{self.var} = {self.residue} mod {self.modulus}"


@dataclass
class CongruenceResult:
    """Residues (d, v) mod ``modulus`` for which f(odd argument) is integral."""

    modulus: int
    numerator: ParamAffine
    residues: frozenset[tuple[int, int]]
    conditions: list[Congruence] = field(default_factory=list)

    def conjunction_set(self) -> frozenset[tuple[int, int]]:
        return _grid(self.modulus, lambda d, v: all(c.holds(d if c.var == "d" else v) for c in self.conditions))

    def disjunction_set(self) -> frozenset[tuple[int, int]]:
        return _grid(self.modulus, lambda d, v: any(c.holds(d if c.var == "d" else v) for c in self.conditions))

    def is_conjunction(self) -> bool:
        return self.conjunction_set() == self.residues

    def is_disjunction(self) -> bool:
        return self.disjunction_set() == self.residues


def _grid(m: int, pred) -> frozenset[tuple[int, int]]:
    return frozenset((d, v) for d in range(m) for v in range(m) if pred(d, v))


def _prime_powers(m: int) -> list[int]:
    out, p = [], 2
    while m > 1:
        if m % p == 0:
            q = 1
            while m % p == 0:
                m //= p
                q *= p
            out.append(q)
        p += 1
    return out


def congruences(ahat: Fraction = Fraction(0), q: int = 2) -> CongruenceResult:
    """Integrality of f(5+2q) as congruences on d and v.

    The residue grid is enumerated in full; the per-prime-power conditions are
    then read off and merged (by CRT) into one condition per variable.
    """
    data = solve_f_values(5)
    f = data(5 + 2 * q).substitute({"A": ParamAffine(Fraction(ahat))})
    den = f.common_denominator()
    num = f * den
    if not num.is_exact() or any(c.denominator != 1 for c in [num.constant] + list(num.coeffs.values())):
        raise ValueError("numerator is not integral for this A-hat value")
    c0, cd, cv = int(num.constant), int(num.coeff("d")), int(num.coeff("v"))
    residues = _grid(den, lambda d, v: (c0 + cd * d + cv * v) % den == 0)
    per_var: dict[str, list[tuple[int, int]]] = {"d": [], "v": []}
    for pp in _prime_powers(den):
        local = {(d % pp, v % pp) for d, v in residues}
        ds = {d for d, _ in local}
        vs = {v for _, v in local}
        if local != {(a, b) for a in ds for b in vs}:
            raise ArithmeticError(f"residues mod {pp} do not split into separate conditions")
        for var, vals in (("d", ds), ("v", vs)):
            if len(vals) == 1:
                per_var[var].append((vals.pop(), pp))
            elif len(vals) != pp:
                raise ArithmeticError(f"condition on {var} mod {pp} is not a single residue")
    conditions = []
    for var in ("d", "v"):
        if per_var[var]:
            r, m = _crt(per_var[var])
            conditions.append(Congruence(var, r, m))
    result = CongruenceResult(den, num, residues, conditions)
    if not result.is_conjunction():
        raise ArithmeticError("factored conditions do not reproduce the residue set")
    return result


def _crt(pairs: list[tuple[int, int]]) -> tuple[int, int]:
    r, m = 0, 1
    for a, n in pairs:
        # n is coprime to m (distinct prime powers)
        t = ((a - r) * pow(m, -1, n)) % n
        r, m = r + m * t, m * n
    return r % m, m


def admissible_pairs(ahat: Fraction = Fraction(0), d_range: tuple[int, int] = (15, 36), v_range: tuple[int, int] = (1, 1024)) -> list[tuple[int, int]]:
    """(d, v) with the f(9) congruences, c2 u^4 >= u^5 and 2n+1+2v-d >= 0."""
    cong = congruences(ahat)
    prep = c2u4_constraint().substitute({"A": ParamAffine(Fraction(ahat))})
    out = []
    for d in range(d_range[0], d_range[1] + 1):
        for v in range(v_range[0], v_range[1] + 1):
            if not all(c.holds(d if c.var == "d" else v) for c in cong.conditions):
                continue
            if prep.evaluate({"d": d, "v": v}) < 0 or 11 + 2 * v - d < 0:
                continue
            out.append((d, v))
    return out
