"""Exact elimination: rational systems with affine right-hand sides, and
fraction-free elimination over Q[x]."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .affine import ParamAffine
from .unipoly import RatFunc, UniPoly


class InfeasibleSystem(ValueError):
    def __init__(self, row: int, value):
        super().__init__(f"row {row} reduces to 0 = {value}")
        self.row = row
        self.value = value


@dataclass
class Solution:
    """Result of a parametric solve.

    ``values`` maps every pivot unknown to an affine form in the parameters and
    the free unknowns (free unknowns appear under their own names).
    ``conditions`` are affine forms in the parameters that must vanish for
    the system to be consistent.
    """

    unknowns: tuple[str, ...]
    values: dict[str, ParamAffine]
    free: tuple[str, ...]
    conditions: list[ParamAffine] = field(default_factory=list)
    pivot_rows: dict[str, int] = field(default_factory=dict)

    def value(self, name: str) -> ParamAffine:
        if name in self.values:
            return self.values[name]
        if name in self.free:
            return ParamAffine.param(name)
        raise KeyError(name)

    def is_determined(self, name: str) -> bool:
        """True if the unknown does not depend on any free unknown."""
        if name not in self.values:
            return False
        return not any(f in self.values[name].coeffs for f in self.free)

    def all_values(self) -> dict[str, ParamAffine]:
        return {u: self.value(u) for u in self.unknowns}


def solve_parametric(
    coeffs: Sequence[Sequence],
    rhs: Sequence,
    unknowns: Sequence[str] | None = None,
    raise_on_conditions: bool = False,
) -> Solution:
    """Reduced row echelon solve of coeffs * x = rhs over Q.

    Pivots are chosen leftmost-first in the given unknown order, so results are
    deterministic. A zero row with a non-zero constant right-hand side raises
    InfeasibleSystem; a zero row whose right-hand side still involves parameters
    becomes a condition.
    """
    nrows = len(coeffs)
    if len(rhs) != nrows:
        raise ValueError("rhs length does not match number of rows")
    ncols = len(coeffs[0]) if nrows else (len(unknowns) if unknowns else 0)
    if unknowns is None:
        unknowns = [f"x{i}" for i in range(ncols)]
    unknowns = tuple(unknowns)
    if len(unknowns) != ncols or any(len(r) != ncols for r in coeffs):
        raise ValueError("inconsistent matrix dimensions")

    rows = [[Fraction(c) for c in r] for r in coeffs]
    b = [ParamAffine.lift(r) for r in rhs]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        b[r], b[piv] = b[piv], b[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        b[r] = b[r] * inv
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
                b[i] = b[i] - b[r] * f
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break

    conditions = []
    for i in range(r, nrows):
        if b[i].is_zero():
            continue
        if b[i].is_constant() or raise_on_conditions:
            raise InfeasibleSystem(i, b[i])
        conditions.append(b[i])

    pivot_cols = {c for _, c in pivots}
    free = tuple(unknowns[c] for c in range(ncols) if c not in pivot_cols)
    values = {}
    pivot_rows = {}
    for row, c in pivots:
        val = b[row]
        for j in range(ncols):
            if j not in pivot_cols and rows[row][j] != 0:
                val = val - ParamAffine.param(unknowns[j]) * rows[row][j]
        values[unknowns[c]] = val
        pivot_rows[unknowns[c]] = row
    return Solution(unknowns, values, free, conditions, pivot_rows)


@dataclass
class PolyEchelon:
    """Fraction-free echelon form of an augmented matrix over Q[x].

    ``rows`` hold the reduced augmented rows, ``pivots`` the (row, column)
    positions, and ``conditions`` the last-column entries of rows whose
    coefficient part vanished identically.
    """

    rows: list[list[UniPoly]]
    pivots: list[tuple[int, int]]
    conditions: list[UniPoly]
    ncols: int


def bareiss_echelon(matrix: Sequence[Sequence[UniPoly]], ncols: int) -> PolyEchelon:
    """Bareiss elimination on the first ``ncols`` columns of an augmented matrix.

    Entries stay polynomial because every intermediate entry is a minor of the
    input; divisions by the previous pivot are exact.
    """
    rows = [[e if isinstance(e, UniPoly) else UniPoly((e,)) for e in r] for r in matrix]
    nrows = len(rows)
    width = len(rows[0]) if rows else 0
    prev = UniPoly((1,))
    pivots = []
    r = 0
    for c in range(ncols):
        cands = [i for i in range(r, nrows) if not rows[i][c].is_zero()]
        if not cands:
            continue
        piv = min(cands, key=lambda i: (rows[i][c].degree, i))
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, nrows):
            a = rows[i][c]
            rows[i] = [(p * rows[i][j] - a * rows[r][j]).exact_div(prev) for j in range(width)]
        # rows above the pivot are left alone; back-substitution happens pointwise
        prev = p
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    conditions = [rows[i][ncols] for i in range(r, nrows) if width > ncols and not rows[i][ncols].is_zero()]
    return PolyEchelon(rows, pivots, conditions, ncols)


@dataclass
class QxSolution:
    """Generic solution over Q(x).

    Each pivot unknown is ``values[name][0] - sum(values[name][1][f] * f)`` over
    the free unknowns f.  ``conditions`` must vanish; ``pivots`` record the pivot
    entries, whose zeros are the places where the generic answer may not apply.
    """

    unknowns: tuple[str, ...]
    values: dict[str, tuple[RatFunc, dict[str, RatFunc]]]
    free: tuple[str, ...]
    conditions: list[RatFunc]
    pivots: list[RatFunc]

    def condition_gcd(self) -> UniPoly:
        from .unipoly import gcd

        g = UniPoly()
        for c in self.conditions:
            g = gcd(g, c.num) if not g.is_zero() else c.num.monic()
        return g


def solve_over_qx(rows: Sequence[Sequence], rhs: Sequence, unknowns: Sequence[str]) -> QxSolution:
    """Gauss-Jordan elimination with entries in Q(x)."""
    lift = lambda e: e if isinstance(e, RatFunc) else RatFunc(e)
    m = [[lift(e) for e in r] + [lift(b)] for r, b in zip(rows, rhs)]
    nrows, ncols = len(m), len(unknowns)
    pivots, piv_entries = [], []
    r = 0
    for c in range(ncols):
        cands = [i for i in range(r, nrows) if not m[i][c].is_zero()]
        if not cands:
            continue
        piv = min(cands, key=lambda i: (m[i][c].num.degree + m[i][c].den.degree, i))
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        piv_entries.append(p)
        m[r] = [e / p for e in m[r]]
        for i in range(nrows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    conditions = [m[i][ncols] for i in range(r, nrows) if not m[i][ncols].is_zero()]
    pivot_cols = {c for _, c in pivots}
    free = tuple(unknowns[c] for c in range(ncols) if c not in pivot_cols)
    values = {}
    for row, c in pivots:
        deps = {unknowns[j]: m[row][j] for j in range(ncols) if j not in pivot_cols and not m[row][j].is_zero()}
        values[unknowns[c]] = (m[row][ncols], deps)
    return QxSolution(tuple(unknowns), values, free, conditions, piv_entries)
