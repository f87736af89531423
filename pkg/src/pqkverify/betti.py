"""Even Betti numbers of a rationally 3-connected PQK manifold: the linear
relation, Hard-Lefschetz monotonicity and the smallest Euler characteristic."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .exact.affine import ParamAffine
from .index import betti_relation_form

__all__ = [
    "BettiVector",
    "LemmaResult",
    "betti_relation",
    "euler_char",
    "lemma_b4_b8",
    "min_euler",
    "relation_form",
]


@dataclass(frozen=True)
class BettiVector:
    """b_0, b_2, ..., b_{2n} of a 4n-manifold; odd Betti numbers vanish.

    The rest follows from Poincare duality b_{4n-i} = b_i.
    """

    n: int
    even: tuple[int, ...]

    def __post_init__(self):
        if len(self.even) != self.n + 1:
            raise ValueError(f"need {self.n + 1} even Betti numbers for n = {self.n}")
        if self.even[0] != 1:
            raise ValueError("b_0 must be 1")
        if any(b < 0 for b in self.even):
            raise ValueError("Betti numbers are non-negative")
        # Hard-Lefschetz for the 4-form u: b_{i-4} <= b_i for i <= 2n
        for k in range(2, self.n + 1):
            if self.even[k - 2] > self.even[k]:
                raise ValueError(f"b{2 * k - 4} > b{2 * k} violates Hard-Lefschetz")

    @classmethod
    def from_values(cls, n: int, **values: int) -> "BettiVector":
        """``BettiVector.from_values(5, b4=1, b8=1)``; unspecified entries are 0."""
        even = [1] + [values.pop(f"b{2 * k}", 0) for k in range(1, n + 1)]
        if values:
            raise ValueError(f"unknown entries {sorted(values)}")
        return cls(n, tuple(even))

    def b(self, i: int) -> int:
        if i < 0 or i > 4 * self.n or i % 2:
            return 0
        return self.even[min(i, 4 * self.n - i) // 2]

    def full(self) -> tuple[int, ...]:
        return tuple(self.b(i) for i in range(4 * self.n + 1))

    def as_dict(self) -> dict[str, int]:
        return {f"b{2 * k}": b for k, b in enumerate(self.even) if k}


def relation_form(n: int, b2_zero: bool = False, normalize: bool = True) -> ParamAffine:
    """The linear relation as a form that vanishes, divided by the content of its coefficients."""
    form = betti_relation_form(n, b2_zero)
    if not normalize:
        return form
    g = 0
    for c in [form.constant, *form.coeffs.values()]:
        g = gcd(g, int(c))
    return form / g if g > 1 else form


def betti_relation(n: int, bv: BettiVector) -> Fraction:
    """LHS - RHS of sum_p (6p(n-1-p) - (n-1)(n-3)) b_{2p} = n(n-1)/2 b_{2n}."""
    if bv.n != n:
        raise ValueError("Betti vector has the wrong length")
    return relation_form(n, normalize=False).evaluate(bv.as_dict())


def euler_char(bv: BettiVector) -> int:
    # alternating sum over degrees 0..4n; only even degrees contribute, and each
    # degree below the middle one appears twice by duality
    return 2 * sum(bv.even[:-1]) + bv.even[-1]


@dataclass
class LemmaResult:
    """(b4, b8) pairs in dimension 20 with b2 = 0, by the value t = 2 b4 - b8 - 1.

    The relation reads 4t = 5(b10 - b6) with b10 >= b6, so t = 0 forces
    b6 = b10, a positive multiple of 5 leaves b10 - b6 = 4t/5, and anything
    else admits no Betti numbers at all.
    """

    b4_max: int
    b8_max: int
    forced_equal: list[tuple[int, int]] = field(default_factory=list)
    positive_multiple: list[tuple[int, int]] = field(default_factory=list)
    infeasible: list[tuple[int, int]] = field(default_factory=list)

    def classify(self, b4: int, b8: int) -> str:
        for name in ("forced_equal", "positive_multiple", "infeasible"):
            if (b4, b8) in getattr(self, name):
                return name
        raise KeyError((b4, b8))

    @property
    def feasible(self) -> list[tuple[int, int]]:
        return sorted(self.forced_equal + self.positive_multiple)


def lemma_b4_b8(b4_max: int = 5, b8_max: int = 50) -> LemmaResult:
    out = LemmaResult(b4_max, b8_max)
    for b4 in range(1, b4_max + 1):
        for b8 in range(b4, b8_max + 1):
            t = 2 * b4 - b8 - 1
            if t == 0:
                out.forced_equal.append((b4, b8))
            elif t > 0 and t % 5 == 0:
                out.positive_multiple.append((b4, b8))
            else:
                out.infeasible.append((b4, b8))
    return out


def min_euler(b4_min: int, K: int = 50) -> tuple[int, BettiVector]:
    """Smallest Euler characteristic in dimension 20 with b2 = 0 and b4 >= b4_min.

    Search window: b4 in [b4_min, b4_min + K], b8 in [b4, b4 + K], b6 in
    [0, K], with b10 read off the relation.  Eliminating b10 gives
    chi = (6 + 18 b4 + 15 b6 + 6 b8)/5, increasing in each variable, so the
    minimum sits at the lower corner of the feasible set; b8 only has to run
    through one residue class mod 5, hence any K >= 4 already reaches it.
    """
    if b4_min < 1:
        raise ValueError("b4 is at least 1")
    best = None
    for b4 in range(b4_min, b4_min + K + 1):
        for b8 in range(b4, b4 + K + 1):
            for b6 in range(K + 1):
                num = -4 + 8 * b4 + 5 * b6 - 4 * b8
                if num % 5:
                    continue
                b10 = num // 5
                if b10 < b6:
                    continue
                chi = 2 + 2 * b4 + 2 * b6 + 2 * b8 + b10
                key = (chi, b4, b6, b8, b10)
                if best is None or key < best:
                    best = key
    if best is None:
        raise ValueError("no admissible Betti numbers in the search window")
    chi, b4, b6, b8, b10 = best
    return chi, BettiVector(5, (1, 0, b4, b6, b8, b10))
