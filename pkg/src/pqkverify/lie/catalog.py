"""Enumeration of compact Lie groups by rank and dimension, and the
dimension thresholds used to recognise symmetric spaces from isometry groups."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .groups import GroupTerm, classical, classical_dim, simple_types

__all__ = [
    "Threshold",
    "WolfMatch",
    "dims_mod",
    "enumerate_groups",
    "exceptional_max_dim",
    "identify_wolf",
    "isometry_group",
    "max_dim_per_rank",
    "recognition_threshold",
    "survivors_above_threshold",
    "threshold_detail",
    "wolf_congruences",
    "wolf_isom_dims",
]


@lru_cache(maxsize=None)
def _best(max_rank: int, torus: bool) -> tuple[int, ...]:
    """best[k] = largest dimension of a term of rank <= k."""
    types = simple_types(max_rank)
    best = [0] * (max_rank + 1)
    for k in range(1, max_rank + 1):
        cand = [best[k - 1] + (1 if torus else 0)]
        cand += [t.dim + best[k - t.rank] for t in types if t.rank <= k]
        best[k] = max(cand)
    return tuple(best)


def _search(max_rank: int, dim_lo: int, dim_hi: int | None, allow_torus: bool, types=None) -> list[GroupTerm]:
    """All terms with rank <= max_rank and dim in [dim_lo, dim_hi].

    Depth-first over factor multisets in non-increasing canonical order; a branch
    is cut when even the best completion cannot reach dim_lo.
    """
    types = sorted(types if types is not None else simple_types(max_rank, dim_hi), reverse=True)
    best = _best(max_rank, allow_torus)
    out: list[GroupTerm] = []

    def finish(chosen, rank, dim):
        tori = range(max_rank - rank + 1) if allow_torus else (0,)
        for t in tori:
            if dim_hi is not None and dim + t > dim_hi:
                break
            if dim + t >= dim_lo:
                out.append(GroupTerm(tuple(chosen), t))

    def rec(start, chosen, rank, dim):
        finish(chosen, rank, dim)
        for i in range(start, len(types)):
            t = types[i]
            if rank + t.rank > max_rank or (dim_hi is not None and dim + t.dim > dim_hi):
                continue
            left = max_rank - rank - t.rank
            if dim + t.dim + best[left] < dim_lo:
                continue
            chosen.append(t)
            rec(i, chosen, rank + t.rank, dim + t.dim)
            chosen.pop()

    rec(0, [], 0, 0)
    return sorted(set(out))


def enumerate_groups(
    max_rank: int,
    dim_lo: int,
    dim_hi: int,
    dim_mod: tuple[int, int] | None = None,
    allow_torus: bool = True,
) -> list[GroupTerm]:
    """Non-trivial groups of rank <= max_rank and dimension in [dim_lo, dim_hi].

    ``dim_mod = (r, m)`` keeps only dimensions congruent to r mod m.
    """
    if max_rank < 0 or dim_hi < dim_lo:
        return []
    found = _search(max_rank, max(dim_lo, 1), dim_hi, allow_torus)
    if dim_mod is not None:
        r, m = dim_mod
        found = [g for g in found if g.dim % m == r % m]
    return found


def dims_mod(m: int, max_n: int = 5) -> dict[str, int]:
    """dim mod m for A_n, B_n, C_n, D_n (n = 1..max_n, raw formulas) and G2, F4."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    out = {}
    for fam in "ABCD":
        for n in range(1, max_n + 1):
            out[f"{fam}{n}"] = classical_dim(fam, n) % m
    out["G2"] = 14 % m
    out["F4"] = 52 % m
    return out


def max_dim_per_rank(r: int) -> tuple[int, list[GroupTerm]]:
    """Largest dimension of a semisimple group of rank <= r, with all groups attaining it."""
    if r < 1:
        raise ValueError("rank must be positive")
    best = _best(r, False)[r]
    return best, _search(r, best, best, False)


def exceptional_max_dim(r: int) -> tuple[int, list[GroupTerm]]:
    """Largest dimension of a semisimple group of rank <= r with an exceptional factor."""
    best, hits = 0, []
    for t in simple_types(r):
        if not t.is_exceptional:
            continue
        rest = _best(r - t.rank, False)[r - t.rank] if r > t.rank else 0
        best = max(best, t.dim + rest)
    if best:
        hits = [g for g in _search(r, best, best, False) if g.has_exceptional()]
    return best, hits


def _rank_cap(n: int) -> int:
    return (n + 1) // 2 + 2


def _quadratic(n: int) -> Fraction:
    return Fraction(n * n + 5 * n + 12, 2)


@dataclass
class Threshold:
    n: int
    value: int
    rule: str
    groups: list[GroupTerm] = field(default_factory=list)


def threshold_detail(n: int) -> Threshold:
    """Isometry dimension above which the space is recognised.

    n = 3 is a fixed value.  For 4 <= n <= 20 it is the largest group of rank
    ceil(n/2)+2.  From n = 21 on the classical groups above (n^2+5n+12)/2 are
    treated separately, so the threshold is the larger of that bound and the
    largest group of the admissible rank with an exceptional factor.
    """
    if n < 3:
        raise ValueError("recognition threshold is defined for n >= 3")
    if n == 3:
        return Threshold(3, 28, "fixed")
    cap = _rank_cap(n)
    if n <= 20:
        value, groups = max_dim_per_rank(cap)
        return Threshold(n, value, f"max dimension at rank {cap}", groups)
    quad = _quadratic(n)
    exc, groups = exceptional_max_dim(cap)
    if exc >= quad:
        return Threshold(n, exc, f"exceptional factor at rank {cap}", groups)
    return Threshold(n, int(quad), "(n^2+5n+12)/2")


def recognition_threshold(n: int) -> int:
    return threshold_detail(n).value


def survivors_above_threshold(n: int) -> list[GroupTerm]:
    """Groups of rank <= ceil(n/2)+2 whose dimension exceeds (n^2+5n+12)/2."""
    if n < 22 or n in (27, 28):
        raise ValueError("defined for n >= 22 outside {27, 28}")
    lo = int(_quadratic(n)) + 1
    return _search(_rank_cap(n), lo, None, True)


WOLF_SPACES = ("HP^n", "Gr2(C^(n+2))", "Gr4(R^(n+4))")


def wolf_isom_dims(n: int) -> dict[str, int]:
    if n < 1:
        raise ValueError("n must be positive")
    return {
        "HP^n": (n + 1) * (2 * n + 3),
        "Gr2(C^(n+2))": n * n + 4 * n + 3,
        "Gr4(R^(n+4))": (n + 3) * (n + 4) // 2,
    }


def wolf_congruences(n: int) -> dict[str, bool]:
    """Whether each isometry dimension is 1 mod n+2."""
    return {k: v % (n + 2) == 1 for k, v in wolf_isom_dims(n).items()}


@dataclass
class WolfMatch:
    n: int
    isom_dim: int
    space: str | None
    threshold: int
    above_threshold: bool

    @property
    def identified(self) -> str:
        if self.space is None:
            return "unknown"
        return self.space if self.above_threshold else f"{self.space} (formula match, below threshold)"


def identify_wolf(n: int, isom_dim: int) -> WolfMatch:
    """Wolf space named by the isometry dimension, if it clears the threshold."""
    th = recognition_threshold(n)
    dims = wolf_isom_dims(n)
    space = next((k for k, v in dims.items() if v == isom_dim), None)
    return WolfMatch(n, isom_dim, space, th, isom_dim > th)


def isometry_group(space: str, n: int) -> GroupTerm:
    kinds = {"HP^n": ("Sp", n + 1), "Gr2(C^(n+2))": ("SU", n + 2), "Gr4(R^(n+4))": ("SO", n + 4)}
    kind, k = kinds[space]
    return classical(kind, k)
