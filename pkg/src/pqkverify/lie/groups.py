"""Compact Lie groups up to finite coverings: simple types, tori and their products."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import total_ordering

__all__ = [
    "EXCEPTIONAL",
    "GroupTerm",
    "SimpleType",
    "classical",
    "parse_group",
    "simple_types",
]

EXCEPTIONAL = {"G2": (2, 14), "F4": (4, 52), "E6": (6, 78), "E7": (7, 133), "E8": (8, 248)}
_FAMILY_ORDER = {"A": 0, "B": 1, "C": 2, "D": 3, "G": 4, "F": 5, "E": 6}
# smallest rank at which a classical family is listed separately
_MIN_RANK = {"A": 1, "B": 3, "C": 2, "D": 4}


def classical_dim(family: str, r: int) -> int:
    if family == "A":
        return r * (r + 2)
    if family in ("B", "C"):
        return r * (2 * r + 1)
    if family == "D":
        return r * (2 * r - 1)
    raise ValueError(f"not a classical family: {family}")


@total_ordering
@dataclass(frozen=True)
class SimpleType:
    """A simple compact Lie algebra in canonical form.

    Low-rank coincidences are folded in: B1 = C1 = A1, B2 = C2, D2 = A1 x A1,
    D3 = A3.  ``SimpleType`` only ever holds the canonical representative.
    """

    family: str  # A, B, C, D, G2, F4, E6, E7, E8
    rank: int

    def __post_init__(self):
        if self.family in _MIN_RANK:
            if self.rank < _MIN_RANK[self.family]:
                raise ValueError(f"{self.family}{self.rank} is not canonical")
        elif self.family in EXCEPTIONAL:
            if self.rank != EXCEPTIONAL[self.family][0]:
                raise ValueError(f"bad rank for {self.family}")
        else:
            raise ValueError(f"unknown family {self.family}")

    @property
    def dim(self) -> int:
        if self.family in EXCEPTIONAL:
            return EXCEPTIONAL[self.family][1]
        return classical_dim(self.family, self.rank)

    @property
    def is_exceptional(self) -> bool:
        return self.family in EXCEPTIONAL

    @property
    def name(self) -> str:
        f, r = self.family, self.rank
        if f == "A":
            return "Sp(1)" if r == 1 else f"SU({r + 1})"
        if f == "B":
            return f"SO({2 * r + 1})"
        if f == "C":
            return f"Sp({r})"
        if f == "D":
            return f"SO({2 * r})"
        return f

    def realizations(self) -> list[tuple[str, int]]:
        """Matrix groups (SU/SO/Sp, index) that are locally isomorphic to this type."""
        f, r = self.family, self.rank
        if f == "A":
            out = [("SU", r + 1)]
            if r == 1:
                out += [("Sp", 1), ("SO", 3)]
            if r == 3:
                out.append(("SO", 6))
            return out
        if f == "B":
            return [("SO", 2 * r + 1)]
        if f == "C":
            return [("Sp", r)] + ([("SO", 5)] if r == 2 else [])
        if f == "D":
            return [("SO", 2 * r)]
        return []

    def _key(self):
        return (_FAMILY_ORDER[self.family[0]], self.rank, self.family)

    def __lt__(self, other):
        return self._key() < other._key()

    def __str__(self):
        return self.name


def classical(kind: str, k: int) -> "GroupTerm":
    """SU(k), SO(k), Sp(k) or U(k) as a GroupTerm, folding the low-rank cases."""
    if kind == "U":
        return classical("SU", k) * GroupTerm((), 1 if k >= 1 else 0)
    if kind == "SU":
        return GroupTerm() if k <= 1 else GroupTerm((SimpleType("A", k - 1),))
    if kind == "Sp":
        if k <= 0:
            return GroupTerm()
        return GroupTerm((SimpleType("A", 1),)) if k == 1 else GroupTerm((SimpleType("C", k),))
    if kind == "SO":
        if k <= 1:
            return GroupTerm()
        table = {2: GroupTerm((), 1), 3: GroupTerm((SimpleType("A", 1),)), 4: GroupTerm((SimpleType("A", 1),) * 2),
                 5: GroupTerm((SimpleType("C", 2),)), 6: GroupTerm((SimpleType("A", 3),))}
        if k in table:
            return table[k]
        return GroupTerm((SimpleType("B", (k - 1) // 2),)) if k % 2 else GroupTerm((SimpleType("D", k // 2),))
    raise ValueError(f"unknown classical kind {kind}")


@total_ordering
@dataclass(frozen=True)
class GroupTerm:
    """Product of simple factors (sorted, with multiplicity) and a torus."""

    factors: tuple[SimpleType, ...] = ()
    torus: int = 0

    def __post_init__(self):
        if self.torus < 0:
            raise ValueError("torus rank must be non-negative")
        object.__setattr__(self, "factors", tuple(sorted(self.factors, reverse=True)))

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors) + self.torus

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors) + self.torus

    @property
    def semisimple(self) -> "GroupTerm":
        return GroupTerm(self.factors)

    def is_simple(self) -> bool:
        return len(self.factors) == 1 and self.torus == 0

    def is_trivial(self) -> bool:
        return not self.factors and self.torus == 0

    def has_exceptional(self) -> bool:
        return any(f.is_exceptional for f in self.factors)

    def __mul__(self, other: "GroupTerm") -> "GroupTerm":
        return GroupTerm(self.factors + other.factors, self.torus + other.torus)

    @property
    def name(self) -> str:
        parts = [f.name for f in self.factors]
        if self.torus:
            parts.append("S^1" if self.torus == 1 else f"T^{self.torus}")
        return " x ".join(parts) if parts else "1"

    def counter(self) -> Counter:
        return Counter(self.factors)

    def _key(self):
        return (self.dim, self.rank, tuple(f._key() for f in self.factors), self.torus)

    def __lt__(self, other):
        return self._key() < other._key()

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"GroupTerm({self.name})"


def simple_types(max_rank: int, max_dim: int | None = None) -> list[SimpleType]:
    out = []
    for r in range(1, max_rank + 1):
        for fam in "ABCD":
            if r >= _MIN_RANK[fam]:
                out.append(SimpleType(fam, r))
    for fam, (r, _) in EXCEPTIONAL.items():
        if r <= max_rank:
            out.append(SimpleType(fam, r))
    if max_dim is not None:
        out = [t for t in out if t.dim <= max_dim]
    return sorted(out)


_TOKEN = re.compile(r"\s*(SU|SO|Sp|U)\((\d+)\)|\s*(G2|F4|E6|E7|E8)|\s*S\^1|\s*T\^(\d+)|\s*(x|\*|×)")


def parse_group(text: str) -> GroupTerm:
    """Read names like ``SO(4) x SO(4) x SO(3)``, ``G2xS^1``, ``Sp(2) x T^2``; "1" is the trivial group."""
    pos, out, expect_factor = 0, GroupTerm(), True
    text = text.strip()
    if text == "1":
        return out
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse group at {text[pos:]!r}")
        pos = m.end()
        if m.group(5):
            if expect_factor:
                raise ValueError("dangling product sign")
            expect_factor = True
            continue
        if not expect_factor:
            raise ValueError("missing product sign")
        expect_factor = False
        if m.group(1):
            out = out * classical(m.group(1), int(m.group(2)))
        elif m.group(3):
            out = out * GroupTerm((SimpleType(m.group(3), EXCEPTIONAL[m.group(3)][0]),))
        elif m.group(4):
            out = out * GroupTerm((), int(m.group(4)))
        else:
            out = out * GroupTerm((), 1)
    if expect_factor and text:
        raise ValueError("trailing product sign")
    return out
