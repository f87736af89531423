"""Shared hypothesis strategies."""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from hypothesis import strategies as st

from pqkverify.exact import GradedPoly, ParamAffine, Ring, UniPoly

small_fraction = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))
nonzero_fraction = small_fraction.filter(lambda x: x != 0)

SMALL_RING = Ring(("u", "c2", "c4"), (2, 2, 4), 8)


def graded_polys(ring: Ring = SMALL_RING, max_terms: int = 6):
    monos = [m for w in range(ring.truncation + 1) for m in ring.monomials(w)]
    return st.dictionaries(st.sampled_from(monos), small_fraction, max_size=max_terms).map(lambda t: GradedPoly(ring, t))


def unipolys(max_degree: int = 12):
    return st.lists(small_fraction, min_size=1, max_size=max_degree + 1).map(UniPoly)


def affines(params=("a", "b")):
    return st.builds(
        lambda c, coeffs: ParamAffine(c, coeffs),
        small_fraction,
        st.dictionaries(st.sampled_from(params), small_fraction, max_size=len(params)),
    )


# independent dimension formulas for the oracle
DIM = {"A": lambda r: r * (r + 2), "B": lambda r: r * (2 * r + 1), "C": lambda r: r * (2 * r + 1), "D": lambda r: r * (2 * r - 1)}
EXC = {"G2": (2, 14), "F4": (4, 52), "E6": (6, 78), "E7": (7, 133), "E8": (8, 248)}
MIN_RANK = {"A": 1, "B": 3, "C": 2, "D": 4}


def oracle_types(max_rank):
    out = [(f, r, DIM[f](r)) for f in "ABCD" for r in range(MIN_RANK[f], max_rank + 1)]
    out += [(name, r, d) for name, (r, d) in EXC.items() if r <= max_rank]
    return out


@lru_cache(maxsize=None)
def oracle(max_rank):
    """Every (factor multiset, torus) of rank <= max_rank, by brute force."""
    types = oracle_types(max_rank)
    found = set()
    for k in range(0, max_rank + 1):
        for combo in combinations_with_replacement(range(len(types)), k):
            rank = sum(types[i][1] for i in combo)
            if rank > max_rank:
                continue
            dim = sum(types[i][2] for i in combo)
            key = tuple(sorted((types[i][0], types[i][1]) for i in combo))
            for torus in range(0, max_rank - rank + 1):
                found.add((key, torus, dim + torus))
    return found


def as_key(g):
    return tuple(sorted((f.family, f.rank) for f in g.factors)), g.torus
