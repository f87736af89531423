"""Bounded search for inclusions g <= K of compact Lie groups (up to coverings).

A proper connected subgroup of a simple K lies in a maximal one, which the
subgroup tables list; a subgroup of full rank lies in a maximal one of full
rank.  Inclusions into products are split factorwise: every simple factor of
g projects injectively to some factor of K.  Irreducible images rho(H) are
only admitted or excluded through the stored representation facts; where the
facts say nothing the answer is ``inconclusive``.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from ..exact.parse import parse_expression
from .groups import EXCEPTIONAL, GroupTerm, SimpleType, parse_group, simple_types

__all__ = [
    "OBSTRUCTED",
    "CHAIN_FOUND",
    "INCONCLUSIVE",
    "Verdict",
    "embedding_obstructed",
    "instantiate",
    "maximal_subgroups",
    "max_subgroup_dim",
]

OBSTRUCTED = "obstructed"
CHAIN_FOUND = "chain-found"
INCONCLUSIVE = "inconclusive"

_FIELD = {"SO": "real", "SU": "complex", "Sp": "quaternionic"}


@lru_cache(maxsize=None)
def _data(name: str) -> dict:
    return json.loads(resources.files(__package__).joinpath("data").joinpath(name).read_text())


def _eval(expr, env) -> Fraction:
    return Fraction(parse_expression(str(expr), env))


_CMP = {
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
}


def _holds(constraints, env) -> bool:
    return all(_CMP[op](_eval(a, env), _eval(b, env)) for a, op, b in constraints)


_HEAD = re.compile(r"(SU|SO|Sp|U)\(")


def instantiate(pattern: str, env) -> GroupTerm | None:
    """Evaluate the index expressions of a pattern such as ``SO(k) x SO(n-k)``.

    Returns None when an index is not a non-negative integer.
    """
    out, pos = [], 0
    while True:
        m = _HEAD.search(pattern, pos)
        if not m:
            out.append(pattern[pos:])
            break
        depth, j = 1, m.end()
        while depth:
            depth += {"(": 1, ")": -1}.get(pattern[j], 0)
            j += 1
        val = _eval(pattern[m.end() : j - 1], env)
        if val.denominator != 1 or val < 0:
            return None
        out.append(pattern[pos : m.end()] + str(int(val)) + ")")
        pos = j
    return parse_group("".join(out))


def _ambient_index(expr: str, kind: str, k: int) -> dict | None:
    """Solve ``expr(n) = k`` for a positive integer n."""
    for n in range(0, k + 1):
        if _eval(expr, {"n": n}) == k:
            return {"n": n}
    return None


def _rows(section: str, kind: str, k: int):
    for rec in _data("subgroups.json")[section]:
        head = rec["ambient"]
        if head in EXCEPTIONAL:
            continue
        m = re.fullmatch(r"(SU|SO|Sp)\((.+)\)", head)
        if m.group(1) != kind:
            continue
        env = _ambient_index(m.group(2), kind, k)
        if env is not None:
            yield rec, env


def _expand(rec, env) -> list[GroupTerm]:
    names = list(rec["params"])
    ranges = [range(int(_eval(lo, env)), int(_eval(hi, env)) + 1) for lo, hi in rec["params"].values()]
    out = []
    for vals in itertools.product(*ranges):
        local = dict(env, **dict(zip(names, vals)))
        if not _holds(rec["constraints"], local):
            continue
        g = instantiate(rec["subgroup"], local)
        if g is not None and not g.is_trivial():
            out.append(g)
    return out


def _exceptional_rows(section: str, name: str) -> list[GroupTerm]:
    return [parse_group(r["subgroup"]) for r in _data("subgroups.json")[section] if r["ambient"] == name]


def maximal_subgroups(K: SimpleType, full_rank: bool = False) -> tuple[list[GroupTerm], list[tuple[str, int]], bool]:
    """Table candidates for maximal subgroups of K.

    Returns (subgroups, irreducible slots, known).  An irreducible slot is a
    (kind, index) realisation whose rho(H) row must be resolved separately;
    ``known`` is False when no table covers K.
    """
    section = "maximal_rank" if full_rank else "maximal"
    subs: set[GroupTerm] = set()
    slots = []
    if K.is_exceptional:
        rows = _exceptional_rows(section, K.family)
        return sorted(rows), [], bool(rows)
    for kind, k in K.realizations():
        for rec, env in _rows(section, kind, k):
            if "irreducible" in rec:
                slots.append((kind, k))
            else:
                subs.update(_expand(rec, env))
    own = GroupTerm((K,))
    return sorted(s for s in subs if s != own and s.dim < K.dim), slots, True


@lru_cache(maxsize=None)
def max_subgroup_dim(K: SimpleType) -> int | None:
    """Largest dimension of a proper subgroup of K, if tabulated."""
    if K.is_exceptional:
        rows = _exceptional_rows("maximal_dimension", K.family)
        return max((g.dim for g in rows), default=None)
    best = None
    for kind, k in K.realizations():
        for rec, env in _rows("maximal_dimension", kind, k):
            dims = [g.dim for g in _expand(rec, env)]
            if not _holds(rec["constraints"], env) or not dims:
                continue
            best = max(dims) if best is None else min(best, max(dims))
    return best


# -- representation facts -------------------------------------------------------


def _min_degree(H: SimpleType) -> int | None:
    best = None
    for fact in _data("rep_facts.json")["min_degree"]:
        if "group" in fact:
            if H.family == fact["group"]:
                best = max(best or 0, int(fact["degree"]))
            continue
        for kind, k in H.realizations():
            if kind == fact["family"] and k >= fact.get("k_min", 0):
                best = max(best or 0, int(_eval(fact["degree"], {"k": k})))
    return best


def _window_excludes(H: SimpleType, fld: str, degree: int) -> bool:
    for w in _data("rep_facts.json")["exceptional_windows"]:
        if w["group"] != H.family or w["field"] != fld:
            continue
        if "none_up_to" in w and degree <= w["none_up_to"]:
            return True
        if "degrees" in w and degree <= w["degrees_up_to"] and degree not in w["degrees"]:
            return True
    return False


def _pattern_matches(entry, H: SimpleType, m: int) -> tuple[bool, bool]:
    """(matches, known to exist)."""
    if "group" in entry:
        g = parse_group(entry["group"])
        return (g == GroupTerm((H,)) and _holds(entry["constraints"], {"m": m}), bool(entry.get("exists")))
    for kind, k in H.realizations():
        if kind == entry["family"] and _holds(entry["constraints"], {"m": m, entry["index"]: k}):
            return True, False
    return False, False


def irreducible_status(H: SimpleType, kind: str, m: int) -> tuple[str, str]:
    """Whether H can be the image of an irreducible representation into kind(m).

    Returns (status, reason) with status in {"excluded", "possible", "exists", "unknown"}.
    """
    fld = _FIELD[kind]
    degree = 2 * m if kind == "Sp" else m
    md = _min_degree(H)
    if md is not None and degree < md:
        return "excluded", f"{H} has no representation of degree {degree}"
    if H.is_exceptional and _window_excludes(H, fld, degree):
        return "excluded", f"{H} has no {fld} representation of degree {degree}"
    for fact in _data("rep_facts.json")["irreducible"]:
        lo, hi = fact["m"]
        if fact["ambient"] != kind or m < lo or (hi is not None and m > hi):
            continue
        if fact["scope"] == "classical" and H.is_exceptional:
            continue
        if H.dim < _eval(fact["min_dim"], {"m": m}):
            continue
        for entry in fact["allowed"]:
            ok, exists = _pattern_matches(entry, H, m)
            if ok:
                return ("exists" if exists else "possible"), fact["id"]
        return "excluded", fact["id"]
    return "unknown", f"{fld} irreducible representations of {H} in degree {degree}"


# -- search ---------------------------------------------------------------------


@dataclass
class Verdict:
    status: str
    chain: list[str] = field(default_factory=list)
    missing: list[str] = field(default_factory=list)

    def __str__(self):
        if self.status == CHAIN_FOUND:
            return f"{self.status}: " + " <= ".join(self.chain)
        if self.status == INCONCLUSIVE and self.missing:
            return f"{self.status} (missing: {'; '.join(sorted(set(self.missing)))})"
        return self.status


def _obstructed() -> Verdict:
    return Verdict(OBSTRUCTED)


def _combine(results: list[Verdict]) -> Verdict:
    for r in results:
        if r.status == CHAIN_FOUND:
            return r
    missing = [m for r in results if r.status == INCONCLUSIVE for m in r.missing]
    if any(r.status == INCONCLUSIVE for r in results):
        return Verdict(INCONCLUSIVE, missing=missing)
    return _obstructed()


@lru_cache(maxsize=None)
def _into(g: GroupTerm, K: GroupTerm, depth: int) -> Verdict:
    if g.rank > K.rank or g.dim > K.dim:
        return _obstructed()
    if g.is_trivial():
        return Verdict(CHAIN_FOUND, [g.name, K.name])
    if not g.factors:
        return Verdict(CHAIN_FOUND, [g.name, f"maximal torus of {K.name}", K.name])
    if g == K:
        return Verdict(CHAIN_FOUND, [K.name])
    if K.is_simple():
        return _into_simple(g, K.factors[0], depth)
    return _into_product(g, K, depth)


def _into_product(g: GroupTerm, K: GroupTerm, depth: int) -> Verdict:
    """Each simple factor of g goes injectively to one factor of K."""
    targets = list(K.factors)
    results = []
    for assign in itertools.product(range(len(targets)), repeat=len(g.factors)):
        blocks = [[] for _ in targets]
        for f, j in zip(g.factors, assign):
            blocks[j].append(f)
        spare = K.torus + sum(t.rank - sum(f.rank for f in b) for t, b in zip(targets, blocks))
        if spare < g.torus:
            results.append(_obstructed())
            continue
        parts = []
        for t, b in zip(targets, blocks):
            if b:
                parts.append(_into(GroupTerm(tuple(b)), GroupTerm((t,)), depth))
        if any(p.status == OBSTRUCTED for p in parts):
            results.append(_obstructed())
        elif all(p.status == CHAIN_FOUND for p in parts):
            deep = [p for p in parts if len(p.chain) > 1]
            if len(deep) == 1 and len(parts) == 1 and g.torus == 0:
                chain = deep[0].chain[:-1] + [K.name]
            elif deep:
                chain = [g.name, "[" + "; ".join(" <= ".join(p.chain) for p in deep) + "]", K.name]
            else:
                chain = [g.name, K.name]
            results.append(Verdict(CHAIN_FOUND, chain))
        else:
            results.append(Verdict(INCONCLUSIVE, missing=[m for p in parts for m in p.missing]))
        if results[-1].status == CHAIN_FOUND:
            break
    return _combine(results)


def _into_simple(g: GroupTerm, K: SimpleType, depth: int) -> Verdict:
    if g.dim >= K.dim:
        return _obstructed()
    cap = max_subgroup_dim(K)
    if cap is not None and g.dim > cap:
        return _obstructed()
    if depth <= 0:
        return Verdict(INCONCLUSIVE, missing=[f"search depth exhausted below {K}"])
    full = g.rank == K.rank
    subs, slots, known = maximal_subgroups(K, full_rank=full)
    if not known:
        return Verdict(INCONCLUSIVE, missing=[f"maximal subgroups of {K}"])
    results = []
    for M in subs:
        if g.rank > M.rank or g.dim > M.dim:
            continue
        r = _into(g, M, depth - 1)
        if r.status == CHAIN_FOUND:
            return Verdict(CHAIN_FOUND, r.chain + [K.name])
        results.append(r)
    if not full:
        for kind, k in slots:
            results.append(_irreducible(g, K, kind, k, cap, depth))
            if results[-1].status == CHAIN_FOUND:
                return results[-1]
    return _combine(results)


def _irreducible(g: GroupTerm, K: SimpleType, kind: str, k: int, cap: int | None, depth: int) -> Verdict:
    """g inside rho(H) for a simple H acting irreducibly through kind(k)."""
    hi = K.dim - 1 if cap is None else min(cap, K.dim - 1)
    results = []
    for H in simple_types(K.rank, hi):
        if H.dim < g.dim or H.rank < g.rank or H == K:
            continue
        status, reason = irreducible_status(H, kind, k)
        if status == "excluded":
            continue
        inner = _into(g, GroupTerm((H,)), depth - 1)
        if inner.status == OBSTRUCTED:
            continue
        if status == "exists" and inner.status == CHAIN_FOUND:
            return Verdict(CHAIN_FOUND, inner.chain + [f"{K.name} (irreducible)"])
        note = reason if status == "unknown" else f"whether {H} occurs irreducibly in {kind}({k})"
        results.append(Verdict(INCONCLUSIVE, missing=inner.missing + [note]))
    return _combine(results)


def _lift(x) -> GroupTerm:
    if isinstance(x, GroupTerm):
        return x
    if isinstance(x, SimpleType):
        return GroupTerm((x,))
    return parse_group(x)


def embedding_obstructed(g, h, depth: int = 10) -> Verdict:
    """Decide g <= h from the tables and facts: obstructed, chain-found or inconclusive."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    return _into(_lift(g), _lift(h), depth)
