
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pqkverify import golden as G
from pqkverify.lie import (
    CHAIN_FOUND,
    OBSTRUCTED,
    GroupTerm,
    SimpleType,
    classical,
    dims_mod,
    embedding_obstructed,
    enumerate_groups,
    identify_wolf,
    isometry_group,
    max_dim_per_rank,
    maximal_subgroups,
    parse_group,
    recognition_threshold,
    survivors_above_threshold,
    threshold_detail,
    wolf_congruences,
    wolf_isom_dims,
)
from pqkverify.lie.embedding import instantiate
from strategies import DIM, EXC, as_key, oracle

@given(st.integers(0, 5), st.integers(0, 60), st.integers(0, 60), st.booleans(), st.one_of(st.none(), st.tuples(st.integers(0, 6), st.integers(2, 7))))
def test_enumeration_complete(max_rank, lo, span, torus, mod):
    hi = lo + span
    got = sorted(as_key(g) for g in enumerate_groups(max_rank, lo, hi, mod, torus))
    want = sorted(
        (key, t)
        for key, t, d in oracle(max_rank)
        if max(lo, 1) <= d <= hi and (torus or t == 0) and (mod is None or d % mod[1] == mod[0] % mod[1]) and (key or t)
    )
    assert got == want


simple = st.one_of(
    st.builds(SimpleType, st.just("A"), st.integers(1, 9)),
    st.builds(SimpleType, st.just("B"), st.integers(3, 9)),
    st.builds(SimpleType, st.just("C"), st.integers(2, 9)),
    st.builds(SimpleType, st.just("D"), st.integers(4, 9)),
    st.sampled_from([SimpleType(n, r) for n, (r, _) in EXC.items()]),
)
terms = st.builds(lambda fs, t: GroupTerm(tuple(fs), t), st.lists(simple, max_size=4), st.integers(0, 3))


def formula_dim(f: SimpleType) -> int:
    return EXC[f.family][1] if f.family in EXC else DIM[f.family](f.rank)


@given(terms, terms)
def test_groupterm_arithmetic(a, b):
    assert a.dim == sum(formula_dim(f) for f in a.factors) + a.torus
    assert a.rank == sum(f.rank for f in a.factors) + a.torus
    p = a * b
    assert p.dim == a.dim + b.dim and p.rank == a.rank + b.rank
    assert p == b * a
    assert parse_group(a.name) == a


@pytest.mark.parametrize(
    "text,name",
    [("SO(3)", "Sp(1)"), ("SU(2)", "Sp(1)"), ("SO(4)", "Sp(1) x Sp(1)"), ("SO(5)", "Sp(2)"), ("SO(6)", "SU(4)"),
     ("U(3)", "SU(3) x S^1"), ("SO(2)", "S^1"), ("E8 × Sp(1)", "E8 x Sp(1)"), ("T^2 * G2", "G2 x T^2")],
)
def test_low_rank_identifications(text, name):
    assert parse_group(text).name == name


def test_parse_rejects_junk():
    with pytest.raises(ValueError):
        parse_group("SO(n)")


@given(st.integers(4, 60), st.integers(4, 60))
def test_threshold_monotone(n, m):
    if n <= m:
        assert recognition_threshold(n) <= recognition_threshold(m)


@pytest.mark.parametrize("n", sorted(G.RECOGNITION_THRESHOLD))
def test_threshold_table(n):
    assert recognition_threshold(n) == G.RECOGNITION_THRESHOLD[n]


def test_threshold_beyond_table():
    for n in range(29, 80):
        assert recognition_threshold(n) == max((n * n + 5 * n + 12) // 2, threshold_detail(n).value)
    assert recognition_threshold(29) == 499


def test_threshold_21_realisers():
    names = sorted(g.name for g in threshold_detail(21).groups)
    assert names == ["E8 x F4 x Sp(1)", "E8 x SO(11)", "E8 x Sp(5)"]
    assert parse_group(G.THRESHOLD_21_LABEL).dim == 133


def test_isometry_table_20():
    found = {}
    for g in enumerate_groups(5, 15, 36, (1, 7)):
        found.setdefault(g.dim, set()).add(g)
    expected = {d: {parse_group(s) for s in v} for d, v in G.ISOMETRY_GROUPS_20.items()}
    assert found == expected
    assert sum(len(v) for v in found.values()) == 15


def test_dims_mod7():
    got = dims_mod(7)
    for fam in "ABCD":
        assert [got[f"{fam}{n}"] for n in range(1, 6)] == G.DIMS_MOD_7[fam]
    assert got["G2"] == G.DIMS_MOD_7["G2"] and got["F4"] == G.DIMS_MOD_7["F4"]


@pytest.mark.parametrize("r", [r for r in sorted(G.MAX_DIM_PER_RANK) if r != 6])
def test_max_dim_per_rank(r):
    dim, names = G.MAX_DIM_PER_RANK[r]
    d, groups = max_dim_per_rank(r)
    assert d == dim
    assert set(groups) == {parse_group(s) for s in names}


def test_max_dim_rank6_includes_so13():
    d, groups = max_dim_per_rank(6)
    assert d == 78
    assert {g.name for g in groups} == {"E6", "Sp(6)", "SO(13)"}


@pytest.mark.parametrize("n", [22, 24, 26, 30])
def test_survivors_even(n):
    want = {instantiate(p, {"n": n}) for p in G.SURVIVORS_EVEN}
    assert set(survivors_above_threshold(n)) == want


@pytest.mark.parametrize("n", [23, 25, 29])
def test_survivors_odd(n):
    want = {instantiate(p, {"n": n}) for p in G.SURVIVORS_ODD}
    assert len(want) == 9
    assert set(survivors_above_threshold(n)) == want


def test_survivors_domain():
    for n in (21, 27, 28):
        with pytest.raises(ValueError):
            survivors_above_threshold(n)


def test_stabilizer_candidates_enumerated():
    found = set(enumerate_groups(4, 18, 36))
    assert all(parse_group(s) in found for s in G.STABILIZER_CANDIDATES)


@pytest.mark.parametrize("g,h", G.OBSTRUCTED_PAIRS)
def test_obstructed_pairs(g, h):
    assert embedding_obstructed(g, h).status == OBSTRUCTED


@pytest.mark.parametrize("g,h", G.CHAIN_PAIRS)
def test_chain_pairs(g, h):
    v = embedding_obstructed(g, h)
    assert v.status == CHAIN_FOUND
    assert v.chain[0] == parse_group(g).name and v.chain[-1] == parse_group(h).name


def test_trivial_and_rank_cases():
    assert embedding_obstructed("S^1", "Sp(1)").status == CHAIN_FOUND
    assert embedding_obstructed("T^2", "Sp(1)").status == OBSTRUCTED
    assert embedding_obstructed("Sp(5)", "Sp(5)").status == CHAIN_FOUND


def _replace(term: GroupTerm, i: int, sub: GroupTerm) -> GroupTerm:
    rest = term.factors[:i] + term.factors[i + 1 :]
    return GroupTerm(rest + sub.factors, term.torus + sub.torus)


ambients = st.sampled_from(["SU", "SO", "Sp"]).flatmap(lambda k: st.integers(3 if k != "Sp" else 1, 12).map(lambda n: classical(k, n)))


@given(ambients, st.lists(st.tuples(st.integers(0, 50), st.integers(0, 50), st.booleans()), min_size=1, max_size=3))
def test_embedding_soundness_on_table_chains(K, steps):
    """A subgroup reached through stored maximal subgroups is never reported obstructed."""
    g = K
    for fi, si, drop in steps:
        if not g.factors:
            break
        i = fi % len(g.factors)
        subs, _, _ = maximal_subgroups(g.factors[i])
        if drop and len(g.factors) > 1:
            g = _replace(g, i, GroupTerm())
            continue
        if not subs:
            continue
        g = _replace(g, i, subs[si % len(subs)])
    assert embedding_obstructed(g, K).status != OBSTRUCTED


def test_wolf_dims():
    assert wolf_isom_dims(5) == G.WOLF_DIMS_5
    for n in range(1, 10):
        for space, d in wolf_isom_dims(n).items():
            assert isometry_group(space, n).dim == d


def test_wolf_congruences():
    for n in range(2, 40):
        c = wolf_congruences(n)
        assert c["HP^n"]
        assert c["Gr4(R^(n+4))"] == (n % 2 == 1)
        assert not c["Gr2(C^(n+2))"]


def test_identify_wolf():
    m = identify_wolf(5, 78)
    assert m.space == "HP^n" and m.identified == "HP^n"
    assert identify_wolf(5, 48).above_threshold is False
    assert identify_wolf(5, 40).identified == "unknown"
