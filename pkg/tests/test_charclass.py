"""Lambda-ring calculus against formal-root oracles and printed displays."""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb

from hypothesis import given
from hypothesis import strategies as st

from pqkverify import golden as G
from pqkverify.charclass import (
    BundleChar,
    adams,
    ahat_class,
    ahat_series,
    bundle_E,
    bundle_H,
    ch_of,
    chern_classes,
    exterior,
    genus_class,
    pontryagin,
    symmetric,
    tangent_bundle,
    tensor,
)
from pqkverify.exact import GradedPoly, Ring
from pqkverify.exact.parse import parse_expression
from strategies import small_fraction

# formal roots are integer combinations of two weight-one classes
ROOTS = Ring(("s", "t"), (1, 1), 5)
s, t = ROOTS.var("s"), ROOTS.var("t")


def line(root: GradedPoly) -> BundleChar:
    return BundleChar.from_character(root.exp()) if not root.is_zero() else BundleChar(1, ROOTS.zero())


def from_roots(roots) -> BundleChar:
    total = BundleChar(0, ROOTS.zero())
    for r in roots:
        total = total + line(r)
    return total


def root_sum(factor_sets) -> GradedPoly:
    out = ROOTS.zero()
    for rs in factor_sets:
        acc = ROOTS.zero()
        for r in rs:
            acc = acc + r
        out = out + (acc.exp() if not acc.is_zero() else ROOTS.one())
    return out


root_lists = st.integers(2, 3).flatmap(
    lambda k: st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=k, max_size=k)
).map(lambda cs: [s * a + t * b for a, b in cs])


@given(root_lists, st.integers(0, 4))
def test_exterior_matches_root_sums(roots, k):
    v = from_roots(roots)
    expect = root_sum(combinations(roots, k))
    assert exterior(k, v).character == expect


@given(root_lists, st.integers(0, 4))
def test_symmetric_matches_root_sums(roots, k):
    v = from_roots(roots)
    expect = root_sum(combinations_with_replacement(roots, k))
    assert symmetric(k, v).character == expect


@given(root_lists)
def test_chern_classes_are_elementary_symmetric(roots):
    expect = ROOTS.one()
    for r in roots:
        expect = expect * (r + 1)
    assert chern_classes(from_roots(roots)) == expect


@given(root_lists, st.integers(1, 4))
def test_adams_scales_roots(roots, k):
    assert adams(k, from_roots(roots)).character == root_sum([[r * k] for r in roots])


@given(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), st.tuples(st.integers(-2, 2), st.integers(-2, 2)), st.integers(0, 4))
def test_splitting_convolution(a, b, k):
    la, lb = line(s * a[0] + t * a[1]), line(s * b[0] + t * b[1])
    total = la + lb
    conv = ROOTS.zero()
    sym = ROOTS.zero()
    for i in range(k + 1):
        conv = conv + exterior(i, la).character * exterior(k - i, lb).character
        sym = sym + symmetric(i, la).character * symmetric(k - i, lb).character
    assert exterior(k, total).character == conv
    assert symmetric(k, total).character == sym


# random virtual bundles on a ring with weights up to 10
WIDE = Ring(("u", "c2", "c4", "c6"), (2, 4, 6, 10), 10)
_wide_monos = [m for w in range(1, 11) for m in WIDE.monomials(w)]
bundles = st.builds(
    lambda r, terms: BundleChar(r, GradedPoly(WIDE, terms)),
    st.integers(0, 12),
    st.dictionaries(st.sampled_from(_wide_monos), small_fraction, max_size=5),
)


@given(bundles)
def test_newton_roundtrip(v):
    assert ch_of(v.rank, chern_classes(v)) == v


@given(st.dictionaries(st.sampled_from(_wide_monos), small_fraction, max_size=5), st.integers(0, 12))
def test_newton_roundtrip_from_chern(terms, rank):
    c = GradedPoly(WIDE, terms) + 1
    assert chern_classes(ch_of(rank, c)) == c


@given(bundles, bundles)
def test_tensor_is_multiplicative(a, b):
    assert tensor(a, b).character == a.character * b.character
    assert chern_classes(a + b) == chern_classes(a) * chern_classes(b)


def test_sym_powers_of_H():
    r = Ring.pqk(5)
    H = bundle_H(r)
    u = r.var("u")
    for l in range(8):
        # sum_j exp((l - 2j) y) with y^2 = u is sum_j sum_i (l-2j)^{2i} u^i / (2i)!
        expect = r.zero()
        for j in range(l + 1):
            for i in range(6):
                expect = expect + u**i * Fraction((l - 2 * j) ** (2 * i), _fact(2 * i))
        assert symmetric(l, H).character == expect


def _fact(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def test_printed_characters():
    r = Ring.pqk(5)
    assert parse_expression(G.CH_H, r.var) == bundle_H(r).character
    assert parse_expression(G.CH_E, r.var) == bundle_E(r).character


def test_ahat_display():
    r = Ring.pqk(5)
    printed = parse_expression(G.AHAT, r.var)
    assert len(printed.terms) >= 17
    assert genus_class(ahat_series(6), pontryagin(tangent_bundle(r))) == printed
    assert ahat_class(r) == printed


def test_ranks():
    r = Ring.pqk(5)
    E = bundle_E(r)
    assert E.rank == 10
    assert tangent_bundle(r).rank == 20
    assert exterior(3, E).rank == comb(10, 3)
