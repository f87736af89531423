"""Lambda-ring calculus of virtual bundles through their Chern characters."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .exact.graded import GradedPoly, Ring

__all__ = [
    "BundleChar",
    "GenusSeries",
    "adams",
    "ahat_class",
    "ahat_series",
    "bundle_E",
    "bundle_H",
    "ch_of",
    "chern_classes",
    "exterior",
    "exterior0",
    "genus_class",
    "l_series",
    "pontryagin",
    "symmetric",
    "tangent_bundle",
    "tensor",
    "trivial",
]


@dataclass(frozen=True)
class BundleChar:
    """A virtual bundle: its rank and the positive-weight part of its Chern character."""

    rank: int
    ch: GradedPoly

    def __post_init__(self):
        if self.ch.constant:
            raise ValueError("ch must have zero constant term; the rank carries it")

    @classmethod
    def from_character(cls, full: GradedPoly) -> "BundleChar":
        r = full.constant
        if r.denominator != 1:
            raise ValueError(f"non-integral rank {r}")
        return cls(int(r), full - r)

    @property
    def ring(self) -> Ring:
        return self.ch.ring

    @property
    def character(self) -> GradedPoly:
        return self.ch + self.rank

    def component(self, j: int) -> GradedPoly:
        return self.ch.component(j) if j else self.ring.const(self.rank)

    def __add__(self, other: "BundleChar") -> "BundleChar":
        return BundleChar(self.rank + other.rank, self.ch + other.ch)

    def __sub__(self, other: "BundleChar") -> "BundleChar":
        return BundleChar(self.rank - other.rank, self.ch - other.ch)

    def __neg__(self):
        return BundleChar(-self.rank, -self.ch)

    def __mul__(self, other):
        if isinstance(other, BundleChar):
            return tensor(self, other)
        if isinstance(other, int):
            return BundleChar(self.rank * other, self.ch * other)
        return NotImplemented

    __rmul__ = __mul__


def trivial(ring: Ring, rank: int = 1) -> BundleChar:
    return BundleChar(rank, ring.zero())


def chern_classes(v: BundleChar) -> GradedPoly:
    """Total Chern class via Newton's identities from the power sums j!*ch_j."""
    ring = v.ring
    top = ring.truncation
    power = [None] + [v.ch.component(j) * factorial(j) for j in range(1, top + 1)]
    elem = [ring.one()]
    for k in range(1, top + 1):
        acc = ring.zero()
        for i in range(1, k + 1):
            term = elem[k - i] * power[i]
            acc = acc + term if i % 2 else acc - term
        elem.append(acc / k)
    total = ring.zero()
    for e in elem:
        total = total + e
    return total


def ch_of(rank: int, chern: GradedPoly) -> BundleChar:
    """Inverse of chern_classes: power sums from elementary symmetric functions."""
    if chern.constant != 1:
        raise ValueError("total Chern class must start with 1")
    ring = chern.ring
    top = ring.truncation
    elem = [chern.component(k) for k in range(top + 1)]
    power: list[GradedPoly] = [ring.const(rank)]
    for k in range(1, top + 1):
        acc = elem[k] * k
        for i in range(1, k):
            term = elem[k - i] * power[i]
            acc = acc - term if i % 2 else acc + term
        power.append(acc if k % 2 else -acc)
    ch = ring.zero()
    for j in range(1, top + 1):
        ch = ch + power[j] / factorial(j)
    return BundleChar(rank, ch)


def tensor(a: BundleChar, b: BundleChar) -> BundleChar:
    return BundleChar.from_character(a.character * b.character)


def adams(k: int, v: BundleChar) -> BundleChar:
    if k < 1:
        raise ValueError("Adams operations need k >= 1")
    return BundleChar(v.rank, v.ch.scale_weights(k))


def _power_recursion(n: int, v: BundleChar, sign: bool) -> list[GradedPoly]:
    """Characters of lambda^0..lambda^n (sign=True) or S^0..S^n (sign=False)."""
    ring = v.ring
    psi = [None] + [adams(i, v).character for i in range(1, n + 1)]
    out = [ring.one()]
    for k in range(1, n + 1):
        acc = ring.zero()
        for i in range(1, k + 1):
            term = out[k - i] * psi[i]
            acc = acc - term if (sign and i % 2 == 0) else acc + term
        out.append(acc / k)
    return out


def exterior(k: int, v: BundleChar) -> BundleChar:
    if k < 0:
        return trivial(v.ring, 0)
    return BundleChar.from_character(_power_recursion(k, v, True)[k])


def symmetric(l: int, v: BundleChar) -> BundleChar:
    if l < 0:
        raise ValueError("symmetric power needs l >= 0")
    return BundleChar.from_character(_power_recursion(l, v, False)[l])


def exterior0(k: int, v: BundleChar) -> BundleChar:
    """lambda^k v minus lambda^(k-2) v."""
    return exterior(k, v) - exterior(k - 2, v)


def pontryagin(t: BundleChar) -> GradedPoly:
    """Total Pontryagin class of the real bundle whose complexification is t."""
    if any(w % 2 for w in t.ch.weights_present()):
        raise ValueError("odd Chern character components: not a complexification")
    c = chern_classes(t)
    ring = t.ring
    total = ring.one()
    for i in range(1, ring.truncation // 2 + 1):
        ci = c.component(2 * i)
        total = total + (ci if i % 2 == 0 else -ci)
    return total


# -- genera ---------------------------------------------------------------


def _series_mul(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j, y in enumerate(b[: n - i]):
                out[i + j] += x * y
    return out


def _series_inv(a: Sequence[Fraction], n: int) -> list[Fraction]:
    if a[0] == 0:
        raise ZeroDivisionError("series with zero constant term")
    out = [1 / Fraction(a[0])]
    for k in range(1, n):
        s = sum((a[i] * out[k - i] for i in range(1, min(k, len(a) - 1) + 1)), Fraction(0))
        out.append(-s / a[0])
    return out


def _series_log(a: Sequence[Fraction], n: int) -> list[Fraction]:
    # log a = integral of a'/a, coefficients in z
    if a[0] != 1:
        raise ValueError("log needs constant term 1")
    deriv = [k * a[k] for k in range(1, len(a))] + [Fraction(0)] * n
    q = _series_mul(deriv[:n], _series_inv(a, n), n)
    return [Fraction(0)] + [q[k - 1] / k for k in range(1, n)]


@dataclass(frozen=True)
class GenusSeries:
    """Characteristic power series Q(z) in the variable z = x^2."""

    coeffs: tuple[Fraction, ...]
    name: str = ""

    def __post_init__(self):
        if self.coeffs[0] != 1:
            raise ValueError("characteristic series must have constant term 1")

    def log_coeffs(self, n: int) -> list[Fraction]:
        return _series_log(list(self.coeffs), n)


def ahat_series(terms: int) -> GenusSeries:
    """(sqrt(z)/2) / sinh(sqrt(z)/2)."""
    sinh_over = [Fraction(1, 4**k * factorial(2 * k + 1)) for k in range(terms)]
    return GenusSeries(tuple(_series_inv(sinh_over, terms)), "A-hat")


def l_series(terms: int) -> GenusSeries:
    """sqrt(z) / tanh(sqrt(z)), the signature genus."""
    cosh = [Fraction(1, factorial(2 * k)) for k in range(terms)]
    sinh_over = [Fraction(1, factorial(2 * k + 1)) for k in range(terms)]
    return GenusSeries(tuple(_series_mul(cosh, _series_inv(sinh_over, terms), terms)), "L")


def genus_class(g: GenusSeries, pont: GradedPoly) -> GradedPoly:
    """Multiplicative sequence of g evaluated on a total Pontryagin class.

    With p = prod(1 + z_j) the class is prod Q(z_j) = exp(sum_k a_k P_k), where
    log Q = sum a_k z^k and P_k are the power sums of the z_j (p_i has weight 2i).
    """
    if pont.constant != 1:
        raise ValueError("Pontryagin class must start with 1")
    ring = pont.ring
    m = ring.truncation // 2
    if len(g.coeffs) < m + 1:
        raise ValueError("genus series too short for this truncation")
    elem = [pont.component(2 * i) for i in range(m + 1)]
    power = [None]
    for k in range(1, m + 1):
        acc = elem[k] * k
        for i in range(1, k):
            term = elem[k - i] * power[i]
            acc = acc - term if i % 2 else acc + term
        power.append(acc if k % 2 else -acc)
    logq = g.log_coeffs(m + 1)
    s = ring.zero()
    for k in range(1, m + 1):
        s = s + power[k] * logq[k]
    return s.exp()


# -- the bundles of a quaternion Kähler manifold ------------------------------


def bundle_H(ring: Ring) -> BundleChar:
    """Rank 2 with c2(H) = -u."""
    return ch_of(2, ring.one() - ring.var("u"))


def bundle_E(ring: Ring, rank: int | None = None) -> BundleChar:
    """Rank 2n with total Chern class 1 + c2 + c4 + ... + c_{2n}."""
    c = ring.one()
    for name in ring.names[1:]:
        c = c + ring.var(name)
    return ch_of(rank if rank is not None else ring.truncation, c)


def tangent_bundle(ring: Ring) -> BundleChar:
    return tensor(bundle_E(ring), bundle_H(ring))


def ahat_class(ring: Ring) -> GradedPoly:
    return genus_class(ahat_series(ring.truncation // 2 + 1), pontryagin(tangent_bundle(ring)))


def binomial_rank(r: int, k: int) -> int:
    return comb(r, k) if k >= 0 else 0
