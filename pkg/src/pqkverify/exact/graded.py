"""Weighted-graded polynomial rings over the rationals, truncated above a weight."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Mapping

Exponents = tuple[int, ...]


class RingMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Ring:
    """Ordered variables with positive weights and a truncation weight."""

    names: tuple[str, ...]
    weights: tuple[int, ...]
    truncation: int

    def __post_init__(self):
        if len(self.names) != len(self.weights):
            raise ValueError("one weight per variable")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")

    @classmethod
    def pqk(cls, n: int) -> "Ring":
        """Ring of u = -c2(H) and c2, c4, ..., c_{2n} of E for a 4n-manifold.

        Weights are complex degrees, so the fundamental class sits in weight 2n.
        """
        names = ("u",) + tuple(f"c{2 * i}" for i in range(1, n + 1))
        weights = (2,) + tuple(2 * i for i in range(1, n + 1))
        return cls(names, weights, 2 * n)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def weight(self, exps: Exponents) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def index(self, name: str) -> int:
        return self.names.index(name)

    def monomials(self, weight: int) -> list[Exponents]:
        """All exponent tuples of exactly the given weight, in canonical order."""
        out: list[Exponents] = []

        def rec(i: int, left: int, acc: list[int]):
            if i == self.nvars:
                if left == 0:
                    out.append(tuple(acc))
                return
            w = self.weights[i]
            for e in range(left // w, -1, -1):
                acc.append(e)
                rec(i + 1, left - e * w, acc)
                acc.pop()

        rec(0, weight, [])
        return sorted(out, key=monomial_sort_key)

    def zero(self) -> "GradedPoly":
        return GradedPoly(self, {})

    def one(self) -> "GradedPoly":
        return self.const(1)

    def const(self, c) -> "GradedPoly":
        c = Fraction(c)
        return GradedPoly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name: str) -> "GradedPoly":
        i = self.index(name)
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return GradedPoly(self, {exps: Fraction(1)})

    def gens(self) -> tuple["GradedPoly", ...]:
        return tuple(self.var(x) for x in self.names)

    def monomial_str(self, exps: Exponents) -> str:
        parts = []
        # c-variables first, u last, matching the way characteristic numbers are written
        order = list(range(1, self.nvars)) + [0]
        for i in order:
            e = exps[i]
            if e == 1:
                parts.append(self.names[i])
            elif e > 1:
                parts.append(f"{self.names[i]}^{e}")
        return "*".join(parts) if parts else "1"


def monomial_sort_key(exps: Exponents):
    # higher-index Chern classes first; the pure u-power comes last within a weight
    return tuple(-e for e in reversed(exps))


class GradedPoly:
    """Immutable truncated polynomial; terms above the ring's truncation are dropped."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Exponents, Fraction]):
        self.ring = ring
        self._terms = {
            e: Fraction(c)
            for e, c in terms.items()
            if c and ring.weight(e) <= ring.truncation
        }
        self._hash = None

    # -- construction helpers ------------------------------------------------
    def _coerce(self, other) -> "GradedPoly":
        if isinstance(other, GradedPoly):
            if other.ring != self.ring:
                raise RingMismatchError(f"{other.ring} vs {self.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    @property
    def terms(self) -> Mapping[Exponents, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponents, Fraction]]:
        return iter(sorted(self._terms.items(), key=lambda kv: (self.ring.weight(kv[0]), monomial_sort_key(kv[0]))))

    def coefficient(self, exps: Exponents) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def __getitem__(self, name: str) -> Fraction:
        """Coefficient of a monomial given by name, e.g. ``p["c2*u^4"]``."""
        return self.coefficient(parse_monomial(self.ring, name))

    @property
    def constant(self) -> Fraction:
        return self.coefficient((0,) * self.ring.nvars)

    def is_zero(self) -> bool:
        return not self._terms

    def weights_present(self) -> set[int]:
        return {self.ring.weight(e) for e in self._terms}

    def component(self, weight: int) -> "GradedPoly":
        return GradedPoly(self.ring, {e: c for e, c in self._terms.items() if self.ring.weight(e) == weight})

    def truncate(self, weight: int) -> "GradedPoly":
        return GradedPoly(self.ring, {e: c for e, c in self._terms.items() if self.ring.weight(e) <= weight})

    def scale_weights(self, factor) -> "GradedPoly":
        """Multiply the weight-j component by ``factor ** j``."""
        f = Fraction(factor)
        return GradedPoly(self.ring, {e: c * f ** self.ring.weight(e) for e, c in self._terms.items()})

    # -- arithmetic ------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return GradedPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return GradedPoly(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return GradedPoly(self.ring, {e: c * f for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ring = self.ring
        top = ring.truncation
        out: dict[Exponents, Fraction] = {}
        rhs = [(e, c, ring.weight(e)) for e, c in other._terms.items()]
        for e1, c1 in self._terms.items():
            w1 = ring.weight(e1)
            for e2, c2, w2 in rhs:
                if w1 + w2 > top:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return GradedPoly(ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"GradedPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            m = self.ring.monomial_str(e)
            parts.append(f"{c}" if m == "1" else f"({c})*{m}")
        return " + ".join(parts)

    # -- series ---------------------------------------------------------------
    def exp(self) -> "GradedPoly":
        if self.constant:
            raise ValueError("exp needs an element with zero constant term")
        return series_eval(self, _exp_coeffs(self.ring.truncation))

    def log1p(self) -> "GradedPoly":
        """log(1 + self) for self with zero constant term."""
        if self.constant:
            raise ValueError("log1p needs an element with zero constant term")
        coeffs = [Fraction(0)] + [Fraction((-1) ** (k + 1), k) for k in range(1, self.ring.truncation + 1)]
        return series_eval(self, coeffs)

    def substitute(self, images: Mapping[str, "GradedPoly"]) -> "GradedPoly":
        """Ring endomorphism sending named variables to the given elements."""
        ring = self.ring
        gens = [images.get(x, ring.var(x)) for x in ring.names]
        out = ring.zero()
        cache: dict[tuple[int, int], GradedPoly] = {}
        for e, c in self._terms.items():
            term = ring.const(c)
            for i, k in enumerate(e):
                if k:
                    if (i, k) not in cache:
                        cache[(i, k)] = gens[i] ** k
                    term = term * cache[(i, k)]
            out = out + term
        return out


def _exp_coeffs(n: int) -> list[Fraction]:
    coeffs = [Fraction(1)]
    for k in range(1, n + 1):
        coeffs.append(coeffs[-1] / k)
    return coeffs


def series_eval(a: GradedPoly, coeffs: Iterable[Fraction]) -> GradedPoly:
    """Evaluate sum_k coeffs[k] a^k; a must have zero constant term so the sum is finite."""
    if a.constant:
        raise ValueError("series needs an element with zero constant term")
    ring = a.ring
    out = ring.zero()
    power = ring.one()
    for k, c in enumerate(coeffs):
        if power.is_zero():
            break
        if c:
            out = out + power * c
        power = power * a
    return out


def parse_monomial(ring: Ring, text: str) -> Exponents:
    exps = [0] * ring.nvars
    text = text.replace(" ", "")
    if text in ("", "1"):
        return tuple(exps)
    for factor in text.split("*"):
        if "^" in factor:
            name, k = factor.split("^")
            exps[ring.index(name)] += int(k)
        else:
            exps[ring.index(factor)] += 1
    return tuple(exps)


def all_monomials_upto(ring: Ring, weight: int) -> list[Exponents]:
    bounds = [range(weight // w + 1) for w in ring.weights]
    return [e for e in product(*bounds) if ring.weight(e) <= weight]
