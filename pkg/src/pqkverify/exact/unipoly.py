"""Univariate polynomials over Q, interpolation, root finding and simple number fields."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from .affine import ParamAffine


class UniPoly:
    """Dense polynomial, ``coeffs[i]`` is the coefficient of x**i.

    Coefficients are Fractions by default; ParamAffine coefficients are allowed
    for interpolation with symbolic values (only the linear operations then apply).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [c if isinstance(c, ParamAffine) else Fraction(c) for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Sequence) -> "UniPoly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _lift(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly((other,))

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UniPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly((other,))
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if _is_zero(c):
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(terms)

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, float) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        lead = other.lead
        dg = other.degree
        for i in range(len(rem) - 1, dg - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c / lead
            q[i - dg] = f
            for j, b in enumerate(other.coeffs):
                rem[i - dg + j] -= f * b
        return UniPoly(q), UniPoly(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def primitive(self) -> "UniPoly":
        """Integer-coefficient associate with content 1 and positive leading coefficient."""
        import math

        if self.is_zero():
            return self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for a in ints:
            g = math.gcd(g, a)
        sign = 1 if ints[-1] > 0 else -1
        return UniPoly([Fraction(sign * a, g) for a in ints])

    def squarefree(self) -> "UniPoly":
        if self.degree < 1:
            return self
        return (self // gcd(self, self.derivative())).monic()


def _is_zero(c) -> bool:
    if isinstance(c, ParamAffine):
        return c.is_zero()
    return c == 0


def gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def xgcd(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly((1,)), UniPoly()
    t0, t1 = UniPoly(), UniPoly((1,))
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = 1 / r0.lead
    return r0 * inv, s0 * inv, t0 * inv


def interpolate(points: Sequence[tuple]) -> UniPoly:
    """Lagrange interpolation; values may be ParamAffine."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissae must be distinct")
    total = UniPoly()
    for i, (xi, (_, yi)) in enumerate(zip(xs, points)):
        basis = UniPoly((1,))
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * UniPoly((-xj, 1))
                denom *= xi - xj
        y = ParamAffine.lift(yi)
        total = total + UniPoly([y * (c / denom) for c in basis.coeffs])
    if any(isinstance(c, ParamAffine) for c in total.coeffs):
        if all(c.is_constant() for c in total.coeffs):
            total = UniPoly([c.constant for c in total.coeffs])
    return total


def evaluate_affine(p: UniPoly, x) -> ParamAffine:
    x = Fraction(x)
    acc = ParamAffine()
    for c in reversed(p.coeffs):
        acc = acc * x + ParamAffine.lift(c)
    return acc


@dataclass(frozen=True)
class Root:
    value: complex
    is_real: bool

    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imag(self) -> float:
        return self.value.imag


def real_roots(p: UniPoly, precision: int = 12) -> list[Root]:
    """All complex roots of p, real ones flagged, sorted by (real part, imaginary part).

    The name follows the usage in the library; complex-conjugate pairs are
    returned as well.
    """
    if p.degree < 1:
        return []
    dps = max(30, 3 * precision)
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(p.coeffs)]
        roots = mpmath.polyroots(coeffs, maxsteps=500, extraprec=4 * dps)
        tol = mpmath.mpf(10) ** (-(dps // 2))
        out = []
        for r in roots:
            r = mpmath.mpc(r)
            real = abs(r.imag) <= tol * max(1, abs(r))
            z = complex(float(r.real), 0.0 if real else float(r.imag))
            out.append(Root(z, real))
    out.sort(key=lambda r: (round(r.real, precision), round(r.imag, precision)))
    return out


def rational_roots(p: UniPoly) -> list[Fraction]:
    """Exact rational roots, found by rounding numeric roots and checking exactly."""
    if p.degree < 1:
        return []
    sf = p.squarefree()
    found = []
    for r in real_roots(sf, precision=15):
        if not r.is_real:
            continue
        for bound in (10**3, 10**6, 10**9, 10**12):
            cand = Fraction(r.real).limit_denominator(bound)
            if sf(cand) == 0:
                if cand not in found:
                    found.append(cand)
                break
    return sorted(found)


class NumberField:
    """Q[x]/(modulus) for an irreducible modulus; elements are reduced UniPolys."""

    def __init__(self, modulus: UniPoly):
        if modulus.degree < 1:
            raise ValueError("modulus must be non-constant")
        self.modulus = modulus.monic()

    def reduce(self, a: UniPoly) -> UniPoly:
        return a % self.modulus

    def mul(self, a: UniPoly, b: UniPoly) -> UniPoly:
        return self.reduce(a * b)

    def inverse(self, a: UniPoly) -> UniPoly:
        g, s, _ = xgcd(self.reduce(a), self.modulus)
        if g.degree != 0:
            raise ZeroDivisionError("element is not invertible modulo the given polynomial")
        return self.reduce(s)

    def div(self, a: UniPoly, b: UniPoly) -> UniPoly:
        return self.mul(a, self.inverse(b))


class RatFunc:
    """Element of Q(x) as a reduced quotient with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, UniPoly) else UniPoly((num,))
        den = UniPoly((1,)) if den is None else (den if isinstance(den, UniPoly) else UniPoly((den,)))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = UniPoly((1,))
        else:
            g = gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        lead = den.lead
        self.num = num * (1 / lead)
        self.den = den * (1 / lead)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _lift(self, other) -> "RatFunc":
        return other if isinstance(other, RatFunc) else RatFunc(other)

    def __add__(self, other):
        other = self._lift(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        return RatFunc(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        other = self._lift(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def __repr__(self):
        return f"RatFunc(({self.num}) / ({self.den}))"

    __str__ = __repr__
