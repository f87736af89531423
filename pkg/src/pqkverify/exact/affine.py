"""Affine expressions in named parameters with rational (or float) coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Number
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction, float]


def _num(x):
    if isinstance(x, float):
        return x
    return Fraction(x)


class ParamAffine:
    """constant + sum coeffs[name] * name.

    Coefficients are kept exact unless a float enters, in which case the
    affected coefficients become floats (used by the optimisation layer).
    """

    __slots__ = ("constant", "_coeffs")

    def __init__(self, constant: Scalar = 0, coeffs: Mapping[str, Scalar] | None = None):
        self.constant = _num(constant)
        self._coeffs = {k: _num(v) for k, v in (coeffs or {}).items() if v != 0}

    @classmethod
    def param(cls, name: str) -> "ParamAffine":
        return cls(0, {name: 1})

    @property
    def coeffs(self) -> dict[str, Scalar]:
        return dict(self._coeffs)

    def coeff(self, name: str) -> Scalar:
        return self._coeffs.get(name, Fraction(0))

    @property
    def params(self) -> tuple[str, ...]:
        return tuple(sorted(self._coeffs))

    def is_constant(self) -> bool:
        return not self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs and self.constant == 0

    def is_exact(self) -> bool:
        return not isinstance(self.constant, float) and not any(isinstance(c, float) for c in self._coeffs.values())

    @staticmethod
    def lift(x) -> "ParamAffine":
        if isinstance(x, ParamAffine):
            return x
        if isinstance(x, str):
            return ParamAffine.param(x)
        if isinstance(x, Number):
            return ParamAffine(x)
        raise TypeError(f"cannot lift {type(x).__name__} to ParamAffine")

    def __add__(self, other):
        try:
            other = ParamAffine.lift(other)
        except TypeError:
            return NotImplemented
        coeffs = dict(self._coeffs)
        for k, v in other._coeffs.items():
            coeffs[k] = coeffs.get(k, 0) + v
        return ParamAffine(self.constant + other.constant, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return ParamAffine(-self.constant, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        try:
            other = ParamAffine.lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ParamAffine):
            if other.is_constant():
                other = other.constant
            elif self.is_constant():
                return other * self.constant
            else:
                raise ValueError("product of two non-constant affine forms is not affine")
        if not isinstance(other, Number):
            return NotImplemented
        f = _num(other)
        return ParamAffine(self.constant * f, {k: v * f for k, v in self._coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ParamAffine) and other.is_constant():
            other = other.constant
        if not isinstance(other, Number):
            return NotImplemented
        if isinstance(other, float):
            return self * (1.0 / other)
        return self * (1 / Fraction(other))

    def __eq__(self, other):
        try:
            other = ParamAffine.lift(other)
        except TypeError:
            return NotImplemented
        return self.constant == other.constant and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.constant, frozenset(self._coeffs.items())))

    def substitute(self, values: Mapping[str, object]) -> "ParamAffine":
        """Replace parameters by numbers or other affine forms."""
        out = ParamAffine(self.constant)
        for k, v in self._coeffs.items():
            if k in values:
                out = out + ParamAffine.lift(values[k]) * v
            else:
                out = out + ParamAffine(0, {k: v})
        return out

    def evaluate(self, values: Mapping[str, Scalar]):
        missing = [k for k in self._coeffs if k not in values]
        if missing:
            raise KeyError(f"no value for {missing}")
        total = self.constant
        for k, v in self._coeffs.items():
            total = total + v * _num(values[k])
        return total

    def to_float(self) -> "ParamAffine":
        return ParamAffine(float(self.constant), {k: float(v) for k, v in self._coeffs.items()})

    def common_denominator(self) -> int:
        import math

        den = 1
        for c in (self.constant, *self._coeffs.values()):
            if isinstance(c, float):
                raise ValueError("float coefficients have no denominator")
            den = den * c.denominator // math.gcd(den, c.denominator)
        return den

    def __repr__(self):
        return f"ParamAffine({self})"

    def __str__(self):
        parts = []
        if self.constant != 0 or not self._coeffs:
            parts.append(f"{self.constant}")
        for k in sorted(self._coeffs):
            parts.append(f"({self._coeffs[k]})*{k}")
        return " + ".join(parts)

    def as_dict(self) -> dict[str, str]:
        """Serialisable view; exact values render as "num/den"."""
        out = {"1": rat_str(self.constant)}
        for k in sorted(self._coeffs):
            out[k] = rat_str(self._coeffs[k])
        return out


def rat_str(x) -> str:
    if isinstance(x, float):
        return repr(x)
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def affine_sum(terms: Iterable[ParamAffine]) -> ParamAffine:
    out = ParamAffine()
    for t in terms:
        out = out + t
    return out
