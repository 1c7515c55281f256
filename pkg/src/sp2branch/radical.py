"""Exact arithmetic in Q[sqrt(2), sqrt(3), sqrt(5), ...].

A :class:`RadicalScalar` is a finite sum ``sum_d q_d * sqrt(d)`` with rational
``q_d`` and squarefree ``d >= 1``.  The representation is canonical, so two
values are equal exactly when their term maps agree.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd
from numbers import Rational

import mpmath

__all__ = [
    "RadicalScalar",
    "sqrt_int",
    "sqrt_rational",
    "squarefree_decompose",
    "as_radical",
]


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Return ``(q, d)`` with ``n == q*q*d`` and ``d`` squarefree."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0, 1
    q, d = 1, 1
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            q *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= rest
    return q, d


class RadicalScalar:
    """Immutable element of the ring of rational combinations of square roots."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean: dict[int, Fraction] = {}
        if terms:
            for d, q in terms.items():
                d = int(d)
                if d < 1:
                    raise ValueError(f"radicand must be >= 1, got {d}")
                q = Fraction(q)
                if q == 0:
                    continue
                s, core = squarefree_decompose(d)
                if s != 1:
                    q *= s
                    d = core
                clean[d] = clean.get(d, Fraction(0)) + q
                if clean[d] == 0:
                    del clean[d]
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def _raw(cls, terms: dict[int, Fraction]) -> RadicalScalar:
        # trusted constructor: keys squarefree, values nonzero
        obj = cls.__new__(cls)
        obj._terms = dict(sorted(terms.items()))
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, q) -> RadicalScalar:
        q = Fraction(q)
        return cls._raw({1: q} if q else {})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    # predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(d == 1 for d in self._terms)

    def is_monoradical(self) -> bool:
        return len(self._terms) == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._terms.get(1, Fraction(0))

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = as_radical(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for d, q in other._terms.items():
            s = out.get(d, Fraction(0)) + q
            if s:
                out[d] = s
            else:
                out.pop(d, None)
        return RadicalScalar._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return RadicalScalar._raw({d: -q for d, q in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = as_radical(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_radical(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = as_radical(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for d1, q1 in self._terms.items():
            for d2, q2 in other._terms.items():
                # sqrt(d1)*sqrt(d2) = g*sqrt(d1*d2/g^2), g = gcd, result squarefree
                g = gcd(d1, d2)
                d = (d1 // g) * (d2 // g)
                s = out.get(d, Fraction(0)) + q1 * q2 * g
                if s:
                    out[d] = s
                else:
                    out.pop(d, None)
        return RadicalScalar._raw(out)

    __rmul__ = __mul__

    def inverse(self) -> RadicalScalar:
        """Inverse of a pure rational or a single-radical value."""
        if not self._terms:
            raise ZeroDivisionError("division by zero RadicalScalar")
        if len(self._terms) != 1:
            raise ValueError(
                "division is only supported by rationals and single radicals, "
                f"got {self}"
            )
        (d, q), = self._terms.items()
        # 1/(q sqrt d) = sqrt(d) / (q d)
        return RadicalScalar._raw({d: 1 / (q * d)})

    def __truediv__(self, other):
        other = as_radical(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = as_radical(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = RadicalScalar._raw({1: Fraction(1)})
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # comparison -------------------------------------------------------
    def __eq__(self, other):
        other = as_radical(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                # agree with hash(Fraction) / hash(int) since __eq__ does
                self._hash = hash(self._terms.get(1, Fraction(0)))
            else:
                self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # conversion -------------------------------------------------------
    def to_mpf(self, prec: int = 64):
        """Value as an ``mpmath.mpf`` carrying ``prec`` bits of mantissa."""
        with mpmath.workprec(prec + 16):
            total = mpmath.mpf(0)
            for d, q in self._terms.items():
                term = mpmath.mpf(q.numerator) / q.denominator
                if d != 1:
                    term *= mpmath.sqrt(d)
                total += term
        with mpmath.workprec(prec):
            return +total

    def __float__(self):
        return float(self.to_mpf(64))

    def conjugate(self) -> RadicalScalar:
        # all scalars are real
        return self

    def to_json_obj(self) -> dict[str, str]:
        return {str(d): f"{q.numerator}/{q.denominator}" for d, q in self._terms.items()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=False)

    @classmethod
    def from_json_obj(cls, obj: dict[str, str]) -> RadicalScalar:
        terms = {}
        for d, q in obj.items():
            d = int(d)
            if squarefree_decompose(d)[0] != 1:
                raise ValueError(f"radicand {d} is not squarefree")
            terms[d] = Fraction(q)
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> RadicalScalar:
        return cls.from_json_obj(json.loads(text))

    def __repr__(self):
        return f"RadicalScalar({self.to_json_obj()!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for d, q in self._terms.items():
            if d == 1:
                parts.append(str(q))
            elif q == 1:
                parts.append(f"√{d}")
            elif q == -1:
                parts.append(f"-√{d}")
            else:
                parts.append(f"({q})√{d}")
        return " + ".join(parts).replace("+ -", "- ")


def as_radical(x, strict: bool = True):
    """Coerce ints, Fractions and RadicalScalars into a RadicalScalar."""
    if isinstance(x, RadicalScalar):
        return x
    if isinstance(x, (int, Fraction, Rational)) and not isinstance(x, bool):
        return RadicalScalar.rational(x)
    if strict:
        raise TypeError(f"cannot convert {type(x).__name__} to RadicalScalar exactly")
    return NotImplemented


def sqrt_int(n: int) -> RadicalScalar:
    """Exact square root of a nonnegative integer, e.g. ``sqrt_int(12) == 2*sqrt(3)``."""
    if n < 0:
        raise ValueError("sqrt_int needs n >= 0")
    q, d = squarefree_decompose(n)
    if q == 0:
        return RadicalScalar()
    return RadicalScalar._raw({d: Fraction(q)})


def sqrt_rational(x) -> RadicalScalar:
    """Exact square root of a nonnegative rational: sqrt(p/q) = sqrt(p*q)/q."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("sqrt_rational needs x >= 0")
    return sqrt_int(x.numerator * x.denominator) / x.denominator
