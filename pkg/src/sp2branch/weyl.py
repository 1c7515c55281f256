"""Normal-ordered differential operators with polynomial coefficients.

A :class:`WeylOperator` is a finite sum ``sum c * z^a d^b`` where every
multiplication sits to the left of every derivative.  Products are reordered
immediately, so operator identities reduce to comparing term maps.
"""

from __future__ import annotations

import json
from functools import cached_property
from itertools import product
from math import comb, perm
from typing import Iterable, Mapping

from .fock import FockPolynomial, inner_product
from .radical import RadicalScalar, as_radical

__all__ = ["WeylOperator", "apply", "compose", "commutator", "formal_adjoint"]

Index = tuple[int, ...]
Key = tuple[Index, Index]


def _falling(g: Index, b: Index) -> int:
    # prod_j g_j (g_j - 1) ... (g_j - b_j + 1); zero when b_j > g_j
    out = 1
    for gj, bj in zip(g, b):
        if bj > gj:
            return 0
        out *= perm(gj, bj)
    return out


class WeylOperator:
    """Element of the Weyl algebra in ``n`` variables, stored in normal order."""

    def __init__(self, n: int, terms: Mapping[tuple[Iterable[int], Iterable[int]], object] | None = None):
        self.n = int(n)
        clean: dict[Key, RadicalScalar] = {}
        for (a, b), c in (terms or {}).items():
            key = (tuple(int(x) for x in a), tuple(int(x) for x in b))
            if len(key[0]) != self.n or len(key[1]) != self.n:
                raise ValueError(f"multi-index length != {self.n} in {key}")
            if any(x < 0 for x in key[0] + key[1]):
                raise ValueError(f"negative exponent in {key}")
            s = clean.get(key, RadicalScalar()) + as_radical(c)
            if s:
                clean[key] = s
            else:
                clean.pop(key, None)
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def _raw(cls, n: int, terms: dict[Key, RadicalScalar]) -> WeylOperator:
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = dict(sorted(terms.items()))
        return obj

    # elementary operators ---------------------------------------------
    @classmethod
    def scalar(cls, n: int, c=1) -> WeylOperator:
        zero = (0,) * n
        return cls(n, {(zero, zero): c})

    @classmethod
    def identity(cls, n: int) -> WeylOperator:
        return cls.scalar(n, 1)

    @classmethod
    def zero(cls, n: int) -> WeylOperator:
        return cls._raw(n, {})

    @classmethod
    def term(cls, z: Iterable[int], d: Iterable[int], c=1) -> WeylOperator:
        z, d = tuple(z), tuple(d)
        if len(z) != len(d):
            raise ValueError("z and d exponents must have equal length")
        return cls(len(z), {(z, d): c})

    @classmethod
    def mul_z(cls, n: int, j: int, power: int = 1) -> WeylOperator:
        """Multiplication by z_j^power (j is 0-based)."""
        a = [0] * n
        a[j] = power
        return cls(n, {(tuple(a), (0,) * n): 1})

    @classmethod
    def d(cls, n: int, j: int, power: int = 1) -> WeylOperator:
        """Partial derivative d_j^power (j is 0-based)."""
        b = [0] * n
        b[j] = power
        return cls(n, {((0,) * n, tuple(b)): 1})

    @property
    def terms(self) -> dict[Key, RadicalScalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    @cached_property
    def orders(self) -> tuple[int, int]:
        """(max total z-degree, max total derivative order); bookkeeping only."""
        if not self._terms:
            return (0, 0)
        return (max(sum(a) for a, _ in self._terms), max(sum(b) for _, b in self._terms))

    # linear structure -------------------------------------------------
    def _check(self, other):
        if not isinstance(other, WeylOperator):
            raise TypeError(f"expected WeylOperator, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, WeylOperator):
            try:
                other = WeylOperator.scalar(self.n, as_radical(other))
            except TypeError:
                return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, RadicalScalar()) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return WeylOperator._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return WeylOperator._raw(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> WeylOperator:
        c = as_radical(c)
        if not c:
            return WeylOperator.zero(self.n)
        return WeylOperator._raw(self.n, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, WeylOperator):
            return compose(self, other)
        if isinstance(other, FockPolynomial):
            return apply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        return self.scale(as_radical(other).inverse())

    def __pow__(self, e: int):
        out = WeylOperator.identity(self.n)
        for _ in range(e):
            out = compose(out, self)
        return out

    def __call__(self, p: FockPolynomial) -> FockPolynomial:
        return apply(self, p)

    def __eq__(self, other):
        if not isinstance(other, WeylOperator):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, tuple(self._terms.items())))

    # serialization ----------------------------------------------------
    def to_json_obj(self) -> list[dict]:
        return [{"z": list(a), "d": list(b), "coeff": c.to_json_obj()} for (a, b), c in self._terms.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: list[dict], n: int | None = None) -> WeylOperator:
        if n is None:
            if not obj:
                raise ValueError("cannot infer n from an empty operator; pass n")
            n = len(obj[0]["z"])
        return cls(n, {(tuple(t["z"]), tuple(t["d"])): RadicalScalar.from_json_obj(t["coeff"]) for t in obj})

    @classmethod
    def from_json(cls, text: str, n: int | None = None) -> WeylOperator:
        return cls.from_json_obj(json.loads(text), n)

    def __repr__(self):
        if not self._terms:
            return f"WeylOperator({self.n}, 0)"
        parts = []
        for (a, b), c in self._terms.items():
            zs = "".join(f"z{j + 1}" + (f"^{e}" if e > 1 else "") for j, e in enumerate(a) if e)
            ds = "".join(f"d{j + 1}" + (f"^{e}" if e > 1 else "") for j, e in enumerate(b) if e)
            parts.append(f"({c}){zs}{ds}")
        return f"WeylOperator({self.n}, " + " + ".join(parts) + ")"


def apply(op: WeylOperator, p: FockPolynomial) -> FockPolynomial:
    """Action of a normal-ordered operator on a polynomial."""
    if op.n != p.n:
        raise ValueError(f"variable count mismatch: operator {op.n}, polynomial {p.n}")
    out: dict[Index, RadicalScalar] = {}
    for (a, b), c in op.items():
        for g, v in p.items():
            f = _falling(g, b)
            if not f:
                continue
            key = tuple(gj - bj + aj for gj, bj, aj in zip(g, b, a))
            s = out.get(key, RadicalScalar()) + c * v * f
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return FockPolynomial._raw(p.n, out)


def compose(a: WeylOperator, b: WeylOperator) -> WeylOperator:
    """Normal-ordered product ``a o b``.

    Uses ``d^beta z^gamma = sum_k C(beta, k) gamma^(k) z^(gamma-k) d^(beta-k)``
    with ``gamma^(k)`` the falling factorial, summed over ``k <= min(beta, gamma)``.
    """
    a._check(b)
    n = a.n
    out: dict[Key, RadicalScalar] = {}
    for (al, be), c in a.items():
        for (ga, de), d in b.items():
            cd = c * d
            ranges = [range(min(bj, gj) + 1) for bj, gj in zip(be, ga)]
            for kap in product(*ranges):
                w = 1
                for bj, gj, kj in zip(be, ga, kap):
                    w *= comb(bj, kj) * perm(gj, kj)
                zpart = tuple(al[j] + ga[j] - kap[j] for j in range(n))
                dpart = tuple(be[j] - kap[j] + de[j] for j in range(n))
                key = (zpart, dpart)
                s = out.get(key, RadicalScalar()) + cd * w
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return WeylOperator._raw(n, out)


def commutator(a: WeylOperator, b: WeylOperator) -> WeylOperator:
    return compose(a, b) - compose(b, a)


def formal_adjoint(op: WeylOperator) -> WeylOperator:
    """Fock-space adjoint: ``c z^a d^b -> c z^b d^a`` (z_j and d_j are mutually adjoint).

    The swapped term is again normal ordered because ``(z^a d^b)* = (d^b)* (z^a)* = z^b d^a``.
    """
    return WeylOperator._raw(op.n, {(b, a): c.conjugate() for (a, b), c in op.items()})


def adjoint_defect(op: WeylOperator, p: FockPolynomial, q: FockPolynomial) -> RadicalScalar:
    """``<op p, q> - <p, op* q>``; zero for every pair of polynomials."""
    return inner_product(apply(op, p), q) - inner_product(p, apply(formal_adjoint(op), q))
