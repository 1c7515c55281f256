"""Polynomials on C^n with the Fock inner product.

Variables are rescaled by sqrt(pi), so the reproducing kernel is
``exp((z, conj(w)))`` and the monomials satisfy
``<z^a, z^b> = delta_ab * a!``.  With this convention pi never appears in
the coefficient ring.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Literal, Mapping

from .radical import RadicalScalar, as_radical, sqrt_int

__all__ = [
    "FockPolynomial",
    "NormFormulaInput",
    "inner_product",
    "norm_closed_form",
    "monomial_expand_invariant",
    "invariant_I",
    "pochhammer",
    "INVARIANT_COEFF",
]

Index = tuple[int, ...]

# coefficient of z1*z2^3 in the U(1)-invariant I
INVARIANT_COEFF = 1 / (3 * sqrt_int(3))


def pochhammer(a, m: int):
    """Rising factorial (a)_m = a (a+1) ... (a+m-1); exact for Fractions."""
    out = Fraction(1) if isinstance(a, (int, Fraction)) else 1
    for r in range(m):
        out *= a + r
    return out


class FockPolynomial:
    """Sparse polynomial in ``n`` variables with :class:`RadicalScalar` coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Iterable[int], object] | None = None):
        self.n = int(n)
        clean: dict[Index, RadicalScalar] = {}
        for alpha, c in (terms or {}).items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != self.n:
                raise ValueError(f"multi-index {alpha} has length != {self.n}")
            if any(a < 0 for a in alpha):
                raise ValueError(f"negative exponent in {alpha}")
            c = as_radical(c)
            s = clean.get(alpha, RadicalScalar()) + c
            if s:
                clean[alpha] = s
            else:
                clean.pop(alpha, None)
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def _raw(cls, n: int, terms: dict[Index, RadicalScalar]) -> FockPolynomial:
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = dict(sorted(terms.items()))
        return obj

    @classmethod
    def monomial(cls, alpha: Iterable[int], coeff=1) -> FockPolynomial:
        alpha = tuple(alpha)
        return cls(len(alpha), {alpha: coeff})

    @classmethod
    def constant(cls, n: int, c=1) -> FockPolynomial:
        return cls(n, {(0,) * n: c})

    @classmethod
    def zero(cls, n: int) -> FockPolynomial:
        return cls._raw(n, {})

    @property
    def terms(self) -> dict[Index, RadicalScalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, alpha: Iterable[int]) -> RadicalScalar:
        return self._terms.get(tuple(alpha), RadicalScalar())

    # derived queries ----------------------------------------------------
    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(a) for a in self._terms)

    def degrees(self) -> list[int]:
        return sorted({sum(a) for a in self._terms})

    def homogeneous_part(self, deg: int) -> FockPolynomial:
        return FockPolynomial._raw(self.n, {a: c for a, c in self._terms.items() if sum(a) == deg})

    def restrict(self, pred) -> FockPolynomial:
        return FockPolynomial._raw(self.n, {a: c for a, c in self._terms.items() if pred(a)})

    def weights(self, cartan_diag: Iterable[int] | None = None) -> set[int]:
        """Set of weights of the monomials present.

        The weight of ``z^a`` under ``-tr(D)/2 - sum_j D_jj z_j d_j`` is
        ``-tr(D)/2 - sum_j D_jj a_j``; the default ``D = diag(3, -1)`` is the
        n = 2 principal Cartan element.
        """
        diag = tuple(cartan_diag) if cartan_diag is not None else (3, -1)
        if len(diag) != self.n:
            raise ValueError("Cartan diagonal length does not match n")
        half_tr = Fraction(sum(diag), 2)
        return {-half_tr - sum(d * a for d, a in zip(diag, alpha)) for alpha in self._terms}

    # arithmetic -------------------------------------------------------
    def _check(self, other: FockPolynomial):
        if not isinstance(other, FockPolynomial):
            raise TypeError(f"expected FockPolynomial, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, FockPolynomial):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for a, c in other._terms.items():
            s = out.get(a, RadicalScalar()) + c
            if s:
                out[a] = s
            else:
                out.pop(a, None)
        return FockPolynomial._raw(self.n, out)

    def __neg__(self):
        return FockPolynomial._raw(self.n, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, FockPolynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> FockPolynomial:
        c = as_radical(c)
        if not c:
            return FockPolynomial.zero(self.n)
        return FockPolynomial._raw(self.n, {a: v * c for a, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, FockPolynomial):
            self._check(other)
            out: dict[Index, RadicalScalar] = {}
            for a, c in self._terms.items():
                for b, d in other._terms.items():
                    key = tuple(x + y for x, y in zip(a, b))
                    s = out.get(key, RadicalScalar()) + c * d
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
            return FockPolynomial._raw(self.n, out)
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
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = FockPolynomial.constant(self.n)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, FockPolynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, tuple(self._terms.items())))

    # evaluation -------------------------------------------------------
    def evaluate(self, z: Iterable[complex], prec: int = 53) -> complex:
        """Numeric value at a point of C^n (rescaled coordinates)."""
        z = tuple(complex(v) for v in z)
        if len(z) != self.n:
            raise ValueError("point dimension mismatch")
        total = 0j
        for alpha, c in self._terms.items():
            total += float(c.to_mpf(prec)) * prod(zj**a for zj, a in zip(z, alpha))
        return total

    # serialization ----------------------------------------------------
    def to_json_obj(self) -> list[dict]:
        return [{"alpha": list(a), "coeff": c.to_json_obj()} for a, c in self._terms.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: list[dict], n: int | None = None) -> FockPolynomial:
        if n is None:
            if not obj:
                raise ValueError("cannot infer n from an empty polynomial; pass n")
            n = len(obj[0]["alpha"])
        return cls(n, {tuple(t["alpha"]): RadicalScalar.from_json_obj(t["coeff"]) for t in obj})

    @classmethod
    def from_json(cls, text: str, n: int | None = None) -> FockPolynomial:
        return cls.from_json_obj(json.loads(text), n)

    def __repr__(self):
        if not self._terms:
            return f"FockPolynomial({self.n}, 0)"
        parts = []
        for a, c in self._terms.items():
            mono = "*".join(f"z{j + 1}^{e}" if e > 1 else f"z{j + 1}" for j, e in enumerate(a) if e)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return f"FockPolynomial({self.n}, " + " + ".join(parts) + ")"


def monomial_norm_sq(alpha: Iterable[int]) -> int:
    return prod(factorial(a) for a in alpha)


def inner_product(p: FockPolynomial, q: FockPolynomial) -> RadicalScalar:
    """Fock pairing <p, q>; conjugation is trivial on the (real) scalars."""
    p._check(q)
    if len(p) > len(q):
        p, q = q, p
    total = RadicalScalar()
    for alpha, c in p.items():
        d = q._terms.get(alpha)
        if d is not None:
            total = total + c * d.conjugate() * monomial_norm_sq(alpha)
    return total


def invariant_I() -> FockPolynomial:
    """The basic invariant I = z1 z2^3 / (3 sqrt 3)."""
    return FockPolynomial(2, {(1, 3): INVARIANT_COEFF})


def monomial_expand_invariant(m: int, extra: FockPolynomial | Iterable[int] | None = None) -> FockPolynomial:
    """``I^m * extra`` as a polynomial; ``extra`` is a polynomial or an exponent pair."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if extra is None:
        extra = FockPolynomial.constant(2)
    elif not isinstance(extra, FockPolynomial):
        extra = FockPolynomial.monomial(tuple(extra))
    if extra.n != 2:
        raise ValueError("the invariant lives in two variables")
    # (3 sqrt 3)^{-m} = 3^{-m} * sqrt(3)^{-m}
    head = FockPolynomial(2, {(m, 3 * m): INVARIANT_COEFF**m})
    return head * extra


@dataclass(frozen=True)
class NormFormulaInput:
    m: int
    k: int
    variable: Literal["z1", "z2"] = "z1"

    def __post_init__(self):
        if self.m < 0 or self.k < 0:
            raise ValueError("m and k must be nonnegative")
        if self.variable not in ("z1", "z2"):
            raise ValueError("variable must be 'z1' or 'z2'")


def norm_closed_form(inp: NormFormulaInput) -> RadicalScalar:
    """Closed form of ||I^m z_j^k||^2.

    ``(m!)^2 (m+1)_k (2/3)_m (1/3)_m`` for z1 and
    ``(m!)^2 (3m+1)_k (2/3)_m (1/3)_m`` for z2.
    """
    m, k = inp.m, inp.k
    base = Fraction(factorial(m) ** 2) * pochhammer(Fraction(2, 3), m) * pochhammer(Fraction(1, 3), m)
    shift = m + 1 if inp.variable == "z1" else 3 * m + 1
    return RadicalScalar.rational(base * pochhammer(Fraction(shift), k))
