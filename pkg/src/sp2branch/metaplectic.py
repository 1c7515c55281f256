"""Principal sl(2) inside sp(n, C) and its image in the Weyl algebra.

Block convention: an element of sp(n, C) is ``[[A, B], [C, -A^T]]`` with
``B`` and ``C`` symmetric.  The Fock-space action (variables rescaled by
sqrt(pi)) is::

    upper block B  ->  -(1/2) (B d, d)
    lower block C  ->  (1/2) (C z, z)
    Cartan block A ->  -tr(A)/2 - sum_jk A_jk z_k d_j
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .radical import RadicalScalar, as_radical, sqrt_int
from .report import VerificationReport
from .weyl import WeylOperator, commutator, compose

__all__ = [
    "SpElement",
    "PrincipalTriple",
    "principal_sl2",
    "verify_sl2_matrix",
    "dlambda",
    "sl2_operators",
    "casimir_operator",
    "verify_sl2_weyl",
]

Matrix = tuple[tuple[RadicalScalar, ...], ...]


# -- tiny exact matrix helpers ------------------------------------------------
def _mat(rows) -> Matrix:
    return tuple(tuple(as_radical(x) for x in row) for row in rows)


def _zeros(r: int, c: int | None = None) -> Matrix:
    c = r if c is None else c
    zero = RadicalScalar()
    return tuple(tuple(zero for _ in range(c)) for _ in range(r))


def _matmul(x: Matrix, y: Matrix) -> Matrix:
    inner = len(y)
    cols = len(y[0]) if y else 0
    out = []
    for row in x:
        acc = []
        for j in range(cols):
            s = RadicalScalar()
            for k in range(inner):
                if row[k] and y[k][j]:
                    s = s + row[k] * y[k][j]
            acc.append(s)
        out.append(tuple(acc))
    return tuple(out)


def _transpose(x: Matrix) -> Matrix:
    return tuple(zip(*x)) if x else x


def _lin(x: Matrix, y: Matrix, a=1, b=1) -> Matrix:
    return tuple(tuple(a * p + b * q for p, q in zip(rx, ry)) for rx, ry in zip(x, y))


def _is_symmetric(x: Matrix) -> bool:
    return x == _transpose(x)


def _block(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Matrix:
    top = tuple(ra + rb for ra, rb in zip(a, b))
    bottom = tuple(rc + rd for rc, rd in zip(c, d))
    return top + bottom


def _fmt(x: Matrix) -> str:
    return "[" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in x) + "]"


@dataclass(frozen=True)
class SpElement:
    """Element ``[[A, B], [C, -A^T]]`` of sp(n, C) with exact entries."""

    n: int
    A: Matrix
    B: Matrix
    C: Matrix

    def __post_init__(self):
        for name in ("A", "B", "C"):
            m = _mat(getattr(self, name))
            if len(m) != self.n or any(len(r) != self.n for r in m):
                raise ValueError(f"block {name} must be {self.n}x{self.n}")
            object.__setattr__(self, name, m)
        if not _is_symmetric(self.B):
            raise ValueError("block B must be symmetric")
        if not _is_symmetric(self.C):
            raise ValueError("block C must be symmetric")

    @classmethod
    def cartan(cls, diag) -> SpElement:
        n = len(diag)
        A = tuple(tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n))
        return cls(n, A, _zeros(n), _zeros(n))

    @property
    def D(self) -> Matrix:
        """Lower-right block, ``-A^T``."""
        return tuple(tuple(-v for v in row) for row in _transpose(self.A))

    def matrix(self) -> Matrix:
        return _block(self.A, self.B, self.C, self.D)

    def transpose(self) -> SpElement:
        # [[A, B], [C, -A^T]]^T = [[A^T, C^T], [B^T, -A]]
        return SpElement(self.n, _transpose(self.A), _transpose(self.C), _transpose(self.B))

    def __add__(self, other: SpElement) -> SpElement:
        return SpElement(self.n, _lin(self.A, other.A), _lin(self.B, other.B), _lin(self.C, other.C))

    def scale(self, c) -> SpElement:
        c = as_radical(c)
        z = _zeros(self.n)
        return SpElement(self.n, _lin(self.A, z, c, 0), _lin(self.B, z, c, 0), _lin(self.C, z, c, 0))

    @classmethod
    def from_matrix(cls, m: Matrix) -> SpElement:
        n = len(m) // 2
        A = tuple(row[:n] for row in m[:n])
        B = tuple(row[n:] for row in m[:n])
        C = tuple(row[:n] for row in m[n:])
        D = tuple(row[n:] for row in m[n:])
        el = cls(n, A, B, C)
        if el.D != _mat(D):
            raise ValueError("lower-right block is not -A^T; matrix is not in sp(n)")
        return el

    def bracket(self, other: SpElement) -> SpElement:
        x, y = self.matrix(), other.matrix()
        return SpElement.from_matrix(_lin(_matmul(x, y), _matmul(y, x), 1, -1))

    def to_json_obj(self) -> dict:
        enc = lambda m: [[v.to_json_obj() for v in row] for row in m]  # noqa: E731
        return {"n": self.n, "blocks": {"A": enc(self.A), "B": enc(self.B), "C": enc(self.C)}}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> SpElement:
        dec = lambda m: tuple(tuple(RadicalScalar.from_json_obj(v) for v in row) for row in m)  # noqa: E731
        b = obj["blocks"]
        return cls(int(obj["n"]), dec(b["A"]), dec(b["B"]), dec(b["C"]))

    @classmethod
    def from_json(cls, text: str) -> SpElement:
        return cls.from_json_obj(json.loads(text))


@dataclass(frozen=True)
class PrincipalTriple:
    n: int
    H: SpElement
    Eplus: SpElement
    Eminus: SpElement

    @property
    def D(self) -> Matrix:
        return self.H.A

    @property
    def B(self) -> Matrix:
        return self.Eplus.B

    @property
    def C(self) -> Matrix:
        return self.Eplus.C


def principal_coefficients(n: int) -> tuple[list[RadicalScalar], list[RadicalScalar]]:
    """``beta_k = sqrt((2k-1)(2(n-k)+1))`` for k = 1..n and
    ``gamma_k = 2 sqrt((k-1)(n-k+1))`` for k = 2..n (1-based lists, index 0 unused for gamma)."""
    beta = [sqrt_int((2 * k - 1) * (2 * (n - k) + 1)) for k in range(1, n + 1)]
    gamma = [RadicalScalar()] + [2 * sqrt_int((k - 1) * (n - k + 1)) for k in range(2, n + 1)]
    return beta, gamma


def principal_sl2(n: int) -> PrincipalTriple:
    """Image of the standard sl(2) triple under the (2n-1)-st symmetric power."""
    if n < 1:
        raise ValueError("n must be >= 1")
    beta, gamma = principal_coefficients(n)
    diag = [2 * n - 1 - 4 * j for j in range(n)]
    zero = RadicalScalar()
    # b_jk = beta_k [j = n-k+1],  c_jk = gamma_k [j = n-k+2]  (1-based)
    B = tuple(
        tuple(beta[k - 1] if j == n - k + 1 else zero for k in range(1, n + 1)) for j in range(1, n + 1)
    )
    C = tuple(
        tuple(gamma[k - 1] if (k >= 2 and j == n - k + 2) else zero for k in range(1, n + 1))
        for j in range(1, n + 1)
    )
    H = SpElement.cartan(diag)
    Eplus = SpElement(n, _zeros(n), B, C)
    return PrincipalTriple(n, H, Eplus, Eplus.transpose())


def verify_sl2_matrix(t: PrincipalTriple) -> VerificationReport:
    """Exact check of the sl(2) relations and block symmetry for a triple."""
    rep = VerificationReport(f"sl2-matrix n={t.n}")
    H, Ep, Em = t.H.matrix(), t.Eplus.matrix(), t.Eminus.matrix()

    def br(x, y):
        return _lin(_matmul(x, y), _matmul(y, x), 1, -1)

    zero = _zeros(2 * t.n)
    lhs = br(H, Ep)
    rhs = _lin(Ep, zero, 2, 0)
    rep.add(f"n{t.n}:[H,E+]=2E+", "[H, E+] = 2 E+", lhs == rhs, _fmt(rhs), _fmt(lhs))
    lhs = br(H, Em)
    rhs = _lin(Em, zero, -2, 0)
    rep.add(f"n{t.n}:[H,E-]=-2E-", "[H, E-] = -2 E-", lhs == rhs, _fmt(rhs), _fmt(lhs))
    lhs = br(Ep, Em)
    rep.add(f"n{t.n}:[E+,E-]=H", "[E+, E-] = H", lhs == H, _fmt(H), _fmt(lhs))
    sym = all(
        _is_symmetric(x.B) and _is_symmetric(x.C) for x in (t.H, t.Eplus, t.Eminus)
    ) and _transpose(Ep) == Em
    rep.add(f"n{t.n}:symmetry", "B, C symmetric and E- = (E+)^T", sym, "True", str(sym))
    return rep


def dlambda(x: SpElement) -> WeylOperator:
    """Fock-space differential operator of a Lie algebra element."""
    if not (_is_symmetric(x.B) and _is_symmetric(x.C)):
        raise ValueError("SpElement with non-symmetric B or C")
    n = x.n
    half = Fraction(1, 2)
    terms: dict = {}

    def add(key, c):
        terms[key] = terms.get(key, RadicalScalar()) + c

    zero = (0,) * n

    def unit(*idx):
        v = [0] * n
        for i in idx:
            v[i] += 1
        return tuple(v)

    trace = RadicalScalar()
    for j in range(n):
        trace = trace + x.A[j][j]
        for k in range(n):
            if x.B[j][k]:
                add((zero, unit(j, k)), -half * x.B[j][k])
            if x.C[j][k]:
                add((unit(j, k), zero), half * x.C[j][k])
            if x.A[j][k]:
                # -(A z)_j d_j = -A_jk z_k d_j
                add((unit(k), unit(j)), -x.A[j][k])
    if trace:
        add((zero, zero), -half * trace)
    return WeylOperator(n, terms)


def sl2_operators(n: int = 2) -> tuple[WeylOperator, WeylOperator, WeylOperator]:
    """(Lambda(H), Lambda(E+), Lambda(E-)) for the principal triple."""
    t = principal_sl2(n)
    return dlambda(t.H), dlambda(t.Eplus), dlambda(t.Eminus)


def casimir_operator(n: int = 2) -> WeylOperator:
    """``C = 2 E+ E- - H + H^2/2`` realized in the Weyl algebra."""
    LH, LEp, LEm = sl2_operators(n)
    return compose(LEp, LEm).scale(2) - LH + compose(LH, LH).scale(Fraction(1, 2))


def verify_sl2_weyl(n: int = 2) -> VerificationReport:
    """Operator-level sl(2) relations and centrality of the Casimir."""
    rep = VerificationReport(f"sl2-weyl n={n}")
    LH, LEp, LEm = sl2_operators(n)
    C = casimir_operator(n)
    cases = [
        ("[H,E+]=2E+", commutator(LH, LEp), LEp.scale(2)),
        ("[H,E-]=-2E-", commutator(LH, LEm), LEm.scale(-2)),
        ("[E+,E-]=H", commutator(LEp, LEm), LH),
        ("[C,E+]=0", commutator(C, LEp), WeylOperator.zero(n)),
        ("[C,E-]=0", commutator(C, LEm), WeylOperator.zero(n)),
        ("[C,H]=0", commutator(C, LH), WeylOperator.zero(n)),
    ]
    for name, lhs, rhs in cases:
        rep.add(name, f"exact normal-ordered identity {name}", lhs == rhs, repr(rhs), repr(lhs))
    return rep
