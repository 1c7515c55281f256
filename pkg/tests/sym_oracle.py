"""Independent symbolic realization of Fock polynomials and Weyl operators (sympy)."""

import sympy

Z = sympy.symbols("z1 z2")


def scalar(c):
    return sum(sympy.Rational(q.numerator, q.denominator) * sympy.sqrt(d) for d, q in c.terms.items())


def poly(f):
    return sympy.expand(sum((scalar(c) * Z[0] ** a[0] * Z[1] ** a[1] for a, c in f.items()), sympy.Integer(0)))


def act(op, expr):
    """Apply sum c z^alpha d^beta by literal differentiation."""
    out = sympy.Integer(0)
    for (alpha, beta), c in op.items():
        g = expr
        for j, b in enumerate(beta):
            if b:
                g = sympy.diff(g, Z[j], b)
        out += scalar(c) * Z[0] ** alpha[0] * Z[1] ** alpha[1] * g
    return sympy.expand(out)
