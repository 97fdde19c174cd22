"""Monic integer polynomials, arithmetic mod f, and principal ideal bases.

The coefficient embedding used throughout maps a polynomial of degree < n
to its length-n coefficient vector, constant term first; position i holds
the coefficient of x^(i-1).  With that ordering the embedding is the
identity on our representation, so "vectors" below are plain int sequences.
"""

import re

from ringlat.errors import DimensionMismatchError, ParseError
from ringlat.matrix import IntMatrix


class MonicPoly:
    """Monic degree-n integer polynomial, stored as its n non-leading
    coefficients (g_1, ..., g_n), constant term first:

        g(x) = x^n + g_n x^(n-1) + ... + g_2 x + g_1

    The stored tuple equals the coefficient vector of g - x^n.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if not coeffs:
            raise ValueError("degree must be at least 1")
        self.coeffs = coeffs

    @property
    def degree(self):
        return len(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, MonicPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"MonicPoly({list(self.coeffs)!r})"

    def __str__(self):
        n = self.degree
        parts = [f"x^{n}" if n > 1 else "x"]
        for k in range(n - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                base = "x" if k == 1 else f"x^{k}"
                term = base if mag == 1 else f"{mag}*{base}"
            parts.append(f"{sign}{term}")
        return "".join(parts)


_TERM_RE = re.compile(r"([+-]?)(\d+)?(?:(\*)?x(?:\^(\d+))?)?")


def parse_poly(text):
    """Parse a monic polynomial from either accepted form.

    Coefficient-list form ``[-3, 1, 3]`` gives (g_1, ..., g_n) directly.
    Human form is monomials ``c``, ``x``, ``c*x^k`` (the ``*`` may be
    omitted), ``x^k`` joined by + or -, whitespace ignored; the leading
    monomial must be x^n with coefficient 1.
    """
    s = "".join(text.split())
    if not s:
        raise ParseError("empty polynomial")
    if s.startswith("["):
        if not s.endswith("]"):
            raise ParseError("unterminated coefficient list")
        body = s[1:-1]
        if not body:
            raise ParseError("empty coefficient list")
        try:
            coeffs = [int(p) for p in body.split(",")]
        except ValueError as exc:
            raise ParseError(f"bad coefficient: {exc}") from None
        return MonicPoly(coeffs)

    terms = []
    pos = 0
    while pos < len(s):
        if pos > 0 and s[pos] not in "+-":
            raise ParseError(f"expected + or - before {s[pos:]!r}", column=pos + 1)
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"cannot parse polynomial near {s[pos:]!r}", column=pos + 1)
        sign_s, coef_s, _, exp_s = m.groups()
        has_x = "x" in s[pos : m.end()]
        sign = -1 if sign_s == "-" else 1
        if coef_s is None and not has_x:
            raise ParseError(f"cannot parse polynomial near {s[pos:]!r}", column=pos + 1)
        coef = sign * (int(coef_s) if coef_s is not None else 1)
        if has_x:
            exp = int(exp_s) if exp_s is not None else 1
        else:
            exp = 0
        terms.append((exp, coef, pos))
        pos = m.end()

    lead_exp, lead_coef, lead_pos = terms[0]
    if lead_coef != 1 or lead_exp < 1:
        raise ParseError("leading monomial must be x^n with coefficient 1", column=lead_pos + 1)
    n = lead_exp
    coeffs = [0] * n
    for exp, coef, tpos in terms[1:]:
        if exp >= n:
            raise ParseError(f"term x^{exp} not below the leading degree {n}", column=tpos + 1)
        coeffs[exp] += coef
    return MonicPoly(coeffs)


def format_poly(poly):
    """Canonical coefficient-list form, constant term first."""
    return "[" + ", ".join(str(c) for c in poly.coeffs) + "]"


def parse_coeff_vector(text, n):
    """Parse a length-n coefficient vector from list form, e.g. ``[0, 1]``.

    Shorter lists are zero-padded up to n (a degree-k polynomial with
    k < n is a valid residue); longer ones are rejected.
    """
    s = "".join(text.split())
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError("coefficient vector must be in list form [c1, c2, ...]")
    body = s[1:-1]
    if not body:
        raise ParseError("empty coefficient list")
    try:
        coeffs = [int(p) for p in body.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad coefficient: {exc}") from None
    if len(coeffs) > n:
        raise ParseError(f"got {len(coeffs)} coefficients for dimension {n}")
    return coeffs + [0] * (n - len(coeffs))


def mul_x_mod(v, f):
    """Coefficient vector of x * (polynomial with coefficients v), mod f.

    Equals shift(v) - v_n * (coefficients of f - x^n), where v_n is the top
    coefficient of v.
    """
    n = f.degree
    if len(v) != n:
        raise DimensionMismatchError(f"vector length {len(v)} != degree {n}")
    top = v[n - 1]
    out = [0] + list(v[: n - 1])
    if top:
        for i, fc in enumerate(f.coeffs):
            out[i] -= top * fc
    return out


def poly_mul_mod(a, b, f):
    """Coefficient vector of the product of two residues mod f.

    Horner-style: run through b's coefficients from the top, alternating a
    multiply-by-x step with adding a scaled copy of a.
    """
    n = f.degree
    if len(a) != n or len(b) != n:
        raise DimensionMismatchError("operand lengths must equal the modulus degree")
    acc = [0] * n
    for j in range(n - 1, -1, -1):
        acc = mul_x_mod(acc, f)
        bj = b[j]
        if bj:
            acc = [e + bj * ai for e, ai in zip(acc, a)]
    return acc


def principal_ideal_basis(f, g):
    """Basis of the principal ideal generated by g in the quotient ring by f.

    Row i (0-indexed) is the coefficient vector of x^i * g mod f.  Raises
    ValueError when the rows are linearly dependent (the ideal does not
    span a full-rank lattice).
    """
    n = f.degree
    if len(g) != n:
        raise DimensionMismatchError("generator length must equal the modulus degree")
    rows = [list(g)]
    for _ in range(n - 1):
        rows.append(mul_x_mod(rows[-1], f))
    b = IntMatrix(rows)
    from ringlat.linalg import determinant

    if determinant(b) == 0:
        raise ValueError("does not generate a full-rank lattice")
    return b
