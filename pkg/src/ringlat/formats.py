"""Text and JSON serialization for matrices, polynomials and ring classes.

Machine-readable outputs carry every integer as a decimal string so that
arbitrary-precision values survive JSON readers that parse numbers into
floats.
"""

import json

from ringlat.errors import ParseError
from ringlat.identify import RingClass
from ringlat.matrix import IntMatrix
from ringlat.polyring import MonicPoly


def parse_matrix_text(text):
    """Matrix text format: first line n, then n lines of n integers."""
    lines = text.splitlines()
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx == len(lines):
        raise ParseError("empty matrix input", line=1)
    header = lines[idx].split()
    if len(header) != 1:
        raise ParseError("first line must hold the dimension alone", line=idx + 1)
    try:
        n = int(header[0])
    except ValueError:
        raise ParseError(f"bad dimension {header[0]!r}", line=idx + 1) from None
    if n < 1:
        raise ParseError("dimension must be at least 1", line=idx + 1)
    rows = []
    lineno = idx + 1
    for _ in range(n):
        while lineno < len(lines) and not lines[lineno].strip():
            lineno += 1
        if lineno >= len(lines):
            raise ParseError(f"expected {n} rows, found {len(rows)}", line=len(lines))
        parts = lines[lineno].split()
        if len(parts) != n:
            raise ParseError(f"expected {n} entries, found {len(parts)}", line=lineno + 1)
        row = []
        for col, p in enumerate(parts):
            try:
                row.append(int(p))
            except ValueError:
                raise ParseError(f"bad integer {p!r}", line=lineno + 1, column=col + 1) from None
        rows.append(row)
        lineno += 1
    return IntMatrix(rows)


def format_matrix_text(m):
    out = [str(m.n_rows)]
    for i in range(m.n_rows):
        out.append(" ".join(str(e) for e in m.row(i)))
    return "\n".join(out) + "\n"


def matrix_to_json(m):
    return {"n": m.n_rows, "rows": [[str(e) for e in m.row(i)] for i in range(m.n_rows)]}


def matrix_from_json(obj):
    try:
        n = int(obj["n"])
        rows = [[int(e) for e in row] for row in obj["rows"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad matrix JSON: {exc}") from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ParseError("matrix JSON shape does not match n")
    return IntMatrix(rows)


def parse_matrix(text):
    """Accept either the text format or the JSON form."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None
        return matrix_from_json(obj)
    return parse_matrix_text(text)


def result_to_json(rc):
    """Identification result schema; rc is a RingClass or None."""
    if rc is None:
        return {"ideal": False}
    return {
        "ideal": True,
        "d": str(rc.d),
        "canonical_g": [str(c) for c in rc.canonical_g.coeffs],
        "coset_basis": [[str(e) for e in rc.coset_basis.row(i)] for i in range(rc.coset_basis.n_rows)],
    }


def ring_class_from_json(obj):
    """Rebuild a RingClass from the result schema.

    The offset is recoverable up to lattice translation; d * canonical_g
    is an equivalent choice and reproduces the same coset.
    """
    try:
        if not obj["ideal"]:
            return None
        d = int(obj["d"])
        coeffs = [int(c) for c in obj["canonical_g"]]
        basis = IntMatrix([[int(e) for e in row] for row in obj["coset_basis"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad ring-class JSON: {exc}") from None
    canonical = MonicPoly(coeffs)
    return RingClass(
        n=len(coeffs),
        d=d,
        offset=tuple(d * c for c in coeffs),
        coset_basis=basis,
        canonical_g=canonical,
    )
