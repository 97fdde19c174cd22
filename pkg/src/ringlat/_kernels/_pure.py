"""Pure-Python kernels for exact integer matrix elimination.

These are the hot inner loops of the package: pairwise-gcd row elimination
(incomplete and full Hermite forms), fraction-free determinants, Smith
reduction and the modular membership product. All arithmetic is done on
Python ints, so every result is exact at any magnitude.

A Cython twin of this module (``ringlat._kernels._speedups``) implements the
same functions with typed loop counters; ``ringlat._kernels`` picks one at
import time. Keep both files in sync — the test suite cross-checks them on
random inputs.

Matrices are plain lists of row lists. Kernels never mutate their inputs.
"""

from ringlat.errors import NotFullRankError

BACKEND_NAME = "python"


def xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def ext_gcd_normalized(a, b):
    """Extended gcd with a deterministic, minimal coefficient pair.

    Returns (x, y, d) with x*a + y*b = d = gcd(a, b) > 0.  When b != 0 the
    coefficient x is reduced into (-|b|/2d, |b|/2d], which pins down a unique
    answer and keeps transform entries small.
    """
    if a == 0 and b == 0:
        raise ValueError("gcd undefined for (0, 0)")
    g, x, y = xgcd(a, b)
    if b != 0:
        m = abs(b) // g
        x %= m
        if 2 * x > m:
            x -= m
        y = (g - x * a) // b
    return x, y, g


def mat_copy(rows):
    return [row[:] for row in rows]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    """Exact product of two list-of-rows matrices."""
    n = len(a)
    k = len(b)
    m = len(b[0]) if k else 0
    out = []
    for i in range(n):
        arow = a[i]
        orow = [0] * m
        for l in range(k):
            ail = arow[l]
            if ail == 0:
                continue
            brow = b[l]
            for j in range(m):
                orow[j] += ail * brow[j]
        out.append(orow)
    return out


def ihnf_transform(rows):
    """Reduce the last column to (0, ..., 0, d) by a unimodular transform.

    Sweeps row pairs (i, i+1) top to bottom: each extended-gcd step zeroes
    the upper last-column entry and carries the running gcd down, so on
    exit b[i][n-1] = 0 for i < n-1 and b[n-1][n-1] = gcd of the input's
    last column > 0.

    Returns (b, u) with b = u @ rows and u unimodular.  Raises
    NotFullRankError when the last column is entirely zero (the input is
    certainly singular); other rank defects are not detected here.
    """
    n = len(rows)
    m = mat_copy(rows)
    u = identity(n)
    col = n - 1
    for i in range(n - 1):
        a = m[i][col]
        b = m[i + 1][col]
        if a == 0:
            continue
        x, y, d = ext_gcd_normalized(a, b)
        p, q = -(b // d), a // d  # top row of the 2x2 transform, det = -1
        for rows2 in (m, u):
            ri, rj = rows2[i], rows2[i + 1]
            for j in range(len(ri)):
                v, w = ri[j], rj[j]
                ri[j] = p * v + q * w
                rj[j] = x * v + y * w
    if m[col][col] < 0:
        m[col] = [-v for v in m[col]]
        u[col] = [-v for v in u[col]]
    if m[col][col] == 0:
        raise NotFullRankError("not full rank: last column is zero")
    return m, u


def _reduce_row(basis, trans, c, n):
    """Reduce held row c against the held pivots left of its own."""
    r = basis[c]
    t = trans[c] if trans is not None else None
    for l in range(c - 1, -1, -1):
        p = basis[l]
        if p is None or r[l] == 0:
            continue
        q = r[l] // p[l]
        if q == 0:
            continue
        for j in range(l + 1):
            r[j] -= q * p[j]
        if trans is not None:
            pt = trans[l]
            for j in range(n):
                t[j] -= q * pt[j]


def hnf_transform(rows, want_u=True):
    """Lower-triangular Hermite form with its unimodular transform.

    Returns (h, u) with h = u @ rows, h lower triangular, every diagonal
    entry positive and each below-diagonal entry reduced into [0, h[i][i])
    against its pivot column; u is None when want_u is false.  Raises
    NotFullRankError on singular input.

    Rows are inserted one at a time and cascade-reduced against the pivots
    already present (pivot of a row = its rightmost nonzero column).  Rows
    touched by a gcd combine are re-reduced right away — without that the
    combines compound and intermediate entries swell far beyond the size
    of the final form.  A last sweep restores canonical reduction against
    pivots that shrank after their neighbours were reduced.
    """
    n = len(rows)
    basis = [None] * n  # slot c: row whose rightmost nonzero is at column c
    trans = [None] * n if want_u else None
    t = None
    for k in range(n):
        v = list(rows[k])
        if want_u:
            t = [0] * n
            t[k] = 1
        changed = []
        c = n - 1
        while True:
            while c >= 0 and v[c] == 0:
                c -= 1
            if c < 0:
                raise NotFullRankError("not full rank")
            pivot_row = basis[c]
            if pivot_row is None:
                if v[c] < 0:
                    v = [-e for e in v]
                    if want_u:
                        t = [-e for e in t]
                basis[c] = v
                if want_u:
                    trans[c] = t
                changed.append(c)
                break
            a = pivot_row[c]
            b = v[c]
            if b % a == 0:
                q = b // a
                for j in range(c + 1):
                    v[j] -= q * pivot_row[j]
                if want_u:
                    pt = trans[c]
                    for j in range(n):
                        t[j] -= q * pt[j]
            else:
                x, y, d = ext_gcd_normalized(a, b)
                p, q = -(b // d), a // d
                for j in range(c + 1):
                    e, f = pivot_row[j], v[j]
                    pivot_row[j] = x * e + y * f
                    v[j] = p * e + q * f
                if want_u:
                    pt = trans[c]
                    for j in range(n):
                        e, f = pt[j], t[j]
                        pt[j] = x * e + y * f
                        t[j] = p * e + q * f
                changed.append(c)
        for c2 in sorted(changed):
            _reduce_row(basis, trans, c2, n)
    # basis[c] has its pivot at column c, so stacking in slot order is
    # lower triangular; the sweep finishes the below-diagonal reduction.
    for c in range(n):
        _reduce_row(basis, trans, c, n)
    return basis, trans


def det_bareiss(rows):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = mat_copy(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - rik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _is_diagonal(m):
    for i, row in enumerate(m):
        for j, v in enumerate(row):
            if i != j and v != 0:
                return False
    return True


def _transpose(m):
    return [list(col) for col in zip(*m)]


def snf_transform(rows, want_p=True, want_t=True):
    """Smith form of a nonsingular matrix with its transforms.

    Returns (s, p, t) with p @ rows @ t = diag(s), p and t unimodular,
    every s[i] > 0 and s[i] | s[i+1].  Diagonalization alternates row and
    column Hermite reduction until both triangular shapes hold at once;
    the divisibility chain is then enforced with 2x2 gcd/lcm repairs.
    Either transform can be skipped (returned as None), which roughly
    halves the work of the corresponding Hermite passes.
    """
    n = len(rows)
    m = mat_copy(rows)
    p = identity(n) if want_p else None
    t = identity(n) if want_t else None
    first_col_pass = True
    passes = 0
    while True:
        passes += 1
        if passes > 10_000:
            raise RuntimeError("Smith reduction failed to converge")
        m, u = hnf_transform(m, want_u=want_p)
        if want_p:
            p = matmul(u, p)
        if _is_diagonal(m):
            break
        mt, v = hnf_transform(_transpose(m), want_u=want_t)
        m = _transpose(mt)
        if want_t:
            vt = _transpose(v)
            t = vt if first_col_pass else matmul(t, vt)
            first_col_pass = False
        if _is_diagonal(m):
            break
    s = [m[i][i] for i in range(n)]
    # Repair s[i] | s[i+1] pairwise; each repair strictly shrinks s[i]
    # while keeping the product fixed, so the sweep settles.
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            a, b = s[i], s[i + 1]
            if b % a == 0:
                continue
            changed = True
            x, y, g = ext_gcd_normalized(a, b)
            # Column i += column i+1 drops b into the (i+1, i) slot; the
            # 2x2 row op and a final column repair restore diag(g, lcm).
            if want_t:
                for row in t:
                    row[i] += row[i + 1]
            if want_p:
                pi, pj = p[i], p[i + 1]
                for l in range(n):
                    v, w = pi[l], pj[l]
                    pi[l] = x * v + y * w
                    pj[l] = -(b // g) * v + (a // g) * w
            if want_t:
                c = y * (b // g)
                for row in t:
                    row[i + 1] -= c * row[i]
            s[i], s[i + 1] = g, a * (b // g)
    return s, p, t


def massager_check(v_rows, t, s):
    """Test whether every row r of v_rows satisfies r @ t == 0 cmod diag(s).

    Columns with s[j] == 1 are trivially zero and skipped; the remaining
    accumulation is done against column entries pre-reduced mod s[j], which
    keeps intermediates small.
    """
    n = len(t)
    cols = [j for j in range(n) if s[j] != 1]
    if not cols:
        return True
    tmod = [(j, s[j], [t[l][j] % s[j] for l in range(n)]) for j in cols]
    for r in v_rows:
        for j, sj, col in tmod:
            acc = 0
            for l in range(n):
                rl = r[l]
                if rl:
                    acc += rl * col[l]
            if acc % sj:
                return False
    return True
