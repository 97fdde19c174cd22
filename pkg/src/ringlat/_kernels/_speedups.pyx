# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for exact integer matrix elimination.

Mirror of ringlat._kernels._pure with C loop counters; entries stay Python
ints so all arithmetic remains exact at arbitrary magnitude.  Keep the two
files in sync — the test suite cross-checks them on random inputs.
"""

from ringlat.errors import NotFullRankError

BACKEND_NAME = "c"


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
    """Extended gcd with a deterministic, minimal coefficient pair."""
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
    return [list(row) for row in rows]


def identity(Py_ssize_t n):
    cdef Py_ssize_t i, j
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    """Exact product of two list-of-rows matrices."""
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t k = len(b)
    cdef Py_ssize_t m = len(b[0]) if k else 0
    cdef Py_ssize_t i, l, j
    cdef list arow, brow, orow, out
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
                orow[j] = orow[j] + ail * brow[j]
        out.append(orow)
    return out


def ihnf_transform(rows):
    """Reduce the last column to (0, ..., 0, d) by a unimodular transform."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t col = n - 1
    cdef Py_ssize_t i, j
    cdef list m = mat_copy(rows)
    cdef list u = identity(n)
    cdef list ri, rj
    for i in range(n - 1):
        a = m[i][col]
        b = m[i + 1][col]
        if a == 0:
            continue
        x, y, d = ext_gcd_normalized(a, b)
        p, q = -(b // d), a // d
        for rows2 in (m, u):
            ri = rows2[i]
            rj = rows2[i + 1]
            for j in range(len(ri)):
                v = ri[j]
                w = rj[j]
                ri[j] = p * v + q * w
                rj[j] = x * v + y * w
    if m[col][col] < 0:
        m[col] = [-v for v in m[col]]
        u[col] = [-v for v in u[col]]
    if m[col][col] == 0:
        raise NotFullRankError("not full rank: last column is zero")
    return m, u


cdef _reduce_row(list basis, list trans, Py_ssize_t c, Py_ssize_t n):
    """Reduce held row c against the held pivots left of its own."""
    cdef list r = basis[c]
    cdef list t = trans[c] if trans is not None else None
    cdef list p, pt
    cdef Py_ssize_t l, j
    for l in range(c - 1, -1, -1):
        p = basis[l]
        if p is None or r[l] == 0:
            continue
        q = r[l] // p[l]
        if q == 0:
            continue
        for j in range(l + 1):
            r[j] = r[j] - q * p[j]
        if trans is not None:
            pt = trans[l]
            for j in range(n):
                t[j] = t[j] - q * pt[j]


def hnf_transform(rows, bint want_u=True):
    """Lower-triangular Hermite form with its unimodular transform.

    Insertion scheme: each row cascades against the pivots already placed
    (pivot of a row = its rightmost nonzero column); rows touched by a gcd
    combine are re-reduced right away to keep intermediate entries near
    the size of the final form, and a last sweep restores canonical
    reduction.  u is None when want_u is false.
    """
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t k, c, c2, j
    cdef list basis = [None] * n
    cdef list trans = [None] * n if want_u else None
    cdef list v, t, pivot_row, pt, changed
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
                    v[j] = v[j] - q * pivot_row[j]
                if want_u:
                    pt = trans[c]
                    for j in range(n):
                        t[j] = t[j] - q * pt[j]
            else:
                x, y, d = ext_gcd_normalized(a, b)
                p, q = -(b // d), a // d
                for j in range(c + 1):
                    e = pivot_row[j]
                    f = v[j]
                    pivot_row[j] = x * e + y * f
                    v[j] = p * e + q * f
                if want_u:
                    pt = trans[c]
                    for j in range(n):
                        e = pt[j]
                        f = t[j]
                        pt[j] = x * e + y * f
                        t[j] = p * e + q * f
                changed.append(c)
        changed.sort()
        for c2 in changed:
            _reduce_row(basis, trans, c2, n)
    for c in range(n):
        _reduce_row(basis, trans, c, n)
    return basis, trans


def det_bareiss(rows):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef list m = mat_copy(rows)
    cdef Py_ssize_t k, i, j
    cdef int sign = 1
    cdef list ri, rk
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
        rk = m[k]
        pivot = rk[k]
        for i in range(k + 1, n):
            ri = m[i]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - rik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _is_diagonal(m):
    cdef Py_ssize_t i, j
    cdef list row
    for i in range(len(m)):
        row = m[i]
        for j in range(len(row)):
            if i != j and row[j] != 0:
                return False
    return True


def _transpose(m):
    return [list(col) for col in zip(*m)]


def snf_transform(rows, bint want_p=True, bint want_t=True):
    """Smith form of a nonsingular matrix with its transforms.

    Either transform can be skipped (returned as None), which roughly
    halves the work of the corresponding Hermite passes.
    """
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, l
    cdef list m = mat_copy(rows)
    cdef list p = identity(n) if want_p else None
    cdef list t = identity(n) if want_t else None
    cdef list s, pi, pj, row, vt
    cdef bint changed
    cdef bint first_col_pass = True
    cdef int passes = 0
    while True:
        passes += 1
        if passes > 10_000:
            raise RuntimeError("Smith reduction failed to converge")
        m, u = hnf_transform(m, want_p)
        if want_p:
            p = matmul(u, p)
        if _is_diagonal(m):
            break
        mt, v = hnf_transform(_transpose(m), want_t)
        m = _transpose(mt)
        if want_t:
            vt = _transpose(v)
            t = vt if first_col_pass else matmul(t, vt)
            first_col_pass = False
        if _is_diagonal(m):
            break
    s = [m[i][i] for i in range(n)]
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            a = s[i]
            b = s[i + 1]
            if b % a == 0:
                continue
            changed = True
            x, y, g = ext_gcd_normalized(a, b)
            if want_t:
                for row in t:
                    row[i] = row[i] + row[i + 1]
            if want_p:
                pi = p[i]
                pj = p[i + 1]
                for l in range(n):
                    v2 = pi[l]
                    w2 = pj[l]
                    pi[l] = x * v2 + y * w2
                    pj[l] = -(b // g) * v2 + (a // g) * w2
            if want_t:
                c = y * (b // g)
                for row in t:
                    row[i + 1] = row[i + 1] - c * row[i]
            s[i], s[i + 1] = g, a * (b // g)
    return s, p, t


def massager_check(v_rows, t, s):
    """Test whether every row r of v_rows satisfies r @ t == 0 cmod diag(s)."""
    cdef Py_ssize_t n = len(t)
    cdef Py_ssize_t j, l
    cdef list cols = [j for j in range(n) if s[j] != 1]
    if not cols:
        return True
    cdef list tmod = [(j, s[j], [t[l][j] % s[j] for l in range(n)]) for j in cols]
    cdef list r, col
    for r_obj in v_rows:
        r = r_obj
        for j2, sj, col_obj in tmod:
            col = col_obj
            acc = 0
            for l in range(n):
                rl = r[l]
                if rl:
                    acc = acc + rl * col[l]
            if acc % sj:
                return False
    return True
