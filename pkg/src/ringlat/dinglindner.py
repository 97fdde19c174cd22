"""Reimplementation of the 2007 Ding-Lindner ideal-lattice test.

Kept for comparison and regression purposes: the procedure has a known
defect that makes it reject some genuine ideal lattices, and this module
reproduces that behaviour faithfully rather than fixing it.

The procedure works in the column convention (lattice spanned by columns),
so the row-convention input basis is transposed first.  With H the
upper-triangular column Hermite basis, A = adj(H) and M the down-shift
matrix (1s on the subdiagonal; M v is the coefficient vector of x times
the polynomial of column vector v, truncated), it computes

    R = A M H mod det

and accepts only when every column of R except the last is zero and the
last is nonzero.  The defect: for an ideal lattice the non-last columns
are always zero, but the last column may be zero as well (the product can
vanish entirely mod det), and the procedure then answers "false" although
the lattice is ideal.  ``flaw_witness`` returns a 3x3 basis exhibiting
exactly that.

On acceptance the procedure reports a single ring.  The original write-up
does not pin down the reconstruction, so this module derives it from the
defining constraint: the coefficient column c of g - x^n must satisfy
M h_n - h_nn c in the column lattice, solved bottom-up against the
triangular H.  Callers should validate the returned polynomial with
``verify_ring``; a constraint row with no solution yields None as well.
"""

from ringlat.errors import NotFullRankError
from ringlat.linalg import adjugate, determinant, ext_gcd, hnf
from ringlat.matrix import IntMatrix
from ringlat.polyring import MonicPoly


def flaw_witness():
    """A basis of an ideal lattice that the Ding-Lindner test rejects."""
    return IntMatrix([[6, -8, -5], [3, -7, -4], [6, 1, -1]])


def _shift_matrix(n):
    m = [[0] * n for _ in range(n)]
    for i in range(1, n):
        m[i][i - 1] = 1
    return IntMatrix(m)


def dl_identify(b):
    """Run the Ding-Lindner test on a row-convention basis.

    Returns the single polynomial the procedure reports when its check
    passes, and None when it answers "false" (including the defective
    branch where the lattice is ideal but the whole product vanishes).
    Raises NotFullRankError on singular input.
    """
    b.require_square()
    n = b.n_rows
    # Column-convention Hermite basis of the transposed input: the
    # lower-triangular row form of b, transposed, is upper triangular.
    h = hnf(b).transpose()
    det = determinant(b)
    if det == 0:
        raise NotFullRankError("not full rank")
    modulus = abs(det)
    a = adjugate(h)
    product = a * _shift_matrix(n) * h
    reduced = [[e % modulus for e in row] for row in product.rows()]
    if any(reduced[i][j] for i in range(n) for j in range(n - 1)):
        return None
    if all(reduced[i][n - 1] == 0 for i in range(n)):
        return None  # the defective branch: "false" even when ideal
    return _reconstruct(h, n)


def _reconstruct(h, n):
    """Solve M h_n - h_nn c = H z for an integer coefficient column c.

    Bottom-up over the rows of the upper-triangular H: each row constrains
    h[i][i] * z_i + h_nn * c_i, solvable when gcd(h[i][i], h_nn) divides
    the running remainder.  Unsolvable rows mean the accepted instance
    admits no ring at all; report None and let callers flag it.
    """
    h_nn = h[n - 1, n - 1]
    v = [0] + [h[i, n - 1] for i in range(n - 1)]  # down-shift of the last column
    z = [0] * n
    c = [0] * n
    for i in range(n - 1, -1, -1):
        r = v[i] - sum(h[i, j] * z[j] for j in range(i + 1, n))
        res = ext_gcd(h[i, i], h_nn)
        if r % res.d:
            return None
        zi = res.x * (r // res.d)
        m = h_nn // res.d
        if m > 1:
            zi %= m
        z[i] = zi
        c[i] = (r - h[i, i] * zi) // h_nn
    return MonicPoly(c)
