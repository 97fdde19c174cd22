"""Exact integer linear algebra: normal forms and lattice membership.

Everything here is exact; no floating point is involved at any stage.
Conventions follow the rest of the package: matrix rows generate the
lattice, the Hermite normal form is lower triangular with positive
diagonal, and an "incomplete" Hermite form only requires the last column
to be (0, ..., 0, d) with d > 0.

The membership test comes in two independently implemented routes:

* ``integral_rows_check`` uses the Smith decomposition P B T = S.  Since P
  is unimodular and B^-1 = T S^-1 P, a vector v has v B^-1 integral exactly
  when (v T) S^-1 is integral, i.e. when component j of v T is divisible by
  s_j for every j (columnwise reduction against the diagonal).  The right
  transform T therefore acts as the membership "massager" for B.
* ``in_lattice`` / ``Membership`` uses the adjugate: v B^-1 is integral
  exactly when v adj(B) == 0 mod det(B) componentwise.

The two routes share no elimination machinery, so they can cross-check
each other.
"""

from dataclasses import dataclass
from fractions import Fraction

from ringlat import _kernels
from ringlat.errors import DimensionMismatchError, NotFullRankError
from ringlat.matrix import IntMatrix


@dataclass(frozen=True)
class ExtGcdResult:
    """Bezout pair: x*a + y*b = d = gcd(a, b) > 0."""

    x: int
    y: int
    d: int


@dataclass(frozen=True)
class IhnfResult:
    """Incomplete Hermite form (D | 0 ; b' | d) = u @ input.

    d_block is the leading (n-1) x (n-1) block D, b_prime the first n-1
    entries of the last row, and d = gcd of the input's last column > 0.
    """

    d_block: IntMatrix
    b_prime: list
    d: int
    u: IntMatrix

    @property
    def n(self):
        return self.u.n_rows

    def matrix(self):
        """The full n x n incomplete Hermite form."""
        rows = self.d_block.rows()
        for row in rows:
            row.append(0)
        rows.append(list(self.b_prime) + [self.d])
        return IntMatrix(rows)


@dataclass(frozen=True)
class SnfResult:
    """Smith decomposition left_p @ input @ right_t = diag(s)."""

    s: list
    right_t: IntMatrix
    left_p: IntMatrix


def ext_gcd(a, b):
    """Extended Euclidean algorithm with deterministic output.

    Returns ExtGcdResult(x, y, d) with x*a + y*b = d = gcd(a, b) > 0 and,
    when b != 0, |x| <= |b| / (2d) (ties resolved toward positive x).
    Raises ValueError on (0, 0).
    """
    x, y, d = _kernels.ext_gcd_normalized(int(a), int(b))
    return ExtGcdResult(x, y, d)


def determinant(b):
    """Exact determinant via fraction-free (Bareiss) elimination."""
    b.require_square()
    return _kernels.det_bareiss(b.rows())


def _require_basis(b):
    b.require_square()
    if b.n_rows == 0:
        raise NotFullRankError("empty matrix is not a lattice basis")


def ihnf(b):
    """Incomplete Hermite form of a nonsingular matrix, with transform.

    The returned basis generates the same lattice as the input; its last
    column is (0, ..., 0, d) with d = gcd of the input's last column.
    Raises NotFullRankError on singular input.
    """
    _require_basis(b)
    n = b.n_rows
    m, u = _kernels.ihnf_transform(b.rows())
    d_block = IntMatrix([row[: n - 1] for row in m[: n - 1]])
    if n > 1 and _kernels.det_bareiss(d_block.rows()) == 0:
        # the last-column sweep cannot see rank defects in the leading block
        raise NotFullRankError("not full rank")
    return IhnfResult(d_block=d_block, b_prime=m[n - 1][: n - 1], d=m[n - 1][n - 1], u=IntMatrix(u))


def hnf(b):
    """The unique lower-triangular Hermite basis of the input's lattice."""
    _require_basis(b)
    h, _ = _kernels.hnf_transform(b.rows(), want_u=False)
    return IntMatrix(h)


def hnf_with_transform(b):
    """Hermite form plus the unimodular u with u @ b = hnf(b)."""
    _require_basis(b)
    h, u = _kernels.hnf_transform(b.rows())
    return IntMatrix(h), IntMatrix(u)


def is_hnf(b):
    """True when b already satisfies the lower-triangular Hermite shape."""
    if not b.is_square:
        return False
    for i in range(b.n_rows):
        if b[i, i] <= 0:
            return False
        for j in range(i + 1, b.n_cols):
            if b[i, j] != 0:
                return False
        for j in range(i):
            if not 0 <= b[i, j] < b[j, j]:
                return False
    return True


def snf(b):
    """Smith normal form of a nonsingular matrix with both transforms.

    The invariant factors s satisfy s[i] | s[i+1] and prod(s) = |det(b)|.
    """
    _require_basis(b)
    s, p, t = _kernels.snf_transform(b.rows())
    return SnfResult(s=s, right_t=IntMatrix(t), left_p=IntMatrix(p))


def adjugate(b):
    """Exact adjugate: b @ adj(b) = det(b) * identity.

    Computed from the rational inverse (Gauss-Jordan over Fractions) scaled
    by the Bareiss determinant, deliberately sharing no code with the Smith
    route so the two membership checks stay independent.
    """
    _require_basis(b)
    n = b.n_rows
    det = _kernels.det_bareiss(b.rows())
    if det == 0:
        raise NotFullRankError("not full rank")
    aug = [[Fraction(e) for e in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(b.rows())]
    for k in range(n):
        pivot_row = next(i for i in range(k, n) if aug[i][k] != 0)
        aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
        pk = aug[k][k]
        aug[k] = [e / pk for e in aug[k]]
        for i in range(n):
            if i != k and aug[i][k] != 0:
                f = aug[i][k]
                aug[i] = [e - f * g for e, g in zip(aug[i], aug[k])]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            e = aug[i][j + n] * det
            assert e.denominator == 1
            row.append(e.numerator)
        out.append(row)
    return IntMatrix(out)


class Membership:
    """Repeated-query lattice membership via the adjugate route.

    Precomputes adj(b) and det(b) once; each query is then a single
    vector-matrix product reduced mod det.
    """

    def __init__(self, b):
        _require_basis(b)
        self.n = b.n_rows
        self.det = determinant(b)
        if self.det == 0:
            raise NotFullRankError("not full rank")
        self._adj = adjugate(b)

    def contains(self, v):
        if len(v) != self.n:
            raise DimensionMismatchError("vector length does not match lattice dimension")
        d = self.det
        return all(e % d == 0 for e in self._adj.mul_vector(list(v)))


def in_lattice(v, b):
    """True when v is an integer combination of the rows of b."""
    return Membership(b).contains(v)


def integral_rows_check(v, b):
    """True when every row r of v satisfies r @ b^-1 integral.

    Uses the Smith right transform as membership massager: component j of
    r @ T must be divisible by s_j (see the module docstring for why this
    is equivalent).  An empty row set is vacuously integral.
    """
    if v.n_rows == 0:
        return True
    if v.n_cols != b.n_rows:
        raise DimensionMismatchError("row length does not match lattice dimension")
    _require_basis(b)
    s, _, t = _kernels.snf_transform(b.rows(), want_p=False)
    return _kernels.massager_check(v.rows(), t, s)


def divisibility_precheck(h):
    """Necessary condition on a Hermite basis for being an ideal lattice.

    True iff h[i][i] divides h[j][l] for all l <= j <= i.  Checked as the
    equivalent pair of conditions (diagonal chain h[i+1][i+1] | h[i][i],
    plus each row divisible by its own pivot), which is O(n^2).  A False
    answer certainly rules the lattice out; True decides nothing.
    """
    n = h.n_rows
    for i in range(n - 1):
        if h[i, i] % h[i + 1, i + 1]:
            return False
    for i in range(n):
        hii = h[i, i]
        for l in range(i):
            if h[i, l] % hii:
                return False
    return True
