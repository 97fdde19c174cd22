"""Ideal-lattice identification and the full class of admissible rings.

A full-rank lattice L in Z^n either embeds as an ideal into no quotient
ring Z[x]/g(x) with g monic of degree n, or into infinitely many; in the
latter case the admissible g form a single coset

    (1/d) * ((0 | b') + L)

where (D | 0; b' | d) is any incomplete Hermite form of a basis of L and
d is the gcd of the basis' last column.  ``identify`` decides which case
holds and returns the coset as a RingClass; ``verify_ring`` is the
independent definition-level oracle (closure of the lattice under
multiplication by x mod g) used to validate it.
"""

from dataclasses import dataclass

import numpy as np

from ringlat import _kernels
from ringlat.errors import DimensionMismatchError, RinglatError
from ringlat.linalg import Membership, divisibility_precheck, hnf, in_lattice, integral_rows_check, is_hnf
from ringlat.matrix import IntMatrix
from ringlat.polyring import MonicPoly, mul_x_mod


@dataclass(frozen=True)
class RingClass:
    """The coset of coefficient vectors of all admissible monic g.

    A monic degree-n polynomial g admits the lattice as an ideal of
    Z[x]/g(x) exactly when its coefficient vector lies in
    (1/d)(offset + L), equivalently when it differs from canonical_g by an
    element of the coset lattice.  coset_basis is the Hermite basis of the
    original lattice scaled down by d (every entry is divisible by d), and
    canonical_g is the unique coset member reduced against it.
    """

    n: int
    d: int
    offset: tuple
    coset_basis: IntMatrix
    canonical_g: MonicPoly

    def same_class(self, other):
        """Set equality of two ring classes, robust to representative choice."""
        return (
            self.n == other.n
            and self.d == other.d
            and self.coset_basis == other.coset_basis
            and class_contains(self, other.canonical_g)
            and class_contains(other, self.canonical_g)
        )


def canonical_rep(d, offset, coset_basis):
    """Deterministic representative of the coset offset/d + L(coset_basis).

    The result is the unique member whose coordinates are reduced against
    the Hermite form of coset_basis into [0, h[i][i]) per pivot column,
    processed from the last coordinate to the first.  Raises if offset/d is
    not integral (identify guarantees it for genuine ideal lattices).
    """
    n = len(offset)
    if any(e % d for e in offset):
        raise RinglatError("internal error: coset offset is not integral")
    v = [e // d for e in offset]
    h = coset_basis if is_hnf(coset_basis) else hnf(coset_basis)
    for i in range(n - 1, -1, -1):
        q = v[i] // h[i, i]
        if q:
            for l in range(i + 1):
                v[l] -= q * h[i, l]
    return MonicPoly(v)


def identify(b, precheck=True):
    """Decide whether the rows of b span an ideal lattice.

    Returns None when no monic degree-n g makes the lattice an ideal of
    Z[x]/g(x), and the full RingClass of admissible g otherwise.  Pipeline:
    build an incomplete Hermite form (D | 0; b' | d); reject unless d
    divides every entry of b; reject unless every row of (0 | D) lies in
    the lattice (checked through the Smith massager); otherwise assemble
    the class from the offset (0 | b') and the lattice scaled by 1/d.

    With precheck enabled, the divisibility condition on the Hermite basis
    is tested first; it is a cheap necessary condition that rejects most
    random non-ideal inputs before the Smith step.

    Edge case n = 1: the block D is empty, the membership step is vacuous
    and d = |b| always divides b, so every nonzero 1x1 lattice is an ideal
    (of Z[x]/(x + c) for every integer c in the class).

    Raises NotFullRankError on singular input.
    """
    b.require_square()
    n = b.n_rows
    m, _ = _kernels.ihnf_transform(b.rows())
    d = m[n - 1][n - 1]
    # The Hermite basis doubles as the full-rank check (the last-column
    # sweep above cannot see rank defects in the leading block) and is
    # needed anyway for the coset basis on acceptance.
    h = hnf(b)
    if precheck and not divisibility_precheck(h):
        return None
    if not b.divides_all(d):
        return None
    shifted = IntMatrix([[0] + row[: n - 1] for row in m[: n - 1]])
    # h spans the same lattice as b, so membership of the shifted block is
    # unchanged; starting the Smith reduction from the reduced triangular
    # form is much cheaper than from b itself.
    if not integral_rows_check(shifted, h):
        return None
    offset = tuple([0] + m[n - 1][: n - 1])
    coset_basis = h.exact_div(d)
    canonical = canonical_rep(d, offset, coset_basis)
    return RingClass(n=n, d=d, offset=offset, coset_basis=coset_basis, canonical_g=canonical)


def verify_ring(b, g):
    """Definition-level oracle: is the lattice an ideal of Z[x]/g(x)?

    True iff for every row r of b the coefficient vector of
    x * (polynomial of r) mod g lies back in the lattice.  Implemented
    through the adjugate membership route, independent of ``identify``.
    """
    b.require_square()
    if g.degree != b.n_rows:
        raise DimensionMismatchError(f"degree {g.degree} does not match dimension {b.n_rows}")
    mem = Membership(b)
    return all(mem.contains(mul_x_mod(b.row(i), g)) for i in range(b.n_rows))


def class_contains(rc, g):
    """True when g belongs to the ring class."""
    if g.degree != rc.n:
        raise DimensionMismatchError(f"degree {g.degree} does not match dimension {rc.n}")
    diff = [a - c for a, c in zip(g.coeffs, rc.canonical_g.coeffs)]
    return in_lattice(diff, rc.coset_basis)


def sample_class(rc, k, seed):
    """k distinct members of the ring class, deterministically from seed.

    The first member is always canonical_g (displacement z = 0); the rest
    use small random integer combinations of the coset basis.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed & (2**64 - 1)])))
    out = []
    seen = set()
    z = (0,) * rc.n
    bound = 3
    while len(out) < k:
        if z not in seen:
            seen.add(z)
            disp = rc.coset_basis.mul_vector(list(z))
            out.append(MonicPoly([c + e for c, e in zip(rc.canonical_g.coeffs, disp)]))
        elif len(seen) >= (2 * bound + 1) ** rc.n:
            bound += 1  # displacement window exhausted, widen it
        z = tuple(int(e) for e in rng.integers(-bound, bound + 1, size=rc.n))
    return out
