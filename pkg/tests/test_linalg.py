"""Tests for the exact linear algebra layer.

Independent oracles: sympy's normal forms and exact rational solving,
plus brute-force membership checks on tiny lattices.
"""

import math
from fractions import Fraction

import pytest
from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form, smith_normal_form

from ringlat.errors import NotFullRankError
from ringlat.linalg import (
    Membership,
    adjugate,
    determinant,
    divisibility_precheck,
    ext_gcd,
    hnf,
    hnf_with_transform,
    ihnf,
    in_lattice,
    integral_rows_check,
    is_hnf,
    snf,
)
from ringlat.matrix import IntMatrix

from conftest import random_nonsingular, random_unimodular

WITNESS = IntMatrix([[6, -8, -5], [3, -7, -4], [6, 1, -1]])


class TestExtGcd:
    def test_one_argument_zero(self):
        r = ext_gcd(0, 5)
        assert (r.x, r.y, r.d) == (0, 1, 5)

    def test_coprime_pair(self):
        r = ext_gcd(3, 2)
        assert (r.x, r.y, r.d) == (1, -1, 1)
        assert 1 * 3 + (-1) * 2 == 1

    def test_common_factor(self):
        r = ext_gcd(4, 6)
        assert (r.x, r.y, r.d) == (-1, 1, 2)
        assert -4 + 6 == 2

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError, match="gcd undefined"):
            ext_gcd(0, 0)

    def test_bezout_and_normalization(self, rng):
        for _ in range(2000):
            a = rng.randint(-10**6, 10**6)
            b = rng.randint(-10**6, 10**6)
            if a == 0 and b == 0:
                continue
            r = ext_gcd(a, b)
            assert r.x * a + r.y * b == r.d
            assert r.d == math.gcd(a, b) > 0
            if b != 0:
                m = abs(b) // r.d
                assert -m < 2 * r.x <= m
            else:
                assert r.y == 0


class TestDeterminant:
    def test_identity(self):
        assert determinant(IntMatrix.identity(4)) == 1

    def test_diagonal(self):
        assert determinant(IntMatrix([[2, 0], [0, 3]])) == 6

    def test_witness_matrix(self):
        # |det| equals the product of its Hermite diagonal 9*1*1
        assert abs(determinant(WITNESS)) == 9

    def test_against_sympy(self, rng):
        for _ in range(300):
            n = rng.randint(1, 5)
            m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert determinant(IntMatrix(m)) == Matrix(m).det()

    def test_big_entries_stay_exact(self):
        big = 10**40
        m = IntMatrix([[big, 1], [1, big]])
        assert determinant(m) == big * big - 1


class TestHnf:
    def test_permutation_of_identity(self):
        assert hnf(IntMatrix([[0, 1], [1, 0]])) == IntMatrix.identity(2)

    def test_two_by_two(self):
        # lattice of [[2,1],[0,1]] contains (0,1) and hence (2,0)
        assert hnf(IntMatrix([[2, 1], [0, 1]])) == IntMatrix([[2, 0], [0, 1]])

    def test_witness_transposed_matches_column_convention(self):
        # column-style Hermite basis of the transposed witness
        assert hnf(WITNESS).transpose() == IntMatrix([[9, 6, 0], [0, 1, 0], [0, 0, 1]])

    def test_shape_and_lattice_preserved(self, rng):
        for _ in range(200):
            n = rng.randint(1, 6)
            b = random_nonsingular(rng, n)
            h, u = hnf_with_transform(b)
            assert is_hnf(h)
            assert u * b == h
            assert abs(determinant(u)) == 1
            assert abs(determinant(h)) == abs(determinant(b))

    def test_unique_under_basis_change(self, rng):
        for _ in range(120):
            n = rng.randint(1, 6)
            b = random_nonsingular(rng, n)
            u = random_unimodular(rng, n)
            assert hnf(u * b) == hnf(b)

    def test_matches_sympy_column_form(self, rng):
        for _ in range(150):
            n = rng.randint(1, 5)
            b = random_nonsingular(rng, n)
            ours = hnf(b).transpose().rows()
            theirs = hermite_normal_form(Matrix(b.transpose().rows()))
            assert ours == theirs.tolist()

    def test_singular_rejected(self):
        with pytest.raises(NotFullRankError):
            hnf(IntMatrix([[1, 2], [2, 4]]))


class TestIhnf:
    def test_identity_unchanged(self):
        r = ihnf(IntMatrix.identity(3))
        assert r.matrix() == IntMatrix.identity(3)
        assert r.d == 1
        assert r.u == IntMatrix.identity(3)

    def test_two_by_two(self):
        r = ihnf(IntMatrix([[2, 3], [1, 2]]))
        assert r.matrix() == IntMatrix([[-1, 0], [1, 1]])
        assert r.d == 1
        assert abs(determinant(r.u)) == 1
        assert hnf(r.matrix()) == hnf(IntMatrix([[2, 3], [1, 2]]))

    def test_witness_gcd(self):
        # gcd of the last column (-5, -4, -1)
        assert ihnf(WITNESS).d == 1

    def test_last_column_contract(self, rng):
        for _ in range(200):
            n = rng.randint(1, 6)
            b = random_nonsingular(rng, n)
            r = ihnf(b)
            m = r.matrix()
            assert all(m[i, n - 1] == 0 for i in range(n - 1))
            assert m[n - 1, n - 1] == r.d > 0
            assert r.d == math.gcd(*[b[i, n - 1] for i in range(n)])
            assert r.u * b == m
            assert abs(determinant(r.u)) == 1
            assert hnf(m) == hnf(b)

    def test_negative_one_by_one(self):
        r = ihnf(IntMatrix([[-7]]))
        assert r.d == 7
        assert r.u == IntMatrix([[-1]])

    def test_singular_rejected(self):
        with pytest.raises(NotFullRankError):
            ihnf(IntMatrix([[1, 0], [3, 0]]))
        with pytest.raises(NotFullRankError):
            ihnf(IntMatrix([[0, 1], [0, 2]]))


class TestSnf:
    def test_identity(self):
        assert snf(IntMatrix.identity(4)).s == [1, 1, 1, 1]

    def test_divisible_diagonal_kept(self):
        assert snf(IntMatrix([[2, 0], [0, 4]])).s == [2, 4]

    def test_coprime_diagonal_merged(self):
        assert snf(IntMatrix([[2, 0], [0, 3]])).s == [1, 6]

    def test_invariants(self, rng):
        for _ in range(200):
            n = rng.randint(1, 6)
            b = random_nonsingular(rng, n)
            r = snf(b)
            assert all(e > 0 for e in r.s)
            assert all(r.s[i + 1] % r.s[i] == 0 for i in range(n - 1))
            prod = 1
            for e in r.s:
                prod *= e
            assert prod == abs(determinant(b))
            diag = IntMatrix([[r.s[i] if i == j else 0 for j in range(n)] for i in range(n)])
            assert r.left_p * b * r.right_t == diag
            assert abs(determinant(r.left_p)) == 1
            assert abs(determinant(r.right_t)) == 1

    def test_matches_sympy(self, rng):
        for _ in range(150):
            n = rng.randint(1, 5)
            b = random_nonsingular(rng, n)
            theirs = smith_normal_form(Matrix(b.rows()))
            assert snf(b).s == [abs(theirs[i, i]) for i in range(n)]


class TestAdjugate:
    def test_identity(self):
        assert adjugate(IntMatrix.identity(3)) == IntMatrix.identity(3)

    def test_column_hermite_example(self):
        h = IntMatrix([[9, 6, 0], [0, 1, 0], [0, 0, 1]])
        assert adjugate(h) == IntMatrix([[1, -6, 0], [0, 9, 0], [0, 0, 9]])

    def test_diagonal(self):
        assert adjugate(IntMatrix([[2, 0], [0, 3]])) == IntMatrix([[3, 0], [0, 2]])

    def test_defining_identity(self, rng):
        for _ in range(150):
            n = rng.randint(1, 5)
            b = random_nonsingular(rng, n)
            d = determinant(b)
            assert b * adjugate(b) == IntMatrix([[d if i == j else 0 for j in range(n)] for i in range(n)])


class TestMembership:
    def test_zero_vector(self, rng):
        b = random_nonsingular(rng, 3)
        assert in_lattice([0, 0, 0], b)

    def test_own_rows(self, rng):
        for _ in range(30):
            n = rng.randint(1, 5)
            b = random_nonsingular(rng, n)
            for i in range(n):
                assert in_lattice(b.row(i), b)

    def test_odd_coordinate_rejected(self):
        assert not in_lattice([1, 0, 0], IntMatrix.identity(3).scale(2))

    def test_against_exact_rational_solve(self, rng):
        for _ in range(300):
            n = rng.randint(1, 4)
            b = random_nonsingular(rng, n)
            v = [rng.randint(-12, 12) for _ in range(n)]
            sol = Matrix(b.transpose().rows()).solve(Matrix(v))
            expected = all(e == int(e) for e in sol)
            assert in_lattice(v, b) == expected

    def test_rows_check_on_own_basis(self, rng):
        for _ in range(50):
            n = rng.randint(1, 5)
            b = random_nonsingular(rng, n)
            assert integral_rows_check(b, b)

    def test_rows_check_empty_is_vacuous(self, rng):
        b = random_nonsingular(rng, 1)
        assert integral_rows_check(IntMatrix([]), b)

    def test_shifted_block_examples(self):
        r = ihnf(WITNESS)
        shifted = IntMatrix([[0] + row for row in r.d_block.rows()])
        assert integral_rows_check(shifted, WITNESS)
        b = IntMatrix([[1, 0], [0, 2]])
        shifted = IntMatrix([[0, 1]])  # (0 | D) for the diag(1, 2) basis
        assert not integral_rows_check(shifted, b)

    def test_two_routes_agree(self, rng):
        # Smith-massager route vs adjugate-mod-determinant route
        for _ in range(1000):
            n = rng.randint(1, 4)
            b = random_nonsingular(rng, n)
            k = rng.randint(1, 3)
            v = IntMatrix([[rng.randint(-20, 20) for _ in range(n)] for _ in range(k)])
            mem = Membership(b)
            assert integral_rows_check(v, b) == all(mem.contains(v.row(i)) for i in range(k))


class TestDivisibilityPrecheck:
    def test_identity(self):
        assert divisibility_precheck(IntMatrix.identity(5))

    def test_bad_diagonal(self):
        assert not divisibility_precheck(IntMatrix([[1, 0], [0, 2]]))

    def test_holds_on_ideal_lattice_bases(self, rng):
        # necessary condition: every ideal lattice passes
        from ringlat.harness import random_principal

        for seed in range(40):
            _, _, b = random_principal(rng.randint(2, 6), 3, seed)
            assert divisibility_precheck(hnf(b))

    def test_matches_literal_triple_loop(self, rng):
        def literal(h):
            n = h.n_rows
            return all(
                h[j, l] % h[i, i] == 0
                for i in range(n)
                for j in range(i + 1)
                for l in range(j + 1)
            )

        for _ in range(300):
            n = rng.randint(1, 5)
            rows = [[0] * n for _ in range(n)]
            for i in range(n):
                rows[i][i] = rng.randint(1, 6)
                for j in range(i):
                    rows[i][j] = rng.randrange(rows[j][j]) if rows[j][j] > 1 else 0
            h = IntMatrix(rows)
            assert divisibility_precheck(h) == literal(h)


class TestLargeEntries:
    def test_normal_forms_stay_exact_at_500_bits(self, rng):
        lo, hi = -(2**500), 2**500
        for _ in range(5):
            n = rng.randint(2, 4)
            b = random_nonsingular(rng, n, lo=lo, hi=hi)
            h, u = hnf_with_transform(b)
            assert is_hnf(h)
            assert u * b == h
            r = snf(b)
            diag = IntMatrix([[r.s[i] if i == j else 0 for j in range(n)] for i in range(n)])
            assert r.left_p * b * r.right_t == diag
            prod = 1
            for e in r.s:
                prod *= e
            assert prod == abs(determinant(b))


class TestFractionFreeConsistency:
    def test_det_equals_invariant_product(self, rng):
        for _ in range(100):
            n = rng.randint(1, 5)
            b = random_nonsingular(rng, n)
            prod = 1
            for e in snf(b).s:
                prod *= e
            assert prod == abs(determinant(b))

    def test_solve_consistency(self, rng):
        # v @ b^-1 from the adjugate equals the rational solution
        for _ in range(100):
            n = rng.randint(1, 4)
            b = random_nonsingular(rng, n)
            v = [rng.randint(-9, 9) for _ in range(n)]
            d = determinant(b)
            adj_sol = [Fraction(e, d) for e in adjugate(b).mul_vector(v)]
            sol = Matrix(b.transpose().rows()).solve(Matrix(v))
            assert adj_sol == [Fraction(e.p, e.q) for e in sol]
