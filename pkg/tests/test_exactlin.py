"""Tests for exact integer linear algebra.

The Smith normal form is cross checked against an independent oracle:
the k-th determinantal divisor (gcd of all k x k minors), whose ratios
give the elementary divisors.
"""

import math
import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from braidhom.exactlin import (
    AbelianProfile,
    IntMatrix,
    QMat,
    bareiss_determinant,
    cokernel_profile,
    elementary_divisor_profile,
    elementary_divisors,
    is_unimodular,
    smith_normal_form,
)


def minor_gcd_oracle(a: IntMatrix) -> tuple[int, ...]:
    """Elementary divisors via determinantal divisors.

    d_k = gcd of all k x k minors; the k-th elementary divisor is
    d_k / d_{k-1}.  Exponential in the size, so only for small matrices.
    """
    m, n = a.nrows, a.ncols
    divisors = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                sub = IntMatrix(
                    [[a.rows[i][j] for j in cols] for i in rows], ncols=k
                )
                g = math.gcd(g, bareiss_determinant(sub))
        if g == 0:
            break
        divisors.append(g // prev)
        prev = g
    return tuple(divisors)


small_matrices = st.integers(min_value=0, max_value=4).flatmap(
    lambda m: st.integers(min_value=0 if m else 1, max_value=4).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(min_value=-30, max_value=30), min_size=n, max_size=n),
            min_size=m,
            max_size=m,
        ).map(lambda rows: IntMatrix(rows, ncols=n))
    )
)


class TestSmithNormalForm:
    def test_frozen_example_two_by_two(self):
        a = IntMatrix([[2, 4], [6, 8]])
        assert elementary_divisors(a) == (2, 4)

    def test_frozen_example_incidence(self):
        a = IntMatrix([[1, 1, 0], [1, 0, 1], [0, 1, 1]])
        assert elementary_divisors(a) == (1, 1, 2)

    def test_zero_matrix(self):
        a = IntMatrix.zeros(3, 5)
        res = smith_normal_form(a)
        assert res.divisors == ()
        assert res.d.is_zero()

    def test_empty_matrix(self):
        a = IntMatrix([], ncols=4)
        assert elementary_divisors(a) == ()
        assert elementary_divisor_profile(a) == (0, ())

    def test_identity(self):
        a = IntMatrix.identity(4)
        assert elementary_divisors(a) == (1, 1, 1, 1)

    def test_profile_splits_torsion(self):
        a = IntMatrix([[2, 4], [6, 8]])
        assert elementary_divisor_profile(a) == (2, (2, 4))

    @settings(max_examples=150, deadline=None)
    @given(small_matrices)
    def test_transforms_diagonalize(self, a):
        res = smith_normal_form(a)
        assert (res.u @ a @ res.v) == res.d

    @settings(max_examples=150, deadline=None)
    @given(small_matrices)
    def test_transforms_unimodular(self, a):
        res = smith_normal_form(a)
        assert is_unimodular(res.u)
        assert is_unimodular(res.v)

    @settings(max_examples=150, deadline=None)
    @given(small_matrices)
    def test_divisor_chain(self, a):
        ds = elementary_divisors(a)
        assert all(d > 0 for d in ds)
        for x, y in zip(ds, ds[1:]):
            assert y % x == 0

    @settings(max_examples=80, deadline=None)
    @given(small_matrices)
    def test_against_minor_gcd_oracle(self, a):
        assert elementary_divisors(a) == minor_gcd_oracle(a)

    @settings(max_examples=60, deadline=None)
    @given(small_matrices, st.randoms(use_true_random=False))
    def test_invariant_under_unimodular_moves(self, a, rng):
        # Row and column shears must not change the divisors.
        b = a.copy()
        for _ in range(4):
            if b.nrows >= 2:
                i, j = rng.sample(range(b.nrows), 2)
                c = rng.randint(-3, 3)
                for k in range(b.ncols):
                    b.rows[i][k] += c * b.rows[j][k]
            if b.ncols >= 2:
                i, j = rng.sample(range(b.ncols), 2)
                c = rng.randint(-3, 3)
                for row in b.rows:
                    row[i] += c * row[j]
        assert elementary_divisors(b) == elementary_divisors(a)

    def test_moderately_sized_random_matrix(self):
        rng = random.Random(7)
        a = IntMatrix(
            [[rng.randint(-9, 9) for _ in range(12)] for _ in range(15)], ncols=12
        )
        res = smith_normal_form(a)
        assert (res.u @ a @ res.v) == res.d
        for x, y in zip(res.divisors, res.divisors[1:]):
            assert y % x == 0


class TestDeterminant:
    def test_known_value(self):
        a = IntMatrix([[3, 1], [4, 2]])
        assert bareiss_determinant(a) == 2

    def test_singular(self):
        a = IntMatrix([[1, 2], [2, 4]])
        assert bareiss_determinant(a) == 0

    def test_empty(self):
        assert bareiss_determinant(IntMatrix([], ncols=0)) == 1

    def test_nonsquare_rejected(self):
        with pytest.raises(ValueError):
            bareiss_determinant(IntMatrix([[1, 2, 3]], ncols=3))

    @settings(max_examples=100, deadline=None)
    @given(
        st.integers(min_value=1, max_value=4).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(min_value=-9, max_value=9), min_size=n, max_size=n),
                min_size=n,
                max_size=n,
            )
        )
    )
    def test_matches_fraction_elimination(self, rows):
        a = IntMatrix(rows)
        assert bareiss_determinant(a) == QMat(rows).determinant()


class TestAbelianProfile:
    def test_describe(self):
        assert AbelianProfile(2, (2, 4)).describe() == "Z^2 + Z/2 + Z/4"
        assert AbelianProfile(1).describe() == "Z"
        assert AbelianProfile(0).describe() == "0"

    def test_chain_enforced(self):
        with pytest.raises(ValueError):
            AbelianProfile(0, (4, 2))
        with pytest.raises(ValueError):
            AbelianProfile(0, (1,))

    def test_direct_sum_rechains(self):
        a = AbelianProfile(1, (2,))
        b = AbelianProfile(0, (3,))
        assert a.direct_sum(b) == AbelianProfile(1, (6,))
        c = AbelianProfile(0, (2,))
        assert a.direct_sum(c) == AbelianProfile(1, (2, 2))

    def test_n_fold(self):
        assert AbelianProfile(2).n_fold(3) == AbelianProfile(6)
        assert AbelianProfile(0, (2,)).n_fold(2) == AbelianProfile(0, (2, 2))

    def test_cokernel(self):
        # Z^2 modulo the column (2, 0) and (0, 3): Z/2 + Z/3 = Z/6.
        a = IntMatrix([[2, 0], [0, 3]])
        assert cokernel_profile(a) == AbelianProfile(0, (6,))
        b = IntMatrix([[2, 0], [0, 3], [0, 0]])
        assert cokernel_profile(b) == AbelianProfile(1, (6,))


class TestQMat:
    def test_inverse_roundtrip(self):
        a = QMat([[1, 2], [3, 5]])
        assert (a * a.inverse()).is_identity()
        assert (a.inverse() * a).is_identity()

    def test_singular_inverse_raises(self):
        with pytest.raises(ZeroDivisionError):
            QMat([[1, 2], [2, 4]]).inverse()

    def test_scalar_and_ring_ops(self):
        a = QMat([[0, 1], [1, 0]])
        b = QMat([[1, 1], [0, 1]])
        assert a * b == QMat([[0, 1], [1, 1]])
        assert 2 * a == QMat([[0, 2], [2, 0]])
        assert (a - a).rows == QMat.zeros(2).rows

    def test_trace_and_det(self):
        a = QMat([[Fraction(1, 2), 0], [0, Fraction(3, 2)]])
        assert a.trace() == 2
        assert a.determinant() == Fraction(3, 4)
