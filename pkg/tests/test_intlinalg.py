import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidcheck.intlinalg import (
    AbelianDescriptor,
    IntMatrix,
    cokernel,
    determinant,
    diagonal,
    kernel_basis,
    smith_normal_form,
)

from oracles import in_integer_span, invariant_factors, small_kernel_vectors


@st.composite
def matrices(draw, max_dim=5, bound=9):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c), min_size=r, max_size=r))
    return IntMatrix.from_rows(rows)


def assert_snf(A):
    D, U, V = smith_normal_form(A)
    assert U @ A @ V == D
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
    assert all(D[i, j] == 0 for i in range(D.rows) for j in range(D.cols) if i != j)
    d = diagonal(D)
    nz = [x for x in d if x]
    assert d[: len(nz)] == nz and all(x > 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    return D


def test_already_diagonal():
    D = assert_snf(IntMatrix.from_rows([[12]]))
    assert D.entries == ((12,),)


def test_two_by_two():
    A = IntMatrix.from_rows([[2, 0], [0, 3]])
    # determinantal divisors: gcd of entries = 1, |det| = 6
    assert invariant_factors(A.entries, 2, 2) == [1, 6]
    assert diagonal(assert_snf(A)) == [1, 6]


def test_zero_matrix():
    A = IntMatrix.zeros(2, 3)
    D, U, V = smith_normal_form(A)
    assert D == A and U == IntMatrix.identity(2) and V == IntMatrix.identity(3)


def test_cokernel_examples():
    assert cokernel(IntMatrix.from_rows([[12]])) == AbelianDescriptor(0, (12,))
    assert cokernel(IntMatrix.identity(4)).is_trivial()
    assert cokernel(IntMatrix.from_columns([], rows=3)) == AbelianDescriptor(3)
    assert cokernel(IntMatrix.from_columns([(2, 0, 0), (0, 2, 0), (0, 0, 2)])) == AbelianDescriptor(0, (2, 2, 2))


def test_kernel_examples():
    assert kernel_basis(IntMatrix.identity(3)) == []
    A = IntMatrix.from_rows([[1, 1, 1]])
    basis = kernel_basis(A)
    assert len(basis) == 2
    assert all(A.apply(v) == (0,) for v in basis)
    for v in small_kernel_vectors(A.entries, 3):
        assert in_integer_span(basis, v)


def test_descriptor_validation():
    with pytest.raises(ValueError):
        AbelianDescriptor(0, (4, 2))
    with pytest.raises(ValueError):
        AbelianDescriptor(0, (1,))
    assert str(AbelianDescriptor(3)) == "Z^3"
    assert str(AbelianDescriptor(1, (2, 2))) == "Z + Z/2 + Z/2"
    assert str(AbelianDescriptor(0)) == "0"
    assert AbelianDescriptor(0, (2, 6)).order == 12


def test_big_entries_stay_exact():
    big = 10**40
    A = IntMatrix.from_rows([[big, big + 1], [big - 1, big]])
    D = assert_snf(A)
    assert diagonal(D) == [1, 1]
    A = IntMatrix.from_rows([[2**70, 0], [0, 3**50]])
    assert diagonal(assert_snf(A)) == [1, 2**70 * 3**50]


def test_random_against_determinantal_divisors():
    rng = random.Random(7)
    for _ in range(300):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        rows = [[rng.randint(-6, 6) for _ in range(c)] for _ in range(r)]
        A = IntMatrix.from_rows(rows)
        D = assert_snf(A)
        assert [d for d in diagonal(D) if d] == invariant_factors(rows, r, c)


@settings(max_examples=300)
@given(matrices())
def test_snf_identity(A):
    assert_snf(A)


@settings(max_examples=200)
@given(matrices(), st.randoms(use_true_random=False), st.integers(0, 3))
def test_cokernel_invariance(A, rnd, zeros):
    rows = list(A.entries)
    rnd.shuffle(rows)
    cols = list(zip(*rows))
    rnd.shuffle(cols)
    cols += [(0,) * A.rows] * zeros
    B = IntMatrix.from_columns(cols, rows=A.rows)
    assert cokernel(B) == cokernel(A)


@settings(max_examples=200)
@given(matrices())
def test_kernel_basis(A):
    D, _, _ = smith_normal_form(A)
    rank = sum(1 for d in diagonal(D) if d)
    basis = kernel_basis(A)
    assert len(basis) == A.cols - rank
    assert all(not any(A.apply(v)) for v in basis)
