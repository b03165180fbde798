from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bblab import linalg
from bblab.linalg import MatrixFp, PrimeField, as_field, is_prime, rank, rref


def span_size(A, p):
    """|row space| by enumerating every combination of rows."""
    A = np.asarray(A, dtype=np.int64) % p
    seen = set()
    for coeffs in itertools.product(range(p), repeat=A.shape[0]):
        seen.add(tuple((np.asarray(coeffs) @ A) % p))
    return len(seen)


def brute_rank(A, p):
    size, r = span_size(A, p), 0
    while p**r < size:
        r += 1
    return r


small_matrices = st.tuples(st.integers(1, 4), st.integers(1, 5), st.sampled_from([2, 3, 5])).flatmap(
    lambda t: st.tuples(
        st.lists(st.lists(st.integers(-7, 7), min_size=t[1], max_size=t[1]), min_size=t[0], max_size=t[0]),
        st.just(t[2]),
    )
)


@settings(max_examples=150, deadline=None)
@given(small_matrices)
def test_rank_matches_span_enumeration(data):
    A, p = data
    want = brute_rank(A, p)
    for name in linalg.BACKENDS:
        assert rank(A, p, backend=name) == want


@settings(max_examples=100, deadline=None)
@given(small_matrices)
def test_rref_is_reduced_and_spans_same_space(data):
    A, p = data
    A = np.asarray(A, dtype=np.int64)
    for name in linalg.BACKENDS:
        r, piv, R = rref(A, p, backend=name)
        assert r == len(piv) == rank(A, p)
        assert R.shape == A.shape
        assert not R[r:].any()
        for i, c in enumerate(piv):
            col = R[:, c]
            assert col[i] == 1 and np.count_nonzero(col) == 1
            assert not R[i, :c].any()
        assert piv == sorted(piv)
        assert rank(np.vstack([A % p, R]), p) == r


def test_backends_agree_on_large_random(backend):
    rng = np.random.default_rng(5)
    A = rng.integers(0, 32003, size=(60, 45))
    A[:, 40:] = (A[:, :5] * 3 + A[:, 5:10]) % 32003
    assert rank(A, 32003, backend=backend) == 40
    r, piv, R = rref(A, 32003, backend=backend)
    r2, piv2, R2 = rref(A, 32003, backend="numpy")
    assert (r, piv) == (r2, piv2)
    assert np.array_equal(R, R2)


def test_input_not_modified(backend):
    A = np.array([[2, 4], [1, 3]], dtype=np.int64)
    B = A.copy()
    rank(A, 5, backend=backend)
    rref(A, 5, backend=backend)
    assert np.array_equal(A, B)


def test_characteristic_matters():
    A = [[1, 1], [1, -1]]
    assert rank(A, 2) == 1
    assert rank(A, 3) == 2


def test_empty_shapes():
    assert rank(np.zeros((0, 4)), 7) == 0
    assert rank(np.zeros((3, 0)), 7) == 0
    assert rref(np.zeros((0, 0)), 7)[0] == 0


def test_prime_field_validation():
    assert PrimeField(32003).inv(2) * 2 % 32003 == 1
    assert as_field(3) == PrimeField(3)
    assert is_prime(32003) and not is_prime(32001)
    for bad in (1, 4, 32001, 2**31 + 11, -3):
        with pytest.raises(ValueError):
            PrimeField(bad)


def test_matrix_fp():
    M = MatrixFp(np.array([[1, 2, 3], [2, 4, 6]]), 7)
    assert M.rank() == 1 and M.nullity() == 2
    assert M.shape == (2, 3)


def test_default_backend_reported():
    assert linalg.BACKEND in linalg.BACKENDS
