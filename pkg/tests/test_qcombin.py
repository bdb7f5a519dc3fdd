import itertools

import pytest
from hypothesis import given, strategies as st

from ssw.errors import InvalidDims, InvalidQ
from ssw.field import make_field
from ssw.matrix import Subspace, enumerate_subspaces, intersection_dim
from ssw.qcombin import (
    gaussian_binomial,
    gaussian_binomial_quotient,
    pair_block_count,
    pair_subspace_count,
    q_falling,
    single_subspace_count,
)

import brute

QS = [2, 3, 4, 5]


def test_gaussian_examples():
    assert gaussian_binomial(5, 0, 3) == 1
    assert gaussian_binomial(3, 1, 2) == 7
    assert gaussian_binomial(2, 3, 3) == 0
    assert gaussian_binomial(6, 3, 2) == 1395
    # count lines of GF(2)^3 by grouping nonzero vectors
    allv = list(itertools.product(range(2), repeat=3))
    assert len(brute.subspaces_of(allv, 2, 3, 1)) == 7


def test_gaussian_big_exact():
    # exact for big arguments, no float anywhere
    v = gaussian_binomial(40, 20, 5)
    assert v == gaussian_binomial_quotient(40, 20, 5)
    assert v > 2**500


@pytest.mark.parametrize("q", QS + [7, 8, 9])
def test_recurrence_matches_quotient(q):
    for n in range(10):
        for k in range(-1, n + 2):
            assert gaussian_binomial(n, k, q) == gaussian_binomial_quotient(n, k, q)


@given(st.integers(1, 12), st.integers(0, 12), st.sampled_from(QS))
def test_symmetry_and_dual_pascal(n, k, q):
    if k <= n:
        assert gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q)
    # the other q-Pascal form: [n, k] = q^(n-k) [n-1, k-1] + [n-1, k]
    assert gaussian_binomial(n, k, q) == q ** max(n - k, 0) * gaussian_binomial(n - 1, k - 1, q) + gaussian_binomial(
        n - 1, k, q
    )


def test_invalid_q():
    with pytest.raises(InvalidQ):
        gaussian_binomial(3, 1, 1)
    with pytest.raises(InvalidQ):
        q_falling(0, 2, 1)


def test_q_falling():
    assert q_falling(3, 2, 1) == 8
    assert q_falling(3, 2, 3) == 0
    assert q_falling(2, 3, 2) == 42
    assert q_falling(5, 4, 0) == 1
    for q, ell in itertools.product(QS, range(1, 5)):
        for j in range(ell + 2):
            # ordered independent j-tuples = j-dim subspaces times ordered bases of each
            assert q_falling(q, ell, j) == gaussian_binomial(ell, j, q) * q_falling(q, j, j)


def test_single_examples():
    assert single_subspace_count(3, 2, 2, 1, 3) == 12
    assert single_subspace_count(3, 2, 1, 0, 3) == 9
    assert single_subspace_count(5, 2, 2, 3, 2) == 0


@pytest.mark.parametrize("q", QS)
def test_single_partition_and_pascal(q):
    for k in range(1, 9):
        for u in range(0, k + 1):
            for j in range(0, k + 1):
                total = sum(single_subspace_count(k, u, j, t, q) for t in range(u + 1))
                assert total == gaussian_binomial(k, j, q)
        for j in range(0, k + 1):
            # u = 1: [k, j] = q^j [k-1, j] + [k-1, j-1]
            assert single_subspace_count(k, 1, j, 0, q) == q**j * gaussian_binomial(k - 1, j, q)
            assert single_subspace_count(k, 1, j, 1, q) == gaussian_binomial(k - 1, j - 1, q)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_pair_partition(q):
    for k in range(2, 8):
        for u1 in range(1, k):
            for u2 in range(1, k - u1 + 1):
                for j in range(k + 1):
                    total = sum(
                        pair_subspace_count(k, j, u1, u2, t1, t2, q) for t1 in range(u1 + 1) for t2 in range(u2 + 1)
                    )
                    assert total == gaussian_binomial(k, j, q)


def test_pair_block_examples():
    assert pair_block_count(2, 3, 0, 0, 0, 2) == 1
    assert pair_block_count(2, 3, 0, 0, 1, 2) == 21 == 31 - 3 - 7
    assert pair_block_count(2, 3, 2, 0, 1, 2) == 0


def test_pair_examples():
    assert pair_subspace_count(6, 5, 2, 3, 2, 3, 2) == 1
    assert pair_subspace_count(5, 5, 2, 3, 2, 3, 2) == 1
    # exhaustive count in GF(3)^4 with S1 = <e1>, S2 = <e2, e3>
    assert [pair_subspace_count(4, 3, 1, 2, a, b, 3) for a, b in [(0, 1), (0, 2), (1, 1), (1, 2)]] == [24, 3, 12, 1]
    with pytest.raises(InvalidDims):
        pair_subspace_count(4, 2, 3, 2, 0, 0, 2)


@pytest.mark.parametrize("p,k", [(2, 4), (2, 5), (3, 3), (3, 4)])
def test_counts_match_enumeration(p, k):
    f = make_field(p)
    eye = [[int(r == c) for c in range(k)] for r in range(k)]
    for u in range(1, k):
        s = Subspace.span(f, k, eye[:u])
        for j in range(k + 1):
            hist = {}
            for v in enumerate_subspaces(f, k, j):
                t = intersection_dim(v, s)
                hist[t] = hist.get(t, 0) + 1
            for t in range(u + 1):
                assert hist.get(t, 0) == single_subspace_count(k, u, j, t, p)
    for u1 in range(1, k):
        for u2 in range(1, k - u1 + 1):
            s1, s2 = Subspace.span(f, k, eye[:u1]), Subspace.span(f, k, eye[u1 : u1 + u2])
            for j in range(k + 1):
                hist = {}
                for v in enumerate_subspaces(f, k, j):
                    key = intersection_dim(v, s1), intersection_dim(v, s2)
                    hist[key] = hist.get(key, 0) + 1
                for t1, t2 in itertools.product(range(u1 + 1), range(u2 + 1)):
                    assert hist.get((t1, t2), 0) == pair_subspace_count(k, j, u1, u2, t1, t2, p)
