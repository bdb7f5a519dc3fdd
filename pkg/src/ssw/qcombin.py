"""Exact q-analog counting: Gaussian binomials and the subspace-intersection counts.

Out-of-range indices give 0 rather than raising, so that sums over
intersection dimensions can run over generous ranges.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import InvalidDims, InvalidQ


def _check_q(q: int) -> None:
    if not isinstance(q, int) or q < 2:
        raise InvalidQ(f"q must be an integer >= 2, got {q!r}")


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n, via the q-Pascal recurrence."""
    _check_q(q)
    if k < 0 or k > n:
        return 0
    return _gauss(n, min(k, n - k), q)


@lru_cache(maxsize=None)
def _gauss(n: int, k: int, q: int) -> int:
    if k == 0 or k == n:
        return 1
    # [n, k] = [n-1, k-1] + q^k [n-1, k]
    a = _gauss(n - 1, min(k - 1, n - k), q)
    b = _gauss(n - 1, min(k, n - 1 - k), q) if k <= n - 1 else 0
    return a + q**k * b


def gaussian_binomial_quotient(n: int, k: int, q: int) -> int:
    """The same count from the product quotient; kept as an independent cross-check."""
    _check_q(q)
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q**n - q**i
        den *= q**k - q**i
    quo, rem = divmod(num, den)
    assert rem == 0, (n, k, q)
    return quo


def q_falling(q: int, ell: int, j: int) -> int:
    """(q^l - 1)(q^l - q)...(q^l - q^(j-1)); zero once j exceeds l."""
    _check_q(q)
    if j < 0:
        return 0
    out = 1
    top = q**ell
    for i in range(j):
        out *= top - q**i
        if out == 0:
            return 0
    return out


def single_subspace_count(k: int, u: int, j: int, t: int, q: int) -> int:
    """j-dim subspaces of GF(q)^k meeting a fixed u-dim subspace in exactly t dimensions."""
    _check_q(q)
    if t < 0 or t > u or j < t:
        return 0
    b = gaussian_binomial(k - u, j - t, q)
    if b == 0:
        return 0
    return q ** ((u - t) * (j - t)) * b * gaussian_binomial(u, t, q)


def pair_block_count(u1: int, u2: int, t1: int, t2: int, t: int, q: int) -> int:
    """(t+t1+t2)-dim subspaces V of S1 + S2 with dim(V & S1) = t1, dim(V & S2) = t2."""
    _check_q(q)
    if t < 0 or t > min(u1 - t1, u2 - t2):
        return 0
    base = gaussian_binomial(u1, t1, q) * gaussian_binomial(u2, t2, q)
    if t == 0:
        return base
    return q_falling(q, t, t) * gaussian_binomial(u1 - t1, t, q) * gaussian_binomial(u2 - t2, t, q) * base


def pair_subspace_count(k: int, j: int, u1: int, u2: int, t1: int, t2: int, q: int) -> int:
    """j-dim subspaces of GF(q)^k meeting two trivially-intersecting subspaces
    of dimensions u1, u2 in exactly t1 and t2 dimensions respectively."""
    _check_q(q)
    if u1 + u2 > k:
        raise InvalidDims(f"u1 + u2 = {u1 + u2} exceeds k = {k}")
    if t1 < 0 or t2 < 0:
        return 0
    total = 0
    for t in range(min(u1 - t1, u2 - t2) + 1):
        rest = j - t - t1 - t2
        if rest < 0:
            break
        b = gaussian_binomial(k - u1 - u2, rest, q)
        if b == 0:
            continue
        total += q ** ((u1 + u2 - t - t1 - t2) * rest) * pair_block_count(u1, u2, t1, t2, t, q) * b
    return total
