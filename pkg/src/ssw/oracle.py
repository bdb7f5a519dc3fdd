"""Brute-force counterparts of every closed form.

Two independent routes to the support weight distribution (counting columns
inside (k-j)-dim subspaces, and measuring supports of j-dim subcodes), direct
enumeration of the lifted code over GF(q^l), minimum distance and the
Griesmer check.  All counting is exact integer arithmetic; chunked
enumerations merge by addition, so results do not depend on chunking.
"""
from __future__ import annotations

import os
import time
from dataclasses import dataclass
from typing import Union

import numpy as np

from .closedform import SupportWeightDistribution, WeightEnumerator
from .errors import EnumerationLimitExceeded, RankDeficient
from .field import make_tower
from .matrix import (
    MatrixGF,
    column_counter,
    count_columns_in,
    enumerate_subspaces,
    field_matmul,
    rank,
    subspace_limit,
)
from .qcombin import gaussian_binomial

DEFAULT_CODEWORD_LIMIT = 1 << 28
CHUNK = 1 << 15


def codeword_limit() -> int:
    env = os.environ.get("SSW_ENUM_LIMIT")
    return int(env) if env else DEFAULT_CODEWORD_LIMIT


def _full_rank(g: MatrixGF) -> None:
    r = rank(g)
    if r != g.nrows:
        raise RankDeficient(f"generator has rank {r}, expected {g.nrows}")


def _check_subspace_budget(g: MatrixGF, limit: int | None) -> None:
    limit = subspace_limit() if limit is None else limit
    q, k = g.field.q, g.nrows
    total = sum(gaussian_binomial(k, d, q) for d in range(k))
    if total > limit:
        raise EnumerationLimitExceeded(f"{total} subspaces exceed the limit {limit}")


def swd_by_subspace_counting(
    g: MatrixGF, limit: int | None = None, check_rank: bool = True
) -> SupportWeightDistribution:
    """A_i^(j) = number of (k-j)-dim subspaces holding exactly n - i columns of g.

    The count itself is meaningful for any k-row matrix; ``check_rank=False``
    allows rank-deficient g, where the subcode reading no longer applies.
    """
    if check_rank:
        _full_rank(g)
    _check_subspace_budget(g, limit)
    f, k, n = g.field, g.nrows, g.ncols
    counter = column_counter(g)
    swd = SupportWeightDistribution(f.q, k, n)
    for j in range(1, k + 1):
        hist: dict[int, int] = {}
        for sub in enumerate_subspaces(f, k, k - j, limit=limit):
            i = n - count_columns_in(sub, g, counter)
            hist[i] = hist.get(i, 0) + 1
        for i, c in hist.items():
            swd.add(j, i, c)
    return swd


def swd_by_subcode_enumeration(g: MatrixGF, limit: int | None = None) -> SupportWeightDistribution:
    """Support of the subcode W*G for every j-dim subspace W of the message space.

    A coordinate is in the support iff its column is not orthogonal to all of W.
    """
    _full_rank(g)
    _check_subspace_budget(g, limit)
    f, k, n = g.field, g.nrows, g.ncols
    G = g.to_array()
    swd = SupportWeightDistribution(f.q, k, n)
    for j in range(1, k + 1):
        hist: dict[int, int] = {}
        for sub in enumerate_subspaces(f, k, j, limit=limit):
            prod = field_matmul(f, sub.basis.to_array(), G)
            chi = int(np.count_nonzero(prod.any(axis=0)))
            hist[chi] = hist.get(chi, 0) + 1
        for i, c in hist.items():
            swd.add(j, i, c)
    return swd


def direct_lifted_distribution(g: MatrixGF, ell: int = 1, limit: int | None = None) -> WeightEnumerator:
    """Weight enumerator of the code over GF(q^l) spanned by g, by enumerating all messages."""
    f, k, n = g.field, g.nrows, g.ncols
    tower = make_tower(f, ell)
    Q = tower.order
    total = Q**k
    limit = codeword_limit() if limit is None else limit
    if total > limit:
        raise EnumerationLimitExceeded(f"{total} codewords exceed the limit {limit}")
    G = g.to_array()  # base elements embed as the same ints
    xs = np.arange(Q, dtype=np.int64)[:, None]
    contrib = [tower.vmul(xs, G[r][None, :]) for r in range(k)]
    hist = np.zeros(n + 1, dtype=np.int64)
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        word = np.zeros((len(idx), n), dtype=np.int64)
        for r in range(k):
            digit = (idx // Q**r) % Q
            word = tower.vadd(word, contrib[r][digit])
        hist += np.bincount(np.count_nonzero(word, axis=1), minlength=n + 1)
    return WeightEnumerator({w: int(c) for w, c in enumerate(hist)})


def weight_enumerator(g: MatrixGF, limit: int | None = None) -> WeightEnumerator:
    return direct_lifted_distribution(g, 1, limit)


def min_distance(g: MatrixGF, limit: int | None = None) -> int:
    wd = weight_enumerator(g, limit)
    return min(e for e in wd.coeffs if e > 0)


@dataclass(frozen=True)
class GriesmerResult:
    equality: bool
    slack: int


def griesmer_bound(k: int, d: int, q: int) -> int:
    return sum(-(-d // q**i) for i in range(k))


def griesmer_check(n: int, k: int, d: int, q: int) -> GriesmerResult:
    slack = n - griesmer_bound(k, d, q)
    return GriesmerResult(slack == 0, slack)


@dataclass
class OracleReport:
    method: str
    result: Union[SupportWeightDistribution, WeightEnumerator]
    elapsed: float
    work_items: int


def run_oracle(method: str, g: MatrixGF, ell: int = 1, limit: int | None = None) -> OracleReport:
    """Run one oracle and time it; method is subspace_count, subcode_enum or direct_lift."""
    q, k = g.field.q, g.nrows
    t0 = time.perf_counter()
    if method == "subspace_count":
        result = swd_by_subspace_counting(g, limit)
        work = sum(gaussian_binomial(k, d, q) for d in range(k))
    elif method == "subcode_enum":
        result = swd_by_subcode_enumeration(g, limit)
        work = sum(gaussian_binomial(k, d, q) for d in range(1, k + 1))
    elif method == "direct_lift":
        result = direct_lifted_distribution(g, ell, limit)
        work = q ** (ell * k)
    else:
        raise ValueError(f"unknown oracle method {method!r}")
    return OracleReport(method, result, time.perf_counter() - t0, work)
