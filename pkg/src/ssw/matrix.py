"""Dense matrices over a finite field, RREF, and canonical subspace enumeration."""
from __future__ import annotations

import itertools
import os
from collections import Counter
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    EnumerationLimitExceeded,
    FieldMismatch,
    FormatError,
)
from .field import FieldSpec, parse_field
from .qcombin import gaussian_binomial

DEFAULT_SUBSPACE_LIMIT = 10**8
# spans up to this size are materialised as key sets for column membership
SPAN_SET_LIMIT = 1 << 16


def subspace_limit() -> int:
    env = os.environ.get("SSW_ENUM_LIMIT")
    return int(env) if env else DEFAULT_SUBSPACE_LIMIT


def vector_key(v: Sequence[int], q: int) -> int:
    """Big-endian base-q integer of a vector; sorting keys sorts vectors lexicographically."""
    key = 0
    for x in v:
        key = key * q + x
    return key


def key_vector(key: int, q: int, k: int) -> tuple[int, ...]:
    out = [0] * k
    for i in range(k - 1, -1, -1):
        key, out[i] = divmod(key, q)
    return tuple(out)


class MatrixGF:
    """Immutable dense matrix; entries are int encodings of field elements."""

    __slots__ = ("field", "rows", "ncols")

    def __init__(self, field: FieldSpec, rows: Iterable[Sequence[int]], ncols: int | None = None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionMismatch("an empty matrix needs an explicit column count")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch(f"ragged row of length {len(r)}, expected {ncols}")
            for x in r:
                if not 0 <= x < field.q:
                    raise FieldMismatch(f"entry {x} is not an element of {field}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixGF is immutable")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(r[c] for r in self.rows) for c in range(self.ncols)]

    def transpose(self) -> MatrixGF:
        return MatrixGF(self.field, self.columns(), self.nrows)

    def to_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.nrows, self.ncols)

    @classmethod
    def from_columns(cls, field: FieldSpec, cols: Sequence[Sequence[int]], nrows: int) -> MatrixGF:
        rows = [[c[i] for c in cols] for i in range(nrows)]
        return cls(field, rows, len(cols))

    def __eq__(self, other):
        return (
            isinstance(other, MatrixGF)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        return f"MatrixGF({self.field}, {self.nrows}x{self.ncols})"

    def to_text(self) -> str:
        lines = [f"{self.field.label} {self.nrows} {self.ncols}"]
        lines += [" ".join(str(x) for x in r) for r in self.rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> MatrixGF:
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise FormatError("empty matrix text")
        head = lines[0].split()
        if len(head) != 3:
            raise FormatError(f"bad header {lines[0]!r}; expected 'p^m rows cols'")
        field = parse_field(head[0])
        try:
            k, n = int(head[1]), int(head[2])
            rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
        except ValueError as exc:
            raise FormatError(str(exc)) from None
        if len(rows) != k:
            raise FormatError(f"header promises {k} rows, found {len(rows)}")
        return cls(field, rows, n)


def rref(m: MatrixGF) -> tuple[MatrixGF, int]:
    """Reduced row echelon form with zero rows dropped, plus the rank."""
    f = m.field
    a = [list(r) for r in m.rows]
    rank = 0
    for col in range(m.ncols):
        piv = next((r for r in range(rank, len(a)) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = f.inv(a[rank][col])
        a[rank] = [f.mul(inv, x) for x in a[rank]]
        for r in range(len(a)):
            if r != rank and a[r][col]:
                c = a[r][col]
                a[r] = [f.sub(x, f.mul(c, y)) for x, y in zip(a[r], a[rank])]
        rank += 1
    return MatrixGF(f, a[:rank], m.ncols), rank


def rank(m: MatrixGF) -> int:
    return rref(m)[1]


def matmul(a: MatrixGF, b: MatrixGF) -> np.ndarray:
    """Product over the field as an int array (no MatrixGF wrapping, for hot loops)."""
    if a.ncols != b.nrows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return field_matmul(a.field, a.to_array(), b.to_array())


def field_matmul(f: FieldSpec, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for i in range(A.shape[1]):
        out = f.vadd(out, f.vmul(A[:, i : i + 1], B[i : i + 1, :]))
    return out


class Subspace:
    """Subspace of GF(q)^k held in canonical form (RREF basis)."""

    def __init__(self, field: FieldSpec, ambient_dim: int, basis: MatrixGF, _canonical: bool = False):
        if basis.ncols != ambient_dim:
            raise DimensionMismatch(f"basis has {basis.ncols} columns, ambient dimension is {ambient_dim}")
        if not _canonical:
            basis, _ = rref(basis)
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(next(c for c, x in enumerate(r) if x) for r in basis.rows)

    @classmethod
    def span(cls, field: FieldSpec, ambient_dim: int, vectors: Iterable[Sequence[int]]) -> Subspace:
        return cls(field, ambient_dim, MatrixGF(field, list(vectors), ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        vecs = ", ".join("".join(map(str, r)) for r in self.basis.rows)
        return f"<{vecs}>"

    def contains(self, v: Sequence[int]) -> bool:
        # reduce v against the RREF rows; v is in the span iff nothing remains
        f = self.field
        w = list(v)
        for row, p in zip(self.basis.rows, self.pivots):
            c = w[p]
            if c:
                w = [f.sub(x, f.mul(c, y)) for x, y in zip(w, row)]
        return not any(w)

    def element_array(self) -> np.ndarray:
        """All q^dim vectors of the subspace as rows of an int array."""
        f, d = self.field, self.dim
        if d == 0:
            return np.zeros((1, self.ambient_dim), dtype=np.int64)
        coeffs = np.array(list(itertools.product(range(f.q), repeat=d)), dtype=np.int64)
        return field_matmul(f, coeffs, self.basis.to_array())

    @cached_property
    def keys(self) -> frozenset[int]:
        arr = self.element_array()
        weights = self.field.q ** np.arange(self.ambient_dim - 1, -1, -1, dtype=np.int64)
        return frozenset((arr @ weights).tolist())


def enumerate_subspaces(field: FieldSpec, k: int, d: int, limit: int | None = None) -> Iterator[Subspace]:
    """Yield every d-dimensional subspace of GF(q)^k exactly once.

    Order: pivot-column tuples lexicographically, then the free RREF entries
    lexicographically (row-major).  The total is the Gaussian binomial [k, d]_q.
    """
    if not 0 <= d <= k:
        raise DimensionMismatch(f"need 0 <= d <= k, got d={d}, k={k}")
    limit = subspace_limit() if limit is None else limit
    total = gaussian_binomial(k, d, field.q)
    if total > limit:
        raise EnumerationLimitExceeded(f"{total} subspaces of dimension {d} in GF({field.q})^{k} exceeds limit {limit}")
    return _enumerate(field, k, d)


def _enumerate(field: FieldSpec, k: int, d: int) -> Iterator[Subspace]:
    q = field.q
    for pivots in itertools.combinations(range(k), d):
        pivset = set(pivots)
        free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, k) if c not in pivset]
        template = [[0] * k for _ in range(d)]
        for r, p in enumerate(pivots):
            template[r][p] = 1
        for values in itertools.product(range(q), repeat=len(free)):
            for (r, c), x in zip(free, values):
                template[r][c] = x
            basis = MatrixGF(field, template, k)
            yield Subspace(field, k, basis, _canonical=True)


def column_counter(g: MatrixGF) -> Counter:
    """Multiplicity of each column, keyed by vector_key."""
    q = g.field.q
    return Counter(vector_key(c, q) for c in g.columns())


def count_columns_in(sub: Subspace, g: MatrixGF, _counter: Counter | None = None) -> int:
    """Columns of g (with multiplicity) lying in sub."""
    if sub.ambient_dim != g.nrows:
        raise DimensionMismatch(f"subspace lives in dimension {sub.ambient_dim}, generator has {g.nrows} rows")
    if sub.field != g.field:
        raise FieldMismatch(f"{sub.field} != {g.field}")
    counter = column_counter(g) if _counter is None else _counter
    q, k = g.field.q, g.nrows
    if q**sub.dim <= SPAN_SET_LIMIT and q**sub.dim <= 4 * len(counter):
        keys = sub.keys
        return sum(m for key, m in counter.items() if key in keys)
    return sum(m for key, m in counter.items() if sub.contains(key_vector(key, q, k)))


def intersection_dim(a: Subspace, b: Subspace) -> int:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} != {b.field}")
    stacked = MatrixGF(a.field, a.basis.rows + b.basis.rows, a.ambient_dim)
    return a.dim + b.dim - rank(stacked)
