"""Generator matrices of Simplex and Solomon-Stiffler codes."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidDims, RankDeficient, SpecInvariantViolation
from .field import FieldSpec
from .matrix import MatrixGF, Subspace, intersection_dim, rank, vector_key


def projective_points(field: FieldSpec, k: int) -> list[tuple[int, ...]]:
    """One vector per 1-dim subspace of GF(q)^k, first nonzero coordinate 1, sorted lexicographically."""
    if k < 1:
        raise InvalidDims(f"k must be >= 1, got {k}")
    q = field.q
    pts = []
    for lead in range(k):
        for tail in itertools.product(range(q), repeat=k - lead - 1):
            pts.append((0,) * lead + (1,) + tail)
    pts.sort()
    return pts


def all_nonzero_vectors(field: FieldSpec, k: int) -> list[tuple[int, ...]]:
    return [v for v in itertools.product(range(field.q), repeat=k) if any(v)]


@dataclass(frozen=True)
class CodeInstance:
    generator: MatrixGF
    n: int
    k: int
    min_distance: int | None = None
    projective: bool = False

    @property
    def field(self) -> FieldSpec:
        return self.generator.field


@dataclass(frozen=True)
class SolomonStifflerSpec:
    field: FieldSpec
    k: int
    punctures: tuple[Subspace, ...]
    projective: bool = False
    strict: bool = False
    block_layout: bool = False

    def __post_init__(self):
        object.__setattr__(self, "punctures", tuple(self.punctures))
        self.validate()

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.punctures)

    def validate(self) -> None:
        k = self.k
        if k < 1:
            raise SpecInvariantViolation(f"k must be >= 1, got {k}")
        for s in self.punctures:
            if s.field != self.field or s.ambient_dim != k:
                raise SpecInvariantViolation(f"puncture {s} does not live in GF({self.field.q})^{k}")
            if not 1 <= s.dim <= k - 1:
                raise SpecInvariantViolation(f"puncture {s} has dimension {s.dim}; need 1 <= u <= {k - 1}")
        if sum(self.dims) > k:
            raise SpecInvariantViolation(f"puncture dimensions {self.dims} sum to more than k = {k}")
        for a, b in itertools.combinations(self.punctures, 2):
            if intersection_dim(a, b):
                raise SpecInvariantViolation(f"punctures {a} and {b} intersect nontrivially")
        if self.strict and len(set(self.dims)) != len(self.dims):
            raise SpecInvariantViolation(f"strict Solomon-Stiffler codes need distinct dimensions, got {self.dims}")

    @property
    def length(self) -> int:
        q, k = self.field.q, self.k
        if self.projective:
            return (q**k - 1) // (q - 1) - sum((q**u - 1) // (q - 1) for u in self.dims)
        return q**k - 1 - sum(q**u - 1 for u in self.dims)

    @property
    def expected_distance(self) -> int:
        q, k = self.field.q, self.k
        d = q ** (k - 1) - sum(q ** (u - 1) for u in self.dims)
        return d if self.projective else (q - 1) * d


def default_punctures(field: FieldSpec, k: int, dims: Sequence[int]) -> list[Subspace]:
    """Consecutive coordinate subspaces <e1..e_u1>, <e_{u1+1}..>, ..."""
    if any(u < 0 for u in dims) or sum(dims) > k:
        raise InvalidDims(f"puncture dimensions {list(dims)} do not fit in k = {k}")
    out, start = [], 0
    for u in dims:
        rows = [[1 if c == start + r else 0 for c in range(k)] for r in range(u)]
        out.append(Subspace(field, k, MatrixGF(field, rows, k)))
        start += u
    return out


def _scaled_blocks(field: FieldSpec, cols: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    # [SS, aSS, ..., a^(q-2) SS] for a primitive
    out, s = [], 1
    for _ in range(field.q - 1):
        out += [tuple(field.mul(s, x) for x in c) for c in cols]
        s = field.mul(s, field.primitive)
    return out


def simplex_generator(field: FieldSpec, k: int) -> CodeInstance:
    cols = projective_points(field, k)
    g = MatrixGF.from_columns(field, cols, k)
    return CodeInstance(g, len(cols), k, field.q ** (k - 1), projective=True)


def ss_generator(spec: SolomonStifflerSpec) -> CodeInstance:
    f, k = spec.field, spec.k

    def punctured(v):
        return any(s.contains(v) for s in spec.punctures)

    if spec.projective:
        cols = [v for v in projective_points(f, k) if not punctured(v)]
    elif spec.block_layout:
        cols = _scaled_blocks(f, [v for v in projective_points(f, k) if not punctured(v)])
    else:
        cols = [v for v in all_nonzero_vectors(f, k) if not punctured(v)]
        cols.sort(key=lambda v: vector_key(v, f.q))
    g = MatrixGF.from_columns(f, cols, k)
    if rank(g) != k:
        raise RankDeficient(f"generator has rank {rank(g)} < k = {k}")
    assert len(cols) == spec.length
    return CodeInstance(g, len(cols), k, spec.expected_distance, projective=spec.projective)


def read_basis_file(text: str) -> list[MatrixGF]:
    """Puncture bases, one matrix-text block per blank-line-separated chunk."""
    blocks, cur = [], []
    for line in text.splitlines():
        if line.strip():
            cur.append(line)
        elif cur:
            blocks.append("\n".join(cur))
            cur = []
    if cur:
        blocks.append("\n".join(cur))
    return [MatrixGF.from_text(b) for b in blocks]


def write_basis_file(bases: Sequence[MatrixGF]) -> str:
    return "\n".join(b.to_text() for b in bases)
