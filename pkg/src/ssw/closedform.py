"""Closed-form support weight distributions, lifted weight enumerators and
weight hierarchies of Simplex and Solomon-Stiffler codes.

Every table here describes the *full* construction (all vectors outside the
punctured subspaces) unless noted; the projective code's table follows by
dividing each support weight by q - 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping

from .errors import InvalidDims, NonDivisibleExponent
from .qcombin import gaussian_binomial, pair_subspace_count, q_falling, single_subspace_count


@dataclass
class SupportWeightDistribution:
    """A_i^(j): number of j-dimensional subcodes with support weight i.

    ``table`` maps j -> {i: count}; zero counts are never stored.
    """

    q: int
    k: int
    n: int
    table: dict[int, dict[int, int]] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for j, col in self.table.items():
            c = {int(i): int(v) for i, v in col.items() if v}
            if c:
                clean[int(j)] = c
        self.table = clean

    def add(self, j: int, i: int, count: int) -> None:
        if count:
            col = self.table.setdefault(j, {})
            col[i] = col.get(i, 0) + count

    def column(self, j: int) -> dict[int, int]:
        return dict(sorted(self.table.get(j, {}).items()))

    def total(self, j: int) -> int:
        return sum(self.table.get(j, {}).values())

    def entries(self) -> Iterator[tuple[int, int, int]]:
        for j in sorted(self.table):
            for i, c in sorted(self.table[j].items()):
                yield j, i, c

    def hierarchy(self) -> WeightHierarchy:
        return WeightHierarchy(tuple(min(self.table[j]) for j in range(1, self.k + 1) if j in self.table))

    def projective(self) -> SupportWeightDistribution:
        """Table of the projective code, assuming self is a full (q-1)-fold repetition."""
        s = self.q - 1
        if self.n % s or any(i % s for _, i, _ in self.entries()):
            raise NonDivisibleExponent(f"support weights are not all divisible by q - 1 = {s}")
        return SupportWeightDistribution(
            self.q, self.k, self.n // s, {j: {i // s: c for i, c in col.items()} for j, col in self.table.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, SupportWeightDistribution):
            return NotImplemented
        return (self.q, self.k, self.n, self.table) == (other.q, other.k, other.n, other.table)


@dataclass
class WeightEnumerator:
    """Sparse polynomial sum c_e z^e with exact integer coefficients."""

    coeffs: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {int(e): int(c) for e, c in sorted(self.coeffs.items()) if c}

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs.items())

    def total(self) -> int:
        return sum(self.coeffs.values())

    def __getitem__(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def __eq__(self, other):
        if not isinstance(other, WeightEnumerator):
            return NotImplemented
        return self.coeffs == other.coeffs

    def substitute_power(self, s: int) -> WeightEnumerator:
        """The polynomial in z^s, i.e. every exponent multiplied by s."""
        return WeightEnumerator({e * s: c for e, c in self.coeffs.items()})

    def __str__(self):
        parts = [str(c) if e == 0 else f"{c}z^{e}" for e, c in self.terms()]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class WeightHierarchy:
    values: tuple[int, ...]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def divided(self, s: int) -> WeightHierarchy:
        return WeightHierarchy(tuple(v // s for v in self.values))

    def is_strictly_increasing(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))

    def __str__(self):
        return "{" + ", ".join(map(str, self.values)) + "}"


def _check_p1(k: int, u: int) -> None:
    if not 1 <= u <= k - 1:
        raise InvalidDims(f"need 1 <= u <= k - 1, got u={u}, k={k}")


def _check_p2(k: int, u1: int, u2: int) -> None:
    if u1 < 1 or u2 < 1 or u1 + u2 > k:
        raise InvalidDims(f"need u1, u2 >= 1 and u1 + u2 <= k, got ({u1}, {u2}), k={k}")


def swd_simplex(q: int, k: int) -> SupportWeightDistribution:
    """Simplex code: one support weight per j, carried by all [k, j]_q subcodes."""
    if k < 1:
        raise InvalidDims(f"k must be >= 1, got {k}")
    n = (q**k - 1) // (q - 1)
    swd = SupportWeightDistribution(q, k, n)
    for j in range(1, k + 1):
        swd.add(j, (q**k - q ** (k - j)) // (q - 1), gaussian_binomial(k, j, q))
    return swd


def swd_p1(q: int, k: int, u: int) -> SupportWeightDistribution:
    """Full code on GF(q)^k minus one u-dimensional subspace."""
    _check_p1(k, u)
    n = q**k - q**u
    swd = SupportWeightDistribution(q, k, n)
    for j in range(1, k + 1):
        for t in range(max(0, u - j), u + 1):
            # (k-j)-dim subspaces meeting S_u in t dims hold q^(k-j) - q^t columns
            swd.add(j, n - (q ** (k - j) - q**t), single_subspace_count(k, u, k - j, t, q))
    return swd


def swd_p2(q: int, k: int, u1: int, u2: int) -> SupportWeightDistribution:
    """Full code on GF(q)^k minus two trivially-intersecting subspaces."""
    _check_p2(k, u1, u2)
    n = q**k - q**u1 - q**u2 + 1
    swd = SupportWeightDistribution(q, k, n)
    for j in range(1, k + 1):
        r1 = range(max(0, u1 - j), u1 + 1)
        r2 = range(max(0, u2 - j), u2 + 1)
        pairs = {tuple(sorted((a, b))) for a in r1 for b in r2}
        for t1, t2 in sorted(pairs):
            count = pair_subspace_count(k, k - j, u1, u2, t1, t2, q)
            if t1 != t2:
                count += pair_subspace_count(k, k - j, u1, u2, t2, t1, q)
            swd.add(j, n - (q ** (k - j) - q**t1 - q**t2 + 1), count)
    return swd


def _exact(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"non-integral count {x}")
    return int(x)


def swd_p2_u1eq1(q: int, k: int, u: int) -> SupportWeightDistribution:
    """Three-branch formula for punctures of dimensions 1 and u.

    Some branch exponents go negative at the top values of j; the products are
    evaluated over the rationals and must come out integral.
    """
    _check_p2(k, 1, u)
    n = q**k - q**u - q + 1
    Q = Fraction(q)

    def G(a, b):
        return gaussian_binomial(a, b, q)

    swd = SupportWeightDistribution(q, k, n)
    for j in range(1, k + 1):
        kj = k - j
        first = Q ** (u * (kj - 1)) * (G(u, 1) + 1) * G(k - u - 1, kj - 1)
        second = Q ** ((u - 1) * (kj - 2)) * Fraction((q**u - 1) * (q ** (u - 1) - 1), q - 1) * G(k - u - 1, kj - 2)
        swd.add(j, n - (q**kj - q), _exact(first + second))
        for t in range(max(0, u - j), u + 1):
            if t != 1:
                v = Q ** ((u - t) * (kj - t - 1)) * G(u, t) * (q ** (u - t) * G(k - u, kj - t) - G(k - u - 1, kj - t - 1))
                swd.add(j, n - (q**kj - q**t), _exact(v))
            if t != 0:
                v = Q ** ((u - t) * (kj - t - 1)) * G(k - u - 1, kj - t - 1) * G(u, t)
                swd.add(j, n - (q**kj - q**t - q + 1), _exact(v))
    return swd


def swd_closed(q: int, k: int, dims: tuple[int, ...] | list[int]) -> SupportWeightDistribution:
    """Full-construction table for 0, 1 or 2 punctures."""
    dims = tuple(dims)
    if len(dims) == 0:
        s = swd_simplex(q, k)
        return SupportWeightDistribution(
            q, k, s.n * (q - 1), {j: {i * (q - 1): c for i, c in col.items()} for j, col in s.table.items()}
        )
    if len(dims) == 1:
        return swd_p1(q, k, dims[0])
    if len(dims) == 2:
        return swd_p2(q, k, *dims)
    raise InvalidDims(f"closed forms cover at most two punctures, got {len(dims)}")


def lifted_weight_enumerator(swd: SupportWeightDistribution, ell: int) -> WeightEnumerator:
    """Weight enumerator of the code generated by the same matrix over GF(q^l)."""
    if ell < 1:
        raise InvalidDims(f"lift degree must be >= 1, got {ell}")
    coeffs: dict[int, int] = {0: 1}
    for j, i, c in swd.entries():
        f = q_falling(swd.q, ell, j)
        if f:
            coeffs[i] = coeffs.get(i, 0) + c * f
    return WeightEnumerator(coeffs)


def wd_l1_p2(q: int, k: int, u1: int, u2: int) -> WeightEnumerator:
    """Ordinary weight distribution of the two-puncture code (four weights, three when u1 = u2)."""
    _check_p2(k, u1, u2)
    rest = k - u1 - u2
    terms = [
        (q**k - q ** (k - 1), q**rest - 1),
        ((q - 1) * (q ** (k - 1) - q ** (u2 - 1)), q ** (k - u1) - q**rest),
        ((q - 1) * (q ** (k - 1) - q ** (u1 - 1)), q ** (k - u2) - q**rest),
        ((q - 1) * (q ** (k - 1) - q ** (u1 - 1) - q ** (u2 - 1)), q**rest * (q**u1 - 1) * (q**u2 - 1)),
    ]
    coeffs = {0: 1}
    for w, c in terms:
        coeffs[w] = coeffs.get(w, 0) + c
    return WeightEnumerator(coeffs)


def hierarchy_simplex(q: int, k: int) -> WeightHierarchy:
    return WeightHierarchy(tuple((q**k - q ** (k - j)) // (q - 1) for j in range(1, k + 1)))


def hierarchy_p1(q: int, k: int, u: int) -> WeightHierarchy:
    _check_p1(k, u)
    out = []
    for j in range(1, k + 1):
        if j < u:
            out.append(q**k - q**u - q ** (k - j) + q ** (u - j))
        else:
            out.append(q**k - q**u - q ** (k - j) + 1)
    return WeightHierarchy(tuple(out))


def hierarchy_p2(q: int, k: int, u1: int, u2: int) -> WeightHierarchy:
    _check_p2(k, u1, u2)
    base = q**k - q**u1 - q**u2
    out = []
    for j in range(1, k + 1):
        d = base - q ** (k - j)
        d += q ** (u1 - j) if j < u1 else 1
        d += q ** (u2 - j) if j < u2 else 1
        out.append(d)
    return WeightHierarchy(tuple(out))


def hierarchy_closed(q: int, k: int, dims: tuple[int, ...] | list[int]) -> WeightHierarchy:
    dims = tuple(dims)
    if len(dims) == 0:
        return WeightHierarchy(tuple(d * (q - 1) for d in hierarchy_simplex(q, k)))
    if len(dims) == 1:
        return hierarchy_p1(q, k, dims[0])
    if len(dims) == 2:
        return hierarchy_p2(q, k, *dims)
    raise InvalidDims(f"closed forms cover at most two punctures, got {len(dims)}")


def projective_transform(full: WeightEnumerator | Mapping[int, int], q: int) -> WeightEnumerator:
    """Undo z -> z^(q-1): exponent i of the full code becomes i/(q-1) for the projective code."""
    coeffs = full.coeffs if isinstance(full, WeightEnumerator) else dict(full)
    s = q - 1
    bad = [e for e in coeffs if e % s]
    if bad:
        raise NonDivisibleExponent(f"exponents {bad} are not divisible by q - 1 = {s}")
    return WeightEnumerator({e // s: c for e, c in coeffs.items()})
