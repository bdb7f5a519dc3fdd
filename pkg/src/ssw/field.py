"""Exact arithmetic in GF(p^m) and in degree-l towers GF(q^l) over GF(q).

Elements are plain ints.  The base-``radix`` digits of an element are the
coefficients of its residue polynomial, constant term least significant; for
GF(p^m) the radix is p, for a tower over GF(q) it is q.  Because q = p^m,
both encodings are also base-p digit strings, so addition is always digitwise
mod p.  In particular a base element x embeds into any tower as the same int.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    NonPrimeP,
    ReducibleModulus,
    SSWError,
)

LOG_TABLE_LIMIT = 1 << 16
MAX_ORDER = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _digits(x: int, radix: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        x, d = divmod(x, radix)
        out.append(d)
    return out


def _from_digits(ds: Sequence[int], radix: int) -> int:
    v = 0
    for d in reversed(ds):
        v = v * radix + d
    return v


class _PrimeCoeffs:
    """Integers mod p: the coefficient ring underneath GF(p^m)."""

    def __init__(self, p: int):
        self.p = p
        self.order = p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        return pow(a, self.p - 2, self.p)


def _poly_rem(num: Sequence[int], den: Sequence[int], c) -> list[int]:
    # den is monic; coefficient lists are constant-term first
    r = list(num)
    dd = len(den) - 1
    for i in range(len(r) - 1, dd - 1, -1):
        lead = r[i]
        if lead:
            for j in range(dd + 1):
                r[i - dd + j] = c.sub(r[i - dd + j], c.mul(lead, den[j]))
    return r[:dd]


def _is_irreducible(poly: Sequence[int], c) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg <= 1:
        return True
    if poly[0] == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(c.order), repeat=d):
            if not any(_poly_rem(poly, list(tail) + [1], c)):
                return False
    return True


def _first_irreducible(c, degree: int) -> tuple[int, ...]:
    # monic polynomials in order of their integer encoding
    for low in range(c.order**degree):
        poly = _digits(low, c.order, degree) + [1]
        if _is_irreducible(poly, c):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class _GaloisField:
    """Arithmetic shared by :class:`FieldSpec` and :class:`TowerSpec`."""

    def __init__(self, coeffs, modulus: Sequence[int]):
        self._c = coeffs
        self.radix = coeffs.order
        self.modulus = tuple(int(x) for x in modulus)
        self.degree = len(self.modulus) - 1
        self.order = self.radix**self.degree
        self.char = coeffs.p
        self._pdigits = round(np.log(self.order) / np.log(self.char))

    # -- scalar arithmetic -------------------------------------------------
    def _check(self, a: int) -> None:
        if not 0 <= a < self.order:
            raise FieldMismatch(f"{a} is not an element of {self}")

    def add(self, a: int, b: int) -> int:
        if self.char == 2:
            return a ^ b
        p = self.char
        if self.order == p:
            return (a + b) % p
        out, scale = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.char == 2:
            return a
        p = self.char
        out, scale = 0, 1
        while a:
            a, d = divmod(a, p)
            out += ((-d) % p) * scale
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _polymul(self, a: int, b: int) -> int:
        if self.radix == 2:
            # carry-less product, reduced by the modulus bit pattern
            m = self.degree
            mod = _from_digits(self.modulus, 2)
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a >> m & 1:
                    a ^= mod
            return r
        c, m = self._c, self.degree
        A = _digits(a, self.radix, m)
        B = _digits(b, self.radix, m)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(A):
            if ai:
                for j, bj in enumerate(B):
                    if bj:
                        prod[i + j] = c.add(prod[i + j], c.mul(ai, bj))
        return _from_digits(_poly_rem(prod, self.modulus, c), self.radix)

    def _slow_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._polymul(r, a)
            a = self._polymul(a, a)
            e >>= 1
        return r

    @cached_property
    def primitive(self) -> int:
        """Smallest element (by encoding) of multiplicative order q - 1."""
        n = self.order - 1
        if n == 1:
            return 1
        primes = prime_factors(n)
        for g in range(2, self.order):
            if all(self._slow_pow(g, n // r) != 1 for r in primes):
                return g
        raise AssertionError("field has no primitive element")  # pragma: no cover

    @cached_property
    def _tables(self):
        if self.order > LOG_TABLE_LIMIT:
            return None
        n = self.order - 1
        g = self.primitive
        exp = [0] * (2 * n)
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._polymul(x, g)
        exp[n:] = exp[:n]
        return exp, log

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        t = self._tables
        if t is None:
            return self._polymul(a, b)
        exp, log = t
        return exp[log[a] + log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self}")
        t = self._tables
        if t is None:
            return self._slow_pow(a, self.order - 2)
        exp, log = t
        return exp[(self.order - 1 - log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    # -- vectorised arithmetic over numpy int arrays -----------------------
    @cached_property
    def _np_tables(self):
        t = self._tables
        if t is None:
            return None
        return np.array(t[0], dtype=np.int64), np.array(t[1], dtype=np.int64)

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.char == 2:
            return a ^ b
        p = self.char
        if self.order == p:
            return (a + b) % p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        scale = 1
        for _ in range(self._pdigits):
            out += ((a // scale + b // scale) % p) * scale
            scale *= p
        return out

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.order == self.char:
            return (a * b) % self.char
        t = self._np_tables
        if t is None:
            return np.vectorize(self.mul, otypes=[np.int64])(a, b)
        exp, log = t
        out = exp[log[a] + log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    # -- element helpers ---------------------------------------------------
    def element(self, value: int) -> FieldElement:
        return FieldElement(int(value), self)

    def elements(self) -> Iterator[FieldElement]:
        return (FieldElement(v, self) for v in range(self.order))

    def nonzero(self) -> range:
        return range(1, self.order)


class FieldSpec(_GaloisField):
    """GF(p^m) defined by a monic irreducible modulus over GF(p)."""

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        if not is_prime(p):
            raise NonPrimeP(f"{p} is not prime")
        if m < 1:
            raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
        if p**m > MAX_ORDER:
            raise SSWError(f"fields larger than 2^20 are not supported (q = {p}^{m})")
        modulus = tuple(modulus)
        if len(modulus) != m + 1:
            raise DegreeMismatch(f"modulus {modulus} does not have degree {m}")
        if any(not 0 <= x < p for x in modulus):
            raise SSWError(f"modulus coefficients must lie in [0, {p})")
        if modulus[-1] != 1:
            raise ReducibleModulus(f"modulus {modulus} is not monic")
        c = _PrimeCoeffs(p)
        if not _is_irreducible(modulus, c):
            raise ReducibleModulus(f"modulus {modulus} is reducible over GF({p})")
        super().__init__(c, modulus)
        self.p = p
        self.m = m
        self.q = self.order

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.m, self.modulus) == (
            other.p,
            other.m,
            other.modulus,
        )

    def __hash__(self):
        return hash(("GF", self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.m})"

    @property
    def label(self) -> str:
        return f"{self.p}^{self.m}"


class TowerSpec(_GaloisField):
    """Degree-l extension of a base field GF(q), elements as length-l vectors over GF(q)."""

    def __init__(self, base: FieldSpec, degree: int, modulus: Sequence[int]):
        if degree < 1:
            raise DegreeMismatch(f"tower degree must be >= 1, got {degree}")
        modulus = tuple(modulus)
        if len(modulus) != degree + 1:
            raise DegreeMismatch(f"modulus {modulus} does not have degree {degree}")
        if modulus[-1] != 1:
            raise ReducibleModulus(f"modulus {modulus} is not monic")
        coeffs = _BaseCoeffs(base)
        if not _is_irreducible(modulus, coeffs):
            raise ReducibleModulus(f"modulus {modulus} is reducible over {base}")
        super().__init__(coeffs, modulus)
        self.base = base
        self.ell = degree

    def embed(self, x) -> FieldElement:
        """Image of a base-field element as a constant polynomial."""
        if isinstance(x, FieldElement):
            if x.field != self.base:
                raise FieldMismatch(f"{x} is not an element of {self.base}")
            x = x.value
        self.base._check(x)
        return FieldElement(x, self)

    def __eq__(self, other):
        return isinstance(other, TowerSpec) and (self.base, self.ell, self.modulus) == (
            other.base,
            other.ell,
            other.modulus,
        )

    def __hash__(self):
        return hash(("tower", self.base, self.ell, self.modulus))

    def __repr__(self):
        return f"{self.base}[x]/({self.ell})"


class _BaseCoeffs:
    def __init__(self, base: FieldSpec):
        self.p = base.p
        self.order = base.q
        self.add = base.add
        self.sub = base.sub
        self.mul = base.mul
        self.inv = base.inv


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: _GaloisField

    def __post_init__(self):
        self.field._check(self.value)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{other.field} != {self.field}")
            return other.value
        if isinstance(other, int):
            self.field._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        return FieldElement(self.field.add(self.value, b), self.field)

    def __sub__(self, other):
        b = self._coerce(other)
        return FieldElement(self.field.sub(self.value, b), self.field)

    def __mul__(self, other):
        b = self._coerce(other)
        return FieldElement(self.field.mul(self.value, b), self.field)

    def __truediv__(self, other):
        b = self._coerce(other)
        return FieldElement(self.field.div(self.value, b), self.field)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field.neg(self.value), self.field)

    def __pow__(self, e: int):
        return FieldElement(self.field.pow(self.value, e), self.field)

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inv(self.value), self.field)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} in {self.field}"


@lru_cache(maxsize=None)
def _default_field(p: int, m: int) -> FieldSpec:
    return FieldSpec(p, m, _first_irreducible(_PrimeCoeffs(p), m))


def make_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build GF(p^m).

    Without an explicit modulus the first monic irreducible polynomial in
    order of integer encoding is used, so the same (p, m) always gives the
    same field.
    """
    if not is_prime(p):
        raise NonPrimeP(f"{p} is not prime")
    if m < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_ORDER:
        raise SSWError(f"fields larger than 2^20 are not supported (q = {p}^{m})")
    if modulus is None:
        return _default_field(p, m)
    return FieldSpec(p, m, modulus)


@lru_cache(maxsize=None)
def make_tower(base: FieldSpec, ell: int) -> TowerSpec:
    if ell < 1:
        raise DegreeMismatch(f"tower degree must be >= 1, got {ell}")
    if base.q**ell > MAX_ORDER:
        raise SSWError(f"tower GF({base.q}^{ell}) exceeds 2^20 elements")
    return TowerSpec(base, ell, _first_irreducible(_BaseCoeffs(base), ell))


def primitive_element(f: _GaloisField) -> FieldElement:
    return FieldElement(f.primitive, f)


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} != {b.field}")
    ops = {"add": a.field.add, "sub": a.field.sub, "mul": a.field.mul, "div": a.field.div}
    try:
        fn = ops[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return FieldElement(fn(a.value, b.value), a.field)


def prime_power(q: int) -> tuple[int, int]:
    """Decompose q = p^m; raises NonPrimeP if q is not a prime power."""
    if q < 2:
        raise NonPrimeP(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    m = 0
    while q % p == 0:
        q //= p
        m += 1
    if q != 1:
        raise NonPrimeP(f"{q * p**m} is not a prime power")
    return p, m


def parse_field(text: str) -> FieldSpec:
    """Parse ``p^m`` (or a bare prime power such as ``9``)."""
    s = text.strip()
    mo = re.fullmatch(r"(\d+)\s*\^\s*(\d+)", s)
    if mo:
        return make_field(int(mo.group(1)), int(mo.group(2)))
    if s.isdigit():
        return make_field(*prime_power(int(s)))
    raise SSWError(f"cannot parse field {text!r}; expected p^m")
