"""Arithmetic in the prime field F_p and the small 2x2 linear algebra
used by the congruence and classification machinery.

Scalars are plain ints reduced into [0, p); matrices are 2x2 int tuples.
Only desk-scale primes are accepted (see SUPPORTED_PRIMES).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Tuple

SUPPORTED_PRIMES = (2, 3, 5, 7, 11)

Mat2Entries = Tuple[Tuple[int, int], Tuple[int, int]]


class UnsupportedPrimeError(ValueError):
    """Raised for primes outside the desk-scale range."""


def check_prime(p: int) -> int:
    if p not in SUPPORTED_PRIMES:
        raise UnsupportedPrimeError(
            f"p={p} is not supported (desk-scale primes: {SUPPORTED_PRIMES})"
        )
    return p


@dataclass(frozen=True)
class FpScalar:
    """An element of F_p, always stored reduced into [0, p)."""

    value: int
    p: int

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def __add__(self, other: "FpScalar") -> "FpScalar":
        return FpScalar(self.value + _val(other), self.p)

    def __sub__(self, other: "FpScalar") -> "FpScalar":
        return FpScalar(self.value - _val(other), self.p)

    def __mul__(self, other: "FpScalar") -> "FpScalar":
        return FpScalar(self.value * _val(other), self.p)

    def __neg__(self) -> "FpScalar":
        return FpScalar(-self.value, self.p)

    def inverse(self) -> "FpScalar":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return FpScalar(pow(self.value, -1, self.p), self.p)

    def is_zero(self) -> bool:
        return self.value == 0

    def __int__(self) -> int:
        return self.value


def _val(x) -> int:
    return x.value if isinstance(x, FpScalar) else int(x)


@lru_cache(maxsize=None)
def squares(p: int) -> frozenset:
    """The set F_p^2 = (F_p^*)^2 with 0 included among the squares."""
    check_prime(p)
    return frozenset((x * x) % p for x in range(p))


def is_square(x, p: int | None = None) -> bool:
    """True iff x lies in (F_p^*)^2 or x = 0."""
    if isinstance(x, FpScalar):
        return x.value % x.p in squares(x.p)
    if p is None:
        raise TypeError("is_square(int, p) requires the modulus")
    return x % p in squares(p)


@lru_cache(maxsize=None)
def eta(p: int) -> int:
    """The least positive quadratic non-residue mod p (fixed transversal
    choice: {1, eta} represents F_p^*/(F_p^*)^2).  Undefined for p = 2."""
    check_prime(p)
    if p == 2:
        raise ValueError("every element of F_2 is a square; eta(2) is undefined")
    sq = squares(p)
    for x in range(2, p):
        if x not in sq:
            return x
    raise AssertionError("unreachable: odd p has a non-residue")


def square_class(x: int, p: int) -> int:
    """Return 1 or eta(p) for nonzero x according to its square class."""
    if x % p == 0:
        raise ValueError("square_class of 0 is undefined")
    return 1 if is_square(x, p) else eta(p)


# ---------------------------------------------------------------------------
# 2x2 matrices


@dataclass(frozen=True)
class Mat2:
    """A 2x2 matrix over F_p (entries stored reduced)."""

    entries: Mat2Entries
    p: int

    def __post_init__(self):
        check_prime(self.p)
        e = tuple(tuple(v % self.p for v in row) for row in self.entries)
        if len(e) != 2 or any(len(r) != 2 for r in e):
            raise ValueError("Mat2 requires a 2x2 entry array")
        object.__setattr__(self, "entries", e)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def det(self) -> int:
        a, b = self.entries[0]
        c, d = self.entries[1]
        return (a * d - b * c) % self.p

    def is_invertible(self) -> bool:
        return self.det() != 0

    def rank(self) -> int:
        if self.det() != 0:
            return 2
        return 0 if all(v == 0 for row in self.entries for v in row) else 1

    def mul(self, other: "Mat2") -> "Mat2":
        p = self.p
        (a, b), (c, d) = self.entries
        (e, f), (g, h) = other.entries
        return Mat2(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)), p)

    __matmul__ = mul

    def transpose(self) -> "Mat2":
        (a, b), (c, d) = self.entries
        return Mat2(((a, c), (b, d)), self.p)

    def inverse(self) -> "Mat2":
        d = self.det()
        if d == 0:
            raise ZeroDivisionError("singular matrix")
        dinv = pow(d, -1, self.p)
        (a, b), (c, d2) = self.entries
        return Mat2(((d2 * dinv, -b * dinv), (-c * dinv, a * dinv)), self.p)

    def scale(self, s: int) -> "Mat2":
        return Mat2(tuple(tuple(s * v for v in row) for row in self.entries), self.p)

    def apply(self, v: "Vec2") -> "Vec2":
        (a, b), (c, d) = self.entries
        x, y = v.entries
        return Vec2((a * x + b * y, c * x + d * y), self.p)

    @staticmethod
    def identity(p: int) -> "Mat2":
        return Mat2(((1, 0), (0, 1)), p)

    @staticmethod
    def zero(p: int) -> "Mat2":
        return Mat2(((0, 0), (0, 0)), p)

    @staticmethod
    def diag(a: int, b: int, p: int) -> "Mat2":
        return Mat2(((a, 0), (0, b)), p)


@dataclass(frozen=True)
class Vec2:
    """A length-2 column vector over F_p."""

    entries: Tuple[int, int]
    p: int

    def __post_init__(self):
        check_prime(self.p)
        e = tuple(v % self.p for v in self.entries)
        if len(e) != 2:
            raise ValueError("Vec2 requires 2 entries")
        object.__setattr__(self, "entries", e)

    def __getitem__(self, i):
        return self.entries[i]

    def is_zero(self) -> bool:
        return self.entries == (0, 0)


def all_mat2(p: int) -> Iterator[Mat2]:
    """Every 2x2 matrix over F_p, in lexicographic entry order."""
    check_prime(p)
    for a, b, c, d in itertools.product(range(p), repeat=4):
        yield Mat2(((a, b), (c, d)), p)


@lru_cache(maxsize=None)
def gl2_enumerate(p: int) -> tuple:
    """All invertible 2x2 matrices over F_p; |GL_2(F_p)| = (p^2-1)(p^2-p)."""
    return tuple(m for m in all_mat2(p) if m.is_invertible())


def gl2_order(p: int) -> int:
    return (p * p - 1) * (p * p - p)
