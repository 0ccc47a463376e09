"""Arithmetic in F_p and F_{p^t}.

Prime-field elements are plain ints in [0, p). Extension-field elements are
tuples of t ints, the coefficients of a polynomial of degree < t in the
polynomial basis (index j holds the coefficient of x^j). Both field classes
share the method names used by the symbolic engine: ``zero``, ``one``,
``add``, ``sub``, ``neg``, ``mul``, ``inv``, ``pow``, ``is_zero``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_upto(n: int) -> list[int]:
    """Primes p <= n (simple sieve)."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, ok in enumerate(sieve) if ok]


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def __call__(self, a: int) -> int:
        return a % self.p

    def elements(self):
        return range(self.p)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def scale(self, c: int, a: int) -> int:
        return c * a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def is_zero(self, a: int) -> bool:
        return a % self.p == 0


# --- dense polynomials over F_p, coefficient lists, low degree first ---


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m."""
    a = _poly_trim([c % p for c in a])
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1]
        shift = len(a) - 1 - dm
        for j, mj in enumerate(m):
            a[shift + j] = (a[shift + j] - c * mj) % p
        _poly_trim(a)
    return a


def _monic_polys(p: int, d: int):
    """All monic degree-d polynomials, lexicographic by (c_{d-1}, ..., c_0)."""
    for high_first in itertools.product(range(p), repeat=d):
        yield list(reversed(high_first)) + [1]


def is_irreducible(m: list[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= deg(m)/2."""
    d = len(m) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if m[0] % p == 0:
        return False
    for dd in range(1, d // 2 + 1):
        for f in _monic_polys(p, dd):
            if not _poly_mod(list(m), f, p):
                return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, t: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree t over F_p.

    Returned as coefficients low degree first, length t + 1. Candidates are
    ordered by their coefficient sequence read from x^{t-1} down to x^0.
    """
    for m in _monic_polys(p, t):
        if is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible polynomial found")  # cannot happen


@dataclass(frozen=True)
class ExtField:
    """F_{p^t} = F_p[x] / (modulus)."""

    p: int
    t: int
    modulus: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.t < 1:
            raise ValueError("extension degree must be >= 1")
        if not self.modulus:
            object.__setattr__(self, "modulus", smallest_irreducible(self.p, self.t))
        m = tuple(c % self.p for c in self.modulus)
        if len(m) != self.t + 1 or m[-1] != 1:
            raise ValueError("modulus must be monic of degree t")
        if not is_irreducible(list(m), self.p):
            raise ValueError(f"modulus {m} is reducible over F_{self.p}")
        object.__setattr__(self, "modulus", m)

    @property
    def order(self) -> int:
        return self.p**self.t

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * self.t

    @property
    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.t - 1)

    def __call__(self, coeffs) -> tuple[int, ...]:
        """Element from a coefficient sequence (reduced) or a base-field int."""
        if isinstance(coeffs, (int, np.integer)):
            coeffs = [int(coeffs)]
        r = _poly_mod(list(coeffs), list(self.modulus), self.p)
        return tuple(r + [0] * (self.t - len(r)))

    def from_int(self, n: int) -> tuple[int, ...]:
        """Element whose base-p digits are its coefficients; bijective on [0, p^t)."""
        out = []
        for _ in range(self.t):
            n, d = divmod(n, self.p)
            out.append(d)
        return tuple(out)

    def to_int(self, a) -> int:
        return sum(c * self.p**j for j, c in enumerate(a))

    def elements(self):
        return (self.from_int(n) for n in range(self.order))

    def embed(self, c: int) -> tuple[int, ...]:
        return (c % self.p,) + (0,) * (self.t - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def scale(self, c: int, a):
        """Base scalar times extension element."""
        return tuple(c * x % self.p for x in a)

    def mul(self, a, b):
        prod = [0] * (2 * self.t - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return self(prod)

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        # multiplicative group has order p^t - 1
        return self.pow(a, self.order - 2)

    def is_zero(self, a) -> bool:
        return not any(a)

    def project(self, a, i: int) -> int:
        """T_i: coefficient of x^{i-1} in the polynomial basis (1-based i)."""
        if not 1 <= i <= self.t:
            raise IndexError(f"projection index {i} outside [1, {self.t}]")
        return a[i - 1]

    def mul_matrix(self, a) -> np.ndarray:
        """The t x t matrix over F_p of z -> a*z acting on coefficient vectors."""
        cols = [self.mul(a, tuple(int(j == c) for j in range(self.t))) for c in range(self.t)]
        return np.array(cols, dtype=np.int64).T
