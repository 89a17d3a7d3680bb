"""Exact elementary arithmetic functions and classical Ramanujan sums.

Everything here is plain integer arithmetic (Python ints, so no overflow);
the one exception is the exponential-sum oracle, which is a floating-point
cross-check and nothing else. Intended input range is desk scale, n <= 10**9.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

__all__ = [
    "Factorization",
    "factorize",
    "divisors",
    "euler_phi",
    "sigma",
    "tau",
    "moebius",
    "dedekind_psi",
    "moebius_sieve",
    "ramanujan_c",
    "ramanujan_c_oracle",
]


def _prime_sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [p for p in range(limit + 1) if flags[p]]


_SMALL_PRIMES = _prime_sieve(1000)


@dataclass(frozen=True)
class Factorization:
    """Canonical prime-power decomposition: primes strictly increasing."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.factors)


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Factor n >= 1 by trial division."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    m = n
    factors = []
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            factors.append((p, a))
    if m > 1 and m > _SMALL_PRIMES[-1] ** 2:
        # continue past the small-prime table
        p = _SMALL_PRIMES[-1] + 2
        while p * p <= m:
            if m % p == 0:
                a = 0
                while m % p == 0:
                    m //= p
                    a += 1
                factors.append((p, a))
            p += 2
    if m > 1:
        factors.append((m, 1))
    factors.sort()
    return Factorization(n, tuple(factors))


@lru_cache(maxsize=None)
def _divisor_tuple(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, a in factorize(n):
        divs = [d * p**i for d in divs for i in range(a + 1)]
    return tuple(sorted(divs))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, strictly increasing."""
    return list(_divisor_tuple(n))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Euler totient, multiplicative with phi(p^a) = p^a - p^(a-1)."""
    out = 1
    for p, a in factorize(n):
        out *= p**a - p ** (a - 1)
    return out


@lru_cache(maxsize=None)
def sigma(n: int) -> int:
    """Sum of the positive divisors of n."""
    out = 1
    for p, a in factorize(n):
        out *= (p ** (a + 1) - 1) // (p - 1)
    return out


def tau(n: int) -> int:
    """Number of positive divisors of n."""
    out = 1
    for _, a in factorize(n):
        out *= a + 1
    return out


@lru_cache(maxsize=None)
def moebius(n: int) -> int:
    """Moebius function: (-1)^k on squarefree n with k prime factors, else 0."""
    out = 1
    for _, a in factorize(n):
        if a >= 2:
            return 0
        out = -out
    return out


@lru_cache(maxsize=None)
def dedekind_psi(n: int) -> int:
    """Dedekind psi, multiplicative with psi(p^a) = p^a + p^(a-1)."""
    out = 1
    for p, a in factorize(n):
        out *= p**a + p ** (a - 1)
    return out


def moebius_sieve(limit: int) -> list[int]:
    """Moebius values mu[0..limit] by a linear-style sieve (mu[0] unused)."""
    mu = [0] * (limit + 1)
    if limit >= 1:
        mu[1] = 1
    primes: list[int] = []
    is_comp = bytearray(limit + 1)
    for i in range(2, limit + 1):
        if not is_comp[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if i * p > limit:
                break
            is_comp[i * p] = 1
            if i % p == 0:
                mu[i * p] = 0
                break
            mu[i * p] = -mu[i]
    return mu


@lru_cache(maxsize=None)
def _ramanujan_c_at_gcd(g: int, r: int) -> int:
    # divisor form over d | g = gcd(n, r); every such d divides r
    return sum(d * moebius(r // d) for d in _divisor_tuple(g))


def ramanujan_c(n: int, r: int) -> int:
    """Classical Ramanujan sum c(n, r) = sum_{d | gcd(n,r)} d * mu(r/d)."""
    if n < 1 or r < 1:
        raise ValueError(f"ramanujan_c requires n, r >= 1, got n={n}, r={r}")
    return _ramanujan_c_at_gcd(gcd(n, r), r)


def ramanujan_c_oracle(n: int, r: int) -> complex:
    """c(n, r) as the literal sum of n-th powers of primitive r-th roots of unity.

    O(r) floating point; test oracle only.
    """
    if n < 1 or r < 1:
        raise ValueError(f"ramanujan_c_oracle requires n, r >= 1, got n={n}, r={r}")
    total = 0j
    for k in range(1, r + 1):
        if gcd(k, r) == 1:
            total += cmath.exp(2j * cmath.pi * ((k * n) % r) / r)
    return total
