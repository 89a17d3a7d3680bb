"""Generalized Ramanujan sums c_A(n, r) via three independent routes.

Route 1 (divisor form): sum over d in A(r) with d | n of d * mu_A(r/d).
Route 2 (core form): sum of classical c(n, d) over d | r divisible by the
core gamma_A(r). Route 3 is the literal exponential sum over residues k
with (k, r)_A = 1 -- floating point, test oracle only.

The partial-sum checker uses the closed form over A(r), which runs in
O(|A(r)|) instead of O(x).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from math import floor

from .arith import divisors, ramanujan_c
from .reports import PartialSumReport
from .systems import RegularSystem, _members, gamma_A, gcd_A, mu_A, phi_A, psi_A

__all__ = [
    "c_A_divisor",
    "c_A_core",
    "c_A_oracle",
    "partial_sum_cA",
    "CaTable",
]


@lru_cache(maxsize=None)
def _c_A_div_residue(system: RegularSystem, m: int, r: int) -> int:
    # every d in A(r) divides r, so d | n depends on n only through n mod r
    return sum(d * mu_A(system, r // d) for d in _members(system, r) if m % d == 0)


def c_A_divisor(system: RegularSystem, n: int, r: int) -> int:
    """c_A(n, r) by the divisor form; exact integer."""
    if n < 1 or r < 1:
        raise ValueError(f"c_A_divisor requires n, r >= 1, got n={n}, r={r}")
    return _c_A_div_residue(system, n % r, r)


def c_A_core(system: RegularSystem, n: int, r: int) -> int:
    """c_A(n, r) as a sum of classical Ramanujan sums over core multiples."""
    if n < 1 or r < 1:
        raise ValueError(f"c_A_core requires n, r >= 1, got n={n}, r={r}")
    g = gamma_A(system, r)
    return sum(ramanujan_c(n, d) for d in divisors(r) if d % g == 0)


@lru_cache(maxsize=None)
def _a_coprime_residues(system: RegularSystem, r: int) -> tuple[int, ...]:
    return tuple(k for k in range(1, r + 1) if gcd_A(system, k, r) == 1)


def c_A_oracle(system: RegularSystem, n: int, r: int) -> complex:
    """The defining exponential sum over k mod r with (k, r)_A = 1.

    O(r) floating point; test oracle only.
    """
    if n < 1 or r < 1:
        raise ValueError(f"c_A_oracle requires n, r >= 1, got n={n}, r={r}")
    total = 0j
    for k in _a_coprime_residues(system, r):
        total += cmath.exp(2j * cmath.pi * ((k * n) % r) / r)
    return total


def partial_sum_cA(system: RegularSystem, r: int, x) -> PartialSumReport:
    """Exact partial sum of c_A(., r) up to x with its certified bound psi_A(r).

    Closed form: sum_{d in A(r)} d * mu_A(r/d) * floor(x/d). Real x is
    floored first, which leaves every floor(x/d) unchanged.
    """
    if r < 1 or x < 1:
        raise ValueError(f"partial_sum_cA requires r >= 1, x >= 1, got r={r}, x={x}")
    big_x = floor(x)
    exact = sum(d * mu_A(system, r // d) * (big_x // d) for d in _members(system, r))
    main = big_x if r == 1 else 0
    bound = psi_A(system, r)
    return PartialSumReport(
        x=big_x,
        exact_sum=exact,
        main_term=main,
        residual=exact - main,
        certified_bound=bound,
        passed=abs(exact - main) <= bound,
    )


@dataclass(frozen=True)
class CaTable:
    """Dense table of c_A(n, r) for 1 <= n <= n_max, 1 <= r <= r_max."""

    system: RegularSystem
    n_max: int
    r_max: int
    values: tuple[tuple[int, ...], ...]  # values[n-1][r-1]

    @classmethod
    def build(cls, system: RegularSystem, n_max: int, r_max: int) -> "CaTable":
        values = tuple(
            tuple(c_A_divisor(system, n, r) for r in range(1, r_max + 1))
            for n in range(1, n_max + 1)
        )
        return cls(system, n_max, r_max, values)

    def at(self, n: int, r: int) -> int:
        return self.values[n - 1][r - 1]

    def verify_routes(self, tol: float = 1e-6) -> bool:
        """Cross-check every entry against the core form and the oracle."""
        for n in range(1, self.n_max + 1):
            for r in range(1, self.r_max + 1):
                v = self.at(n, r)
                if v != c_A_core(self.system, n, r):
                    return False
                z = c_A_oracle(self.system, n, r)
                if abs(z.imag) > tol or abs(z.real - v) > tol:
                    return False
        for r in range(1, min(self.n_max, self.r_max) + 1):
            if self.at(r, r) != phi_A(self.system, r):
                return False
        return True
