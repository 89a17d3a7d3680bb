"""Executable checkers for the exact identities: mean values of products of
generalized Ramanujan sums, orthogonality and its failure outside the
Dirichlet system, non-closure of A-even functions under addition, and the
truncated harmonic expansion of sigma(n)/n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Callable, Optional, Sequence

from .arith import _divisor_tuple, euler_phi, moebius_sieve, sigma
from .even import EvenFunction, certified_residual_bound, mean_value
from .gensums import c_A_divisor
from .reports import OrthogonalityReport, PartialSumReport
from .systems import (
    DIRICHLET_KIND,
    RegularSystem,
    divisor_set,
    gamma_A,
    gcd_A,
)

__all__ = [
    "mean_product_exact",
    "mean_product_empirical",
    "orthogonality_report",
    "find_orthogonality_violation",
    "is_A_even",
    "Prop4Witness",
    "additive_closure_witness",
    "ExpansionResult",
    "expansion_demo",
    "mean_value_check",
]


def mean_product_exact(system: RegularSystem, r: int, s: int) -> int:
    """Mean of c_A(., r) c_A(., s): sum of phi(d) over common divisors d
    divisible by both cores gamma_A(r) and gamma_A(s)."""
    if r < 1 or s < 1:
        raise ValueError(f"mean_product_exact requires r, s >= 1, got r={r}, s={s}")
    gr, gs = gamma_A(system, r), gamma_A(system, s)
    return sum(
        euler_phi(d) for d in _divisor_tuple(gcd(r, s)) if d % gr == 0 and d % gs == 0
    )


def mean_product_empirical(system: RegularSystem, r: int, s: int, x: int) -> Fraction:
    """(1/x) sum_{n<=x} c_A(n, r) c_A(n, s) as an exact rational.

    The product has period lcm(r, s); at x a multiple of it the average
    equals the exact mean."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    total = sum(c_A_divisor(system, n, r) * c_A_divisor(system, n, s) for n in range(1, x + 1))
    return Fraction(total, x)


def orthogonality_report(
    system: RegularSystem, r: int, s: int, x: Optional[int] = None
) -> OrthogonalityReport:
    """Exact and period-averaged mean of the product, with a verdict."""
    if x is None:
        x = lcm(r, s)
    exact = mean_product_exact(system, r, s)
    empirical = mean_product_empirical(system, r, s, x)
    if r == s:
        verdict = "diagonal"
    elif exact == 0:
        verdict = "orthogonal"
    else:
        verdict = "violating"
    return OrthogonalityReport(system.label(), r, s, exact, empirical, verdict)


def find_orthogonality_violation(
    system: RegularSystem, search_bound: int
) -> Optional[tuple[int, int, int]]:
    """Smallest pair r != s (by r + s, then r) with nonzero product mean."""
    for total in range(3, 2 * search_bound + 1):
        for r in range(1, min(total - 1, search_bound) + 1):
            s = total - r
            if s > search_bound or s == r:
                continue
            v = mean_product_exact(system, r, s)
            if v != 0:
                return (r, s, v)
    return None


def is_A_even(system: RegularSystem, h: Callable[[int], object], r: int, n_max: int) -> bool:
    """True iff h(n) = h((n, r)_A) for every n <= n_max."""
    if n_max < r:
        raise ValueError(f"n_max must be >= r, got n_max={n_max}, r={r}")
    return all(h(n) == h(gcd_A(system, n, r)) for n in range(1, n_max + 1))


@dataclass(frozen=True)
class Prop4Witness:
    """Two A-even functions whose sum is A-even for no modulus at all.

    f(n) = (n, p)_A and g(n) = (n, p^t)_A for a prime power of type t > 1;
    their sum takes the three case values below and cannot be A-even."""

    p: int
    t: int
    f: Callable[[int], int]
    g: Callable[[int], int]
    h: Callable[[int], int]
    case_values: tuple[int, int, int]  # h on p^t | n, on p | n only, on p coprime
    r_checked: int
    f_even: bool
    g_even: bool
    h_fails_all: bool
    core_contradiction: bool  # p absent from A(p^t), the structural obstruction


def _first_high_type_prime_power(
    system: RegularSystem, prime_bound: int = 100
) -> Optional[tuple[int, int]]:
    # smallest prime power p^a with type > 1, ordered by value
    if system.kind == DIRICHLET_KIND:
        return None
    candidates = []
    primes = [p for p in range(2, prime_bound + 1) if all(p % q for q in range(2, p))]
    for p in primes:
        for a in range(2, system.a_max + 1):
            if p**a > 2**system.a_max:
                break
            t = system.type_of(p, a)
            if t > 1:
                candidates.append((p**a, p, a))
                break
    if not candidates:
        return None
    _, p, a = min(candidates)
    return p, system.type_of(p, a)


def additive_closure_witness(
    system: RegularSystem, r_max: int = 100
) -> Optional[Prop4Witness]:
    """For a non-Dirichlet system, exhibit f, g A-even with f + g A-even for
    no modulus r <= r_max; None means not applicable (Dirichlet behaviour)."""
    found = _first_high_type_prime_power(system)
    if found is None:
        return None
    p, t = found
    pt = p**t

    def f(n: int) -> int:
        return p if n % p == 0 else 1

    def g(n: int) -> int:
        return pt if n % pt == 0 else 1

    def h(n: int) -> int:
        return f(n) + g(n)

    f_even = is_A_even(system, f, p, 4 * p)
    g_even = is_A_even(system, g, pt, 4 * pt)
    h_fails = all(
        not is_A_even(system, h, r, 4 * lcm(r, pt)) for r in range(1, r_max + 1)
    )
    contradiction = p not in divisor_set(system, pt).members
    return Prop4Witness(
        p=p,
        t=t,
        f=f,
        g=g,
        h=h,
        case_values=(p + pt, 1 + p, 2),
        r_checked=r_max,
        f_even=f_even,
        g_even=g_even,
        h_fails_all=h_fails,
        core_contradiction=contradiction,
    )


@dataclass(frozen=True)
class ExpansionResult:
    """Truncation of the harmonic expansion of sigma(n)/n."""

    n: int
    terms: int
    truncated_value: float
    target: float
    abs_error: float


@lru_cache(maxsize=8)
def _mu_over_square_prefix(limit: int) -> tuple[float, ...]:
    mu = moebius_sieve(limit)
    out = [0.0] * (limit + 1)
    acc = 0.0
    for m in range(1, limit + 1):
        if mu[m]:
            acc += mu[m] / (m * m)
        out[m] = acc
    return tuple(out)


def expansion_demo(n: int, terms: int) -> ExpansionResult:
    """(pi^2/6) sum_{r<=R} c(n, r)/r^2 against sigma(n)/n.

    Regrouped by the divisor form: sum_{r<=R} c(n,r)/r^2 =
    sum_{d|n} (1/d) sum_{m<=R/d} mu(m)/m^2, term for term the same
    truncation, evaluated from one prefix table."""
    if n < 1 or terms < 1:
        raise ValueError(f"expansion_demo requires n, terms >= 1, got n={n}, terms={terms}")
    prefix = _mu_over_square_prefix(terms)
    total = sum(prefix[terms // d] / d for d in _divisor_tuple(n))
    truncated = (math.pi**2 / 6) * total
    target = sigma(n) / n
    return ExpansionResult(n, terms, truncated, target, abs(truncated - target))


def mean_value_check(f: EvenFunction, x_list: Sequence[int]) -> list[PartialSumReport]:
    """Brute-force partial sums of f against M(f) x with the certified bound.

    The sum iterates every n <= x (tallying by gcd class so the exact
    arithmetic stays cheap); this is the oracle side, independent of the
    Fourier closed form in partial_sum_even."""
    from collections import Counter
    from .even import _exact

    reports = []
    bound = certified_residual_bound(f)
    mf = mean_value(f)
    for x in x_list:
        if x < 1:
            raise ValueError(f"x must be >= 1, got {x}")
        counts = Counter(gcd(n, f.r) for n in range(1, x + 1))
        exact = sum(_exact(f.value_map[d]) * c for d, c in counts.items())
        main = mf * x
        residual = exact - main
        reports.append(
            PartialSumReport(
                x=x,
                exact_sum=exact,
                main_term=main,
                residual=residual,
                certified_bound=bound,
                passed=abs(residual) <= bound,
            )
        )
    return reports
