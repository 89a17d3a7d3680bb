"""Regular systems of divisors and the multiplicative functions they induce.

A system assigns to each n a set A(n) of divisors of n, specified per prime
power by a "type" t dividing the exponent: A(p^a) = {1, p^t, p^2t, ..., p^a}.
Type 1 everywhere is the full divisor set (Dirichlet convolution), type a
everywhere gives the unitary divisors. Custom systems carry a finite type
table plus a default rule, bounded by an exponent cap so every invariant is
checkable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .arith import factorize

__all__ = [
    "RegularSystem",
    "DivisorSetA",
    "InvalidSystemError",
    "ExponentOutOfScopeError",
    "DIRICHLET",
    "UNITARY",
    "MIX",
    "DEFAULT_A_MAX",
    "validate",
    "divisor_set",
    "gcd_A",
    "convolve_A",
    "mu_A",
    "phi_A",
    "gamma_A",
    "psi_A",
    "system_from_dict",
    "load_system",
]

DEFAULT_A_MAX = 16

DIRICHLET_KIND = "dirichlet"
UNITARY_KIND = "unitary"
CUSTOM_KIND = "custom"


class InvalidSystemError(ValueError):
    """A system spec failed validation; .violations lists every offence."""

    def __init__(self, violations: Sequence[str]):
        super().__init__("invalid regular system: " + "; ".join(violations))
        self.violations = list(violations)


class ExponentOutOfScopeError(ValueError):
    """A custom system was asked about a prime power beyond its declared bound."""


@dataclass(frozen=True)
class RegularSystem:
    """A system of divisor sets, determined by its per-prime-power types."""

    kind: str
    types: tuple[tuple[int, int, int], ...] = ()  # (prime, exponent, type)
    default: str = "dirichlet-default"
    a_max: int = DEFAULT_A_MAX
    name: str = ""

    def type_of(self, p: int, a: int) -> int:
        """The type t of p^a: A(p^a) = {1, p^t, ..., p^a}."""
        if a < 1:
            raise ValueError(f"exponent must be >= 1, got {a}")
        if self.kind == DIRICHLET_KIND:
            return 1
        if self.kind == UNITARY_KIND:
            return a
        if a > self.a_max:
            raise ExponentOutOfScopeError(
                f"prime power {p}^{a} exceeds declared exponent bound {self.a_max}"
            )
        for tp, ta, tt in self.types:
            if tp == p and ta == a:
                return tt
        return a if self.default == "unitary-default" else 1

    def label(self) -> str:
        return self.name or self.kind


@dataclass(frozen=True)
class DivisorSetA:
    """The set A(n) for one system: an ordered subset of the divisors of n."""

    n: int
    members: tuple[int, ...]


DIRICHLET = RegularSystem(DIRICHLET_KIND, name="D")
UNITARY = RegularSystem(UNITARY_KIND, name="U")

# unitary behaviour at p = 2, Dirichlet everywhere else: the smallest
# built-in system outside {D, U}
MIX = RegularSystem(
    CUSTOM_KIND,
    types=tuple((2, a, a) for a in range(1, DEFAULT_A_MAX + 1)),
    default="dirichlet-default",
    name="MIX",
)


def validate(system: RegularSystem) -> list[str]:
    """Check the regularity conditions; empty list means ok.

    Reports every violation (type not dividing the exponent, broken chains)
    rather than stopping at the first.
    """
    if system.kind in (DIRICHLET_KIND, UNITARY_KIND):
        return []
    violations = []
    table = {}
    for p, a, t in system.types:
        if p < 2 or a < 1:
            violations.append(f"malformed entry (p={p}, a={a}, t={t})")
            continue
        if a > system.a_max:
            violations.append(
                f"entry exponent {a} at prime {p} exceeds declared bound {system.a_max}"
            )
            continue
        if t < 1 or a % t != 0:
            violations.append(f"type {t} does not divide exponent {a} at prime power {p}^{a}")
            continue
        if (p, a) in table and table[(p, a)] != t:
            violations.append(f"conflicting types for prime power {p}^{a}")
            continue
        table[(p, a)] = t
    if violations:
        return violations

    def lookup(p: int, a: int) -> int:
        if (p, a) in table:
            return table[(p, a)]
        return a if system.default == "unitary-default" else 1

    for p in sorted({p for p, _, _ in system.types}):
        for a in range(1, system.a_max + 1):
            t = lookup(p, a)
            for i in range(1, a // t + 1):
                if lookup(p, i * t) != t:
                    violations.append(
                        f"chain violation at p={p}: type {t} of {p}^{a} forces "
                        f"type {t} at {p}^{i * t}, found {lookup(p, i * t)}"
                    )
                    break
    return violations


@lru_cache(maxsize=None)
def _checked(system: RegularSystem) -> RegularSystem:
    violations = validate(system)
    if violations:
        raise InvalidSystemError(violations)
    return system


@lru_cache(maxsize=None)
def _members(system: RegularSystem, n: int) -> tuple[int, ...]:
    _checked(system)
    members = [1]
    for p, a in factorize(n):
        t = system.type_of(p, a)
        chain = [p ** (i * t) for i in range(a // t + 1)]
        members = [d * e for d in members for e in chain]
    return tuple(sorted(members))


def divisor_set(system: RegularSystem, n: int) -> DivisorSetA:
    """The set A(n), built per prime power and assembled multiplicatively."""
    if n < 1:
        raise ValueError(f"divisor_set requires n >= 1, got {n}")
    return DivisorSetA(n, _members(system, n))


@lru_cache(maxsize=None)
def _members_desc(system: RegularSystem, n: int) -> tuple[int, ...]:
    return tuple(reversed(_members(system, n)))


def gcd_A(system: RegularSystem, k: int, r: int) -> int:
    """The A-gcd (k, r)_A: the largest element of A(r) dividing k.

    k = 0 counts as divisible by everything, so (0, r)_A = r.
    """
    if r < 1 or k < 0:
        raise ValueError(f"gcd_A requires r >= 1, k >= 0, got k={k}, r={r}")
    if k == 0:
        return r
    for d in _members_desc(system, r):
        if k % d == 0:
            return d
    return 1  # unreachable: 1 is always a member


def convolve_A(
    system: RegularSystem,
    f: Callable[[int], int],
    g: Callable[[int], int],
    n_max: int,
) -> list:
    """The A-convolution (f *_A g)(n) = sum_{d in A(n)} f(d) g(n/d) on 1..n_max.

    Returns a list indexed by n (index 0 unused).
    """
    out = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        out[n] = sum(f(d) * g(n // d) for d in _members(system, n))
    return out


@lru_cache(maxsize=None)
def mu_A(system: RegularSystem, n: int) -> int:
    """Generalized Moebius function: -1 on A-primitive prime powers, 0 else."""
    if n < 1:
        raise ValueError(f"mu_A requires n >= 1, got {n}")
    _checked(system)
    out = 1
    for p, a in factorize(n):
        if system.type_of(p, a) != a:
            return 0
        out = -out
    return out


@lru_cache(maxsize=None)
def phi_A(system: RegularSystem, r: int) -> int:
    """Generalized Euler function: counts k mod r with (k, r)_A = 1."""
    if r < 1:
        raise ValueError(f"phi_A requires r >= 1, got {r}")
    _checked(system)
    out = 1
    for p, a in factorize(r):
        t = system.type_of(p, a)
        out *= p**a - p ** (a - t)
    return out


@lru_cache(maxsize=None)
def gamma_A(system: RegularSystem, r: int) -> int:
    """Generalized core function, multiplicative with p^a -> p^(a - t + 1)."""
    if r < 1:
        raise ValueError(f"gamma_A requires r >= 1, got {r}")
    _checked(system)
    out = 1
    for p, a in factorize(r):
        t = system.type_of(p, a)
        out *= p ** (a - t + 1)
    return out


@lru_cache(maxsize=None)
def psi_A(system: RegularSystem, r: int) -> int:
    """Generalized Dedekind function, multiplicative with p^a -> p^a + p^(a-t)."""
    if r < 1:
        raise ValueError(f"psi_A requires r >= 1, got {r}")
    _checked(system)
    out = 1
    for p, a in factorize(r):
        t = system.type_of(p, a)
        out *= p**a + p ** (a - t)
    return out


def system_from_dict(spec: dict, name: str = "") -> RegularSystem:
    """Build a system from its JSON-shaped dict; validates before returning."""
    kind = spec.get("kind", CUSTOM_KIND)
    if kind == DIRICHLET_KIND:
        return DIRICHLET
    if kind == UNITARY_KIND:
        return UNITARY
    if kind != CUSTOM_KIND:
        raise InvalidSystemError([f"unknown kind {kind!r}"])
    default = spec.get("default", "dirichlet-default")
    if default not in ("dirichlet-default", "unitary-default"):
        raise InvalidSystemError([f"unknown default rule {default!r}"])
    a_max = int(spec.get("a_max", DEFAULT_A_MAX))
    try:
        types = tuple(
            sorted((int(e["p"]), int(e["a"]), int(e["t"])) for e in spec.get("types", []))
        )
    except (KeyError, TypeError) as exc:
        raise InvalidSystemError([f"malformed types table: {exc}"]) from exc
    system = RegularSystem(CUSTOM_KIND, types=types, default=default, a_max=a_max, name=name)
    violations = validate(system)
    if violations:
        raise InvalidSystemError(violations)
    return system


def load_system(spec: str) -> RegularSystem:
    """Resolve a builtin name (D, U, MIX) or load a JSON spec file."""
    builtin = {"D": DIRICHLET, "U": UNITARY, "MIX": MIX}
    if spec in builtin:
        return builtin[spec]
    try:
        with open(spec) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InvalidSystemError([f"cannot read system spec {spec!r}: {exc}"]) from exc
    except json.JSONDecodeError as exc:
        raise InvalidSystemError([f"system spec {spec!r} is not valid JSON: {exc}"]) from exc
    return system_from_dict(data, name=spec)
