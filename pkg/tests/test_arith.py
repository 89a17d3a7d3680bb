import cmath
from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramlab.arith import (
    Factorization,
    divisors,
    euler_phi,
    factorize,
    dedekind_psi,
    moebius,
    moebius_sieve,
    ramanujan_c,
    ramanujan_c_oracle,
    sigma,
    tau,
)


class TestFactorize:
    def test_one(self):
        assert factorize(1) == Factorization(1, ())

    def test_twelve(self):
        assert factorize(12).factors == ((2, 2), (3, 1))

    def test_prime(self):
        assert factorize(97).factors == ((97, 1),)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            factorize(0)

    def test_large_prime_factor(self):
        # forces the trial-division continuation past the small-prime table
        assert factorize(2 * 1009 * 1013).factors == ((2, 1), (1009, 1), (1013, 1))

    @given(st.integers(min_value=1, max_value=10**9))
    @settings(max_examples=100, deadline=None)
    def test_reconstructs(self, n):
        f = factorize(n)
        prod = 1
        prev = 0
        for p, a in f.factors:
            assert p > prev and a >= 1
            prod *= p**a
            prev = p
        assert prod == n


class TestDivisors:
    @pytest.mark.parametrize(
        "n,expected",
        [(1, [1]), (6, [1, 2, 3, 6]), (12, [1, 2, 3, 4, 6, 12])],
    )
    def test_examples(self, n, expected):
        assert divisors(n) == expected

    @given(st.integers(min_value=1, max_value=5000))
    @settings(max_examples=50, deadline=None)
    def test_matches_definition(self, n):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


class TestClassicalFunctions:
    def test_examples(self):
        assert euler_phi(1) == 1
        assert euler_phi(4) == 2
        assert euler_phi(12) == sum(1 for k in range(1, 13) if gcd(k, 12) == 1) == 4
        assert (sigma(6), tau(6), moebius(6)) == (12, 4, 1)
        assert (sigma(1), tau(1), moebius(1)) == (1, 1, 1)
        assert moebius(12) == 0
        assert dedekind_psi(4) == 6

    def test_direct_enumeration_small(self):
        for n in range(1, 2001):
            divs = [d for d in range(1, n + 1) if n % d == 0]
            assert sigma(n) == sum(divs)
            assert tau(n) == len(divs)
            assert euler_phi(n) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)

    def test_sieve_oracle_10k(self):
        limit = 10**4
        sig = [0] * (limit + 1)
        cnt = [0] * (limit + 1)
        for d in range(1, limit + 1):
            for m in range(d, limit + 1, d):
                sig[m] += d
                cnt[m] += 1
        for n in range(1, limit + 1):
            assert sigma(n) == sig[n]
            assert tau(n) == cnt[n]

    def test_moebius_sieve_matches(self):
        mu = moebius_sieve(10**4)
        for n in range(1, 10**4 + 1):
            assert mu[n] == moebius(n)

    @given(
        st.integers(min_value=1, max_value=400),
        st.integers(min_value=1, max_value=400),
    )
    @settings(max_examples=200, deadline=None)
    def test_multiplicative(self, m, n):
        if gcd(m, n) != 1:
            return
        for f in (euler_phi, sigma, tau, moebius, dedekind_psi):
            assert f(m * n) == f(m) * f(n)


class TestRamanujanC:
    def test_parity_mod_2(self):
        for n in range(1, 20):
            assert ramanujan_c(n, 2) == (1 if n % 2 == 0 else -1)

    def test_examples(self):
        assert ramanujan_c(1, 1) == 1
        assert ramanujan_c(2, 4) == -2

    def test_oracle_examples(self):
        assert ramanujan_c_oracle(1, 1) == pytest.approx(1 + 0j)
        assert ramanujan_c_oracle(2, 4) == pytest.approx(-2 + 0j, abs=1e-9)
        for n in range(1, 10):
            expected = 2 * cmath.cos(2 * cmath.pi * n / 3).real
            assert ramanujan_c_oracle(n, 3).real == pytest.approx(expected, abs=1e-9)
            assert abs(ramanujan_c_oracle(n, 3).imag) < 1e-9

    def test_against_oracle_to_500(self):
        # exponential sum per residue class, vectorized; |error| <= 1e-6
        for r in range(1, 501):
            ks = np.array([k for k in range(1, r + 1) if gcd(k, r) == 1])
            m = np.arange(r)
            z = np.exp(2j * np.pi * np.outer(m, ks) / r).sum(axis=1)
            assert np.abs(z.imag).max() <= 1e-6
            for n in range(1, 501):
                assert abs(ramanujan_c(n, r) - z[n % r].real) <= 1e-6

    def test_special_values_10k(self):
        for r in range(1, 10**4 + 1):
            assert ramanujan_c(r, r) == euler_phi(r)
            assert ramanujan_c(1, r) == moebius(r)

    def test_multiplicative_in_r(self):
        for n in range(1, 201, 7):
            for r in range(1, 201, 3):
                for s in range(1, 201, 5):
                    if gcd(r, s) == 1:
                        assert ramanujan_c(n, r * s) == ramanujan_c(n, r) * ramanujan_c(n, s)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            ramanujan_c(0, 5)
        with pytest.raises(ValueError):
            ramanujan_c_oracle(5, 0)
