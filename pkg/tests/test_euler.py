"""Tests for the Euler-product constants B_q, K, xi and A."""

import math
from fractions import Fraction

import pytest
from sympy import primerange

from analytic.euler import (
    a_partial,
    artin_xi,
    b_q,
    cf_constant,
    constant_A,
    k_constant,
    l_factor_log,
)
from census.census import mnc_prime_power_indicator
from groups.errors import DomainError
from groups.partitions import Partition

ARTIN = 0.3739558136
L_ONE_MOD_3 = math.pi / (3 * math.sqrt(3))


class TestBq:
    def test_l_factor_mod_three(self):
        assert l_factor_log(3).value == pytest.approx(-0.5 * math.log(L_ONE_MOD_3), abs=1e-12)

    def test_b3_matches_direct_assembly(self):
        # Every p = 2 mod 3 has order 2, so the Euler factor is (1 - p^-2)^(-1/2)
        cutoff = 10**4
        euler = math.fsum(
            -0.5 * math.log1p(-(p**-2.0)) for p in primerange(2, cutoff + 1) if p % 3 == 2
        )
        log_b3 = (
            -0.5 * math.log(math.pi)
            + 0.5 * math.log(2 / 3)
            + euler
            - 0.5 * math.log(L_ONE_MOD_3)
        )
        assert b_q(3, cutoff).value == pytest.approx(math.exp(log_b3), rel=1e-12)

    @pytest.mark.parametrize("q", [3, 5, 7, 11, 13])
    def test_positive(self, q):
        value = b_q(q, 1000)
        assert value.value > 0
        assert value.err < value.value

    @pytest.mark.parametrize("q", [3, 5, 7])
    def test_two_cutoffs_agree_within_error(self, q):
        low, high = b_q(q, 10**4), b_q(q, 10**5)
        assert abs(low.value - high.value) <= low.err + high.err

    @pytest.mark.slow
    @pytest.mark.parametrize("q", [3, 5])
    def test_two_large_cutoffs_agree_within_error(self, q):
        low, high = b_q(q, 10**6), b_q(q, 10**7)
        assert abs(low.value - high.value) <= low.err + high.err

    def test_rejects_q_two_and_small_cutoff(self):
        with pytest.raises(DomainError, match="q = 2"):
            b_q(2, 1000)
        with pytest.raises(DomainError):
            b_q(3, 99)


class TestKConstant:
    def test_composition(self):
        base = b_q(3, 10**4).value
        assert k_constant(3, Partition(), 10**4).value == pytest.approx(base * 4 / 3, rel=1e-14)
        expected = base * 0.5 * 4 / 27
        assert k_constant(3, Partition.of(1, 1), 10**4).value == pytest.approx(expected, rel=1e-14)

    def test_positive_with_scaled_error(self):
        value = k_constant(5, Partition.of(2, 1), 10**4)
        base = b_q(5, 10**4)
        scale = float(Fraction(6, 5**4))
        assert value.value > 0
        assert value.err == pytest.approx(base.err * scale, rel=1e-3)


class TestArtinXi:
    def test_value_and_error(self):
        xi = artin_xi(10**6)
        assert xi.contains(ARTIN)
        assert xi.err < 1e-6

    def test_monotone_in_cutoff(self):
        assert artin_xi(1000).value > artin_xi(10**4).value > artin_xi(10**5).value

    def test_error_is_honest(self):
        low, high = artin_xi(10**4), artin_xi(10**6)
        assert abs(low.value - high.value) <= low.err

    def test_rejects_small_cutoff(self):
        with pytest.raises(DomainError):
            artin_xi(10)

    @pytest.mark.slow
    def test_large_cutoff(self):
        xi = artin_xi(10**9)
        assert abs(xi.value - ARTIN) <= 4e-9
        assert xi.err <= 4e-9
        assert abs(artin_xi(10**6).value - xi.value) <= artin_xi(10**6).err


class TestConstantA:
    def test_first_factor(self, sqfree_table):
        xi = ARTIN
        expected = (15 / 14) * (7 / 4) * 0.5**xi / math.gamma(xi)
        assert a_partial(2, sqfree_table, xi) == pytest.approx(expected, rel=1e-14)
        # 15/14 * 7/4 is the full local factor 1 + 1/2 + 1/4 + 1/8
        assert (15 / 14) * (7 / 4) == pytest.approx(1 + 1 / 2 + 1 / 4 + 1 / 8)

    def test_positive_with_heuristic_tail(self, sqfree_table):
        value = constant_A(10**5, sqfree_table, xi=artin_xi(10**6))
        assert value.value > 0
        assert value.heuristic_tail is not None
        assert value.heuristic_tail > 0
        assert value.err >= value.heuristic_tail
        assert value.rigorous_err > 0

    def test_matches_partial_product(self, sqfree_table):
        xi = artin_xi(10**6)
        value = constant_A(10**5, sqfree_table, xi=xi)
        assert value.value == pytest.approx(a_partial(10**5, sqfree_table, xi.value), rel=1e-10)

    def test_matches_generic_mean_value_constant(self, sqfree_table):
        xi = artin_xi(10**6)
        cutoff = 20_000

        def indicator(p, r):
            return float(mnc_prime_power_indicator(p, r, sqfree_table))

        generic = cf_constant(indicator, xi.value, cutoff)
        direct = a_partial(cutoff, sqfree_table, xi.value)
        assert generic.value == pytest.approx(direct, rel=1e-10)

    def test_table_too_small(self, sqfree_table):
        with pytest.raises(DomainError):
            constant_A(10**6, sqfree_table)

    @pytest.mark.slow
    def test_two_cutoffs_agree_within_tail(self):
        xi = artin_xi(10**8)
        low, high = constant_A(10**6, xi=xi), constant_A(10**7, xi=xi)
        assert abs(low.value - high.value) <= low.err


class TestCfConstant:
    def test_identity_function_gives_one(self):
        # f = 1 on every prime power: the local factor is 1/(1 - 1/p), cancelled by omega = 1
        value = cf_constant(lambda p, r: 1.0, 1.0, 1000)
        assert value.value == pytest.approx(1.0, rel=1e-12)

    def test_rejects_bad_arguments(self):
        with pytest.raises(DomainError):
            cf_constant(lambda p, r: 1.0, 0.0, 100)
        with pytest.raises(DomainError):
            cf_constant(lambda p, r: 1.0, 1.0, 1)
