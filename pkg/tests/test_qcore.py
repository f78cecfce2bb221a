"""q-numbers, Euler numbers/polynomials, Bernstein basis: examples and invariants."""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import comb

import pytest

from qeuler.exactfield import ONE, Q, ZERO, RationalFunction
from qeuler.qcore import (
    BernsteinIndex,
    QEulerTable,
    bernstein,
    classical_euler,
    q_euler_number,
    q_euler_number_closed,
    q_euler_polynomial,
    q_number,
    reflect_power,
)


def rf(num, den=1):
    return RationalFunction(num, den)


class TestQNumber:
    def test_zero(self):
        assert q_number(0) == ZERO

    def test_two(self):
        assert q_number(2) == rf([1, 1])

    def test_negative_one(self):
        # (1 - q^-1)/(1 - q) cleared: -1/q
        assert q_number(-1) == rf(-1, [0, 1])

    def test_minus_q_base(self):
        # (1 - (-q)^3)/(1 + q) = (1 + q^3)/(1 + q)
        assert q_number(3, "-q") == rf([1, 0, 0, 1], [1, 1])

    def test_inverse_base_matches_substitution(self):
        for x in range(-3, 5):
            assert q_number(x, "1/q") == q_number(x, "q").subst_inverse()

    def test_partition_base_case(self):
        for x in range(-5, 6):
            assert q_number(x, "q") + q_number(1 - x, "1/q") == ONE

    def test_classical_limit(self):
        for x in range(-5, 6):
            assert q_number(x, "q").evaluate(1) == x


class TestClassicalEuler:
    def test_first_values(self):
        assert classical_euler(0) == 1
        assert classical_euler(1) == Fraction(-1, 2)
        assert classical_euler(2) == 0
        assert classical_euler(3) == Fraction(1, 4)

    def test_recurrence_restated(self):
        # 2 E_n = -sum_{l<n} C(n,l) E_l
        for n in range(1, 15):
            lhs = 2 * classical_euler(n)
            rhs = -sum(comb(n, l) * classical_euler(l) for l in range(n))
            assert lhs == rhs


class TestQEulerNumbers:
    def test_base_cases(self):
        assert q_euler_number(0) == ONE
        assert q_euler_number(1) == rf([0, -1], [1, 0, 1])

    def test_xi2_from_hand_recurrence(self):
        # (1 + q^3) xi_2 = -(q xi_0 + 2 q^2 xi_1) = q(q^2 - 1)/(1 + q^2)
        expected = rf([0, -1, 0, 1]) / (rf([1, 0, 1]) * rf([1, 0, 0, 1]))
        assert q_euler_number(2) == expected

    def test_recurrence_matches_closed_form(self):
        for n in range(13):
            assert q_euler_number(n) == q_euler_number_closed(n)

    def test_closed_form_is_pole_free_at_one(self):
        for n in range(13):
            assert q_euler_number(n).evaluate(1) == classical_euler(n)

    def test_self_duality_of_xi1(self):
        assert q_euler_number(1).subst_inverse() == q_euler_number(1)

    def test_table_invariant_rederivable(self):
        table = QEulerTable()
        table[8]
        entries = table.entries
        assert entries[0] == ONE
        for n in range(1, 9):
            acc = ZERO
            for l in range(n):
                acc = acc + comb(n, l) * Q ** (l + 1) * entries[l]
            assert (ONE + Q ** (n + 1)) * entries[n] == -acc

    def test_table_rejects_negative(self):
        with pytest.raises(ValueError):
            QEulerTable()[-1]

    def test_table_is_thread_safe(self):
        table = QEulerTable()
        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(lambda n: table[n], [10] * 16))
        assert all(r == q_euler_number(10) for r in results)


class TestQEulerPolynomials:
    def test_x_zero_collapses(self):
        for n in range(8):
            assert q_euler_polynomial(n, 0) == q_euler_number(n)

    def test_n1_x2(self):
        # [2]_q + q^2 xi_1 = (1 + q + q^2)/(1 + q^2)
        assert q_euler_polynomial(1, 2) == rf([1, 1, 1], [1, 0, 1])

    def test_n1_x_negative_one(self):
        # [-1]_q + q^-1 xi_1 = -(1 + q + q^2)/(q (1 + q^2))
        assert q_euler_polynomial(1, -1) == rf([-1, -1, -1], [0, 1, 0, 1])

    def test_boundary_umbral_identity(self):
        # the recurrence forces q xi_n(1) + xi_n = 0 for n >= 1
        for n in range(1, 16):
            assert Q * q_euler_polynomial(n, 1) + q_euler_number(n) == ZERO


class TestBernstein:
    def test_index_validation(self):
        with pytest.raises(ValueError):
            BernsteinIndex(3, 2)
        with pytest.raises(ValueError):
            BernsteinIndex(-1, 2)

    def test_degenerate_cases(self):
        assert bernstein(BernsteinIndex(0, 0), 5) == ONE
        for n in range(5):
            for x in range(-2, 4):
                assert bernstein(BernsteinIndex(n, n), x) == q_number(x) ** n

    def test_hand_value(self):
        # C(2,1) [2]_q [-1]_{1/q} = 2 (1+q) (-q)
        assert bernstein(BernsteinIndex(1, 2), 2) == rf([0, -2, -2])

    def test_partition_of_unity(self):
        for n in range(11):
            for x in range(-3, 5):
                total = ZERO
                for k in range(n + 1):
                    total = total + bernstein(BernsteinIndex(k, n), x)
                assert total == ONE, (n, x)


class TestReflectPower:
    def test_examples(self):
        assert reflect_power(1, 1) == (ZERO, ZERO)
        assert reflect_power(1, 0) == (ONE, ONE)
        assert reflect_power(2, 2) == (Q**2, Q**2)

    def test_components_agree(self):
        for n in range(11):
            for x in range(-3, 5):
                lhs, rhs = reflect_power(n, x)
                assert lhs == rhs, (n, x)
