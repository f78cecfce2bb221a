"""Truncated fermionic q-integrals: exact sums, valuations, closed forms."""

from fractions import Fraction
from math import comb, inf

import pytest

from qeuler.exactfield import ONE, Q, ZERO, PoleError, RationalFunction
from qeuler.padic import (
    BernsteinProduct,
    IntegrandSpec,
    PadicContext,
    ShiftedPower,
    UnsupportedSpecError,
    closed_form_of,
    padic_valuation,
    probe_convergence,
    truncated_integral,
)
from qeuler.qcore import BernsteinIndex, q_euler_number, q_euler_polynomial


def ctx34(max_n=4):
    return PadicContext(p=3, q0=Fraction(4), max_n=max_n)


def power_spec(n, a=0, base="q", reflected=False, measure="q"):
    return IntegrandSpec(ShiftedPower(a=a, n=n, base=base, reflected=reflected), measure)


class TestValuation:
    def test_examples(self):
        assert padic_valuation(Fraction(9, 2), 3) == 2
        assert padic_valuation(Fraction(1, 3), 3) == -1
        assert padic_valuation(Fraction(1344, 221), 3) == 1

    def test_zero_is_infinite(self):
        assert padic_valuation(0, 3) == inf

    def test_integer_inputs(self):
        assert padic_valuation(50, 5) == 2

    def test_requires_prime(self):
        with pytest.raises(ValueError):
            padic_valuation(Fraction(1), 6)


class TestContext:
    def test_valid(self):
        ctx = ctx34()
        assert ctx.p == 3 and ctx.q0 == 4

    def test_rejects_two(self):
        with pytest.raises(ValueError):
            PadicContext(p=2, q0=Fraction(3), max_n=3)

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            PadicContext(p=9, q0=Fraction(10), max_n=3)

    def test_rejects_non_unit_q0(self):
        with pytest.raises(ValueError):
            PadicContext(p=3, q0=Fraction(3), max_n=3)

    def test_rejects_q0_far_from_one(self):
        # v_3(1 - 5) = 0
        with pytest.raises(ValueError):
            PadicContext(p=3, q0=Fraction(5), max_n=3)

    def test_rejects_infeasible_enumeration(self):
        with pytest.raises(ValueError):
            PadicContext(p=3, q0=Fraction(4), max_n=20)


class TestTruncatedIntegral:
    def test_constant_integrand_is_exact(self):
        ctx = ctx34()
        for n in range(1, ctx.max_n + 1):
            assert truncated_integral(power_spec(0), ctx, n) == 1

    def test_hand_enumeration_n1(self):
        # ( [0] + [1](-4) + [2](16) ) / [3]_{-4} = (0 - 4 + 80) / 13
        assert truncated_integral(power_spec(1), ctx34(), 1) == Fraction(76, 13)

    def test_limit_target(self):
        # S_N approaches xi_1(4) = -4/17 3-adically
        ctx = ctx34(5)
        target = q_euler_number(1).evaluate(4)
        assert target == Fraction(-4, 17)
        for n in range(1, 6):
            v = padic_valuation(truncated_integral(power_spec(1), ctx, n) - target, 3)
            assert v >= n

    def test_level_bounds(self):
        with pytest.raises(ValueError):
            truncated_integral(power_spec(1), ctx34(2), 3)
        with pytest.raises(ValueError):
            truncated_integral(power_spec(1), ctx34(2), 0)

    def test_matches_brute_force(self):
        # direct evaluation of every integrand family against its stream
        ctx = PadicContext(p=3, q0=Fraction(7, 4), max_n=2)
        q0 = ctx.q0

        def bracket(a, c):
            return Fraction(a) if c == 1 else (1 - c**a) / (1 - c)

        specs = [
            power_spec(2, a=1),
            power_spec(2, a=-1, base="1/q"),
            power_spec(3, a=0, base="1/q", reflected=True),
            power_spec(2, a=2, base="q", reflected=True, measure="1/q"),
            IntegrandSpec(BernsteinProduct((BernsteinIndex(1, 2), BernsteinIndex(2, 3))), "q"),
        ]
        for spec in specs:
            kind = spec.kind
            b = q0 if spec.measure_base == "q" else 1 / q0
            for n in range(1, 3):
                total = Fraction(0)
                for x in range(3**n):
                    if isinstance(kind, ShiftedPower):
                        c = q0 if kind.base == "q" else 1 / q0
                        if kind.reflected and spec.measure_base == "q":
                            arg = 1 - x + kind.a
                        elif kind.reflected:
                            arg = 1 - kind.a + x
                        else:
                            arg = x + kind.a
                        fx = bracket(arg, c) ** kind.n
                    else:
                        fx = Fraction(1)
                        for f in kind.factors:
                            fx *= (
                                comb(f.n, f.k)
                                * bracket(x, q0) ** f.k
                                * bracket(1 - x, 1 / q0) ** (f.n - f.k)
                            )
                    total += fx * (-b) ** x
                normalizer = (1 - (-b) ** (3**n)) / (1 + b)
                assert truncated_integral(spec, ctx, n) == total / normalizer


def test_measure_normalizer_identity():
    # [p^N]_{-q} = (1 + q^(p^N))/(1 + q) for odd p
    for p in (3, 5):
        for q0 in (Fraction(4), Fraction(7, 3)):
            for n in range(1, 4):
                m = p**n
                assert (1 - (-q0) ** m) / (1 + q0) == (1 + q0**m) / (1 + q0)


class TestClosedForm:
    def test_witt_moment_at_zero(self):
        for n in range(6):
            assert closed_form_of(power_spec(n)) == q_euler_number(n)

    def test_witt_moment_shifted(self):
        for n in range(4):
            for a in (-2, 1, 3):
                assert closed_form_of(power_spec(n, a=a)) == q_euler_polynomial(n, a)

    def test_reflected_measure_q(self):
        # n = 1: xi_0 - xi_1 = 1 + q/(1+q^2)
        value = closed_form_of(power_spec(1, base="1/q", reflected=True))
        assert value == ONE + Q / (ONE + Q**2)

    def test_bernstein_product(self):
        spec = IntegrandSpec(
            BernsteinProduct((BernsteinIndex(1, 2), BernsteinIndex(1, 2))), "q"
        )
        expected = ZERO
        for l in range(3):
            sign = -1 if l & 1 else 1
            expected = expected + 4 * sign * comb(2, l) * q_euler_number(l + 2)
        assert closed_form_of(spec) == expected

    def test_unsupported_combinations(self):
        with pytest.raises(UnsupportedSpecError):
            closed_form_of(power_spec(2, base="q", reflected=True))
        with pytest.raises(UnsupportedSpecError):
            closed_form_of(power_spec(2, base="1/q", reflected=False))
        with pytest.raises(UnsupportedSpecError):
            closed_form_of(power_spec(2, measure="1/q"))
        with pytest.raises(UnsupportedSpecError):
            closed_form_of(
                IntegrandSpec(
                    BernsteinProduct((BernsteinIndex(1, 2), BernsteinIndex(2, 3))), "q"
                )
            )
        with pytest.raises(UnsupportedSpecError):
            closed_form_of(
                IntegrandSpec(BernsteinProduct((BernsteinIndex(1, 2),)), "1/q")
            )


class TestProbe:
    def test_constant_residuals_are_infinite(self):
        probe = probe_convergence(power_spec(0), ctx34())
        assert all(v == inf for _, v in probe.residual_valuations)
        assert [s for _, s in probe.partials] == [1, 1, 1, 1]

    def test_spec_example_n1(self):
        probe = probe_convergence(power_spec(1), ctx34())
        assert probe.partials[0] == (1, Fraction(76, 13))
        assert probe.residual_valuations[0] == (1, 1)

    def test_monotone_and_at_least_n(self):
        for p, q0, max_n in ((3, 4, 5), (5, 6, 4)):
            ctx = PadicContext(p=p, q0=Fraction(q0), max_n=max_n)
            for n in range(6):
                probe = probe_convergence(power_spec(n), ctx)
                vals = [v for _, v in probe.residual_valuations]
                assert all(a <= b for a, b in zip(vals, vals[1:])), (p, n, vals)
                assert all(v >= lvl for lvl, v in probe.residual_valuations), (p, n, vals)

    def test_covered_families_converge(self):
        ctx = PadicContext(p=3, q0=Fraction(4), max_n=4)
        specs = [
            power_spec(2, a=1),
            power_spec(3, base="1/q", reflected=True),
            power_spec(2, a=-1, base="1/q", reflected=True, measure="1/q"),
            IntegrandSpec(BernsteinProduct((BernsteinIndex(1, 2), BernsteinIndex(1, 3))), "q"),
        ]
        for spec in specs:
            probe = probe_convergence(spec, ctx)
            vals = [v for _, v in probe.residual_valuations]
            assert all(a <= b for a, b in zip(vals, vals[1:])), (spec, vals)
            assert all(v >= lvl for lvl, v in probe.residual_valuations), (spec, vals)

    def test_explicit_exact_value(self):
        probe = probe_convergence(power_spec(1), ctx34(), exact=q_euler_number(1))
        assert probe.exact == q_euler_number(1)

    def test_pole_propagates(self):
        bad = ONE / (Q - 4)
        with pytest.raises(PoleError):
            probe_convergence(power_spec(1), ctx34(), exact=bad)
