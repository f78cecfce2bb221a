"""Fermionic p-adic q-integrals as exact truncated sums.

The truncation at level N is

    S_N = (1 / [p^N]_{-b}) * sum_{x=0}^{p^N - 1} f(x) (-b)^x,

evaluated in exact rational arithmetic at a rational point q0 (b is q0 for
measure base "q" and 1/q0 for measure base "1/q").  The integrand family is a
closed enumeration (:class:`IntegrandSpec`): shifted/reflected powers of
q-numbers and products of q-Bernstein factors.  For the covered families
:func:`closed_form_of` returns the exact integral as a rational function, and
:func:`probe_convergence` measures p-adic valuations of the residuals
S_N - exact(q0), which grow without bound as N increases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, inf

from . import zpoly
from .exactfield import ONE, Q, ZERO, BigRational, PoleError, RationalFunction
from .qcore import BernsteinIndex, QEulerTable, q_euler_number, q_euler_polynomial

#: Hard feasibility bound for p^maxN term enumeration.
MAX_ENUMERATION = 10**7


class UnsupportedSpecError(ValueError):
    """Integrand outside the families with a known closed form."""


def padic_valuation(x, p: int) -> int | float:
    """v_p(x) for a rational x, with v_p(0) = +infinity."""
    if p < 2 or not zpoly.is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    x = Fraction(x)
    if x == 0:
        return inf
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


@dataclass(frozen=True)
class PadicContext:
    """Odd prime p, rational point q0 with v_p(q0) = 0 <= 1 <= v_p(1 - q0), and
    a truncation bound max_n with p^max_n small enough to enumerate."""

    p: int
    q0: Fraction
    max_n: int

    def __post_init__(self) -> None:
        if self.p == 2 or not zpoly.is_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        object.__setattr__(self, "q0", Fraction(self.q0))
        if padic_valuation(self.q0, self.p) != 0:
            raise ValueError(f"q0 = {self.q0} must be a p-adic unit")
        if padic_valuation(1 - self.q0, self.p) < 1:
            raise ValueError(f"need v_{self.p}(1 - q0) >= 1, got q0 = {self.q0}")
        if self.max_n < 1:
            raise ValueError("max_n must be >= 1")
        if self.p**self.max_n > MAX_ENUMERATION:
            raise ValueError(
                f"p^max_n = {self.p}^{self.max_n} exceeds the enumeration bound {MAX_ENUMERATION}"
            )


@dataclass(frozen=True)
class ShiftedPower:
    """Power-of-a-q-number integrand with an integer shift a.

    Unreflected means x -> [x + a]_base^n.  The reflected families follow the
    two reflected integrals they come from, which put the reflection on
    different variables:

    * measure base "q":   x -> [1 - x + a]_base^n   (integration variable
      reflected, as in the integral of [1-x]_{1/q}^n d mu_{-q});
    * measure base "1/q": x -> [1 - a + x]_base^n   (shift parameter
      reflected, as in the integral of [1-a+x]_{1/q}^n d mu_{-1/q}).
    """

    a: int
    n: int
    base: str = "q"
    reflected: bool = False

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("power must be >= 0")
        if self.base not in ("q", "1/q"):
            raise ValueError(f"base must be 'q' or '1/q', got {self.base!r}")


@dataclass(frozen=True)
class BernsteinProduct:
    """x -> product of B_{k_i, n_i}(x, q) over the factor list."""

    factors: tuple[BernsteinIndex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise ValueError("Bernstein product needs at least one factor")


@dataclass(frozen=True)
class IntegrandSpec:
    kind: ShiftedPower | BernsteinProduct
    measure_base: str = "q"

    def __post_init__(self) -> None:
        if self.measure_base not in ("q", "1/q"):
            raise ValueError(f"measure base must be 'q' or '1/q', got {self.measure_base!r}")


@dataclass(frozen=True)
class PadicProbe:
    """Exact truncations S_1..S_maxN of one integral plus residual valuations
    against the closed form (v_p(0) reported as +infinity)."""

    spec: IntegrandSpec
    context: PadicContext
    partials: tuple[tuple[int, Fraction], ...]
    exact: RationalFunction
    residual_valuations: tuple[tuple[int, int | float], ...]


def _bracket(a: int, c: Fraction) -> Fraction:
    """[a]_c for integer a, with the limit convention [a]_1 = a."""
    if c == 1:
        return Fraction(a)
    return (1 - c**a) / (1 - c)


class _TermStream:
    """Per-x integrand values via constant-work incremental updates."""

    def __init__(
        self, kind: ShiftedPower | BernsteinProduct, q0: Fraction, measure_base: str
    ):
        self.q0 = q0
        if isinstance(kind, ShiftedPower):
            self.c = q0 if kind.base == "q" else 1 / q0
            self.n = kind.n
            if kind.reflected and measure_base == "q":
                self.reflected = True
                start = 1 + kind.a  # [1 - x + a] at x = 0
            elif kind.reflected:
                self.reflected = False
                start = 1 - kind.a  # [1 - a + x] at x = 0
            else:
                self.reflected = False
                start = kind.a
            self.t = _bracket(start, self.c)
            self.kind = "power"
        else:
            self.u = Fraction(0)  # [x]_q0
            self.v = Fraction(1)  # [1-x]_{1/q0}
            self.ku = sum(f.k for f in kind.factors)
            self.kv = sum(f.n - f.k for f in kind.factors)
            coeff = 1
            for f in kind.factors:
                coeff *= comb(f.n, f.k)
            self.coeff = coeff
            self.kind = "bernstein"

    def value(self) -> Fraction:
        if self.kind == "power":
            return self.t**self.n
        return self.coeff * self.u**self.ku * self.v**self.kv

    def advance(self) -> None:
        if self.kind == "power":
            # [x+1] = 1 + c [x];  [y-1] = ([y] - 1)/c
            self.t = (self.t - 1) / self.c if self.reflected else 1 + self.c * self.t
        else:
            self.u = 1 + self.q0 * self.u
            self.v = self.q0 * (self.v - 1)


def _partial_sums(spec: IntegrandSpec, ctx: PadicContext, up_to: int) -> list[Fraction]:
    """[S_1, ..., S_up_to] in one pass over x = 0 .. p^up_to - 1."""
    b = ctx.q0 if spec.measure_base == "q" else 1 / ctx.q0
    if 1 + b == 0:
        raise PoleError("measure normalizer vanishes at q0")
    stream = _TermStream(spec.kind, ctx.q0, spec.measure_base)
    weight = Fraction(1)
    acc = Fraction(0)
    checkpoints = [ctx.p**j for j in range(1, up_to + 1)]
    sums = []
    next_cp = 0
    for x in range(checkpoints[-1]):
        acc += stream.value() * weight
        stream.advance()
        weight *= -b
        if x + 1 == checkpoints[next_cp]:
            sums.append(acc)
            next_cp += 1
    out = []
    for j, raw in enumerate(sums, start=1):
        normalizer = (1 - (-b) ** (ctx.p**j)) / (1 + b)
        out.append(raw / normalizer)
    return out


def truncated_integral(spec: IntegrandSpec, ctx: PadicContext, n: int) -> Fraction:
    """S_N: the exact level-N truncation of the fermionic q-integral at q0."""
    if not 1 <= n <= ctx.max_n:
        raise ValueError(f"need 1 <= N <= {ctx.max_n}, got {n}")
    return _partial_sums(spec, ctx, n)[-1]


def probe_convergence(
    spec: IntegrandSpec,
    ctx: PadicContext,
    exact: RationalFunction | None = None,
    table: QEulerTable | None = None,
) -> PadicProbe:
    """All truncations S_1..S_maxN plus residual valuations against ``exact``
    (defaults to the closed form of the integrand)."""
    if exact is None:
        exact = closed_form_of(spec, table)
    target = exact.evaluate(ctx.q0)  # PoleError propagates
    partials = _partial_sums(spec, ctx, ctx.max_n)
    residuals = tuple(
        (j, padic_valuation(s - target, ctx.p))
        for j, s in enumerate(partials, start=1)
    )
    return PadicProbe(
        spec=spec,
        context=ctx,
        partials=tuple(enumerate(partials, start=1)),
        exact=exact,
        residual_valuations=residuals,
    )


def closed_form_of(
    spec: IntegrandSpec, table: QEulerTable | None = None
) -> RationalFunction:
    """Exact value of the fermionic q-integral for the covered spec families.

    Covered: unreflected [x+a]_q^n with measure base q; reflected
    [1-x+a]_{1/q}^n with either measure base; Bernstein products whose factors
    all share one k, with measure base q.  Anything else raises
    :class:`UnsupportedSpecError`.
    """
    kind = spec.kind
    if isinstance(kind, ShiftedPower):
        if not kind.reflected and kind.base == "q" and spec.measure_base == "q":
            # Witt moment: integral of [x + a]_q^n is xi_n(a)
            return q_euler_polynomial(kind.n, kind.a, table)
        if kind.reflected and kind.base == "1/q":
            n, a = kind.n, kind.a
            if spec.measure_base == "q":
                # [1-x+a]_{1/q} = 1 - [x-a]_q, expand and integrate termwise
                acc = ZERO
                for l in range(n + 1):
                    sign = -1 if l & 1 else 1
                    acc = acc + sign * comb(n, l) * q_euler_polynomial(l, -a, table)
                return acc
            # measure base 1/q: alternating sum with weights q^(l*a) / (1 + q^(l+1))
            acc = ZERO
            for l in range(n + 1):
                sign = -1 if l & 1 else 1
                acc = acc + sign * comb(n, l) * Q ** (l * a) / (
                    ONE + Q ** (l + 1)
                )
            return (-Q) ** n * (ONE + Q) * acc / (ONE - Q) ** n
        raise UnsupportedSpecError(
            f"no closed form for base {kind.base!r}, reflected={kind.reflected}, "
            f"measure base {spec.measure_base!r}"
        )
    if spec.measure_base != "q":
        raise UnsupportedSpecError("Bernstein products are covered for measure base 'q' only")
    ks = {f.k for f in kind.factors}
    if len(ks) > 1:
        raise UnsupportedSpecError(
            f"Bernstein product factors must share one k, got {sorted(ks)}"
        )
    k = ks.pop()
    s = len(kind.factors)
    total = sum(f.n for f in kind.factors)
    coeff = 1
    for f in kind.factors:
        coeff *= comb(f.n, f.k)
    acc = ZERO
    span = total - s * k
    for l in range(span + 1):
        sign = -1 if l & 1 else 1
        acc = acc + sign * comb(span, l) * q_euler_number(l + s * k, table)
    return coeff * acc


__all__ = [
    "BigRational",
    "BernsteinProduct",
    "IntegrandSpec",
    "MAX_ENUMERATION",
    "PadicContext",
    "PadicProbe",
    "ShiftedPower",
    "UnsupportedSpecError",
    "closed_form_of",
    "padic_valuation",
    "probe_convergence",
    "truncated_integral",
]
