"""Mechanical verification of the q-Euler / q-Bernstein identity catalog.

Each check computes both sides of one identity instance as canonical rational
functions and returns an :class:`IdentityReport`; ``holds`` is true exactly
when the residual (first pairwise difference between the computed sides) is
the zero rational function.  :func:`run_suite` sweeps parameter grids,
aggregates precondition violations as explicit skip records, and sorts the
output deterministically.

Two identity ids are *recorded* rather than asserted: ``E8printed``
(q*xi_n(1) + xi_n = 1) and ``T9printed`` (the k = 0 product identity without
the q^2 factor).  Both are false under the definitions used here -- the
recurrence forces q*xi_n(1) + xi_n = 0, and the k = 0 identity needs the q^2
factor to match its k > 0 sibling -- and the suite documents that instead of
asserting it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

from .exactfield import ONE, Q, ZERO, RationalFunction
from .padic import BernsteinProduct, IntegrandSpec, ShiftedPower, closed_form_of
from .qcore import BernsteinIndex, bernstein, q_euler_number, q_euler_polynomial

IDENTITY_IDS = (
    "T1",
    "P2",
    "P3",
    "C4",
    "T5",
    "T6",
    "C7",
    "T8",
    "T9",
    "E19",
    "E18v20",
    "E21v23",
    "E8corrected",
    "E8printed",
    "T9printed",
)

#: Ids whose instances must all hold for the suite to pass.
ASSERTED_IDS = frozenset(IDENTITY_IDS) - {"E8printed", "T9printed"}

Params = tuple[tuple[str, object], ...]


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    params: Params
    lhs: RationalFunction
    rhs: RationalFunction
    residual: RationalFunction
    holds: bool

    def to_record(self) -> dict:
        """Serialization schema shared with the CLI."""
        return {
            "identityId": self.identity_id,
            "params": {k: v for k, v in self.params},
            "holds": self.holds,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "residual": str(self.residual),
        }


def _report(identity_id: str, params: Params, sides: list[RationalFunction]) -> IdentityReport:
    """Report over >= 2 computed sides; residual is the first nonzero
    difference lhs - side_i, zero when all sides agree."""
    lhs = sides[0]
    residual = ZERO
    for other in sides[1:]:
        diff = lhs - other
        if not diff.is_zero:
            residual = diff
            break
    return IdentityReport(
        identity_id=identity_id,
        params=params,
        lhs=lhs,
        rhs=sides[1],
        residual=residual,
        holds=residual.is_zero,
    )


# -- cached building blocks (values are canonical, so one shared cache is safe) --


@lru_cache(maxsize=None)
def _xi(n: int) -> RationalFunction:
    return q_euler_number(n)


@lru_cache(maxsize=None)
def _xi_inv(n: int) -> RationalFunction:
    return _xi(n).subst_inverse()


@lru_cache(maxsize=None)
def _xi_poly(n: int, x: int) -> RationalFunction:
    return q_euler_polynomial(n, x)


@lru_cache(maxsize=None)
def _xi_poly_inv(n: int, x: int) -> RationalFunction:
    return _xi_poly(n, x).subst_inverse()


@lru_cache(maxsize=None)
def _alt_xi_sum(offset: int, span: int) -> RationalFunction:
    """sum_{l=0}^{span} C(span,l) (-1)^l xi_{l+offset}."""
    acc = ZERO
    for l in range(span + 1):
        sign = -1 if l & 1 else 1
        acc = acc + sign * comb(span, l) * _xi(l + offset)
    return acc


@lru_cache(maxsize=None)
def _alt_xi_inv_sum(j: int, top: int) -> RationalFunction:
    """sum_{l=0}^{j} C(j,l) (-1)^(j+l) xi_{top-l, 1/q}."""
    acc = ZERO
    for l in range(j + 1):
        sign = -1 if (j + l) & 1 else 1
        acc = acc + sign * comb(j, l) * _xi_inv(top - l)
    return acc


@lru_cache(maxsize=None)
def _alt_xi2_inv_sum(j: int, top: int) -> RationalFunction:
    """sum_{l=0}^{j} C(j,l) (-1)^(j+l) xi_{top-l, 1/q}(2)."""
    acc = ZERO
    for l in range(j + 1):
        sign = -1 if (j + l) & 1 else 1
        acc = acc + sign * comb(j, l) * _xi_poly_inv(top - l, 2)
    return acc


# -- individual checks ---------------------------------------------------------


def check_theorem1(n: int) -> IdentityReport:
    """xi_n(2) = 1 + 1/q + xi_n / q^2, for n >= 1."""
    if n < 1:
        raise ValueError("T1 needs n >= 1")
    lhs = _xi_poly(n, 2)
    rhs = ONE + Q**-1 + Q**-2 * _xi(n)
    return _report("T1", (("n", n),), [lhs, rhs])


def check_prop2(n: int) -> IdentityReport:
    """sum_l C(n,l) (-1)^l xi_l = (-1)^n q^n xi_n(-1), and both equal the
    reflected-power integral's closed form."""
    if n < 0:
        raise ValueError("P2 needs n >= 0")
    lhs = _alt_xi_sum(0, n)
    rhs = (-Q) ** n * _xi_poly(n, -1)
    integral = closed_form_of(
        IntegrandSpec(ShiftedPower(a=0, n=n, base="1/q", reflected=True), "q")
    )
    return _report("P2", (("n", n),), [lhs, rhs, integral])


def check_prop3(n: int, x: int) -> IdentityReport:
    """Reflected integral under the 1/q measure equals (-1)^n q^n xi_n(x)."""
    if n < 0:
        raise ValueError("P3 needs n >= 0")
    lhs = closed_form_of(
        IntegrandSpec(ShiftedPower(a=x, n=n, base="1/q", reflected=True), "1/q")
    )
    rhs = (-Q) ** n * _xi_poly(n, x)
    return _report("P3", (("n", n), ("x", x)), [lhs, rhs])


def check_cor4(n: int) -> IdentityReport:
    """xi_{n,1/q}(2) = (-1)^n q^n xi_n(-1)."""
    if n < 0:
        raise ValueError("C4 needs n >= 0")
    lhs = _xi_poly_inv(n, 2)
    rhs = (-Q) ** n * _xi_poly(n, -1)
    return _report("C4", (("n", n),), [lhs, rhs])


def check_theorem5(n: int) -> IdentityReport:
    """Integral of [1-x]_{1/q}^n d mu_{-q} = (1+q) + q^2 xi_{n,1/q}, n >= 1."""
    if n < 1:
        raise ValueError("T5 needs n >= 1")
    lhs = closed_form_of(
        IntegrandSpec(ShiftedPower(a=0, n=n, base="1/q", reflected=True), "q")
    )
    rhs = ONE + Q + Q**2 * _xi_inv(n)
    return _report("T5", (("n", n),), [lhs, rhs])


def check_theorem6(n: int, k: int) -> IdentityReport:
    """sum_{l<=n-k} C(n-k,l) (-1)^l xi_{k+l} = sum_{l<=k} C(k,l) (-1)^(k+l)
    xi_{n-l,1/q}(2); both match the Bernstein integral over C(n,k)."""
    if k < 0 or n < k:
        raise ValueError("T6 needs n >= k >= 0")
    lhs = _alt_xi_sum(k, n - k)
    rhs = _alt_xi2_inv_sum(k, n)
    spec = IntegrandSpec(BernsteinProduct((BernsteinIndex(k, n),)), "q")
    shared = closed_form_of(spec) * Fraction(1, comb(n, k))
    return _report("T6", (("n", n), ("k", k)), [lhs, rhs, shared])


def check_cor7(n: int, k: int) -> IdentityReport:
    """sum_{l<=n-k} C(n-k,l) (-1)^l xi_{k+l} = q^2 sum_{l<=k} C(k,l)
    (-1)^(k+l) xi_{n-l,1/q}, for n > k > 0."""
    if not n > k > 0:
        raise ValueError("C7 needs n > k > 0")
    lhs = _alt_xi_sum(k, n - k)
    rhs = Q**2 * _alt_xi_inv_sum(k, n)
    return _report("C7", (("n", n), ("k", k)), [lhs, rhs])


def check_cor7_moreover(n: int) -> IdentityReport:
    """sum_{l<=n} C(n,l) (-1)^l xi_l = (1+q) + q^2 xi_{n,1/q}, n >= 1."""
    if n < 1:
        raise ValueError("C7 moreover needs n >= 1")
    lhs = _alt_xi_sum(0, n)
    rhs = ONE + Q + Q**2 * _xi_inv(n)
    return _report("C7", (("n", n),), [lhs, rhs])


def check_theorem8(m: int, n: int, k: int) -> IdentityReport:
    """Two-factor Bernstein product identity, m + n > 2k; the k = 0 branch is
    the (1+q) + q^2 xi_{m+n,1/q} form."""
    if m < 0 or n < 0 or k < 0:
        raise ValueError("T8 needs m, n, k >= 0")
    if m + n <= 2 * k:
        raise ValueError("T8 needs m + n > 2k")
    if k > 0:
        lhs = _alt_xi_sum(2 * k, m + n - 2 * k)
        rhs = Q**2 * _alt_xi_inv_sum(2 * k, m + n)
    else:
        lhs = _alt_xi_sum(0, m + n)
        rhs = Q**2 * _xi_inv(m + n) + ONE + Q
    return _report("T8", (("m", m), ("n", n), ("k", k)), [lhs, rhs])


def check_theorem9(n_list: tuple[int, ...], k: int) -> IdentityReport:
    """s-factor Bernstein product identity with sum n_i > s*k; the k = 0
    branch asserts the corrected form (1+q) + q^2 xi_{sum,1/q}."""
    n_list = tuple(n_list)
    s = len(n_list)
    if s < 1:
        raise ValueError("T9 needs at least one index")
    if any(v < 0 for v in n_list) or k < 0:
        raise ValueError("T9 needs n_i, k >= 0")
    total = sum(n_list)
    if total <= s * k:
        raise ValueError("T9 needs sum(n_i) > s*k")
    if k > 0:
        lhs = _alt_xi_sum(s * k, total - s * k)
        rhs = Q**2 * _alt_xi_inv_sum(s * k, total)
    else:
        lhs = _alt_xi_sum(0, total)
        rhs = ONE + Q + Q**2 * _xi_inv(total)
    return _report("T9", (("s", s), ("n_list", n_list), ("k", k)), [lhs, rhs])


def check_t9printed(n_list: tuple[int, ...]) -> IdentityReport:
    """The k = 0 product identity without the q^2 factor (recorded, not asserted)."""
    n_list = tuple(n_list)
    if not n_list or any(v < 0 for v in n_list):
        raise ValueError("T9printed needs a non-empty list of n_i >= 0")
    total = sum(n_list)
    if total < 1:
        raise ValueError("T9printed needs sum(n_i) >= 1")
    lhs = _alt_xi_sum(0, total)
    rhs = ONE + Q + _xi_inv(total)
    return _report(
        "T9printed", (("s", len(n_list)), ("n_list", n_list), ("k", 0)), [lhs, rhs]
    )


def check_eq19(n: int, k: int, x: int) -> IdentityReport:
    """B_{k,n}(x, q) = B_{n-k,n}(1-x, 1/q)."""
    if k < 0 or n < k:
        raise ValueError("E19 needs n >= k >= 0")
    lhs = bernstein(BernsteinIndex(k, n), x)
    rhs = bernstein(BernsteinIndex(n - k, n), 1 - x).subst_inverse()
    return _report("E19", (("n", n), ("k", k), ("x", x)), [lhs, rhs])


def check_eq18v20(n: int, k: int) -> IdentityReport:
    """Moment expansion vs reflected expansion of one Bernstein integral,
    with the C(n,k) prefactor divided out."""
    if k < 0 or n < k:
        raise ValueError("E18v20 needs n >= k >= 0")
    spec = IntegrandSpec(BernsteinProduct((BernsteinIndex(k, n),)), "q")
    lhs = closed_form_of(spec) * Fraction(1, comb(n, k))
    rhs = _alt_xi2_inv_sum(k, n)
    return _report("E18v20", (("n", n), ("k", k)), [lhs, rhs])


def check_eq21v23(m: int, n: int, k: int) -> IdentityReport:
    """Same comparison for the two-factor product B_{k,n} B_{k,m}."""
    if k < 0 or n < k or m < k:
        raise ValueError("E21v23 needs n, m >= k >= 0")
    spec = IntegrandSpec(
        BernsteinProduct((BernsteinIndex(k, n), BernsteinIndex(k, m))), "q"
    )
    lhs = closed_form_of(spec) * Fraction(1, comb(n, k) * comb(m, k))
    rhs = _alt_xi2_inv_sum(2 * k, n + m)
    return _report("E21v23", (("m", m), ("n", n), ("k", k)), [lhs, rhs])


def check_eq8(n: int) -> IdentityReport:
    """q xi_n(1) + xi_n = 0 for n >= 1 (the value the recurrence forces)."""
    if n < 1:
        raise ValueError("E8 needs n >= 1")
    lhs = Q * _xi_poly(n, 1) + _xi(n)
    return _report("E8corrected", (("n", n),), [lhs, ZERO])


def check_eq8_printed(n: int) -> IdentityReport:
    """q xi_n(1) + xi_n = 1 (recorded, not asserted; false for every n >= 1)."""
    if n < 1:
        raise ValueError("E8printed needs n >= 1")
    lhs = Q * _xi_poly(n, 1) + _xi(n)
    return _report("E8printed", (("n", n),), [lhs, ONE])


# -- the suite -----------------------------------------------------------------


@dataclass(frozen=True)
class SuiteConfig:
    n_max: int = 8
    m_max: int = 8
    k_max: int = 4
    s_max: int = 3
    x_min: int = -2
    x_max: int = 3
    e8_n_max: int = 10
    t9_n_max: int = 4
    t9_k_max: int = 2


@dataclass(frozen=True)
class SkippedCheck:
    identity_id: str
    params: Params
    reason: str


@dataclass
class SuiteResult:
    reports: list[IdentityReport] = field(default_factory=list)
    skipped: list[SkippedCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.holds for r in self.reports if r.identity_id in ASSERTED_IDS)

    def failures(self) -> list[IdentityReport]:
        return [r for r in self.reports if r.identity_id in ASSERTED_IDS and not r.holds]


def _t9_lists(cfg: SuiteConfig):
    for s in range(1, cfg.s_max + 1):
        yield from combinations_with_replacement(range(cfg.t9_n_max + 1), s)


def _grid(cfg: SuiteConfig):
    """Yield (identity_id, params, thunk) over the configured grids."""
    xs = range(cfg.x_min, cfg.x_max + 1)
    for n in range(cfg.n_max + 1):
        yield "T1", (("n", n),), lambda n=n: check_theorem1(n)
        yield "P2", (("n", n),), lambda n=n: check_prop2(n)
        for x in xs:
            yield "P3", (("n", n), ("x", x)), lambda n=n, x=x: check_prop3(n, x)
        yield "C4", (("n", n),), lambda n=n: check_cor4(n)
        yield "T5", (("n", n),), lambda n=n: check_theorem5(n)
        for k in range(cfg.k_max + 1):
            yield "T6", (("n", n), ("k", k)), lambda n=n, k=k: check_theorem6(n, k)
            yield "C7", (("n", n), ("k", k)), lambda n=n, k=k: check_cor7(n, k)
            yield "E18v20", (("n", n), ("k", k)), lambda n=n, k=k: check_eq18v20(n, k)
            for x in xs:
                yield "E19", (("n", n), ("k", k), ("x", x)), lambda n=n, k=k, x=x: check_eq19(n, k, x)
        yield "C7", (("n", n),), lambda n=n: check_cor7_moreover(n)
    for m in range(cfg.m_max + 1):
        for n in range(cfg.n_max + 1):
            for k in range(cfg.k_max + 1):
                yield "T8", (("m", m), ("n", n), ("k", k)), lambda m=m, n=n, k=k: check_theorem8(m, n, k)
                yield "E21v23", (("m", m), ("n", n), ("k", k)), lambda m=m, n=n, k=k: check_eq21v23(m, n, k)
    for n_list in _t9_lists(cfg):
        for k in range(cfg.t9_k_max + 1):
            yield "T9", (("s", len(n_list)), ("n_list", n_list), ("k", k)), (
                lambda n_list=n_list, k=k: check_theorem9(n_list, k)
            )
        yield "T9printed", (("s", len(n_list)), ("n_list", n_list), ("k", 0)), (
            lambda n_list=n_list: check_t9printed(n_list)
        )
    for n in range(1, cfg.e8_n_max + 1):
        yield "E8corrected", (("n", n),), lambda n=n: check_eq8(n)
        yield "E8printed", (("n", n),), lambda n=n: check_eq8_printed(n)


def run_suite(
    config: SuiteConfig | None = None, ids: set[str] | None = None
) -> SuiteResult:
    """Run every configured identity instance; precondition violations become
    explicit skip records, never silent drops."""
    cfg = config or SuiteConfig()
    if ids is not None:
        unknown = set(ids) - set(IDENTITY_IDS)
        if unknown:
            raise ValueError(f"unknown identity ids: {sorted(unknown)}")
    result = SuiteResult()
    for identity_id, params, thunk in _grid(cfg):
        if ids is not None and identity_id not in ids:
            continue
        try:
            result.reports.append(thunk())
        except ValueError as exc:
            result.skipped.append(SkippedCheck(identity_id, params, str(exc)))
    result.reports.sort(key=lambda r: (r.identity_id, r.params))
    result.skipped.sort(key=lambda s: (s.identity_id, s.params))
    return result
