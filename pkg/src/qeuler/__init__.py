"""Exact arithmetic over Q(q): q-Euler numbers and polynomials, q-Bernstein
polynomials, fermionic p-adic q-integrals, and a mechanical identity suite."""

from .exactfield import (
    ONE,
    Q,
    ZERO,
    BigRational,
    PoleError,
    Polynomial,
    RationalFunction,
)
from .identities import (
    ASSERTED_IDS,
    IDENTITY_IDS,
    IdentityReport,
    SkippedCheck,
    SuiteConfig,
    SuiteResult,
    run_suite,
)
from .padic import (
    BernsteinProduct,
    IntegrandSpec,
    PadicContext,
    PadicProbe,
    ShiftedPower,
    UnsupportedSpecError,
    closed_form_of,
    padic_valuation,
    probe_convergence,
    truncated_integral,
)
from .qcore import (
    DEFAULT_TABLE,
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

__version__ = "0.1.0"

__all__ = [
    "ASSERTED_IDS",
    "BernsteinIndex",
    "BernsteinProduct",
    "BigRational",
    "DEFAULT_TABLE",
    "IDENTITY_IDS",
    "IdentityReport",
    "IntegrandSpec",
    "ONE",
    "PadicContext",
    "PadicProbe",
    "PoleError",
    "Polynomial",
    "Q",
    "QEulerTable",
    "RationalFunction",
    "ShiftedPower",
    "SkippedCheck",
    "SuiteConfig",
    "SuiteResult",
    "UnsupportedSpecError",
    "ZERO",
    "bernstein",
    "classical_euler",
    "closed_form_of",
    "padic_valuation",
    "probe_convergence",
    "q_euler_number",
    "q_euler_number_closed",
    "q_euler_polynomial",
    "q_number",
    "reflect_power",
    "run_suite",
    "truncated_integral",
]
