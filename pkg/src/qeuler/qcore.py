"""q-number primitives, q-Euler numbers/polynomials, and q-Bernstein polynomials.

Everything lives in Q(q) as a canonical :class:`~qeuler.exactfield.RationalFunction`.
The q-Euler numbers xi_n come with two mutually checking definitions:

* the umbral recurrence  (1 + q^(n+1)) * xi_n = -sum_{l<n} C(n,l) q^(l+1) xi_l
  with xi_0 = 1, solved bottom-up and memoized in :class:`QEulerTable`;
* the closed form  xi_n = (1+q)/(1-q)^n * sum_{l=0}^n C(n,l) (-1)^l / (1 + q^(l+1)),
  whose (1-q)^n factor cancels exactly, so the value is pole-free at q = 1
  and specializes there to the classical Euler number E_n.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Literal

from .exactfield import ONE, Q, ZERO, RationalFunction

QBase = Literal["q", "1/q", "-q"]


@lru_cache(maxsize=None)
def q_number(x: int, base: QBase = "q") -> RationalFunction:
    """[x] in the requested base: (1 - b^x)/(1 - b) with b = q or -q, or q -> 1/q."""
    if base == "1/q":
        return q_number(x, "q").subst_inverse()
    if base == "q":
        b = Q
    elif base == "-q":
        b = -Q
    else:
        raise ValueError(f"unknown base {base!r}")
    return (ONE - b**x) / (ONE - b)


def classical_euler(n: int) -> Fraction:
    """Euler number E_n from E_0 = 1 and 2*E_n = -sum_{l<n} C(n,l) E_l."""
    if n < 0:
        raise ValueError("n must be >= 0")
    values = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum(comb(m, l) * values[l] for l in range(m))
        values.append(Fraction(-acc, 2))
    return values[n]


class QEulerTable:
    """Grow-only memo table of the q-Euler numbers xi_n.

    Entries are immutable rational functions computed lowest index first;
    concurrent readers observe as-if-computed-once values (a lock guards the
    fill, and recomputation would be deterministic anyway).
    """

    def __init__(self) -> None:
        self._entries: list[RationalFunction] = [ONE]
        self._lock = threading.RLock()

    def __getitem__(self, n: int) -> RationalFunction:
        if n < 0:
            raise ValueError("n must be >= 0")
        with self._lock:
            while len(self._entries) <= n:
                m = len(self._entries)
                acc = ZERO
                for l in range(m):
                    acc = acc + comb(m, l) * Q ** (l + 1) * self._entries[l]
                self._entries.append(-acc / (ONE + Q ** (m + 1)))
            return self._entries[n]

    @property
    def entries(self) -> dict[int, RationalFunction]:
        """Snapshot of the values cached so far."""
        with self._lock:
            return dict(enumerate(self._entries))


DEFAULT_TABLE = QEulerTable()


def q_euler_number(n: int, table: QEulerTable | None = None) -> RationalFunction:
    """xi_n via the umbral recurrence, memoized in ``table``."""
    return (table or DEFAULT_TABLE)[n]


def q_euler_number_closed(n: int) -> RationalFunction:
    """xi_n via the closed form; must agree with :func:`q_euler_number`."""
    if n < 0:
        raise ValueError("n must be >= 0")
    acc = ZERO
    for l in range(n + 1):
        sign = -1 if l & 1 else 1
        acc = acc + RationalFunction(sign * comb(n, l), [1] + [0] * l + [1])
    return (ONE + Q) * acc / (ONE - Q) ** n


def q_euler_polynomial(
    n: int, x: int, table: QEulerTable | None = None
) -> RationalFunction:
    """xi_n(x) = sum_l C(n,l) [x]_q^(n-l) q^(l*x) xi_l, for integer x."""
    if n < 0:
        raise ValueError("n must be >= 0")
    tab = table or DEFAULT_TABLE
    xq = q_number(x, "q")
    acc = ZERO
    for l in range(n + 1):
        acc = acc + comb(n, l) * xq ** (n - l) * Q ** (l * x) * tab[l]
    return acc


@dataclass(frozen=True)
class BernsteinIndex:
    """Index pair (k, n) of a degree-n q-Bernstein basis polynomial, k <= n."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if self.k < 0 or self.n < 0:
            raise ValueError("Bernstein indices must be >= 0")
        if self.k > self.n:
            raise ValueError(f"Bernstein index needs k <= n, got k={self.k}, n={self.n}")


def bernstein(idx: BernsteinIndex, x: int) -> RationalFunction:
    """B_{k,n}(x, q) = C(n,k) [x]_q^k [1-x]_{1/q}^(n-k) at integer x."""
    return (
        comb(idx.n, idx.k)
        * q_number(x, "q") ** idx.k
        * q_number(1 - x, "1/q") ** (idx.n - idx.k)
    )


def reflect_power(n: int, x: int) -> tuple[RationalFunction, RationalFunction]:
    """The pair ([1-x]_{1/q}^n, (-1)^n q^n [x-1]_q^n); the components are equal."""
    if n < 0:
        raise ValueError("n must be >= 0")
    lhs = q_number(1 - x, "1/q") ** n
    rhs = (-Q) ** n * q_number(x - 1, "q") ** n
    return lhs, rhs
