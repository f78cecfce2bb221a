"""Exact arithmetic in the rational function field Q(q).

Every value is normalized on construction to a unique canonical form, so
mathematical equality is plain structural equality:

* ``Polynomial`` holds exact rational coefficients in ascending order with
  no trailing zeros (the zero polynomial has an empty coefficient tuple and
  degree -1).
* ``RationalFunction`` stores a reduced fraction num/den of integer-
  coefficient polynomials: gcd(num, den) = 1, the integer coefficients of
  num and den jointly have content 1, and den has a positive leading
  coefficient.

All values are immutable and all operations are pure, so instances can be
shared freely across threads.  Floating point is rejected everywhere.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from . import zpoly

#: Scalar type used for all coefficients and evaluation results.
BigRational = Fraction


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a zero of its denominator."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating point is not supported; use Fraction or int")
    return Fraction(value)


class Polynomial:
    """Immutable univariate polynomial in q with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def monomial(cls, coeff, power: int) -> "Polynomial":
        if power < 0:
            raise ValueError("monomial power must be >= 0")
        c = _as_fraction(coeff)
        if c == 0:
            return cls()
        return cls([Fraction(0)] * power + [c])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Polynomial([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Polynomial", self._coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power; use RationalFunction")
        out = Polynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __call__(self, x) -> Fraction:
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    @staticmethod
    def _coerce(other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return NotImplemented

    def __str__(self) -> str:
        return _format_terms(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({self!s})"


def _format_coeff(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def _format_terms(coeffs) -> str:
    """Canonical ascending rendering, e.g. ``-1*q``, ``1 + q^2``, ``1 - 3*q``."""
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        first = not parts
        mag = c if (first or c > 0) else -c
        if i == 0:
            body = _format_coeff(mag)
        else:
            mono = "q" if i == 1 else f"q^{i}"
            body = mono if mag == 1 else f"{_format_coeff(mag)}*{mono}"
        if first:
            parts.append(body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    if not parts:
        return "0"
    return "".join(parts)


class RationalFunction:
    """Element of Q(q) kept in canonical reduced form (see module docstring)."""

    __slots__ = ("_num", "_den")

    def __init__(self, num=0, den=1):
        pn = self._as_poly(num)
        pd = self._as_poly(den)
        if pd.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        numz, denz = _clear_denominators(pn, pd)
        numz, denz = _reduce(numz, denz)
        self._num = tuple(numz)
        self._den = tuple(denz)

    @staticmethod
    def _as_poly(value) -> Polynomial:
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return Polynomial([value])
        if isinstance(value, (list, tuple)):
            return Polynomial(value)
        raise TypeError(f"cannot build a polynomial from {type(value).__name__}")

    @classmethod
    def _raw(cls, numz: list, denz: list) -> "RationalFunction":
        """Trusted constructor: numz/denz are coprime integer coefficient lists."""
        if not numz:
            numz, denz = [], [1]
        else:
            c = math.gcd(zpoly.content(numz), zpoly.content(denz))
            if c > 1:
                numz = [x // c for x in numz]
                denz = [x // c for x in denz]
            if denz[-1] < 0:
                numz = [-x for x in numz]
                denz = [-x for x in denz]
        obj = object.__new__(cls)
        obj._num = tuple(numz)
        obj._den = tuple(denz)
        return obj

    # -- structure ---------------------------------------------------------

    @property
    def num(self) -> Polynomial:
        return Polynomial(self._num)

    @property
    def den(self) -> Polynomial:
        return Polynomial(self._den)

    @property
    def is_zero(self) -> bool:
        return not self._num

    def __bool__(self) -> bool:
        return bool(self._num)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    # -- field operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        a, b = list(self._num), list(self._den)
        c, d = list(other._num), list(other._den)
        g1 = zpoly.gcd(b, d)
        if g1 == [1]:
            return RationalFunction._raw(
                zpoly.add(zpoly.mul(a, d), zpoly.mul(c, b)), zpoly.mul(b, d)
            )
        b0 = zpoly.div_exact(b, g1)
        d0 = zpoly.div_exact(d, g1)
        t = zpoly.add(zpoly.mul(a, d0), zpoly.mul(c, b0))
        if not t:
            return ZERO
        g2 = zpoly.gcd(t, g1)
        if g2 == [1]:
            return RationalFunction._raw(t, zpoly.mul(b0, d))
        return RationalFunction._raw(
            zpoly.div_exact(t, g2), zpoly.mul(b0, zpoly.div_exact(d, g2))
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw([-x for x in self._num], list(self._den))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero or other.is_zero:
            return ZERO
        a, b = list(self._num), list(self._den)
        c, d = list(other._num), list(other._den)
        g1 = zpoly.gcd(a, d)
        g2 = zpoly.gcd(c, b)
        if g1 != [1]:
            a = zpoly.div_exact(a, g1)
            d = zpoly.div_exact(d, g1)
        if g2 != [1]:
            c = zpoly.div_exact(c, g2)
            b = zpoly.div_exact(b, g2)
        return RationalFunction._raw(zpoly.mul(a, c), zpoly.mul(b, d))

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction._raw(list(self._den), list(self._num))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k == 0:
            return ONE
        if k < 0:
            return self.inverse() ** (-k)
        # a reduced fraction stays reduced under powers
        return RationalFunction._raw(
            zpoly.pow_(list(self._num), k), zpoly.pow_(list(self._den), k)
        )

    # -- specialization ------------------------------------------------------

    def evaluate(self, q0) -> Fraction:
        """Exact value at q = q0; raises PoleError when the denominator vanishes."""
        x = _as_fraction(q0)
        dv = zpoly.eval_at(self._den, x)
        if dv == 0:
            raise PoleError(f"pole at q = {x}")
        return Fraction(zpoly.eval_at(self._num, x)) / dv

    def subst_inverse(self) -> "RationalFunction":
        """The image under q -> 1/q, cleared back into Q(q)."""
        if self.is_zero:
            return ZERO
        rn = zpoly.strip(list(reversed(self._num)))
        rd = zpoly.strip(list(reversed(self._den)))
        e = (len(self._den) - 1) - (len(self._num) - 1)
        if e >= 0:
            return RationalFunction._raw(zpoly.shift(rn, e), rd)
        return RationalFunction._raw(rn, zpoly.shift(rd, -e))

    # -- text form -----------------------------------------------------------

    def __str__(self) -> str:
        num = _format_terms(self._num)
        if self._den == (1,):
            return num
        return f"({num}) / ({_format_terms(self._den)})"

    def __repr__(self) -> str:
        return f"RationalFunction.parse({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "RationalFunction":
        """Parse the canonical rendering (round-trip inverse of ``str``)."""
        return _parse_rational_function(text)


def _clear_denominators(pn: Polynomial, pd: Polynomial) -> tuple[list, list]:
    lcm = 1
    for c in pn.coefficients + pd.coefficients:
        lcm = math.lcm(lcm, c.denominator)
    numz = [int(c * lcm) for c in pn.coefficients]
    denz = [int(c * lcm) for c in pd.coefficients]
    return numz, denz


def _reduce(numz: list, denz: list) -> tuple[list, list]:
    zpoly.strip(numz)
    zpoly.strip(denz)
    if not denz:
        raise ZeroDivisionError("rational function with zero denominator")
    if not numz:
        return [], [1]
    g = zpoly.gcd(numz, denz)
    if g != [1]:
        numz = zpoly.div_exact(numz, g)
        denz = zpoly.div_exact(denz, g)
    if denz[-1] < 0:
        numz = [-x for x in numz]
        denz = [-x for x in denz]
    return numz, denz


def _coerce(value):
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (int, Fraction, Polynomial)):
        return RationalFunction(value)
    if isinstance(value, float):
        raise TypeError("floating point is not supported; use Fraction or int")
    return NotImplemented


# -- parser -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|q|\^|\+|\-|\*|/|\(|\))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character at position {pos}: {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of input")
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r}, found {tok!r}")
        self.i += 1
        return tok

    def parse_int(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise ValueError(f"expected an integer, found {tok!r}")
        return int(tok)

    def parse_poly(self, stop: set[str]) -> Polynomial:
        coeffs: dict[int, Fraction] = {}
        first = True
        while True:
            tok = self.peek()
            if tok is None or tok in stop:
                break
            sign = 1
            if tok in "+-":
                if first and tok == "+":
                    raise ValueError("polynomial cannot start with '+'")
                self.take()
                sign = -1 if tok == "-" else 1
            elif not first:
                raise ValueError(f"expected '+' or '-', found {tok!r}")
            power, coeff = self.parse_term()
            coeffs[power] = coeffs.get(power, Fraction(0)) + sign * coeff
            first = False
        if first:
            raise ValueError("empty polynomial")
        size = max(coeffs) + 1 if coeffs else 0
        out = [Fraction(0)] * size
        for p, c in coeffs.items():
            out[p] = c
        return Polynomial(out)

    def parse_term(self) -> tuple[int, Fraction]:
        tok = self.peek()
        if tok == "q":
            return self.parse_mono(), Fraction(1)
        n = self.parse_int()
        coeff = Fraction(n)
        if self.peek() == "/":
            self.take()
            coeff /= self.parse_int()
        if self.peek() == "*":
            self.take()
            return self.parse_mono(), coeff
        return 0, coeff

    def parse_mono(self) -> int:
        self.take("q")
        if self.peek() == "^":
            self.take()
            return self.parse_int()
        return 1


def _parse_rational_function(text: str) -> RationalFunction:
    parser = _Parser(_tokenize(text))
    if parser.peek() == "(":
        parser.take("(")
        num = parser.parse_poly(stop={")"})
        parser.take(")")
        if parser.peek() is None:
            return RationalFunction(num)
        parser.take("/")
        parser.take("(")
        den = parser.parse_poly(stop={")"})
        parser.take(")")
        if parser.peek() is not None:
            raise ValueError(f"trailing input: {parser.peek()!r}")
        return RationalFunction(num, den)
    poly = parser.parse_poly(stop=set())
    return RationalFunction(poly)


#: The indeterminate q as a rational function.
Q = RationalFunction(Polynomial([0, 1]))
ZERO = RationalFunction(0)
ONE = RationalFunction(1)
