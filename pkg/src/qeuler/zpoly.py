"""Dense univariate polynomials over the integers.

A polynomial is a list of ``int`` coefficients in ascending order (index i
holds the coefficient of q^i) with no trailing zeros; the zero polynomial is
the empty list.  This module is the arithmetic kernel behind the rational
function field: integer-only ring operations, exact division, and a GCD that
is fast enough to keep every fraction in lowest terms at all times.

The GCD runs Brown's modular algorithm (images mod word-sized primes, CRT,
symmetric lift) and certifies each candidate by trial division into both
inputs, so a returned divisor is always the true GCD; a primitive
pseudo-remainder sequence is kept as a fallback.
"""

from __future__ import annotations

import math


def strip(cs: list) -> list:
    """Drop trailing zero coefficients in place and return the list."""
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def add(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, c in enumerate(b):
        out[i] += c
    return strip(out)


def sub(a: list, b: list) -> list:
    return add(a, [-c for c in b])


def neg(a: list) -> list:
    return [-c for c in a]


def mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out  # leading product is nonzero over Z, no strip needed


def mul_ground(a: list, c: int) -> list:
    if c == 0:
        return []
    return [x * c for x in a]


def shift(a: list, k: int) -> list:
    """Multiply by q^k (k >= 0)."""
    if not a:
        return []
    return [0] * k + a


def pow_(a: list, k: int) -> list:
    if k < 0:
        raise ValueError("negative power of a plain polynomial")
    out = [1]
    base = a
    while k:
        if k & 1:
            out = mul(out, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return out


def eval_at(a: list, x):
    """Horner evaluation; exact for int or Fraction arguments."""
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def content(a: list) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def primitive_abs(a: list) -> tuple[int, list]:
    """Return (content, primitive part with positive leading coefficient)."""
    if not a:
        return 0, []
    c = content(a)
    pp = [x // c for x in a]
    if pp[-1] < 0:
        pp = [-x for x in pp]
    return c, pp


def try_div(a: list, b: list) -> list | None:
    """Exact quotient a/b over Z[q], or None when b does not divide a."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return None
    r = a[:]
    quot = [0] * (da - db + 1)
    lb = b[-1]
    for i in range(da, db - 1, -1):
        c = r[i]
        if c == 0:
            continue
        if c % lb:
            return None
        qc = c // lb
        quot[i - db] = qc
        off = i - db
        for j in range(db + 1):
            r[off + j] -= qc * b[j]
    if any(r[:db]):
        return None
    return quot


def div_exact(a: list, b: list) -> list:
    q = try_div(a, b)
    if q is None:
        raise ArithmeticError("inexact polynomial division")
    return q


def prem(a: list, b: list) -> list:
    """Pseudo-remainder of a by b (result is prem up to a power of lc(b))."""
    if not b:
        raise ZeroDivisionError("pseudo-division by zero")
    r = a[:]
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        lr = r[-1]
        r = [lb * c for c in r]
        off = len(r) - 1 - db
        for j in range(db + 1):
            r[off + j] -= lr * b[j]
        strip(r)
    return r


# --- primality (deterministic Miller-Rabin, valid far beyond 2^64) ---

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_GCD_PRIME_START = (1 << 62) + 1
_PRIMES: list[int] = []


def _prime_stream():
    idx = 0
    while True:
        if idx == len(_PRIMES):
            n = _PRIMES[-1] + 2 if _PRIMES else _GCD_PRIME_START
            while not is_prime(n):
                n += 2
            _PRIMES.append(n)
        yield _PRIMES[idx]
        idx += 1


# --- GCD ---


def _gf_rem(a: list, b: list, p: int) -> list:
    """Remainder of a by b over GF(p); coefficients already reduced mod p."""
    if len(a) < len(b):
        return a[:]
    r = a[:]
    db = len(b) - 1
    binv = pow(b[-1], -1, p)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] * binv % p
        if c:
            off = i - db
            for j in range(db):
                r[off + j] = (r[off + j] - c * b[j]) % p
    return strip(r[:db])


def _gf_gcd(f: list, g: list, p: int) -> list:
    """Monic gcd of f and g over GF(p)."""
    a = strip([c % p for c in f])
    b = strip([c % p for c in g])
    while b:
        a, b = b, _gf_rem(a, b, p)
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _crt_lists(c1: list, m1: int, c2: list, m2: int) -> list:
    inv = pow(m1, -1, m2)
    out = []
    for x1, x2 in zip(c1, c2):
        out.append(x1 + m1 * ((x2 - x1) * inv % m2))
    return out


def _sym(x: int, m: int) -> int:
    return x - m if x > m // 2 else x


def _gcd_prs(f: list, g: list) -> list:
    # primitive pseudo-remainder sequence; slow but dependency-free fallback
    while g:
        r = prem(f, g)
        _, r = primitive_abs(r)
        f, g = g, r
    _, f = primitive_abs(f)
    return f


def _gcd_modular(f: list, g: list) -> list:
    """GCD of primitive f, g with deg >= 1; returns a primitive gcd, lc > 0.

    Correctness of an accepted candidate h: h divides both inputs, so it
    divides the true gcd; and deg h equals the gcd degree modulo a prime of
    good reduction, which is an upper bound for the true gcd degree.
    """
    lcg = math.gcd(f[-1], g[-1])
    residues: list | None = None
    modulus = 0
    best_deg = -1
    rounds = 0
    for p in _prime_stream():
        if f[-1] % p == 0 or g[-1] % p == 0:
            continue
        hp = _gf_gcd(f, g, p)
        d = len(hp) - 1
        if d == 0:
            return [1]
        s = lcg % p
        hp = [c * s % p for c in hp]
        if residues is None or d < best_deg:
            residues, modulus, best_deg = hp, p, d
        elif d > best_deg:
            continue  # unlucky prime
        else:
            residues = _crt_lists(residues, modulus, hp, p)
            modulus *= p
        cand = strip([_sym(c, modulus) for c in residues])
        if len(cand) - 1 == best_deg:
            _, cand = primitive_abs(cand)
            if try_div(f, cand) is not None and try_div(g, cand) is not None:
                return cand
        rounds += 1
        if rounds > 48:
            return _gcd_prs(f, g)
    raise AssertionError("unreachable")


def gcd(a: list, b: list) -> list:
    """GCD over Z[q] including integer content; normalized to lc > 0."""
    if not a and not b:
        return []
    if not a:
        c, pp = primitive_abs(b)
        return mul_ground(pp, c)
    if not b:
        c, pp = primitive_abs(a)
        return mul_ground(pp, c)
    ca, pa = primitive_abs(a)
    cb, pb = primitive_abs(b)
    c = math.gcd(ca, cb)
    if len(pa) == 1 or len(pb) == 1:
        return [c]
    if pa == pb:
        return mul_ground(pa, c)
    g = _gcd_modular(pa, pb)
    return mul_ground(g, c)
