"""Exact rational vectors and the small amount of linear algebra built on them.

Vectors are plain tuples of :class:`fractions.Fraction`; nothing in here
touches floating point.
"""
from __future__ import annotations

import re
import math
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def vec(values: Iterable) -> Vector:
    """Coerce ints, Fractions or rational strings into an exact vector."""
    out = tuple(to_fraction(v) for v in values)
    if not out:
        raise ValueError("vectors must have at least one coordinate")
    return out


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"refusing inexact value {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"-3"`` or ``"5/7"``; decimals and floats are rejected."""
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def fmt_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def zero(d: int) -> Vector:
    return (Fraction(0),) * d


def unit(d: int, i: int, sign: int = 1) -> Vector:
    return tuple(Fraction(sign if j == i else 0) for j in range(d))


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def scale(lam, x: Sequence[Fraction]) -> Vector:
    return tuple(lam * xi for xi in x)


def add(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def neg(x: Sequence[Fraction]) -> Vector:
    return tuple(-a for a in x)


def pnorm_pow(x: Sequence[Fraction], p: int) -> Fraction:
    """Return ``sum |x_i|**p`` exactly (the p-th power of the p-norm, no root)."""
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"p must be an integer >= 1, got {p!r}")
    x = [Fraction(xi) for xi in x]
    # over a common denominator the sum is a single integer
    den = math.lcm(*(xi.denominator for xi in x)) if x else 1
    return Fraction(sum(abs(xi.numerator * (den // xi.denominator)) ** p for xi in x), den**p)


def sgn(x) -> int:
    return (x > 0) - (x < 0)


def signed_power(x: Fraction, e: int) -> Fraction:
    """``sgn(x) * |x|**e``."""
    return sgn(x) * abs(x) ** e


def solve_square(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Solve the square system exactly; ``None`` when it is singular."""
    n = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        pr = m[col]
        inv = 1 / pr[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] * inv
                row = m[r]
                for c in range(col, n + 1):
                    row[c] -= f * pr[c]
    return tuple(m[i][n] / m[i][i] for i in range(n))


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][col] != 0:
                f = m[i][col] / m[r][col]
                for c in range(col, ncols):
                    m[i][c] -= f * m[r][c]
        r += 1
        if r == len(m):
            break
    return r


def iroot_ceil(n: int, k: int) -> int:
    """Smallest integer r >= 0 with r**k >= n."""
    if n < 0:
        raise ValueError("negative radicand")
    if n in (0, 1):
        return n
    # Newton from above converges to floor(n ** (1/k))
    r = 1 << -(-n.bit_length() // k)
    while True:
        s = ((k - 1) * r + n // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    return r if r ** k >= n else r + 1
