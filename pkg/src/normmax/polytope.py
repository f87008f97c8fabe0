"""Halfspace- and vertex-presented polytopes plus their text format.

Text format::

    H d n           # or: V d n
    a_1 ... a_d b   # H rows mean a^T x <= b
    ...

Entries are signed integers or ``num/den``; ``#`` starts a comment.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParseError
from .rational import Vector, dot, fmt_rational, neg, parse_rational, vec


@dataclass(frozen=True)
class HPolytope:
    """``{x : a_i^T x <= b_i}`` with exact rational rows."""

    dim: int
    A: tuple
    b: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if len(self.A) != len(self.b):
            raise ValueError("row count mismatch between A and b")
        for a in self.A:
            if len(a) != self.dim:
                raise ValueError(f"row of length {len(a)} in dimension {self.dim}")

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[Sequence, object]], dim: int | None = None):
        A, b = [], []
        for a, beta in rows:
            A.append(vec(a))
            b.append(vec([beta])[0])
        if dim is None:
            if not A:
                raise ValueError("cannot infer dimension of an empty row list")
            dim = len(A[0])
        return cls(dim, tuple(A), tuple(b))

    @property
    def rows(self):
        return list(zip(self.A, self.b))

    def __len__(self):
        return len(self.A)

    def contains(self, x: Sequence[Fraction]) -> bool:
        return all(dot(a, x) <= beta for a, beta in zip(self.A, self.b))

    def tight_rows(self, x: Sequence[Fraction]) -> list[int]:
        return [i for i, (a, beta) in enumerate(zip(self.A, self.b)) if dot(a, x) == beta]

    def scaled(self, lam) -> "HPolytope":
        """The dilate ``lam * P`` for rational ``lam > 0``."""
        lam = Fraction(lam)
        if lam <= 0:
            raise ValueError("dilation factor must be positive")
        return HPolytope(self.dim, self.A, tuple(lam * beta for beta in self.b))

    def canonical_rows(self) -> frozenset:
        """Row set up to positive rescaling, for order-free comparisons."""
        return frozenset(_normalize_row(a, beta) for a, beta in zip(self.A, self.b))

    def is_symmetric(self) -> bool:
        """True when every row ``(a, b)`` has its mirror ``(-a, b)`` (up to scaling)."""
        rows = self.canonical_rows()
        return all(_normalize_row(neg(a), beta) in rows for a, beta in rows)

    def dedup(self) -> "HPolytope":
        seen, A, b = set(), [], []
        for a, beta in zip(self.A, self.b):
            key = _normalize_row(a, beta)
            if key not in seen:
                seen.add(key)
                A.append(a)
                b.append(beta)
        return HPolytope(self.dim, tuple(A), tuple(b))


def _normalize_row(a, beta):
    scale = max((abs(x) for x in a), default=Fraction(0))
    if scale == 0:
        scale = abs(beta) or Fraction(1)
    return tuple(x / scale for x in a), beta / scale


@dataclass(frozen=True)
class VPolytope:
    dim: int
    points: tuple

    def __post_init__(self):
        if not self.points:
            raise ValueError("a V-polytope needs at least one point")
        for v in self.points:
            if len(v) != self.dim:
                raise ValueError(f"point of length {len(v)} in dimension {self.dim}")

    @classmethod
    def from_points(cls, points: Iterable[Sequence]):
        pts = tuple(vec(p) for p in points)
        if not pts:
            raise ValueError("a V-polytope needs at least one point")
        return cls(len(pts[0]), pts)

    def is_symmetric(self) -> bool:
        pts = set(self.points)
        return all(neg(v) in pts for v in pts)


def parse_polytope(text: str):
    """Parse the H/V text format; raises :class:`ParseError` with a line number."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body.split()))
    if not lines:
        raise ParseError("empty polytope file", 1)

    lineno, head = lines[0]
    if len(head) != 3 or head[0] not in ("H", "V"):
        raise ParseError("header must be 'H d n' or 'V d n'", lineno)
    kind = head[0]
    try:
        d, n = int(head[1]), int(head[2])
    except ValueError:
        raise ParseError("dimension and row count must be integers", lineno) from None
    if d < 1 or n < 0:
        raise ParseError("need d >= 1 and n >= 0", lineno)

    body = lines[1:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else (body[-1][0] if body else lineno)
        raise ParseError(f"expected {n} rows, found {len(body)}", where)

    width = d + 1 if kind == "H" else d
    rows = []
    for lineno, tokens in body:
        if len(tokens) != width:
            raise ParseError(f"expected {width} entries, found {len(tokens)}", lineno)
        try:
            rows.append(tuple(parse_rational(t) for t in tokens))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None

    if kind == "H":
        return HPolytope(d, tuple(r[:d] for r in rows), tuple(r[d] for r in rows))
    if n == 0:
        raise ParseError("V-polytope without points", lineno)
    return VPolytope(d, tuple(rows))


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else fmt_rational(x)


def serialize_polytope(P) -> str:
    if isinstance(P, HPolytope):
        out = [f"H {P.dim} {len(P.A)}"]
        out += [" ".join(_fmt(x) for x in (*a, beta)) for a, beta in zip(P.A, P.b)]
    elif isinstance(P, VPolytope):
        out = [f"V {P.dim} {len(P.points)}"]
        out += [" ".join(_fmt(x) for x in v) for v in P.points]
    else:
        raise TypeError(f"cannot serialize {type(P).__name__}")
    return "\n".join(out) + "\n"


def read_polytope(path):
    with open(path) as fh:
        return parse_polytope(fh.read())


def write_polytope(P, path):
    with open(path, "w") as fh:
        fh.write(serialize_polytope(P))


def box(half_widths: Sequence) -> HPolytope:
    """Axis box ``{|x_i| <= w_i}``."""
    d = len(half_widths)
    rows = []
    for i, w in enumerate(half_widths):
        for s in (1, -1):
            rows.append(([s if j == i else 0 for j in range(d)], w))
    return HPolytope.from_rows(rows)


def cross_polytope(d: int, radius=1) -> HPolytope:
    """``{x : sigma^T x <= radius for all sign vectors sigma}``."""
    from itertools import product

    return HPolytope.from_rows(((s, radius) for s in product((1, -1), repeat=d)), dim=d)
