"""Flags anchored to the rational normal curve t -> (1, t, ..., t^(n-1)).

A flag is stored as a matrix whose first i rows span its i-dimensional
subspace.  Specs record how the flag is anchored to the curve; ``realize_flag``
turns a spec into exact rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

from .exact_algebra import UniPoly, as_matrix, as_rational, mat_inverse, mat_rank
from .multipoly import MultiPoly, PolyMatrix, determinant

INFINITY = math.inf


def is_infinite(point) -> bool:
    return isinstance(point, float) and math.isinf(point)


def as_curve_point(value):
    """Rational value or the point at infinity (given as math.inf or the text 'inf')."""
    if isinstance(value, str) and value.strip().lower() in ("inf", "infinity", "oo"):
        return INFINITY
    if is_infinite(value):
        if value < 0:
            raise ValueError("only +inf is a curve point")
        return INFINITY
    return as_rational(value)


@dataclass(frozen=True)
class Secant:
    points: tuple[Fraction, ...]

    def __init__(self, points: Iterable):
        pts = tuple(as_curve_point(p) for p in points)
        if any(is_infinite(p) for p in pts):
            raise ValueError("a secant flag cannot use the point at infinity")
        if any(a >= b for a, b in zip(pts, pts[1:])):
            raise ValueError(f"secant points must be strictly increasing: {pts}")
        object.__setattr__(self, "points", pts)

    @property
    def point_count(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Osculating:
    point: Union[Fraction, float]

    def __init__(self, point):
        object.__setattr__(self, "point", as_curve_point(point))

    @property
    def point_count(self) -> float:
        return math.inf


@dataclass(frozen=True)
class GeneralizedSecant:
    anchors: tuple[tuple[Fraction, int], ...]

    def __init__(self, anchors: Iterable):
        anc = tuple((as_rational(p), int(o)) for p, o in anchors)
        if any(o < 1 for _, o in anc):
            raise ValueError("anchor orders must be positive")
        if len({p for p, _ in anc}) != len(anc):
            raise ValueError("anchor points must be distinct")
        object.__setattr__(self, "anchors", anc)

    @property
    def point_count(self) -> int:
        return sum(o for _, o in self.anchors)


@dataclass(frozen=True)
class FlagMatrix:
    """Explicit flag: the first i rows span the i-dimensional subspace."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable]):
        m = tuple(tuple(r) for r in as_matrix(rows))
        if m and any(len(r) != len(m[0]) for r in m):
            raise ValueError("ragged flag matrix")
        if len(m) > (len(m[0]) if m else 0):
            raise ValueError("a flag matrix has at most n rows")
        if mat_rank(m) != len(m):
            raise ValueError("flag matrix rows must be linearly independent")
        object.__setattr__(self, "rows", m)

    @property
    def depth(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def point_count(self) -> int:
        return len(self.rows)

    def prefix(self, depth: int) -> "FlagMatrix":
        if depth > len(self.rows):
            raise ValueError(f"flag has only {len(self.rows)} rows, {depth} requested")
        return FlagMatrix(self.rows[:depth])


FlagSpec = Union[Secant, Osculating, GeneralizedSecant]


def moment_point(t, n: int) -> list[Fraction]:
    t = as_rational(t)
    return [t**j for j in range(n)]


def curve_derivative(t, order: int, n: int) -> list[Fraction]:
    """order-th derivative of the moment curve at t (plain, not divided by order!)."""
    t = as_rational(t)
    return [
        Fraction(math.perm(j, order)) * t ** (j - order) if j >= order else Fraction(0)
        for j in range(n)
    ]


def realize_flag(spec, depth: int, n: int) -> FlagMatrix:
    """First ``depth`` rows of the flag described by ``spec`` in n-space."""
    if not 0 < depth <= n:
        raise ValueError(f"depth must be in 1..{n}, got {depth}")
    if isinstance(spec, FlagMatrix):
        if spec.n != n:
            raise ValueError(f"flag lives in {spec.n}-space, expected {n}")
        return spec.prefix(depth)
    if isinstance(spec, Secant):
        if len(spec.points) < depth:
            raise ValueError(f"secant flag has {len(spec.points)} points, {depth} needed")
        return FlagMatrix(moment_point(t, n) for t in spec.points[:depth])
    if isinstance(spec, Osculating):
        if is_infinite(spec.point):
            return FlagMatrix([Fraction(int(j == n - 1 - i)) for j in range(n)] for i in range(depth))
        return FlagMatrix(curve_derivative(spec.point, j, n) for j in range(depth))
    if isinstance(spec, GeneralizedSecant):
        if spec.point_count < depth:
            raise ValueError(f"generalized secant flag has {spec.point_count} points, {depth} needed")
        rows = [curve_derivative(p, j, n) for p, o in spec.anchors for j in range(o)]
        return FlagMatrix(rows[:depth])
    raise TypeError(f"not a flag spec: {spec!r}")


def dual_flag(m: FlagMatrix) -> FlagMatrix:
    """Flag whose i-th subspace annihilates the (n-i)-th subspace of m."""
    n = m.n
    if m.depth != n:
        raise ValueError("dual_flag needs a full n x n flag")
    inv = mat_inverse(m.rows)
    # columns of the inverse, last first
    return FlagMatrix([inv[i][j] for i in range(n)] for j in range(n - 1, -1, -1))


def _elementary_coefficients(points: Sequence) -> list[Fraction]:
    # coefficients of prod (s - p), lowest degree first
    return list(UniPoly.from_roots(points).coeffs)


def cosecant_normal(points: Sequence) -> list[Fraction]:
    """Normal vector of the hyperplane through gamma(s_1), ..., gamma(s_{n-1})."""
    pts = [as_rational(p) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("cosecant points must be distinct")
    return _elementary_coefficients(pts)


def dual_curve_point(t, n: int) -> list[Fraction]:
    """Coefficients of (s - t)^(n-1), the point of the dual curve at t."""
    t = as_rational(t)
    return [comb(n - 1, j) * (-t) ** (n - 1 - j) for j in range(n)]


def cosecant_subspace(points: Sequence, n: int) -> FlagMatrix:
    """Basis of the (n-k)-space annihilating gamma(s_1), ..., gamma(s_k)."""
    pts = [as_rational(p) for p in points]
    k = len(pts)
    if len(set(pts)) != k:
        raise ValueError("cosecant points must be distinct")
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    base = _elementary_coefficients(pts)
    rows = []
    for j in range(n - k):
        rows.append([Fraction(0)] * j + base + [Fraction(0)] * (n - k - 1 - j))
    return FlagMatrix(rows)


def pairing(u: Sequence, v: Sequence) -> Fraction:
    return sum((as_rational(a) * as_rational(b) for a, b in zip(u, v)), Fraction(0))


def _unipoly_det(entries: list[list[UniPoly]]) -> UniPoly:
    mp = [[MultiPoly(1, {(i,): c for i, c in enumerate(p.coeffs)}) for p in row] for row in entries]
    return determinant(PolyMatrix(mp, 1)).to_unipoly(0)


def discrete_wronskian(fs: Sequence[UniPoly], h) -> UniPoly:
    """det [f_i(t + (j-1) h)] as a polynomial in t."""
    h = as_rational(h)
    if h == 0:
        raise ValueError("step size must be nonzero")
    if not fs:
        raise ValueError("need at least one polynomial")
    k = len(fs)
    return _unipoly_det([[f.shift(j * h) for j in range(k)] for f in fs])


def wronskian(fs: Sequence[UniPoly]) -> UniPoly:
    """det [f_i^(j)] as a polynomial in t."""
    if not fs:
        raise ValueError("need at least one polynomial")
    k = len(fs)
    rows = []
    for f in fs:
        row, g = [], f
        for _ in range(k):
            row.append(g)
            g = g.derivative()
        rows.append(row)
    return _unipoly_det(rows)


# --- text syntax --------------------------------------------------------------


def parse_flag_spec(text: str):
    """Parse 'sec:1/2,3/2,5', 'osc:3', 'osc:inf' or 'gsec:0^2,1'."""
    kind, _, body = text.strip().partition(":")
    kind = kind.strip().lower()
    if kind == "sec":
        return Secant(Fraction(t) for t in body.split(","))
    if kind == "osc":
        return Osculating(body)
    if kind == "gsec":
        anchors = []
        for tok in body.split(","):
            p, _, o = tok.partition("^")
            anchors.append((Fraction(p), int(o) if o else 1))
        return GeneralizedSecant(anchors)
    raise ValueError(f"unknown flag kind in {text!r}")


def format_flag_spec(spec) -> str:
    if isinstance(spec, Secant):
        return "sec:" + ",".join(str(p) for p in spec.points)
    if isinstance(spec, Osculating):
        return "osc:" + ("inf" if is_infinite(spec.point) else str(spec.point))
    if isinstance(spec, GeneralizedSecant):
        return "gsec:" + ",".join(f"{p}^{o}" if o != 1 else str(p) for p, o in spec.anchors)
    if isinstance(spec, FlagMatrix):
        return "matrix:" + ";".join(",".join(str(v) for v in r) for r in spec.rows)
    raise TypeError(f"not a flag spec: {spec!r}")
