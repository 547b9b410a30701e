"""Sparse multivariate polynomials over Q, polynomial matrices and elimination.

A ``MultiPoly`` maps exponent tuples to nonzero Fractions.  Determinants use a
Laplace expansion over column subsets (no divisions, cheap when most rows are
constant, which is the shape of every Schubert rank condition) or fraction-free
Bareiss elimination for larger matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence, Union

from .exact_algebra import UniPoly, as_rational


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for mono, c in terms.items():
                mono = tuple(mono)
                if len(mono) != nvars:
                    raise ValueError(f"exponent {mono} does not have length {nvars}")
                c = as_rational(c)
                if c:
                    clean[mono] = clean.get(mono, 0) + c
                    if not clean[mono]:
                        del clean[mono]
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        mono = [0] * nvars
        mono[index] = 1
        return cls(nvars, {tuple(mono): 1})

    @classmethod
    def variables(cls, nvars: int) -> list["MultiPoly"]:
        return [cls.variable(nvars, i) for i in range(nvars)]

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MultiPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, index: int) -> int:
        if not self.terms:
            return -1
        return max(m[index] for m in self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "MultiPoly(0)"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            c = self.terms[mono]
            vs = "*".join(f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(mono) if e)
            parts.append(f"{c}" + (f"*{vs}" if vs else ""))
        return "MultiPoly(" + " + ".join(parts) + ")"

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable-count mismatch")
            return other
        return MultiPoly.constant(self.nvars, other)

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            c = as_rational(other)
            if not c:
                return MultiPoly._raw(self.nvars, {})
            return MultiPoly._raw(self.nvars, {m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return MultiPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiPoly":
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        vals = [as_rational(v) for v in point]
        for mono, c in self.terms.items():
            t = c
            for v, e in zip(vals, mono):
                if e:
                    t *= v**e
            total += t
        return total

    def substitute(self, index: int, value) -> "MultiPoly":
        """Substitute a scalar for one variable (the variable count is kept)."""
        value = as_rational(value)
        out: dict = {}
        for mono, c in self.terms.items():
            e = mono[index]
            m = mono[:index] + (0,) + mono[index + 1 :]
            v = out.get(m, 0) + c * value**e
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MultiPoly._raw(self.nvars, out)

    def to_unipoly(self, index: int) -> UniPoly:
        """View a polynomial involving only variable ``index`` as a UniPoly."""
        coeffs: dict[int, Fraction] = {}
        for mono, c in self.terms.items():
            if any(e for i, e in enumerate(mono) if i != index):
                raise ValueError("polynomial involves other variables")
            coeffs[mono[index]] = c
        if not coeffs:
            return UniPoly()
        return UniPoly([coeffs.get(i, 0) for i in range(max(coeffs) + 1)])

    def divide_exact(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient of an exact division; raises ValueError if other does not divide self."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead = max(other.terms)
        lc = other.terms[lead]
        rem = dict(self.terms)
        quo: dict = {}
        while rem:
            m = max(rem)
            if any(a < b for a, b in zip(m, lead)):
                raise ValueError("inexact polynomial division")
            q = tuple(a - b for a, b in zip(m, lead))
            c = rem[m] / lc
            quo[q] = c
            for mo, co in other.terms.items():
                mm = tuple(a + b for a, b in zip(mo, q))
                v = rem.get(mm, 0) - c * co
                if v:
                    rem[mm] = v
                else:
                    rem.pop(mm, None)
        return MultiPoly._raw(self.nvars, quo)

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        return sorted(self.terms.items(), reverse=True)


@dataclass(frozen=True)
class PolyMatrix:
    """Dense grid of MultiPoly entries sharing one variable count."""

    entries: tuple

    def __init__(self, rows: Iterable[Iterable], nvars: int | None = None):
        rows = [list(r) for r in rows]
        if nvars is None:
            nvars = next((e.nvars for r in rows for e in r if isinstance(e, MultiPoly)), 0)
        grid = []
        for r in rows:
            out = []
            for e in r:
                if isinstance(e, MultiPoly):
                    if e.nvars != nvars:
                        raise ValueError("entries must share the same variable count")
                    out.append(e)
                else:
                    out.append(MultiPoly.constant(nvars, e))
            grid.append(tuple(out))
        if grid and any(len(r) != len(grid[0]) for r in grid):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", tuple(grid))
        object.__setattr__(self, "_nvars", nvars)

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for j in cols] for i in rows], self.nvars)

    def stack(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix(list(self.entries) + list(other.entries), self.nvars)


def _laplace_det(rows: Sequence[Sequence[MultiPoly]], cols: Sequence[int], nvars: int) -> MultiPoly:
    """Determinant by expansion over column subsets, bottom row upward.

    minors[S] holds the determinant of the last |S| rows restricted to columns S;
    each level reuses the previous one, so the cost is O(n 2^n) products.
    """
    n = len(rows)
    zero = MultiPoly._raw(nvars, {})
    minors = {(): MultiPoly.constant(nvars, 1)}
    for level in range(1, n + 1):
        row = rows[n - level]
        nxt = {}
        for subset in combinations(cols, level):
            acc = zero
            sign = 1
            for pos, c in enumerate(subset):
                entry = row[c]
                if not entry.is_zero():
                    rest = subset[:pos] + subset[pos + 1 :]
                    sub = minors.get(rest)
                    if sub is not None and not sub.is_zero():
                        term = entry * sub
                        acc = acc + term if sign > 0 else acc - term
                sign = -sign
            nxt[subset] = acc
        minors = nxt
    return minors[tuple(cols)]


def _bareiss_det(rows: Sequence[Sequence[MultiPoly]], nvars: int) -> MultiPoly:
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = MultiPoly.constant(nvars, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return MultiPoly._raw(nvars, {})
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num.divide_exact(prev) if not prev.is_constant() else num * (1 / prev.constant_value())
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def determinant(m: PolyMatrix, method: str = "auto") -> MultiPoly:
    """Exact determinant of a square polynomial matrix."""
    if m.rows != m.cols:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return MultiPoly.constant(m.nvars, 1)
    if method == "auto":
        method = "laplace" if m.rows <= 12 else "bareiss"
    if method == "laplace":
        return _laplace_det(m.entries, range(m.cols), m.nvars)
    if method == "bareiss":
        return _bareiss_det(m.entries, m.nvars)
    raise ValueError(f"unknown determinant method {method!r}")


def cofactor_determinant(m: PolyMatrix) -> MultiPoly:
    """Textbook first-row cofactor expansion; used as an independent check."""
    if m.rows != m.cols:
        raise ValueError("non-square matrix")
    n = m.rows
    if n == 0:
        return MultiPoly.constant(m.nvars, 1)
    if n == 1:
        return m[0, 0]
    total = MultiPoly._raw(m.nvars, {})
    for j in range(n):
        if m[0, j].is_zero():
            continue
        sub = m.submatrix(range(1, n), [c for c in range(n) if c != j])
        term = m[0, j] * cofactor_determinant(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


def minors(m: PolyMatrix, size: int) -> list[MultiPoly]:
    """All size x size minors, row subsets outer, column subsets inner, both lexicographic."""
    if size < 1 or size > min(m.rows, m.cols):
        raise ValueError(f"minor size {size} out of range for a {m.rows}x{m.cols} matrix")
    out = []
    for rs in combinations(range(m.rows), size):
        rows = [m.entries[i] for i in rs]
        for cs in combinations(range(m.cols), size):
            out.append(_laplace_det(rows, cs, m.nvars))
    return out


def eliminate_to_univariate(generators: Sequence[MultiPoly], keep: int):
    """Generator of the elimination ideal <generators> ∩ Q[x_keep], made monic.

    Returns ``NOT_ZERO_DIMENSIONAL`` when that intersection is the zero ideal.
    """
    from .groebner import eliminant

    return eliminant(generators, keep)
