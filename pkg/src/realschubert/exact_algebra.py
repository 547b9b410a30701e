"""Exact rational scalars and univariate polynomials over Q.

Real roots are counted with Sturm sequences built from pseudo-remainders on
primitive integer polynomials, so coefficient growth stays under control for
the large eliminants produced by determinantal systems.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from gmpy2 import gcd as _mpz_gcd, mpz, next_prime
from typing import Iterable, Optional, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions, decimal strings like '3/2' and gmpy2 mpq to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class UniPoly:
    """Dense univariate polynomial with Fraction coefficients, lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-as_rational(r), 1])
        return p

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "UniPoly(0)"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return "UniPoly(" + " + ".join(terms) + ")"

    def __add__(self, other) -> "UniPoly":
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "UniPoly":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "UniPoly":
        return _lift(other) - self

    def __mul__(self, other) -> "UniPoly":
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative power")
        result, base = UniPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other) -> tuple["UniPoly", "UniPoly"]:
        other = _lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs) + 1
        if dq <= 0:
            return UniPoly(), self
        quo = [Fraction(0)] * dq
        inv = 1 / other.lc
        m = len(other.coeffs) - 1
        for i in range(dq - 1, -1, -1):
            c = rem[i + m] * inv
            quo[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return UniPoly(quo), UniPoly(rem[:m])

    def __floordiv__(self, other) -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "UniPoly":
        return divmod(self, other)[1]

    def __call__(self, t):
        """Horner evaluation; works for any ring element supporting + and *."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        inv = 1 / self.lc
        return UniPoly([c * inv for c in self.coeffs])

    def shift(self, h) -> "UniPoly":
        """Return p(t + h)."""
        return self.compose(UniPoly([h, 1]))

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def integer_primitive(self) -> list[int]:
        """Integer coefficient list proportional to self with positive content 1.

        The sign is preserved (the result is a positive multiple of self).
        """
        if not self.coeffs:
            return []
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [mpz(c.numerator) * (den // c.denominator) for c in self.coeffs]
        return [int(v) for v in _int_primitive(ints)]


def _lift(p) -> UniPoly:
    if isinstance(p, UniPoly):
        return p
    return UniPoly([p])


def upoly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor; gcd(0, 0) is the zero polynomial.

    Runs a primitive pseudo-remainder sequence on integer coefficients; plain
    Euclid over Q blows up on eliminant-sized inputs.
    """
    f, g = _lift(f), _lift(g)
    if g.is_zero():
        return f.monic()
    if f.is_zero():
        return g.monic()
    a, b = _to_mpz(f.integer_primitive()), _to_mpz(g.integer_primitive())
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r, _ = _pseudo_rem(a, b)
        if not r:
            return UniPoly([int(c) for c in b]).monic()
        a, b = b, _int_primitive(r)
    return UniPoly([1])


def upoly_xgcd(f: UniPoly, g: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return (d, s, t) with s*f + t*g = d = monic gcd(f, g)."""
    r0, r1 = _lift(f), _lift(g)
    s0, s1 = UniPoly([1]), UniPoly()
    t0, t1 = UniPoly(), UniPoly([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def is_squarefree(f: UniPoly) -> bool:
    if f.is_zero():
        raise ValueError("is_squarefree is undefined for zero polynomial")
    if f.degree <= 1:
        return True
    ints = f.integer_primitive()
    # a coprime reduction mod a prime not dividing lc(f) certifies square-freeness
    p = 2**61
    for _ in range(3):
        p = int(next_prime(p))
        if ints[-1] % p and _squarefree_mod(ints, p):
            return True
    return upoly_gcd(f, f.derivative()).degree == 0


def _squarefree_mod(ints: list[int], p: int) -> bool:
    a = _trim_mod([c % p for c in ints])
    b = _trim_mod([i * c % p for i, c in enumerate(a)][1:])
    if len(b) < len(a) - 1:
        # derivative dropped degree mod p; the shortcut proves nothing here
        return False
    while b:
        inv = pow(b[-1], -1, p)
        r = list(a)
        while len(r) >= len(b):
            q = r[-1] * inv % p
            off = len(r) - len(b)
            if q:
                for j, c in enumerate(b):
                    r[off + j] = (r[off + j] - q * c) % p
            r.pop()
            _trim_mod(r)
        a, b = b, r
    return len(a) == 1


def _trim_mod(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


# --- Sturm sequences on primitive integer polynomials -----------------------


def _int_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _to_mpz(p: list[int]) -> list:
    return [mpz(c) for c in p]


def _int_primitive(p: list) -> list:
    g = mpz(0)
    for c in p:
        g = _mpz_gcd(g, c)
        if g == 1:
            return p
    if g > 1:
        return [c // g for c in p]
    return p


def _pseudo_rem(a: list[int], b: list[int]) -> tuple[list[int], int]:
    """prem(a, b) = lc(b)**delta * a mod b, with delta = deg a - deg b + 1.

    Returns the remainder and lc(b)**delta so the caller can track its sign.
    """
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    delta = len(a) - len(b) + 1
    scale = 1
    for _ in range(delta):
        if len(r) - 1 < db:
            # remaining rounds only multiply by lb
            r = [c * lb for c in r]
            scale *= lb
            continue
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for j, bc in enumerate(b):
            r[shift + j] -= lr * bc
        scale *= lb
        r.pop()
        _int_trim(r)
    return r, scale


def sturm_sequence(f: UniPoly) -> list[list[int]]:
    """Sturm chain of f as primitive integer coefficient lists (lowest first).

    Every element is a positive rational multiple of the classical chain
    f, f', -rem(f, f'), ..., so sign variations are unchanged.
    """
    if f.is_zero():
        raise ValueError("Sturm sequence of the zero polynomial")
    p0 = _to_mpz(f.integer_primitive())
    seq = [p0]
    if len(p0) == 1:
        return seq
    p1 = _int_primitive([i * c for i, c in enumerate(p0)][1:])
    seq.append(p1)
    while len(seq[-1]) > 1:
        r, scale = _pseudo_rem(seq[-2], seq[-1])
        if not r:
            break
        r = _int_primitive(r)
        if scale > 0:
            r = [-c for c in r]
        seq.append(r)
    return seq


def _int_sign_at(p: list[int], x: Fraction) -> int:
    # evaluate den**deg * p(num/den) with integers only
    num, den = x.numerator, x.denominator
    acc = 0
    dpow = 1
    for c in reversed(p):
        acc = acc * num + c * dpow
        dpow *= den
    return (acc > 0) - (acc < 0)


def _sign_at_infinity(p: list[int], positive: bool) -> int:
    s = 1 if p[-1] > 0 else -1
    if not positive and (len(p) - 1) % 2 == 1:
        s = -s
    return s


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _sign_variations(seq: list[list[int]], point: Optional[Fraction], positive: bool) -> int:
    if point is None:
        return _variations([_sign_at_infinity(p, positive) for p in seq])
    return _variations([_int_sign_at(p, point) for p in seq])


def count_real_roots(f: UniPoly, lower=None, upper=None) -> int:
    """Number of distinct real roots of f in the open interval (lower, upper).

    ``None`` stands for an infinite endpoint.  Endpoints that are roots are
    excluded.
    """
    if f.is_zero():
        raise ValueError("count_real_roots is undefined for zero polynomial")
    lo = None if lower is None else as_rational(lower)
    hi = None if upper is None else as_rational(upper)
    if lo is not None and hi is not None and lo >= hi:
        return 0
    seq = sturm_sequence(f)
    # Sturm's theorem counts roots in the half-open interval (lo, hi]
    count = _sign_variations(seq, lo, False) - _sign_variations(seq, hi, True)
    if hi is not None and f(hi) == 0:
        count -= 1
    return count


# --- dense linear algebra over Q ---------------------------------------------

Matrix = list[list[Fraction]]


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[as_rational(v) for v in row] for row in rows]


def row_echelon(rows: Iterable[Iterable]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = as_matrix(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def mat_rank(rows: Iterable[Iterable]) -> int:
    return len(row_echelon(rows)[1])


def nullspace(rows: Iterable[Iterable], ncols: Optional[int] = None) -> Matrix:
    """Basis of {x : rows @ x = 0}, one basis vector per free column."""
    m = as_matrix(rows)
    if ncols is None:
        ncols = len(m[0])
    red, pivots = row_echelon(m) if m else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def mat_inverse(rows: Iterable[Iterable]) -> Matrix:
    m = as_matrix(rows)
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("only square matrices can be inverted")
    aug = [r + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    red, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return [r[n:] for r in red]


def mat_det(rows: Iterable[Iterable]) -> Fraction:
    m = as_matrix(rows)
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def charpoly(rows: Iterable[Iterable]) -> UniPoly:
    """Characteristic polynomial det(x I - M) via the Faddeev-LeVerrier recursion."""
    m = as_matrix(rows)
    n = len(m)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    aux = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        prod = mat_mul(m, aux)
        aux = [[prod[i][j] + coeffs[n - k + 1] * ident[i][j] for j in range(n)] for i in range(n)]
        am = mat_mul(m, aux)
        coeffs[n - k] = -sum((am[i][i] for i in range(n)), Fraction(0)) / k
    return UniPoly(coeffs)
