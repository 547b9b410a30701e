"""Buchberger's algorithm over Q and univariate eliminants from the quotient ring.

Internal kernel.  Monomials are packed into Python ints with an encoding that
is linear in the exponent vector and order-preserving, so ``key(a*b) ==
key(a) + key(b)`` and ``max`` over dict keys gives the leading monomial.
Coefficients are gmpy2 ``mpz``; reductions are fraction-free.

For grevlex on ``x1 > ... > xn`` with field width w::

    key = deg << (w*n)  +  sum_i (deg - e_i) << (w*(i-1))

The block order used for elimination puts the kept variable in its own
trailing block: ``key = grevlex_key(others) << w  +  e_keep``.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from gmpy2 import gcd, mpq, mpz

from .exact_algebra import UniPoly
from .multipoly import MultiPoly

FIELD = 12
MASK = (1 << FIELD) - 1


class _NotZeroDimensional:
    """Tagged failure: the elimination ideal in the kept variable is zero."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NOT_ZERO_DIMENSIONAL"

    def __bool__(self) -> bool:
        return False


NOT_ZERO_DIMENSIONAL = _NotZeroDimensional()


class MonomialOrder:
    """Packed-int encoding for grevlex, or grevlex-then-keep elimination order."""

    def __init__(self, nvars: int, keep: Optional[int] = None):
        self.nvars = nvars
        self.keep = keep
        if keep is None:
            self.others = list(range(nvars))
        else:
            self.others = [i for i in range(nvars) if i != keep]
        self._decoded: dict[int, tuple] = {}
        self._m = len(self.others)

    def _grevlex(self, exps: Sequence[int]) -> int:
        deg = sum(exps)
        key = deg << (FIELD * len(exps))
        for i, e in enumerate(exps):
            key += (deg - e) << (FIELD * i)
        return key

    def encode(self, mono: Sequence[int]) -> int:
        if max(mono, default=0) > MASK // 2:
            raise OverflowError("exponent too large for packed monomials")
        if self.keep is None:
            return self._grevlex(mono)
        return (self._grevlex([mono[i] for i in self.others]) << FIELD) + mono[self.keep]

    def decode(self, key: int) -> tuple:
        hit = self._decoded.get(key)
        if hit is not None:
            return hit
        exps = [0] * self.nvars
        k = key
        if self.keep is not None:
            exps[self.keep] = k & MASK
            k >>= FIELD
        m = self._m
        deg = k >> (FIELD * m)
        for pos, var in enumerate(self.others):
            exps[var] = deg - ((k >> (FIELD * pos)) & MASK)
        out = tuple(exps)
        self._decoded[key] = out
        return out

    def var_key(self, index: int) -> int:
        mono = [0] * self.nvars
        mono[index] = 1
        return self.encode(mono)


def _divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def to_internal(p: MultiPoly, order: MonomialOrder) -> dict:
    enc = order.encode
    return {enc(m): mpq(c.numerator, c.denominator) for m, c in p.terms.items()}


def _content(p: dict):
    g = mpz(0)
    for c in p.values():
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _primitive(p: dict) -> dict:
    g = _content(p)
    if g > 1:
        return {k: c // g for k, c in p.items()}
    return p


def _integerize_scale(p: dict) -> mpq:
    den = mpz(1)
    for c in p.values():
        d = mpq(c).denominator
        den = den * d // gcd(den, d)
    return mpq(den)


def _integerize(p: dict) -> dict:
    """Integer multiple of p (by the lcm of its denominators)."""
    s = _integerize_scale(p)
    return {k: mpz(mpq(c) * s) for k, c in p.items()}


def _as_mpz_num(c):
    return mpz(c)


def from_internal(p: dict, order: MonomialOrder) -> MultiPoly:
    dec = order.decode
    return MultiPoly(order.nvars, {dec(k): Fraction(int(c.numerator), int(c.denominator)) for k, c in p.items()})


class GroebnerBasis:
    """Reduced Groebner basis of an ideal of Q[x_1..x_n] under a MonomialOrder.

    Elements are stored as primitive integer polynomials (dict key -> mpz) with
    positive leading coefficient; reductions are fraction-free.
    """

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.polys: list[dict] = []
        self.lead: list[int] = []
        self.lead_exp: list[tuple] = []
        self._lc: list = []
        self._tails: list[list] = []
        self._reducer_memo: dict[int, tuple[Optional[int], int]] = {}

    # -- reduction ---------------------------------------------------------

    def _append(self, p: dict) -> int:
        p = _primitive(p)
        lm = max(p)
        if p[lm] < 0:
            p = {k: -c for k, c in p.items()}
        self.polys.append(p)
        self.lead.append(lm)
        self.lead_exp.append(self.order.decode(lm))
        self._lc.append(p[lm])
        self._tails.append([(k, c) for k, c in p.items() if k != lm])
        return len(self.polys) - 1

    def _reducer(self, key: int, active: Optional[set] = None) -> Optional[int]:
        memo = self._reducer_memo.get(key)
        start = 0
        if memo is not None:
            idx, checked = memo
            if idx is not None and (active is None or idx in active):
                return idx
            if idx is None:
                start = checked
        exp = self.order.decode(key)
        lead_exp = self.lead_exp
        for i in range(start, len(lead_exp)):
            if active is not None and i not in active:
                continue
            if _divides(lead_exp[i], exp):
                self._reducer_memo[key] = (i, len(lead_exp))
                return i
        if active is None:
            self._reducer_memo[key] = (None, len(lead_exp))
        return None

    def reduce_scaled(self, p: dict, active: Optional[set] = None) -> tuple[dict, mpq]:
        """Fraction-free full reduction.

        Returns ``(r, s)`` with integer r and rational s such that
        ``r == s * NF(p)``; r is primitive (or empty).
        """
        p = dict(p)
        out: dict = {}
        out_mark: dict = {}
        cum = mpz(1)
        heap = [-k for k in p]
        heapq.heapify(heap)
        lead = self.lead
        tails = self._tails
        lcs = self._lc
        while heap:
            m = -heapq.heappop(heap)
            c = p.pop(m, None)
            if c is None:
                continue
            while heap and -heap[0] == m:
                heapq.heappop(heap)
            idx = self._reducer(m, active)
            if idx is None:
                out[m] = c
                out_mark[m] = cum
                continue
            a = lcs[idx]
            d = gcd(a, c)
            mult = a // d
            fac = c // d
            if mult != 1:
                for k in p:
                    p[k] *= mult
                cum *= mult
            q = m - lead[idx]
            for k, cg in tails[idx]:
                kk = k + q
                v = p.get(kk)
                if v is None:
                    p[kk] = -fac * cg
                    heapq.heappush(heap, -kk)
                else:
                    v -= fac * cg
                    if v:
                        p[kk] = v
                    else:
                        del p[kk]
        if cum != 1:
            for k, c in out.items():
                mark = out_mark[k]
                out[k] = c * (cum // mark) if mark != cum else c
        scale = mpq(cum)
        if out:
            g = _content(out)
            if g != 1:
                out = {k: c // g for k, c in out.items()}
                scale /= g
        return out, scale

    def reduce(self, p: dict, active: Optional[set] = None) -> dict:
        """Normal form of p up to a nonzero scalar factor."""
        return self.reduce_scaled(p, active)[0]

    def normal_form(self, p: dict) -> dict:
        """Exact normal form with mpq coefficients."""
        r, s = self.reduce_scaled({k: _as_mpz_num(c) for k, c in _integerize(p).items()})
        inv = _integerize_scale(p) / s
        return {k: c * inv for k, c in r.items()}

    # -- Buchberger ----------------------------------------------------------

    @classmethod
    def compute(cls, generators: Iterable[dict], order: MonomialOrder) -> "GroebnerBasis":
        gb = cls(order)
        gens = [_integerize(g) for g in generators if g]
        gens.sort(key=max)
        sugar: list[int] = []
        active: list[int] = []
        pairs: list[tuple] = []
        decode = order.decode

        def total_degree(p):
            return max(sum(decode(k)) for k in p)

        def add(h: dict, s: int) -> None:
            nonlocal active, pairs
            idx = gb._append(h)
            sugar.append(s)
            h_exp = gb.lead_exp[idx]
            # Gebauer-Moeller update
            cands = [(g, _lcm(gb.lead_exp[g], h_exp)) for g in active]
            keep = []
            for pos, (g, l) in enumerate(cands):
                if _coprime(gb.lead_exp[g], h_exp) or not (
                    any(_divides(l2, l) for _, l2 in cands[pos + 1 :])
                    or any(_divides(l2, l) for _, l2 in keep)
                ):
                    keep.append((g, l))
            new_pairs = [(g, l) for g, l in keep if not _coprime(gb.lead_exp[g], h_exp)]
            survivors = []
            for entry in pairs:
                _, _, i, j, lij = entry
                if (
                    _divides(h_exp, lij)
                    and _lcm(gb.lead_exp[i], h_exp) != lij
                    and _lcm(gb.lead_exp[j], h_exp) != lij
                ):
                    continue
                survivors.append(entry)
            for g, l in new_pairs:
                deg_l = sum(l)
                s_pair = max(sugar[g] + deg_l - sum(gb.lead_exp[g]), s + deg_l - sum(h_exp))
                survivors.append((s_pair, order.encode(l), g, idx, l))
            heapq.heapify(survivors)
            pairs = survivors
            active = [g for g in active if not _divides(h_exp, gb.lead_exp[g])] + [idx]

        for g in gens:
            s = total_degree(g)
            h = gb.reduce(g)
            if h:
                if len(h) == 1 and next(iter(h)) == 0:
                    return cls._unit(order)
                add(h, s)

        while pairs:
            s_pair, _, i, j, l = heapq.heappop(pairs)
            sp = gb._spoly(i, j, l)
            h = gb.reduce(sp)
            if h:
                if len(h) == 1 and next(iter(h)) == 0:
                    return cls._unit(order)
                add(h, s_pair)

        return gb._reduced(active)

    def _spoly(self, i: int, j: int, l: tuple) -> dict:
        lk = self.order.encode(l)
        qi = lk - self.lead[i]
        qj = lk - self.lead[j]
        ai, aj = self._lc[i], self._lc[j]
        d = gcd(ai, aj)
        mi, mj = aj // d, ai // d
        out: dict = {}
        for k, c in self._tails[i]:
            out[k + qi] = mi * c
        for k, c in self._tails[j]:
            kk = k + qj
            v = out.get(kk)
            if v is None:
                out[kk] = -mj * c
            else:
                v -= mj * c
                if v:
                    out[kk] = v
                else:
                    del out[kk]
        return out

    @classmethod
    def _unit(cls, order: MonomialOrder) -> "GroebnerBasis":
        gb = cls(order)
        gb._append({0: mpz(1)})
        return gb

    def _reduced(self, active: list[int]) -> "GroebnerBasis":
        # minimal basis: drop elements whose leading monomial is divisible by another's
        chosen = []
        for i in sorted(active, key=lambda t: self.lead[t]):
            if not any(_divides(self.lead_exp[c], self.lead_exp[i]) for c in chosen):
                chosen.append(i)
        out = GroebnerBasis(self.order)
        for i in chosen:
            out._append(dict(self.polys[i]))
        # inter-reduce tails against the rest of the minimal basis
        final = GroebnerBasis(self.order)
        for pos in range(len(out.polys)):
            lm = out.lead[pos]
            lc = out._lc[pos]
            tail = {k: c for k, c in out.polys[pos].items() if k != lm}
            others = set(range(len(out.polys))) - {pos}
            red, scale = out.reduce_scaled(tail, active=others)
            # lc * x^lm + tail  ~  scale*lc * x^lm + red  (red = scale * NF(tail))
            num, den = scale.numerator, scale.denominator
            poly = {k: c * den for k, c in red.items()}
            poly[lm] = lc * num
            final._append(poly)
        return final

    def is_unit(self) -> bool:
        return len(self.polys) == 1 and self.lead[0] == 0

    def is_zero_dimensional(self) -> bool:
        if self.is_unit():
            return True
        n = self.order.nvars
        seen = set()
        for e in self.lead_exp:
            nz = [i for i, v in enumerate(e) if v]
            if len(nz) == 1:
                seen.add(nz[0])
        return len(seen) == n

    def standard_monomials(self, limit: int = 100000) -> list[int]:
        """Keys of monomials outside the leading-term ideal, sorted ascending."""
        if self.is_unit():
            return []
        if not self.is_zero_dimensional():
            raise ValueError("ideal is not zero-dimensional")
        order = self.order
        n = order.nvars
        start = tuple([0] * n)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for mono in frontier:
                for v in range(n):
                    m = mono[:v] + (mono[v] + 1,) + mono[v + 1 :]
                    if m in seen:
                        continue
                    if any(_divides(le, m) for le in self.lead_exp):
                        continue
                    seen.add(m)
                    nxt.append(m)
                    if len(seen) > limit:
                        raise ValueError("quotient ring too large")
            frontier = nxt
        return sorted(order.encode(m) for m in seen)

    def multiplication_map(self, var: int, basis: Optional[list[int]] = None) -> dict[int, dict]:
        """Normal forms of x_var * s for every standard monomial s."""
        if basis is None:
            basis = self.standard_monomials()
        xkey = self.order.var_key(var)
        out = {}
        for s in basis:
            r, sc = self.reduce_scaled({s + xkey: mpz(1)})
            inv = 1 / sc
            out[s] = {k: c * inv for k, c in r.items()}
        return out

    def minimal_polynomial(self, var: int, basis: Optional[list[int]] = None) -> UniPoly:
        """Monic generator of I ∩ Q[x_var], via the Krylov sequence of 1 under x_var.

        Works with the integer matrix L * (multiplication by x_var), where L
        clears every denominator, and undoes the scaling at the end.
        """
        if self.is_unit():
            return UniPoly([1])
        if basis is None:
            basis = self.standard_monomials()
        xkey = self.order.var_key(var)
        cols = {}
        scales = {}
        for s in basis:
            r, sc = self.reduce_scaled({s + xkey: mpz(1)})
            sc = mpq(sc)
            # NF = r / sc = (r * den) / num
            cols[s] = {k: c * sc.denominator for k, c in r.items()}
            scales[s] = sc.numerator
        big = mpz(1)
        for sc in scales.values():
            big = big * abs(sc) // gcd(big, sc)
        mult = {}
        for s, r in cols.items():
            f = big // scales[s]
            mult[s] = [(k, c * f) for k, c in r.items()]

        def apply(v: dict) -> dict:
            out: dict = {}
            for s, c in v.items():
                for k, a in mult[s]:
                    out[k] = out.get(k, 0) + c * a
            return {k: c for k, c in out.items() if c}

        # echelon rows: pivot -> (vector, combination of Krylov vectors)
        echelon: dict[int, tuple[dict, dict]] = {}
        vec = {0: mpz(1)}
        power = 0
        while True:
            comb = {power: mpz(1)}
            v = dict(vec)
            for piv in sorted(echelon, reverse=True):
                f = v.get(piv)
                if not f:
                    continue
                rv, rc = echelon[piv]
                p = rv[piv]
                g = gcd(p, f)
                a, b = p // g, f // g
                keys = set(v) | set(rv)
                v = {k: a * v.get(k, 0) - b * rv.get(k, 0) for k in keys}
                v = {k: c for k, c in v.items() if c}
                keys = set(comb) | set(rc)
                comb = {k: a * comb.get(k, 0) - b * rc.get(k, 0) for k in keys}
                comb = {k: c for k, c in comb.items() if c}
            if not v:
                # sum comb[i] * (L x)^i vanishes modulo the ideal
                coeffs = [mpz(0)] * (power + 1)
                for k, c in comb.items():
                    coeffs[k] = c * big**k
                g = mpz(0)
                for c in coeffs:
                    g = gcd(g, c)
                top = coeffs[power] // g
                return UniPoly(Fraction(int(c // g), int(top)) for c in coeffs)
            g = mpz(0)
            for c in v.values():
                g = gcd(g, c)
            for c in comb.values():
                g = gcd(g, c)
            if g > 1:
                v = {k: c // g for k, c in v.items()}
                comb = {k: c // g for k, c in comb.items()}
            echelon[max(v)] = (v, comb)
            power += 1
            if power > len(basis):
                raise RuntimeError("Krylov sequence longer than the quotient dimension")
            vec = apply(vec)

    def as_multipolys(self) -> list[MultiPoly]:
        return [from_internal(p, self.order) for p in self.polys]


def groebner(generators: Sequence[MultiPoly], keep: Optional[int] = None) -> GroebnerBasis:
    """Reduced Groebner basis in grevlex, or in the elimination order keeping ``keep``."""
    if not generators:
        raise ValueError("no generators")
    nvars = generators[0].nvars
    if any(g.nvars != nvars for g in generators):
        raise ValueError("generators must share the same variable count")
    order = MonomialOrder(nvars, keep)
    return GroebnerBasis.compute([to_internal(g, order) for g in generators], order)


def eliminant(generators: Sequence[MultiPoly], keep: int):
    gb = groebner(generators)
    if gb.is_unit():
        return UniPoly([1])
    if gb.is_zero_dimensional():
        return gb.minimal_polynomial(keep)
    # positive-dimensional: look for a univariate element under an elimination order
    egb = groebner(generators, keep=keep)
    for p in egb.as_multipolys():
        if all(e == 0 for m in p.terms for i, e in enumerate(m) if i != keep):
            return p.to_unipoly(keep).monic()
    return NOT_ZERO_DIMENSIONAL
