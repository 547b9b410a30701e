from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from realschubert.exact_algebra import (
    UniPoly,
    charpoly,
    count_real_roots,
    is_squarefree,
    mat_det,
    mat_inverse,
    mat_mul,
    nullspace,
    sturm_sequence,
    upoly_gcd,
    upoly_xgcd,
)

x = UniPoly.x()
small = st.integers(min_value=-20, max_value=20)
coeff_lists = st.lists(small, min_size=1, max_size=7)


def to_sympy(p: UniPoly):
    t = sympy.Symbol("t")
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)], t)


def test_gcd_examples():
    assert upoly_gcd(x**2 - 1, x - 1) == x - 1
    assert upoly_gcd(x**2 + 1, x) == UniPoly([1])
    f = (x - 2) ** 3 * (x + 1)
    g = (x - 2) * (x + 3)
    assert upoly_gcd(f, g) == x - 2


def test_gcd_with_zero_is_monic_input():
    assert upoly_gcd(2 * x + 4, UniPoly()) == x + 2
    assert upoly_gcd(UniPoly(), UniPoly()).is_zero()


def test_squarefree_examples():
    assert is_squarefree(x**2 - 1)
    assert not is_squarefree((x - 1) ** 2)
    assert is_squarefree(x**5 - x)


def test_squarefree_zero_raises():
    with pytest.raises(ValueError, match="undefined for zero polynomial"):
        is_squarefree(UniPoly())


def test_count_examples():
    assert count_real_roots(x**2 + 1) == 0
    assert count_real_roots(x**3 - x) == 3
    assert count_real_roots((x - 1) * (x - 2) * (x - 3) * (x**2 + x + 1)) == 3


def test_count_open_interval_excludes_endpoints():
    f = x**3 - x
    assert count_real_roots(f, -1, 1) == 1
    assert count_real_roots(f, Fraction(-1, 2), None) == 2
    assert count_real_roots(f, None, 0) == 1
    assert count_real_roots(f, 2, 1) == 0


def test_count_zero_raises():
    with pytest.raises(ValueError):
        count_real_roots(UniPoly())


def test_sturm_chain_ends_in_constant_for_squarefree():
    seq = sturm_sequence((x - 1) * (x + 2) * (x**2 + 3))
    assert len(seq[-1]) == 1


@settings(max_examples=60, deadline=None)
@given(st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=12), min_size=0, max_size=6, unique=True),
       st.integers(min_value=0, max_value=3))
def test_count_matches_constructed_roots(roots, npos):
    # prod (x - r_i) times a positive-definite factor
    q = UniPoly([1])
    for j in range(npos):
        q = q * (x**2 + j + 1)
    f = UniPoly.from_roots(roots) * q
    assert count_real_roots(f) == len(roots)


@settings(max_examples=60, deadline=None)
@given(coeff_lists, small, small, small)
def test_interval_additivity(cs, a, b, c):
    f = UniPoly(cs)
    if f.degree < 1:
        return
    a, b, c = sorted((a, b, c))
    if f(b) == 0 or len({a, b, c}) < 3:
        return
    assert count_real_roots(f, a, b) + count_real_roots(f, b, c) == count_real_roots(f, a, c)


@settings(max_examples=60, deadline=None)
@given(coeff_lists)
def test_square_is_never_squarefree(cs):
    f = UniPoly(cs)
    if f.degree < 1:
        return
    assert not is_squarefree(f * f)


@settings(max_examples=60, deadline=None)
@given(coeff_lists)
def test_real_root_count_matches_sympy(cs):
    f = UniPoly(cs)
    if f.is_zero():
        return
    expected = len(set(sympy.real_roots(to_sympy(f)))) if f.degree > 0 else 0
    assert count_real_roots(f) == expected


@settings(max_examples=60, deadline=None)
@given(coeff_lists, coeff_lists)
def test_gcd_matches_sympy(a, b):
    f, g = UniPoly(a), UniPoly(b)
    if f.is_zero() and g.is_zero():
        return
    ours = upoly_gcd(f, g)
    theirs = sympy.gcd(to_sympy(f), to_sympy(g)).monic()
    assert [sympy.Rational(c.numerator, c.denominator) for c in reversed(ours.coeffs)] == theirs.all_coeffs()


@settings(max_examples=40, deadline=None)
@given(coeff_lists, coeff_lists)
def test_xgcd_bezout(a, b):
    f, g = UniPoly(a), UniPoly(b)
    d, s, t = upoly_xgcd(f, g)
    assert s * f + t * g == d


@settings(max_examples=100, deadline=None)
@given(st.integers(), st.integers(min_value=1), st.integers(), st.integers(min_value=1))
def test_rational_sum_against_integer_check(p, q, r, s):
    total = Fraction(p, q) + Fraction(r, s)
    # independent big-integer cross-multiplication
    assert total.numerator * q * s == (p * s + r * q) * total.denominator
    assert total.denominator > 0


def test_division_identity():
    f = (x - 3) * (x**2 + 2) + 5
    g = x**2 + 2
    q, r = divmod(f, g)
    assert q * g + r == f and r.degree < g.degree


def test_compose_and_shift():
    f = x**2 + 1
    assert f.shift(1) == x**2 + 2 * x + 2
    assert f.compose(2 * x) == 4 * x**2 + 1


def test_linear_algebra_helpers():
    m = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    inv = mat_inverse(m)
    assert mat_mul(m, inv) == [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    assert mat_det(m) == 18
    cp = charpoly(m)
    assert cp.coeffs[0] == -18 and cp.lc == 1
    ns = nullspace([[1, 2, 3], [2, 4, 6]])
    assert len(ns) == 2
    assert all(sum(a * b for a, b in zip([1, 2, 3], v)) == 0 for v in ns)
