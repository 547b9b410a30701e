import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from realschubert.exact_algebra import UniPoly
from realschubert.groebner import NOT_ZERO_DIMENSIONAL, groebner
from realschubert.multipoly import (
    MultiPoly,
    PolyMatrix,
    cofactor_determinant,
    determinant,
    eliminate_to_univariate,
    minors,
)


def random_poly(rng: random.Random, nvars: int, terms: int = 3, deg: int = 2) -> MultiPoly:
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, deg) for _ in range(nvars))
        out[e] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return MultiPoly(nvars, out)


def test_identity_and_small_determinants():
    assert determinant(PolyMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 0)) == MultiPoly.constant(0, 1)
    x = MultiPoly.variable(1, 0)
    assert determinant(PolyMatrix([[x, 1], [1, x]])) == x * x - 1


def test_non_square_determinant_raises():
    with pytest.raises(ValueError):
        determinant(PolyMatrix([[1, 2, 3], [4, 5, 6]], 0))


def test_plane_meets_secant_three_plane_determinant():
    xs = MultiPoly.variables(6)
    rows = [[1, 0, xs[0], xs[1], xs[2]], [0, 1, xs[3], xs[4], xs[5]]]
    rows += [[Fraction(t) ** e for e in range(5)] for t in (0, 1, 2)]
    m = PolyMatrix(rows, 6)
    d = determinant(m)
    assert d == cofactor_determinant(m)
    # bilinear in the two rows: the 2x2 minors of X appear
    assert d.total_degree == 2
    assert d.nvars == 6


def test_minors_examples():
    m = PolyMatrix([[1, 0, 0], [0, 1, 0]], 0)
    assert [p.constant_value() for p in minors(m, 2)] == [1, 0, 0]
    sq = PolyMatrix([[2, 1], [1, 3]], 0)
    assert minors(sq, 2) == [determinant(sq)]
    with pytest.raises(ValueError):
        minors(sq, 3)


def test_minors_match_cofactor_oracle():
    rng = random.Random(3)
    rows = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(3)]
    m = PolyMatrix(rows, 0)
    from itertools import combinations

    expected = [cofactor_determinant(m.submatrix(range(3), cs)) for cs in combinations(range(4), 3)]
    assert minors(m, 3) == expected


@pytest.mark.parametrize("size", [1, 2, 3, 4, 5])
def test_determinant_matches_cofactor_on_random_polynomial_matrices(size):
    rng = random.Random(size)
    for _ in range(5):
        entries = [[random_poly(rng, 2, terms=2, deg=1) for _ in range(size)] for _ in range(size)]
        m = PolyMatrix(entries, 2)
        assert determinant(m) == cofactor_determinant(m)
        assert determinant(m, method="bareiss") == cofactor_determinant(m)


def test_equal_rows_give_zero_determinant():
    rng = random.Random(11)
    row = [random_poly(rng, 3) for _ in range(4)]
    other = [[random_poly(rng, 3) for _ in range(4)] for _ in range(2)]
    assert determinant(PolyMatrix([row, other[0], row, other[1]], 3)).is_zero()


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_ring_axioms(seed):
    rng = random.Random(seed)
    a, b, c = (random_poly(rng, 3) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


def test_eliminant_examples():
    x, y = MultiPoly.variables(2)
    assert eliminate_to_univariate([x - y, x * x + y * y - 2], 0) == UniPoly([-1, 0, 1])
    assert eliminate_to_univariate([x * y - 1, x + y - 3], 1) == UniPoly([1, -3, 1])


def test_eliminant_of_positive_dimensional_ideal():
    x, y, z = MultiPoly.variables(3)
    assert eliminate_to_univariate([x - y], 2) is NOT_ZERO_DIMENSIONAL
    # x is determined even though (y, z) is a curve
    out = eliminate_to_univariate([x * x - 2, y - z], 0)
    assert out == UniPoly([-2, 0, 1])


def test_eliminant_vanishes_at_constructed_common_zero():
    rng = random.Random(5)
    point = [Fraction(rng.randint(-4, 4)) for _ in range(3)]
    xs = MultiPoly.variables(3)
    gens = []
    for _ in range(3):
        p = random_poly(rng, 3, terms=4)
        gens.append(p - p.evaluate(point))
    for keep in range(3):
        e = eliminate_to_univariate(gens, keep)
        if e is NOT_ZERO_DIMENSIONAL:
            continue
        assert e(point[keep]) == 0


def _sympy_eliminant(gens, keep):
    syms = sympy.symbols(f"v0:{gens[0].nvars}")
    exprs = []
    for g in gens:
        exprs.append(sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod([s**e for s, e in zip(syms, m)])
                         for m, c in g.terms.items()))
    order = [s for i, s in enumerate(syms) if i != keep] + [syms[keep]]
    gb = sympy.groebner(exprs, *order, order="lex")
    uni = [p for p in gb.exprs if p.free_symbols <= {syms[keep]}]
    poly = sympy.Poly(uni[0], syms[keep]).monic()
    return [poly.coeff_monomial(syms[keep] ** i) for i in range(poly.degree() + 1)]


def _secant_system(points_per_flag, k, n):
    nvars = k * (n - k)
    xs = MultiPoly.variables(nvars)
    h = [[MultiPoly.constant(nvars, int(i == j)) for j in range(k)] + xs[i * (n - k):(i + 1) * (n - k)] for i in range(k)]
    gens = []
    for pts in points_per_flag:
        rows = h + [[Fraction(t) ** e for e in range(n)] for t in pts]
        gens.append(determinant(PolyMatrix(rows, nvars)))
    return gens


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_eliminant_matches_sympy_lex_basis(seed):
    rng = random.Random(seed)
    pts = sorted(rng.sample(range(-30, 30), 8))
    gens = _secant_system([pts[2 * i:2 * i + 2] for i in range(4)], 2, 4)
    for keep in range(4):
        ours = eliminate_to_univariate(gens, keep)
        assert [sympy.Rational(c.numerator, c.denominator) for c in ours.coeffs] == _sympy_eliminant(gens, keep)


def test_g25_eliminant_matches_sympy():
    pts = list(range(1, 19))
    gens = _secant_system([pts[3 * i:3 * i + 3] for i in range(6)], 2, 5)
    # with these symmetric points two solutions share x1, so x1 has a degree-4 eliminant
    degrees = []
    for keep in (0, 1):
        ours = eliminate_to_univariate(gens, keep)
        degrees.append(ours.degree)
        assert [sympy.Rational(c.numerator, c.denominator) for c in ours.coeffs] == _sympy_eliminant(gens, keep)
    assert degrees == [4, 5]


def test_groebner_basis_reduces_generators_to_zero():
    rng = random.Random(9)
    pts = sorted(rng.sample(range(-40, 40), 12))
    gens = _secant_system([pts[2 * i:2 * i + 2] for i in range(4)], 2, 4)
    gb = groebner(gens)
    from realschubert.groebner import to_internal

    for g in gens:
        assert gb.normal_form(to_internal(g, gb.order)) == {}
    assert len(gb.standard_monomials()) == 2
