import random
from fractions import Fraction

import pytest
import sympy

from realschubert.exact_algebra import UniPoly, mat_rank, row_echelon
from realschubert.flags import (
    FlagMatrix,
    GeneralizedSecant,
    Osculating,
    Secant,
    cosecant_normal,
    cosecant_subspace,
    curve_derivative,
    discrete_wronskian,
    dual_curve_point,
    dual_flag,
    format_flag_spec,
    moment_point,
    pairing,
    parse_flag_spec,
    realize_flag,
    wronskian,
)

F = Fraction
t = UniPoly.x()


def same_span(a, b) -> bool:
    return row_echelon(a)[0] == row_echelon(b)[0]


def test_moment_points():
    assert moment_point(0, 5) == [1, 0, 0, 0, 0]
    assert moment_point(1, 4) == [1, 1, 1, 1]
    assert moment_point(2, 5) == [1, 2, 4, 8, 16]


def test_realize_examples():
    assert realize_flag(Secant([0, 1, 2]), 3, 5).rows == ((1, 0, 0, 0, 0), (1, 1, 1, 1, 1), (1, 2, 4, 8, 16))
    assert realize_flag(Osculating(0), 2, 4).rows == ((1, 0, 0, 0), (0, 1, 0, 0))
    assert realize_flag(GeneralizedSecant([(0, 2), (1, 1)]), 3, 4).rows == (
        (1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 1, 1))
    assert realize_flag(Osculating("inf"), 2, 4).rows == ((0, 0, 0, 1), (0, 0, 1, 0))


def test_realize_errors():
    with pytest.raises(ValueError):
        realize_flag(Secant([0, 1]), 3, 5)
    with pytest.raises(ValueError):
        Secant([0, "inf"])
    with pytest.raises(ValueError):
        Secant([1, 0])


def test_secant_flags_have_full_rank():
    rng = random.Random(0)
    for n in range(2, 8):
        pts = sorted(F(v, 7) for v in rng.sample(range(-50, 50), n))
        assert mat_rank(realize_flag(Secant(pts), n, n).rows) == n


def test_dual_flag_examples():
    ident = FlagMatrix([[int(i == j) for j in range(4)] for i in range(4)])
    assert dual_flag(ident).rows == tuple(tuple(F(int(j == 3 - i)) for j in range(4)) for i in range(4))
    osc = realize_flag(Osculating(1), 3, 3)
    d = dual_flag(osc)
    # the first dual row annihilates the osculating plane and is the dual curve point
    assert all(pairing(d.rows[0], r) == 0 for r in osc.rows[:2])
    assert same_span([d.rows[0]], [dual_curve_point(1, 3)])


def test_dual_flag_is_an_involution():
    rng = random.Random(1)
    for n in range(2, 9):
        while True:
            rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            if mat_rank(rows) == n:
                break
        m = FlagMatrix(rows)
        back = dual_flag(dual_flag(m))
        for i in range(1, n + 1):
            assert same_span(back.rows[:i], m.rows[:i])


def test_dual_flag_annihilates():
    rng = random.Random(2)
    n = 5
    rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
    m = FlagMatrix(rows)
    d = dual_flag(m)
    for i in range(1, n):
        for u in d.rows[:i]:
            for v in m.rows[: n - i]:
                assert pairing(u, v) == 0


def test_cosecant_normal_examples():
    assert cosecant_normal([1, 2]) == [2, -3, 1]
    assert cosecant_normal([0]) == [0, 1]
    assert pairing(cosecant_normal([1, 2]), moment_point(1, 3)) == 0
    with pytest.raises(ValueError):
        cosecant_normal([1, 1])


def test_cosecant_normal_pairing_identity_symbolic():
    s = sympy.Symbol("s")
    rng = random.Random(3)
    for size in range(1, 7):
        pts = [F(v, 3) for v in rng.sample(range(-30, 30), size)]
        v = cosecant_normal(pts)
        lhs = sum(sympy.Rational(c.numerator, c.denominator) * s**j for j, c in enumerate(v))
        rhs = sympy.prod([s - sympy.Rational(p.numerator, p.denominator) for p in pts])
        assert sympy.expand(lhs - rhs) == 0


def test_dual_curve_point_examples():
    assert dual_curve_point(0, 4) == [0, 0, 0, 1]
    assert dual_curve_point(1, 3) == [1, -2, 1]


def test_dual_curve_point_annihilates_osculating_hyperplane():
    s = sympy.Symbol("s")
    for n in range(2, 7):
        sym = [sympy.binomial(n - 1, j) * (-s) ** (n - 1 - j) for j in range(n)]
        for order in range(n - 1):
            deriv = [sympy.ff(j, order) * s ** (j - order) if j >= order else 0 for j in range(n)]
            assert sympy.expand(sum(a * b for a, b in zip(sym, deriv))) == 0
        for tv in (F(-3, 2), F(0), F(5)):
            p = dual_curve_point(tv, n)
            assert all(pairing(p, curve_derivative(tv, j, n)) == 0 for j in range(n - 1))


def test_cosecant_subspace():
    sub = cosecant_subspace([0, 1], 4)
    assert sub.depth == 2
    for r in sub.rows:
        assert pairing(r, moment_point(0, 4)) == 0 and pairing(r, moment_point(1, 4)) == 0
    line = cosecant_subspace([0], 2)
    assert same_span(line.rows, [[0, 1]])
    # double annihilator of a single point is the point itself
    from realschubert.exact_algebra import nullspace

    for s0 in (F(-2), F(1, 3)):
        ann = nullspace(cosecant_subspace([s0], 5).rows, 5)
        assert same_span(ann, [moment_point(s0, 5)])


def test_discrete_wronskian_examples():
    assert discrete_wronskian([t**2], 3) == t**2
    assert discrete_wronskian([UniPoly([1]), t], F(7, 2)) == UniPoly([F(7, 2)])
    assert discrete_wronskian([t, t**3], 1) == 2 * t**3 + 3 * t**2 + t
    with pytest.raises(ValueError):
        discrete_wronskian([t], 0)


def test_wronskian_examples():
    assert wronskian([UniPoly([1]), t]) == UniPoly([1])
    assert wronskian([t, t**2]) == t**2
    assert wronskian([t, 2 * t]).is_zero()


def test_discrete_wronskian_degree():
    rng = random.Random(4)
    for k in range(1, 4):
        for n in range(k + 1, 7):
            # distinct exact degrees n-1, ..., n-k: the generic position
            fs = [UniPoly([rng.randint(-9, 9) for _ in range(n - 1 - i)] + [rng.choice((-3, -1, 1, 2))])
                  for i in range(k)]
            assert discrete_wronskian(fs, F(1, 2)).degree == k * (n - k)


def test_discrete_wronskian_vanishes_on_rank_drop():
    # V contains a polynomial vanishing at t0 and t0 + h, so W_h(t0) = 0
    rng = random.Random(5)
    h, t0 = F(1, 3), F(2)
    for _ in range(5):
        special = (t - t0) * (t - t0 - h) * UniPoly([rng.randint(1, 5), rng.randint(-5, 5)])
        other = UniPoly([rng.randint(-5, 5) for _ in range(4)])
        assert discrete_wronskian([special, other], h)(t0) == 0


def test_text_syntax_round_trip():
    for text in ("sec:1/2,3/2,5", "osc:3", "osc:inf", "gsec:0^2,1"):
        assert format_flag_spec(parse_flag_spec(text)) == text
    with pytest.raises(ValueError):
        parse_flag_spec("foo:1")
