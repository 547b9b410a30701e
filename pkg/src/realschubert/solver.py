"""From an instance to a certified count of real solutions.

The general path writes the Schubert conditions as minors of stacked matrices
in a chart of the Grassmannian, computes a Groebner basis, and looks for a
coordinate whose eliminant has full degree and no repeated roots.  When that
happens every solution is determined by its value in that coordinate, so the
real roots of the eliminant are exactly the real solutions.

Two specialised paths exist: four secant lines in 3-space, solved by a binary
quadratic in Pluecker coordinates, and the family of 4-planes meeting four
m-planes in 2m-space in dimension 2, which reduces to an m x m eigenproblem.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Sequence, Union

from .exact_algebra import (
    UniPoly,
    as_rational,
    charpoly,
    count_real_roots,
    is_squarefree,
    mat_inverse,
    mat_mul,
    mat_rank,
    nullspace,
    upoly_gcd,
    upoly_xgcd,
)
from .flags import FlagMatrix, GeneralizedSecant, Osculating, Secant, is_infinite, moment_point, realize_flag
from .groebner import groebner
from .multipoly import MultiPoly, PolyMatrix, minors
from .schubert_combinatorics import Partition, SchubertProblem, problem_degree, relevant_dimension

# --- charts -------------------------------------------------------------------


@dataclass(frozen=True)
class Standard:
    """H = (I_k | X) with all k(n-k) entries of X free."""

    def describe(self) -> str:
        return "standard"


@dataclass(frozen=True)
class OneOsculatingAtInfinity:
    """Schubert-cell chart for the condition whose flag osculates at infinity."""

    index: int

    def describe(self) -> str:
        return f"osc-inf:{self.index}"


@dataclass(frozen=True)
class TwoOsculating:
    """Chart adapted to two conditions osculating at infinity and at 0."""

    infinity_index: int
    zero_index: int

    def describe(self) -> str:
        return f"two-osc:{self.infinity_index},{self.zero_index}"


Chart = Union[Standard, OneOsculatingAtInfinity, TwoOsculating]


def parse_chart(text: str) -> Chart:
    kind, _, body = text.strip().partition(":")
    if kind == "standard":
        return Standard()
    if kind == "osc-inf":
        return OneOsculatingAtInfinity(int(body))
    if kind == "two-osc":
        a, b = body.split(",")
        return TwoOsculating(int(a), int(b))
    raise ValueError(f"unknown chart {text!r}")


@dataclass(frozen=True)
class Instance:
    problem: SchubertProblem
    flags: tuple
    chart: Chart = Standard()

    def __init__(self, problem: SchubertProblem, flags: Sequence, chart: Chart = Standard()):
        flags = tuple(flags)
        if len(flags) != len(problem.conditions):
            raise ValueError(f"{len(problem.conditions)} conditions but {len(flags)} flags")
        k, n = problem.k, problem.n
        for cond, spec in zip(problem.conditions, flags):
            need = relevant_dimension(cond, k, n)
            if isinstance(spec, FlagMatrix):
                if spec.n != n or spec.depth < need:
                    raise ValueError(f"flag matrix must have at least {need} rows in {n}-space")
            elif isinstance(spec, Osculating):
                pass
            elif isinstance(spec, (Secant, GeneralizedSecant)):
                if spec.point_count != need:
                    raise ValueError(f"condition {cond} needs {need} points, flag has {spec.point_count}")
            else:
                raise TypeError(f"not a flag spec: {spec!r}")
        for idx, anchor in _chart_anchors(chart):
            if not 0 <= idx < len(flags):
                raise ValueError(f"chart refers to condition {idx}, out of range")
            spec = flags[idx]
            if not isinstance(spec, Osculating) or not _same_point(spec.point, anchor):
                raise ValueError(f"chart needs an osculating flag at {anchor} for condition {idx}")
        object.__setattr__(self, "problem", problem)
        object.__setattr__(self, "flags", flags)
        object.__setattr__(self, "chart", chart)


def _same_point(a, b) -> bool:
    if is_infinite(a) or is_infinite(b):
        return is_infinite(a) and is_infinite(b)
    return a == b


def _chart_anchors(chart: Chart):
    if isinstance(chart, OneOsculatingAtInfinity):
        return [(chart.index, float("inf"))]
    if isinstance(chart, TwoOsculating):
        return [(chart.infinity_index, float("inf")), (chart.zero_index, Fraction(0))]
    return []


def chart_matrix(problem: SchubertProblem, chart: Chart) -> tuple[int, PolyMatrix]:
    """The k x n matrix of local coordinates and its number of unknowns."""
    k, n = problem.k, problem.n
    if isinstance(chart, Standard):
        nvars = k * (n - k)
        xs = MultiPoly.variables(nvars)
        rows = [
            [MultiPoly.constant(nvars, int(i == j)) for j in range(k)] + xs[i * (n - k) : (i + 1) * (n - k)]
            for i in range(k)
        ]
        return nvars, PolyMatrix(rows, nvars)
    if isinstance(chart, OneOsculatingAtInfinity):
        lam, mu = problem.conditions[chart.index], Partition()
    elif isinstance(chart, TwoOsculating):
        lam, mu = problem.conditions[chart.infinity_index], problem.conditions[chart.zero_index]
    else:
        raise TypeError(f"unknown chart {chart!r}")
    layout = []  # per row: (pivot column, last free column), 0-based
    for i in range(1, k + 1):
        pivot = lam.part(k + 1 - i) + i - 1
        last = n - k + i - mu.part(i) - 1
        if last < pivot:
            raise ValueError(f"conditions {lam} and {mu} are incompatible on G({k},{n})")
        layout.append((pivot, last))
    nvars = sum(last - pivot for pivot, last in layout)
    if nvars != problem.dimension - lam.size - mu.size:
        raise ValueError("chart dimension does not match the codimensions it absorbs")
    xs = MultiPoly.variables(nvars) if nvars else []
    rows, v = [], 0
    for pivot, last in layout:
        row = [MultiPoly.constant(nvars, 0)] * n
        row[pivot] = MultiPoly.constant(nvars, 1)
        for c in range(pivot + 1, last + 1):
            row[c] = xs[v]
            v += 1
        rows.append(row)
    return nvars, PolyMatrix(rows, nvars)


def _chart_indices(chart: Chart) -> set[int]:
    return {idx for idx, _ in _chart_anchors(chart)}


def build_equations(inst: Instance) -> tuple[int, list[MultiPoly]]:
    """Unknown count and the minors expressing every condition not absorbed by the chart."""
    p = inst.problem
    k, n = p.k, p.n
    nvars, h = chart_matrix(p, inst.chart)
    skip = _chart_indices(inst.chart)
    gens: list[MultiPoly] = []
    seen = set()
    for idx, (cond, spec) in enumerate(zip(p.conditions, inst.flags)):
        if idx in skip:
            continue
        for i in range(1, len(cond) + 1):
            f = n - k + i - cond.part(i)
            flag = realize_flag(spec, f, n)
            stacked = PolyMatrix(list(h.entries) + [list(r) for r in flag.rows], nvars)
            for m in minors(stacked, k + f - i + 1):
                if m.is_zero():
                    continue
                key = _normalized(m)
                if key not in seen:
                    seen.add(key)
                    gens.append(m)
    return nvars, gens


def _normalized(m: MultiPoly):
    terms = m.sorted_terms()
    lead = terms[-1][1]
    return tuple((e, c / lead) for e, c in terms)


# --- outcomes -----------------------------------------------------------------


class Status(str, enum.Enum):
    CERTIFIED = "Certified"
    CERTIFIED_AFTER_PERTURBATION = "CertifiedAfterPerturbation"
    FAILED = "Failed"


@dataclass(frozen=True)
class SolveOutcome:
    real_count: int
    degree: int
    eliminant_variable: Optional[int]
    status: Status
    perturbation: Optional[dict] = None
    reason: Optional[str] = None
    eliminant: Optional[UniPoly] = field(default=None, compare=False)
    details: dict = field(default_factory=dict, compare=False)

    @property
    def certified(self) -> bool:
        return self.status is not Status.FAILED

    def record(self) -> dict:
        out = {
            "real_count": self.real_count,
            "degree": self.degree,
            "status": self.status.value,
            "eliminant_variable": self.eliminant_variable,
        }
        if self.perturbation:
            out["perturbation"] = self.perturbation
        if self.reason:
            out["reason"] = self.reason
        return out


class _ChartFailure(Exception):
    pass


def _failed(degree: int, reason: str) -> SolveOutcome:
    return SolveOutcome(0, degree, None, Status.FAILED, reason=reason)


# --- perturbation -------------------------------------------------------------


def _secancy_points(flags: Sequence) -> list[Fraction]:
    pts = set()
    for spec in flags:
        if isinstance(spec, Secant):
            pts.update(spec.points)
        elif isinstance(spec, GeneralizedSecant):
            pts.update(p for p, _ in spec.anchors)
    return sorted(pts)


def _all_finite_points(flags: Sequence) -> list[Fraction]:
    pts = set(_secancy_points(flags))
    for spec in flags:
        if isinstance(spec, Osculating) and not is_infinite(spec.point):
            pts.add(spec.point)
    return sorted(pts)


def base_epsilon(flags: Sequence) -> Optional[Fraction]:
    """2^-20 times the smallest gap between consecutive distinct points."""
    pts = _all_finite_points(flags)
    if len(pts) < 2:
        return Fraction(1, 2**20) if pts else None
    gap = min(b - a for a, b in zip(pts, pts[1:]))
    return gap / 2**20


def perturb_flags(flags: Sequence, eps: Fraction) -> tuple:
    """Move the j-th secancy point (global sorted order, from 1) by eps * j.

    Osculating anchors stay fixed.  The total displacement stays below the
    smallest gap, so the circular order and hence the overlap number survive.
    """
    order = {p: j for j, p in enumerate(_secancy_points(flags), start=1)}
    out = []
    for spec in flags:
        if isinstance(spec, Secant):
            out.append(Secant(p + eps * order[p] for p in spec.points))
        elif isinstance(spec, GeneralizedSecant):
            out.append(GeneralizedSecant((p + eps * order[p], o) for p, o in spec.anchors))
        else:
            out.append(spec)
    return tuple(out)


def _with_perturbation(attempt, flags: Sequence, degree: int, max_rounds: int) -> SolveOutcome:
    """Run ``attempt(flags)``; on chart failure retry with shrinking perturbations."""
    try:
        return attempt(flags, None)
    except _ChartFailure as exc:
        reason = str(exc)
    eps = base_epsilon(flags)
    if eps is None or not _secancy_points(flags):
        return _failed(degree, f"{reason}; no secancy points to perturb")
    for rnd in range(1, max_rounds + 1):
        moved = perturb_flags(flags, eps)
        record = {"round": rnd, "epsilon": str(eps)}
        try:
            return attempt(moved, record)
        except _ChartFailure as exc:
            reason = str(exc)
        eps /= 2
    return _failed(degree, f"{reason}; still failing after {max_rounds} perturbation rounds")


# --- general path -------------------------------------------------------------


def gap_family_size(problem: SchubertProblem) -> Optional[int]:
    """m when the problem is 4-planes meeting four m-planes of 2m-space in dimension 2."""
    k, n = problem.k, problem.n
    if k != 4 or n % 2 or len(problem.conditions) != 4:
        return None
    m = n // 2
    if m < 3:
        return None
    target = Partition([m - 2, m - 2])
    if all(c == target for c in problem.conditions):
        return m
    return None


def solve_instance(inst: Instance, max_rounds: int = 3) -> SolveOutcome:
    """Certified real-solution count, never raising on numerical bad luck."""
    p = inst.problem
    d = problem_degree(p)
    m = gap_family_size(p)
    if m is not None and isinstance(inst.chart, Standard) and not any(
        isinstance(s, Osculating) for s in inst.flags
    ):
        return _solve_gap_specs(p, inst.flags, max_rounds)

    def attempt(flags, record):
        out = _solve_once(Instance(p, flags, inst.chart), d)
        if record is None:
            return out
        return SolveOutcome(
            out.real_count, out.degree, out.eliminant_variable,
            Status.CERTIFIED_AFTER_PERTURBATION, perturbation=record, eliminant=out.eliminant,
        )

    return _with_perturbation(attempt, inst.flags, d, max_rounds)


def _solve_once(inst: Instance, d: int) -> SolveOutcome:
    nvars, gens = build_equations(inst)
    if nvars == 0:
        if gens:
            raise _ChartFailure("the chart point violates a condition")
        return SolveOutcome(1, 1, None, Status.CERTIFIED)
    if not gens:
        raise _ChartFailure("no equations")
    gb = groebner(gens)
    if gb.is_unit():
        raise _ChartFailure("no solutions in the chart")
    if not gb.is_zero_dimensional():
        raise _ChartFailure("solution set in the chart is not finite")
    basis = gb.standard_monomials()
    if len(basis) != d:
        raise _ChartFailure(f"chart holds {len(basis)} solutions with multiplicity, expected {d}")
    for var in range(nvars):
        elim = gb.minimal_polynomial(var, basis)
        if elim.degree == d and is_squarefree(elim):
            return SolveOutcome(count_real_roots(elim), d, var, Status.CERTIFIED, eliminant=elim)
    raise _ChartFailure("no coordinate separates the solutions")


# --- four secant lines ----------------------------------------------------------


def _dihedral_images(pairs: Sequence[tuple[int, int]]):
    # positions are 1..8 around the circle
    for r in range(8):
        for flip in (False, True):
            def g(x):
                y = (x - 1 + r) % 8 if not flip else (-(x - 1) + r) % 8
                return y + 1

            yield tuple(sorted(tuple(sorted((g(a), g(b)))) for a, b in pairs))


@dataclass(frozen=True, order=True)
class ChordConfiguration:
    """Pairing of the 8 cyclic positions 1..8 into 4 chords, in canonical form."""

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs: Sequence[Sequence[int]]):
        ps = [tuple(sorted(int(v) for v in pr)) for pr in pairs]
        flat = sorted(v for pr in ps for v in pr)
        if len(ps) != 4 or flat != list(range(1, 9)):
            raise ValueError(f"need 4 disjoint pairs covering 1..8, got {pairs}")
        object.__setattr__(self, "pairs", min(_dihedral_images(ps)))

    @classmethod
    def parse(cls, text: str) -> "ChordConfiguration":
        """Parse '12,34,56,78' or '1-2,3-4,5-6,7-8'."""
        pairs = []
        for tok in text.split(","):
            tok = tok.strip()
            a, b = tok.split("-") if "-" in tok else (tok[0], tok[1:])
            pairs.append((int(a), int(b)))
        return cls(pairs)

    def __str__(self) -> str:
        return ",".join(f"{a}{b}" for a, b in self.pairs)


def _all_pairings(items: Sequence[int]):
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for i, other in enumerate(rest):
        for tail in _all_pairings(rest[:i] + rest[i + 1 :]):
            yield ((first, other),) + tail


def enumerate_chord_configurations() -> list[ChordConfiguration]:
    """All pairings of 8 cyclic points up to rotation and reflection."""
    return sorted({ChordConfiguration(p) for p in _all_pairings(tuple(range(1, 9)))})


def has_odd_interval(config: ChordConfiguration) -> bool:
    """Some chord has an odd number of other endpoints strictly on one side."""
    for a, b in config.pairs:
        lo, hi = min(a, b), max(a, b)
        if (hi - lo - 1) % 2 == 1:
            return True
    return False


_PLUECKER = list(combinations(range(4), 2))  # (01,02,03,12,13,23)


def _pluecker(u: Sequence[Fraction], v: Sequence[Fraction]) -> list[Fraction]:
    return [u[i] * v[j] - u[j] * v[i] for i, j in _PLUECKER]


def _meet_form(m: Sequence[Fraction]) -> list[Fraction]:
    # coefficients c with  l ^ m = <c, l> e1^e2^e3^e4
    m01, m02, m03, m12, m13, m23 = m
    return [m23, -m13, m12, m03, -m02, m01]


def _pluecker_quadric(l: Sequence[Fraction]) -> Fraction:
    l01, l02, l03, l12, l13, l23 = l
    return l01 * l23 - l02 * l13 + l03 * l12


def _bilinear(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, _meet_form(v))), Fraction(0))


def four_lines_discriminant(lines: Sequence[tuple[Sequence, Sequence]]) -> Optional[Fraction]:
    """Discriminant of the binary quadratic cutting the lines meeting four given lines.

    Each line is given by two spanning vectors of 4-space.  Returns None when
    the four incidence conditions are dependent.
    """
    conds = [_meet_form(_pluecker([as_rational(x) for x in a], [as_rational(x) for x in b])) for a, b in lines]
    null = nullspace(conds, 6)
    if len(null) != 2:
        return None
    u, v = null
    qu, qv, b = _pluecker_quadric(u), _pluecker_quadric(v), _bilinear(u, v)
    if qu == 0 and qv == 0 and b == 0:
        return None
    return b * b - 4 * qu * qv


def solve_four_lines(points: Sequence, config: ChordConfiguration, max_rounds: int = 3) -> SolveOutcome:
    """Real lines meeting the four secant lines of the curve given by the chords."""
    pts = [as_rational(p) for p in points]
    if len(pts) != 8 or any(a >= b for a, b in zip(pts, pts[1:])):
        raise ValueError("need 8 strictly increasing points")
    flags = [Secant([pts[a - 1], pts[b - 1]]) for a, b in config.pairs]

    def attempt(fl, record):
        lines = [(moment_point(s.points[0], 4), moment_point(s.points[1], 4)) for s in fl]
        disc = four_lines_discriminant(lines)
        if disc is None:
            raise _ChartFailure("the four incidence conditions are dependent")
        if disc == 0:
            raise _ChartFailure("the two solutions coincide")
        status = Status.CERTIFIED if record is None else Status.CERTIFIED_AFTER_PERTURBATION
        return SolveOutcome(2 if disc > 0 else 0, 2, None, status, perturbation=record)

    return _with_perturbation(attempt, flags, 2, max_rounds)


# --- the gap family -------------------------------------------------------------


def gap_predicted_count(r: int, c: int) -> int:
    """Real 4-planes among the pairwise sums of r real and c conjugate-pair solutions."""
    if r < 0 or c < 0:
        raise ValueError("r and c must be nonnegative")
    return r * (r - 1) // 2 + c


def _gap_coordinates(planes: Sequence[FlagMatrix]):
    """Basis change putting W1, W2 on the axes; W3, W4 become graphs of A, B."""
    if len(planes) != 4:
        raise ValueError("need four planes")
    m = planes[0].depth
    if any(p.depth != m or p.n != 2 * m for p in planes):
        raise ValueError("each plane must be given by m rows in 2m-space")
    t = [list(r) for r in planes[0].rows] + [list(r) for r in planes[1].rows]
    if mat_rank(t) != 2 * m:
        raise _ChartFailure("the first two planes are not complementary")
    tinv = mat_inverse(t)
    graphs = []
    for w in planes[2:]:
        c = mat_mul([list(r) for r in w.rows], tinv)
        alpha = [row[:m] for row in c]
        beta = [row[m:] for row in c]
        if mat_rank(alpha) != m or mat_rank(beta) != m:
            raise _ChartFailure("a plane meets the first two planes nontrivially")
        graphs.append(mat_mul(mat_inverse(alpha), beta))
    a, b = graphs
    return m, t, a, b


def _gap_eliminant(planes: Sequence[FlagMatrix]):
    m, t, a, b = _gap_coordinates(planes)
    mm = mat_mul(a, mat_inverse(b))
    f = charpoly(mm)
    if not is_squarefree(f):
        raise _ChartFailure("auxiliary eliminant has repeated roots")
    return m, t, a, mm, f


def solve_gap_auxiliary(planes: Sequence[FlagMatrix]) -> tuple[int, int]:
    """(real solutions, conjugate pairs) for the 2-planes meeting all four m-planes.

    Such a 2-plane is spanned by a in the first plane and aA in the second,
    where a is a left eigenvector of A B^-1; the eigenvalues are the roots of
    the characteristic polynomial, which serves as the eliminant.
    """
    m, _, _, _, f = _gap_eliminant(planes)
    r = count_real_roots(f)
    return r, (m - r) // 2


def _pair_sum_resolvent(f: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """For monic quartic f: R(z) with roots the pairwise root sums, and w = N/D.

    Writing f = (x^2 - z x + w)(x^2 + g1 x + g0) forces w = N(z)/D(z) and R(z) = 0.
    """
    a0, a1, a2, a3 = (f.coeffs[i] for i in range(4))
    z = UniPoly.x()
    num = z**3 + a3 * z**2 + a2 * z + a1
    den = 2 * z + a3
    r = num * num - (z**2 + a3 * z + a2) * num * den + a0 * den * den
    return r.monic(), num, den


def _verify_pair_sums(m: int, t, a, mm, f: UniPoly, planes: Sequence[FlagMatrix]) -> int:
    """Build the six pairwise sums of auxiliary solutions over Q[z]/(R) and check them.

    Returns the number of real sums, which must match the predicted count.
    """
    if m != 4:
        raise ValueError("direct verification is implemented for m = 4")
    resolvent, num, den = _pair_sum_resolvent(f)
    if resolvent.degree != 6 or not is_squarefree(resolvent):
        raise _ChartFailure("pairwise sums of the auxiliary solutions are not distinct")
    g, inv_den, _ = upoly_xgcd(den, resolvent)
    if g.degree != 0:
        raise _ChartFailure("pair-sum parametrisation degenerates")
    red = lambda p: p % resolvent  # noqa: E731
    z = UniPoly.x()
    w = red(num * inv_den)
    a3, a2 = f.coeffs[3], f.coeffs[2]
    g1 = z + a3
    g0 = red(a2 - w + z * g1)
    mm2 = mat_mul(mm, mm)
    # G = g(M) spans the left invariant plane of the chosen root pair
    big_g = [
        [red(UniPoly([mm2[i][j]]) + g1 * mm[i][j] + (g0 if i == j else UniPoly())) for j in range(m)]
        for i in range(m)
    ]
    minors2 = _poly_minors(big_g, 2, red)
    common = resolvent
    for q in minors2:
        common = upoly_gcd(common, q)
        if common.degree == 0:
            break
    if common.degree != 0:
        raise _ChartFailure("a pairwise sum is not 4-dimensional")
    if any(not q.is_zero() for q in _poly_minors(big_g, 3, red)):
        raise _ChartFailure("invariant subspace is not 2-dimensional")
    ga = [[red(sum((big_g[i][l] * a[l][j] for l in range(m)), UniPoly())) for j in range(m)] for i in range(m)]
    for plane in planes:
        normals = nullspace([list(r) for r in plane.rows], 2 * m)
        # columns of the normal space, in the adapted coordinates
        y = mat_mul(t, [list(col) for col in zip(*normals)])
        top, bottom = y[:m], y[m:]
        rows = [
            [red(sum((blk[i][l] * part[l][j] for l in range(m)), UniPoly())) for j in range(len(normals))]
            for blk, part in ((big_g, top), (ga, bottom))
            for i in range(m)
        ]
        if any(not q.is_zero() for q in _poly_minors(rows, 3, red)):
            raise _ChartFailure("a pairwise sum fails to meet a plane in dimension 2")
    return count_real_roots(resolvent)


def _poly_minors(mat: list[list[UniPoly]], size: int, red) -> list[UniPoly]:
    nrows, ncols = len(mat), len(mat[0])
    cache: dict = {}

    def det(rs: tuple, cs: tuple) -> UniPoly:
        if len(rs) == 1:
            return mat[rs[0]][cs[0]]
        key = (rs, cs)
        if key in cache:
            return cache[key]
        acc = UniPoly()
        for idx, c in enumerate(cs):
            entry = mat[rs[0]][c]
            if entry.is_zero():
                continue
            sub = det(rs[1:], cs[:idx] + cs[idx + 1 :])
            term = entry * sub
            acc = acc + term if idx % 2 == 0 else acc - term
        out = red(acc)
        cache[key] = out
        return out

    return [det(rs, cs) for rs in combinations(range(nrows), size) for cs in combinations(range(ncols), size)]


def solve_gap_problem(planes: Sequence[FlagMatrix], verify_direct: bool = False) -> SolveOutcome:
    """Real 4-planes meeting four m-planes of 2m-space in dimension at least 2."""
    m = planes[0].depth if planes else 0
    degree = comb(m, 2)
    try:
        return _gap_outcome(planes, verify_direct, None)
    except _ChartFailure as exc:
        return _failed(degree, str(exc))


def _gap_outcome(planes, verify_direct: bool, record) -> SolveOutcome:
    m, t, a, mm, f = _gap_eliminant(planes)
    r = count_real_roots(f)
    c = (m - r) // 2
    predicted = gap_predicted_count(r, c)
    details = {"r": r, "c": c}
    if verify_direct:
        direct = _verify_pair_sums(m, t, a, mm, f, planes)
        details["direct_count"] = direct
        if direct != predicted:
            raise _ChartFailure(f"direct count {direct} disagrees with predicted {predicted}")
    status = Status.CERTIFIED if record is None else Status.CERTIFIED_AFTER_PERTURBATION
    return SolveOutcome(predicted, comb(m, 2), 0, status, perturbation=record, eliminant=f, details=details)


def _solve_gap_specs(problem: SchubertProblem, flags: Sequence, max_rounds: int, verify_direct: bool = False) -> SolveOutcome:
    m = problem.n // 2

    def attempt(fl, record):
        planes = [realize_flag(s, m, problem.n) for s in fl]
        return _gap_outcome(planes, verify_direct, record)

    return _with_perturbation(attempt, flags, comb(m, 2), max_rounds)


def solve_gap_instance(inst: Instance, verify_direct: bool = False, max_rounds: int = 3) -> SolveOutcome:
    """Gap-family instance solved through the auxiliary eigenproblem."""
    if gap_family_size(inst.problem) is None:
        raise ValueError("instance is not of the gap family")
    return _solve_gap_specs(inst.problem, inst.flags, max_rounds, verify_direct)
