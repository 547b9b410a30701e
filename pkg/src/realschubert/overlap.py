"""Overlap number of secancy point sets placed on the circle RP^1.

The circle is the real line closed up by the point at infinity.  Cutting it at
a point p outside the configuration makes it a line again; each group then
spans an interval, and the overlap for that cut counts the foreign points
inside those intervals.  The overlap number is the minimum over cuts.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exact_algebra import as_rational
from .flags import GeneralizedSecant, Osculating, Secant, is_infinite
from .schubert_combinatorics import SchubertProblem, relevant_dimension


def _key(point):
    # infinity sorts after every rational
    return (1, 0) if is_infinite(point) else (0, point)


@dataclass(frozen=True)
class PointConfiguration:
    """Groups of points on the circle, each a multiset {point: multiplicity}."""

    groups: tuple[tuple[tuple[object, int], ...], ...]

    def __init__(self, groups: Iterable):
        out = []
        owner: dict = {}
        for gi, g in enumerate(groups):
            if isinstance(g, dict):
                items = list(g.items())
            else:
                items = list(Counter(g).items())
            norm = []
            for p, m in items:
                p = p if is_infinite(p) else as_rational(p)
                if m < 1:
                    raise ValueError("multiplicities must be positive")
                if p in owner and owner[p] != gi:
                    raise ValueError(f"point {p} appears in two groups")
                owner[p] = gi
                norm.append((p, int(m)))
            if not norm:
                raise ValueError("groups must be nonempty")
            out.append(tuple(sorted(norm, key=lambda pm: _key(pm[0]))))
        object.__setattr__(self, "groups", tuple(out))


def _circle(c: PointConfiguration) -> list[tuple[object, int, int]]:
    """Distinct points in circular order as (point, group, multiplicity)."""
    pts = [(p, gi, m) for gi, g in enumerate(c.groups) for p, m in g]
    return sorted(pts, key=lambda t: _key(t[0]))


def _cut_sum(circle: Sequence[tuple[object, int, int]], start: int, ngroups: int) -> int:
    # the line obtained by cutting just before position ``start``
    line = list(circle[start:]) + list(circle[:start])
    first = [None] * ngroups
    last = [None] * ngroups
    for pos, (_, g, _) in enumerate(line):
        if first[g] is None:
            first[g] = pos
        last[g] = pos
    total = 0
    prefix = [0]
    for _, _, m in line:
        prefix.append(prefix[-1] + m)
    for g in range(ngroups):
        if first[g] is None or last[g] - first[g] < 2:
            continue
        inside = prefix[last[g]] - prefix[first[g] + 1]
        mine = sum(m for pos, (_, gg, m) in enumerate(line) if gg == g and first[g] < pos < last[g])
        total += inside - mine
    return total


def overlap_number(c: PointConfiguration) -> int:
    """Minimum over circle cuts of the foreign points inside each group's interval."""
    circle = _circle(c)
    if not circle:
        return 0
    return min(_cut_sum(circle, s, len(c.groups)) for s in range(len(circle)))


def overlap_for_instance(problem: SchubertProblem, flags: Sequence) -> int:
    """Overlap number of the secancy points of an instance's flags.

    Osculating flags count once at their point with multiplicity equal to the
    relevant dimension of their condition.  Flags given as explicit matrices
    carry no curve points and are skipped.
    """
    if len(flags) != len(problem.conditions):
        raise ValueError("need one flag per condition")
    groups = []
    for cond, spec in zip(problem.conditions, flags):
        f = relevant_dimension(cond, problem.k, problem.n)
        if isinstance(spec, Secant):
            groups.append(Counter(spec.points[:f]))
        elif isinstance(spec, Osculating):
            groups.append({spec.point: f})
        elif isinstance(spec, GeneralizedSecant):
            g: dict = {}
            left = f
            for p, o in spec.anchors:
                if left <= 0:
                    break
                g[p] = min(o, left)
                left -= o
            groups.append(g)
    if not groups:
        return 0
    return overlap_number(PointConfiguration(groups))


def overlap_by_intervals(c: PointConfiguration) -> int:
    """Independent oracle: send each cut point to infinity and count on the line.

    For each candidate cut p (a point of each circular gap), the Moebius map
    t -> -1/(t - p) carries the circle minus p to the real line preserving the
    circular order; the overlap for that cut is computed on the images.
    """
    finite = sorted(p for g in c.groups for p, _ in g if not is_infinite(p))
    has_inf = any(is_infinite(p) for g in c.groups for p, _ in g)
    cuts = []
    for a, b in zip(finite, finite[1:]):
        cuts.append((a + b) / 2)
    if finite:
        if has_inf:
            cuts.append(finite[-1] + 1)
            cuts.append(finite[0] - 1)
        else:
            cuts.append(None)  # cut through infinity: the plain line
    else:
        cuts.append(None)
    best = math.inf
    for p in cuts:
        def image(t):
            if p is None:
                return t
            if is_infinite(t):
                return 0
            return -1 / (t - p)

        total = 0
        groups = [[(image(t), m) for t, m in g] for g in c.groups]
        everything = [(v, gi, m) for gi, g in enumerate(groups) for v, m in g]
        for gi, g in enumerate(groups):
            vals = [v for v, _ in g]
            lo, hi = min(vals), max(vals)
            total += sum(m for v, gj, m in everything if gj != gi and lo < v < hi)
        best = min(best, total)
    return int(best)
