"""Partitions, Schubert problems and their solution counts.

Solution counts come from iterated Littlewood-Richardson products of Schur
classes truncated to the k x (n-k) box; the coefficient of the full box in
the final product is the number of solutions for general flags.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts (trailing zeros dropped)."""

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        ps = [int(p) for p in parts]
        if any(p < 0 for p in ps):
            raise ValueError(f"negative part in {ps}")
        if any(a < b for a, b in zip(ps, ps[1:])):
            raise ValueError(f"parts must be weakly decreasing: {ps}")
        while ps and ps[-1] == 0:
            ps.pop()
        object.__setattr__(self, "parts", tuple(ps))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse comma-separated parts such as '3,1'; '0' or '' is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(t) for t in text.split(","))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def part(self, i: int) -> int:
        """1-based part access, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def fits_in_box(self, rows: int, cols: int) -> bool:
        return len(self.parts) <= rows and all(p <= cols for p in self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "0"


def conjugate_partition(lam: Partition) -> Partition:
    if not lam.parts:
        return Partition()
    return Partition(sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0]))


def relevant_dimension(lam: Partition, k: int, n: int) -> int:
    """Dimension of the largest flag subspace on which the condition depends."""
    if not lam.parts:
        raise ValueError("the empty partition imposes no condition")
    if not lam.fits_in_box(k, n - k):
        raise ValueError(f"partition {lam} does not fit in the {k}x{n - k} box")
    i = len(lam.parts)
    return n - k + i - lam.parts[-1]


@dataclass(frozen=True)
class SchubertProblem:
    k: int
    n: int
    conditions: tuple[Partition, ...]

    def __init__(self, k: int, n: int, conditions: Iterable):
        conds = tuple(c if isinstance(c, Partition) else Partition(c) for c in conditions)
        if not 0 < k < n:
            raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
        for c in conds:
            if not c.fits_in_box(k, n - k):
                raise ValueError(f"condition {c} does not fit in the {k}x{n - k} box")
            if not c.parts:
                raise ValueError("empty conditions are not allowed")
        total = sum(c.size for c in conds)
        if total != k * (n - k):
            raise ValueError(f"codimensions sum to {total}, expected dim G({k},{n}) = {k * (n - k)}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "conditions", conds)

    @classmethod
    def parse(cls, text: str) -> "SchubertProblem":
        """Parse 'k n cond cond ...' where a condition may carry a repeat count, e.g. '3 7 1^4 3,1^2'."""
        tokens = text.split()
        if len(tokens) < 3:
            raise ValueError(f"expected 'k n conditions...', got {text!r}")
        k, n = int(tokens[0]), int(tokens[1])
        conds = []
        for tok in tokens[2:]:
            body, _, rep = tok.partition("^")
            conds.extend([Partition.parse(body)] * (int(rep) if rep else 1))
        return cls(k, n, conds)

    @property
    def dimension(self) -> int:
        return self.k * (self.n - self.k)

    def __str__(self) -> str:
        counts: list[list] = []
        for c in self.conditions:
            if counts and counts[-1][0] == c:
                counts[-1][1] += 1
            else:
                counts.append([c, 1])
        body = " ".join(str(c) if m == 1 else f"{c}^{m}" for c, m in counts)
        return f"{self.k} {self.n} {body}"


def dual_problem(p: SchubertProblem) -> SchubertProblem:
    """The same problem read on G(n-k, n) through orthogonal complements."""
    return SchubertProblem(p.n - p.k, p.n, [conjugate_partition(c) for c in p.conditions])


def schubert_number(k: int, n: int) -> int:
    """Degree of G(k, n) in its Pluecker embedding."""
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    num = factorial(k * (n - k))
    for i in range(1, k):
        num *= factorial(i)
    den = 1
    for i in range(n - k, n):
        den *= factorial(i)
    return num // den


# --- Littlewood-Richardson products ------------------------------------------


def _strips(shape: tuple, count: int, rows: int, cols: int):
    """All ways to add a horizontal strip of ``count`` boxes inside the box.

    Yields (new_shape, per-row additions).
    """
    shape = tuple(shape) + (0,) * (rows - len(shape))

    def rec(r: int, left: int):
        if r == rows:
            if left == 0:
                yield ()
            return
        cap = cols if r == 0 else shape[r - 1]
        most = min(left, cap - shape[r])
        for a in range(most, -1, -1):
            for rest in rec(r + 1, left - a):
                yield (a,) + rest

    for adds in rec(0, count):
        yield tuple(s + a for s, a in zip(shape, adds)), adds


def _lattice_ok(rows_content: list[dict]) -> bool:
    # reading word: rows top to bottom, each right to left (labels decreasing)
    seen: Counter = Counter()
    for content in rows_content:
        for label in sorted(content, reverse=True):
            seen[label] += content[label]
            if label > 1 and seen[label] > seen[label - 1]:
                return False
    return True


def _trim(shape: Iterable[int]) -> tuple:
    s = list(shape)
    while s and s[-1] == 0:
        s.pop()
    return tuple(s)


@lru_cache(maxsize=None)
def lr_product(lam: tuple, mu: tuple, rows: int, cols: int) -> tuple:
    """Schur expansion of s_lam * s_mu restricted to partitions in the rows x cols box.

    Returns a sorted tuple of (partition tuple, coefficient) pairs.
    """
    out: Counter = Counter()
    if not mu:
        return ((tuple(lam), 1),)

    def rec(shape: tuple, label: int, fillings: list[dict]):
        if label > len(mu):
            if _lattice_ok(fillings):
                out[_trim(shape)] += 1
            return
        for new, adds in _strips(shape, mu[label - 1], rows, cols):
            nf = [dict(f) for f in fillings]
            for r, a in enumerate(adds):
                if a:
                    nf[r][label] = a
            # prune: the partial reading word must already be a lattice word
            if _lattice_ok(nf):
                rec(new, label + 1, nf)

    if len(lam) > rows or (lam and lam[0] > cols):
        return ()
    rec(tuple(lam), 1, [dict() for _ in range(rows)])
    return tuple(sorted(out.items()))


def problem_degree(p: SchubertProblem) -> int:
    """Number of solutions of the Schubert problem for general flags."""
    rows, cols = p.k, p.n - p.k
    state: Counter = Counter({(): 1})
    for cond in p.conditions:
        nxt: Counter = Counter()
        for shape, mult in state.items():
            for new, c in lr_product(shape, cond.parts, rows, cols):
                nxt[new] += mult * c
        state = nxt
    return state.get((cols,) * rows, 0)


def parse_problem(text: str) -> SchubertProblem:
    return SchubertProblem.parse(text)


def repeated(cond: Sequence[int], times: int) -> list[Partition]:
    return [Partition(cond)] * times
