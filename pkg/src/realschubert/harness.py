"""Seeded experiments: random instances, batch solving and frequency tables.

Every instance is a pure function of (seed, index), so a run can be split
across processes or machines and merged without changing the result.
"""

from __future__ import annotations

import csv
import io
import json
import os
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .flags import Osculating, Secant
from .overlap import overlap_for_instance
from .schubert_combinatorics import SchubertProblem, problem_degree, relevant_dimension
from .solver import Instance, OneOsculatingAtInfinity, Standard, TwoOsculating, solve_instance

WORKERS_ENV = "REALSCHUBERT_WORKERS"


@dataclass(frozen=True)
class DisjointIntervals:
    def describe(self) -> str:
        return "disjoint"


@dataclass(frozen=True)
class UniformShuffle:
    def describe(self) -> str:
        return "shuffle"


@dataclass(frozen=True)
class TargetOverlap:
    value: int

    def describe(self) -> str:
        return f"overlap={self.value}"


SamplingMode = Union[DisjointIntervals, UniformShuffle, TargetOverlap]


def parse_mode(text: str) -> SamplingMode:
    text = text.strip().lower()
    if text == "disjoint":
        return DisjointIntervals()
    if text == "shuffle":
        return UniformShuffle()
    if text.startswith("overlap="):
        return TargetOverlap(int(text.split("=", 1)[1]))
    raise ValueError(f"unknown sampling mode {text!r}")


@dataclass(frozen=True)
class ExperimentConfig:
    """One batch of random instances.

    Points are i/denominator with i uniform in the numerator range implied by
    ``point_range``.  ``index_offset`` lets a run be split into pieces that
    reproduce the matching slice of a larger run.
    """

    problem: SchubertProblem
    computation_type: int = 1
    sampling_mode: SamplingMode = DisjointIntervals()
    instance_count: int = 100
    seed: int = 0
    point_range: tuple[Fraction, Fraction] = (Fraction(-16), Fraction(16))
    worker_count: int = 1
    denominator: int = 64
    index_offset: int = 0
    rejection_budget: int = 2000

    def __post_init__(self):
        if self.computation_type not in (1, 2, 3):
            raise ValueError("computation type must be 1, 2 or 3")
        if self.computation_type - 1 > len(self.problem.conditions):
            raise ValueError("not enough conditions for that many osculating flags")
        if self.instance_count < 0:
            raise ValueError("instance_count must be nonnegative")
        if self.worker_count < 1:
            raise ValueError("worker_count must be positive")
        lo, hi = (Fraction(v) for v in self.point_range)
        object.__setattr__(self, "point_range", (lo, hi))
        if lo >= hi:
            raise ValueError("empty point range")

    def echo(self) -> dict:
        return {
            "problem": str(self.problem),
            "computation_type": self.computation_type,
            "sampling_mode": self.sampling_mode.describe(),
            "instance_count": self.instance_count,
            "seed": self.seed,
            "point_range": [str(v) for v in self.point_range],
            "denominator": self.denominator,
            "index_offset": self.index_offset,
        }


def osculating_indices(problem: SchubertProblem, computation_type: int) -> list[int]:
    """Conditions given osculating flags: the ones of largest codimension, stably.

    The first index osculates at infinity, the second (type 3) at 0.
    """
    order = sorted(range(len(problem.conditions)), key=lambda i: -problem.conditions[i].size)
    return order[: computation_type - 1]


def _chart_for(computation_type: int, osc: list[int]):
    if computation_type == 1:
        return Standard()
    if computation_type == 2:
        return OneOsculatingAtInfinity(osc[0])
    return TwoOsculating(osc[0], osc[1])


def _sample_numerators(rng: random.Random, cfg: ExperimentConfig, count: int, exclude=()) -> list[int]:
    lo = int(cfg.point_range[0] * cfg.denominator)
    hi = int(cfg.point_range[1] * cfg.denominator)
    pool_size = hi - lo + 1 - len(exclude)
    if count > pool_size:
        raise ValueError("point range too small for the requested number of points")
    chosen: set[int] = set()
    out = []
    excluded = set(exclude)
    while len(out) < count:
        v = rng.randint(lo, hi)
        if v in chosen or v in excluded:
            continue
        chosen.add(v)
        out.append(v)
    return out


def _rng_for(cfg: ExperimentConfig, index: int) -> random.Random:
    return random.Random(cfg.seed ^ index)


def _layout(cfg: ExperimentConfig):
    p = cfg.problem
    osc = osculating_indices(p, cfg.computation_type)
    secant = [i for i in range(len(p.conditions)) if i not in osc]
    sizes = {i: relevant_dimension(p.conditions[i], p.k, p.n) for i in secant}
    return osc, secant, sizes


def _assemble(cfg: ExperimentConfig, osc: list[int], blocks: dict, scale: int) -> Instance:
    p = cfg.problem
    flags: list = [None] * len(p.conditions)
    for i, nums in blocks.items():
        flags[i] = Secant(sorted(Fraction(v, scale) for v in nums))
    anchors = ["inf", 0]
    for pos, i in enumerate(osc):
        flags[i] = Osculating(anchors[pos])
    return Instance(p, flags, _chart_for(cfg.computation_type, osc))


def _disjoint(cfg: ExperimentConfig, rng: random.Random) -> Instance:
    osc, secant, sizes = _layout(cfg)
    total = sum(sizes.values())
    nums = sorted(_sample_numerators(rng, cfg, total))
    order = list(secant)
    rng.shuffle(order)
    blocks, pos = {}, 0
    for i in order:
        blocks[i] = nums[pos : pos + sizes[i]]
        pos += sizes[i]
    scale = cfg.denominator
    if len(osc) == 2:
        # move 0 into a random gap between blocks; doubling keeps all points off 0
        cuts = [0]
        acc = 0
        for i in order:
            acc += sizes[i]
            cuts.append(acc)
        cut = rng.choice(cuts)
        if cut == 0:
            centre = 2 * nums[0] - 1
        elif cut == total:
            centre = 2 * nums[-1] + 1
        else:
            centre = nums[cut - 1] + nums[cut]
        blocks = {i: [2 * v - centre for v in b] for i, b in blocks.items()}
        scale *= 2
    return _assemble(cfg, osc, blocks, scale)


def _shuffle(cfg: ExperimentConfig, rng: random.Random) -> Instance:
    osc, secant, sizes = _layout(cfg)
    total = sum(sizes.values())
    exclude = (0,) if len(osc) == 2 else ()
    nums = _sample_numerators(rng, cfg, total, exclude)
    rng.shuffle(nums)
    blocks, pos = {}, 0
    for i in secant:
        blocks[i] = nums[pos : pos + sizes[i]]
        pos += sizes[i]
    return _assemble(cfg, osc, blocks, cfg.denominator)


def generate_instance(cfg: ExperimentConfig, index: int) -> Instance:
    """Deterministic random instance number ``index`` of the experiment."""
    if not 0 <= index < cfg.index_offset + cfg.instance_count:
        raise ValueError(f"index {index} outside the experiment")
    rng = _rng_for(cfg, index)
    mode = cfg.sampling_mode
    if isinstance(mode, DisjointIntervals):
        return _disjoint(cfg, rng)
    if isinstance(mode, UniformShuffle):
        return _shuffle(cfg, rng)
    if isinstance(mode, TargetOverlap):
        for _ in range(cfg.rejection_budget):
            inst = _shuffle(cfg, rng)
            if overlap_for_instance(inst.problem, inst.flags) == mode.value:
                return inst
        raise ValueError(
            f"overlap number {mode.value} not reached within the rejection budget of "
            f"{cfg.rejection_budget} samples"
        )
    raise TypeError(f"unknown sampling mode {mode!r}")


@dataclass
class FrequencyTable:
    """Instance counts keyed by (real solutions, overlap number)."""

    cells: Counter = field(default_factory=Counter)
    metadata: dict = field(default_factory=dict)

    @property
    def failures(self) -> int:
        return int(self.metadata.get("failures", 0))

    @property
    def total(self) -> int:
        return sum(self.cells.values())

    def __eq__(self, other) -> bool:
        # wall time and run bookkeeping are not part of the result
        if not isinstance(other, FrequencyTable):
            return NotImplemented
        keys = ("problem", "computation_type", "failures")
        return +self.cells == +other.cells and all(
            self.metadata.get(k) == other.metadata.get(k) for k in keys
        )

    def column(self, overlap: int) -> dict[int, int]:
        return {r: c for (r, o), c in self.cells.items() if o == overlap and c}


def _solve_index(args) -> tuple[int, Optional[int], Optional[int], Optional[str]]:
    cfg, index = args
    inst = generate_instance(cfg, index)
    out = solve_instance(inst)
    ov = overlap_for_instance(inst.problem, inst.flags)
    if not out.certified:
        return index, None, ov, out.reason
    return index, out.real_count, ov, None


def resolve_workers(requested: int) -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return requested


def run_experiment(cfg: ExperimentConfig) -> FrequencyTable:
    """Solve every instance and tabulate (real count, overlap number)."""
    start = time.perf_counter()
    indices = range(cfg.index_offset, cfg.index_offset + cfg.instance_count)
    jobs = [(cfg, i) for i in indices]
    workers = resolve_workers(cfg.worker_count)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_solve_index, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [_solve_index(j) for j in jobs]
    cells: Counter = Counter()
    failures = []
    for index, real, ov, reason in sorted(results):
        if real is None:
            failures.append({"index": index, "reason": reason})
        else:
            cells[(real, ov)] += 1
    meta = {
        "problem": str(cfg.problem),
        "computation_type": cfg.computation_type,
        "degree": problem_degree(cfg.problem),
        "failures": len(failures),
        "failure_log": failures,
        "runs": [cfg.echo()],
        "wall_time": round(time.perf_counter() - start, 3),
    }
    return FrequencyTable(cells, meta)


def merge_tables(a: FrequencyTable, b: FrequencyTable) -> FrequencyTable:
    """Cellwise sum of two tables for the same problem and computation type."""
    for key in ("problem", "computation_type"):
        if a.metadata.get(key) != b.metadata.get(key):
            raise ValueError(f"cannot merge tables with different {key}")
    meta = dict(a.metadata)
    meta["failures"] = a.failures + b.failures
    meta["failure_log"] = list(a.metadata.get("failure_log", [])) + list(b.metadata.get("failure_log", []))
    meta["runs"] = list(a.metadata.get("runs", [])) + list(b.metadata.get("runs", []))
    meta["wall_time"] = round(a.metadata.get("wall_time", 0) + b.metadata.get("wall_time", 0), 3)
    return FrequencyTable(a.cells + b.cells, meta)


def empty_table(problem: SchubertProblem, computation_type: int = 1) -> FrequencyTable:
    return FrequencyTable(
        Counter(),
        {"problem": str(problem), "computation_type": computation_type, "failures": 0, "runs": []},
    )


def export_table(t: FrequencyTable, format: str = "csv") -> bytes:
    """CSV rows real_solutions,overlap,count or a JSON document with metadata."""
    rows = sorted((r, o, c) for (r, o), c in t.cells.items() if c)
    if format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["real_solutions", "overlap", "count"])
        w.writerows(rows)
        return buf.getvalue().encode("utf-8")
    if format == "json":
        doc = {"cells": [list(r) for r in rows], "metadata": t.metadata}
        return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode("utf-8")
    raise ValueError(f"unknown format {format!r}")


def parse_table(data: bytes, format: str = "csv") -> FrequencyTable:
    """Inverse of export_table (CSV carries no metadata)."""
    text = data.decode("utf-8")
    if format == "csv":
        reader = csv.reader(io.StringIO(text))
        header = next(reader, None)
        if header != ["real_solutions", "overlap", "count"]:
            raise ValueError("not a frequency table")
        cells = Counter({(int(r), int(o)): int(c) for r, o, c in reader})
        return FrequencyTable(cells, {})
    if format == "json":
        doc = json.loads(text)
        cells = Counter({(r, o): c for r, o, c in doc["cells"]})
        return FrequencyTable(cells, doc["metadata"])
    raise ValueError(f"unknown format {format!r}")
