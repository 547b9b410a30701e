"""Command line entry points: ``python -m realschubert <command> ...``.

Every command prints one JSON record per invocation on a single line.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .flags import Secant, format_flag_spec, parse_flag_spec
from .harness import ExperimentConfig, UniformShuffle, export_table, generate_instance, parse_mode, run_experiment
from .overlap import overlap_for_instance
from .schubert_combinatorics import SchubertProblem
from .solver import (
    ChordConfiguration,
    Instance,
    Standard,
    parse_chart,
    solve_four_lines,
    solve_gap_instance,
    solve_instance,
)


def _record(problem: str, chart: str, overlap, outcome, seed) -> dict:
    rec = {
        "problem": problem,
        "chart": chart,
        "overlap": overlap,
        "real_count": outcome.real_count,
        "degree": outcome.degree,
        "status": outcome.status.value,
        "seed": seed,
    }
    if outcome.reason:
        rec["reason"] = outcome.reason
    if outcome.details:
        rec.update({k: v for k, v in outcome.details.items()})
    return rec


def _emit(rec: dict) -> None:
    print(json.dumps(rec, sort_keys=True))


def _load_config(path: Optional[str]) -> dict:
    if not path:
        return {}
    return json.loads(Path(path).read_text())


def cmd_solve(args) -> int:
    conf = _load_config(args.config)
    problem_text = args.problem or conf.get("problem")
    flag_texts = args.flag or conf.get("flags")
    chart_text = args.chart or conf.get("chart", "standard")
    if not problem_text or not flag_texts:
        raise SystemExit("solve needs --problem and one --flag per condition (or --config)")
    problem = SchubertProblem.parse(problem_text)
    flags = [parse_flag_spec(t) for t in flag_texts]
    inst = Instance(problem, flags, parse_chart(chart_text))
    out = solve_instance(inst)
    _emit(_record(str(problem), inst.chart.describe(), overlap_for_instance(problem, flags), out, None))
    return 0


def cmd_fourlines(args) -> int:
    problem = SchubertProblem.parse("2 4 1^4")
    if args.points:
        pts = [Fraction(t) for t in args.points.split(",")]
    else:
        rng = random.Random(args.seed)
        pts = sorted(Fraction(v, 64) for v in rng.sample(range(-1024, 1025), 8))
    if args.pairing:
        config = ChordConfiguration.parse(args.pairing)
    else:
        rng = random.Random(args.seed)
        perm = list(range(1, 9))
        rng.shuffle(perm)
        config = ChordConfiguration([(perm[2 * i], perm[2 * i + 1]) for i in range(4)])
    out = solve_four_lines(pts, config)
    flags = [Secant([pts[a - 1], pts[b - 1]]) for a, b in config.pairs]
    rec = _record(str(problem), f"fourlines:{config}", overlap_for_instance(problem, flags), out, args.seed)
    _emit(rec)
    return 0


def cmd_gap(args) -> int:
    m = args.n
    problem = SchubertProblem.parse(f"4 {2 * m} {m - 2},{m - 2}^4")
    if args.plane:
        flags = [parse_flag_spec(t) for t in args.plane]
    else:
        cfg = ExperimentConfig(problem, 1, UniformShuffle(), 1, seed=args.seed or 0)
        flags = list(generate_instance(cfg, 0).flags)
    inst = Instance(problem, flags, Standard())
    out = solve_gap_instance(inst, verify_direct=args.verify)
    rec = _record(str(problem), "gap", overlap_for_instance(problem, flags), out, args.seed)
    rec["flags"] = [format_flag_spec(f) for f in flags]
    _emit(rec)
    return 0


def cmd_experiment(args) -> int:
    conf = _load_config(args.config)

    def pick(name, default=None):
        val = getattr(args, name)
        return val if val is not None else conf.get(name, default)

    problem_text = pick("problem")
    if not problem_text:
        raise SystemExit("experiment needs --problem (or a config file)")
    cfg = ExperimentConfig(
        SchubertProblem.parse(problem_text),
        computation_type=int(pick("type", 1)),
        sampling_mode=parse_mode(str(pick("mode", "disjoint"))),
        instance_count=int(pick("count", 100)),
        seed=int(pick("seed", 0)),
        worker_count=int(pick("workers", 1)),
    )
    table = run_experiment(cfg)
    out = pick("out")
    if out:
        fmt = "json" if str(out).endswith(".json") else "csv"
        Path(out).write_bytes(export_table(table, fmt))
    rec = {
        "problem": str(cfg.problem),
        "type": cfg.computation_type,
        "mode": cfg.sampling_mode.describe(),
        "count": cfg.instance_count,
        "seed": cfg.seed,
        "failures": table.failures,
        "cells": [[r, o, c] for (r, o), c in sorted(table.cells.items())],
        "out": out,
    }
    _emit(rec)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="realschubert", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one instance")
    p.add_argument("--problem", help='e.g. "2 5 1^6"')
    p.add_argument("--flag", action="append", help='one per condition, e.g. "sec:1,2,3" or "osc:inf"')
    p.add_argument("--chart", help="standard | osc-inf:I | two-osc:I,J")
    p.add_argument("--config", help="JSON file with keys problem, flags, chart")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("fourlines", help="four secant lines in 3-space")
    p.add_argument("--points", help="8 increasing rationals, comma separated")
    p.add_argument("--pairing", help='chords on positions 1..8, e.g. "13,24,57,68"')
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_fourlines)

    p = sub.add_parser("gap", help="4-planes meeting four m-planes in 2m-space in dimension 2")
    p.add_argument("--n", type=int, default=4, help="dimension m of the four planes")
    p.add_argument("--plane", action="append", help="four flag specs with m points each")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verify", action="store_true", help="check the sums of auxiliary solutions directly")
    p.set_defaults(func=cmd_gap)

    p = sub.add_parser("experiment", help="seeded batch run producing a frequency table")
    p.add_argument("--problem")
    p.add_argument("--type", type=int, choices=(1, 2, 3))
    p.add_argument("--mode", help="disjoint | shuffle | overlap=K")
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--out", help="table.csv or table.json")
    p.add_argument("--config", help="JSON file with the same keys")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
