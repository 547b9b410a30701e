"""Exact real Schubert calculus on the rational normal curve.

Build Schubert problems with secant, osculating, generalized secant and
cosecant flags, count their real solutions with certified eliminants, and
tabulate the counts against the overlap number of the flags.
"""

from .exact_algebra import UniPoly, count_real_roots, is_squarefree, upoly_gcd
from .flags import (
    FlagMatrix,
    GeneralizedSecant,
    Osculating,
    Secant,
    cosecant_normal,
    cosecant_subspace,
    discrete_wronskian,
    dual_curve_point,
    dual_flag,
    moment_point,
    parse_flag_spec,
    realize_flag,
    wronskian,
)
from .harness import (
    DisjointIntervals,
    ExperimentConfig,
    FrequencyTable,
    TargetOverlap,
    UniformShuffle,
    export_table,
    generate_instance,
    merge_tables,
    parse_table,
    run_experiment,
)
from .multipoly import MultiPoly, PolyMatrix, determinant, eliminate_to_univariate, minors
from .overlap import PointConfiguration, overlap_for_instance, overlap_number
from .schubert_combinatorics import (
    Partition,
    SchubertProblem,
    conjugate_partition,
    dual_problem,
    problem_degree,
    relevant_dimension,
    schubert_number,
)
from .solver import (
    ChordConfiguration,
    Instance,
    OneOsculatingAtInfinity,
    SolveOutcome,
    Standard,
    Status,
    TwoOsculating,
    build_equations,
    enumerate_chord_configurations,
    gap_predicted_count,
    has_odd_interval,
    solve_four_lines,
    solve_gap_auxiliary,
    solve_gap_problem,
    solve_instance,
)

__version__ = "0.1.0"
