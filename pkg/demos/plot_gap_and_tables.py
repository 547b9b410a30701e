"""
A gap in the real counts, and frequency tables
==============================================

Four-planes meeting four 4-planes of 8-space in at least a 2-plane number
six.  They are the pairwise sums of the four 2-planes meeting the same four
4-planes in a line.  If r of those are real and c pairs are complex
conjugate, C(r, 2) + c of the six are real, so 0 and 4 never occur.

We then tabulate real counts against the overlap number, the quantity that
measures how badly the secancy intervals interleave.
"""

from realschubert import (
    ExperimentConfig,
    SchubertProblem,
    UniformShuffle,
    export_table,
    run_experiment,
)

problem = SchubertProblem.parse("4 8 2,2^4")
cfg = ExperimentConfig(problem, sampling_mode=UniformShuffle(), instance_count=200, seed=1)
table = run_experiment(cfg)
print(export_table(table, "csv").decode())
print("failures:", table.failures)

##############################################################################
# Secant flags on disjoint intervals sit in the overlap-0 column, where every
# solution is real.  Interleaved flags spread out to the right.

problem = SchubertProblem.parse("2 5 1^6")
cfg = ExperimentConfig(problem, sampling_mode=UniformShuffle(), instance_count=200, seed=2)
table = run_experiment(cfg)
for overlap in sorted({o for _, o in table.cells}):
    print(f"overlap {overlap}:", dict(sorted(table.column(overlap).items())))
