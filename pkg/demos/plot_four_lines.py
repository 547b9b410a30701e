"""
Four secant lines and their chord diagrams
==========================================

Two lines meet four general lines in 3-space.  When the four lines are
secant to the twisted cubic, the answer depends only on how the eight
points of secancy interleave around the curve.  Up to rotation and
reflection there are 17 chord diagrams.
"""

import random
from collections import Counter
from fractions import Fraction

from realschubert import enumerate_chord_configurations, has_odd_interval, solve_four_lines

configs = enumerate_chord_configurations()
print(len(configs), "chord diagrams,", sum(map(has_odd_interval, configs)), "with an odd interval")

rng = random.Random(0)


def sample():
    return sorted(Fraction(v, 64) for v in rng.sample(range(-1024, 1025), 8))


##############################################################################
# A chord with an odd number of endpoints on one side forces both lines to
# be real.  The five even diagrams can give 0 real lines; only the disjoint
# one never does.

for c in configs:
    tally = Counter(solve_four_lines(sample(), c).real_count for _ in range(400))
    tag = "odd " if has_odd_interval(c) else "even"
    print(f"{c}  {tag}  zeros={tally[0] / 400:.3f}")
