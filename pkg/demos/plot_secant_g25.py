"""
Five real planes through six secant 3-planes
=============================================

Take six disjoint triples of points on the rational normal curve in 5-space.
Each triple spans a 3-plane, and we ask for the 2-planes meeting all six.
There are five such planes over the complex numbers.  When the triples come
from disjoint intervals, all five are real.
"""

from realschubert import Instance, Secant, SchubertProblem, problem_degree, solve_instance

problem = SchubertProblem.parse("2 5 1^6")
print(problem, "has", problem_degree(problem), "solutions")

# consecutive triples from 1, ..., 18
flags = [Secant([3 * i + 1, 3 * i + 2, 3 * i + 3]) for i in range(6)]
out = solve_instance(Instance(problem, flags))
print("real solutions:", out.real_count, "status:", out.status.value)

# the eliminant certifies the count: full degree, no repeated roots
print("eliminant in coordinate", out.eliminant_variable)
print(out.eliminant)

##############################################################################
# Interleaving the triples can destroy reality.  Sort all 18 points and deal
# them out round-robin instead.

flags = [Secant([i + 1, i + 7, i + 13]) for i in range(6)]
out = solve_instance(Instance(problem, flags))
print("interleaved triples:", out.real_count, "real of", out.degree)
