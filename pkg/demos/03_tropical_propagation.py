#!/usr/bin/env python3
"""Wall inequalities travel from a single cutcurve to the whole wall.

A wall is a slice {i_s = c} of the lattice box.  If a max-plus labeling
satisfies the two concavity inequalities on every edge of one taxi-cab
geodesic across the wall, it satisfies them on every edge of the wall.
"""

import random
from fractions import Fraction

from zonorec import (
    TROPICAL,
    Wall,
    ZonogonSpec,
    all_cutcurves,
    canonical_cutcurve,
    check_propagation,
    elementary_move,
    extend_to_lattice,
    initial_labeling,
    t_min,
)

spec = ZonogonSpec((2, 2, 1))
wall = Wall(0, 1)
print("wall: first coordinate fixed to", wall.c)

g = canonical_cutcurve(spec, wall)
print("a cutcurve:", " -> ".join(map(str, g.points)))
steps = [tuple(a - b for a, b in zip(g.points[i + 1], g.points[i]))
         for i in range(len(g.points) - 1)]
corner = next(i + 1 for i in range(len(steps) - 1) if steps[i] != steps[i + 1])
g2 = elementary_move(g, corner)
print("after one elementary move:", " -> ".join(map(str, g2.points)))
curves = all_cutcurves(spec, wall)
print("elementary moves reach all", len(curves), "cutcurves of this wall")

print()
rng = random.Random(0)
tm = t_min(spec)
met = tried = 0
while met < 25:
    tried += 1
    data = {v: Fraction(rng.randint(-5, 5)) for v in tm.vertices}
    lab = extend_to_lattice(initial_labeling(tm, TROPICAL, data))
    report = check_propagation(lab, wall, g)
    if report.hypothesis_ok:
        met += 1
        assert not report.violations
print(f"sampled labelings until {met} met the cutcurve hypothesis "
      f"({tried} tries); the wall inequalities then held on every wall edge")

print()
print("corrupting one value breaks the recurrence and the checker notices:")
lab.values[(1, 1, 1)] += 10
report = check_propagation(lab, wall, g)
print("  recurrence_ok =", report.recurrence_ok)
