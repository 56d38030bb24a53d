"""The inverse task: which joint influences produce a target choice.

For ab+c and target {alpha}, the single influence equation a* = ba* + c has
six solutions. Requiring the decision equation to have {alpha} as its only
solution (the system A = {alpha}, B = {alpha}) keeps two of them. The
closed-form intervals for sums give the same answers as brute force.
"""

from rgt.algebra import Universe, interval_members
from rgt.decision import decision_equation
from rgt.influence import (
    InfluenceSystem,
    TargetChoice,
    feasible_targets,
    solve_influence_equation,
    solve_sum,
    solve_system,
)
from rgt.polynomial import parse

u = Universe(("alpha", "beta"))
chi = u.parse("{alpha}")

eq = decision_equation(parse("ab+c"), "a")
print(eq)
print("influence equation:", [str(s) for s in solve_influence_equation(eq.A, eq.B, chi)])
print("system:            ", [str(s) for s in solve_system(InfluenceSystem.for_equation(eq, TargetChoice.single(chi)))])

# b + c = 1 solved for b as c runs over the algebra
for c in u:
    print(f"c = {c!s:8s} b in", [str(b) for b in interval_members(*solve_sum(u.full, c))])

eq = decision_equation(parse("a(b+c)"), "a")
ft = feasible_targets(eq.A, eq.B, universe=u)
for alt, z in ft.as_dict().items():
    print(f"D_h contains {alt} via {len(z)} joint influences")
