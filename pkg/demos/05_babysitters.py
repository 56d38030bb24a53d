"""Robot baby-sitters b and d look after kids a and c in the group ab+cd.

Climbing the tree (alpha) is risky, so the approved set is {0, {beta}}. The
robots solve the inverse task for kid a and pick a control plan.
"""

from rgt.agents import AsimovPolicy, compute_U, plan_control
from rgt.algebra import Universe
from rgt.decision import decision_equation, forward_solve
from rgt.influence import InfluenceSystem, TargetChoice, solve_system
from rgt.polynomial import parse

u = Universe(("alpha", "beta"), risky={"alpha"})
approved = compute_U(u, AsimovPolicy.from_universe(u))
print("U =", approved)

p = parse("ab+cd")
eq = decision_equation(p, "a")
print(eq)
for upper, lower in [("{beta}", "{beta}"), ("0", "0"), ("{beta}", "0")]:
    t = TargetChoice(u.parse(upper), u.parse(lower))
    sols = solve_system(InfluenceSystem.for_equation(eq, t))
    print(f"target {t}: {len(sols)} triplets (b,c,d):", " ".join(str(s) for s in sols))

# With b = d = {beta} kid a stays inside U whatever kid c does.
beta = u.parse("{beta}")
for c in u:
    print(f"c = {c!s:8s} a may choose", forward_solve(eq, {"b": beta, "c": c, "d": beta}, u))

print(plan_control(p, "a", approved))
print(plan_control(p, "a", approved, select_target=lambda targets: targets[-1]))
