"""Two climbers and a rescue robot, first all allied (abc).

The all-alliance group is super-active, so the robot changes its relation
with climber b. In the new group a(b+c) the robot frustrates climber a and
chooses {beta} (rescue by robot) under every joint influence.
"""

import itertools

from rgt.agents import AsimovPolicy, compute_U, plan_control, robot_step, suggest_relation_change
from rgt.algebra import Universe
from rgt.decision import is_super_active
from rgt.group import Relation, RelationshipGraph
from rgt.polynomial import fold, parse

u = Universe(("alpha", "beta"), risky={"alpha"})
approved = compute_U(u, AsimovPolicy.from_universe(u, inaction_forbidden=True))
print("U =", approved)

g = RelationshipGraph.homogeneous("abc", Relation.ALLIANCE)
print("abc super-active:", is_super_active(fold(parse("abc"))))
for change in suggest_relation_change(g, "c"):
    print("option:", change)

p = suggest_relation_change(g, "c")[-1].polynomial
print("new group:", p)
print(plan_control(p, "a", approved))

print(f"{'(a,b)':18s} {'D':26s} robot")
for a, b in itertools.product(u, repeat=2):
    outcome, decision = robot_step(p, "c", {"a": a, "b": b}, approved)
    print(f"({a},{b})".ljust(18), str(outcome).ljust(26), decision.chosen, f"from {decision.source.value}")
