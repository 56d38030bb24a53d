"""The forward task: what each subject may choose under given influences.

The group is a(b+c) with a fixed influence matrix. Subject a ends
up frustrated, b may pick {beta} or 1, c must pick 1.
"""

from rgt.algebra import Universe
from rgt.decision import InfluenceMatrix, decision_equation, forward_solve
from rgt.polynomial import parse

u = Universe(("alpha", "beta"))
al, be = u.parse("{alpha}"), u.parse("{beta}")
m = InfluenceMatrix(
    u,
    "abc",
    {("a", "b"): al, ("a", "c"): be, ("b", "a"): be, ("b", "c"): be, ("c", "a"): be, ("c", "b"): be},
)
for row in m.rows():
    print("  ".join(f"{c:8s}" for c in row))

p = parse("a(b+c)")
for s in "abc":
    eq = decision_equation(p, s)
    out = forward_solve(eq, m.on(s), u)
    print(f"{str(eq):22s} A={out.upper}  B={out.lower}  ->  {out}")
