"""From a relationship graph to the folded decision function.

Alliance edges multiply and conflict edges add. The graph below
(a allied with b and c, b in conflict with c) decomposes to a(b+c). The
diagonal form is then folded bottom-up.
"""

from rgt.group import Relation, RelationshipGraph, decompose, exclude_until_decomposable
from rgt.polynomial import diagonal_form, fold, fold_expression, parse, stratify

g = RelationshipGraph(
    "abc",
    {("a", "b"): Relation.ALLIANCE, ("a", "c"): Relation.ALLIANCE, ("b", "c"): Relation.CONFLICT},
)
p = decompose(g)
print("polynomial:", p)
print(stratify(p).render())
print("diagonal form:", diagonal_form(p))
print("folded:", fold_expression(p), " i.e.", fold(p).to_expression())

for text in ["ab+c", "b(a+d)+c", "c(ab+d)", "abc"]:
    q = parse(text)
    print(f"{text:10s} folds to {fold_expression(q):35s} = {fold(q).to_expression()}")

# A four-subject alliance path has no polynomial; drop the least important subject.
path = RelationshipGraph(
    "abcd",
    {
        ("a", "b"): "alliance", ("b", "c"): "alliance", ("c", "d"): "alliance",
        ("a", "c"): "conflict", ("a", "d"): "conflict", ("b", "d"): "conflict",
    },
)
print("path decomposes?", decompose(path))
q, excluded = exclude_until_decomposable(path, importance=["b", "a", "c", "d"])
print("after excluding", excluded, "->", q)
