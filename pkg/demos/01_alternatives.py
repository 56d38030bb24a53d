"""Alternatives as subsets of elementary actions.

With two actions there are four alternatives. Union, intersection and
complement work inside the universe, and the exponential P^W = P + ~W is
the operation the diagonal form is built from.
"""

from rgt.algebra import Universe, connective, exponential, interval_members

u = Universe(("alpha", "beta"))
print("alternatives:", [str(x) for x in u])

a, b = u.parse("{alpha}"), u.parse("{beta}")
print("~{alpha}              =", connective("complement", a))
print("{alpha} + {beta}      =", connective("union", a, b))
print("{alpha} {beta}        =", connective("intersect", a, b))

# x^x is always 1
print("x^x over the algebra  =", [str(exponential(x, x)) for x in u])

# every z with {beta} <= z <= 1
print("interval 1 >= x >= {beta}:", [str(z) for z in interval_members(u.full, b)])
