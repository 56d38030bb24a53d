"""Dense truth-table Boolean functions over named subject variables.

A function over ``k`` variables is a read-only boolean array of shape
``(2,) * k``; axis ``i`` belongs to ``variables[i]`` and the variables are
kept in lexicographic order. Evaluating at alternatives is done once per
action bit, which is valid because every connective of the algebra is
elementwise.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Iterator, Mapping

import numpy as np

from .algebra import Alternative, Universe


class MissingInfluence(KeyError):
    """Raised when a function is evaluated without a value for one of its variables."""


class BooleanFunction:
    """Immutable Boolean function stored as a dense truth table."""

    __slots__ = ("variables", "table", "_rows")

    def __init__(self, variables: Iterable[str], table) -> None:
        variables = tuple(variables)
        table = np.asarray(table, dtype=bool)
        if table.shape != (2,) * len(variables):
            raise ValueError(
                f"table shape {table.shape} does not match {len(variables)} variables"
            )
        if list(variables) != sorted(set(variables)):
            order = sorted(range(len(variables)), key=variables.__getitem__)
            if len(set(variables)) != len(variables):
                raise ValueError(f"duplicate variables {variables}")
            variables = tuple(variables[i] for i in order)
            table = np.transpose(table, order)
        table = np.array(table, dtype=bool)
        table.setflags(write=False)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "table", table)

    def __setattr__(self, name, value):
        raise AttributeError("BooleanFunction is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def constant(cls, value: bool) -> BooleanFunction:
        return cls((), np.array(bool(value)))

    @classmethod
    def variable(cls, name: str) -> BooleanFunction:
        return cls((name,), np.array([False, True]))

    @classmethod
    def from_callable(
        cls, variables: Iterable[str], fn: Callable[..., bool]
    ) -> BooleanFunction:
        """Tabulate ``fn(**bits)`` over all 0/1 assignments of ``variables``."""
        variables = tuple(sorted(variables))
        table = np.zeros((2,) * len(variables), dtype=bool)
        for row in itertools.product((0, 1), repeat=len(variables)):
            table[row] = bool(fn(**dict(zip(variables, row))))
        return cls(variables, table)

    # -- structure --------------------------------------------------------

    def _expand(self, variables: tuple[str, ...]) -> np.ndarray:
        """View of the table broadcast over a superset of variables."""
        t = self.table
        for axis, name in enumerate(variables):
            if name not in self.variables:
                t = np.expand_dims(t, axis)
        return np.broadcast_to(t, (2,) * len(variables))

    def _binary(self, other: BooleanFunction, op) -> BooleanFunction:
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        variables = tuple(sorted(set(self.variables) | set(other.variables)))
        return BooleanFunction(variables, op(self._expand(variables), other._expand(variables)))

    def __or__(self, other: BooleanFunction) -> BooleanFunction:
        return self._binary(other, np.logical_or)

    def __and__(self, other: BooleanFunction) -> BooleanFunction:
        return self._binary(other, np.logical_and)

    def __invert__(self) -> BooleanFunction:
        return BooleanFunction(self.variables, ~self.table)

    def cofactor(self, name: str, value: int) -> BooleanFunction:
        """Restrict ``name`` to ``value``; the result no longer mentions ``name``."""
        if name not in self.variables:
            return self
        axis = self.variables.index(name)
        rest = self.variables[:axis] + self.variables[axis + 1 :]
        return BooleanFunction(rest, np.take(self.table, int(bool(value)), axis=axis))

    def depends_on(self, name: str) -> bool:
        if name not in self.variables:
            return False
        return not np.array_equal(self.cofactor(name, 0).table, self.cofactor(name, 1).table)

    def support(self) -> tuple[str, ...]:
        """Variables the function actually depends on."""
        return tuple(v for v in self.variables if self.depends_on(v))

    def reduce(self) -> BooleanFunction:
        """Drop every variable the table does not depend on."""
        f = self
        for name in self.variables:
            if not f.depends_on(name):
                f = f.cofactor(name, 0)
        return f

    @property
    def is_constant(self) -> bool:
        return bool(self.table.all() or not self.table.any())

    @property
    def constant_value(self) -> bool | None:
        if self.table.all():
            return True
        if not self.table.any():
            return False
        return None

    # -- evaluation -------------------------------------------------------

    def __call__(self, **bits: int) -> bool:
        return self.evaluate_bits(bits)

    def evaluate_bits(self, bits: Mapping[str, int]) -> bool:
        try:
            index = tuple(int(bool(bits[v])) for v in self.variables)
        except KeyError as exc:
            raise MissingInfluence(exc.args[0]) from None
        return bool(self.table[index])

    def rows(self) -> Iterator[tuple[dict[str, int], bool]]:
        for row in itertools.product((0, 1), repeat=len(self.variables)):
            yield dict(zip(self.variables, row)), bool(self.table[row])

    def evaluate(
        self, assignment: Mapping[str, Alternative], universe: Universe | None = None
    ) -> Alternative:
        """Set-valued evaluation: one truth-table lookup per action bit."""
        if universe is None:
            values = [assignment[v] for v in self.variables if v in assignment]
            if not values:
                values = list(assignment.values())
            if not values:
                raise ValueError("universe is required to evaluate a constant function")
            universe = values[0].universe
        missing = [v for v in self.variables if v not in assignment]
        if missing:
            raise MissingInfluence(missing[0])
        values = []
        for v in self.variables:
            alt = assignment[v]
            if alt.universe != universe:
                raise ValueError(f"value of {v!r} belongs to another universe")
            values.append(alt.bits)
        rows = self._row_mask()
        k = len(values)
        bits = 0
        for i in range(universe.size):
            row = 0
            for j, x in enumerate(values):
                row |= ((x >> i) & 1) << (k - 1 - j)
            bits |= ((rows >> row) & 1) << i
        return Alternative(universe, bits)

    def _row_mask(self) -> int:
        """Truth table packed into an int, bit r set when row r (C order) is true."""
        try:
            return self._rows
        except AttributeError:
            flat = self.table.ravel()
            mask = sum(1 << r for r in np.flatnonzero(flat).tolist())
            object.__setattr__(self, "_rows", mask)
            return mask

    # -- comparison -------------------------------------------------------

    def equivalent(self, other: BooleanFunction) -> bool:
        variables = tuple(sorted(set(self.variables) | set(other.variables)))
        return bool(np.array_equal(self._expand(variables), other._expand(variables)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.variables == other.variables and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.variables, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"BooleanFunction({self.to_expression()!r})"

    def to_expression(self) -> str:
        """Minimal sum-of-products text such as ``~a + b + c``."""
        value = self.constant_value
        if value is not None:
            return "1" if value else "0"
        f = self.reduce()
        from sympy import symbols
        from sympy.logic import SOPform
        from sympy.logic.boolalg import And, Not, Or

        syms = symbols(list(f.variables))
        minterms = [list(row) for row in itertools.product((0, 1), repeat=len(f.variables)) if f.table[row]]
        expr = SOPform(syms, minterms)

        def literal(e) -> tuple[str, str]:
            if isinstance(e, Not):
                return (e.args[0].name, "~" + e.args[0].name)
            return (e.name, e.name)

        def term(e) -> str:
            lits = sorted(literal(x) for x in (e.args if isinstance(e, And) else (e,)))
            sep = "" if all(len(k) == 1 for k, _ in lits) else "*"
            return sep.join(t for _, t in lits)

        terms = expr.args if isinstance(expr, Or) else (expr,)
        return " + ".join(sorted((term(t) for t in terms), key=lambda s: (s.lstrip("~"), s)))


def semantically_equal(f: BooleanFunction, g: BooleanFunction) -> bool:
    """True when ``f`` and ``g`` agree on every 0/1 assignment of their joint variables."""
    return f.equivalent(g)
