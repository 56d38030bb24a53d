"""The inverse task: which joint influences make a subject choose a target.

For a controlled subject with canonical equation ``x = A x + B ~x`` a target
interval ``chi2 <= x <= chi1`` is reached by the influences that solve the
system ``A = chi1, B = chi2``. The general solver enumerates every joint
assignment of the free variables and keeps the exact solutions. The
closed-form intervals for ``x1 + x2 = chi`` and ``x1 x2 = chi`` are exposed
separately so they can be checked against the enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping, NamedTuple, Sequence

from .algebra import Alternative, Universe, enumerate_alternatives, interval_members
from .boolfunc import BooleanFunction
from .decision import CanonicalEquation, forward_solve

Interval = tuple[Alternative, Alternative]


@dataclass(frozen=True)
class TargetChoice:
    """Target interval ``lower <= x <= upper``; a single alternative when equal."""

    upper: Alternative
    lower: Alternative

    def __post_init__(self) -> None:
        if not self.lower <= self.upper:
            raise ValueError(f"target lower bound {self.lower} is not inside {self.upper}")

    @classmethod
    def single(cls, chi: Alternative) -> TargetChoice:
        return cls(chi, chi)

    @property
    def is_single(self) -> bool:
        return self.upper == self.lower

    @property
    def universe(self) -> Universe:
        return self.upper.universe

    def __str__(self) -> str:
        if self.is_single:
            return str(self.upper)
        return f"{self.upper} >= x >= {self.lower}"


@dataclass(frozen=True)
class Strategy:
    """Joint influence: one alternative per free variable, in variable order."""

    variables: tuple[str, ...]
    values: tuple[Alternative, ...]

    def as_dict(self) -> dict[str, Alternative]:
        return dict(zip(self.variables, self.values))

    def __getitem__(self, name: str) -> Alternative:
        return self.values[self.variables.index(name)]

    def sort_key(self) -> tuple[int, ...]:
        return tuple(v.bits for v in self.values)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class InfluenceSystem:
    """``A = target.upper`` and ``B = target.lower`` with some variables fixed."""

    A: BooleanFunction
    B: BooleanFunction
    target: TargetChoice
    fixed: Mapping[str, Alternative] = field(default_factory=dict)

    def __post_init__(self) -> None:
        known = set(self.A.variables) | set(self.B.variables)
        extra = sorted(set(self.fixed) - known)
        if extra:
            raise ValueError(f"fixed variables {extra} do not occur in the system")

    @classmethod
    def for_equation(
        cls,
        eq: CanonicalEquation,
        target: TargetChoice,
        fixed: Mapping[str, Alternative] | None = None,
    ) -> InfluenceSystem:
        return cls(eq.A, eq.B, target, dict(fixed or {}))

    @property
    def free_variables(self) -> tuple[str, ...]:
        return tuple(v for v in effective_variables(self.A, self.B) if v not in self.fixed)


def effective_variables(A: BooleanFunction, B: BooleanFunction) -> tuple[str, ...]:
    """Variables that ``A`` or ``B`` really depend on, sorted."""
    return tuple(sorted(set(A.support()) | set(B.support())))


def joint_influences(
    free: Sequence[str], universe: Universe
) -> Iterator[tuple[Alternative, ...]]:
    """Every joint assignment of ``free`` in ascending tuple order."""
    return itertools.product(enumerate_alternatives(universe), repeat=len(free))


def joint_evaluations(
    A: BooleanFunction,
    B: BooleanFunction,
    fixed: Mapping[str, Alternative],
    universe: Universe,
) -> Iterator[tuple[Strategy, Alternative, Alternative]]:
    free = tuple(v for v in effective_variables(A, B) if v not in fixed)
    for values in joint_influences(free, universe):
        env = dict(fixed)
        env.update(zip(free, values))
        yield Strategy(free, values), A.evaluate(env, universe), B.evaluate(env, universe)


def solve_system(sys: InfluenceSystem) -> list[Strategy]:
    """All joint influences with ``A == chi1`` and ``B == chi2`` exactly.

    Each result is substituted back through the forward task; the outcome
    must be precisely the target interval.
    """
    universe = sys.target.universe
    chi1, chi2 = sys.target.upper, sys.target.lower
    wanted = interval_members(chi1, chi2)
    eq = CanonicalEquation("*", sys.A, sys.B)
    found = []
    for strategy, a, b in joint_evaluations(sys.A, sys.B, sys.fixed, universe):
        if a == chi1 and b == chi2:
            env = dict(sys.fixed)
            env.update(strategy.as_dict())
            outcome = forward_solve(eq, env, universe)
            if list(outcome.choices) != wanted:
                raise AssertionError(f"strategy {strategy} does not reproduce the target")
            found.append(strategy)
    return found


def solve_influence_equation(
    A: BooleanFunction,
    B: BooleanFunction,
    chi: Alternative,
    fixed: Mapping[str, Alternative] | None = None,
) -> list[Strategy]:
    """Joint influences satisfying the single influence equation ``chi = A chi + B ~chi``.

    These make ``chi`` one solution of the decision equation, but unlike
    :func:`solve_system` they do not guarantee it is the only one.
    """
    fixed = dict(fixed or {})
    return [
        s
        for s, a, b in joint_evaluations(A, B, fixed, chi.universe)
        if (a & chi) | (b & ~chi) == chi
    ]


class FeasibleTargets(NamedTuple):
    """Reachable single alternatives ``D_h`` and their strategy sets ``Z_h``, aligned."""

    alternatives: list[Alternative]
    strategies: list[list[Strategy]]

    def as_dict(self) -> dict[Alternative, list[Strategy]]:
        return dict(zip(self.alternatives, self.strategies))


def feasible_targets(
    A: BooleanFunction,
    B: BooleanFunction,
    fixed: Mapping[str, Alternative] | None = None,
    universe: Universe | None = None,
) -> FeasibleTargets:
    """Every alternative the subject can be steered to, with all strategies for it.

    Alternatives whose strategy set is empty are skipped.
    """
    fixed = dict(fixed or {})
    if universe is None:
        if not fixed:
            raise ValueError("universe is required when nothing is fixed")
        universe = next(iter(fixed.values())).universe
    buckets: dict[int, list[Strategy]] = {}
    for strategy, a, b in joint_evaluations(A, B, fixed, universe):
        if a == b:
            buckets.setdefault(a.bits, []).append(strategy)
    alternatives, strategies = [], []
    for chi in enumerate_alternatives(universe):
        if chi.bits in buckets:
            alternatives.append(chi)
            strategies.append(buckets[chi.bits])
    return FeasibleTargets(alternatives, strategies)


# -- closed-form two-operand solutions -------------------------------------


def equality_residual(p: Alternative, q: Alternative) -> Alternative:
    """``p ~q + ~p q``; empty exactly when ``p == q``."""
    return (p & ~q) | (~p & q)


def solve_zero_canonical(a1: Alternative, b1: Alternative) -> Interval:
    """Solution interval ``(upper, lower)`` of ``a1 x + b1 ~x = 0``."""
    return ~a1, b1


@dataclass(frozen=True)
class IntervalFormula:
    """Solution interval for one operand written in terms of the other.

    ``upper`` and ``lower`` are functions of the variables ``chi`` and
    ``xj`` (the target and the co-operand).
    """

    equation: str
    upper: BooleanFunction
    lower: BooleanFunction
    text: str

    def at(self, chi: Alternative, xj: Alternative) -> Interval:
        env = {"chi": chi, "xj": xj}
        return self.upper.evaluate(env, chi.universe), self.lower.evaluate(env, chi.universe)


_chi = BooleanFunction.variable("chi")
_xj = BooleanFunction.variable("xj")

SUM_INTERVAL = IntervalFormula(
    "x1 + x2 = chi",
    _chi,
    (~_chi & _xj) | (~_xj & _chi),
    "chi >= xi >= ~chi xj + ~xj chi",
)
PRODUCT_INTERVAL = IntervalFormula(
    "x1 x2 = chi",
    (_chi & _xj) | (~_chi & ~_xj),
    _chi,
    "chi xj + ~chi ~xj >= xi >= chi",
)


def solve_sum(chi: Alternative, xj: Alternative) -> Interval:
    """Interval for ``xi`` in ``xi + xj = chi``."""
    chi._check(xj)
    return chi, (~chi & xj) | (~xj & chi)


def solve_product(chi: Alternative, xj: Alternative) -> Interval:
    """Interval for ``xi`` in ``xi xj = chi``."""
    chi._check(xj)
    return (chi & xj) | (~chi & ~xj), chi


def _pairs(solver, chi: Alternative) -> list[tuple[Alternative, Alternative]]:
    out = []
    for xj in enumerate_alternatives(chi.universe):
        for xi in interval_members(*solver(chi, xj)):
            out.append((xi, xj))
    return sorted(out, key=lambda p: (p[0].bits, p[1].bits))


def sum_pairs(chi: Alternative) -> list[tuple[Alternative, Alternative]]:
    """All ``(x1, x2)`` with ``x1 + x2 = chi``, running the co-operand over the algebra."""
    return _pairs(solve_sum, chi)


def product_pairs(chi: Alternative) -> list[tuple[Alternative, Alternative]]:
    """All ``(x1, x2)`` with ``x1 x2 = chi``."""
    return _pairs(solve_product, chi)
