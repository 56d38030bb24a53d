"""Robot agents in mixed human/robot groups.

A robot combines three pieces: the forward task for its own choice, the
inverse task for each human it looks after, and an approval filter that
removes alternatives containing risky actions (and, when inaction would
itself cause harm, the empty alternative). Two interaction steps join the
approval filter with the other two outputs.

Selection among equally valid alternatives or strategies is canonical-first
unless a ``select`` callable is passed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence, TypeVar

from .algebra import Alternative, Universe, enumerate_alternatives
from .boolfunc import BooleanFunction
from .decision import CanonicalEquation, DecisionOutcome, decision_equation, forward_solve, is_super_active
from .group import Relation, RelationshipGraph, decompose
from .influence import FeasibleTargets, Strategy, joint_evaluations, feasible_targets
from .polynomial import Polynomial, fold

T = TypeVar("T")


def first(items: Sequence[T]) -> T:
    return items[0]


class UnsatisfiablePolicy(ValueError):
    """The approval filter leaves no alternative at all."""


class UncontrollableSubject(RuntimeError):
    """No strategy reaches an approved alternative and no influence causes frustration."""


@dataclass(frozen=True)
class AsimovPolicy:
    """Risky actions to filter out and whether the empty alternative is forbidden."""

    risky: frozenset[str] = frozenset()
    inaction_forbidden: bool = False

    @classmethod
    def from_universe(cls, u: Universe, inaction_forbidden: bool = False) -> AsimovPolicy:
        return cls(u.risky, inaction_forbidden)


@dataclass(frozen=True)
class ApprovedSet:
    """Approved alternatives in canonical order."""

    alternatives: tuple[Alternative, ...]

    def __iter__(self):
        return iter(self.alternatives)

    def __len__(self) -> int:
        return len(self.alternatives)

    def __contains__(self, alt: Alternative) -> bool:
        return alt in self.alternatives

    def __str__(self) -> str:
        return "{" + ", ".join(str(a) for a in self.alternatives) + "}"


def compute_U(u: Universe, policy: AsimovPolicy) -> ApprovedSet:
    """Alternatives with no risky action, without 0 when inaction is forbidden."""
    unknown = set(policy.risky) - set(u.actions)
    if unknown:
        raise ValueError(f"risky actions not in universe: {sorted(unknown)}")
    risky = u.alternative(policy.risky)
    approved = tuple(
        alt
        for alt in enumerate_alternatives(u)
        if (alt & risky).is_empty and not (policy.inaction_forbidden and alt.is_empty)
    )
    if not approved:
        raise UnsatisfiablePolicy("no alternative passes the approval filter")
    return ApprovedSet(approved)


class Source(enum.Enum):
    FROM_DU = "DU"
    FROM_U = "U"


@dataclass(frozen=True)
class RobotDecision:
    chosen: Alternative
    source: Source
    du: tuple[Alternative, ...] = ()


def interaction1(
    d: DecisionOutcome | Sequence[Alternative],
    approved: ApprovedSet,
    select: Callable[[Sequence[Alternative]], Alternative] = first,
) -> RobotDecision:
    """Robot's own choice: an approved alternative it may choose, else any approved one."""
    if not approved:
        raise UnsatisfiablePolicy("approved set is empty")
    choices = d.choices if isinstance(d, DecisionOutcome) else tuple(d)
    du = tuple(a for a in choices if a in approved)
    if du:
        return RobotDecision(select(du), Source.FROM_DU, du)
    return RobotDecision(select(approved.alternatives), Source.FROM_U, du)


@dataclass(frozen=True)
class ControlPlan:
    """How to steer one subject.

    ``kind`` is ``"strategy"`` (use ``strategy`` to reach ``alternative``)
    or ``"frustration"`` (apply any of ``frustration``).
    """

    target: str
    kind: str
    alternative: Alternative | None = None
    strategy: Strategy | None = None
    frustration: tuple[Strategy, ...] = ()
    approved_targets: tuple[Alternative, ...] = ()

    def __str__(self) -> str:
        if self.kind == "strategy":
            return f"steer {self.target} to {self.alternative} with {self.strategy}"
        return f"frustrate {self.target} with any of {len(self.frustration)} joint influences"


def frustration_strategies(
    A: BooleanFunction,
    B: BooleanFunction,
    fixed: Mapping[str, Alternative] | None = None,
    universe: Universe | None = None,
) -> list[Strategy]:
    """Joint influences for which ``B`` is not contained in ``A``."""
    fixed = dict(fixed or {})
    if universe is None:
        if not fixed:
            raise ValueError("universe is required when nothing is fixed")
        universe = next(iter(fixed.values())).universe
    return [s for s, a, b in joint_evaluations(A, B, fixed, universe) if not b <= a]


def interaction2(
    eq: CanonicalEquation,
    feasible: FeasibleTargets,
    approved: ApprovedSet,
    fixed: Mapping[str, Alternative] | None = None,
    select_target: Callable[[Sequence[Alternative]], Alternative] = first,
    select_strategy: Callable[[Sequence[Strategy]], Strategy] = first,
) -> ControlPlan:
    """Control plan for the human whose equation is ``eq``."""
    universe = approved.alternatives[0].universe
    reachable = feasible.as_dict()
    targets = tuple(chi for chi in feasible.alternatives if chi in approved)
    if targets:
        chi = select_target(targets)
        return ControlPlan(eq.subject, "strategy", chi, select_strategy(reachable[chi]), (), targets)
    z_u = [(chi, z) for chi, z in reachable.items() if chi in approved and z]
    if z_u:
        chi, z = z_u[0]
        return ControlPlan(eq.subject, "strategy", chi, select_strategy(z))
    frustrating = frustration_strategies(eq.A, eq.B, fixed, universe)
    if not frustrating:
        raise UncontrollableSubject(
            f"{eq.subject!r} can be neither steered to an approved alternative nor frustrated"
        )
    return ControlPlan(eq.subject, "frustration", frustration=tuple(frustrating))


def plan_control(
    p: Polynomial,
    target: str,
    approved: ApprovedSet,
    fixed: Mapping[str, Alternative] | None = None,
    **select,
) -> ControlPlan:
    """Inverse task plus interaction step for ``target`` in the group ``p``."""
    eq = decision_equation(p, target)
    universe = approved.alternatives[0].universe
    feasible = feasible_targets(eq.A, eq.B, fixed, universe)
    return interaction2(eq, feasible, approved, fixed, **select)


def robot_step(
    p: Polynomial,
    robot: str,
    influences: Mapping[str, Alternative],
    approved: ApprovedSet,
    select: Callable[[Sequence[Alternative]], Alternative] = first,
) -> tuple[DecisionOutcome, RobotDecision]:
    """Forward task for the robot followed by the approval join."""
    eq = decision_equation(p, robot)
    outcome = forward_solve(eq, influences, approved.alternatives[0].universe)
    return outcome, interaction1(outcome, approved, select)


@dataclass(frozen=True)
class RelationChange:
    edge: tuple[str, str]
    relation: Relation
    polynomial: Polynomial

    def __str__(self) -> str:
        return f"{self.edge[0]}-{self.edge[1]} -> {self.relation.value}: {self.polynomial}"


def suggest_relation_change(g: RelationshipGraph, actor: str) -> list[RelationChange]:
    """Single flips of ``actor``'s relations that make a super-active group controllable."""
    if actor not in g.subjects:
        raise ValueError(f"unknown subject {actor!r}")
    p = decompose(g)
    if p is None:
        raise ValueError("group is not decomposable")
    if not is_super_active(fold(p)):
        raise ValueError("group is not super-active; no relation change is needed")
    changes = []
    for other in sorted(s for s in g.subjects if s != actor):
        rel = g.relation(actor, other).flipped()
        q = decompose(g.with_relation(actor, other, rel))
        if q is not None and not is_super_active(fold(q)):
            changes.append(RelationChange(tuple(sorted((actor, other))), rel, q))
    return changes
