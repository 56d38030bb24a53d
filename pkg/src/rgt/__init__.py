"""Reflexive game theory engine: group polynomials, decision equations,
forward and inverse tasks, and robot control schemas."""

__version__ = "0.1.0"

from .algebra import Alternative, Universe, enumerate_alternatives, exponential, interval_members
from .boolfunc import BooleanFunction, semantically_equal
from .decision import CanonicalEquation, DecisionOutcome, InfluenceMatrix, canonicalize, decision_equation, forward_solve, is_super_active
from .group import Relation, RelationshipGraph, decompose, exclude_until_decomposable, graph_of
from .influence import (
    InfluenceSystem,
    Strategy,
    TargetChoice,
    effective_variables,
    feasible_targets,
    solve_influence_equation,
    solve_system,
)
from .polynomial import fold, fold_expression, parse, stratify
