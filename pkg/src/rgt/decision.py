"""Decision equations and the forward task.

Every subject of a group solves ``x = W`` where ``W`` is the folded
diagonal form. Written canonically as ``x = A x + B ~x`` the equation has
solutions exactly when ``B <= A``, and then the solutions are the interval
``B <= x <= A``. ``A`` and ``B`` are the two cofactors of ``W`` on the
subject's variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .algebra import Alternative, Universe, interval_members
from .boolfunc import BooleanFunction, MissingInfluence
from .polynomial import Polynomial, fold


@dataclass(frozen=True)
class CanonicalEquation:
    """``subject = A*subject + B*~subject`` with ``A`` and ``B`` free of ``subject``."""

    subject: str
    A: BooleanFunction
    B: BooleanFunction

    @property
    def influence_variables(self) -> tuple[str, ...]:
        """Variables that ``A`` or ``B`` really depend on."""
        return tuple(sorted(set(self.A.support()) | set(self.B.support())))

    def as_function(self) -> BooleanFunction:
        """Rebuild ``W`` from the cofactors (Shannon expansion)."""
        x = BooleanFunction.variable(self.subject)
        return (self.A & x) | (self.B & ~x)

    def __str__(self) -> str:
        x = self.subject
        terms = [_term(self.A, x), _term(self.B, "~" + x)]
        terms = [t for t in terms if t]
        return f"{x} = " + (" + ".join(terms) or "0")


def _term(f: BooleanFunction, literal: str) -> str:
    text = f.to_expression()
    if text == "0":
        return ""
    if text == "1":
        return literal
    return f"({text}){literal}" if "+" in text else text + literal


def canonicalize(w: BooleanFunction, subject: str) -> CanonicalEquation:
    return CanonicalEquation(
        subject,
        w.cofactor(subject, 1).reduce(),
        w.cofactor(subject, 0).reduce(),
    )


def decision_equation(p: Polynomial, subject: str) -> CanonicalEquation:
    """Canonical decision equation of ``subject`` in the group with polynomial ``p``."""
    return canonicalize(fold(p), subject)


@dataclass(frozen=True)
class DecisionOutcome:
    """Result of the forward task for one subject.

    ``choices`` is empty exactly when the subject is frustrated, i.e. when
    the evaluated lower bound is not contained in the upper bound.
    """

    subject: str
    upper: Alternative
    lower: Alternative
    choices: tuple[Alternative, ...]

    @property
    def frustrated(self) -> bool:
        return not self.choices

    def __str__(self) -> str:
        if self.frustrated:
            return "frustration"
        return "{" + ", ".join(str(c) for c in self.choices) + "}"


def _universe_of(values: Iterable[Alternative], universe: Universe | None) -> Universe:
    if universe is not None:
        return universe
    for v in values:
        return v.universe
    raise ValueError("a universe is needed when no influence values are given")


def forward_solve(
    eq: CanonicalEquation,
    influences: Mapping[str, Alternative],
    universe: Universe | None = None,
) -> DecisionOutcome:
    """Possible choices of ``eq.subject`` under the given influences.

    Raises MissingInfluence if ``A`` or ``B`` needs a variable that has no
    value in ``influences``.
    """
    universe = _universe_of(influences.values(), universe)
    for v in eq.A.variables + eq.B.variables:
        if v not in influences:
            raise MissingInfluence(f"no influence given for {v!r} on {eq.subject!r}")
    upper = eq.A.evaluate(influences, universe)
    lower = eq.B.evaluate(influences, universe)
    return DecisionOutcome(eq.subject, upper, lower, tuple(interval_members(upper, lower)))


def is_super_active(w: BooleanFunction) -> bool:
    """Whether the folded form is identically 1, forcing every subject to choose 1."""
    return w.constant_value is True


class InfluenceMatrix:
    """Influence of each subject on each other subject.

    ``values[(influencer, target)]`` is an alternative. Rows may differ per
    target, so one subject can push different alternatives on different
    subjects. Partial matrices are allowed; ``is_total`` reports coverage.
    """

    def __init__(
        self,
        universe: Universe,
        subjects: Iterable[str],
        values: Mapping[tuple[str, str], Alternative],
    ) -> None:
        self.universe = universe
        self.subjects = tuple(subjects)
        self.values: dict[tuple[str, str], Alternative] = {}
        for (src, dst), alt in values.items():
            if src == dst:
                raise ValueError(f"{src!r} cannot influence itself")
            for s in (src, dst):
                if s not in self.subjects:
                    raise ValueError(f"unknown subject {s!r} in influence matrix")
            if alt.universe != universe:
                raise ValueError(f"influence {src}->{dst} uses another universe")
            self.values[(src, dst)] = alt

    @property
    def is_total(self) -> bool:
        return all(
            (x, y) in self.values for x in self.subjects for y in self.subjects if x != y
        )

    def on(self, target: str) -> dict[str, Alternative]:
        """Influences received by ``target``, keyed by influencer."""
        return {src: alt for (src, dst), alt in self.values.items() if dst == target}

    def rows(self) -> list[list[str]]:
        """Table layout: diagonal holds the subject variable itself."""
        out = []
        for x in self.subjects:
            row = [x]
            for y in self.subjects:
                alt = self.values.get((x, y))
                row.append(x if x == y else ("-" if alt is None else str(alt)))
            out.append(row)
        return out
