"""Set-valued Boolean algebra over a finite universe of elementary actions.

Alternatives are stored as characteristic bit masks: action ``i`` of the
universe sits at bit ``i``. Every connective is bitwise, so evaluating a
Boolean expression on alternatives is the same as evaluating it once per
action bit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_ACTIONS = 16


class UniverseMismatch(ValueError):
    """Raised when alternatives from different universes are combined."""


class AlternativeSyntaxError(ValueError):
    """Raised when alternative text cannot be parsed."""


@dataclass(frozen=True)
class Universe:
    """Ordered set of elementary actions.

    ``risky`` marks actions that an approval filter should exclude; it has no
    effect on the algebra itself.
    """

    actions: tuple[str, ...]
    risky: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        actions = tuple(self.actions)
        object.__setattr__(self, "actions", actions)
        object.__setattr__(self, "risky", frozenset(self.risky))
        if not 1 <= len(actions) <= MAX_ACTIONS:
            raise ValueError(
                f"universe needs between 1 and {MAX_ACTIONS} actions, got {len(actions)}"
            )
        for name in actions:
            if not isinstance(name, str) or not name.strip():
                raise ValueError(f"invalid action name {name!r}")
            if re.search(r"[\s{},]", name):
                raise ValueError(f"action name {name!r} contains a reserved character")
        if len(set(actions)) != len(actions):
            raise ValueError(f"duplicate action names in {actions}")
        unknown = self.risky - set(actions)
        if unknown:
            raise ValueError(f"risky actions not in universe: {sorted(unknown)}")

    @property
    def size(self) -> int:
        return len(self.actions)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.actions)) - 1

    @property
    def empty(self) -> Alternative:
        return Alternative(self, 0)

    @property
    def full(self) -> Alternative:
        return Alternative(self, self.full_mask)

    def alternative(self, members: Iterable[str] = ()) -> Alternative:
        """Build the alternative containing the named actions."""
        bits = 0
        for name in members:
            try:
                bits |= 1 << self.actions.index(name)
            except ValueError:
                raise AlternativeSyntaxError(
                    f"unknown action {name!r}; universe is {list(self.actions)}"
                ) from None
        return Alternative(self, bits)

    def parse(self, text: str) -> Alternative:
        """Parse ``0``, ``1``, ``{}`` or ``{name, name, ...}``."""
        s = "".join(str(text).split())
        if s in ("0", "{}"):
            return self.empty
        if s == "1":
            return self.full
        if len(s) < 2 or s[0] != "{" or s[-1] != "}":
            raise AlternativeSyntaxError(f"cannot parse alternative {text!r}")
        names = s[1:-1].split(",")
        if any(not n for n in names):
            raise AlternativeSyntaxError(f"empty action name in {text!r}")
        return self.alternative(names)

    def __iter__(self) -> Iterator[Alternative]:
        return iter(enumerate_alternatives(self))

    def __len__(self) -> int:
        return 1 << len(self.actions)


@dataclass(frozen=True, order=False)
class Alternative:
    """A subset of the universe's actions."""

    universe: Universe
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits <= self.universe.full_mask:
            raise ValueError(f"bit mask {self.bits:#x} outside universe")

    def _check(self, other: Alternative) -> None:
        if not isinstance(other, Alternative):
            raise TypeError(f"expected Alternative, got {type(other).__name__}")
        if other.universe != self.universe:
            raise UniverseMismatch("alternatives belong to different universes")

    def __or__(self, other: Alternative) -> Alternative:
        self._check(other)
        return Alternative(self.universe, self.bits | other.bits)

    def __and__(self, other: Alternative) -> Alternative:
        self._check(other)
        return Alternative(self.universe, self.bits & other.bits)

    def __invert__(self) -> Alternative:
        return Alternative(self.universe, self.universe.full_mask & ~self.bits)

    def __le__(self, other: Alternative) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __ge__(self, other: Alternative) -> bool:
        return other <= self

    def __lt__(self, other: Alternative) -> bool:
        return self <= other and self.bits != other.bits

    def __gt__(self, other: Alternative) -> bool:
        return other < self

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __iter__(self) -> Iterator[str]:
        return (a for i, a in enumerate(self.universe.actions) if self.bits >> i & 1)

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    @property
    def is_full(self) -> bool:
        return self.bits == self.universe.full_mask

    def sort_key(self) -> int:
        return self.bits

    def __str__(self) -> str:
        if self.bits == 0:
            return "0"
        if self.is_full:
            return "1"
        return "{" + ",".join(self) + "}"

    def __repr__(self) -> str:
        return f"Alternative({self})"


def enumerate_alternatives(u: Universe) -> list[Alternative]:
    """All ``2**n`` alternatives in ascending characteristic-number order."""
    return [Alternative(u, bits) for bits in range(1 << u.size)]


def connective(kind: str, x: Alternative, y: Alternative | None = None) -> Alternative:
    """Apply ``union``, ``intersect`` or ``complement``."""
    if kind == "complement":
        if y is not None:
            raise ValueError("complement takes a single operand")
        return ~x
    if y is None:
        raise ValueError(f"{kind} needs two operands")
    if kind == "union":
        return x | y
    if kind == "intersect":
        return x & y
    raise ValueError(f"unknown connective {kind!r}")


def exponential(p: Alternative, w: Alternative) -> Alternative:
    """``p`` raised to ``w``: ``p | ~w``."""
    return p | ~w


def interval_members(upper: Alternative, lower: Alternative) -> list[Alternative]:
    """Every ``z`` with ``lower <= z <= upper``, canonical order.

    Empty when ``lower`` is not contained in ``upper``.
    """
    upper._check(lower)
    if not lower <= upper:
        return []
    free = upper.bits & ~lower.bits
    # enumerate submasks of `free` in ascending order
    members = []
    sub = 0
    while True:
        members.append(Alternative(upper.universe, lower.bits | sub))
        if sub == free:
            break
        sub = (sub - free) & free
    return sorted(members, key=Alternative.sort_key)


def format_alternatives(alts: Sequence[Alternative]) -> str:
    return "{" + ", ".join(str(a) for a in alts) + "}"
