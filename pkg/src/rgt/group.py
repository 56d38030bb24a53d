"""Relationship graphs and their polynomials.

A group is a complete graph whose edges are coloured alliance or conflict.
A graph is decomposable when it can be written as a read-once polynomial;
the test here is the recursive partition used for cographs: split on the
components of the conflict edges (a product of factors) or, failing that,
of the alliance edges (a sum of terms).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .polynomial import (
    RESERVED,
    Polynomial,
    Sum,
    Var,
    check_read_once,
    make_product,
    make_sum,
    variables,
)

MAX_SUBJECTS = 8


class Relation(enum.Enum):
    ALLIANCE = "alliance"
    CONFLICT = "conflict"

    def flipped(self) -> Relation:
        return Relation.CONFLICT if self is Relation.ALLIANCE else Relation.ALLIANCE


class NotDecomposable(ValueError):
    """Raised when a graph needs subjects excluded but no importance ranking is given."""


def _pair(x: str, y: str) -> frozenset[str]:
    return frozenset((x, y))


def validate_subject_id(name: str) -> None:
    if not isinstance(name, str) or not name or any(ch.isspace() or ch in RESERVED for ch in name):
        raise ValueError(f"invalid subject id {name!r}")


@dataclass(frozen=True)
class RelationshipGraph:
    """Complete graph over ``subjects`` with one relation per unordered pair."""

    subjects: tuple[str, ...]
    edges: Mapping[frozenset[str], Relation]

    def __init__(
        self,
        subjects: Iterable[str],
        edges: Mapping[Iterable[str], Relation | str] | Iterable[tuple[Iterable[str], Relation | str]],
    ) -> None:
        subjects = tuple(subjects)
        if not 1 <= len(subjects) <= MAX_SUBJECTS:
            raise ValueError(f"a group needs 1 to {MAX_SUBJECTS} subjects, got {len(subjects)}")
        for s in subjects:
            validate_subject_id(s)
        if len(set(subjects)) != len(subjects):
            raise ValueError(f"duplicate subjects in {subjects}")
        items = edges.items() if isinstance(edges, Mapping) else edges
        table: dict[frozenset[str], Relation] = {}
        for pair, rel in items:
            pair = tuple(pair)
            if len(pair) != 2 or pair[0] == pair[1]:
                raise ValueError(f"an edge needs two distinct subjects, got {pair}")
            for s in pair:
                if s not in subjects:
                    raise ValueError(f"edge {pair} mentions unknown subject {s!r}")
            key = _pair(*pair)
            rel = Relation(rel)
            if key in table and table[key] is not rel:
                raise ValueError(f"conflicting relations given for {sorted(key)}")
            table[key] = rel
        missing = [
            (x, y) for x, y in itertools.combinations(subjects, 2) if _pair(x, y) not in table
        ]
        if missing:
            raise ValueError(f"graph is not complete; missing relations for {missing}")
        object.__setattr__(self, "subjects", subjects)
        object.__setattr__(self, "edges", dict(sorted(table.items(), key=lambda kv: sorted(kv[0]))))

    def __hash__(self) -> int:
        return hash((frozenset(self.subjects), frozenset(self.edges.items())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RelationshipGraph):
            return NotImplemented
        return set(self.subjects) == set(other.subjects) and self.edges == other.edges

    @classmethod
    def homogeneous(cls, subjects: Iterable[str], relation: Relation | str) -> RelationshipGraph:
        subjects = tuple(subjects)
        rel = Relation(relation)
        return cls(subjects, {p: rel for p in itertools.combinations(subjects, 2)})

    def relation(self, x: str, y: str) -> Relation:
        return self.edges[_pair(x, y)]

    def with_relation(self, x: str, y: str, relation: Relation | str) -> RelationshipGraph:
        edges = dict(self.edges)
        edges[_pair(x, y)] = Relation(relation)
        return RelationshipGraph(self.subjects, edges)

    def without(self, subject: str) -> RelationshipGraph:
        rest = tuple(s for s in self.subjects if s != subject)
        return self.induced(rest)

    def induced(self, subset: Iterable[str]) -> RelationshipGraph:
        subset = tuple(subset)
        keep = set(subset)
        return RelationshipGraph(subset, {k: v for k, v in self.edges.items() if k <= keep})

    def pairs(self, relation: Relation) -> list[tuple[str, str]]:
        return [tuple(sorted(k)) for k, v in self.edges.items() if v is relation]


def _components(nodes: Sequence[str], graph: RelationshipGraph, relation: Relation) -> list[list[str]]:
    """Connected components of the subgraph made of ``relation`` edges."""
    parent = {n: n for n in nodes}

    def find(n: str) -> str:
        while parent[n] != n:
            parent[n] = parent[parent[n]]
            n = parent[n]
        return n

    for x, y in itertools.combinations(nodes, 2):
        if graph.relation(x, y) is relation:
            parent[find(x)] = find(y)
    groups: dict[str, list[str]] = {}
    for n in nodes:
        groups.setdefault(find(n), []).append(n)
    return list(groups.values())


def _decompose(nodes: Sequence[str], graph: RelationshipGraph) -> Polynomial | None:
    if len(nodes) == 1:
        return Var(nodes[0])
    for relation, maker in ((Relation.CONFLICT, make_product), (Relation.ALLIANCE, make_sum)):
        parts = _components(nodes, graph, relation)
        if len(parts) > 1:
            subs = [_decompose(part, graph) for part in parts]
            if any(s is None for s in subs):
                return None
            return maker(subs)
    return None


def decompose(g: RelationshipGraph) -> Polynomial | None:
    """Polynomial of ``g``, or ``None`` when the graph is not decomposable."""
    return _decompose(list(g.subjects), g)


def is_decomposable(g: RelationshipGraph) -> bool:
    return decompose(g) is not None


def graph_of(p: Polynomial) -> RelationshipGraph:
    """Complete graph whose pair relations follow the nearest common connective."""
    check_read_once(p)
    edges: dict[tuple[str, str], Relation] = {}

    def walk(node: Polynomial) -> None:
        if isinstance(node, Var):
            return
        rel = Relation.CONFLICT if isinstance(node, Sum) else Relation.ALLIANCE
        for left, right in itertools.combinations(node.children, 2):
            for x in variables(left):
                for y in variables(right):
                    edges[(x, y)] = rel
        for c in node.children:
            walk(c)

    walk(p)
    return RelationshipGraph(sorted(variables(p)), edges)


def exclude_until_decomposable(
    g: RelationshipGraph, importance: Sequence[str] | None = None
) -> tuple[Polynomial, list[str]]:
    """Drop the least important subjects until the graph decomposes.

    ``importance`` ranks all subjects, most important first. It may be
    omitted only when ``g`` is already decomposable.
    """
    p = decompose(g)
    if p is not None:
        return p, []
    if importance is None:
        raise NotDecomposable("graph is not decomposable and no importance ranking was given")
    if sorted(importance) != sorted(g.subjects):
        raise ValueError("importance must rank every subject exactly once")
    remaining = list(importance)
    excluded: list[str] = []
    while p is None:
        excluded.append(remaining.pop())
        p = decompose(g.induced(remaining))
    return p, excluded


def is_homogeneous(p: Polynomial) -> bool:
    """Every pair of subjects shares the same relation."""
    return isinstance(p, Var) or all(isinstance(c, Var) for c in p.children)

