"""Constraint systems over the ordinals and their matching theory.

A constraint system is a finite conjunction "point x_i must map into the
finite set Y_i"; it describes a basic open set of the full symmetric
group of the (effectively infinite) ordinal ground set.  The module
decides satisfiability by augmenting-path matching, cross-checkable
against a direct exhaustive test of Hall's condition, orders systems by
refinement, takes limits of refining chains, and extends any partial
injection to a finitely-supported permutation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import ContractError, DomainError, ParseError, ResourceError
from .ordinals import Ordinal, format_ordinal, parse_ordinal

_HALL_BRUTE_LIMIT = 20


@dataclass(frozen=True)
class ConstraintSystem:
    """Pairs (point, allowed values).  `normalize` merges repeated
    points by intersecting their allowed sets."""

    constraints: tuple[tuple[Ordinal, frozenset[Ordinal]], ...]

    @staticmethod
    def of(items: Iterable[tuple[Ordinal, Iterable[Ordinal]]]) -> "ConstraintSystem":
        return ConstraintSystem(tuple((p, frozenset(vals)) for p, vals in items))

    @property
    def points(self) -> list[Ordinal]:
        return [p for p, _ in self.constraints]

    def syntactically_unsatisfiable(self) -> bool:
        return any(not vals for _, vals in self.constraints)


@dataclass(frozen=True)
class PartialInjection:
    """Finitely many pairs, injective in both coordinates."""

    pairs: tuple[tuple[Ordinal, Ordinal], ...]

    def validate(self) -> None:
        froms = [a for a, _ in self.pairs]
        tos = [b for _, b in self.pairs]
        if len(set(froms)) != len(froms):
            raise DomainError("duplicate source in partial injection")
        if len(set(tos)) != len(tos):
            raise DomainError("duplicate target in partial injection")

    def as_mapping(self) -> dict[Ordinal, Ordinal]:
        return dict(self.pairs)


def normalize(cs: ConstraintSystem) -> ConstraintSystem:
    """Distinct points in increasing order, duplicate points merged by
    intersection; an empty intersection survives as an (unsatisfiable)
    empty allowed set."""
    merged: dict[Ordinal, frozenset[Ordinal]] = {}
    for p, vals in cs.constraints:
        merged[p] = merged[p] & vals if p in merged else vals
    return ConstraintSystem(tuple((p, merged[p]) for p in sorted(merged)))


def satisfiable(cs: ConstraintSystem) -> Optional[PartialInjection]:
    """A witness injection h with h(x_i) in Y_i, or None exactly when
    Hall's condition fails.  Deterministic augmenting-path matching:
    points in normalized order, values in increasing order."""
    ncs = normalize(cs)
    if ncs.syntactically_unsatisfiable():
        return None
    points = ncs.points
    allowed = {p: sorted(vals) for p, vals in ncs.constraints}
    match: dict[Ordinal, Ordinal] = {}  # value -> point

    def augment(p: Ordinal, seen: set[Ordinal]) -> bool:
        for v in allowed[p]:
            if v in seen:
                continue
            seen.add(v)
            if v not in match or augment(match[v], seen):
                match[v] = p
                return True
        return False

    for p in points:
        if not augment(p, set()):
            return None
    chosen = {p: v for v, p in match.items()}
    return PartialInjection(tuple((p, chosen[p]) for p in points))


def hall_brute(cs: ConstraintSystem) -> bool:
    """Hall's condition by exhaustive subsets: every subfamily's union
    must be at least as large as the subfamily.  Independent oracle for
    `satisfiable`; limited to 20 points."""
    ncs = normalize(cs)
    k = len(ncs.constraints)
    if k > _HALL_BRUTE_LIMIT:
        raise ResourceError(f"hall_brute limited to {_HALL_BRUTE_LIMIT} points, got {k}")
    sets = [vals for _, vals in ncs.constraints]
    for size in range(1, k + 1):
        for combo in itertools.combinations(sets, size):
            union = frozenset().union(*combo)
            if len(union) < size:
                return False
    return True


def contains(a: ConstraintSystem, b: ConstraintSystem) -> bool:
    """Whether the open set described by a lies inside the one described
    by b: every constraint of b must be refined by a constraint of a on
    the same point.  Vacuously true for unsatisfiable a."""
    na = normalize(a)
    if satisfiable(na) is None:
        return True
    lookup = dict(na.constraints)
    for p, vals in normalize(b).constraints:
        if p not in lookup or not lookup[p] <= vals:
            return False
    return True


def below(a: ConstraintSystem, b: ConstraintSystem) -> bool:
    """The refinement relation on satisfiable systems (the witnessing
    middle system is a itself)."""
    for name, cs in (("left", a), ("right", b)):
        if satisfiable(cs) is None:
            raise DomainError(f"{name} side is unsatisfiable")
    return contains(a, b)


def chain_limit(chain: Sequence[ConstraintSystem]) -> tuple[ConstraintSystem, PartialInjection]:
    """Limit of a refining chain (each element below the previous) and a
    witness injection satisfying every member."""
    if not chain:
        raise DomainError("empty chain")
    for i in range(len(chain) - 1):
        if not below(chain[i + 1], chain[i]):
            raise DomainError(f"chain violation between elements {i + 1} and {i + 2}")
    merged: dict[Ordinal, frozenset[Ordinal]] = {}
    for cs in chain:
        for p, vals in normalize(cs).constraints:
            merged[p] = merged[p] & vals if p in merged else vals
    limit = ConstraintSystem(tuple((p, merged[p]) for p in sorted(merged)))
    witness = satisfiable(limit)
    if witness is None:  # the refinement discipline rules this out
        raise ContractError("chain limit lost satisfiability")
    mapping = witness.as_mapping()
    for i, cs in enumerate(chain):
        for p, vals in normalize(cs).constraints:
            if mapping[p] not in vals:
                raise ContractError(f"witness violates chain element {i + 1}")
    return limit, witness


@dataclass(frozen=True)
class FinitePermutation:
    """A finitely-supported permutation of the ordinal ground set,
    stored as disjoint cycles (each rotated to start at its least
    element, listed by that element)."""

    cycles: tuple[tuple[Ordinal, ...], ...]

    def apply(self, x: Ordinal) -> Ordinal:
        for cycle in self.cycles:
            if x in cycle:
                return cycle[(cycle.index(x) + 1) % len(cycle)]
        return x

    def support(self) -> frozenset[Ordinal]:
        return frozenset(x for cycle in self.cycles for x in cycle)

    @property
    def is_identity(self) -> bool:
        return not self.cycles


def extend_to_permutation(h: PartialInjection) -> FinitePermutation:
    """Close each maximal chain a -> ... -> z of the injection into a
    cycle (z back to a); the result is a bijection extending h whose
    support is exactly the points of h's chains."""
    h.validate()
    mapping = h.as_mapping()
    sources = set(mapping)
    targets = set(mapping.values())
    cycles = []
    visited: set[Ordinal] = set()
    for start in sorted(sources - targets):
        chain = [start]
        while chain[-1] in mapping:
            chain.append(mapping[chain[-1]])
        visited.update(chain)
        if len(chain) > 1:
            cycles.append(chain)
    for start in sorted(sources - visited):
        if start in visited:
            continue
        # pure cycles of the injection
        cycle = [start]
        while mapping[cycle[-1]] != start:
            cycle.append(mapping[cycle[-1]])
        visited.update(cycle)
        if len(cycle) > 1:
            cycles.append(cycle)
    canon = []
    for cycle in cycles:
        least = min(range(len(cycle)), key=lambda i: cycle[i])
        canon.append(tuple(cycle[least:] + cycle[:least]))
    canon.sort(key=lambda c: c[0])
    return FinitePermutation(tuple(canon))


# ---------------------------------------------------------------------------
# text formats
#
# constraint system, one constraint per line:   ordexpr : { a , b , ... }
# partial injection, one pair per line:         ordexpr -> ordexpr
# "#" lines are comments in both.


def format_constraints(cs: ConstraintSystem, unicode: bool = False) -> str:
    lines = []
    for p, vals in cs.constraints:
        inner = ", ".join(format_ordinal(v, unicode) for v in sorted(vals))
        lines.append(f"{format_ordinal(p, unicode)} : {{ {inner} }}".replace("{  }", "{ }"))
    if not lines:
        lines.append("# empty system")
    return "\n".join(lines) + "\n"


def parse_constraints(text: str) -> ConstraintSystem:
    items = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise ParseError(f"line {lineno}: expected 'point : {{ values }}'")
        left, _, right = line.partition(":")
        right = right.strip()
        if not right.startswith("{") or not right.endswith("}"):
            raise ParseError(f"line {lineno}: expected a braced value set")
        body = right[1:-1].strip()
        vals = [parse_ordinal(part) for part in body.split(",")] if body else []
        items.append((parse_ordinal(left), vals))
    return ConstraintSystem.of(items)


def format_injection(h: PartialInjection, unicode: bool = False) -> str:
    lines = [f"{format_ordinal(a, unicode)} -> {format_ordinal(b, unicode)}"
             for a, b in h.pairs]
    if not lines:
        lines.append("# empty injection")
    return "\n".join(lines) + "\n"


def parse_injection(text: str) -> PartialInjection:
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "->" not in line:
            raise ParseError(f"line {lineno}: expected 'from -> to'")
        left, _, right = line.partition("->")
        pairs.append((parse_ordinal(left), parse_ordinal(right)))
    h = PartialInjection(tuple(pairs))
    h.validate()
    return h


def format_permutation(perm: FinitePermutation, unicode: bool = False) -> str:
    if perm.is_identity:
        return "# identity\n"
    lines = ["(" + " ".join(format_ordinal(x, unicode) for x in cycle) + ")"
             for cycle in perm.cycles]
    return "\n".join(lines) + "\n"
