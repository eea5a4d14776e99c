"""Backtracking solver for lifting problems in finite presheaf categories.

A lifting problem is a commuting square; a solution is a diagonal making
both triangles commute.  The relaxed variant keeps the upper triangle strict
and only asks the lower one to hold up to a caller-supplied relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .colimits import initial_map
from .errors import NonComposable, NonCommutingSquare
from .presheaf import (
    Presheaf,
    PresheafMap,
    Seeds,
    _enumerate_components,
    compose,
    hom_enumerate,
)

#: Deterministic work counters, reset per CLI run; diagnostics only.
STATS = {"solver_calls": 0}


def reset_stats() -> None:
    STATS["solver_calls"] = 0


@dataclass(frozen=True)
class LiftingProblem:
    """A commuting square: left and right verticals, top and bottom rows."""

    left: PresheafMap
    right: PresheafMap
    top: PresheafMap
    bottom: PresheafMap

    def __post_init__(self) -> None:
        if (
            self.top.source != self.left.source
            or self.bottom.source != self.left.target
            or self.top.target != self.right.source
            or self.bottom.target != self.right.target
        ):
            raise NonComposable("square sides do not share their corners")
        if compose(self.top, self.right) != compose(self.left, self.bottom):
            raise NonCommutingSquare("lifting problem does not commute")


@dataclass(frozen=True)
class RelationOracle:
    """A named, total decision procedure on parallel maps.

    `decide` returns a witness object when the maps are related and None
    otherwise.
    """

    tag: str
    decide: Callable[[PresheafMap, PresheafMap], object | None]

    @staticmethod
    def equality() -> "RelationOracle":
        return RelationOracle(
            "equality", lambda a, b: "equal" if a == b else None
        )


def _upper_seeds(left: PresheafMap, top: PresheafMap) -> Seeds | None:
    """Slots forced by h after left = top, or None when inconsistent."""
    seeds: Seeds = {}
    for o, col in enumerate(left._comp):
        tcol = top._comp[o]
        for x, fx in enumerate(col):
            want = tcol[x]
            prev = seeds.get((o, fx))
            if prev is not None and prev != want:
                return None
            seeds[(o, fx)] = want
    return seeds


def _lower_allowed(right: PresheafMap, bottom: PresheafMap):
    """Per-slot value sets forced by right after h = bottom."""
    allowed = []
    for o, bcol in enumerate(bottom._comp):
        buckets: dict[int, set[int]] = {}
        for c, d in enumerate(right._comp[o]):
            buckets.setdefault(d, set()).add(c)
        allowed.append(
            [frozenset(buckets.get(d, ())) for d in bcol]
        )
    return allowed


def solve_lifting(problem: LiftingProblem) -> PresheafMap | None:
    """First diagonal solving the square strictly, or None."""
    STATS["solver_calls"] += 1
    seeds = _upper_seeds(problem.left, problem.top)
    if seeds is None:
        return None
    allowed = _lower_allowed(problem.right, problem.bottom)
    B, C = problem.left.target, problem.right.source
    for comp in _enumerate_components(B, C, seeds=seeds, allowed=allowed):
        return PresheafMap._make(B, C, comp)
    return None


def solve_lifting_up_to(
    problem: LiftingProblem, relation: RelationOracle
) -> tuple[PresheafMap, object] | None:
    """First diagonal whose upper triangle is strict and whose lower
    triangle holds up to `relation`, together with the relation witness."""
    STATS["solver_calls"] += 1
    seeds = _upper_seeds(problem.left, problem.top)
    if seeds is None:
        return None
    B, C = problem.left.target, problem.right.source
    for comp in _enumerate_components(B, C, seeds=seeds):
        h = PresheafMap._make(B, C, comp)
        witness = relation.decide(compose(h, problem.right), problem.bottom)
        if witness is not None:
            return h, witness
    return None


def square_enumerate(
    left: PresheafMap, right: PresheafMap
) -> Iterator[tuple[PresheafMap, PresheafMap]]:
    """All commuting squares with the given verticals.

    Tops run in enumeration order; for each top the compatible bottoms are
    enumerated with the commutation constraint seeded in, never filtered
    after the fact.
    """
    for top in hom_enumerate(left.source, right.source):
        seeds: Seeds = {}
        ok = True
        for o, col in enumerate(left._comp):
            for x, fx in enumerate(col):
                want = right._comp[o][top._comp[o][x]]
                prev = seeds.get((o, fx))
                if prev is not None and prev != want:
                    ok = False
                    break
                seeds[(o, fx)] = want
            if not ok:
                break
        if not ok:
            continue
        for comp in _enumerate_components(left.target, right.target, seeds=seeds):
            yield top, PresheafMap._make(left.target, right.target, comp)


def unsolvable_squares(
    left: PresheafMap, right: PresheafMap
) -> Iterator[tuple[PresheafMap, PresheafMap]]:
    """Commuting squares with no strict diagonal, in enumeration order."""
    for top, bottom in square_enumerate(left, right):
        if solve_lifting(LiftingProblem(left, right, top, bottom)) is None:
            yield top, bottom


Memo = dict


def has_rlp(
    g: PresheafMap,
    maps: Iterable[PresheafMap],
    memo: Memo | None = None,
) -> bool:
    """Right lifting property of g against every map in `maps`."""
    for s in maps:
        key = (s, g, None)
        if memo is not None and key in memo:
            if not memo[key]:
                return False
            continue
        ok = next(unsolvable_squares(s, g), None) is None
        if memo is not None:
            memo[key] = ok
        if not ok:
            return False
    return True


def has_llp(
    f: PresheafMap,
    maps: Iterable[PresheafMap],
    memo: Memo | None = None,
) -> bool:
    """Left lifting property of f against every map in `maps`."""
    for s in maps:
        key = (f, s, None)
        if memo is not None and key in memo:
            if not memo[key]:
                return False
            continue
        ok = next(unsolvable_squares(f, s), None) is None
        if memo is not None:
            memo[key] = ok
        if not ok:
            return False
    return True


def find_unliftable_square_up_to(
    left: PresheafMap, right: PresheafMap, relation: RelationOracle
) -> tuple[PresheafMap, PresheafMap] | None:
    """First commuting square with no up-to-relation diagonal, or None.

    A strict diagonal is tried first; it settles the square whenever the
    relation confirms it (always, for reflexive relations), which keeps
    the common case away from the relation search.
    """
    for top, bottom in square_enumerate(left, right):
        problem = LiftingProblem(left, right, top, bottom)
        h = solve_lifting(problem)
        if h is not None and relation.decide(compose(h, right), bottom) is not None:
            continue
        if solve_lifting_up_to(problem, relation) is None:
            return top, bottom
    return None


def has_rlp_up_to(
    g: PresheafMap,
    maps: Iterable[PresheafMap],
    relation: RelationOracle,
    memo: Memo | None = None,
) -> bool:
    """RLP of g against `maps`, with lower triangles up to `relation`.

    With the equality oracle this agrees with `has_rlp`.
    """
    for s in maps:
        key = (s, g, relation.tag)
        if memo is not None and key in memo:
            if not memo[key]:
                return False
            continue
        ok = find_unliftable_square_up_to(s, g, relation) is None
        if memo is not None:
            memo[key] = ok
        if not ok:
            return False
    return True


def has_rlp_up_to_object(
    g: PresheafMap,
    V: Presheaf,
    relation: RelationOracle,
    memo: Memo | None = None,
) -> bool:
    """RLP up to `relation` against the map from the empty presheaf to V."""
    return has_rlp_up_to(g, [initial_map(V)], relation, memo=memo)
