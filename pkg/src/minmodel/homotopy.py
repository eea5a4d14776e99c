"""Relative cylinders, homotopies, deformation retracts, and path objects.

The canonical cylinder over i : X -> Y factors the fold map out of the
pushout Y +_X Y through `soa_factorize`.  Homotopy between parallel maps is
decided by searching for a map out of that apex with the two end inclusions
pinned.  Any homotopy through some other valid cylinder transports onto the
canonical one along a lift (the canonical left part is a cell complex, the
other cylinder's projection is injective), so deciding on the canonical apex
loses nothing; `cross_check` re-decides on an alternate apex to watch that
in practice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colimits import initial_map, product, pushout
from .errors import FuelExhausted, IncompatibleOnRelativePart, NonComposable
from .factorization import CellFactorization, GeneratingSet, Status, Verdict, soa_factorize
from .lifting import RelationOracle
from .presheaf import (
    Presheaf,
    PresheafMap,
    Seeds,
    _enumerate_components,
    compose,
    identity_map,
)


@dataclass(frozen=True)
class CylinderObject:
    over: PresheafMap
    apex: Presheaf
    incl0: PresheafMap
    incl1: PresheafMap
    collapse: PresheafMap
    provenance: CellFactorization


@dataclass(frozen=True)
class HomotopyWitness:
    cylinder: CylinderObject
    map: PresheafMap


def cylinder(
    i: PresheafMap,
    I: GeneratingSet,
    fuel: int | None = None,
    order: str = "canonical",
) -> CylinderObject:
    """The canonical relative cylinder over i."""
    Y = i.target
    po = pushout(i, i)
    fold = po.mediator(identity_map(Y), identity_map(Y))
    fact = soa_factorize(fold, I, fuel, order=order)
    if fact.status is not Status.COMPLETE:
        raise FuelExhausted(
            f"cylinder factorization ran out of fuel after {fact.fuel_used} attachments"
        )
    return CylinderObject(
        over=i,
        apex=fact.right.source,
        incl0=compose(po.left, fact.left),
        incl1=compose(po.right, fact.left),
        collapse=fact.right,
        provenance=fact,
    )


def _require_parallel(f0: PresheafMap, f1: PresheafMap) -> None:
    if f0.source != f1.source or f0.target != f1.target:
        raise NonComposable("homotopy needs parallel maps")


def _end_seeds(
    cyl: CylinderObject, f0: PresheafMap, f1: PresheafMap
) -> Seeds | None:
    seeds: Seeds = {}
    for incl, f in ((cyl.incl0, f0), (cyl.incl1, f1)):
        for o, col in enumerate(incl._comp):
            fcol = f._comp[o]
            for y, w in enumerate(col):
                want = fcol[y]
                prev = seeds.get((o, w))
                if prev is not None and prev != want:
                    return None
                seeds[(o, w)] = want
    return seeds


def homotopic(
    f0: PresheafMap,
    f1: PresheafMap,
    rel: PresheafMap | None,
    I: GeneratingSet,
    fuel: int | None = None,
    cyl: CylinderObject | None = None,
) -> HomotopyWitness | None:
    """First homotopy between f0 and f1 through the canonical cylinder.

    `rel` is the map the ends must agree on; None means the map from the
    empty presheaf, i.e. the absolute relation.
    """
    _require_parallel(f0, f1)
    if rel is None:
        rel = initial_map(f0.source)
    if rel.target != f0.source:
        raise NonComposable("relative part must land in the source of the maps")
    if compose(rel, f0) != compose(rel, f1):
        raise IncompatibleOnRelativePart(
            "maps disagree on the relative part, no homotopy is posable"
        )
    if cyl is None:
        cyl = cylinder(rel, I, fuel)
    seeds = _end_seeds(cyl, f0, f1)
    if seeds is None:
        return None
    Z = f0.target
    for comp in _enumerate_components(cyl.apex, Z, seeds=seeds):
        return HomotopyWitness(cyl, PresheafMap._make(cyl.apex, Z, comp))
    return None


def homotopic_cross_check(
    f0: PresheafMap,
    f1: PresheafMap,
    rel: PresheafMap | None,
    I: GeneratingSet,
    fuel: int | None = None,
) -> tuple[HomotopyWitness | None, bool]:
    """Decide on the canonical cylinder, re-decide on the reversed-order
    cylinder, and report whether the verdicts agree."""
    canonical = homotopic(f0, f1, rel, I, fuel)
    rel_map = rel if rel is not None else initial_map(f0.source)
    alternate_cyl = cylinder(rel_map, I, fuel, order="reversed")
    alternate = homotopic(f0, f1, rel, I, fuel, cyl=alternate_cyl)
    return canonical, (canonical is None) == (alternate is None)


class HomotopyContext:
    """Shared cylinder and decision caches for one generating set.

    Decisions are deterministic, so caching cannot change any verdict; it
    only avoids rebuilding cylinders per query.
    """

    def __init__(self, I: GeneratingSet, fuel: int | None = None):
        self.generators = I
        self.fuel = fuel
        self._cylinders: dict[PresheafMap, CylinderObject] = {}
        self._verdicts: dict = {}
        # (left, right) -> first square with no up-to-homotopy lift, or None
        self.square_memo: dict = {}

    def cylinder(self, rel: PresheafMap) -> CylinderObject:
        got = self._cylinders.get(rel)
        if got is None:
            got = cylinder(rel, self.generators, self.fuel)
            self._cylinders[rel] = got
        return got

    def homotopic(
        self, f0: PresheafMap, f1: PresheafMap, rel: PresheafMap | None = None
    ) -> HomotopyWitness | None:
        if rel is None:
            rel = initial_map(f0.source)
        key = (rel, f0, f1)
        if key in self._verdicts:
            return self._verdicts[key]
        got = homotopic(f0, f1, rel, self.generators, self.fuel, cyl=self.cylinder(rel))
        self._verdicts[key] = got
        return got

    def oracle(self, rel: PresheafMap) -> RelationOracle:
        """Homotopy rel `rel` as a total relation on parallel maps."""

        def decide(a: PresheafMap, b: PresheafMap):
            if a.source != b.source or a.target != b.target:
                return None
            if rel.target != a.source or compose(rel, a) != compose(rel, b):
                return None
            return self.homotopic(a, b, rel)

        return RelationOracle("homotopy-rel-left", decide)

    def absolute_oracle(self, Y: Presheaf) -> RelationOracle:
        return self.oracle(initial_map(Y))


@dataclass(frozen=True)
class DeformationRetractResult:
    verdict: Verdict
    retraction: PresheafMap | None
    homotopy: HomotopyWitness | None


def _deformation_retract(
    f: PresheafMap,
    I: GeneratingSet,
    fuel: int | None,
    rel: PresheafMap | None,
) -> DeformationRetractResult:
    from .presheaf import _retraction_seeds

    seeds = _retraction_seeds(f)
    if seeds is None:
        return DeformationRetractResult(Verdict.NO, None, None)
    Y, X = f.target, f.source
    ident = identity_map(Y)
    try:
        ctx = HomotopyContext(I, fuel)
        for comp in _enumerate_components(Y, X, seeds=seeds):
            g = PresheafMap._make(Y, X, comp)
            witness = ctx.homotopic(compose(g, f), ident, rel)
            if witness is not None:
                return DeformationRetractResult(Verdict.YES, g, witness)
    except FuelExhausted:
        return DeformationRetractResult(Verdict.INCONCLUSIVE, None, None)
    return DeformationRetractResult(Verdict.NO, None, None)


def is_deformation_retract(
    f: PresheafMap, I: GeneratingSet, fuel: int | None = None
) -> DeformationRetractResult:
    """Search a retraction g with f after g homotopic to the identity."""
    return _deformation_retract(f, I, fuel, rel=None)


def is_strong_deformation_retract(
    f: PresheafMap, I: GeneratingSet, fuel: int | None = None
) -> DeformationRetractResult:
    """As `is_deformation_retract`, with the homotopy taken rel f."""
    return _deformation_retract(f, I, fuel, rel=f)


@dataclass(frozen=True)
class PathObject:
    of: Presheaf
    apex: Presheaf
    into: PresheafMap
    proj0: PresheafMap
    proj1: PresheafMap
    provenance: CellFactorization


@dataclass(frozen=True)
class RightHomotopyWitness:
    path: PathObject
    map: PresheafMap


def path_object(
    Z: Presheaf, J: GeneratingSet, fuel: int | None = None
) -> PathObject:
    """Factor the diagonal of Z through a J-cell map followed by a
    J-injective map onto the product."""
    pr = product(Z, Z)
    diag = pr.mediator(identity_map(Z), identity_map(Z))
    fact = soa_factorize(diag, J, fuel)
    if fact.status is not Status.COMPLETE:
        raise FuelExhausted(
            f"path object factorization ran out of fuel after {fact.fuel_used} attachments"
        )
    return PathObject(
        of=Z,
        apex=fact.right.source,
        into=fact.left,
        proj0=compose(fact.right, pr.left),
        proj1=compose(fact.right, pr.right),
        provenance=fact,
    )


def right_homotopic(
    f0: PresheafMap,
    f1: PresheafMap,
    rel: PresheafMap | None,
    J: GeneratingSet,
    fuel: int | None = None,
    path: PathObject | None = None,
) -> RightHomotopyWitness | None:
    """First right homotopy from f0 to f1 through the canonical path object,
    constant on `rel` (None for the absolute form)."""
    _require_parallel(f0, f1)
    Y, Z = f0.source, f0.target
    if rel is None:
        rel = initial_map(Y)
    if rel.target != Y:
        raise NonComposable("relative part must land in the source of the maps")
    if compose(rel, f0) != compose(rel, f1):
        raise IncompatibleOnRelativePart(
            "maps disagree on the relative part, no right homotopy is posable"
        )
    if path is None:
        path = path_object(Z, J, fuel)
    # per-slot values must project to f0 and f1
    allowed = []
    for o in range(len(Y.carriers)):
        p0, p1 = path.proj0._comp[o], path.proj1._comp[o]
        buckets: dict[tuple[int, int], set[int]] = {}
        for w in range(len(path.apex.carriers[o])):
            buckets.setdefault((p0[w], p1[w]), set()).add(w)
        allowed.append(
            [
                frozenset(
                    buckets.get((f0._comp[o][y], f1._comp[o][y]), ())
                )
                for y in range(len(Y.carriers[o]))
            ]
        )
    constant = compose(rel, compose(f0, path.into))
    seeds: Seeds = {}
    for o, col in enumerate(rel._comp):
        for x, y in enumerate(col):
            want = constant._comp[o][x]
            prev = seeds.get((o, y))
            if prev is not None and prev != want:
                return None
            seeds[(o, y)] = want
    for comp in _enumerate_components(Y, path.apex, seeds=seeds, allowed=allowed):
        return RightHomotopyWitness(path, PresheafMap._make(Y, path.apex, comp))
    return None
