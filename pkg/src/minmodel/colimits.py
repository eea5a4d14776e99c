"""Finite colimits and products of presheaves, computed pointwise.

Quotients pick the least element of each class (in the combined carrier
order) as canonical representative, so apex element names are stable and
every construction is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import (
    BaseMismatch,
    ImplementationInvariantBroken,
    NonComposable,
    NonCommutingSquare,
)
from .presheaf import BaseCategory, Presheaf, PresheafMap, compose


def initial(base: BaseCategory) -> Presheaf:
    """The empty presheaf."""
    return Presheaf._make(
        base,
        tuple(() for _ in base.objects),
        {name: () for name, _, _ in base.morphisms},
    )


def terminal(base: BaseCategory) -> Presheaf:
    """The one-point presheaf."""
    act = {}
    for name, _, _ in base.morphisms:
        act[name] = (0,)
    return Presheaf._make(base, tuple(("pt",) for _ in base.objects), act)


def initial_map(X: Presheaf) -> PresheafMap:
    return PresheafMap._make(
        initial(X.base), X, tuple(() for _ in X.base.objects)
    )


def terminal_map(X: Presheaf) -> PresheafMap:
    return PresheafMap._make(
        X, terminal(X.base), tuple((0,) * len(c) for c in X.carriers)
    )


@dataclass(frozen=True)
class CoproductResult:
    apex: Presheaf
    left: PresheafMap
    right: PresheafMap
    mediator: Callable[[PresheafMap, PresheafMap], PresheafMap]


def coproduct(X: Presheaf, Y: Presheaf) -> CoproductResult:
    """Disjoint union with `l.`/`r.` tagged element names."""
    if X.base != Y.base:
        raise BaseMismatch("coproduct needs a shared base")
    base = X.base
    carriers = tuple(
        tuple(f"l.{e}" for e in cx) + tuple(f"r.{e}" for e in cy)
        for cx, cy in zip(X.carriers, Y.carriers)
    )
    act: dict[str, tuple[int, ...]] = {}
    for name, _, _ in base.morphisms:
        ax, ay = X._act[name], Y._act[name]
        a = base._dom[name]
        shift = len(X.carriers[a])
        act[name] = tuple(ax) + tuple(v + shift for v in ay)
    apex = Presheaf._make(base, carriers, act)
    left = PresheafMap._make(
        X, apex, tuple(tuple(range(len(c))) for c in X.carriers)
    )
    right = PresheafMap._make(
        Y,
        apex,
        tuple(
            tuple(range(len(cx), len(cx) + len(cy)))
            for cx, cy in zip(X.carriers, Y.carriers)
        ),
    )

    def mediator(u: PresheafMap, v: PresheafMap) -> PresheafMap:
        if u.source != X or v.source != Y:
            raise NonComposable("cocone legs must start at the coproduct factors")
        if u.target != v.target:
            raise NonComposable("cocone legs must share their target")
        comp = tuple(cu + cv for cu, cv in zip(u._comp, v._comp))
        out = PresheafMap._make(apex, u.target, comp)
        out._check_naturality()
        return out

    return CoproductResult(apex, left, right, mediator)


def _find(parent: list[int], i: int) -> int:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def _union(parent: list[int], i: int, j: int) -> None:
    ri, rj = _find(parent, i), _find(parent, j)
    if ri == rj:
        return
    if ri < rj:
        parent[rj] = ri
    else:
        parent[ri] = rj


def _quotient(
    X: Presheaf, pairs: list[list[tuple[int, int]]]
) -> tuple[Presheaf, PresheafMap]:
    """Coequalize the given per-object element pairs; internal helper.

    Returns the quotient presheaf and the projection.  The induced actions
    are recomputed from every class member and must agree; a disagreement
    would mean the relation was not closed under the actions, which cannot
    happen for relations induced by naturality, so it is reported as an
    engine bug.
    """
    base = X.base
    parents = [list(range(len(c))) for c in X.carriers]
    for o, plist in enumerate(pairs):
        for i, j in plist:
            _union(parents[o], i, j)
    reps = [sorted({_find(p, i) for i in range(len(p))}) for p in parents]
    pos = [
        {r: k for k, r in enumerate(rs)} for rs in reps
    ]
    carriers = tuple(
        tuple(X.carriers[o][r] for r in rs) for o, rs in enumerate(reps)
    )
    act: dict[str, tuple[int, ...]] = {}
    for name in X.base.nonidentity:
        a, b = base._dom[name], base._cod[name]
        xact = X._act[name]
        out: list[int | None] = [None] * len(reps[b])
        for z in range(len(X.carriers[b])):
            k = pos[b][_find(parents[b], z)]
            v = pos[a][_find(parents[a], xact[z])]
            if out[k] is None:
                out[k] = v
            elif out[k] != v:
                raise ImplementationInvariantBroken(
                    f"quotient action of {name} is not well defined"
                )
        act[name] = tuple(v for v in out)  # type: ignore[misc]
    for o, obj in enumerate(base.objects):
        act[base.identities[obj]] = tuple(range(len(reps[o])))
    apex = Presheaf._make(base, carriers, act)
    proj = PresheafMap._make(
        X,
        apex,
        tuple(
            tuple(pos[o][_find(parents[o], i)] for i in range(len(X.carriers[o])))
            for o in range(len(X.carriers))
        ),
    )
    return apex, proj


@dataclass(frozen=True)
class PushoutResult:
    apex: Presheaf
    left: PresheafMap  # from the target of the first leg
    right: PresheafMap  # from the target of the second leg
    mediator: Callable[[PresheafMap, PresheafMap], PresheafMap]


def pushout(f: PresheafMap, g: PresheafMap) -> PushoutResult:
    """Pushout of the span  target(f) <- source -> target(g)."""
    if f.source != g.source:
        raise NonComposable("pushout legs must share their source")
    B, C = f.target, g.target
    co = coproduct(B, C)
    pairs: list[list[tuple[int, int]]] = []
    for o in range(len(B.carriers)):
        shift = len(B.carriers[o])
        pairs.append(
            [
                (f._comp[o][a], shift + g._comp[o][a])
                for a in range(len(f.source.carriers[o]))
            ]
        )
    apex, proj = _quotient(co.apex, pairs)
    left = compose(co.left, proj)
    right = compose(co.right, proj)

    def mediator(u: PresheafMap, v: PresheafMap) -> PresheafMap:
        if u.source != B or v.source != C:
            raise NonComposable("cocone legs must start at the span targets")
        if u.target != v.target:
            raise NonComposable("cocone legs must share their target")
        if compose(f, u) != compose(g, v):
            raise NonCommutingSquare("cocone does not agree on the span source")
        raw = co.mediator(u, v)
        comp = []
        for o in range(len(apex.carriers)):
            col = []
            for k in range(len(apex.carriers[o])):
                col.append(-1)
            comp.append(col)
        for o in range(len(co.apex.carriers)):
            for z in range(len(co.apex.carriers[o])):
                k = proj._comp[o][z]
                v_ = raw._comp[o][z]
                if comp[o][k] == -1:
                    comp[o][k] = v_
                elif comp[o][k] != v_:
                    raise ImplementationInvariantBroken(
                        "pushout mediator is not constant on a class"
                    )
        out = PresheafMap._make(
            apex, u.target, tuple(tuple(col) for col in comp)
        )
        out._check_naturality()
        return out

    return PushoutResult(apex, left, right, mediator)


@dataclass(frozen=True)
class ProductResult:
    apex: Presheaf
    left: PresheafMap  # projection to the first factor
    right: PresheafMap
    mediator: Callable[[PresheafMap, PresheafMap], PresheafMap]


def product(X: Presheaf, Y: Presheaf) -> ProductResult:
    """Binary product with `(x,y)` element names in lexicographic order."""
    if X.base != Y.base:
        raise BaseMismatch("product needs a shared base")
    base = X.base
    sizes = [(len(cx), len(cy)) for cx, cy in zip(X.carriers, Y.carriers)]
    carriers = tuple(
        tuple(f"({x},{y})" for x in cx for y in cy)
        for cx, cy in zip(X.carriers, Y.carriers)
    )
    act: dict[str, tuple[int, ...]] = {}
    for name in base.nonidentity:
        a, b = base._dom[name], base._cod[name]
        ax, ay = X._act[name], Y._act[name]
        _, nya = sizes[a]
        nxb, nyb = sizes[b]
        act[name] = tuple(
            ax[i] * nya + ay[j] for i in range(nxb) for j in range(nyb)
        )
    for o, obj in enumerate(base.objects):
        act[base.identities[obj]] = tuple(range(sizes[o][0] * sizes[o][1]))
    apex = Presheaf._make(base, carriers, act)
    left = PresheafMap._make(
        apex,
        X,
        tuple(
            tuple(i for i in range(nx) for _ in range(ny))
            for nx, ny in sizes
        ),
    )
    right = PresheafMap._make(
        apex,
        Y,
        tuple(
            tuple(j for _ in range(nx) for j in range(ny))
            for nx, ny in sizes
        ),
    )

    def mediator(u: PresheafMap, v: PresheafMap) -> PresheafMap:
        if u.target != X or v.target != Y:
            raise NonComposable("cone legs must land in the product factors")
        if u.source != v.source:
            raise NonComposable("cone legs must share their source")
        comp = tuple(
            tuple(
                cu[t] * sizes[o][1] + cv[t] for t in range(len(cu))
            )
            for o, (cu, cv) in enumerate(zip(u._comp, v._comp))
        )
        out = PresheafMap._make(u.source, apex, comp)
        out._check_naturality()
        return out

    return ProductResult(apex, left, right, mediator)
