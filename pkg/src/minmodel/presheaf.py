"""Finite base categories, finite presheaves, and their maps.

Everything validates eagerly and is immutable afterwards.  All enumeration
runs in the declared object and element orders, so every search in the
package is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Mapping, Sequence

from .errors import (
    AssociativityViolation,
    BaseMismatch,
    DuplicateName,
    FunctorialityViolation,
    IdentityViolation,
    IncompleteTable,
    MissingAction,
    NaturalityViolation,
    NonComposable,
    ParseError,
    SizeLimitExceeded,
    ValidationError,
)

MAX_BASE_OBJECTS = 16
MAX_CARRIER_SIZE = 64


class BaseCategory:
    """A finite category given by an explicit, fully checked composition table.

    `morphisms` lists (name, domain, codomain) triples including the
    identities, which are generated automatically as ``id_<object>``.
    `composition[(f, g)]` is the name of g-after-f for each composable
    pair (f first, then g).
    """

    def __init__(
        self,
        objects: Sequence[str],
        morphisms: Sequence[tuple[str, str, str]],
        composition: Mapping[tuple[str, str], str],
        identities: Mapping[str, str],
    ):
        self.objects = tuple(objects)
        self.morphisms = tuple(tuple(m) for m in morphisms)
        self.composition = dict(composition)
        self.identities = dict(identities)
        self._validate()
        self._obj_index = {o: i for i, o in enumerate(self.objects)}
        self._dom = {name: self._obj_index[d] for name, d, _ in self.morphisms}
        self._cod = {name: self._obj_index[c] for name, _, c in self.morphisms}
        ids = set(self.identities.values())
        self.nonidentity = tuple(n for n, _, _ in self.morphisms if n not in ids)
        # incoming[b] lists (morphism, domain index) for non-identity m : a -> b;
        # these are exactly the naturality constraints touched when a component
        # value at b is chosen.
        self._incoming: tuple[tuple[tuple[str, int], ...], ...] = tuple(
            tuple(
                (name, self._dom[name])
                for name in self.nonidentity
                if self._cod[name] == b
            )
            for b in range(len(self.objects))
        )
        self._key = (
            self.objects,
            self.morphisms,
            tuple(sorted(self.composition.items())),
            tuple(sorted(self.identities.items())),
        )

    def _validate(self) -> None:
        if len(self.objects) > MAX_BASE_OBJECTS:
            raise SizeLimitExceeded(
                f"base has {len(self.objects)} objects, limit is {MAX_BASE_OBJECTS}"
            )
        if len(set(self.objects)) != len(self.objects):
            raise DuplicateName("base object names must be unique")
        names = [n for n, _, _ in self.morphisms]
        if len(set(names)) != len(names):
            raise DuplicateName("base morphism names must be unique")
        by_name = {n: (d, c) for n, d, c in self.morphisms}
        for n, d, c in self.morphisms:
            if d not in self.objects or c not in self.objects:
                raise ValidationError(f"morphism {n}: unknown endpoint {d} or {c}")
        for o in self.objects:
            i = self.identities.get(o)
            if i is None or i not in by_name or by_name[i] != (o, o):
                raise ValidationError(f"object {o} has no identity morphism")
        # totality and closure
        for f, (fd, fc) in by_name.items():
            for g, (gd, gc) in by_name.items():
                if fc != gd:
                    continue
                h = self.composition.get((f, g))
                if h is None:
                    raise IncompleteTable(f"missing composite of {f} then {g}")
                if h not in by_name:
                    raise IncompleteTable(f"composite {h} of {f};{g} is not a morphism")
                if by_name[h] != (fd, gc):
                    raise IncompleteTable(
                        f"composite {h} of {f};{g} has endpoints {by_name[h]}, "
                        f"expected {(fd, gc)}"
                    )
        # identity laws
        for f, (fd, fc) in by_name.items():
            if self.composition[(self.identities[fd], f)] != f:
                raise IdentityViolation(f"{self.identities[fd]};{f} is not {f}")
            if self.composition[(f, self.identities[fc])] != f:
                raise IdentityViolation(f"{f};{self.identities[fc]} is not {f}")
        # associativity
        for f, (fd, fc) in by_name.items():
            for g, (gd, gc) in by_name.items():
                if fc != gd:
                    continue
                fg = self.composition[(f, g)]
                for h, (hd, hc) in by_name.items():
                    if gc != hd:
                        continue
                    if self.composition[(fg, h)] != self.composition[
                        (f, self.composition[(g, h)])
                    ]:
                        raise AssociativityViolation(f"({f};{g});{h} != {f};({g};{h})")

    def obj_index(self, obj: str) -> int:
        if obj not in self._obj_index:
            raise ValidationError(f"unknown base object {obj!r}")
        return self._obj_index[obj]

    def dom(self, morphism: str) -> str:
        return self.objects[self._dom[morphism]]

    def cod(self, morphism: str) -> str:
        return self.objects[self._cod[morphism]]

    def comp(self, f: str, g: str) -> str:
        """Composite of f followed by g."""
        if (f, g) not in self.composition:
            raise NonComposable(f"{f} then {g} do not compose")
        return self.composition[(f, g)]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BaseCategory) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"BaseCategory(objects={list(self.objects)!r}, morphisms={len(self.morphisms)})"


def load_base(description: str) -> BaseCategory:
    """Build a base category from its textual description.

    The description is line oriented::

        objects: v e
        morphism s: v -> e
        morphism t: v -> e
        compose f ; g = h

    Identities are generated automatically; `compose` lines are only needed
    for pairs of named morphisms (and may override identity composites, which
    the validator will then reject).
    """
    objects: list[str] = []
    morphisms: list[tuple[str, str, str]] = []
    explicit: dict[tuple[str, str], str] = {}
    seen_objects = False
    for lineno, raw in enumerate(description.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("objects:"):
            if seen_objects:
                raise ParseError("duplicate objects line", lineno)
            objects = line[len("objects:"):].split()
            seen_objects = True
        elif line.startswith("morphism "):
            body = line[len("morphism "):]
            try:
                name, arrow = body.split(":", 1)
                dom, cod = arrow.split("->")
            except ValueError:
                raise ParseError("expected 'morphism NAME: OBJ -> OBJ'", lineno)
            morphisms.append((name.strip(), dom.strip(), cod.strip()))
        elif line.startswith("compose "):
            body = line[len("compose "):]
            try:
                pair, result = body.split("=")
                f, g = pair.split(";")
            except ValueError:
                raise ParseError("expected 'compose F ; G = H'", lineno)
            key = (f.strip(), g.strip())
            if key in explicit:
                raise ParseError(f"duplicate compose entry for {key}", lineno)
            explicit[key] = result.strip()
        else:
            raise ParseError(f"unrecognized base line {line!r}", lineno)
    if not seen_objects:
        raise ParseError("base description has no objects line")

    identities = {o: f"id_{o}" for o in objects}
    for name, _, _ in morphisms:
        if name in identities.values():
            raise DuplicateName(f"morphism name {name} is reserved for an identity")
    full = [(identities[o], o, o) for o in objects] + list(morphisms)
    by_name = {n: (d, c) for n, d, c in full}
    table: dict[tuple[str, str], str] = {}
    for f, (fd, fc) in by_name.items():
        for g, (gd, gc) in by_name.items():
            if fc != gd:
                continue
            if (f, g) in explicit:
                table[(f, g)] = explicit[(f, g)]
            elif f in identities.values():
                table[(f, g)] = g
            elif g in identities.values():
                table[(f, g)] = f
    for key, value in explicit.items():
        if key not in table:
            # referenced morphisms must exist and compose
            f, g = key
            if f not in by_name or g not in by_name:
                raise ValidationError(f"compose entry names unknown morphism in {key}")
            raise ValidationError(f"compose entry {key} is not a composable pair")
        table[key] = value
    return BaseCategory(objects, full, table, identities)


class Presheaf:
    """A contravariant functor from a finite base to finite sets.

    For a base morphism m : a -> b the action maps carrier(b) to carrier(a).
    Carriers are ordered element name lists; actions are stored as index
    tuples over those orders.
    """

    def __init__(
        self,
        base: BaseCategory,
        carriers: Mapping[str, Sequence[str]],
        actions: Mapping[str, Mapping[str, str]],
    ):
        built = _build_presheaf_data(base, carriers, actions)
        self.base = base
        self.carriers: tuple[tuple[str, ...], ...] = built[0]
        self._act: dict[str, tuple[int, ...]] = built[1]
        self._finish()

    @classmethod
    def _make(
        cls,
        base: BaseCategory,
        carriers: tuple[tuple[str, ...], ...],
        act: dict[str, tuple[int, ...]],
    ) -> "Presheaf":
        obj = cls.__new__(cls)
        obj.base = base
        obj.carriers = carriers
        obj._act = act
        obj._finish()
        return obj

    def _finish(self) -> None:
        self._index = tuple({e: i for i, e in enumerate(c)} for c in self.carriers)
        self._key = (self.base._key, self.carriers, tuple(sorted(self._act.items())))
        self._hash = hash(self._key)

    def carrier(self, obj: str) -> tuple[str, ...]:
        return self.carriers[self.base.obj_index(obj)]

    def action(self, morphism: str) -> dict[str, str]:
        src = self.carriers[self.base._cod[morphism]]
        dst = self.carriers[self.base._dom[morphism]]
        return {src[i]: dst[v] for i, v in enumerate(self._act[morphism])}

    def total_size(self) -> int:
        return sum(len(c) for c in self.carriers)

    def is_empty(self) -> bool:
        return self.total_size() == 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Presheaf) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        sizes = ", ".join(
            f"{o}:{len(c)}" for o, c in zip(self.base.objects, self.carriers)
        )
        return f"Presheaf({sizes})"


def _build_presheaf_data(
    base: BaseCategory,
    carriers: Mapping[str, Sequence[str]],
    actions: Mapping[str, Mapping[str, str]],
) -> tuple[tuple[tuple[str, ...], ...], dict[str, tuple[int, ...]]]:
    for obj in carriers:
        base.obj_index(obj)
    cols: list[tuple[str, ...]] = []
    for obj in base.objects:
        if obj not in carriers:
            raise ValidationError(f"no carrier given for base object {obj}")
        col = tuple(carriers[obj])
        if len(col) > MAX_CARRIER_SIZE:
            raise SizeLimitExceeded(
                f"carrier of {obj} has {len(col)} elements, limit is {MAX_CARRIER_SIZE}"
            )
        if len(set(col)) != len(col):
            raise DuplicateName(f"carrier of {obj} repeats an element name")
        cols.append(col)
    index = [{e: i for i, e in enumerate(c)} for c in cols]

    known = {n for n, _, _ in base.morphisms}
    for m in actions:
        if m not in known:
            raise ValidationError(f"action given for unknown morphism {m}")

    act: dict[str, tuple[int, ...]] = {}
    for o, i in ((o, base._obj_index[o]) for o in base.objects):
        act[base.identities[o]] = tuple(range(len(cols[i])))
    for name in base.nonidentity:
        a, b = base._dom[name], base._cod[name]
        src, dst = cols[b], cols[a]
        given = actions.get(name)
        if given is None:
            if src:
                raise MissingAction(f"presheaf omits action of {name}")
            act[name] = ()
            continue
        values = []
        for e in src:
            if e not in given:
                raise MissingAction(f"action of {name} undefined on {e!r}")
            v = given[e]
            if v not in index[a]:
                raise ValidationError(
                    f"action of {name} sends {e!r} to {v!r}, not in carrier of "
                    f"{base.objects[a]}"
                )
            values.append(index[a][v])
        extra = set(given) - set(src)
        if extra:
            raise ValidationError(
                f"action of {name} defined on foreign elements {sorted(extra)}"
            )
        act[name] = tuple(values)
    for o in base.objects:
        ident = base.identities[o]
        if ident in actions:
            i = base._obj_index[o]
            for e in cols[i]:
                if actions[ident].get(e) != e:
                    raise FunctorialityViolation(
                        f"explicit action of identity {ident} is not the identity"
                    )
    # contravariant functoriality: act(f;g) == act(f) after act(g)
    for f in base.nonidentity:
        for g in base.nonidentity:
            if base._cod[f] != base._dom[g]:
                continue
            h = base.composition[(f, g)]
            actf, actg, acth = act[f], act[g], act[h]
            if tuple(actf[actg[x]] for x in range(len(actg))) != acth:
                raise FunctorialityViolation(
                    f"actions of {f};{g} disagree with action of {h}"
                )
    return tuple(cols), act


def validate_presheaf(
    base: BaseCategory,
    carriers: Mapping[str, Sequence[str]],
    actions: Mapping[str, Mapping[str, str]],
) -> Presheaf:
    """Validate raw carrier and action data and return the presheaf."""
    return Presheaf(base, carriers, actions)


class PresheafMap:
    """A natural transformation between presheaves over one base."""

    def __init__(
        self,
        source: Presheaf,
        target: Presheaf,
        components: Mapping[str, Mapping[str, str]],
    ):
        if source.base != target.base:
            raise BaseMismatch("map endpoints live over different bases")
        base = source.base
        comp: list[tuple[int, ...]] = []
        for o, obj in enumerate(base.objects):
            given = components.get(obj)
            col = source.carriers[o]
            if given is None:
                if col:
                    raise ValidationError(f"no component given at {obj}")
                comp.append(())
                continue
            values = []
            for e in col:
                if e not in given:
                    raise ValidationError(f"component at {obj} undefined on {e!r}")
                v = given[e]
                if v not in target._index[o]:
                    raise ValidationError(
                        f"component at {obj} sends {e!r} to {v!r}, not in target"
                    )
                values.append(target._index[o][v])
            extra = set(given) - set(col)
            if extra:
                raise ValidationError(
                    f"component at {obj} defined on foreign elements {sorted(extra)}"
                )
            comp.append(tuple(values))
        self.source = source
        self.target = target
        self._comp = tuple(comp)
        self._check_naturality()
        self._finish()

    def _check_naturality(self) -> None:
        base = self.source.base
        for m in base.nonidentity:
            a, b = base._dom[m], base._cod[m]
            sa, ta = self.source._act[m], self.target._act[m]
            fb, fa = self._comp[b], self._comp[a]
            for x in range(len(self.source.carriers[b])):
                if fa[sa[x]] != ta[fb[x]]:
                    raise NaturalityViolation(
                        f"square for {m} fails at element "
                        f"{self.source.carriers[b][x]!r}"
                    )

    @classmethod
    def _make(
        cls,
        source: Presheaf,
        target: Presheaf,
        comp: tuple[tuple[int, ...], ...],
    ) -> "PresheafMap":
        obj = cls.__new__(cls)
        obj.source = source
        obj.target = target
        obj._comp = comp
        obj._finish()
        return obj

    def _finish(self) -> None:
        self._key = (self.source._key, self.target._key, self._comp)
        self._hash = hash(self._key)

    def component(self, obj: str) -> dict[str, str]:
        o = self.source.base.obj_index(obj)
        src, dst = self.source.carriers[o], self.target.carriers[o]
        return {src[i]: dst[v] for i, v in enumerate(self._comp[o])}

    def apply(self, obj: str, element: str) -> str:
        o = self.source.base.obj_index(obj)
        return self.target.carriers[o][self._comp[o][self.source._index[o][element]]]

    def is_identity(self) -> bool:
        return self.source == self.target and all(
            col == tuple(range(len(col))) for col in self._comp
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PresheafMap) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"PresheafMap({self.source!r} -> {self.target!r})"


def identity_map(X: Presheaf) -> PresheafMap:
    return PresheafMap._make(X, X, tuple(tuple(range(len(c))) for c in X.carriers))


def compose(f: PresheafMap, g: PresheafMap) -> PresheafMap:
    """Composite of f followed by g."""
    if f.target != g.source:
        raise NonComposable("target of the first map must equal source of the second")
    comp = tuple(
        tuple(gc[v] for v in fc) for fc, gc in zip(f._comp, g._comp)
    )
    return PresheafMap._make(f.source, g.target, comp)


Seeds = dict[tuple[int, int], int]
Allowed = list[list[frozenset[int] | None]]


def _enumerate_components(
    X: Presheaf,
    Y: Presheaf,
    seeds: Seeds | None = None,
    allowed: Allowed | None = None,
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Enumerate component tables of natural maps X -> Y.

    Assignments run slot by slot (objects in base order, elements in carrier
    order) and values in target carrier order, so complete tables come out in
    lexicographic order.  Choosing a value propagates every naturality
    constraint it touches immediately; contradictions backtrack, so no
    post-filtering happens.  `seeds` pins slots up front, `allowed` restricts
    per-slot value sets (both in index form).
    """
    if X.base != Y.base:
        raise BaseMismatch("hom enumeration needs a shared base")
    base = X.base
    nx = [len(c) for c in X.carriers]
    ny = [len(c) for c in Y.carriers]
    assign: list[list[int]] = [[-1] * n for n in nx]
    incoming = base._incoming
    Xact, Yact = X._act, Y._act

    def force(o: int, x: int, v: int, trail: list[tuple[int, int]]) -> bool:
        stack = [(o, x, v)]
        while stack:
            o, x, v = stack.pop()
            cur = assign[o][x]
            if cur == v:
                continue
            if cur != -1:
                return False
            if allowed is not None:
                dom = allowed[o][x]
                if dom is not None and v not in dom:
                    return False
            assign[o][x] = v
            trail.append((o, x))
            for m, a in incoming[o]:
                stack.append((a, Xact[m][x], Yact[m][v]))
        return True

    def undo(trail: list[tuple[int, int]]) -> None:
        for o, x in trail:
            assign[o][x] = -1

    if seeds:
        trail0: list[tuple[int, int]] = []
        for (o, x), v in seeds.items():
            if v < 0 or v >= ny[o] or not force(o, x, v, trail0):
                return
    slots = [(o, x) for o in range(len(nx)) for x in range(nx[o])]

    def rec(pos: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        while pos < len(slots) and assign[slots[pos][0]][slots[pos][1]] != -1:
            pos += 1
        if pos == len(slots):
            yield tuple(tuple(col) for col in assign)
            return
        o, x = slots[pos]
        dom = allowed[o][x] if allowed is not None else None
        for v in range(ny[o]):
            if dom is not None and v not in dom:
                continue
            trail: list[tuple[int, int]] = []
            if force(o, x, v, trail):
                yield from rec(pos + 1)
            undo(trail)

    yield from rec(0)


def hom_enumerate(X: Presheaf, Y: Presheaf) -> Iterator[PresheafMap]:
    """All maps X -> Y in lexicographic component order."""
    for comp in _enumerate_components(X, Y):
        yield PresheafMap._make(X, Y, comp)


def is_mono(f: PresheafMap) -> bool:
    """Componentwise injectivity."""
    for col in f._comp:
        if len(set(col)) != len(col):
            return False
    return True


def _retraction_seeds(f: PresheafMap) -> Seeds | None:
    """Slots of a retraction g with g(f(x)) = x, or None if inconsistent."""
    seeds: Seeds = {}
    for o, col in enumerate(f._comp):
        for x, fx in enumerate(col):
            prev = seeds.get((o, fx))
            if prev is not None and prev != x:
                return None
            seeds[(o, fx)] = x
    return seeds


def find_retraction(f: PresheafMap) -> PresheafMap | None:
    """First g with g  after f = identity, in enumeration order."""
    seeds = _retraction_seeds(f)
    if seeds is None:
        return None
    for comp in _enumerate_components(f.target, f.source, seeds=seeds):
        return PresheafMap._make(f.target, f.source, comp)
    return None


def is_split_mono(f: PresheafMap) -> bool:
    return find_retraction(f) is not None


@dataclass(frozen=True)
class MorphismRetraction:
    """Witness that `inner` is a retract of `outer` in the arrow category."""

    inner: PresheafMap
    outer: PresheafMap
    section_top: PresheafMap
    section_bottom: PresheafMap
    retraction_top: PresheafMap
    retraction_bottom: PresheafMap


def is_retract_of(f: PresheafMap, g: PresheafMap) -> MorphismRetraction | None:
    """Search a retract diagram exhibiting f as a retract of g.

    Sections are split monos, so carriers of f's endpoints may not exceed
    those of g's; that check prunes before any enumeration.
    """
    if f.source.base != g.source.base:
        raise BaseMismatch("retract search needs a shared base")
    A, B = f.source, f.target
    C, D = g.source, g.target
    for ca, cc in zip(A.carriers, C.carriers):
        if len(ca) > len(cc):
            return None
    for cb, cd in zip(B.carriers, D.carriers):
        if len(cb) > len(cd):
            return None
    for st_comp in _enumerate_components(A, C):
        # bottom section forced on the image of f by the commuting condition
        sb_seeds: Seeds = {}
        ok = True
        for o, col in enumerate(f._comp):
            for x, fx in enumerate(col):
                want = g._comp[o][st_comp[o][x]]
                prev = sb_seeds.get((o, fx))
                if prev is not None and prev != want:
                    ok = False
                    break
                sb_seeds[(o, fx)] = want
            if not ok:
                break
        if not ok:
            continue
        rt_seeds: Seeds = {}
        for o, col in enumerate(st_comp):
            bad = False
            for x, sx in enumerate(col):
                prev = rt_seeds.get((o, sx))
                if prev is not None and prev != x:
                    bad = True
                    break
                rt_seeds[(o, sx)] = x
            if bad:
                ok = False
                break
        if not ok:
            continue
        for sb_comp in _enumerate_components(B, D, seeds=sb_seeds):
            for rt_comp in _enumerate_components(C, A, seeds=rt_seeds):
                rb_seeds: Seeds = {}
                good = True
                for o, col in enumerate(sb_comp):
                    for x, sx in enumerate(col):
                        prev = rb_seeds.get((o, sx))
                        if prev is not None and prev != x:
                            good = False
                            break
                        rb_seeds[(o, sx)] = x
                    if not good:
                        break
                if not good:
                    continue
                for o, col in enumerate(g._comp):
                    for c, gc in enumerate(col):
                        want = f._comp[o][rt_comp[o][c]]
                        prev = rb_seeds.get((o, gc))
                        if prev is not None and prev != want:
                            good = False
                            break
                        rb_seeds[(o, gc)] = want
                    if not good:
                        break
                if not good:
                    continue
                for rb_comp in _enumerate_components(D, B, seeds=rb_seeds):
                    return MorphismRetraction(
                        inner=f,
                        outer=g,
                        section_top=PresheafMap._make(A, C, st_comp),
                        section_bottom=PresheafMap._make(B, D, sb_comp),
                        retraction_top=PresheafMap._make(C, A, rt_comp),
                        retraction_bottom=PresheafMap._make(D, B, rb_comp),
                    )
    return None
