"""Bounded verification of the model-structure conditions.

Quantifiers like "every cofibrant object" or "every cofibration" are cut
down to a BoundedUniverse: the deterministically enumerated family of all
presheaves whose carriers stay within a per-object size bound.  Verdicts
are three-valued.  A Pass means "holds within the bound", never an
unconditional theorem; a Fail carries a counterexample bundle complete
enough to re-validate standalone; Inconclusive reports what could not be
decided (fuel exhaustion, undecided cofibrancy) and how much.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .colimits import coproduct, initial_map, pushout
from .errors import FuelExhausted, ValidationError
from .factorization import GeneratingSet, Verdict, in_cof, in_inj
from .homotopy import HomotopyContext, is_strong_deformation_retract
from .lifting import find_unliftable_square_up_to, has_rlp
from .presheaf import (
    BaseCategory,
    Presheaf,
    PresheafMap,
    _enumerate_components,
    compose,
    find_retraction,
    hom_enumerate,
    is_retract_of,
)
from .lifting import _upper_seeds


@dataclass(frozen=True)
class VerdictReport:
    check: str
    verdict: Verdict
    parameters: dict
    counterexample: dict | None = None
    witnesses: tuple = ()
    diagnostics: dict = field(default_factory=dict)
    subchecks: tuple["VerdictReport", ...] = ()

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.YES


def _combine(check: str, parameters: dict, subchecks: list[VerdictReport]) -> VerdictReport:
    verdict = Verdict.YES
    counterexample = None
    for sub in subchecks:
        if sub.verdict is Verdict.NO:
            verdict = Verdict.NO
            counterexample = sub.counterexample
            break
    else:
        if any(s.verdict is Verdict.INCONCLUSIVE for s in subchecks):
            verdict = Verdict.INCONCLUSIVE
    return VerdictReport(
        check, verdict, parameters, counterexample, subchecks=tuple(subchecks)
    )


class BoundedUniverse:
    """Every presheaf over the base within a carrier-size bound, plus the
    hom-sets and membership verdicts the checkers keep re-asking for.

    Enumeration order is fixed: size vectors run in base-object order,
    action tables lexicographically; elements are named by their index.
    Isomorphic duplicates are kept on purpose (renaming invariance comes
    for free as a consistency check).  Objects whose cofibrancy cannot be
    decided within fuel are left out of the cofibrant family and counted.
    """

    def __init__(
        self,
        base: BaseCategory,
        bound: int | dict[str, int],
        generators: GeneratingSet,
        fuel: int | None = None,
    ):
        self.base = base
        if isinstance(bound, int):
            self.bound = {o: bound for o in base.objects}
        else:
            self.bound = {o: bound[o] for o in base.objects}
        self.generators = generators
        self.fuel = fuel
        self.objects: tuple[Presheaf, ...] = tuple(self._enumerate())
        self._index = {X: k for k, X in enumerate(self.objects)}
        self._hom: dict = {}
        self._cof: dict[PresheafMap, Verdict] = {}
        self._rlp_memo: dict = {}
        self._factor_through: dict = {}
        self._retract_pairs: dict = {}
        self._cofibrant: tuple[Presheaf, ...] | None = None
        self._cbc: tuple[PresheafMap, ...] | None = None
        self.undecided_cofibrancy = 0
        self.undecided_cofibrations = 0

    def _enumerate(self) -> Iterator[Presheaf]:
        base = self.base
        nonid = base.nonidentity
        ranges = [range(self.bound[o] + 1) for o in base.objects]
        for vec in itertools.product(*ranges):
            carriers = {
                o: [str(k) for k in range(n)] for o, n in zip(base.objects, vec)
            }
            tables = []
            possible = True
            for m in nonid:
                na = vec[base.obj_index(base.dom(m))]
                nb = vec[base.obj_index(base.cod(m))]
                if nb > 0 and na == 0:
                    possible = False
                    break
                dom_elems = carriers[base.cod(m)]
                tables.append(
                    [
                        dict(zip(dom_elems, (str(v) for v in pick)))
                        for pick in itertools.product(range(na), repeat=nb)
                    ]
                )
            if not possible:
                continue
            for combo in itertools.product(*tables):
                try:
                    yield Presheaf(base, carriers, dict(zip(nonid, combo)))
                except ValidationError:
                    continue

    def describe(self) -> dict:
        return {"bound": dict(self.bound), "objects": len(self.objects)}

    def index(self, X: Presheaf) -> int | None:
        return self._index.get(X)

    def hom(self, X: Presheaf, Y: Presheaf) -> tuple[PresheafMap, ...]:
        key = (X, Y)
        got = self._hom.get(key)
        if got is None:
            got = tuple(hom_enumerate(X, Y))
            self._hom[key] = got
        return got

    def all_maps(self) -> Iterator[PresheafMap]:
        for X in self.objects:
            for Y in self.objects:
                yield from self.hom(X, Y)

    def is_cof(self, f: PresheafMap) -> Verdict:
        got = self._cof.get(f)
        if got is None:
            got = in_cof(f, self.generators, self.fuel)
            self._cof[f] = got
        return got

    def is_triv_fib(self, f: PresheafMap) -> bool:
        return in_inj(f, self.generators, memo=self._rlp_memo)

    @property
    def cofibrant(self) -> tuple[Presheaf, ...]:
        if self._cofibrant is None:
            keep = []
            undecided = 0
            for X in self.objects:
                v = self.is_cof(initial_map(X))
                if v is Verdict.YES:
                    keep.append(X)
                elif v is Verdict.INCONCLUSIVE:
                    undecided += 1
            self._cofibrant = tuple(keep)
            self.undecided_cofibrancy = undecided
        return self._cofibrant

    def cofibrations_between_cofibrant(self) -> tuple[PresheafMap, ...]:
        if self._cbc is None:
            keep = []
            undecided = 0
            for A in self.cofibrant:
                for B in self.cofibrant:
                    for i in self.hom(A, B):
                        v = self.is_cof(i)
                        if v is Verdict.YES:
                            keep.append(i)
                        elif v is Verdict.INCONCLUSIVE:
                            undecided += 1
            self._cbc = tuple(keep)
            self.undecided_cofibrations = undecided
        return self._cbc

    def factors_through(self, i: PresheafMap, X: Presheaf) -> frozenset[PresheafMap]:
        """The maps i.source -> X that extend along i."""
        key = (i, X)
        got = self._factor_through.get(key)
        if got is None:
            got = frozenset(compose(i, w) for w in self.hom(i.target, X))
            self._factor_through[key] = got
        return got

    def is_object_retract(self, X: Presheaf, A: Presheaf) -> bool:
        key = (X, A)
        got = self._retract_pairs.get(key)
        if got is None:
            got = False
            if all(
                len(cx) <= len(ca) for cx, ca in zip(X.carriers, A.carriers)
            ):
                for s in self.hom(X, A):
                    if find_retraction(s) is not None:
                        got = True
                        break
            self._retract_pairs[key] = got
        return got

    def all_undecided(self) -> int:
        self.cofibrations_between_cofibrant()
        return self.undecided_cofibrancy + self.undecided_cofibrations


def _first_extension(i: PresheafMap, w: PresheafMap) -> PresheafMap | None:
    """First v: i.target -> w.target with v after i = w."""
    seeds = _upper_seeds(i, w)
    if seeds is None:
        return None
    for comp in _enumerate_components(i.target, w.target, seeds=seeds):
        return PresheafMap._make(i.target, w.target, comp)
    return None


def is_pure(f: PresheafMap, U: BoundedUniverse, fuel: int | None = None) -> VerdictReport:
    """Purity of f: in every commuting square against a cofibration between
    cofibrant objects of U, the top map extends along the cofibration.

    The extension requirement does not mention f, so a square only matters
    when the bottom exists; that is checked last, after the cheap
    factor-through test fails.
    """
    X = f.source
    params = {"map": f, **U.describe()}
    checked = 0
    for i in U.cofibrations_between_cofibrant():
        factorable = U.factors_through(i, X)
        for u in U.hom(i.source, X):
            checked += 1
            if u in factorable:
                continue
            v = _first_extension(i, compose(u, f))
            if v is not None:
                return VerdictReport(
                    "pure",
                    Verdict.NO,
                    params,
                    {"cofibration": i, "top": u, "bottom": v},
                )
    undecided = U.all_undecided()
    verdict = Verdict.INCONCLUSIVE if undecided else Verdict.YES
    return VerdictReport(
        "pure",
        verdict,
        params,
        None,
        diagnostics={"squares_considered": checked, "undecided_membership": undecided},
    )


def is_weak_equivalence(
    f: PresheafMap,
    I: GeneratingSet,
    fuel: int | None = None,
    ctx: HomotopyContext | None = None,
) -> VerdictReport:
    """RLP up to homotopy-rel-i with respect to every generator i."""
    if ctx is None:
        ctx = HomotopyContext(I, fuel)
    params = {"generators": I.label}
    try:
        for k, i in enumerate(I.maps):
            bad = find_unliftable_square_up_to(i, f, ctx.oracle(i))
            if bad is not None:
                return VerdictReport(
                    "weak-equivalence",
                    Verdict.NO,
                    params,
                    {"generator": k, "top": bad[0], "bottom": bad[1]},
                )
    except FuelExhausted as stop:
        return VerdictReport(
            "weak-equivalence",
            Verdict.INCONCLUSIVE,
            params,
            None,
            diagnostics={"fuel": str(stop)},
        )
    return VerdictReport(
        "weak-equivalence",
        Verdict.YES,
        params,
        None,
        diagnostics={"generators_checked": len(I.maps)},
    )


class WeClass:
    """A named weak-equivalence predicate with memoized verdicts.

    The canonical one delegates to is_weak_equivalence; ad-hoc classes
    (used to probe axiom failures) wrap any map predicate.
    """

    def __init__(self, label: str, predicate: Callable[[PresheafMap], Verdict]):
        self.label = label
        self._predicate = predicate
        self._memo: dict[PresheafMap, Verdict] = {}

    def __call__(self, f: PresheafMap) -> Verdict:
        got = self._memo.get(f)
        if got is None:
            got = self._predicate(f)
            self._memo[f] = got
        return got

    @classmethod
    def from_generators(
        cls,
        I: GeneratingSet,
        fuel: int | None = None,
        ctx: HomotopyContext | None = None,
    ) -> "WeClass":
        context = ctx if ctx is not None else HomotopyContext(I, fuel)

        def predicate(f: PresheafMap) -> Verdict:
            return is_weak_equivalence(f, I, fuel, context).verdict

        return cls(f"rlp-up-to-homotopy({I.label})", predicate)


def build_jset(
    I: GeneratingSet,
    fuel: int | None = None,
    ctx: HomotopyContext | None = None,
) -> GeneratingSet:
    """One generating trivial cofibration per generator: the end inclusion
    of the canonical cylinder over it."""
    if ctx is None:
        ctx = HomotopyContext(I, fuel)
    return GeneratingSet(
        f"J({I.label})", tuple(ctx.cylinder(i).incl0 for i in I.maps)
    )


def _object_square_failure(
    g: PresheafMap, V: Presheaf, ctx: HomotopyContext
) -> tuple[PresheafMap, PresheafMap] | None:
    """First square over the empty map into V with no lift up to absolute
    homotopy against g, memoized on the context."""
    left = initial_map(V)
    key = (left, g)
    if key in ctx.square_memo:
        return ctx.square_memo[key]
    got = find_unliftable_square_up_to(left, g, ctx.oracle(left))
    ctx.square_memo[key] = got
    return got


def check_appropriate(
    I: GeneratingSet,
    U: BoundedUniverse,
    fuel: int | None = None,
    ctx: HomotopyContext | None = None,
) -> VerdictReport:
    """Pushouts of trivial fibrations between cofibrant objects along
    cofibrations stay pure and keep RLP up to homotopy against every
    cofibrant object of U."""
    if fuel is None:
        fuel = U.fuel
    if ctx is None:
        ctx = HomotopyContext(I, fuel)
    params = {"generators": I.label, **U.describe()}
    pushouts_checked = 0
    inconclusive = 0
    settled: set[PresheafMap] = set()
    try:
        cofibrant = U.cofibrant
        for A in cofibrant:
            for B in cofibrant:
                for t in U.hom(A, B):
                    if not U.is_triv_fib(t):
                        continue
                    for C in U.objects:
                        for c in U.hom(A, C):
                            vc = U.is_cof(c)
                            if vc is Verdict.INCONCLUSIVE:
                                inconclusive += 1
                            if vc is not Verdict.YES:
                                continue
                            comparison = pushout(t, c).right
                            pushouts_checked += 1
                            if comparison in settled:
                                continue
                            purity = is_pure(comparison, U, fuel)
                            if purity.verdict is Verdict.NO:
                                return VerdictReport(
                                    "appropriate",
                                    Verdict.NO,
                                    params,
                                    {
                                        "trivial-fibration": t,
                                        "cofibration": c,
                                        "comparison": comparison,
                                        "purity": purity.counterexample,
                                    },
                                )
                            if purity.verdict is Verdict.INCONCLUSIVE:
                                inconclusive += 1
                            for V in cofibrant:
                                bad = _object_square_failure(comparison, V, ctx)
                                if bad is not None:
                                    return VerdictReport(
                                        "appropriate",
                                        Verdict.NO,
                                        params,
                                        {
                                            "trivial-fibration": t,
                                            "cofibration": c,
                                            "comparison": comparison,
                                            "against": V,
                                            "top": bad[0],
                                            "bottom": bad[1],
                                        },
                                    )
                            settled.add(comparison)
    except FuelExhausted as stop:
        return VerdictReport(
            "appropriate",
            Verdict.INCONCLUSIVE,
            params,
            None,
            diagnostics={"fuel": str(stop)},
        )
    undecided = U.all_undecided() + inconclusive
    return VerdictReport(
        "appropriate",
        Verdict.INCONCLUSIVE if undecided else Verdict.YES,
        params,
        None,
        diagnostics={
            "pushouts_checked": pushouts_checked,
            "undecided_membership": undecided,
        },
    )


def check_main_condition(
    I: GeneratingSet,
    U: BoundedUniverse,
    fuel: int | None = None,
    ctx: HomotopyContext | None = None,
) -> VerdictReport:
    """Appropriateness plus: pushouts of the canonical trivial cofibrations
    keep RLP up to homotopy against the generator domains.

    Finite generator sources make pushouts of J-maps stand in for all of
    J-cell here; each attachment stage is itself such a pushout.
    """
    if fuel is None:
        fuel = U.fuel
    if ctx is None:
        ctx = HomotopyContext(I, fuel)
    params = {"generators": I.label, **U.describe()}
    appropriate = check_appropriate(I, U, fuel, ctx)
    try:
        J = build_jset(I, fuel, ctx)
    except FuelExhausted as stop:
        cell = VerdictReport(
            "jcell-rlp",
            Verdict.INCONCLUSIVE,
            params,
            None,
            diagnostics={"fuel": str(stop)},
        )
        return _combine("main-condition", params, [appropriate, cell])

    domains = []
    for i in I.maps:
        if i.source not in domains:
            domains.append(i.source)
    checked = 0
    inconclusive = 0
    cell = None
    settled: set[PresheafMap] = set()
    try:
        for jk, j in enumerate(J.maps):
            for X in U.objects:
                for u in U.hom(j.source, X):
                    pushed = pushout(j, u).right
                    checked += 1
                    if pushed in settled:
                        continue
                    for D in domains:
                        bad = _object_square_failure(pushed, D, ctx)
                        if bad is not None:
                            cell = VerdictReport(
                                "jcell-rlp",
                                Verdict.NO,
                                params,
                                {
                                    "j-generator": jk,
                                    "along": u,
                                    "pushed": pushed,
                                    "against": D,
                                    "top": bad[0],
                                    "bottom": bad[1],
                                },
                            )
                            break
                    if cell is not None:
                        break
                    settled.add(pushed)
                if cell is not None:
                    break
            if cell is not None:
                break
    except FuelExhausted as stop:
        cell = VerdictReport(
            "jcell-rlp",
            Verdict.INCONCLUSIVE,
            params,
            None,
            diagnostics={"fuel": str(stop)},
        )
    if cell is None:
        cell = VerdictReport(
            "jcell-rlp",
            Verdict.INCONCLUSIVE if inconclusive else Verdict.YES,
            params,
            None,
            diagnostics={"pushouts_checked": checked},
        )
    return _combine("main-condition", params, [appropriate, cell])


def check_properness_condition(
    I: GeneratingSet,
    U: BoundedUniverse,
    fuel: int | None = None,
    ctx: HomotopyContext | None = None,
) -> VerdictReport:
    """Coproduct closure of trivial fibrations between cofibrant objects,
    and weak-equivalence of the comparison maps between pushouts along
    the generators."""
    if fuel is None:
        fuel = U.fuel
    if ctx is None:
        ctx = HomotopyContext(I, fuel)
    params = {"generators": I.label, **U.describe()}
    we = WeClass.from_generators(I, fuel, ctx)

    cofibrant = U.cofibrant
    tfibs = [
        t
        for A in cofibrant
        for B in cofibrant
        for t in U.hom(A, B)
        if U.is_triv_fib(t)
    ]
    coproducts = None
    checked = 0
    for t1 in tfibs:
        for t2 in tfibs:
            sources = coproduct(t1.source, t2.source)
            targets = coproduct(t1.target, t2.target)
            both = sources.mediator(
                compose(t1, targets.left), compose(t2, targets.right)
            )
            checked += 1
            if not in_inj(both, I, memo=U._rlp_memo):
                coproducts = VerdictReport(
                    "tfib-coproducts",
                    Verdict.NO,
                    params,
                    {"first": t1, "second": t2, "coproduct": both},
                )
                break
        if coproducts is not None:
            break
    if coproducts is None:
        coproducts = VerdictReport(
            "tfib-coproducts",
            Verdict.YES if not U.all_undecided() else Verdict.INCONCLUSIVE,
            params,
            None,
            diagnostics={"pairs_checked": checked},
        )

    comparisons = None
    checked = 0
    inconclusive = 0
    for k, i in enumerate(I.maps):
        for X in U.objects:
            for u in U.hom(i.source, X):
                po1 = pushout(u, i)
                for Y in U.objects:
                    for g in U.hom(X, Y):
                        if not U.is_triv_fib(g):
                            continue
                        po2 = pushout(compose(u, g), i)
                        induced = po1.mediator(
                            compose(g, po2.left), po2.right
                        )
                        checked += 1
                        v = we(induced)
                        if v is Verdict.NO:
                            comparisons = VerdictReport(
                                "pushout-comparisons",
                                Verdict.NO,
                                params,
                                {
                                    "generator": k,
                                    "attach": u,
                                    "trivial-fibration": g,
                                    "comparison": induced,
                                },
                            )
                            break
                        if v is Verdict.INCONCLUSIVE:
                            inconclusive += 1
                    if comparisons is not None:
                        break
                if comparisons is not None:
                    break
            if comparisons is not None:
                break
        if comparisons is not None:
            break
    if comparisons is None:
        comparisons = VerdictReport(
            "pushout-comparisons",
            Verdict.INCONCLUSIVE if inconclusive else Verdict.YES,
            params,
            None,
            diagnostics={"comparisons_checked": checked},
        )
    return _combine("properness-condition", params, [coproducts, comparisons])


def _conj(a: Verdict, b: Verdict) -> Verdict:
    if a is Verdict.NO or b is Verdict.NO:
        return Verdict.NO
    if a is Verdict.YES and b is Verdict.YES:
        return Verdict.YES
    return Verdict.INCONCLUSIVE


def verify_axioms(
    I: GeneratingSet,
    J: GeneratingSet,
    we: WeClass,
    U: BoundedUniverse,
    fuel: int | None = None,
    ctx: HomotopyContext | None = None,
) -> VerdictReport:
    """Bounded run over the five closure conditions a minimal structure
    needs.  A1 is a finiteness note; the rest quantify over U."""
    if fuel is None:
        fuel = U.fuel
    if ctx is None:
        ctx = HomotopyContext(I, fuel)
    params = {
        "generators": I.label,
        "trivial-generators": J.label,
        "weak-equivalences": we.label,
        **U.describe(),
    }
    subchecks = [
        VerdictReport(
            "A1-permits-factorizations",
            Verdict.YES,
            params,
            None,
            diagnostics={
                "note": "finite carriers; every factorization run is fuel-guarded"
            },
        )
    ]

    # A2: two-out-of-three
    failure = None
    skipped = 0
    pairs = 0
    for X in U.objects:
        for Y in U.objects:
            for f in U.hom(X, Y):
                vf = we(f)
                for Z in U.objects:
                    for g in U.hom(Y, Z):
                        pairs += 1
                        vg = we(g)
                        h = compose(f, g)
                        vh = we(h)
                        trio = (vf, vg, vh)
                        if Verdict.INCONCLUSIVE in trio:
                            skipped += 1
                            continue
                        if sum(v is Verdict.YES for v in trio) == 2:
                            failure = {
                                "first": f,
                                "second": g,
                                "composite": h,
                                "memberships": [v.name for v in trio],
                            }
                            break
                    if failure:
                        break
                if failure:
                    break
            if failure:
                break
        if failure:
            break
    subchecks.append(
        VerdictReport(
            "A2-two-out-of-three",
            Verdict.NO
            if failure
            else (Verdict.INCONCLUSIVE if skipped else Verdict.YES),
            params,
            failure,
            diagnostics={"composable_pairs": pairs, "skipped": skipped},
        )
    )

    # A2: retract closure.  Only a pair with g in the class and f outside
    # it can violate closure, so the retract search runs on those pairs.
    failure = None
    skipped = 0
    searched = 0
    verdicts = [(f, we(f)) for f in U.all_maps()]
    skipped += sum(v is Verdict.INCONCLUSIVE for _, v in verdicts)
    for f, vf in verdicts:
        if vf is not Verdict.NO:
            continue
        for g, vg in verdicts:
            if vg is not Verdict.YES:
                continue
            if not U.is_object_retract(f.source, g.source):
                continue
            if not U.is_object_retract(f.target, g.target):
                continue
            searched += 1
            witness = is_retract_of(f, g)
            if witness is not None:
                failure = {"map": f, "of": g}
                break
        if failure:
            break
    subchecks.append(
        VerdictReport(
            "A2-retracts",
            Verdict.NO
            if failure
            else (Verdict.INCONCLUSIVE if skipped else Verdict.YES),
            params,
            failure,
            diagnostics={"pairs_searched": searched, "skipped": skipped},
        )
    )

    # A3: trivial fibrations are weak equivalences
    failure = None
    skipped = 0
    count = 0
    for f in U.all_maps():
        if not U.is_triv_fib(f):
            continue
        count += 1
        v = we(f)
        if v is Verdict.NO:
            failure = {"map": f}
            break
        if v is Verdict.INCONCLUSIVE:
            skipped += 1
    subchecks.append(
        VerdictReport(
            "A3-trivial-fibrations",
            Verdict.NO
            if failure
            else (Verdict.INCONCLUSIVE if skipped else Verdict.YES),
            params,
            failure,
            diagnostics={"trivial_fibrations": count, "skipped": skipped},
        )
    )

    # A4: pushouts of J-maps are trivial cofibrations
    failure = None
    skipped = 0
    count = 0
    for jk, j in enumerate(J.maps):
        for X in U.objects:
            for u in U.hom(j.source, X):
                pushed = pushout(j, u).right
                count += 1
                v = _conj(we(pushed), U.is_cof(pushed))
                if v is Verdict.NO:
                    failure = {"j-generator": jk, "along": u, "pushed": pushed}
                    break
                if v is Verdict.INCONCLUSIVE:
                    skipped += 1
            if failure:
                break
        if failure:
            break
    subchecks.append(
        VerdictReport(
            "A4-pushouts-of-j",
            Verdict.NO
            if failure
            else (Verdict.INCONCLUSIVE if skipped else Verdict.YES),
            params,
            failure,
            diagnostics={"pushouts_checked": count, "skipped": skipped},
        )
    )

    # A5, first disjunct: J-injective weak equivalences are I-injective.
    # The other disjunct needs I-cof inter we inside J-cof; not evaluated.
    failure = None
    skipped = 0
    count = 0
    for f in U.all_maps():
        if not has_rlp(f, J.maps, memo=U._rlp_memo):
            continue
        v = we(f)
        if v is Verdict.INCONCLUSIVE:
            skipped += 1
            continue
        if v is not Verdict.YES:
            continue
        count += 1
        if not U.is_triv_fib(f):
            failure = {"map": f}
            break
    subchecks.append(
        VerdictReport(
            "A5-first-disjunct",
            Verdict.NO
            if failure
            else (Verdict.INCONCLUSIVE if skipped else Verdict.YES),
            params,
            failure,
            diagnostics={
                "jinj_weak_equivalences": count,
                "skipped": skipped,
                "second-disjunct": "not-evaluated",
            },
        )
    )

    return _combine("axioms", params, subchecks)


@dataclass(frozen=True)
class MapClassification:
    map: PresheafMap
    cofibration: Verdict
    fibration: Verdict
    weak_equivalence: Verdict
    trivial_cofibration: Verdict
    trivial_fibration: Verdict
    pure: Verdict
    strong_deformation_retract: Verdict
    # min-triv-cof biconditional on cofibrations; None when not applicable
    consistent: bool | None

    def as_dict(self) -> dict:
        return {
            "cofibration": self.cofibration,
            "fibration": self.fibration,
            "weak-equivalence": self.weak_equivalence,
            "trivial-cofibration": self.trivial_cofibration,
            "trivial-fibration": self.trivial_fibration,
            "pure": self.pure,
            "strong-deformation-retract": self.strong_deformation_retract,
            "sdr-consistent": self.consistent,
        }


def classify_map(
    f: PresheafMap,
    I: GeneratingSet,
    U: BoundedUniverse,
    fuel: int | None = None,
    ctx: HomotopyContext | None = None,
) -> MapClassification:
    """All membership verdicts for one map, with the trivial-cofibration
    versus strong-deformation-retract cross-check."""
    if fuel is None:
        fuel = U.fuel
    if ctx is None:
        ctx = HomotopyContext(I, fuel)
    cof = U.is_cof(f)
    weq = is_weak_equivalence(f, I, fuel, ctx).verdict
    tfib = Verdict.YES if U.is_triv_fib(f) else Verdict.NO
    try:
        J = build_jset(I, fuel, ctx)
        fib = Verdict.YES if has_rlp(f, J.maps, memo=U._rlp_memo) else Verdict.NO
    except FuelExhausted:
        fib = Verdict.INCONCLUSIVE
    try:
        sdr = is_strong_deformation_retract(f, I, fuel).verdict
    except FuelExhausted:
        sdr = Verdict.INCONCLUSIVE
    pure = is_pure(f, U, fuel).verdict
    tcof = _conj(cof, weq)
    if cof is Verdict.YES and Verdict.INCONCLUSIVE not in (tcof, sdr):
        consistent = tcof is sdr
    else:
        consistent = None
    return MapClassification(f, cof, fib, weq, tcof, tfib, pure, sdr, consistent)


def enumerate_weak_equivalences(
    I: GeneratingSet,
    U: BoundedUniverse,
    fuel: int | None = None,
    ctx: HomotopyContext | None = None,
) -> VerdictReport:
    """Every map between universe objects in the decided class, as
    witnesses, in enumeration order."""
    if fuel is None:
        fuel = U.fuel
    if ctx is None:
        ctx = HomotopyContext(I, fuel)
    we = WeClass.from_generators(I, fuel, ctx)
    params = {"generators": I.label, **U.describe()}
    found = []
    undecided = 0
    total = 0
    for f in U.all_maps():
        total += 1
        v = we(f)
        if v is Verdict.YES:
            found.append(f)
        elif v is Verdict.INCONCLUSIVE:
            undecided += 1
    return VerdictReport(
        "enumerate-we",
        Verdict.INCONCLUSIVE if undecided else Verdict.YES,
        params,
        None,
        witnesses=tuple(found),
        diagnostics={"maps_considered": total, "undecided": undecided},
    )
