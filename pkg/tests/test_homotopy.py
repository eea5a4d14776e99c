"""Relative cylinders, homotopies, retracts, and path objects."""

import itertools

import pytest

from minmodel.analyzer import build_jset
from minmodel.colimits import initial_map
from minmodel.errors import (
    FuelExhausted,
    IncompatibleOnRelativePart,
    NonComposable,
)
from minmodel.factorization import Verdict
from minmodel.homotopy import (
    HomotopyContext,
    cylinder,
    homotopic,
    homotopic_cross_check,
    is_deformation_retract,
    is_strong_deformation_retract,
    path_object,
    right_homotopic,
)
from minmodel.presheaf import compose, identity_map, is_mono

from helpers import fs, fsmap, gph, gph_obj_to_oracle, i1_set, i2_set, ig_set

I1 = i1_set()
I2 = i2_set()
IG = ig_set()

POOL2 = [
    fsmap(m, n, imgs)
    for m in range(3)
    for n in range(3)
    for imgs in itertools.product(range(n), repeat=m)
]


def test_absolute_cylinder_over_the_two_point_set():
    cyl = cylinder(initial_map(fs(2)), I1)
    assert cyl.apex.total_size() == 4
    assert cyl.provenance.log == ()
    assert compose(cyl.incl0, cyl.collapse).is_identity()
    assert compose(cyl.incl1, cyl.collapse).is_identity()
    assert cyl.incl0 != cyl.incl1


def test_cylinder_collapses_over_the_larger_set():
    cyl = cylinder(initial_map(fs(1)), I2)
    # the fold of 1 + 1 is not injective, so one attachment of the
    # collapse generator contracts the pair to a point
    assert cyl.apex.total_size() == 1
    assert len(cyl.provenance.log) == 1
    assert cyl.incl0 == cyl.incl1


def test_cylinder_over_the_spine_inclusion():
    cyl = cylinder(IG.maps[1], IG)
    assert gph_obj_to_oracle(cyl.apex) == (2, ((0, 1), (0, 1)))
    assert cyl.provenance.log == ()
    assert compose(cyl.incl0, cyl.collapse).is_identity()
    assert compose(cyl.incl1, cyl.collapse).is_identity()


def test_cylinder_laws_hold_on_every_relative_part():
    for gens in (I1, I2):
        for rel in POOL2:
            cyl = cylinder(rel, gens)
            assert compose(cyl.incl0, cyl.collapse).is_identity()
            assert compose(cyl.incl1, cyl.collapse).is_identity()
            assert compose(rel, cyl.incl0) == compose(rel, cyl.incl1)


def test_homotopy_is_total_over_the_point_inclusion():
    for f0 in POOL2:
        for f1 in POOL2:
            if f0.source != f1.source or f0.target != f1.target:
                continue
            got = homotopic(f0, f1, None, I1)
            assert got is not None, (f0, f1)
            assert compose(got.cylinder.incl0, got.map) == f0
            assert compose(got.cylinder.incl1, got.map) == f1


def test_homotopy_degenerates_to_equality_over_the_larger_set():
    for f0 in POOL2:
        for f1 in POOL2:
            if f0.source != f1.source or f0.target != f1.target:
                continue
            got = homotopic(f0, f1, None, I2)
            assert (got is not None) == (f0 == f1), (f0, f1)


def test_relative_homotopy_requires_agreement_on_the_relative_part():
    iota0 = fsmap(1, 2, (0,))
    iota1 = fsmap(1, 2, (1,))
    f = fsmap(2, 2, (0, 1))
    g = fsmap(2, 2, (0, 0))
    # f and g agree on the first point only
    assert homotopic(f, g, iota0, I1) is not None
    with pytest.raises(IncompatibleOnRelativePart):
        homotopic(f, g, iota1, I1)
    with pytest.raises(NonComposable):
        homotopic(f, g, fsmap(1, 3, (0,)), I1)
    with pytest.raises(NonComposable):
        homotopic(f, fsmap(1, 2, (0,)), None, I1)


def test_cross_check_agrees_on_small_pairs():
    for gens in (I1, I2):
        for f0 in POOL2:
            for f1 in POOL2:
                if f0.source != f1.source or f0.target != f1.target:
                    continue
                witness, agree = homotopic_cross_check(f0, f1, None, gens)
                assert agree


def test_point_inclusion_is_a_strong_deformation_retract():
    iota0 = fsmap(1, 2, (0,))
    res = is_strong_deformation_retract(iota0, I1)
    assert res.verdict is Verdict.YES
    assert compose(iota0, res.retraction).is_identity()
    got = res.homotopy
    assert compose(got.cylinder.incl0, got.map) == compose(res.retraction, iota0)
    assert compose(got.cylinder.incl1, got.map).is_identity()
    weak = is_deformation_retract(iota0, I1)
    assert weak.verdict is Verdict.YES


def test_retract_searches_that_must_fail():
    # no retraction exists out of the empty source
    res = is_deformation_retract(fsmap(0, 1, ()), I1)
    assert res.verdict is Verdict.NO and res.retraction is None
    # over the larger set the homotopy is equality, so a non-iso cannot
    # deformation retract
    res = is_deformation_retract(fsmap(1, 2, (0,)), I2)
    assert res.verdict is Verdict.NO


def test_path_object_over_the_point_is_trivial():
    J1 = build_jset(I1)
    path = path_object(fs(1), J1)
    assert path.apex.total_size() == 1
    assert compose(path.into, path.proj0).is_identity()
    assert compose(path.into, path.proj1).is_identity()


def test_path_object_laws_on_the_two_point_set():
    J1 = build_jset(I1)
    path = path_object(fs(2), J1)
    assert compose(path.into, path.proj0).is_identity()
    assert compose(path.into, path.proj1).is_identity()


def test_right_homotopy_agrees_with_left_on_small_absolute_pairs():
    for gens in (I1, I2):
        J = build_jset(gens)
        paths = {}
        for f0 in POOL2:
            for f1 in POOL2:
                if f0.source != f1.source or f0.target != f1.target:
                    continue
                left = homotopic(f0, f1, None, gens) is not None
                Z = f0.target
                if Z not in paths:
                    paths[Z] = path_object(Z, J)
                right = (
                    right_homotopic(f0, f1, None, J, path=paths[Z]) is not None
                )
                assert left == right, (gens.label, f0, f1)


def test_right_homotopy_witness_projects_to_the_ends():
    J1 = build_jset(I1)
    f0 = fsmap(1, 2, (0,))
    f1 = fsmap(1, 2, (1,))
    got = right_homotopic(f0, f1, None, J1)
    assert got is not None
    assert compose(got.map, got.path.proj0) == f0
    assert compose(got.map, got.path.proj1) == f1
    same = right_homotopic(f0, f0, None, J1)
    assert same is not None


def test_fuel_exhaustion_raises_in_cylinder_construction():
    with pytest.raises(FuelExhausted):
        cylinder(initial_map(fs(1)), I2, fuel=0)
    with pytest.raises(FuelExhausted):
        homotopic(fsmap(1, 1, (0,)), fsmap(1, 1, (0,)), None, I2, fuel=0)


def test_context_caches_cylinders_and_verdicts():
    ctx = HomotopyContext(I1, 64)
    rel = initial_map(fs(1))
    assert ctx.cylinder(rel) is ctx.cylinder(rel)
    f0 = fsmap(1, 2, (0,))
    f1 = fsmap(1, 2, (1,))
    first = ctx.homotopic(f0, f1)
    assert first is ctx.homotopic(f0, f1)
    oracle = ctx.oracle(rel)
    assert oracle.decide(f0, f1) is not None
    assert oracle.decide(f0, fsmap(1, 3, (0,))) is None
    assert ctx.absolute_oracle(fs(1)).decide(f0, f1) is not None
