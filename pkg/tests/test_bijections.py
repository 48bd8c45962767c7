"""Submonoids, the Galois adjunction, monads, and model structures."""

from __future__ import annotations

import pytest

from latfac import (
    Endo,
    ModelStructure,
    Relation,
    Submonoid,
    TransferSystem,
    enumerate_fac,
    enumerate_submonoids,
    enumerate_transfer,
    fac_to_submonoid,
    from_transfer,
    galois_check,
    is_comonad,
    is_coreflective,
    is_model_structure,
    is_monad,
    is_reflective,
    is_saturated,
    make_cofibrant,
    make_fibrant,
    make_standard,
    maximal_fs,
    minimal_fs,
    submonoid_to_fac,
    three_for_two,
    weak_composite,
)
from latfac.errors import (
    BadParams,
    EnumerationLimitExceeded,
    NotASubmonoid,
    NotCoreflective,
    NotReflective,
)
from latfac.relations import pair_space

from oracles import brute_force_submonoids, criterion_lattices, lattices_up_to_5, powerset

CHAIN2 = make_standard("chain", 2)
SQUARE = make_standard("grid", 1, 1)
A, B = 1, 2  # the square's incomparable middles


# --- submonoids -------------------------------------------------------------------


@pytest.mark.parametrize(
    "kind,params,op,count",
    [
        ("chain", (2,), "meet", 4),
        ("grid", (1, 1), "join", 7),
        ("boolean", (2,), "meet", 7),
    ],
)
def test_submonoid_counts(kind, params, op, count):
    lat = make_standard(kind, *params)
    assert len(enumerate_submonoids(lat, op)) == count


def test_submonoids_match_brute_force():
    for name, lat in lattices_up_to_5():
        for op in ("meet", "join"):
            got = {s.members for s in enumerate_submonoids(lat, op)}
            assert got == brute_force_submonoids(lat, op), (name, op)


def test_submonoid_counts_match_on_medium_lattices():
    for lat in (make_standard("boolean", 3), make_standard("grid", 2, 2)):
        for op in ("meet", "join"):
            got = {s.members for s in enumerate_submonoids(lat, op)}
            assert got == brute_force_submonoids(lat, op)


def test_meet_join_submonoid_duality():
    from latfac import dual_lattice

    for name, lat in criterion_lattices():
        meet_count = len(enumerate_submonoids(lat, "meet"))
        join_on_dual = len(enumerate_submonoids(dual_lattice(lat), "join"))
        assert meet_count == join_on_dual, name


def test_submonoid_validation():
    with pytest.raises(NotASubmonoid):
        Submonoid.from_members(SQUARE, "meet", {A, B, 3})
    with pytest.raises(NotASubmonoid):
        Submonoid.from_members(CHAIN2, "meet", {0, 1})
    with pytest.raises(BadParams):
        Submonoid.from_members(CHAIN2, "and", {2})
    with pytest.raises(EnumerationLimitExceeded):
        enumerate_submonoids(SQUARE, "meet", limit=2)


# --- the submonoid bijection ---------------------------------------------------------


def test_fac_to_submonoid_examples():
    everything = from_transfer(
        TransferSystem(CHAIN2, pair_space(CHAIN2).full_mask)
    )
    assert fac_to_submonoid(everything, "reflective").members == {0, 1, 2}
    fs = from_transfer(TransferSystem.from_pairs(CHAIN2, [(0, 1), (0, 2)]))
    assert fac_to_submonoid(fs, "reflective").members == {0, 2}
    with pytest.raises(NotReflective):
        fac_to_submonoid(from_transfer(TransferSystem.from_pairs(CHAIN2, [(0, 1)])), "reflective")
    with pytest.raises(NotCoreflective):
        fac_to_submonoid(
            from_transfer(TransferSystem.from_pairs(CHAIN2, [(0, 1), (0, 2)])),
            "coreflective",
        )


def test_submonoid_to_fac_examples():
    fs = submonoid_to_fac(Submonoid.from_members(CHAIN2, "meet", {2}))
    assert fs.right.rel == 0
    fs = submonoid_to_fac(Submonoid.from_members(SQUARE, "meet", {A, 3}))
    assert set(fs.right.pairs) == {(A, 3), (0, B)}


def test_submonoid_roundtrips():
    for name, lat in criterion_lattices():
        for sub in enumerate_submonoids(lat, "meet"):
            fs = submonoid_to_fac(sub)
            assert is_reflective(fs)
            assert fac_to_submonoid(fs, "reflective").members == sub.members
        for sub in enumerate_submonoids(lat, "join"):
            fs = submonoid_to_fac(sub)
            assert is_coreflective(fs)
            assert fac_to_submonoid(fs, "coreflective").members == sub.members


def test_reflective_systems_biject_with_meet_submonoids():
    for name, lat in criterion_lattices():
        reflective = [f for f in enumerate_fac(lat) if is_reflective(f)]
        subs = enumerate_submonoids(lat, "meet")
        assert len(reflective) == len(subs), name
        mapped = {fac_to_submonoid(f, "reflective").members for f in reflective}
        assert mapped == {s.members for s in subs}, name


# --- the Galois adjunction ------------------------------------------------------------


def test_galois_trivial_subset():
    for fs in enumerate_fac(CHAIN2):
        assert galois_check(CHAIN2, frozenset(), fs)


def test_galois_specific_instances():
    everything = from_transfer(
        TransferSystem(CHAIN2, pair_space(CHAIN2).full_mask)
    )
    identities = from_transfer(TransferSystem(CHAIN2, 0))
    assert galois_check(CHAIN2, {0}, everything)
    assert galois_check(CHAIN2, {0}, identities)


def test_galois_exhaustive_on_small_lattices():
    for name, lat in lattices_up_to_5():
        if lat.n > 4:
            continue
        subsets = [frozenset(s) for s in powerset(lat.elements())]
        for fs in enumerate_fac(lat):
            for s in subsets:
                assert galois_check(lat, s, fs), (name, sorted(s))


# --- monads -----------------------------------------------------------------------


def test_monad_examples():
    assert is_monad(CHAIN2, Endo(CHAIN2, (0, 1, 2)))
    assert is_monad(CHAIN2, Endo(CHAIN2, (2, 2, 2)))
    chain1 = make_standard("chain", 1)
    assert not is_monad(chain1, Endo(chain1, (0, 0)))
    assert is_comonad(chain1, Endo(chain1, (0, 0)))
    assert not is_monad(CHAIN2, Endo(CHAIN2, (1, 0, 2)))  # not monotone


def test_monads_are_exactly_closure_operators():
    from latfac import classify, enumerate_monotone_endos

    for lat in (CHAIN2, SQUARE):
        for endo in enumerate_monotone_endos(lat):
            assert is_monad(lat, endo) == classify(endo).is_closure
            assert is_comonad(lat, endo) == classify(endo).is_interior


# --- model structures -----------------------------------------------------------------


def test_make_fibrant_of_the_minimal_system():
    fs = minimal_fs(CHAIN2)
    model = make_fibrant(fs)
    assert model.weak.mask == 0
    assert is_model_structure(model)


def test_make_fibrant_chain_example():
    fs = from_transfer(TransferSystem.from_pairs(CHAIN2, [(1, 2)]))
    model = make_fibrant(fs)
    assert model.weak.pairs == ((1, 2),)
    assert is_model_structure(model)


def test_make_fibrant_requires_coreflectivity():
    fs = from_transfer(TransferSystem.from_pairs(CHAIN2, [(0, 1), (0, 2)]))
    with pytest.raises(NotCoreflective):
        make_fibrant(fs)
    assert is_reflective(fs)
    model = make_cofibrant(fs)
    assert model.weak.mask == fs.left.mask
    assert is_model_structure(model)
    with pytest.raises(NotReflective):
        make_cofibrant(from_transfer(TransferSystem.from_pairs(CHAIN2, [(0, 1)])))


def test_model_structure_bijection_on_the_square():
    facs = enumerate_fac(SQUARE)
    coreflective = [f for f in facs if is_coreflective(f)]
    models = [make_fibrant(f) for f in coreflective]
    assert len(models) == 7
    assert all(is_model_structure(m) for m in models)
    assert len({m.lower.key for m in models}) == 7
    # every valid fibrant-shaped candidate comes from a coreflective system
    top_fs = maximal_fs(SQUARE)
    for f in facs:
        candidate = ModelStructure(f, top_fs, weak_composite(f, top_fs))
        assert is_model_structure(candidate) == is_coreflective(f)


def test_is_model_structure_cases():
    saturated = from_transfer(TransferSystem.from_pairs(CHAIN2, [(1, 2)]))
    same = ModelStructure(saturated, saturated, weak_composite(saturated, saturated))
    assert is_model_structure(same)

    lower = from_transfer(TransferSystem.from_pairs(CHAIN2, [(0, 1), (0, 2)]))
    bad = ModelStructure(lower, maximal_fs(CHAIN2), weak_composite(lower, maximal_fs(CHAIN2)))
    assert bad.weak.pairs == ((0, 1), (0, 2))
    assert not is_model_structure(bad)

    wide = ModelStructure(
        minimal_fs(CHAIN2),
        maximal_fs(CHAIN2),
        weak_composite(minimal_fs(CHAIN2), maximal_fs(CHAIN2)),
    )
    assert is_model_structure(wide)
    # the composite of identity-only acyclic classes is just the identities
    assert wide.weak.mask == 0


def test_is_model_structure_rejects_wrong_weak_class():
    fs = from_transfer(TransferSystem.from_pairs(CHAIN2, [(1, 2)]))
    model = ModelStructure(fs, maximal_fs(CHAIN2), Relation(CHAIN2, 0))
    assert not is_model_structure(model)


def test_three_for_two_on_transfer_systems_is_saturation():
    for name, lat in criterion_lattices():
        for s in enumerate_transfer(lat):
            assert three_for_two(lat, s.relation) == is_saturated(s), name
