"""Lifting machinery, complement classes, the transfer correspondence,
factoring, and (co)reflectivity."""

from __future__ import annotations

from itertools import combinations

import pytest

from latfac import (
    Relation,
    TransferSystem,
    dual_fs,
    dual_lattice,
    enumerate_fac,
    enumerate_transfer,
    factor,
    from_transfer,
    is_coreflective,
    is_disklike,
    is_reflective,
    is_saturated,
    left_complement,
    lifts,
    make_standard,
    right_complement,
    to_transfer,
    validate_fs,
)
from latfac.errors import NotARelation, NotATransferSystem, NotComparable
from latfac.relations import pair_space

from oracles import criterion_lattices, lattices_up_to_5

CHAIN2 = make_standard("chain", 2)
SQUARE = make_standard("grid", 1, 1)


def rel(lat, *pairs):
    return Relation.from_pairs(lat, pairs)


# --- lifting -------------------------------------------------------------------


def test_identity_lifts_against_everything():
    ps = pair_space(CHAIN2)
    for x in CHAIN2.elements():
        for p in ps.pairs:
            assert lifts(CHAIN2, (x, x), p)
            assert lifts(CHAIN2, p, (x, x))


def test_lift_examples_on_the_chain():
    assert lifts(CHAIN2, (1, 2), (0, 1))
    assert not lifts(CHAIN2, (0, 1), (0, 1))
    assert not lifts(CHAIN2, (0, 2), (0, 2))


def test_lifts_rejects_non_relations():
    with pytest.raises(NotARelation):
        lifts(CHAIN2, (2, 0), (0, 1))
    with pytest.raises(NotARelation):
        lifts(SQUARE, (0, 3), (1, 2))


# --- complements ------------------------------------------------------------------


def test_left_complement_of_everything_is_identities():
    ps = pair_space(CHAIN2)
    assert left_complement(CHAIN2, Relation(CHAIN2, ps.full_mask)).mask == 0


def test_left_complement_of_nothing_is_everything():
    ps = pair_space(CHAIN2)
    assert left_complement(CHAIN2, Relation(CHAIN2, 0)).mask == ps.full_mask


def test_left_complement_example():
    out = left_complement(CHAIN2, rel(CHAIN2, (0, 1), (0, 2)))
    assert out.pairs == ((1, 2),)


def test_complements_match_the_lift_definition():
    # brute-force the definition on every small lattice
    for _, lat in lattices_up_to_5():
        ps = pair_space(lat)
        for mask in range(min(ps.full_mask + 1, 256)):
            m = Relation(lat, mask)
            expected_left = {
                i
                for i in ps.pairs
                if all(lifts(lat, i, p) for p in ps.pairs_of(mask))
            }
            assert set(left_complement(lat, m).pairs) == expected_left
            expected_right = {
                p
                for p in ps.pairs
                if all(lifts(lat, i, p) for i in ps.pairs_of(mask))
            }
            assert set(right_complement(lat, m).pairs) == expected_right


def test_galois_property_of_complements():
    # N <= leftcomp(M) exactly when M <= rightcomp(N), all pairs of relations
    for lat in (CHAIN2, make_standard("chain", 3), SQUARE):
        ps = pair_space(lat)
        if ps.K > 6:
            continue
        for m in range(ps.full_mask + 1):
            lc = left_complement(lat, Relation(lat, m)).mask
            for nmask in range(ps.full_mask + 1):
                rc = right_complement(lat, Relation(lat, nmask)).mask
                assert (nmask | lc == lc) == (m | rc == rc)


def test_complements_are_antitone_and_inflationary():
    ps = pair_space(SQUARE)
    for m in range(ps.full_mask + 1):
        rm = Relation(SQUARE, m)
        lc = left_complement(SQUARE, rm)
        rc = right_complement(SQUARE, rm)
        assert m | right_complement(SQUARE, lc).mask == right_complement(SQUARE, lc).mask
        assert m | left_complement(SQUARE, rc).mask == left_complement(SQUARE, rc).mask
        bigger = Relation(SQUARE, m | 1)
        assert left_complement(SQUARE, bigger).mask | lc.mask == lc.mask


# --- validation --------------------------------------------------------------------


def test_extreme_factorization_systems_validate():
    ps = pair_space(CHAIN2)
    assert validate_fs(CHAIN2, Relation(CHAIN2, 0), Relation(CHAIN2, ps.full_mask)) is True
    assert validate_fs(CHAIN2, Relation(CHAIN2, ps.full_mask), Relation(CHAIN2, 0)) is True


def test_chain_example_validates():
    verdict = validate_fs(
        CHAIN2, rel(CHAIN2, (1, 2)), rel(CHAIN2, (0, 1), (0, 2))
    )
    assert verdict is True


def test_complement_mismatch_is_reported():
    verdict = validate_fs(CHAIN2, rel(CHAIN2), rel(CHAIN2, (0, 1)))
    assert not verdict
    assert verdict.kind == "complement-mismatch"


# --- the transfer correspondence ------------------------------------------------------


def test_from_transfer_of_empty_is_the_minimal_shape():
    ps = pair_space(CHAIN2)
    fs = from_transfer(TransferSystem(CHAIN2, 0))
    assert fs.left.mask == ps.full_mask
    assert fs.right.rel == 0


def test_from_transfer_matches_complement_example():
    fs = from_transfer(TransferSystem.from_pairs(CHAIN2, [(0, 1), (0, 2)]))
    assert fs.left.pairs == ((1, 2),)


def test_from_transfer_rejects_invalid_relations():
    with pytest.raises(NotATransferSystem):
        from_transfer(TransferSystem(CHAIN2, pair_space(CHAIN2).bit(0, 2)))


def test_roundtrip_on_every_system():
    for name, lat in criterion_lattices():
        systems = enumerate_transfer(lat)
        for s in systems:
            fs = from_transfer(s)
            assert to_transfer(fs).rel == s.rel
            assert validate_fs(lat, fs.left, fs.right.relation) is True


def test_enumerate_fac_is_ordered_like_transfer():
    systems = enumerate_transfer(SQUARE)
    facs = enumerate_fac(SQUARE)
    assert [f.right.rel for f in facs] == [s.rel for s in systems]
    assert len({f.key for f in facs}) == len(facs)


def test_order_correspondence():
    facs = enumerate_fac(SQUARE)
    for a, b in combinations(facs, 2):
        right_le = a.right.rel | b.right.rel == b.right.rel
        left_ge = b.left.mask | a.left.mask == a.left.mask
        assert right_le == left_ge
        assert (a <= b) == right_le


# --- factoring --------------------------------------------------------------------


def test_factor_fixes_endpoints():
    fs = from_transfer(TransferSystem.from_pairs(CHAIN2, [(0, 1), (0, 2)]))
    for x in CHAIN2.elements():
        assert factor(fs, x, x) == x


def test_factor_examples():
    fs = from_transfer(TransferSystem.from_pairs(CHAIN2, [(0, 1), (0, 2)]))
    assert factor(fs, 0, 2) == 0
    assert factor(fs, 1, 2) == 2


def test_factor_requires_comparability():
    fs = from_transfer(TransferSystem(SQUARE, 0))
    with pytest.raises(NotComparable):
        factor(fs, 1, 2)


def test_factor_splits_through_both_classes_everywhere():
    for name, lat in criterion_lattices():
        for fs in enumerate_fac(lat):
            for x in lat.elements():
                for y in lat.elements():
                    if not lat.leq(x, y):
                        continue
                    z = factor(fs, x, y)
                    assert fs.left.contains(x, z)
                    assert fs.right.contains(z, y)


# --- reflectivity -------------------------------------------------------------------


def test_extreme_systems_are_reflective_and_coreflective():
    for fs in (
        from_transfer(TransferSystem(CHAIN2, 0)),
        from_transfer(TransferSystem(CHAIN2, pair_space(CHAIN2).full_mask)),
    ):
        assert is_reflective(fs)
        assert is_coreflective(fs)


def test_square_has_seven_reflective_and_seven_coreflective():
    facs = enumerate_fac(SQUARE)
    assert sum(is_reflective(f) for f in facs) == 7
    assert sum(is_coreflective(f) for f in facs) == 7


def test_reflective_iff_disklike_and_coreflective_iff_saturated():
    for name, lat in criterion_lattices():
        for fs in enumerate_fac(lat):
            assert is_reflective(fs) == is_disklike(fs.right), name
            assert is_coreflective(fs) == is_saturated(fs.right), name


# --- duality -----------------------------------------------------------------------


def test_dual_fs_is_an_order_reversing_bijection():
    for name, lat in criterion_lattices():
        facs = enumerate_fac(lat)
        dual = dual_lattice(lat)
        dual_keys = {f.key for f in enumerate_fac(dual)}
        mapped = [dual_fs(f) for f in facs]
        assert {f.key for f in mapped} == dual_keys
        for (a, da), (b, db) in combinations(zip(facs, mapped), 2):
            forward = a.right.rel | b.right.rel == b.right.rel
            backward = db.right.rel | da.right.rel == da.right.rel
            assert forward == backward
        for f, df in zip(facs, mapped):
            assert is_reflective(f) == is_coreflective(df)
            assert is_coreflective(f) == is_reflective(df)


def test_dual_fs_is_involutive():
    for fs in enumerate_fac(SQUARE):
        assert dual_fs(dual_fs(fs)).key == fs.key


def test_fs_json_record():
    fs = from_transfer(TransferSystem.from_pairs(CHAIN2, [(0, 1), (0, 2)]))
    doc = fs.as_dict()
    assert doc == {"left": [[1, 2]], "right": [[0, 1], [0, 2]]}
