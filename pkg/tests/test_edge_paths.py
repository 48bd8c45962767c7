"""Defensive paths: fallback searches, formula cross-checks, limits."""

from __future__ import annotations

import pytest

import latfac.transfer as transfer_mod
from latfac import (
    FactorizationSystem,
    Relation,
    SaturatedCover,
    TransferSystem,
    cocharacteristic,
    cover_of,
    enumerate_monotone_endos,
    enumerate_saturated,
    make_standard,
    pair_space,
    ts_of,
)
from latfac.errors import (
    EnumerationLimitExceeded,
    FormulaMismatch,
    MaxNotUnique,
)

SQUARE = make_standard("grid", 1, 1)
CHAIN2 = make_standard("chain", 2)


def test_ts_of_fallback_search(monkeypatch):
    # force the transitive-closure candidate to be wrong: the fallback must
    # recover the right system by searching the saturated universe
    monkeypatch.setattr(transfer_mod, "_transitive_mask", lambda lat, mask: 0 if mask else 0)
    for system in enumerate_saturated(SQUARE):
        q = cover_of(system)
        assert ts_of(q).rel == system.rel


def test_cocharacteristic_formula_mismatch():
    ps = pair_space(CHAIN2)
    # right class says the slice is {1, 2}; an empty left class cannot agree
    broken = FactorizationSystem(
        CHAIN2,
        Relation(CHAIN2, 0),
        TransferSystem(CHAIN2, ps.bit(1, 2)),
    )
    with pytest.raises(FormulaMismatch):
        cocharacteristic(broken, cross_check=True)
    # without the cross-check the right-class formula alone still answers
    assert cocharacteristic(broken).table == (1, 1, 2)


def test_cocharacteristic_max_not_unique():
    ps = pair_space(SQUARE)
    # left relates the bottom to both incomparable middles: no maximum
    broken = FactorizationSystem(
        SQUARE,
        Relation(SQUARE, ps.bit(0, 1) | ps.bit(0, 2)),
        TransferSystem(SQUARE, 0),
    )
    with pytest.raises(MaxNotUnique):
        cocharacteristic(broken, cross_check=True)


def test_monotone_endo_limit():
    with pytest.raises(EnumerationLimitExceeded):
        enumerate_monotone_endos(SQUARE, limit=10)


def test_saturated_enumeration_limit():
    with pytest.raises(EnumerationLimitExceeded):
        enumerate_saturated(SQUARE, limit=2)


def test_saturated_cover_dataclass_pairs():
    q = SaturatedCover(SQUARE, pair_space(SQUARE).bit(0, 1))
    assert q.pairs == ((0, 1),)
    assert len(q) == 1


def test_relation_from_dict_roundtrip():
    rel = Relation.from_pairs(SQUARE, [(0, 1), (1, 3)])
    doc = rel.as_dict()
    assert Relation.from_dict(doc).mask == rel.mask
    assert Relation.from_dict({"pairs": doc["pairs"]}, lattice=SQUARE).mask == rel.mask
