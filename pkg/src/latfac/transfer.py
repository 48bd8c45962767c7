"""Transfer systems: pullback-stable refining partial orders on a lattice.

Also houses saturated covers, the covering-relation counterpart of saturated
transfer systems on modular lattices, together with the maps between the two
worlds and closure-system DFS enumeration for both.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import (
    CarrierMismatch,
    EnumerationLimitExceeded,
    NoMatchingSystem,
    NotACoverSubset,
    NotATransferSystem,
    NotModular,
    NotSaturated,
    RefinementViolation,
)
from .lattice import Lattice, bits, covering_diamonds, hasse_dot, is_modular
from .relations import Relation, pair_space

DEFAULT_MAX_STRUCTURES = 10**6


@dataclass(frozen=True)
class TransferSystem:
    """A transfer system, stored as a strict-pair bitset over the carrier."""

    lattice: Lattice
    rel: int = 0

    @classmethod
    def from_pairs(cls, lattice: Lattice, pairs: Iterable[tuple[int, int]]) -> "TransferSystem":
        """Validating constructor; raises NotATransferSystem on axiom failure."""
        mask = pair_space(lattice).mask_of(pairs)
        verdict = validate_transfer(lattice, Relation(lattice, mask))
        if verdict is not True:
            raise NotATransferSystem(str(verdict))
        return cls(lattice, mask)

    @property
    def relation(self) -> Relation:
        return Relation(self.lattice, self.rel)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return pair_space(self.lattice).pairs_of(self.rel)

    def contains(self, x: int, y: int) -> bool:
        return self.relation.contains(x, y)

    def __len__(self) -> int:
        return self.rel.bit_count()

    def __le__(self, other: "TransferSystem") -> bool:
        if self.lattice != other.lattice:
            raise CarrierMismatch("transfer systems live on different lattices")
        return self.rel | other.rel == other.rel

    def as_dict(self) -> dict:
        return {
            "lattice": self.lattice.as_dict(),
            "pairs": [[x, y] for x, y in self.pairs],
        }


@dataclass(frozen=True)
class Violation:
    """Falsy witness describing why a relation fails an axiom."""

    kind: str
    witness: tuple

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        return f"{self.kind} violated at {self.witness}"


def validate_transfer(lattice: Lattice, rel: Relation) -> "bool | Violation":
    """True when rel (plus implied reflexivity) is a transfer system.

    Returns the first violation otherwise: kind "transitivity" with witness
    (x, y, z) where (x,y),(y,z) hold but (x,z) does not, or kind "pullback"
    with witness (x, y, z) where (y,z) holds, x <= z, but (x^y, x) does not.
    """
    if rel.lattice != lattice:
        raise CarrierMismatch("relation lives on a different lattice")
    ps = pair_space(lattice)
    if rel.mask & ~ps.full_mask:
        raise RefinementViolation("relation contains non-comparable pairs")
    succ = ps.succ_masks(rel.mask)
    for x in range(lattice.n):
        for y in bits(succ[x]):
            extra = succ[y] & ~succ[x]
            if extra:
                z = next(bits(extra))
                return Violation("transitivity", (x, y, z))
    for y in range(lattice.n):
        for z in bits(succ[y]):
            for x in bits(lattice.down_strict(z)):
                m = lattice.meet(x, y)
                if m != x and not succ[m] >> x & 1:
                    return Violation("pullback", (x, y, z))
    return True


def generate(lattice: Lattice, seed: Relation) -> TransferSystem:
    """Smallest transfer system containing the given relations."""
    if seed.lattice != lattice:
        raise CarrierMismatch("seed relation lives on a different lattice")
    ps = pair_space(lattice)
    if seed.mask & ~ps.full_mask:
        raise RefinementViolation("seed contains non-comparable pairs")
    return TransferSystem(lattice, ps.kernel().close(seed.mask))


def enumerate_transfer(
    lattice: Lattice,
    *,
    limit: int = DEFAULT_MAX_STRUCTURES,
    backend: str | None = None,
) -> list[TransferSystem]:
    """Every transfer system on the lattice, in canonical bitset order."""
    ps = pair_space(lattice)
    masks = ps.kernel(backend).enumerate_closed(False, limit)
    return [TransferSystem(lattice, m) for m in masks]


def enumerate_saturated(
    lattice: Lattice,
    *,
    limit: int = DEFAULT_MAX_STRUCTURES,
    backend: str | None = None,
) -> list[TransferSystem]:
    """Every saturated transfer system, enumerated directly.

    Saturated systems are an intersection-closed family, so the same DFS
    as for plain transfer systems applies with the stronger closure.
    """
    ps = pair_space(lattice)
    masks = ps.kernel(backend).enumerate_closed(True, limit)
    return [TransferSystem(lattice, m) for m in masks]


def ts_meet(a: TransferSystem, b: TransferSystem) -> TransferSystem:
    """Meet in the lattice of transfer systems: pairwise intersection."""
    if a.lattice != b.lattice:
        raise CarrierMismatch("transfer systems live on different lattices")
    return TransferSystem(a.lattice, a.rel & b.rel)


def ts_join(a: TransferSystem, b: TransferSystem) -> TransferSystem:
    """Join in the lattice of transfer systems: closure of the union."""
    if a.lattice != b.lattice:
        raise CarrierMismatch("transfer systems live on different lattices")
    return generate(a.lattice, Relation(a.lattice, a.rel | b.rel))


def is_saturated(system: TransferSystem) -> bool:
    """Two-out-of-three: x R y <= z and x R z together force y R z."""
    return pair_space(system.lattice).kernel().is_saturated(system.rel)


def slice_top(system: TransferSystem) -> frozenset[int]:
    """Elements related to the top, always including the top itself."""
    lattice = system.lattice
    ps = pair_space(lattice)
    members = {lattice.top}
    for k in bits(system.rel & ps.to_top_mask):
        members.add(ps.pairs[k][0])
    return frozenset(members)


def is_disklike(system: TransferSystem) -> bool:
    """True when the system is generated by its relations into the top."""
    ps = pair_space(system.lattice)
    seed = system.rel & ps.to_top_mask
    return ps.kernel().close(seed) == system.rel


# --- saturated covers --------------------------------------------------------


@dataclass(frozen=True)
class SaturatedCover:
    """A subset of the covering relations of a modular lattice.

    Closed under the two conditions that characterize covering-relation sets
    of saturated transfer systems; see :func:`is_saturated_cover`.
    """

    lattice: Lattice
    covers: int

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return pair_space(self.lattice).pairs_of(self.covers)

    def __len__(self) -> int:
        return self.covers.bit_count()


def _require_modular(lattice: Lattice) -> None:
    if not is_modular(lattice):
        raise NotModular("saturated covers are only defined on modular lattices")


@lru_cache(maxsize=256)
def _cover_rules(lattice: Lattice):
    """Implication tables for the two saturated-cover conditions.

    Returns (rule1, diamonds): rule1 maps each cover-pair bit index k to the
    bitset of covers forced by condition (1) when pair k is present, and
    diamonds is a list of 4-bit-index tuples (bottom-left, bottom-right,
    left-top, right-top) for condition (2).
    """
    ps = pair_space(lattice)
    rule1: dict[int, int] = {}
    for k in bits(ps.cover_mask):
        u, v = ps.pairs[k]
        forced = 0
        for y in range(lattice.n):
            if lattice.join(u, y) == v:
                forced |= ps.bit(lattice.meet(u, y), y)
        rule1[k] = forced
    diamonds = [
        (ps.index[(m, x)], ps.index[(m, y)], ps.index[(x, j)], ps.index[(y, j)])
        for m, x, y, j in covering_diamonds(lattice)
    ]
    return rule1, diamonds


def is_saturated_cover(lattice: Lattice, cover_set: Relation) -> bool:
    """Check the two closure conditions on a subset of covering relations."""
    _require_modular(lattice)
    ps = pair_space(lattice)
    if cover_set.lattice != lattice:
        raise CarrierMismatch("cover set lives on a different lattice")
    if cover_set.mask & ~ps.cover_mask:
        raise NotACoverSubset("relation contains non-covering pairs")
    rule1, diamonds = _cover_rules(lattice)
    q = cover_set.mask
    for k in bits(q):
        if rule1[k] & ~q:
            return False
    for c1, c2, c3, c4 in diamonds:
        present = (q >> c1 & 1) + (q >> c2 & 1) + (q >> c3 & 1) + (q >> c4 & 1)
        if present == 3:
            return False
    return True


def _cover_closure(q: int, rule1: dict[int, int], diamonds: list[tuple[int, int, int, int]]) -> int:
    changed = True
    while changed:
        changed = False
        for k in bits(q):
            add = rule1[k] & ~q
            if add:
                q |= add
                changed = True
        for c1, c2, c3, c4 in diamonds:
            b1, b2, b3, b4 = q >> c1 & 1, q >> c2 & 1, q >> c3 & 1, q >> c4 & 1
            if b1 + b2 + b3 + b4 == 3:
                q |= (1 << c1) | (1 << c2) | (1 << c3) | (1 << c4)
                changed = True
    return q


def enumerate_saturated_covers(
    lattice: Lattice, *, limit: int = DEFAULT_MAX_STRUCTURES
) -> list[SaturatedCover]:
    """Every saturated cover on a modular lattice, in canonical bitset order.

    Both conditions are implications, so saturated covers form a closure
    system over the covering relations and the usual DFS applies.
    """
    _require_modular(lattice)
    ps = pair_space(lattice)
    rule1, diamonds = _cover_rules(lattice)
    cover_bits = list(bits(ps.cover_mask))
    seen = {0}
    stack = [0]
    out = []
    while stack:
        cur = stack.pop()
        out.append(cur)
        for k in cover_bits:
            if cur >> k & 1:
                continue
            nxt = _cover_closure(cur | 1 << k, rule1, diamonds)
            if nxt not in seen:
                if len(seen) >= limit:
                    raise EnumerationLimitExceeded(
                        f"more than {limit} saturated covers on this lattice"
                    )
                seen.add(nxt)
                stack.append(nxt)
    out.sort()
    return [SaturatedCover(lattice, q) for q in out]


def cover_of(system: TransferSystem) -> SaturatedCover:
    """Covering relations contained in a saturated transfer system."""
    _require_modular(system.lattice)
    if not is_saturated(system):
        raise NotSaturated("transfer system fails two-out-of-three")
    ps = pair_space(system.lattice)
    return SaturatedCover(system.lattice, system.rel & ps.cover_mask)


def _transitive_mask(lattice: Lattice, mask: int) -> int:
    ps = pair_space(lattice)
    succ = ps.succ_masks(mask)
    changed = True
    while changed:
        changed = False
        for y in range(lattice.n):
            sy = succ[y]
            if not sy:
                continue
            for x in range(lattice.n):
                sx = succ[x]
                if sx >> y & 1 and sx | sy != sx:
                    succ[x] = sx | sy
                    changed = True
    return ps.mask_from_succ(succ)


def ts_of(cover: SaturatedCover) -> TransferSystem:
    """The unique saturated transfer system whose covering relations are Q.

    The transitive closure of Q is tried as a candidate and verified (transfer
    axioms, saturation, and the cover round-trip); if verification fails the
    saturated universe is searched, and a miss there is an implementation bug.
    """
    lattice = cover.lattice
    _require_modular(lattice)
    ps = pair_space(lattice)
    if cover.covers & ~ps.cover_mask:
        raise NotACoverSubset("cover set contains non-covering pairs")
    if not is_saturated_cover(lattice, Relation(lattice, cover.covers)):
        raise NotSaturated("cover set fails the saturated-cover conditions")
    kernel = ps.kernel()
    candidate = _transitive_mask(lattice, cover.covers)
    if (
        kernel.is_transfer(candidate)
        and kernel.is_saturated(candidate)
        and candidate & ps.cover_mask == cover.covers
    ):
        return TransferSystem(lattice, candidate)
    matches = [
        s
        for s in enumerate_saturated(lattice)
        if s.rel & ps.cover_mask == cover.covers
    ]
    if len(matches) != 1:
        raise NoMatchingSystem(
            f"{len(matches)} saturated systems share this cover set"
        )
    return matches[0]


def overlay_dot(system: TransferSystem, *, name: str = "transfer") -> str:
    """DOT rendering of the carrier Hasse diagram with the system drawn atop."""
    return hasse_dot(system.lattice, extra_edges=system.pairs, name=name)
