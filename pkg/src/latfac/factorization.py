"""Factorization systems on a lattice via the lifting property.

In a poset the lifting condition collapses to an implication between
inequalities, so lifting complements are computable from precomputed bit
tables, and the right classes of factorization systems are exactly the
transfer systems.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CarrierMismatch,
    NonUniqueFactorization,
    NotARelation,
    NotATransferSystem,
    NotComparable,
)
from .lattice import Lattice, bits, dual_lattice
from .relations import Relation, pair_space, three_for_two
from .transfer import (
    DEFAULT_MAX_STRUCTURES,
    TransferSystem,
    enumerate_transfer,
    is_disklike,
)


def lifts(lattice: Lattice, i: tuple[int, int], p: tuple[int, int]) -> bool:
    """Left-lifting of relation i = (a,b) against p = (x,y).

    The square commutes only when a <= x and b <= y, in which case the lift
    exists exactly when b <= x; squares that do not commute lift vacuously.
    """
    a, b = i
    x, y = p
    if not lattice.leq(a, b):
        raise NotARelation(f"({lattice.labels[a]}, {lattice.labels[b]}) is not a relation")
    if not lattice.leq(x, y):
        raise NotARelation(f"({lattice.labels[x]}, {lattice.labels[y]}) is not a relation")
    return not (lattice.leq(a, x) and lattice.leq(b, y)) or lattice.leq(b, x)


def left_complement(lattice: Lattice, rel: Relation) -> Relation:
    """All relations with the left lifting property against every member of rel."""
    if rel.lattice != lattice:
        raise CarrierMismatch("relation lives on a different lattice")
    ps = pair_space(lattice)
    bad = ps.bad_left()
    mask = 0
    for k in range(ps.K):
        if bad[k] & rel.mask == 0:
            mask |= 1 << k
    return Relation(lattice, mask)


def right_complement(lattice: Lattice, rel: Relation) -> Relation:
    """All relations with the right lifting property against every member of rel."""
    if rel.lattice != lattice:
        raise CarrierMismatch("relation lives on a different lattice")
    ps = pair_space(lattice)
    bad = ps.bad_right()
    mask = 0
    for k in range(ps.K):
        if bad[k] & rel.mask == 0:
            mask |= 1 << k
    return Relation(lattice, mask)


@dataclass(frozen=True)
class FactorizationSystem:
    """A pair of lifting-complementary classes with the factoring property."""

    lattice: Lattice
    left: Relation
    right: TransferSystem

    @property
    def key(self) -> tuple[int, int]:
        return (self.left.mask, self.right.rel)

    def __le__(self, other: "FactorizationSystem") -> bool:
        if self.lattice != other.lattice:
            raise CarrierMismatch("systems live on different lattices")
        return self.right.rel | other.right.rel == other.right.rel

    def as_dict(self) -> dict:
        return {
            "left": [[x, y] for x, y in self.left.pairs],
            "right": [[x, y] for x, y in self.right.pairs],
        }


@dataclass(frozen=True)
class FSViolation:
    """Falsy witness describing why a class pair is not a factorization system.

    kind is "missing-factorization" with witness (x, y), or
    "complement-mismatch" with witness (side, (x, y)).
    """

    kind: str
    witness: tuple

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        return f"{self.kind} at {self.witness}"


def validate_fs(lattice: Lattice, left: Relation, right: Relation) -> "bool | FSViolation":
    """True when (left, right) is a factorization system on the lattice."""
    ps = pair_space(lattice)
    expected_left = left_complement(lattice, right)
    if expected_left.mask != left.mask:
        k = next(bits(expected_left.mask ^ left.mask))
        return FSViolation("complement-mismatch", ("left", ps.pairs[k]))
    expected_right = right_complement(lattice, left)
    if expected_right.mask != right.mask:
        k = next(bits(expected_right.mask ^ right.mask))
        return FSViolation("complement-mismatch", ("right", ps.pairs[k]))
    left_succ = ps.succ_masks(left.mask)
    right_pred = [0] * lattice.n
    for x, y in ps.pairs_of(right.mask):
        right_pred[y] |= 1 << x
    for x, y in ps.pairs:
        mids = (left_succ[x] | 1 << x) & (right_pred[y] | 1 << y)
        if mids == 0:
            return FSViolation("missing-factorization", (x, y))
    return True


def from_transfer(system: TransferSystem, *, _checked: bool = True) -> FactorizationSystem:
    """Factorization system with the given right class (its lifting complement on the left)."""
    lattice = system.lattice
    if _checked and not pair_space(lattice).kernel().is_transfer(system.rel):
        raise NotATransferSystem("right class fails the transfer axioms")
    left = left_complement(lattice, system.relation)
    return FactorizationSystem(lattice, left, system)


def to_transfer(fs: FactorizationSystem) -> TransferSystem:
    """Right class of a factorization system, as a transfer system."""
    if not pair_space(fs.lattice).kernel().is_transfer(fs.right.rel):
        raise NotATransferSystem("right class fails the transfer axioms")
    return fs.right


def enumerate_fac(
    lattice: Lattice,
    *,
    limit: int = DEFAULT_MAX_STRUCTURES,
    backend: str | None = None,
) -> list[FactorizationSystem]:
    """Every factorization system, through the transfer-system enumeration."""
    return [
        from_transfer(system, _checked=False)
        for system in enumerate_transfer(lattice, limit=limit, backend=backend)
    ]


def factor(fs: FactorizationSystem, x: int, y: int) -> int:
    """The object z through which x <= y factors as x left z right y."""
    lattice = fs.lattice
    if not lattice.leq(x, y):
        raise NotComparable(f"{lattice.labels[x]!r} is not below {lattice.labels[y]!r}")
    ps = pair_space(lattice)
    candidates = 1 << y
    for w, yy in ps.pairs_of(fs.right.rel):
        if yy == y and lattice.leq(x, w):
            candidates |= 1 << w
    it = bits(candidates)
    z = next(it)
    for w in it:
        z = lattice.meet(z, w)
    if not candidates >> z & 1:
        raise NonUniqueFactorization(f"no unique factoring object for ({x}, {y})")
    if not fs.left.contains(x, z):
        raise NonUniqueFactorization(f"factoring object {z} is not reached by the left class")
    return z


def is_reflective(fs: FactorizationSystem) -> bool:
    """The system is the reflection onto its top slice.

    Equivalent to the left class satisfying two-out-of-three, which is the
    check performed here; the meet-closed top slice (always meet-closed, by
    pullback stability) then determines the whole system.
    """
    return three_for_two(fs.lattice, fs.left)


def bottom_slice(fs: FactorizationSystem) -> frozenset[int]:
    """Elements reached from the bottom by the left class, including the bottom."""
    lattice = fs.lattice
    members = {lattice.bottom}
    for x, y in fs.left.pairs:
        if x == lattice.bottom:
            members.add(y)
    return frozenset(members)


def is_coreflective(fs: FactorizationSystem) -> bool:
    """The system is the coreflection onto its bottom slice.

    Checked on the left class alone: mirrored onto the order-reversed
    lattice, the left class must be generated by its slice over the new top,
    i.e. the join-closed bottom slice determines the whole system.
    """
    return is_disklike(dual_fs(fs).right)


def dual_fs(fs: FactorizationSystem) -> FactorizationSystem:
    """The mirrored system (right-op, left-op) on the order-reversed lattice."""
    lattice = fs.lattice
    dual = dual_lattice(lattice)
    d = lattice.n - 1
    left_pairs = [(d - y, d - x) for x, y in fs.right.pairs]
    right_pairs = [(d - y, d - x) for x, y in fs.left.pairs]
    dps = pair_space(dual)
    return FactorizationSystem(
        dual,
        Relation(dual, dps.mask_of(left_pairs)),
        TransferSystem(dual, dps.mask_of(right_pairs)),
    )
