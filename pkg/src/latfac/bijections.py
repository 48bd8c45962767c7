"""Submonoids, monads, and model structures, with the maps tying them to
(co)reflective factorization systems.

Reflective systems, meet-submonoids, closure operators, monads, and cofibrant
model structures are pairwise in bijection, with the dual chain on the
coreflective side; every map here is paired with its inverse so round-trips
can be verified exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadParams,
    CarrierMismatch,
    EnumerationLimitExceeded,
    NotASubmonoid,
    NotCoreflective,
    NotReflective,
)
from .factorization import (
    FactorizationSystem,
    bottom_slice,
    dual_fs,
    from_transfer,
    is_coreflective,
    is_reflective,
)
from .lattice import Lattice, bits, dual_lattice
from .operators import (
    Endo,
    closure_from_submonoid,
    interior_from_submonoid,
    is_monotone,
)
from .relations import Relation, pair_space, three_for_two
from .transfer import DEFAULT_MAX_STRUCTURES, TransferSystem, generate, slice_top


@dataclass(frozen=True)
class Submonoid:
    """A subset closed under meet or join and containing the unit.

    The unit is the top element for the meet operation and the bottom for
    join; meet-submonoids are also known as Moore families.
    """

    lattice: Lattice
    op: str
    members: frozenset[int]

    @classmethod
    def from_members(cls, lattice: Lattice, op: str, members) -> "Submonoid":
        if op not in ("meet", "join"):
            raise BadParams("op must be 'meet' or 'join'")
        members = frozenset(members)
        unit = lattice.top if op == "meet" else lattice.bottom
        if unit not in members:
            raise NotASubmonoid(f"missing the unit element {lattice.labels[unit]!r}")
        combine = lattice.meet if op == "meet" else lattice.join
        for a in members:
            for b in members:
                if combine(a, b) not in members:
                    raise NotASubmonoid(
                        f"not closed at ({lattice.labels[a]!r}, {lattice.labels[b]!r})"
                    )
        return cls(lattice, op, members)

    @property
    def mask(self) -> int:
        m = 0
        for x in self.members:
            m |= 1 << x
        return m

    def as_dict(self) -> dict:
        return {"op": self.op, "members": sorted(self.members)}


def _close_members(lattice: Lattice, mask: int, op: str) -> int:
    combine = lattice.meet if op == "meet" else lattice.join
    queue = list(bits(mask))
    while queue:
        a = queue.pop()
        for b in bits(mask):
            c = combine(a, b)
            if not mask >> c & 1:
                mask |= 1 << c
                queue.append(c)
    return mask


def enumerate_submonoids(
    lattice: Lattice, op: str, *, limit: int = DEFAULT_MAX_STRUCTURES
) -> list[Submonoid]:
    """All op-closed unit-containing subsets, ascending by member bitset."""
    if op not in ("meet", "join"):
        raise BadParams("op must be 'meet' or 'join'")
    unit = lattice.top if op == "meet" else lattice.bottom
    start = 1 << unit
    seen = {start}
    stack = [start]
    out = []
    while stack:
        cur = stack.pop()
        out.append(cur)
        for x in range(lattice.n):
            if cur >> x & 1:
                continue
            nxt = _close_members(lattice, cur | 1 << x, op)
            if nxt not in seen:
                if len(seen) >= limit:
                    raise EnumerationLimitExceeded(
                        f"more than {limit} submonoids on this lattice"
                    )
                seen.add(nxt)
                stack.append(nxt)
    out.sort()
    return [
        Submonoid(lattice, op, frozenset(bits(mask))) for mask in out
    ]


def fac_to_submonoid(fs: FactorizationSystem, side: str) -> Submonoid:
    """Slice a (co)reflective factorization system down to its submonoid."""
    if side == "reflective":
        if not is_reflective(fs):
            raise NotReflective("right slice over the top is not meet-closed")
        return Submonoid(fs.lattice, "meet", slice_top(fs.right))
    if side == "coreflective":
        if not is_coreflective(fs):
            raise NotCoreflective("bottom slice of the left class is not join-closed")
        return Submonoid(fs.lattice, "join", bottom_slice(fs))
    raise BadParams("side must be 'reflective' or 'coreflective'")


def submonoid_to_fac(sub: Submonoid) -> FactorizationSystem:
    """Reflective (meet) or coreflective (join) system realizing the submonoid."""
    lattice = sub.lattice
    if sub.op == "meet":
        seed = Relation.from_pairs(
            lattice, [(x, lattice.top) for x in sub.members if x != lattice.top]
        )
        return from_transfer(generate(lattice, seed), _checked=False)
    if sub.op == "join":
        dual = dual_lattice(lattice)
        d = lattice.n - 1
        mirrored = Submonoid.from_members(dual, "meet", {d - x for x in sub.members})
        return dual_fs(submonoid_to_fac(mirrored))
    raise BadParams("op must be 'meet' or 'join'")


def galois_check(lattice: Lattice, subset, fs: FactorizationSystem) -> bool:
    """One instance of the adjunction between element subsets and systems.

    The system generated by relating ``subset`` to the top sits below ``fs``
    exactly when ``subset`` is contained in the top slice of ``fs``; returns
    whether the two sides agree.
    """
    subset = frozenset(subset)
    seed = Relation.from_pairs(
        lattice, [(x, lattice.top) for x in subset if x != lattice.top]
    )
    generated = generate(lattice, seed)
    lhs = generated.rel | fs.right.rel == fs.right.rel
    rhs = subset <= slice_top(fs.right)
    return lhs == rhs


# --- monads -------------------------------------------------------------------


def is_monad(lattice: Lattice, t: Endo) -> bool:
    """Monotone with a unit (x <= Tx) and multiplication (TTx <= Tx)."""
    if t.lattice != lattice:
        raise CarrierMismatch("self-map lives on a different lattice")
    if not is_monotone(t):
        return False
    tab = t.table
    return all(
        lattice.leq(x, tab[x]) and lattice.leq(tab[tab[x]], tab[x])
        for x in range(lattice.n)
    )


def is_comonad(lattice: Lattice, t: Endo) -> bool:
    """Monotone with a counit (Tx <= x) and comultiplication (Tx <= TTx)."""
    if t.lattice != lattice:
        raise CarrierMismatch("self-map lives on a different lattice")
    if not is_monotone(t):
        return False
    tab = t.table
    return all(
        lattice.leq(tab[x], x) and lattice.leq(tab[x], tab[tab[x]])
        for x in range(lattice.n)
    )


def enumerate_closure_operators(lattice: Lattice, *, limit: int = DEFAULT_MAX_STRUCTURES) -> list[Endo]:
    """All closure operators, via their meet-closed fixed-point sets."""
    ops = [
        closure_from_submonoid(lattice, sub.members)
        for sub in enumerate_submonoids(lattice, "meet", limit=limit)
    ]
    ops.sort(key=lambda f: f.table)
    return ops


def enumerate_interior_operators(lattice: Lattice, *, limit: int = DEFAULT_MAX_STRUCTURES) -> list[Endo]:
    """All interior operators, via their join-closed fixed-point sets."""
    ops = [
        interior_from_submonoid(lattice, sub.members)
        for sub in enumerate_submonoids(lattice, "join", limit=limit)
    ]
    ops.sort(key=lambda f: f.table)
    return ops


# --- model structures ----------------------------------------------------------


@dataclass(frozen=True)
class ModelStructure:
    """An interval of factorization systems whose composite weak class
    satisfies two-out-of-three."""

    lower: FactorizationSystem
    upper: FactorizationSystem
    weak: Relation

    def as_dict(self) -> dict:
        return {
            "lower": self.lower.as_dict(),
            "upper": self.upper.as_dict(),
            "weak": [[x, y] for x, y in self.weak.pairs],
        }


def maximal_fs(lattice: Lattice) -> FactorizationSystem:
    """The top factorization system: identities on the left, everything on the right."""
    ps = pair_space(lattice)
    return FactorizationSystem(
        lattice, Relation(lattice, 0), TransferSystem(lattice, ps.full_mask)
    )


def minimal_fs(lattice: Lattice) -> FactorizationSystem:
    """The bottom factorization system: everything on the left, identities on the right."""
    ps = pair_space(lattice)
    return FactorizationSystem(
        lattice, Relation(lattice, ps.full_mask), TransferSystem(lattice, 0)
    )


def weak_composite(lower: FactorizationSystem, upper: FactorizationSystem) -> Relation:
    """Strict pairs factoring as an upper-left relation followed by a lower-right one."""
    lattice = lower.lattice
    ps = pair_space(lattice)
    ac = ps.succ_masks(upper.left.mask)
    af = ps.succ_masks(lower.right.rel)
    mask = 0
    for x in range(lattice.n):
        reach = af[x]
        for z in bits(ac[x]):
            reach |= af[z] | 1 << z
        mask |= ps.mask_of((x, y) for y in bits(reach & lattice.up_strict(x)))
    return Relation(lattice, mask)


def make_fibrant(fs: FactorizationSystem) -> ModelStructure:
    """Model structure with all relations fibrant, below the maximal system."""
    if not is_coreflective(fs):
        raise NotCoreflective("only coreflective systems give fibrant model structures")
    upper = maximal_fs(fs.lattice)
    return ModelStructure(fs, upper, weak_composite(fs, upper))


def make_cofibrant(fs: FactorizationSystem) -> ModelStructure:
    """Model structure with all relations cofibrant, above the minimal system."""
    if not is_reflective(fs):
        raise NotReflective("only reflective systems give cofibrant model structures")
    lower = minimal_fs(fs.lattice)
    return ModelStructure(lower, fs, weak_composite(lower, fs))


def is_model_structure(model: ModelStructure) -> bool:
    """Interval of systems whose composite weak class satisfies two-out-of-three."""
    lattice = model.lower.lattice
    if model.upper.lattice != lattice or model.weak.lattice != lattice:
        raise CarrierMismatch("model structure components live on different lattices")
    if model.lower.right.rel | model.upper.right.rel != model.upper.right.rel:
        return False
    if model.weak.mask != weak_composite(model.lower, model.upper).mask:
        return False
    return three_for_two(lattice, model.weak)
