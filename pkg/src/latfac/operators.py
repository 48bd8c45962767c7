"""Monotone self-maps of a lattice: classification, characteristic functions,
and the fiber structure of the two assignments from factorization systems.

The characteristic function sends x to the factoring object of bottom -> x
and is always an interior operator; the cocharacteristic function sends x to
the factoring object of x -> top and is always a closure operator.  Both are
computed from the right class, with the left-class formula available as an
optional cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadParams,
    EmptyFiber,
    EnumerationLimitExceeded,
    FormulaMismatch,
    MaxNotUnique,
    MinNotUnique,
    NotASubmonoid,
    NotIdempotent,
    NotMonotone,
)
from .factorization import FactorizationSystem, dual_fs, enumerate_fac
from .lattice import Lattice, bits
from .relations import pair_space
from .transfer import DEFAULT_MAX_STRUCTURES


@dataclass(frozen=True)
class Endo:
    """A self-map of a lattice, stored as a dense table."""

    lattice: Lattice
    table: tuple[int, ...]

    @classmethod
    def from_table(cls, lattice: Lattice, table) -> "Endo":
        """Validating constructor; requires a monotone total table."""
        table = tuple(table)
        if len(table) != lattice.n or not all(
            isinstance(v, int) and 0 <= v < lattice.n for v in table
        ):
            raise BadParams("table must map every element to an element")
        endo = cls(lattice, table)
        if not is_monotone(endo):
            raise NotMonotone("table is not order-preserving")
        return endo

    def __call__(self, x: int) -> int:
        return self.table[x]


def is_monotone(f: Endo) -> bool:
    lattice = f.lattice
    return all(
        lattice.leq(f.table[x], f.table[y])
        for x in range(lattice.n)
        for y in bits(lattice.up_strict(x))
    )


@dataclass(frozen=True)
class OperatorClass:
    """Extensive / contractive / idempotent flags of a monotone self-map."""

    extensive: bool
    contractive: bool
    idempotent: bool

    @property
    def is_closure(self) -> bool:
        return self.extensive and self.idempotent

    @property
    def is_interior(self) -> bool:
        return self.contractive and self.idempotent


def classify(f: Endo) -> OperatorClass:
    """Flags computed by exhaustion; raises NotMonotone on bad input."""
    if not is_monotone(f):
        raise NotMonotone("self-map is not order-preserving")
    lattice = f.lattice
    t = f.table
    return OperatorClass(
        extensive=all(lattice.leq(x, t[x]) for x in range(lattice.n)),
        contractive=all(lattice.leq(t[x], x) for x in range(lattice.n)),
        idempotent=all(t[t[x]] == t[x] for x in range(lattice.n)),
    )


def _unique_min(lattice: Lattice, candidates: int) -> int:
    """Minimum of a nonempty candidate bitset, computed as the iterated meet.

    The meet of the candidates must itself be a candidate; otherwise there is
    no unique minimum and the input system was invalid.
    """
    it = bits(candidates)
    m = next(it)
    for x in it:
        m = lattice.meet(m, x)
    if not candidates >> m & 1:
        raise MinNotUnique(f"candidate set {bin(candidates)} has no minimum")
    return m


def _unique_max(lattice: Lattice, candidates: int) -> int:
    it = bits(candidates)
    m = next(it)
    for x in it:
        m = lattice.join(m, x)
    if not candidates >> m & 1:
        raise MaxNotUnique(f"candidate set {bin(candidates)} has no maximum")
    return m


def characteristic(fs: FactorizationSystem, *, cross_check: bool = False) -> Endo:
    """chi: x -> the least y with y right-related to x (an interior operator)."""
    lattice = fs.lattice
    ps = pair_space(lattice)
    right_pred = [1 << x for x in range(lattice.n)]
    for x, y in ps.pairs_of(fs.right.rel):
        right_pred[y] |= 1 << x
    table = [_unique_min(lattice, right_pred[x]) for x in range(lattice.n)]
    if cross_check:
        left0 = 1 << lattice.bottom
        for x, y in fs.left.pairs:
            if x == lattice.bottom:
                left0 |= 1 << y
        for x in range(lattice.n):
            alt = _unique_max(lattice, left0 & lattice.down[x])
            if alt != table[x]:
                raise FormulaMismatch(
                    f"chi({x}) = {table[x]} but the left-class formula gives {alt}"
                )
    return Endo(lattice, tuple(table))


def cocharacteristic(fs: FactorizationSystem, *, cross_check: bool = False) -> Endo:
    """lambda: x -> the least y >= x that is right-related to the top (a closure operator)."""
    lattice = fs.lattice
    ps = pair_space(lattice)
    slice_mask = 1 << lattice.top
    for k in bits(fs.right.rel & ps.to_top_mask):
        slice_mask |= 1 << ps.pairs[k][0]
    table = [
        _unique_min(lattice, slice_mask & lattice.up[x]) for x in range(lattice.n)
    ]
    if cross_check:
        left_succ = ps.succ_masks(fs.left.mask)
        for x in range(lattice.n):
            alt = _unique_max(lattice, left_succ[x] | 1 << x)
            if alt != table[x]:
                raise FormulaMismatch(
                    f"lambda({x}) = {table[x]} but the left-class formula gives {alt}"
                )
    return Endo(lattice, tuple(table))


@dataclass(frozen=True)
class Fiber:
    """All systems sharing one operator value, with the interval endpoints."""

    which: str
    operator: Endo
    members: tuple[FactorizationSystem, ...]
    lower: FactorizationSystem
    upper: FactorizationSystem
    is_interval: bool

    def as_dict(self) -> dict:
        return {
            "which": self.which,
            "operator": {"table": list(self.operator.table)},
            "members": [fs.as_dict() for fs in self.members],
            "lower": self.lower.as_dict(),
            "upper": self.upper.as_dict(),
            "is_interval": self.is_interval,
        }


def fiber(
    lattice: Lattice,
    which: str,
    op: Endo,
    *,
    systems: list[FactorizationSystem] | None = None,
    limit: int = DEFAULT_MAX_STRUCTURES,
) -> Fiber:
    """Fiber of chi or lambda over one operator, verified to be an interval."""
    if which not in ("chi", "lambda"):
        raise BadParams("which must be 'chi' or 'lambda'")
    if op.lattice != lattice:
        raise BadParams("operator lives on a different lattice")
    if systems is None:
        systems = enumerate_fac(lattice, limit=limit)
    func = characteristic if which == "chi" else cocharacteristic
    members = [fs for fs in systems if func(fs).table == op.table]
    if not members:
        raise EmptyFiber(f"no factorization system has this {which} value")
    members.sort(key=lambda fs: fs.right.rel)
    inter = members[0].right.rel
    union = 0
    for fs in members:
        inter &= fs.right.rel
        union |= fs.right.rel
    lower = next((fs for fs in members if fs.right.rel == inter), members[0])
    upper = next((fs for fs in members if fs.right.rel == union), members[-1])
    member_keys = {fs.right.rel for fs in members}
    interval_keys = {
        fs.right.rel
        for fs in systems
        if inter | fs.right.rel == fs.right.rel and fs.right.rel | union == union
    }
    is_interval = (
        lower.right.rel == inter
        and upper.right.rel == union
        and member_keys == interval_keys
    )
    return Fiber(which, op, tuple(members), lower, upper, is_interval)


def closure_from_submonoid(lattice: Lattice, members) -> Endo:
    """Closure operator with the given meet-closed, top-containing fixed set."""
    member_mask = 0
    for x in members:
        member_mask |= 1 << x
    if not member_mask >> lattice.top & 1:
        raise NotASubmonoid("fixed set must contain the top element")
    for a in bits(member_mask):
        for b in bits(member_mask):
            if not member_mask >> lattice.meet(a, b) & 1:
                raise NotASubmonoid("fixed set is not closed under meet")
    table = [
        _unique_min(lattice, member_mask & lattice.up[x]) for x in range(lattice.n)
    ]
    return Endo(lattice, tuple(table))


def interior_from_submonoid(lattice: Lattice, members) -> Endo:
    """Interior operator with the given join-closed, bottom-containing fixed set."""
    member_mask = 0
    for x in members:
        member_mask |= 1 << x
    if not member_mask >> lattice.bottom & 1:
        raise NotASubmonoid("fixed set must contain the bottom element")
    for a in bits(member_mask):
        for b in bits(member_mask):
            if not member_mask >> lattice.join(a, b) & 1:
                raise NotASubmonoid("fixed set is not closed under join")
    table = [
        _unique_max(lattice, member_mask & lattice.down[x]) for x in range(lattice.n)
    ]
    return Endo(lattice, tuple(table))


def fixed_points(f: Endo) -> frozenset[int]:
    """Fixed-point set of an idempotent self-map."""
    if any(f.table[f.table[x]] != f.table[x] for x in range(f.lattice.n)):
        raise NotIdempotent("self-map is not idempotent")
    return frozenset(x for x in range(f.lattice.n) if f.table[x] == x)


def verify_duality(fs: FactorizationSystem) -> bool:
    """chi on the lattice agrees with lambda of the mirrored system, and dually."""
    lattice = fs.lattice
    d = lattice.n - 1
    mirrored = dual_fs(fs)
    chi = characteristic(fs).table
    lam = cocharacteristic(fs).table
    chi_m = characteristic(mirrored).table
    lam_m = cocharacteristic(mirrored).table
    return all(
        chi[x] == d - lam_m[d - x] and lam[x] == d - chi_m[d - x]
        for x in range(lattice.n)
    )


def enumerate_monotone_endos(
    lattice: Lattice, *, limit: int = DEFAULT_MAX_STRUCTURES
) -> list[Endo]:
    """All monotone self-maps, by backtracking along the linear extension.

    At each element the value must dominate the join of the values already
    assigned to its strict lower set; that single bound is equivalent to
    monotonicity because assignment follows a linear extension.
    """
    n = lattice.n
    table = [0] * n
    out: list[Endo] = []

    def rec(i: int) -> None:
        if i == n:
            out.append(Endo(lattice, tuple(table)))
            if len(out) > limit:
                raise EnumerationLimitExceeded(
                    f"more than {limit} monotone self-maps"
                )
            return
        bound = lattice.bottom
        for x in bits(lattice.down_strict(i)):
            bound = lattice.join(bound, table[x])
        for v in bits(lattice.up[bound]):
            table[i] = v
            rec(i + 1)

    rec(0)
    out.sort(key=lambda f: f.table)
    return out
