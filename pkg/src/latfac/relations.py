"""Relations on a lattice, stored as bitsets over its strict comparable pairs.

A :class:`PairSpace` indexes the strict pairs x < y of a lattice once and
precomputes the bit tables that the closure kernels and the lifting-property
machinery need.  A :class:`Relation` is an immutable (lattice, bitset) pair;
reflexivity is always implied, never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from ._kernels import make_kernel
from .errors import CarrierMismatch, RefinementViolation
from .lattice import Lattice, bits


class PairSpace:
    """Index of the strict comparable pairs of a lattice plus derived tables."""

    def __init__(self, lattice: Lattice):
        self.lattice = lattice
        n = lattice.n
        pairs: list[tuple[int, int]] = []
        for x in range(n):
            for y in bits(lattice.up_strict(x)):
                pairs.append((x, y))
        pairs.sort()
        self.pairs: tuple[tuple[int, int], ...] = tuple(pairs)
        self.index: dict[tuple[int, int], int] = {p: k for k, p in enumerate(pairs)}
        self.K = len(pairs)
        self.full_mask = (1 << self.K) - 1 if self.K else 0

        self.cover_mask = 0
        for k, (x, y) in enumerate(pairs):
            if lattice.is_cover(x, y):
                self.cover_mask |= 1 << k
        top = lattice.top
        self.to_top_mask = sum(
            1 << k for k, (x, y) in enumerate(pairs) if y == top
        )
        self.from_bottom_mask = sum(
            1 << k for k, (x, y) in enumerate(pairs) if x == 0
        )
        self._bad_left: tuple[int, ...] | None = None
        self._bad_right: tuple[int, ...] | None = None
        self._kernels: dict[str | None, object] = {}

    # -- mask helpers -----------------------------------------------------

    def bit(self, x: int, y: int) -> int:
        return 1 << self.index[(x, y)]

    def mask_of(self, pairs: Iterable[tuple[int, int]]) -> int:
        """Bitset of the given strict pairs; reflexive pairs are dropped.

        Raises RefinementViolation when some pair is not comparable.
        """
        mask = 0
        for x, y in pairs:
            if x == y:
                continue
            k = self.index.get((x, y))
            if k is None:
                lab = self.lattice.labels
                raise RefinementViolation(f"{lab[x]!r} is not below {lab[y]!r}")
            mask |= 1 << k
        return mask

    def pairs_of(self, mask: int) -> tuple[tuple[int, int], ...]:
        return tuple(self.pairs[k] for k in bits(mask))

    def succ_masks(self, mask: int) -> list[int]:
        """Per-element strict successor bitmasks of a pair bitset."""
        succ = [0] * self.lattice.n
        for k in bits(mask):
            x, y = self.pairs[k]
            succ[x] |= 1 << y
        return succ

    def mask_from_succ(self, succ: list[int]) -> int:
        mask = 0
        for k, (x, y) in enumerate(self.pairs):
            if succ[x] >> y & 1:
                mask |= 1 << k
        return mask

    # -- lifting tables -----------------------------------------------------

    def bad_left(self) -> tuple[int, ...]:
        """bad_left[i] = bitset of pairs p that pair i fails to left-lift against."""
        if self._bad_left is None:
            self._compute_lift_tables()
        return self._bad_left

    def bad_right(self) -> tuple[int, ...]:
        """bad_right[p] = bitset of pairs i that fail to left-lift against p."""
        if self._bad_right is None:
            self._compute_lift_tables()
        return self._bad_right

    def _compute_lift_tables(self) -> None:
        lat = self.lattice
        up = lat.up
        K = self.K
        bad_left = [0] * K
        bad_right = [0] * K
        for i, (a, b) in enumerate(self.pairs):
            up_a, up_b = up[a], up[b]
            for p, (x, y) in enumerate(self.pairs):
                # (a,b) lifts against (x,y) unless a<=x, b<=y and not b<=x
                if (up_a >> x & 1) and (up_b >> y & 1) and not (up_b >> x & 1):
                    bad_left[i] |= 1 << p
                    bad_right[p] |= 1 << i
        self._bad_left = tuple(bad_left)
        self._bad_right = tuple(bad_right)

    # -- kernels -----------------------------------------------------------

    def kernel(self, backend: str | None = None):
        """Closure/enumeration kernel for this lattice (cached per backend)."""
        if backend not in self._kernels:
            lat = self.lattice
            n = lat.n
            self._kernels[backend] = make_kernel(
                n,
                [lat.down_strict(x) for x in range(n)],
                [lat.up_strict(x) for x in range(n)],
                list(lat.meet_table),
                [p[0] for p in self.pairs],
                [p[1] for p in self.pairs],
                backend=backend,
            )
        return self._kernels[backend]


@lru_cache(maxsize=256)
def pair_space(lattice: Lattice) -> PairSpace:
    return PairSpace(lattice)


@dataclass(frozen=True)
class Relation:
    """Set of strict comparable pairs of a lattice; reflexivity implied."""

    lattice: Lattice
    mask: int = 0

    @classmethod
    def from_pairs(cls, lattice: Lattice, pairs: Iterable[tuple[int, int]]) -> "Relation":
        return cls(lattice, pair_space(lattice).mask_of(pairs))

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return pair_space(self.lattice).pairs_of(self.mask)

    def contains(self, x: int, y: int) -> bool:
        if x == y:
            return True
        k = pair_space(self.lattice).index.get((x, y))
        return k is not None and bool(self.mask >> k & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def _check_carrier(self, other: "Relation") -> None:
        if self.lattice != other.lattice:
            raise CarrierMismatch("relations live on different lattices")

    def __or__(self, other: "Relation") -> "Relation":
        self._check_carrier(other)
        return Relation(self.lattice, self.mask | other.mask)

    def __and__(self, other: "Relation") -> "Relation":
        self._check_carrier(other)
        return Relation(self.lattice, self.mask & other.mask)

    def __le__(self, other: "Relation") -> bool:
        self._check_carrier(other)
        return self.mask | other.mask == other.mask

    def as_dict(self) -> dict:
        return {
            "lattice": self.lattice.as_dict(),
            "pairs": [[x, y] for x, y in self.pairs],
        }

    @classmethod
    def from_dict(cls, data: dict, lattice: Lattice | None = None) -> "Relation":
        lat = lattice if lattice is not None else Lattice.from_dict(data["lattice"])
        return cls.from_pairs(lat, [tuple(p) for p in data["pairs"]])


def covering_relations(lattice: Lattice) -> Relation:
    """All pairs x < y with nothing strictly between, as a Relation."""
    return Relation(lattice, pair_space(lattice).cover_mask)


def three_for_two(lattice: Lattice, rel: Relation) -> bool:
    """Two-out-of-three over composable strict triples x <= y <= z.

    Whenever two of (x,y), (y,z), (x,z) belong to the relation, so must the
    third.  Triples with repeated elements hold automatically because
    reflexivity is implied.
    """
    if rel.lattice != lattice:
        raise CarrierMismatch("relation lives on a different lattice")
    succ = pair_space(lattice).succ_masks(rel.mask)
    for x in range(lattice.n):
        for y in bits(lattice.up_strict(x)):
            for z in bits(lattice.up_strict(y)):
                present = (succ[x] >> y & 1) + (succ[y] >> z & 1) + (succ[x] >> z & 1)
                if present == 2:
                    return False
    return True
