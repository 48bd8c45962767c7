"""Independent brute-force oracles used to freeze expected values.

Everything here is written directly from the definitions, over plain sets of
pairs, deliberately sharing no code with the enumeration kernels it checks.
"""

from __future__ import annotations

from itertools import chain, combinations

from latfac import Lattice, build_lattice, make_standard


def powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def strict_pairs(lat: Lattice) -> list[tuple[int, int]]:
    return [
        (x, y)
        for x in lat.elements()
        for y in lat.elements()
        if x != y and lat.leq(x, y)
    ]


def glb_oracle(lat: Lattice, x: int, y: int) -> int | None:
    lowers = [z for z in lat.elements() if lat.leq(z, x) and lat.leq(z, y)]
    for m in lowers:
        if all(lat.leq(z, m) for z in lowers):
            return m
    return None


def lub_oracle(lat: Lattice, x: int, y: int) -> int | None:
    uppers = [z for z in lat.elements() if lat.leq(x, z) and lat.leq(y, z)]
    for j in uppers:
        if all(lat.leq(j, z) for z in uppers):
            return j
    return None


def is_transfer_oracle(lat: Lattice, rel: frozenset) -> bool:
    """Direct definition: refining, transitive, stable under restriction."""
    for x, y in rel:
        if x == y or not lat.leq(x, y):
            return False
    for a, b in rel:
        for c, d in rel:
            if b == c and a != d and (a, d) not in rel:
                return False
    for y, z in rel:
        for x in lat.elements():
            if lat.leq(x, z):
                m = lat.meet(x, y)
                if m != x and (m, x) not in rel:
                    return False
    return True


def is_saturated_oracle(lat: Lattice, rel: frozenset) -> bool:
    for x, y in rel:
        for x2, z in rel:
            if x2 == x and lat.leq(y, z) and y != z and (y, z) not in rel:
                return False
    return True


def brute_force_transfer_systems(lat: Lattice) -> set[frozenset]:
    return {
        frozenset(subset)
        for subset in powerset(strict_pairs(lat))
        if is_transfer_oracle(lat, frozenset(subset))
    }


def brute_force_submonoids(lat: Lattice, op: str) -> set[frozenset]:
    unit = lat.top if op == "meet" else lat.bottom
    combine = lat.meet if op == "meet" else lat.join
    found = set()
    for subset in powerset(lat.elements()):
        members = frozenset(subset)
        if unit not in members:
            continue
        if all(combine(a, b) in members for a in members for b in members):
            found.add(members)
    return found


def brute_force_monotone_tables(lat: Lattice) -> set[tuple]:
    """All monotone self-maps by filtering every table (n^n of them)."""
    n = lat.n
    found = set()
    table = [0] * n

    def rec(i: int) -> None:
        if i == n:
            if all(
                lat.leq(table[x], table[y])
                for x in range(n)
                for y in range(n)
                if lat.leq(x, y)
            ):
                found.add(tuple(table))
            return
        for v in range(n):
            table[i] = v
            rec(i + 1)

    rec(0)
    return found


def stirling2_oracle(n: int, k: int) -> int:
    """Count partitions by explicit enumeration (assign elements to blocks)."""
    if n == 0:
        return 1 if k == 0 else 0

    count = 0

    def rec(i: int, blocks: list[list[int]]) -> None:
        nonlocal count
        if i == n:
            if len(blocks) == k:
                count += 1
            return
        for b in blocks:
            b.append(i)
            rec(i + 1, blocks)
            b.pop()
        if len(blocks) < k:
            blocks.append([i])
            rec(i + 1, blocks)
            blocks.pop()

    rec(0, [])
    return count


def stem_bottom_lattice() -> Lattice:
    """Five elements: bottom, a stem, then an incomparable pair below the top."""
    return build_lattice(
        ["0", "s", "a", "b", "1"],
        {("0", "s"), ("s", "a"), ("s", "b"), ("a", "1"), ("b", "1")},
    )


def stem_top_lattice() -> Lattice:
    """Five elements: an incomparable pair above the bottom, a stem, the top."""
    return build_lattice(
        ["0", "a", "b", "s", "1"],
        {("0", "a"), ("0", "b"), ("a", "s"), ("b", "s"), ("s", "1")},
    )


def lattices_up_to_5() -> list[tuple[str, Lattice]]:
    """The complete catalog of bounded lattices with at most five elements.

    Sizes 1-3 admit only chains; size 4 the chain and the square; size 5 the
    chain, the diamond, the pentagon, and the two square-with-stem shapes.
    """
    return [
        ("singleton", make_standard("chain", 0)),
        ("chain1", make_standard("chain", 1)),
        ("chain2", make_standard("chain", 2)),
        ("chain3", make_standard("chain", 3)),
        ("square", make_standard("grid", 1, 1)),
        ("chain4", make_standard("chain", 4)),
        ("diamond", make_standard("diamond")),
        ("pentagon", make_standard("pentagon")),
        ("stem-bottom", stem_bottom_lattice()),
        ("stem-top", stem_top_lattice()),
    ]


def criterion_lattices() -> list[tuple[str, Lattice]]:
    """The cross-module test list: chains, grids, bowties, diamond, pentagon."""
    return [
        ("chain1", make_standard("chain", 1)),
        ("chain2", make_standard("chain", 2)),
        ("chain3", make_standard("chain", 3)),
        ("chain4", make_standard("chain", 4)),
        ("grid(1,1)", make_standard("grid", 1, 1)),
        ("grid(2,1)", make_standard("grid", 2, 1)),
        ("bowtie2", make_standard("bowtie", 2)),
        ("bowtie3", make_standard("bowtie", 3)),
        ("diamond", make_standard("diamond")),
        ("pentagon", make_standard("pentagon")),
    ]
