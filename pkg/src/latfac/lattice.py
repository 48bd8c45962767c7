"""Finite bounded lattices with precomputed order, meet, and join tables.

Elements are dense integer ids 0..n-1 listed in a linear extension of the
order, so index 0 is always the bottom element and index n-1 the top.  The
order is stored as per-element up-set bitmasks and meet/join as flat n*n
tables, which makes every query O(1) and every lattice canonically hashable.
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadParams,
    NoBoundedness,
    NotALattice,
    NotAPoset,
    SizeLimitExceeded,
)

DEFAULT_MAX_ELEMENTS = 64
MAX_ELEMENTS_ENV = "LATFAC_MAX_ELEMENTS"


def max_elements() -> int:
    """Element cap applied by constructors; override with LATFAC_MAX_ELEMENTS."""
    raw = os.environ.get(MAX_ELEMENTS_ENV)
    if raw is None:
        return DEFAULT_MAX_ELEMENTS
    try:
        cap = int(raw)
    except ValueError:
        raise BadParams(f"{MAX_ELEMENTS_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise BadParams(f"{MAX_ELEMENTS_ENV} must be positive, got {cap}")
    return cap


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Lattice:
    """Immutable finite bounded lattice.

    Not constructed directly: use :func:`build_lattice`, :func:`make_standard`,
    :func:`dual_lattice`, or :meth:`Lattice.from_dict`.
    """

    __slots__ = ("labels", "n", "up", "down", "meet_table", "join_table", "_hash")

    def __init__(
        self,
        labels: Sequence[str],
        up: Sequence[int],
        meet_table: Sequence[int],
        join_table: Sequence[int],
    ):
        self.labels: tuple[str, ...] = tuple(labels)
        self.n: int = len(self.labels)
        self.up: tuple[int, ...] = tuple(up)
        down = [0] * self.n
        for x in range(self.n):
            m = self.up[x]
            while m:
                low = m & -m
                down[low.bit_length() - 1] |= 1 << x
                m ^= low
        self.down: tuple[int, ...] = tuple(down)
        self.meet_table: tuple[int, ...] = tuple(meet_table)
        self.join_table: tuple[int, ...] = tuple(join_table)
        self._hash = hash((self.labels, self.up))

    # -- basic queries --------------------------------------------------

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.n - 1

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and bool(self.up[x] >> y & 1)

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x * self.n + y]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x * self.n + y]

    def elements(self) -> range:
        return range(self.n)

    def up_strict(self, x: int) -> int:
        return self.up[x] & ~(1 << x)

    def down_strict(self, x: int) -> int:
        return self.down[x] & ~(1 << x)

    def label(self, x: int) -> str:
        return self.labels[x]

    def is_cover(self, x: int, y: int) -> bool:
        """True when y covers x: x < y with nothing strictly between."""
        if not self.lt(x, y):
            return False
        between = self.up[x] & self.down[y] & ~(1 << x) & ~(1 << y)
        return between == 0

    def covers(self) -> list[tuple[int, int]]:
        """All covering pairs (x, y), lexicographically ordered."""
        out = []
        for x in range(self.n):
            for y in bits(self.up_strict(x)):
                if self.is_cover(x, y):
                    out.append((x, y))
        return out

    def heights(self) -> list[int]:
        """Longest-chain distance from the bottom, per element."""
        h = [0] * self.n
        for y in range(1, self.n):
            h[y] = 1 + max(h[x] for x in bits(self.down_strict(y)))
        return h

    # -- equality / hashing ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Lattice)
            and self.labels == other.labels
            and self.up == other.up
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Lattice(n={self.n}, labels={list(self.labels)!r})"

    # -- serialization ---------------------------------------------------

    def as_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "covers": [[x, y] for x, y in self.covers()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Lattice":
        try:
            labels = list(data["labels"])
            covers = [tuple(p) for p in data["covers"]]
        except (KeyError, TypeError) as exc:
            raise BadParams(f"malformed lattice record: {exc}") from None
        for p in covers:
            if len(p) != 2 or not all(isinstance(i, int) for i in p):
                raise BadParams(f"malformed cover pair {p!r}")
            if not all(0 <= i < len(labels) for i in p):
                raise BadParams(f"cover pair {p!r} out of range")
        pairs = {(labels[i], labels[j]) for i, j in covers}
        return build_lattice(labels, pairs)


def build_lattice(
    labels: Sequence[str], leq_pairs: Iterable[tuple[str, str]]
) -> Lattice:
    """Build a lattice from labels and order generators given as label pairs.

    ``leq_pairs`` may be a cover list or any relation whose reflexive
    transitive closure is the intended order; the closure is computed here.
    Raises NotAPoset / NotALattice / NoBoundedness when the input fails the
    corresponding axiom, and SizeLimitExceeded past the element cap.
    """
    labels = list(labels)
    n = len(labels)
    if n == 0:
        raise BadParams("a bounded lattice needs at least one element")
    if len(set(labels)) != n:
        raise BadParams("labels must be distinct")
    cap = max_elements()
    if n > cap:
        raise SizeLimitExceeded(f"{n} elements exceeds the cap of {cap}")
    idx = {lab: i for i, lab in enumerate(labels)}

    adj = [1 << i for i in range(n)]
    for a, b in leq_pairs:
        if a not in idx or b not in idx:
            raise BadParams(f"pair ({a!r}, {b!r}) mentions an unknown label")
        adj[idx[a]] |= 1 << idx[b]
    # reflexive-transitive closure (Warshall over bitmasks)
    for k in range(n):
        bit_k = 1 << k
        for i in range(n):
            if adj[i] & bit_k:
                adj[i] |= adj[k]
    for i in range(n):
        for j in bits(adj[i]):
            if i != j and adj[j] >> i & 1:
                raise NotAPoset(f"{labels[i]!r} <= {labels[j]!r} <= {labels[i]!r}")

    order = _linear_extension(adj)
    new_of_old = {old: new for new, old in enumerate(order)}
    new_labels = [labels[old] for old in order]
    up = [0] * n
    for old in range(n):
        m = 0
        for j in bits(adj[old]):
            m |= 1 << new_of_old[j]
        up[new_of_old[old]] = m

    down0 = [0] * n
    for x in range(n):
        for y in bits(up[x]):
            down0[y] |= 1 << x

    meet = [0] * (n * n)
    join = [0] * (n * n)
    for x in range(n):
        for y in range(n):
            lower = down0[x] & down0[y]
            # in a linear extension the greatest lower bound, if any, is the
            # highest-index common lower bound
            glb = lower.bit_length() - 1
            if lower == 0 or lower & ~down0[glb]:
                raise NotALattice(
                    f"{new_labels[x]!r} and {new_labels[y]!r} have no meet"
                )
            meet[x * n + y] = glb
            upper = up[x] & up[y]
            if upper == 0:
                raise NotALattice(
                    f"{new_labels[x]!r} and {new_labels[y]!r} have no join"
                )
            lub = (upper & -upper).bit_length() - 1
            if upper & ~up[lub]:
                raise NotALattice(
                    f"{new_labels[x]!r} and {new_labels[y]!r} have no join"
                )
            join[x * n + y] = lub

    full = (1 << n) - 1
    if up[0] != full or down0[n - 1] != full:
        raise NoBoundedness("no global bottom or top element")
    return Lattice(new_labels, up, meet, join)


def _linear_extension(adj: list[int]) -> list[int]:
    """Topological order of the closed relation, smallest original index first."""
    n = len(adj)
    down_count = [0] * n
    for i in range(n):
        for j in bits(adj[i]):
            if j != i:
                down_count[j] += 1
    placed = 0
    ready = [i for i in range(n) if down_count[i] == 0]
    order = []
    seen = [False] * n
    while len(order) < n:
        ready = sorted(i for i in ready if not seen[i])
        if not ready:
            raise NotAPoset("order relation contains a cycle")
        i = ready[0]
        seen[i] = True
        order.append(i)
        newly = []
        for j in bits(adj[i]):
            if j != i:
                down_count[j] -= 1
                if down_count[j] == 0:
                    newly.append(j)
        ready = ready[1:] + newly
        placed += 1
    return order


def make_standard(kind: str, *params: int) -> Lattice:
    """Construct one of the stock lattice families.

    chain(n): the chain 0 < 1 < ... < n.
    grid(m, n): product of chain(m) and chain(n), componentwise order.
    boolean(n): powerset lattice of an n-element set.
    bowtie(n): bottom, top, and n pairwise-incomparable middle elements.
    diamond: bottom, top, three incomparable middles (M3).
    pentagon: the five-element non-modular lattice (N5).
    """
    for p in params:
        if not isinstance(p, int) or p < 0:
            raise BadParams(f"parameters must be nonnegative integers, got {p!r}")

    def arity(k: int) -> None:
        if len(params) != k:
            raise BadParams(f"{kind} takes {k} parameter(s), got {len(params)}")

    if kind == "chain":
        arity(1)
        (n,) = params
        labels = [str(i) for i in range(n + 1)]
        pairs = {(str(i), str(i + 1)) for i in range(n)}
        return build_lattice(labels, pairs)
    if kind == "grid":
        arity(2)
        m, n = params
        labels = [f"({i},{j})" for i in range(m + 1) for j in range(n + 1)]
        pairs = set()
        for i in range(m + 1):
            for j in range(n + 1):
                if i < m:
                    pairs.add((f"({i},{j})", f"({i + 1},{j})"))
                if j < n:
                    pairs.add((f"({i},{j})", f"({i},{j + 1})"))
        return build_lattice(labels, pairs)
    if kind == "boolean":
        arity(1)
        (n,) = params
        if n > 16:
            raise BadParams(f"boolean({n}) is far beyond the element cap")
        def name(s: int) -> str:
            return "{" + ",".join(str(i) for i in range(n) if s >> i & 1) + "}"
        labels = [name(s) for s in sorted(range(1 << n), key=lambda s: (bin(s).count("1"), s))]
        pairs = set()
        for s in range(1 << n):
            for i in range(n):
                if not s >> i & 1:
                    pairs.add((name(s), name(s | 1 << i)))
        return build_lattice(labels, pairs)
    if kind == "bowtie":
        arity(1)
        (n,) = params
        if n < 1:
            raise BadParams("bowtie needs at least one middle element")
        labels = ["0"] + [f"m{i + 1}" for i in range(n)] + ["1"]
        pairs = {("0", f"m{i + 1}") for i in range(n)} | {
            (f"m{i + 1}", "1") for i in range(n)
        }
        return build_lattice(labels, pairs)
    if kind == "diamond":
        arity(0)
        return build_lattice(
            ["0", "a", "b", "c", "1"],
            {("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")},
        )
    if kind == "pentagon":
        arity(0)
        return build_lattice(
            ["0", "a", "b", "c", "1"],
            {("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")},
        )
    raise BadParams(f"unknown lattice kind {kind!r}")


def dual_lattice(lat: Lattice) -> Lattice:
    """Order-reversed lattice; element i maps to n-1-i, labels preserved.

    dual_lattice(dual_lattice(L)) == L exactly, and the index map is its own
    inverse, so duality arguments can identify elements by i -> n-1-i.
    """
    n = lat.n
    d = n - 1
    labels = [lat.labels[d - i] for i in range(n)]
    up = [0] * n
    for i in range(n):
        m = 0
        for j in bits(lat.down[d - i]):
            m |= 1 << (d - j)
        up[i] = m
    meet = [0] * (n * n)
    join = [0] * (n * n)
    for x in range(n):
        for y in range(n):
            meet[x * n + y] = d - lat.join(d - x, d - y)
            join[x * n + y] = d - lat.meet(d - x, d - y)
    return Lattice(labels, up, meet, join)


@lru_cache(maxsize=1024)
def is_modular(lat: Lattice) -> bool:
    """Modular law: a <= b implies a v (x ^ b) = (a v x) ^ b, all triples."""
    n = lat.n
    for a in range(n):
        for b in bits(lat.up[a]):
            for x in range(n):
                if lat.join(a, lat.meet(x, b)) != lat.meet(lat.join(a, x), b):
                    return False
    return True


def covering_diamonds(lat: Lattice) -> list[tuple[int, int, int, int]]:
    """Tetrads (x^y, x, y, x v y) where x, y cover the meet and the join covers both."""
    out = []
    for x in range(lat.n):
        for y in range(x + 1, lat.n):
            if lat.leq(x, y) or lat.leq(y, x):
                continue
            m = lat.meet(x, y)
            j = lat.join(x, y)
            if (
                lat.is_cover(m, x)
                and lat.is_cover(m, y)
                and lat.is_cover(x, j)
                and lat.is_cover(y, j)
            ):
                out.append((m, x, y, j))
    return out


def hasse_dot(lat: Lattice, *, extra_edges: Iterable[tuple[int, int]] = (), name: str = "lattice") -> str:
    """DOT rendering of the Hasse diagram, bottom at rank 0.

    ``extra_edges`` are drawn in color atop the diagram (used for transfer
    system overlays).
    """
    lines = [f"digraph {name} {{", "  rankdir=BT;", '  node [shape=ellipse];']
    heights = lat.heights()
    by_height: dict[int, list[int]] = {}
    for x, h in enumerate(heights):
        by_height.setdefault(h, []).append(x)
    for x in range(lat.n):
        lines.append(f'  n{x} [label="{lat.labels[x]}"];')
    for h in sorted(by_height):
        group = " ".join(f"n{x};" for x in by_height[h])
        lines.append(f"  {{ rank=same; {group} }}")
    for x, y in lat.covers():
        lines.append(f"  n{x} -> n{y};")
    for x, y in sorted(set(extra_edges)):
        lines.append(f'  n{x} -> n{y} [color=red, constraint=false, style=bold];')
    lines.append("}")
    return "\n".join(lines) + "\n"
