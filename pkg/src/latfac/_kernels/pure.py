"""Pure-Python closure and enumeration kernels.

The hot operation is closing a relation under transitivity and pullback
(restriction along the order), optionally also under the two-out-of-three
rule.  Relations are handled here as per-element successor bitmasks; the
public interface speaks pair bitsets (bit k set <=> pair k present) so the
compiled backend can be swapped in without changing callers.
"""

from __future__ import annotations

from ..errors import EnumerationLimitExceeded


class PureKernel:
    backend = "pure"

    def __init__(
        self,
        n: int,
        down_strict: list[int],
        up_strict: list[int],
        meet_flat: list[int],
        pair_src: list[int],
        pair_dst: list[int],
    ):
        self.n = n
        self.down_strict = list(down_strict)
        self.up_strict = list(up_strict)
        self.meet_flat = list(meet_flat)
        self.pair_src = list(pair_src)
        self.pair_dst = list(pair_dst)
        self.K = len(pair_src)

    # -- representation ----------------------------------------------------

    def _succ(self, rel: int) -> list[int]:
        succ = [0] * self.n
        src, dst = self.pair_src, self.pair_dst
        k = 0
        while rel:
            if rel & 1:
                succ[src[k]] |= 1 << dst[k]
            rel >>= 1
            k += 1
        return succ

    def _mask(self, succ: list[int]) -> int:
        mask = 0
        src, dst = self.pair_src, self.pair_dst
        for k in range(self.K):
            if succ[src[k]] >> dst[k] & 1:
                mask |= 1 << k
        return mask

    # -- closure -------------------------------------------------------------

    def _close_succ(self, succ: list[int], saturated: bool) -> None:
        n = self.n
        meet = self.meet_flat
        down_strict = self.down_strict
        up_strict = self.up_strict
        changed = True
        while changed:
            changed = False
            # transitivity
            for y in range(n):
                sy = succ[y]
                if not sy:
                    continue
                for x in range(n):
                    sx = succ[x]
                    if sx >> y & 1 and sx | sy != sx:
                        succ[x] = sx | sy
                        changed = True
            # pullback: (y,z) present and x < z  =>  (x^y, x) present
            for y in range(n):
                zs = succ[y]
                base = y * n
                while zs:
                    lowz = zs & -zs
                    z = lowz.bit_length() - 1
                    zs ^= lowz
                    xs = down_strict[z]
                    while xs:
                        lowx = xs & -xs
                        x = lowx.bit_length() - 1
                        xs ^= lowx
                        m = meet[base + x]
                        if m != x and not succ[m] >> x & 1:
                            succ[m] |= 1 << x
                            changed = True
            if saturated:
                # (x,y) and (x,z) present with y < z  =>  (y,z) present
                for x in range(n):
                    sx = succ[x]
                    ys = sx
                    while ys:
                        lowy = ys & -ys
                        y = lowy.bit_length() - 1
                        ys ^= lowy
                        add = sx & up_strict[y] & ~succ[y]
                        if add:
                            succ[y] |= add
                            changed = True

    def close(self, rel: int) -> int:
        """Least transfer system containing the given pair bitset."""
        succ = self._succ(rel)
        self._close_succ(succ, saturated=False)
        return self._mask(succ)

    def close_saturated(self, rel: int) -> int:
        """Least saturated transfer system containing the given pair bitset."""
        succ = self._succ(rel)
        self._close_succ(succ, saturated=True)
        return self._mask(succ)

    # -- predicates ------------------------------------------------------------

    def is_transfer(self, rel: int) -> bool:
        return self.close(rel) == rel

    def is_saturated(self, rel: int) -> bool:
        """Two-out-of-three check; assumes ``rel`` is already a transfer system."""
        succ = self._succ(rel)
        up_strict = self.up_strict
        for x in range(self.n):
            sx = succ[x]
            ys = sx
            while ys:
                lowy = ys & -ys
                y = lowy.bit_length() - 1
                ys ^= lowy
                if sx & up_strict[y] & ~succ[y]:
                    return False
        return True

    # -- enumeration -------------------------------------------------------------

    def enumerate_closed(self, saturated: bool, limit: int) -> list[int]:
        """All (saturated) transfer systems, ascending by pair bitset.

        Depth-first search over the closure system: start from the empty
        system and repeatedly close the union with one extra pair.  Every
        system is reachable this way because the family is intersection
        closed, so the closure of any subset of a system stays inside it.
        """
        close = self.close_saturated if saturated else self.close
        seen = {0}
        stack = [0]
        out = []
        K = self.K
        while stack:
            cur = stack.pop()
            out.append(cur)
            for k in range(K):
                b = 1 << k
                if cur & b:
                    continue
                nxt = close(cur | b)
                if nxt not in seen:
                    if len(seen) >= limit:
                        raise EnumerationLimitExceeded(
                            f"more than {limit} systems on this lattice"
                        )
                    seen.add(nxt)
                    stack.append(nxt)
        out.sort()
        return out
