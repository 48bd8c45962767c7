# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled closure and enumeration kernels (element bitmasks in uint64).

Mirrors the pure-Python backend exactly: same pair-bitset interface, same
DFS order, same outputs.  Limited to lattices with at most 64 elements.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdint cimport uint8_t, uint64_t
from libc.string cimport memcpy, memset

from ..errors import EnumerationLimitExceeded

cdef extern from *:
    int __builtin_ctzll(unsigned long long)

DEF MAXN = 64
DEF MAXK = 2016          # 64 * 63 / 2
DEF MAXB = 252           # bytes needed for MAXK pair bits


cdef class CompiledKernel:
    cdef readonly str backend
    cdef readonly int n
    cdef readonly int K
    cdef uint64_t down_strict[MAXN]
    cdef uint64_t up_strict[MAXN]
    cdef int meet_flat[MAXN * MAXN]
    cdef int src[MAXK]
    cdef int dst[MAXK]
    cdef int nbytes

    def __init__(self, n, down_strict, up_strict, meet_flat, pair_src, pair_dst):
        if n > MAXN:
            raise ValueError("compiled kernel supports at most 64 elements")
        self.backend = "compiled"
        self.n = n
        self.K = len(pair_src)
        self.nbytes = (self.K + 7) >> 3
        cdef int i
        for i in range(n):
            self.down_strict[i] = down_strict[i]
            self.up_strict[i] = up_strict[i]
        for i in range(n * n):
            self.meet_flat[i] = meet_flat[i]
        for i in range(self.K):
            self.src[i] = pair_src[i]
            self.dst[i] = pair_dst[i]

    # -- representation ----------------------------------------------------

    cdef void _unpack(self, const uint8_t* buf, uint64_t* succ):
        cdef int k
        memset(succ, 0, self.n * sizeof(uint64_t))
        for k in range(self.K):
            if buf[k >> 3] >> (k & 7) & 1:
                succ[self.src[k]] |= (<uint64_t>1) << self.dst[k]

    cdef bytes _pack(self, uint64_t* succ):
        cdef uint8_t buf[MAXB]
        cdef int k
        memset(buf, 0, self.nbytes)
        for k in range(self.K):
            if succ[self.src[k]] >> self.dst[k] & 1:
                buf[k >> 3] |= 1 << (k & 7)
        return PyBytes_FromStringAndSize(<char*>buf, self.nbytes)

    cdef void _from_int(self, object rel, uint64_t* succ):
        cdef bytes raw = (<object>rel).to_bytes(self.nbytes, "little")
        self._unpack(<const uint8_t*>raw, succ)

    cdef object _to_int(self, uint64_t* succ):
        return int.from_bytes(self._pack(succ), "little")

    # -- closure -------------------------------------------------------------

    cdef void _close_succ(self, uint64_t* succ, bint saturated):
        cdef int n = self.n
        cdef bint changed = True
        cdef int x, y, z, m, base
        cdef uint64_t sx, sy, zs, xs, ys, add
        while changed:
            changed = False
            for y in range(n):
                sy = succ[y]
                if sy == 0:
                    continue
                for x in range(n):
                    sx = succ[x]
                    if (sx >> y) & 1 and (sx | sy) != sx:
                        succ[x] = sx | sy
                        changed = True
            for y in range(n):
                zs = succ[y]
                base = y * n
                while zs:
                    z = __builtin_ctzll(zs)
                    zs &= zs - 1
                    xs = self.down_strict[z]
                    while xs:
                        x = __builtin_ctzll(xs)
                        xs &= xs - 1
                        m = self.meet_flat[base + x]
                        if m != x and not (succ[m] >> x) & 1:
                            succ[m] |= (<uint64_t>1) << x
                            changed = True
            if saturated:
                for x in range(n):
                    sx = succ[x]
                    ys = sx
                    while ys:
                        y = __builtin_ctzll(ys)
                        ys &= ys - 1
                        add = sx & self.up_strict[y] & ~succ[y]
                        if add:
                            succ[y] |= add
                            changed = True

    def close(self, rel):
        """Least transfer system containing the given pair bitset."""
        cdef uint64_t succ[MAXN]
        self._from_int(rel, succ)
        self._close_succ(succ, False)
        return self._to_int(succ)

    def close_saturated(self, rel):
        """Least saturated transfer system containing the given pair bitset."""
        cdef uint64_t succ[MAXN]
        self._from_int(rel, succ)
        self._close_succ(succ, True)
        return self._to_int(succ)

    # -- predicates ------------------------------------------------------------

    def is_transfer(self, rel):
        return self.close(rel) == rel

    def is_saturated(self, rel):
        """Two-out-of-three check; assumes ``rel`` is a transfer system."""
        cdef uint64_t succ[MAXN]
        cdef uint64_t sx, ys
        cdef int x, y
        self._from_int(rel, succ)
        for x in range(self.n):
            sx = succ[x]
            ys = sx
            while ys:
                y = __builtin_ctzll(ys)
                ys &= ys - 1
                if sx & self.up_strict[y] & ~succ[y]:
                    return False
        return True

    # -- enumeration -------------------------------------------------------------

    def enumerate_closed(self, saturated, limit):
        """All (saturated) transfer systems, ascending by pair bitset."""
        cdef uint64_t succ[MAXN]
        cdef uint64_t work[MAXN]
        cdef bint sat = bool(saturated)
        cdef int k
        cdef object key2
        memset(succ, 0, self.n * sizeof(uint64_t))
        start = self._pack(succ)
        seen = {start}
        stack = [start]
        out = []
        while stack:
            key = stack.pop()
            out.append(key)
            self._unpack(<const uint8_t*><bytes>key, succ)
            for k in range(self.K):
                if succ[self.src[k]] >> self.dst[k] & 1:
                    continue
                memcpy(work, succ, self.n * sizeof(uint64_t))
                work[self.src[k]] |= (<uint64_t>1) << self.dst[k]
                self._close_succ(work, sat)
                key2 = self._pack(work)
                if key2 not in seen:
                    if len(seen) >= limit:
                        raise EnumerationLimitExceeded(
                            f"more than {limit} systems on this lattice"
                        )
                    seen.add(key2)
                    stack.append(key2)
        masks = [int.from_bytes(key, "little") for key in out]
        masks.sort()
        return masks
