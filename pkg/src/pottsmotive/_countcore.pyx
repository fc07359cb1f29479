# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled point-counting kernel: the C twin of _countpure.

Same recursion, same early exits, C integer arithmetic throughout.  All
coefficients are reduced into [0, prime) so every intermediate product fits
comfortably in 64 bits for any prime below 2^31.
"""

from libc.stdlib cimport free, malloc

ctypedef long long i64


cdef i64 _ipow(i64 base, int e) noexcept:
    cdef i64 r = 1
    cdef int i
    for i in range(e):
        r *= base
    return r


cdef i64 _inv_mod(i64 a, i64 p) noexcept:
    # Fermat inverse; a is nonzero mod the prime p.
    cdef i64 r = 1
    cdef i64 b = a % p
    cdef i64 e = p - 2
    while e > 0:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


cdef struct KState:
    int npolys
    int nvars
    i64 prime
    int **shapes      # [poly][level] extent of each variable
    long **sizes      # [poly][level] flat size once `level` vars are fixed
    i64 **bufs        # [level * npolys + poly] scratch for specialization
    i64 **curtab      # [level * npolys + poly] current coeff pointer table
    long *sizetab     # [level * npolys + poly] current flat sizes
    unsigned char *acttab  # [level * npolys + poly] active flags


cdef i64 _univariate(i64 *coeffs, long n, i64 prime) noexcept:
    cdef i64 count = 0, acc
    cdef i64 v
    cdef long i
    for v in range(prime):
        acc = coeffs[n - 1]
        for i in range(n - 2, -1, -1):
            acc = (acc * v + coeffs[i]) % prime
        if acc == 0:
            count += 1
    return count


cdef i64 _bilinear(i64 *coeffs, int s0, int s1, i64 prime) noexcept:
    cdef i64 c00 = coeffs[0]
    cdef i64 c01 = coeffs[1] if s1 == 2 else 0
    cdef i64 c10 = 0, c11 = 0
    cdef i64 x0, alpha
    if s0 == 2:
        c10 = coeffs[s1]
        if s1 == 2:
            c11 = coeffs[s1 + 1]
    if c11:
        x0 = ((prime - c01) * _inv_mod(c11, prime)) % prime
        alpha = (c00 + c10 * x0) % prime
        return (prime - 1) + (prime if alpha == 0 else 0)
    if c01:
        return prime
    if c10:
        return prime
    return 0


cdef i64 _count(KState *st, int lvl) noexcept:
    cdef int npolys = st.npolys
    cdef int left = st.nvars - lvl
    cdef int j, nact = 0, single = -1
    cdef i64 *cur
    cdef long base = lvl * npolys
    for j in range(npolys):
        if st.acttab[base + j]:
            if st.sizetab[base + j] == 1:
                return 0
            nact += 1
            single = j
    if nact == 0:
        return _ipow(st.prime, left)
    if nact == 1:
        cur = st.curtab[base + single]
        if left == 1:
            return _univariate(cur, st.sizetab[base + single], st.prime)
        if (left == 2 and st.shapes[single][lvl] <= 2
                and st.shapes[single][lvl + 1] <= 2):
            return _bilinear(cur, st.shapes[single][lvl],
                             st.shapes[single][lvl + 1], st.prime)

    cdef long nxt = (lvl + 1) * npolys
    cdef i64 total = 0
    cdef i64 v, prime = st.prime
    cdef bint dead
    cdef int d0
    cdef long block, i, t, off
    cdef i64 *src
    cdef i64 *buf
    cdef bint nz
    for v in range(prime):
        dead = False
        for j in range(npolys):
            if not st.acttab[base + j]:
                st.acttab[nxt + j] = 0
                continue
            d0 = st.shapes[j][lvl]
            src = st.curtab[base + j]
            if d0 == 1:
                st.curtab[nxt + j] = src
                st.sizetab[nxt + j] = st.sizetab[base + j]
                st.acttab[nxt + j] = 1
                continue
            block = st.sizetab[base + j] / d0
            buf = st.bufs[nxt + j]
            off = (d0 - 1) * block
            for t in range(block):
                buf[t] = src[off + t]
            for i in range(d0 - 2, -1, -1):
                off = i * block
                for t in range(block):
                    buf[t] = (buf[t] * v + src[off + t]) % prime
            nz = False
            for t in range(block):
                if buf[t]:
                    nz = True
                    break
            if not nz:
                st.acttab[nxt + j] = 0
                continue
            if block == 1:
                dead = True
                break
            st.curtab[nxt + j] = buf
            st.sizetab[nxt + j] = block
            st.acttab[nxt + j] = 1
        if dead:
            continue
        total += _count(st, lvl + 1)
    return total


def count_common_zeros(polys, int nvars, prime):
    """Number of points of F_p^nvars at which every polynomial vanishes.

    `polys` is a list of (shape, coeffs) pairs as in _countpure.
    """
    cdef i64 p = prime
    active = []
    for shape, coeffs in polys:
        if len(shape) != nvars:
            raise ValueError("polynomial shape does not match the variable count")
        reduced = [c % prime for c in coeffs]
        if any(reduced):
            active.append((tuple(shape), reduced))
    if not active:
        return prime**nvars

    cdef int npolys = len(active)
    cdef int levels = nvars + 1
    cdef KState st
    st.npolys = npolys
    st.nvars = nvars
    st.prime = p
    st.shapes = <int **>malloc(npolys * sizeof(int *))
    st.sizes = <long **>malloc(npolys * sizeof(long *))
    st.bufs = <i64 **>malloc(levels * npolys * sizeof(i64 *))
    st.curtab = <i64 **>malloc(levels * npolys * sizeof(i64 *))
    st.sizetab = <long *>malloc(levels * npolys * sizeof(long))
    st.acttab = <unsigned char *>malloc(levels * npolys)
    if (st.shapes == NULL or st.sizes == NULL or st.bufs == NULL
            or st.curtab == NULL or st.sizetab == NULL or st.acttab == NULL):
        raise MemoryError()
    cdef int j, lvl
    cdef long size, t
    for j in range(levels * npolys):
        st.bufs[j] = NULL
    for j in range(npolys):
        st.shapes[j] = NULL
        st.sizes[j] = NULL
    try:
        for j in range(npolys):
            shape, coeffs = active[j]
            st.shapes[j] = <int *>malloc(nvars * sizeof(int))
            st.sizes[j] = <long *>malloc(levels * sizeof(long))
            if st.shapes[j] == NULL or st.sizes[j] == NULL:
                raise MemoryError()
            size = len(coeffs)
            for lvl in range(nvars):
                st.shapes[j][lvl] = shape[lvl]
                st.sizes[j][lvl] = size
                size = size / shape[lvl]
            st.sizes[j][nvars] = 1
            # level-0 coefficients live in bufs[0*npolys + j]
            st.bufs[j] = <i64 *>malloc(st.sizes[j][0] * sizeof(i64))
            if st.bufs[j] == NULL:
                raise MemoryError()
            for t in range(st.sizes[j][0]):
                st.bufs[j][t] = coeffs[t]
            for lvl in range(1, levels):
                if st.sizes[j][lvl] > 0:
                    st.bufs[lvl * npolys + j] = <i64 *>malloc(
                        st.sizes[j][lvl] * sizeof(i64))
                    if st.bufs[lvl * npolys + j] == NULL:
                        raise MemoryError()
            st.curtab[j] = st.bufs[j]
            st.sizetab[j] = st.sizes[j][0]
            st.acttab[j] = 1
        return int(_count(&st, 0))
    finally:
        for j in range(npolys):
            if st.shapes[j] != NULL:
                free(st.shapes[j])
            if st.sizes[j] != NULL:
                free(st.sizes[j])
        for j in range(levels * npolys):
            if st.bufs[j] != NULL:
                free(st.bufs[j])
        free(st.shapes)
        free(st.sizes)
        free(st.bufs)
        free(st.curtab)
        free(st.sizetab)
        free(st.acttab)
