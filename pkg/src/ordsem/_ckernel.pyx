# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Same functions, outputs, ordering and RNG stream as ``ordsem._pykernel``;
keep the two in lockstep (the parity tests compare them directly).
"""

IMPLEMENTATION = "compiled"

KERNEL_MAX_N = 6

cdef int _UNSET = 255
cdef int _IN = 1
cdef int _OUT = 2
cdef int _UNDEC = 0

cdef unsigned long long _M64 = 0xFFFFFFFFFFFFFFFFULL


def _check_n(int n):
    if not 1 <= n <= KERNEL_MAX_N:
        raise ValueError(f"kernel supports 1 <= n <= {KERNEL_MAX_N}, got {n}")


cdef bint _consistent(unsigned char *t, int n, int i, int j) noexcept:
    cdef int v = t[i * n + j]
    cdef int u = _UNSET
    cdef int a, b, c, m1, m2, w1, w2
    for c in range(n):  # (a, b) = (i, j)
        m2 = t[v * n + c]
        if m2 == u:
            continue
        w1 = t[j * n + c]
        if w1 == u:
            continue
        w2 = t[i * n + w1]
        if w2 != u and m2 != w2:
            return False
    for a in range(n):  # (b, c) = (i, j)
        m1 = t[a * n + i]
        if m1 == u:
            continue
        m2 = t[m1 * n + j]
        if m2 == u:
            continue
        w2 = t[a * n + v]
        if w2 != u and m2 != w2:
            return False
    for a in range(n):  # (ab, c) = (i, j)
        for b in range(n):
            if t[a * n + b] != i:
                continue
            w1 = t[b * n + j]
            if w1 == u:
                continue
            w2 = t[a * n + w1]
            if w2 != u and v != w2:
                return False
    for b in range(n):  # (a, bc) = (i, j)
        for c in range(n):
            if t[b * n + c] != j:
                continue
            m1 = t[i * n + b]
            if m1 == u:
                continue
            m2 = t[m1 * n + c]
            if m2 != u and m2 != v:
                return False
    return True


cdef void _assoc_rec(unsigned char *t, int n, int pos, list out):
    cdef int nn = n * n
    cdef int i, j, v
    if pos == nn:
        out.append(bytes(t[:nn]))
        return
    i = pos // n
    j = pos - i * n
    for v in range(n):
        t[pos] = v
        if _consistent(t, n, i, j):
            _assoc_rec(t, n, pos + 1, out)
    t[pos] = _UNSET


def assoc_tables(int n, first_row=None):
    """Every associative n*n table, lexicographically ascending."""
    _check_n(n)
    cdef unsigned char t[36]
    cdef int nn = n * n
    cdef int k, j, v
    for k in range(nn):
        t[k] = _UNSET
    out = []
    cdef int start = 0
    if first_row is not None:
        if len(first_row) != n:
            raise ValueError(f"first_row must have {n} entries")
        for j in range(n):
            v = first_row[j]
            if not 0 <= v < n:
                raise ValueError(f"first_row entry out of range: {v}")
            t[j] = v
            if not _consistent(t, n, 0, j):
                return []
        start = n
    _assoc_rec(t, n, start, out)
    return out


cdef struct OrderState:
    int n
    int m
    unsigned char tbl[36]
    int pidx[36]          # (i * n + j) -> pair index, -1 on the diagonal
    int pair_i[30]
    int pair_j[30]
    int status[30]
    unsigned int succ[6]
    unsigned int pred[6]
    int in_i[30]
    int in_j[30]
    int in_count


cdef bint _can_include(OrderState *st, int i, int j) noexcept:
    cdef int n = st.n
    cdef int q, p, c, p1, q1, p2, q2
    cdef unsigned int mask
    if st.status[st.pidx[j * n + i]] == _IN:
        return False
    mask = st.succ[j]
    q = 0
    while mask:
        if mask & 1:
            if q != i and st.status[st.pidx[i * n + q]] == _OUT:
                return False
        mask >>= 1
        q += 1
    mask = st.pred[i]
    p = 0
    while mask:
        if mask & 1:
            if p != j and st.status[st.pidx[p * n + j]] == _OUT:
                return False
        mask >>= 1
        p += 1
    for c in range(n):
        p1 = st.tbl[c * n + i]
        q1 = st.tbl[c * n + j]
        if p1 != q1 and st.status[st.pidx[p1 * n + q1]] == _OUT:
            return False
        p2 = st.tbl[i * n + c]
        q2 = st.tbl[j * n + c]
        if p2 != q2 and st.status[st.pidx[p2 * n + q2]] == _OUT:
            return False
    return True


cdef bint _can_exclude(OrderState *st, int i, int j) noexcept:
    cdef int n = st.n
    cdef int k, c, x, y
    if st.succ[i] & st.pred[j]:
        return False
    for k in range(st.in_count):
        x = st.in_i[k]
        y = st.in_j[k]
        for c in range(n):
            if st.tbl[c * n + x] == i and st.tbl[c * n + y] == j:
                return False
            if st.tbl[x * n + c] == i and st.tbl[y * n + c] == j:
                return False
    return True


cdef void _orders_rec(OrderState *st, int k, list out):
    cdef int i, j, e
    cdef list rows
    if k == st.m:
        rows = []
        for e in range(st.n):
            rows.append((1 << e) | <int>st.succ[e])
        out.append(tuple(rows))
        return
    i = st.pair_i[k]
    j = st.pair_j[k]
    if _can_exclude(st, i, j):
        st.status[k] = _OUT
        _orders_rec(st, k + 1, out)
        st.status[k] = _UNDEC
    if _can_include(st, i, j):
        st.status[k] = _IN
        st.succ[i] |= 1u << j
        st.pred[j] |= 1u << i
        st.in_i[st.in_count] = i
        st.in_j[st.in_count] = j
        st.in_count += 1
        _orders_rec(st, k + 1, out)
        st.in_count -= 1
        st.succ[i] &= ~(1u << j)
        st.pred[j] &= ~(1u << i)
        st.status[k] = _UNDEC


def compatible_orders(int n, table):
    """Every partial order compatible with the table, as leq bitmask rows."""
    _check_n(n)
    tbl = bytes(table)
    if len(tbl) != n * n:
        raise ValueError(f"table must have {n * n} entries")
    cdef OrderState st
    cdef int i, j, k
    st.n = n
    st.in_count = 0
    for k in range(n * n):
        st.tbl[k] = tbl[k]
        st.pidx[k] = -1
    k = 0
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            st.pair_i[k] = i
            st.pair_j[k] = j
            st.pidx[i * n + j] = k
            st.status[k] = _UNDEC
            k += 1
    st.m = k
    for i in range(n):
        st.succ[i] = 0
        st.pred[i] = 0
    out = []
    _orders_rec(&st, 0, out)
    return out


cdef unsigned long long _xorshift(unsigned long long state) noexcept:
    state ^= (state << 13) & _M64
    state ^= state >> 7
    state ^= (state << 17) & _M64
    return state


cdef struct SampleState:
    unsigned long long rng
    long long nodes
    long long node_budget
    int max_count


cdef void _sample_rec(unsigned char *t, int n, int pos, SampleState *ss, list out):
    cdef int nn = n * n
    cdef int i, j, v, k, r, tmp
    cdef int vals[6]
    if len(out) >= ss.max_count or ss.nodes >= ss.node_budget:
        return
    if pos == nn:
        out.append(bytes(t[:nn]))
        return
    i = pos // n
    j = pos - i * n
    for k in range(n):
        vals[k] = k
    for k in range(n - 1, 0, -1):
        ss.rng = _xorshift(ss.rng)
        r = <int>(ss.rng % <unsigned long long>(k + 1))
        tmp = vals[k]
        vals[k] = vals[r]
        vals[r] = tmp
    for k in range(n):
        v = vals[k]
        if len(out) >= ss.max_count or ss.nodes >= ss.node_budget:
            break
        ss.nodes += 1
        t[pos] = v
        if _consistent(t, n, i, j):
            _sample_rec(t, n, pos + 1, ss, out)
    t[pos] = _UNSET


def sample_tables(int n, seed, int max_count, node_budget):
    """Seed-deterministic randomized backtracking sample of associative tables."""
    _check_n(n)
    cdef unsigned char t[36]
    cdef int k
    for k in range(n * n):
        t[k] = _UNSET
    cdef SampleState ss
    ss.rng = ((<unsigned long long>(seed & 0xFFFFFFFFFFFFFFFF)) << 1 | 1) & _M64
    ss.nodes = 0
    ss.node_budget = node_budget
    ss.max_count = max_count
    out = []
    _sample_rec(t, n, 0, &ss, out)
    return out
