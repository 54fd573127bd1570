"""Pure-Python enumeration kernels.

Fallback used when the compiled extension is unavailable.  Mirrors
``ordsem._ckernel`` function by function: identical outputs, identical
order, identical RNG stream.  Tables travel as flat row-major bytes.
"""

from __future__ import annotations

from typing import Optional, Sequence

IMPLEMENTATION = "pure"

KERNEL_MAX_N = 6
_UNSET = 255

_IN, _OUT, _UNDEC = 1, 2, 0

_M64 = (1 << 64) - 1


def _check_n(n: int) -> None:
    if not 1 <= n <= KERNEL_MAX_N:
        raise ValueError(f"kernel supports 1 <= n <= {KERNEL_MAX_N}, got {n}")


def _consistent(t: bytearray, n: int, i: int, j: int) -> bool:
    # Checks every associativity triple completed by the new cell (i, j).
    # A triple (a, b, c) needs cells (a,b), (b,c), (ab,c), (a,bc); the new
    # cell can play any of the four roles.
    v = t[i * n + j]
    u = _UNSET
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
    for a in range(n):  # (ab, c) = (i, j): here t[a][b] == i, c == j, m2 == v
        for b in range(n):
            if t[a * n + b] != i:
                continue
            w1 = t[b * n + j]
            if w1 == u:
                continue
            w2 = t[a * n + w1]
            if w2 != u and v != w2:
                return False
    for b in range(n):  # (a, bc) = (i, j): here t[b][c] == j, a == i, w2 == v
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


def assoc_tables(n: int, first_row: Optional[Sequence[int]] = None) -> list[bytes]:
    """Every associative n*n table, lexicographically ascending.

    ``first_row`` pins row 0, which partitions the space for parallel
    search.  Returns flat row-major bytes.
    """
    _check_n(n)
    nn = n * n
    t = bytearray([_UNSET] * nn)
    out: list[bytes] = []
    start = 0
    if first_row is not None:
        if len(first_row) != n:
            raise ValueError(f"first_row must have {n} entries")
        for j, v in enumerate(first_row):
            if not 0 <= v < n:
                raise ValueError(f"first_row entry out of range: {v}")
            t[j] = v
            if not _consistent(t, n, 0, j):
                return []
        start = n

    def rec(pos: int) -> None:
        if pos == nn:
            out.append(bytes(t))
            return
        i, j = divmod(pos, n)
        for v in range(n):
            t[pos] = v
            if _consistent(t, n, i, j):
                rec(pos + 1)
        t[pos] = _UNSET

    rec(start)
    return out


def compatible_orders(n: int, table: bytes) -> list[tuple[int, ...]]:
    """Every partial order compatible with the table, as leq bitmask rows.

    Include/exclude DFS over strict pairs in lexicographic order, pruning
    against already-decided pairs; antisymmetry, transitivity and two-sided
    compatibility violations are all rejected when their last participating
    pair is decided.  The discrete order comes first.
    """
    _check_n(n)
    tbl = bytes(table)
    if len(tbl) != n * n:
        raise ValueError(f"table must have {n * n} entries")
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    m = len(pairs)
    pidx = {pair: k for k, pair in enumerate(pairs)}
    status = [_UNDEC] * m
    succ = [0] * n
    pred = [0] * n
    in_pairs: list[tuple[int, int]] = []
    out: list[tuple[int, ...]] = []

    def can_include(i: int, j: int) -> bool:
        if status[pidx[(j, i)]] == _IN:
            return False
        q_mask = succ[j]
        while q_mask:
            low = q_mask & -q_mask
            q = low.bit_length() - 1
            q_mask ^= low
            if q != i and status[pidx[(i, q)]] == _OUT:
                return False
        p_mask = pred[i]
        while p_mask:
            low = p_mask & -p_mask
            p = low.bit_length() - 1
            p_mask ^= low
            if p != j and status[pidx[(p, j)]] == _OUT:
                return False
        for c in range(n):
            p1 = tbl[c * n + i]
            q1 = tbl[c * n + j]
            if p1 != q1 and status[pidx[(p1, q1)]] == _OUT:
                return False
            p2 = tbl[i * n + c]
            q2 = tbl[j * n + c]
            if p2 != q2 and status[pidx[(p2, q2)]] == _OUT:
                return False
        return True

    def can_exclude(i: int, j: int) -> bool:
        if succ[i] & pred[j]:
            return False
        for x, y in in_pairs:
            for c in range(n):
                if tbl[c * n + x] == i and tbl[c * n + y] == j:
                    return False
                if tbl[x * n + c] == i and tbl[y * n + c] == j:
                    return False
        return True

    def rec(k: int) -> None:
        if k == m:
            out.append(tuple((1 << i) | succ[i] for i in range(n)))
            return
        i, j = pairs[k]
        if can_exclude(i, j):
            status[k] = _OUT
            rec(k + 1)
            status[k] = _UNDEC
        if can_include(i, j):
            status[k] = _IN
            succ[i] |= 1 << j
            pred[j] |= 1 << i
            in_pairs.append((i, j))
            rec(k + 1)
            in_pairs.pop()
            succ[i] &= ~(1 << j)
            pred[j] &= ~(1 << i)
            status[k] = _UNDEC

    rec(0)
    return out


def _xorshift(state: int) -> int:
    state ^= (state << 13) & _M64
    state ^= state >> 7
    state ^= (state << 17) & _M64
    return state


def sample_tables(n: int, seed: int, max_count: int, node_budget: int) -> list[bytes]:
    """Randomized-order backtracking sample of associative tables.

    Deterministic for a fixed seed; stops at ``max_count`` tables or after
    ``node_budget`` cell assignments, whichever comes first.
    """
    _check_n(n)
    nn = n * n
    t = bytearray([_UNSET] * nn)
    out: list[bytes] = []
    state = ((seed & _M64) << 1 | 1) & _M64
    nodes = 0

    def rec(pos: int) -> None:
        nonlocal state, nodes
        if len(out) >= max_count or nodes >= node_budget:
            return
        if pos == nn:
            out.append(bytes(t))
            return
        i, j = divmod(pos, n)
        vals = list(range(n))
        for k in range(n - 1, 0, -1):
            state = _xorshift(state)
            r = state % (k + 1)
            vals[k], vals[r] = vals[r], vals[k]
        for v in vals:
            if len(out) >= max_count or nodes >= node_budget:
                break
            nodes += 1
            t[pos] = v
            if _consistent(t, n, i, j):
                rec(pos + 1)
        t[pos] = _UNSET

    rec(0)
    return out
