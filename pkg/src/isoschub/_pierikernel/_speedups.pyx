# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the reference Pieri enumeration kernel.

Same contract as ``reference.pieri_targets``: all k-strict targets of the
covering relation at degree p within the given row/column bounds, with
component statistics.  Fixed-size C buffers; the dispatch layer falls
back to the reference for oversized inputs.
"""

DEF _MAX_ROWS = 64
DEF _MAX_BOXES = 512

MAX_ROWS = _MAX_ROWS
MAX_BOXES = _MAX_BOXES


cdef struct _State:
    long lam[_MAX_ROWS]
    long mu[_MAX_ROWS]
    long lows[_MAX_ROWS]
    long suffix[_MAX_ROWS + 1]
    int nl
    int max_rows
    int k
    long col_bound
    # scratch for the analyzer
    int box_row[_MAX_BOXES]
    int box_col[_MAX_BOXES]
    int box_key[_MAX_BOXES]
    unsigned char mentioned[_MAX_BOXES]
    int parent[_MAX_BOXES]
    unsigned char touches[_MAX_BOXES]
    unsigned char seen[_MAX_BOXES]


cdef int _find(_State* st, int t) noexcept:
    cdef int root = t
    while st.parent[root] != root:
        root = st.parent[root]
    while st.parent[t] != root:
        st.parent[t], t = root, st.parent[t]
    return root


cdef bint _analyze(_State* st, int nm, int* comps_out, int* comps_off_out) noexcept:
    cdef int k = st.k
    cdef int na = 0, i, col, t, hl, hm, key, count, hit, row, witness_row
    cdef long base
    for i in range(nm):
        base = st.lam[i] if i < st.nl else 0
        col = <int>base + 1
        while col <= st.mu[i]:
            st.box_row[na] = i + 1
            st.box_col[na] = col
            if col > k:
                st.box_key[na] = (col - k - 1) + i + 1
            else:
                st.box_key[na] = (k + 1 - col) + i + 1
            st.mentioned[na] = 0
            na += 1
            col += 1

    for col in range(1, k + 1):
        hl = 0
        for i in range(st.nl):
            if st.lam[i] >= col:
                hl += 1
        hm = 0
        for i in range(nm):
            if st.mu[i] >= col:
                hm += 1
        if hl == hm:
            if hl == 0:
                continue
            key = (k + 1 - col) + hl
            count = 0
            hit = -1
            for t in range(na):
                if st.box_key[t] == key:
                    count += 1
                    hit = t
            if count > 1:
                return 0
            if count == 1:
                st.mentioned[hit] = 1
        elif hm < hl:
            witness_row = 0
            row = hm
            if row < 1:
                row = hm + 1
            while row <= hl:
                key = (k + 1 - col) + row
                count = 0
                hit = -1
                for t in range(na):
                    if st.box_key[t] == key:
                        count += 1
                        hit = t
                if count != 1:
                    return 0
                if witness_row == 0:
                    witness_row = st.box_row[hit]
                elif st.box_row[hit] != witness_row:
                    return 0
                st.mentioned[hit] = 1
                row += 1

    # union-find over uncovered boxes beyond column k, 8-adjacency
    cdef int a, b, ra, rb
    for t in range(na):
        st.parent[t] = t
    for a in range(na):
        if st.box_col[a] <= k or st.mentioned[a]:
            continue
        for b in range(a + 1, na):
            if st.box_col[b] <= k or st.mentioned[b]:
                continue
            if (st.box_row[a] - st.box_row[b] <= 1 and
                    st.box_row[b] - st.box_row[a] <= 1 and
                    st.box_col[a] - st.box_col[b] <= 1 and
                    st.box_col[b] - st.box_col[a] <= 1):
                ra = _find(st, a)
                rb = _find(st, b)
                if ra != rb:
                    st.parent[ra] = rb

    cdef int comps = 0, comps_off = 0
    for t in range(na):
        st.seen[t] = 0
        st.touches[t] = 0
    for t in range(na):
        if st.box_col[t] <= k or st.mentioned[t]:
            continue
        ra = _find(st, t)
        st.seen[ra] = 1
        if st.box_col[t] == k + 1:
            st.touches[ra] = 1
    for t in range(na):
        if st.seen[t]:
            comps += 1
            if not st.touches[t]:
                comps_off += 1
    comps_out[0] = comps
    comps_off_out[0] = comps_off
    return 1


cdef void _dfs(_State* st, int i, long rem, list out):
    cdef long high, val
    cdef int nm, comps, comps_off
    if i == st.max_rows:
        if rem == 0:
            nm = st.max_rows
            while nm and st.mu[nm - 1] == 0:
                nm -= 1
            if _analyze(st, nm, &comps, &comps_off):
                out.append((tuple([st.mu[t] for t in range(nm)]), comps, comps_off))
        return
    if i == 0:
        high = rem if st.col_bound < 0 else st.col_bound
    else:
        high = st.mu[i - 1]
        if st.lam[i - 1] < high:
            high = st.lam[i - 1]
    if rem - st.suffix[i + 1] < high:
        high = rem - st.suffix[i + 1]
    val = high
    while val >= st.lows[i]:
        if i > 0 and val == st.mu[i - 1] and val > st.k:
            val -= 1
            continue
        st.mu[i] = val
        _dfs(st, i + 1, rem - val, out)
        val -= 1
    st.mu[i] = 0


def pieri_targets(lam, int p, int k, long row_bound=-1, long col_bound=-1):
    """All (mu, components, components avoiding column k+1) with lam -> mu."""
    cdef _State st
    cdef int nl = len(lam)
    cdef int i
    cdef long total = p
    if p < 1:
        raise ValueError(f"Pieri degree must be >= 1, got {p}")
    if nl + 1 >= _MAX_ROWS or p + nl >= _MAX_BOXES:
        raise ValueError("input too large for the compiled kernel")
    st.nl = nl
    st.k = k
    st.col_bound = col_bound
    for i in range(nl):
        st.lam[i] = lam[i]
        total += lam[i]
    st.max_rows = nl + 1
    if 0 <= row_bound < st.max_rows:
        st.max_rows = <int>row_bound
    for i in range(st.max_rows, nl):
        if st.lam[i] != 1 or k < 1:
            return []
    for i in range(st.max_rows):
        if i < nl:
            st.lows[i] = st.lam[i] if st.lam[i] > k else st.lam[i] - 1
        else:
            st.lows[i] = 0
    st.suffix[st.max_rows] = 0
    for i in range(st.max_rows - 1, -1, -1):
        st.suffix[i] = st.suffix[i + 1] + st.lows[i]
    out = []
    _dfs(&st, 0, total, out)
    out.sort()
    return out
