"""Pure-Python kernel for Pieri target enumeration.

Given a k-strict partition lam and a degree p >= 1, enumerate every
k-strict mu with |mu| = |lam| + p that is reachable by removing a vertical
strip from the first k columns of lam and adding a horizontal strip, the
result subject to the two k-relatedness conditions on shrunk and preserved
columns.  For each target the kernel reports the connected-component
statistics of the uncovered added boxes beyond column k, which carry the
power-of-two Pieri multiplicities for both families.

This is the hot inner loop of every Pieri product; ``_speedups`` is the
compiled twin with the same contract.  Bounds of -1 mean unbounded (the
stable ring).  Results are sorted by target partition so both backends
agree bit for bit.
"""

from __future__ import annotations

Target = tuple[tuple[int, ...], int, int]


def _analyze(lam, mu, k, want_boxes=False):
    """Condition check plus component statistics for a candidate pair.

    Assumes the shape constraints (vertical strip off columns <= k,
    horizontal strip on the intersection, both partitions k-strict) hold;
    returns None when the k-relatedness conditions fail, otherwise
    (components, components avoiding column k+1) or, with want_boxes,
    (removed, added, uncovered, components, components_off).
    """
    nl, nm = len(lam), len(mu)
    added = []
    for i in range(nm):
        base = lam[i] if i < nl else 0
        for col in range(base + 1, mu[i] + 1):
            added.append((i + 1, col))
    # k-relation invariant |c-k-1| + r of each added box
    keys = [abs(col - k - 1) + row for row, col in added]
    mentioned = set()

    for col in range(1, k + 1):
        hl = sum(1 for part in lam if part >= col)
        hm = sum(1 for part in mu if part >= col)
        if hl == hm:
            if hl == 0:
                continue
            key = (k + 1 - col) + hl
            hits = [t for t, bk in enumerate(keys) if bk == key]
            if len(hits) > 1:
                return None
            if hits:
                mentioned.add(hits[0])
        elif hm < hl:
            rows = list(range(hm + 1, hl + 1))
            if hm >= 1:
                rows.append(hm)
            witness_row = 0
            for row in rows:
                key = (k + 1 - col) + row
                hits = [t for t, bk in enumerate(keys) if bk == key]
                if len(hits) != 1:
                    return None
                t = hits[0]
                if witness_row == 0:
                    witness_row = added[t][0]
                elif added[t][0] != witness_row:
                    return None
                mentioned.add(t)

    live = [t for t in range(len(added)) if added[t][1] > k and t not in mentioned]

    # connected components, two boxes adjacent when they share a vertex
    parent = {t: t for t in live}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    for a_idx in range(len(live)):
        ra, ca = added[live[a_idx]]
        for b_idx in range(a_idx + 1, len(live)):
            rb, cb = added[live[b_idx]]
            if abs(ra - rb) <= 1 and abs(ca - cb) <= 1:
                root_a, root_b = find(live[a_idx]), find(live[b_idx])
                if root_a != root_b:
                    parent[root_a] = root_b

    touches = {}
    for t in live:
        root = find(t)
        touches[root] = touches.get(root, False) or added[t][1] == k + 1
    comps = len(touches)
    comps_off = sum(1 for flag in touches.values() if not flag)

    if not want_boxes:
        return comps, comps_off
    removed = []
    for i in range(nl):
        cur = mu[i] if i < nm else 0
        if cur < lam[i]:
            removed.append((i + 1, lam[i]))
    uncovered = [added[t] for t in sorted(live)]
    return removed, added, uncovered, comps, comps_off


def _enumerate(lam, p, k, row_bound, col_bound):
    """Yield candidate mu (as trimmed tuples) satisfying the shape rules."""
    if p < 1:
        raise ValueError(f"Pieri degree must be >= 1, got {p}")
    nl = len(lam)
    total = sum(lam) + p
    max_rows = nl + 1
    if row_bound >= 0:
        max_rows = min(max_rows, row_bound)
    # rows forced to vanish must be single removable boxes in column <= k
    for i in range(max_rows, nl):
        if lam[i] != 1 or k < 1:
            return
    lows = []
    for i in range(max_rows):
        if i < nl:
            lows.append(lam[i] if lam[i] > k else lam[i] - 1)
        else:
            lows.append(0)
    suffix = [0] * (max_rows + 1)
    for i in range(max_rows - 1, -1, -1):
        suffix[i] = suffix[i + 1] + lows[i]
    mu = [0] * max_rows

    def rec(i, rem):
        if i == max_rows:
            if rem == 0:
                trimmed = len(mu)
                while trimmed and mu[trimmed - 1] == 0:
                    trimmed -= 1
                yield tuple(mu[:trimmed])
            return
        if i == 0:
            high = total if col_bound < 0 else col_bound
        else:
            high = min(mu[i - 1], lam[i - 1])
        high = min(high, rem - suffix[i + 1])
        for val in range(high, lows[i] - 1, -1):
            if i > 0 and val == mu[i - 1] and val > k:
                continue
            mu[i] = val
            yield from rec(i + 1, rem - val)
        mu[i] = 0

    yield from rec(0, total)


def pieri_targets(lam, p, k, row_bound=-1, col_bound=-1) -> list[Target]:
    """All (mu, components, components avoiding column k+1) with lam -> mu."""
    out = []
    for mu in _enumerate(lam, p, k, row_bound, col_bound):
        stats = _analyze(lam, mu, k)
        if stats is not None:
            out.append((mu, stats[0], stats[1]))
    out.sort()
    return out


def pieri_targets_witnessed(lam, p, k, row_bound=-1, col_bound=-1):
    """Like pieri_targets but with the removed/added/uncovered box sets."""
    out = []
    for mu in _enumerate(lam, p, k, row_bound, col_bound):
        stats = _analyze(lam, mu, k, want_boxes=True)
        if stats is not None:
            out.append((mu, *stats))
    out.sort(key=lambda item: item[0])
    return out
