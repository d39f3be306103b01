"""k-strict partitions, box combinatorics, and space contexts.

Schubert classes of the symplectic Grassmannian IG(n-k, 2n) and of the odd
orthogonal Grassmannian OG(n-k, 2n+1) are indexed by k-strict partitions
(weakly decreasing positive parts, the parts greater than k pairwise
distinct) whose diagram fits in an (n-k) x (n+k) rectangle.  This module
owns the partition layer: validation, enumeration of the index set,
k-relatedness of boxes, the pair statistics feeding the raising-operator
machinery, and the rank functions used to describe Schubert varieties.

Partitions are plain tuples of ints, descending, with no trailing zeros;
the empty tuple is the unit index.  Boxes are (row, col) pairs, 1-based,
in matrix convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

Partition = tuple[int, ...]
BoxT = tuple[int, int]

IG = "IG"
OG = "OG"
FAMILIES = (IG, OG)


def normalize(parts) -> Partition:
    """Coerce an iterable of parts to a trimmed descending tuple.

    Trailing zeros are dropped; anything not weakly decreasing or with a
    negative entry is rejected.
    """
    parts = tuple(int(x) for x in parts)
    for i in range(len(parts) - 1):
        if parts[i] < parts[i + 1]:
            raise ValueError(f"parts not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"negative part in {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def is_k_strict(parts, k: int) -> bool:
    """Whether ``parts`` is a valid k-strict partition.

    Total on arbitrary integer sequences (so it can gate parsers): not
    weakly decreasing, negative entries, or a repeated part greater than
    k all yield False.  Trailing zeros are tolerated.
    """
    parts = tuple(parts)
    for i in range(len(parts) - 1):
        if parts[i] < parts[i + 1]:
            return False
        if parts[i] == parts[i + 1] and parts[i] > k:
            return False
    if parts and parts[-1] < 0:
        return False
    return True


def validate_k_strict(lam, k: int) -> Partition:
    lam = tuple(lam)
    if not is_k_strict(lam, k) or (lam and lam[-1] == 0):
        raise ValueError(f"{lam} is not a k-strict partition for k={k}")
    return lam


def weight(lam: Partition) -> int:
    return sum(lam)


def ell_k(lam: Partition, k: int) -> int:
    """Number of parts strictly greater than k."""
    return sum(1 for part in lam if part > k)


def star(lam: Partition) -> Partition:
    """The tail (lam_2, lam_3, ...); empty for the empty or one-row shape."""
    return tuple(lam[1:])


def k_related(box1: BoxT, box2: BoxT, k: int) -> bool:
    """Whether two boxes [r,c], [r',c'] satisfy |c-k-1|+r = |c'-k-1|+r'."""
    (r1, c1), (r2, c2) = box1, box2
    if min(r1, c1, r2, c2) < 1:
        raise ValueError("box coordinates must be positive")
    return abs(c1 - k - 1) + r1 == abs(c2 - k - 1) + r2


@cache
def enumerate_p(k: int, n: int) -> tuple[Partition, ...]:
    """All of P(k,n): k-strict partitions inside the (n-k) x (n+k) rectangle.

    Ordered by weight ascending, then lexicographically descending, with
    the empty partition first.  The order is fixed so CLI output is
    deterministic.
    """
    if not (isinstance(k, int) and isinstance(n, int) and n > k >= 0):
        raise ValueError(f"need integers n > k >= 0, got k={k}, n={n}")
    out: list[Partition] = []

    def grow(prefix: list[int], maxpart: int, rows_left: int) -> None:
        out.append(tuple(prefix))
        if rows_left == 0 or maxpart == 0:
            return
        for part in range(maxpart, 0, -1):
            nxt = part - 1 if part > k else part
            prefix.append(part)
            grow(prefix, nxt, rows_left - 1)
            prefix.pop()

    grow([], n + k, n - k)
    out.sort(key=lambda lam: (sum(lam), tuple(-part for part in lam)))
    return tuple(out)


def in_p(lam, k: int, n: int) -> bool:
    lam = tuple(lam)
    if not is_k_strict(lam, k) or (lam and lam[-1] == 0):
        return False
    return len(lam) <= n - k and (not lam or lam[0] <= n + k)


@dataclass(frozen=True)
class SpaceContext:
    """A fixed isotropic Grassmannian: family IG or OG, plus (n, k)."""

    family: str
    n: int
    k: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if not self.n > self.k >= 0:
            raise ValueError(f"need n > k >= 0, got n={self.n}, k={self.k}")

    @property
    def max_special(self) -> int:
        """Largest degree of a special (single-row) Schubert class."""
        return self.n + self.k

    @property
    def q_degree(self) -> int:
        """Cohomological degree of the deformation variable q."""
        return self.n + self.k + 1 if self.family == IG else self.n + self.k

    def members(self) -> tuple[Partition, ...]:
        return enumerate_p(self.k, self.n)

    def contains(self, lam) -> bool:
        return in_p(lam, self.k, self.n)

    def require(self, lam) -> Partition:
        lam = tuple(lam)
        if not self.contains(lam):
            raise ValueError(f"{lam} is not in P({self.k},{self.n}) for {self}")
        return lam


@dataclass(frozen=True)
class IndexData:
    """Pair statistics of a k-strict partition.

    pairs_c holds the (i,j), i<j, with lam_i + lam_j > 2k + j - i; pairs_a
    the complement.  a_vec/c_vec count, per first index, the pairs of each
    kind.  lam - c_vec is always a partition and lam + a_vec a strict one.
    """

    pairs_a: frozenset[tuple[int, int]]
    pairs_c: frozenset[tuple[int, int]]
    a_vec: tuple[int, ...]
    c_vec: tuple[int, ...]


def index_data(lam, k: int) -> IndexData:
    lam = validate_k_strict(lam, k)
    length = len(lam)
    pairs_a, pairs_c = [], []
    a_vec, c_vec = [0] * length, [0] * length
    for i in range(1, length + 1):
        for j in range(i + 1, length + 1):
            if lam[i - 1] + lam[j - 1] > 2 * k + j - i:
                pairs_c.append((i, j))
                c_vec[i - 1] += 1
            else:
                pairs_a.append((i, j))
                a_vec[i - 1] += 1
    return IndexData(frozenset(pairs_a), frozenset(pairs_c), tuple(a_vec), tuple(c_vec))


def rank_function(lam, ctx: SpaceContext) -> tuple[int, ...]:
    """The flag ranks p_j (IG) or their odd orthogonal analogue (OG).

    IG: p_j = n+k+j - lam_j - #{i<j : lam_i + lam_j > 2k+j-i};
    OG uses n+k+1+j and counts i <= j instead.
    """
    lam = ctx.require(lam)
    n, k = ctx.n, ctx.k
    out = []
    for j in range(1, len(lam) + 1):
        hits = sum(
            1 for i in range(1, j) if lam[i - 1] + lam[j - 1] > 2 * k + j - i
        )
        if ctx.family == IG:
            out.append(n + k + j - lam[j - 1] - hits)
        else:
            if 2 * lam[j - 1] > 2 * k:
                hits += 1
            out.append(n + k + 1 + j - lam[j - 1] - hits)
    return tuple(out)
