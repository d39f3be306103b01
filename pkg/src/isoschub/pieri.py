"""Pieri products: classical, stable, and quantum, for both families.

Coefficients are the powers of two 2^N (symplectic) and 2^N' (odd
orthogonal) attached to the covering relation lam -> mu, where N counts
connected components of the uncovered added boxes avoiding column k+1 and
N' counts all components, less one when the degree exceeds k.  Quantum
products deform the classical ones by q-terms read off from targets in
the one-larger rectangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from . import _pierikernel as kernel
from ._sparse import add_term
from .partitions import (
    IG,
    OG,
    FAMILIES,
    Partition,
    SpaceContext,
    validate_k_strict,
)

BoxT = tuple[int, int]


@dataclass(frozen=True)
class ArrowWitness:
    """One target of the covering relation, with full box-level evidence."""

    target: Partition
    removed_boxes: frozenset[BoxT]
    added_boxes: frozenset[BoxT]
    set_a: frozenset[BoxT]
    components: int
    components_avoiding_col_kp1: int


def arrow_targets(lam, p: int, k: int, row_bound: int | None = None,
                  col_bound: int | None = None) -> list[ArrowWitness]:
    """All k-strict mu with lam -> mu and |mu| = |lam| + p within bounds."""
    lam = validate_k_strict(lam, k)
    raw = kernel.pieri_targets_witnessed(
        lam, p, k,
        -1 if row_bound is None else row_bound,
        -1 if col_bound is None else col_bound,
    )
    return [
        ArrowWitness(mu, frozenset(rem), frozenset(add), frozenset(unc), comps, off)
        for mu, rem, add, unc, comps, off in raw
    ]


def _exponent(family: str, p: int, k: int, lam, mu, comps: int, comps_off: int) -> int:
    if family == IG:
        return comps_off
    exp = comps - (1 if p > k else 0)
    if exp < 0:
        # the ring is integral, so a valid target can never force 2^(-1);
        # report the instance verbatim instead of guessing a convention
        raise AssertionError(
            "negative OG Pieri exponent: "
            f"lam={lam} mu={mu} p={p} k={k} components={comps}"
        )
    return exp


@cache
def _classical(family: str, k: int, p: int, lam: Partition,
               row_bound: int, col_bound: int) -> dict[Partition, int]:
    out = {}
    for mu, comps, comps_off in kernel.pieri_targets(lam, p, k, row_bound, col_bound):
        out[mu] = 1 << _exponent(family, p, k, lam, mu, comps, comps_off)
    return out


def classical_pieri(ctx: SpaceContext, p: int, lam) -> dict[Partition, int]:
    """Expand (special class of degree p) * (class of lam) in H*."""
    lam = ctx.require(lam)
    if not 1 <= p <= ctx.max_special:
        raise ValueError(f"Pieri degree must lie in [1, {ctx.max_special}], got {p}")
    return dict(_classical(ctx.family, ctx.k, p, lam, ctx.n - ctx.k, ctx.n + ctx.k))


def stable_pieri(k: int, p: int, lam, family: str = IG) -> dict[Partition, int]:
    """The same product with no rectangle bound (the stable ring)."""
    lam = validate_k_strict(lam, k)
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
    if p < 1:
        raise ValueError(f"Pieri degree must be >= 1, got {p}")
    return dict(_classical(family, k, p, lam, -1, -1))


def _second_column(nu: Partition) -> int:
    return sum(1 for part in nu if part >= 2)


@cache
def _quantum(family: str, n: int, k: int, p: int,
             lam: Partition) -> dict[tuple[Partition, int], int]:
    out: dict[tuple[Partition, int], int] = {}
    for mu, coeff in _classical(family, k, p, lam, n - k, n + k).items():
        out[(mu, 0)] = coeff

    if family == IG:
        # q-terms: targets in P(k, n+1) whose first row fills to n+k+1
        for nu, comps, comps_off in kernel.pieri_targets(lam, p, k, n + 1 - k, n + k + 1):
            if not nu or nu[0] != n + k + 1:
                continue
            if comps_off < 1:
                raise AssertionError(
                    "non-integral quantum IG coefficient: "
                    f"lam={lam} nu={nu} p={p} n={n} k={k} N={comps_off}"
                )
            add_term(out, (nu[1:], 1), 1 << (comps_off - 1))
        return out

    # OG: q-terms from full-length targets in the one-larger rectangle
    for nu, comps, comps_off in kernel.pieri_targets(lam, p, k, n + 1 - k, n + k):
        if len(nu) != n + 1 - k or nu[0] < 2 * k:
            continue
        rows = nu[0] - 2 * k + 1
        if _second_column(nu) > rows:
            continue
        exp = _exponent(OG, p, k, lam, nu, comps, comps_off)
        add_term(out, (nu[1:rows], 1), 1 << exp)

    # q^2 terms exist only when the first row is already full
    if lam and lam[0] == n + k:
        tail = lam[1:]
        for rho, comps, comps_off in kernel.pieri_targets(tail, p, k, n - k, n + k):
            if not rho or rho[0] != n + k:
                continue
            exp = _exponent(OG, p, k, tail, rho, comps, comps_off)
            add_term(out, (rho[1:], 2), 1 << exp)
    return out


def quantum_pieri(ctx: SpaceContext, p: int, lam) -> dict[tuple[Partition, int], int]:
    """Expand the quantum product (special class of degree p) * (class of lam).

    Keys are (partition, q exponent); the q^0 layer always equals the
    classical product.
    """
    lam = ctx.require(lam)
    if not 1 <= p <= ctx.max_special:
        raise ValueError(f"Pieri degree must lie in [1, {ctx.max_special}], got {p}")
    return dict(_quantum(ctx.family, ctx.n, ctx.k, p, lam))
