"""Raising-operator expansions of Schubert classes into special classes.

The class of a k-strict partition lam equals the operator product

    prod_{(i,j) in A} (1 - R_ij) * prod_{(i,j) in C} (1 - R_ij)(1 + R_ij)^{-1}

applied to the monomial of special classes with exponents lam, where R_ij
shifts an integer vector by +1 in slot i and -1 in slot j, C holds the
pairs with lam_i + lam_j > 2k + j - i, and A the rest.  The expansion is
finite once vectors with a negative slot are discarded, and gives the
Giambelli polynomial of lam.  The odd orthogonal normalisation divides by
2^(number of parts > k); the quantum polynomials are truncations and
substitutions of the stable one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from ._sparse import Coeff, add_term, scale_pow2
from .partitions import (
    Partition,
    SpaceContext,
    ell_k,
    index_data,
    validate_k_strict,
)

# a term is (generator degrees, descending, no zeros) plus a q exponent
Monomial = tuple[tuple[int, ...], int]


@dataclass
class GiambelliPolynomial:
    """Sparse polynomial in special classes, optionally with q powers.

    ``family`` names the generators: "sigma" for IG special classes, "c"
    for odd orthogonal Chern classes, "tau" for odd orthogonal special
    Schubert classes.  Homogeneous by construction for a fixed class and
    context.
    """

    family: str
    terms: dict[Monomial, Coeff]

    def max_degree(self) -> int:
        return max((degs[0] for degs, _ in self.terms if degs), default=0)

    def is_classical(self) -> bool:
        return all(q == 0 for _, q in self.terms)


@cache
def _raising_terms(lam: Partition, k: int) -> dict[tuple[int, ...], int]:
    """Expand the raising-operator product applied to the monomial of lam.

    Factors are grouped by their second index j and processed from
    j = len(lam) down to 2; slot j is only ever increased by factors
    handled earlier, so during stage j it can only decrease and any
    vector whose slot j goes negative is dead for good.  That both
    truncates each geometric series and bounds the whole expansion.
    Within a stage the (1 - R_ij) factors run first, then the series
    1 + 2*sum_m (-1)^m R_ij^m, each in ascending i; the order is
    semantically irrelevant but fixed for reproducibility.
    """
    length = len(lam)
    if length == 0:
        return {(): 1}
    pairs = index_data(lam, k)
    poly: dict[tuple[int, ...], int] = {tuple(lam): 1}
    for j in range(length, 1, -1):
        for i in sorted(a for a, b in pairs.pairs_a if b == j):
            new: dict[tuple[int, ...], int] = {}
            for vec, coeff in poly.items():
                add_term(new, vec, coeff)
                if vec[j - 1] >= 1:
                    moved = list(vec)
                    moved[i - 1] += 1
                    moved[j - 1] -= 1
                    add_term(new, tuple(moved), -coeff)
            poly = new
        for i in sorted(c for c, b in pairs.pairs_c if b == j):
            new = {}
            for vec, coeff in poly.items():
                add_term(new, vec, coeff)
                for m in range(1, vec[j - 1] + 1):
                    moved = list(vec)
                    moved[i - 1] += m
                    moved[j - 1] -= m
                    add_term(new, tuple(moved), 2 * coeff if m % 2 == 0 else -2 * coeff)
            poly = new
    out: dict[tuple[int, ...], int] = {}
    for vec, coeff in poly.items():
        degrees = tuple(sorted((d for d in vec if d), reverse=True))
        add_term(out, degrees, coeff)
    return out


def raising_expand(lam, k: int) -> GiambelliPolynomial:
    """The stable Giambelli polynomial of lam in the sigma generators."""
    lam = validate_k_strict(lam, k)
    return GiambelliPolynomial(
        "sigma", {(degs, 0): coeff for degs, coeff in _raising_terms(lam, k).items()}
    )


def giambelli_og(lam, k: int) -> tuple[GiambelliPolynomial, GiambelliPolynomial]:
    """The odd orthogonal Giambelli polynomial, in c and in tau form.

    The c form is the sigma expansion scaled by 2^(-ell_k(lam)); the tau
    form substitutes c_p = tau_p for p <= k and c_p = 2 tau_p otherwise.
    """
    lam = validate_k_strict(lam, k)
    shift = ell_k(lam, k)
    c_terms: dict[Monomial, Coeff] = {}
    tau_terms: dict[Monomial, Coeff] = {}
    for degs, coeff in _raising_terms(lam, k).items():
        c_terms[(degs, 0)] = scale_pow2(coeff, -shift)
        doubled = sum(1 for d in degs if d > k)
        tau_terms[(degs, 0)] = scale_pow2(coeff, doubled - shift)
    return (
        GiambelliPolynomial("c", c_terms),
        GiambelliPolynomial("tau", tau_terms),
    )


def quantum_giambelli_ig(lam, ctx: SpaceContext) -> GiambelliPolynomial:
    """Quantum Giambelli polynomial for IG(n-k, 2n).

    Obtained from the stable expansion by deleting every monomial with a
    generator of degree beyond n+k+1 and trading each degree n+k+1 factor
    for q/2.
    """
    if ctx.family != "IG":
        raise ValueError(f"IG context required, got {ctx}")
    lam = ctx.require(lam)
    cut = ctx.n + ctx.k + 1
    terms: dict[Monomial, Coeff] = {}
    for degs, coeff in _raising_terms(lam, ctx.k).items():
        if degs and degs[0] > cut:
            continue
        hits = degs.count(cut)
        kept = tuple(d for d in degs if d != cut)
        add_term(terms, (kept, hits), scale_pow2(coeff, -hits))
    return GiambelliPolynomial("sigma", terms)


def quantum_giambelli_og(lam, ctx: SpaceContext) -> GiambelliPolynomial:
    """Quantum Giambelli polynomial for OG(n-k, 2n+1).

    The tau form with every monomial containing a generator of degree
    beyond n+k removed; no q appears.
    """
    if ctx.family != "OG":
        raise ValueError(f"OG context required, got {ctx}")
    lam = ctx.require(lam)
    _, tau = giambelli_og(lam, ctx.k)
    cut = ctx.max_special
    terms = {
        (degs, q): coeff
        for (degs, q), coeff in tau.terms.items()
        if not degs or degs[0] <= cut
    }
    return GiambelliPolynomial("tau", terms)
