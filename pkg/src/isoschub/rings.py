"""Ring-level evaluation: polynomials of special classes acting in H*, QH*,
and the stable rings.

Everything here reduces to iterated Pieri multiplication: a Giambelli
polynomial is evaluated by multiplying the unit class by its generators,
largest degree first, and a general quantum product applies the quantum
Giambelli polynomial of one factor to the other.  The module also houses
the stable-to-quantum substitution homomorphisms (sending the special
class one past the rim to q/2 for IG and nothing for OG, with high even
degrees forced by the quadratic relations), the elimination recursion
rewriting a class as sum of (special class) x (shorter class), and the
checker for the quadratic relations presenting the stable rings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from ._sparse import Coeff, add_term, as_int, assert_integral, drop_zeros
from .giambelli import (
    GiambelliPolynomial,
    quantum_giambelli_ig,
    quantum_giambelli_og,
)
from .partitions import (
    IG,
    OG,
    FAMILIES,
    Partition,
    SpaceContext,
    validate_k_strict,
    weight,
)
from .pieri import classical_pieri, quantum_pieri, stable_pieri

Classical = dict[Partition, int]
Quantum = dict[tuple[Partition, int], int]


@dataclass(frozen=True)
class StableRingHandle:
    """A stable (unbounded rank) cohomology ring of one family at fixed k.

    ``truncation_weight``, when set, caps the weight of any class touched
    by a computation; exceeding it is a hard error rather than a silent
    truncation.  None leaves computations unconstrained (they are finite
    regardless).
    """

    family: str
    k: int
    truncation_weight: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")

    def check_weight(self, w: int) -> None:
        if self.truncation_weight is not None and w > self.truncation_weight:
            raise ValueError(
                f"weight {w} exceeds the handle's truncation weight "
                f"{self.truncation_weight}"
            )


def _generator_family(ring) -> str:
    return "sigma" if ring.family == IG else "tau"


def evaluate_classical(ring, poly: GiambelliPolynomial) -> Classical:
    """Evaluate a q-free polynomial in H* (SpaceContext) or the stable ring.

    Generators multiply onto the unit class in descending degree; the
    final combination must be integral even when the polynomial has
    dyadic coefficients.  In a bounded ring a generator of degree beyond
    n+k is the zero class (the quotient map from the stable ring kills
    it), so any monomial containing one vanishes; this is what makes the
    untruncated Giambelli polynomial evaluate correctly in H*.
    """
    if not poly.is_classical():
        raise ValueError("polynomial has q terms; use evaluate_quantum")
    expected = _generator_family(ring)
    if poly.family != expected:
        raise ValueError(
            f"{ring.family} evaluation needs {expected} generators, "
            f"got {poly.family} (convert the c form first)"
        )
    bounded = isinstance(ring, SpaceContext)
    total: dict[Partition, Coeff] = {}
    for (degs, _), coeff in poly.terms.items():
        if bounded and degs and degs[0] > ring.max_special:
            continue
        combo: dict[Partition, Coeff] = {(): 1}
        for d in degs:
            step: dict[Partition, Coeff] = {}
            for nu, c in combo.items():
                if bounded:
                    prod = classical_pieri(ring, d, nu)
                else:
                    ring.check_weight(weight(nu) + d)
                    prod = stable_pieri(ring.k, d, nu, ring.family)
                for mu, c2 in prod.items():
                    add_term(step, mu, c * c2)
            combo = step
        for nu, c in combo.items():
            add_term(total, nu, coeff * c)
    return assert_integral(total, f"classical evaluation of a {poly.family} polynomial")


def evaluate_quantum(ctx: SpaceContext, poly: GiambelliPolynomial) -> Quantum:
    """Evaluate a polynomial (with q powers) in the quantum ring of ctx."""
    expected = _generator_family(ctx)
    if poly.family != expected:
        raise ValueError(
            f"{ctx.family} evaluation needs {expected} generators, got {poly.family}"
        )
    total: dict[tuple[Partition, int], Coeff] = {}
    for (degs, qexp), coeff in poly.terms.items():
        combo: dict[tuple[Partition, int], Coeff] = {((), 0): 1}
        for d in degs:
            step: dict[tuple[Partition, int], Coeff] = {}
            for (nu, q), c in combo.items():
                for (mu, dq), c2 in quantum_pieri(ctx, d, nu).items():
                    add_term(step, (mu, q + dq), c * c2)
            combo = step
        for (nu, q), c in combo.items():
            add_term(total, (nu, q + qexp), coeff * c)
    return assert_integral(total, f"quantum evaluation of a {poly.family} polynomial")


def schubert_quantum(lam, ctx: SpaceContext) -> Quantum:
    """Evaluate the quantum Giambelli polynomial of lam; must return lam itself.

    The equality is the content of the quantum Giambelli theorems, so any
    discrepancy is an implementation bug and is reported in full.
    """
    lam = ctx.require(lam)
    if ctx.family == IG:
        poly = quantum_giambelli_ig(lam, ctx)
    else:
        poly = quantum_giambelli_og(lam, ctx)
    result = evaluate_quantum(ctx, poly)
    expected: Quantum = {(lam, 0): 1}
    if result != expected:
        missing = {key: val for key, val in expected.items() if result.get(key) != val}
        extra = {key: val for key, val in result.items() if expected.get(key) != val}
        raise AssertionError(
            f"quantum Giambelli evaluation failed for lam={lam}, ctx={ctx}: "
            f"expected {expected}, got {result} "
            f"(missing/changed {missing}, unexpected {extra})"
        )
    return result


@cache
def _qh_multiply(ctx: SpaceContext, lam: Partition, mu: Partition) -> Quantum:
    if ctx.family == IG:
        poly = quantum_giambelli_ig(mu, ctx)
    else:
        poly = quantum_giambelli_og(mu, ctx)
    total: dict[tuple[Partition, int], Coeff] = {}
    for (degs, qexp), coeff in poly.terms.items():
        combo: dict[tuple[Partition, int], Coeff] = {(lam, 0): 1}
        for d in degs:
            step: dict[tuple[Partition, int], Coeff] = {}
            for (nu, q), c in combo.items():
                for (target, dq), c2 in quantum_pieri(ctx, d, nu).items():
                    add_term(step, (target, q + dq), c * c2)
            combo = step
        for (nu, q), c in combo.items():
            add_term(total, (nu, q + qexp), coeff * c)
    return assert_integral(total, f"quantum product {lam} * {mu}")


def qh_multiply(ctx: SpaceContext, lam, mu) -> Quantum:
    """The quantum product of the classes of lam and mu."""
    return dict(_qh_multiply(ctx, ctx.require(lam), ctx.require(mu)))


def quantum_product(ctx: SpaceContext, left: Quantum, right: Quantum) -> Quantum:
    """Bilinear extension of qh_multiply to whole combinations."""
    out: dict[tuple[Partition, int], Coeff] = {}
    for (lam, qa), ca in left.items():
        for (mu, qb), cb in right.items():
            for (nu, qc), cc in _qh_multiply(ctx, lam, mu).items():
                add_term(out, (nu, qa + qb + qc), ca * cb * cc)
    return drop_zeros(out)


@cache
def _pi(ctx: SpaceContext, i: int) -> dict[tuple[Partition, int], Coeff]:
    n, k = ctx.n, ctx.k
    if i <= n + k:
        return {((i,), 0): 1}
    if ctx.family == IG:
        if i == n + k + 1:
            return {((), 1): Fraction(1, 2)}
        if i <= 2 * n + 2 * k or i % 2 == 1:
            return {}
    else:
        if i < 2 * n + 2 * k or i % 2 == 1:
            return {}
    # even degree beyond the explicit window: solve the quadratic relation
    # for the top class.  IG: sigma_r^2 + 2 sum (-1)^m sigma_{r+m} sigma_{r-m} = 0,
    # whose m = r term is 2 (-1)^r sigma_{2r}; OG: tau_r^2 + sum (-1)^m
    # delta_{r-m} tau_{r+m} tau_{r-m} = 0 with delta_p = 2 for p > k else 1,
    # whose m = r term is (-1)^r tau_{2r}
    r = i // 2
    acc = dict(quantum_product(ctx, _pi(ctx, r), _pi(ctx, r)))
    for m in range(1, r):
        if ctx.family == IG:
            scale = 2 if m % 2 == 0 else -2
        else:
            delta = 2 if r - m > k else 1
            scale = delta if m % 2 == 0 else -delta
        for key, val in quantum_product(ctx, _pi(ctx, r + m), _pi(ctx, r - m)).items():
            add_term(acc, key, scale * val)
    sign = 1 if r % 2 == 1 else -1
    if ctx.family == IG:
        return {key: as_int(Fraction(sign * val, 2)) for key, val in acc.items()}
    return {key: sign * val for key, val in acc.items()}


def pi_image(ctx: SpaceContext, i: int) -> dict[tuple[Partition, int], Coeff]:
    """Image of the i-th stable special class in QH of a symplectic context.

    Degrees through n+k map to themselves, n+k+1 to q/2, the rest of the
    window through 2n+2k and all higher odd degrees to zero; higher even
    degrees are forced by the quadratic relations (dyadic values allowed).
    """
    if ctx.family != IG:
        raise ValueError(f"IG context required, got {ctx}")
    if i < 1:
        raise ValueError(f"need a positive degree, got {i}")
    return dict(_pi(ctx, i))


def pi_tilde_image(ctx: SpaceContext, i: int) -> dict[tuple[Partition, int], Coeff]:
    """Odd orthogonal analogue of pi_image; note degree 2n+2k is forced, not zero."""
    if ctx.family != OG:
        raise ValueError(f"OG context required, got {ctx}")
    if i < 1:
        raise ValueError(f"need a positive degree, got {i}")
    return dict(_pi(ctx, i))


def recursion_expand(handle: StableRingHandle, lam,
                     degree_cap: int | None = None) -> dict[tuple[int, Partition], int]:
    """Rewrite the class of lam as sum of a_{p,mu} (special p) x (class mu).

    Implements the elimination recursion: expand (special lam_1) x (tail)
    by the stable Pieri rule, move every non-lam term (all of which have a
    strictly larger first part and tail inside the tail of lam) across,
    and recurse in order of increasing first part so each partition is
    eliminated exactly once.  Keys are (p, mu) with lam_1 <= p <= |lam|
    and mu inside the tail of lam.
    """
    lam = validate_k_strict(lam, handle.k)
    if not lam:
        raise ValueError("the empty class is the unit and has no such expansion")
    if degree_cap is None:
        degree_cap = weight(lam)
    if degree_cap < weight(lam):
        raise ValueError(f"degree cap {degree_cap} below |lam| = {weight(lam)}")
    handle.check_weight(weight(lam))
    result: dict[tuple[int, Partition], int] = {}
    pending: dict[Partition, int] = {lam: 1}
    while pending:
        nu = min(pending, key=lambda part: (part[0], part))
        coeff = pending.pop(nu)
        if not coeff:
            continue
        head, tail = nu[0], nu[1:]
        if head > degree_cap:
            raise ValueError(
                f"recursion for {lam} needs degree {head} > cap {degree_cap} "
                f"(offending partition {nu})"
            )
        add_term(result, (head, tail), coeff)
        if not tail:
            continue
        prod = stable_pieri(handle.k, head, tail, handle.family)
        if prod.get(nu) != 1:
            raise AssertionError(
                f"elimination pivot is not 1: lam={lam} nu={nu} "
                f"coefficient={prod.get(nu)}"
            )
        for mu, mult in prod.items():
            if mu != nu:
                add_term(pending, mu, -coeff * mult)
    return result


def stable_relation_check(handle: StableRingHandle, r: int) -> bool:
    """Whether the degree 2r quadratic relation vanishes in the stable ring.

    IG: sigma_r^2 + 2 sum_{i=1}^r (-1)^i sigma_{r+i} sigma_{r-i} = 0.
    OG: tau_r^2 + sum_{i=1}^r (-1)^i delta_{r-i} tau_{r+i} tau_{r-i} = 0
    with delta_p = 2 for p > k and 1 otherwise; this is the transport of
    the IG relation through c_p = delta_p tau_p (putting a factor 2 on
    the sum as well would fail already for k = 0, r = 1, where the Schur
    P-function identity forces tau_1^2 = tau_2).  Valid for r > k, which
    is required.
    """
    if r <= handle.k:
        raise ValueError(f"the relation needs r > k, got r={r}, k={handle.k}")
    handle.check_weight(2 * r)
    total: dict[Partition, Coeff] = {}
    for mu, c in stable_pieri(handle.k, r, (r,), handle.family).items():
        add_term(total, mu, c)
    for i in range(1, r + 1):
        if handle.family == IG:
            scale = 2 if i % 2 == 0 else -2
        else:
            delta = 2 if r - i > handle.k else 1
            scale = delta if i % 2 == 0 else -delta
        if i == r:
            add_term(total, (2 * r,), scale)
        else:
            for mu, c in stable_pieri(handle.k, r + i, (r - i,), handle.family).items():
                add_term(total, mu, scale * c)
    return not total
