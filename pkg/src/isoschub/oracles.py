"""Independent cross-check implementations used by the verification suite.

Two classical constructions that the k = 0 and C(lam)-empty degenerations
of the main engine must reproduce exactly:

* Schur Q-functions.  The two-row expansion

      Q_(a,b) = q_a q_b + 2 sum_{m=1}^{b} (-1)^m q_{a+m} q_{b-m}

  together with the recursive Pfaffian expansion along the first row
  (padding odd lengths with a zero part) defines Q_lam as a polynomial in
  the generators q_r; the same generators are also realised as honest
  symmetric polynomials via prod_i (1 + x_i t)/(1 - x_i t) = sum q_r t^r,
  so Pieri products can be verified by multiplying actual polynomials.

* Jacobi-Trudi.  The Leibniz expansion of det(h_{lam_i - i + j}) gives
  the Schur polynomial of lam in the generators h_r.

Free-ring expansions are dicts from descending degree tuples to ints;
x-polynomials are dicts from exponent tuples to ints.
"""

from __future__ import annotations

from functools import cache
from itertools import permutations

Expansion = dict[tuple[int, ...], int]


def _merge(degs_a: tuple[int, ...], degs_b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(degs_a + degs_b, reverse=True))


def _free_mul(left: Expansion, right: Expansion) -> Expansion:
    out: Expansion = {}
    for degs_a, ca in left.items():
        for degs_b, cb in right.items():
            key = _merge(degs_a, degs_b)
            val = out.get(key, 0) + ca * cb
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return out


@cache
def q_two_row(a: int, b: int) -> Expansion:
    """Expansion of the two-row Schur Q-function, b >= 0, a > b."""
    if not a > b >= 0:
        raise ValueError(f"need a > b >= 0, got ({a}, {b})")
    out: Expansion = {}
    for m in range(b + 1):
        degs = tuple(sorted((d for d in (a + m, b - m) if d), reverse=True))
        coeff = 1 if m == 0 else (2 if m % 2 == 0 else -2)
        out[degs] = out.get(degs, 0) + coeff
    return {key: val for key, val in out.items() if val}


@cache
def schur_q_expansion(lam: tuple[int, ...]) -> Expansion:
    """Q_lam as a polynomial in the q_r, for a strict partition lam."""
    if len(set(lam)) != len(lam) or any(part < 1 for part in lam):
        raise ValueError(f"need a strict partition, got {lam}")
    if not lam:
        return {(): 1}
    if len(lam) == 1:
        return {(lam[0],): 1}
    parts = lam if len(lam) % 2 == 0 else lam + (0,)
    out: Expansion = {}
    for j in range(1, len(parts)):
        rest = parts[1:j] + parts[j + 1:]
        if rest and rest[-1] == 0:
            rest = rest[:-1]
        sub = schur_q_expansion(rest)
        sign = 1 if j % 2 == 1 else -1
        for key, val in _free_mul(q_two_row(parts[0], parts[j]), sub).items():
            new = out.get(key, 0) + sign * val
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


@cache
def jacobi_trudi_expansion(lam: tuple[int, ...]) -> Expansion:
    """The Schur polynomial of lam in the h_r, via the determinant."""
    length = len(lam)
    if not length:
        return {(): 1}
    out: Expansion = {}
    for perm in permutations(range(length)):
        degrees = []
        dead = False
        for i in range(length):
            d = lam[i] - (i + 1) + (perm[i] + 1)
            if d < 0:
                dead = True
                break
            if d:
                degrees.append(d)
        if dead:
            continue
        inversions = sum(
            1 for i in range(length) for j in range(i + 1, length)
            if perm[i] > perm[j]
        )
        key = tuple(sorted(degrees, reverse=True))
        val = out.get(key, 0) + (1 if inversions % 2 == 0 else -1)
        if val:
            out[key] = val
        else:
            out.pop(key, None)
    return out


# ---------------------------------------------------------------------------
# symmetric polynomial realisation

XPoly = dict[tuple[int, ...], int]


def x_mul(left: XPoly, right: XPoly) -> XPoly:
    out: XPoly = {}
    for ea, ca in left.items():
        for eb, cb in right.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            val = out.get(key, 0) + ca * cb
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return out


@cache
def q_generators(nvars: int, maxdeg: int) -> tuple[XPoly, ...]:
    """The polynomials q_0 .. q_maxdeg in nvars variables.

    Built from the factorised generating function: each variable
    contributes 1 + 2 x^m t^m for m >= 1.
    """
    series: list[XPoly] = [{(0,) * nvars: 1}]
    series += [{} for _ in range(maxdeg)]
    for var in range(nvars):
        new: list[XPoly] = [dict(layer) for layer in series]
        for deg in range(maxdeg + 1):
            for m in range(1, deg + 1):
                for exps, coeff in series[deg - m].items():
                    key = exps[:var] + (exps[var] + m,) + exps[var + 1:]
                    val = new[deg].get(key, 0) + 2 * coeff
                    if val:
                        new[deg][key] = val
                    else:
                        new[deg].pop(key, None)
        series = new
    return tuple(series)


@cache
def evaluate_expansion(expansion_key: tuple, nvars: int) -> XPoly:
    """Evaluate a frozen free-ring expansion on the q generators."""
    maxdeg = max((degs[0] for degs, _ in expansion_key if degs), default=0)
    gens = q_generators(nvars, maxdeg)
    total: XPoly = {}
    for degs, coeff in expansion_key:
        term: XPoly = {(0,) * nvars: coeff}
        for d in degs:
            term = x_mul(term, gens[d])
        for key, val in term.items():
            new = total.get(key, 0) + val
            if new:
                total[key] = new
            else:
                total.pop(key, None)
    return total


def _freeze(expansion: Expansion) -> tuple:
    return tuple(sorted(expansion.items()))


def schur_q_xpoly(lam: tuple[int, ...], nvars: int) -> XPoly:
    return evaluate_expansion(_freeze(schur_q_expansion(lam)), nvars)


def schur_q_pieri_product(p: int, lam: tuple[int, ...], nvars: int) -> XPoly:
    """The honest polynomial product q_p * Q_lam."""
    gens = q_generators(nvars, p)
    return x_mul(gens[p], schur_q_xpoly(lam, nvars))


def combination_xpoly(terms: dict[tuple[int, ...], int], nvars: int) -> XPoly:
    """Realise an integer combination of Q_mu as a polynomial."""
    total: XPoly = {}
    for mu, coeff in terms.items():
        for key, val in schur_q_xpoly(mu, nvars).items():
            new = total.get(key, 0) + coeff * val
            if new:
                total[key] = new
            else:
                total.pop(key, None)
    return total
