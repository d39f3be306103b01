"""JSON and text encodings for partitions, combinations, and polynomials.

Wire formats:

* partition: ``[4, 3]`` (descending parts, no zeros; CLI spelling ``4,3``
  with ``0`` for the empty partition);
* context: ``{"family": "IG", "n": 3, "k": 1}``;
* combination: ``{"terms": [{"parts": [2], "q": 0, "num": 1, "den2": 0}]}``
  where den2 is the exponent of 2 in the denominator (classical
  combinations carry q = 0 everywhere);
* polynomial: ``{"family": "sigma", "terms": [{"gens": [4, 3], "q": 0,
  "num": 1, "den2": 0}]}``.

Term order is fixed (classes: q, then weight, then lexicographically
descending; polynomial monomials: q, then ascending generator tuples, so
the leading monomial of a Giambelli polynomial comes first) and output is
deterministic byte for byte.
"""

from __future__ import annotations

from fractions import Fraction

from ._sparse import Coeff, as_int, dyadic_parts
from .giambelli import GiambelliPolynomial
from .partitions import Partition, SpaceContext, normalize


def parse_partition(text: str) -> Partition:
    """CLI spelling: comma-separated descending parts; '' or '0' is empty."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    return normalize(int(piece) for piece in text.split(","))


def format_partition(lam: Partition) -> str:
    return ",".join(str(part) for part in lam) if lam else "0"


def coeff_from_json(num: int, den2: int) -> Coeff:
    return as_int(Fraction(num, 1 << den2))


def context_to_json(ctx: SpaceContext) -> dict:
    return {"family": ctx.family, "n": ctx.n, "k": ctx.k}


def context_from_json(obj: dict) -> SpaceContext:
    return SpaceContext(obj["family"], obj["n"], obj["k"])


def _class_key(item):
    (lam, q), _ = item
    return (q, sum(lam), tuple(-part for part in lam))


def _as_quantum(combo: dict) -> dict:
    """Accept both classical {lam: c} and quantum {(lam, q): c} maps."""
    if not combo:
        return {}
    first = next(iter(combo))
    if len(first) == 2 and isinstance(first[0], tuple):
        return combo
    return {(lam, 0): c for lam, c in combo.items()}


def combination_to_json(combo: dict) -> dict:
    terms = []
    for (lam, q), coeff in sorted(_as_quantum(combo).items(), key=_class_key):
        num, den2 = dyadic_parts(coeff)
        terms.append({"parts": list(lam), "q": q, "num": num, "den2": den2})
    return {"terms": terms}


def combination_from_json(obj: dict) -> dict:
    out = {}
    for term in obj["terms"]:
        key = (tuple(term["parts"]), term.get("q", 0))
        out[key] = coeff_from_json(term["num"], term.get("den2", 0))
    return out


def polynomial_to_json(poly: GiambelliPolynomial) -> dict:
    terms = []
    ordered = sorted(poly.terms.items(), key=lambda item: (item[0][1], item[0][0]))
    for (gens, q), coeff in ordered:
        num, den2 = dyadic_parts(coeff)
        terms.append({"gens": list(gens), "q": q, "num": num, "den2": den2})
    return {"family": poly.family, "terms": terms}


def polynomial_from_json(obj: dict) -> GiambelliPolynomial:
    terms = {}
    for term in obj["terms"]:
        key = (tuple(term["gens"]), term.get("q", 0))
        terms[key] = coeff_from_json(term["num"], term.get("den2", 0))
    return GiambelliPolynomial(obj["family"], terms)


def _coeff_text(coeff: Coeff) -> str:
    num, den2 = dyadic_parts(coeff)
    return str(num) if den2 == 0 else f"{num}/2^{den2}"


def _join_signed(pieces: list[tuple[str, bool]]) -> str:
    out = []
    for text, negative in pieces:
        if not out:
            out.append(("-" if negative else "") + text)
        else:
            out.append(("- " if negative else "+ ") + text)
    return " ".join(out)


_LETTER = {"IG": "s", "OG": "t", "sigma": "s", "c": "c", "tau": "t"}


def combination_to_text(combo: dict, family: str) -> str:
    """Human form, e.g. ``2*t[2]`` or ``q*s[] + s[2,1]``."""
    letter = _LETTER[family]
    pieces = []
    for (lam, q), coeff in sorted(_as_quantum(combo).items(), key=_class_key):
        num, den2 = dyadic_parts(coeff)
        factors = []
        mag = abs(num)
        if mag != 1 or den2:
            factors.append(f"{mag}/2^{den2}" if den2 else str(mag))
        if q:
            factors.append("q" if q == 1 else f"q^{q}")
        factors.append(f"{letter}[{','.join(str(part) for part in lam)}]")
        pieces.append(("*".join(factors), num < 0))
    return _join_signed(pieces) if pieces else "0"


def polynomial_to_text(poly: GiambelliPolynomial) -> str:
    """Human form, e.g. ``s4*s3 - q*s2``."""
    letter = _LETTER[poly.family]
    ordered = sorted(poly.terms.items(), key=lambda item: (item[0][1], item[0][0]))
    pieces = []
    for (gens, q), coeff in ordered:
        num, den2 = dyadic_parts(coeff)
        factors = []
        mag = abs(num)
        if mag != 1 or den2:
            factors.append(f"{mag}/2^{den2}" if den2 else str(mag))
        if q:
            factors.append("q" if q == 1 else f"q^{q}")
        factors.extend(f"{letter}{d}" for d in gens)
        if not factors:
            factors.append("1")
        pieces.append(("*".join(factors), num < 0))
    return _join_signed(pieces) if pieces else "0"
