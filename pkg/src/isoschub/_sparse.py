"""Small helpers for sparse integer/dyadic coefficient maps.

Combinations and Giambelli polynomials are plain dicts from hashable keys
to nonzero coefficients.  Coefficients are ``int`` whenever integral and
``fractions.Fraction`` otherwise; the only divisions anywhere in the
package are by powers of two, so every Fraction that appears is dyadic.
"""

from __future__ import annotations

from fractions import Fraction

Coeff = int | Fraction


def add_term(terms: dict, key, value: Coeff) -> None:
    """Accumulate ``value`` at ``key``, dropping the entry if it cancels."""
    if not value:
        return
    new = terms.get(key, 0) + value
    if new:
        terms[key] = new
    else:
        terms.pop(key, None)


def drop_zeros(terms: dict) -> dict:
    return {key: val for key, val in terms.items() if val}


def as_int(value: Coeff) -> Coeff:
    """Collapse integral Fractions back to int."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def scale_pow2(value: Coeff, exponent: int) -> Coeff:
    """Multiply ``value`` by 2**exponent exactly (exponent may be negative)."""
    if exponent >= 0:
        return as_int(value * (1 << exponent))
    return as_int(Fraction(value, 1 << (-exponent)))


def assert_integral(terms: dict, what: str) -> dict:
    """Check every coefficient is an integer and normalise the map.

    Raises AssertionError with the offending entries; used wherever a
    result is contractually in the Schubert basis.
    """
    out = {}
    bad = []
    for key, val in terms.items():
        val = as_int(val)
        if isinstance(val, Fraction):
            bad.append((key, val))
        if val:
            out[key] = val
    if bad:
        raise AssertionError(f"non-integral coefficients in {what}: {sorted(bad)}")
    return out


def dyadic_parts(value: Coeff) -> tuple[int, int]:
    """Return (numerator, exponent of 2 in the denominator)."""
    if isinstance(value, int):
        return value, 0
    den = value.denominator
    exp = den.bit_length() - 1
    if 1 << exp != den:
        raise ValueError(f"coefficient {value} is not dyadic")
    return value.numerator, exp
