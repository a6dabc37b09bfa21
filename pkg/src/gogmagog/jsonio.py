"""Canonical JSON forms shared by the CLI and the tests.

A polynomial value serializes to a list of term objects,

    {"exponents": {"u": 2, "v": 1}, "coeff": "3"}

with only the nonzero exponents spelled out, the terms ordered
lexicographically by the full exponent vector, and the coefficient
kept as an exact decimal string ("42", "-3", "1/2") so no consumer is
tempted to round it.  Bare scalars ride along as a single constant
term, which keeps every formula output the same shape.

dumps_canonical pins key order and separators; equal values are
byte-identical, so reports diff cleanly.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import MalformedExpressionError
from .polyring import PARAMS, ParamPoly

__all__ = [
    "dumps_canonical",
    "parampoly_from_terms",
    "parampoly_to_terms",
    "scalar_to_string",
]


def scalar_to_string(c):
    """Exact string form of an int or Fraction coefficient."""
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"
    if isinstance(c, int):
        return str(c)
    raise MalformedExpressionError(f"cannot serialize coefficient of type {type(c).__name__}")


def _scalar_from_string(s):
    f = Fraction(s)
    return f.numerator if f.denominator == 1 else f


def parampoly_to_terms(value):
    """Term-list form of a ParamPoly; ints and Fractions are accepted too."""
    p = ParamPoly.coerce(value)
    out = []
    for exp, c in sorted(p.terms.items()):
        names = {name: e for name, e in zip(PARAMS, exp) if e}
        out.append({"exponents": names, "coeff": scalar_to_string(c)})
    return out


def parampoly_from_terms(terms):
    """Inverse of parampoly_to_terms."""
    total = ParamPoly.zero()
    for t in terms:
        mono = ParamPoly.const(_scalar_from_string(t["coeff"]))
        for name, e in t["exponents"].items():
            mono = mono * ParamPoly.var(name, int(e))
        total = total + mono
    return total


def dumps_canonical(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
