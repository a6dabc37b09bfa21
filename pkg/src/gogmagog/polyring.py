"""Exact scalar arithmetic: big integers, rationals, multivariate
polynomials in the weight parameters, and the ring Z[zeta] for a
primitive sixth root of unity.

Everything here is exact. There is no floating point anywhere in the
package, and none of the types silently lose precision: integer results
stay `int`, division promotes to `fractions.Fraction`, and `Eisenstein`
components may be either.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import NonUnitError, PreconditionError

# Arbitrary-precision scalars are stdlib types; the aliases document intent
# in signatures without wrapping anything.
BigInt = int
BigRat = Fraction

# Fixed parameter slots for ParamPoly exponent vectors. Ten slots cover
# every weight any formula tracks; unused slots stay zero. "aux" is a spare
# formal variable for identity checks that need one extra indeterminate.
PARAMS = ("u", "v", "P", "Q", "PL", "PR", "QL", "QR", "Qt", "aux")
PARAM_INDEX = {name: i for i, name in enumerate(PARAMS)}
NPARAMS = len(PARAMS)
_ZERO_EXP = (0,) * NPARAMS

Scalar = "int | Fraction"


def gen_binom(n, k):
    """Binomial coefficient C(n, k) for any integer n and k.

    k < 0 gives 0; n >= 0 is the ordinary coefficient; n < 0 uses the
    reflection C(n, k) = (-1)^k C(k - n - 1, k), which is the coefficient
    convention every generating-function expansion in this package relies
    on ((1+x)^n for negative n has these coefficients).
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    return -math.comb(k - n - 1, k) if k & 1 else math.comb(k - n - 1, k)


def _coerce_scalar(c):
    if isinstance(c, (int, Fraction)):
        return c
    if isinstance(c, ParamPoly):
        raise TypeError("scalar expected, got ParamPoly")
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class ParamPoly:
    """Polynomial in the fixed parameter set with int/Fraction coefficients.

    Terms are stored sparsely as {exponent-10-tuple: coefficient}; zero
    coefficients are never stored. Instances are immutable by convention
    (nothing mutates `terms` after construction) so they can be shared
    freely.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    self.terms[exp] = c

    # -- constructors ---------------------------------------------------

    @classmethod
    def const(cls, c) -> "ParamPoly":
        c = _coerce_scalar(c)
        return cls({_ZERO_EXP: c} if c else None)

    @classmethod
    def var(cls, name, power=1) -> "ParamPoly":
        if name not in PARAM_INDEX:
            raise PreconditionError(f"unknown parameter {name!r}")
        if power < 0:
            raise PreconditionError("parameter exponents must be >= 0")
        exp = [0] * NPARAMS
        exp[PARAM_INDEX[name]] = power
        return cls({tuple(exp): 1})

    @classmethod
    def zero(cls) -> "ParamPoly":
        return cls()

    @classmethod
    def coerce(cls, value) -> "ParamPoly":
        if isinstance(value, ParamPoly):
            return value
        return cls.const(value)

    # -- ring structure -------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({_ZERO_EXP: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamPoly.const(other)
        elif not isinstance(other, ParamPoly):
            return NotImplemented
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        r = ParamPoly.__new__(ParamPoly)
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = ParamPoly.__new__(ParamPoly)
        r.terms = {exp: -c for exp, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamPoly.const(other)
        elif not isinstance(other, ParamPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ParamPoly.zero()
            r = ParamPoly.__new__(ParamPoly)
            r.terms = {exp: c * other for exp, c in self.terms.items()}
            return r
        if not isinstance(other, ParamPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(exp, 0) + c1 * c2
                if s:
                    out[exp] = s
                else:
                    del out[exp]
        r = ParamPoly.__new__(ParamPoly)
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise PreconditionError("negative powers of ParamPoly undefined")
        result = ParamPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- queries --------------------------------------------------------

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and _ZERO_EXP in self.terms)

    def const_value(self):
        """The scalar value, assuming is_const(); 0 for the zero poly."""
        if not self.is_const():
            raise PreconditionError("polynomial is not constant")
        return self.terms.get(_ZERO_EXP, 0)

    def as_int(self):
        v = self.const_value()
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise PreconditionError(f"non-integer constant {v}")
            return v.numerator
        return v

    def coeff_of(self, **powers):
        """Coefficient (a ParamPoly in the remaining parameters) of the
        monomial with the given named powers, e.g. coeff_of(Q=2)."""
        pinned = {}
        for name, p in powers.items():
            if name not in PARAM_INDEX:
                raise PreconditionError(f"unknown parameter {name!r}")
            pinned[PARAM_INDEX[name]] = p
        out = {}
        for exp, c in self.terms.items():
            if all(exp[i] == p for i, p in pinned.items()):
                new = tuple(0 if i in pinned else e for i, e in enumerate(exp))
                out[new] = out.get(new, 0) + c
        return ParamPoly(out)

    def degree_in(self, name):
        i = PARAM_INDEX[name]
        return max((exp[i] for exp in self.terms), default=-1)

    def substitute(self, **values):
        """Substitute scalars or ParamPoly values for named parameters.

        Substituting e.g. v=1-u is supported by passing a ParamPoly value.
        """
        subs = {}
        for name, val in values.items():
            if name not in PARAM_INDEX:
                raise PreconditionError(f"unknown parameter {name!r}")
            subs[PARAM_INDEX[name]] = ParamPoly.coerce(val)
        result = ParamPoly.zero()
        for exp, c in self.terms.items():
            term = ParamPoly.const(c)
            rest = [0] * NPARAMS
            for i, e in enumerate(exp):
                if i in subs:
                    term = term * subs[i] ** e
                else:
                    rest[i] = e
            if any(rest):
                term = term * ParamPoly({tuple(rest): 1})
            result = result + term
        return result

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = [name if e == 1 else f"{name}^{e}"
                       for name, e in zip(PARAMS, exp) if e]
            if not factors or c != 1:
                factors.insert(0, str(c))
            parts.append("*".join(factors))
        return " + ".join(parts)


def param_u():
    return ParamPoly.var("u")


def param_v():
    return ParamPoly.var("v")


class Eisenstein:
    """Element a + b*zeta of Z[zeta], zeta a primitive sixth root of unity.

    zeta satisfies zeta^2 = zeta - 1. Components are int or Fraction;
    arithmetic keeps whichever exactness the inputs had. The primitive
    cube root omega = e^(2*pi*i/3) is zeta^2 = zeta - 1 and its conjugate
    is -zeta, which is how callers build the evaluation points for the
    root-of-unity determinant identities.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = _coerce_scalar(a)
        self.b = _coerce_scalar(b)

    @classmethod
    def zeta(cls, power=1) -> "Eisenstein":
        return cls(0, 1) ** power

    @classmethod
    def omega(cls) -> "Eisenstein":
        return cls(-1, 1)  # zeta^2

    @classmethod
    def coerce(cls, value) -> "Eisenstein":
        if isinstance(value, Eisenstein):
            return value
        return cls(value, 0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Eisenstein(other)
        if not isinstance(other, Eisenstein):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __add__(self, other):
        other = Eisenstein.coerce(other)
        return Eisenstein(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Eisenstein(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-Eisenstein.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Eisenstein(self.a * other, self.b * other)
        if not isinstance(other, Eisenstein):
            return NotImplemented
        # (a + b z)(c + d z) with z^2 = z - 1
        a, b, c, d = self.a, self.b, other.a, other.b
        return Eisenstein(a * c - b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def conj(self) -> "Eisenstein":
        """Complex conjugate. conj(zeta) = zeta^-1 = 1 - zeta, so
        conj(a + b*zeta) = (a + b) - b*zeta."""
        return Eisenstein(self.a + self.b, -self.b)

    def norm(self):
        """Field norm a^2 + a*b + b^2 = self * self.conj() (real, >= 0)."""
        return self.a * self.a + self.a * self.b + self.b * self.b

    def inv(self) -> "Eisenstein":
        """Ring inverse. Only the twelve units +-zeta^k qualify when the
        components are integers; anything else raises NonUnitError."""
        n = self.norm()
        if not n:
            raise NonUnitError("zero has no inverse")
        if isinstance(n, int) and n != 1:
            raise NonUnitError(f"norm {n} != 1; not a unit of the integer ring")
        return self.conj() * (Fraction(1, n) if n != 1 else 1)

    def field_inv(self) -> "Eisenstein":
        """Exact inverse in Q(zeta); promotes components to Fraction."""
        n = self.norm()
        if not n:
            raise NonUnitError("zero has no inverse")
        c = self.conj()
        return Eisenstein(Fraction(c.a, 1) / n, Fraction(c.b, 1) / n)

    def __truediv__(self, other):
        return self * Eisenstein.coerce(other).field_inv()

    def __rtruediv__(self, other):
        return Eisenstein.coerce(other) * self.field_inv()

    def __pow__(self, n):
        if n < 0:
            return self.field_inv() ** (-n)
        result = Eisenstein(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return f"Eisenstein({self.a!r}, {self.b!r})"
