"""Shift-operator route to the weighted enumeration polynomials.

Everything here lives in a polynomial ring with columns x_1..x_n, u, v
(LaurentPoly with n + 2 columns, u and v at the end).  The basic shift
E_i replaces x_i by x_i + 1; the two difference operators are

    dbar = E - Id        dlow = Id - E^(-1)

and the weighted three-term operator acting on a pair of variables is

    strict_{x,y} = u E_y + v E_x^(-1) + (1 - u - v) E_x^(-1) E_y.

Applying one strict factor per variable pair to the interlacing-count
polynomial and evaluating at a strictly increasing integer vector
produces the coincidence generating function of monotone triangles with
that bottom row; at u = v = 1 the evaluation stays valid for weakly
increasing vectors.  Deletion shapes are reached by further difference
operators with geometric corrections in u and v, mirroring the
enumerators in triangles.sttree.

All strict factors are polynomials in commuting shifts, so their
application order never matters; tests pin that down rather than
trusting it silently.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import PreconditionError
from .laurent import LaurentPoly, det
from .polyring import ParamPoly, gen_binom

_SUM_NODE_PAD = 2


class OperatorRing:
    """Polynomials in x_1..x_n with u, v adjoined as extra columns."""

    def __init__(self, n):
        if n < 1:
            raise PreconditionError("need n >= 1")
        self.n = n
        self.ncols = n + 2
        self._ucol = n
        self._vcol = n + 1
        self._m_poly = None
        self._strict_b = None

    # -- construction helpers --

    def one(self):
        return LaurentPoly.one(self.ncols)

    def const(self, c):
        return LaurentPoly.const(self.ncols, c)

    def x(self, i, e=1):
        return LaurentPoly.monomial(self.ncols, {i - 1: e}, 1)

    def u(self):
        return LaurentPoly.monomial(self.ncols, {self._ucol: 1}, 1)

    def v(self):
        return LaurentPoly.monomial(self.ncols, {self._vcol: 1}, 1)

    def binom_of_var(self, i, shift, k):
        """C(x_i + shift, k) as a polynomial in x_i."""
        if k < 0:
            return LaurentPoly.zero(self.ncols)
        out = self.one()
        for t in range(k):
            out = out * (self.x(i) + self.const(shift - t))
        return out * self.const(Fraction(1, math.factorial(k)))

    # -- shifts and differences --

    def shift(self, p, i, delta=1):
        """Substitute x_i -> x_i + delta; p must be polynomial in x_i."""
        col = i - 1
        out = {}
        for exps, coeff in p.terms.items():
            e = exps[col]
            if e < 0:
                raise PreconditionError("shift needs non-negative exponents")
            for t in range(e + 1):
                c = coeff * math.comb(e, t) * delta ** (e - t)
                ne = exps[:col] + (t,) + exps[col + 1 :]
                c0 = out.get(ne, 0) + c
                if c0:
                    out[ne] = c0
                else:
                    out.pop(ne, None)
        return LaurentPoly(self.ncols, out)

    def dbar(self, p, i):
        return self.shift(p, i, 1) - p

    def dlow(self, p, i):
        return p - self.shift(p, i, -1)

    def strict(self, p, qi, pi):
        """One three-term factor for the variable pair (x_qi, x_pi)."""
        a = self.u() * self.shift(p, pi, 1)
        b = self.v() * self.shift(p, qi, -1)
        c = (self.one() - self.u() - self.v()) * self.shift(self.shift(p, qi, -1), pi, 1)
        return a + b + c

    # -- the interlacing-count polynomial and its weighted transform --

    def gt_poly(self):
        out = self.one()
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                out = out * (self.x(j) - self.x(i) + self.const(j - i)) * self.const(
                    Fraction(1, j - i)
                )
        return out

    def apply_strict_product(self, p, order=None):
        """Apply one strict factor per pair; order is a list of (qi, pi)
        pairs and defaults to lexicographic."""
        if order is None:
            order = [
                (q, pp) for pp in range(1, self.n + 1) for q in range(pp + 1, self.n + 1)
            ]
        for qi, pi in order:
            p = self.strict(p, qi, pi)
        return p

    def m_poly(self):
        if self._m_poly is None:
            self._m_poly = self.apply_strict_product(self.gt_poly())
        return self._m_poly

    # -- top-restricted variants --

    def gt_top_poly(self, a, lo, hi):
        """Polynomial counting interlacing patterns with fixed apex a,
        valid at weakly increasing points inside [lo, hi]."""
        if not lo <= a <= hi:
            raise PreconditionError("need lo <= a <= hi")
        n = self.n
        total = LaurentPoly.zero(self.ncols)
        for b in range(hi - lo + 1):
            c = gen_binom(b, a - lo)
            if c == 0:
                continue
            sign = (-1) ** (a + lo + b)
            mat = [
                [
                    self.binom_of_var(i, i - lo - 1, (j - 1) + (b if j == n else 0))
                    for j in range(1, n + 1)
                ]
                for i in range(1, n + 1)
            ]
            total = total + det(mat) * self.const(sign * c)
        return total

    def m_top_poly(self, a, lo, hi):
        return self.apply_strict_product(self.gt_top_poly(a, lo, hi))

    # -- evaluation --

    def evaluate(self, p, b):
        """Evaluate at x = b, returning an exact polynomial in u, v."""
        if len(b) != self.n:
            raise PreconditionError(f"need {self.n} evaluation points")
        for i, val in enumerate(b):
            p = p.substitute_col(i, val)
        return p.to_parampoly(self.n, ("u", "v"))

    # -- geometric corrections in u and v --

    def dbar_v(self, p, i):
        """(1 + (1-v) dbar)^(-1) dbar, expanded as a terminating series."""
        out = LaurentPoly.zero(self.ncols)
        factor = self.v() - self.one()
        term = self.dbar(p, i)
        scale = self.one()
        while term:
            out = out + scale * term
            term = self.dbar(term, i)
            scale = scale * factor
        return out

    def dlow_u(self, p, i):
        """(1 + (u-1) dlow)^(-1) dlow, expanded as a terminating series."""
        out = LaurentPoly.zero(self.ncols)
        factor = self.one() - self.u()
        term = self.dlow(p, i)
        scale = self.one()
        while term:
            out = out + scale * term
            term = self.dlow(term, i)
            scale = scale * factor
        return out

    def inv_dbar_series(self, p, i):
        """(1 + (1-v) dbar)^(-1) applied to p."""
        out = LaurentPoly.zero(self.ncols)
        factor = self.v() - self.one()
        term = p
        scale = self.one()
        while term:
            out = out + scale * term
            term = self.dbar(term, i)
            scale = scale * factor
        return out

    def inv_dlow_series(self, p, i):
        """(1 + (u-1) dlow)^(-1) applied to p."""
        out = LaurentPoly.zero(self.ncols)
        factor = self.one() - self.u()
        term = p
        scale = self.one()
        while term:
            out = out + scale * term
            term = self.dlow(term, i)
            scale = scale * factor
        return out

    # -- summation --

    def antidifference(self, p, i):
        """G with G(x_i) - G(x_i - 1) = p and G(-1) = 0, by interpolation."""
        col = i - 1
        deg = max((e[col] for e in p.terms), default=0)
        nodes = list(range(-1, deg + _SUM_NODE_PAD))
        values = [LaurentPoly.zero(self.ncols)]
        acc = LaurentPoly.zero(self.ncols)
        for k in range(0, nodes[-1] + 1):
            acc = acc + p.substitute_col(col, k)
            values.append(acc)
        out = LaurentPoly.zero(self.ncols)
        for idx, nk in enumerate(nodes):
            if not values[idx]:
                continue
            basis = self.one()
            denom = Fraction(1)
            for jdx, nj in enumerate(nodes):
                if jdx == idx:
                    continue
                basis = basis * (self.x(i) - self.const(nj))
                denom *= nk - nj
            out = out + values[idx] * basis * self.const(Fraction(1, denom))
        return out

    def subs_shifted_var(self, p, i, j, shift):
        """Substitute x_i -> x_j + shift (i and j may coincide)."""
        src = i - 1
        out = LaurentPoly.zero(self.ncols)
        for exps, coeff in p.terms.items():
            e = exps[src]
            if e < 0:
                raise PreconditionError("substitution needs non-negative exponents")
            base = exps[:src] + (0,) + exps[src + 1 :]
            mono = LaurentPoly(self.ncols, {base: coeff})
            out = out + mono * (self.x(j) + self.const(shift)) ** e
        return out

    def _at_bound(self, g, i, bound, offset):
        if isinstance(bound, tuple):
            j, shift = bound
            return self.subs_shifted_var(g, i, j, shift + offset)
        return g.substitute_col(i - 1, bound + offset)

    def extended_sum(self, p, i, lo, hi):
        """Sum of p over x_i from lo to hi, in the extended sense:
        empty ranges give 0 and inverted ranges the negated middle part.
        Each bound is an integer or a pair (j, shift) meaning x_j + shift.
        """
        g = self.antidifference(p, i)
        return self._at_bound(g, i, hi, 0) - self._at_bound(g, i, lo, -1)

    # -- deletion-shape generating function --

    def st_gf(self, s, t, b, include_i=(), include_j=()):
        """Operator route to the deletion-shape generating function with
        prescribed diagonal bottoms b; include_i / include_j apply the
        geometric correction factors before evaluating."""
        n = self.n
        if len(s) + len(t) > n:
            raise PreconditionError("need len(s) + len(t) <= n")
        if any(b[i] >= b[i + 1] for i in range(n - 1)):
            raise PreconditionError("prescribed bottoms must increase strictly")
        p = self.m_poly()
        for off, tj in enumerate(t):
            j = n - len(t) + 1 + off
            for _ in range(tj):
                p = self.dlow_u(p, j)
        for idx, si in enumerate(s):
            i = idx + 1
            for _ in range(si):
                p = -self.dbar_v(p, i)
        for i in include_i:
            p = self.inv_dbar_series(p, i)
        for j in include_j:
            p = self.inv_dlow_series(p, j)
        return self.evaluate(p, b)


def mt_gf_operator(bottom_row):
    """Coincidence generating function via the operator route; the
    bottom row must be strictly increasing for the weights to count."""
    b = tuple(bottom_row)
    if any(b[i] >= b[i + 1] for i in range(len(b) - 1)):
        raise PreconditionError(
            "weighted evaluation needs a strictly increasing bottom row"
        )
    ring = OperatorRing(len(b))
    return ring.evaluate(ring.m_poly(), b)


def mt_count_operator(bottom_row):
    """Plain count via the operator route; weak increase is allowed here
    because both weights are specialized to 1."""
    b = tuple(bottom_row)
    if any(b[i] > b[i + 1] for i in range(len(b) - 1)):
        raise PreconditionError("bottom row must be weakly increasing")
    ring = OperatorRing(len(b))
    gf = ring.evaluate(ring.m_poly(), b)
    return gf.substitute(u=1, v=1).as_int()


def mt_gf_top_operator(bottom_row, a, lo=None, hi=None):
    """Generating function of triangles with fixed apex a."""
    b = tuple(bottom_row)
    if any(b[i] >= b[i + 1] for i in range(len(b) - 1)):
        raise PreconditionError(
            "weighted evaluation needs a strictly increasing bottom row"
        )
    lo = min(b) if lo is None else lo
    hi = max(b) if hi is None else hi
    if not (lo <= a <= hi and lo <= min(b) and max(b) <= hi):
        raise PreconditionError("need lo <= a, b_i <= hi")
    ring = OperatorRing(len(b))
    return ring.evaluate(ring.m_top_poly(a, lo, hi), b)
