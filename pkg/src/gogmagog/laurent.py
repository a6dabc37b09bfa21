"""Sparse Laurent polynomials and the constant-term engine.

A `LaurentPoly` lives in a fixed number of exponent columns. The first
`nx` columns of a constant-term expression are the bound variables that
get extracted; any remaining columns hold weight parameters, which are
ordinary polynomial variables folded into the same exponent tuples so
that the hot loops never touch a nested coefficient type.

`constant_term` multiplies the factors of a `CTExpression` in an order
that eliminates bound variables as early as possible, pruning every
partial product against exponent ranges the remaining factors can still
cancel. Infinite series factors (negative binomial powers, geometric
series in a monomial) are expanded up to per-variable caps that are
provably sufficient: a series term can only contribute to the constant
term if the other factors can absorb its exponent, and the absorption
available is bounded by the most negative exponents present.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import (
    ExactDivisionError,
    MalformedExpressionError,
    PreconditionError,
    ResourceBudgetError,
)
from .polyring import PARAM_INDEX, NPARAMS, ParamPoly, gen_binom


class LaurentPoly:
    """Sparse Laurent polynomial: {exponent tuple: int | Fraction}."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[e] = c

    @classmethod
    def zero(cls, n) -> "LaurentPoly":
        return cls(n)

    @classmethod
    def one(cls, n) -> "LaurentPoly":
        return cls.const(n, 1)

    @classmethod
    def const(cls, n, c) -> "LaurentPoly":
        return cls(n, {(0,) * n: c} if c else None)

    @classmethod
    def monomial(cls, n, exps, coeff=1) -> "LaurentPoly":
        """exps is {column: exponent}; missing columns are zero."""
        e = [0] * n
        for col, p in exps.items():
            if not 0 <= col < n:
                raise PreconditionError(f"column {col} out of range")
            e[col] = p
        return cls(n, {tuple(e): coeff} if coeff else None)

    def _check_compat(self, other):
        if self.n != other.n:
            raise PreconditionError(
                f"column mismatch: {self.n} vs {other.n}"
            )

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0,) * self.n: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.n, other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_compat(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        r = LaurentPoly.__new__(LaurentPoly)
        r.n, r.terms = self.n, out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LaurentPoly.__new__(LaurentPoly)
        r.n = self.n
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.n, other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly.zero(self.n)
            r = LaurentPoly.__new__(LaurentPoly)
            r.n = self.n
            r.terms = {e: c * other for e, c in self.terms.items()}
            return r
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_compat(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        r = LaurentPoly.__new__(LaurentPoly)
        r.n, r.terms = self.n, out
        return r

    __rmul__ = __mul__

    def __pow__(self, p):
        if p < 0:
            raise PreconditionError("negative LaurentPoly powers unsupported")
        result = LaurentPoly.one(self.n)
        base = self
        while p:
            if p & 1:
                result = result * base
            base = base * base
            p >>= 1
        return result

    def mul_bounded(self, other, lo, hi, budget=None):
        """Product keeping only terms with lo[v] <= exp[v] <= hi[v].

        lo/hi are per-column sequences; None entries mean unbounded.
        Raises ResourceBudgetError when the result exceeds `budget` terms.
        """
        self._check_compat(other)
        active = [
            (v, lo[v], hi[v])
            for v in range(self.n)
            if lo[v] is not None or hi[v] is not None
        ]
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                for v, l, h in active:
                    ev = e1[v] + e2[v]
                    if (l is not None and ev < l) or (h is not None and ev > h):
                        break
                else:
                    e = tuple(a + b for a, b in zip(e1, e2))
                    s = out.get(e, 0) + c1 * c2
                    if s:
                        out[e] = s
                    else:
                        del out[e]
            if budget is not None and len(out) > budget:
                raise ResourceBudgetError(
                    f"intermediate product exceeded {budget} terms",
                    budget=budget,
                    needed=len(out),
                )
        r = LaurentPoly.__new__(LaurentPoly)
        r.n, r.terms = self.n, out
        return r

    # -- structure queries ------------------------------------------------

    def min_exp(self, col):
        return min((e[col] for e in self.terms), default=0)

    def max_exp(self, col):
        return max((e[col] for e in self.terms), default=0)

    def support_cols(self, limit=None):
        """Columns (below `limit` if given) with a nonzero exponent."""
        stop = self.n if limit is None else limit
        cols = set()
        for e in self.terms:
            for v in range(stop):
                if e[v]:
                    cols.add(v)
        return cols

    def coeff(self, exps):
        e = [0] * self.n
        for col, p in exps.items():
            e[col] = p
        return self.terms.get(tuple(e), 0)

    def constant_coeff(self):
        return self.terms.get((0,) * self.n, 0)

    def truncate_total(self, max_deg, cols=None):
        """Drop terms whose total degree over `cols` exceeds max_deg."""
        which = range(self.n) if cols is None else cols
        out = {
            e: c
            for e, c in self.terms.items()
            if sum(e[v] for v in which) <= max_deg
        }
        return LaurentPoly(self.n, out)

    def permuted(self, perm):
        """Apply x_v -> x_perm[v] on the first len(perm) columns."""
        m = len(perm)
        out = {}
        for e, c in self.terms.items():
            f = list(e)
            for v in range(m):
                f[perm[v]] = e[v]
            out[tuple(f)] = c
        r = LaurentPoly.__new__(LaurentPoly)
        r.n, r.terms = self.n, out
        return r

    def substitute_col(self, col, value):
        """Substitute a scalar for one column (exponents may be negative)."""
        out = {}
        for e, c in self.terms.items():
            p = e[col]
            if p:
                if isinstance(value, int) and p < 0:
                    c = c * Fraction(1, value) ** (-p)
                else:
                    c = c * value**p
            f = e[:col] + (0,) + e[col + 1 :]
            s = out.get(f, 0) + c
            if s:
                out[f] = s
            else:
                out.pop(f, None)
        return LaurentPoly(self.n, out)

    def evaluate(self, values):
        """Full evaluation; `values` maps every supported column to a
        scalar (or any ring element with ** handling negative powers)."""
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, p in enumerate(e):
                if p:
                    if v not in values:
                        raise PreconditionError(f"no value for column {v}")
                    val = values[v]
                    if isinstance(val, int) and p < 0:
                        term = term * Fraction(1, val) ** (-p)
                    else:
                        term = term * val**p
            total = term + total
        return total

    def to_parampoly(self, nx, param_names):
        """Read columns nx.. as the named parameters; requires all
        exponents below nx to be zero."""
        out = {}
        for e, c in self.terms.items():
            if any(e[v] for v in range(nx)):
                raise PreconditionError("bound variable survived extraction")
            exp = [0] * NPARAMS
            for t, name in enumerate(param_names):
                exp[PARAM_INDEX[name]] = e[nx + t]
            key = tuple(exp)
            out[key] = out.get(key, 0) + c
        return ParamPoly(out)

    def __repr__(self):
        k = len(self.terms)
        return f"<LaurentPoly n={self.n} terms={k}>"


def binom_power(n, col, p, lin=1):
    """(1 + lin*x_col)^p for p >= 0; lin is a scalar or LaurentPoly."""
    if p < 0:
        raise PreconditionError("use NegPowerFactor for negative powers")
    if isinstance(lin, LaurentPoly):
        out = LaurentPoly.zero(n)
        linpow = LaurentPoly.one(n)
        x = LaurentPoly.monomial(n, {col: 1})
        xpow = LaurentPoly.one(n)
        for t in range(p + 1):
            out = out + gen_binom(p, t) * linpow * xpow
            if t < p:
                linpow = linpow * lin
                xpow = xpow * x
        return out
    terms = {}
    c = 1
    for t in range(p + 1):
        e = [0] * n
        e[col] = t
        terms[tuple(e)] = gen_binom(p, t) * c
        c *= lin
    return LaurentPoly(n, terms)


def det(matrix):
    """Determinant by cofactor expansion; entries from any commutative
    ring implementing + - *. Intended for small matrices."""
    m = len(matrix)
    if m == 0:
        return 1
    for row in matrix:
        if len(row) != m:
            raise PreconditionError("matrix must be square")
    if m == 1:
        return matrix[0][0]
    if m == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = None
    for i in range(m):
        minor = [row[1:] for j, row in enumerate(matrix) if j != i]
        term = matrix[i][0] * det(minor)
        if i & 1:
            term = -term
        total = term if total is None else total + term
    return total


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def antisymmetrize(p, m, budget_vars=8):
    """Sum of sgn(s) * p(x_s(1),...,x_s(m)) over all permutations s."""
    if m > budget_vars:
        raise ResourceBudgetError(
            f"antisymmetrization over {m} variables exceeds budget {budget_vars}",
            budget=budget_vars,
            needed=m,
        )
    total = LaurentPoly.zero(p.n)
    for perm in itertools.permutations(range(m)):
        q = p.permuted(perm)
        total = total + (q if _perm_sign(perm) == 1 else -q)
    return total


def elem_sym(n, cols, k):
    """Elementary symmetric polynomial e_k in the given columns."""
    if k < 0 or k > len(cols):
        return LaurentPoly.zero(n)
    terms = {}
    for subset in itertools.combinations(cols, k):
        e = [0] * n
        for v in subset:
            e[v] = 1
        terms[tuple(e)] = 1
    return LaurentPoly(n, terms)


def complete_hom(n, cols, k, inverted=False):
    """Complete homogeneous h_k in the given columns; `inverted` builds
    h_k(1/x) with exponents negated."""
    if k < 0:
        return LaurentPoly.zero(n)
    sign = -1 if inverted else 1
    terms = {}
    for combo in itertools.combinations_with_replacement(cols, k):
        e = [0] * n
        for v in combo:
            e[v] += sign
        terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    return LaurentPoly(n, terms)


def divexact_linear(p, a, b):
    """Exact division of p by (x_a - x_b); raises ExactDivisionError on
    a nonzero remainder."""
    if a == b:
        raise PreconditionError("columns must differ")
    if not p.terms:
        return LaurentPoly.zero(p.n)
    # regroup as a univariate in column a with LaurentPoly coefficients
    coeffs = {}
    for e, c in p.terms.items():
        d = e[a]
        f = e[:a] + (0,) + e[a + 1 :]
        coeffs.setdefault(d, {})[f] = c
    dmin = min(coeffs)
    dmax = max(coeffs)
    layers = {
        d: LaurentPoly(p.n, coeffs.get(d)) for d in range(dmin, dmax + 1)
    }
    xb = LaurentPoly.monomial(p.n, {b: 1})
    # p = (x_a - x_b) q  =>  q_{d-1} = p_d + x_b q_d, from the top down
    q = {}
    carry = LaurentPoly.zero(p.n)
    for d in range(dmax, dmin, -1):
        carry = layers[d] + xb * carry
        q[d - 1] = carry
    rem = layers[dmin] + xb * carry
    if rem:
        raise ExactDivisionError("linear division left a remainder")
    out = {}
    for d, layer in q.items():
        for e, c in layer.terms.items():
            if c:
                out[e[:a] + (d,) + e[a + 1 :]] = c
    return LaurentPoly(p.n, out)


def divexact_vandermonde(p, cols):
    """Exact division by prod_{i<j} (x_cols[i] - x_cols[j])."""
    out = p
    for i in range(len(cols)):
        for j in range(i + 1, len(cols)):
            out = divexact_linear(out, cols[i], cols[j])
    return out


class NegPowerFactor:
    """(1 + lin*x_var)^(-power) with power > 0.

    `lin` is a scalar or a LaurentPoly with no bound-variable support.
    Expansion to a cap M is sum_t C(-power, t) lin^t x_var^t.
    """

    __slots__ = ("var", "lin", "power")

    def __init__(self, var, lin, power):
        if power <= 0:
            raise MalformedExpressionError("power must be positive")
        self.var = var
        self.lin = lin
        self.power = power

    def support(self, nx):
        return {self.var} if self.var < nx else set()

    def expand(self, n, caps):
        cap = caps[self.var]
        out = LaurentPoly.zero(n)
        linpow = LaurentPoly.one(n) if isinstance(self.lin, LaurentPoly) else 1
        for t in range(cap + 1):
            mono = LaurentPoly.monomial(n, {self.var: t}, gen_binom(-self.power, t))
            out = out + mono * linpow
            if t < cap:
                linpow = linpow * self.lin
        return out


class GeometricFactor:
    """1/(1 - coeff*x^alpha) for a single monomial with alpha >= 0 and
    at least one bound variable strictly positive."""

    __slots__ = ("exps", "coeff")

    def __init__(self, exps, coeff=1):
        if not exps or any(p <= 0 for p in exps.values()):
            raise MalformedExpressionError(
                "geometric base must be a nonconstant monomial with "
                "positive exponents"
            )
        self.exps = dict(exps)
        self.coeff = coeff

    def support(self, nx):
        return {v for v in self.exps if v < nx}

    def expand(self, n, caps):
        sup = self.support(len(caps))
        if not sup:
            raise MalformedExpressionError(
                "geometric base has no bound variable; series would not "
                "terminate"
            )
        tmax = min(caps[v] // self.exps[v] for v in sup)
        out = {}
        c = 1
        for t in range(tmax + 1):
            e = [0] * n
            for v, p in self.exps.items():
                e[v] = p * t
            out[tuple(e)] = c
            c = c * self.coeff
        return LaurentPoly(n, out)


class CTExpression:
    """A product of factors whose constant term in the first nx columns
    is wanted. Factors may appear in any order; extraction reorders them."""

    __slots__ = ("nx", "param_names", "factors")

    def __init__(self, nx, param_names, factors):
        self.nx = nx
        self.param_names = tuple(param_names)
        self.factors = list(factors)
        ncols = nx + len(self.param_names)
        for name in self.param_names:
            if name not in PARAM_INDEX:
                raise MalformedExpressionError(f"unknown parameter {name!r}")
        for f in self.factors:
            if isinstance(f, LaurentPoly):
                if f.n != ncols:
                    raise MalformedExpressionError(
                        f"factor has {f.n} columns, expression has {ncols}"
                    )
                for e in f.terms:
                    if any(e[v] < 0 for v in range(nx, ncols)):
                        raise MalformedExpressionError(
                            "negative parameter exponent in factor"
                        )
            elif isinstance(f, NegPowerFactor):
                if not 0 <= f.var < nx:
                    raise MalformedExpressionError(
                        "series factor must target a bound variable"
                    )
                if isinstance(f.lin, LaurentPoly):
                    if f.lin.n != ncols:
                        raise MalformedExpressionError("series coefficient "
                                                       "column mismatch")
                    if f.lin.support_cols(nx):
                        raise MalformedExpressionError(
                            "series coefficient may not involve bound "
                            "variables"
                        )
            elif isinstance(f, GeometricFactor):
                if not any(0 <= v < nx for v in f.exps):
                    raise MalformedExpressionError(
                        "geometric factor must involve a bound variable"
                    )
                if any(v >= ncols or v < 0 for v in f.exps):
                    raise MalformedExpressionError("geometric factor column "
                                                   "out of range")
            else:
                raise MalformedExpressionError(
                    f"unsupported factor type {type(f).__name__}"
                )

    @property
    def ncols(self):
        return self.nx + len(self.param_names)


def constant_term(expr, *, budget_terms=2_000_000, budget_vars=8):
    """Constant term of a CTExpression in its bound variables, as a
    ParamPoly in the expression's parameters.

    Raises ResourceBudgetError if the expression needs more bound
    variables than `budget_vars` or any intermediate product exceeds
    `budget_terms` terms.
    """
    nx = expr.nx
    ncols = expr.ncols
    if nx > budget_vars:
        raise ResourceBudgetError(
            f"{nx} bound variables exceed budget {budget_vars}",
            budget=budget_vars,
            needed=nx,
        )

    # Per-variable caps: how much positive exponent in x_v the rest of
    # the product could still cancel. Series factors never go negative,
    # so only explicit Laurent factors contribute.
    caps = [0] * ncols
    for v in range(nx):
        neg = 0
        for f in expr.factors:
            if isinstance(f, LaurentPoly) and f.terms:
                m = f.min_exp(v)
                if m < 0:
                    neg -= m
        caps[v] = neg

    expanded = []
    for f in expr.factors:
        if isinstance(f, LaurentPoly):
            expanded.append(f)
        else:
            expanded.append(f.expand(ncols, caps))

    # Order factors so low-numbered variables finish first; once every
    # factor touching x_v has been absorbed, partial terms must already
    # be flat in x_v and the bounds below pin them to zero.
    def sort_key(f):
        sup = f.support_cols(nx)
        if not sup:
            return (-1, -1)
        return (min(sup), max(sup))

    expanded.sort(key=sort_key)

    if not expanded:
        return ParamPoly.const(1)

    # suffix[t][v] = (min, max) total exponent factors t.. can contribute
    suffix = [[(0, 0)] * nx for _ in range(len(expanded) + 1)]
    for t in range(len(expanded) - 1, -1, -1):
        f = expanded[t]
        for v in range(nx):
            lo = f.min_exp(v) if f.terms else 0
            hi = f.max_exp(v) if f.terms else 0
            plo, phi = suffix[t + 1][v]
            suffix[t][v] = (lo + plo, hi + phi)

    product = LaurentPoly.one(ncols)
    for t, f in enumerate(expanded):
        lo = [None] * ncols
        hi = [None] * ncols
        for v in range(nx):
            smin, smax = suffix[t + 1][v]
            lo[v] = -smax
            hi[v] = -smin
        product = product.mul_bounded(f, lo, hi, budget=budget_terms)
        if not product:
            break

    return product.to_parampoly(nx, expr.param_names)


class CTBuilder:
    """Convenience layer for assembling CTExpressions.

    Bound variables are addressed by the 1-based indices the formulas
    use; parameters by name. Build factor polynomials with x()/param()/
    const() arithmetic or the poly() shorthand, then add_* them.
    """

    def __init__(self, nx, params=()):
        self.nx = nx
        self.params = tuple(params)
        self.ncols = nx + len(self.params)
        self._factors = []

    def _xcol(self, i):
        if not 1 <= i <= self.nx:
            raise PreconditionError(f"x_{i} out of range 1..{self.nx}")
        return i - 1

    def _pcol(self, name):
        try:
            return self.nx + self.params.index(name)
        except ValueError:
            raise PreconditionError(
                f"parameter {name!r} not declared for this expression"
            ) from None

    def x(self, i, e=1):
        return LaurentPoly.monomial(self.ncols, {self._xcol(i): e})

    def param(self, name, e=1):
        return LaurentPoly.monomial(self.ncols, {self._pcol(name): e})

    def const(self, c):
        return LaurentPoly.const(self.ncols, c)

    def poly(self, *terms):
        """Each term is (coeff, {i: e}) or (coeff, {i: e}, {name: e})."""
        out = LaurentPoly.zero(self.ncols)
        for term in terms:
            coeff, xexps = term[0], term[1]
            pexps = term[2] if len(term) > 2 else {}
            exps = {self._xcol(i): e for i, e in xexps.items()}
            exps.update({self._pcol(nm): e for nm, e in pexps.items()})
            out = out + LaurentPoly.monomial(self.ncols, exps, coeff)
        return out

    def add(self, p):
        self._factors.append(p)
        return self

    def add_mono(self, xexps, coeff=1, pexps=None):
        exps = {self._xcol(i): e for i, e in xexps.items()}
        if pexps:
            exps.update({self._pcol(nm): e for nm, e in pexps.items()})
        self._factors.append(LaurentPoly.monomial(self.ncols, exps, coeff))
        return self

    def add_binom_power(self, i, p, lin=1):
        """(1 + lin*x_i)^p, any integer p; negative p becomes a series
        factor. lin is a scalar or a parameter-only LaurentPoly."""
        if p >= 0:
            self._factors.append(binom_power(self.ncols, self._xcol(i), p, lin))
        else:
            self._factors.append(NegPowerFactor(self._xcol(i), lin, -p))
        return self

    def add_geometric(self, xexps, coeff=1):
        """1/(1 - coeff * x^exps)."""
        self._factors.append(
            GeometricFactor({self._xcol(i): e for i, e in xexps.items()}, coeff)
        )
        return self

    def expr(self):
        return CTExpression(self.nx, self.params, self._factors)

    def constant_term(self, **kwargs):
        return constant_term(self.expr(), **kwargs)
