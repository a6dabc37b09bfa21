"""Constant-term routes for monotone triangles and deletion shapes.

The expressions are assembled with CTBuilder and reduced by the series
engine in laurent. Signs and exponents are implemented exactly as the
closed forms state them; the sign-audit tests compare every route
against brute enumeration on a grid of small inputs, so a uniform
discrepancy would fail the build rather than get patched here.
"""

from .. import laurent
from ..errors import PreconditionError
from ..laurent import CTBuilder, LaurentPoly
from ..polyring import ParamPoly, gen_binom
from ..triangles.sttree import STTreeShape

__all__ = ["ct_mt", "ct_mt_top", "ct_st_tree"]


def checked_bottom(b):
    b = tuple(int(x) for x in b)
    if not b:
        raise PreconditionError("bottom row must be nonempty")
    if any(b[i] > b[i + 1] for i in range(len(b) - 1)):
        raise PreconditionError("bottom row must increase weakly")
    return b


def is_strict(b):
    return all(b[i] < b[i + 1] for i in range(len(b) - 1))


def add_plain_pairs(cb):
    """(x_i - x_j)(1 + x_j + x_i x_j) over all i < j."""
    one = cb.const(1)
    for i in range(1, cb.nx + 1):
        xi = cb.x(i)
        for j in range(i + 1, cb.nx + 1):
            xj = cb.x(j)
            cb.add((xi - xj) * (one + xj + xi * xj))


def add_weighted_pairs(cb):
    """(x_i - x_j)(1 + (1 - v) x_i + u (x_j + x_i x_j)) over all i < j."""
    u = cb.param("u")
    v = cb.param("v")
    one = cb.const(1)
    for i in range(1, cb.nx + 1):
        xi = cb.x(i)
        for j in range(i + 1, cb.nx + 1):
            xj = cb.x(j)
            cb.add((xi - xj) * (one + (one - v) * xi + u * (xj + xi * xj)))


def top_window_factor(cb, a, lo, hi):
    """Series multiplier that pins the top entry of the array to a, for
    arrays whose bottom entries all lie in [lo, hi].

    The printed multiplier carries an extra (1 + x_i)^(-lo) per
    variable; callers fold that into their (1 + x_i)^(b_i) factors so
    all binomial exponents stay non-negative, which is why it does not
    appear here.
    """
    if not lo <= a <= hi:
        raise PreconditionError(f"top entry {a} outside window [{lo}, {hi}]")
    cols = list(range(cb.nx))
    out = LaurentPoly.zero(cb.ncols)
    for d in range(hi - lo + 1):
        c = gen_binom(d, a - lo)
        if c == 0:
            continue
        if (a + lo + d) % 2:
            c = -c
        out = out + laurent.complete_hom(cb.ncols, cols, d, inverted=True) * c
    return out


def ct_mt(b, mode="standard", **budget):
    """Bottom-row generating function of monotone triangles by constant
    term extraction.

    standard: full (u, v) coincidence polynomial for strictly
        increasing b; a weakly increasing b silently drops to the plain
        count, the only specialization that stays valid there.
    alternative: plain count through the (1 - x)-series expression;
        needs non-negative entries.
    antisym: plain count through explicit antisymmetrization and exact
        Vandermonde division, no series expansion involved.
    """
    b = checked_bottom(b)
    n = len(b)
    if mode == "standard":
        strict = is_strict(b)
        cb = CTBuilder(n, ("u", "v") if strict else ())
        for i in range(1, n + 1):
            cb.add_binom_power(i, b[i - 1])
            cb.add_mono({i: 1 - n})
        if strict:
            add_weighted_pairs(cb)
        else:
            add_plain_pairs(cb)
        return cb.constant_term(**budget)
    if mode == "alternative":
        if b[0] < 0:
            raise PreconditionError("alternative route needs non-negative entries")
        cb = CTBuilder(n)
        one = cb.const(1)
        for i in range(1, n + 1):
            cb.add_mono({i: 1 - n - b[i - 1]})
            cb.add_binom_power(i, -n, lin=-1)
        for i in range(1, n + 1):
            xi = cb.x(i)
            for j in range(i + 1, n + 1):
                xj = cb.x(j)
                cb.add((xj - xi) * (one - xj + xi * xj))
        return cb.constant_term(**budget)
    if mode == "antisym":
        if b[0] < 0:
            raise PreconditionError("antisym route needs non-negative entries")
        f = LaurentPoly.one(n)
        for i in range(n):
            f = f * laurent.binom_power(n, i, b[i])
        for i in range(n):
            xi = LaurentPoly.monomial(n, {i: 1})
            for j in range(i + 1, n):
                xj = LaurentPoly.monomial(n, {j: 1})
                f = f * (LaurentPoly.one(n) + xj + xi * xj)
        g = laurent.antisymmetrize(f, n)
        q = laurent.divexact_vandermonde(g, list(range(n)))
        c = q.constant_coeff()
        if (n * (n - 1) // 2) % 2:
            c = -c
        return ParamPoly.const(c)
    raise PreconditionError(f"unknown mode {mode!r}")


def ct_mt_top(b, a, lo=None, hi=None, **budget):
    """Monotone triangles with bottom row b and top entry pinned to a.

    Strictly increasing b gives the (u, v) polynomial, weakly
    increasing the plain count. The window [lo, hi] defaults to
    [min(b), max(b)] and must contain both the bottom entries and a.
    """
    b = checked_bottom(b)
    n = len(b)
    if lo is None:
        lo = b[0]
    if hi is None:
        hi = b[-1]
    if lo > b[0] or hi < b[-1]:
        raise PreconditionError("window must contain the bottom entries")
    strict = is_strict(b)
    cb = CTBuilder(n, ("u", "v") if strict else ())
    for i in range(1, n + 1):
        cb.add_binom_power(i, b[i - 1] - lo)
        cb.add_mono({i: 1 - n})
    if strict:
        add_weighted_pairs(cb)
    else:
        add_plain_pairs(cb)
    cb.add(top_window_factor(cb, a, lo, hi))
    return cb.constant_term(**budget)


def ct_st_tree(s, t, b, include_i=(), include_j=(), top=None, weighted=True, **budget):
    """Deletion-shape generating function by constant term extraction.

    Mirrors operators.OperatorRing.st_gf: s prescribes the left column
    deletions, t the right diagonal deletions, b the n diagonal bottoms
    (strictly increasing). include_i / include_j switch on the
    geometric correction factors for the selected exceptional columns
    and diagonals. top = (a, lo, hi) additionally pins the top entry.
    With weighted=False both weights are specialized to 1 at build
    time, which keeps the expansion much smaller.

    Combining top with a correction factor moves the boundary weight of
    the correction onto the window edges: at a == lo (columns) or
    a == hi (diagonals) the weighted result differs from the
    dropped-coincidence statistics by one factor of v resp. u, while
    interior apexes and every u = v = 1 count come out exact. The
    trapezoid formulas built on this avoid the caveat; it only shows
    when a raw corrected shape is queried at a window edge.
    """
    b = checked_bottom(b)
    n = len(b)
    if not is_strict(b):
        raise PreconditionError("prescribed bottoms must increase strictly")
    shape = STTreeShape(n, tuple(int(x) for x in s), tuple(int(x) for x in t))
    s, t = shape.s, shape.t
    l, r = len(s), len(t)
    inc_i = frozenset(include_i)
    inc_j = frozenset(include_j)
    bad_i = inc_i - shape.exceptional_columns()
    if bad_i:
        raise PreconditionError(f"columns {sorted(bad_i)} are not exceptional")
    bad_j = inc_j - shape.exceptional_diagonals()
    if bad_j:
        raise PreconditionError(f"diagonals {sorted(bad_j)} are not exceptional")

    base = 0
    if top is not None:
        a, lo, hi = top
        if lo > b[0] or hi < b[-1]:
            raise PreconditionError("window must contain the bottom entries")
        base = lo

    cb = CTBuilder(n, ("u", "v") if weighted else ())
    if weighted:
        u = cb.param("u")
        one_minus_v = cb.const(1) - cb.param("v")
    for i in range(1, n + 1):
        e = 1 - n
        sign = 1
        if i <= l:
            si = s[i - 1]
            e += si
            if si % 2:
                sign = -1
            # (x/((v-1)x - 1))^s = (-x)^s (1 + (1-v) x)^(-s); at v = 1
            # the series factor collapses to 1
            if weighted and si:
                cb.add_binom_power(i, -si, lin=one_minus_v)
        if i > n - r:
            ti = t[i - (n - r) - 1]
            e += ti
            if ti:
                cb.add_binom_power(i, -ti, lin=u if weighted else 1)
        cb.add_binom_power(i, b[i - 1] - base)
        cb.add_mono({i: e}, sign)
    if weighted:
        for i in sorted(inc_i):
            cb.add_binom_power(i, -1, lin=one_minus_v)
        for j in sorted(inc_j):
            cb.add_binom_power(j, 1)
            cb.add_binom_power(j, -1, lin=u)
        add_weighted_pairs(cb)
    else:
        # both correction factors degenerate to 1 at u = v = 1
        add_plain_pairs(cb)
    if top is not None:
        cb.add(top_window_factor(cb, a, lo, hi))
    return cb.constant_term(**budget)
