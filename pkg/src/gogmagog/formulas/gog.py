"""Constant-term routes for Gog trapezoids.

All expressions live in n bound variables; the first k carry the
prescribed bottom row, the rest encode the cut-off corner. Weight
conventions, fixed by the sign-audit tests against brute enumeration:

    count        plain number of trapezoids with the given bottom row
    inv_pair     u^inv v^inv' over the trapezoid's coincidences
    min_max      P^(#entries equal to 1) Q^(#ceiling entries in column
                 k, the bottom-right corner not counted)
    fixed-minima plain count among trapezoids with exactly p minima

gog_ct_total sums min_max over all bottom rows and splices the corner
maximum back in, so its Q really counts every ceiling entry.
"""

from ..errors import PreconditionError
from ..laurent import CTBuilder
from ..polyring import ParamPoly
from .mt import add_plain_pairs, add_weighted_pairs, top_window_factor

__all__ = [
    "gog_bottom_rows",
    "gog_ct",
    "gog_ct_fixed_minima",
    "gog_ct_minmax_m0",
    "gog_ct_total",
]

MODES = ("count", "inv_pair", "min_max")


def _check_params(m, n, k):
    if m < 0 or n < 1 or not 1 <= k <= n:
        raise PreconditionError("need m >= 0, n >= 1 and 1 <= k <= n")


def checked_gog_bottom(m, n, k, bottom_row):
    b = tuple(int(x) for x in bottom_row)
    if len(b) != k:
        raise PreconditionError(f"bottom row must have {k} entries")
    if any(b[i] >= b[i + 1] for i in range(k - 1)):
        raise PreconditionError("bottom row must increase strictly")
    if b[0] < 1:
        raise PreconditionError("entries start at 1")
    for j, e in enumerate(b, start=1):
        if e > m + j:
            raise PreconditionError(f"entry {e} exceeds its ceiling {m + j}")
    return b


def gog_bottom_rows(m, n, k):
    """All admissible bottom rows, in lexicographic order."""
    _check_params(m, n, k)

    def rec(j, lo):
        if j > k:
            yield ()
            return
        for e in range(lo, m + j + 1):
            for rest in rec(j + 1, e + 1):
                yield (e,) + rest

    yield from rec(1, 1)


def _top_setup(m, n, top):
    """Window shared by every trapezoid formula: entries live in
    [1, m + n], so does the top entry."""
    if top is None:
        return None, 0
    a = int(top)
    if not 1 <= a <= m + n:
        raise PreconditionError(f"top entry {a} outside [1, {m + n}]")
    return (a, 1, m + n), 1


def gog_ct(m, n, k, bottom_row, mode="count", top=None, **budget):
    """Generating function of (m, n, k)-trapezoids with the given
    bottom row, by constant term extraction; see the module docstring
    for the weight each mode carries. top = a pins the top entry."""
    _check_params(m, n, k)
    b = checked_gog_bottom(m, n, k, bottom_row)
    window, base = _top_setup(m, n, top)

    if mode == "count":
        cb = CTBuilder(n)
        for i in range(1, k + 1):
            cb.add_binom_power(i, b[i - 1] - base)
            cb.add_mono({i: 1 - n})
        for i in range(k + 1, n + 1):
            cb.add_binom_power(i, m + k + 1 - base)
            cb.add_mono({i: -n + i - k})
        add_plain_pairs(cb)
    elif mode == "inv_pair":
        cb = CTBuilder(n, ("u", "v"))
        u = cb.param("u")
        for i in range(1, k + 1):
            cb.add_binom_power(i, b[i - 1] - base)
            cb.add_mono({i: 1 - n})
        for i in range(k + 1, n + 1):
            cb.add_binom_power(i, m + i + 1 - base)
            cb.add_binom_power(i, -(i - k), lin=u)
            cb.add_mono({i: -n + i - k})
        add_weighted_pairs(cb)
    elif mode == "min_max":
        if b[0] == 1 and window is not None:
            return _minmax_top_strata(m, n, k, b, window[0], **budget)
        cb = CTBuilder(n, ("P", "Q"))
        P = cb.param("P")
        Q = cb.param("Q")
        one = cb.const(1)
        if b[0] == 1:
            # at least one minimum is forced; P grades how many
            cb.add(P)
            cb.add_binom_power(1, -1, lin=P)
            cb.add_binom_power(1, 2 - base)
            cb.add_mono({1: 1 - n})
            start = 2
        else:
            # no entry can reach 1, so P never appears
            start = 1
        for i in range(start, k + 1):
            cb.add_binom_power(i, b[i - 1] - base)
            cb.add_mono({i: 1 - n})
        for i in range(k + 1, n + 1):
            cb.add(one + Q * cb.x(i))
            cb.add_binom_power(i, m + k - base)
            cb.add_mono({i: -n + i - k})
        add_plain_pairs(cb)
    else:
        raise PreconditionError(f"unknown mode {mode!r}")

    if window is not None:
        cb.add(top_window_factor(cb, *window))
    return cb.constant_term(**budget)


def _minmax_fixed_q(m, n, k, p, b, a, **budget):
    """Q-graded variant of the fixed-minima expression, optionally
    pinned to top entry a. The pinning multiplier reads the top entry
    of the array left after peeling the p forced bottom cells out of
    column 1, so it only agrees with the true top entry while p < n."""
    cb = CTBuilder(n, ("Q",))
    one = cb.const(1)
    base = 0 if a is None else 1
    sign = -1 if (p - 1) % 2 else 1
    cb.add_binom_power(1, 2 - base)
    cb.add_mono({1: p - n}, sign)
    for i in range(2, k + 1):
        cb.add_binom_power(i, b[i - 1] - base)
        cb.add_mono({i: 1 - n})
    for i in range(k + 1, n + 1):
        cb.add(one + cb.param("Q") * cb.x(i))
        cb.add_binom_power(i, m + k - base)
        cb.add_mono({i: -n + i - k})
    add_plain_pairs(cb)
    if a is not None:
        cb.add(top_window_factor(cb, a, 1, m + n))
    return cb.constant_term(**budget)


def _minmax_top_strata(m, n, k, b, a, **budget):
    """min_max with pinned top entry when the bottom row starts at 1.

    Resumming the minima count into the P-series first and pinning
    afterwards double-counts: the series hides arbitrarily long runs
    of forced cells behind extra powers of x_1, and the pinning
    multiplier then reads their top entries off by one. So pin each
    run length separately and resum in the result ring. A run that
    swallows the whole first column forces top entry 1 and needs no
    pinning at all."""
    P = ParamPoly.var("P")
    if a == 1:
        return (P ** n) * _minmax_fixed_q(m, n, k, n, b, None, **budget)
    acc = ParamPoly.zero()
    for p in range(1, n):
        acc = acc + (P ** p) * _minmax_fixed_q(m, n, k, p, b, a, **budget)
    return acc


def gog_ct_fixed_minima(m, n, k, p, tail, **budget):
    """Number of (m, n, k)-trapezoids with exactly p >= 1 minima and
    bottom row (1, tail...); tail holds the k - 1 remaining entries."""
    _check_params(m, n, k)
    if p < 1:
        raise PreconditionError("need p >= 1; a bottom row above 1 has none")
    if p > n:
        raise PreconditionError(f"column 1 has only {n} cells")
    b = checked_gog_bottom(m, n, k, (1,) + tuple(tail))
    cb = CTBuilder(n)
    sign = -1 if (p - 1) % 2 else 1
    cb.add_binom_power(1, 2)
    cb.add_mono({1: p - n}, sign)
    for i in range(2, k + 1):
        cb.add_binom_power(i, b[i - 1])
        cb.add_mono({i: 1 - n})
    for i in range(k + 1, n + 1):
        cb.add_binom_power(i, m + k + 1)
        cb.add_mono({i: -n + i - k})
    add_plain_pairs(cb)
    return cb.constant_term(**budget)


def gog_ct_total(m, n, k, mode="count", top=None, **budget):
    """Sum of gog_ct over every admissible bottom row. In min_max mode
    the bottom-right corner maximum is spliced back in, so the result
    grades by the full (minima, maxima) pair."""
    if mode not in ("count", "min_max"):
        raise PreconditionError("totals exist for count and min_max modes")
    Q = ParamPoly.var("Q")
    acc = ParamPoly.zero()
    for b in gog_bottom_rows(m, n, k):
        term = gog_ct(m, n, k, b, mode=mode, top=top, **budget)
        if mode == "min_max" and b[-1] == m + k:
            term = term * Q
        acc = acc + term
    return acc


def gog_ct_minmax_m0(n, k, **budget):
    """The m = 0 specialization of the spliced min_max total in one
    constant term; the forced corner maximum arrives as the leading
    P*Q."""
    _check_params(0, n, k)
    cb = CTBuilder(n, ("P", "Q"))
    P = cb.param("P")
    Q = cb.param("Q")
    one = cb.const(1)
    cb.add(P * Q)
    cb.add_binom_power(1, -1, lin=P)
    cb.add_binom_power(1, 2)
    cb.add_mono({1: 1 - n})
    for i in range(2, k + 1):
        cb.add_binom_power(i, i)
        cb.add_mono({i: 1 - n})
    for i in range(k + 1, n + 1):
        cb.add(one + Q * cb.x(i))
        cb.add_binom_power(i, k)
        cb.add_mono({i: -n + i - k})
    add_plain_pairs(cb)
    return cb.constant_term(**budget)
