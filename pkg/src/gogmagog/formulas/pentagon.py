"""Constant-term routes for Gog pentagons.

The bound variables split into three blocks: rows 1..n-kr encode the
cut-off lower-left corner, rows n-kr+1..kl carry the prescribed bottom
row, rows kl+1..n the cut-off lower-right corner. A trapezoid is the
kr = n case, where the left block is empty and everything reduces to
the gog module's expressions.

Weight conventions, fixed against brute enumeration:

    count        number of pentagons with the given bottom row
    inv_pair     u^inv v^inv' over the pentagon's coincidences
    min_max      QL^(#bottom minima, leftmost one not counted)
                 QR^(#bottom maxima, rightmost one not counted)
    four_weight  PL^(#top minima) PR^(#top maxima) times the min_max
                 weight, restricted to pentagons having at least one
                 top minimum and at least one top maximum

four_weight leans on a geometric fact: entries equal to 1 pile up at
the lower end of the first column, so "some entry is 1" already forces
the leftmost bottom-minimum candidate; same for m+n entries against
the rightmost candidate. That is why the expression grades those two
cells unconditionally.
"""

from ..errors import NotApplicableError, PreconditionError
from ..laurent import CTBuilder
from ..polyring import ParamPoly
from .mt import add_plain_pairs, add_weighted_pairs, top_window_factor

__all__ = ["pentagon_bottom_rows", "pentagon_ct"]

MODES = ("count", "inv_pair", "min_max", "four_weight")


def _check_params(m, n, kl, kr):
    if m < 0 or n < 1:
        raise PreconditionError("need m >= 0 and n >= 1")
    if not (1 <= kl <= n and 1 <= kr <= n and kl + kr >= n + 1):
        raise PreconditionError("need kl, kr <= n and kl + kr >= n + 1")


def checked_pentagon_bottom(m, n, kl, kr, bottom_row):
    """Bottom entries sit in NE-diagonals n-kr+1 .. kl; the diagonal
    index is both the value floor and the ceiling offset."""
    b = tuple(int(x) for x in bottom_row)
    width = kl + kr - n
    if len(b) != width:
        raise PreconditionError(f"bottom row must have {width} entries")
    if any(b[i] >= b[i + 1] for i in range(width - 1)):
        raise PreconditionError("bottom row must increase strictly")
    for off, e in enumerate(b):
        j = n - kr + 1 + off
        if not j <= e <= m + j:
            raise PreconditionError(f"entry {e} outside [{j}, {m + j}]")
    return b


def pentagon_bottom_rows(m, n, kl, kr):
    """All admissible bottom rows, in lexicographic order."""
    _check_params(m, n, kl, kr)
    width = kl + kr - n

    def rec(off, lo):
        if off == width:
            yield ()
            return
        j = n - kr + 1 + off
        for e in range(max(lo, j), m + j + 1):
            for rest in rec(off + 1, e + 1):
                yield (e,) + rest

    yield from rec(0, 1)


def _sign_const(cb, n, kr, flip=False):
    c = (n - kr) * (n - kr - 1) // 2 + (1 if flip else 0)
    if c % 2:
        cb.add(cb.const(-1))


def _top_setup(m, n, top):
    if top is None:
        return None, 0
    a = int(top)
    if not 1 <= a <= m + n:
        raise PreconditionError(f"top entry {a} outside [1, {m + n}]")
    return (a, 1, m + n), 1


def pentagon_ct(m, n, kl, kr, bottom_row, mode="count", top=None, **budget):
    """Generating function of (m, n, kl, kr)-pentagons with the given
    bottom row; see the module docstring for the weight each mode
    carries. top = a pins the top entry."""
    _check_params(m, n, kl, kr)
    b = checked_pentagon_bottom(m, n, kl, kr, bottom_row)
    window, base = _top_setup(m, n, top)

    def bentry(i):
        return b[i - (n - kr + 1)]

    if mode == "count":
        cb = CTBuilder(n)
        _sign_const(cb, n, kr)
        for i in range(1, n - kr + 1):
            cb.add_binom_power(i, i - base)
            cb.add_mono({i: 1 - kr - i})
        for i in range(n - kr + 1, kl + 1):
            cb.add_binom_power(i, bentry(i) - base)
            cb.add_mono({i: 1 - n})
        for i in range(kl + 1, n + 1):
            cb.add_binom_power(i, m + kl + 1 - base)
            cb.add_mono({i: -n + i - kl})
        add_plain_pairs(cb)
    elif mode == "inv_pair":
        cb = CTBuilder(n, ("u", "v"))
        u = cb.param("u")
        one_minus_v = cb.const(1) - cb.param("v")
        _sign_const(cb, n, kr)
        for i in range(1, n - kr + 1):
            cb.add_binom_power(i, i - base)
            cb.add_binom_power(i, -(n - kr - i + 1), lin=one_minus_v)
            cb.add_mono({i: 1 - kr - i})
        for i in range(n - kr + 1, kl + 1):
            cb.add_binom_power(i, bentry(i) - base)
            cb.add_mono({i: 1 - n})
        for i in range(kl + 1, n + 1):
            cb.add_binom_power(i, m + i + 1 - base)
            cb.add_binom_power(i, -(i - kl), lin=u)
            cb.add_mono({i: -n + i - kl})
        add_weighted_pairs(cb)
    elif mode == "min_max":
        cb = CTBuilder(n, ("QL", "QR"))
        one = cb.const(1)
        ql_lin = one - cb.param("QL")
        qr = cb.param("QR")
        _sign_const(cb, n, kr)
        for i in range(1, n - kr + 1):
            cb.add(one + ql_lin * cb.x(i))
            cb.add_binom_power(i, i - base)
            cb.add_mono({i: 1 - kr - i})
        for i in range(n - kr + 1, kl + 1):
            cb.add_binom_power(i, bentry(i) - base)
            cb.add_mono({i: 1 - n})
        for i in range(kl + 1, n + 1):
            cb.add(one + qr * cb.x(i))
            cb.add_binom_power(i, m + kl - base)
            cb.add_mono({i: -n + i - kl})
        add_plain_pairs(cb)
    elif mode == "four_weight":
        if kr > n - 1 or kl > n - 1:
            raise NotApplicableError(
                "four_weight needs both corner blocks, so kl, kr <= n - 1"
            )
        if window is not None:
            raise NotApplicableError(
                "four_weight does not combine with a pinned top entry"
            )
        cb = CTBuilder(n, ("PL", "PR", "QL", "QR"))
        one = cb.const(1)
        pl = cb.param("PL")
        pr = cb.param("PR")
        ql_lin = one - cb.param("QL")
        qr = cb.param("QR")
        _sign_const(cb, n, kr, flip=True)
        cb.add(pl * cb.param("QL") * pr * cb.param("QR"))
        cb.add_binom_power(1, -1, lin=pl)
        cb.add_binom_power(1, 2)
        cb.add_mono({1: 1 - kr})
        cb.add_binom_power(n, -1, lin=one - pr)
        cb.add_binom_power(n, kl + m)
        cb.add_mono({n: 1 - kl})
        for i in range(2, n - kr + 1):
            cb.add(one + ql_lin * cb.x(i))
            cb.add_binom_power(i, i)
            cb.add_mono({i: 1 - kr - i})
        for i in range(n - kr + 1, kl + 1):
            cb.add_binom_power(i, bentry(i))
            cb.add_mono({i: 1 - n})
        for i in range(kl + 1, n):
            cb.add(one + qr * cb.x(i))
            cb.add_binom_power(i, m + kl)
            cb.add_mono({i: -n + i - kl})
        add_plain_pairs(cb)
    else:
        raise PreconditionError(f"unknown mode {mode!r}")

    if window is not None:
        cb.add(top_window_factor(cb, *window))
    return cb.constant_term(**budget)
