"""Path-determinant and constant-term routes for Magog trapezoids.

Two independent encodings into nonintersecting lattice paths are
implemented. The first reads NE-diagonals as paths: it gives a
determinant and a constant term per bottom row (magog_lgv_det,
magog_ct_bottom, weight P^maxima Q^(minima, leftmost bottom cell not
counted)) and a resummed constant term over all bottom rows
(magog_ct_total, weight P^maxima Q^minima). The second reads the level
curves between <= i and > i entries as paths: it fixes the number of
minima outright (magog_v2_det, magog_ct_fixed_minima, weight
P^maxima).

The second encoding excludes k = 1 with m + q = 1; magog_q_slice_det
covers that hole by slicing the first encoding's Q-grading, and doubles
as an oracle for the others.
"""

from ..errors import NotApplicableError, PreconditionError
from ..laurent import CTBuilder, det
from ..polyring import ParamPoly, gen_binom

__all__ = [
    "magog_bottom_rows",
    "magog_ct_bottom",
    "magog_ct_fixed_minima",
    "magog_ct_total",
    "magog_lgv_det",
    "magog_q_slice_det",
    "magog_v2_det",
]


def _check_params(m, n, k):
    if m < 0 or n < 1 or not 1 <= k <= n:
        raise PreconditionError("need m >= 0, n >= 1 and 1 <= k <= n")


def checked_magog_bottom(m, n, k, bottom_row):
    """Bottom entries occupy NE-diagonals n-k+1 .. n, so the ceiling of
    the off-th entry is m + n - k + 1 + off."""
    b = tuple(int(x) for x in bottom_row)
    if len(b) != k:
        raise PreconditionError(f"bottom row must have {k} entries")
    if any(b[i] > b[i + 1] for i in range(k - 1)):
        raise PreconditionError("bottom row must increase weakly")
    for off, e in enumerate(b):
        j = n - k + 1 + off
        if not 1 <= e <= m + j:
            raise PreconditionError(f"entry {e} outside [1, {m + j}]")
    return b


def magog_bottom_rows(m, n, k):
    """All admissible bottom rows, in lexicographic order. Filling each
    NE-diagonal with a constant shows every admissible row really
    extends to a trapezoid, so no reachability filter is needed."""
    _check_params(m, n, k)

    def rec(off, lo):
        if off == k:
            yield ()
            return
        j = n - k + 1 + off
        for e in range(lo, m + j + 1):
            for rest in rec(off + 1, e):
                yield (e,) + rest

    yield from rec(0, 1)


def magog_lgv_det(m, n, k, bottom_row):
    """Path determinant for the given bottom row, weight
    P^(#maxima) Q^(#minima not including the bottom row's own cell).

    Rows of the matrix are NE-diagonals read as paths; the binomial
    convention of gen_binom absorbs the degenerate start/end cases."""
    _check_params(m, n, k)
    b = checked_magog_bottom(m, n, k, bottom_row)
    P = ParamPoly.var("P")
    Q = ParamPoly.var("Q")
    mat = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i <= n - k:
                c = gen_binom(j + k + m - 3, 2 * j + m - i - 3)
                c1 = gen_binom(j + k + m - 3, 2 * j + m - i - 2)
                c2 = gen_binom(j + k + m - 3, 2 * j + m - i - 1)
                row.append((P + Q) * c1 + (P * Q) * c2 + ParamPoly.const(c))
            else:
                bi = b[i - (n - k + 1)]
                c = gen_binom(j + m + n - bi - i - 1, 2 * j + m - bi - i - 1)
                c1 = gen_binom(j + m + n - bi - i - 1, 2 * j + m - bi - i)
                row.append(P * c1 + ParamPoly.const(c))
        mat.append(row)
    return det(mat)


def _v1_left_rows(cb, m, n, k):
    P = cb.param("P")
    Q = cb.param("Q")
    for i in range(1, n - k + 1):
        cb.add_binom_power(i, -i - k)
        cb.add_mono({i: -m - 2 * n + i + 1})
        xi = cb.x(i)
        cb.add(xi - P - P * xi)
        cb.add(xi - Q - Q * xi)


def _v1_core(cb, n):
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            cb.add(cb.x(i) - cb.x(j))
            cb.add(cb.x(i) + cb.x(j) + cb.x(i) * cb.x(j))


def magog_ct_bottom(m, n, k, bottom_row, **budget):
    """Constant-term form of magog_lgv_det, same weight."""
    _check_params(m, n, k)
    b = checked_magog_bottom(m, n, k, bottom_row)
    cb = CTBuilder(n, ("P", "Q"))
    P = cb.param("P")
    s = (m - 1) * n + n * (n + 1) // 2 + sum(b)
    if s % 2:
        cb.add(cb.const(-1))
    _v1_left_rows(cb, m, n, k)
    for i in range(n - k + 1, n + 1):
        bi = b[i - (n - k + 1)]
        cb.add_binom_power(i, -n)
        cb.add_mono({i: -m - 2 * n + bi + i})
        xi = cb.x(i)
        cb.add(xi - P - P * xi)
    _v1_core(cb, n)
    return cb.constant_term(**budget)


def magog_ct_total(m, n, k, **budget):
    """Sum over every bottom row in one stroke, weight
    P^(#maxima) Q^(#minima). The resummed series splits into a plain
    part and a part carrying the forced leftmost minimum, hence two
    constant terms."""
    _check_params(m, n, k)

    def common(cb):
        s = (m - 1) * n + n * (n + 1) // 2
        if s % 2:
            cb.add(cb.const(-1))
        _v1_left_rows(cb, m, n, k)
        P = cb.param("P")
        for i in range(n - k + 1, n + 1):
            cb.add_binom_power(i, -n - 1)
            cb.add_mono({i: -m - 2 * n + i + 2})
            xi = cb.x(i)
            cb.add(xi - P - P * xi)
        _v1_core(cb, n)
        for i in range(n - k + 1, n + 1):
            for j in range(i + 1, n + 1):
                cb.add_geometric({i: 1, j: 1})

    plain = CTBuilder(n, ("P", "Q"))
    common(plain)
    acc = plain.constant_term(**budget)

    marked = CTBuilder(n, ("P", "Q"))
    common(marked)
    Q = marked.param("Q")
    if k % 2:
        marked.add(marked.const(-1))
    marked.add(Q)
    h = n - k + 1
    marked.add(marked.const(1) + marked.x(h, -1))
    for j in range(n - k + 2, n + 1):
        marked.add(marked.x(j, -1) - marked.x(h))
    return acc + marked.constant_term(**budget)


def magog_v2_det(m, n, k, q):
    """Level-curve path determinant: number of trapezoids with exactly
    q minima, weight P^(#maxima), summed over the free path endpoints.

    The m = 0 column degenerates in a way that always carries one P;
    the determinant drops it, so it is reinstated here."""
    _check_params(m, n, k)
    if not 0 <= q <= n - k + 1:
        raise PreconditionError(f"q outside [0, {n - k + 1}]")
    if k == 1 and m + q == 1:
        raise NotApplicableError("k = 1 with m + q = 1 is not covered")
    P = ParamPoly.var("P")
    r = m + n - 1
    if r == 0:
        return ParamPoly.const(1) if q == n - k + 1 else ParamPoly.zero()

    def bcol(i, bj):
        if i <= m - 1:
            return ParamPoly.const(gen_binom(n, i + k - bj))
        c1 = gen_binom(m + n - i - 1, i + k - bj - 1)
        c = gen_binom(m + n - i - 1, i + k - bj)
        return P * c1 + ParamPoly.const(c)

    def qcol(i):
        if i <= m - 1:
            return ParamPoly.const(gen_binom(k + q - 1, k + i - 2))
        if i >= k + m + q - 1:
            return ParamPoly.zero()
        c1 = gen_binom(k + m + q - i - 2, k + i - 3)
        c = gen_binom(k + m + q - i - 2, k + i - 2)
        return P * c1 + ParamPoly.const(c)

    from itertools import combinations

    free = r if q == n - k + 1 else r - 1
    acc = ParamPoly.zero()
    for bs in combinations(range(2, m + n + k), free):
        mat = []
        for i in range(1, r + 1):
            if q == n - k + 1:
                row = [bcol(i, bj) for bj in bs]
            else:
                row = [qcol(i)] + [bcol(i, bj) for bj in bs]
            mat.append(row)
        acc = acc + det(mat)
    if m == 0:
        acc = acc * P
    return acc


def magog_ct_fixed_minima(m, n, k, q, **budget):
    """Constant-term form of magog_v2_det, same weight. Lives in
    m + n - 1 variables; the q <= n - k case is a sum of expressions,
    one per choice of the pivot row of the expanded determinant."""
    _check_params(m, n, k)
    if not 0 <= q <= n - k + 1:
        raise PreconditionError(f"q outside [0, {n - k + 1}]")
    if k == 1 and m + q == 1:
        raise NotApplicableError("k = 1 with m + q = 1 is not covered")
    r = m + n - 1
    if r == 0:
        return ParamPoly.const(1) if q == n - k + 1 else ParamPoly.zero()

    def global_factors(cb, skip=None):
        P = cb.param("P")
        for i in range(1, r + 1):
            cb.add_binom_power(i, n)
            cb.add_mono({i: 2 - i - k})
            if skip is None or i != skip:
                cb.add_geometric({i: 1})
        for i in range(max(m, 1), r + 1):
            cb.add_binom_power(i, m - i - 1)
            cb.add(cb.const(1) + P * cb.x(i))
        if m == 0:
            cb.add(P)

    if q == n - k + 1:
        cb = CTBuilder(r, ("P",))
        global_factors(cb)
        for i in range(1, r + 1):
            for j in range(i + 1, r + 1):
                cb.add(cb.x(j) - cb.x(i))
                cb.add_geometric({i: 1, j: 1})
        return cb.constant_term(**budget)

    acc = ParamPoly.zero()
    for l in range(1, k + m + q - 1):
        cb = CTBuilder(r, ("P",))
        if (l + 1) % 2:
            cb.add(cb.const(-1))
        global_factors(cb, skip=l)
        cb.add_binom_power(l, k + q - n - 1)
        for i in range(1, r + 1):
            for j in range(i + 1, r + 1):
                if l in (i, j):
                    continue
                cb.add(cb.x(j) - cb.x(i))
                cb.add_geometric({i: 1, j: 1})
        acc = acc + cb.constant_term(**budget)
    return acc


def magog_q_slice_det(m, n, k, q):
    """Per-q slice assembled from the bottom-row determinants; covers
    the case the level-curve route excludes. A bottom row starting at 1
    carries its own minimum on top of the determinant's Q-grading."""
    _check_params(m, n, k)
    if not 0 <= q <= n - k + 1:
        raise PreconditionError(f"q outside [0, {n - k + 1}]")
    acc = ParamPoly.zero()
    for b in magog_bottom_rows(m, n, k):
        want = q - (1 if b[0] == 1 else 0)
        if want < 0:
            continue
        acc = acc + magog_lgv_det(m, n, k, b).coeff_of(Q=want)
    return acc
