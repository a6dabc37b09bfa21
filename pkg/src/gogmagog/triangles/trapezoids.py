"""Gog trapezoids, Gog pentagons and Magog trapezoids.

All three live inside the triangular grid with rows i = 1..n (top to
bottom) and columns j = 1..i.  Moving from a cell to its lower-left
neighbour (i+1, j) follows a NE-diagonal; moving to the lower-right
neighbour (i+1, j+1) follows a SE-diagonal.  Entries increase weakly
down-right along SE-diagonals and up along NE-diagonals:

    m[i+1][j]  <=  m[i][j]  <=  m[i+1][j+1]

Shapes:

  * (m,n,k)-Gog trapezoid: columns 1..min(i,k) of each row, rows
    strictly increasing, 1 <= m[i][j] <= m + n - i + j.
  * (m,n,kl,kr)-Gog pentagon: columns max(1, i-kr+1)..min(i, kl),
    rows strictly increasing, j <= m[i][j] <= m + n - i + j.
  * (m,n,k)-Magog trapezoid: columns max(1, i-k+1)..i, no row
    condition, 1 <= m[i][j] <= m + j.

The extreme statistics count cells pinned to a bound along one boundary
diagonal; see each statistics() method.  k = 0 trapezoids are the empty
shape and count as a single object with all statistics zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import GogmagogError, PreconditionError
from .stats import StatVector


def _diag_coincidences(cells):
    """(inv, inv') over a dict (i, j) -> value: equalities with the
    lower-right and lower-left neighbour when both cells exist."""
    inv = inv_prime = 0
    for (i, j), val in cells.items():
        if cells.get((i + 1, j + 1)) == val:
            inv += 1
        if cells.get((i + 1, j)) == val:
            inv_prime += 1
    return inv, inv_prime


def _check_params(m, n, k, name):
    if m < 0 or n < 1:
        raise PreconditionError(f"{name}: need m >= 0 and n >= 1")
    if not 0 <= k <= n:
        raise PreconditionError(f"{name}: need 0 <= k <= n")


@dataclass(frozen=True)
class GogTrapezoid:
    m: int
    n: int
    k: int
    rows: tuple

    def cells(self):
        return {(i + 1, j + 1): v for i, row in enumerate(self.rows) for j, v in enumerate(row)}

    def validate(self):
        _check_params(self.m, self.n, self.k, "gog")
        if self.k == 0:
            if self.rows != ():
                raise PreconditionError("k = 0 trapezoid must be empty")
            return self
        if len(self.rows) != self.n:
            raise PreconditionError(f"expected {self.n} rows")
        for i0, row in enumerate(self.rows):
            i = i0 + 1
            if len(row) != min(i, self.k):
                raise PreconditionError(f"row {i} has wrong width")
            for j0, v in enumerate(row):
                j = j0 + 1
                if not 1 <= v <= self.m + self.n - i + j:
                    raise PreconditionError(f"entry ({i},{j}) out of bounds")
                if j0 > 0 and not row[j0 - 1] < v:
                    raise PreconditionError(f"row {i} not strictly increasing")
        cells = self.cells()
        for (i, j), v in cells.items():
            below = cells.get((i + 1, j))
            if below is not None and not below <= v:
                raise PreconditionError(f"NE-diagonal decreases at ({i},{j})")
            se = cells.get((i + 1, j + 1))
            if se is not None and not v <= se:
                raise PreconditionError(f"SE-diagonal decreases at ({i},{j})")
        return self

    def statistics(self):
        if self.k == 0:
            return StatVector(inv=0, inv_prime=0, minima=0, maxima=0, bottom_row=())
        cells = self.cells()
        inv, inv_prime = _diag_coincidences(cells)
        minima = sum(1 for v in cells.values() if v == 1)
        # maxima live on the rightmost kept NE-diagonal (column k) only;
        # an entry elsewhere that happens to meet its own ceiling does
        # not count
        maxima = sum(
            1
            for i in range(self.k, self.n + 1)
            if cells[(i, self.k)] == self.m + self.n - i + self.k
        )
        return StatVector(
            inv=inv,
            inv_prime=inv_prime,
            minima=minima,
            maxima=maxima,
            top_entry=self.rows[0][0],
            bottom_row=self.rows[-1],
            bottom_right_max=self.rows[-1][-1] == self.m + self.k,
        )


def enumerate_gog_trapezoids(m, n, k, bottom_row=None):
    """Yield (trapezoid, stats); bottom_row restricts to one bottom row."""
    _check_params(m, n, k, "gog")
    if k == 0:
        if bottom_row is not None and tuple(bottom_row) != ():
            return
        t = GogTrapezoid(m, n, 0, ())
        yield t, t.statistics()
        return
    forced = None if bottom_row is None else tuple(bottom_row)
    if forced is not None and len(forced) != k:
        raise PreconditionError(f"bottom row must have {k} entries")

    def row_candidates(i, prev):
        width = min(i, k)
        if forced is not None and i == n:
            cand = forced
            for j in range(1, width + 1):
                v = cand[j - 1]
                lo, hi = _gog_cell_range(m, n, k, i, j, prev, cand)
                if not lo <= v <= hi:
                    return
            yield cand
            return
        row = [0] * width

        def rec(j):
            if j > width:
                yield tuple(row)
                return
            lo, hi = _gog_cell_range(m, n, k, i, j, prev, row)
            for v in range(lo, hi + 1):
                row[j - 1] = v
                yield from rec(j + 1)

        yield from rec(1)

    def descend(i, acc, prev):
        if i > n:
            t = GogTrapezoid(m, n, k, tuple(acc))
            yield t, t.statistics()
            return
        for row in row_candidates(i, prev):
            acc.append(row)
            yield from descend(i + 1, acc, row)
            acc.pop()

    yield from descend(1, [], None)


def _gog_cell_range(m, n, k, i, j, prev, row):
    lo = 1
    if j >= 2:
        lo = max(lo, row[j - 2] + 1)
        if prev is not None and j - 1 <= len(prev):
            lo = max(lo, prev[j - 2])
    hi = m + n - i + j
    if prev is not None and j <= len(prev):
        hi = min(hi, prev[j - 1])
    return lo, hi


@dataclass(frozen=True)
class MagogTrapezoid:
    m: int
    n: int
    k: int
    rows: tuple

    def col_start(self, i):
        return max(1, i - self.k + 1)

    def cells(self):
        out = {}
        for i0, row in enumerate(self.rows):
            i = i0 + 1
            cs = self.col_start(i)
            for off, v in enumerate(row):
                out[(i, cs + off)] = v
        return out

    def validate(self):
        _check_params(self.m, self.n, self.k, "magog")
        if self.k == 0:
            if self.rows != ():
                raise PreconditionError("k = 0 trapezoid must be empty")
            return self
        if len(self.rows) != self.n:
            raise PreconditionError(f"expected {self.n} rows")
        for i0, row in enumerate(self.rows):
            i = i0 + 1
            if len(row) != i - self.col_start(i) + 1:
                raise PreconditionError(f"row {i} has wrong width")
        cells = self.cells()
        for (i, j), v in cells.items():
            if not 1 <= v <= self.m + j:
                raise PreconditionError(f"entry ({i},{j}) out of bounds")
            below = cells.get((i + 1, j))
            if below is not None and not below <= v:
                raise PreconditionError(f"NE-diagonal decreases at ({i},{j})")
            se = cells.get((i + 1, j + 1))
            if se is not None and not v <= se:
                raise PreconditionError(f"SE-diagonal decreases at ({i},{j})")
        return self

    def statistics(self):
        if self.k == 0:
            return StatVector(minima=0, maxima=0, bottom_row=())
        cells = self.cells()
        # minima sit on the leftmost kept SE-diagonal, the cells
        # (j + k - 1, j); a 1 anywhere else does not count
        minima = sum(
            1 for j in range(1, self.n - self.k + 2) if cells[(j + self.k - 1, j)] == 1
        )
        maxima = sum(1 for i in range(1, self.n + 1) if cells[(i, i)] == self.m + i)
        return StatVector(
            minima=minima,
            maxima=maxima,
            bottom_row=self.rows[-1],
            bottom_left_min=self.rows[-1][0] == 1,
        )


def enumerate_magog_trapezoids(m, n, k, bottom_row=None):
    """Yield (trapezoid, stats); bottom_row restricts to one bottom row."""
    _check_params(m, n, k, "magog")
    if k == 0:
        if bottom_row is not None and tuple(bottom_row) != ():
            return
        t = MagogTrapezoid(m, n, 0, ())
        yield t, t.statistics()
        return
    forced = None if bottom_row is None else tuple(bottom_row)
    if forced is not None and len(forced) != min(n, k):
        raise PreconditionError(f"bottom row must have {min(n, k)} entries")

    def cell_range(i, j, prev, prev_cs):
        lo = 1
        hi = m + j
        if prev is not None:
            if prev_cs <= j - 1 <= i - 1:
                lo = max(lo, prev[j - 1 - prev_cs])
            if prev_cs <= j <= i - 1:
                hi = min(hi, prev[j - prev_cs])
        return lo, hi

    def descend(i, acc, prev, prev_cs):
        if i > n:
            t = MagogTrapezoid(m, n, k, tuple(acc))
            yield t, t.statistics()
            return
        cs = max(1, i - k + 1)
        width = i - cs + 1
        if forced is not None and i == n:
            ok = True
            for off in range(width):
                lo, hi = cell_range(i, cs + off, prev, prev_cs)
                if not lo <= forced[off] <= hi:
                    ok = False
                    break
            if ok:
                acc.append(forced)
                yield from descend(i + 1, acc, forced, cs)
                acc.pop()
            return
        row = [0] * width

        def rec(off):
            if off == width:
                acc.append(tuple(row))
                yield from descend(i + 1, acc, tuple(row), cs)
                acc.pop()
                return
            lo, hi = cell_range(i, cs + off, prev, prev_cs)
            for v in range(lo, hi + 1):
                row[off] = v
                yield from rec(off + 1)

        yield from rec(0)

    yield from descend(1, [], None, None)


@dataclass(frozen=True)
class GogPentagon:
    m: int
    n: int
    kl: int
    kr: int
    rows: tuple

    def col_start(self, i):
        return max(1, i - self.kr + 1)

    def col_end(self, i):
        return min(i, self.kl)

    def cells(self):
        out = {}
        for i0, row in enumerate(self.rows):
            i = i0 + 1
            cs = self.col_start(i)
            for off, v in enumerate(row):
                out[(i, cs + off)] = v
        return out

    def validate(self):
        m, n, kl, kr = self.m, self.n, self.kl, self.kr
        if m < 0 or n < 1:
            raise PreconditionError("pentagon: need m >= 0 and n >= 1")
        if not (1 <= kl <= n and 1 <= kr <= n and kl + kr >= n + 1):
            raise PreconditionError("pentagon: need kl, kr <= n and kl + kr >= n + 1")
        if len(self.rows) != n:
            raise PreconditionError(f"expected {n} rows")
        for i0, row in enumerate(self.rows):
            i = i0 + 1
            if len(row) != self.col_end(i) - self.col_start(i) + 1:
                raise PreconditionError(f"row {i} has wrong width")
            for a, b in zip(row, row[1:]):
                if not a < b:
                    raise PreconditionError(f"row {i} not strictly increasing")
        cells = self.cells()
        for (i, j), v in cells.items():
            if not j <= v <= m + n - i + j:
                raise PreconditionError(f"entry ({i},{j}) out of bounds")
            below = cells.get((i + 1, j))
            if below is not None and not below <= v:
                raise PreconditionError(f"NE-diagonal decreases at ({i},{j})")
            se = cells.get((i + 1, j + 1))
            if se is not None and not v <= se:
                raise PreconditionError(f"SE-diagonal decreases at ({i},{j})")
        return self

    def statistics(self):
        m, n, kl, kr = self.m, self.n, self.kl, self.kr
        cells = self.cells()
        inv, inv_prime = _diag_coincidences(cells)
        top_minima = top_maxima = 0
        for (i, j), v in cells.items():
            if v == 1:
                if j != 1:
                    raise GogmagogError(
                        f"1-entry at ({i},{j}) off the leftmost NE-diagonal"
                    )
                top_minima += 1
            if v == m + n:
                if i != j:
                    raise GogmagogError(
                        f"maximal entry at ({i},{j}) off the top SE-diagonal"
                    )
                top_maxima += 1
        bottom_minima = sum(
            1 for j in range(1, n - kr + 2) if cells[(j + kr - 1, j)] == j
        )
        bottom_maxima = sum(
            1 for i in range(kl, n + 1) if cells[(i, kl)] == m + n - i + kl
        )
        return StatVector(
            inv=inv,
            inv_prime=inv_prime,
            top_minima=top_minima,
            top_maxima=top_maxima,
            bottom_minima=bottom_minima,
            bottom_maxima=bottom_maxima,
            top_entry=self.rows[0][0],
            bottom_row=self.rows[-1],
            bottom_left_min=cells[(n, n - kr + 1)] == n - kr + 1,
            bottom_right_max=cells[(n, kl)] == m + kl,
        )


def enumerate_gog_pentagons(m, n, kl, kr, bottom_row=None):
    """Yield (pentagon, stats); bottom_row restricts to one bottom row."""
    if m < 0 or n < 1:
        raise PreconditionError("pentagon: need m >= 0 and n >= 1")
    if not (1 <= kl <= n and 1 <= kr <= n and kl + kr >= n + 1):
        raise PreconditionError("pentagon: need kl, kr <= n and kl + kr >= n + 1")
    forced = None if bottom_row is None else tuple(bottom_row)
    bottom_width = min(n, kl) - max(1, n - kr + 1) + 1
    if forced is not None and len(forced) != bottom_width:
        raise PreconditionError(f"bottom row must have {bottom_width} entries")

    def cell_range(i, j, prev, prev_cs, row, off):
        lo = j
        if off > 0:
            lo = max(lo, row[off - 1] + 1)
        hi = m + n - i + j
        if prev is not None:
            pe = prev_cs + len(prev) - 1
            if prev_cs <= j - 1 <= pe:
                lo = max(lo, prev[j - 1 - prev_cs])
            if prev_cs <= j <= pe:
                hi = min(hi, prev[j - prev_cs])
        return lo, hi

    def descend(i, acc, prev, prev_cs):
        if i > n:
            p = GogPentagon(m, n, kl, kr, tuple(acc))
            yield p, p.statistics()
            return
        cs = max(1, i - kr + 1)
        width = min(i, kl) - cs + 1
        if forced is not None and i == n:
            ok = True
            for off in range(width):
                lo, hi = cell_range(i, cs + off, prev, prev_cs, forced, off)
                if not lo <= forced[off] <= hi:
                    ok = False
                    break
            if ok:
                acc.append(forced)
                yield from descend(i + 1, acc, forced, cs)
                acc.pop()
            return
        row = [0] * width

        def rec(off):
            if off == width:
                acc.append(tuple(row))
                yield from descend(i + 1, acc, tuple(row), cs)
                acc.pop()
                return
            lo, hi = cell_range(i, cs + off, prev, prev_cs, row, off)
            for v in range(lo, hi + 1):
                row[off] = v
                yield from rec(off + 1)

        yield from rec(0)

    yield from descend(1, [], None, None)


def conjecture_check(m, n, k):
    """Tabulate (minima, maxima) for both trapezoid families of the same
    shape and report whether the tables agree after swapping the indices
    on one side."""
    gog = {}
    for _, st in enumerate_gog_trapezoids(m, n, k):
        key = (st.minima, st.maxima)
        gog[key] = gog.get(key, 0) + 1
    magog = {}
    for _, st in enumerate_magog_trapezoids(m, n, k):
        key = (st.minima, st.maxima)
        magog[key] = magog.get(key, 0) + 1
    swapped = {(q, p): c for (p, q), c in magog.items()}
    return gog, magog, gog == swapped
