"""Triangular arrays with deleted bottom cells and prescribed diagonal ends.

Start from the order-n triangle (rows 1..n, columns 1..i).  A weakly
decreasing tuple s of length l deletes the bottom s[j] cells of column
j for j = 1..l.  A weakly increasing tuple t of length r, indexed by
the SE-diagonals n-r+1..n (diagonal d collects the cells with
j + n - i = d), deletes the bottom t[d] cells of diagonal d.  The two
deleted regions must not overlap and l + r <= n.

An entry is regular when both lower neighbours (i+1, j) and
(i+1, j+1) survive the deletions.  A filling is admissible when every
regular entry lies weakly between its lower neighbours and any two
horizontally adjacent regular entries differ.  Prescribed values close
the shape from below: one value for the bottom cell of each column
1..n-r and of each SE-diagonal n-r+1..n.

Every non-prescribed cell must be regular, otherwise no finite bound
on its value exists and enumeration is refused.

Coincidence statistics mirror the triangle case but only count regular
entries, and the variants inv_j / inv_prime_i drop coincidences whose
lower cell closes an exceptional diagonal:

    inv   counts regular m[i][j] = m[i+1][j+1]; a coincidence is
          dropped from inv_j when (i+1, j+1) is the bottom kept cell of
          its SE-diagonal d and d lies in J
    inv'  counts regular m[i][j] = m[i+1][j]; dropped from inv'_i when
          (i+1, j) is the bottom kept cell of column j and j lies in I

J may only contain n and the diagonals d with t[d] < t[d+1]; I may
only contain 1 and the columns j with s[j-1] > s[j] (reading absent
s, t entries as 0).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import GogmagogError, PreconditionError
from .stats import StatVector


@dataclass(frozen=True)
class STTreeShape:
    n: int
    s: tuple = ()
    t: tuple = ()

    def __post_init__(self):
        n, s, t = self.n, self.s, self.t
        if n < 1:
            raise PreconditionError("need n >= 1")
        if any(x < 0 for x in s) or any(s[i] < s[i + 1] for i in range(len(s) - 1)):
            raise PreconditionError("s must be weakly decreasing and non-negative")
        if any(x < 0 for x in t) or any(t[i] > t[i + 1] for i in range(len(t) - 1)):
            raise PreconditionError("t must be weakly increasing and non-negative")
        if len(s) + len(t) > n:
            raise PreconditionError("need len(s) + len(t) <= n")
        for i in range(1, n + 1):
            for j in range(1, i + 1):
                if self._deleted_by_s(i, j) and self._deleted_by_t(i, j):
                    raise PreconditionError(
                        f"deleted regions interfere at cell ({i},{j})"
                    )

    @property
    def r(self):
        return len(self.t)

    def _deleted_by_s(self, i, j):
        return j <= len(self.s) and i > self.n - self.s[j - 1]

    def _deleted_by_t(self, i, j):
        d = j + self.n - i
        first = self.n - self.r + 1
        return d >= first and i > self.n - self.t[d - first]

    def kept(self, i, j):
        if not 1 <= j <= i <= self.n:
            return False
        return not self._deleted_by_s(i, j) and not self._deleted_by_t(i, j)

    def row_interval(self, i):
        """(first, last) kept column of row i, or None if the row is empty."""
        cols = [j for j in range(1, i + 1) if self.kept(i, j)]
        if not cols:
            return None
        if cols != list(range(cols[0], cols[-1] + 1)):
            raise GogmagogError(f"row {i} kept cells are not contiguous")
        return cols[0], cols[-1]

    def column_bottom(self, j):
        for i in range(self.n, j - 1, -1):
            if self.kept(i, j):
                return (i, j)
        return None

    def diagonal_bottom(self, d):
        # diagonal d runs from (n - d + 1, 1) down-right to (n, d)
        for i in range(self.n, self.n - d, -1):
            j = d - self.n + i
            if self.kept(i, j):
                return (i, j)
        return None

    def regular(self, i, j):
        return self.kept(i + 1, j) and self.kept(i + 1, j + 1)

    def _s_at(self, j):
        return self.s[j - 1] if 1 <= j <= len(self.s) else 0

    def _t_at(self, d):
        first = self.n - self.r + 1
        return self.t[d - first] if d >= first else 0

    def exceptional_columns(self):
        out = {1}
        for j in range(2, self.n + 1):
            if self._s_at(j - 1) > self._s_at(j):
                out.add(j)
        return out

    def exceptional_diagonals(self):
        out = {self.n}
        for d in range(1, self.n):
            if self._t_at(d) < self._t_at(d + 1):
                out.add(d)
        return out

    def prescribed_cells(self, diag_bottoms):
        """Map cell -> value from the bottom-of-diagonal prescriptions."""
        b = tuple(diag_bottoms)
        if len(b) != self.n:
            raise PreconditionError(f"need {self.n} prescribed values")
        out = {}
        for idx in range(1, self.n + 1):
            if idx <= self.n - self.r:
                cell = self.column_bottom(idx)
                what = f"column {idx}"
            else:
                cell = self.diagonal_bottom(idx)
                what = f"SE-diagonal {idx}"
            if cell is None:
                raise PreconditionError(f"{what} has no kept cell to prescribe")
            if cell in out and out[cell] != b[idx - 1]:
                raise PreconditionError(
                    f"cell {cell} prescribed twice with different values"
                )
            out[cell] = b[idx - 1]
        return out


@dataclass(frozen=True)
class STTree:
    shape: STTreeShape
    rows: tuple  # rows[i-1] holds the kept cells of row i, left to right

    def cells(self):
        out = {}
        for i0, row in enumerate(self.rows):
            iv = self.shape.row_interval(i0 + 1)
            if iv is None:
                continue
            for off, v in enumerate(row):
                out[(i0 + 1, iv[0] + off)] = v
        return out


def enumerate_st_trees(shape, diag_bottoms, include_i=(), include_j=()):
    """Yield (tree, stats) over admissible fillings of the shape.

    include_i / include_j select the exceptional diagonals whose closing
    coincidences are dropped from inv_prime_i / inv_j.
    """
    inc_i = frozenset(include_i)
    inc_j = frozenset(include_j)
    bad_i = inc_i - shape.exceptional_columns()
    if bad_i:
        raise PreconditionError(f"columns {sorted(bad_i)} are not exceptional")
    bad_j = inc_j - shape.exceptional_diagonals()
    if bad_j:
        raise PreconditionError(f"SE-diagonals {sorted(bad_j)} are not exceptional")

    n = shape.n
    prescribed = shape.prescribed_cells(diag_bottoms)
    intervals = {i: shape.row_interval(i) for i in range(1, n + 1)}
    for i in range(1, n + 1):
        iv = intervals[i]
        if iv is None:
            continue
        for j in range(iv[0], iv[1] + 1):
            if (i, j) not in prescribed and not shape.regular(i, j):
                raise PreconditionError(
                    f"cell ({i},{j}) is neither prescribed nor regular; "
                    "its value is unbounded"
                )

    col_bottom = {j: shape.column_bottom(j) for j in range(1, n + 1)}
    diag_bottom = {d: shape.diagonal_bottom(d) for d in range(1, n + 1)}

    vals = {}

    def statistics():
        inv = inv_prime = inv_j = inv_prime_i = 0
        for (i, j), v in vals.items():
            if not shape.regular(i, j):
                continue
            if v == vals[(i + 1, j + 1)]:
                inv += 1
                d = j + n - i
                if not (d in inc_j and diag_bottom[d] == (i + 1, j + 1)):
                    inv_j += 1
            if v == vals[(i + 1, j)]:
                inv_prime += 1
                if not (j in inc_i and col_bottom[j] == (i + 1, j)):
                    inv_prime_i += 1
        return StatVector(
            inv=inv,
            inv_prime=inv_prime,
            inv_j=inv_j,
            inv_prime_i=inv_prime_i,
            top_entry=vals.get((1, 1)),
            bottom_row=tuple(diag_bottoms),
        )

    def emit():
        rows = []
        for i in range(1, n + 1):
            iv = intervals[i]
            if iv is None:
                rows.append(())
            else:
                rows.append(tuple(vals[(i, j)] for j in range(iv[0], iv[1] + 1)))
        return STTree(shape, tuple(rows)), statistics()

    def fill_row(i, j, end):
        if j > end:
            yield from fill_up(i - 1)
            return
        left = vals.get((i, j - 1))
        strict_left = (
            left is not None and shape.regular(i, j) and shape.regular(i, j - 1)
        )
        if (i, j) in prescribed:
            v = prescribed[(i, j)]
            if shape.regular(i, j) and not vals[(i + 1, j)] <= v <= vals[(i + 1, j + 1)]:
                return
            if strict_left and not left < v:
                return
            vals[(i, j)] = v
            yield from fill_row(i, j + 1, end)
            del vals[(i, j)]
            return
        lo, hi = vals[(i + 1, j)], vals[(i + 1, j + 1)]
        if strict_left:
            lo = max(lo, left + 1)
        for v in range(lo, hi + 1):
            vals[(i, j)] = v
            yield from fill_row(i, j + 1, end)
            del vals[(i, j)]

    def fill_up(i):
        if i == 0:
            yield emit()
            return
        iv = intervals[i]
        if iv is None:
            yield from fill_up(i - 1)
            return
        yield from fill_row(i, iv[0], iv[1])

    yield from fill_up(n)
