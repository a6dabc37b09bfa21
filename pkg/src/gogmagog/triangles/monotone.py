"""Monotone triangles, Gelfand-Tsetlin patterns and alternating sign matrices.

A monotone triangle of order n is a triangular array (rows 1..n, row i
holding i entries) in which every row except possibly the bottom one is
strictly increasing, and every entry lies weakly between its two lower
neighbours:

    m[i+1][j]  <=  m[i][j]  <=  m[i+1][j+1]

Allowing a weakly increasing bottom row matters: several of the weighted
count formulas stay valid there once the two coincidence weights are set
to 1, and the test suite exercises exactly that edge.

The two coincidence statistics:

    inv   = number of cells equal to their lower-right neighbour
    inv'  = number of cells equal to their lower-left neighbour

Gelfand-Tsetlin patterns drop strictness in all rows; their count has
the classical product form implemented in gt_count_formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import GogmagogError, PreconditionError
from ..polyring import ParamPoly
from .stats import StatVector


def _check_rows_shape(rows):
    if not rows:
        raise PreconditionError("empty array")
    for i, row in enumerate(rows):
        if len(row) != i + 1:
            raise PreconditionError(f"row {i + 1} has {len(row)} entries, expected {i + 1}")


@dataclass(frozen=True)
class MonotoneTriangle:
    rows: tuple

    @property
    def n(self):
        return len(self.rows)

    def validate(self):
        _check_rows_shape(self.rows)
        n = self.n
        for i in range(n):
            row = self.rows[i]
            strict = i < n - 1
            for j in range(len(row) - 1):
                if strict and not row[j] < row[j + 1]:
                    raise PreconditionError(f"row {i + 1} not strictly increasing")
                if not strict and not row[j] <= row[j + 1]:
                    raise PreconditionError(f"bottom row not weakly increasing")
        for i in range(n - 1):
            for j in range(i + 1):
                lo, hi = self.rows[i + 1][j], self.rows[i + 1][j + 1]
                if not (lo <= self.rows[i][j] <= hi):
                    raise PreconditionError(f"entry ({i + 1},{j + 1}) outside its lower neighbours")
        return self

    def statistics(self):
        inv = inv_prime = 0
        for i in range(self.n - 1):
            for j in range(i + 1):
                if self.rows[i][j] == self.rows[i + 1][j + 1]:
                    inv += 1
                if self.rows[i][j] == self.rows[i + 1][j]:
                    inv_prime += 1
        return StatVector(
            inv=inv,
            inv_prime=inv_prime,
            top_entry=self.rows[0][0],
            bottom_row=self.rows[-1],
        )


def _rows_above(below, strict):
    """Yield the possible rows directly above `below` (one entry shorter)."""
    k = len(below) - 1
    row = [0] * k

    def rec(j):
        if j == k:
            yield tuple(row)
            return
        lo = below[j]
        if j > 0:
            lo = max(lo, row[j - 1] + 1 if strict else row[j - 1])
        for v in range(lo, below[j + 1] + 1):
            row[j] = v
            yield from rec(j + 1)

    yield from rec(0)


def _triangles_over(bottom, strict_upper):
    if len(bottom) == 1:
        yield (tuple(bottom),)
        return
    for above in _rows_above(bottom, strict_upper):
        for upper in _triangles_over(above, strict_upper):
            yield upper + (tuple(bottom),)


def enumerate_monotone_triangles(bottom_row):
    """Yield (triangle, stats) for every monotone triangle over bottom_row.

    bottom_row must be weakly increasing.
    """
    bottom = tuple(bottom_row)
    if any(bottom[j] > bottom[j + 1] for j in range(len(bottom) - 1)):
        raise PreconditionError("bottom row must be weakly increasing")
    for rows in _triangles_over(bottom, strict_upper=True):
        mt = MonotoneTriangle(rows)
        yield mt, mt.statistics()


def mt_generating_function(bottom_row):
    """Sum of u^inv v^inv' over monotone triangles with the given bottom row."""
    u = ParamPoly.var("u")
    v = ParamPoly.var("v")
    total = ParamPoly.zero()
    for _, st in enumerate_monotone_triangles(bottom_row):
        total = total + u ** st.inv * v ** st.inv_prime
    return total


def mt_count(bottom_row):
    return sum(1 for _ in enumerate_monotone_triangles(bottom_row))


def enumerate_gt_patterns(bottom_row):
    """Gelfand-Tsetlin patterns: interlacing only, all rows may repeat."""
    bottom = tuple(bottom_row)
    if any(bottom[j] > bottom[j + 1] for j in range(len(bottom) - 1)):
        raise PreconditionError("bottom row must be weakly increasing")
    for rows in _triangles_over(bottom, strict_upper=False):
        yield MonotoneTriangle(rows)


def gt_count_formula(bottom_row):
    """Product formula for the number of Gelfand-Tsetlin patterns."""
    b = tuple(bottom_row)
    n = len(b)
    out = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            out *= Fraction(b[j] - b[i] + j - i, j - i)
    if out.denominator != 1:
        raise GogmagogError("product formula did not give an integer")
    return int(out)


# --- alternating sign matrices ----------------------------------------

def is_asm(matrix):
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        return False
    for row in matrix:
        if any(e not in (-1, 0, 1) for e in row):
            return False
    for i in range(n):
        s = 0
        for j in range(n):
            s += matrix[i][j]
            if s not in (0, 1):
                return False
        if s != 1:
            return False
    for j in range(n):
        s = 0
        for i in range(n):
            s += matrix[i][j]
            if s not in (0, 1):
                return False
        if s != 1:
            return False
    return True


def mt_to_asm(mt):
    """Bijection: row i of the triangle lists the columns whose partial
    column sum over the first i matrix rows equals 1."""
    n = mt.n
    if mt.rows[-1] != tuple(range(1, n + 1)):
        raise PreconditionError("bottom row must be 1..n")
    matrix = []
    prev = [0] * n
    for i in range(n):
        cur = [0] * n
        for j in mt.rows[i]:
            if not 1 <= j <= n:
                raise PreconditionError("entries must lie in 1..n")
            cur[j - 1] = 1
        matrix.append(tuple(cur[c] - prev[c] for c in range(n)))
        prev = cur
    out = tuple(matrix)
    if not is_asm(out):
        raise PreconditionError("triangle does not map to an alternating sign matrix")
    return out


def asm_to_mt(matrix):
    if not is_asm(matrix):
        raise PreconditionError("not an alternating sign matrix")
    n = len(matrix)
    rows = []
    partial = [0] * n
    for i in range(n):
        for j in range(n):
            partial[j] += matrix[i][j]
        rows.append(tuple(j + 1 for j in range(n) if partial[j] == 1))
    return MonotoneTriangle(tuple(rows)).validate()


def enumerate_asms(n):
    for mt, _ in enumerate_monotone_triangles(tuple(range(1, n + 1))):
        yield mt_to_asm(mt)


def asm_statistics(matrix):
    """Return (inv, inv_prime, minus_count) for an alternating sign matrix.

    inv sums a[i'][j] * a[i][j'] over i' < i, j' <= j; inv_prime sums the
    same products over i' < i, j <= j'.  Their sum always equals
    C(n,2) minus the number of -1 entries; that relation is re-checked
    here and a failure means corrupted input slipped past validation.
    """
    if not is_asm(matrix):
        raise PreconditionError("not an alternating sign matrix")
    n = len(matrix)
    cells = [(i, j) for i in range(n) for j in range(n) if matrix[i][j] != 0]
    inv = inv_prime = 0
    for (ip, j), (i, jp) in itertools.permutations(cells, 2):
        if ip < i:
            prod = matrix[ip][j] * matrix[i][jp]
            if jp <= j:
                inv += prod
            if j <= jp:
                inv_prime += prod
    minus = sum(1 for i, j in cells if matrix[i][j] == -1)
    if inv + inv_prime != n * (n - 1) // 2 - minus:
        raise GogmagogError("inversion statistics violate the minus-count relation")
    return inv, inv_prime, minus
