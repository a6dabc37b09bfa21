"""Enumerator tests.

Worked examples were computed by hand from the defining conditions and
frozen here; cross-family agreements (pentagon vs trapezoid, deletion
shapes vs plain triangles) act as independent oracles for each other.
"""

import math
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gogmagog.errors import GogmagogError, PreconditionError
from gogmagog.polyring import ParamPoly
from gogmagog.triangles import (
    GogPentagon,
    GogTrapezoid,
    MagogTrapezoid,
    MonotoneTriangle,
    STTreeShape,
    asm_statistics,
    asm_to_mt,
    conjecture_check,
    enumerate_asms,
    enumerate_gog_pentagons,
    enumerate_gog_trapezoids,
    enumerate_gt_patterns,
    enumerate_magog_trapezoids,
    enumerate_monotone_triangles,
    enumerate_st_trees,
    gt_count_formula,
    is_asm,
    mt_count,
    mt_generating_function,
    mt_to_asm,
)

strict_rows = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.integers(1, 8), min_size=n, max_size=n, unique=True).map(
        lambda xs: tuple(sorted(xs))
    )
)
weak_rows = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.integers(1, 8), min_size=n, max_size=n).map(
        lambda xs: tuple(sorted(xs))
    )
)


def poly_product(b):
    p = Fraction(1)
    for i in range(len(b)):
        for j in range(i + 1, len(b)):
            p *= Fraction(b[j] - b[i], j - i)
    return p


class TestMonotoneTriangles:
    def test_counts_initial_segment(self):
        assert [mt_count(tuple(range(1, n + 1))) for n in range(1, 6)] == [1, 2, 7, 42, 429]

    def test_generating_function_small(self):
        u, v = ParamPoly.var("u"), ParamPoly.var("v")
        assert mt_generating_function((1, 2)) == u + v
        assert (
            mt_generating_function((1, 2, 3))
            == u**3 + v**3 + 2 * u**2 * v + 2 * u * v**2 + u * v
        )

    def test_weak_bottom_row_allowed(self):
        trees = list(enumerate_monotone_triangles((1, 1)))
        assert len(trees) == 1
        assert (trees[0][1].inv, trees[0][1].inv_prime) == (1, 1)

    def test_decreasing_bottom_row_rejected(self):
        with pytest.raises(PreconditionError):
            list(enumerate_monotone_triangles((2, 1)))

    def test_validate_catches_weak_middle_row(self):
        bad = MonotoneTriangle(((1,), (1, 1), (1, 1, 2)))
        with pytest.raises(PreconditionError):
            bad.validate()

    def test_validate_catches_broken_interlacing(self):
        bad = MonotoneTriangle(((3,), (1, 2), (1, 2, 3)))
        with pytest.raises(PreconditionError):
            bad.validate()

    @given(strict_rows)
    @settings(max_examples=40, deadline=None)
    def test_coincidences_bounded_by_cell_count(self, b):
        n = len(b)
        for mt, s in enumerate_monotone_triangles(b):
            mt.validate()
            assert s.inv + s.inv_prime <= n * (n - 1) // 2

    @given(strict_rows)
    @settings(max_examples=25, deadline=None)
    def test_gf_specializations_collapse_to_product(self, b):
        gf = mt_generating_function(b)
        target = poly_product(b)
        half = Fraction(1, 2)
        for uu, vv in [(0, 1), (1, 0), (half, half)]:
            assert gf.substitute(u=uu, v=vv).const_value() == target
        swapped = gf.substitute(v=ParamPoly.const(1) - ParamPoly.var("u"))
        assert swapped.is_const() and swapped.const_value() == target

    def test_gf_tracks_sign_changes_of_matrices(self):
        # q^3 * gf(1/q, 1/q) tabulates the 3x3 matrices by their number
        # of negative entries: six without, one with a single -1
        gf = mt_generating_function((1, 2, 3))
        q = Fraction(5)
        assert q**3 * gf.substitute(u=1 / q, v=1 / q).const_value() == 6 + q


class TestGTPatterns:
    @given(weak_rows)
    @settings(max_examples=30, deadline=None)
    def test_product_formula_matches_enumeration(self, b):
        count = sum(1 for _ in enumerate_gt_patterns(b))
        assert count == gt_count_formula(b)

    def test_small_values(self):
        assert gt_count_formula((1, 2, 3)) == 8
        assert gt_count_formula((0, 0)) == 1
        assert gt_count_formula((2, 4, 6)) == 27


class TestASM:
    def test_enumeration_counts(self):
        assert [sum(1 for _ in enumerate_asms(n)) for n in range(1, 5)] == [1, 2, 7, 42]

    def test_identity_matrix_statistics(self):
        for n in (1, 2, 3, 4):
            eye = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
            assert asm_statistics(eye) == (0, n * (n - 1) // 2, 0)

    def test_single_minus_matrix(self):
        a = ((0, 1, 0), (1, -1, 1), (0, 1, 0))
        assert asm_statistics(a) == (1, 1, 1)

    def test_rejects_non_asm(self):
        with pytest.raises(PreconditionError):
            asm_statistics(((1, 0), (1, 0)))
        assert not is_asm(((0, 2), (1, -1)))

    def test_round_trip_preserves_statistics(self):
        for n in range(1, 5):
            for mt, s in enumerate_monotone_triangles(tuple(range(1, n + 1))):
                a = mt_to_asm(mt)
                back = asm_to_mt(a)
                assert back == mt
                inv, inv_prime, minus = asm_statistics(a)
                assert (inv, inv_prime) == (s.inv, s.inv_prime)
                assert inv + inv_prime == n * (n - 1) // 2 - minus

    def test_mt_to_asm_needs_standard_bottom(self):
        mt = MonotoneTriangle(((1,), (1, 3)))
        with pytest.raises(PreconditionError):
            mt_to_asm(mt)


GOG_DISPLAY = (
    (4,),
    (3, 5),
    (2, 5, 8),
    (2, 4, 7, 9),
    (1, 4, 6, 7, 10),
    (1, 4, 5, 7, 8),
    (1, 3, 5, 6, 8),
)

MAGOG_DISPLAY = (
    (3,),
    (2, 3),
    (2, 3, 4),
    (1, 3, 4, 5),
    (1, 2, 3, 5, 7),
    (1, 3, 4, 6, 7),
    (2, 3, 4, 7, 9),
)

# the printed (3,7,5,6) example carries a defect in row 6: the adjacent
# equal entries break the strict row condition (and the 8 exceeds its
# upper neighbour); lowering the fourth entry to 7 repairs it
PENTAGON_DISPLAY_PRINTED = (
    (4,),
    (3, 5),
    (2, 5, 8),
    (2, 4, 7, 9),
    (1, 4, 6, 7, 10),
    (1, 4, 5, 8, 8),
    (3, 5, 6, 8),
)
PENTAGON_DISPLAY_FIXED = (
    (4,),
    (3, 5),
    (2, 5, 8),
    (2, 4, 7, 9),
    (1, 4, 6, 7, 10),
    (1, 4, 5, 7, 8),
    (3, 5, 6, 8),
)


class TestGogTrapezoids:
    def test_worked_example_validates(self):
        g = GogTrapezoid(3, 7, 5, GOG_DISPLAY).validate()
        s = g.statistics()
        assert s.minima == 3
        assert s.maxima == 2
        assert s.bottom_row == (1, 3, 5, 6, 8)
        assert s.bottom_right_max is True
        assert s.top_entry == 4

    def test_maxima_only_on_last_column(self):
        # (2,2) sits at its ceiling in both fillings of the (0,2,2)
        # shape, while the top cell reaches its own ceiling only in the
        # second; the top cell must not be counted
        t1 = GogTrapezoid(0, 2, 2, ((1,), (1, 2))).validate()
        t2 = GogTrapezoid(0, 2, 2, ((2,), (1, 2))).validate()
        assert t1.statistics().maxima == 1
        assert t2.statistics().maxima == 1
        assert t1.statistics().minima == 2
        assert t2.statistics().minima == 1

    def test_counts(self):
        assert [
            sum(1 for _ in enumerate_gog_trapezoids(0, n, n)) for n in range(1, 5)
        ] == [1, 2, 7, 42]
        # a single column of length 1: one cell ranging over 1..m+1
        assert sum(1 for _ in enumerate_gog_trapezoids(2, 1, 1)) == 3

    def test_k_zero_single_empty_object(self):
        out = list(enumerate_gog_trapezoids(1, 3, 0))
        assert len(out) == 1
        assert out[0][0].rows == ()
        assert out[0][1].minima == 0 and out[0][1].maxima == 0

    def test_bottom_row_filter_partitions_enumeration(self):
        m, n, k = 1, 3, 2
        full = Counter(s.bottom_row for _, s in enumerate_gog_trapezoids(m, n, k))
        assert full == {(1, 2): 14, (1, 3): 14, (2, 3): 7}
        for b, c in full.items():
            assert sum(1 for _ in enumerate_gog_trapezoids(m, n, k, bottom_row=b)) == c
        assert sum(1 for _ in enumerate_gog_trapezoids(m, n, k, bottom_row=(2, 2))) == 0

    def test_validate_rejects_out_of_bounds(self):
        with pytest.raises(PreconditionError):
            GogTrapezoid(0, 2, 2, ((3,), (1, 2))).validate()

    def test_everything_enumerated_validates(self):
        for t, _ in enumerate_gog_trapezoids(1, 3, 3):
            t.validate()


class TestMagogTrapezoids:
    def test_worked_example_validates(self):
        g = MagogTrapezoid(2, 7, 5, MAGOG_DISPLAY).validate()
        s = g.statistics()
        assert s.minima == 2
        assert s.maxima == 3
        assert s.bottom_row == (2, 3, 4, 7, 9)
        assert s.bottom_left_min is False

    def test_minima_only_on_leftmost_diagonal(self):
        # row 4 of the worked example starts with a 1 but that cell is
        # off the leftmost SE-diagonal, so only (5,1) and (6,2) count
        cells = MagogTrapezoid(2, 7, 5, MAGOG_DISPLAY).cells()
        assert cells[(4, 1)] == 1
        assert MagogTrapezoid(2, 7, 5, MAGOG_DISPLAY).statistics().minima == 2

    def test_counts(self):
        assert [
            sum(1 for _ in enumerate_magog_trapezoids(0, n, n)) for n in range(1, 5)
        ] == [1, 2, 7, 42]
        assert sum(1 for _ in enumerate_magog_trapezoids(2, 1, 1)) == 3

    def test_k_zero_single_empty_object(self):
        out = list(enumerate_magog_trapezoids(2, 2, 0))
        assert len(out) == 1 and out[0][0].rows == ()

    def test_rows_come_out_weakly_increasing(self):
        # no explicit row condition is imposed; weak increase follows
        # from the diagonal conditions and should hold in every output
        for t, _ in enumerate_magog_trapezoids(2, 3, 2):
            for row in t.rows:
                assert all(a <= b for a, b in zip(row, row[1:]))

    def test_bottom_row_filter_partitions_enumeration(self):
        m, n, k = 2, 3, 2
        full = Counter(s.bottom_row for _, s in enumerate_magog_trapezoids(m, n, k))
        for b, c in full.items():
            assert sum(1 for _ in enumerate_magog_trapezoids(m, n, k, bottom_row=b)) == c

    def test_validate_rejects_bound_violation(self):
        with pytest.raises(PreconditionError):
            MagogTrapezoid(0, 2, 2, ((2,), (1, 2))).validate()


class TestGogPentagons:
    def test_printed_example_rejected_then_fixed(self):
        with pytest.raises(PreconditionError):
            GogPentagon(3, 7, 5, 6, PENTAGON_DISPLAY_PRINTED).validate()
        p = GogPentagon(3, 7, 5, 6, PENTAGON_DISPLAY_FIXED).validate()
        s = p.statistics()
        assert s.top_minima == 2
        assert s.top_maxima == 1
        assert s.bottom_minima == 1
        assert s.bottom_maxima == 2
        assert s.bottom_row == (3, 5, 6, 8)

    def test_full_right_side_is_a_gog_trapezoid(self):
        for m, n, k in [(0, 3, 2), (1, 3, 3), (2, 2, 1)]:
            gog = Counter(
                (s.minima, s.maxima, s.bottom_row)
                for _, s in enumerate_gog_trapezoids(m, n, k)
            )
            pent = Counter(
                (s.top_minima, s.bottom_maxima, s.bottom_row)
                for _, s in enumerate_gog_pentagons(m, n, k, n)
            )
            assert gog == pent

    def test_lower_bound_by_column_enforced(self):
        # entries of column j never drop below j
        for p, _ in enumerate_gog_pentagons(1, 3, 2, 2):
            for (i, j), v in p.cells().items():
                assert v >= j

    def test_parameter_validation(self):
        with pytest.raises(PreconditionError):
            list(enumerate_gog_pentagons(0, 3, 1, 1))

    def test_bottom_row_filter(self):
        full = Counter(s.bottom_row for _, s in enumerate_gog_pentagons(1, 3, 2, 2))
        for b, c in full.items():
            assert (
                sum(1 for _ in enumerate_gog_pentagons(1, 3, 2, 2, bottom_row=b)) == c
            )


class TestConjectureTables:
    def test_smallest_case(self):
        gog, magog, ok = conjecture_check(0, 1, 1)
        assert ok and gog == {(1, 1): 1} and magog == {(1, 1): 1}

    def test_two_by_two(self):
        gog, magog, ok = conjecture_check(0, 2, 2)
        assert ok
        assert gog == {(2, 1): 1, (1, 1): 1}
        assert magog == {(1, 2): 1, (1, 1): 1}

    @pytest.mark.parametrize("m,n,k", [(1, 3, 1), (1, 3, 2), (1, 3, 3), (2, 2, 2)])
    def test_swap_match_samples(self, m, n, k):
        _, _, ok = conjecture_check(m, n, k)
        assert ok


class TestSTTrees:
    def test_plain_triangle_reduces_to_monotone_triangles(self):
        for b in [(1, 2, 3), (1, 3, 4), (2, 3, 5)]:
            trees = Counter(
                (s.inv, s.inv_prime) for _, s in enumerate_st_trees(STTreeShape(3), b)
            )
            mts = Counter(
                (s.inv, s.inv_prime) for _, s in enumerate_monotone_triangles(b)
            )
            assert trees == mts

    def test_exclusions_default_to_plain_counts(self):
        for _, s in enumerate_st_trees(STTreeShape(3), (1, 2, 3)):
            assert s.inv_j == s.inv and s.inv_prime_i == s.inv_prime

    def test_gog_trapezoid_embedding(self):
        # columns 1..k+1 survive; the extra column is pinned to the
        # ceiling values and its closing coincidences are dropped
        m, n, k = 1, 3, 2
        for b in [(1, 2), (1, 3), (2, 3)]:
            shape = STTreeShape(n, s=(), t=tuple(range(n - k)))
            ceiling = tuple(m + d for d in range(k + 1, n + 1))
            trees = Counter(
                (s.inv_j, s.inv_prime_i)
                for _, s in enumerate_st_trees(
                    shape, b + ceiling, include_j=range(k + 1, n + 1)
                )
            )
            gogs = Counter(
                (s.inv, s.inv_prime)
                for _, s in enumerate_gog_trapezoids(m, n, k, bottom_row=b)
            )
            assert trees == gogs

    def test_pentagon_embedding(self):
        m, n, kl, kr = 1, 3, 2, 2
        shape = STTreeShape(n, s=tuple(range(n - kr - 1, -1, -1)), t=tuple(range(n - kl)))
        pad = tuple(range(1, n - kr + 1))
        ceiling = tuple(m + d for d in range(kl + 1, n + 1))
        for b2 in (2, 3):
            trees = Counter(
                (s.inv_j, s.inv_prime_i)
                for _, s in enumerate_st_trees(
                    shape,
                    pad + (b2,) + ceiling,
                    include_i=range(1, n - kr + 1),
                    include_j=range(kl + 1, n + 1),
                )
            )
            pents = Counter(
                (s.inv, s.inv_prime)
                for _, s in enumerate_gog_pentagons(m, n, kl, kr, bottom_row=(b2,))
            )
            assert trees == pents

    def test_interfering_deletions_rejected(self):
        with pytest.raises(PreconditionError):
            STTreeShape(3, s=(3,), t=(3,))

    def test_too_many_deleted_diagonals_rejected(self):
        with pytest.raises(PreconditionError):
            STTreeShape(2, s=(1, 1), t=(1,))

    def test_fully_prescribed_shape_yields_one_tree(self):
        trees = list(enumerate_st_trees(STTreeShape(2, s=(1,)), (1, 2)))
        assert len(trees) == 1
        assert trees[0][0].rows == ((1,), (2,))

    def test_prescribing_an_emptied_column_refused(self):
        with pytest.raises(PreconditionError):
            list(enumerate_st_trees(STTreeShape(2, s=(2,)), (1, 2)))

    def test_exclusion_sets_validated(self):
        shape = STTreeShape(3, s=(), t=(0,))
        with pytest.raises(PreconditionError):
            list(enumerate_st_trees(shape, (1, 2, 3), include_j=(2,)))
        with pytest.raises(PreconditionError):
            list(enumerate_st_trees(shape, (1, 2, 3), include_i=(2,)))

    def test_exceptional_sets(self):
        shape = STTreeShape(5, s=(2, 2, 1), t=(1,))
        assert shape.exceptional_columns() == {1, 3, 4}
        assert shape.exceptional_diagonals() == {4, 5}


class TestStatVector:
    def test_as_dict_drops_missing_fields(self):
        s = GogTrapezoid(0, 2, 2, ((1,), (1, 2))).statistics()
        d = s.as_dict()
        assert "top_minima" not in d
        assert d["minima"] == 2
        assert d["bottom_row"] == [1, 2]
