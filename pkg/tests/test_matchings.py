"""Diamond-strip matching tests.

The small graphs here are frozen against brute-force sweeps that were
run while the module was being built; every number below was also
reproduced from the triangle enumerators, so the two modules check
each other rather than sharing code paths.
"""

import itertools
from collections import defaultdict
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gogmagog.errors import PreconditionError
from gogmagog.matchings import (
    ARGraph,
    OddVertexWarning,
    enumerate_perfect_matchings,
    matching_class,
    weighted_matching_sum,
)
from gogmagog.polyring import ParamPoly
from gogmagog.triangles import enumerate_monotone_triangles, mt_generating_function

U = ParamPoly.var("u")
ONE = ParamPoly.const(1)


def hex_product(b):
    p = Fraction(1)
    for i, j in itertools.combinations(range(len(b)), 2):
        p *= Fraction(b[j] - b[i], j - i)
    return p


def small_shapes(max_n=3, max_m=5):
    for n in range(1, max_n + 1):
        for m in range(n, max_m + 1):
            for b in itertools.combinations(range(1, m + 1), n):
                yield n, m, b


class TestSingleCell:
    def test_edge_weights_clockwise_from_nw(self):
        g = ARGraph(1, 1, (1,))
        by_side = {e.side: e.weight for e in g.edges}
        assert by_side == {"NW": "1", "NE": "1", "SE": "u", "SW": "1-u"}

    def test_two_matchings_pair_opposite_sides(self):
        g = ARGraph(1, 1, (1,))
        got = {}
        for m in enumerate_perfect_matchings(g):
            sides = frozenset(g.edges[i].side for i in m.edges)
            got[sides] = m.weight()
        assert got == {
            frozenset({"NW", "SE"}): U,
            frozenset({"NE", "SW"}): ONE - U,
        }

    def test_sum_is_one(self):
        assert weighted_matching_sum(ARGraph(1, 1, (1,))) == ONE


class TestConstruction:
    def test_vertex_and_edge_counts(self):
        g = ARGraph(2, 3, (1, 3))
        # per cell row: m ns-vertices and m+1 we-vertices, one closing
        # ns row at the bottom, a pendant for each unused column
        assert len(g.vertices) == 2 * (3 + 4) + 3 + 1
        assert len(g.edges) == 4 * 2 * 3 + 1

    def test_pendants_sit_under_missing_columns(self):
        g = ARGraph(2, 4, (2, 3))
        pend = sorted(e.b[2] for e in g.edges if e.side == "pendant")
        assert pend == [1, 4]

    def test_every_edge_has_one_cell(self):
        g = ARGraph(2, 3, (1, 2))
        for e in g.edges:
            if e.side == "pendant":
                assert e.cell is None
            else:
                assert e.cell is not None and e.side in ("NW", "NE", "SE", "SW")

    def test_json_dict_round_shape(self):
        d = ARGraph(1, 2, (2,)).to_json_dict()
        assert d["n"] == 1 and d["m"] == 2 and d["bottom_columns"] == [2]
        assert len(d["edges"]) == 4 * 2 + 1
        assert all(set(e) == {"ends", "weight", "side", "cell"} for e in d["edges"])

    @pytest.mark.parametrize(
        "n,m,b",
        [
            (0, 1, ()),
            (1, 0, (1,)),
            (2, 3, (1,)),
            (2, 3, (3, 1)),
            (2, 3, (1, 1)),
            (2, 3, (1, 4)),
            (1, 3, (0,)),
        ],
    )
    def test_bad_parameters_rejected(self, n, m, b):
        with pytest.raises(PreconditionError):
            ARGraph(n, m, b)


class TestWeightedSum:
    def test_matches_triangle_polynomial_everywhere_small(self):
        for n, m, b in small_shapes():
            total = weighted_matching_sum(ARGraph(n, m, b))
            expected = mt_generating_function(b).substitute(
                v=ONE - U
            )
            assert total == expected, (n, m, b)

    def test_specializations_give_product(self):
        for n, m, b in small_shapes(max_n=3, max_m=4):
            total = weighted_matching_sum(ARGraph(n, m, b))
            target = hex_product(b)
            assert total.substitute(u=0).const_value() == target
            assert total.substitute(u=1).const_value() == target

    def test_sum_is_constant_in_u(self):
        # deleting SW edges (u = 1) or SE edges (u = 0) leaves the same
        # count, and in fact the whole sum never depends on u
        for b in [(1, 3), (2, 4), (1, 2, 4)]:
            total = weighted_matching_sum(ARGraph(len(b), max(b), b))
            assert total.is_const()

    def test_two_enumeration(self):
        for n, m in [(3, 3), (4, 4), (4, 5)]:
            for b in itertools.combinations(range(1, m + 1), n):
                total = weighted_matching_sum(ARGraph(n, m, b))
                scaled = 2 ** (n * (n - 1) // 2) * total.substitute(
                    u=Fraction(1, 2)
                ).const_value()
                assert scaled == 2 ** (n * (n - 1) // 2) * hex_product(b)

    def test_staircase_two_enumeration_value(self):
        total = weighted_matching_sum(ARGraph(3, 3, (1, 2, 3)))
        assert 2**3 * total.substitute(u=Fraction(1, 2)).const_value() == 8

    def test_odd_vertex_count_warns_and_returns_zero(self):
        class Stub:
            vertices = ("a", "b", "c")
            edges = ()

        with pytest.warns(OddVertexWarning):
            assert weighted_matching_sum(Stub()) == ParamPoly.zero()


class TestClasses:
    def collect(self, g):
        classes = defaultdict(list)
        for m in enumerate_perfect_matchings(g):
            mt, exp = matching_class(m)
            classes[(mt, exp)].append(m)
        return classes

    def test_classes_biject_with_triangles(self):
        for n, m, b in small_shapes(max_n=2, max_m=5):
            g = ARGraph(n, m, b)
            classes = self.collect(g)
            triangles = {mt for mt, _ in enumerate_monotone_triangles(b)}
            assert {mt for mt, _ in classes} == triangles

    def test_class_size_and_weight(self):
        shapes = list(small_shapes(max_n=2, max_m=5))
        shapes += [(3, 5, (1, 2, 3)), (3, 5, (1, 3, 5)), (3, 5, (2, 3, 5))]
        for n, m, b in shapes:
            g = ARGraph(n, m, b)
            stats = {mt: s for mt, s in enumerate_monotone_triangles(b)}
            for (mt, exp), members in self.collect(g).items():
                assert len(members) == 2**exp
                s = stats[mt]
                class_sum = sum(
                    (mm.weight() for mm in members), ParamPoly.zero()
                )
                assert class_sum == U**s.inv * (ONE - U) ** s.inv_prime, (b, mt)

    @given(st.sampled_from([(1, 1), (1, 2), (1, 3), (2, 3)]))
    @settings(max_examples=4, deadline=None)
    def test_total_count_equals_matching_count_partition(self, nm):
        n, m = nm
        for b in itertools.combinations(range(1, m + 1), n):
            g = ARGraph(n, m, b)
            matchings = list(enumerate_perfect_matchings(g))
            classes = self.collect(g)
            assert sum(len(v) for v in classes.values()) == len(matchings)
