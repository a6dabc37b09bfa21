from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gogmagog.errors import (
    ExactDivisionError,
    MalformedExpressionError,
    PreconditionError,
    ResourceBudgetError,
)
from gogmagog.laurent import (
    CTBuilder,
    CTExpression,
    GeometricFactor,
    LaurentPoly,
    NegPowerFactor,
    antisymmetrize,
    binom_power,
    complete_hom,
    constant_term,
    det,
    divexact_linear,
    divexact_vandermonde,
    elem_sym,
)
from gogmagog.polyring import ParamPoly


def lp(n, terms):
    return LaurentPoly(n, terms)


class TestLaurentPoly:
    def test_ring_basics(self):
        x = LaurentPoly.monomial(2, {0: 1})
        y = LaurentPoly.monomial(2, {1: 1})
        assert (x + y) * (x - y) == x * x - y * y
        assert x - x == 0
        assert (1 + x) ** 2 == 1 + 2 * x + x * x

    def test_negative_exponents(self):
        xinv = LaurentPoly.monomial(1, {0: -1})
        x = LaurentPoly.monomial(1, {0: 1})
        assert xinv * x == 1
        assert xinv.min_exp(0) == -1

    def test_column_mismatch_rejected(self):
        with pytest.raises(PreconditionError):
            LaurentPoly.one(2) + LaurentPoly.one(3)

    def test_mul_bounded_prunes(self):
        x = LaurentPoly.monomial(1, {0: 1})
        p = (1 + x) ** 4
        q = p.mul_bounded(p, [0], [3])
        full = p * p
        assert q.terms == {
            e: c for e, c in full.terms.items() if 0 <= e[0] <= 3
        }

    def test_mul_bounded_budget(self):
        x = LaurentPoly.monomial(1, {0: 1})
        p = (1 + x) ** 10
        with pytest.raises(ResourceBudgetError):
            p.mul_bounded(p, [None], [None], budget=5)

    def test_permuted(self):
        p = LaurentPoly.monomial(3, {0: 2, 1: 5})
        q = p.permuted((1, 0, 2))
        assert q == LaurentPoly.monomial(3, {0: 5, 1: 2})

    def test_substitute_col_and_evaluate(self):
        x = LaurentPoly.monomial(2, {0: 1})
        y = LaurentPoly.monomial(2, {1: 1})
        p = x * y + x + 3
        assert p.substitute_col(0, 2) == 2 * y + 5
        assert p.evaluate({0: 2, 1: 5}) == 15
        xinv = LaurentPoly.monomial(1, {0: -2})
        assert xinv.evaluate({0: 2}) == Fraction(1, 4)

    def test_truncate_total(self):
        x = LaurentPoly.monomial(2, {0: 1})
        y = LaurentPoly.monomial(2, {1: 1})
        p = (1 + x + y) ** 3
        t = p.truncate_total(1)
        assert t == 1 + 3 * x + 3 * y

    def test_to_parampoly(self):
        # columns: 1 bound var, then u
        p = lp(2, {(0, 2): 3, (0, 0): 1})
        pp = p.to_parampoly(1, ("u",))
        u = ParamPoly.var("u")
        assert pp == 3 * u**2 + 1
        bad = lp(2, {(1, 0): 1})
        with pytest.raises(PreconditionError):
            bad.to_parampoly(1, ("u",))


class TestHelpers:
    def test_binom_power_scalar(self):
        assert binom_power(1, 0, 3) == (1 + LaurentPoly.monomial(1, {0: 1})) ** 3
        # (1 - x)^2 = 1 - 2x + x^2
        assert binom_power(1, 0, 2, lin=-1) == lp(1, {(0,): 1, (1,): -2, (2,): 1})

    def test_binom_power_poly_lin(self):
        # (1 + (1-u)x)^2 over columns (x, u)
        one_minus_u = lp(2, {(0, 0): 1, (0, 1): -1})
        p = binom_power(2, 0, 2, lin=one_minus_u)
        x = LaurentPoly.monomial(2, {0: 1})
        assert p == (1 + one_minus_u * x) * (1 + one_minus_u * x)

    def test_det_int(self):
        assert det([[1, 2], [3, 4]]) == -2
        assert det([[2]]) == 2
        assert det([]) == 1
        m = [[1, 2, 3], [4, 5, 6], [7, 8, 10]]
        assert det(m) == -3

    def test_det_vandermonde_3(self):
        cols = []
        for i in range(3):
            cols.append(LaurentPoly.monomial(3, {i: 1}))
        m = [[cols[i] ** j for j in range(3)] for i in range(3)]
        d = det(m)
        expect = (
            (cols[1] - cols[0]) * (cols[2] - cols[0]) * (cols[2] - cols[1])
        )
        assert d == expect

    def test_elem_and_complete(self):
        e2 = elem_sym(3, (0, 1, 2), 2)
        assert len(e2.terms) == 3
        h2 = complete_hom(2, (0, 1), 2)
        # x^2 + xy + y^2
        assert h2 == lp(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
        h1_inv = complete_hom(2, (0, 1), 1, inverted=True)
        assert h1_inv == lp(2, {(-1, 0): 1, (0, -1): 1})
        assert complete_hom(2, (0, 1), 0) == 1

    def test_antisymmetrize_vandermonde(self):
        # AS[x^0 y^1 z^2] is the Vandermonde determinant in 3 variables
        p = LaurentPoly.monomial(3, {1: 1, 2: 2})
        a = antisymmetrize(p, 3)
        cols = [LaurentPoly.monomial(3, {i: 1}) for i in range(3)]
        vdm = (cols[1] - cols[0]) * (cols[2] - cols[0]) * (cols[2] - cols[1])
        assert a == vdm

    def test_antisymmetrize_kills_symmetric(self):
        p = LaurentPoly.monomial(2, {0: 1, 1: 1})
        assert antisymmetrize(p, 2) == 0

    def test_antisymmetrize_budget(self):
        with pytest.raises(ResourceBudgetError):
            antisymmetrize(LaurentPoly.one(9), 9)


class TestDivexact:
    def test_exact(self):
        x = LaurentPoly.monomial(2, {0: 1})
        y = LaurentPoly.monomial(2, {1: 1})
        p = (x - y) * (x + 2 * y + 3)
        assert divexact_linear(p, 0, 1) == x + 2 * y + 3

    def test_negative_exponents(self):
        x = LaurentPoly.monomial(2, {0: 1})
        y = LaurentPoly.monomial(2, {1: 1})
        xinv = LaurentPoly.monomial(2, {0: -1})
        p = (x - y) * xinv * xinv * (1 + y)
        q = divexact_linear(p, 0, 1)
        assert q * (x - y) == p

    def test_remainder_raises(self):
        x = LaurentPoly.monomial(2, {0: 1})
        with pytest.raises(ExactDivisionError):
            divexact_linear(x + 1, 0, 1)

    def test_vandermonde_division(self):
        cols = [LaurentPoly.monomial(3, {i: 1}) for i in range(3)]
        vdm = (cols[0] - cols[1]) * (cols[0] - cols[2]) * (cols[1] - cols[2])
        p = vdm * (1 + cols[0] * cols[1] * cols[2])
        q = divexact_vandermonde(p, (0, 1, 2))
        assert q == 1 + cols[0] * cols[1] * cols[2]

    @given(st.integers(0, 3), st.integers(0, 3), st.integers(-3, 3))
    def test_quotient_roundtrip(self, a, b, c):
        x = LaurentPoly.monomial(2, {0: 1})
        y = LaurentPoly.monomial(2, {1: 1})
        q = x**a * y**b * c + x * y + 1
        p = (x - y) * q
        assert divexact_linear(p, 0, 1) == q


class TestConstantTerm:
    def test_trivial_cases(self):
        # CT[(1+x)^2 / x] = 2
        b = CTBuilder(1)
        b.add_binom_power(1, 2)
        b.add_mono({1: -1})
        assert b.constant_term().as_int() == 2
        # CT[x^-1 (x + 3x^2)] = 1
        b = CTBuilder(1)
        b.add_mono({1: -1})
        b.add(b.poly((1, {1: 1}), (3, {1: 2})))
        assert b.constant_term().as_int() == 1
        # empty product
        assert constant_term(CTExpression(0, (), [])).as_int() == 1

    def test_neg_power_series(self):
        # CT[x^-2 (1-x)^-1] = 1 (geometric series coefficient)
        b = CTBuilder(1)
        b.add_mono({1: -2})
        b.add_binom_power(1, -1, lin=-1)
        assert b.constant_term().as_int() == 1
        # CT[x^-2 (1+x)^-3] = C(-3,2) = 6
        b = CTBuilder(1)
        b.add_mono({1: -2})
        b.add_binom_power(1, -3)
        assert b.constant_term().as_int() == 6

    def test_neg_power_param_lin(self):
        # CT[x^-1 (1+(1-v)x)^-1] = -(1-v) = v-1
        b = CTBuilder(1, params=("v",))
        b.add_mono({1: -1})
        b.add_binom_power(1, -1, lin=b.poly((1, {}), (-1, {}, {"v": 1})))
        v = ParamPoly.var("v")
        assert b.constant_term() == v - 1

    def test_geometric(self):
        # CT[x^-1 y^-1 / (1 - xy)] = 1
        b = CTBuilder(2)
        b.add_mono({1: -1, 2: -1})
        b.add_geometric({1: 1, 2: 1})
        assert b.constant_term().as_int() == 1
        # CT[x^-4 / (1 - x^2)] = 1
        b = CTBuilder(1)
        b.add_mono({1: -4})
        b.add_geometric({1: 2})
        assert b.constant_term().as_int() == 1
        # CT[x^-3 / (1 - x^2)] = 0
        b = CTBuilder(1)
        b.add_mono({1: -3})
        b.add_geometric({1: 2})
        assert b.constant_term() == 0

    def test_budget_vars(self):
        b = CTBuilder(9)
        b.add_mono({1: 0})
        with pytest.raises(ResourceBudgetError):
            b.constant_term()

    def test_budget_terms(self):
        # a coupled 4-variable product holds >10 terms mid-extraction
        b = CTBuilder(4)
        for i in range(1, 5):
            b.add_mono({i: -3})
            b.add_binom_power(i, i)
        for i in range(1, 5):
            for j in range(i + 1, 5):
                b.add(
                    b.poly((1, {i: 1}), (-1, {j: 1}))
                    * b.poly((1, {}), (1, {j: 1}), (1, {i: 1, j: 1}))
                )
        with pytest.raises(ResourceBudgetError):
            b.constant_term(budget_terms=10)

    def test_malformed(self):
        with pytest.raises(MalformedExpressionError):
            GeometricFactor({})
        with pytest.raises(MalformedExpressionError):
            GeometricFactor({0: -1})
        with pytest.raises(MalformedExpressionError):
            NegPowerFactor(0, 1, 0)
        with pytest.raises(MalformedExpressionError):
            CTExpression(1, (), [LaurentPoly.one(3)])
        # series coefficient may not involve a bound variable
        bad_lin = LaurentPoly.monomial(2, {0: 1})
        with pytest.raises(MalformedExpressionError):
            CTExpression(2, (), [NegPowerFactor(0, bad_lin, 1)])
        # negative parameter exponent
        with pytest.raises(MalformedExpressionError):
            CTExpression(1, ("u",), [LaurentPoly.monomial(2, {1: -1})])

    @given(st.integers(0, 6), st.integers(0, 6))
    def test_single_variable_binomial(self, a, k):
        # CT[(1+x)^a x^-k] = C(a, k)
        b = CTBuilder(1)
        b.add_binom_power(1, a)
        b.add_mono({1: -k})
        assert b.constant_term().as_int() == __import__("math").comb(a, k)

    @settings(deadline=None)
    @given(
        st.lists(st.integers(0, 4), min_size=2, max_size=3),
        st.integers(0, 3),
    )
    def test_factor_order_irrelevant(self, powers, shift):
        # engine result equals brute-force expansion regardless of order
        n = len(powers)
        b = CTBuilder(n)
        full = LaurentPoly.one(n)
        for i, p in enumerate(powers, start=1):
            b.add_binom_power(i, p)
            b.add_mono({i: -shift})
            full = full * binom_power(n, i - 1, p)
            full = full * LaurentPoly.monomial(n, {i - 1: -shift})
        for i in range(1, n):
            pair = b.poly((1, {i: 1}), (-1, {i + 1: 1}))
            b.add(pair)
            full = full * pair
        got = b.constant_term().as_int()
        assert got == full.terms.get((0,) * n, 0)

    def test_antisym_equals_direct(self):
        # CT[f * prod(1/x_i - 1/x_j)] = CT[AS[f] / prod_{i<j}(x_i - x_j)]
        # checked by computing both sides explicitly for a small f
        n = 2
        f = binom_power(n, 0, 2) * binom_power(n, 1, 1) * LaurentPoly.monomial(
            n, {0: -1, 1: -1}
        )
        lhs_factor = LaurentPoly(
            n, {(-1, 0): 1, (0, -1): -1}
        )  # 1/x - 1/y
        lhs = (f * lhs_factor).terms.get((0,) * n, 0)
        num = antisymmetrize(f, n)
        den_quot = divexact_linear(num, 0, 1)
        rhs = den_quot.terms.get((0,) * n, 0)
        assert lhs == rhs


class TestAcceptancePreview:
    """The count extraction the first acceptance criterion times."""

    def test_round_counts(self):
        def gog_count(n):
            b = CTBuilder(n)
            for i in range(1, n + 1):
                b.add_mono({i: 1 - n})
                b.add_binom_power(i, i)
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    b.add(
                        b.poly((1, {i: 1}), (-1, {j: 1}))
                        * b.poly((1, {}), (1, {j: 1}), (1, {i: 1, j: 1}))
                    )
            return b.constant_term().as_int()

        assert [gog_count(n) for n in range(1, 7)] == [1, 2, 7, 42, 429, 7436]
