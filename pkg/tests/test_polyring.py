import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gogmagog.errors import NonUnitError, PreconditionError
from gogmagog.polyring import Eisenstein, ParamPoly, gen_binom


class TestGenBinom:
    def test_positive_matches_comb(self):
        for n in range(8):
            for k in range(10):
                assert gen_binom(n, k) == math.comb(n, k)

    def test_negative_k_is_zero(self):
        assert gen_binom(5, -1) == 0
        assert gen_binom(-5, -2) == 0
        assert gen_binom(0, -1) == 0

    def test_negative_n_values(self):
        # (1+x)^-1 = 1 - x + x^2 - ...
        assert [gen_binom(-1, k) for k in range(5)] == [1, -1, 1, -1, 1]
        # (1+x)^-2 = 1 - 2x + 3x^2 - ...
        assert [gen_binom(-2, k) for k in range(5)] == [1, -2, 3, -4, 5]

    @given(st.integers(-30, 30), st.integers(-5, 30))
    def test_pascal_recurrence(self, n, k):
        # C(n,k) = C(n-1,k-1) + C(n-1,k) holds for all integer n
        assert gen_binom(n, k) == gen_binom(n - 1, k - 1) + gen_binom(n - 1, k)

    @given(st.integers(-20, 20), st.integers(0, 20))
    def test_reflection(self, n, k):
        assert gen_binom(n, k) == (-1) ** k * gen_binom(k - n - 1, k)


class TestParamPoly:
    def test_constructors_and_equality(self):
        assert ParamPoly.zero() == 0
        assert ParamPoly.const(3) == 3
        assert ParamPoly.const(0) == ParamPoly.zero()
        u = ParamPoly.var("u")
        assert u != 0
        assert u == ParamPoly.var("u")

    def test_unknown_param_rejected(self):
        with pytest.raises(PreconditionError):
            ParamPoly.var("w")

    def test_ring_ops(self):
        u, v = ParamPoly.var("u"), ParamPoly.var("v")
        p = (u + v) * (u - v)
        assert p == u * u - v * v
        assert (u + 1) * (u - 1) == u**2 - 1
        assert 2 * u - u == u
        assert u - u == 0

    def test_pow(self):
        u = ParamPoly.var("u")
        assert (u + 1) ** 3 == u**3 + 3 * u**2 + 3 * u + 1
        assert (u + 1) ** 0 == 1
        with pytest.raises(PreconditionError):
            (u + 1) ** -1

    def test_fraction_coefficients(self):
        u = ParamPoly.var("u")
        p = Fraction(1, 2) * u + Fraction(1, 2) * u
        assert p == u
        assert (Fraction(1, 3) * u).terms  # not collapsed to zero

    def test_coeff_of_and_degree(self):
        u, q = ParamPoly.var("u"), ParamPoly.var("Q")
        p = 3 * u**2 * q + 5 * q + 7
        assert p.coeff_of(Q=1) == 3 * u**2 + 5
        assert p.coeff_of(Q=0) == 7
        assert p.coeff_of(Q=2) == 0
        assert p.degree_in("u") == 2
        assert p.degree_in("Q") == 1
        assert ParamPoly.zero().degree_in("u") == -1

    def test_substitute_scalar(self):
        u, v = ParamPoly.var("u"), ParamPoly.var("v")
        p = u * v + u + 1
        assert p.substitute(u=1, v=1) == 3
        assert p.substitute(u=0) == 1
        assert p.substitute(u=2, v=Fraction(1, 2)) == 4

    def test_substitute_poly(self):
        # v -> 1 - u inside u*v + v turns into (1+u)(1-u) - ... check exactly
        u, v = ParamPoly.var("u"), ParamPoly.var("v")
        p = u * v + v
        assert p.substitute(v=1 - u) == (u + 1) * (1 - u)

    def test_as_int(self):
        assert ParamPoly.const(5).as_int() == 5
        assert ParamPoly.const(Fraction(10, 2)).as_int() == 5
        with pytest.raises(PreconditionError):
            ParamPoly.const(Fraction(1, 2)).as_int()
        with pytest.raises(PreconditionError):
            ParamPoly.var("u").as_int()

    @given(
        st.lists(
            st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(-4, 4)),
            max_size=5,
        )
    )
    def test_substitution_is_ring_hom(self, triples):
        u, v = ParamPoly.var("u"), ParamPoly.var("v")
        p = ParamPoly.zero()
        q = ParamPoly.const(1)
        for a, b, c in triples:
            p = p + c * u**a * v**b
            q = q * (1 + c * u**a * v**b)
        # substitute(u=2, v=3) commutes with + and *
        assert (p * q).substitute(u=2, v=3) == p.substitute(u=2, v=3) * q.substitute(
            u=2, v=3
        )
        assert (p + q).substitute(u=2, v=3) == p.substitute(u=2, v=3) + q.substitute(
            u=2, v=3
        )


class TestEisenstein:
    def test_zeta_satisfies_minimal_polynomial(self):
        z = Eisenstein.zeta()
        assert z * z == z - 1
        assert z**6 == 1
        assert z**3 == -1

    def test_omega_is_primitive_cube_root(self):
        w = Eisenstein.omega()
        assert w == Eisenstein.zeta() ** 2
        assert w**3 == 1
        assert w**2 + w + 1 == 0
        # conjugate cube root is -zeta
        assert w.conj() == -Eisenstein.zeta()
        assert w.conj() == w**2

    def test_norm_and_conj(self):
        x = Eisenstein(3, 5)
        assert x * x.conj() == Eisenstein(x.norm(), 0)
        assert x.norm() == 9 + 15 + 25

    def test_units_invert(self):
        z = Eisenstein.zeta()
        for k in range(6):
            for sign in (1, -1):
                unit = sign * z**k
                assert unit * unit.inv() == 1

    def test_nonunit_rejected(self):
        with pytest.raises(NonUnitError):
            Eisenstein(2, 0).inv()
        with pytest.raises(NonUnitError):
            Eisenstein(0, 0).inv()

    def test_field_inverse_and_division(self):
        x = Eisenstein(2, 3)
        assert x * x.field_inv() == 1
        assert (x / x) == 1
        assert 1 / x == x.field_inv()
        # frozen: (1 + zeta^2)(1 + zeta^-2) = 1
        z = Eisenstein.zeta()
        assert (1 + z**2) * (1 + z**-2) == 1

    @given(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
    def test_norm_multiplicative(self, a, b, c, d):
        x, y = Eisenstein(a, b), Eisenstein(c, d)
        assert (x * y).norm() == x.norm() * y.norm()
