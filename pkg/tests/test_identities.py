"""Identity verifier tests.

The verifiers return plain booleans, certifying each statement either
by exact seeded rational evaluation or by fully symbolic expansion.
Counterexample detection is tested by feeding deliberately broken
inputs wherever the interface allows it.
"""

import math
from fractions import Fraction

import pytest

from gogmagog.errors import PreconditionError
from gogmagog.formulas import (
    asm_determinants,
    asm_number,
    verify_antisymmetrizer_identities,
    verify_behrend_limits,
    verify_lemma_zeilberger,
    verify_summation_identity,
    verify_symmetrizer_mt,
    verify_theorem_zeil,
)

ASM_COUNTS = [1, 2, 7, 42, 429, 7436]


class TestSymmetrizations:
    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_cyclic_shift_lemma(self, r):
        assert verify_lemma_zeilberger(r) is True

    @pytest.mark.parametrize("seed", [0, 1, 7])
    def test_lemma_independent_of_seed(self, seed):
        assert verify_lemma_zeilberger(3, seed=seed) is True

    def test_lemma_range_guard(self):
        with pytest.raises(PreconditionError):
            verify_lemma_zeilberger(0)

    @pytest.mark.parametrize("r,base", [(1, 0), (1, 3), (2, 0), (2, 1), (3, 0)])
    def test_ordered_sum_identity(self, r, base):
        assert verify_summation_identity(r, base, 8) is True

    @pytest.mark.parametrize("sym", ["1", "e1", "e2"])
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_swap_identity_symbolic(self, n, sym):
        assert verify_theorem_zeil(n, sym=sym) is True

    def test_swap_identity_at_rational_point(self):
        assert verify_theorem_zeil(2, sym="e1", t=Fraction(3, 7)) is True

    def test_swap_identity_guards(self):
        with pytest.raises(PreconditionError):
            verify_theorem_zeil(4)
        with pytest.raises(PreconditionError):
            verify_theorem_zeil(2, sym="e3")


class TestAntisymmetrizerPair:
    @pytest.mark.parametrize("variant", ["quadratic", "linear"])
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_holds(self, n, variant):
        assert verify_antisymmetrizer_identities(n, variant=variant) is True

    def test_unknown_variant_rejected(self):
        with pytest.raises(PreconditionError):
            verify_antisymmetrizer_identities(2, variant="cubic")


class TestCoincidenceLimits:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_bivariate(self, n):
        f = {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}
        assert verify_behrend_limits(n, f=f) is True

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_univariate_square_columns(self, n):
        flist = [{0: (j + 1) ** 2, 1: 2 * (j + 1), 2: 1} for j in range(n)]
        assert verify_behrend_limits(n, f_list=flist) is True

    def test_univariate_coefficient_lists(self):
        flist = [[1, 2, 1], [0, 1, 1], [3, 0, 2]]
        assert verify_behrend_limits(3, f_list=flist) is True

    def test_requires_exactly_one_direction(self):
        with pytest.raises(PreconditionError):
            verify_behrend_limits(2)
        with pytest.raises(PreconditionError):
            verify_behrend_limits(2, f={(0, 0): 1}, f_list=[[1]])


class TestClosedSymmetrizations:
    @pytest.mark.parametrize("source", ["standard", "alternative", "antisym"])
    @pytest.mark.parametrize("n", [1, 2])
    def test_holds(self, n, source):
        assert verify_symmetrizer_mt(n, source=source) is True

    def test_unknown_source_rejected(self):
        with pytest.raises(PreconditionError):
            verify_symmetrizer_mt(2, source="other")


class TestAsmNumbers:
    def test_product_formula(self):
        assert [asm_number(n) for n in range(1, 7)] == ASM_COUNTS

    def test_formula_shape(self):
        # closed product: prod (3i+1)! / (n+i)!
        for n in range(1, 7):
            expected = math.prod(
                math.factorial(3 * i + 1) // math.factorial(n + i) for i in range(n)
            )
            assert asm_number(n) == expected

    @pytest.mark.parametrize("conjugate", [False, True])
    @pytest.mark.parametrize("n", range(1, 7))
    def test_determinants_both_roots(self, n, conjugate):
        d1, d2, verdicts = asm_determinants(n, conjugate=conjugate)
        assert verdicts["det_is_asm_number"] is True
        assert d1 == asm_number(n)
        assert verdicts["quotient_matches"] is True
        assert verdicts["reduction_matches"] is True
        assert verdicts["raw_det_is_asm_number"] is True

    def test_shifted_determinant_skips_count_verdict(self):
        _, _, verdicts = asm_determinants(3, x_shift=2)
        assert verdicts["det_is_asm_number"] is None
        assert verdicts["quotient_matches"] is True

    def test_range_guard(self):
        with pytest.raises(PreconditionError):
            asm_determinants(7)
