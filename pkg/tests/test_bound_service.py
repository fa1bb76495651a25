# tests/test_bound_service.py
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from services.bound_service import (
    FORMGEN_CONSTANT,
    BoundParams,
    bound_recursion,
    change_full_bound,
    find_full_bound,
    theorem_bound,
    transform_k_bound,
)
from tests.strategies import PROPERTY_SETTINGS
from utils.errors import InputError


class TestBoundRecursion:
    def test_linear_regime(self):
        assert bound_recursion(10, 4, 2) == 40

    @pytest.mark.parametrize('k,a', [(1, 1), (5, 2), (9, 3)])
    def test_no_vertices(self, k, a):
        assert bound_recursion(0, k, a) == 0

    def test_one_recursion_step(self):
        assert bound_recursion(10, 6, 2) == 13 * 40 + 1000 == 1520

    @pytest.mark.parametrize('n,k,a', [(-1, 3, 1), (3, 0, 1), (3, 3, 0)])
    def test_bad_arguments(self, n, k, a):
        with pytest.raises(InputError):
            bound_recursion(n, k, a)

    @PROPERTY_SETTINGS
    @given(n=st.integers(0, 30), k=st.integers(1, 14), a=st.integers(1, 6))
    def test_monotone(self, n, k, a):
        b = bound_recursion(n, k, a)
        assert bound_recursion(n + 1, k, a) >= b
        assert bound_recursion(n, k + 1, a) >= b
        assert bound_recursion(n, k, a + 1) <= b

    @PROPERTY_SETTINGS
    @given(n=st.integers(1, 30), k=st.integers(1, 14), a=st.integers(1, 6))
    def test_closed_form_dominates_recursion(self, n, k, a):
        report = theorem_bound(BoundParams(n, k, a=a))
        assert report.value <= report.closed_form


class TestEngineBounds:
    def test_change_full_adds_linear_term(self):
        assert change_full_bound(10, 6, 2) == bound_recursion(10, 4, 2) + 60

    def test_find_full_rounds(self):
        assert find_full_bound(10, 6, 3) == 4 * change_full_bound(10, 6, 3)

    def test_transform_k_at_threshold_uses_slack_one(self):
        assert transform_k_bound(8, 3, 1) == bound_recursion(8, 3, 1)

    def test_transform_k_direct(self):
        assert transform_k_bound(8, 6, 2, 'direct') == bound_recursion(8, 6, 3)

    def test_transform_k_forget(self):
        assert transform_k_bound(8, 6, 2) == 2 * (bound_recursion(8, 4, 1) + 8)

    def test_transform_k_below_threshold(self):
        with pytest.raises(InputError):
            transform_k_bound(8, 3, 2)


class TestTheoremBound:
    def test_tree_with_three_colours(self):
        report = theorem_bound(BoundParams(n=10, k=3, d=1))
        assert report.case == 'k = d+2'
        assert report.exponent == 1
        assert report.value == bound_recursion(10, 3, 1)

    def test_three_halves_threshold_is_quadratic(self):
        report = theorem_bound(BoundParams(n=20, k=9, d=5))
        assert report.case == 'quadratic'
        assert report.a == 3

    def test_linear_when_slack_covers_half(self):
        report = theorem_bound(BoundParams(n=10, k=4, a=2))
        assert report.case == 'linear'
        assert report.value == 40

    def test_polynomial_with_epsilon(self):
        report = theorem_bound(BoundParams(n=10, k=7, d=4, epsilon=Fraction(1, 6)))
        assert report.case == 'polynomial'

    def test_general_without_epsilon(self):
        report = theorem_bound(BoundParams(n=10, k=7, d=4))
        assert report.case == 'general'
        assert report.value == transform_k_bound(10, 7, 4)

    def test_unsupported_below_d_plus_two(self):
        report = theorem_bound(BoundParams(n=10, k=4, d=3))
        assert report.case == 'unsupported'
        assert report.value is None

    def test_report_carries_constant(self):
        assert theorem_bound(BoundParams(n=5, k=6, a=2)).to_dict()['constant'] == FORMGEN_CONSTANT

    @pytest.mark.parametrize('kwargs', [
        {'n': 5, 'k': 4},
        {'n': 5, 'k': 4, 'a': 0},
        {'n': 5, 'k': 4, 'd': 1, 'epsilon': Fraction(3, 2)},
    ])
    def test_bad_params(self, kwargs):
        with pytest.raises(InputError):
            BoundParams(**kwargs)
