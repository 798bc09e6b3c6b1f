from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from localization.charalg import (EquivParams, LaurentPoly, format_monomial, format_poly, poly_sum,
                                  weight_form)
from localization.exceptions import RankMismatch

exponents = st.tuples(*[st.integers(min_value=-3, max_value=3)] * 3)
polys = st.dictionaries(exponents, st.integers(min_value=-5, max_value=5), max_size=6).map(LaurentPoly)


def test_zero_coefficients_are_dropped():
    p = LaurentPoly({(1, 0, 0): 2, (0, 1, 0): 0})
    assert len(p) == 1
    assert not (LaurentPoly.t(0) - LaurentPoly.t(0))


def test_variables_and_rank():
    u = LaurentPoly.u(1, rank=2)
    assert u.terms == {(0, 0, 0, 0, 1): 1}
    assert (LaurentPoly.t(2, rank=2, power=-1) * u).terms == {(0, 0, -1, 0, 1): 1}
    with pytest.raises(RankMismatch):
        LaurentPoly.t(0) + u


def test_exponent_length_is_checked():
    with pytest.raises(ValueError):
        LaurentPoly({(1, 0): 1})


def test_dual_and_shift():
    p = LaurentPoly({(1, 0, 0): 1, (0, -2, 1): -3})
    assert p.dual() == LaurentPoly({(-1, 0, 0): 1, (0, 2, -1): -3})
    assert p.shift((1, 1, 1)) == LaurentPoly({(2, 1, 1): 1, (1, -1, 2): -3})


def test_constant_term_and_value_at_one():
    p = LaurentPoly({(0, 0, 0): 4, (1, 1, 0): -1})
    assert p.constant_term() == 4
    assert p.value_at_one() == 3
    assert (p * 2).terms == {(0, 0, 0): 8, (1, 1, 0): -2}


def test_poly_sum_checks_rank():
    assert poly_sum([LaurentPoly.t(0), LaurentPoly.t(0)]) == LaurentPoly({(1, 0, 0): 2})
    with pytest.raises(RankMismatch):
        poly_sum([LaurentPoly.one(rank=1)], rank=0)


def test_weight_form():
    params = EquivParams((1, 2, 3), (7,))
    assert weight_form((1, -1, 2, 1), params) == Fraction(12)
    with pytest.raises(ValueError):
        weight_form((1, 0, 0), params)


def test_formatting():
    assert format_monomial((0, 0, 0)) == '1'
    assert format_monomial((1, -2, 0, 1)) == 't1*t2^-2*u1'
    assert format_poly(LaurentPoly({(1, 0, 0): 1, (0, -1, 0): -1})) == '-t2^-1 + t1'
    assert format_poly(LaurentPoly({(0, 0, 0): 3})) == '3'
    assert format_poly(LaurentPoly.zero()) == '0'


def test_params_helpers():
    params = EquivParams((1, -2, 3), (4,))
    assert params.rank == 1
    assert params.negated() == EquivParams((-1, 2, -3), (-4,))
    assert params.as_list() == [1, -2, 3, 4]


@given(polys, polys)
def test_dual_is_multiplicative(a, b):
    assert (a * b).dual() == a.dual() * b.dual()


@given(polys)
def test_dual_is_an_involution(a):
    assert a.dual().dual() == a


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a - a == LaurentPoly.zero()
    assert (a * b) * c == a * (b * c)


@given(polys, polys)
def test_dual_is_additive(a, b):
    assert (a + b).dual() == a.dual() + b.dual()


@given(polys, polys)
def test_value_at_one_is_multiplicative(a, b):
    assert (a * b).value_at_one() == a.value_at_one() * b.value_at_one()


small_params = st.builds(EquivParams, st.tuples(*[st.integers(min_value=-9, max_value=9)] * 3))


@given(exponents, exponents, small_params, st.integers(min_value=-5, max_value=5))
def test_weight_form_is_linear(e, f, params, k):
    total = tuple(x + y for x, y in zip(e, f))
    assert weight_form(total, params) == weight_form(e, params) + weight_form(f, params)
    assert weight_form(e, params.scaled(k)) == k * weight_form(e, params)


def _p():
    p = LaurentPoly.one()
    for i in range(3):
        p = p * (LaurentPoly.one() - LaurentPoly.t(i))
    return p


def test_square_of_p_against_dense_convolution():
    dense = np.zeros((2, 2, 2), dtype=np.int64)
    for exponent, coeff in _p().items():
        dense[exponent] = coeff
    square = np.zeros((3, 3, 3), dtype=np.int64)
    for i in np.ndindex(*dense.shape):
        for j in np.ndindex(*dense.shape):
            square[tuple(a + b for a, b in zip(i, j))] += dense[i] * dense[j]
    expected = {idx: int(c) for idx, c in np.ndenumerate(square) if c}

    product = _p() * _p()
    assert len(product) == 27
    assert dict(product.terms) == expected


def test_dual_of_p_times_kappa():
    p = _p()
    kappa = LaurentPoly.monomial((1, 1, 1))
    assert not (p.dual() * kappa + p)
