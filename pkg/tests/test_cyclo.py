from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hgsearch.cyclo import (
    CycMatrix,
    CycNum,
    NotUnipotent,
    cyclotomic_poly,
    poly_from_roots,
    root_of_unity,
    unipotent_block_sizes,
)


def test_cyclotomic_poly_known():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(9) == (1, 0, 0, 1, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_root_of_unity_order():
    z = root_of_unity(9, 1)
    assert (z ** 9) == CycNum.one(9)
    assert not (z ** 3 - CycNum.one(9)).is_zero()


def test_sum_of_all_roots_vanishes():
    for m in (5, 7, 9):
        total = CycNum.zero(m)
        for k in range(m):
            total = total + root_of_unity(m, k)
        assert total.is_zero()


def test_inverse():
    z = root_of_unity(7, 3)
    x = z + CycNum.from_rational(7, Fraction(2))
    assert (x * x.inv() - CycNum.one(7)).is_zero()


def test_poly_from_roots_expansion():
    # (x - z)(x - z^2) over level 3: x^2 - (z + z^2) x + 1 = x^2 + x + 1
    coeffs = poly_from_roots(3, [1, 2])
    assert len(coeffs) == 3
    assert coeffs[0] == CycNum.one(3)
    assert coeffs[1] == CycNum.one(3)
    assert coeffs[2] == CycNum.one(3)


@settings(max_examples=150)
@given(st.integers(2, 12), st.data())
def test_ring_axioms_spotcheck(m, data):
    k1 = data.draw(st.integers(0, m - 1))
    k2 = data.draw(st.integers(0, m - 1))
    q = Fraction(data.draw(st.integers(-5, 5)), data.draw(st.integers(1, 5)))
    a = root_of_unity(m, k1)
    b = root_of_unity(m, k2) + CycNum.from_rational(m, q)
    assert ((a + b) * (a - b) - (a * a - b * b)).is_zero()
    assert (a * b - b * a).is_zero()


def test_matrix_det_and_inverse():
    z = root_of_unity(5, 1)
    one = CycNum.one(5)
    m = CycMatrix(5, [[one, z], [z, one]])
    d = m.det()
    assert (d - (one - z * z)).is_zero()
    minv = m.inv()
    prod = m * minv
    assert prod == CycMatrix.identity(5, 2)


def test_matrix_rank():
    one = CycNum.one(4)
    zero = CycNum.zero(4)
    m = CycMatrix(4, [[one, one], [one, one]])
    assert m.rank() == 1
    assert CycMatrix(4, [[zero, zero], [zero, zero]]).rank() == 0


def test_unipotent_block_sizes():
    one = CycNum.one(3)
    zero = CycNum.zero(3)
    # one Jordan block of size 2 and one of size 1
    m = CycMatrix(3, [[one, one, zero], [zero, one, zero], [zero, zero, one]])
    assert unipotent_block_sizes(m) == [2, 1]
    z = root_of_unity(3, 1)
    bad = CycMatrix(3, [[z, zero], [zero, one]])
    with pytest.raises(NotUnipotent):
        unipotent_block_sizes(bad)
