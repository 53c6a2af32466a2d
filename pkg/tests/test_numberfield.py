from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cremona_lattice.numberfield import QuadExtScalar, golden

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


def scalars(d: int):
    return st.builds(lambda a, b: QuadExtScalar(d, a, b), rationals, rationals)


@pytest.mark.parametrize("d", [-1, 3, 5])
@given(data=st.data())
def test_field_axioms(d, data):
    x, y, z = (data.draw(scalars(d)) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x * y).norm() == x.norm() * y.norm()
    if x.norm() != 0:
        assert x * x.inverse() == 1
    else:
        assert x == 0
        with pytest.raises(ZeroDivisionError):
            x.inverse()


def test_units():
    i = QuadExtScalar.sqrt(-1)
    assert i * i == -1
    assert QuadExtScalar.sqrt(3) ** 2 == 3
    phi = golden(1)
    assert phi * phi == phi + 1 and golden(-1) == 1 - phi
    assert QuadExtScalar(5, Fraction(2)) == 2 and hash(QuadExtScalar(5, 2)) == hash(Fraction(2))


def test_mixing_fields_fails():
    with pytest.raises(ValueError):
        QuadExtScalar(3, 1, 1) + QuadExtScalar(5, 1, 1)
    with pytest.raises(ValueError):
        QuadExtScalar(2, 1)
