from __future__ import annotations

from fractions import Fraction

from hypothesis import given, strategies as st

from cremona_lattice.multipoly import Poly, PolyMap, cross_products_vanish, same_projective_point
from cremona_lattice.numberfield import QuadExtScalar
from cremona_lattice.surfaces import g0_map, tau0_map

nonzero = st.fractions(min_value=-30, max_value=30, max_denominator=7).filter(lambda q: q != 0)
points = st.lists(st.integers(-20, 20), min_size=3, max_size=3).filter(any)


def test_arithmetic():
    x, y = Poly.variables(2)
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert ((x + y) * (x - y)).degree() == 2
    assert (x * 3 - y).evaluate([2, 5]) == 1
    assert (x * x).compose([x + y, y]) == (x + y) ** 2
    assert (x * 2).proportional_to(x) == 2 and x.proportional_to(y) is None


@given(points, nonzero, nonzero)
def test_projective_equality_is_scalar_robust(p, a, b):
    g = g0_map()
    p = [Fraction(c) for c in p]
    img = g.point_image(p)
    if img is None:
        return
    assert same_projective_point([a * c for c in img], [b * c for c in g.point_image([a * c for c in p])])
    assert same_projective_point(p, [a * c for c in p])


@given(nonzero)
def test_map_equality_is_scalar_robust(a):
    tau = tau0_map()
    scaled = PolyMap(tuple(c.scale(a) for c in tau.components), tau.blocks)
    assert tau.equals_up_to_scalar(scaled)
    assert tau.power(3).equals_up_to_scalar(PolyMap.identity(6, (2, 2, 2)))
    assert not tau.equals_up_to_scalar(PolyMap.identity(6, (2, 2, 2)))


def test_coefficients_stay_in_field():
    x, y = Poly.variables(2)
    i = QuadExtScalar(-1, 0, 1)
    p = (x * i + y) ** 3
    assert all(isinstance(c, Fraction) or (isinstance(c, QuadExtScalar) and c.d == -1) for c in p.coefficients())
    assert p.terms[(0, 3)] == 1 and p.terms[(3, 0)] == -i
    assert cross_products_vanish([x * i, y * i], [x, y])
