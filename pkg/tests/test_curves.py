from __future__ import annotations

import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from cremona_lattice import cases
from cremona_lattice import curves as C
from cremona_lattice import lattice as L
from cremona_lattice import weyl as W


def test_hexagon():
    g = C.build_graph(3)
    assert g.n == 6 and g.is_single_cycle() and g.girth() == 6
    assert len(g.automorphisms()) == 12


def test_petersen():
    g = C.build_graph(4)
    assert g.n == 10 and set(g.degrees()) == {3} and g.girth() == 5
    assert len(g.edges()) == 15
    # vertex-transitive under W(A4)
    perms = W.generate_group("A4").perms
    assert set(perms[:, 0].tolist()) == set(range(10))


def test_27_lines_pairing_oracle():
    g = C.build_graph(6)
    vs = g.vertices
    for i, j in itertools.combinations(range(27), 2):
        a, b = vs[i].coords, vs[j].coords
        direct = a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))
        assert bool(g.adjacency[i, j]) == (direct == 1)
    assert set(g.degrees()) == {10}
    assert not g.adjacency.diagonal().any()


@pytest.mark.parametrize("r,top", [(3, 1), (4, 1), (5, 1), (6, 1), (7, 2), (8, 3)])
def test_meeting_numbers(r, top):
    vs = L.enumerate_minus_one_classes(r)
    meets = {u.dot(v) for u, v in itertools.combinations(vs, 2)}
    assert max(meets) == top and min(meets) == 0


@pytest.mark.parametrize("label", ["A1xA2", "A4", "D5", "E6", "E7", "E8"])
def test_weyl_elements_are_graph_automorphisms(label):
    r = W.rank_of_type(label)
    g = C.build_graph(r)
    idx = {v: i for i, v in enumerate(g.vertices)}
    rng = random.Random(7)
    n = 1000 if r <= 6 else 50
    for _ in range(n):
        w = W.random_element(r, rng)
        p = np.array([idx[w(v)] for v in g.vertices])
        assert np.array_equal(g.pairing[np.ix_(p, p)], g.pairing)


def test_orbits_identity():
    orbs = C.orbits([W.Isometry.identity(4)], 4)
    assert sorted(len(o) for o in orbs) == [1] * 10


def test_pentagon_orbits():
    w = cases.pentagon_element()
    g = C.build_graph(4)
    orbs = C.orbits([w], 4)
    assert sorted(len(o) for o in orbs) == [5, 5]
    for o in orbs:
        ids = [g.vertices.index(v) for v in o]
        sub = g.adjacency[np.ix_(ids, ids)]
        assert (sub.sum(axis=1) == 2).all()


def test_order3_fixes_one_class():
    g = W.generate_group("A4")
    for i in np.flatnonzero(g.element_orders() == 3):
        w = g.isometry(int(i))
        assert len(C.invariant_exceptional([w], None, 4)) == 1
        assert sorted(len(o) for o in C.orbits([w], 4)) == [1, 3, 3, 3]


def test_rotation_has_no_invariant_class():
    assert C.invariant_exceptional([cases.hexagon_rotation()], None, 3) == []


def test_antipodal_sigma_pairs():
    sigma = W.reflection(L.simple_roots(3)[0])
    configs = C.invariant_exceptional([W.Isometry.identity(3)], sigma, 3)
    pairs = [c for c in configs if c.kind == "pair"]
    assert len(pairs) == 3 and len(configs) == 3
    # the conjugate classes in each pair are opposite vertices of the hexagon: disjoint
    assert all(c.classes[0].dot(c.classes[1]) == 0 for c in pairs)


def test_anticanonical_coefficients():
    assert C.orbit_anticanonical_coefficient(L.enumerate_minus_one_classes(7)) == -28
    assert C.orbit_anticanonical_coefficient(L.enumerate_minus_one_classes(3)) == -1
    assert C.orbit_anticanonical_coefficient([L.enumerate_minus_one_classes(6)[0]]) is None
    assert C.orbit_anticanonical_coefficient(L.enumerate_minus_one_classes(6)) == -9
    assert C.orbit_anticanonical_coefficient(L.enumerate_minus_one_classes(8)) == Fraction(-240)


@pytest.mark.parametrize("label", ["A2^3", "E6(a1)"])
def test_odd_minimal_orbits_are_odd(label):
    w = W.carter_representative("E6", label)
    assert W.class_invariant(w).eig1_multiplicity == 0
    assert C.invariant_exceptional([w], None, 6) == []
    assert all(len(o) % 2 == 1 and len(o) > 1 for o in C.orbits([w], 6))


def test_exports():
    g = C.build_graph(3)
    dot = g.to_dot()
    assert dot.startswith("graph") and dot.count("--") == 6
    data = g.to_json()
    assert len(data["vertices"]) == 6
