from __future__ import annotations

import random

import numpy as np
import pytest
import sympy

from cremona_lattice import cache
from cremona_lattice import lattice as L
from cremona_lattice import polynomials as P
from cremona_lattice import tables as T
from cremona_lattice import weyl as W


def sympy_factors(w: W.Isometry) -> dict[int, int]:
    t = sympy.symbols("t")
    poly = sympy.Matrix(w.on_simple_roots().tolist()).charpoly(t)
    out = {}
    for f, m in sympy.factor_list(poly.as_expr())[1]:
        for d in P.CYCLOTOMIC_INDICES:
            if sympy.expand(f - sympy.cyclotomic_poly(d, t)) == 0:
                out[d] = out.get(d, 0) + m
                break
        else:
            raise AssertionError(f"non-cyclotomic factor {f}")
    return out


def test_reflection_transposes():
    r = 4
    s = W.reflection(L.vec(r, 0, 1, -1, 0, 0))
    assert s(L.vec(r, 5, 1, 2, 3, 4)).coords == (5, 2, 1, 3, 4)


def test_reflections_are_involutions():
    assert all(W.reflection(a).power(2).is_identity() for a in L.enumerate_roots(6))


def test_reflection_charpoly_e7():
    inv = W.class_invariant(W.reflection(L.simple_roots(7)[3]))
    assert inv.charpoly_string("E7") == "p_1(t-1)^6"
    assert inv.factor_dict == {1: 6, 2: 1}


@pytest.mark.parametrize("label,order", [("A1xA2", 12), ("A4", 120), ("D5", 1920), ("E6", 51840)])
def test_group_orders(label, order):
    g = W.generate_group(label)
    assert len(g) == order == T.WEYL_ORDERS[label]


def test_e8_refused():
    with pytest.raises(W.NotEnumerable, match="carter_representative"):
        W.generate_group("E8")


def test_invalid_isometries_name_the_invariant():
    r = 3
    m = np.eye(r + 1, dtype=np.int64)
    m[0, 0] = 2
    with pytest.raises(W.InvalidIsometry, match="intersection form"):
        W.Isometry.from_array(r, m)
    m = -np.eye(r + 1, dtype=np.int64)
    with pytest.raises(W.InvalidIsometry, match="canonical class"):
        W.Isometry.from_array(r, m)
    with pytest.raises(W.InvalidIsometry, match="4x4"):
        W.Isometry.from_json({"r": 3, "matrix": [[1, 0], [0, 1]]})


def test_identity_invariant():
    inv = W.class_invariant(W.Isometry.identity(6))
    assert (inv.order, inv.trace, inv.factor_dict, inv.eig1_multiplicity) == (1, 6, {1: 6}, 6)


def test_random_spot_checks_e6():
    """1000 random group elements: valid isometries, order and spectrum agree with sympy."""
    g = W.generate_group("E6")
    idx = g.random_indices(1000, seed=3)
    spectra = g.spectra()[1]
    labels = g.spectra()[0]
    orders = g.element_orders()
    for n, i in enumerate(idx):
        w = g.isometry(int(i))
        assert W.isometry_violation(6, w.matrix) is None
        inv = W.class_invariant(w)
        assert inv.order == orders[i] == w.order()
        assert inv.factor_dict == spectra[labels[i]]
        if n < 100:
            assert inv.factor_dict == sympy_factors(w)
        assert sum(P.totient(d) * m for d, m in inv.factors) == 6
        assert inv.trace == int(np.trace(w.on_simple_roots()))


def test_perm_orders_match_lcm():
    g = W.generate_group("D5")
    _, spectra = g.spectra()
    labels = g.spectra()[0]
    orders = W.perm_orders(g.perms)
    assert all(orders[i] == P.factors_order(spectra[labels[i]]) for i in range(len(g)))


def test_class_invariant_is_class_function():
    rng = random.Random(5)
    for r in (6, 7, 8):
        w = W.random_element(r, rng)
        base = W.class_invariant(w)
        for _ in range(100 if r == 6 else 30):
            h = W.random_element(r, rng)
            assert W.class_invariant(h @ w @ h.inverse()) == base


def test_e6_classes_reproduce_table():
    g = W.generate_group("E6")
    parts = g.class_partition(T.TABLE_ORDERS["E6"])
    assert sorted((c.invariant.order, c.invariant.factors) for c in parts) == sorted(row.key for row in T.E6_TABLE)
    assert sum(c.size for c in g.class_partition()) == 51840


def test_a2_class_in_e6():
    w = W.carter_representative("E6", "A2")
    inv = W.class_invariant(w)
    assert inv.trace == 3 and inv.charpoly_string("E6") == "(t^2+t+1)(t-1)^4"


def test_primed_candidates_e7():
    inv = W.ClassInvariant.from_factors(P.as_factors("p_1^3(t-1)^4"), "E7")
    assert len(inv.labels) == 2
    assert {l.replace("'", "") for l in inv.labels} == {"(A1^3)"}


@pytest.mark.parametrize("label,factors,trace", [
    ("A2^4", {3: 4}, -4),
    ("D4^2", None, None),
])
def test_e8_representatives(label, factors, trace):
    w = W.carter_representative("E8", label)
    inv = W.class_invariant(w)
    if label == "D4^2":
        assert inv.order == 6
        assert P.from_factors(inv.factor_dict) == P.mul(P.power(P.parse("t^3+1"), 2), P.power(P.parse("t+1"), 2))
    else:
        assert inv.factor_dict == factors and inv.trace == trace


def test_a2_cubed_trace():
    assert W.class_invariant(W.carter_representative("E6", "A2^3")).trace == -3


@pytest.mark.parametrize("label", ["E6", "E7", "E8"])
def test_every_table_row_has_a_representative(label):
    rows = T.rows_for(label) + (T.E7_NO_EIG1_ORDER6 if label == "E7" else ())
    for row in rows:
        inv = W.class_invariant(W.carter_representative(label, row.label, seed=1))
        assert (inv.order, inv.factors) == row.key


def test_unknown_label():
    with pytest.raises(W.LabelNotInTable):
        W.carter_representative("E6", "A7")


@pytest.mark.parametrize("label,minus", [("A1xA2", False), ("A4", False), ("D5", False),
                                         ("E6", False), ("E7", True), ("E8", True)])
def test_longest_element(label, minus):
    w0 = W.longest_element(label)
    assert w0.power(2).is_identity()
    assert W.is_minus_identity_on_er(w0) is minus
    r = W.rank_of_type(label)
    n_pos = len(L.enumerate_roots(r)) // 2
    assert sum(1 for a in L.enumerate_roots(r) if (W.simple_root_coordinates(r, np.array([a.coords]).T) >= 0).all()
               and not (W.simple_root_coordinates(r, np.array([w0(a).coords]).T) >= 0).all()) == n_pos


def test_minus_identity_not_in_d5():
    g = W.generate_group("D5")
    minus = [i for i in g.involution_indices() if W.is_minus_identity_on_er(g.isometry(int(i)))]
    assert minus == []


def test_commuting_involutions_of_identity():
    g = W.generate_group("E6")
    got = W.commuting_involutions(W.Isometry.identity(6), g)
    assert len(got) == 1 + 36 + 270 + 540 + 45
    assert all(s.power(2).is_identity() for s in got)


def test_commuting_involutions_include_powers():
    g = W.generate_group("E6")
    w = W.carter_representative("E6", "A1xA5")
    got = set(W.commuting_involutions(w, g))
    assert w.power(3) in got and W.Isometry.identity(6) in got


def test_d5_a2_has_no_trace_minus4_twist():
    g = W.generate_group("D5")
    w = W.carter_representative("D5", "A2")
    for s in W.commuting_involutions(w, g):
        inv = W.class_invariant(w @ s)
        assert not (inv.eig1_multiplicity == 0 and inv.trace == -4)


def test_root_orbit_signature_sees_both_a1_cubed_classes():
    # products of three orthogonal reflections in W(E7) fall into two classes
    # with the same polynomial; the fixed-root count tells them apart
    rng = random.Random(0)
    roots = L.enumerate_roots(7)
    fixed_counts = set()
    for _ in range(60):
        triple = [rng.choice(roots)]
        while len(triple) < 3:
            a = rng.choice(roots)
            if all(a.dot(b) == 0 for b in triple):
                triple.append(a)
        w = W.reflection(triple[0]) @ W.reflection(triple[1]) @ W.reflection(triple[2])
        assert W.class_invariant(w).factor_dict == {1: 4, 2: 3}
        fixed_counts.add(W.root_orbit_signature(w).count(1))
    assert fixed_counts == {8, 24}


def test_json_round_trip():
    w = W.carter_representative("E6", "E6(a2)")
    assert W.Isometry.from_json(w.to_json()) == w


def test_disk_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    perms = W.generate_group("A4").perms
    path = cache.store_group("A4", perms)
    assert path is not None and path.read_bytes().startswith(b"cremona-lattice group v1 A4")
    assert np.array_equal(cache.load_group("A4"), perms)
    path.write_bytes(b"cremona-lattice group v0 A4 120 10\n")
    assert cache.load_group("A4") is None
