from __future__ import annotations

import random

import sympy

from cremona_lattice import polynomials as P


def test_cyclotomic_against_sympy():
    t = sympy.symbols("t")
    for d in range(1, 31):
        ours = P.cyclotomic(d)
        theirs = sympy.Poly(sympy.cyclotomic_poly(d, t), t).all_coeffs()[::-1]
        assert list(ours) == [int(c) for c in theirs]


def test_factor_round_trip():
    rng = random.Random(1)
    for _ in range(50):
        f = {d: rng.randint(0, 2) for d in rng.sample(P.CYCLOTOMIC_INDICES, 3)}
        f = {d: m for d, m in f.items() if m}
        if not f:
            continue
        assert P.factor_cyclotomic(P.from_factors(f)) == f


def test_charpoly_against_sympy():
    rng = random.Random(2)
    for _ in range(20):
        n = rng.randint(1, 6)
        m = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        t = sympy.symbols("t")
        theirs = sympy.Matrix(m).charpoly(t).all_coeffs()[::-1]
        assert list(P.charpoly(m)) == [int(c) for c in theirs]


def test_parse_p_notation():
    assert P.as_factors("p_1(t-1)^5") == {2: 1, 1: 5}
    assert P.as_factors("(t^2+t+1)(t^2-t+1)^2") == {3: 1, 6: 2}
    assert P.to_string(P.parse("p_2")) == "t^2+t+1"


def test_traces_and_orders():
    assert P.factors_trace({3: 4}) == -4
    assert P.factors_trace({9: 1}) == 0
    assert P.factors_order({2: 1, 3: 1}) == 6
    assert P.factors_degree({6: 2, 3: 1}) == 6
