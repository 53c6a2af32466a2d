"""Reference data: exceptional-class counts, Weyl group orders and the
conjugacy-class tables for W(E6), W(E7), W(E8).

Characteristic polynomials are kept as printed (``p_k`` = t^k + ... + 1) and
parsed on demand, so the strings here can be diffed against the source by eye.
Carter labels use ASCII: ``x`` for products, ``^`` for powers, primes kept.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import polynomials as P

# degree d -> number of (-1)-curves
MINUS_ONE_COUNTS = {1: 240, 2: 56, 3: 27, 4: 16, 5: 10, 6: 6}

# degree d -> root system type
ROOT_TYPES = {1: "E8", 2: "E7", 3: "E6", 4: "D5", 5: "A4", 6: "A1xA2"}

WEYL_ORDERS = {
    "E8": 2**14 * 3**5 * 5**2 * 7,
    "E7": 2**10 * 3**4 * 5 * 7,
    "E6": 2**7 * 3**4 * 5,
    "D5": 2**7 * 3 * 5,
    "A4": 2**3 * 3 * 5,
    "A1xA2": 12,
}

TYPE_RANK = {"A1xA2": 3, "A4": 4, "D5": 5, "E6": 6, "E7": 7, "E8": 8}
RANK_TYPE = {v: k for k, v in TYPE_RANK.items()}


@dataclass(frozen=True)
class ClassRow:
    order: int
    label: str
    charpoly: str
    trace: int | None = None

    @cached_property
    def factors(self) -> dict[int, int]:
        return P.as_factors(self.charpoly)

    @property
    def key(self) -> tuple[int, tuple[tuple[int, int], ...]]:
        return (self.order, P.factors_key(self.factors))

    @property
    def computed_trace(self) -> int:
        return P.factors_trace(self.factors)

    @property
    def base_label(self) -> str:
        """Label with primes and the enclosing parentheses removed."""
        s = self.label.replace("'", "")
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        return s


def _rows(data) -> tuple[ClassRow, ...]:
    return tuple(ClassRow(*row) for row in data)


# Elements of order 2, 3, 6 and 9 in W(E6)
E6_TABLE = _rows([
    (2, "A1", "p_1(t-1)^5", 4),
    (2, "A1^2", "p_1^2(t-1)^4", 2),
    (2, "A1^3", "p_1^3(t-1)^3", 0),
    (2, "A1^4", "p_1^4(t-1)^2", -2),
    (3, "A2", "(t^2+t+1)(t-1)^4", 3),
    (3, "A2^2", "(t^2+t+1)^2(t-1)^2", 0),
    (3, "A2^3", "(t^2+t+1)^3", -3),
    (6, "E6(a2)", "(t^2+t+1)(t^2-t+1)^2", 1),
    (6, "D4", "(t+1)(t^3+1)(t-1)^2", 1),
    (6, "A1xA5", "(t+1)(t^5+t^4+t^3+t^2+t+1)", -2),
    (6, "A1^2xA2", "(t+1)^2(t^2+t+1)(t-1)^2", -1),
    (6, "A1xA2", "(t+1)(t^2+t+1)(t-1)^3", 1),
    (6, "A1xA2^2", "(t+1)(t^2+t+1)^2(t-1)", -2),
    (6, "A5", "(t^5+t^4+t^3+t^2+t+1)(t-1)", 0),
    (9, "E6(a1)", "t^6+t^3+1", 0),
])

# Elements of order 2, 3 and 6 in W(E7)
E7_TABLE = _rows([
    (2, "A1", "p_1(t-1)^6"),
    (2, "A1^2", "p_1^2(t-1)^5"),
    (2, "(A1^3)'", "p_1^3(t-1)^4"),
    (2, "(A1^3)''", "p_1^3(t-1)^4"),
    (2, "(A1^4)'", "p_1^4(t-1)^3"),
    (2, "(A1^4)''", "p_1^4(t-1)^3"),
    (2, "A1^5", "p_1^5(t-1)^2"),
    (2, "A1^6", "p_1^6(t-1)"),
    (2, "A1^7", "p_1^7"),
    (3, "A2", "p_2(t-1)^5"),
    (3, "A2^2", "p_2^2(t-1)^3"),
    (3, "A2^3", "p_2^3(t-1)"),
    (6, "A2xA1", "p_2p_1(t-1)^4"),
    (6, "A2xA1^2", "p_2p_1^2(t-1)^3"),
    (6, "D4", "(t^3+1)(t+1)(t-1)^3"),
    (6, "A2xA1^3", "p_2p_1^3(t-1)^2"),
    (6, "A2^2xA1", "p_2^2p_1(t-1)^2"),
    (6, "(A5)'", "p_5(t-1)^2"),
    (6, "(A5)''", "p_5(t-1)^2"),
    (6, "D4xA1", "(t^3+1)(t+1)^2(t-1)^2"),
    (6, "(A5xA1)'", "p_5p_1(t-1)"),
    (6, "(A5xA1)''", "p_5p_1(t-1)"),
    (6, "D4xA1^2", "(t^3+1)(t+1)^3(t-1)"),
    (6, "D6(a2)", "(t^3+1)^2(t-1)"),
    (6, "E6(a2)", "(t^2+t+1)(t^2-t+1)^2(t-1)"),
    (6, "A5xA2", "p_5p_2"),
    (6, "D4xA1^3", "(t^3+1)(t+1)^4"),
    (6, "D6(a2)xA1", "(t^3+1)^2(t+1)"),
    (6, "E7(a4)", "(t^2-t+1)^2(t^3+1)"),
])

# Possibilities for (g o sigma)^* on a degree 2 surface: the eigenvalue-1-free
# order 6 classes of W(E7)
E7_NO_EIG1_ORDER6 = _rows([
    (6, "A5xA2", "(t^5+t^4+t^3+t^2+t+1)(t^2+t+1)", -2),
    (6, "D4xA1^3", "(t^3+1)(t+1)^4", -4),
    (6, "D6(a2)xA1", "(t^3+1)^2(t+1)", -1),
    (6, "E7(a4)", "(t^2-t+1)^2(t^3+1)", 2),
])

# Elements of order 3 in W(E8)
E8_ORDER3_TABLE = _rows([
    (3, "A2", "(t^2+t+1)(t-1)^6", 5),
    (3, "A2^2", "(t^2+t+1)^2(t-1)^4", 2),
    (3, "A2^3", "(t^2+t+1)^3(t-1)^2", -1),
    (3, "A2^4", "(t^2+t+1)^4", -4),
])

# Elements of order 6 in W(E8)
E8_ORDER6_TABLE = _rows([
    (6, "A2xA1", "p_2p_1(t-1)^5"),
    (6, "A2xA1^2", "p_2p_1^2(t-1)^4"),
    (6, "D4", "(t^3+1)(t+1)(t-1)^4"),
    (6, "A2xA1^3", "p_2p_1^3(t-1)^3"),
    (6, "A2^2xA1", "p_2^2p_1(t-1)^3"),
    (6, "A5", "p_5(t-1)^3"),
    (6, "D4xA1", "(t^3+1)(t+1)^2(t-1)^3"),
    (6, "A2xA1^4", "p_2p_1^4(t-1)^2"),
    (6, "A2^2xA1^2", "p_2^2p_1^2(t-1)^2"),
    (6, "(A5xA1)'", "p_5p_1(t-1)^2"),
    (6, "(A5xA1)''", "p_5p_1(t-1)^2"),
    (6, "D4xA1^2", "(t^3+1)(t+1)^3(t-1)^2"),
    (6, "D4xA2", "p_2(t^3+1)(t+1)(t-1)^2"),
    (6, "D6(a2)", "(t^3+1)^2(t-1)^2"),
    (6, "E6(a2)", "(t^2+t+1)(t^2-t+1)^2(t-1)^2"),
    (6, "A2^3xA1", "p_2^3p_1(t-1)"),
    (6, "A5xA1^2", "p_5p_1^2(t-1)"),
    (6, "A5xA2", "p_5p_2(t-1)"),
    (6, "D4xA1^3", "(t^3+1)(t+1)^4(t-1)"),
    (6, "D6(a2)xA1", "(t^3+1)^2(t+1)(t-1)"),
    (6, "E6(a2)xA1", "(t^2-t+1)^2(t^2+t+1)(t+1)(t-1)"),
    (6, "E7(a4)", "(t^2-t+1)^2(t^3+1)(t-1)"),
    (6, "A5xA2xA1", "p_5p_2p_1"),
    (6, "D4xA1^4", "(t^3+1)(t+1)^5"),
    (6, "D4^2", "(t^3+1)^2(t+1)^2"),
    (6, "E6(a2)xA2", "p_2(t^2-t+1)^2(t^2+t+1)"),
    (6, "E7(a4)xA1", "p_1(t^2-t+1)^2(t^3+1)"),
    (6, "E8(a8)", "(t^2-t+1)^4"),
])

# Rows that name a class without tabulating it elsewhere: the single order 3
# class of W(D5).
D5_NAMED = _rows([
    (3, "A2", "(t^2+t+1)(t-1)^3"),
])

TABLES_BY_TYPE: dict[str, tuple[ClassRow, ...]] = {
    "D5": D5_NAMED,
    "E6": E6_TABLE,
    "E7": E7_TABLE,
    "E8": E8_ORDER3_TABLE + E8_ORDER6_TABLE,
}

TABLE_ORDERS = {"E6": (2, 3, 6, 9), "E7": (2, 3, 6)}


def rows_for(type_label: str) -> tuple[ClassRow, ...]:
    return TABLES_BY_TYPE.get(type_label, ())


def labels_matching(type_label: str, order: int, factors: dict[int, int]) -> frozenset[str]:
    key = (order, P.factors_key(factors))
    return frozenset(row.label for row in rows_for(type_label) if row.key == key)


def printed_string(type_label: str, factors: dict[int, int]) -> str | None:
    """The printed form of a characteristic polynomial, if some row uses it."""
    key = P.factors_key(factors)
    for row in rows_for(type_label):
        if P.factors_key(row.factors) == key:
            return row.charpoly
    for row in E7_NO_EIG1_ORDER6 if type_label == "E7" else ():
        if P.factors_key(row.factors) == key:
            return row.charpoly
    return None
