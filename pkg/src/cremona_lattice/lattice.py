"""Picard lattice Z^{1,r} of the plane blown up in r points.

Coordinates are coefficients on the basis e0, e1, ..., er with
e0^2 = 1, ei^2 = -1 and all mixed products zero.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

MIN_R = 1
MAX_R = 8


class DegreeMismatch(ValueError):
    pass


def check_r(r: int) -> int:
    if not isinstance(r, int) or not MIN_R <= r <= MAX_R:
        raise ValueError(f"number of blown-up points must be in {MIN_R}..{MAX_R}, got {r!r}")
    return r


@dataclass(frozen=True, order=True)
class LatticeVector:
    r: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        check_r(self.r)
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != self.r + 1:
            raise ValueError(f"expected {self.r + 1} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def basis(cls, r: int, i: int) -> LatticeVector:
        return cls(r, tuple(1 if j == i else 0 for j in range(r + 1)))

    @classmethod
    def zero(cls, r: int) -> LatticeVector:
        return cls(r, (0,) * (r + 1))

    def _same(self, other: LatticeVector) -> None:
        if self.r != other.r:
            raise DegreeMismatch(f"vectors live in different lattices (r={self.r} vs r={other.r})")

    def __add__(self, other: LatticeVector) -> LatticeVector:
        self._same(other)
        return LatticeVector(self.r, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        self._same(other)
        return LatticeVector(self.r, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> LatticeVector:
        return LatticeVector(self.r, tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> LatticeVector:
        return LatticeVector(self.r, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def dot(self, other: LatticeVector) -> int:
        return intersect(self, other)

    def square(self) -> int:
        return intersect(self, self)

    def to_json(self) -> dict:
        return {"r": self.r, "coords": list(self.coords)}

    @classmethod
    def from_json(cls, data: dict | str) -> LatticeVector:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["r"]), tuple(int(c) for c in data["coords"]))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{sign}{mag}e{i}")
        if not terms:
            return "0"
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s


def intersect(u: LatticeVector, v: LatticeVector) -> int:
    """The signature-(1, r) pairing u0*v0 - sum_{i>=1} ui*vi."""
    if u.r != v.r:
        raise DegreeMismatch(f"vectors live in different lattices (r={u.r} vs r={v.r})")
    a, b = u.coords, v.coords
    return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))


def canonical_class(r: int) -> LatticeVector:
    check_r(r)
    return LatticeVector(r, (-3,) + (1,) * r)


def vec(r: int, *coords: int) -> LatticeVector:
    return LatticeVector(r, tuple(coords))


def from_terms(r: int, terms: dict[int, int]) -> LatticeVector:
    """Build a vector from a sparse {basis index: coefficient} mapping."""
    c = [0] * (r + 1)
    for i, k in terms.items():
        c[i] += k
    return LatticeVector(r, tuple(c))


# ---------------------------------------------------------------------------
# Bounded enumeration
#
# Write v = a*e0 - sum b_i e_i.  The two conditions v.K = k and v^2 = q read
#     sum b_i   = 3a + k
#     sum b_i^2 = a^2 - q
# On K-perp the form is negative definite, which here shows up as
# Cauchy-Schwarz: (3a + k)^2 <= r (a^2 - q).  This bounds a, and then every
# |b_i| <= sqrt(a^2 - q).  The scan below walks all b with the prescribed sum
# and sum of squares, pruning with the same inequality on each suffix.
# ---------------------------------------------------------------------------

def degree_bound(r: int, square: int, k_dot: int) -> tuple[int, int]:
    """Integer range of the e0-coefficient a for v^2 = square, v.K = k_dot."""
    # (9 - r) a^2 + 6 k a + k^2 + r*square <= 0
    A, B, C = 9 - r, 6 * k_dot, k_dot * k_dot + r * square
    disc = B * B - 4 * A * C
    if disc < 0:
        return (0, -1)
    root = math.isqrt(disc) + 1
    lo = math.floor((-B - root) / (2 * A)) - 1
    hi = math.ceil((-B + root) / (2 * A)) + 1
    return lo, hi


def _fill(n: int, total: int, squares: int, bound: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        if total == 0 and squares == 0:
            yield ()
        return
    # remaining n entries need total^2 <= n * squares
    if squares < 0 or total * total > n * squares:
        return
    for b in range(-bound, bound + 1):
        rest = squares - b * b
        if rest < 0:
            continue
        for tail in _fill(n - 1, total - b, rest, bound):
            yield (b,) + tail


def scan_classes(r: int, square: int, k_dot: int) -> list[LatticeVector]:
    """All v with v^2 = square and v.K = k_dot, in lexicographic order."""
    check_r(r)
    out = []
    lo, hi = degree_bound(r, square, k_dot)
    for a in range(lo, hi + 1):
        squares = a * a - square
        if squares < 0:
            continue
        bound = math.isqrt(squares)
        for b in _fill(r, 3 * a + k_dot, squares, bound):
            out.append(LatticeVector(r, (a,) + tuple(-x for x in b)))
    out.sort()
    return out


@lru_cache(maxsize=None)
def enumerate_roots(r: int) -> tuple[LatticeVector, ...]:
    """The root system: s^2 = -2 and s.K = 0."""
    return tuple(scan_classes(r, -2, 0))


@lru_cache(maxsize=None)
def enumerate_minus_one_classes(r: int) -> tuple[LatticeVector, ...]:
    """Classes with v^2 = -1 and v.K = -1 (the exceptional classes)."""
    return tuple(scan_classes(r, -1, -1))


@lru_cache(maxsize=None)
def simple_roots(r: int) -> tuple[LatticeVector, ...]:
    """alpha_1 = e0 - e1 - e2 - e3 and alpha_i = e_{i-1} - e_i for 2 <= i <= r."""
    check_r(r)
    if r < 3:
        raise ValueError("simple roots are only defined for r >= 3")
    alphas = [from_terms(r, {0: 1, 1: -1, 2: -1, 3: -1})]
    for i in range(2, r + 1):
        alphas.append(from_terms(r, {i - 1: 1, i: -1}))
    return tuple(alphas)


def gram(vectors: Sequence[LatticeVector]) -> list[list[int]]:
    return [[intersect(u, v) for v in vectors] for u in vectors]


def cartan_matrix(r: int) -> list[list[int]]:
    """(-alpha_i . alpha_j) for the standard simple roots."""
    return [[-x for x in row] for row in gram(simple_roots(r))]


ROOT_SYSTEM_TYPE = {3: "A1xA2", 4: "A4", 5: "D5", 6: "E6", 7: "E7", 8: "E8"}


def dynkin_type(cartan: Sequence[Sequence[int]]) -> str:
    """Identify a simply-laced Cartan matrix as a product of A/D/E types.

    Components are listed by decreasing rank, ties broken by family letter,
    e.g. ``"A2xA1"``; ``"A1xA2"`` is normalised to ``"A2xA1"``.
    """
    n = len(cartan)
    for i in range(n):
        if cartan[i][i] != 2:
            raise ValueError("diagonal entries of a Cartan matrix must be 2")
        for j in range(n):
            if i != j and cartan[i][j] not in (0, -1):
                raise ValueError("not a simply-laced Cartan matrix")
            if cartan[i][j] != cartan[j][i]:
                raise ValueError("Cartan matrix is not symmetric")
    adj = {i: [j for j in range(n) if j != i and cartan[i][j] == -1] for i in range(n)}
    seen: set[int] = set()
    comps = []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(_component_type(comp, adj))
    comps.sort(key=lambda t: (-int(t[1:]), t[0]))
    return "x".join(comps)


def _component_type(nodes: list[int], adj: dict[int, list[int]]) -> str:
    n = len(nodes)
    edges = sum(len(adj[v]) for v in nodes) // 2
    if edges != n - 1:
        raise ValueError("Dynkin diagram contains a cycle")
    degrees = {v: len(adj[v]) for v in nodes}
    branch = [v for v in nodes if degrees[v] >= 3]
    if not branch:
        return f"A{n}"
    if len(branch) > 1 or degrees[branch[0]] > 3:
        raise ValueError("not a Dynkin diagram of type A, D or E")
    centre = branch[0]
    arms = []
    for start in adj[centre]:
        length, prev, cur = 1, centre, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{n}"
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return f"E{n}"
    raise ValueError(f"arm lengths {arms} do not give a finite Dynkin type")


def canonical_type_label(label: str) -> str:
    """Normalise a product label like ``A1xA2`` to :func:`dynkin_type` order."""
    parts = label.split("x")
    parts.sort(key=lambda t: (-int(t[1:]), t[0]))
    return "x".join(parts)


def dumps(vectors: Iterable[LatticeVector]) -> str:
    return json.dumps([v.to_json() for v in sorted(vectors)])
