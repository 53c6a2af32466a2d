"""Incidence graphs of (-1)-classes and group orbits on them."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import lattice as L
from .lattice import LatticeVector
from .weyl import InvalidIsometry, Isometry, line_index


@dataclass(frozen=True)
class IncidenceGraph:
    r: int
    vertices: tuple[LatticeVector, ...]
    pairing: np.ndarray  # full intersection matrix, diagonal -1

    @property
    def adjacency(self) -> np.ndarray:
        return self.pairing == 1

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbours(self, i: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.adjacency[i])]

    def degrees(self) -> list[int]:
        return [int(x) for x in self.adjacency.sum(axis=1)]

    def edges(self) -> list[tuple[int, int]]:
        a = self.adjacency
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if a[i, j]]

    def girth(self) -> int | None:
        best = None
        for s in range(self.n):
            dist = {s: 0}
            parent = {s: -1}
            q = deque([s])
            while q:
                v = q.popleft()
                for w in self.neighbours(v):
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        parent[w] = v
                        q.append(w)
                    elif parent[v] != w:
                        cyc = dist[v] + dist[w] + 1
                        best = cyc if best is None else min(best, cyc)
        return best

    def is_single_cycle(self) -> bool:
        if any(d != 2 for d in self.degrees()):
            return False
        return len(connected_parts(self.n, self.edges())) == 1

    def automorphisms(self, limit: int | None = None) -> list[tuple[int, ...]]:
        """All adjacency-preserving vertex permutations, by backtracking."""
        adj = self.adjacency
        n = self.n
        found: list[tuple[int, ...]] = []
        image = [-1] * n
        used = [False] * n
        deg = self.degrees()

        def extend(k: int) -> bool:
            if k == n:
                found.append(tuple(image))
                return limit is not None and len(found) >= limit
            for c in range(n):
                if used[c] or deg[c] != deg[k]:
                    continue
                if all(adj[k, j] == adj[c, image[j]] for j in range(k)):
                    image[k], used[c] = c, True
                    if extend(k + 1):
                        return True
                    image[k], used[c] = -1, False
            return False

        extend(0)
        return found

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "vertices": [v.to_json()["coords"] for v in self.vertices],
            "adjacency": {str(i): self.neighbours(i) for i in range(self.n)},
        }

    def to_dot(self) -> str:
        lines = [f"graph minus_one_classes_r{self.r} {{"]
        for i, v in enumerate(self.vertices):
            lines.append(f'  {i} [label="{v}"];')
        for i, j in self.edges():
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines)


def connected_parts(n: int, edges: Sequence[tuple[int, int]]) -> list[list[int]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


@lru_cache(maxsize=None)
def build_graph(r: int) -> IncidenceGraph:
    verts = L.enumerate_minus_one_classes(r)
    C = np.array([v.coords for v in verts], dtype=np.int64)
    J = np.diag([1] + [-1] * r)
    pairing = C @ J @ C.T
    off = pairing[~np.eye(len(verts), dtype=bool)]
    # distinct classes meet with multiplicity at most 1 up to r = 6; on r = 7
    # and r = 8 the pairs E, -K-E and E, -2K-E meet in 2 and 3
    max_meet = {7: 2, 8: 3}.get(r, 1)
    assert off.size == 0 or (off.min() >= 0 and off.max() <= max_meet)
    pairing.setflags(write=False)
    return IncidenceGraph(r, verts, pairing)


def _perm(w: Isometry) -> list[int]:
    try:
        return line_index(w.r).perm_of(w).tolist()
    except InvalidIsometry:
        raise ValueError("isometry does not permute the (-1)-classes") from None


def orbits(action: Sequence[Isometry], r: int) -> list[list[LatticeVector]]:
    """Orbits of the generated group on the (-1)-classes, by permutation images."""
    verts = L.enumerate_minus_one_classes(r)
    edges = []
    for g in action:
        if g.r != r:
            raise L.DegreeMismatch("generator acts on a different lattice")
        edges.extend((i, j) for i, j in enumerate(_perm(g)))
    parts = connected_parts(len(verts), edges)
    parts.sort(key=lambda p: (len(p), p))
    return [[verts[i] for i in p] for p in parts]


@dataclass(frozen=True)
class Configuration:
    kind: str  # "single" or "pair"
    classes: tuple[LatticeVector, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "classes": [list(v.coords) for v in self.classes]}


def invariant_exceptional(action: Sequence[Isometry], sigma: Isometry | None, r: int) -> list[Configuration]:
    """Invariant single (-1)-classes and, given sigma, invariant pairs
    {L, sigma L} of disjoint conjugate classes.

    With sigma present, a single class counts only if sigma fixes it too
    (it is then defined over the reals).
    """
    verts = L.enumerate_minus_one_classes(r)
    perms = [_perm(g) for g in action]
    sp = None
    if sigma is not None:
        if not sigma.power(2).is_identity():
            raise ValueError("sigma is not an involution")
        sp = _perm(sigma)
    everything = perms + ([sp] if sp is not None else [])
    out = []
    for i, v in enumerate(verts):
        if all(p[i] == i for p in everything):
            out.append(Configuration("single", (v,)))
    if sp is not None:
        for i, v in enumerate(verts):
            j = sp[i]
            if j <= i or v.dot(verts[j]) != 0:
                continue
            pair = {i, j}
            if all({p[i], p[j]} == pair for p in perms):
                out.append(Configuration("pair", (v, verts[j])))
    return out


def orbit_anticanonical_coefficient(orbit: Sequence[LatticeVector]) -> Fraction | None:
    """The a with sum(orbit) = a K, or None if the sum is not a multiple of K."""
    if not orbit:
        raise ValueError("orbit must be nonempty")
    r = orbit[0].r
    total = LatticeVector.zero(r)
    for v in orbit:
        total = total + v
    K = L.canonical_class(r)
    a = Fraction(total.dot(K), K.square())
    if any(Fraction(t) != a * k for t, k in zip(total.coords, K.coords)):
        return None
    return a


def graph_json(r: int) -> str:
    return json.dumps(build_graph(r).to_json())
