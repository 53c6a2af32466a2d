"""Weyl groups W(E_r) acting on Z^{1,r}.

Elements are integer isometries fixing K.  For whole-group work they are
stored instead as permutations of the (-1)-classes: the action on those
classes is faithful, a permutation is a short byte string, and composition
is fancy indexing.  An element is determined by the images of e_1..e_r (the
image of e_0 is (sum w(e_i) - K) / 3), which gives a compact integer key.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import lattice as L
from . import polynomials as P
from . import tables as T
from .lattice import LatticeVector

ORDER_CAP = 30
ENUMERABLE = ("A1xA2", "A4", "D5", "E6", "E7")


class InvalidIsometry(ValueError):
    pass


class OrderCapExceeded(ArithmeticError):
    pass


class NotEnumerable(ValueError):
    pass


class LabelNotInTable(KeyError):
    pass


class SearchExhausted(RuntimeError):
    pass


def form_matrix(r: int) -> np.ndarray:
    return np.diag([1] + [-1] * r).astype(np.int64)


# ---------------------------------------------------------------------------
# Isometries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Isometry:
    r: int
    matrix: tuple[tuple[int, ...], ...]
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self) -> None:
        L.check_r(self.r)
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        if self.check:
            problem = isometry_violation(self.r, m)
            if problem:
                raise InvalidIsometry(problem)

    @classmethod
    def from_array(cls, r: int, a, check: bool = True) -> Isometry:
        return cls(r, tuple(map(tuple, np.asarray(a).tolist())), check)

    @classmethod
    def identity(cls, r: int) -> Isometry:
        return cls.from_array(r, np.eye(r + 1, dtype=np.int64), check=False)

    @classmethod
    def from_images(cls, images: Sequence[LatticeVector]) -> Isometry:
        """Columns are the images of e_0, ..., e_r."""
        r = images[0].r
        cols = np.array([v.coords for v in images], dtype=np.int64).T
        return cls.from_array(r, cols)

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array(self.matrix, dtype=np.int64)
        a.setflags(write=False)
        return a

    def __matmul__(self, other: Isometry) -> Isometry:
        """Composition: (self @ other)(x) = self(other(x))."""
        if self.r != other.r:
            raise L.DegreeMismatch("isometries act on different lattices")
        return Isometry.from_array(self.r, self.array @ other.array, check=False)

    def __call__(self, v: LatticeVector) -> LatticeVector:
        return self.apply(v)

    def apply(self, v: LatticeVector) -> LatticeVector:
        if v.r != self.r:
            raise L.DegreeMismatch("vector and isometry live in different lattices")
        return LatticeVector(self.r, tuple((self.array @ np.array(v.coords, dtype=np.int64)).tolist()))

    def inverse(self) -> Isometry:
        J = form_matrix(self.r)
        return Isometry.from_array(self.r, J @ self.array.T @ J, check=False)

    def power(self, k: int) -> Isometry:
        if k < 0:
            return self.inverse().power(-k)
        out = np.eye(self.r + 1, dtype=np.int64)
        base = self.array
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return Isometry.from_array(self.r, out, check=False)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.array, np.eye(self.r + 1, dtype=np.int64)))

    def order(self, cap: int = ORDER_CAP) -> int:
        """Smallest n >= 1 with w^n = id, by iterated multiplication."""
        cur = self.array
        eye = np.eye(self.r + 1, dtype=np.int64)
        for n in range(1, cap + 1):
            if np.array_equal(cur, eye):
                return n
            cur = cur @ self.array
        raise OrderCapExceeded(f"order exceeds {cap}; the input is not of finite order")

    def on_simple_roots(self) -> np.ndarray:
        """Matrix of the restriction to E_r in the basis of simple roots."""
        return restrict_to_er(self.r, self.array)

    def trace_er(self) -> int:
        return int(np.trace(self.array)) - 1

    def to_json(self) -> dict:
        return {"r": self.r, "matrix": [list(row) for row in self.matrix]}

    @classmethod
    def from_json(cls, data: dict | str) -> Isometry:
        if isinstance(data, str):
            data = json.loads(data)
        r = int(data["r"])
        m = data["matrix"]
        if len(m) != r + 1 or any(len(row) != r + 1 for row in m):
            raise InvalidIsometry(f"matrix must be {r + 1}x{r + 1}")
        return cls(r, tuple(tuple(int(x) for x in row) for row in m))

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{x:3d}" for x in row) for row in self.matrix)


def isometry_violation(r: int, m) -> str | None:
    """Name the first violated invariant, or None."""
    a = np.array(m, dtype=np.int64)
    if a.shape != (r + 1, r + 1):
        return f"matrix must be {r + 1}x{r + 1}, got {a.shape[0]}x{a.shape[1] if a.ndim == 2 else '?'}"
    J = form_matrix(r)
    if not np.array_equal(a.T @ J @ a, J):
        return "matrix does not preserve the intersection form"
    K = np.array(L.canonical_class(r).coords, dtype=np.int64)
    if not np.array_equal(a @ K, K):
        return "matrix does not fix the canonical class"
    return None


def reflection(alpha: LatticeVector) -> Isometry:
    """x -> x + (x.alpha) alpha, the reflection in a root."""
    if alpha.square() != -2 or alpha.dot(L.canonical_class(alpha.r)) != 0:
        raise ValueError(f"{alpha} is not a root (need square -2 and orthogonal to K)")
    a = np.array(alpha.coords, dtype=np.int64)
    J = form_matrix(alpha.r)
    m = np.eye(alpha.r + 1, dtype=np.int64) + np.outer(a, J @ a)
    return Isometry.from_array(alpha.r, m, check=False)


def simple_reflections(r: int) -> list[Isometry]:
    return [reflection(a) for a in L.simple_roots(r)]


@lru_cache(maxsize=None)
def _simple_root_columns(r: int) -> np.ndarray:
    return np.array([a.coords for a in L.simple_roots(r)], dtype=np.int64).T


@lru_cache(maxsize=None)
def _gram_inverse(r: int) -> np.ndarray:
    A = _simple_root_columns(r)
    G = A.T @ form_matrix(r) @ A
    return np.linalg.inv(G.astype(float))


def simple_root_coordinates(r: int, vectors: np.ndarray) -> np.ndarray:
    """Coordinates of vectors in K-perp (columns) on the simple roots; exact."""
    A = _simple_root_columns(r)
    rhs = A.T @ form_matrix(r) @ vectors
    c = np.rint(_gram_inverse(r) @ rhs).astype(np.int64)
    if not np.array_equal(A @ c, vectors):
        raise ValueError("vector is not in the root lattice")
    return c


def restrict_to_er(r: int, m: np.ndarray) -> np.ndarray:
    return simple_root_coordinates(r, m @ _simple_root_columns(r))


def type_of_rank(r: int) -> str:
    if r not in T.RANK_TYPE:
        raise ValueError(f"no Weyl group type for r={r}")
    return T.RANK_TYPE[r]


def rank_of_type(type_label: str) -> int:
    canon = {L.canonical_type_label(k): v for k, v in T.TYPE_RANK.items()}
    key = L.canonical_type_label(type_label)
    if key not in canon:
        raise ValueError(f"unknown type {type_label!r}; expected one of {sorted(T.TYPE_RANK)}")
    return canon[key]


# ---------------------------------------------------------------------------
# Class invariants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassInvariant:
    order: int
    factors: tuple[tuple[int, int], ...]  # (cyclotomic index d, multiplicity)
    trace: int
    labels: frozenset[str] = frozenset()

    @property
    def factor_dict(self) -> dict[int, int]:
        return dict(self.factors)

    @property
    def degree(self) -> int:
        return P.factors_degree(self.factor_dict)

    @property
    def eig1_multiplicity(self) -> int:
        return self.factor_dict.get(1, 0)

    @property
    def charpoly(self) -> P.IntPoly:
        return P.from_factors(self.factor_dict)

    def charpoly_string(self, type_label: str | None = None) -> str:
        if type_label:
            printed = T.printed_string(type_label, self.factor_dict)
            if printed:
                return printed
        return P.factors_to_string(self.factor_dict)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "charpoly": [[d, m] for d, m in self.factors],
            "trace": self.trace,
            "labels": sorted(self.labels),
        }

    @classmethod
    def from_factors(cls, factors: dict[int, int], type_label: str | None = None) -> ClassInvariant:
        order = P.factors_order(factors)
        labels = T.labels_matching(type_label, order, factors) if type_label else frozenset()
        return cls(order, P.factors_key(factors), P.factors_trace(factors), labels)

    @classmethod
    def from_row(cls, row: T.ClassRow, type_label: str) -> ClassInvariant:
        return cls.from_factors(row.factors, type_label)


def class_invariant(w: Isometry, cap: int = ORDER_CAP) -> ClassInvariant:
    order = w.order(cap)
    R = w.on_simple_roots()
    poly = P.charpoly(R.tolist())
    factors = P.factor_cyclotomic(poly)
    if P.factors_order(factors) != order:
        raise ArithmeticError("order disagrees with the spectrum")
    trace = int(np.trace(R))
    assert trace == P.factors_trace(factors)
    labels = T.labels_matching(T.RANK_TYPE[w.r], order, factors) if w.r in T.RANK_TYPE else frozenset()
    return ClassInvariant(order, P.factors_key(factors), trace, labels)


def is_minus_identity_on_er(w: Isometry) -> bool:
    return bool(np.array_equal(w.on_simple_roots(), -np.eye(w.r, dtype=np.int64)))


# ---------------------------------------------------------------------------
# Longest element
# ---------------------------------------------------------------------------

def longest_element(type_label: str) -> Isometry:
    """Greedy: while some simple root stays positive under w, replace w by w s_i."""
    r = rank_of_type(type_label)
    gens = simple_reflections(r)
    w = Isometry.identity(r)
    A = _simple_root_columns(r)
    for _ in range(len(L.enumerate_roots(r)) // 2 + 1):
        images = simple_root_coordinates(r, w.array @ A)
        positive = [i for i in range(r) if (images[:, i] >= 0).all()]
        if not positive:
            return w
        w = w @ gens[positive[0]]
    raise AssertionError("descent did not terminate")


def root_orbit_signature(w: Isometry) -> tuple[int, ...]:
    """Sorted orbit sizes of <w> on the roots.

    A heuristic for telling apart primed classes with equal characteristic
    polynomial; it is not a proven class invariant separator.
    """
    roots = L.enumerate_roots(w.r)
    index = {v: i for i, v in enumerate(roots)}
    perm = [index[w(v)] for v in roots]
    return _cycle_type(perm)


def _cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    sizes = []
    for i in range(len(perm)):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                n += 1
            sizes.append(n)
    return tuple(sorted(sizes))


# ---------------------------------------------------------------------------
# Permutation model
# ---------------------------------------------------------------------------

class LineIndex:
    """The (-1)-classes of Z^{1,r} with helpers to pass between isometries
    and permutations of them."""

    def __init__(self, r: int) -> None:
        self.r = r
        self.lines = L.enumerate_minus_one_classes(r)
        self.n = len(self.lines)
        self.index = {v: i for i, v in enumerate(self.lines)}
        self.coords = np.array([v.coords for v in self.lines], dtype=np.int64)
        self.e_idx = np.array([self.index[LatticeVector.basis(r, i)] for i in range(1, r + 1)])
        self.bits = max(1, (self.n - 1).bit_length())
        if self.bits * r > 64:
            raise NotEnumerable("permutation keys do not fit in 64 bits")
        self.shifts = np.array([self.bits * j for j in range(r)], dtype=np.uint64)

    def perm_of(self, w: Isometry) -> np.ndarray:
        images = self.coords @ w.array.T
        try:
            return np.array([self.index[LatticeVector(self.r, tuple(row))] for row in images.tolist()],
                            dtype=np.uint8)
        except KeyError:
            raise InvalidIsometry("matrix does not permute the (-1)-classes") from None

    def images_of_basis(self, perms: np.ndarray) -> np.ndarray:
        """Array (N, r+1, r+1) of matrices: column j is the image of e_j."""
        perms = np.atleast_2d(perms)
        ei = self.coords[perms[:, self.e_idx]]  # (N, r, r+1)
        K = np.array(L.canonical_class(self.r).coords, dtype=np.int64)
        e0 = (ei.sum(axis=1) - K) // 3
        cols = np.concatenate([e0[:, None, :], ei], axis=1)  # (N, r+1 columns, r+1 coords)
        return np.transpose(cols, (0, 2, 1))

    def isometry_of(self, perm: np.ndarray) -> Isometry:
        return Isometry.from_array(self.r, self.images_of_basis(perm)[0], check=False)

    def keys(self, perms: np.ndarray) -> np.ndarray:
        perms = np.atleast_2d(perms)
        sel = perms[:, self.e_idx].astype(np.uint64)
        return np.bitwise_or.reduce(sel << self.shifts, axis=1)

    def pic_traces(self, perms: np.ndarray) -> np.ndarray:
        """Trace on Pic of each permutation's isometry."""
        sel = perms[:, self.e_idx]
        c0 = self.coords[:, 0][sel].sum(axis=1)
        diag = sum(self.coords[:, i + 1][sel[:, i]] for i in range(self.r))
        return (c0 + 3) // 3 + diag

    def identity_perm(self) -> np.ndarray:
        return np.arange(self.n, dtype=np.uint8)


@lru_cache(maxsize=None)
def line_index(r: int) -> LineIndex:
    return LineIndex(r)


def compose_perms(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise a o b (apply b first)."""
    a2, b2 = np.atleast_2d(a), np.atleast_2d(b)
    if a2.shape[0] == 1 and b2.shape[0] > 1:
        return a2[0][b2]
    return np.take_along_axis(a2, b2.astype(np.intp), axis=1)


def _power_traces(idx: LineIndex, perms: np.ndarray, upto: int, chunk: int = 250_000) -> np.ndarray:
    """tr_{E_r}(w^k) for k = 1..upto, shape (N, upto)."""
    out = np.empty((len(perms), upto), dtype=np.int64)
    for s in range(0, len(perms), chunk):
        block = perms[s:s + chunk]
        cur = block
        for k in range(upto):
            out[s:s + len(block), k] = idx.pic_traces(cur) - 1
            if k + 1 < upto:
                cur = np.take_along_axis(block, cur.astype(np.intp), axis=1)
    return out


def spectra_of_perms(r: int, perms: np.ndarray) -> tuple[np.ndarray, list[dict[int, int]]]:
    """Group elements by characteristic polynomial on E_r.

    Returns (labels, factors): labels[i] indexes into factors.
    """
    idx = line_index(r)
    traces = _power_traces(idx, perms, r)
    uniq, inverse = np.unique(traces, axis=0, return_inverse=True)
    factors = [P.factor_cyclotomic(P.charpoly_from_power_traces(row.tolist(), r)) for row in uniq]
    return inverse.reshape(-1), factors


def perm_orders(perms: np.ndarray, cap: int = ORDER_CAP) -> np.ndarray:
    """Order of each permutation by powering (independent of spectra)."""
    n = perms.shape[1]
    ident = np.arange(n, dtype=perms.dtype)
    orders = np.zeros(len(perms), dtype=np.int64)
    cur = perms.copy()
    for k in range(1, cap + 1):
        done = (orders == 0) & (cur == ident).all(axis=1)
        orders[done] = k
        if (orders > 0).all():
            return orders
        cur = np.take_along_axis(perms, cur.astype(np.intp), axis=1)
    raise OrderCapExceeded(f"some permutation has order > {cap}")


# ---------------------------------------------------------------------------
# Whole groups
# ---------------------------------------------------------------------------

def bfs_closure(r: int, generators: Sequence[np.ndarray], cap: int | None = None) -> np.ndarray:
    """All products of the generators, as permutations, in BFS order."""
    idx = line_index(r)
    ident = idx.identity_perm()[None]
    gens = [np.asarray(g, dtype=np.uint8) for g in generators]
    chunks = [ident]
    visited = idx.keys(ident)
    frontier = ident
    total = 1
    while len(frontier):
        cand = np.concatenate([g[frontier] for g in gens]) if gens else frontier[:0]
        k = idx.keys(cand)
        k, first = np.unique(k, return_index=True)
        cand = cand[first]
        new = ~np.isin(k, visited, assume_unique=True)
        frontier = cand[new]
        visited = np.union1d(visited, k[new])
        chunks.append(frontier)
        total += len(frontier)
        if cap is not None and total > cap:
            raise OrderCapExceeded(f"group has more than {cap} elements")
    return np.concatenate(chunks)


@dataclass
class ClassSummary:
    invariant: ClassInvariant
    size: int
    representative: int  # index into the group table

    def to_json(self) -> dict:
        return {**self.invariant.to_json(), "size": self.size}


class GroupTable:
    """A whole Weyl group, stored as permutations of the (-1)-classes."""

    def __init__(self, type_label: str, perms: np.ndarray) -> None:
        self.type_label = type_label
        self.r = rank_of_type(type_label)
        self.lines = line_index(self.r)
        self.perms = perms
        keys = self.lines.keys(perms)
        self._sort = np.argsort(keys, kind="stable")
        self._sorted_keys = keys[self._sort]
        self._spectra: tuple[np.ndarray, list[dict[int, int]]] | None = None
        self._orders: np.ndarray | None = None
        self._partitions: dict[tuple[int, ...] | None, list[ClassSummary]] = {}

    def __len__(self) -> int:
        return len(self.perms)

    @property
    def order(self) -> int:
        return len(self.perms)

    def isometry(self, i: int) -> Isometry:
        return self.lines.isometry_of(self.perms[i])

    def locate(self, perms: np.ndarray) -> np.ndarray:
        """Indices of the given permutations, -1 where absent."""
        k = self.lines.keys(perms)
        pos = np.searchsorted(self._sorted_keys, k)
        pos = np.minimum(pos, len(self._sorted_keys) - 1)
        found = self._sorted_keys[pos] == k
        return np.where(found, self._sort[pos], -1)

    def index_of(self, w: Isometry) -> int:
        i = int(self.locate(self.lines.perm_of(w)[None])[0])
        if i < 0:
            raise KeyError("element is not in the group")
        return i

    def __contains__(self, w: Isometry) -> bool:
        try:
            self.index_of(w)
        except (KeyError, InvalidIsometry):
            return False
        return True

    def spectra(self) -> tuple[np.ndarray, list[dict[int, int]]]:
        if self._spectra is None:
            self._spectra = spectra_of_perms(self.r, self.perms)
        return self._spectra

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            labels, factors = self.spectra()
            per_poly = np.array([P.factors_order(f) for f in factors], dtype=np.int64)
            self._orders = per_poly[labels]
        return self._orders

    def inventory(self, orders: Iterable[int] | None = None) -> dict[ClassInvariant, int]:
        """(order, characteristic polynomial) -> number of elements."""
        labels, factors = self.spectra()
        counts = np.bincount(labels, minlength=len(factors))
        out = {}
        wanted = set(orders) if orders is not None else None
        for j, f in enumerate(factors):
            inv = ClassInvariant.from_factors(f, self.type_label)
            if wanted is None or inv.order in wanted:
                out[inv] = int(counts[j])
        return dict(sorted(out.items(), key=lambda kv: (kv[0].order, kv[0].factors)))

    def class_partition(self, orders: Iterable[int] | None = None) -> list[ClassSummary]:
        """Conjugacy classes among elements of the given orders.

        Classes are the connected components of the graph w -- s w s over
        simple reflections s.
        """
        from scipy.sparse import coo_matrix
        from scipy.sparse.csgraph import connected_components

        key = tuple(sorted(set(orders))) if orders is not None else None
        if key in self._partitions:
            return self._partitions[key]
        sel = np.arange(len(self)) if key is None else np.flatnonzero(np.isin(self.element_orders(), key))
        sub = self.perms[sel]
        sub_keys = self.lines.keys(sub)
        order_in_sub = np.argsort(sub_keys)
        sorted_sub = sub_keys[order_in_sub]
        rows, cols = [], []
        for s in simple_reflections(self.r):
            sp = self.lines.perm_of(s)
            conj = sp[sub[:, sp]]  # s o w o s
            k = self.lines.keys(conj)
            pos = np.searchsorted(sorted_sub, k)
            if not np.array_equal(sorted_sub[np.minimum(pos, len(sorted_sub) - 1)], k):
                raise AssertionError("order filter is not closed under conjugation")
            rows.append(np.arange(len(sub)))
            cols.append(order_in_sub[pos])
        n = len(sub)
        graph = coo_matrix((np.ones(n * len(rows), dtype=np.int8),
                            (np.concatenate(rows), np.concatenate(cols))), shape=(n, n))
        ncomp, comp = connected_components(graph, directed=False)
        labels, factors = self.spectra()
        sizes = np.bincount(comp, minlength=ncomp)
        first = np.full(ncomp, -1)
        # first occurrence of each component
        uniq, idx_first = np.unique(comp, return_index=True)
        first[uniq] = idx_first
        out = []
        for c in range(ncomp):
            i = int(sel[first[c]])
            inv = ClassInvariant.from_factors(factors[labels[i]], self.type_label)
            out.append(ClassSummary(inv, int(sizes[c]), i))
        out.sort(key=lambda cs: (cs.invariant.order, cs.invariant.factors, cs.size))
        self._partitions[key] = out
        return out

    def involution_indices(self) -> np.ndarray:
        ident = self.lines.identity_perm()
        sq = np.take_along_axis(self.perms, self.perms.astype(np.intp), axis=1)
        return np.flatnonzero((sq == ident).all(axis=1))

    def commuting_involutions(self, w: Isometry) -> list[Isometry]:
        return [self.isometry(int(i)) for i in self.commuting_involution_indices(w)]

    def commuting_involution_indices(self, w: Isometry) -> np.ndarray:
        self.index_of(w)  # raises if w is not in the group
        wp = self.lines.perm_of(w)
        inv = self.involution_indices()
        S = self.perms[inv]
        sw = S[:, wp]  # s o w
        ws = wp[S]  # w o s
        return inv[(sw == ws).all(axis=1)]

    def random_indices(self, n: int, seed: int = 0) -> np.ndarray:
        rng = np.random.default_rng(seed)
        return rng.integers(0, len(self), size=n)


def commuting_involutions(w: Isometry, table: GroupTable) -> list[Isometry]:
    """All s in the table with s^2 = 1 and s w = w s (identity included)."""
    return table.commuting_involutions(w)


_GROUP_CACHE: dict[str, GroupTable] = {}


def generate_group(type_label: str, use_disk_cache: bool = True) -> GroupTable:
    """Closure of the simple reflections for A1xA2, A4, D5, E6, E7."""
    r = rank_of_type(type_label)
    label = T.RANK_TYPE[r]
    if label == "E8":
        raise NotEnumerable(
            "W(E8) is not enumerable at desk scale (696729600 elements); "
            "use carter_representative to build elements of a given class")
    if label in _GROUP_CACHE:
        return _GROUP_CACHE[label]
    from . import cache

    perms = cache.load_group(label) if use_disk_cache else None
    if perms is None:
        idx = line_index(r)
        perms = bfs_closure(r, [idx.perm_of(s) for s in simple_reflections(r)])
        if use_disk_cache:
            cache.store_group(label, perms)
    table = GroupTable(label, perms)
    _GROUP_CACHE[label] = table
    return table


# ---------------------------------------------------------------------------
# Random elements and class representatives
# ---------------------------------------------------------------------------

def random_element(r: int, rng: random.Random, length: int | None = None,
                   roots: Sequence[LatticeVector] | None = None) -> Isometry:
    """Product of random reflections (from `roots`, default all of Delta_r)."""
    roots = list(roots) if roots is not None else list(L.enumerate_roots(r))
    if length is None:
        length = rng.randint(r, 4 * r)
    m = np.eye(r + 1, dtype=np.int64)
    for _ in range(length):
        m = m @ reflection(rng.choice(roots)).array
    return Isometry.from_array(r, m, check=False)


@dataclass(frozen=True)
class Component:
    letter: str
    n: int
    variant: str | None = None  # e.g. "a2" for D6(a2)

    @property
    def label(self) -> str:
        return f"{self.letter}{self.n}" + (f"({self.variant})" if self.variant else "")

    def factors(self) -> dict[int, int]:
        return _component_factors(self)


def _tpow_plus_one(k: int) -> dict[int, int]:
    return P.factor_cyclotomic((1,) + (0,) * (k - 1) + (1,))


def _merge(*fs: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for f in fs:
        for d, m in f.items():
            out[d] = out.get(d, 0) + m
    return out


def _component_factors(c: Component) -> dict[int, int]:
    if c.letter == "A" and c.variant is None:
        return {d: 1 for d in range(2, c.n + 2) if (c.n + 1) % d == 0}
    if c.letter == "D" and c.variant is None:
        return _merge(_tpow_plus_one(c.n - 1), {2: 1})
    if c.letter == "D" and c.variant:
        k = int(c.variant[1:])
        return _merge(_tpow_plus_one(c.n - k - 1), _tpow_plus_one(k + 1))
    known = {
        ("E", 6, None): {3: 1, 12: 1},
        ("E", 7, None): {2: 1, 18: 1},
        ("E", 8, None): {30: 1},
        ("E", 6, "a1"): {9: 1},
        ("E", 6, "a2"): {3: 1, 6: 2},
        ("E", 7, "a4"): {2: 1, 6: 3},
        ("E", 8, "a8"): {6: 4},
    }
    key = (c.letter, c.n, c.variant)
    if key not in known:
        raise ValueError(f"unsupported Carter component {c.label}")
    return dict(known[key])


# powers of the Coxeter element that land in the named class
_COXETER_POWERS = {("E", 6, "a2"): 2, ("E", 7, "a4"): 3, ("E", 8, "a8"): 5}


def parse_label(label: str) -> list[Component]:
    s = label.replace("'", "").replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if s in ("", "1", "id"):
        return []
    out = []
    for part in s.split("x"):
        base, _, mult = part.partition("^")
        variant = None
        if "(" in base:
            base, _, rest = base.partition("(")
            variant = rest.rstrip(")")
        comp = Component(base[0], int(base[1:]), variant)
        out.extend([comp] * (int(mult) if mult else 1))
    return out


def label_factors(label: str, r: int) -> dict[int, int]:
    comps = parse_label(label)
    f = _merge(*(c.factors() for c in comps)) if comps else {}
    rank = sum(c.n for c in comps)
    if rank > r:
        raise ValueError(f"label {label} has rank {rank} > {r}")
    if rank < r:
        f[1] = f.get(1, 0) + r - rank
    return dict(sorted(f.items()))


def _diagram(comp: Component) -> list[list[int]]:
    """Adjacency lists of the Dynkin diagram, nodes ordered so that each node
    after the first is joined to an earlier one."""
    n = comp.n
    adj: list[list[int]] = [[] for _ in range(n)]

    def edge(i: int, j: int) -> None:
        adj[i].append(j)
        adj[j].append(i)

    if comp.letter == "A":
        for i in range(n - 1):
            edge(i, i + 1)
    elif comp.letter == "D":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 3, n - 1)
    elif comp.letter == "E":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(2, n - 1)
    return adj


def embed_diagram(r: int, comps: Sequence[Component], budget: int = 200_000) -> list[list[LatticeVector]]:
    """Backtracking search for roots realising the product diagram.

    Joined nodes pair to 1, unjoined ones to 0 (roots have square -2).
    Returns one list of simple roots per component.
    """
    roots = L.enumerate_roots(r)
    R = np.array([v.coords for v in roots], dtype=np.int64)
    G = R @ form_matrix(r) @ R.T
    nodes: list[tuple[int, int]] = []  # (component, local index)
    for ci, c in enumerate(comps):
        nodes.extend((ci, j) for j in range(c.n))
    adjs = [_diagram(c) for c in comps]

    def required(a: tuple[int, int], b: tuple[int, int]) -> int:
        if a[0] != b[0]:
            return 0
        return 1 if b[1] in adjs[a[0]][a[1]] else 0

    chosen: list[int] = []
    steps = 0

    def extend(k: int) -> bool:
        nonlocal steps
        if k == len(nodes):
            return True
        mask = np.ones(len(roots), dtype=bool)
        for j, idx in enumerate(chosen):
            mask &= G[idx] == required(nodes[j], nodes[k])
        cands = np.flatnonzero(mask)
        if k == 0:
            cands = cands[:1]  # W is transitive on roots
        for c in cands:
            steps += 1
            if steps > budget:
                raise SearchExhausted(f"no embedding found within {budget} steps")
            chosen.append(int(c))
            if extend(k + 1):
                return True
            chosen.pop()
        return False

    if not extend(0):
        raise SearchExhausted("diagram does not embed in the root system")
    out: list[list[LatticeVector]] = [[] for _ in comps]
    for (ci, _), idx in zip(nodes, chosen):
        out[ci].append(roots[idx])
    return out


def _subsystem_roots(r: int, simple: Sequence[LatticeVector]) -> list[LatticeVector]:
    """Roots of Delta_r that are integer combinations of the given simple roots."""
    A = np.array([a.coords for a in simple], dtype=np.int64).T
    G = A.T @ form_matrix(r) @ A
    Ginv = np.linalg.inv(G.astype(float))
    out = []
    for v in L.enumerate_roots(r):
        x = np.array(v.coords, dtype=np.int64)
        c = np.rint(Ginv @ (A.T @ form_matrix(r) @ x)).astype(np.int64)
        if np.array_equal(A @ c, x):
            out.append(v)
    return out


def _component_element(r: int, comp: Component, simple: Sequence[LatticeVector],
                       rng: random.Random, tries: int) -> Isometry:
    cox = Isometry.identity(r)
    for a in simple:
        cox = cox @ reflection(a)
    if comp.variant is None:
        return cox
    key = (comp.letter, comp.n, comp.variant)
    if key in _COXETER_POWERS:
        return cox.power(_COXETER_POWERS[key])
    # randomised products of reflections inside the sub-root-system
    want = {d: m for d, m in _merge(comp.factors(), {1: r - comp.n}).items() if m}
    sub = _subsystem_roots(r, simple)
    for _ in range(tries):
        w = random_element(r, rng, rng.randint(comp.n, 4 * comp.n), sub)
        poly = P.charpoly(w.on_simple_roots().tolist())
        if P.factor_cyclotomic(poly) == dict(sorted(want.items())):
            return w
    raise SearchExhausted(f"no element of class {comp.label} found in {tries} random products")


def carter_representative(type_label: str, target: str | ClassInvariant | T.ClassRow,
                          seed: int = 0, tries: int = 20_000) -> Isometry:
    """An element of W(type) whose order and characteristic polynomial match
    a row of the encoded class tables.

    `target` is a Carter label (e.g. ``"D4xA1^2"``), a table row, or a
    ClassInvariant (its first label is used to guide the search).
    """
    r = rank_of_type(type_label)
    tlabel = T.RANK_TYPE[r]
    rows = T.rows_for(tlabel) + (T.E7_NO_EIG1_ORDER6 if tlabel == "E7" else ())
    if isinstance(target, ClassInvariant):
        hits = [row for row in rows if row.key == (target.order, target.factors)]
    elif isinstance(target, T.ClassRow):
        hits = [row for row in rows if row.key == target.key]
    else:
        hits = [row for row in rows if row.label == target]
    if not hits:
        raise LabelNotInTable(f"{target!r} is not among the encoded classes of W({tlabel})")
    row = hits[0]
    comps = parse_label(row.label)
    if label_factors(row.label, r) != row.factors:
        raise AssertionError(f"label {row.label} disagrees with its tabulated polynomial")
    rng = random.Random(seed)
    comps_sorted = sorted(comps, key=lambda c: -c.n)
    simples = embed_diagram(r, comps_sorted)
    w = Isometry.identity(r)
    for comp, simple in zip(comps_sorted, simples):
        w = w @ _component_element(r, comp, simple, rng, tries)
    inv = class_invariant(w)
    if (inv.order, dict(inv.factors)) != (row.order, row.factors):
        raise SearchExhausted(f"constructed element has class {inv.to_json()}, wanted {row.label}")
    return w
