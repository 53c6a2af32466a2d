"""Finite group actions on Z^{1,r}, with an optional real structure sigma."""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from . import lattice as L
from . import polynomials as P
from .lattice import LatticeVector
from .weyl import InvalidIsometry, Isometry, OrderCapExceeded, class_invariant

CLOSURE_CAP = 10_000


@dataclass(frozen=True)
class ActionSpec:
    r: int
    generators: tuple[Isometry, ...]
    sigma: Isometry | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.all_generators():
            if g.r != self.r:
                raise L.DegreeMismatch("generator acts on a different lattice")
        if self.sigma is not None:
            if not self.sigma.power(2).is_identity():
                raise ValueError("sigma is not an involution")
            for g in self.generators:
                if (g @ self.sigma) != (self.sigma @ g):
                    raise ValueError("sigma does not commute with every generator")

    def all_generators(self) -> tuple[Isometry, ...]:
        return self.generators + ((self.sigma,) if self.sigma is not None else ())

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "generators": [[list(row) for row in g.matrix] for g in self.generators],
            "sigma": [list(row) for row in self.sigma.matrix] if self.sigma else None,
        }

    @classmethod
    def from_json(cls, data: dict | str) -> ActionSpec:
        if isinstance(data, str):
            data = json.loads(data)
        r = int(data["r"])
        gens = tuple(Isometry.from_json({"r": r, "matrix": m}) for m in data.get("generators", []))
        sig = data.get("sigma")
        return cls(r, gens, Isometry.from_json({"r": r, "matrix": sig}) if sig is not None else None)


def closure(gens: Sequence[Isometry], r: int, cap: int = CLOSURE_CAP) -> list[Isometry]:
    """Every element of the group generated by `gens` (identity first)."""
    ident = Isometry.identity(r)
    seen = {ident.matrix: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                x = g @ h
                if x.matrix not in seen:
                    seen[x.matrix] = x
                    nxt.append(x)
                    if len(seen) > cap:
                        raise OrderCapExceeded(f"generated group exceeds {cap} elements")
        frontier = nxt
    return list(seen.values())


def group_of(spec: ActionSpec, cap: int = CLOSURE_CAP) -> list[Isometry]:
    return closure(spec.all_generators(), spec.r, cap)


def invariant_picard_rank(spec: ActionSpec, cap: int = CLOSURE_CAP) -> int:
    """1 + average trace on E_r over the group (sigma adjoined if given)."""
    H = group_of(spec, cap)
    total = sum(h.trace_er() for h in H)
    rank = 1 + Fraction(total, len(H))
    if rank.denominator != 1:
        raise ArithmeticError("average trace is not an integer")
    return int(rank)


def fixed_sublattice_rank(spec: ActionSpec, cap: int = CLOSURE_CAP) -> int:
    """Rank of the invariant part of Pic: corank of sum(M_h) - |H| I over Q."""
    import sympy

    H = group_of(spec, cap)
    S = sum((h.array for h in H), np.zeros((spec.r + 1, spec.r + 1), dtype=np.int64))
    M = sympy.Matrix(S.tolist()) - len(H) * sympy.eye(spec.r + 1)
    return spec.r + 1 - M.rank()


def cyclic_minimality(g: Isometry) -> bool:
    """<g> is minimal iff 1 is not an eigenvalue on E_r."""
    return class_invariant(g).eig1_multiplicity == 0


def lefschetz_fixed_euler(h: Isometry) -> int:
    """Euler number of the fixed locus: trace on Pic + 2 = trace on E_r + 3."""
    return h.trace_er() + 3


# ---------------------------------------------------------------------------
# Spectra and sign twists
# ---------------------------------------------------------------------------

Root = tuple[int, int]  # (d, k): exp(2 pi i k / d), 0 <= k < d, gcd(k, d) = 1


def _reduce(num: int, den: int) -> Root:
    num %= den
    g = math.gcd(num, den)
    return (den // g, num // g)


def negate(root: Root) -> Root:
    d, k = root
    return _reduce(2 * k + d, 2 * d)


def conjugate(root: Root) -> Root:
    d, k = root
    return _reduce(-k, d)


@dataclass(frozen=True)
class SpectrumProfile:
    entries: tuple[Root, ...]

    def __post_init__(self) -> None:
        entries = tuple(sorted(_reduce(k, d) for d, k in self.entries))
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_factors(cls, factors: Mapping[int, int]) -> SpectrumProfile:
        return cls(tuple(P.multiset_of_roots(factors)))

    @classmethod
    def of(cls, g: Isometry) -> SpectrumProfile:
        return cls.from_factors(class_invariant(g).factor_dict)

    def is_real_closed(self) -> bool:
        return sorted(conjugate(x) for x in self.entries) == list(self.entries)

    def factors(self) -> dict[int, int] | None:
        """Cyclotomic factorisation, or None if the polynomial is not integral."""
        counts: dict[Root, int] = {}
        for x in self.entries:
            counts[x] = counts.get(x, 0) + 1
        out: dict[int, int] = {}
        for d in sorted({d for d, _ in counts}):
            mults = {counts.get((d, k), 0) for k in range(d) if math.gcd(k, d) == 1}
            if len(mults) != 1:
                return None
            out[d] = mults.pop()
        return out

    def trace(self) -> int:
        f = self.factors()
        if f is None:
            raise ValueError("spectrum is not closed under the Galois action")
        return P.factors_trace(f)

    def has_one(self) -> bool:
        return (1, 0) in self.entries

    def to_json(self) -> list[list[int]]:
        return [[d, k] for d, k in self.entries]


def sign_twists(spec: SpectrumProfile, exclude_one: bool = True) -> list[tuple[SpectrumProfile, int]]:
    """Spectra reachable by lambda -> +-lambda, with real eigenvalues flipping
    individually and conjugate pairs flipping together; only spectra of
    integer matrices are kept."""
    if not spec.is_real_closed():
        raise ValueError("spectrum is not closed under complex conjugation")
    units: list[tuple[Root, ...]] = []
    pool = list(spec.entries)
    while pool:
        x = pool.pop(0)
        c = conjugate(x)
        if c == x:
            units.append((x,))
        else:
            pool.remove(c)
            units.append((x, c))
    seen: dict[tuple[Root, ...], SpectrumProfile] = {}
    for flips in itertools.product((False, True), repeat=len(units)):
        entries = []
        for unit, flip in zip(units, flips):
            entries.extend(negate(x) if flip else x for x in unit)
        prof = SpectrumProfile(tuple(entries))
        if prof.factors() is None:
            continue
        if exclude_one and prof.has_one():
            continue
        seen.setdefault(prof.entries, prof)
    out = [(p, p.trace()) for p in seen.values()]
    out.sort(key=lambda pt: (pt[1], pt[0].entries))
    return out


# ---------------------------------------------------------------------------
# Completing an isometry from images of curves
# ---------------------------------------------------------------------------

def complete_isometry(images: Mapping[int, LatticeVector], r: int | None = None) -> Isometry:
    """Fill in at most one missing basis image using w(K) = K, then check.

    `images` maps a basis index j (0 for e_0) to w(e_j).
    """
    if not images:
        raise ValueError("no images given")
    r = r if r is not None else next(iter(images.values())).r
    missing = [j for j in range(r + 1) if j not in images]
    if len(missing) > 1:
        raise ValueError(f"images of e_{missing} are missing; the completion is not unique")
    K = L.canonical_class(r)
    cols = dict(images)
    if missing:
        j = missing[0]
        if j == 0:
            s = LatticeVector.zero(r)
            for i in range(1, r + 1):
                s = s + cols[i]
            diff = s - K
            if any(c % 3 for c in diff.coords):
                raise ValueError("image of e_0 would not be integral")
            cols[0] = LatticeVector(r, tuple(c // 3 for c in diff.coords))
        else:
            s = K + 3 * cols[0]
            for i in range(1, r + 1):
                if i != j:
                    s = s - cols[i]
            cols[j] = s
    try:
        return Isometry.from_images([cols[j] for j in range(r + 1)])
    except InvalidIsometry as exc:
        raise ValueError(f"completion is not an isometry fixing K: {exc}") from None


# ---------------------------------------------------------------------------
# Two small counts
# ---------------------------------------------------------------------------

def riemann_hurwitz_branch_count(genus_cover: int, genus_quotient: int, degree: int) -> int:
    """Number N of totally ramified points of a cyclic cover of prime degree n:
    2g - 2 = n (2g' - 2) + N (n - 1)."""
    num = (2 * genus_cover - 2) - degree * (2 * genus_quotient - 2)
    if num % (degree - 1):
        raise ValueError("Riemann-Hurwitz gives a non-integral branch count")
    N = num // (degree - 1)
    if N < 0:
        raise ValueError(f"genus {genus_quotient} quotient is impossible (N = {N} < 0)")
    return N


def riemann_hurwitz_quartic_count(genus_quotient: int) -> int:
    """Fixed points of an order-3 automorphism of a smooth plane quartic."""
    if genus_quotient < 0:
        raise ValueError("genus must be nonnegative")
    N = riemann_hurwitz_branch_count(3, genus_quotient, 3)
    assert N == 5 - 3 * genus_quotient
    return N


def singular_fiber_solutions(total: int = 12) -> set[tuple[int, int]]:
    """Nonnegative (n_node, n_cusp) with n_node + 2 n_cusp = total."""
    return {(total - 2 * c, c) for c in range(total // 2 + 1)}
