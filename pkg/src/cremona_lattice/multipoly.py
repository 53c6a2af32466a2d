"""Sparse multivariate polynomials with exact coefficients (Fraction or
QuadExtScalar) and polynomial maps between projective spaces."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Monomial = tuple[int, ...]


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[Monomial, object] | None = None) -> None:
        self.nvars = nvars
        self.terms: dict[Monomial, object] = {}
        for m, c in (terms or {}).items():
            if len(m) != nvars:
                raise ValueError("monomial has the wrong number of variables")
            if c != 0:
                self.terms[m] = c

    @classmethod
    def const(cls, c, nvars: int) -> Poly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int) -> Poly:
        return cls(nvars, {tuple(1 if j == i else 0 for j in range(nvars)): Fraction(1)})

    @classmethod
    def variables(cls, nvars: int) -> list[Poly]:
        return [cls.var(i, nvars) for i in range(nvars)]

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        return Poly.const(other, self.nvars)

    def __add__(self, other) -> Poly:
        o = self._lift(other)
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> Poly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Poly:
        return self._lift(other) - self

    def __mul__(self, other) -> Poly:
        o = self._lift(other)
        out: dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        out = Poly.const(Fraction(1), self.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            other = self._lift(other)
        return (self - other).is_zero()

    def __hash__(self) -> int:  # pragma: no cover - polys are not dict keys here
        return hash(frozenset(self.terms.items()))

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def evaluate(self, point: Sequence) -> object:
        total = 0
        for m, c in self.terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t = t * x ** e
            total = t + total
        return total

    def compose(self, subs: Sequence[Poly]) -> Poly:
        """Substitute subs[i] for variable i (all subs in one common ring)."""
        if len(subs) != self.nvars:
            raise ValueError("need one substitute per variable")
        n = subs[0].nvars
        powers: dict[tuple[int, int], Poly] = {}

        def pw(i: int, e: int) -> Poly:
            if (i, e) not in powers:
                powers[(i, e)] = subs[i] ** e
            return powers[(i, e)]

        out = Poly(n)
        for m, c in self.terms.items():
            t = Poly.const(c, n)
            for i, e in enumerate(m):
                if e:
                    t = t * pw(i, e)
            out = out + t
        return out

    def scale(self, c) -> Poly:
        return Poly(self.nvars, {m: c * v for m, v in self.terms.items()})

    def coefficients(self) -> Iterable[object]:
        return self.terms.values()

    def leading(self) -> tuple[Monomial, object]:
        m = max(self.terms)
        return m, self.terms[m]

    def proportional_to(self, other: Poly):
        """The scalar c with self = c * other, or None."""
        if self.is_zero() or other.is_zero():
            return None
        m, c_other = other.leading()
        if m not in self.terms:
            return None
        c = self.terms[m] / c_other
        return c if (self - other.scale(c)).is_zero() else None

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            mono = "*".join(f"v{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e)
            parts.append(f"({self.terms[m]})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def cross_products_vanish(p: Sequence, q: Sequence) -> bool:
    """p and q represent the same projective point (or map): p_i q_j = p_j q_i."""
    if len(p) != len(q):
        return False
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            diff = p[i] * q[j] - p[j] * q[i]
            if not (diff.is_zero() if isinstance(diff, Poly) else diff == 0):
                return False
    return True


def is_zero_vector(p: Sequence) -> bool:
    return all((x.is_zero() if isinstance(x, Poly) else x == 0) for x in p)


def same_projective_point(p: Sequence, q: Sequence) -> bool:
    return not is_zero_vector(p) and not is_zero_vector(q) and cross_products_vanish(p, q)


@dataclass(frozen=True)
class PolyMap:
    """A rational map given by homogeneous components in a common ring.

    `blocks` splits the target into projective factors, e.g. (2, 2, 2) for
    P1 x P1 x P1; equality up to scalar is tested per factor.
    """
    components: tuple[Poly, ...]
    blocks: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        if all(c.is_zero() for c in self.components):
            raise ValueError("all components are zero")
        blocks = self.blocks or (len(self.components),)
        if sum(blocks) != len(self.components):
            raise ValueError("blocks do not cover the components")
        object.__setattr__(self, "blocks", tuple(blocks))

    @property
    def nvars(self) -> int:
        return self.components[0].nvars

    def _split(self, seq: Sequence) -> list[Sequence]:
        out, i = [], 0
        for b in self.blocks:
            out.append(seq[i:i + b])
            i += b
        return out

    def __call__(self, point: Sequence) -> list:
        return [c.evaluate(point) for c in self.components]

    def compose(self, inner: PolyMap) -> PolyMap:
        """self o inner."""
        return PolyMap(tuple(c.compose(inner.components) for c in self.components), self.blocks)

    def power(self, k: int) -> PolyMap:
        out = self
        for _ in range(k - 1):
            out = self.compose(out)
        return out

    def equals_up_to_scalar(self, other: PolyMap) -> bool:
        if self.blocks != other.blocks:
            return False
        return all(cross_products_vanish(a, b) for a, b in zip(self._split(self.components),
                                                                 self._split(other.components)))

    def point_image(self, point: Sequence) -> list | None:
        """Image of a point, or None where some projective factor is all zero."""
        img = self(point)
        if any(is_zero_vector(part) for part in self._split(img)):
            return None
        return img

    @classmethod
    def identity(cls, nvars: int, blocks: tuple[int, ...] | None = None) -> PolyMap:
        return cls(tuple(Poly.variables(nvars)), blocks)
