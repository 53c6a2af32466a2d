"""Exact arithmetic in Q(sqrt d) for d in {-1, 3, 5}."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

ALLOWED_D = (-1, 3, 5)


@dataclass(frozen=True)
class QuadExtScalar:
    d: int
    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if self.d not in ALLOWED_D:
            raise ValueError(f"d must be one of {ALLOWED_D}, got {self.d}")
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def sqrt(cls, d: int) -> QuadExtScalar:
        return cls(d, 0, 1)

    def _coerce(self, other) -> QuadExtScalar | None:
        if isinstance(other, QuadExtScalar):
            if other.d != self.d:
                raise ValueError(f"cannot mix Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Rational)):
            return QuadExtScalar(self.d, Fraction(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtScalar(self.d, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> QuadExtScalar:
        return QuadExtScalar(self.d, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtScalar(self.d, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtScalar(self.d, self.a * o.a + self.d * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conj(self) -> QuadExtScalar:
        return QuadExtScalar(self.d, self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> QuadExtScalar:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse")
        return QuadExtScalar(self.d, self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> QuadExtScalar:
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadExtScalar(self.d, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadExtScalar):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Rational)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.a) if self.b == 0 else hash((self.d, self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self) -> str:
        return f"QuadExtScalar({self.d}, {self.a}, {self.b})"

    def __str__(self) -> str:
        root = "i" if self.d == -1 else f"sqrt{self.d}"
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*{root}"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}*{root}"


def golden(sign: int = 1) -> QuadExtScalar:
    """(1 + sign*sqrt 5) / 2."""
    return QuadExtScalar(5, Fraction(1, 2), Fraction(sign, 2))
