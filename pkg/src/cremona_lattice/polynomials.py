"""Integer polynomials in one variable t, stored low degree first.

Characteristic polynomials of finite-order integer matrices are products of
cyclotomic polynomials, so everything here is exact and spectra are tracked
as multisets of cyclotomic indices.
"""
from __future__ import annotations

import math
import re
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

IntPoly = tuple[int, ...]

# phi(d) <= 8 for exactly these d; enough for every Weyl group handled here
CYCLOTOMIC_INDICES = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 18, 20, 24, 30)


def trim(p: Sequence[int]) -> IntPoly:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def mul(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def power(p: Sequence[int], n: int) -> IntPoly:
    out: IntPoly = (1,)
    for _ in range(n):
        out = mul(out, p)
    return out


def divmod_monic(p: Sequence[int], q: Sequence[int]) -> tuple[IntPoly, IntPoly]:
    if q[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(p)
    dq = len(q) - 1
    if len(rem) - 1 < dq:
        return (0,), trim(rem)
    quot = [0] * (len(rem) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if c:
            quot[i - dq] = c
            for j in range(dq + 1):
                rem[i - dq + j] -= c * q[j]
    return trim(quot), trim(rem[:dq] or [0])


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """Phi_d, obtained by dividing t^d - 1 by Phi_e for proper divisors e."""
    p: IntPoly = (-1,) + (0,) * (d - 1) + (1,)
    for e in range(1, d):
        if d % e == 0:
            p, r = divmod_monic(p, cyclotomic(e))
            assert r == (0,)
    return p


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def factor_cyclotomic(p: Sequence[int]) -> dict[int, int]:
    """Write a monic polynomial as a product of Phi_d; ValueError if impossible."""
    p = trim(p)
    if p[-1] != 1:
        raise ValueError("only monic polynomials factor into cyclotomics")
    out: dict[int, int] = {}
    for d in sorted(CYCLOTOMIC_INDICES, key=totient, reverse=True):
        phi = cyclotomic(d)
        while len(p) >= len(phi):
            q, r = divmod_monic(p, phi)
            if r != (0,):
                break
            out[d] = out.get(d, 0) + 1
            p = q
    if p != (1,):
        raise ValueError(f"polynomial has a non-cyclotomic factor {p}")
    return dict(sorted(out.items()))


def from_factors(factors: Mapping[int, int]) -> IntPoly:
    out: IntPoly = (1,)
    for d, m in factors.items():
        out = mul(out, power(cyclotomic(d), m))
    return out


def factors_key(factors: Mapping[int, int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((d, m) for d, m in factors.items() if m))


def factors_degree(factors: Mapping[int, int]) -> int:
    return sum(totient(d) * m for d, m in factors.items())


def factors_trace(factors: Mapping[int, int]) -> int:
    """Sum of the roots: the primitive d-th roots of unity add up to mu(d)."""
    return sum(mobius(d) * m for d, m in factors.items())


def factors_order(factors: Mapping[int, int]) -> int:
    return math.lcm(*factors) if factors else 1


def charpoly(matrix: Sequence[Sequence[int]]) -> IntPoly:
    """det(tI - M) by Faddeev-LeVerrier; all divisions are exact for integer M."""
    n = len(matrix)
    M = [list(map(int, row)) for row in matrix]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = [[0] * n for _ in range(n)]  # M_0 = 0
    c = 1
    for k in range(1, n + 1):
        # M_k = M * M_{k-1} + c_{n-k+1} I
        prod = [[sum(M[i][l] * Mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += c
        Mk = prod
        AM = [[sum(M[i][l] * Mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(AM[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        c = -tr // k
        coeffs[n - k] = c
    return tuple(coeffs)


def charpoly_from_power_traces(traces: Sequence[int], n: int) -> IntPoly:
    """Newton's identities: traces[k-1] = tr(M^k) for k = 1..n."""
    e = [1] + [0] * n
    for k in range(1, n + 1):
        s = sum((-1) ** (i - 1) * e[k - i] * traces[i - 1] for i in range(1, k + 1))
        if s % k:
            raise ArithmeticError("power traces are not those of an integer matrix")
        e[k] = s // k
    # det(tI - M) = sum (-1)^k e_k t^{n-k}
    return tuple((-1) ** (n - i) * e[n - i] for i in range(n + 1))


# ---------------------------------------------------------------------------
# Text forms
# ---------------------------------------------------------------------------

def parse(text: str) -> IntPoly:
    """Parse a product such as ``p_2p_1^2(t-1)^3`` or ``(t^3+1)^2(t+1)``.

    ``p_k`` stands for t^k + ... + t + 1.  Handled with sympy.
    """
    import sympy

    t = sympy.Symbol("t")
    s = text.replace(" ", "")
    s = re.sub(r"p_\{?(\d+)\}?", lambda m: "(" + "+".join(f"t^{i}" for i in range(int(m.group(1)), 0, -1)) + "+1)", s)
    # implicit multiplication between adjacent factors
    s = re.sub(r"\)\(", ")*(", s)
    s = re.sub(r"(\d)\(", r"\1*(", s)
    s = s.replace("^", "**")
    expr = sympy.expand(sympy.sympify(s, locals={"t": t}))
    poly = sympy.Poly(expr, t)
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    return trim(coeffs)


def _term(c: int, k: int, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    if k == 0:
        return f"{sign}{a}"
    mag = "" if a == 1 else str(a)
    var = "t" if k == 1 else f"t^{k}"
    return f"{sign}{mag}{var}"


def to_string(p: Sequence[int]) -> str:
    terms = []
    for k in range(len(p) - 1, -1, -1):
        if p[k]:
            terms.append(_term(p[k], k, not terms))
    return "".join(terms) or "0"


def factors_to_string(factors: Mapping[int, int]) -> str:
    """Product of cyclotomic factors, each written out, (t-1) last."""
    parts = []
    order = sorted((d for d in factors if d != 1), key=lambda d: (totient(d), d))
    if 1 in factors:
        order.append(1)
    for d in order:
        m = factors[d]
        if not m:
            continue
        body = f"({to_string(cyclotomic(d))})"
        parts.append(body + (f"^{m}" if m > 1 else ""))
    return "".join(parts) or "1"


def as_factors(p_or_text: str | Sequence[int] | Mapping[int, int]) -> dict[int, int]:
    if isinstance(p_or_text, str):
        return factor_cyclotomic(parse(p_or_text))
    if isinstance(p_or_text, Mapping):
        return {d: m for d, m in p_or_text.items() if m}
    return factor_cyclotomic(p_or_text)


def multiset_of_roots(factors: Mapping[int, int]) -> list[tuple[int, int]]:
    """Eigenvalues as (d, k) meaning exp(2 pi i k / d), gcd(k, d) = 1."""
    out = []
    for d, m in sorted(factors.items()):
        for k in range(d):
            if math.gcd(k, d) == 1:
                out.extend([(d, k)] * m)
    return out


def sum_of(polys: Iterable[IntPoly]) -> IntPoly:
    out: list[int] = [0]
    for p in polys:
        if len(p) > len(out):
            out += [0] * (len(p) - len(out))
        for i, c in enumerate(p):
            out[i] += c
    return trim(out)
