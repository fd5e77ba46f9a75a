"""General rectangle counts via Bizley's partition sum.

For an m-by-n rectangle write d = gcd(m, n) and (a, b) = (m/d, n/d).  With
phi_j = C(j(a+b), ja) / (j(a+b)), the path count of the rectangle is the
coefficient of t^d in exp(sum_j phi_j t^j), i.e.

    sum over partitions lambda of d of  prod_j phi_j^{m_j} / m_j!

where m_j is the multiplicity of j in lambda.  All intermediates are exact
rationals; the denominators must cancel in the end, and a non-integral total
is reported as an internal error rather than rounded.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import factorial, gcd

from .formulas import binomial

Partition = tuple[int, ...]


def partitions(d: int) -> list[Partition]:
    """All partitions of d with parts descending, in reverse-lexicographic order."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    out: list[Partition] = []

    def extend(prefix: list[int], remaining: int, cap: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            extend(prefix, remaining - part, part)
            prefix.pop()

    extend([], d, d)
    return out


def z_of(parts) -> int:
    """Centralizer constant z_lambda = prod_i i^{m_i} * m_i! over part multiplicities."""
    parts = tuple(parts)
    if not parts or any(p < 1 for p in parts):
        raise ValueError(f"parts must be positive, got {parts}")
    z = 1
    for part, mult in Counter(parts).items():
        z *= part**mult * factorial(mult)
    return z


def phi(a: int, b: int, j: int) -> Fraction:
    """phi_j = C(j(a+b), ja) / (j(a+b)) for coprime (a, b)."""
    if a < 1 or b < 1 or j < 1:
        raise ValueError(f"arguments must be positive, got a={a}, b={b}, j={j}")
    g = gcd(a, b)
    if g != 1:
        raise ValueError(f"(a, b) must be coprime, got gcd({a},{b}) = {g}")
    total = j * (a + b)
    return Fraction(binomial(total, j * a), total)


def bizley_count(m: int, n: int) -> int:
    """Number of (m,n)-Dyck paths for arbitrary gcd, via the partition sum."""
    if m < 1 or n < 1:
        raise ValueError(f"sides must be positive, got {m}x{n}")
    d = gcd(m, n)
    a, b = m // d, n // d
    phis = {j: phi(a, b, j) for j in range(1, d + 1)}
    total = Fraction(0)
    for lam in partitions(d):
        term = Fraction(1)
        for part, mult in Counter(lam).items():
            term *= phis[part] ** mult
            term /= factorial(mult)
        total += term
    if total.denominator != 1:
        raise ArithmeticError(f"partition sum for {m}x{n} is not integral: {total}")
    return int(total)
