"""Closed-form counting expressions, evaluated in exact integer arithmetic.

Every divided binomial here is exact; the division helpers check the
remainder at runtime and abort loudly rather than round.  ballot_value and
avoidance_value evaluate their printed expressions verbatim: the path models
behind those expressions vary between conventions, so neither is tied to the
rectangle counters (ballot_brute gives an explicit counter for one natural
convention, and it is allowed to disagree with ballot_value).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: {num} is not divisible by {den}")
    return q


def catalan(n: int) -> int:
    """n-th Catalan number C(2n, n) / (n + 1); counts paths in an n-by-n square."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _exact_div(binomial(2 * n, n), n + 1, f"catalan({n})")


def fuss_catalan(a: int, k: int) -> int:
    """C(ak + a, a) / (ak + 1); counts paths in an a-by-(a*k) rectangle."""
    if a < 1 or k < 1:
        raise ValueError(f"a and k must be positive, got a={a}, k={k}")
    return _exact_div(binomial(a * k + a, a), a * k + 1, f"fuss_catalan({a},{k})")


def coprime_catalan(a: int, b: int) -> int:
    """C(a + b, a) / (a + b); counts paths in an a-by-b rectangle with gcd(a,b) = 1."""
    if a < 1 or b < 1:
        raise ValueError(f"sides must be positive, got {a}x{b}")
    g = gcd(a, b)
    if g != 1:
        raise ValueError(f"sides must be coprime, got gcd({a},{b}) = {g}")
    return _exact_div(binomial(a + b, a), a + b, f"coprime_catalan({a},{b})")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def prime_rect(p: int, b: int) -> int:
    """Paths in a p-by-b rectangle for prime p.

    For prime height the two cases gcd(p,b) = 1 and p | b cover every width:
    the first is coprime_catalan, the second C(p + b + 1, p) / (p + b + 1).
    """
    if not _is_prime(p):
        raise ValueError(f"height must be prime, got {p}")
    if b < 1:
        raise ValueError(f"width must be positive, got {b}")
    if b % p == 0:
        return _exact_div(binomial(p + b + 1, p), p + b + 1, f"prime_rect({p},{b})")
    return coprime_catalan(p, b)


def ballot_value(a: int, b: int, k: int) -> Fraction:
    """The ballot-style expression ((b - ka + 1) / b) * C(a + b, a), exactly.

    Returned as a Fraction: the value need not be integral, and it is not
    asserted to count any particular path family.
    """
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if b <= a * k:
        raise ValueError(f"need b > a*k, got b={b} and a*k={a * k}")
    return Fraction(b - k * a + 1, b) * binomial(a + b, a)


def avoidance_value(n: int, k: int) -> int:
    """C(2(k+1)n, 2n) - (k-1) * sum_{i<2n} C(2(k+1)n, i), evaluated verbatim."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    length = 2 * (k + 1) * n
    value = binomial(length, 2 * n) - (k - 1) * sum(
        binomial(length, i) for i in range(2 * n)
    )
    if k >= 1 and value < 0:
        raise ArithmeticError(f"avoidance_value({n},{k}) came out negative: {value}")
    return value


def ballot_brute(a: int, b: int, k: int) -> int:
    """Monotone paths (0,0) -> (a,b) whose every lattice point obeys y >= k*x.

    A direct dynamic program, deliberately independent of ballot_value; the
    two need not agree (for a=1, b=2, k=1 this counts 2 where the expression
    gives 3).
    """
    if a < 0 or b < 0 or k < 0:
        raise ValueError(f"arguments must be nonnegative, got {a}, {b}, {k}")
    ways = [[0] * (b + 1) for _ in range(a + 1)]
    ways[0][0] = 1
    for x in range(a + 1):
        for y in range(b + 1):
            if x == 0 and y == 0:
                continue
            if y < k * x:
                continue
            acc = 0
            if x > 0:
                acc += ways[x - 1][y]
            if y > 0:
                acc += ways[x][y - 1]
            ways[x][y] = acc
    return ways[a][b]
