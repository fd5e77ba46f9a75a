"""Box counts of maximal staircases and the width-difference row profile.

q_boxes gives the total number of boxes under the Christoffel staircase of a
rectangle in closed form.  delta measures, row by row, how the staircase
grows when the width b is increased by one; on the two even-height families
(2k, 2k(n+1)-1) and (2k, 2kn+2) that profile is a plain step function, which
delta_closed_upper / delta_closed_lower provide.
"""

from __future__ import annotations

from math import gcd


def q_boxes(a: int, b: int) -> int:
    """Boxes under the maximal (a,b) staircase: ((a-1)(b-1) + gcd(a,b) - 1) / 2."""
    if a < 1 or b < 1:
        raise ValueError(f"sides must be positive, got {a}x{b}")
    twice = (a - 1) * (b - 1) + gcd(a, b) - 1
    if twice % 2:
        raise ArithmeticError(f"box-count parity broken for {a}x{b}: {twice} is odd")
    return twice // 2


def delta(a: int, b: int, l: int) -> int:
    """Row-l growth floor(b*l/a) - floor((b-1)*l/a) of the maximal staircase.

    Row indices run over 1 <= l <= a-1.  Any positive width is accepted so
    the closed-form families can be checked down to their smallest members.
    """
    if a < 2:
        raise ValueError(f"need a >= 2 for a nonempty row range, got a={a}")
    if b < 1:
        raise ValueError(f"width must be positive, got {b}")
    if not 1 <= l <= a - 1:
        raise ValueError(f"row index must lie in [1, {a - 1}], got {l}")
    return b * l // a - (b - 1) * l // a


def _check_family(k: int, n: int, l: int) -> None:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if not 1 <= l <= 2 * k - 1:
        raise ValueError(f"row index must lie in [1, {2 * k - 1}], got {l}")


def delta_closed_upper(k: int, n: int, l: int) -> int:
    """delta on the family (a, b) = (2k, 2k(n+1) - 1): zero exactly for l <= k."""
    _check_family(k, n, l)
    return 0 if l <= k else 1


def delta_closed_lower(k: int, n: int, l: int) -> int:
    """delta on the family (a, b) = (2k, 2kn + 2): zero exactly for l <= k - 1."""
    _check_family(k, n, l)
    return 0 if l <= k - 1 else 1


def special_r(a: int) -> int:
    """The row r = a - 1, rechecking its defining floor property on every call.

    r is coprime to a and floor(k*r/a) lands in {k-1, k} for every
    0 < k < a (in fact always on k-1); violation aborts loudly.
    """
    if a < 2:
        raise ValueError(f"a must be at least 2, got {a}")
    r = a - 1
    if gcd(r, a) != 1:
        raise ArithmeticError(f"gcd({r}, {a}) is not 1")
    for k in range(1, a):
        if k * r // a not in (k - 1, k):
            raise ArithmeticError(f"floor({k}*{r}/{a}) fell outside {{{k - 1}, {k}}}")
    return r
