"""Corner splitting and the two closed-form theorems for even heights.

through_box_split is the workhorse recurrence: fixing the outer-corner box
that ends row r, the paths through that box factor into two independent
smaller staircases, while the paths avoiding it live in the diagram with
that box removed.  Summing coprime products of exactly this shape over the
families b = a(n+1) - 2 (upper) and b = an + 2 (lower), a = 2k, yields
closed forms for rectangles whose sides share only the factor 2:
theorem1_count subtracts the products from the coprime count one width up,
theorem2_count adds them to the coprime count one width down.
"""

from __future__ import annotations

from .diagrams import Diagram, as_diagram
from .formulas import coprime_catalan

Rect = tuple[int, int]
TermList = list[tuple[Rect, Rect]]


def through_box_split(mu, r: int) -> tuple[Diagram, Diagram]:
    """Split ``mu`` at the outer-corner box ending row ``r`` (1-based, bottom-up).

    Returns (upper, lower): upper keeps the rows above r unchanged, lower
    keeps the rows below r with the first mu_r columns deleted.  Writing j
    for mu_r, the counting contract is

        count_paths(mu) == count_paths(mu with row r shrunk to j - 1)
                            + count_paths(upper) * count_paths(lower).
    """
    mu = as_diagram(mu)
    if not 1 <= r <= len(mu):
        raise ValueError(f"row {r} out of range for a {len(mu)}-row diagram")
    j = mu[r - 1]
    beyond = mu[r] if r < len(mu) else 0
    if j <= beyond:
        raise ValueError(f"row {r} of {mu} does not end in an outer corner")
    upper = mu[r:]
    lower = as_diagram(x - j for x in mu[: r - 1])
    return upper, lower


def rule2_terms(a: int, family: str, n: int) -> TermList:
    """Coprime rectangle pairs whose count products bridge adjacent widths.

    For a = 2k the sum of count products over the returned pairs equals

        upper (b = a(n+1) - 2):  count(a, b+1) - count(a, b),
        lower (b = an + 2):      count(a, b)   - count(a, b-1).

    The upper family needs n >= 1 once k >= 2: at n = 0 its j = 1 pair would
    degenerate to a rectangle of width zero.
    """
    if a < 2 or a % 2:
        raise ValueError(f"height must be even and at least 2, got {a}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    k = a // 2
    if family == "upper":
        if n == 0 and k >= 2:
            raise ValueError("n = 0 degenerates the j = 1 factor to width zero")
        return [
            ((j, j * (n + 1) - 1), (a - j, (a - j) * (n + 1) - 1))
            for j in range(1, k)
        ]
    if family == "lower":
        return [((j, j * n + 1), (a - j, (a - j) * n + 1)) for j in range(1, k + 1)]
    raise ValueError(f"family must be 'upper' or 'lower', got {family!r}")


def _ct_minus(t: int, n: int) -> int:
    # Factor count at width t(n+1) - 1; the width-zero t = 1 case is 1 by
    # convention (single degenerate path).
    return 1 if t == 1 else coprime_catalan(t, t * (n + 1) - 1)


def _ct_plus(t: int, n: int) -> int:
    return 1 if t == 1 else coprime_catalan(t, t * n + 1)


def theorem1_count(k: int, n: int) -> int:
    """Paths in the (2k)-by-(2k(n+1) - 2) rectangle, by subtraction.

    Equals the coprime count at width 2k(n+1) - 1 minus the sum of coprime
    products over the upper-family pairs.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    a = 2 * k
    total = _ct_minus(a, n)
    for j in range(1, k):
        total -= _ct_minus(a - j, n) * _ct_minus(j, n)
    return total


def theorem2_count(k: int, n: int) -> int:
    """Paths in the (2k)-by-(2kn + 2) rectangle, by addition.

    Equals the coprime count at width 2kn + 1 plus the sum of coprime
    products over the lower-family pairs.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    a = 2 * k
    total = _ct_plus(a, n)
    for j in range(1, k + 1):
        total += _ct_plus(a - j, n) * _ct_plus(j, n)
    return total
