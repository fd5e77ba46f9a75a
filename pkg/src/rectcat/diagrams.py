"""Staircase diagrams, Dyck words, and the exact path-counting oracle.

An (a,b)-Dyck path runs from the top-left corner (0,a) to the bottom-right
corner (b,0) of an a-by-b rectangle using unit down steps (letter "0") and
unit right steps (letter "1"), staying weakly below the corner-to-corner
diagonal: after d down and r right steps the path is admissible iff
b*d >= a*r.  Touching the diagonal is allowed.

A path is stored either as its word (a string over "01", a zeros and b ones)
or as its staircase diagram: the numbers of boxes strictly between the path
and the left edge, one entry per row, bottom row first.  Diagrams are weakly
decreasing tuples with trailing zeros dropped, so the diagram of the leftmost
path is the empty tuple.  The largest diagram any path in the rectangle can
carve out is the Christoffel staircase with row r holding floor(b*(a-r)/a)
boxes; a diagram belongs to some (a,b)-path exactly when it fits inside that
staircase.

count_paths is the counting oracle for the whole package: a row-by-row
dynamic program over sub-diagrams, exact in arbitrary-precision integers.
"""

from __future__ import annotations

import os
from itertools import accumulate

Diagram = tuple[int, ...]

DEFAULT_ENUM_CAP = 10**6
ENUM_CAP_ENV = "RECTCAT_MAX_ENUM"


class TooManyPaths(ValueError):
    """Raised when an enumeration would exceed the configured cap."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"too many paths: {count} exceeds the cap of {cap}")
        self.count = count
        self.cap = cap


def check_rect(a: int, b: int) -> None:
    """Reject degenerate rectangles; both sides must be at least 1."""
    if a < 1 or b < 1:
        raise ValueError(f"rectangle sides must be positive integers, got {a}x{b}")


def as_diagram(rows) -> Diagram:
    """Normalize ``rows`` into a diagram tuple.

    Rows are listed bottom-up, must be nonnegative and weakly decreasing;
    trailing zeros are dropped.  Raises ValueError otherwise.
    """
    mu = tuple(int(r) for r in rows)
    for i, r in enumerate(mu):
        if r < 0:
            raise ValueError(f"negative row length {r} in {mu}")
        if i and r > mu[i - 1]:
            raise ValueError(f"rows must be weakly decreasing bottom-up, got {mu}")
    while mu and mu[-1] == 0:
        mu = mu[:-1]
    return mu


def parse_diagram(text: str) -> Diagram:
    """Parse the comma-separated row format, e.g. "7,6,4,3,1".  "" is empty."""
    text = text.strip()
    if not text:
        return ()
    try:
        rows = [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(
            f"malformed diagram {text!r}: expected comma-separated integers"
        ) from None
    return as_diagram(rows)


def format_diagram(mu) -> str:
    """Inverse of parse_diagram."""
    return ",".join(str(r) for r in as_diagram(mu))


def christoffel_diagram(a: int, b: int) -> Diagram:
    """Maximal staircase of the a-by-b rectangle: row r holds floor(b*(a-r)/a) boxes."""
    check_rect(a, b)
    return as_diagram(b * (a - r) // a for r in range(1, a))


def fits_in(a: int, b: int, mu) -> bool:
    """True iff ``mu`` sits inside the maximal staircase of the rectangle."""
    mu = as_diagram(mu)
    bounds = christoffel_diagram(a, b)
    return len(mu) <= len(bounds) and all(x <= c for x, c in zip(mu, bounds))


def is_valid_word(a: int, b: int, word: str) -> bool:
    """True iff ``word`` stays weakly below the (a,b)-diagonal.

    The word must consist of exactly a letters "0" (down) and b letters "1"
    (right); anything else is an input error, not False.
    """
    check_rect(a, b)
    if set(word) - {"0", "1"}:
        raise ValueError(f"word must be over letters 0 and 1, got {word!r}")
    if word.count("0") != a or word.count("1") != b:
        raise ValueError(
            f"word needs {a} down and {b} right steps, got "
            f"{word.count('0')} and {word.count('1')}"
        )
    downs = rights = 0
    for ch in word:
        if ch == "0":
            downs += 1
        else:
            rights += 1
            if b * downs < a * rights:
                return False
    return True


def word_to_diagram(a: int, b: int, word: str) -> Diagram:
    """Diagram of a valid word.

    Row r of the diagram records the x coordinate at which the path steps
    down through that row, i.e. the position of its (a-r+1)-th down step.
    """
    if not is_valid_word(a, b, word):
        raise ValueError(f"word {word!r} leaves the {a}x{b} staircase region")
    xs = []
    rights = 0
    for ch in word:
        if ch == "1":
            rights += 1
        else:
            xs.append(rights)
    # xs[i] is the x position of the (i+1)-th down step; the first one is
    # always at x = 0, which is the implicit empty top row.
    return as_diagram(xs[::-1][: a - 1])


def diagram_to_word(a: int, b: int, mu) -> str:
    """Word of the path carving out ``mu``; inverse of word_to_diagram."""
    check_rect(a, b)
    mu = as_diagram(mu)
    if not fits_in(a, b, mu):
        raise ValueError(f"diagram {mu} does not fit the {a}x{b} staircase")
    # Down-step x positions from the top row to the bottom one.
    xs = [0] * (a - len(mu)) + list(mu[::-1])
    out = []
    rights = 0
    for x in xs:
        out.append("1" * (x - rights))
        out.append("0")
        rights = x
    out.append("1" * (b - rights))
    return "".join(out)


def count_paths(mu) -> int:
    """Number of staircase diagrams contained in ``mu``.

    Equivalently, the number of monotone paths fitting weakly under the
    staircase.  Row-by-row dynamic program: processing rows from the top
    down, t[x] holds the number of fillings of the rows seen so far whose
    current row has exactly x boxes.  Exact integer arithmetic throughout.
    """
    mu = as_diagram(mu)
    if not mu:
        return 1
    t = [1] * (mu[-1] + 1)
    for length in mu[-2::-1]:
        pref = list(accumulate(t))
        top = len(t) - 1
        t = [pref[min(x, top)] for x in range(length + 1)]
    return sum(t)


def count_rect(a: int, b: int) -> int:
    """Number of (a,b)-Dyck paths: count_paths over the maximal staircase."""
    check_rect(a, b)
    return count_paths(christoffel_diagram(a, b))


def _enum_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(ENUM_CAP_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(
                f"{ENUM_CAP_ENV} must be an integer, got {env!r}"
            ) from None
    return DEFAULT_ENUM_CAP


def enumerate_paths(a: int, b: int, cap: int | None = None) -> list[str]:
    """All (a,b)-Dyck words in lexicographic order ("0" before "1").

    Refuses with TooManyPaths when the count exceeds ``cap`` (default 10**6,
    overridable via the RECTCAT_MAX_ENUM environment variable).
    """
    check_rect(a, b)
    cap = _enum_cap(cap)
    total = count_rect(a, b)
    if total > cap:
        raise TooManyPaths(total, cap)
    words: list[str] = []
    buf: list[str] = []

    def extend(downs: int, rights: int) -> None:
        if downs == a and rights == b:
            words.append("".join(buf))
            return
        # Any admissible prefix completes (append downs first), so these two
        # feasibility checks are the only pruning needed.
        if downs < a:
            buf.append("0")
            extend(downs + 1, rights)
            buf.pop()
        if rights < b and b * downs >= a * (rights + 1):
            buf.append("1")
            extend(downs, rights + 1)
            buf.pop()

    extend(0, 0)
    return words
