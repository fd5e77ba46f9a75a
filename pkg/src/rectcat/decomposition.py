"""Rewriting staircase diagrams as sums and products of isosceles ones.

The splitting rule peels off one outer-corner box at a time: a diagram
equals (the diagram without that box) plus (rows above) times (rows below,
shifted past the box's column), and the recursion bottoms out on the
isosceles staircases I_n = (n-1, ..., 1) and the empty diagram.  Evaluating
the resulting expression with the empty diagram as 1, I_n as the n-th
Catalan number, sums as sums and products as products reproduces the exact
path count of the original diagram, so Catalan numbers alone generate every
rectangle count through this calculus.

The removed box is pinned to the outer corner of the topmost row still in
excess of the largest inscribed isosceles staircase; that makes decompose a
pure function with one well-defined tree per diagram.  Results are memoized
by row tuple, so equal sub-diagrams share the very same node objects; all
tree consumers walk the structure iteratively and treat sharing as the
transparent optimization it is.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from math import prod

from .comparison import through_box_split
from .diagrams import Diagram, as_diagram
from .formulas import catalan


@dataclass(frozen=True)
class One:
    """Empty diagram: the multiplicative unit, value 1."""


@dataclass(frozen=True)
class Iso:
    """Isosceles staircase I_n = (n-1, n-2, ..., 1): value catalan(n)."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"staircase index must be positive, got {self.n}")


@dataclass(frozen=True)
class Sum:
    terms: tuple

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a sum needs at least one term")


@dataclass(frozen=True)
class Prod:
    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a product needs at least one factor")


DecompExpr = One | Iso | Sum | Prod

ONE = One()


def iso_rows(n: int) -> Diagram:
    """Rows of the isosceles staircase I_n."""
    if n < 1:
        raise ValueError(f"staircase index must be positive, got {n}")
    return tuple(range(n - 1, 0, -1))


def max_isosceles(mu) -> int:
    """Largest n with I_n contained in ``mu`` (always at least 1)."""
    mu = as_diagram(mu)
    n = 1
    while n <= len(mu) and all(mu[r - 1] >= n + 1 - r for r in range(1, n + 1)):
        n += 1
    return n


def decompose(mu) -> DecompExpr:
    """Expression over One/Iso leaves with h_value(decompose(mu)) == count_paths(mu)."""
    mu = as_diagram(mu)
    # The sum branch shortens the diagram one box at a time, so the
    # recursion can get as deep as the box count.
    need = 3 * (sum(mu) + len(mu)) + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)
    return _decompose(mu)


@lru_cache(maxsize=None)
def _decompose(mu: Diagram) -> DecompExpr:
    if not mu:
        return ONE
    n = max_isosceles(mu)
    if mu == iso_rows(n):
        return Iso(n)
    # Topmost row sticking out of I_n; its last box is an outer corner.
    r = next(r for r in range(len(mu), 0, -1) if mu[r - 1] > n - r)
    slimmed = as_diagram(mu[: r - 1] + (mu[r - 1] - 1,) + mu[r:])
    upper, lower = through_box_split(mu, r)
    return Sum((_decompose(slimmed), Prod((_decompose(upper), _decompose(lower)))))


def _children(node) -> tuple:
    if isinstance(node, Sum):
        return node.terms
    if isinstance(node, Prod):
        return node.factors
    return ()


def _fold(root, leaf, combine_sum, combine_prod):
    """Evaluate bottom-up over the possibly shared tree, without recursion."""
    done: dict[int, object] = {}
    stack = [root]
    while stack:
        node = stack[-1]
        if id(node) in done:
            stack.pop()
            continue
        kids = _children(node)
        pending = [k for k in kids if id(k) not in done]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        if not kids:
            done[id(node)] = leaf(node)
        else:
            vals = [done[id(k)] for k in kids]
            done[id(node)] = (
                combine_sum(vals) if isinstance(node, Sum) else combine_prod(vals)
            )
    return done[id(root)]


def _leaf_value(node) -> int:
    return 1 if isinstance(node, One) else catalan(node.n)


def h_value(expr) -> int:
    """Evaluate the expression: One -> 1, Iso(n) -> catalan(n), +, *."""
    return _fold(expr, _leaf_value, sum, prod)


def expr_stats(expr) -> tuple[int, int, int]:
    """(summands in sum-of-products normal form, leaf count, tree depth)."""
    summands = _fold(expr, lambda nd: 1, sum, prod)
    leaves = _fold(expr, lambda nd: 1, sum, sum)
    depth = _fold(expr, lambda nd: 1, lambda v: 1 + max(v), lambda v: 1 + max(v))
    return summands, leaves, depth


def _normal_terms(expr) -> list[tuple[str, ...]]:
    # Distribute products over sums; a term is the tuple of its Iso labels,
    # One factors dropped, construction order kept.
    def across(vals):
        return [
            tuple(label for part in combo for label in part)
            for combo in cartesian(*vals)
        ]

    return _fold(
        expr,
        leaf=lambda nd: [()] if isinstance(nd, One) else [(f"C{nd.n}",)],
        combine_sum=lambda vals: [term for v in vals for term in v],
        combine_prod=across,
    )


def _to_obj(expr):
    return _fold(
        expr,
        leaf=lambda nd: {"type": "one"} if isinstance(nd, One) else {"type": "iso", "n": nd.n},
        combine_sum=lambda vals: {"type": "sum", "terms": vals},
        combine_prod=lambda vals: {"type": "prod", "factors": vals},
    )


def render(expr, fmt: str = "text") -> str:
    """Render the expression.

    "text" flattens to sum-of-products normal form: terms joined by " + ",
    factors by "*", Iso(n) printed as Cn, an all-One product as "1".
    "json" serializes the tree as built, with the schema
    {"type":"one"} | {"type":"iso","n":N} | {"type":"sum","terms":[...]}
    | {"type":"prod","factors":[...]}.
    """
    if fmt == "text":
        return " + ".join(
            "*".join(term) if term else "1" for term in _normal_terms(expr)
        )
    if fmt == "json":
        return json.dumps(_to_obj(expr), separators=(",", ":"))
    raise ValueError(f"unknown render format {fmt!r}")
