"""Sum/product rewriting over isosceles staircases and its Catalan evaluation."""

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import subdiagrams_by_filter
from rectcat import (
    Iso,
    One,
    Prod,
    Sum,
    as_diagram,
    catalan,
    christoffel_diagram,
    count_paths,
    count_rect,
    decompose,
    enumerate_paths,
    expr_stats,
    h_value,
    iso_rows,
    max_isosceles,
    render,
    word_to_diagram,
)
from rectcat import decomposition as decomposition_mod


# ------------------------------------------------------------------ leaves


def test_iso_rows():
    assert iso_rows(1) == ()
    assert iso_rows(2) == (1,)
    assert iso_rows(4) == (3, 2, 1)
    with pytest.raises(ValueError):
        iso_rows(0)


def test_node_validation():
    with pytest.raises(ValueError):
        Iso(0)
    with pytest.raises(ValueError):
        Sum(())
    with pytest.raises(ValueError):
        Prod(())


def test_max_isosceles():
    assert max_isosceles((4, 3, 1)) == 4
    assert max_isosceles(()) == 1
    assert max_isosceles((7, 6, 4, 3, 1)) == 6
    assert max_isosceles((2,)) == 2
    for n in range(1, 11):
        assert max_isosceles(iso_rows(n)) == n


def test_max_isosceles_is_maximal():
    # the next staircase up never fits
    for mu in [(4, 3, 1), (5, 1), (3, 3, 2), (7, 6, 4, 3, 1)]:
        n = max_isosceles(mu)
        grown = iso_rows(n + 1)
        assert any(mu[r - 1] < grown[r - 1] if r <= len(mu) else True for r in range(1, n + 1))


# --------------------------------------------------------------- decompose


def test_decompose_base_cases():
    assert decompose(()) == One()
    for n in range(2, 11):
        assert decompose(iso_rows(n)) == Iso(n)


def test_decompose_structure_frozen():
    assert decompose((2,)) == Sum((Iso(2), Prod((One(), One()))))
    assert decompose((4, 3, 1)) == Sum(
        (
            Sum((Iso(4), Prod((Iso(3), One())))),
            Prod((Iso(2), Iso(2))),
        )
    )


def test_decompose_is_deterministic():
    first = decompose((4, 3, 1))
    decomposition_mod._decompose.cache_clear()
    assert decompose((4, 3, 1)) == first


def leaves_of(expr):
    out = []
    stack = [expr]
    while stack:
        node = stack.pop()
        if isinstance(node, Sum):
            stack.extend(node.terms)
        elif isinstance(node, Prod):
            stack.extend(node.factors)
        else:
            out.append(node)
    return out


def test_decompose_leaf_purity():
    for a, b in [(4, 6), (6, 9), (5, 7), (6, 8)]:
        for leaf in leaves_of(decompose(christoffel_diagram(a, b))):
            assert isinstance(leaf, (One, Iso))


# ------------------------------------------------------------- evaluation


def test_h_value_known():
    assert h_value(One()) == 1
    assert h_value(Iso(3)) == 5
    assert h_value(Sum((Iso(2), One()))) == 3
    assert h_value(Prod((Iso(2), Iso(3)))) == 10
    assert h_value(decompose((4, 3, 1))) == 23
    assert h_value(decompose((2,))) == 3
    assert h_value(decompose(christoffel_diagram(6, 9))) == 377


def test_h_value_squares_are_catalan():
    for n in range(1, 9):
        assert h_value(decompose(christoffel_diagram(n, n))) == catalan(n)


def test_decomposition_sound_exhaustive():
    for a in range(1, 6):
        for b in range(1, 8):
            for rows in subdiagrams_by_filter(christoffel_diagram(a, b)):
                mu = as_diagram(rows)
                assert h_value(decompose(mu)) == count_paths(mu)


def test_decomposition_sound_random():
    rng = random.Random(20260817)
    words_by_rect: dict[tuple[int, int], list[str]] = {}
    for _ in range(500):
        a = rng.randint(1, 8)
        b = rng.randint(1, 12)
        if (a, b) not in words_by_rect:
            words_by_rect[a, b] = enumerate_paths(a, b)
        mu = word_to_diagram(a, b, rng.choice(words_by_rect[a, b]))
        assert h_value(decompose(mu)) == count_paths(mu)


# ------------------------------------------------------------------ stats


def test_expr_stats_known():
    assert expr_stats(One()) == (1, 1, 1)
    assert expr_stats(Iso(5)) == (1, 1, 1)
    assert expr_stats(decompose((4, 3, 1))) == (3, 5, 4)
    assert expr_stats(Sum((Iso(2), Prod((Iso(2), One()))))) == (2, 3, 3)


def test_expr_stats_summands_match_rendered_terms():
    for a, b in [(4, 6), (6, 9), (6, 8), (5, 7)]:
        expr = decompose(christoffel_diagram(a, b))
        summands, leaves, depth = expr_stats(expr)
        assert summands == render(expr, "text").count(" + ") + 1
        assert leaves == len(leaves_of(expr))
        assert depth >= 1


# ----------------------------------------------------------------- render


def test_render_text_frozen():
    assert render(decompose((4, 3, 1))) == "C4 + C3 + C2*C2"
    assert render(decompose((2,))) == "C2 + 1"
    assert render(One()) == "1"
    assert render(Iso(7)) == "C7"
    assert render(Prod((One(), One()))) == "1"


def test_render_text_distributes_products():
    expr = Prod((Sum((Iso(2), One())), Iso(3)))
    assert render(expr, "text") == "C2*C3 + C3"


def test_render_json_frozen():
    assert render(Iso(2), "json") == '{"type":"iso","n":2}'
    assert render(One(), "json") == '{"type":"one"}'
    assert render(decompose((2,)), "json") == (
        '{"type":"sum","terms":[{"type":"iso","n":2},'
        '{"type":"prod","factors":[{"type":"one"},{"type":"one"}]}]}'
    )


def test_render_json_round_trips_structure():
    expr = decompose(christoffel_diagram(4, 6))
    obj = json.loads(render(expr, "json"))

    def rebuild(node):
        if node["type"] == "one":
            return One()
        if node["type"] == "iso":
            return Iso(node["n"])
        if node["type"] == "sum":
            return Sum(tuple(rebuild(t) for t in node["terms"]))
        return Prod(tuple(rebuild(f) for f in node["factors"]))

    assert rebuild(obj) == expr


def test_render_rejects_unknown_format():
    with pytest.raises(ValueError):
        render(One(), "xml")


# ------------------------------------------------------------- properties


@given(st.lists(st.integers(0, 11), max_size=6))
@settings(max_examples=250, deadline=None)
def test_decomposition_sound_hypothesis(rows):
    mu = as_diagram(sorted(rows, reverse=True))
    assert h_value(decompose(mu)) == count_paths(mu)
