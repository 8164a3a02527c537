import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphcheck import has_star_naive
from starramsey.coloring import ColoredGraph
from starramsey.errors import ColorCountMismatch, MalformedInput
from starramsey.family import StarFamily, s_subsets
from starramsey.verifier import check_witness, color_degree_vectors, find_star, verify_no_star


def _complete(n, t, colors):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return ColoredGraph(n, t, dict(zip(pairs, colors)))


def test_monochromatic_triangle_has_star():
    g = _complete(3, 2, [1, 1, 1])
    w = find_star(g, StarFamily.uniform(2, 1, 2))
    assert w.center == 0 and w.colors == (1,) and w.leaves == (1, 2)
    assert check_witness(g, StarFamily.uniform(2, 1, 2), w)


def test_proper_coloring_of_k4_is_star_free():
    # a proper 3-edge-coloring of K_4: each vertex sees each color once
    g = ColoredGraph(4, 3, {(0, 3): 1, (1, 2): 1, (1, 3): 2, (0, 2): 2, (2, 3): 3, (0, 1): 3})
    assert verify_no_star(g, StarFamily.uniform(3, 2, 3))
    assert not verify_no_star(g, StarFamily.uniform(2, 2, 3))


def test_empty_graphs():
    assert find_star(ColoredGraph(0, 2, {}), StarFamily.uniform(1, 1, 2)) is None
    assert find_star(ColoredGraph(1, 2, {}), StarFamily.uniform(1, 1, 2)) is None


def test_color_count_mismatch():
    with pytest.raises(ColorCountMismatch):
        find_star(_complete(3, 2, [1, 1, 1]), StarFamily.uniform(2, 2, 3))


def test_degree_vectors():
    g = _complete(3, 2, [1, 2, 2])
    assert color_degree_vectors(g).tolist() == [[1, 1], [1, 1], [0, 2]]


def _random_family(rng, t, s, uniform):
    if uniform:
        return StarFamily.uniform(rng.randint(1, 6), s, t)
    return StarFamily(t, s, tuple(rng.randint(1, 6) for _ in s_subsets(t, s)))


@st.composite
def colored_instances(draw):
    n = draw(st.integers(0, 8))
    t = draw(st.integers(2, 4))
    s = draw(st.integers(1, t - 1))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    colors = draw(st.lists(st.integers(1, t), min_size=len(pairs), max_size=len(pairs)))
    rng = random.Random(draw(st.integers(0, 10**6)))
    f = _random_family(rng, t, s, draw(st.booleans()))
    return ColoredGraph(n, t, dict(zip(pairs, colors))), f


@settings(max_examples=300, deadline=None)
@given(colored_instances())
def test_find_star_matches_naive(inst):
    g, f = inst
    w = find_star(g, f)
    assert (w is not None) == has_star_naive(g.n, dict(g.edge_color), list(f.items()))
    if w is not None:
        assert check_witness(g, f, w)
    slow = find_star(g, f, fast_uniform=False)
    assert (slow is None) == (w is None)
    if w is not None:
        assert slow.center == w.center


@settings(max_examples=150, deadline=None)
@given(colored_instances(), st.data())
def test_star_free_is_monotone_under_edge_removal(inst, data):
    g, f = inst
    if g.n < 2 or not verify_no_star(g, f):
        return
    # drop every edge at one vertex: the result is still star-free
    center = data.draw(st.integers(0, g.n - 1))
    kept = {e: c for e, c in g.edge_color.items() if center not in e}
    dropped = frozenset(e for e in g.edge_color if center in e)
    assert verify_no_star(ColoredGraph(g.n, g.t, kept, dropped, center), f)


def test_bad_witness_rejected():
    g = _complete(3, 2, [1, 2, 2])
    f = StarFamily.uniform(2, 1, 2)
    w = find_star(g, f)
    assert w.center == 2 and w.colors == (2,)
    assert not check_witness(g, f, type(w)(w.center, (1,), w.leaves))
    assert not check_witness(g, f, type(w)(w.center, w.colors, (0,)))


def test_json_round_trip():
    g = _complete(4, 3, [1, 2, 3, 3, 2, 1])
    assert ColoredGraph.from_json(g.to_json()) == g
    doc = json.loads(g.to_json())
    assert doc["edges"][0] == [0, 1, 1] and doc["missing"] == []


@pytest.mark.parametrize(
    "doc",
    [
        {"n": 2, "t": 2, "edges": [[0, 1, 3]]},
        {"n": 2, "t": 2, "edges": [[1, 0, 1]]},
        {"n": 2, "t": 2, "edges": [[0, 0, 1]]},
        {"n": 2, "t": 2, "edges": [[0, 2, 1]]},
        {"n": 2, "t": 2, "edges": [[0, 1, 1], [0, 1, 2]]},
        {"n": 3, "t": 2, "edges": [[0, 1, 1]]},
        {"n": 2, "t": 2, "edges": [[0, 1, True]]},
        {"n": 2, "t": 2, "edges": [[0, 1, 1.0]]},
        {"n": 3, "t": 2, "center": 2, "edges": [[0, 2, 1], [1, 2, 1]], "missing": [[0, 1]]},
        {"n": 2, "edges": []},
        [],
    ],
)
def test_json_rejects(doc):
    with pytest.raises(MalformedInput):
        ColoredGraph.from_json(json.dumps(doc))


def test_json_rejects_garbage():
    with pytest.raises(MalformedInput):
        ColoredGraph.from_json("{not json")
