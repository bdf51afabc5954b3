"""Property tests over wall spaces and triples drawn by hypothesis."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import upward_closed_ultrafilters
from wallcube.corpus import random_wallspace
from wallcube.cubecomplex import euler_characteristic, fill_cubes
from wallcube.cubulation import cubulate, enumerate_oracle, geodesic_path, graph_distance, interval, median_vertex
from wallcube.ultrafilter import Orientation, flip, is_ultrafilter, minimal_walls, symdiff
from wallcube.wallspace import wall_metric


@st.composite
def spaces(draw, max_points=6, max_walls=8):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_wallspace(random.Random(seed), max_points, max_walls)


@st.composite
def graph_and_triple(draw):
    g = cubulate(draw(spaces()))
    pick = st.integers(0, g.order - 1)
    return g, draw(pick), draw(pick), draw(pick)


@settings(max_examples=120, deadline=None)
@given(spaces())
def test_vertices_are_exactly_the_ultrafilters(space):
    g = cubulate(space)
    found = {g.bitstring(v) for v in range(g.order)}
    assert found == enumerate_oracle(space) == upward_closed_ultrafilters(space)


@settings(max_examples=120, deadline=None)
@given(spaces())
def test_flips_of_minimal_walls_are_the_edges(space):
    g = cubulate(space)
    edges = {(u, v) for u, v, _ in g.edges}
    for u in range(g.order):
        o = g.orientation(u)
        for i in minimal_walls(o):
            w = flip(o, i)
            assert is_ultrafilter(w)
            assert tuple(sorted((u, g.index[w.bits]))) in edges
        assert len(g.adjacency[u]) == len(minimal_walls(o))


@settings(max_examples=200, deadline=None)
@given(graph_and_triple())
def test_median_is_unique_common_interval_vertex(data):
    g, u, v, t = data
    m = median_vertex(g, u, v, t)
    assert interval(g, u, v) & interval(g, v, t) & interval(g, t, u) == {m}
    assert median_vertex(g, v, t, u) == median_vertex(g, t, u, v) == m
    assert median_vertex(g, u, u, t) == u


@settings(max_examples=200, deadline=None)
@given(graph_and_triple())
def test_geodesics_realize_symdiff(data):
    g, u, v, _ = data
    path = geodesic_path(g, u, v)
    assert len(path) - 1 == graph_distance(g, u, v) == len(symdiff(g.orientation(u), g.orientation(v)))
    assert all(b in g.adjacency[a] for a, b in zip(path, path[1:]))
    assert set(path) <= interval(g, u, v)


@settings(max_examples=120, deadline=None)
@given(spaces())
def test_sigma_isometric_and_contractible(space):
    g = cubulate(space)
    for x in range(space.n):
        for y in range(space.n):
            assert graph_distance(g, g.sigma[x], g.sigma[y]) == wall_metric(space, x, y)
    assert euler_characteristic(fill_cubes(g)) == 1


@settings(max_examples=80, deadline=None)
@given(spaces(), st.integers(0, 2**8 - 1))
def test_ultrafilter_test_matches_literal_axiom(space, raw):
    bits = (raw << 1) & ((1 << space.w) - 1)
    literal = Orientation(space, bits).to_bitstring() in upward_closed_ultrafilters(space)
    assert is_ultrafilter(Orientation(space, bits)) == literal
