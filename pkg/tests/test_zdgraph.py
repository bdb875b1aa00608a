import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import all_pairs_diameter, shortest_cycle, zero_divisors_mod
from zdlab.amalgam import build_amalgamation
from zdlab.idealalg import ideal_generate, whole_ring
from zdlab.ringkernel import ZMod
from zdlab.ringspec import ring_from_spec
from zdlab.zdgraph import (
    bipartition,
    classic_graph,
    diameter,
    distance,
    extended_adjacent,
    extended_graph,
    extra_edges,
    girth,
    graphs_equal,
    has_condition_a,
    has_triangle,
    is_complete,
    is_complete_bipartite,
)


def dup_of(n, gen):
    ring = ZMod(n)
    return build_amalgamation(ring, ideal_generate(ring, [gen]))


def brute_extended_edges(n):
    zd = sorted(zero_divisors_mod(n) - {0})
    edges = set()
    for x in zd:
        for y in zd:
            if x < y and any(pow(x, a, n) and pow(y, b, n) and pow(x, a, n) * pow(y, b, n) % n == 0
                             for a in range(1, n + 1) for b in range(1, n + 1)):
                edges.add((x, y))
    return edges


def test_z8_classic():
    g = classic_graph(ZMod(8))
    assert g.vertices == (2, 4, 6)
    assert set(g.edges()) == {(2, 4), (4, 6)}


def test_z6_classic():
    g = classic_graph(ZMod(6))
    assert g.vertices == (2, 3, 4)
    assert set(g.edges()) == {(2, 3), (3, 4)}


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_field_graphs_empty(p):
    for g in (classic_graph(ZMod(p)), extended_graph(ZMod(p))):
        assert len(g) == 0 and g.edge_count == 0
        assert diameter(g) == 0
        assert girth(g) == math.inf


def test_z8_extended_is_triangle():
    g = extended_graph(ZMod(8))
    assert is_complete(g)
    assert g.witness(2, 6) == (2, 1)
    assert g.witness(2, 4) == (1, 1)
    assert extended_adjacent(ZMod(8), 2, 6) == (2, 1)
    assert diameter(g) == 1 and girth(g) == 3
    assert extra_edges(classic_graph(ZMod(8)), g) == [(2, 6)]


def test_witness_on_classic_and_non_edges():
    assert classic_graph(ZMod(8)).witness(2, 4) == (1, 1)
    assert classic_graph(ZMod(8)).witness(2, 6) is None
    assert extended_adjacent(ZMod(6), 2, 4) is None


def test_z3_dup_is_k22():
    ring = ZMod(3)
    dup = build_amalgamation(ring, whole_ring(ring))
    g = extended_graph(dup)
    assert len(g) == 4
    assert is_complete_bipartite(g)
    assert diameter(g) == 2 and girth(g) == 4
    assert graphs_equal(g, classic_graph(dup))


def test_z2_dup_single_edge():
    ring = ZMod(2)
    dup = build_amalgamation(ring, whole_ring(ring))
    g = extended_graph(dup)
    assert len(g) == 2 and g.edge_count == 1
    assert girth(g) == math.inf and diameter(g) == 1
    assert is_complete(g) and is_complete_bipartite(g)


def test_z6_dup_triangle():
    g = extended_graph(dup_of(6, 2))
    assert has_triangle(g) and girth(g) == 3


def test_z8_dup_extended_complete_classic_not():
    dup = dup_of(8, 4)
    gbar, g = extended_graph(dup), classic_graph(dup)
    assert len(gbar) == 7 and gbar.edge_count == 21 and is_complete(gbar)
    assert g.edge_count == 15
    a, b = dup.index_of(2, 2), dup.index_of(2, 6)
    assert gbar.adjacent(a, b) and not g.adjacent(a, b)
    assert gbar.witness(a, b) == (2, 1)


def test_bipartite_detection():
    g = classic_graph(ZMod(9))
    # {3, 6} is an edge and nothing else
    assert is_complete_bipartite(g)
    # path 2 - 4 - 6 is K_{1,2}
    assert is_complete_bipartite(classic_graph(ZMod(8)))
    assert bipartition(classic_graph(ZMod(12))) is not None
    assert not is_complete_bipartite(classic_graph(ZMod(12)))
    assert bipartition(extended_graph(ZMod(8))) is None
    assert not is_complete_bipartite(extended_graph(ZMod(5)))


def test_condition_a():
    assert has_condition_a(extended_graph(ZMod(8)))
    assert not has_condition_a(classic_graph(ZMod(8)))
    # no edges: vacuous
    assert has_condition_a(extended_graph(ZMod(7)))


def test_distance():
    g = classic_graph(ZMod(12))
    assert distance(g, 6, 4) == 1
    # 2 - 6 - 4 - 3
    assert distance(g, 2, 3) == 3
    assert distance(classic_graph(ring_from_spec("Z2 x Z2")), 1, 2) == 1


def test_disconnected_diameter():
    # three isolated vertices
    g = classic_graph(ZMod(8))
    g.adjacency = np.zeros((3, 3), dtype=bool)
    assert diameter(g) == math.inf


def test_graphs_equal_needs_same_vertices():
    with pytest.raises(ValueError):
        graphs_equal(classic_graph(ZMod(8)), classic_graph(ZMod(9)))


@pytest.mark.parametrize("n", [8, 9, 12, 16, 18, 24, 27])
def test_extended_edges_match_brute_force(n):
    assert set(extended_graph(ZMod(n)).edges()) == brute_extended_edges(n)


def _as_networkx(g):
    return nx.from_numpy_array(g.adjacency.astype(int))


def test_metrics_match_oracles_on_corpus(corpus_instances):
    for inst in corpus_instances:
        for g in (inst.gamma_r, inst.gammabar_r, inst.gamma_s, inst.gammabar_s):
            if len(g) <= 12:
                assert girth(g) == shortest_cycle(g.adjacency.tolist()), inst.spec
                assert diameter(g) == all_pairs_diameter(g.adjacency.tolist()), inst.spec
            elif len(g) <= 200:
                h = _as_networkx(g)
                assert girth(g) == nx.girth(h), inst.spec
                expected = nx.diameter(h) if nx.is_connected(h) else math.inf
                assert diameter(g) == expected, inst.spec
        # classic graph is a subgraph of the extended one
        assert not (inst.gamma_s.adjacency & ~inst.gammabar_s.adjacency).any()
        assert not (inst.gamma_r.adjacency & ~inst.gammabar_r.adjacency).any()


def test_witnesses_valid_on_corpus(corpus_instances):
    for inst in corpus_instances[:25]:
        g = inst.gammabar_s
        S = inst.amalgam
        for u, v in g.edges():
            n, m = g.witness(u, v)
            un, vm = S.power(u, n), S.power(v, m)
            assert un != 0 and vm != 0 and S.mul(un, vm) == 0


@settings(max_examples=60)
@given(st.integers(4, 90))
def test_properties_on_residue_rings(n):
    ring = ZMod(n)
    g, gbar = classic_graph(ring), extended_graph(ring)
    assert not (g.adjacency & ~gbar.adjacency).any()
    assert np.array_equal(gbar.adjacency, gbar.adjacency.T)
    assert not gbar.adjacency.diagonal().any()
    if len(gbar) >= 2:
        assert diameter(gbar) <= 3
    if len(g) <= 12:
        assert girth(g) == shortest_cycle(g.adjacency.tolist())
        assert girth(gbar) == shortest_cycle(gbar.adjacency.tolist())
