import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multichains.complexes import (
    ComplexSizeError,
    SimplicialComplex,
    clique_complex,
    clique_supports_are_chains,
    count_distinct_graphs,
    edge_in_all_graphs,
    edge_in_all_graphs_bruteforce,
    edgewise_subdivision,
    graphs_equal,
    maximal_cliques,
    multichain_complex,
    multichain_graph,
    same_up_to_relabeling,
)
from multichains.poset import Poset, PosetError, longest_chain_length, order_complex
from multichains.relations import (
    IndexMap,
    Relation,
    all_index_maps,
    enumerate_multichains,
    enumerate_script_I,
    is_reflexive_map,
    parse_multichain,
)

I = IndexMap.parse


def simplex(n):
    return SimplicialComplex([str(i) for i in range(n)], [range(n)])


def test_simplex_statistics():
    K = simplex(3)
    assert K.f_vector() == (3, 3, 1)
    assert K.dimension() == 2 and K.is_pure() and K.euler_characteristic() == 1


def test_non_maximal_facets_dropped():
    K = SimplicialComplex(list("abc"), [(0, 1), (0, 1, 2), (2,), (1, 0)])
    assert K.facets == [(0, 1, 2)]


def test_bad_facets_rejected():
    with pytest.raises(ValueError):
        SimplicialComplex(["a"], [()])
    with pytest.raises(ValueError):
        SimplicialComplex(["a"], [(0, 1)])


def test_face_guard():
    K = SimplicialComplex([str(i) for i in range(20)], [range(20)], max_faces=1000)
    with pytest.raises(ComplexSizeError):
        K.faces()


def test_json_roundtrip(c3):
    K = multichain_complex(c3, 3, I("1,2,4"))
    L = SimplicialComplex.from_dict(K.to_dict())
    assert L.facets == K.facets and L.vertices == K.vertices
    assert K.to_json() == L.to_json()


def test_three_chain_r2_graphs(c3):
    for text in ("1,3", "1,4"):
        G = multichain_graph(c3, 2, I(text))
        assert len(G.vertices) == 6 and len(G.edges) == 9
        K = clique_complex(G)
        assert K.f_vector() == (6, 9, 4) and K.is_pure() and K.euler_characteristic() == 1


def test_antichain_graph_edgeless():
    A = Poset.antichain(3)
    for r in (1, 2, 3):
        for iota in all_index_maps(r):
            G = multichain_graph(A, r, iota)
            assert not G.edges
            K = clique_complex(G)
            assert K.f_vector() == (3,)


def test_graph_edges_follow_relation(posets):
    for P in posets.values():
        for r in (1, 2):
            for iota in all_index_maps(r):
                G = multichain_graph(P, r, iota)
                rel = Relation("iota", iota)
                for (a, p), (b, q) in itertools.combinations(enumerate(G.vertices), 2):
                    assert G.has_edge(a, b) == (rel.holds(P, p, q) or rel.holds(P, q, p))


def test_dimacs(c3):
    G = multichain_graph(c3, 2, I("1,3"))
    lines = G.to_dimacs().splitlines()
    assert lines[0] == "p edge 6 9"
    assert all(l.startswith("e ") for l in lines[1:])
    assert min(int(x) for l in lines[1:] for x in l.split()[1:]) == 1


def test_example_graph_facets(c3):
    K = multichain_complex(c3, 3, I("1,2,4"))
    sizes = sorted(len(f) for f in K.facets)
    assert sizes == [3] * 9 + [5]
    assert K.dimension() == 4 and not K.is_pure()
    # a homology circle: chi = 0, reduced chi = -1
    f = K.f_vector()
    assert sum((-1) ** i * x for i, x in enumerate(f)) == 0


def test_order_complex_of_chain_pure():
    for n in range(1, 5):
        assert order_complex(Poset.chain(n)).is_pure()


def test_maximal_cliques_against_networkx(posets_extra):
    for P in posets_extra.values():
        for r in (1, 2, 3):
            for iota in all_index_maps(r):
                G = multichain_graph(P, r, iota)
                H = nx.from_numpy_array(G.adjacency.astype(int))
                expect = sorted(tuple(sorted(c)) for c in nx.find_cliques(H))
                assert maximal_cliques(G.adjacency) == expect


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 9).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=30))))
def test_property_cliques_are_maximal(data):
    n, edges = data
    adj = np.zeros((n, n), dtype=bool)
    for a, b in edges:
        if a != b:
            adj[a, b] = adj[b, a] = True
    cliques = maximal_cliques(adj)
    for c in cliques:
        assert all(adj[a, b] for a, b in itertools.combinations(c, 2))
        assert not any(all(adj[v, u] for u in c) for v in range(n) if v not in c)
    H = nx.from_numpy_array(adj.astype(int))
    assert cliques == sorted(tuple(sorted(c)) for c in nx.find_cliques(H))


def test_clique_supports_are_chains(posets):
    for P in posets.values():
        for r in (1, 2, 3):
            for iota in all_index_maps(r):
                G = multichain_graph(P, r, iota)
                assert clique_supports_are_chains(P, G, clique_complex(G))


def test_dimension_at_least_order_complex(posets):
    for P in posets.values():
        d = order_complex(P).dimension()
        for r in (1, 2, 3):
            for iota in all_index_maps(r):
                assert multichain_complex(P, r, iota).dimension() >= d


def test_dichotomy_on_chains():
    for n in (2, 3):
        P = Poset.chain(n)
        for r in range(1, 5):
            for iota in all_index_maps(r):
                if iota.values[0] != 1 or is_reflexive_map(iota):
                    continue
                K = multichain_complex(P, r, iota)
                assert K.dimension() > n - 1 or not K.is_pure(), iota


# --- edgewise subdivision ----------------------------------------------------


def test_edgewise_small_cases():
    K = edgewise_subdivision(simplex(2), 2)
    assert K.f_vector() == (3, 2)
    assert edgewise_subdivision(simplex(3), 2).f_vector() == (6, 9, 4)
    assert edgewise_subdivision(simplex(1), 3).f_vector() == (1,)


def test_edgewise_rejects_non_chain_facet():
    A = Poset.antichain(2)
    K = SimplicialComplex(["a", "b"], [(0, 1)])
    with pytest.raises(PosetError):
        edgewise_subdivision(K, 2, order=A)


def test_edgewise_matches_odd_map():
    for n in range(1, 5):
        P = Poset.chain(n)
        for r in (1, 2, 3):
            odd = IndexMap(tuple(2 * t - 1 for t in range(1, r + 1)))
            K = multichain_complex(P, r, odd)
            E = edgewise_subdivision(order_complex(P), r, order=P)
            assert same_up_to_relabeling(K, E)


def test_edgewise_on_diamond(posets):
    P = posets["diamond"]
    odd = I("1,3,5")
    assert same_up_to_relabeling(multichain_complex(P, 3, odd),
                                 edgewise_subdivision(order_complex(P), 3, order=P))


# --- graph counts and common edges --------------------------------------------


def test_count_distinct_graphs(posets):
    for r in range(1, 5):
        assert count_distinct_graphs(Poset.chain(2), r) == 1
    assert count_distinct_graphs(Poset.chain(3), 2) == 2
    assert count_distinct_graphs(Poset.chain(3), 3) == 4
    for P in posets.values():
        for r in range(1, 5):
            expect = 2 ** (r - 1) if longest_chain_length(P) >= 2 else 1
            assert count_distinct_graphs(P, r) == expect


def test_graphs_equal_requires_same_vertices(c3):
    with pytest.raises(ValueError):
        graphs_equal(multichain_graph(c3, 2, I("1,3")), multichain_graph(c3, 3, I("1,3,5")))


def test_edge_in_all_graphs_examples(c3):
    m = lambda s: parse_multichain(c3, s)
    assert edge_in_all_graphs(c3, 3, m("112"), m("113"))
    assert not edge_in_all_graphs(c3, 2, m("11"), m("22"))
    with pytest.raises(ValueError):
        edge_in_all_graphs(c3, 2, m("12"), m("12"))


def test_edge_in_all_graphs_closed_form(posets):
    for P in posets.values():
        for r in (1, 2, 3):
            for p, q in itertools.combinations(enumerate_multichains(P, r), 2):
                assert edge_in_all_graphs(P, r, p, q) == edge_in_all_graphs_bruteforce(P, r, p, q)
