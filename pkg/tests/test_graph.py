import math

import numpy as np
import pytest

from graphspec import (
    GraphError,
    analyze,
    build_graph,
    builtin,
    cut_vertex,
    cycle_basis,
    has_independent_cycles,
    parse_qgf,
    tree_diameter,
)
from graphspec.generate import random_connected_graph


def brute_force_cycles(g):
    """All simple cycles as frozensets of edge names, by walk enumeration."""
    cycles = set()

    def extend(start, v, used, first_edge):
        for ei, w in g.adjacency[v]:
            if ei in used:
                continue
            if ei < first_edge:
                continue  # canonical: smallest edge index first
            if w == start:
                cycles.add(frozenset(g.edges[i].name for i in used | {ei}))
                continue
            if any(g.edges[i].tail == w or g.edges[i].head == w for i in used if i != ei):
                continue
            extend(start, w, used | {ei}, first_edge)

    for ei, e in enumerate(g.edges):
        if e.tail == e.head:
            cycles.add(frozenset({e.name}))
        else:
            extend(e.tail, e.head, {ei}, ei)
    return cycles


# ---------------------------------------------------------------- build_graph


def test_single_interval():
    g = build_graph([("e1", "u", "v", 1.0)])
    assert g.num_vertices == 2 and g.num_edges == 1


def test_star_by_shared_label():
    g = build_graph([("e1", "a", "c", 1.0), ("e2", "b", "c", 1.0), ("e3", "d", "c", 1.0)])
    assert g.degrees["c"] == 3


def test_loop_counts_twice():
    g = build_graph([("e1", "v", "v", 2.0)])
    assert g.degrees["v"] == 2


def test_build_errors():
    with pytest.raises(GraphError):
        build_graph([])
    with pytest.raises(GraphError):
        build_graph([("e1", "a", "b", 1.0), ("e1", "b", "c", 1.0)])
    with pytest.raises(GraphError):
        build_graph([("e1", "a", "b", -1.0)])
    with pytest.raises(GraphError):
        build_graph([("e1", "a", "b", math.inf)])


# -------------------------------------------------------------------- analyze


def test_analyze_triangle():
    a = analyze(builtin("cycle", 1, 1, 1))
    assert not a.bipartite and a.betti == 1 and not a.boundary


def test_analyze_lasso():
    a = analyze(builtin("lasso", 2, 1))
    assert a.bipartite and a.betti == 1 and a.boundary == frozenset({"v1"})


def test_analyze_tree():
    g = builtin("path", 1, 2, 3)
    a = analyze(g)
    assert a.betti == 0
    assert a.bridge_edges == frozenset(e.name for e in g.edges)
    assert a.doubly_connected_length == 0.0


def test_analyze_loop_not_bipartite():
    a = analyze(builtin("cycle", 2.0))
    assert not a.bipartite and a.betti == 1


def test_doubly_connected_pure_cycle():
    g = builtin("cycle", 1, 2, 3)
    assert analyze(g).doubly_connected_length == pytest.approx(6.0)


# ---------------------------------------------------------------- cycle basis


def test_cycle_basis_tree_empty():
    assert cycle_basis(builtin("star", 4, 1)).fundamental_cycles == ()


def test_cycle_basis_loop():
    cb = cycle_basis(builtin("cycle", 1.0))
    assert len(cb.fundamental_cycles) == 1
    assert len(cb.fundamental_cycles[0]) == 1


def test_cycle_basis_4cycle_matches_brute_force():
    g = builtin("cycle", 1, 1, 1, 1)
    cb = cycle_basis(g)
    assert len(cb.fundamental_cycles) == 1
    edge_set = frozenset(n for n, _ in cb.fundamental_cycles[0])
    assert edge_set in brute_force_cycles(g)
    assert len(edge_set) == 4


def test_cycle_basis_closed_walks():
    rng = np.random.default_rng(7)
    for _ in range(30):
        g = random_connected_graph(rng, int(rng.integers(2, 7)))
        a = analyze(g)
        cb = cycle_basis(g)
        assert len(cb.fundamental_cycles) == a.betti
        for cyc in cb.fundamental_cycles:
            # traversal must return to its starting vertex
            idx = {e.name: i for i, e in enumerate(g.edges)}
            pos = None
            start = None
            for name, sign in cyc:
                e = g.edges[idx[name]]
                frm, to = (e.tail, e.head) if sign == 1 else (e.head, e.tail)
                if pos is None:
                    start = frm
                else:
                    assert frm == pos
                pos = to
            assert pos == start


def test_cycle_basis_disconnected_rejected():
    g = build_graph([("e1", "a", "b", 1.0), ("e2", "c", "d", 1.0)])
    with pytest.raises(GraphError):
        cycle_basis(g)


# ------------------------------------------------------- independent cycles


def test_figure_eight_independent():
    g = build_graph([("l1", "v", "v", 1.0), ("l2", "v", "v", 1.0)])
    assert has_independent_cycles(g)


def test_theta_not_independent():
    g = build_graph([("e1", "a", "b", 1.0), ("e2", "a", "b", 1.0), ("e3", "a", "b", 1.0)])
    assert not has_independent_cycles(g)
    # brute force: every edge lies on two of the three cycles
    cycles = brute_force_cycles(g)
    assert len(cycles) == 3
    for e in ("e1", "e2", "e3"):
        assert sum(1 for c in cycles if e in c) == 2


def test_lasso_independent():
    assert has_independent_cycles(builtin("lasso", 2, 1))


# ----------------------------------------------------------------- cut_vertex


def test_cut_loop_to_interval():
    g = builtin("cycle", 2.0)
    g2 = cut_vertex(g, "v0", ([("e1", 0)], [("e1", 1)]))
    a2 = analyze(g2)
    assert a2.betti == 0 and a2.connected
    assert g2.total_length == pytest.approx(2.0)


def test_cut_lasso_junction_disconnects():
    g = builtin("lasso", 2, 1)
    # separate the tail endpoint from the two cycle endpoints at the junction j
    g2 = cut_vertex(g, "j", ([("tail", 1)], [("loop_a", 0), ("loop_b", 1)]))
    a2 = analyze(g2)
    assert a2.component_count == 2
    assert a2.betti == 1  # the cycle survives


def test_cut_4cycle_opens():
    g = builtin("cycle", 1, 1, 1, 1)
    g2 = cut_vertex(g, "v0", ([("e1", 0)], [("e4", 1)]))
    assert analyze(g2).betti == 0


def test_cut_invariants_random():
    rng = np.random.default_rng(11)
    for _ in range(30):
        g = random_connected_graph(rng, int(rng.integers(2, 8)))
        a = analyze(g)
        # pick a vertex of degree >= 2 and a random split
        cands = [v for v, d in g.degrees.items() if d >= 2]
        v = cands[int(rng.integers(0, len(cands)))]
        eps = [
            (g.edges[i].name, end)
            for i, end in g.endpoints_of_vertex[g.vertex_index(v)]
        ]
        cutpoint = int(rng.integers(1, len(eps)))
        g2 = cut_vertex(g, v, (eps[:cutpoint], eps[cutpoint:]))
        a2 = analyze(g2)
        assert g2.num_edges == g.num_edges
        assert g2.total_length == pytest.approx(g.total_length)
        # Euler relation: beta = E - V + C with one extra vertex after the cut
        assert a2.betti - a2.component_count == a.betti - a.component_count - 1


def test_cut_errors():
    g = builtin("star", 3, 1)
    with pytest.raises(GraphError):
        cut_vertex(g, "v1", ([("e1", 1)], []))
    with pytest.raises(GraphError):
        cut_vertex(g, "c", ([("e1", 0)], []))


# -------------------------------------------------------------- tree diameter


def test_tree_diameter_path():
    assert tree_diameter(builtin("path", 1, 2)) == pytest.approx(3.0)


def test_tree_diameter_star():
    assert tree_diameter(builtin("star", 3, 1)) == pytest.approx(2.0)


def test_tree_diameter_random_vs_all_pairs():
    rng = np.random.default_rng(3)
    for _ in range(20):
        g = random_connected_graph(rng, int(rng.integers(2, 10)), extra_edges=0)

        def dist_from(src):
            d = {src: 0.0}
            stack = [src]
            while stack:
                x = stack.pop()
                for ei, w in g.adjacency[x]:
                    if w not in d:
                        d[w] = d[x] + g.edges[ei].length
                        stack.append(w)
            return d

        best = max(max(dist_from(v).values()) for v in range(g.num_vertices))
        assert tree_diameter(g) == pytest.approx(best)


def test_tree_diameter_rejects_cycles():
    with pytest.raises(GraphError):
        tree_diameter(builtin("cycle", 1, 1, 1))


# ------------------------------------------------------------------- builtins


def test_builtin_star_is_paper_example():
    g = builtin("star", 3, 1)
    assert g.num_edges == 3 and g.degrees["c"] == 3


def test_builtin_cycle_lengths():
    g = builtin("cycle", 5, 3, 2, 2)
    assert [e.length for e in g.edges] == [5, 3, 2, 2]
    assert analyze(g).betti == 1


def test_builtin_dumbbell():
    g = builtin("dumbbell", 6, 1)
    a = analyze(g)
    assert a.betti == 2
    assert g.total_length == pytest.approx(6.0)


def test_builtin_complete_bipartite():
    g = builtin("complete_bipartite", 2, 3, 1)
    a = analyze(g)
    assert a.bipartite and g.num_edges == 6 and a.betti == 6 - 5 + 1


def test_builtin_errors():
    with pytest.raises(GraphError):
        builtin("star", 0, 1)
    with pytest.raises(GraphError):
        builtin("nope", 1)


# ----------------------------------------------------------------- properties


def test_betti_identity_random():
    rng = np.random.default_rng(21)
    for _ in range(50):
        g = random_connected_graph(rng, int(rng.integers(1, 13)))
        a = analyze(g)
        assert a.betti == g.num_edges - g.num_vertices + 1


def test_bipartite_matches_cycle_parity_random():
    rng = np.random.default_rng(22)
    for _ in range(200):
        g = random_connected_graph(rng, int(rng.integers(1, 13)))
        a = analyze(g)
        parity_ok = all(
            len(c) % 2 == 0 for c in cycle_basis(g).fundamental_cycles
        )
        assert a.bipartite == parity_ok


def test_bipartition_separates_edges():
    rng = np.random.default_rng(23)
    for _ in range(50):
        g = random_connected_graph(rng, int(rng.integers(1, 10)))
        a = analyze(g)
        if not a.bipartite:
            continue
        first, second = a.bipartition
        for e in g.edges:
            names = {g.vertex_names[e.tail], g.vertex_names[e.head]}
            assert names & first and names & second


# ------------------------------------------------------------------------ QGF


def test_qgf_roundtrip():
    text = """
    # lasso graph
    edge tail v1 j 1.0
    edge loop_a j m 1.0
    edge loop_b m j 1.0
    """
    g = parse_qgf(text)
    a = analyze(g)
    assert a.bipartite and a.betti == 1


def test_qgf_errors():
    with pytest.raises(GraphError):
        parse_qgf("edge e1 a b\n")
    with pytest.raises(GraphError):
        parse_qgf("edge e1 a b xx\n")
    with pytest.raises(GraphError):
        parse_qgf("vertex v\n")
