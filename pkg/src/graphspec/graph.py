"""Combinatorial and metric model of a compact metric graph.

A metric graph is a finite set of edges (intervals of positive length)
glued at vertices.  Each vertex is an equivalence class of edge
endpoints; loops and parallel edges are allowed.  Loops count twice
toward the degree of their vertex.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Edge",
    "MetricGraph",
    "GraphAnalysis",
    "CycleBasis",
    "GraphError",
    "build_graph",
    "analyze",
    "cycle_basis",
    "has_independent_cycles",
    "cut_vertex",
    "tree_diameter",
    "builtin",
    "parse_qgf",
    "load_qgf",
]


class GraphError(ValueError):
    """Raised for structurally invalid graphs or graph operations."""


@dataclass(frozen=True)
class Edge:
    """An edge parametrized by arclength from its tail (x=0) to its head (x=L)."""

    name: str
    tail: int
    head: int
    length: float


@dataclass(frozen=True)
class MetricGraph:
    """Immutable metric graph; vertices are referenced by index or name."""

    edges: tuple[Edge, ...]
    vertex_names: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.edges:
            raise GraphError("a metric graph needs at least one edge")
        seen: set[str] = set()
        for e in self.edges:
            if e.name in seen:
                raise GraphError(f"duplicate edge name {e.name!r}")
            seen.add(e.name)
            if not (math.isfinite(e.length) and e.length > 0):
                raise GraphError(f"edge {e.name!r} has nonpositive or non-finite length")
            if not (0 <= e.tail < len(self.vertex_names) and 0 <= e.head < len(self.vertex_names)):
                raise GraphError(f"edge {e.name!r} references an unknown vertex")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_names)

    @property
    def total_length(self) -> float:
        return sum(e.length for e in self.edges)

    @cached_property
    def lengths(self) -> tuple[float, ...]:
        return tuple(e.length for e in self.edges)

    @cached_property
    def endpoints_of_vertex(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the incident endpoints as sorted (edge_index, end) pairs.

        ``end`` is 0 for the tail (x=0) and 1 for the head (x=L); a loop
        contributes both its endpoints to the same vertex.
        """
        buckets: list[list[tuple[int, int]]] = [[] for _ in self.vertex_names]
        for i, e in enumerate(self.edges):
            buckets[e.tail].append((i, 0))
            buckets[e.head].append((i, 1))
        return tuple(tuple(sorted(b)) for b in buckets)

    def degree(self, v: int) -> int:
        return len(self.endpoints_of_vertex[v])

    @cached_property
    def degrees(self) -> dict[str, int]:
        return {name: self.degree(i) for i, name in enumerate(self.vertex_names)}

    def vertex_index(self, name: str) -> int:
        try:
            return self.vertex_names.index(name)
        except ValueError:
            raise GraphError(f"unknown vertex {name!r}") from None

    def edge_index(self, name: str) -> int:
        for i, e in enumerate(self.edges):
            if e.name == name:
                return i
        raise GraphError(f"unknown edge {name!r}")

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the incident (edge_index, other_vertex) pairs; loops appear twice."""
        adj: list[list[tuple[int, int]]] = [[] for _ in self.vertex_names]
        for i, e in enumerate(self.edges):
            adj[e.tail].append((i, e.head))
            adj[e.head].append((i, e.tail))
        return tuple(tuple(a) for a in adj)


@dataclass(frozen=True)
class GraphAnalysis:
    """Structural facts about a metric graph used by the spectral theory."""

    connected: bool
    component_count: int
    bipartite: bool
    bipartition: tuple[frozenset[str], frozenset[str]] | None
    betti: int
    boundary: frozenset[str]
    degrees: dict[str, int]
    bridge_edges: frozenset[str]
    doubly_connected_length: float


@dataclass(frozen=True)
class CycleBasis:
    """A spanning tree together with the fundamental cycles of the non-tree edges.

    Each cycle is an ordered closed walk of (edge_name, sign) pairs where
    sign +1 means the edge is traversed from tail to head.
    """

    spanning_tree_edges: frozenset[str]
    fundamental_cycles: tuple[tuple[tuple[str, int], ...], ...]


def build_graph(edge_declarations: Sequence[tuple[str, str, str, float]]) -> MetricGraph:
    """Build a metric graph from (name, label_a, label_b, length) declarations.

    Vertices are the equivalence classes of shared labels, numbered in
    order of first appearance.  Loops (label_a == label_b) and parallel
    edges are permitted.
    """
    if not edge_declarations:
        raise GraphError("empty edge list")
    labels: dict[str, int] = {}
    edges = []
    for name, a, b, length in edge_declarations:
        for lab in (a, b):
            if lab not in labels:
                labels[lab] = len(labels)
        edges.append(Edge(name=str(name), tail=labels[a], head=labels[b], length=float(length)))
    return MetricGraph(edges=tuple(edges), vertex_names=tuple(labels))


def _components(g: MetricGraph) -> list[int]:
    """Component id per vertex."""
    comp = [-1] * g.num_vertices
    cid = 0
    for s in range(g.num_vertices):
        if comp[s] >= 0:
            continue
        stack = [s]
        comp[s] = cid
        while stack:
            v = stack.pop()
            for _, w in g.adjacency[v]:
                if comp[w] < 0:
                    comp[w] = cid
                    stack.append(w)
        cid += 1
    return comp


def _two_coloring(g: MetricGraph) -> list[int] | None:
    """2-coloring of the vertices, or None if some cycle is odd (loops included)."""
    color = [-1] * g.num_vertices
    for s in range(g.num_vertices):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for ei, w in g.adjacency[v]:
                if w == v:  # loop: odd cycle of length one
                    return None
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def _bridges(g: MetricGraph) -> set[int]:
    """Bridge edge indices via iterative low-link DFS; parallel edges and loops are never bridges."""
    disc = [-1] * g.num_vertices
    low = [0] * g.num_vertices
    bridges: set[int] = set()
    timer = 0
    for s in range(g.num_vertices):
        if disc[s] >= 0:
            continue
        # stack entries: (vertex, incoming edge index, iterator position)
        stack: list[list] = [[s, -1, 0]]
        disc[s] = low[s] = timer
        timer += 1
        while stack:
            v, in_edge, pos = stack[-1]
            if pos < len(g.adjacency[v]):
                stack[-1][2] += 1
                ei, w = g.adjacency[v][pos]
                if ei == in_edge or w == v:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append([w, ei, 0])
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        bridges.add(in_edge)
    return bridges


def analyze(g: MetricGraph) -> GraphAnalysis:
    """Connectivity, bipartiteness, Betti number, boundary and bridge structure."""
    comp = _components(g)
    ncomp = max(comp) + 1
    coloring = _two_coloring(g)
    betti = g.num_edges - g.num_vertices + ncomp
    boundary = frozenset(n for i, n in enumerate(g.vertex_names) if g.degree(i) == 1)
    bridge_idx = _bridges(g)
    bridge_edges = frozenset(g.edges[i].name for i in bridge_idx)
    dc_length = sum(e.length for i, e in enumerate(g.edges) if i not in bridge_idx)
    bipartition = None
    if coloring is not None:
        bipartition = (
            frozenset(n for i, n in enumerate(g.vertex_names) if coloring[i] == 0),
            frozenset(n for i, n in enumerate(g.vertex_names) if coloring[i] == 1),
        )
    return GraphAnalysis(
        connected=(ncomp == 1),
        component_count=ncomp,
        bipartite=(coloring is not None),
        bipartition=bipartition,
        betti=betti,
        boundary=boundary,
        degrees=dict(g.degrees),
        bridge_edges=bridge_edges,
        doubly_connected_length=dc_length,
    )


def _spanning_tree(g: MetricGraph) -> tuple[set[int], list[tuple[int, int]]]:
    """BFS spanning tree: (tree edge indices, parent (vertex, edge) per vertex)."""
    parent: list[tuple[int, int]] = [(-1, -1)] * g.num_vertices
    seen = [False] * g.num_vertices
    tree: set[int] = set()
    from collections import deque

    dq = deque([0])
    seen[0] = True
    while dq:
        v = dq.popleft()
        for ei, w in g.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = (v, ei)
                tree.add(ei)
                dq.append(w)
    if not all(seen):
        raise GraphError("cycle basis requires a connected graph")
    return tree, parent


def cycle_basis(g: MetricGraph) -> CycleBasis:
    """Spanning tree plus one signed fundamental cycle per non-tree edge."""
    tree, parent = _spanning_tree(g)

    def path_to_root(v: int) -> list[tuple[int, int]]:
        # list of (edge index, sign) walking from v toward the root
        out = []
        while parent[v][0] >= 0:
            p, ei = parent[v]
            e = g.edges[ei]
            sign = -1 if e.tail == p else 1  # traversed child -> parent
            out.append((ei, sign))
            v = p
        return out

    cycles = []
    for ci, e in enumerate(g.edges):
        if ci in tree:
            continue
        if e.tail == e.head:
            cycles.append(((g.edges[ci].name, 1),))
            continue
        pa = path_to_root(e.tail)
        pb = path_to_root(e.head)
        # strip the common suffix up to the lowest common ancestor
        while pa and pb and pa[-1][0] == pb[-1][0]:
            pa.pop()
            pb.pop()
        # walk: chord tail->head, then head up to LCA, then LCA down to tail
        walk: list[tuple[int, int]] = [(ci, 1)]
        walk.extend(pb)
        walk.extend((ei, -s) for ei, s in reversed(pa))
        cycles.append(tuple((g.edges[ei].name, s) for ei, s in walk))
    return CycleBasis(
        spanning_tree_edges=frozenset(g.edges[i].name for i in tree),
        fundamental_cycles=tuple(cycles),
    )


def has_independent_cycles(g: MetricGraph) -> bool:
    """True iff no edge lies on two distinct cycles.

    Checked per biconnected block: each block must be a single edge or a
    single cycle, i.e. have at most as many edges as vertices.
    """
    for block in _biconnected_blocks(g):
        verts = set()
        for ei in block:
            verts.add(g.edges[ei].tail)
            verts.add(g.edges[ei].head)
        if len(block) > len(verts):
            return False
    return True


def _biconnected_blocks(g: MetricGraph) -> list[set[int]]:
    """Edge sets of the biconnected blocks (loops form their own blocks)."""
    disc = [-1] * g.num_vertices
    low = [0] * g.num_vertices
    blocks: list[set[int]] = []
    edge_stack: list[int] = []
    timer = 0
    for s in range(g.num_vertices):
        if disc[s] >= 0:
            continue
        stack: list[list] = [[s, -1, 0]]
        disc[s] = low[s] = timer
        timer += 1
        while stack:
            v, in_edge, pos = stack[-1]
            if pos < len(g.adjacency[v]):
                stack[-1][2] += 1
                ei, w = g.adjacency[v][pos]
                if ei == in_edge:
                    continue
                if w == v:
                    blocks.append({ei})
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append(ei)
                    stack.append([w, ei, 0])
                elif disc[w] < disc[v]:
                    edge_stack.append(ei)
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] >= disc[p]:
                        block: set[int] = set()
                        while edge_stack:
                            top = edge_stack.pop()
                            block.add(top)
                            if top == in_edge:
                                break
                        blocks.append(block)
    return blocks


def cut_vertex(
    g: MetricGraph,
    v: str,
    split: tuple[Iterable[tuple[str, int]], Iterable[tuple[str, int]]],
) -> MetricGraph:
    """Chop vertex ``v`` into two vertices along a partition of its endpoints.

    Each endpoint is given as (edge_name, end) with end 0 for the tail and
    1 for the head.  Edge lengths are unchanged; the result may be
    disconnected.
    """
    vi = g.vertex_index(v)
    if g.degree(vi) < 2:
        raise GraphError(f"cannot cut degree-1 vertex {v!r}")
    part_a = {(g.edge_index(n), e) for n, e in split[0]}
    part_b = {(g.edge_index(n), e) for n, e in split[1]}
    if not part_a or not part_b:
        raise GraphError("both parts of the split must be nonempty")
    here = set(g.endpoints_of_vertex[vi])
    if part_a & part_b or part_a | part_b != here:
        raise GraphError(f"split is not a partition of the endpoints of {v!r}")

    names = [n for i, n in enumerate(g.vertex_names) if i != vi]
    name_a, name_b = f"{v}.1", f"{v}.2"
    names.extend([name_a, name_b])
    remap = {}
    j = 0
    for i in range(g.num_vertices):
        if i != vi:
            remap[i] = j
            j += 1
    ia, ib = len(names) - 2, len(names) - 1

    def new_vertex(edge_idx: int, end: int, old: int) -> int:
        if old != vi:
            return remap[old]
        return ia if (edge_idx, end) in part_a else ib

    edges = tuple(
        Edge(e.name, new_vertex(i, 0, e.tail), new_vertex(i, 1, e.head), e.length)
        for i, e in enumerate(g.edges)
    )
    return MetricGraph(edges=edges, vertex_names=tuple(names))


def tree_diameter(g: MetricGraph) -> float:
    """Metric diameter of a connected tree (max distance between boundary vertices)."""
    a = analyze(g)
    if not (a.connected and a.betti == 0):
        raise GraphError("tree_diameter requires a connected tree")

    def farthest(src: int) -> tuple[int, float]:
        dist = [-1.0] * g.num_vertices
        dist[src] = 0.0
        stack = [src]
        while stack:
            x = stack.pop()
            for ei, w in g.adjacency[x]:
                if dist[w] < 0:
                    dist[w] = dist[x] + g.edges[ei].length
                    stack.append(w)
        far = max(range(g.num_vertices), key=lambda i: dist[i])
        return far, dist[far]

    u, _ = farthest(0)
    _, d = farthest(u)
    return d


def builtin(name: str, *params: float) -> MetricGraph:
    """Construct one of the named example graphs.

    path(l1, ..., ln); star(m, length); cycle(l1, ..., ln);
    lasso(loop_length, tail_length); dumbbell(total_length, loop_length);
    complete_bipartite(m, n, length).
    """
    p = list(params)
    if name == "path":
        if not p or any(x <= 0 for x in p):
            raise GraphError("path needs positive lengths")
        return build_graph([(f"e{i+1}", f"v{i}", f"v{i+1}", x) for i, x in enumerate(p)])
    if name == "star":
        if len(p) != 2:
            raise GraphError("star needs (m, length)")
        m = int(p[0])
        if m < 1 or m != p[0] or p[1] <= 0:
            raise GraphError("star needs integer m >= 1 and positive length")
        return build_graph([(f"e{i+1}", "c", f"v{i+1}", p[1]) for i in range(m)])
    if name == "cycle":
        if not p or any(x <= 0 for x in p):
            raise GraphError("cycle needs positive lengths")
        if len(p) == 1:
            return build_graph([("e1", "v0", "v0", p[0])])
        n = len(p)
        return build_graph(
            [(f"e{i+1}", f"v{i}", f"v{(i+1) % n}", p[i]) for i in range(n)]
        )
    if name == "lasso":
        # tail plus a two-edge cycle, which keeps the graph bipartite
        if len(p) != 2 or p[0] <= 0 or p[1] <= 0:
            raise GraphError("lasso needs (loop_length, tail_length)")
        loop, tail = p
        return build_graph(
            [
                ("tail", "v1", "j", tail),
                ("loop_a", "j", "m", loop / 2),
                ("loop_b", "m", "j", loop / 2),
            ]
        )
    if name == "dumbbell":
        if len(p) != 2 or p[1] <= 0 or p[0] <= 2 * p[1]:
            raise GraphError("dumbbell needs total_length > 2*loop_length > 0")
        total, loop = p
        return build_graph(
            [
                ("loop_l", "a", "a", loop),
                ("handle", "a", "b", total - 2 * loop),
                ("loop_r", "b", "b", loop),
            ]
        )
    if name == "complete_bipartite":
        if len(p) != 3:
            raise GraphError("complete_bipartite needs (m, n, length)")
        m, n = int(p[0]), int(p[1])
        if m < 1 or n < 1 or m != p[0] or n != p[1] or p[2] <= 0:
            raise GraphError("complete_bipartite needs integers m, n >= 1 and positive length")
        decls = []
        for i in range(m):
            for j in range(n):
                decls.append((f"e{i+1}_{j+1}", f"a{i+1}", f"b{j+1}", p[2]))
        return build_graph(decls)
    raise GraphError(f"unknown builtin graph {name!r}")


def parse_qgf(text: str) -> MetricGraph:
    """Parse the QGF text format: ``edge <name> <vertexA> <vertexB> <length>`` per line."""
    decls = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] != "edge" or len(tok) != 5:
            raise GraphError(f"QGF line {lineno}: expected 'edge <name> <vA> <vB> <length>'")
        try:
            length = float(tok[4])
        except ValueError:
            raise GraphError(f"QGF line {lineno}: bad length {tok[4]!r}") from None
        decls.append((tok[1], tok[2], tok[3], length))
    return build_graph(decls)


def load_qgf(path: str) -> MetricGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_qgf(fh.read())
