"""Connected simple graphs and their bipartite structure.

Vertices are labeled 1..N.  Undirected edges are stored as (u, v) with
u < v, sorted lexicographically; a directed edge is a plain (tail, head)
tuple.  Everything here is immutable after construction, so values can be
shared freely across threads.
"""

from __future__ import annotations

import dataclasses
import functools
from collections import deque
from typing import Iterable

from .errors import EdgeInTree, ParseError, ValidationError

Edge = tuple[int, int]
DirectedEdge = tuple[int, int]


def reverse_edge(edge: DirectedEdge) -> DirectedEdge:
    """Negation of a directed edge: -(i, j) = (j, i)."""
    return (edge[1], edge[0])


class Graph:
    """Simple connected undirected graph on vertices 1..N.

    The edge list is normalized to (min, max) pairs and kept in
    lexicographic order; every vector in the package is indexed against
    this order (or against a spanning tree's discovery order).
    """

    def __init__(self, vertex_count: int, edges: Iterable[Edge]):
        if vertex_count < 2:
            raise ValidationError(f"need at least 2 vertices, got {vertex_count}")
        normalized = []
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise ValidationError(f"edge ({u}, {v}) outside 1..{vertex_count}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValidationError(f"duplicate edge {e}")
            seen.add(e)
            normalized.append(e)
        if not normalized:
            raise ValidationError("edge list is empty")
        normalized.sort()

        self.vertex_count = vertex_count
        self.edges: tuple[Edge, ...] = tuple(normalized)
        self.edge_index: dict[Edge, int] = {e: i for i, e in enumerate(self.edges)}
        adj: dict[int, list[int]] = {v: [] for v in range(1, vertex_count + 1)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adjacency: dict[int, tuple[int, ...]] = {
            v: tuple(sorted(ws)) for v, ws in adj.items()
        }
        if not self._is_connected():
            raise ValidationError("graph is not connected")

    @property
    def n(self) -> int:
        """Reduced dimension N - 1."""
        return self.vertex_count - 1

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def _is_connected(self) -> bool:
        seen = {1}
        queue = deque([1])
        while queue:
            v = queue.popleft()
            for w in self.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.vertex_count

    def __repr__(self) -> str:
        return f"Graph(N={self.vertex_count}, m={self.m})"


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse the plain-text edge-list format into a validated Graph.

    One edge per line as two whitespace-separated 1-based integers;
    blank lines and lines starting with '#' are ignored; N is inferred
    as the largest label seen.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    edges = []
    max_label = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer label in {line!r}") from None
        if u < 1 or v < 1:
            raise ValidationError(f"line {lineno}: labels must be >= 1, got {line!r}")
        if u == v:
            raise ValidationError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
        max_label = max(max_label, u, v)
    if not edges:
        raise ValidationError("no edges in input")
    return Graph(max_label, edges)


@dataclasses.dataclass(frozen=True)
class Bipartition:
    """Nontrivial split of the vertex set, canonicalized so 1 is in plus."""

    plus: frozenset[int]
    minus: frozenset[int]

    def side(self, v: int) -> int:
        """+1 if v is in plus, -1 if in minus."""
        if v in self.plus:
            return 1
        if v in self.minus:
            return -1
        raise KeyError(v)

    def crosses(self, edge: Edge) -> bool:
        return self.side(edge[0]) != self.side(edge[1])


@dataclasses.dataclass(frozen=True)
class MaxBipartiteSubgraph:
    """A maximal bipartite subgraph: a bipartition plus all crossing edges.

    Maximality forces the edge set to be exactly the crossing edges of the
    bipartition, and the crossing subgraph to be connected and spanning.
    """

    bipartition: Bipartition
    edges: tuple[Edge, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.bipartition.plus) + len(self.bipartition.minus)

    def cyclomatic_number(self) -> int:
        # connected and spanning, so mu = m - (N - 1)
        return len(self.edges) - (self.vertex_count - 1)


def enumerate_maximal_bipartite_subgraphs(g: Graph) -> list[MaxBipartiteSubgraph]:
    """All maximal bipartite subgraphs of g, in bipartition-bitmask order.

    Scans the 2^(N-1) vertex bipartitions with vertex 1 on the plus side,
    takes all crossing edges of each, and keeps the result iff that
    crossing subgraph is connected and spanning.  Every maximal bipartite
    subgraph arises this way exactly once: it contains every crossing edge
    of its (unique, up to swap) 2-coloring.
    """
    n_vert = g.vertex_count
    results = []
    for mask in range((1 << (n_vert - 1)) - 1):
        # bit k set -> vertex k+2 on the plus side; mask of all ones would
        # leave the minus side empty, hence the exclusive upper bound
        plus = {1} | {k + 2 for k in range(n_vert - 1) if mask >> k & 1}
        crossing = tuple(
            e for e in g.edges if (e[0] in plus) != (e[1] in plus)
        )
        if not crossing:
            continue
        if not _connected_spanning(crossing, n_vert):
            continue
        minus = frozenset(g.vertices()) - plus
        bip = Bipartition(plus=frozenset(plus), minus=minus)
        results.append(MaxBipartiteSubgraph(bipartition=bip, edges=crossing))
    return results


def _connected_spanning(edges: tuple[Edge, ...], vertex_count: int) -> bool:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if len(adj) != vertex_count:
        return False
    start = next(iter(adj))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == vertex_count


@dataclasses.dataclass(frozen=True, eq=False)
class SpanningTree:
    """BFS spanning tree of a maximal bipartite subgraph, rooted at vertex 1.

    Edges are listed in BFS discovery order and each is oriented from the
    minus side to the plus side of the owning bipartition.
    """

    subgraph: MaxBipartiteSubgraph
    edges: tuple[Edge, ...]
    oriented: tuple[DirectedEdge, ...]
    parent: dict[int, int]
    depth: dict[int, int]

    @functools.cached_property
    def edge_position(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}


def spanning_tree(b: MaxBipartiteSubgraph) -> SpanningTree:
    """Deterministic BFS tree of b from vertex 1, ascending neighbor order."""
    adj: dict[int, list[int]] = {}
    for u, v in b.edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for v in adj:
        adj[v].sort()

    parent = {1: 0}
    depth = {1: 0}
    tree_edges: list[Edge] = []
    oriented: list[DirectedEdge] = []
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w in parent:
                continue
            parent[w] = v
            depth[w] = depth[v] + 1
            tree_edges.append((v, w) if v < w else (w, v))
            if b.bipartition.side(v) < 0:
                oriented.append((v, w))
            else:
                oriented.append((w, v))
            queue.append(w)
    return SpanningTree(
        subgraph=b,
        edges=tuple(tree_edges),
        oriented=tuple(oriented),
        parent=parent,
        depth=depth,
    )


@dataclasses.dataclass(frozen=True)
class CycleVector:
    """Signed incidence of the fundamental cycle closed by a non-tree edge.

    coeffs is indexed by tree-edge order; entry +1 means the tree edge is
    traversed along its canonical orientation when walking the tree path
    from the larger endpoint of the non-tree edge back to the smaller one.
    """

    non_tree_edge: DirectedEdge
    coeffs: tuple[int, ...]

    def dot(self, d: tuple[int, ...]) -> int:
        return sum(c * dk for c, dk in zip(self.coeffs, d) if c)


def fundamental_cycle(t: SpanningTree, e: Edge) -> CycleVector:
    """Cycle vector of non-tree edge e, traversed small -> large endpoint."""
    a, b = (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])
    if (a, b) in t.edge_position:
        raise EdgeInTree(f"edge {(a, b)} belongs to the tree")
    coeffs = [0] * len(t.edges)
    pos = t.edge_position
    # walk from b up and from a up to the LCA, recording traversal direction
    x, y = b, a
    steps_from_b: list[tuple[int, int]] = []  # (child, parent): walked child -> parent
    steps_to_a: list[tuple[int, int]] = []  # (parent, child): walked parent -> child
    while t.depth[x] > t.depth[y]:
        steps_from_b.append((x, t.parent[x]))
        x = t.parent[x]
    while t.depth[y] > t.depth[x]:
        steps_to_a.append((t.parent[y], y))
        y = t.parent[y]
    while x != y:
        steps_from_b.append((x, t.parent[x]))
        steps_to_a.append((t.parent[y], y))
        x = t.parent[x]
        y = t.parent[y]
    steps_to_a.reverse()
    for u, v in steps_from_b + steps_to_a:
        edge = (u, v) if u < v else (v, u)
        k = pos[edge]
        coeffs[k] = 1 if t.oriented[k] == (u, v) else -1
    return CycleVector(non_tree_edge=(a, b), coeffs=tuple(coeffs))


def cyclomatic_number(edge_subset: Iterable[Edge], g: Graph) -> int:
    """|E| - |V touched| + (components of the touched subgraph)."""
    edges = set()
    for u, v in edge_subset:
        e = (u, v) if u < v else (v, u)
        if e not in g.edge_index:
            raise ValidationError(f"edge {e} is not in the graph")
        edges.add(e)
    if not edges:
        return 0
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    components = 0
    seen: set[int] = set()
    for start in adj:
        if start in seen:
            continue
        components += 1
        seen.add(start)
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for w in adj[x]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return len(edges) - len(adj) + components


def has_even_cycle(g: Graph) -> bool:
    """True iff g contains a cycle of even length.

    An even cycle is bipartite, so it extends to some maximal bipartite
    subgraph, which then has cyclomatic number >= 1; conversely any cycle
    inside a bipartite subgraph is even.
    """
    return any(
        b.cyclomatic_number() >= 1 for b in enumerate_maximal_bipartite_subgraphs(g)
    )
