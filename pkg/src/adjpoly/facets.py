"""Facet enumeration through maximal bipartite subgraphs and sign vectors.

Every facet subgraph of the configuration is a maximal bipartite subgraph
B of G, and the facets sharing B biject with the sign vectors
d in {-1,+1}^n that satisfy the fundamental-cycle constraints of a
spanning tree of B: value in {-1,+1} on cycles closed by edges of B,
value 0 on cycles closed by the remaining edges of G.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable

from . import linalg
from .errors import EmptySubset, InternalInconsistency, TooLarge, ValidationError
from .geometry import (
    Facet,
    Point,
    PointConfiguration,
    configuration_from_graph,
    decode_point,
    incidence_matrix,
    verify_facet,
)
from .graphs import (
    CycleVector,
    Graph,
    MaxBipartiteSubgraph,
    SpanningTree,
    enumerate_maximal_bipartite_subgraphs,
    fundamental_cycle,
    has_even_cycle,
    spanning_tree,
)

SignVector = tuple[int, ...]

SIGN_SEARCH_MAX_DIM = 30
CYCLE_ENUM_MAX_VERTICES = 10


@dataclasses.dataclass(frozen=True)
class CycleConstraintSystem:
    """Fundamental-cycle constraints for one maximal bipartite subgraph."""

    tree: SpanningTree
    rows_pm: tuple[CycleVector, ...]
    rows_zero: tuple[CycleVector, ...]


@dataclasses.dataclass(frozen=True)
class FaceProperties:
    dim: int
    corank: int
    independent: bool
    circuit: bool
    component_count: int


@dataclasses.dataclass(frozen=True)
class FacetClass:
    """All facets sharing one facet subgraph, in sign-vector order."""

    subgraph_index: int
    subgraph: MaxBipartiteSubgraph
    corank: int
    facets: tuple[Facet, ...]


def build_cycle_system(g: Graph, b: MaxBipartiteSubgraph) -> CycleConstraintSystem:
    """One +-1 row per non-tree edge of b, one zero row per edge outside b."""
    tree = spanning_tree(b)
    tree_edges = set(tree.edges)
    b_edges = set(b.edges)
    rows_pm = tuple(
        fundamental_cycle(tree, e) for e in b.edges if e not in tree_edges
    )
    rows_zero = tuple(
        fundamental_cycle(tree, e) for e in g.edges if e not in b_edges
    )
    return CycleConstraintSystem(tree=tree, rows_pm=rows_pm, rows_zero=rows_zero)


def enumerate_sign_vectors(sys: CycleConstraintSystem) -> list[SignVector]:
    """All d in {-1,+1}^n solving the system, in binary order (-1 before +1).

    Depth-first assignment over tree-edge positions with interval pruning:
    a partial row sum further from its target set than the remaining
    unassigned mass of that row can never recover.
    """
    n = len(sys.tree.edges)
    if n > SIGN_SEARCH_MAX_DIM:
        raise TooLarge(f"sign search guard: n = {n} > {SIGN_SEARCH_MAX_DIM}")
    rows = [(row.coeffs, False) for row in sys.rows_zero] + [
        (row.coeffs, True) for row in sys.rows_pm
    ]
    by_position: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    remaining = [0] * len(rows)
    for r, (coeffs, _) in enumerate(rows):
        for k, c in enumerate(coeffs):
            if c:
                by_position[k].append((r, c))
                remaining[r] += 1
    partial = [0] * len(rows)
    targets_pm = [is_pm for _, is_pm in rows]
    solutions: list[SignVector] = []
    d = [0] * n

    def feasible(r: int) -> bool:
        s, left = partial[r], remaining[r]
        if targets_pm[r]:
            return s - left <= 1 and s + left >= -1
        return abs(s) <= left

    def extend(k: int) -> None:
        if k == n:
            solutions.append(tuple(d))
            return
        for value in (-1, 1):
            d[k] = value
            ok = True
            for r, c in by_position[k]:
                partial[r] += c * value
                remaining[r] -= 1
            for r, _ in by_position[k]:
                if not feasible(r):
                    ok = False
                    break
            if ok:
                extend(k + 1)
            for r, c in by_position[k]:
                partial[r] -= c * value
                remaining[r] += 1
        d[k] = 0

    # at a full assignment feasible() forces zero rows to 0 exactly and
    # pm rows into {-1, 0, +1}; membership of pm rows in {-1, +1} is by
    # parity: a row's value has the parity of its support size, and an
    # even-support pm row could land on 0.  Filter exactly at the leaves.
    def exact(dv: SignVector) -> bool:
        for coeffs, is_pm in rows:
            value = sum(c * x for c, x in zip(coeffs, dv) if c)
            if is_pm:
                if value not in (-1, 1):
                    return False
            elif value != 0:
                return False
        return True

    extend(0)
    return [dv for dv in solutions if exact(dv)]


def _potentials(tree: SpanningTree, d: SignVector) -> list[int]:
    """Vertex potentials with vertex 1 anchored at 0.

    Each signed tree point d_k x_k must take value -1, i.e.
    a_tail - a_head = -d_k along the oriented tree edge k; BFS discovery
    order guarantees one endpoint is already assigned.
    """
    count = tree.subgraph.vertex_count
    pot = [None] * (count + 1)
    pot[1] = 0
    for k, (tail, head) in enumerate(tree.oriented):
        if pot[tail] is not None:
            pot[head] = pot[tail] + d[k]
        else:
            pot[tail] = pot[head] - d[k]
    return pot  # type: ignore[return-value]


def _facet_from_sign_vector(
    cfg: PointConfiguration,
    b: MaxBipartiteSubgraph,
    tree: SpanningTree,
    d: SignVector,
) -> Facet:
    pot = _potentials(tree, d)
    coeffs = tuple(pot[v] for v in range(2, cfg.graph.vertex_count + 1))
    facet = verify_facet(cfg, coeffs)
    if facet.subgraph_edges != b.edges:
        raise InternalInconsistency(
            "facet subgraph does not match the generating bipartite subgraph"
        )
    return facet


def facet_from_sign_vector(
    g: Graph, b: MaxBipartiteSubgraph, tree: SpanningTree, d: SignVector
) -> Facet:
    """Facet whose tree points carry the signs d; d must solve the system."""
    return _facet_from_sign_vector(configuration_from_graph(g), b, tree, d)


def canonical_facet_pair(g: Graph, b: MaxBipartiteSubgraph) -> tuple[Facet, Facet]:
    """The facet of all crossing edges oriented minus -> plus, and its negative.

    These are the facets of the all-(+1) and all-(-1) sign vectors, which
    solve the cycle system for every maximal bipartite subgraph.
    """
    cfg = configuration_from_graph(g)
    tree = spanning_tree(b)
    n = len(tree.edges)
    plus = _facet_from_sign_vector(cfg, b, tree, (1,) * n)
    minus = _facet_from_sign_vector(cfg, b, tree, (-1,) * n)
    return plus, minus


def enumerate_facet_classes(g: Graph) -> list[FacetClass]:
    """Facet classes grouped by maximal bipartite subgraph.

    Classes are ordered by the subgraph enumeration; facets inside a class
    follow sign-vector order.  Distinctness within a class and disjointness
    across classes hold by construction and are asserted.
    """
    cfg = configuration_from_graph(g)
    seen_normals: dict[tuple[int, ...], int] = {}
    classes = []
    for index, b in enumerate(enumerate_maximal_bipartite_subgraphs(g)):
        system = build_cycle_system(g, b)
        facets = []
        for d in enumerate_sign_vectors(system):
            facet = _facet_from_sign_vector(cfg, b, system.tree, d)
            key = facet.normal.coeffs
            if key in seen_normals:
                raise InternalInconsistency(
                    f"facet normal {key} produced by classes "
                    f"{seen_normals[key]} and {index}"
                )
            seen_normals[key] = index
            facets.append(facet)
        classes.append(
            FacetClass(
                subgraph_index=index,
                subgraph=b,
                corank=b.cyclomatic_number(),
                facets=tuple(facets),
            )
        )
    return classes


def enumerate_all_facets(g: Graph) -> list[Facet]:
    """Every facet of the configuration, grouped by facet subgraph."""
    return [f for cls in enumerate_facet_classes(g) for f in cls.facets]


def face_properties(
    g: Graph, facet_or_point_subset: Facet | Iterable[Point]
) -> FaceProperties:
    """Geometric properties of a subset of a facet, read off its subgraph.

    dim is the incidence-matrix rank minus one (equivalently |V| - k - 1),
    corank is |points| - dim - 1, independence means the subgraph is a
    forest, and circuit means it is exactly one chordless cycle.
    """
    if isinstance(facet_or_point_subset, Facet):
        directed = list(facet_or_point_subset.directed_edges)
    else:
        points = list(facet_or_point_subset)
        directed = [decode_point(p) for p in points]
    if not directed:
        raise EmptySubset("point subset is empty")

    edges = set()
    for i, j in directed:
        e = (i, j) if i < j else (j, i)
        if e not in g.edge_index:
            raise ValidationError(f"point encodes edge {e} not in the graph")
        edges.add(e)
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    component_count = 0
    seen: set[int] = set()
    for start in adj:
        if start in seen:
            continue
        component_count += 1
        stack = [start]
        seen.add(start)
        while stack:
            x = stack.pop()
            for w in adj[x]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    rank = linalg.integer_rank(
        incidence_matrix(directed, g.vertex_count, truncated=True)
    )
    dim = rank - 1
    corank = len(directed) - dim - 1
    independent = len(edges) == len(adj) - component_count
    circuit = (
        component_count == 1
        and len(edges) == len(adj)
        and all(len(ws) == 2 for ws in adj.values())
    )
    return FaceProperties(
        dim=dim,
        corank=corank,
        independent=independent,
        circuit=circuit,
        component_count=component_count,
    )


def all_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All simple cycles as vertex tuples, each listed once.

    A cycle is anchored at its smallest vertex and traversed toward its
    smaller neighbor first, which fixes one of the two directions.
    """
    if g.vertex_count > CYCLE_ENUM_MAX_VERTICES:
        raise TooLarge(
            f"cycle enumeration guard: N = {g.vertex_count} > "
            f"{CYCLE_ENUM_MAX_VERTICES}"
        )
    cycles: list[tuple[int, ...]] = []

    def extend(path: list[int], on_path: set[int]) -> None:
        tip = path[-1]
        start = path[0]
        for w in g.adjacency[tip]:
            if w == start and len(path) >= 3 and path[1] < path[-1]:
                cycles.append(tuple(path))
            elif w > start and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                on_path.remove(w)
                path.pop()

    for s in g.vertices():
        extend([s], {s})
    return cycles


def balancing_check(g: Graph, facet: Facet) -> bool:
    """Every cycle meets the directed facet subgraph half and half.

    Checks, for each simple cycle with a chosen coherent orientation, that
    the facet's directed edges split evenly between the two directions.
    """
    directed = set(facet.directed_edges)
    for cycle in all_cycles(g):
        forward = backward = 0
        for idx, u in enumerate(cycle):
            v = cycle[(idx + 1) % len(cycle)]
            if (u, v) in directed:
                forward += 1
            elif (v, u) in directed:
                backward += 1
        if forward != backward:
            return False
    return True


def is_simplicial(g: Graph) -> bool:
    """All facets are simplices iff the graph has no even cycle."""
    return not has_even_cycle(g)
