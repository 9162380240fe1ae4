"""Exact point configurations of signed edge vectors and their facets.

The configuration of a graph G on vertices 1..N is the set of vectors
+-(e_{i-1} - e_{j-1}) in R^(N-1), one pair per edge {i,j}, with e_0 = 0
(vertex 1's axis is projected out).  All facet decisions are made in
exact integer/rational arithmetic; no floating point is used anywhere.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from collections import deque
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .errors import InternalInconsistency, NotAFacet, TooLarge, ZeroNormal
from .graphs import Bipartition, DirectedEdge, Edge, Graph

Point = tuple[int, ...]

BRUTE_FORCE_MAX_DIM = 8
BRUTE_FORCE_MAX_POINTS = 40


def edge_point(n: int, tail: int, head: int) -> Point:
    """Reduced vector e_{tail-1} - e_{head-1}; vertex 1 contributes nothing."""
    coords = [0] * n
    if tail > 1:
        coords[tail - 2] += 1
    if head > 1:
        coords[head - 2] -= 1
    return tuple(coords)


def decode_point(point: Point) -> DirectedEdge:
    """Inverse of edge_point on valid configuration points."""
    tail = head = 1
    for idx, value in enumerate(point):
        if value == 1:
            tail = idx + 2
        elif value == -1:
            head = idx + 2
        elif value != 0:
            raise ValueError(f"{point} is not a signed edge vector")
    if tail == head:
        raise ValueError(f"{point} is not a signed edge vector")
    return (tail, head)


def incidence_matrix(
    directed_edges: Iterable[DirectedEdge], vertex_count: int, truncated: bool = True
) -> tuple[tuple[int, ...], ...]:
    """Columns of the (truncated) incidence matrix of a directed subgraph.

    The column for (i, j) is e_i - e_j over vertex coordinates 1..N; the
    truncated form drops the vertex-1 row, which makes the columns exactly
    the configuration points of the edges.  Full-form columns sum to 0.
    """
    columns = []
    for tail, head in directed_edges:
        reduced = edge_point(vertex_count - 1, tail, head)
        columns.append(reduced if truncated else (-sum(reduced),) + reduced)
    return tuple(columns)


class PointConfiguration:
    """The 2m signed edge vectors of a graph, in deterministic order.

    For each edge {i, j} (i < j) in graph order the point for (i, j) comes
    first, then the point for (j, i); index 2k+s therefore encodes edge k
    with orientation s.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.dim = graph.n
        points: list[Point] = []
        directed: list[DirectedEdge] = []
        for i, j in graph.edges:
            points.append(edge_point(self.dim, i, j))
            directed.append((i, j))
            points.append(edge_point(self.dim, j, i))
            directed.append((j, i))
        self.points: tuple[Point, ...] = tuple(points)
        self.directed_edges: tuple[DirectedEdge, ...] = tuple(directed)
        self.point_index: dict[Point, int] = {p: i for i, p in enumerate(points)}

    def index_of_directed_edge(self, edge: DirectedEdge) -> int:
        i, j = edge
        key = (i, j) if i < j else (j, i)
        k = self.graph.edge_index[key]
        return 2 * k + (0 if i < j else 1)

    def lift(self, point: Point) -> tuple[int, ...]:
        """Embed into R^N by prepending the negated coordinate sum."""
        return (-sum(point),) + point

    def __len__(self) -> int:
        return len(self.points)


def configuration_from_graph(g: Graph) -> PointConfiguration:
    return PointConfiguration(g)


@dataclasses.dataclass(frozen=True)
class InnerNormal:
    """Primitive integer inner normal with its normalizing scale.

    scale * coeffs is the normalized inner normal: it attains minimum -1
    over the configuration.  For genuine facets of these configurations
    the primitive normal already attains -1, so scale is 1.
    """

    coeffs: tuple[int, ...]
    scale: Fraction

    def normalized(self) -> tuple[Fraction, ...]:
        return tuple(self.scale * c for c in self.coeffs)


@dataclasses.dataclass(frozen=True)
class Facet:
    """A facet of the configuration, keyed by its primitive inner normal."""

    normal: InnerNormal
    point_indices: tuple[int, ...]
    subgraph_edges: tuple[Edge, ...]
    directed_edges: tuple[DirectedEdge, ...]
    dim: int
    corank: int
    bipartition: Bipartition

    def points(self, cfg: PointConfiguration) -> tuple[Point, ...]:
        return tuple(cfg.points[i] for i in self.point_indices)


def _as_integer_coeffs(normal: InnerNormal | Sequence) -> tuple[int, ...]:
    if isinstance(normal, InnerNormal):
        return normal.coeffs
    values = [Fraction(v) for v in normal]
    den = 1
    for v in values:
        den = den * v.denominator // math.gcd(den, v.denominator)
    return tuple(int(v * den) for v in values)


def verify_facet(cfg: PointConfiguration, normal: InnerNormal | Sequence) -> Facet:
    """Check that a normal supports a facet and assemble it.

    The minimizer set of <., normal> must be (n-1)-dimensional; then the
    rescaled normal attains exactly -1 on it and > -1 elsewhere.  Raises
    ZeroNormal or NotAFacet otherwise.
    """
    coeffs = _as_integer_coeffs(normal)
    if len(coeffs) != cfg.dim:
        raise ValueError(f"normal has length {len(coeffs)}, expected {cfg.dim}")
    if not any(coeffs):
        raise ZeroNormal("inner normal must be nonzero")
    coeffs = linalg.primitive(coeffs)

    values = [
        sum(c * x for c, x in zip(coeffs, point) if x) for point in cfg.points
    ]
    minimum = min(values)
    if minimum >= 0:
        # cannot happen for nonzero normals on a full-dimensional symmetric
        # configuration, but guard against misuse
        raise NotAFacet("normal does not attain a negative minimum")
    min_indices = tuple(i for i, v in enumerate(values) if v == minimum)
    if affine_dimension([cfg.points[i] for i in min_indices]) != cfg.dim - 1:
        raise NotAFacet(
            f"minimizer set has affine dimension != {cfg.dim - 1}"
        )
    return _assemble_facet(cfg, coeffs, minimum, min_indices)


def _assemble_facet(
    cfg: PointConfiguration,
    primitive_coeffs: tuple[int, ...],
    minimum: int,
    min_indices: tuple[int, ...],
) -> Facet:
    directed = tuple(cfg.directed_edges[i] for i in min_indices)
    undirected = set()
    for i, j in directed:
        e = (i, j) if i < j else (j, i)
        if e in undirected:
            raise InternalInconsistency(f"facet contains both orientations of {e}")
        undirected.add(e)
    subgraph_edges = tuple(sorted(undirected))
    bipartition = _two_color(subgraph_edges, cfg.graph.vertex_count)
    dim = cfg.dim - 1
    return Facet(
        normal=InnerNormal(coeffs=primitive_coeffs, scale=Fraction(-1, minimum)),
        point_indices=min_indices,
        subgraph_edges=subgraph_edges,
        directed_edges=directed,
        dim=dim,
        corank=len(min_indices) - dim - 1,
        bipartition=bipartition,
    )


def _two_color(edges: tuple[Edge, ...], vertex_count: int) -> Bipartition:
    """2-color a facet subgraph from vertex 1; it must be connected spanning."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    color = {1: 1}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in adj.get(v, ()):
            if w not in color:
                color[w] = -color[v]
                queue.append(w)
            elif color[w] == color[v]:
                raise InternalInconsistency("facet subgraph is not bipartite")
    if len(color) != vertex_count:
        raise InternalInconsistency("facet subgraph is not spanning and connected")
    return Bipartition(
        plus=frozenset(v for v, c in color.items() if c == 1),
        minus=frozenset(v for v, c in color.items() if c == -1),
    )


def affine_dimension(points: Iterable[Point]) -> int:
    """Exact affine dimension of a nonempty point set."""
    pts = list(points)
    if not pts:
        raise ValueError("affine dimension of an empty set is undefined")
    base = pts[0]
    diffs = [
        tuple(a - b for a, b in zip(p, base)) for p in pts[1:]
    ]
    return linalg.integer_rank(diffs)


def brute_force_facets(cfg: PointConfiguration) -> list[Facet]:
    """Independent facet oracle: exhaustive hyperplane search.

    For every n-subset of points that spans a hyperplane avoiding the
    origin, solves <x, a> = -1 exactly and accepts the hyperplane iff the
    whole configuration lies on the far side.  Output is deduplicated by
    primitive normal and sorted lexicographically by it.  Subsets that
    contain a +- pair are skipped: their affine span passes through 0.
    """
    n = cfg.dim
    if n > BRUTE_FORCE_MAX_DIM or len(cfg.points) > BRUTE_FORCE_MAX_POINTS:
        raise TooLarge(
            f"oracle guard: dim {n} > {BRUTE_FORCE_MAX_DIM} or "
            f"{len(cfg.points)} points > {BRUTE_FORCE_MAX_POINTS}"
        )
    m = cfg.graph.m
    sparse = [
        [(idx, value) for idx, value in enumerate(point) if value]
        for point in cfg.points
    ]
    found: set[tuple[int, ...]] = set()
    for edge_combo in itertools.combinations(range(m), n):
        for signs in itertools.product((0, 1), repeat=n):
            subset = [2 * e + s for e, s in zip(edge_combo, signs)]
            solved = linalg.solve_neg_ones([cfg.points[i] for i in subset])
            if solved is None:
                continue
            nums, den = solved
            ok = True
            for entries in sparse:
                value = 0
                for idx, sign in entries:
                    value += sign * nums[idx]
                if value < -den:
                    ok = False
                    break
            if ok:
                found.add(linalg.primitive(nums))
    return [verify_facet(cfg, key) for key in sorted(found)]
