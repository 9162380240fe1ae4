"""Shared fixtures: small-graph corpora and independent test oracles."""

import functools
import itertools
from pathlib import Path

import pytest

from adjpoly import Graph, ValidationError, parse_edge_list

DATA = Path(__file__).parent / "data"


def all_connected_graphs(n: int):
    """Every connected simple graph on labeled vertices 1..n."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    out = []
    for r in range(n - 1, len(pairs) + 1):
        for subset in itertools.combinations(pairs, r):
            try:
                out.append(Graph(n, subset))
            except ValidationError:
                continue
    return out


def n6_sample_graphs() -> dict[str, Graph]:
    """Fixed six-vertex sample: trees, bipartite, odd/even mixes, dense."""
    return {
        "cycle6": Graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)]),
        "cycle6_chord": Graph(
            6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 4)]
        ),
        "k33": Graph(6, [(u, v) for u in (1, 2, 3) for v in (4, 5, 6)]),
        "prism": Graph(
            6,
            [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)],
        ),
        "wheel": Graph(
            6,
            [(2, 3), (3, 4), (4, 5), (5, 6), (2, 6), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6)],
        ),
        "k6": Graph(6, [(u, v) for u in range(1, 7) for v in range(u + 1, 7)]),
        "path6": Graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]),
        "star6": Graph(6, [(1, v) for v in range(2, 7)]),
        "c5_pendant": Graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 6)]),
        "theta": Graph(6, [(1, 2), (2, 6), (1, 3), (3, 4), (4, 6), (1, 5), (5, 6)]),
    }


@functools.lru_cache(maxsize=None)
def exhaustive_corpus(max_n: int = 5) -> tuple[Graph, ...]:
    graphs = []
    for n in range(2, max_n + 1):
        graphs.extend(all_connected_graphs(n))
    return tuple(graphs)


def is_bipartite_edges(edges) -> bool:
    """2-colorability of an edge set, one component at a time."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    color: dict[int, int] = {}
    for start in adj:
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for w in adj[x]:
                if w not in color:
                    color[w] = 1 - color[x]
                    stack.append(w)
                elif color[w] == color[x]:
                    return False
    return True


def brute_force_max_bipartite(g: Graph) -> set[frozenset]:
    """Oracle: filter all edge subsets for bipartite, keep inclusion-maximal."""
    bipartite = []
    for r in range(1, g.m + 1):
        for subset in itertools.combinations(g.edges, r):
            if is_bipartite_edges(subset):
                bipartite.append(frozenset(subset))
    return {s for s in bipartite if not any(s < t for t in bipartite)}


@pytest.fixture(scope="session")
def joined45_path() -> Path:
    return DATA / "joined_4_5.txt"


@pytest.fixture(scope="session")
def joined45(joined45_path) -> Graph:
    return parse_edge_list(joined45_path.read_bytes())
