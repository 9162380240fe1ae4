"""Sign-vector facet enumeration, face properties, balancing, simpliciality."""

import itertools

import pytest

from adjpoly import (
    EmptySubset,
    Facet,
    InnerNormal,
    balancing_check,
    brute_force_facets,
    build_cycle_system,
    canonical_facet_pair,
    configuration_from_graph,
    cyclomatic_number,
    enumerate_all_facets,
    enumerate_facet_classes,
    enumerate_maximal_bipartite_subgraphs,
    enumerate_sign_vectors,
    face_properties,
    facet_from_sign_vector,
    has_even_cycle,
    is_simplicial,
    parse_edge_list,
    spanning_tree,
)
from adjpoly.counting import cycle_graph
from adjpoly.facets import all_cycles

from conftest import exhaustive_corpus, is_bipartite_edges, n6_sample_graphs


def _subgraph_by_edges(g, edges):
    target = frozenset(edges)
    matches = [
        b
        for b in enumerate_maximal_bipartite_subgraphs(g)
        if frozenset(b.edges) == target
    ]
    assert len(matches) == 1
    return matches[0]


class TestCanonicalFacetPair:
    def test_k2(self):
        g = parse_edge_list("1 2")
        b = enumerate_maximal_bipartite_subgraphs(g)[0]
        plus, minus = canonical_facet_pair(g, b)
        cfg = configuration_from_graph(g)
        assert {plus.points(cfg), minus.points(cfg)} == {((1,),), ((-1,),)}

    def test_c4_half_vector_normals(self):
        g = cycle_graph(4)
        b = enumerate_maximal_bipartite_subgraphs(g)[0]
        plus, minus = canonical_facet_pair(g, b)
        assert plus.normal.coeffs == (-1, 0, -1)
        assert minus.normal.coeffs == (1, 0, 1)
        assert len(plus.point_indices) == 4

    def test_triangle_path_subgraph(self):
        g = cycle_graph(3)
        b = _subgraph_by_edges(g, [(1, 2), (2, 3)])
        plus, minus = canonical_facet_pair(g, b)
        cfg = configuration_from_graph(g)
        # crossing edges oriented into V+ = {1, 3}: points (2,1) and (2,3)
        assert set(plus.points(cfg)) == {(1, 0), (1, -1)}
        assert set(minus.points(cfg)) == {(-1, 0), (-1, 1)}

    def test_pair_members_of_class(self, joined45):
        classes = enumerate_facet_classes(joined45)
        for cls in classes:
            plus, minus = canonical_facet_pair(joined45, cls.subgraph)
            normals = {f.normal.coeffs for f in cls.facets}
            assert plus.normal.coeffs in normals
            assert minus.normal.coeffs in normals

    def test_canonical_orientation_minus_to_plus(self):
        g = cycle_graph(4)
        b = enumerate_maximal_bipartite_subgraphs(g)[0]
        plus, _ = canonical_facet_pair(g, b)
        for tail, head in plus.directed_edges:
            assert b.bipartition.side(tail) == -1
            assert b.bipartition.side(head) == 1


class TestCycleSystem:
    def test_c4_single_pm_row(self):
        g = cycle_graph(4)
        b = enumerate_maximal_bipartite_subgraphs(g)[0]
        sys = build_cycle_system(g, b)
        assert len(sys.rows_pm) == 1
        assert len(sys.rows_zero) == 0
        assert sorted(sys.rows_pm[0].coeffs) == [-1, 1, 1]

    def test_joined_cycles_tree_class(self, joined45):
        # spanning-tree subgraph: two zero rows, no pm rows
        b = _subgraph_by_edges(
            joined45, set(joined45.edges) - {(1, 2), (1, 4)}
        )
        sys = build_cycle_system(joined45, b)
        assert len(sys.rows_pm) == 0
        assert len(sys.rows_zero) == 2
        supports = sorted(sum(1 for c in r.coeffs if c) for r in sys.rows_zero)
        assert supports == [4, 6]

    def test_joined_cycles_corank1_class(self, joined45):
        # 4-cycle plus path subgraph: one pm row, one zero row
        b = _subgraph_by_edges(joined45, set(joined45.edges) - {(1, 7)})
        sys = build_cycle_system(joined45, b)
        assert len(sys.rows_pm) == 1
        assert len(sys.rows_zero) == 1
        assert sum(1 for c in sys.rows_pm[0].coeffs if c) == 3
        assert sum(1 for c in sys.rows_zero[0].coeffs if c) == 4

    def test_row_counts_everywhere(self):
        for g in exhaustive_corpus(5):
            for b in enumerate_maximal_bipartite_subgraphs(g):
                sys = build_cycle_system(g, b)
                assert len(sys.rows_pm) == b.cyclomatic_number()
                assert len(sys.rows_pm) + len(sys.rows_zero) == g.m - g.n


class TestEnumerateSignVectors:
    def test_joined_cycles_tree_class_has_12(self, joined45):
        b = _subgraph_by_edges(
            joined45, set(joined45.edges) - {(1, 2), (1, 4)}
        )
        assert len(enumerate_sign_vectors(build_cycle_system(joined45, b))) == 12

    def test_joined_cycles_corank1_class_has_18(self, joined45):
        b = _subgraph_by_edges(joined45, set(joined45.edges) - {(1, 7)})
        assert len(enumerate_sign_vectors(build_cycle_system(joined45, b))) == 18

    def test_triangle_two_solutions(self):
        g = cycle_graph(3)
        b = _subgraph_by_edges(g, [(1, 2), (2, 3)])
        sys = build_cycle_system(g, b)
        assert len(sys.rows_zero) == 1
        assert len(enumerate_sign_vectors(sys)) == 2

    def test_matches_exhaustive_scan(self):
        graphs = list(exhaustive_corpus(4))
        graphs += [g for g in exhaustive_corpus(5) if g.vertex_count == 5][::13]
        for g in graphs:
            for b in enumerate_maximal_bipartite_subgraphs(g):
                sys = build_cycle_system(g, b)
                fast = enumerate_sign_vectors(sys)
                slow = [
                    d
                    for d in itertools.product((-1, 1), repeat=g.n)
                    if all(r.dot(d) in (-1, 1) for r in sys.rows_pm)
                    and all(r.dot(d) == 0 for r in sys.rows_zero)
                ]
                assert fast == slow

    def test_binary_order(self):
        g = cycle_graph(4)
        b = enumerate_maximal_bipartite_subgraphs(g)[0]
        solutions = enumerate_sign_vectors(build_cycle_system(g, b))
        keys = [tuple(0 if x == -1 else 1 for x in d) for d in solutions]
        assert keys == sorted(keys)


class TestFacetFromSignVector:
    def test_c4_all_ones_is_canonical(self):
        g = cycle_graph(4)
        b = enumerate_maximal_bipartite_subgraphs(g)[0]
        tree = spanning_tree(b)
        facet = facet_from_sign_vector(g, b, tree, (1, 1, 1))
        plus, _ = canonical_facet_pair(g, b)
        assert facet == plus

    def test_c4_bijection_with_oracle(self):
        g = cycle_graph(4)
        b = enumerate_maximal_bipartite_subgraphs(g)[0]
        tree = spanning_tree(b)
        ds = enumerate_sign_vectors(build_cycle_system(g, b))
        fast = {facet_from_sign_vector(g, b, tree, d).normal.coeffs for d in ds}
        oracle = {
            f.normal.coeffs
            for f in brute_force_facets(configuration_from_graph(g))
        }
        assert len(ds) == len(fast) == 6
        assert fast == oracle

    def test_joined_cycles_corank1_shape(self, joined45):
        b = _subgraph_by_edges(joined45, set(joined45.edges) - {(1, 7)})
        tree = spanning_tree(b)
        ds = enumerate_sign_vectors(build_cycle_system(joined45, b))
        assert len(ds) == 18
        for d in ds:
            facet = facet_from_sign_vector(joined45, b, tree, d)
            # one point per edge of the 7-edge subgraph
            assert len(facet.point_indices) == 7
            assert facet.dim == 5
            assert facet.corank == 1

    def test_signed_tree_points_lie_on_facet(self):
        g = cycle_graph(4)
        b = enumerate_maximal_bipartite_subgraphs(g)[0]
        tree = spanning_tree(b)
        cfg = configuration_from_graph(g)
        for d in enumerate_sign_vectors(build_cycle_system(g, b)):
            facet = facet_from_sign_vector(g, b, tree, d)
            points = set(facet.points(cfg))
            for dk, oriented in zip(d, tree.oriented):
                tail, head = oriented if dk == 1 else (oriented[1], oriented[0])
                assert cfg.points[cfg.index_of_directed_edge((tail, head))] in points


class TestEnumerateAllFacets:
    def test_even_cycles(self):
        assert len(enumerate_all_facets(cycle_graph(4))) == 6
        assert len(enumerate_all_facets(cycle_graph(6))) == 20

    def test_joined_cycles_census(self, joined45):
        classes = enumerate_facet_classes(joined45)
        sizes = sorted(len(c.facets) for c in classes)
        assert sizes == [12, 12, 12, 18, 18, 18, 18]
        assert len(enumerate_all_facets(joined45)) == 108

    def test_oracle_equivalence_small(self):
        for g in exhaustive_corpus(4):
            fast = {f.normal.coeffs for f in enumerate_all_facets(g)}
            oracle = {
                f.normal.coeffs
                for f in brute_force_facets(configuration_from_graph(g))
            }
            assert fast == oracle, g.edges

    def test_classes_partition_oracle_by_subgraph(self, joined45):
        oracle = brute_force_facets(configuration_from_graph(joined45))
        by_subgraph = {}
        for f in oracle:
            by_subgraph.setdefault(f.subgraph_edges, set()).add(f.normal.coeffs)
        for cls in enumerate_facet_classes(joined45):
            assert {
                f.normal.coeffs for f in cls.facets
            } == by_subgraph[cls.subgraph.edges]

    def test_globally_duplicate_free(self, joined45):
        facets = enumerate_all_facets(joined45)
        normals = [f.normal.coeffs for f in facets]
        assert len(set(normals)) == len(normals)

    def test_class_bounds(self):
        for g in list(exhaustive_corpus(5)) + list(n6_sample_graphs().values()):
            classes = enumerate_facet_classes(g)
            bound = 1 << g.n
            assert all(len(c.facets) <= bound for c in classes)
            assert sum(len(c.facets) for c in classes) <= len(classes) * bound


class TestFaceProperties:
    def test_single_point(self):
        g = cycle_graph(4)
        props = face_properties(g, [(-1, 0, 0)])
        assert props.dim == 0
        assert props.corank == 0
        assert props.independent is True
        assert props.circuit is False

    def test_c4_facet_is_circuit(self):
        g = cycle_graph(4)
        facet = enumerate_all_facets(g)[0]
        props = face_properties(g, facet)
        assert props.dim == 2
        assert props.corank == 1
        assert props.independent is False
        assert props.circuit is True
        assert props.component_count == 1

    def test_tree_facet_independent(self, joined45):
        tree_cls = [
            c for c in enumerate_facet_classes(joined45) if c.corank == 0
        ][0]
        props = face_properties(joined45, tree_cls.facets[0])
        assert props.dim == 5
        assert props.corank == 0
        assert props.independent is True
        assert props.circuit is False

    def test_empty_subset(self):
        with pytest.raises(EmptySubset):
            face_properties(cycle_graph(4), [])

    def test_matches_graph_formulas(self, joined45):
        for facet in enumerate_all_facets(joined45):
            props = face_properties(joined45, facet)
            assert props.corank == cyclomatic_number(
                facet.subgraph_edges, joined45
            )
            assert props.dim == joined45.vertex_count - props.component_count - 1
            assert props.independent == (props.corank == 0)

    def test_pairwise_intersections_components(self):
        # each component of a face subgraph is maximal bipartite in the
        # subgraph induced on its own vertices
        for g in [cycle_graph(4), cycle_graph(3), n6_sample_graphs()["theta"]]:
            facets = enumerate_all_facets(g)
            for f1, f2 in itertools.combinations(facets, 2):
                common = set(f1.point_indices) & set(f2.point_indices)
                if not common:
                    continue
                cfg = configuration_from_graph(g)
                edges = set()
                for idx in common:
                    i, j = cfg.directed_edges[idx]
                    edges.add((i, j) if i < j else (j, i))
                for comp_edges, comp_vertices in _components(edges):
                    induced = [
                        e
                        for e in g.edges
                        if e[0] in comp_vertices and e[1] in comp_vertices
                    ]
                    for extra in set(induced) - comp_edges:
                        assert not is_bipartite_edges(comp_edges | {extra})


def _components(edges):
    adj = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen = set()
    out = []
    for start in adj:
        if start in seen:
            continue
        stack, verts = [start], {start}
        seen.add(start)
        while stack:
            x = stack.pop()
            for w in adj[x]:
                if w not in seen:
                    seen.add(w)
                    verts.add(w)
                    stack.append(w)
        comp_edges = {e for e in edges if e[0] in verts}
        out.append((comp_edges, verts))
    return out


class TestBalancing:
    def test_all_c4_facets(self):
        g = cycle_graph(4)
        assert all(balancing_check(g, f) for f in enumerate_all_facets(g))

    def test_all_joined_cycle_facets(self, joined45):
        assert all(
            balancing_check(joined45, f) for f in enumerate_all_facets(joined45)
        )

    def test_cycle_enumeration(self, joined45):
        cycles = {frozenset(c) for c in all_cycles(joined45)}
        assert cycles == {
            frozenset({1, 2, 3, 4}),
            frozenset({1, 4, 5, 6, 7}),
            frozenset({1, 2, 3, 4, 5, 6, 7}),
        }

    def test_unbalanced_orientation_rejected(self):
        # orient three of C4's edges forward and one backward around the
        # cycle: the quadruple covers C4 but meets it 3-to-1
        g = cycle_graph(4)
        template = enumerate_all_facets(g)[0]
        bad = Facet(
            normal=InnerNormal(coeffs=(1, 1, 1), scale=template.normal.scale),
            point_indices=template.point_indices,
            subgraph_edges=template.subgraph_edges,
            directed_edges=((1, 2), (2, 3), (3, 4), (1, 4)),
            dim=template.dim,
            corank=template.corank,
            bipartition=template.bipartition,
        )
        assert balancing_check(g, bad) is False


class TestSimplicial:
    def test_examples(self, joined45):
        assert is_simplicial(cycle_graph(3)) is True
        assert is_simplicial(cycle_graph(4)) is False
        assert is_simplicial(joined45) is False

    def test_equivalences(self):
        for g in exhaustive_corpus(5):
            facets = enumerate_all_facets(g)
            all_corank0 = all(f.corank == 0 for f in facets)
            even = any(len(c) % 2 == 0 for c in all_cycles(g))
            assert is_simplicial(g) == all_corank0 == (not has_even_cycle(g))
            assert has_even_cycle(g) == even
