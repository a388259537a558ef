import random
from itertools import combinations

import pytest

from graphmin import (
    BlockShape,
    Graph,
    InvalidPartitionError,
    Partition,
    canonical_foliage_partition,
    classify_block,
    complete_graph,
    foliage_equivalent,
    foliage_graph,
    foliage_set,
    is_foliage_partition,
    leaves_axils,
    lifted_local_complement,
    local_complement,
    nth_foliage_graph,
    path_graph,
    ring_graph,
    singletons,
    star_axil,
    twins,
)

from conftest import all_graphs, fig4a, random_graph, random_refinement


def star(center, leaves):
    verts = [center] + list(leaves)
    return Graph(verts, [(center, leaf) for leaf in leaves])


class TestLeavesTwinsFoliage:
    def test_eight_vertex_example_foliage(self):
        # every vertex but 6 is a leaf, an axil, or a twin
        assert foliage_set(fig4a()) == frozenset({1, 2, 3, 4, 5, 7, 8})

    def test_mutual_pair_is_leaf_axil_not_twin(self):
        g = Graph(2, [(1, 2)])
        assert leaves_axils(g) == frozenset({(1, 2), (2, 1)})
        assert twins(g) == frozenset()

    def test_star_leaves_and_twins(self):
        g = star(1, [2, 3, 4])
        assert leaves_axils(g) == frozenset({(2, 1), (3, 1), (4, 1)})
        assert twins(g) == frozenset(frozenset(p) for p in combinations([2, 3, 4], 2))

    def test_twin_condition_requires_shared_neighbor(self):
        # two isolated vertices agree on the empty neighborhood but are not twins
        assert twins(Graph(2)) == frozenset()


class TestFoliageEquivalence:
    def test_twins_through_shared_axil(self):
        assert foliage_equivalent(fig4a(), 1, 2)

    def test_unrelated_vertices(self):
        assert not foliage_equivalent(fig4a(), 1, 5)

    def test_reflexive(self):
        assert foliage_equivalent(fig4a(), 4, 4)

    def test_twin_pair_and_singleton_block(self):
        assert foliage_equivalent(fig4a(), 4, 5)
        assert not foliage_equivalent(fig4a(), 5, 6)

    def test_unknown_label(self):
        with pytest.raises(Exception):
            foliage_equivalent(fig4a(), 1, 99)


class TestCanonicalPartition:
    def test_eight_vertex_example(self):
        assert canonical_foliage_partition(fig4a()) == Partition(
            [{1, 2, 3}, {4, 5}, {6}, {7, 8}]
        )

    def test_edgeless_graph_all_singletons(self):
        g = Graph(4)
        assert canonical_foliage_partition(g) == singletons(g)

    def test_path_four(self):
        assert canonical_foliage_partition(path_graph(4)) == Partition([{1, 2}, {3, 4}])

    def test_is_lc_invariant_on_random_corpus(self):
        rng = random.Random(41)
        for _ in range(50):
            g = random_graph(rng, rng.randint(2, 8))
            part = canonical_foliage_partition(g)
            for a in g.vertices:
                assert canonical_foliage_partition(local_complement(g, a)) == part


class TestIsFoliagePartition:
    def test_refinement_accepted(self):
        w = Partition([{1, 2}, {3}, {4, 5}, {6}, {7, 8}])
        assert is_foliage_partition(fig4a(), w)

    def test_all_singletons_accepted(self):
        assert is_foliage_partition(fig4a(), singletons(fig4a()))

    def test_cross_class_block_rejected(self):
        w = Partition([{1, 2, 3}, {4}, {5, 6}, {7, 8}])
        assert not is_foliage_partition(fig4a(), w)

    def test_non_cover_raises(self):
        with pytest.raises(InvalidPartitionError):
            is_foliage_partition(fig4a(), Partition([{1, 2, 3}]))

    def test_canonical_is_coarsest(self):
        # merging any two inequivalent canonical blocks breaks validity
        g = fig4a()
        canon = canonical_foliage_partition(g)
        blocks = list(canon.blocks)
        for i, j in combinations(range(len(blocks)), 2):
            merged = [b for k, b in enumerate(blocks) if k not in (i, j)]
            merged.append(blocks[i] | blocks[j])
            assert not is_foliage_partition(g, Partition(merged))


class TestFoliageGraph:
    def test_eight_vertex_example_quotient(self):
        fg = foliage_graph(fig4a())
        assert fg.representatives == (1, 4, 6, 7)
        assert fg.graph.edges() == ((1, 4), (4, 6))

    def test_second_level_quotient(self):
        fg = nth_foliage_graph(fig4a(), 2)
        assert fg.partition == Partition([{1, 2, 3, 4, 5, 6}, {7, 8}])
        assert fg.graph.edges() == ()

    def test_all_singleton_partition_is_identity(self):
        g = fig4a()
        fg = foliage_graph(g, singletons(g))
        assert fg.graph == g

    def test_custom_representatives(self):
        fg = foliage_graph(fig4a(), reps=[2, 5, 6, 8])
        assert fg.graph.edges() == ((2, 5), (5, 6))

    def test_representative_outside_block_rejected(self):
        with pytest.raises(ValueError):
            foliage_graph(fig4a(), reps=[2, 5, 6, 6])

    def test_quotients_isomorphic_across_representative_choices(self):
        g = fig4a()
        low = foliage_graph(g, reps=[1, 4, 6, 7])
        high = foliage_graph(g, reps=[3, 5, 6, 8])
        relabel = dict(zip(low.representatives, high.representatives))
        mapped = {(min(relabel[a], relabel[b]), max(relabel[a], relabel[b])) for a, b in low.graph.edges()}
        assert mapped == set(high.graph.edges())


class TestClassifyBlock:
    def test_star_block(self):
        assert classify_block(fig4a(), {1, 2, 3}) is BlockShape.STAR
        assert star_axil(fig4a(), {1, 2, 3}) == 3

    def test_singleton_block(self):
        assert classify_block(fig4a(), {6}) is BlockShape.SINGLETON

    def test_clique_block(self):
        assert classify_block(fig4a(), {4, 5}) is BlockShape.CLIQUE

    def test_mutual_pair_reports_star(self):
        assert classify_block(fig4a(), {7, 8}) is BlockShape.STAR

    def test_anticlique_block(self):
        g = star(1, [2, 3])
        assert classify_block(g, {2, 3}) is BlockShape.ANTICLIQUE

    def test_invalid_block_raises(self):
        with pytest.raises(ValueError):
            classify_block(path_graph(4), {1, 2, 3})


class TestLiftedLocalComplement:
    def test_eight_vertex_example_at_vertex_3(self):
        g = fig4a()
        w = canonical_foliage_partition(g)
        lifted = lifted_local_complement(g, w, 3)
        direct = local_complement(foliage_graph(g, w).graph, 1)  # block {1,2,3} -> rep 1
        assert lifted.graph == direct

    def test_star_center_with_block_internal_neighbors(self):
        g = star(1, [2, 3, 4])
        w = canonical_foliage_partition(g)
        lifted = lifted_local_complement(g, w, 1)
        assert lifted.graph == foliage_graph(g, w).graph  # single block, nothing to change

    def test_degree_one_rejected(self):
        g = path_graph(3)
        with pytest.raises(ValueError, match="degree"):
            lifted_local_complement(g, canonical_foliage_partition(g), 1)

    def test_random_triples(self, rng):
        done = 0
        while done < 60:
            g = random_graph(rng, rng.randint(2, 8))
            w = random_refinement(rng, canonical_foliage_partition(g))
            verts = [v for v in g.vertices if g.degree(v) > 1]
            if not verts:
                continue
            lifted_local_complement(g, w, rng.choice(verts))  # asserts internally
            done += 1


class TestTransitivityCases:
    """The six pairwise combinations behind transitivity of the equivalence."""

    def test_twin_twin_yields_twin(self):
        g = star(1, [2, 3, 4])
        assert foliage_equivalent(g, 2, 3) and foliage_equivalent(g, 3, 4)
        assert foliage_equivalent(g, 2, 4)
        k = complete_graph(4)
        assert foliage_equivalent(k, 1, 2) and foliage_equivalent(k, 2, 3)
        assert foliage_equivalent(k, 1, 3)

    def test_twin_with_leaf_of_axil_yields_leaf(self):
        g = star(1, [2, 3])
        # 2 and 3 twins, 3 a leaf of 1, hence 2 a leaf of 1
        assert frozenset({2, 3}) in twins(g)
        assert (3, 1) in leaves_axils(g)
        assert (2, 1) in leaves_axils(g)
        assert foliage_equivalent(g, 2, 1)

    def test_two_leaves_sharing_axil_are_twins(self):
        g = star(1, [2, 3])
        assert (2, 1) in leaves_axils(g) and (3, 1) in leaves_axils(g)
        assert frozenset({2, 3}) in twins(g)

    def test_impossible_combinations_never_occur(self):
        # twin with a leaf hanging off the partner, chained leaf-axils, and
        # one leaf with two axils: no small graph exhibits any of them
        for n in range(2, 6):
            for g in all_graphs(n):
                la = leaves_axils(g)
                tw = twins(g)
                for v, w, u in _distinct_triples(g.vertices):
                    assert not (frozenset({v, w}) in tw and (u, w) in la)
                    assert not ((v, w) in la and (w, u) in la)
                    assert not ((w, v) in la and (w, u) in la)

    def test_relation_transitive_on_random_corpus(self):
        rng = random.Random(4242)
        for _ in range(60):
            g = random_graph(rng, rng.randint(3, 8))
            canonical_foliage_partition(g)  # raises if the relation misbehaves


def _distinct_triples(vertices):
    for v in vertices:
        for w in vertices:
            for u in vertices:
                if len({v, w, u}) == 3:
                    yield v, w, u


class TestInvarianceCases:
    """Pointwise effect of a local complement on twin and leaf-axil pairs."""

    def test_complement_at_adjacent_twin_makes_leaf_axil(self):
        g = Graph(4, [(1, 2), (1, 3), (2, 3), (1, 4)])  # 2,3 adjacent twins via 1
        assert frozenset({2, 3}) in twins(g)
        image = local_complement(g, 2)
        assert (3, 2) in leaves_axils(image)

    def test_complement_at_nonadjacent_twin_keeps_twins(self):
        g = ring_graph(4)  # 1,3 and 2,4 are non-adjacent twin pairs
        image = local_complement(g, 1)
        assert frozenset({1, 3}) in twins(image)

    def test_complement_at_common_neighbor_toggles_twin_edge(self):
        g = ring_graph(4)
        assert not g.has_edge(1, 3)
        image = local_complement(g, 2)
        assert image.has_edge(1, 3)
        assert frozenset({1, 3}) in twins(image)

    def test_complement_at_leaf_does_nothing(self):
        g = path_graph(3)
        assert local_complement(g, 1) == g

    def test_complement_at_axil_turns_pair_into_twins(self):
        g = path_graph(3)
        image = local_complement(g, 2)
        assert frozenset({1, 2}) in twins(image)

    def test_complement_elsewhere_keeps_leaf_axil(self):
        g = path_graph(4)
        image = local_complement(g, 3)
        assert (1, 2) in leaves_axils(image)
