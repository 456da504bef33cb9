from __future__ import annotations
import logging

import networkx as nx
import pytest

from conftest import shuffled, small_groups
from groups import enumerate_subgroups, generated_subgroup, make_dicyclic, make_dihedral
from spectra import ComponentSummary, build_sgb, decompose_components, isolated_subgroups, signature_equal


def sgb(g):
    return build_sgb(g, enumerate_subgroups(g))


@pytest.mark.parametrize(
    "g, stars, vertices",
    [
        (make_dihedral(3), {1: 1, 3: 3, 8: 1, 18: 1}, 42),
        (make_dicyclic(2), {1: 1, 3: 1, 12: 3, 24: 1}, 70),
        (make_dihedral(4), {1: 1, 3: 5, 6: 2, 12: 1, 24: 1}, 64 + 10),
    ],
    ids=["D6", "Q8", "D8"],
)
def test_known_decompositions(g, stars, vertices):
    graph = sgb(g)
    summary = decompose_components(graph)
    assert summary.as_dict() == stars
    assert graph.vertex_count == summary.vertex_count == vertices
    assert graph.edge_count == summary.edge_count == g.order ** 2


def test_isolated_subgroup_in_elementary_abelian(c2_cubed, caplog):
    with caplog.at_level(logging.WARNING, logger="sgb_graph"):
        graph = sgb(c2_cubed)
    summary = decompose_components(graph)
    assert summary.as_dict() == {0: 1, 1: 1, 3: 7, 6: 7}
    assert summary.has_isolated
    assert summary.component_count == 16
    # C_2^3 не порождается двумя элементами
    assert [graph.lattice[pos].order for pos in isolated_subgroups(graph)] == [8]
    assert "isolated K_1" in caplog.text


@pytest.mark.parametrize("g", small_groups(), ids=lambda g: g.name)
def test_forest_of_stars(g):
    graph = sgb(g)
    assert graph.edge_count == g.order ** 2
    assert decompose_components(graph).component_count == len(graph.lattice)

    nxg = nx.Graph()
    nxg.add_nodes_from(range(graph.vertex_count))
    nxg.add_edges_from(graph.edges())
    assert nx.is_forest(nxg)
    assert nx.number_connected_components(nxg) == len(graph.lattice)
    for comp in nx.connected_components(nxg):
        centers = [v for v in comp if v >= graph.pair_vertex_count]
        assert len(centers) == 1
        assert nxg.degree(centers[0]) == len(comp) - 1


def test_pair_neighbor_is_generated_subgroup(q8):
    graph = sgb(q8)
    for vertex, pos in enumerate(graph.neighbor_of_pair):
        a, b = graph.pair_of(vertex)
        assert graph.lattice[pos] == generated_subgroup(q8, a, b)


def test_invariant_under_relabeling():
    g = make_dihedral(6)
    base = decompose_components(sgb(g))
    for seed in range(3):
        assert signature_equal(base, decompose_components(sgb(shuffled(g, seed))))


def test_summary_merges_and_prints():
    s = ComponentSummary.from_counts({3: 2, 1: 1, 0: 0})
    assert s.stars == ((1, 1), (3, 2))
    assert str(s) == "K_2 ⊔ 2K_{1,3}"
    assert str(ComponentSummary.from_counts({})) == "∅"
    assert str(ComponentSummary.from_leaf_counts([0, 5])) == "K_1 ⊔ K_{1,5}"
    with pytest.raises(ValueError):
        ComponentSummary.from_counts({-1: 1})
