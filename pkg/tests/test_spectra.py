from __future__ import annotations
import networkx as nx
import numpy as np
import pytest

from conftest import small_groups
from errors import DimensionLimitError, NotAdjacencyError, SpectrumLengthError
from groups import enumerate_subgroups, make_dihedral
from spectra import (
    ALL_KINDS, DenseSymMatrix, MatrixKind, RadicalScalar, SpectrumMultiset, build_matrix, build_sgb,
    cn_matrix, common_neighborhood_graph, decompose_components, exact_spectrum, is_integral,
    match_spectra, matrix_of_kind, numeric_eigenvalues, numeric_spectrum, spectra_equal,
    spectrum_symmetric, star_adjacency, star_spectrum,
)
from spectra.matrices import component_matrix

A, L, Q, CN = (
    MatrixKind.ADJACENCY, MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN, MatrixKind.COMMON_NEIGHBORHOOD,
)


def sgb(g):
    return build_sgb(g, enumerate_subgroups(g))


# ----------------------------- star spectra --------------------------------
def test_matrix_kind_codes():
    assert [k.code for k in ALL_KINDS] == ["a", "l", "q", "cn"]
    assert MatrixKind.from_code(" CN ") is CN
    assert MatrixKind.from_code("laplacian") is L
    with pytest.raises(ValueError):
        MatrixKind.from_code("x")


def test_star_spectra_by_hand():
    assert str(star_spectrum(A, 3)) == "{(√3)^1, (0)^2, (-√3)^1}"
    assert str(star_spectrum(L, 3)) == "{(4)^1, (1)^2, (0)^1}"
    assert str(star_spectrum(CN, 3)) == "{(2)^1, (0)^1, (-1)^2}"
    assert str(star_spectrum(A, 1)) == "{(1)^1, (-1)^1}"
    assert str(star_spectrum(CN, 1)) == "{(0)^2}"
    for kind in ALL_KINDS:
        assert str(star_spectrum(kind, 0)) == "{(0)^1}"
    with pytest.raises(ValueError):
        star_spectrum(A, -1)


@pytest.mark.parametrize("leaves", [0, 1, 2, 3, 12, 24, 48, 96])
@pytest.mark.parametrize("kind", ALL_KINDS, ids=lambda k: k.code)
def test_star_spectrum_against_jacobi(kind, leaves):
    exact = star_spectrum(kind, leaves)
    assert exact.dimension == leaves + 1
    numeric = numeric_eigenvalues(matrix_of_kind(star_adjacency(leaves), kind))
    ok, dev = match_spectra(exact, numeric)
    assert ok, dev


def test_multiset_merges_and_orders():
    root = RadicalScalar.sqrt(2)
    s = SpectrumMultiset.of([(root, 1), (RadicalScalar.rational(0), 2), (root, 2), (-root, 0)])
    assert s.entries == ((root, 3), (RadicalScalar.rational(0), 2))
    assert s.multiplicity(root) == 3
    assert s.multiplicity(-root) == 0
    assert s.floats()[0] == pytest.approx(2 ** 0.5)
    with pytest.raises(ValueError):
        SpectrumMultiset.of([(root, -1)])


def test_d6_exact_spectra():
    summary = decompose_components(sgb(make_dihedral(3)))
    lap = exact_spectrum(summary, L)
    assert lap.dimension == 42
    assert lap.multiplicity(RadicalScalar.rational(0)) == 6
    assert lap.multiplicity(RadicalScalar.rational(1)) == 30
    assert lap.multiplicity(RadicalScalar.rational(19)) == 1
    adj = exact_spectrum(summary, A)
    assert adj.multiplicity(RadicalScalar.rational(0)) == 30
    assert adj.multiplicity(RadicalScalar.sqrt(3)) == 3
    assert adj.multiplicity(-RadicalScalar.sqrt(18)) == 1
    assert not is_integral(adj)


# ----------------------------- matrices ------------------------------------
@pytest.mark.parametrize("seed", range(50))
def test_cn_matrix_counts_common_neighbours(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 16))
    graph = nx.gnp_random_graph(n, float(rng.uniform(0.1, 0.9)), seed=seed)
    adj = DenseSymMatrix(nx.to_numpy_array(graph, nodelist=range(n)))
    cn = cn_matrix(adj).entries
    for i in range(n):
        assert cn[i, i] == 0
        for j in range(n):
            if i != j:
                assert cn[i, j] == len(list(nx.common_neighbors(graph, i, j)))


@pytest.mark.parametrize("leaves", range(1, 21))
def test_common_neighbourhood_graph_of_star(leaves):
    # leaves образуют K_n, центр изолирован
    expected = np.zeros((leaves + 1, leaves + 1))
    expected[1:, 1:] = 1.0 - np.eye(leaves)
    assert np.array_equal(common_neighborhood_graph(star_adjacency(leaves)).entries, expected)


def test_laplacians_of_path():
    adj = DenseSymMatrix([[0, 1, 0], [1, 0, 1], [0, 1, 0]])
    assert np.array_equal(matrix_of_kind(adj, L).entries, [[1, -1, 0], [-1, 2, -1], [0, -1, 1]])
    assert np.array_equal(matrix_of_kind(adj, Q).entries, [[1, 1, 0], [1, 2, 1], [0, 1, 1]])
    assert matrix_of_kind(adj, A) is adj


@pytest.mark.parametrize("bad", [[[0, 2], [2, 0]], [[1, 0], [0, 0]]])
def test_not_adjacency(bad):
    with pytest.raises(NotAdjacencyError):
        matrix_of_kind(DenseSymMatrix(bad), L)


@pytest.mark.parametrize("bad", [[[0, 1], [0, 0]], [[0, 1, 0]], []])
def test_dense_matrix_shape_and_symmetry(bad):
    with pytest.raises(ValueError):
        DenseSymMatrix(bad)


def test_dense_matrix_is_copied():
    src = np.zeros((2, 2))
    m = DenseSymMatrix(src)
    src[0, 1] = src[1, 0] = 1.0
    assert m.entries[0, 1] == 0


@pytest.mark.parametrize("kind", ALL_KINDS, ids=lambda k: k.code)
def test_whole_graph_matches_componentwise(kind):
    graph = sgb(make_dihedral(3))
    whole = numeric_eigenvalues(build_matrix(graph, kind))
    assert len(whole) == graph.vertex_count
    assert np.allclose(whole, numeric_spectrum(graph, kind), atol=1e-8)


def test_dense_limit():
    graph = sgb(make_dihedral(3))
    with pytest.raises(DimensionLimitError):
        build_matrix(graph, A, limit=41)
    assert build_matrix(graph, A, limit=42).dimension == 42


def test_component_blocks_are_stars():
    graph = sgb(make_dihedral(3))
    for pos, leaves in enumerate(graph.leaves_of_subgroup):
        block = component_matrix(graph, pos, A)
        assert np.array_equal(block.entries, star_adjacency(len(leaves)).entries)


# ----------------------------- whole graphs --------------------------------
@pytest.mark.parametrize("g", small_groups(), ids=lambda g: g.name)
def test_exact_spectrum_properties(g):
    graph = sgb(g)
    summary = decompose_components(graph)
    spectra = {kind: exact_spectrum(summary, kind) for kind in ALL_KINDS}
    m = graph.edge_count
    for s in spectra.values():
        assert s.dimension == graph.vertex_count
    assert spectrum_symmetric(spectra[A])
    assert spectra[A].trace().terms == ()
    assert spectra[A].trace_of_squares() == 2 * m
    assert spectra[L].trace().rational_part == 2 * m
    assert spectra[CN].trace().terms == ()
    assert spectra_equal(spectra[L], spectra[Q])
    assert all(is_integral(spectra[k]) for k in (L, Q, CN))
    assert spectra[L].multiplicity(RadicalScalar.rational(0)) == summary.component_count
    assert summary.component_count == graph.vertex_count - m


@pytest.mark.parametrize("g", [g for g in small_groups() if g.order <= 12], ids=lambda g: g.name)
@pytest.mark.parametrize("kind", ALL_KINDS, ids=lambda k: k.code)
def test_numeric_matches_exact(g, kind):
    graph = sgb(g)
    ok, dev = match_spectra(exact_spectrum(decompose_components(graph), kind), numeric_spectrum(graph, kind))
    assert ok, dev


def test_match_spectra_reports_deviation():
    exact = star_spectrum(L, 2)                  # {3, 1, 0}
    ok, dev = match_spectra(exact, [0.0, 3.0, 1.0])
    assert ok and dev == 0.0
    ok, dev = match_spectra(exact, [3.0, 1.0, 1e-6])
    assert not ok and dev == pytest.approx(1e-6)
    with pytest.raises(SpectrumLengthError):
        match_spectra(exact, [3.0, 1.0])
