"""
Плотные симметричные матрицы графа: A, L = D - A, Q = D + A, CN и con(𝒢).
"""

from __future__ import annotations
from dataclasses import dataclass

import numpy as np

from errors import DimensionLimitError, NotAdjacencyError
from .sgb_graph import SgbGraph
from .star import MatrixKind

DENSE_LIMIT = 2000


@dataclass(frozen=True, eq=False)
class DenseSymMatrix:
    entries: np.ndarray

    def __post_init__(self) -> None:
        m = np.array(self.entries, dtype=np.float64)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise ValueError(f"matrix shape {m.shape} is not square and non-empty")
        if not np.array_equal(m, m.T):
            raise ValueError("matrix is not symmetric")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @property
    def dimension(self) -> int:
        return int(self.entries.shape[0])


def _check_adjacency(adj: np.ndarray) -> None:
    if not np.isin(adj, (0.0, 1.0)).all():
        raise NotAdjacencyError("adjacency entries must be 0 or 1")
    if np.any(np.diag(adj) != 0):
        raise NotAdjacencyError("adjacency diagonal must be zero")


def cn_matrix(adjacency: DenseSymMatrix) -> DenseSymMatrix:
    """CN[i][j] = |{k ≠ i, j : A[i][k] = A[j][k] = 1}|, диагональ 0."""
    a = adjacency.entries
    _check_adjacency(a)
    # без петель (A²)_{ij} при i ≠ j считает ровно общих соседей
    cn = a @ a
    np.fill_diagonal(cn, 0.0)
    return DenseSymMatrix(cn)


def common_neighborhood_graph(adjacency: DenseSymMatrix) -> DenseSymMatrix:
    """con(𝒢): ребро ⇔ у вершин есть хотя бы один общий сосед."""
    return DenseSymMatrix((cn_matrix(adjacency).entries >= 1).astype(np.float64))


def matrix_of_kind(adjacency: DenseSymMatrix, kind: MatrixKind) -> DenseSymMatrix:
    a = adjacency.entries
    _check_adjacency(a)
    if kind is MatrixKind.ADJACENCY:
        return adjacency
    if kind is MatrixKind.COMMON_NEIGHBORHOOD:
        return cn_matrix(adjacency)
    degree = np.diag(a.sum(axis=1))
    if kind is MatrixKind.LAPLACIAN:
        return DenseSymMatrix(degree - a)
    return DenseSymMatrix(degree + a)


def star_adjacency(leaves: int) -> DenseSymMatrix:
    """K_{1,ℓ} с центром в вершине 0; при ℓ = 0 одиночная вершина."""
    a = np.zeros((leaves + 1, leaves + 1))
    a[0, 1:] = a[1:, 0] = 1.0
    return DenseSymMatrix(a)


def build_matrix(graph: SgbGraph, kind: MatrixKind, *, limit: int = DENSE_LIMIT) -> DenseSymMatrix:
    n = graph.vertex_count
    if n > limit:
        raise DimensionLimitError(
            f"B({graph.group.name}) has {n} vertices > dense limit {limit}; "
            "use component-wise numeric path"
        )
    a = np.zeros((n, n))
    pairs = np.arange(graph.pair_vertex_count)
    centers = graph.pair_vertex_count + np.asarray(graph.neighbor_of_pair, dtype=np.int64)
    a[pairs, centers] = a[centers, pairs] = 1.0
    return matrix_of_kind(DenseSymMatrix(a), kind)


def component_matrix(graph: SgbGraph, pos: int, kind: MatrixKind) -> DenseSymMatrix:
    """
    Блок одной компоненты: центр (подгруппа pos) и её пары, собранный
    по рёбрам графа, а не по формуле звезды.
    """
    leaves = graph.leaves_of_subgroup[pos]
    center = graph.subgroup_vertex(pos)
    vertices = [center, *leaves]
    local = {v: i for i, v in enumerate(vertices)}
    a = np.zeros((len(vertices), len(vertices)))
    for pair in leaves:
        c = local[graph.subgroup_vertex(graph.neighbor_of_pair[pair])]
        a[local[pair], c] = a[c, local[pair]] = 1.0
    return matrix_of_kind(DenseSymMatrix(a), kind)
