"""
Двудольный граф B(G): пары (a, b) ∈ G×G и подгруппы H ∈ L(G),
(a, b) ~ H ⇔ H = ⟨a, b⟩.

Каждая пара смежна ровно с одной подгруппой, поэтому B(G) — лес звёзд
K_{1,ℓ} с центрами в подгруппах (ℓ = 0 — изолированная подгруппа).
Нумерация вершин: пары 0 … |G|²-1 (id = a·|G| + b), затем подгруппы
в каноническом порядке решётки.
"""

from __future__ import annotations
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Tuple

from groups.core import FiniteGroup
from groups.lattice import SubgroupLattice, closure_mask, generated_subgroup, subgroup_index

log = logging.getLogger("sgb_graph")


@dataclass(frozen=True)
class SgbGraph:
    group:                 FiniteGroup = field(repr=False, compare=False)
    lattice:               SubgroupLattice = field(repr=False, compare=False)
    pair_vertex_count:     int
    subgroup_vertex_count: int
    neighbor_of_pair:      Tuple[int, ...] = field(repr=False)
    leaves_of_subgroup:    Tuple[Tuple[int, ...], ...] = field(repr=False)

    @property
    def vertex_count(self) -> int:
        return self.pair_vertex_count + self.subgroup_vertex_count

    @property
    def edge_count(self) -> int:
        return len(self.neighbor_of_pair)

    def subgroup_vertex(self, pos: int) -> int:
        return self.pair_vertex_count + pos

    def pair_of(self, vertex: int) -> Tuple[int, int]:
        return divmod(vertex, self.group.order)

    def edges(self) -> Iterable[Tuple[int, int]]:
        for pair, pos in enumerate(self.neighbor_of_pair):
            yield pair, self.subgroup_vertex(pos)


def build_sgb(g: FiniteGroup, lat: SubgroupLattice) -> SgbGraph:
    n = g.order
    cyclic = [closure_mask(g, (x,)) for x in range(n)]
    neighbor: List[int] = []
    leaves: List[List[int]] = [[] for _ in lat.subgroups]

    for a in range(n):
        for b in range(n):
            # ⟨a, b⟩ = ⟨a⟩, если b ∈ ⟨a⟩ (и симметрично), обход не нужен
            if cyclic[a] >> b & 1:
                pos = lat.index[cyclic[a]]
            elif cyclic[b] >> a & 1:
                pos = lat.index[cyclic[b]]
            else:
                pos = subgroup_index(lat, generated_subgroup(g, a, b))
            neighbor.append(pos)
            leaves[pos].append(a * n + b)

    graph = SgbGraph(
        group=g,
        lattice=lat,
        pair_vertex_count=n * n,
        subgroup_vertex_count=len(lat),
        neighbor_of_pair=tuple(neighbor),
        leaves_of_subgroup=tuple(tuple(l) for l in leaves),
    )
    isolated = isolated_subgroups(graph)
    if isolated:
        log.warning(
            f"B({g.name}): {len(isolated)} subgroup vertices generated by no pair "
            "(reported as isolated K_1 components)"
        )
    log.info(f"B({g.name}): {graph.vertex_count} vertices, {graph.edge_count} edges")
    return graph


def isolated_subgroups(graph: SgbGraph) -> List[int]:
    return [pos for pos, l in enumerate(graph.leaves_of_subgroup) if not l]


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class ComponentSummary:
    """Мультимножество звёзд: ((ℓ, кратность), …) по возрастанию ℓ."""
    stars: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "ComponentSummary":
        merged: Dict[int, int] = Counter()
        for leaves, mult in counts.items():
            if leaves < 0 or mult < 0:
                raise ValueError(f"bad star entry ℓ={leaves} ×{mult}")
            if mult:
                merged[leaves] += mult
        return cls(tuple(sorted(merged.items())))

    @classmethod
    def from_leaf_counts(cls, leaf_counts: Iterable[int]) -> "ComponentSummary":
        return cls.from_counts(Counter(leaf_counts))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.stars)

    @property
    def vertex_count(self) -> int:
        return sum(m * (l + 1) for l, m in self.stars)

    @property
    def edge_count(self) -> int:
        return sum(m * l for l, m in self.stars)

    @property
    def component_count(self) -> int:
        return sum(m for _, m in self.stars)

    @property
    def has_isolated(self) -> bool:
        return any(l == 0 for l, _ in self.stars)

    def __str__(self) -> str:
        def star(l: int) -> str:
            return {0: "K_1", 1: "K_2"}.get(l, f"K_{{1,{l}}}")
        return " ⊔ ".join(
            (f"{m}{star(l)}" if m > 1 else star(l)) for l, m in self.stars
        ) or "∅"


def decompose_components(graph: SgbGraph) -> ComponentSummary:
    """Каждая компонента является звездой с центром в подгруппе; ℓ = число её пар."""
    return ComponentSummary.from_leaf_counts(len(l) for l in graph.leaves_of_subgroup)


def signature_equal(x: ComponentSummary, y: ComponentSummary) -> bool:
    return x.stars == y.stars
