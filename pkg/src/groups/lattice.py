"""
Решётка подгрупп L(G) как плоский список.

Подгруппа хранится битовой маской над индексами элементов (python int),
поэтому равенство и вложение сводятся к операциям над словами.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

from errors import EntryOutOfRangeError, NotInLatticeError
from .core import FiniteGroup, GroupElement

log = logging.getLogger("lattice")


@dataclass(frozen=True)
class Subgroup:
    members: int                                   # бит x ⇔ элемент x ∈ H
    order:   int
    generators: Tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __contains__(self, x: GroupElement) -> bool:
        return bool(self.members >> x & 1)

    def elements(self) -> List[int]:
        m, out, i = self.members, [], 0
        while m:
            if m & 1:
                out.append(i)
            m >>= 1
            i += 1
        return out

    def is_subset(self, other: "Subgroup") -> bool:
        return self.members & ~other.members == 0

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return self.order, tuple(self.elements())


def closure_mask(g: FiniteGroup, gens: Iterable[int]) -> int:
    """
    Замыкание {e} ∪ gens по умножению. В конечной группе обратные являются
    степенями образующих, так что достаточно обхода правыми умножениями.
    """
    gens = tuple(dict.fromkeys(gens))
    rows = g.rows
    mask = 1 << g.identity
    frontier = [g.identity]
    while frontier:
        fresh = []
        for x in frontier:
            row = rows[x]
            for s in gens:
                y = row[s]
                if not mask >> y & 1:
                    mask |= 1 << y
                    fresh.append(y)
        frontier = fresh
    return mask


def _make(mask: int, gens: Iterable[int]) -> Subgroup:
    return Subgroup(members=mask, order=bin(mask).count("1"), generators=tuple(dict.fromkeys(gens)))


def subgroup_from_generators(g: FiniteGroup, gens: Iterable[GroupElement]) -> Subgroup:
    gens = list(gens)
    for x in gens:
        if not 0 <= x < g.order:
            raise EntryOutOfRangeError(f"element {x} not in group of order {g.order}")
    return _make(closure_mask(g, gens), gens)


def generated_subgroup(g: FiniteGroup, a: GroupElement, b: GroupElement) -> Subgroup:
    """⟨a, b⟩ — наименьшая подгруппа, содержащая a и b."""
    return subgroup_from_generators(g, (a, b))


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class SubgroupLattice:
    group:     FiniteGroup = field(repr=False, compare=False)
    subgroups: Tuple[Subgroup, ...]
    index:     Dict[int, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, pos: int) -> Subgroup:
        return self.subgroups[pos]

    @property
    def orders(self) -> List[int]:
        return [s.order for s in self.subgroups]


def enumerate_subgroups(g: FiniteGroup) -> SubgroupLattice:
    """
    Все подгруппы G: стартуем с циклических ⟨x⟩ и добавляем соединения
    ⟨H ∪ K⟩ известных пар, пока появляются новые. Любая подгруппа есть итерированное
    соединение циклических подгрупп своих элементов, так что перебор полон.
    """
    known: Dict[int, Subgroup] = {}
    for x in range(g.order):
        mask = closure_mask(g, (x,))
        if mask not in known:
            known[mask] = _make(mask, (x,))

    worklist = list(known.values())
    while worklist:
        h = worklist.pop()
        for k in list(known.values()):
            if k.is_subset(h) or h.is_subset(k):
                continue
            gens = h.generators + k.generators
            mask = closure_mask(g, gens)
            if mask not in known:
                known[mask] = _make(mask, gens)
                worklist.append(known[mask])

    ordered = tuple(sorted(known.values(), key=Subgroup.sort_key))
    log.info(f"{g.name}: {len(ordered)} subgroups")
    return SubgroupLattice(
        group=g,
        subgroups=ordered,
        index={s.members: pos for pos, s in enumerate(ordered)},
    )


def subgroup_index(lat: SubgroupLattice, s: Subgroup) -> int:
    try:
        return lat.index[s.members]
    except KeyError:
        raise NotInLatticeError(
            f"member set {bin(s.members)} is not a subgroup of this lattice"
        ) from None
