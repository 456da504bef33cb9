"""
Семейства D_2p, D_2p², Q_4p, Q_4p² в замкнутом виде
----------------------------------------------------
Для простого p считаются без построения группы:

* structure_of          — разложение B(G) в звёзды K_{1,ℓ}
* spectrum_of           — спектр из разложения (формулы звезды)
* energies_of           — E, LE = LE⁺, E_CN как функции p
* predicted_classification — гипоэнергетичен, не гиперэнергетичен, E < LE

Q-семейства ветвятся на p = 2 и p ≥ 3, D_2p требует p ≥ 3.
"""

from __future__ import annotations
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Tuple

import sympy

from errors import InadmissibleFamilyError
from groups.core import FiniteGroup, make_dicyclic, make_dihedral
from spectra.energies import ClassificationFlags, Energy, EnergyReport
from spectra.radicals import RadicalScalar, RadicalSum
from spectra.sgb_graph import ComponentSummary
from spectra.star import MatrixKind, SpectrumMultiset, exact_spectrum


class Family(str, Enum):
    D2P = "D2p"
    D2P2 = "D2p2"
    Q4P = "Q4p"
    Q4P2 = "Q4p2"

    @classmethod
    def parse(cls, token: str) -> "Family":
        key = token.strip().lower()
        for fam in cls:
            if fam.value.lower() == key:
                return fam
        raise InadmissibleFamilyError(
            f"unknown family {token!r}; expected one of {', '.join(f.value for f in cls)}"
        )

    @property
    def dicyclic(self) -> bool:
        return self in (Family.Q4P, Family.Q4P2)


@dataclass(frozen=True)
class FamilyId:
    family: Family
    p:      int

    def __post_init__(self) -> None:
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family.parse(str(self.family)))
        if not isinstance(self.p, int) or not sympy.isprime(self.p):
            raise InadmissibleFamilyError(f"{self.family.value}: p = {self.p} is not prime")
        if self.family is Family.D2P and self.p < 3:
            raise InadmissibleFamilyError(f"D2p requires p ≥ 3, got p = {self.p}")

    @property
    def n(self) -> int:
        """Параметр конструктора: n для D_2n, m для Q_4m."""
        return self.p * self.p if self.family in (Family.D2P2, Family.Q4P2) else self.p

    @property
    def group_order(self) -> int:
        return (4 if self.family.dicyclic else 2) * self.n

    @property
    def group_name(self) -> str:
        return f"{'Q' if self.family.dicyclic else 'D'}_{self.group_order}"

    @property
    def small_branch(self) -> bool:
        """Q-семейства при p = 2 описываются отдельными формулами."""
        return self.family.dicyclic and self.p == 2

    def __str__(self) -> str:
        return f"{self.family.value}(p={self.p})"


def group_of(f: FamilyId) -> FiniteGroup:
    build = make_dicyclic if f.family.dicyclic else make_dihedral
    return build(f.n)


# ---------------------------------------------------------------------------
def _stars(f: FamilyId) -> List[Tuple[int, int]]:
    """(ℓ, кратность) до слияния совпадающих ℓ."""
    p = f.p
    if f.family is Family.D2P:
        return [(1, 1), (3, p), (p * p - 1, 1), (3 * p * (p - 1), 1)]
    if f.family is Family.D2P2:
        return [
            (1, 1), (3, p * p), (p * p - 1, 1), (p ** 4 - p * p, 1),
            (3 * p * (p - 1), p), (3 * p * p * (p * p - p), 1),
        ]
    if f.family is Family.Q4P:
        if f.small_branch:
            return [(1, 1), (3, 1), (12, 3), (24, 1)]
        return [
            (1, 1), (3, 1), (12, p), (p * p - 1, 1), (3 * p * p - 3, 1),
            (12 * p * p - 12 * p, 1),
        ]
    if f.small_branch:
        return [(1, 1), (3, 1), (12, 5), (24, 2), (48, 1), (96, 1)]
    # шесть подгрупп в ⟨a⟩, p² копий C_4, p копий Q_4p и вся группа
    return [
        (1, 1), (3, 1), (12, p * p), (p * p - 1, 1), (3 * p * p - 3, 1),
        (p ** 4 - p * p, 1), (3 * p ** 4 - 3 * p * p, 1), (12 * p * p - 12 * p, p),
        (12 * p ** 4 - 12 * p ** 3, 1),
    ]


def structure_of(f: FamilyId) -> ComponentSummary:
    counts: Counter = Counter()
    for leaves, mult in _stars(f):
        counts[leaves] += mult
    return ComponentSummary.from_counts(counts)


def spectrum_of(f: FamilyId, kind: MatrixKind) -> SpectrumMultiset:
    return exact_spectrum(structure_of(f), kind)


# ----------------------------- counts --------------------------------------
def vertex_count_of(f: FamilyId) -> int:
    p = f.p
    if f.family is Family.D2P:
        return 4 * p ** 2 + p + 3
    if f.family is Family.D2P2:
        return 4 * p ** 4 + p ** 2 + p + 4
    if f.family is Family.Q4P:
        return 70 if f.small_branch else 16 * p ** 2 + p + 5
    return 267 if f.small_branch else 16 * p ** 4 + p ** 2 + p + 7


def edge_count_of(f: FamilyId) -> int:
    return f.group_order ** 2


def component_count_of(f: FamilyId) -> int:
    return vertex_count_of(f) - edge_count_of(f)


# ----------------------------- energies ------------------------------------
def energies_of(f: FamilyId) -> EnergyReport:
    """
    Все звёзды непусты (ℓ ≥ 1), поэтому при m рёбрах и c компонентах
    LE = LE⁺ = 2(m² + c²)/(m + c) и E_CN = 2(m - c); E = Σ 2√ℓ.
    """
    m, c = edge_count_of(f), component_count_of(f)
    le = RadicalSum.rational(Fraction(2 * (m * m + c * c), m + c))
    e = RadicalSum.of(RadicalScalar.sqrt(leaves, 2 * mult) for leaves, mult in structure_of(f).stars)
    return EnergyReport(
        vertex_count=m + c,
        edge_count=m,
        E=Energy.of(e),
        LE=Energy.of(le),
        LE_plus=Energy.of(le),
        E_CN=Energy.of(RadicalSum.rational(2 * (m - c))),
    )


def predicted_classification(f: FamilyId) -> ClassificationFlags:
    return ClassificationFlags(
        hypoenergetic=True,
        hyperenergetic=False,
        L_hyperenergetic=False,
        Q_hyperenergetic=False,
        CN_hyperenergetic=False,
        ELE_holds=True,
    )
