"""
Точные спектры B(G): объединение спектров звёзд K_{1,ℓ}.

    A  : {0^{ℓ-1}, (√ℓ)^1, (-√ℓ)^1}
    L,Q: {0^1, 1^{ℓ-1}, (ℓ+1)^1}
    CN : {0^1, (-1)^{ℓ-1}, (ℓ-1)^1}
    ℓ=0: {0^1} для всех четырёх матриц
"""

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from .radicals import RadicalScalar, RadicalSum
from .sgb_graph import ComponentSummary


class MatrixKind(str, Enum):
    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    SIGNLESS_LAPLACIAN = "signless_laplacian"
    COMMON_NEIGHBORHOOD = "common_neighborhood"

    @property
    def code(self) -> str:
        return _CODES[self]

    @classmethod
    def from_code(cls, code: str) -> "MatrixKind":
        code = code.strip().lower()
        for kind, short in _CODES.items():
            if code in (short, kind.value):
                return kind
        raise ValueError(f"unknown matrix kind {code!r}; expected one of a, l, q, cn")


_CODES = {
    MatrixKind.ADJACENCY: "a",
    MatrixKind.LAPLACIAN: "l",
    MatrixKind.SIGNLESS_LAPLACIAN: "q",
    MatrixKind.COMMON_NEIGHBORHOOD: "cn",
}
ALL_KINDS: Tuple[MatrixKind, ...] = tuple(MatrixKind)


@dataclass(frozen=True)
class SpectrumMultiset:
    """((значение, кратность), …) по убыванию значения, без повторов."""
    entries: Tuple[Tuple[RadicalScalar, int], ...] = ()

    @classmethod
    def of(cls, items: Iterable[Tuple[RadicalScalar, int]]) -> "SpectrumMultiset":
        acc: Dict[RadicalScalar, int] = {}
        for value, mult in items:
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {value}")
            if mult:
                acc[value] = acc.get(value, 0) + mult
        return cls(tuple(sorted(acc.items(), key=lambda e: e[0], reverse=True)))

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.entries)

    def multiplicity(self, value: RadicalScalar) -> int:
        return next((m for v, m in self.entries if v == value), 0)

    def repeat(self, k: int) -> "SpectrumMultiset":
        return SpectrumMultiset.of((v, m * k) for v, m in self.entries)

    def floats(self) -> List[float]:
        """Развёрнутый список по убыванию."""
        return [float(v) for v, m in self.entries for _ in range(m)]

    def trace(self) -> RadicalSum:
        return RadicalSum.of(RadicalScalar(v.coefficient * m, v.radicand) for v, m in self.entries)

    def trace_of_squares(self) -> Fraction:
        return sum((v.coefficient ** 2 * v.radicand * m for v, m in self.entries), Fraction(0))

    def __str__(self) -> str:
        return "{" + ", ".join(f"({v})^{m}" for v, m in self.entries) + "}"


_ZERO = RadicalScalar.rational(0)


def star_spectrum(kind: MatrixKind, leaves: int) -> SpectrumMultiset:
    if leaves < 0:
        raise ValueError(f"leaf count must be non-negative, got {leaves}")
    if leaves == 0:
        return SpectrumMultiset.of([(_ZERO, 1)])
    l = leaves
    if kind is MatrixKind.ADJACENCY:
        root = RadicalScalar.sqrt(l)
        items = [(_ZERO, l - 1), (root, 1), (-root, 1)]
    elif kind in (MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN):
        items = [(_ZERO, 1), (RadicalScalar.rational(1), l - 1), (RadicalScalar.rational(l + 1), 1)]
    else:
        items = [(_ZERO, 1), (RadicalScalar.rational(-1), l - 1), (RadicalScalar.rational(l - 1), 1)]
    return SpectrumMultiset.of(items)


def union_spectrum(parts: Iterable[SpectrumMultiset]) -> SpectrumMultiset:
    return SpectrumMultiset.of(e for part in parts for e in part.entries)


def exact_spectrum(summary: ComponentSummary, kind: MatrixKind) -> SpectrumMultiset:
    return union_spectrum(star_spectrum(kind, l).repeat(m) for l, m in summary.stars)


# ---------------------------------------------------------------------------
def is_integral(s: SpectrumMultiset) -> bool:
    return all(v.is_integer for v, _ in s.entries)


def spectra_equal(x: SpectrumMultiset, y: SpectrumMultiset) -> bool:
    return x.entries == y.entries


def spectrum_symmetric(s: SpectrumMultiset) -> bool:
    """Спектр симметричен относительно нуля (двудольный граф)."""
    return spectra_equal(s, SpectrumMultiset.of((-v, m) for v, m in s.entries))
