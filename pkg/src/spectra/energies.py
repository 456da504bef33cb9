"""
Энергии графа и классификация
------------------------------
    E    = Σ |α|,          α ∈ Spec
    LE   = Σ |λ - 2m/n|,   λ ∈ L-Spec
    LE⁺  = Σ |μ - 2m/n|,   μ ∈ Q-Spec
    E_CN = Σ |β|,          β ∈ CN-Spec

Эталон K_n: E = LE = LE⁺ = 2(n-1), E_CN = 2(n-1)(n-2).
LE и LE⁺ не аддитивны по компонентам: сдвиг 2m/n берётся глобальный.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from errors import IndeterminateComparisonError, InvalidOrderError
from .radicals import GUARD_BAND, RadicalScalar, RadicalSum, compare_exact
from .sgb_graph import ComponentSummary
from .star import ALL_KINDS, MatrixKind, SpectrumMultiset, exact_spectrum, is_integral

log = logging.getLogger("energies")


@dataclass(frozen=True)
class Energy:
    exact: Optional[RadicalSum]
    value: float

    @classmethod
    def of(cls, exact: RadicalSum) -> "Energy":
        return cls(exact, float(exact))

    @classmethod
    def approx(cls, value: float) -> "Energy":
        return cls(None, float(value))

    def __str__(self) -> str:
        return f"{self.exact} ≈ {self.value:.4f}" if self.exact is not None else f"≈ {self.value:.4f}"


@dataclass(frozen=True)
class EnergyReport:
    vertex_count: int
    edge_count:   int
    E:       Energy
    LE:      Energy
    LE_plus: Energy
    E_CN:    Energy


@dataclass(frozen=True)
class ClassificationFlags:
    hypoenergetic:     bool
    hyperenergetic:    bool
    L_hyperenergetic:  bool
    Q_hyperenergetic:  bool
    CN_hyperenergetic: bool
    ELE_holds:         bool

    def as_dict(self) -> Dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


# ---------------------------------------------------------------------------
def _abs_sum(s: SpectrumMultiset) -> RadicalSum:
    return RadicalSum.of(RadicalScalar(abs(v.coefficient) * m, v.radicand) for v, m in s.entries)


def adjacency_energy(s: SpectrumMultiset) -> RadicalSum:
    return _abs_sum(s)


def cn_energy(s: SpectrumMultiset) -> RadicalSum:
    return _abs_sum(s)


def laplacian_style_energy(s: SpectrumMultiset, m: int, n: int) -> RadicalSum:
    """Σ кратность·|λ - 2m/n|; годится и для L-, и для Q-спектра."""
    if n <= 0:
        raise InvalidOrderError(f"vertex count must be positive, got {n}")
    shift = Fraction(2 * m, n)
    total = RadicalSum()
    for value, mult in s.entries:
        diff = RadicalSum.of([value]) - shift
        if diff.sign() < 0:
            diff = -diff
        total = total + diff.scale(mult)
    return total


def complete_graph_reference(n: int) -> Tuple[int, int, int, int]:
    """(E, LE, LE⁺, E_CN) полного графа K_n."""
    if n < 1:
        raise InvalidOrderError(f"K_n needs n ≥ 1, got {n}")
    e = 2 * (n - 1)
    return e, e, e, 2 * (n - 1) * (n - 2)


def energy_report(spectra: Mapping[MatrixKind, SpectrumMultiset], m: int, n: int) -> EnergyReport:
    return EnergyReport(
        vertex_count=n,
        edge_count=m,
        E=Energy.of(adjacency_energy(spectra[MatrixKind.ADJACENCY])),
        LE=Energy.of(laplacian_style_energy(spectra[MatrixKind.LAPLACIAN], m, n)),
        LE_plus=Energy.of(laplacian_style_energy(spectra[MatrixKind.SIGNLESS_LAPLACIAN], m, n)),
        E_CN=Energy.of(cn_energy(spectra[MatrixKind.COMMON_NEIGHBORHOOD])),
    )


def exact_spectra(summary: ComponentSummary) -> Dict[MatrixKind, SpectrumMultiset]:
    return {kind: exact_spectrum(summary, kind) for kind in ALL_KINDS}


def summary_energy_report(summary: ComponentSummary) -> EnergyReport:
    return energy_report(exact_spectra(summary), summary.edge_count, summary.vertex_count)


# ---------------------------------------------------------------------------
def _compare(x: Energy, y, what: str) -> int:
    """Знак x - y: точно, если обе стороны точные; иначе с защитной полосой."""
    y_exact = y.exact if isinstance(y, Energy) else RadicalSum.rational(y)
    if x.exact is not None and y_exact is not None:
        return compare_exact(x.exact, y_exact)
    y_value = y.value if isinstance(y, Energy) else float(y)
    diff = x.value - y_value
    if abs(diff) < GUARD_BAND:
        raise IndeterminateComparisonError(
            f"{what}: |{x.value} - {y_value}| < {GUARD_BAND} with inexact operands"
        )
    return 1 if diff > 0 else -1


def classify(report: EnergyReport) -> ClassificationFlags:
    n = report.vertex_count
    e_ref, le_ref, le_plus_ref, cn_ref = complete_graph_reference(n)
    flags = ClassificationFlags(
        hypoenergetic=_compare(report.E, n, "E vs n") < 0,
        hyperenergetic=_compare(report.E, e_ref, "E vs E(K_n)") > 0,
        L_hyperenergetic=_compare(report.LE, le_ref, "LE vs LE(K_n)") > 0,
        Q_hyperenergetic=_compare(report.LE_plus, le_plus_ref, "LE+ vs LE+(K_n)") > 0,
        CN_hyperenergetic=_compare(report.E_CN, cn_ref, "E_CN vs E_CN(K_n)") > 0,
        ELE_holds=_compare(report.E, report.LE, "E vs LE") <= 0,
    )
    log.debug(f"n={n}: E={report.E.value:.4f}, LE={report.LE.value:.4f}, flags={flags.as_dict()}")
    return flags


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class RemarkCheck:
    """Выводы о целочисленности и энергиях B(G), ожидаемые для любой группы."""
    adjacency_not_integral: bool
    laplacian_integral:     bool
    signless_integral:      bool
    cn_integral:            bool
    hypoenergetic:          bool
    no_hyper_flag:          bool
    ele_holds:              bool

    def violations(self) -> List[str]:
        return [f.name for f in fields(self) if not getattr(self, f.name)]

    @property
    def holds(self) -> bool:
        return not self.violations()


def remark_conclusions(
    spectra: Mapping[MatrixKind, SpectrumMultiset],
    flags: ClassificationFlags,
) -> RemarkCheck:
    return RemarkCheck(
        adjacency_not_integral=not is_integral(spectra[MatrixKind.ADJACENCY]),
        laplacian_integral=is_integral(spectra[MatrixKind.LAPLACIAN]),
        signless_integral=is_integral(spectra[MatrixKind.SIGNLESS_LAPLACIAN]),
        cn_integral=is_integral(spectra[MatrixKind.COMMON_NEIGHBORHOOD]),
        hypoenergetic=flags.hypoenergetic,
        no_hyper_flag=not (
            flags.hyperenergetic or flags.L_hyperenergetic
            or flags.Q_hyperenergetic or flags.CN_hyperenergetic
        ),
        ele_holds=flags.ELE_holds,
    )
