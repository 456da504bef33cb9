"""
Сверка замкнутых формул с полным перебором
------------------------------------------
verify_family строит группу семейства, решётку подгрупп, B(G), и сравнивает:

* разложение в звёзды и |V|, m           — со structure_of / vertex_count_of
* четыре точных спектра (+ численные)    — со spectrum_of
* E, LE, LE⁺, E_CN                       — с energies_of (точное равенство)
* классификацию и цепочку E < |V| < LE   — с predicted_classification
* целочисленность: A не целый, L/Q/CN целые

Расхождения с напечатанными формулами попадают в notes и не портят all_match.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from typing import Dict, List

from errors import OrderLimitError
from groups.lattice import enumerate_subgroups
from spectra.energies import (
    ClassificationFlags, EnergyReport, classify, energy_report, remark_conclusions,
)
from spectra.numeric import DEFAULT_TOL, match_spectra, numeric_spectrum
from spectra.radicals import compare_exact
from spectra.sgb_graph import ComponentSummary, build_sgb, decompose_components, signature_equal
from spectra.star import ALL_KINDS, MatrixKind, exact_spectrum, spectra_equal
from .families import (
    FamilyId, edge_count_of, energies_of, group_of, predicted_classification,
    spectrum_of, structure_of, vertex_count_of,
)
from .printed import printed_discrepancies

log = logging.getLogger("verify")

DEFAULT_MAX_ORDER = 40
ENERGY_NAMES = ("E", "LE", "LE_plus", "E_CN")


@dataclass
class VerificationReport:
    family:               FamilyId
    observed:             ComponentSummary
    energies:             EnergyReport
    flags:                ClassificationFlags
    structure_match:      bool
    spectra_match:        Dict[MatrixKind, bool]
    energy_match:         Dict[str, bool]
    classification_match: bool
    chain_holds:          bool
    integrality_match:    bool
    max_deviation:        float = 0.0
    numeric_checked:      bool = True
    notes:                List[str] = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return (
            self.structure_match
            and all(self.spectra_match.values())
            and all(self.energy_match.values())
            and self.classification_match
            and self.chain_holds
            and self.integrality_match
        )

    def failures(self) -> List[str]:
        out = [] if self.structure_match else ["structure"]
        out += [f"spectrum:{k.code}" for k, ok in self.spectra_match.items() if not ok]
        out += [f"energy:{name}" for name, ok in self.energy_match.items() if not ok]
        if not self.classification_match:
            out.append("classification")
        if not self.chain_holds:
            out.append("E < |V| < LE")
        if not self.integrality_match:
            out.append("integrality")
        return out


def verify_family(
    f: FamilyId,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    tol: float = DEFAULT_TOL,
    exact_only: bool = False,
    progress: bool = False,
) -> VerificationReport:
    if f.group_order > max_order:
        raise OrderLimitError(
            f"{f}: |{f.group_name}| = {f.group_order} exceeds max order {max_order}"
        )
    log.info(f"Verifying {f} on {f.group_name} …")

    g = group_of(f)
    graph = build_sgb(g, enumerate_subgroups(g))
    observed = decompose_components(graph)
    structure_match = (
        signature_equal(observed, structure_of(f))
        and graph.vertex_count == vertex_count_of(f)
        and graph.edge_count == edge_count_of(f)
    )

    spectra = {kind: exact_spectrum(observed, kind) for kind in ALL_KINDS}
    spectra_match: Dict[MatrixKind, bool] = {}
    max_deviation = 0.0
    for kind in ALL_KINDS:
        ok = spectra_equal(spectra[kind], spectrum_of(f, kind))
        if not exact_only:
            # численный спектр того же графа: длины совпадают при любом разложении
            numeric_ok, deviation = match_spectra(
                spectra[kind], numeric_spectrum(graph, kind, progress=progress), tol
            )
            ok = ok and numeric_ok
            max_deviation = max(max_deviation, deviation)
        spectra_match[kind] = ok

    report = energy_report(spectra, graph.edge_count, graph.vertex_count)
    predicted = energies_of(f)
    energy_match = {
        name: compare_exact(getattr(report, name).exact, getattr(predicted, name).exact) == 0
        for name in ENERGY_NAMES
    }

    flags = classify(report)
    n = graph.vertex_count
    chain_holds = compare_exact(report.E.exact, n) < 0 < compare_exact(report.LE.exact, n)
    remark = remark_conclusions(spectra, flags)
    integrality_match = (
        remark.adjacency_not_integral and remark.laplacian_integral
        and remark.signless_integral and remark.cn_integral
    )

    result = VerificationReport(
        family=f,
        observed=observed,
        energies=report,
        flags=flags,
        structure_match=structure_match,
        spectra_match=spectra_match,
        energy_match=energy_match,
        classification_match=flags == predicted_classification(f),
        chain_holds=chain_holds,
        integrality_match=integrality_match,
        max_deviation=max_deviation,
        numeric_checked=not exact_only,
        notes=printed_discrepancies(f),
    )
    if result.all_match:
        log.info(f"{f}: all checks passed (max deviation {max_deviation:.2e})")
    else:
        log.warning(f"{f}: mismatches in {', '.join(result.failures())}")
    return result
