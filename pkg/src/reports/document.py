"""
Отчёты
------
Каждая команда CLI собирает ReportDocument:

* payload  — вложенный dict для JSON (ключи сортируются при выводе)
* table    — плоская pandas-таблица для CSV / parquet
* markdown — строки для чтения глазами, спектры в виде {(x)^m, …}

Вывод детерминирован: одинаковый запуск даёт байт-в-байт одинаковый файл.
"""

from __future__ import annotations
import json
import logging
import sys
from collections import Counter
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
from tqdm import tqdm
from importlib_metadata import PackageNotFoundError, version

from errors import EXIT_MISMATCH, EXIT_OK, OrderLimitError
from groups.core import FiniteGroup, element_order_histogram
from groups.lattice import enumerate_subgroups
from groups.spec import GroupSpec, load_group
from spectra.energies import EnergyReport, classify, energy_report, exact_spectra, remark_conclusions
from spectra.jacobi import OFFDIAG_TOL
from spectra.numeric import DEFAULT_TOL, match_spectra, numeric_spectrum
from spectra.radicals import GUARD_BAND
from spectra.sgb_graph import build_sgb, decompose_components, isolated_subgroups
from spectra.star import ALL_KINDS, MatrixKind, SpectrumMultiset
from theory.verify import DEFAULT_MAX_ORDER, VerificationReport

log = logging.getLogger("reports")

TOOL_NAME = "sgb-spectra"
FALLBACK_VERSION = "0.1.0"
REPORTS_DIR = Path(__file__).resolve().parents[2] / "data" / "reports"
FORMATS = ("json", "csv", "markdown", "parquet")

ENERGY_LABELS = (("E", "E"), ("LE", "LE"), ("LE_plus", "LE⁺"), ("E_CN", "E_CN"))
SPECTRUM_COLUMNS = ["kind", "value", "value_float", "coefficient", "radicand", "multiplicity"]
NUMERIC_DIGITS = 10


def tool_version() -> str:
    try:
        return version(TOOL_NAME)
    except PackageNotFoundError:
        return FALLBACK_VERSION


def _q(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
@dataclass
class ReportDocument:
    command:  str
    subject:  str
    payload:  Dict[str, Any]
    table:    pd.DataFrame
    markdown: List[str] = field(default_factory=list)
    exit_code: int = EXIT_OK

    def to_json(self) -> str:
        body = {
            "command": self.command,
            "tool": {"name": TOOL_NAME, "version": tool_version()},
            **self.payload,
        }
        return json.dumps(body, sort_keys=True, ensure_ascii=False, indent=2) + "\n"

    def to_csv(self) -> str:
        return self.table.to_csv(index=False, lineterminator="\n")

    def to_markdown(self) -> str:
        return "\n".join(self.markdown) + "\n"

    def render(self, fmt: str) -> str:
        renderers = {"json": self.to_json, "csv": self.to_csv, "markdown": self.to_markdown}
        if fmt not in renderers:
            raise ValueError(f"format {fmt!r} has no text rendering")
        return renderers[fmt]()

    def default_path(self) -> Path:
        slug = "".join(ch if ch.isalnum() else "_" for ch in self.subject).strip("_")
        return REPORTS_DIR / f"{self.command}_{slug}.parquet"

    def write(self, fmt: str, out: Optional[Path] = None) -> Optional[Path]:
        """Текст пишется в out или stdout, parquet в out или REPORTS_DIR."""
        if fmt == "parquet":
            out = out or self.default_path()
            out.parent.mkdir(parents=True, exist_ok=True)
            self.table.to_parquet(out, index=False, engine="pyarrow")
            log.info(f"Saved {len(self.table):,} rows × {self.table.shape[1]} cols → {out}")
            return out
        text = self.render(fmt)
        if out is None:
            sys.stdout.write(text)
            return None
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")
        log.info(f"Saved {fmt} report → {out}")
        return out


# ----------------------------- helpers -------------------------------------
def spectrum_rows(kind: MatrixKind, s: SpectrumMultiset) -> List[Dict[str, Any]]:
    return [
        {
            "kind": kind.code,
            "value": str(v),
            "value_float": float(v),
            "coefficient": _q(v.coefficient),
            "radicand": v.radicand,
            "multiplicity": m,
        }
        for v, m in s.entries
    ]


def energies_payload(r: EnergyReport) -> Dict[str, Dict[str, Any]]:
    return {
        name: {"exact": str(getattr(r, name).exact), "float": getattr(r, name).value}
        for name, _ in ENERGY_LABELS
    }


def _energy_markdown(r: EnergyReport) -> List[str]:
    lines = ["| energy | exact | float |", "|---|---|---|"]
    for name, label in ENERGY_LABELS:
        e = getattr(r, name)
        lines.append(f"| {label} | {e.exact} | {e.value:.4f} |")
    return lines


def _flags_markdown(flags: Dict[str, bool]) -> List[str]:
    return ["| flag | value |", "|---|---|"] + [f"| {k} | {v} |" for k, v in flags.items()]


# ----------------------------- analyze -------------------------------------
def analyze_group(
    g: FiniteGroup,
    *,
    spec: Optional[GroupSpec] = None,
    kinds: Sequence[MatrixKind] = ALL_KINDS,
    tol: float = DEFAULT_TOL,
    exact_only: bool = False,
    max_order: int = DEFAULT_MAX_ORDER,
    progress: bool = False,
) -> ReportDocument:
    if g.order > max_order:
        raise OrderLimitError(f"|{g.name}| = {g.order} exceeds max order {max_order}")

    lattice = enumerate_subgroups(g)
    graph = build_sgb(g, lattice)
    summary = decompose_components(graph)
    spectra = exact_spectra(summary)
    report = energy_report(spectra, graph.edge_count, graph.vertex_count)
    flags = classify(report)
    remark = remark_conclusions(spectra, flags)
    isolated = isolated_subgroups(graph)

    spectra_payload: Dict[str, Any] = {}
    rows: List[Dict[str, Any]] = []
    md_spectra = ["| matrix | spectrum | numeric max deviation |", "|---|---|---|"]
    numeric_ok = True
    for kind in kinds:
        entry: Dict[str, Any] = {
            "display": str(spectra[kind]),
            "exact": spectrum_rows(kind, spectra[kind]),
        }
        deviation = "—"
        if not exact_only:
            numeric = numeric_spectrum(graph, kind, progress=progress)
            ok, dev = match_spectra(spectra[kind], numeric, tol)
            entry.update(
                numeric=[round(x, NUMERIC_DIGITS) + 0.0 for x in numeric],    # -0.0 → 0.0
                numeric_match=ok,
                numeric_max_deviation=dev,
            )
            numeric_ok = numeric_ok and ok
            deviation = f"{dev:.2e}"
        spectra_payload[kind.value] = entry
        rows.extend(spectrum_rows(kind, spectra[kind]))
        md_spectra.append(f"| {kind.code} | {spectra[kind]} | {deviation} |")

    notes = []
    if isolated:
        notes.append(
            f"{len(isolated)} subgroup vertices are generated by no pair of elements; "
            "they appear as isolated K_1 components (outside paper scope)"
        )

    payload = {
        "group": {
            "name": g.name,
            "order": g.order,
            "spec": str(spec) if spec else None,
            "subgroups": len(lattice),
        },
        "graph": {
            "vertices": graph.vertex_count,
            "edges": graph.edge_count,
            "components": summary.component_count,
            "decomposition": str(summary),
            "stars": [list(s) for s in summary.stars],
            "isolated_subgroups": len(isolated),
        },
        "spectra": spectra_payload,
        "energies": energies_payload(report),
        "classification": flags.as_dict(),
        "remark": {**asdict(remark), "holds": remark.holds, "violations": remark.violations()},
        "tolerances": {
            "match_tol": tol,
            "offdiag_tol": OFFDIAG_TOL,
            "guard_band": GUARD_BAND,
            "exact_only": exact_only,
        },
        "notes": notes,
    }
    markdown = [
        f"# B({g.name})",
        "",
        f"- order {g.order}, {len(lattice)} subgroups",
        f"- {graph.vertex_count} vertices, {graph.edge_count} edges, "
        f"{summary.component_count} components",
        f"- B({g.name}) = {summary}",
        *(f"- note: {n}" for n in notes),
        "",
        "## Spectra",
        "",
        *md_spectra,
        "",
        "## Energies",
        "",
        *_energy_markdown(report),
        "",
        "## Classification",
        "",
        *_flags_markdown(flags.as_dict()),
    ]
    return ReportDocument(
        command="analyze",
        subject=g.name,
        payload=payload,
        table=pd.DataFrame(rows, columns=SPECTRUM_COLUMNS),
        markdown=markdown,
        exit_code=EXIT_OK if numeric_ok else EXIT_MISMATCH,
    )


# ----------------------------- group-info ----------------------------------
def group_info(g: FiniteGroup, *, spec: Optional[GroupSpec] = None) -> ReportDocument:
    lattice = enumerate_subgroups(g)
    histogram = element_order_histogram(g)
    subgroup_orders = dict(sorted(Counter(lattice.orders).items()))

    table = pd.concat(
        [
            pd.DataFrame({"what": "element_order", "order": list(histogram), "count": list(histogram.values())}),
            pd.DataFrame({"what": "subgroup_order", "order": list(subgroup_orders), "count": list(subgroup_orders.values())}),
        ],
        ignore_index=True,
    )
    payload = {
        "group": {
            "name": g.name,
            "order": g.order,
            "spec": str(spec) if spec else None,
            "abelian": g.is_abelian(),
        },
        "element_orders": {str(k): v for k, v in histogram.items()},
        "involutions": histogram.get(2, 0),
        "subgroup_count": len(lattice),
        "subgroup_orders": {str(k): v for k, v in subgroup_orders.items()},
    }
    markdown = [
        f"# {g.name}",
        "",
        f"- order {g.order}, {'abelian' if payload['group']['abelian'] else 'non-abelian'}",
        f"- {len(lattice)} subgroups",
        "",
        "| element order | count |",
        "|---|---|",
        *(f"| {k} | {v} |" for k, v in histogram.items()),
        "",
        "| subgroup order | count |",
        "|---|---|",
        *(f"| {k} | {v} |" for k, v in subgroup_orders.items()),
    ]
    return ReportDocument("group-info", g.name, payload, table, markdown)


# ----------------------------- verify --------------------------------------
@dataclass
class VerifyOutcome:
    """Результат одной пары (семейство, p): отчёт либо ошибка допустимости/размера."""
    family:    str
    p:         int
    report:    Optional[VerificationReport] = None
    error:     Optional[str] = None
    exit_code: int = EXIT_OK


def _verify_row(o: VerifyOutcome) -> Dict[str, Any]:
    r = o.report
    if r is None:
        return {
            "family": o.family, "p": o.p, "group": None, "vertices": None, "all_match": False,
            "structure": None, "spectra": None, "energies": None, "classification": None,
            "chain": None, "integrality": None, "max_deviation": None, "notes": 0, "error": o.error,
        }
    return {
        "family": o.family,
        "p": o.p,
        "group": r.family.group_name,
        "vertices": r.energies.vertex_count,
        "all_match": r.all_match,
        "structure": r.structure_match,
        "spectra": all(r.spectra_match.values()),
        "energies": all(r.energy_match.values()),
        "classification": r.classification_match,
        "chain": r.chain_holds,
        "integrality": r.integrality_match,
        "max_deviation": r.max_deviation if r.numeric_checked else None,
        "notes": len(r.notes),
        "error": None,
    }


def _verify_payload(o: VerifyOutcome) -> Dict[str, Any]:
    r = o.report
    if r is None:
        return {"family": o.family, "p": o.p, "error": o.error, "exit_code": o.exit_code}
    return {
        "family": o.family,
        "p": o.p,
        "group": r.family.group_name,
        "all_match": r.all_match,
        "decomposition": str(r.observed),
        "structure_match": r.structure_match,
        "spectra_match": {k.code: ok for k, ok in r.spectra_match.items()},
        "energy_match": dict(r.energy_match),
        "classification_match": r.classification_match,
        "chain_holds": r.chain_holds,
        "integrality_match": r.integrality_match,
        "max_deviation": r.max_deviation,
        "numeric_checked": r.numeric_checked,
        "energies": energies_payload(r.energies),
        "classification": r.flags.as_dict(),
        "failures": r.failures(),
        "notes": list(r.notes),
    }


def verify_document(
    family: str,
    outcomes: Sequence[VerifyOutcome],
    *,
    tol: float = DEFAULT_TOL,
    exact_only: bool = False,
    max_order: int = DEFAULT_MAX_ORDER,
) -> ReportDocument:
    rows = [_verify_row(o) for o in outcomes]
    if any(o.report is not None and not o.report.all_match for o in outcomes):
        code = EXIT_MISMATCH
    else:
        code = max((o.exit_code for o in outcomes if o.report is None), default=EXIT_OK)

    payload = {
        "results": [_verify_payload(o) for o in outcomes],
        "tolerances": {
            "match_tol": tol,
            "offdiag_tol": OFFDIAG_TOL,
            "guard_band": GUARD_BAND,
            "exact_only": exact_only,
            "max_order": max_order,
        },
    }
    markdown = [
        f"# verify {family}",
        "",
        "| p | group | all match | max deviation | notes / error |",
        "|---|---|---|---|---|",
    ]
    for o, row in zip(outcomes, rows):
        dev = "—" if row["max_deviation"] is None else f"{row['max_deviation']:.2e}"
        extra = o.error if o.report is None else "; ".join(o.report.notes) or "—"
        markdown.append(f"| {o.p} | {row['group'] or '—'} | {row['all_match']} | {dev} | {extra} |")

    subject = f"{family}_" + "_".join(str(o.p) for o in outcomes)
    return ReportDocument("verify", subject, payload, pd.DataFrame(rows), markdown, exit_code=code)


# ----------------------------- scan ----------------------------------------
def scan_groups(
    specs: Sequence[GroupSpec],
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    progress: bool = False,
) -> ReportDocument:
    """Ищет группы, на которых нарушается хотя бы один вывод RemarkCheck."""
    rows: List[Dict[str, Any]] = []
    for spec in tqdm(specs, desc="scan", disable=not progress):
        g = load_group(spec)
        if g.order > max_order:
            log.warning(f"Skipping {spec}: |{g.name}| = {g.order} > max order {max_order}")
            continue
        graph = build_sgb(g, enumerate_subgroups(g))
        summary = decompose_components(graph)
        spectra = exact_spectra(summary)
        report = energy_report(spectra, graph.edge_count, graph.vertex_count)
        remark = remark_conclusions(spectra, classify(report))
        rows.append({
            "spec": str(spec),
            "group": g.name,
            "order": g.order,
            "vertices": graph.vertex_count,
            "edges": graph.edge_count,
            "components": summary.component_count,
            "isolated": sum(m for l, m in summary.stars if l == 0),
            "E": report.E.value,
            "LE": report.LE.value,
            "E_CN": report.E_CN.value,
            "holds": remark.holds,
            "violations": ",".join(remark.violations()),
        })

    table = pd.DataFrame(rows)
    violating = [r for r in rows if not r["holds"]]
    log.info(f"Scanned {len(rows)} groups, {len(violating)} with violations")
    payload = {"scanned": len(rows), "rows": rows, "violating": [r["spec"] for r in violating]}
    markdown = [
        f"# scan ({len(rows)} groups)",
        "",
        "| group | vertices | E | LE | holds | violations |",
        "|---|---|---|---|---|---|",
        *(
            f"| {r['group']} | {r['vertices']} | {r['E']:.4f} | {r['LE']:.4f} | {r['holds']} | "
            f"{r['violations'] or '—'} |"
            for r in rows
        ),
    ]
    subject = f"{specs[0]}__{specs[-1]}" if specs else "empty"
    return ReportDocument("scan", subject, payload, table, markdown)
