"""
Численный оракул: спектр B(G) по компонентам + сверка с точным спектром.
"""

from __future__ import annotations
import hashlib
import logging
from typing import Dict, List, Sequence, Tuple

from tqdm import tqdm

from errors import SpectrumLengthError
from .jacobi import OFFDIAG_TOL, numeric_eigenvalues
from .matrices import component_matrix
from .sgb_graph import SgbGraph
from .star import MatrixKind, SpectrumMultiset

log = logging.getLogger("numeric")

DEFAULT_TOL = 1e-8


def numeric_spectrum(
    graph: SgbGraph,
    kind: MatrixKind,
    *,
    tol: float = OFFDIAG_TOL,
    progress: bool = False,
) -> List[float]:
    """
    Собственные значения B(G) по убыванию: каждая компонента (звезда вокруг
    подгруппы) диагонализуется отдельно; одинаковые блоки считаются один раз.
    """
    cache: Dict[str, List[float]] = {}
    out: List[float] = []
    positions = range(graph.subgroup_vertex_count)
    for pos in tqdm(positions, desc=f"{kind.code}-blocks", disable=not progress, leave=False):
        block = component_matrix(graph, pos, kind)
        key = hashlib.sha1(block.entries.tobytes()).hexdigest() + f":{block.dimension}"
        if key not in cache:
            cache[key] = numeric_eigenvalues(block, tol)
        out.extend(cache[key])
    log.debug(f"B({graph.group.name}) {kind.value}: {len(cache)} distinct blocks")
    return sorted(out, reverse=True)


def match_spectra(
    exact: SpectrumMultiset,
    numeric: Sequence[float],
    tol: float = DEFAULT_TOL,
) -> Tuple[bool, float]:
    """(совпало, max |Δ|) при поэлементной сверке отсортированных списков."""
    expected = exact.floats()
    if len(expected) != len(numeric):
        raise SpectrumLengthError(
            f"exact spectrum has {len(expected)} values, numeric has {len(numeric)}"
        )
    got = sorted(numeric, reverse=True)
    deviation = max((abs(x - y) for x, y in zip(expected, got)), default=0.0)
    return deviation <= tol, deviation
