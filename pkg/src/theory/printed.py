"""
Опубликованные формулировки как выражения sympy от p.

Здесь хранится то, что напечатано: разложения в звёзды, развёрнутые
спектры с многочленами кратностей и формулы энергий. Ничему из этого
расчёт не доверяет: printed_discrepancies сравнивает напечатанное с тем,
что выводится из подсчёта подгрупп, и возвращает расхождения как заметки.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from collections import Counter
from typing import Dict, List, Mapping, Tuple

import sympy

from spectra.radicals import RadicalScalar
from spectra.sgb_graph import ComponentSummary, signature_equal
from spectra.star import ALL_KINDS, MatrixKind, SpectrumMultiset, spectra_equal
from .families import Family, FamilyId, energies_of, spectrum_of, structure_of

log = logging.getLogger("printed")

p = sympy.Symbol("p", positive=True, integer=True)
PRIMES_TO_CHECK = tuple(sympy.primerange(2, 98))


@dataclass(frozen=True)
class DisplayedEntry:
    """(value)^mult; при ``paired`` — пара (±√value)^mult."""
    value:        sympy.Expr
    multiplicity: sympy.Expr
    paired:       bool = False

    def at(self, prime: int) -> List[Tuple[RadicalScalar, int]]:
        v = int(sympy.sympify(self.value).subs(p, prime))
        m = int(sympy.sympify(self.multiplicity).subs(p, prime))
        if not self.paired:
            return [(RadicalScalar.rational(v), m)]
        root = RadicalScalar.sqrt(v)
        return [(root, m), (-root, m)]


def _v(value, mult=1) -> DisplayedEntry:
    return DisplayedEntry(sympy.sympify(value), sympy.sympify(mult))


def _pm(radicand, mult=1) -> DisplayedEntry:
    return DisplayedEntry(sympy.sympify(radicand), sympy.sympify(mult), paired=True)


def _s(leaves, mult=1) -> Tuple[sympy.Expr, sympy.Expr]:
    return sympy.sympify(leaves), sympy.sympify(mult)


@dataclass(frozen=True)
class PrintedStatement:
    adjacency:  Tuple[DisplayedEntry, ...]
    laplacian:  Tuple[DisplayedEntry, ...]          # напечатано: L = Q
    cn:         Tuple[DisplayedEntry, ...]
    E:          sympy.Expr
    LE:         sympy.Expr
    E_CN:       sympy.Expr
    vertices:   sympy.Expr
    stars:      Tuple[Tuple[sympy.Expr, sympy.Expr], ...]
    static_notes: Tuple[str, ...] = field(default=())

    def displayed(self, kind: MatrixKind) -> Tuple[DisplayedEntry, ...]:
        if kind is MatrixKind.ADJACENCY:
            return self.adjacency
        if kind is MatrixKind.COMMON_NEIGHBORHOOD:
            return self.cn
        return self.laplacian


# ---------------------------------------------------------------------------
_D2P = PrintedStatement(
    adjacency=(
        _v(0, 4 * p**2 - p - 3), _pm(1), _pm(3, p), _pm(p**2 - 1), _pm(3 * p**2 - 3 * p),
    ),
    laplacian=(
        _v(0, p + 3), _v(1, 4 * p**2 - p - 3), _v(2), _v(4, p), _v(p**2),
        _v(3 * p**2 - 3 * p + 1),
    ),
    cn=(
        _v(0, p + 4), _v(-1, 4 * p**2 - p - 3), _v(2, p), _v(p**2 - 2),
        _v(3 * p**2 - 3 * p - 1),
    ),
    E=2 + 2 * p * sympy.sqrt(3) + 2 * sympy.sqrt(p**2 - 1) + 2 * sympy.sqrt(3 * p * (p - 1)),
    LE=(32 * p**4 + 2 * p**2 + 12 * p + 18) / (4 * p**2 + p + 3),
    E_CN=8 * p**2 - 2 * p - 6,
    vertices=4 * p**2 + p + 3,
    stars=(_s(1), _s(3, p), _s(p**2 - 1), _s(3 * p**2 - 3 * p)),
)

_D2P2 = PrintedStatement(
    adjacency=(
        _v(0, 4 * p**4 - p**2 - p - 4), _pm(1), _pm(3, p**2), _pm(p**2 - 1),
        _pm(p**4 - p**2), _pm(3 * p**2 - 3 * p, p), _pm(3 * p**4 - 3 * p**3),
    ),
    laplacian=(
        _v(0, p**2 + p + 4), _v(1, 4 * p**4 - p**2 - p - 4), _v(2), _v(4, p**2), _v(p**2),
        _v(p**4 - p**2 + 1), _v(3 * p**2 - 3 * p + 1, p), _v(3 * p**4 - 3 * p**3 + 1),
    ),
    cn=(
        _v(0, p**2 + p + 5), _v(-1, 4 * p**4 - p**2 - p - 4), _v(2, p**2), _v(p**2 - 2),
        _v(p**4 - p**2 - 1), _v(3 * p**2 - 3 * p - 1, p), _v(3 * p**4 - 3 * p**3 - 1),
    ),
    E=(2 + 2 * p**2 * sympy.sqrt(3) + (2 * p + 2) * sympy.sqrt(p**2 - 1)
       + 4 * p * sympy.sqrt(3 * p * (p - 1))),
    LE=((32 * p**8 + 2 * p**4 + 4 * p**3 + 18 * p**2 + 16 * p + 32)
        / (4 * p**4 + p**2 + p + 4)),
    E_CN=8 * p**4 - 2 * p**2 - 2 * p - 8,
    vertices=4 * p**4 + p**2 + p + 4,
    stars=(
        _s(1), _s(3, p**2), _s(p**2 - 1), _s(p**4 - p**2), _s(3 * p**2 - 3 * p, p),
        _s(3 * p**4 - 3 * p**3),
    ),
    static_notes=(
        "D2p2: the printed derivation of the adjacency spectrum leaves the star "
        "K_{1,3p²(p²-p)} out of one union step; the stated spectrum includes it "
        "and is used here",
    ),
)

_Q8 = PrintedStatement(
    adjacency=(_v(0, 58), _pm(1), _pm(3), _pm(12, 3), _pm(24)),
    laplacian=(_v(0, 6), _v(1, 58), _v(2), _v(4), _v(13, 3), _v(25)),
    cn=(_v(-1, 58), _v(0, 7), _v(2), _v(11, 3), _v(23)),
    E=2 + 6 * sympy.sqrt(3) + 4 * sympy.sqrt(6),
    LE=sympy.Rational(4132, 35),
    E_CN=sympy.Integer(116),
    vertices=sympy.Integer(70),
    stars=(_s(1), _s(3), _s(12, 3), _s(24)),
)

_Q4P = PrintedStatement(
    adjacency=(
        _v(0, 16 * p**2 - p - 5), _pm(1), _pm(3), _pm(12, p), _pm(p**2 - 1),
        _pm(3 * p**2 - 3), _pm(12 * p**2 - 12 * p),
    ),
    laplacian=(
        _v(0, p + 5), _v(1, 16 * p**2 - p - 5), _v(2), _v(4), _v(13, p), _v(p**2),
        _v(3 * p**2 - 2), _v(12 * p**2 - 12 * p + 1),
    ),
    cn=(
        _v(-1, 16 * p**2 - p - 5), _v(0, p + 6), _v(2), _v(11, p), _v(p**2 - 2),
        _v(3 * p**2 - 4), _v(12 * p**2 - 12 * p - 1),
    ),
    E=(2 + 2 * sympy.sqrt(3) + 2 * p * sympy.sqrt(12) + 2 * sympy.sqrt(p**2 - 1)
       + 2 * sympy.sqrt(3 * p**2 - 3) + 2 * sympy.sqrt(12 * p**2 - 12 * p)),
    LE=(512 * p**4 + 2 * p**2 + 20 * p + 50) / (16 * p**2 + p + 5),
    E_CN=32 * p**2 - 2 * p - 10,
    vertices=16 * p**2 + p + 5,
    stars=(_s(1), _s(3), _s(12, p), _s(p**2 - 1), _s(3 * p**2 - 3), _s(12 * p**2 - 12 * p)),
)

_Q16 = PrintedStatement(
    adjacency=(_v(0, 245), _pm(1), _pm(3), _pm(12, 5), _pm(24, 2), _pm(48), _pm(96)),
    laplacian=(_v(0, 11), _v(1, 245), _v(2), _v(4), _v(13, 5), _v(25, 2), _v(49), _v(97)),
    cn=(_v(-1, 245), _v(0, 12), _v(2), _v(11, 5), _v(23, 2), _v(47), _v(95)),
    E=2 + 30 * sympy.sqrt(3) + 16 * sympy.sqrt(6),
    LE=sympy.Rational(131314, 267),
    E_CN=sympy.Integer(490),
    vertices=sympy.Integer(267),
    stars=(_s(1), _s(3), _s(12, 5), _s(24, 2), _s(48), _s(96)),
)

_Q4P2 = PrintedStatement(
    adjacency=(
        _v(0, 16 * p**4 - p**2 - p - 5), _pm(1), _pm(3), _pm(12, p), _pm(p**2 - 1),
        _pm(3 * p**2 - 3), _pm(3 * p**4 - 3 * p**2), _pm(12 * p**2 - 12 * p, p - 1),
        _pm(13 * p**4 - 12 * p**3 + 11 * p**2 - 12 * p),
    ),
    laplacian=(
        _v(0, p**2 + p + 5), _v(1, 16 * p**4 - p**2 - p - 5), _v(2), _v(4), _v(13, p**2),
        _v(p**2), _v(3 * p**2 - 2), _v(3 * p**4 - 3 * p**2 + 1),
        _v(12 * p**2 - 12 * p + 1, p - 1), _v(13 * p**4 - 12 * p**3 + 11 * p**2 - 12 * p + 1),
    ),
    cn=(
        _v(-1, 16 * p**4 - p**2 - p - 5), _v(0, p**2 + p + 6), _v(2), _v(11, p**2),
        _v(p**2 - 2), _v(3 * p**2 - 4), _v(3 * p**4 - 3 * p**2 - 1),
        _v(12 * p**2 - 12 * p - 1, p - 1), _v(13 * p**4 - 12 * p**3 + 11 * p**2 - 12 * p - 1),
    ),
    E=(2 + 2 * sympy.sqrt(3) + 2 * p**2 * sympy.sqrt(12) + 2 * sympy.sqrt(p**2 - 1)
       + 2 * sympy.sqrt(3 * p**2 - 3) + 2 * sympy.sqrt(3 * p**4 - 3 * p**2)
       + 2 * (p - 1) * sympy.sqrt(12 * p**2 - 12 * p)
       + 2 * sympy.sqrt(13 * p**4 - 12 * p**3 + 11 * p**2 - 12 * p)),
    LE=((512 * p**8 + 16 * p**5 - 24 * p**4 - 44 * p**3 + 118 * p**2 - 32 * p + 54)
        / (16 * p**4 + p**2 + p + 5)),
    E_CN=32 * p**4 - 2 * p**2 - 2 * p - 10,
    vertices=16 * p**4 + p**2 + p + 5,
    stars=(
        _s(1), _s(3), _s(12, p**2), _s(p**2 - 1), _s(3 * p**2 - 3), _s(3 * p**4 - 3 * p**2),
        _s(12 * p**2 - 12 * p, p - 1), _s(13 * p**4 - 12 * p**3 + 11 * p**2 - 12 * p),
    ),
)

PRINTED: Mapping[Tuple[Family, bool], PrintedStatement] = {
    (Family.D2P, False):  _D2P,
    (Family.D2P2, False): _D2P2,
    (Family.Q4P, True):   _Q8,
    (Family.Q4P, False):  _Q4P,
    (Family.Q4P2, True):  _Q16,
    (Family.Q4P2, False): _Q4P2,
}


def printed_statement(f: FamilyId) -> PrintedStatement:
    return PRINTED[(f.family, f.small_branch)]


def printed_structure(f: FamilyId) -> ComponentSummary:
    counts: Counter = Counter()
    for leaves, mult in printed_statement(f).stars:
        counts[int(leaves.subs(p, f.p))] += int(mult.subs(p, f.p))
    return ComponentSummary.from_counts(counts)


# ---------------------------------------------------------------------------
def displayed_spectrum(f: FamilyId, kind: MatrixKind) -> SpectrumMultiset:
    entries = printed_statement(f).displayed(kind)
    return SpectrumMultiset.of(item for e in entries for item in e.at(f.p))


def multiplicity_total(family: Family, kind: MatrixKind, *, small_branch: bool = False) -> sympy.Expr:
    """Σ напечатанных кратностей (пары ± считаются дважды) как многочлен от p."""
    entries = PRINTED[(family, small_branch)].displayed(kind)
    return sympy.expand(sum((e.multiplicity * (2 if e.paired else 1) for e in entries), sympy.Integer(0)))


def multiplicity_mismatches(primes=PRIMES_TO_CHECK) -> List[str]:
    """Где сумма напечатанных кратностей ≠ |V| (символьно и на простых ≤ 97)."""
    out: List[str] = []
    for (family, small), statement in PRINTED.items():
        for kind in (MatrixKind.ADJACENCY, MatrixKind.LAPLACIAN, MatrixKind.COMMON_NEIGHBORHOOD):
            diff = sympy.expand(multiplicity_total(family, kind, small_branch=small) - statement.vertices)
            if small:
                bad = [2] if diff != 0 else []
            else:
                bad = [q for q in primes if (family is not Family.D2P or q >= 3) and diff.subs(p, q) != 0]
            if bad:
                branch = " (p=2)" if small else ""
                out.append(
                    f"{family.value}{branch} {kind.value}: displayed multiplicities sum to "
                    f"|V| + ({diff}) at p ∈ {bad[:5]}{'…' if len(bad) > 5 else ''}"
                )
    return out


def printed_discrepancies(f: FamilyId) -> List[str]:
    """Заметки о расхождениях напечатанного с выведенным из разложения."""
    statement = printed_statement(f)
    notes: List[str] = []

    shown_stars, derived_stars = printed_structure(f), structure_of(f)
    if not signature_equal(shown_stars, derived_stars):
        notes.append(
            f"{f}: printed decomposition {shown_stars} (|V| = {shown_stars.vertex_count}) differs "
            f"from the subgroup count {derived_stars} (|V| = {derived_stars.vertex_count})"
        )

    for kind in ALL_KINDS:
        if kind is MatrixKind.SIGNLESS_LAPLACIAN:
            continue
        shown, derived = displayed_spectrum(f, kind), spectrum_of(f, kind)
        if not spectra_equal(shown, derived):
            notes.append(
                f"{f}: printed {kind.value} spectrum {shown} differs from the star "
                f"decomposition {derived}"
            )

    derived = energies_of(f)
    checks: Dict[str, Tuple[sympy.Expr, sympy.Expr]] = {
        "E":    (statement.E, derived.E.exact.to_sympy()),
        "LE":   (statement.LE, derived.LE.exact.to_sympy()),
        "E_CN": (statement.E_CN, derived.E_CN.exact.to_sympy()),
    }
    for name, (printed, value) in checks.items():
        printed_at = sympy.sympify(printed).subs(p, f.p)
        if sympy.simplify(printed_at - value) != 0:
            notes.append(
                f"{f}: printed {name} = {printed_at} ≈ {float(printed_at):.4f}, "
                f"star decomposition gives {value} ≈ {float(value):.4f}"
            )

    notes.extend(statement.static_notes)
    for note in notes:
        log.warning(note)
    return notes
