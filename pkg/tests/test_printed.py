from __future__ import annotations
import logging

import pytest
import sympy

from spectra import MatrixKind, spectra_equal
from theory import (
    Family, FamilyId, displayed_spectrum, multiplicity_mismatches, multiplicity_total,
    printed_discrepancies, printed_structure, spectrum_of, structure_of,
)
from theory.printed import p, printed_statement


@pytest.mark.parametrize(
    "f",
    [
        FamilyId(Family.D2P, 3), FamilyId(Family.D2P, 5), FamilyId(Family.D2P, 11),
        FamilyId(Family.Q4P, 3), FamilyId(Family.Q4P, 13), FamilyId(Family.Q4P2, 2),
    ],
    ids=str,
)
def test_agreeing_statements(f):
    assert printed_discrepancies(f) == []


def test_q8_energy_misprint(caplog):
    with caplog.at_level(logging.WARNING, logger="printed"):
        notes = printed_discrepancies(FamilyId(Family.Q4P, 2))
    assert len(notes) == 1
    assert notes[0].startswith("Q4p(p=2): printed E = ")
    assert notes[0].endswith("≈ 36.0467")
    assert "printed E" in caplog.text


@pytest.mark.parametrize("prime", [3, 5, 7])
def test_q4p2_printed_statement_disagrees_with_subgroup_count(prime):
    f = FamilyId(Family.Q4P2, prime)
    notes = printed_discrepancies(f)
    heads = [
        "printed decomposition", "printed adjacency spectrum", "printed laplacian spectrum",
        "printed common_neighborhood spectrum", "printed E = ", "printed LE = ", "printed E_CN = ",
    ]
    assert len(notes) == len(heads)
    for note, head in zip(notes, heads):
        assert note.startswith(f"Q4p2(p={prime}): {head}")


@pytest.mark.parametrize("prime", [3, 5, 7])
def test_q4p2_printed_decomposition_merges_three_stars(prime):
    f = FamilyId(Family.Q4P2, prime)
    shown, derived = printed_structure(f).as_dict(), structure_of(f).as_dict()
    whole = 12 * prime**4 - 12 * prime**3
    assert derived[whole] == 1
    # при p = 3 звезда C_{p²} тоже имеет 72 листа
    assert derived[12 * prime**2 - 12 * prime] == prime + (1 if prime == 3 else 0)
    assert shown[whole + (prime**4 - prime**2) + (12 * prime**2 - 12 * prime)] == 1
    assert shown[12 * prime**2 - 12 * prime] == prime - 1
    assert printed_structure(f).vertex_count == structure_of(f).vertex_count - 2


def test_q36_values():
    notes = printed_discrepancies(FamilyId(Family.Q4P2, 3))
    assert "(|V| = 1313)" in notes[0]
    assert "(|V| = 1315)" in notes[0]
    assert "3361008/1313" in notes[5]
    assert "3359954/1315" in notes[5]


@pytest.mark.parametrize("prime", [2, 3, 5])
def test_d2p2_carries_only_the_static_note(prime):
    f = FamilyId(Family.D2P2, prime)
    assert printed_discrepancies(f) == list(printed_statement(f).static_notes)
    assert len(printed_statement(f).static_notes) == 1


def test_multiplicity_totals():
    assert multiplicity_total(Family.D2P, MatrixKind.LAPLACIAN) == sympy.expand(4 * p**2 + p + 3)
    assert multiplicity_total(Family.Q4P, MatrixKind.ADJACENCY, small_branch=True) == 70
    drift = multiplicity_total(Family.Q4P2, MatrixKind.ADJACENCY) - (16 * p**4 + p**2 + p + 5)
    assert sympy.expand(drift) == sympy.expand(2 * p - 2 * p**2)


def test_only_q4p2_adjacency_display_miscounts():
    mismatches = multiplicity_mismatches()
    assert len(mismatches) == 1
    assert mismatches[0].startswith("Q4p2 adjacency: ")
    assert "|V| + (" in mismatches[0]


def test_displayed_spectrum_merges_coinciding_values():
    # p = 2: ℓ = 3 встречается и как 3, и как p² - 1
    f = FamilyId(Family.D2P2, 2)
    for kind in (MatrixKind.ADJACENCY, MatrixKind.LAPLACIAN, MatrixKind.COMMON_NEIGHBORHOOD):
        assert spectra_equal(displayed_spectrum(f, kind), spectrum_of(f, kind))
