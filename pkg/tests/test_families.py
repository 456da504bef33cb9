from __future__ import annotations
from fractions import Fraction

import pytest

from errors import InadmissibleFamilyError
from groups import enumerate_subgroups
from spectra import (
    ALL_KINDS, RadicalSum, build_sgb, classify, decompose_components, exact_spectrum, spectra_equal,
    summary_energy_report,
)
from theory import (
    Family, FamilyId, component_count_of, edge_count_of, energies_of, group_of,
    predicted_classification, spectrum_of, structure_of, vertex_count_of,
)
from theory.printed import PRIMES_TO_CHECK


def admissible(primes=PRIMES_TO_CHECK):
    return [FamilyId(fam, q) for fam in Family for q in primes if not (fam is Family.D2P and q < 3)]


def test_family_parse():
    assert Family.parse(" q4P2 ") is Family.Q4P2
    assert Family.parse("D2p") is Family.D2P
    with pytest.raises(InadmissibleFamilyError, match="unknown family"):
        Family.parse("S3")


def test_family_id_validation():
    with pytest.raises(InadmissibleFamilyError, match="requires p ≥ 3"):
        FamilyId(Family.D2P, 2)
    with pytest.raises(InadmissibleFamilyError, match="not prime"):
        FamilyId(Family.Q4P, 9)
    assert FamilyId("q4p", 3).family is Family.Q4P


@pytest.mark.parametrize(
    "fam, p, n, order, name, small",
    [
        (Family.D2P, 3, 3, 6, "D_6", False),
        (Family.D2P2, 2, 4, 8, "D_8", False),
        (Family.Q4P, 2, 2, 8, "Q_8", True),
        (Family.Q4P2, 2, 4, 16, "Q_16", True),
        (Family.Q4P2, 3, 9, 36, "Q_36", False),
    ],
)
def test_family_id_properties(fam, p, n, order, name, small):
    f = FamilyId(fam, p)
    assert (f.n, f.group_order, f.group_name, f.small_branch) == (n, order, name, small)
    assert group_of(f).order == order
    assert group_of(f).name == name


def test_family_id_str():
    assert str(FamilyId(Family.Q4P, 2)) == "Q4p(p=2)"


@pytest.mark.parametrize("f", admissible(), ids=str)
def test_count_identities(f):
    s = structure_of(f)
    assert s.vertex_count == vertex_count_of(f)
    assert s.edge_count == edge_count_of(f) == f.group_order ** 2
    assert s.component_count == component_count_of(f)
    assert not s.has_isolated


@pytest.mark.parametrize("f", admissible(), ids=str)
def test_closed_form_energies_match_spectra(f):
    closed, derived = energies_of(f), summary_energy_report(structure_of(f))
    assert (closed.vertex_count, closed.edge_count) == (derived.vertex_count, derived.edge_count)
    for name in ("E", "LE", "LE_plus", "E_CN"):
        assert getattr(closed, name).exact == getattr(derived, name).exact, name
    assert classify(closed) == predicted_classification(f)


def test_small_branch_values():
    q8 = energies_of(FamilyId(Family.Q4P, 2))
    assert q8.vertex_count == 70
    assert q8.E_CN.exact == RadicalSum.rational(116)
    q16 = energies_of(FamilyId(Family.Q4P2, 2))
    assert q16.vertex_count == 267
    assert str(q16.E.exact) == "2 + 30√3 + 16√6"
    assert q16.E.value == pytest.approx(93.15336, abs=1e-5)
    assert q16.E_CN.exact == RadicalSum.rational(490)


@pytest.mark.parametrize(
    "f",
    [
        FamilyId(Family.D2P, 3), FamilyId(Family.D2P, 5), FamilyId(Family.D2P, 7),
        FamilyId(Family.D2P2, 2), FamilyId(Family.D2P2, 3),
        FamilyId(Family.Q4P, 2), FamilyId(Family.Q4P, 3), FamilyId(Family.Q4P, 5),
        FamilyId(Family.Q4P2, 2), FamilyId(Family.Q4P2, 3),
    ],
    ids=str,
)
def test_structure_against_brute_force(f):
    g = group_of(f)
    summary = decompose_components(build_sgb(g, enumerate_subgroups(g)))
    assert summary == structure_of(f)
    for kind in ALL_KINDS:
        assert spectra_equal(exact_spectrum(summary, kind), spectrum_of(f, kind))


def test_q36_subgroup_stars():
    f = FamilyId(Family.Q4P2, 3)
    g = group_of(f)
    lattice = enumerate_subgroups(g)
    assert len(lattice) == 19
    summary = decompose_components(build_sgb(g, lattice))
    assert summary.as_dict() == {1: 1, 3: 1, 8: 1, 12: 9, 24: 1, 72: 4, 216: 1, 648: 1}
    assert summary.vertex_count == vertex_count_of(f) == 1315
    assert energies_of(f).LE.exact == RadicalSum.rational(Fraction(3359954, 1315))
