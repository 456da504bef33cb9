from __future__ import annotations
import numpy as np
import pytest

from errors import EXIT_VALIDATION, CayleyFileError, CayleyParseError, LatinSquareError
from groups import dump_cayley_table, parse_cayley_text, read_cayley_file

C3_WITH_LABELS = """
3
0 1 2

1 2 0
2 0 1
0 e
1 a
2 a^2
"""


def test_parse_plain_table():
    g = parse_cayley_text("2\n0 1\n1 0\n", name="C2")
    assert g.order == 2
    assert g.labels is None
    assert g.name == "C2"


def test_blank_lines_and_labels():
    g = parse_cayley_text(C3_WITH_LABELS)
    assert g.order == 3
    assert g.labels == ("e", "a", "a^2")
    assert g.mul(1, 2) == 0


@pytest.mark.parametrize(
    "text, line_no",
    [
        ("abc\n", 1),
        ("2 2\n0 1\n1 0\n", 1),
        ("2\n0 x\n1 0\n", 2),
        ("3\n0 1 2\n1 2 0\n", 3),
        ("2\n0 1\n1\n", 3),
        ("2\n0 1\n1 0\n0 e\n0 x\n", 5),
        ("2\n0 1\n1 0\n7 e\n", 4),
        ("\n\n2\n0 1\nq 0\n", 5),
    ],
)
def test_parse_errors_carry_line_numbers(text, line_no):
    with pytest.raises(CayleyParseError) as exc:
        parse_cayley_text(text)
    assert exc.value.line_no == line_no
    assert str(exc.value).startswith(f"line {line_no}:")


def test_group_axioms_checked_after_parse():
    with pytest.raises(LatinSquareError):
        parse_cayley_text("2\n0 0\n1 1\n")


def test_partial_labels_fall_back_to_indices():
    g = parse_cayley_text("2\n0 1\n1 0\n1 t\n")
    assert g.labels == ("0", "t")


def test_dump_and_read_back(tmp_path, q8):
    path = dump_cayley_table(q8, tmp_path / "q8.txt")
    back = read_cayley_file(path)
    assert back.name == "q8"
    assert np.array_equal(back.cayley, q8.cayley)
    assert back.labels == q8.labels
    assert back.identity == q8.identity


def test_missing_file(tmp_path):
    with pytest.raises(CayleyFileError, match="cannot read") as exc:
        read_cayley_file(tmp_path / "absent.txt")
    assert exc.value.exit_code == EXIT_VALIDATION


def test_invalid_utf8_names_the_line(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_bytes(b"2\n0 1\n1 \xff\n")
    with pytest.raises(CayleyParseError) as exc:
        read_cayley_file(path)
    assert exc.value.line_no == 3
    assert "not valid UTF-8 at byte 8" in str(exc.value)
