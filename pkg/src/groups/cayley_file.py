"""
Текстовый формат таблицы Кэли
------------------------------
    строка 1        : порядок n
    строки 2…n+1    : n индексов (0-based) через пробелы
    далее, опционно : "index label"

Пустые строки пропускаются, номера строк в ошибках — по исходному файлу.
"""

from __future__ import annotations
import logging
from pathlib import Path
from typing import Dict, List, Tuple

from errors import CayleyFileError, CayleyParseError
from .core import FiniteGroup, from_cayley_table

log = logging.getLogger("cayley_file")


def _int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise CayleyParseError(line_no, f"expected an integer, got {token!r}") from None


def parse_cayley_text(text: str, *, name: str = "G") -> FiniteGroup:
    lines: List[Tuple[int, str]] = [
        (no, raw.strip()) for no, raw in enumerate(text.splitlines(), start=1)
        if raw.strip()
    ]
    if not lines:
        raise CayleyParseError(1, "empty file")

    head_no, head = lines[0]
    parts = head.split()
    if len(parts) != 1:
        raise CayleyParseError(head_no, "first line must hold only the group order")
    n = _int(parts[0], head_no)
    if n < 1:
        raise CayleyParseError(head_no, f"order must be positive, got {n}")
    if len(lines) < n + 1:
        raise CayleyParseError(lines[-1][0], f"expected {n} table rows, found {len(lines) - 1}")

    table = []
    for no, row in lines[1:n + 1]:
        cells = row.split()
        if len(cells) != n:
            raise CayleyParseError(no, f"expected {n} entries, got {len(cells)}")
        table.append([_int(c, no) for c in cells])

    labels: Dict[int, str] = {}
    for no, row in lines[n + 1:]:
        idx, *rest = row.split(None, 1)
        i = _int(idx, no)
        label = rest[0].strip() if rest else ""
        if not 0 <= i < n or not label:
            raise CayleyParseError(no, f"bad label line {row!r}")
        if i in labels:
            raise CayleyParseError(no, f"duplicate label for element {i}")
        labels[i] = label

    if labels and len(labels) != n:
        log.warning(f"{name}: {n - len(labels)} elements without label, using indices")
    label_list = [labels.get(i, str(i)) for i in range(n)] if labels else None
    return from_cayley_table(table, labels=label_list, name=name)


def read_cayley_file(path: Path | str) -> FiniteGroup:
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise CayleyFileError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line_no = data[:exc.start].count(b"\n") + 1
        raise CayleyParseError(line_no, f"not valid UTF-8 at byte {exc.start}") from None
    group = parse_cayley_text(text, name=path.stem)
    log.info(f"Loaded {group.name}: order {group.order} ← {path}")
    return group


def dump_cayley_table(g: FiniteGroup, path: Path | str) -> Path:
    """Пишет группу в том же формате; обратное чтение даёт ту же таблицу."""
    path = Path(path)
    out = [str(g.order)]
    out += [" ".join(str(v) for v in row) for row in g.rows]
    if g.labels:
        out += [f"{i} {lab}" for i, lab in enumerate(g.labels)]
    path.write_text("\n".join(out) + "\n", encoding="utf-8")
    return path
