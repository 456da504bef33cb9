from __future__ import annotations
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, Union

from errors import GroupSpecError
from .cayley_file import read_cayley_file
from .core import FiniteGroup, make_cyclic, make_dicyclic, make_dihedral

_BUILDERS: Dict[str, Callable[[int], FiniteGroup]] = {
    "cyclic":   make_cyclic,
    "dihedral": make_dihedral,
    "dicyclic": make_dicyclic,
}
FAMILIES = tuple(_BUILDERS) + ("cayley",)


@dataclass(frozen=True)
class GroupSpec:
    """``family:parameter``: cyclic:n → C_n, dihedral:n → D_2n, dicyclic:m → Q_4m, cayley:path."""
    family:    str
    parameter: Union[int, Path]

    def __str__(self) -> str:
        return f"{self.family}:{self.parameter}"


def parse_group_spec(token: str) -> GroupSpec:
    family, sep, value = token.partition(":")
    family = family.strip().lower()
    if not sep or not value.strip():
        raise GroupSpecError(f"group spec {token!r} must look like family:parameter")
    if family in ("cayley", "cayley-file"):
        return GroupSpec("cayley", Path(value.strip()))
    if family not in _BUILDERS:
        raise GroupSpecError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    try:
        n = int(value)
    except ValueError:
        raise GroupSpecError(f"parameter of {family} must be an integer, got {value!r}") from None
    if n < 1:
        raise GroupSpecError(f"parameter of {family} must be ≥ 1, got {n}")
    return GroupSpec(family, n)


def load_group(spec: GroupSpec) -> FiniteGroup:
    if spec.family == "cayley":
        return read_cayley_file(spec.parameter)
    return _BUILDERS[spec.family](int(spec.parameter))
