from __future__ import annotations
import tempfile
from pathlib import Path

import numpy as np
import pytest

from groups import (
    dump_cayley_table, from_cayley_table, make_cyclic, make_dicyclic, make_dihedral,
    read_cayley_file, relabel,
)


def elementary_abelian(k: int):
    """C_2^k: x·y = x XOR y."""
    n = 1 << k
    return from_cayley_table([[x ^ y for y in range(n)] for x in range(n)], name=f"C2^{k}")


def shuffled(g, seed: int):
    perm = np.random.default_rng(seed).permutation(g.order)
    return relabel(g, perm, name=f"{g.name}~{seed}")


def via_cayley_file(g, seed: int):
    """Перемешанная копия g, записанная и прочитанная как файл таблицы Кэли."""
    with tempfile.TemporaryDirectory() as tmp:
        path = dump_cayley_table(shuffled(g, seed), Path(tmp) / f"{g.name}~{seed}.txt")
        return read_cayley_file(path)


@pytest.fixture
def d6():
    return make_dihedral(3)


@pytest.fixture
def q8():
    return make_dicyclic(2)


@pytest.fixture
def c2_cubed():
    return elementary_abelian(3)


def small_groups():
    """20 групп порядка ≤ 24 для свойств, не зависящих от формул."""
    return [
        make_cyclic(1), make_cyclic(2), make_cyclic(6), make_cyclic(8), make_cyclic(12),
        make_dihedral(2), make_dihedral(3), make_dihedral(4), make_dihedral(5), make_dihedral(6),
        make_dihedral(9),
        make_dicyclic(1), make_dicyclic(2), make_dicyclic(3), make_dicyclic(4),
        elementary_abelian(2), elementary_abelian(3),
        via_cayley_file(make_dicyclic(2), 1), via_cayley_file(make_dihedral(6), 2),
        via_cayley_file(make_dicyclic(6), 3),
    ]
