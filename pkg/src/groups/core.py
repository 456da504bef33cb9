"""
Конечные группы в виде плотной таблицы Кэли
--------------------------------------------
* FiniteGroup — неизменяемая таблица умножения + единица + обратные
* Конструкторы семейств: циклическая C_n, диэдральная D_2n, дициклическая Q_4m
* from_cayley_table — приём внешней таблицы с полной проверкой аксиом
"""

from __future__ import annotations
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from errors import (
    AssociativityError, CayleyLabelMismatch, EntryOutOfRangeError, InvalidOrderError,
    LatinSquareError, MissingInverseError, NoIdentityError, NotSquareError,
)

log = logging.getLogger("groups")

GroupElement = int          # канонический индекс элемента: строка/столбец таблицы


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """
    Группа порядка ``order`` на элементах 0 … order-1.

    Parameters
    ----------
    cayley   : np.ndarray (order × order) – cayley[x, y] = x·y
    identity : int                        – индекс единицы
    inverse  : np.ndarray (order,)        – inverse[x] = x⁻¹
    labels   : tuple[str] | None          – подписи вида "a^2 b"
    name     : str                        – для логов и отчётов
    """
    cayley:   np.ndarray
    identity: int
    inverse:  np.ndarray
    labels:   Optional[Tuple[str, ...]] = None
    name:     str = field(default="G")

    def __post_init__(self) -> None:
        # таблицы только на чтение: группа неизменяема после построения
        self.cayley.setflags(write=False)
        self.inverse.setflags(write=False)

    @property
    def order(self) -> int:
        return int(self.cayley.shape[0])

    @cached_property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        """Таблица как кортежи python-int: быстрее numpy на поэлементных обходах."""
        return tuple(tuple(int(v) for v in row) for row in self.cayley)

    def mul(self, x: GroupElement, y: GroupElement) -> GroupElement:
        return self.rows[x][y]

    def inv(self, x: GroupElement) -> GroupElement:
        return int(self.inverse[x])

    def label(self, x: GroupElement) -> str:
        return self.labels[x] if self.labels else str(x)

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.cayley, self.cayley.T))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


# ---------------------------------------------------------------------------
def _check_order(n: int, what: str) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidOrderError(f"{what} must be a positive integer, got {n!r}")


def _power_label(i: int, j: int) -> str:
    a = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
    if j == 0:
        return a or "e"
    return f"{a} b" if a else "b"


def _from_rule(
    order: int,
    rule,
    *,
    labels: Sequence[str],
    name: str,
) -> FiniteGroup:
    table = np.fromiter(
        (rule(x, y) for x in range(order) for y in range(order)),
        dtype=np.int64, count=order * order,
    ).reshape(order, order)
    # семейства строятся по презентации, но проверка аксиом всегда включена
    return from_cayley_table(table, labels=labels, name=name)


def make_cyclic(n: int) -> FiniteGroup:
    """C_n: cayley[i][j] = (i + j) mod n, единица 0."""
    _check_order(n, "cyclic order n")
    labels = ["e"] + ["a" if i == 1 else f"a^{i}" for i in range(1, n)]
    return _from_rule(n, lambda x, y: (x + y) % n, labels=labels, name=f"C_{n}")


def make_dihedral(n: int) -> FiniteGroup:
    """
    D_2n = ⟨a, b : aⁿ = b² = 1, bab = a⁻¹⟩, элемент a^i b^j ↦ j·n + i.
    """
    _check_order(n, "dihedral parameter n")

    def rule(x: int, y: int) -> int:
        j, i = divmod(x, n)
        l, k = divmod(y, n)
        if j == 0:                          # a^i · a^k b^l = a^{i+k} b^l
            return l * n + (i + k) % n
        if l == 0:                          # (a^i b) · a^k = a^{i-k} b
            return n + (i - k) % n
        return (i - k) % n                  # (a^i b)(a^k b) = a^{i-k}

    labels = [_power_label(x % n, x // n) for x in range(2 * n)]
    return _from_rule(2 * n, rule, labels=labels, name=f"D_{2 * n}")


def make_dicyclic(m: int) -> FiniteGroup:
    """
    Q_4m = ⟨a, b : a^{2m} = 1, b² = a^m, bab⁻¹ = a⁻¹⟩, элемент a^i b^j ↦ j·2m + i.
    """
    _check_order(m, "dicyclic parameter m")
    r = 2 * m

    def rule(x: int, y: int) -> int:
        j, i = divmod(x, r)
        l, k = divmod(y, r)
        if j == 0:
            return l * r + (i + k) % r
        if l == 0:
            return r + (i - k) % r
        return (i - k + m) % r

    labels = [_power_label(x % r, x // r) for x in range(2 * r)]
    return _from_rule(2 * r, rule, labels=labels, name=f"Q_{4 * m}")


def from_cayley_table(
    raw,
    *,
    labels: Optional[Sequence[str]] = None,
    name: str = "G",
) -> FiniteGroup:
    """
    Проверяет таблицу по всем аксиомам группы и возвращает FiniteGroup.
    Единица ищется, а не предполагается на позиции 0.
    """
    try:
        table = np.asarray(raw, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise NotSquareError(f"table is not a rectangular integer array ({e})") from e
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise NotSquareError(f"table shape {table.shape} is not square and non-empty")
    n = table.shape[0]

    bad = np.argwhere((table < 0) | (table >= n))
    if bad.size:
        x, y = (int(v) for v in bad[0])
        raise EntryOutOfRangeError(
            f"entry cayley[{x}][{y}] = {int(table[x, y])} outside [0, {n})"
        )

    expected = np.arange(n)
    for x in range(n):
        if not np.array_equal(np.sort(table[x]), expected):
            raise LatinSquareError(f"row {x} is not a permutation of 0..{n - 1}")
        if not np.array_equal(np.sort(table[:, x]), expected):
            raise LatinSquareError(f"column {x} is not a permutation of 0..{n - 1}")

    identity = next(
        (e for e in range(n)
         if np.array_equal(table[e], expected) and np.array_equal(table[:, e], expected)),
        None,
    )
    if identity is None:
        raise NoIdentityError("no two-sided identity element")

    inverse = np.empty(n, dtype=np.int64)
    for x in range(n):
        right = np.flatnonzero(table[x] == identity)
        y = int(right[0])
        if table[y, x] != identity:
            raise MissingInverseError(f"element {x} has no two-sided inverse")
        inverse[x] = y

    # (xy)z vs x(yz) для всех троек сразу, O(n³) памяти в int64, годится до ~200
    idx = np.arange(n)
    left = table[table[:, :, None], idx[None, None, :]]
    right = table[idx[:, None, None], table[None, :, :]]
    diff = np.argwhere(left != right)
    if diff.size:
        x, y, z = (int(v) for v in diff[0])
        raise AssociativityError(f"(x·y)·z != x·(y·z) at x={x}, y={y}, z={z}")

    if labels is not None and len(labels) != n:
        raise CayleyLabelMismatch(n, len(labels))

    table = table.copy()
    return FiniteGroup(
        cayley=table,
        identity=int(identity),
        inverse=inverse,
        labels=tuple(labels) if labels is not None else None,
        name=name,
    )


def relabel(g: FiniteGroup, permutation: Sequence[int], *, name: Optional[str] = None) -> FiniteGroup:
    """
    Изоморфная копия: старый элемент x получает индекс permutation[x].
    """
    perm = np.asarray(permutation, dtype=np.int64)
    if sorted(perm.tolist()) != list(range(g.order)):
        raise InvalidOrderError("permutation must be a bijection on element indices")
    new = np.empty_like(g.cayley)
    new[perm[:, None], perm[None, :]] = perm[g.cayley]
    labels = None
    if g.labels:
        out = [""] * g.order
        for old, lab in enumerate(g.labels):
            out[perm[old]] = lab
        labels = out
    return from_cayley_table(new, labels=labels, name=name or g.name)


# ---------------------------------------------------------------------------
def element_order(g: FiniteGroup, x: GroupElement) -> int:
    """Наименьшее k ≥ 1 с x^k = e."""
    if not 0 <= x < g.order:
        raise EntryOutOfRangeError(f"element {x} not in group of order {g.order}")
    k, y = 1, x
    while y != g.identity:
        y = g.mul(y, x)
        k += 1
    return k


def element_order_histogram(g: FiniteGroup) -> Dict[int, int]:
    counts = Counter(element_order(g, x) for x in range(g.order))
    return dict(sorted(counts.items()))
