"""
Точная арифметика вида q·√d
----------------------------
* RadicalScalar — одно число q·√d, d бесквадратное (d = 1 — рациональное)
* RadicalSum    — Σ qᵢ·√dᵢ с объединёнными подобными слагаемыми (энергии)
* compare_exact — знак разности без округлений: Fraction, иначе sympy
"""

from __future__ import annotations
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Dict, Iterable, Tuple, Union

import sympy

from errors import IndeterminateComparisonError

GUARD_BAND = 1e-9

Rational = Union[int, Fraction]


@lru_cache(maxsize=None)
def squarefree_split(n: int) -> Tuple[int, int]:
    """n = s²·d, d бесквадратное. Возвращает (s, d); n = 0 → (0, 1)."""
    if n < 0:
        raise ValueError(f"radicand must be non-negative, got {n}")
    if n == 0:
        return 0, 1
    s, d = 1, 1
    for prime, exp in sympy.factorint(n).items():
        s *= prime ** (exp // 2)
        if exp % 2:
            d *= prime
    return s, d


def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@total_ordering
@dataclass(frozen=True)
class RadicalScalar:
    coefficient: Fraction
    radicand:    int = 1

    def __post_init__(self) -> None:
        if self.radicand < 1 or squarefree_split(self.radicand)[0] != 1:
            raise ValueError(f"radicand {self.radicand} is not squarefree and positive")
        if not isinstance(self.coefficient, Fraction):
            object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        if self.coefficient == 0 and self.radicand != 1:
            raise ValueError("zero must be stored with radicand 1")

    # ---------------- constructors ----------------
    @classmethod
    def rational(cls, q: Rational) -> "RadicalScalar":
        return cls(Fraction(q), 1)

    @classmethod
    def sqrt(cls, n: int, coefficient: Rational = 1) -> "RadicalScalar":
        """coefficient·√n с приведением радиканда: √12 → 2√3, √18 → 3√2."""
        s, d = squarefree_split(int(n))
        q = Fraction(coefficient) * s
        return cls(q, d if q else 1)

    # ---------------- views ----------------
    @property
    def is_rational(self) -> bool:
        return self.radicand == 1

    @property
    def is_integer(self) -> bool:
        return self.radicand == 1 and self.coefficient.denominator == 1

    @property
    def signed_square(self) -> Fraction:
        """sign·q²·d: монотонно по значению, сравнение без корней."""
        q = self.coefficient
        return (1 if q >= 0 else -1) * q * q * self.radicand

    def __float__(self) -> float:
        return float(self.coefficient) * math.sqrt(self.radicand)

    def __neg__(self) -> "RadicalScalar":
        return RadicalScalar(-self.coefficient, self.radicand)

    def __abs__(self) -> "RadicalScalar":
        return RadicalScalar(abs(self.coefficient), self.radicand)

    def __lt__(self, other: "RadicalScalar") -> bool:
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        return self.signed_square < other.signed_square

    def to_sympy(self) -> sympy.Expr:
        return sympy.Rational(self.coefficient.numerator, self.coefficient.denominator) * sympy.sqrt(self.radicand)

    def __str__(self) -> str:
        if self.radicand == 1:
            return _fmt_q(self.coefficient)
        q = self.coefficient
        if q == 1:
            return f"√{self.radicand}"
        if q == -1:
            return f"-√{self.radicand}"
        body = _fmt_q(q)
        return f"{body}√{self.radicand}" if q.denominator == 1 else f"({body})√{self.radicand}"


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class RadicalSum:
    """Σ qᵢ·√dᵢ; terms упорядочены по радиканду, нулевые коэффициенты выброшены."""
    terms: Tuple[Tuple[int, Fraction], ...] = ()

    @classmethod
    def of(cls, items: Iterable[Union[RadicalScalar, Tuple[int, Fraction]]]) -> "RadicalSum":
        acc: Dict[int, Fraction] = {}
        for it in items:
            d, q = (it.radicand, it.coefficient) if isinstance(it, RadicalScalar) else it
            acc[d] = acc.get(d, Fraction(0)) + Fraction(q)
        return cls(tuple((d, q) for d, q in sorted(acc.items()) if q != 0))

    @classmethod
    def rational(cls, q: Rational) -> "RadicalSum":
        return cls.of([(1, Fraction(q))])

    def _coerce(self, other) -> "RadicalSum":
        if isinstance(other, RadicalSum):
            return other
        if isinstance(other, RadicalScalar):
            return RadicalSum.of([other])
        if isinstance(other, (int, Fraction)):
            return RadicalSum.rational(other)
        raise TypeError(f"cannot combine RadicalSum with {type(other).__name__}")

    def __add__(self, other) -> "RadicalSum":
        other = self._coerce(other)
        return RadicalSum.of(list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self) -> "RadicalSum":
        return RadicalSum(tuple((d, -q) for d, q in self.terms))

    def __sub__(self, other) -> "RadicalSum":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RadicalSum":
        return self._coerce(other) - self

    def scale(self, k: Rational) -> "RadicalSum":
        return RadicalSum.of((d, q * k) for d, q in self.terms)

    @property
    def is_rational(self) -> bool:
        return all(d == 1 for d, _ in self.terms)

    @property
    def rational_part(self) -> Fraction:
        return next((q for d, q in self.terms if d == 1), Fraction(0))

    def __float__(self) -> float:
        return math.fsum(float(q) * math.sqrt(d) for d, q in self.terms)

    def to_sympy(self) -> sympy.Expr:
        return sympy.Add(*(RadicalScalar(q, d).to_sympy() for d, q in self.terms))

    def sign(self) -> int:
        """Точный знак суммы."""
        if self.is_rational:
            q = self.rational_part
            return (q > 0) - (q < 0)
        # √ бесквадратных линейно независимы над Q: иррациональная сумма ≠ 0
        expr = self.to_sympy()
        if expr.is_positive:
            return 1
        if expr.is_negative:
            return -1
        value = float(self)
        if abs(value) < GUARD_BAND:
            raise IndeterminateComparisonError(f"cannot decide the sign of {self} ≈ {value:.3e}")
        return 1 if value > 0 else -1

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for d, q in self.terms:
            piece = str(RadicalScalar(abs(q), d))
            if not out:
                out = piece if q > 0 else f"-{piece}"
            else:
                out += f" + {piece}" if q > 0 else f" - {piece}"
        return out


def compare_exact(x, y) -> int:
    """-1 / 0 / 1 для x ? y; аргументы — RadicalSum, RadicalScalar или рациональные."""
    x = x if isinstance(x, RadicalSum) else RadicalSum()._coerce(x)
    return (x - y).sign()
