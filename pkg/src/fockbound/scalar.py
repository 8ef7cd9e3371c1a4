"""Exact real numbers of the form ``sum_k r_k sqrt(k)``.

``r_k`` are rationals and ``k`` ranges over distinct squarefree positive
integers.  Square roots of distinct squarefree integers are linearly
independent over the rationals, so this representation is canonical and
equality is decided exactly.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

Number = Union[int, Fraction, "Surd"]


@lru_cache(maxsize=1 << 16)
def squarefree_split(n: int) -> tuple[int, int]:
    """Write ``n = a^2 * b`` with ``b`` squarefree and return ``(a, b)``."""
    if n <= 0:
        raise ValueError("squarefree_split needs a positive integer")
    a, b = 1, 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        a *= d ** (e // 2)
        if e % 2:
            b *= d
        d += 1
    return a, b * n


class Surd:
    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Fraction] | None = None):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def rational(cls, r) -> "Surd":
        return cls({1: Fraction(r)})

    @classmethod
    def sqrt(cls, n: int, coeff=1) -> "Surd":
        """``coeff * sqrt(n)`` for a nonnegative integer ``n``."""
        if n == 0:
            return cls()
        a, b = squarefree_split(n)
        return cls({b: Fraction(coeff) * a})

    @staticmethod
    def coerce(x: Number) -> "Surd":
        if isinstance(x, Surd):
            return x
        return Surd.rational(x)

    def __add__(self, other: Number) -> "Surd":
        other = Surd.coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Surd(out)

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: Number) -> "Surd":
        return self + (-Surd.coerce(other))

    def __rsub__(self, other: Number) -> "Surd":
        return Surd.coerce(other) - self

    def __mul__(self, other: Number) -> "Surd":
        if not isinstance(other, Surd):
            c = Fraction(other)
            return Surd({k: v * c for k, v in self.terms.items()})
        out: dict[int, Fraction] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                g = math.gcd(k1, k2)
                k = (k1 // g) * (k2 // g)
                out[k] = out.get(k, 0) + v1 * v2 * g
        return Surd(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Surd.rational(other)
        if not isinstance(other, Surd):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __float__(self) -> float:
        return float(sum(float(v) * math.sqrt(k) for k, v in self.terms.items()))

    def __repr__(self) -> str:
        return f"Surd({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = [format_term(v, k) for k, v in sorted(self.terms.items())]
        return " + ".join(parts)

    @property
    def is_single(self) -> bool:
        return len(self.terms) <= 1

    def square(self) -> Fraction:
        """Exact square of a single-term surd."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) != 1:
            raise ValueError("square() needs a single-term surd")
        ((k, v),) = self.terms.items()
        return v * v * k

    def sign(self) -> int:
        """Sign of the real number, decided exactly for single terms."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            (v,) = self.terms.values()
            return 1 if v > 0 else -1
        x = float(self)
        if abs(x) < 1e-9:
            raise ValueError("sign of a mixed surd too close to zero")
        return 1 if x > 0 else -1


def format_term(v: Fraction, k: int) -> str:
    """Entry syntax ``p/q*sqrt(k)`` with the trivial parts omitted (``sqrt(2)``, ``-1/2``)."""
    if v.denominator == 1:
        coeff = str(v.numerator)
    else:
        coeff = f"{v.numerator}/{v.denominator}"
    if k == 1:
        return coeff
    if coeff in ("1", "-1"):
        return coeff[:-1] + f"sqrt({k})"
    return f"{coeff}*sqrt({k})"


_TERM = re.compile(r"^\s*(-?)(?:(\d+)(?:/(\d+))?)?(\*)?(?:sqrt\((\d+)\))?\s*$")


def parse_surd(text: str) -> Surd:
    total = Surd()
    for part in text.split(" + "):
        m = _TERM.match(part)
        if not m:
            raise ValueError(f"cannot parse exact entry {text!r}")
        sign, num, den, star, rad = m.groups()
        if (num is None and rad is None) or (star and (num is None or rad is None)) or (
            num is not None and rad is not None and not star
        ):
            raise ValueError(f"cannot parse exact entry {text!r}")
        coeff = Fraction(int(num) if num else 1, int(den) if den else 1)
        total = total + Surd.sqrt(int(rad) if rad else 1, -coeff if sign else coeff)
    return total


ZERO = Surd()
ONE = Surd.rational(1)
