"""Word semigroups over an acted set and their semidirect products with the group.

* full: tuples of points, concatenated;
* sym: multisets of points, added;
* anti: multisets with all multiplicities 1 (a subset of sym, not closed
  under addition).

A point of ``S x| G`` is a pair ``(word, g)`` with product
``(s, g)(t, h) = (s . pi_g(t), gh)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence, Union

from .actions import Action, BasePoint
from .groups import GroupElement

VARIANTS = ("full", "sym", "anti")


class WordError(ValueError):
    pass


class Multiset:
    """Finite multiset of base points, stored sorted by the canonical point order."""

    __slots__ = ("items", "_hash")

    def __init__(self, items: Iterable[tuple[BasePoint, int]] = ()):
        merged: dict[BasePoint, int] = {}
        for p, k in items:
            if k < 0:
                raise WordError("negative multiplicity")
            if k:
                merged[p] = merged.get(p, 0) + k
        self.items = tuple(sorted(merged.items(), key=lambda pk: pk[0].key))
        self._hash = hash(self.items)

    @classmethod
    def of(cls, points: Iterable[BasePoint]) -> "Multiset":
        return cls((p, 1) for p in points)

    def __eq__(self, other) -> bool:
        return isinstance(other, Multiset) and self.items == other.items

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Multiset({list(self.items)!r})"

    def __len__(self) -> int:
        return len(self.items)

    def __add__(self, other: "Multiset") -> "Multiset":
        return Multiset(self.items + other.items)

    @property
    def degree(self) -> int:
        return sum(k for _, k in self.items)

    @property
    def support(self) -> tuple[BasePoint, ...]:
        return tuple(p for p, _ in self.items)

    def count(self, p: BasePoint) -> int:
        for q, k in self.items:
            if q == p:
                return k
        return 0

    def counts(self) -> dict[BasePoint, int]:
        return dict(self.items)

    def is_simple(self) -> bool:
        return all(k == 1 for _, k in self.items)

    def contains(self, other: "Multiset") -> bool:
        mine = self.counts()
        return all(mine.get(p, 0) >= k for p, k in other.items)

    def minus(self, other: "Multiset") -> "Multiset":
        mine = self.counts()
        for p, k in other.items:
            left = mine.get(p, 0) - k
            if left < 0:
                raise WordError("multiset difference would be negative")
            mine[p] = left
        return Multiset(mine.items())

    def sorted_points(self) -> tuple[BasePoint, ...]:
        out: list[BasePoint] = []
        for p, k in self.items:
            out.extend([p] * k)
        return tuple(out)


Word = Union[tuple, Multiset]
EMPTY = Multiset()


@dataclass(frozen=True)
class SemigroupPoint:
    word: Word
    g: GroupElement


def quotient(x: Sequence[BasePoint]) -> Multiset:
    """The counting map from tuples to multisets."""
    return Multiset((p, 1) for p in x)


def section(y: Multiset) -> tuple[BasePoint, ...]:
    """The fixed section: letters listed in canonical order."""
    return y.sorted_points()


def inversion_count(keys: Sequence) -> int:
    n = len(keys)
    return sum(1 for i in range(n) for j in range(i + 1, n) if keys[i] > keys[j])


def sign_of(x: Sequence[BasePoint]) -> int:
    """Sign of the permutation sorting ``x`` into ``section(quotient(x))``.

    Letters must be pairwise distinct.  Computed by merge sort, which counts
    inversions in ``O(n log n)``; the quadratic count is kept as an oracle.
    """
    keys = [p.key for p in x]
    if len(set(keys)) != len(keys):
        raise WordError("sign is only defined for words with distinct letters")

    def sort_count(a):
        if len(a) <= 1:
            return a, 0
        mid = len(a) // 2
        left, il = sort_count(a[:mid])
        right, ir = sort_count(a[mid:])
        merged, inv, i, j = [], il + ir, 0, 0
        while i < len(left) and j < len(right):
            if left[i] <= right[j]:
                merged.append(left[i])
                i += 1
            else:
                merged.append(right[j])
                inv += len(left) - i
                j += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, inv

    return -1 if sort_count(keys)[1] % 2 else 1


class Semigroup:
    """Word semigroup of one variant over an action, with its semidirect product."""

    def __init__(self, action: Action, variant: str):
        if variant not in VARIANTS:
            raise WordError(f"unknown variant {variant!r}")
        self.action = action
        self.variant = variant
        self.group = action.group

    # -- words ---------------------------------------------------------------

    @property
    def unit(self) -> Word:
        return () if self.variant == "full" else EMPTY

    def word(self, points: Iterable[BasePoint]) -> Word:
        points = tuple(points)
        if self.variant == "full":
            return points
        m = Multiset.of(points)
        if self.variant == "anti" and not m.is_simple():
            raise WordError("antisymmetric words cannot repeat a letter")
        return m

    def letters(self, w: Word) -> tuple[BasePoint, ...]:
        return w if isinstance(w, tuple) else w.sorted_points()

    def degree(self, w: Word) -> int:
        return len(w) if isinstance(w, tuple) else w.degree

    def multiset(self, w: Word) -> Multiset:
        return quotient(w) if isinstance(w, tuple) else w

    def concat(self, a: Word, b: Word) -> Word:
        if self.variant == "full":
            return tuple(a) + tuple(b)
        return a + b

    def is_valid(self, w: Word) -> bool:
        return self.variant != "anti" or w.is_simple()

    def translate(self, g: GroupElement, w: Word) -> Word:
        act = self.action.act
        if self.variant == "full":
            return tuple(act(g, p) for p in w)
        return Multiset((act(g, p), k) for p, k in w.items)

    def involute(self, w: Word) -> Word:
        inv = self.action.involute
        if self.variant == "full":
            return tuple(inv(p) for p in reversed(w))
        return Multiset((inv(p), k) for p, k in w.items)

    # -- semidirect product ----------------------------------------------------------

    def point(self, w: Word, g: GroupElement | None = None) -> SemigroupPoint:
        return SemigroupPoint(w, self.group.identity() if g is None else g)

    def identity_point(self) -> SemigroupPoint:
        return SemigroupPoint(self.unit, self.group.identity())

    def multiply(self, a: SemigroupPoint, b: SemigroupPoint) -> SemigroupPoint:
        return SemigroupPoint(
            self.concat(a.word, self.translate(a.g, b.word)), self.group.mul(a.g, b.g)
        )

    def involute_point(self, z: SemigroupPoint) -> SemigroupPoint:
        ginv = self.group.inv(z.g)
        return SemigroupPoint(self.translate(ginv, self.involute(z.word)), ginv)

    def left_translate(self, g: GroupElement, z: SemigroupPoint) -> SemigroupPoint:
        """``g z = (pi_g(s), g t)``."""
        return SemigroupPoint(self.translate(g, z.word), self.group.mul(g, z.g))

    def right_translate(self, z: SemigroupPoint, h: GroupElement) -> SemigroupPoint:
        """``z h = (s, t h)``."""
        return SemigroupPoint(z.word, self.group.mul(z.g, h))

    def left_create(self, x: Word, z: SemigroupPoint) -> SemigroupPoint:
        """``(x, e) z``."""
        return SemigroupPoint(self.concat(x, z.word), z.g)

    def right_create(self, z: SemigroupPoint, x: Word) -> SemigroupPoint:
        """``z (x, e) = (s . pi_t(x), t)``."""
        return SemigroupPoint(self.concat(z.word, self.translate(z.g, x)), z.g)

    # -- lengths ---------------------------------------------------------------------

    def letter_cost(self, p: BasePoint, ginv: GroupElement) -> int:
        """``min(|p|, |pi_g^-1 p|)`` given ``ginv = g^-1``."""
        a = p.length
        if a == 0:
            return 0
        return min(a, self.action.act(ginv, p).length)

    def length0(self, z: SemigroupPoint) -> int:
        return self.degree(z.word)

    def length1(self, z: SemigroupPoint) -> int:
        ginv = self.group.inv(z.g)
        m = self.multiset(z.word)
        return sum(k * self.letter_cost(p, ginv) for p, k in m.items)

    def length_star(self, z: SemigroupPoint) -> int:
        return self.length0(z) + self.length1(z)

    # -- text form ------------------------------------------------------------------

    def format_word(self, w: Word) -> str:
        fp = self.action.format_point
        if isinstance(w, tuple):
            return ",".join(fp(p) for p in w)
        return ",".join(f"{fp(p)}:{k}" for p, k in w.items)

    def format_point(self, z: SemigroupPoint) -> str:
        body = self.format_word(z.word)
        g = self.group.format(z.g)
        if self.variant == "full":
            return f"({body}|{g})"
        return f"{{{body}|{g}}}"

    def parse_word(self, text: str) -> Word:
        text = text.strip()
        parts = [t for t in text.split(",")] if text else []
        if self.variant == "full":
            return tuple(self.action.parse_point(t) for t in parts)
        items = []
        for t in parts:
            pt, sep, k = t.rpartition(":")
            if not sep:
                pt, k = t, "1"
            try:
                items.append((self.action.parse_point(pt), int(k)))
            except ValueError as exc:
                raise WordError(f"bad multiset entry {t!r}: {exc}") from None
        m = Multiset(items)
        if self.variant == "anti" and not m.is_simple():
            raise WordError("antisymmetric words cannot repeat a letter")
        return m

    _POINT_RE = re.compile(r"^\s*([({])(.*)\|([^|]*)([)}])\s*$")

    def parse_point(self, text: str) -> SemigroupPoint:
        m = self._POINT_RE.match(text)
        if not m:
            raise WordError(f"cannot parse semigroup point {text!r}")
        opening, body, g, closing = m.groups()
        expected = ("(", ")") if self.variant == "full" else ("{", "}")
        if (opening, closing) != expected:
            raise WordError(f"{self.variant} points are written {expected[0]}...|g{expected[1]}")
        return SemigroupPoint(self.parse_word(body), self.group.parse(g))

    # -- smallness shapes -------------------------------------------------------------

    def in_shape(self, z: SemigroupPoint, shape: "SmallFamilyShape") -> bool:
        """Membership of ``z`` in the union of the sets ``s G t`` of ``shape``.

        ``s (e, h) t = (s + pi_h(t), h)``, so the group coordinate of ``z``
        fixes ``h`` and membership reduces to a multiset equation.  Full words
        are pulled back through the quotient map; anti words must be simple.
        """
        if shape.variant != self.variant:
            raise WordError("shape and point variants differ")
        w = self.multiset(z.word)
        if self.variant == "anti" and not w.is_simple():
            return False
        deg = w.degree
        for s, t in shape.generators:
            if s.degree + t.degree != deg:
                continue
            if w == s + Multiset((self.action.act(z.g, p), k) for p, k in t.items):
                return True
        return False

    def generator_bound(self, s: Multiset, t: Multiset) -> int:
        """``M = n + m + sum |x_i| + sum |y_j|`` for the generator ``s G t``."""
        return s.degree + t.degree + sum(k * p.length for p, k in s.items + t.items)

    def shell_cover(self, radius: int) -> "SmallFamilyShape":
        """Generators ``(s, t)`` whose union contains every ``z`` with ``|z|_* <= radius``.

        A point ``(w, g)`` splits as ``s + pi_g(t)`` with ``s`` the letters
        realizing the minimum on the left and ``t = pi_g^-1`` of the others;
        then ``M(s, t) = |z|_*``, so the pairs with ``M <= radius`` suffice.
        """
        letters = [p for p in self.action.ball(max(radius - 1, 0)) if p.length + 1 <= radius]
        pieces = list(_multisets_with_cost(letters, lambda p: p.length + 1, radius))
        gens = []
        for s, cs in pieces:
            for t, ct in pieces:
                if cs + ct <= radius and (self.variant != "anti" or (s.is_simple() and t.is_simple())):
                    gens.append((s, t))
        gens.sort(key=lambda st: (st[0].degree + st[1].degree, [p.key for p in section(st[0])],
                                  [p.key for p in section(st[1])]))
        return SmallFamilyShape(self.variant, tuple(gens))

    # -- exact shells ---------------------------------------------------------------------

    def shell(
        self,
        radius: int,
        gamma_radius: int,
        exact: bool = True,
        limit: int | None = None,
        groups: Sequence[GroupElement] | None = None,
    ) -> Iterator[SemigroupPoint]:
        """Points with ``|z|_* == radius`` (``<= radius`` if not ``exact``) and ``|g| <= gamma_radius``.

        Raises :class:`ShellOverflow` once more than ``limit`` points are produced.
        """
        count = 0
        ball = self.action.ball(max(radius - 1, 0)) if radius >= 1 else ()
        for g in groups if groups is not None else self.group.ball(gamma_radius):
            ginv = self.group.inv(g)
            cand = set(ball) | {self.action.act(g, p) for p in ball}
            cost = {p: 1 + self.letter_cost(p, ginv) for p in cand}
            letters = sorted((p for p in cand if cost[p] <= radius), key=lambda p: p.key)
            simple = self.variant == "anti"
            for m, c in _multisets_with_cost(letters, cost.__getitem__, radius, simple=simple):
                if exact and c != radius:
                    continue
                words = _distinct_permutations(section(m)) if self.variant == "full" else (m,)
                for w in words:
                    count += 1
                    if limit is not None and count > limit:
                        raise ShellOverflow(radius)
                    yield SemigroupPoint(w, g)


class ShellOverflow(RuntimeError):
    def __init__(self, radius: int):
        super().__init__(f"shell enumeration overflow at radius {radius}; feasible radius is {radius - 1}")
        self.radius = radius
        self.feasible = radius - 1


@dataclass(frozen=True)
class SmallFamilyShape:
    variant: str
    generators: tuple[tuple[Multiset, Multiset], ...]

    def __len__(self) -> int:
        return len(self.generators)


def _multisets_with_cost(letters, cost, budget: int, simple: bool = False):
    """All multisets over ``letters`` of total cost ``<= budget`` (costs positive)."""
    letters = list(letters)
    costs = [cost(p) for p in letters]

    def rec(i: int, left: int, acc: list):
        if i == len(letters):
            yield Multiset(acc), budget - left
            return
        yield from rec(i + 1, left, acc)
        c = costs[i]
        k = 1
        while c * k <= left and (not simple or k == 1):
            acc.append((letters[i], k))
            yield from rec(i + 1, left - c * k, acc)
            acc.pop()
            k += 1

    yield from rec(0, budget, [])


def _distinct_permutations(seq: Sequence) -> Iterator[tuple]:
    """Distinct orderings of a sorted sequence, in lexicographic order of positions."""
    items = list(seq)
    n = len(items)
    if n == 0:
        yield ()
        return
    keys = [p.key for p in items]
    idx = sorted(range(n), key=lambda i: keys[i])
    cur = [items[i] for i in idx]
    ck = [keys[i] for i in idx]
    while True:
        yield tuple(cur)
        i = n - 2
        while i >= 0 and ck[i] >= ck[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while ck[j] <= ck[i]:
            j -= 1
        ck[i], ck[j] = ck[j], ck[i]
        cur[i], cur[j] = cur[j], cur[i]
        ck[i + 1:] = reversed(ck[i + 1:])
        cur[i + 1:] = reversed(cur[i + 1:])


def simple_subsets(points: Sequence[BasePoint], max_size: int) -> Iterator[Multiset]:
    for k in range(max_size + 1):
        for combo in combinations(points, k):
            yield Multiset.of(combo)
