"""Free products of copies of a group indexed by an acted set, and their semidirect product.

An element ``y`` of the free product is a reduced syllable sequence
``((i_1, y_1), ..., (i_n, y_n))`` with ``y_k != e`` and ``i_k != i_{k+1}``;
the group acts by moving indices.  A point ``(y, g)`` multiplies as
``(y, g)(y', g') = (y . pi_g(y'), g g')``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .actions import Action, BasePoint
from .groups import Group, GroupElement

Syllable = tuple  # (BasePoint, GroupElement)
FreeWord = tuple  # tuple of syllables


class WreathError(ValueError):
    pass


@dataclass(frozen=True)
class WreathPoint:
    word: FreeWord
    g: GroupElement


@dataclass(frozen=True)
class AShape:
    """``A(E, F, n)``: letters in ``E``, support in ``F u gF``, at most ``n`` syllables."""

    E: frozenset
    F: frozenset
    n: int


class FreeWreath:
    def __init__(self, action: Action, delta: Group):
        self.action = action
        self.delta = delta
        self.group = action.group
        self._allowed = lru_cache(maxsize=4096)(self._allowed_uncached)

    def _allowed_uncached(self, F: frozenset, g: GroupElement) -> frozenset:
        """``F u gF``."""
        return F | frozenset(self.action.act(g, i) for i in F)

    # -- free words -----------------------------------------------------------

    def reduce(self, syllables: Iterable[Syllable]) -> FreeWord:
        """Normal form: merge equal adjacent indices, drop identity syllables."""
        mul = self.delta.mul
        stack: list[Syllable] = []
        for i, y in syllables:
            if y.is_identity:
                continue
            if stack and stack[-1][0] == i:
                merged = mul(stack[-1][1], y)
                stack.pop()
                if not merged.is_identity:
                    stack.append((i, merged))
            else:
                stack.append((i, y))
        return tuple(stack)

    def reduce_by_rewriting(self, syllables: Iterable[Syllable], rng: random.Random | None = None) -> FreeWord:
        """Reference reduction: apply single rewriting steps at arbitrary positions until none applies."""
        word = list(syllables)
        rng = rng or random.Random(0)
        while True:
            spots = [k for k, (_, y) in enumerate(word) if y.is_identity]
            spots += [
                -k - 1 for k in range(len(word) - 1) if word[k][0] == word[k + 1][0]
            ]
            if not spots:
                return tuple(word)
            k = rng.choice(spots)
            if k >= 0:
                del word[k]
            else:
                k = -k - 1
                i = word[k][0]
                word[k : k + 2] = [(i, self.delta.mul(word[k][1], word[k + 1][1]))]

    def is_reduced(self, word: FreeWord) -> bool:
        return all(not y.is_identity for _, y in word) and all(
            word[k][0] != word[k + 1][0] for k in range(len(word) - 1)
        )

    def invert_word(self, word: FreeWord) -> FreeWord:
        inv = self.delta.inv
        return tuple((i, inv(y)) for i, y in reversed(word))

    def translate_word(self, g: GroupElement, word: FreeWord) -> FreeWord:
        act = self.action.act
        return tuple((act(g, i), y) for i, y in word)

    def support(self, word: FreeWord) -> frozenset:
        return frozenset(i for i, _ in word)

    def letters(self, word: FreeWord) -> list[GroupElement]:
        return [y for _, y in word]

    # -- semidirect product -------------------------------------------------------

    def point(self, word: Iterable[Syllable] = (), g: GroupElement | None = None) -> WreathPoint:
        return WreathPoint(self.reduce(word), self.group.identity() if g is None else g)

    def letter_point(self, j: BasePoint, x: GroupElement) -> WreathPoint:
        return WreathPoint(self.reduce([(j, x)]), self.group.identity())

    def multiply(self, a: WreathPoint, b: WreathPoint) -> WreathPoint:
        return WreathPoint(
            self.reduce(a.word + self.translate_word(a.g, b.word)), self.group.mul(a.g, b.g)
        )

    def inverse(self, z: WreathPoint) -> WreathPoint:
        ginv = self.group.inv(z.g)
        return WreathPoint(self.translate_word(ginv, self.invert_word(z.word)), ginv)

    def left_translate(self, g: GroupElement, z: WreathPoint) -> WreathPoint:
        return WreathPoint(self.translate_word(g, z.word), self.group.mul(g, z.g))

    def right_translate(self, z: WreathPoint, g: GroupElement) -> WreathPoint:
        return WreathPoint(z.word, self.group.mul(z.g, g))

    # -- lengths and weights ----------------------------------------------------------

    def index_cost(self, i: BasePoint, ginv: GroupElement) -> int:
        """``min(|i|, |g^-1 i|)``."""
        a = i.length
        return a if a == 0 else min(a, self.action.act(ginv, i).length)

    def length(self, z: WreathPoint) -> int:
        ginv = self.group.inv(z.g)
        dl = self.delta.length
        return sum(self.index_cost(i, ginv) for i in self.support(z.word)) + sum(
            dl(y) for _, y in z.word
        )

    def m_part(self, z: WreathPoint) -> dict:
        ginv = self.group.inv(z.g)
        return {i: c for i in self.support(z.word) if (c := self.index_cost(i, ginv))}

    def a_part(self, word: FreeWord) -> dict:
        out: dict = {}
        for i, y in word:
            out[i] = out.get(i, 0) + self.delta.length(y)
        return out

    def omega(self, z: WreathPoint) -> dict:
        """``omega(y, g) = m(y, g) + a(y)``; the zero vector at ``y = e``."""
        out = dict(self.m_part(z))
        for i, v in self.a_part(z.word).items():
            out[i] = out.get(i, 0) + v
        return out

    def mu(self, z: WreathPoint) -> dict:
        w = self.omega(z) or {self.action.basepoint: 1}
        total = sum(w.values())
        return {i: Fraction(v, total) for i, v in w.items()}

    # -- A(E, F, n) ----------------------------------------------------------------------

    def in_A(self, z: WreathPoint, shape: AShape) -> bool:
        if not z.word:
            return True
        if len(z.word) > shape.n:
            return False
        if any(y not in shape.E for _, y in z.word):
            return False
        return self.support(z.word) <= self._allowed(shape.F, z.g)

    def shape_union(self, a: AShape, b: AShape) -> AShape:
        return AShape(a.E | b.E, a.F | b.F, max(a.n, b.n))

    def shape_inverse(self, a: AShape) -> AShape:
        return AShape(frozenset(self.delta.inv(y) for y in a.E), a.F, a.n)

    def shape_left_letter(self, a: AShape, j: BasePoint, x: GroupElement) -> AShape:
        mul = self.delta.mul
        return AShape(a.E | {x} | {mul(x, y) for y in a.E}, a.F | {j}, a.n + 1)

    def shape_right_letter(self, a: AShape, j: BasePoint, x: GroupElement) -> AShape:
        mul = self.delta.mul
        return AShape(a.E | {x} | {mul(y, x) for y in a.E}, a.F | {j}, a.n + 1)

    def shape_left_translate(self, a: AShape, g: GroupElement) -> AShape:
        """Shape containing ``g A``: support may move from ``F u hF`` to ``gF u ghF``."""
        act = self.action.act
        return AShape(a.E, a.F | {act(g, i) for i in a.F}, a.n)

    def shape_right_translate(self, a: AShape, g: GroupElement) -> AShape:
        """Shape containing ``A g``: the group part changes from ``h`` to ``hg``."""
        act, ginv = self.action.act, self.group.inv(g)
        return AShape(a.E, a.F | {act(ginv, i) for i in a.F}, a.n)

    # -- exact shells -------------------------------------------------------------------

    def shell(self, radius: int, gamma_radius: int, exact: bool = True) -> Iterator[WreathPoint]:
        """Points with ``|z|_free == radius`` (or ``<=``) and ``|g| <= gamma_radius``."""
        dl = self.delta.length
        letters = [y for y in self.delta.ball(radius) if not y.is_identity]
        ball = self.action.ball(max(radius - 1, 0))
        for g in self.group.ball(gamma_radius):
            ginv = self.group.inv(g)
            cand = set(ball) | {self.action.act(g, i) for i in ball}
            cost = {i: self.index_cost(i, ginv) for i in cand}
            indices = sorted((i for i in cand if cost[i] + 1 <= radius), key=lambda p: p.key)

            def rec(word: list, used: frozenset, budget: int):
                if not exact or budget == 0:
                    yield WreathPoint(tuple(word), g)
                if budget <= 0:
                    return
                last = word[-1][0] if word else None
                for i in indices:
                    if i == last:
                        continue
                    extra = 0 if i in used else cost[i]
                    for y in letters:
                        c = extra + dl(y)
                        if c <= budget:
                            word.append((i, y))
                            yield from rec(word, used | {i}, budget - c)
                            word.pop()

            yield from rec([], frozenset(), radius)

    # -- text form -------------------------------------------------------------------------

    def format_point(self, z: WreathPoint) -> str:
        fp, fd = self.action.format_point, self.delta.format
        body = ",".join(f"{fp(i)}:{fd(y)}" for i, y in z.word)
        return f"<{body}|{self.group.format(z.g)}>"


def ball_size(action: Action, radius: Fraction) -> int:
    """``|B_r(I)|`` for a rational radius (lengths are integers)."""
    r = int(radius) if radius >= 0 else -1
    return len(action.ball(r))


def supp_ratio_bound(action: Action, C: Fraction) -> Fraction:
    """``4 C |B_{2C}(I)|``."""
    C = Fraction(C)
    return 4 * C * ball_size(action, 2 * C)


def sample_subset(rng: random.Random, pool: Sequence, k: int) -> frozenset:
    k = min(k, len(pool))
    return frozenset(rng.sample(list(pool), k))
