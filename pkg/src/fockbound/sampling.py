"""Deterministic stratified sampling of semigroup and wreath points.

All randomness comes from :class:`random.Random` instances seeded from a
stable hash of ``(seed, stream name)``, so instance streams are identical
across runs and platforms.
"""

from __future__ import annotations

import hashlib
import random
from typing import Sequence

from .actions import Action, BasePoint
from .groups import GroupElement
from .words import Multiset, Semigroup, SemigroupPoint
from .wreath import FreeWreath, WreathPoint

SPHERE_LIMIT = 50_000
ANTI_RETRIES = 6


def stream(seed: int, *names) -> random.Random:
    text = "|".join([str(seed)] + [str(n) for n in names]).encode()
    digest = hashlib.sha256(text).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


class PointSampler:
    """Uniform points of the acted set with prescribed length."""

    def __init__(self, action: Action):
        self.action = action
        G = action.group
        self._direct = G.kind in ("free", "free-abelian") and all(len(s) == 1 for s in action.stabilizers)
        self._max_radius = self._largest_enumerable_radius()

    def _largest_enumerable_radius(self) -> int:
        if self._direct:
            return 10**6
        r = 0
        while r < 64:
            if len(self.action.group.ball(r + 1)) * self.action.orbits > SPHERE_LIMIT:
                break
            if len(self.action.ball(r + 1)) == len(self.action.ball(r)) and self.action.group.kind == "finite":
                break
            r += 1
        return r

    @property
    def max_radius(self) -> int:
        return self._max_radius

    def of_length(self, rng: random.Random, m: int) -> BasePoint:
        """A uniform point with ``|x| = m`` (or the largest available length below ``m``)."""
        A = self.action
        if self._direct and A.group.kind == "free-abelian":
            # canonical words are geodesic, so the length is the l1 norm of the exponent vector
            if A.group.rank == 1:
                return A.point(rng.randrange(A.orbits), A.group.from_vector([m if rng.random() < 0.5 else -m]))
            parts = composition(rng, m, A.group.rank)
            vec = [c if rng.random() < 0.5 else -c for c in parts]
            return A.point(rng.randrange(A.orbits), A.group.from_vector(vec))
        if self._direct:
            r = A.group.rank
            word: list[int] = []
            for _ in range(m):
                choices = [a for a in list(range(1, r + 1)) + list(range(-r, 0)) if not word or a != -word[-1]]
                word.append(rng.choice(choices))
            return A.point(rng.randrange(A.orbits), GroupElement(tuple(word)))
        m = min(m, self._max_radius)
        while m >= 0:
            sphere = A.sphere(m)
            if sphere:
                return rng.choice(sphere)
            m -= 1
        raise RuntimeError("empty acted set")


def composition(rng: random.Random, total: int, parts: int) -> list[int]:
    """Uniform weak composition of ``total`` into ``parts`` nonnegative parts (stars and bars)."""
    if parts == 0:
        return []
    bars = sorted(rng.sample(range(total + parts - 1), parts - 1))
    out, prev = [], -1
    for b in bars + [total + parts - 1]:
        out.append(b - prev - 1)
        prev = b
    return out


def random_group_element(rng: random.Random, action: Action, radius: int) -> GroupElement:
    ball = action.group.ball(radius)
    return rng.choice(ball)


def random_group_element_of_length(rng: random.Random, action: Action, radius: int) -> GroupElement:
    """Uniform length in ``0..radius`` first, then uniform among elements of that length."""
    ball = action.group.ball(radius)
    lengths = sorted({len(g) for g in ball})
    k = rng.choice(lengths)
    return rng.choice([g for g in ball if len(g) == k])


class StratifiedSampler:
    """Points ``(w, g)`` stratified by ``(|z|_0, target |z|_1)``.

    A stratum ``(n, L)`` is drawn uniformly; ``L`` is split into ``n`` letter
    costs; each letter sits on the left (``|x| = m``) or the right
    (``x = pi_g(y)`` with ``|y| = m``) with probability 1/2.  The realized
    ``|z|_1`` can fall below ``L`` when a letter is short on the other side too.
    """

    def __init__(self, sg: Semigroup, max_degree: int, max_l1: int, gamma_radius: int):
        self.sg = sg
        self.points = PointSampler(sg.action)
        self.max_degree = max_degree
        self.max_l1 = max_l1
        self.gamma_radius = gamma_radius

    def sample(self, rng: random.Random, allow_empty: bool = False) -> SemigroupPoint:
        sg = self.sg
        lo = 0 if allow_empty else 1
        n = rng.randint(lo, self.max_degree)
        L = rng.randint(0, self.max_l1) if n else 0
        g = random_group_element_of_length(rng, sg.action, self.gamma_radius)
        letters: list[BasePoint] = []
        for m in composition(rng, L, n):
            # short spheres run out of fresh letters quickly; give up on the letter after a few tries
            for _ in range(ANTI_RETRIES):
                y = self.points.of_length(rng, m)
                x = y if rng.random() < 0.5 else sg.action.act(g, y)
                if sg.variant != "anti" or x not in letters:
                    break
            else:
                continue
            letters.append(x)
        if sg.variant == "anti":
            letters = list(dict.fromkeys(letters))
        if sg.variant == "full":
            rng.shuffle(letters)
            return SemigroupPoint(tuple(letters), g)
        return SemigroupPoint(Multiset.of(letters), g)

    def letter(self, rng: random.Random, max_length: int) -> BasePoint:
        return self.points.of_length(rng, rng.randint(0, max_length))


class WreathSampler:
    """Random points of a shape ``A(E, F, n)`` together with the shape."""

    def __init__(self, fw: FreeWreath, index_radius: int, letter_radius: int, gamma_radius: int):
        self.fw = fw
        self.index_pool = list(fw.action.ball(index_radius))
        self.letter_pool = [y for y in fw.delta.ball(letter_radius) if not y.is_identity]
        self.gamma_radius = gamma_radius

    def shape(self, rng: random.Random):
        from .wreath import AShape

        E = frozenset(rng.sample(self.letter_pool, rng.randint(1, len(self.letter_pool))))
        F = frozenset(rng.sample(self.index_pool, rng.randint(1, min(4, len(self.index_pool)))))
        return AShape(E, F, rng.randint(0, 6))

    def point_in(self, rng: random.Random, shape) -> WreathPoint:
        fw = self.fw
        g = random_group_element_of_length(rng, fw.action, self.gamma_radius)
        allowed = sorted(set(shape.F) | {fw.action.act(g, i) for i in shape.F}, key=lambda p: p.key)
        E = sorted(shape.E, key=lambda y: (len(y.word), y.word))
        m = rng.randint(0, shape.n)
        word = []
        for _ in range(m):
            choices = [i for i in allowed if not word or i != word[-1][0]]
            if not choices:
                break
            word.append((rng.choice(choices), rng.choice(E)))
        return WreathPoint(tuple(word), g)

    def point(self, rng: random.Random, max_syllables: int = 6) -> WreathPoint:
        fw = self.fw
        g = random_group_element_of_length(rng, fw.action, self.gamma_radius)
        word = []
        for _ in range(rng.randint(0, max_syllables)):
            pool = self.index_pool if rng.random() < 0.5 else [fw.action.act(g, i) for i in self.index_pool]
            i = rng.choice(pool)
            if word and word[-1][0] == i:
                continue
            word.append((i, rng.choice(self.letter_pool)))
        return WreathPoint(tuple(word), g)

    def letter(self, rng: random.Random):
        return rng.choice(self.index_pool), rng.choice(self.letter_pool)


def choose(rng: random.Random, items: Sequence):
    return items[rng.randrange(len(items))]
