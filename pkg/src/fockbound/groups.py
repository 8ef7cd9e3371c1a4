"""Finitely generated groups with canonical words and word length.

Three kinds are supported: free groups, free abelian groups and finite groups
given by a multiplication table.  Elements are stored as canonical words over
signed generator indices (``k`` for the k-th generator, ``-k`` for its
inverse), so equality of elements is equality of words.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


class GroupError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class GroupElement:
    word: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word


IDENTITY = GroupElement()


def letter_key(a: int) -> tuple[int, int]:
    # a1 < a1^-1 < a2 < a2^-1 < ...
    return (abs(a), 0 if a > 0 else 1)


def shortlex_key(word: Sequence[int]) -> tuple:
    return (len(word), tuple(letter_key(a) for a in word))


_GEN_NAMES = "abcdfghijklmnopqrstuvwxyz"  # 'e' is skipped, it reads as identity


def gen_name(k: int) -> str:
    return _GEN_NAMES[k - 1]


class Group:
    """A finitely generated group: ``free``, ``free-abelian`` or ``finite``.

    For the finite kind ``table[i][j]`` is the product of elements ``i`` and
    ``j`` (element 0 is the identity) and ``generators`` lists the elements
    used as generators; words are shortlex-minimal over those generators.
    """

    def __init__(self, kind: str, rank: int = 0, table=None, generators=None):
        if kind not in ("free", "free-abelian", "finite"):
            raise GroupError(f"unknown group kind {kind!r}")
        self.kind = kind
        if kind == "finite":
            self._init_finite(table, generators)
        else:
            if rank < 0 or rank > len(_GEN_NAMES):
                raise GroupError(f"rank must be in 0..{len(_GEN_NAMES)}, got {rank}")
            self.rank = rank
        self._mul = lru_cache(maxsize=1 << 18)(self._mul_uncached)
        self._inv = lru_cache(maxsize=1 << 16)(self._inv_uncached)
        self._balls: dict[int, tuple[GroupElement, ...]] = {}

    def __repr__(self) -> str:
        if self.kind == "finite":
            return f"Group(finite, order={self.order})"
        return f"Group({self.kind}, rank={self.rank})"

    def describe(self) -> str:
        if self.kind == "finite":
            return f"finite(order={self.order}, generators={self.rank})"
        return f"{self.kind}({self.rank})"

    # -- finite groups -----------------------------------------------------

    def _init_finite(self, table, generators) -> None:
        if not table:
            raise GroupError("finite group needs a multiplication table")
        n = len(table)
        t = [tuple(int(v) for v in row) for row in table]
        if any(len(row) != n for row in t) or any(not 0 <= v < n for row in t for v in row):
            raise GroupError("multiplication table must be square with entries in range")
        if any(t[0][j] != j or t[j][0] != j for j in range(n)):
            raise GroupError("element 0 must be the identity")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if t[t[a][b]][c] != t[a][t[b][c]]:
                        raise GroupError(f"table is not associative at ({a},{b},{c})")
        inv = []
        for a in range(n):
            row = [b for b in range(n) if t[a][b] == 0]
            if len(row) != 1:
                raise GroupError(f"element {a} has no unique inverse")
            inv.append(row[0])
        gens = [int(g) for g in (generators or [])]
        if not gens or any(not 0 < g < n for g in gens):
            if n == 1:
                gens = []
            else:
                raise GroupError("finite group needs non-identity generators")
        self.order = n
        self.rank = len(gens)
        self._table = t
        self._inv_elem = inv
        self._gen_elems = gens
        # shortlex BFS gives the canonical word of every element
        canon: dict[int, tuple[int, ...]] = {0: ()}
        queue = deque([0])
        letters = sorted(
            [k for k in range(1, len(gens) + 1)] + [-k for k in range(1, len(gens) + 1)],
            key=letter_key,
        )
        while queue:
            a = queue.popleft()
            for letter in letters:
                b = t[a][self._letter_elem(letter)]
                if b not in canon:
                    canon[b] = canon[a] + (letter,)
                    queue.append(b)
        if len(canon) != n:
            raise GroupError("generators do not generate the finite group")
        self._canon = canon
        self._elem_of = {w: e for e, w in canon.items()}

    def _letter_elem(self, letter: int) -> int:
        g = self._gen_elems[abs(letter) - 1]
        return g if letter > 0 else self._inv_elem[g]

    def _finite_elem(self, word: Iterable[int]) -> int:
        e = 0
        for letter in word:
            if not 0 < abs(letter) <= self.rank:
                raise GroupError(f"generator index {letter} out of range")
            e = self._table[e][self._letter_elem(letter)]
        return e

    def element_index(self, g: GroupElement) -> int:
        """Table index of ``g`` (finite groups only)."""
        return self._elem_of[g.word]

    def from_index(self, i: int) -> GroupElement:
        return GroupElement(self._canon[i])

    # -- normal forms --------------------------------------------------------

    def normalize(self, word: Iterable[int]) -> GroupElement:
        word = tuple(word)
        if self.kind == "finite":
            return GroupElement(self._canon[self._finite_elem(word)])
        for letter in word:
            if not 0 < abs(letter) <= self.rank:
                raise GroupError(f"generator index {letter} out of range for rank {self.rank}")
        if self.kind == "free":
            out: list[int] = []
            for letter in word:
                if out and out[-1] == -letter:
                    out.pop()
                else:
                    out.append(letter)
            return GroupElement(tuple(out))
        return self.from_vector(self.to_vector(GroupElement(word)))

    def to_vector(self, g: GroupElement) -> tuple[int, ...]:
        if self.kind != "free-abelian":
            raise GroupError("to_vector is only defined for free abelian groups")
        v = [0] * self.rank
        for letter in g.word:
            v[abs(letter) - 1] += 1 if letter > 0 else -1
        return tuple(v)

    def from_vector(self, v: Sequence[int]) -> GroupElement:
        if self.kind != "free-abelian" or len(v) != self.rank:
            raise GroupError("from_vector needs a free abelian group and a vector of its rank")
        word: list[int] = []
        for k, c in enumerate(v, start=1):
            word.extend([k if c > 0 else -k] * abs(c))
        return GroupElement(tuple(word))

    # -- group operations ------------------------------------------------------

    def identity(self) -> GroupElement:
        return IDENTITY

    def generators(self) -> list[GroupElement]:
        return [self.normalize((k,)) for k in range(1, self.rank + 1)]

    def _mul_uncached(self, g: GroupElement, h: GroupElement) -> GroupElement:
        if not g.word:
            return h
        if not h.word:
            return g
        if self.kind == "free-abelian":
            v = [a + b for a, b in zip(self.to_vector(g), self.to_vector(h))]
            return self.from_vector(v)
        return self.normalize(g.word + h.word)

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return self._mul(g, h)

    def inv(self, g: GroupElement) -> GroupElement:
        return self._inv(g)

    def _inv_uncached(self, g: GroupElement) -> GroupElement:
        if self.kind == "finite":
            return GroupElement(self._canon[self._inv_elem[self._finite_elem(g.word)]])
        if self.kind == "free-abelian":
            return self.from_vector([-c for c in self.to_vector(g)])
        return GroupElement(tuple(-a for a in reversed(g.word)))

    def length(self, g: GroupElement) -> int:
        """Word length; canonical words are geodesic for all three kinds."""
        return len(g.word)

    def ball(self, radius: int) -> tuple[GroupElement, ...]:
        """All elements of word length at most ``radius`` in shortlex order."""
        if radius < 0:
            return ()
        if radius not in self._balls:
            seen = {IDENTITY}
            frontier = [IDENTITY]
            gens = [self.normalize((k,)) for k in range(1, self.rank + 1)]
            gens += [self.inv(g) for g in gens]
            for _ in range(radius):
                nxt = []
                for g in frontier:
                    for s in gens:
                        h = self.mul(g, s)
                        if h not in seen:
                            seen.add(h)
                            nxt.append(h)
                frontier = nxt
                if not frontier:
                    break
            self._balls[radius] = tuple(
                sorted((g for g in seen if len(g.word) <= radius), key=lambda g: shortlex_key(g.word))
            )
        return self._balls[radius]

    # -- text form ---------------------------------------------------------------

    def format(self, g: GroupElement) -> str:
        """Compact text: ``1`` for the identity, else syllables like ``a3b-1``."""
        if not g.word:
            return "1"
        out = []
        prev, count = None, 0
        for letter in g.word + (0,):
            base = abs(letter)
            sign = 1 if letter > 0 else -1
            if prev is not None and letter != 0 and (base, sign) == prev:
                count += 1
                continue
            if prev is not None:
                name = gen_name(prev[0])
                exp = prev[1] * count
                out.append(name if exp == 1 else f"{name}{exp}")
            prev, count = ((base, sign), 1) if letter else (None, 0)
        return "".join(out)

    _SYLLABLE = re.compile(r"([a-df-z])(-?\d+)?")

    def parse(self, text: str) -> GroupElement:
        text = text.strip()
        if text in ("1", "e", ""):
            return IDENTITY
        word: list[int] = []
        pos = 0
        while pos < len(text):
            m = self._SYLLABLE.match(text, pos)
            if not m:
                raise GroupError(f"cannot parse group word {text!r} at position {pos}")
            k = _GEN_NAMES.index(m.group(1)) + 1
            exp = int(m.group(2)) if m.group(2) else 1
            word.extend([k if exp > 0 else -k] * abs(exp))
            pos = m.end()
        return self.normalize(word)


def parse_group_spec(spec: str, table=None, generators=None) -> Group:
    """Build a group from ``"free 2"``, ``"free-abelian 1"`` or ``"finite"``."""
    parts = spec.split()
    if not parts:
        raise GroupError("empty group specification")
    kind = parts[0]
    if kind == "finite":
        return Group("finite", table=table, generators=generators)
    if len(parts) != 2:
        raise GroupError(f"group kind {kind!r} needs a rank, e.g. '{kind} 1'")
    try:
        rank = int(parts[1])
    except ValueError:
        raise GroupError(f"rank must be an integer, got {parts[1]!r}") from None
    return Group(kind, rank)


def cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]
