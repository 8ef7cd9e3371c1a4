"""Truncated q-Fock spaces over an acted set and the operators living on them.

Basis vectors are indexed by words: tuples for the full space (q = 0),
multisets for the symmetric space (q = 1, normalized vectors
``delta_[y] = prod k_i!^{-1/2} delta_y``) and simple multisets for the
antisymmetric space (q = -1, ``delta_[z] = delta_{s(z)}`` with ``s`` the
canonical section).  Every operator below is a lazy linear map computed
column by column; truncation at level ``N`` means ``P_{<=N} A P_{<=N}``.

All coefficients are real (integers or :class:`~fockbound.scalar.Surd`), so
the anti-linear conjugation ``J`` acts on coefficient vectors as a linear map.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Iterator, Sequence

from .actions import Action, BasePoint
from .groups import GroupElement
from .scalar import Surd
from .words import Multiset, Semigroup, Word, section, sign_of

Q_OF_VARIANT = {"full": 0, "sym": 1, "anti": -1}

Vector = dict  # basis word -> coefficient


class FockError(ValueError):
    pass


class FockSpace:
    def __init__(self, action: Action, variant: str, truncation: int):
        if truncation < 0:
            raise FockError("truncation must be nonnegative")
        self.action = action
        self.variant = variant
        self.q = Q_OF_VARIANT[variant]
        self.N = truncation
        self.sg = Semigroup(action, variant)

    @property
    def vacuum(self) -> Word:
        return self.sg.unit

    def degree(self, w: Word) -> int:
        return self.sg.degree(w)

    def word(self, points: Iterable[BasePoint]) -> Word:
        return self.sg.word(points)

    def basis(self, letters: Sequence[BasePoint], max_degree: int | None = None) -> list[Word]:
        """Basis words over ``letters`` graded by degree, then in canonical order."""
        top = self.N if max_degree is None else min(max_degree, self.N)
        letters = sorted(set(letters), key=lambda p: p.key)
        out: list[Word] = []
        for n in range(top + 1):
            out.extend(_words_of_degree(self.variant, letters, n))
        return out

    def basis_sort_key(self, w: Word):
        pts = w if isinstance(w, tuple) else section(w)
        return (len(pts), tuple(p.key for p in pts))

    def format_word(self, w: Word) -> str:
        body = self.sg.format_word(w)
        return body if body else "*"

    # -- operators ---------------------------------------------------------------

    def creation(self, label: Word, side: str = "left") -> "Operator":
        return Creation(self, label, side)

    def annihilation(self, label: Word, side: str = "left") -> "Operator":
        return Creation(self, label, side).adjoint()

    def U(self, g: GroupElement) -> "Operator":
        return Translation(self, g)

    def J(self) -> "Operator":
        return Conjugation(self)

    def identity(self) -> "Operator":
        return Projection(self, self.N)

    def projection(self, m: int) -> "Operator":
        return Projection(self, m)

    def field(self, x: BasePoint) -> "Operator":
        """``W(x) = l(x) + l(x)^*``."""
        lab = self.word([x])
        return Creation(self, lab, "left") + Creation(self, lab, "left").adjoint()


def _words_of_degree(variant: str, letters: Sequence[BasePoint], n: int) -> Iterator[Word]:
    from itertools import combinations, combinations_with_replacement, product

    if variant == "full":
        yield from product(letters, repeat=n)
    elif variant == "sym":
        for combo in combinations_with_replacement(letters, n):
            yield Multiset.of(combo)
    else:
        for combo in combinations(letters, n):
            yield Multiset.of(combo)


# -- coefficient formulas ------------------------------------------------------------


def sym_coefficient_squared(label: Multiset, w: Multiset) -> int:
    """``C^2`` for ``l([x]) delta_[w] = C delta_[x + w]``: ``prod (k_w + k_x)! / k_w!``."""
    counts = w.counts()
    out = 1
    for p, k in label.items:
        base = counts.get(p, 0)
        out *= math.factorial(base + k) // math.factorial(base)
    return out


def anti_sign(label: Multiset, w: Multiset, side: str) -> int:
    """Sign of ``l(x) delta_[w]`` (or ``r(x)``), 0 when a letter collides."""
    if any(w.count(p) for p in label.support):
        return 0
    tup = section(label) + section(w) if side == "left" else section(w) + section(label)
    return sign_of(tup)


def anti_letter_sign(x: BasePoint, w: Multiset, side: str) -> int:
    """Single-letter shortcut: ``(-1)^#{z in w : z < x}`` on the left, ``> x`` on the right."""
    if w.count(x):
        return 0
    if side == "left":
        return -1 if sum(1 for p in w.support if p.key < x.key) % 2 else 1
    return -1 if sum(1 for p in w.support if p.key > x.key) % 2 else 1


# -- operators ------------------------------------------------------------------------


def add_into(acc: Vector, w: Word, c) -> None:
    v = acc.get(w, 0) + c
    if v:
        acc[w] = v
    else:
        acc.pop(w, None)


class Operator:
    """A lazy linear map on a truncated Fock space."""

    def __init__(self, fock: FockSpace):
        self.fock = fock

    def column(self, w: Word) -> Vector:
        raise NotImplementedError

    def adjoint(self) -> "Operator":
        raise NotImplementedError

    def apply(self, vec: Vector) -> Vector:
        out: Vector = {}
        N = self.fock.N
        deg = self.fock.degree
        for w, c in vec.items():
            if deg(w) > N:
                continue
            for u, d in self.column(w).items():
                add_into(out, u, c * d)
        return out

    def apply_basis(self, w: Word) -> Vector:
        if self.fock.degree(w) > self.fock.N:
            return {}
        return self.column(w)

    def __matmul__(self, other: "Operator") -> "Operator":
        return Product(self.fock, [self, other])

    def __add__(self, other: "Operator") -> "Operator":
        return Combination(self.fock, [(1, self), (1, other)])

    def __sub__(self, other: "Operator") -> "Operator":
        return Combination(self.fock, [(1, self), (-1, other)])

    def __rmul__(self, c) -> "Operator":
        return Combination(self.fock, [(c, self)])


class Creation(Operator):
    """``l(s)`` (side ``left``) or ``r(s)`` (side ``right``) for a word label ``s``.

    Composite labels act as the product of their letters in section order:
    ``l(s) = l(s_1) ... l(s_n)`` and ``r(s) = r(s_n) ... r(s_1)``.
    """

    def __init__(self, fock: FockSpace, label: Word, side: str = "left", dagger: bool = False):
        super().__init__(fock)
        if side not in ("left", "right"):
            raise FockError("side must be 'left' or 'right'")
        self.label = label
        self.side = side
        self.dagger = dagger
        self.ldeg = fock.degree(label)

    def adjoint(self) -> "Operator":
        return Creation(self.fock, self.label, self.side, not self.dagger)

    def create(self, w: Word) -> tuple[Word, object] | None:
        """``(image word, coefficient)`` of the untruncated creation, or None."""
        v = self.fock.variant
        s = self.label
        if v == "full":
            return (s + w if self.side == "left" else w + s), 1
        new = s + w
        if v == "sym":
            c2 = sym_coefficient_squared(s, w)
            return new, (1 if c2 == 1 else Surd.sqrt(c2))
        if self.ldeg == 1:
            sign = anti_letter_sign(s.items[0][0], w, self.side)
        else:
            sign = anti_sign(s, w, self.side)
        if sign == 0:
            return None
        return new, sign

    def column(self, w: Word) -> Vector:
        fock = self.fock
        if not self.dagger:
            if fock.degree(w) + self.ldeg > fock.N:
                return {}
            res = self.create(w)
            return {} if res is None else {res[0]: res[1]}
        # annihilation: transpose of the creation matrix (all entries are real)
        if fock.variant == "full":
            k = self.ldeg
            if len(w) < k:
                return {}
            if self.side == "left":
                return {w[k:]: 1} if w[:k] == self.label else {}
            return {w[: len(w) - k]: 1} if w[len(w) - k:] == self.label else {}
        if not w.contains(self.label):
            return {}
        u = w.minus(self.label)
        res = self.create(u)
        return {} if res is None else {u: res[1]}


class Translation(Operator):
    """``U_g``: the tensor power of the permutation ``pi_g``, signed on the antisymmetric space."""

    def __init__(self, fock: FockSpace, g: GroupElement):
        super().__init__(fock)
        self.g = g

    def adjoint(self) -> "Operator":
        return Translation(self.fock, self.fock.action.group.inv(self.g))

    def column(self, w: Word) -> Vector:
        fock = self.fock
        act = fock.action.act
        if fock.variant == "full":
            return {tuple(act(self.g, p) for p in w): 1}
        image = fock.sg.translate(self.g, w)
        if fock.variant == "sym":
            return {image: 1}
        return {image: sign_of([act(self.g, p) for p in section(w)])}


class Conjugation(Operator):
    """``J(x_1 ... x_n) = (I x_n ... I x_1)``; on real coefficient vectors a linear involution."""

    def adjoint(self) -> "Operator":
        return self

    def column(self, w: Word) -> Vector:
        fock = self.fock
        inv = fock.action.involute
        if fock.variant == "full":
            return {tuple(inv(p) for p in reversed(w)): 1}
        image = fock.sg.involute(w)
        if fock.variant == "sym":
            return {image: 1}
        return {image: sign_of([inv(p) for p in reversed(section(w))])}


class Projection(Operator):
    """``P_{<=m}``, the projection onto degrees at most ``m`` (the identity when ``m >= N``)."""

    def __init__(self, fock: FockSpace, m: int):
        super().__init__(fock)
        self.m = m

    def adjoint(self) -> "Operator":
        return self

    def column(self, w: Word) -> Vector:
        return {w: 1} if self.fock.degree(w) <= self.m else {}


class Product(Operator):
    def __init__(self, fock: FockSpace, factors: list[Operator]):
        super().__init__(fock)
        flat: list[Operator] = []
        for f in factors:
            flat.extend(f.factors if isinstance(f, Product) else [f])
        self.factors = flat

    def adjoint(self) -> "Operator":
        return Product(self.fock, [f.adjoint() for f in reversed(self.factors)])

    def column(self, w: Word) -> Vector:
        vec: Vector = {w: 1}
        for f in reversed(self.factors):
            vec = f.apply(vec)
            if not vec:
                break
        return vec


class Combination(Operator):
    def __init__(self, fock: FockSpace, terms: list[tuple[object, Operator]]):
        super().__init__(fock)
        self.terms = terms

    def adjoint(self) -> "Operator":
        return Combination(self.fock, [(c, op.adjoint()) for c, op in self.terms])

    def column(self, w: Word) -> Vector:
        out: Vector = {}
        for c, op in self.terms:
            for u, d in op.apply_basis(w).items():
                add_into(out, u, c * d)
        return out


class Cached(Operator):
    """Memoizes the columns of a pure operator (for repeated sweeps over one basis)."""

    def __init__(self, op: Operator):
        super().__init__(op.fock)
        self.op = op
        self._cols: dict = {}

    def adjoint(self) -> "Operator":
        return Cached(self.op.adjoint())

    def column(self, w: Word) -> Vector:
        col = self._cols.get(w)
        if col is None:
            col = self._cols[w] = self.op.column(w)
        return col


class Scalar(Operator):
    """``c * P_{<=N}``."""

    def __init__(self, fock: FockSpace, c):
        super().__init__(fock)
        self.c = c

    def adjoint(self) -> "Operator":
        return self

    def column(self, w: Word) -> Vector:
        return {w: self.c} if self.c else {}


# -- comparisons ------------------------------------------------------------------------


def safe_domain(fock: FockSpace, letters: Sequence[BasePoint], headroom: int) -> list[Word]:
    """Basis words over ``letters`` of degree at most ``N - headroom`` (the degree-safe block)."""
    return fock.basis(letters, fock.N - headroom)


def first_difference(
    a: Operator, b: Operator, domain: Iterable[Word], sign: Callable[[Word], int] | None = None
) -> tuple[Word, Vector, Vector] | None:
    """First basis word where ``a`` and ``sign(w) * b`` disagree, or None."""
    for w in domain:
        left = a.apply_basis(w)
        right = b.apply_basis(w)
        if sign is not None:
            s = sign(w)
            if s != 1:
                right = {u: s * c for u, c in right.items()}
        if left != right:
            return w, left, right
    return None


def inner(u: Vector, v: Vector):
    """Inner product of coefficient vectors in the orthonormal word basis."""
    if len(u) > len(v):
        u, v = v, u
    total = 0
    for w, c in u.items():
        d = v.get(w)
        if d is not None:
            total = total + c * d
    return total


# -- materialized sparse matrices --------------------------------------------------------


class SparseOperator:
    """Finitely supported matrix of an operator on an explicit truncated basis."""

    def __init__(self, basis: Sequence[Word], columns: dict[Word, list[tuple[Word, object]]], fock: FockSpace):
        self.basis = list(basis)
        self.index = {w: i for i, w in enumerate(self.basis)}
        self.columns = columns
        self.fock = fock

    @classmethod
    def from_operator(cls, op: Operator, basis: Sequence[Word]) -> "SparseOperator":
        index = {w: i for i, w in enumerate(basis)}
        cols = {}
        for w in basis:
            entries = [(u, c) for u, c in op.apply_basis(w).items() if c]
            missing = [u for u, _ in entries if u not in index]
            if missing:
                raise FockError("operator leaves the chosen basis; enlarge the letter set")
            entries.sort(key=lambda uc: index[uc[0]])
            if entries:
                cols[w] = entries
        return cls(basis, cols, op.fock)

    def nnz(self) -> int:
        return sum(len(c) for c in self.columns.values())

    def entries(self) -> Iterator[tuple[int, int, object]]:
        """``(row, col, value)`` triples, 1-based, column-major in basis order."""
        for j, w in enumerate(self.basis):
            for u, c in self.columns.get(w, ()):
                yield self.index[u] + 1, j + 1, c

    def to_dense(self):
        import numpy as np

        n = len(self.basis)
        m = np.zeros((n, n))
        for i, j, c in self.entries():
            m[i - 1, j - 1] = float(c)
        return m
