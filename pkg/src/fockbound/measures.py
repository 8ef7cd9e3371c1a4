"""Weight vectors ``omega`` and probability vectors ``mu`` on the acted set.

For ``z = (x, g)`` with ``x = (x_1, ..., x_n)``::

    omega(z) = sum_i (n + min(|x_i|, |pi_g^-1 x_i|)) delta_{x_i}
    mu(z)    = omega(z) / ||omega(z)||_1

so ``||omega(z)||_1 = |z|_0^2 + |z|_1`` for nonempty words.  At the empty
word both ``omega`` and ``mu`` are the point mass at the base point ``x0``
(the representative of orbit 0), so the identity and the omega bounds are
stated for nonempty words only.

Inequalities are returned as ``(lhs, rhs)`` pairs of exact rationals with the
claim being ``lhs <= rhs``; bounds carrying a square root are returned
squared on both sides.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

from .actions import BasePoint
from .groups import GroupElement
from .words import Multiset, Semigroup, SemigroupPoint

Weights = dict  # BasePoint -> int


def omega(sg: Semigroup, z: SemigroupPoint) -> Weights:
    if sg.length0(z) == 0:
        return {sg.action.basepoint: 1}
    ginv = sg.group.inv(z.g)
    out: Weights = {}
    if isinstance(z.word, tuple):
        n = len(z.word)
        for p in z.word:
            out[p] = out.get(p, 0) + n + sg.letter_cost(p, ginv)
        return out
    n = z.word.degree
    for p, k in z.word.items:
        out[p] = k * (n + sg.letter_cost(p, ginv))
    return out


def omega_reference(sg: Semigroup, z: SemigroupPoint) -> Weights:
    """Independent evaluation of ``omega`` straight from the displayed sum over positions."""
    letters = sg.letters(z.word)
    n = len(letters)
    if n == 0:
        return {sg.action.basepoint: 1}
    ginv = sg.group.inv(z.g)
    out: Weights = {}
    for i in range(n):
        x = letters[i]
        m = min(sg.action.base_length(x), sg.action.base_length(sg.action.act(ginv, x)))
        out[x] = out.get(x, 0) + n + m
    return out


def norm1(w: Weights) -> int:
    return sum(w.values())


def mu(sg: Semigroup, z: SemigroupPoint) -> dict[BasePoint, Fraction]:
    w = omega(sg, z)
    total = norm1(w)
    return {p: Fraction(v, total) for p, v in w.items()}


def mu_star(sg: Semigroup, phi: Callable[[BasePoint], Fraction], z: SemigroupPoint) -> Fraction:
    """The pairing ``<phi, mu(z)>``."""
    return sum((c * Fraction(phi(p)) for p, c in mu(sg, z).items()), Fraction(0))


def push(sg: Semigroup, g: GroupElement, w: Weights) -> Weights:
    """``g . w``: the weight of ``p`` moves to ``pi_g(p)``."""
    act = sg.action.act
    return {act(g, p): v for p, v in w.items()}


def l1(a: Weights, b: Weights) -> int:
    keys = set(a) | set(b)
    return sum(abs(a.get(p, 0) - b.get(p, 0)) for p in keys)


def l1_normalized(a: Weights, b: Weights) -> Fraction:
    """``|| a/|a| - b/|b| ||_1`` for nonzero weight vectors, exactly."""
    A, B = norm1(a), norm1(b)
    keys = set(a) | set(b)
    num = sum(abs(a.get(p, 0) * B - b.get(p, 0) * A) for p in keys)
    return Fraction(num, A * B)


# -- the inequality families ----------------------------------------------------------


def norm_identity(sg: Semigroup, z: SemigroupPoint) -> tuple[int, int]:
    """``||omega(z)||_1`` against ``|z|_0^2 + |z|_1``."""
    return norm1(omega(sg, z)), sg.length0(z) ** 2 + sg.length1(z)


def omega_translation(sg: Semigroup, g: GroupElement, z: SemigroupPoint) -> tuple[int, int]:
    """``||g.omega(z) - omega(gz)||_1 <= |z|_0 |g|``."""
    lhs = l1(push(sg, g, omega(sg, z)), omega(sg, sg.left_translate(g, z)))
    return lhs, sg.length0(z) * sg.group.length(g)


def omega_translation_right(sg: Semigroup, z: SemigroupPoint, h: GroupElement) -> tuple[int, int]:
    """``||omega(z) - omega(zh)||_1 <= |z|_0 |h|``."""
    lhs = l1(omega(sg, z), omega(sg, sg.right_translate(z, h)))
    return lhs, sg.length0(z) * sg.group.length(h)


def mu_translation(
    sg: Semigroup, g: GroupElement, h: GroupElement, z: SemigroupPoint
) -> tuple[Fraction, Fraction]:
    """``||g.mu(z) - mu(gzh)||_1 <= 2(|g| + |h|)|z|_0 / (|z|_0^2 + |z|_1)`` for nonempty ``z``."""
    n = sg.length0(z)
    if n == 0:
        raise ValueError("the translation bound for mu needs a nonempty word")
    gzh = sg.right_translate(sg.left_translate(g, z), h)
    lhs = l1_normalized(push(sg, g, omega(sg, z)), omega(sg, gzh))
    L = sg.group.length
    return lhs, Fraction(2 * (L(g) + L(h)) * n, n * n + sg.length1(z))


def _created(sg: Semigroup, x: BasePoint, z: SemigroupPoint, side: str) -> SemigroupPoint | None:
    """``xz`` or ``zx`` for a single letter, None when it leaves the antisymmetric words."""
    lab = sg.word([x])
    new = sg.left_create(lab, z) if side == "left" else sg.right_create(z, lab)
    if sg.variant == "anti" and not new.word.is_simple():
        return None
    return new


def created_letter(sg: Semigroup, x: BasePoint, z: SemigroupPoint, side: str) -> BasePoint:
    """The letter actually appended: ``x`` on the left, ``pi_t(x)`` on the right."""
    return x if side == "left" else sg.action.act(z.g, x)


def omega_creation(sg: Semigroup, x: BasePoint, z: SemigroupPoint, side: str = "left"):
    """``||omega(xz) - omega(z)||_1 <= 2|z|_0 + 1 + |x|`` (None if the created word is not simple)."""
    new = _created(sg, x, z, side)
    if new is None:
        return None
    lhs = l1(omega(sg, new), omega(sg, z))
    return lhs, 2 * sg.length0(z) + 1 + x.length


def mu_creation(sg: Semigroup, x: BasePoint, z: SemigroupPoint, side: str = "left"):
    """``||mu(xz) - mu(z)||_1 <= 2(4|z|_0 + 4 + |x|) / (|z|_0^2 + |z|_1)`` for nonempty ``z``."""
    n = sg.length0(z)
    if n == 0:
        raise ValueError("the creation bound for mu needs a nonempty word")
    new = _created(sg, x, z, side)
    if new is None:
        return None
    lhs = l1_normalized(omega(sg, new), omega(sg, z))
    return lhs, Fraction(2 * (4 * n + 4 + x.length), n * n + sg.length1(z))


def creation_coefficient_squared(sg: Semigroup, x: BasePoint, z: SemigroupPoint, side: str) -> int:
    """``C^2`` of the single-letter creation on ``delta_[z]``: ``k + 1`` (sym), 1 or 0 (anti)."""
    letter = created_letter(sg, x, z, side)
    k = z.word.count(letter)
    if sg.variant == "sym":
        return k + 1
    if sg.variant == "anti":
        return 0 if k else 1
    return 1


def mu_creation_weighted(sg: Semigroup, x: BasePoint, z: SemigroupPoint, side: str = "left"):
    """``C ||mu(xz) - mu(z)||_1 <= 2 sqrt(|z|_0 + 1)(4|z|_0 + 4 + |x|) / (|z|_0^2 + |z|_1)``.

    Returned squared: ``(C^2 d^2, 4(n+1)(4n+4+|x|)^2 / (n^2+|z|_1)^2)``; None when ``C = 0``.
    """
    n = sg.length0(z)
    if n == 0:
        raise ValueError("the weighted creation bound needs a nonempty word")
    c2 = creation_coefficient_squared(sg, x, z, side)
    if c2 == 0:
        return None
    new = _created(sg, x, z, side)
    d = l1_normalized(omega(sg, new), omega(sg, z))
    rhs = Fraction(4 * (n + 1) * (4 * n + 4 + x.length) ** 2, (n * n + sg.length1(z)) ** 2)
    return c2 * d * d, rhs


def involution_symmetry(sg: Semigroup, z: SemigroupPoint) -> bool:
    """``omega(Iz)`` is ``omega(z)`` relabelled by ``p -> pi_g^-1(I p)``."""
    ginv = sg.group.inv(z.g)
    act, inv = sg.action.act, sg.action.involute
    expected = {act(ginv, inv(p)): v for p, v in omega(sg, z).items()}
    return omega(sg, sg.involute_point(z)) == expected


# -- shell-level decay ------------------------------------------------------------------


def creation_bound_value(n: int, l1_len: int, xlen: int) -> Fraction:
    return Fraction(2 * (4 * n + 4 + xlen), n * n + l1_len)


def bound_shell_sup(radius: int, xlen: int) -> Fraction:
    """Supremum of the creation bound over a shell ``|z|_0 + |z|_1 = radius``, ``|z|_0 >= 1``."""
    if radius < 1:
        raise ValueError("nonempty words have |z|_* >= 1")
    return max(creation_bound_value(n, radius - n, xlen) for n in range(1, radius + 1))


def translation_bound_shell_sup(radius: int, glen: int) -> Fraction:
    """Supremum of ``2 glen |z|_0 / (|z|_0^2 + |z|_1)`` over a shell ``|z|_* = radius``, ``|z|_0 >= 1``."""
    if radius < 1:
        raise ValueError("nonempty words have |z|_* >= 1")
    return max(Fraction(2 * glen * n, n * n + radius - n) for n in range(1, radius + 1))


def predicted_radius(eps: Fraction, xlen: int, start: int = 1) -> int:
    """Smallest radius whose shell supremum of the creation bound is below ``eps``.

    The shell supremum is nonincreasing in the radius: each term decreases and
    the new term ``n = R + 1`` stays below the ``n = 1`` term, so bisection
    applies and every later shell stays below ``eps`` as well.
    """
    eps = Fraction(eps)
    lo = max(start, 1)
    hi = lo
    while bound_shell_sup(hi, xlen) >= eps:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if bound_shell_sup(mid, xlen) < eps:
            hi = mid
        else:
            lo = mid + 1
    return lo


def shell_creation_sup(
    sg: Semigroup,
    points: Iterable[SemigroupPoint],
    letters: Iterable[BasePoint],
    sides: Iterable[str] = ("left", "right"),
):
    """Exact sup of ``||mu(xz) - mu(z)||_1`` over the given points and letters.

    Returns ``(sup_measured, sup_bound, violations, count)`` where a violation is a
    pair whose measured value exceeds its own pointwise bound.
    """
    letters = list(letters)
    sides = list(sides)
    best = Fraction(0)
    best_bound = Fraction(0)
    violations = []
    count = 0
    for z in points:
        if sg.length0(z) == 0:
            continue
        for x in letters:
            for side in sides:
                res = mu_creation(sg, x, z, side)
                if res is None:
                    continue
                lhs, rhs = res
                count += 1
                if lhs > best:
                    best = lhs
                if rhs > best_bound:
                    best_bound = rhs
                if lhs > rhs:
                    violations.append((z, x, side, lhs, rhs))
    return best, best_bound, violations, count


def multiset_of(sg: Semigroup, z: SemigroupPoint) -> Multiset:
    return sg.multiset(z.word)
