"""Group actions on countable sets with finite stabilizers and finitely many orbits.

A point of orbit ``k`` is the coset ``g H_k`` of the finite stabilizer ``H_k``
of the orbit representative ``r_k``; it is stored through its shortlex-minimal
coset element, so the word length of that element is the proper length
``|x| = min{|g| : g r_k = x}``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .groups import IDENTITY, Group, GroupElement, GroupError, shortlex_key


class ActionError(ValueError):
    pass


class BasePoint:
    """Point ``shift . r_orbit`` of the acted set, in canonical form."""

    __slots__ = ("orbit", "shift", "key", "_hash")

    def __init__(self, orbit: int, shift: GroupElement):
        self.orbit = orbit
        self.shift = shift
        self.key = (orbit, shortlex_key(shift.word))
        self._hash = hash((orbit, shift.word))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BasePoint)
            and self.orbit == other.orbit
            and self.shift.word == other.shift.word
        )

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "BasePoint") -> bool:
        return self.key < other.key

    def __le__(self, other: "BasePoint") -> bool:
        return self.key <= other.key

    def __gt__(self, other: "BasePoint") -> bool:
        return self.key > other.key

    def __ge__(self, other: "BasePoint") -> bool:
        return self.key >= other.key

    def __repr__(self) -> str:
        return f"BasePoint({self.orbit}, {self.shift.word})"

    @property
    def length(self) -> int:
        return len(self.shift.word)


def _subgroup_closure(group: Group, gens: Iterable[GroupElement], limit: int = 4096) -> frozenset:
    elems = {IDENTITY}
    frontier = [IDENTITY]
    gens = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                b = group.mul(a, s)
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
                    if len(elems) > limit:
                        raise ActionError("stabilizer is infinite or larger than the supported limit")
        frontier = nxt
    return frozenset(elems)


class Action:
    """Left action of ``group`` on ``orbits`` copies of coset spaces ``G/H_k``.

    The involution sends orbit ``k`` to ``pairing[k]`` by ``g r_k -> g c_k r_{pairing[k]}``
    where ``c_k = involution_shifts[k]``; it commutes with the action by construction.
    ``weights`` are optional positive rationals attached to orbits (metadata only).
    """

    def __init__(
        self,
        group: Group,
        orbits: int = 1,
        stabilizers: Sequence[Sequence[GroupElement]] | None = None,
        pairing: Sequence[int] | None = None,
        involution_shifts: Sequence[GroupElement] | None = None,
        weights: Sequence[Fraction | None] | None = None,
        name: str = "",
        check_radius: int = 3,
    ):
        if orbits < 1:
            raise ActionError("an action needs at least one orbit")
        self.group = group
        self.orbits = orbits
        self.name = name
        stab_gens = list(stabilizers) if stabilizers is not None else [[] for _ in range(orbits)]
        if len(stab_gens) != orbits:
            raise ActionError("one stabilizer entry per orbit is required")
        self.stabilizers: list[frozenset] = []
        for k, gens in enumerate(stab_gens):
            gens = [g for g in gens if not g.is_identity]
            if gens and group.kind != "finite":
                raise ActionError(
                    f"orbit {k}: {group.kind} groups are torsion-free, so only trivial "
                    "stabilizers are finite"
                )
            self.stabilizers.append(_subgroup_closure(group, gens))
        self.pairing = list(pairing) if pairing is not None else list(range(orbits))
        if len(self.pairing) != orbits or any(not 0 <= p < orbits for p in self.pairing):
            raise ActionError("involution pairing must map orbits to orbits")
        self.involution_shifts = (
            list(involution_shifts) if involution_shifts is not None else [IDENTITY] * orbits
        )
        if len(self.involution_shifts) != orbits:
            raise ActionError("one involution shift per orbit is required")
        self.weights = list(weights) if weights is not None else [None] * orbits
        if len(self.weights) != orbits:
            raise ActionError("one weight entry per orbit is required")
        for w in self.weights:
            if w is not None and w <= 0:
                raise ActionError("orbit weights must be positive")
        self._point = lru_cache(maxsize=1 << 20)(self._point_uncached)
        self._act = lru_cache(maxsize=1 << 20)(self._act_uncached)
        self._balls: dict[int, tuple[BasePoint, ...]] = {}
        self._validate_involution(check_radius)

    def __repr__(self) -> str:
        return f"Action({self.name or self.group.describe()}, orbits={self.orbits})"

    @property
    def proper(self) -> bool:
        return True  # finite stabilizers and finitely many orbits, by construction

    def stabilizer_order(self, k: int) -> int:
        return len(self.stabilizers[k])

    # -- points --------------------------------------------------------------

    def _point_uncached(self, orbit: int, g: GroupElement) -> BasePoint:
        stab = self.stabilizers[orbit]
        if len(stab) == 1:
            return BasePoint(orbit, g)
        best = min((self.group.mul(g, h) for h in stab), key=lambda e: shortlex_key(e.word))
        return BasePoint(orbit, best)

    def point(self, orbit: int, g: GroupElement = IDENTITY) -> BasePoint:
        """The point ``g . r_orbit``."""
        if not 0 <= orbit < self.orbits:
            raise ActionError(f"orbit index {orbit} out of range 0..{self.orbits - 1}")
        return self._point(orbit, g)

    def representative(self, orbit: int) -> BasePoint:
        return self.point(orbit, IDENTITY)

    @property
    def basepoint(self) -> BasePoint:
        """The fixed point ``x0`` (representative of orbit 0)."""
        return self.representative(0)

    def _act_uncached(self, g: GroupElement, x: BasePoint) -> BasePoint:
        return self._point(x.orbit, self.group.mul(g, x.shift))

    def act(self, g: GroupElement, x: BasePoint) -> BasePoint:
        if not 0 <= x.orbit < self.orbits:
            raise ActionError(f"orbit index {x.orbit} out of range 0..{self.orbits - 1}")
        if g.is_identity:
            return x
        return self._act(g, x)

    def base_length(self, x: BasePoint) -> int:
        return len(x.shift.word)

    def ball(self, radius: int) -> tuple[BasePoint, ...]:
        """All points with ``|x| <= radius``, in canonical order."""
        if radius < 0:
            return ()
        if radius not in self._balls:
            pts = {self.point(k, g) for k in range(self.orbits) for g in self.group.ball(radius)}
            self._balls[radius] = tuple(sorted(p for p in pts if p.length <= radius))
        return self._balls[radius]

    def sphere(self, radius: int) -> tuple[BasePoint, ...]:
        return tuple(p for p in self.ball(radius) if p.length == radius)

    # -- involution --------------------------------------------------------------

    @property
    def has_trivial_involution(self) -> bool:
        return all(p == k for k, p in enumerate(self.pairing)) and all(
            c.is_identity for c in self.involution_shifts
        )

    def involute(self, x: BasePoint) -> BasePoint:
        k = x.orbit
        return self._point(self.pairing[k], self.group.mul(x.shift, self.involution_shifts[k]))

    def _validate_involution(self, radius: int) -> None:
        G = self.group
        for k in range(self.orbits):
            p = self.pairing[k]
            if self.pairing[p] != k:
                raise ActionError(f"involution pairing is not an involution at orbit {k}")
            c = self.involution_shifts[k]
            # well defined on cosets: c^-1 H_k c lies in H_p
            for h in self.stabilizers[k]:
                if G.mul(G.mul(G.inv(c), h), c) not in self.stabilizers[p]:
                    raise ActionError(f"involution shift of orbit {k} is not compatible with stabilizers")
            # squares to the identity: c_k c_p lies in H_k
            if G.mul(c, self.involution_shifts[p]) not in self.stabilizers[k]:
                raise ActionError(f"involution does not square to the identity on orbit {k}")
        for x in self.ball(radius):
            if self.involute(x).length != x.length:
                raise ActionError(
                    f"involution does not preserve lengths: |{self.format_point(x)}| != "
                    f"|{self.format_point(self.involute(x))}|"
                )

    # -- text form ------------------------------------------------------------------

    def format_point(self, x: BasePoint) -> str:
        return f"{x.orbit}/{self.group.format(x.shift)}"

    def parse_point(self, text: str) -> BasePoint:
        text = text.strip()
        orbit, sep, word = text.partition("/")
        if not sep:
            raise ActionError(f"point {text!r} must look like '<orbit>/<word>'")
        try:
            k = int(orbit)
        except ValueError:
            raise ActionError(f"bad orbit index in point {text!r}") from None
        try:
            g = self.group.parse(word)
        except GroupError as exc:
            raise ActionError(str(exc)) from None
        return self.point(k, g)

