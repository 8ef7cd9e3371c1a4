"""Weight vectors omega and probability vectors mu on semigroup points."""

from __future__ import annotations

import math
from fractions import Fraction

from .. import measures as M
from ..harness import WORD_VARIANTS, claim
from ..sampling import composition, stream
from ..words import Semigroup, SemigroupPoint, section

DECAY_EPS = Fraction(1, 20)


def _draws(ctx, claim_id, nonempty=True):
    rng = ctx.rng(claim_id)
    for _ in range(ctx.cfg.samples):
        yield rng, ctx.sampler.sample(rng, allow_empty=not nonempty)


def _g(ctx, rng):
    return rng.choice(ctx.group.ball(ctx.cfg.gamma_ball))


@claim("omega-norm-identity", "||omega(z)||_1 = |z|_0^2 + |z|_1 for z nonempty; omega(e, g) = delta_x0",
       WORD_VARIANTS, "==")
def omega_norm_identity(ctx, tally):
    sg = ctx.sg
    x0 = ctx.action.basepoint
    for g in ctx.gamma_ball():
        tally.check(M.omega(sg, SemigroupPoint(sg.unit, g)) == {x0: 1}, lambda: f"vacuum g={sg.group.format(g)}")
    for _, z in _draws(ctx, "omega-norm-identity"):
        lhs, rhs = M.norm_identity(sg, z)
        tally.add(lhs, rhs, lambda: f"z={sg.format_point(z)}", "==")
        tally.check(M.omega(sg, z) == M.omega_reference(sg, z), lambda: f"z={sg.format_point(z)} reference")


@claim("omega-translation-bound", "‖g·ω(z)−ω(gz)‖₁ ≤ |z|₀|g|_Γ", WORD_VARIANTS)
def omega_translation_bound(ctx, tally):
    sg = ctx.sg
    for rng, z in _draws(ctx, "omega-translation-bound"):
        g = _g(ctx, rng)
        lhs, rhs = M.omega_translation(sg, g, z)
        tally.add(lhs, rhs, lambda: f"g={sg.group.format(g)} z={sg.format_point(z)}")


@claim("omega-translation-bound-right", "‖ω(z)−ω(zh)‖₁ ≤ |z|₀|h|_Γ", WORD_VARIANTS)
def omega_translation_bound_right(ctx, tally):
    sg = ctx.sg
    for rng, z in _draws(ctx, "omega-translation-bound-right"):
        h = _g(ctx, rng)
        lhs, rhs = M.omega_translation_right(sg, z, h)
        tally.add(lhs, rhs, lambda: f"z={sg.format_point(z)} h={sg.group.format(h)}")


@claim("mu-translation-bound", "||g.mu(z) - mu(gzh)||_1 <= 2(|g| + |h|)|z|_0 / (|z|_0^2 + |z|_1)", WORD_VARIANTS)
def mu_translation_bound(ctx, tally):
    sg = ctx.sg
    for rng, z in _draws(ctx, "mu-translation-bound"):
        g, h = _g(ctx, rng), _g(ctx, rng)
        lhs, rhs = M.mu_translation(sg, g, h, z)
        tally.add(lhs, rhs, lambda: f"g={sg.group.format(g)} z={sg.format_point(z)} h={sg.group.format(h)}")


def _creation_claim(ctx, tally, claim_id, fn, side, nonempty):
    sg = ctx.sg
    fp = ctx.action.format_point
    for rng, z in _draws(ctx, claim_id, nonempty=nonempty):
        x = ctx.sampler.letter(rng, 6)
        res = fn(sg, x, z, side)
        if res is None:
            tally.skip()
            continue
        tally.add(res[0], res[1], lambda: f"x={fp(x)} z={sg.format_point(z)}")


@claim("omega-creation-bound", "||omega(xz) - omega(z)||_1 <= 2|z|_0 + 1 + |x|", WORD_VARIANTS)
def omega_creation_bound(ctx, tally):
    _creation_claim(ctx, tally, "omega-creation-bound", M.omega_creation, "left", True)


@claim("omega-creation-bound-right", "||omega(zx) - omega(z)||_1 <= 2|z|_0 + 1 + |x|", WORD_VARIANTS)
def omega_creation_bound_right(ctx, tally):
    _creation_claim(ctx, tally, "omega-creation-bound-right", M.omega_creation, "right", True)


@claim("mu-creation-bound", "||mu(xz) - mu(z)||_1 <= 2(4|z|_0 + 4 + |x|) / (|z|_0^2 + |z|_1)", WORD_VARIANTS)
def mu_creation_bound(ctx, tally):
    _creation_claim(ctx, tally, "mu-creation-bound", M.mu_creation, "left", True)


@claim("mu-creation-bound-right", "||mu(zx) - mu(z)||_1 <= 2(4|z|_0 + 4 + |x|) / (|z|_0^2 + |z|_1)", WORD_VARIANTS)
def mu_creation_bound_right(ctx, tally):
    _creation_claim(ctx, tally, "mu-creation-bound-right", M.mu_creation, "right", True)


@claim("mu-creation-weighted",
       "C_{x,z} ||mu(xz) - mu(z)||_1 <= 2 sqrt(|z|_0 + 1)(4|z|_0 + 4 + |x|) / (|z|_0^2 + |z|_1)",
       ("sym", "anti"), "<=sq")
def mu_creation_weighted(ctx, tally):
    _creation_claim(ctx, tally, "mu-creation-weighted", M.mu_creation_weighted, "left", True)


@claim("mu-creation-weighted-right",
       "C_{x,z} ||mu(zx) - mu(z)||_1 <= 2 sqrt(|z|_0 + 1)(4|z|_0 + 4 + |x|) / (|z|_0^2 + |z|_1)",
       ("sym", "anti"), "<=sq")
def mu_creation_weighted_right(ctx, tally):
    _creation_claim(ctx, tally, "mu-creation-weighted-right", M.mu_creation_weighted, "right", True)


@claim("omega-involution-symmetry", "omega(Iz)(pi_g^-1 I p) = omega(z)(p)", WORD_VARIANTS, "==")
def omega_involution_symmetry(ctx, tally):
    sg = ctx.sg
    for _, z in _draws(ctx, "omega-involution-symmetry"):
        tally.check(M.involution_symmetry(sg, z), lambda: f"z={sg.format_point(z)}")


@claim("mu-probability", "mu(z) >= 0, ||mu(z)||_1 = 1, |<phi, mu(z)>| <= ||phi||_inf, mu(e) = delta_x0",
       WORD_VARIANTS, "==")
def mu_probability(ctx, tally):
    sg = ctx.sg
    x0 = ctx.action.basepoint
    tally.check(M.mu(sg, sg.identity_point()) == {x0: 1}, "vacuum")
    for rng, z in _draws(ctx, "mu-probability", nonempty=False):
        m = M.mu(sg, z)
        text = lambda: f"z={sg.format_point(z)}"
        tally.check(all(v >= 0 for v in m.values()) and sum(m.values()) == 1, text)
        tally.add(M.mu_star(sg, lambda p: 1, z), 1, text, "==")
        salt = rng.randrange(1 << 30)
        phi = lambda p: Fraction(hash((salt, p.orbit, p.shift.word)) % 2001 - 1000, 1000)
        val = M.mu_star(sg, phi, z)
        tally.add(abs(val), 1, text, "<=")


@claim("mu-variant-agreement", "mu((x, g)) = mu((Q(x), g))", "sym", "==")
def mu_variant_agreement(ctx, tally):
    full = Semigroup(ctx.action, "full")
    sg = ctx.sg
    for rng, z in _draws(ctx, "mu-variant-agreement", nonempty=False):
        order = list(section(z.word))
        rng.shuffle(order)
        zf = SemigroupPoint(tuple(order), z.g)
        tally.check(M.mu(full, zf) == M.mu(sg, z), lambda: f"z={full.format_point(zf)}")


# -- decay over shells --------------------------------------------------------------


def decay_letters(action):
    return action.ball(1)


def exact_decay(sg, points, tally=None):
    """Sup of ``||mu(xz) - mu(z)||_1`` over ``points`` and short letters, each instance checked against its bound."""
    letters = decay_letters(sg.action)
    fp = sg.action.format_point
    best, count = Fraction(0), 0
    for z in points:
        if sg.length0(z) == 0:
            continue
        for x in letters:
            for side in ("left", "right"):
                res = M.mu_creation(sg, x, z, side)
                if res is None:
                    continue
                lhs, rhs = res
                count += 1
                if lhs > best:
                    best = lhs
                if tally is not None:
                    tally.add(lhs, rhs, lambda: f"x={fp(x)} z={sg.format_point(z)} side={side}")
    return best, count


def sample_far_point(sg, rng, radius, gamma_radius, sampler):
    """A random point with ``|z|_* >= radius`` (None when the action is too small to reach it)."""
    top = min(radius, 400)
    n = min(top, max(1, int(rng.paretovariate(0.6))))
    g = rng.choice(sg.group.ball(gamma_radius))
    L = radius - n
    word = []
    for m in composition(rng, L, n):
        word.append(sampler.of_length(rng, m))
    if sg.variant == "full":
        z = SemigroupPoint(tuple(word), g)
    else:
        from ..words import Multiset

        ms = Multiset.of(word)
        if sg.variant == "anti" and not ms.is_simple():
            return None
        z = SemigroupPoint(ms, g)
    return z if sg.length_star(z) >= radius else None


def sampled_decay(sg, rng, radius, gamma_radius, samples, tally=None):
    """Sup of the measured creation difference over random points with ``|z|_* >= radius``."""
    from ..sampling import PointSampler

    sampler = PointSampler(sg.action)
    letters = decay_letters(sg.action)
    best, hits = Fraction(0), 0
    for _ in range(samples):
        z = sample_far_point(sg, rng, radius, gamma_radius, sampler)
        if z is None:
            if tally is not None:
                tally.skip()
            continue
        hits += 1
        x = rng.choice(letters)
        side = rng.choice(("left", "right"))
        res = M.mu_creation(sg, x, z, side)
        if res is None:
            continue
        lhs, rhs = res
        best = max(best, lhs)
        if tally is not None:
            tally.add(lhs, rhs, lambda: f"x={sg.action.format_point(x)} |z|_*={sg.length_star(z)} side={side}")
    return best, hits


def quotient_shell(ctx, radius):
    from ..harness import ResourceLimit
    from ..words import ShellOverflow

    sym = Semigroup(ctx.action, "sym")
    try:
        yield from sym.shell(radius, ctx.cfg.gamma_ball, limit=ctx.cfg.shell_budget)
    except ShellOverflow:
        raise ResourceLimit("shell radius", radius, radius - 1) from None


def full_shell_size(ctx, radius) -> int:
    """Number of tuples in a full shell: the orderings of each multiset in the sym shell."""
    total = 0
    for z in quotient_shell(ctx, radius):
        n = z.word.degree
        count = math.factorial(n)
        for _, k in z.word.items:
            count //= math.factorial(k)
        total += count
    return total


def decay_shell(ctx, R):
    """The semigroup and exact shell used at radius ``R``, and whether the full shell went through its quotient."""
    sg = ctx.sg
    if sg.variant == "full" and full_shell_size(ctx, R) > ctx.cfg.shell_budget:
        # mu only sees the multiset of letters, and creation on either side or translation
        # acts on that multiset alike for every ordering, so the full shell sup is the sym one
        return Semigroup(ctx.action, "sym"), quotient_shell(ctx, R), True
    return sg, ctx.capped_shell(R), False


@claim("mu-decay-creation",
       "sup over |z|_* = R of ||mu(xz) - mu(z)||_1 <= sup of 2(4|z|_0 + 4 + |x|)/(|z|_0^2 + |z|_1) -> 0",
       WORD_VARIANTS)
def mu_decay_creation(ctx, tally):
    sg = ctx.sg
    xlen = max(p.length for p in decay_letters(ctx.action))
    envelope = []
    quotient_radii = []
    for R in range(1, ctx.cfg.shell_max + 1):
        used, points, via_quotient = decay_shell(ctx, R)
        best, _ = exact_decay(used, points, tally)
        if via_quotient:
            quotient_radii.append(R)
        envelope.append(f"{R}:{float(best):.6f}/{float(M.bound_shell_sup(R, xlen)):.6f}")
    tally.notes["envelope"] = envelope
    if quotient_radii:
        tally.notes["radii_via_multiset_quotient"] = quotient_radii
    Rstar = M.predicted_radius(DECAY_EPS, xlen)
    tally.notes["predicted_radius"] = Rstar
    rng = stream(ctx.cfg.seed, ctx.suite, "mu-decay-creation", "far")
    best, hits = sampled_decay(sg, rng, Rstar, ctx.cfg.gamma_ball, min(ctx.cfg.samples, 200), tally)
    tally.notes["sampled_points_beyond_radius"] = hits
    if hits:
        tally.add(best, DECAY_EPS, f"envelope beyond R={Rstar}")


@claim("mu-decay-translation",
       "sup over |z|_* = R, |g|, |h| <= 1 of ||g.mu(z) - mu(gzh)||_1 <= sup of 2(|g| + |h|)|z|_0/(|z|_0^2 + |z|_1)",
       WORD_VARIANTS)
def mu_decay_translation(ctx, tally):
    ball = ctx.group.ball(1)
    pairs = [(g, h) for g in ball for h in ball]
    glen = 2 * max(ctx.group.length(g) for g in ball)
    envelope = []
    quotient_radii = []
    for R in range(1, ctx.cfg.shell_max + 1):
        used, points, via_quotient = decay_shell(ctx, R)
        fmt = used.group.format
        best = Fraction(0)
        for z in points:
            if used.length0(z) == 0:
                continue
            for g, h in pairs:
                lhs, rhs = M.mu_translation(used, g, h, z)
                best = max(best, lhs)
                tally.add(lhs, rhs, lambda: f"g={fmt(g)} z={used.format_point(z)} h={fmt(h)}")
        if via_quotient:
            quotient_radii.append(R)
        envelope.append(f"{R}:{float(best):.6f}/{float(M.translation_bound_shell_sup(R, glen)):.6f}")
    tally.notes["envelope"] = envelope
    if quotient_radii:
        tally.notes["radii_via_multiset_quotient"] = quotient_radii
