"""Word semigroups and their semidirect products (suites ``full``, ``sym``, ``anti``)."""

from __future__ import annotations

from itertools import permutations

from ..harness import WORD_VARIANTS, claim
from ..words import Multiset, SemigroupPoint, inversion_count, quotient, section, sign_of


def _small_words(ctx, letters, max_degree):
    return ctx.fock.basis(letters, max_degree) if max_degree <= ctx.fock.N else \
        type(ctx.fock)(ctx.action, ctx.sg.variant, max_degree).basis(letters)


def _points(ctx, count, allow_empty=True):
    rng = ctx.rng("points", count)
    return [ctx.sampler.sample(rng, allow_empty=allow_empty) for _ in range(count)]


@claim("semigroup-monoid-laws", "(ab)c = a(bc), ea = a = ae in S x| G", WORD_VARIANTS, "==")
def semigroup_monoid_laws(ctx, tally):
    sg = ctx.sg
    fp = sg.format_point
    rng = ctx.rng("semigroup-monoid-laws")
    e = sg.identity_point()
    for _ in range(ctx.cfg.samples):
        a, b, c = (ctx.sampler.sample(rng, allow_empty=True) for _ in range(3))
        tally.check(sg.multiply(e, a) == a == sg.multiply(a, e), lambda: f"a={fp(a)} unit")
        if sg.variant == "anti":
            ab = sg.multiply(a, b)
            if not ab.word.is_simple() or not sg.multiply(ab, c).word.is_simple():
                tally.skip()
                continue
        lhs = sg.multiply(sg.multiply(a, b), c)
        rhs = sg.multiply(a, sg.multiply(b, c))
        tally.check(lhs == rhs, lambda: f"a={fp(a)} b={fp(b)} c={fp(c)}")


@claim("word-cancellative", "ab = ac implies b = c (and on the right)", ("full", "sym"), "==")
def word_cancellative(ctx, tally):
    # exhaustive over words of length <= 4 on a 4-point alphabet
    sg = ctx.sg
    letters = ctx.letters[:4]
    words = _small_words(ctx, letters, 4)
    for a in words:
        left = {sg.concat(a, b) for b in words}
        right = {sg.concat(b, a) for b in words}
        tally.check(len(left) == len(words), lambda: f"a=({sg.format_word(a)}) left")
        tally.check(len(right) == len(words), lambda: f"a=({sg.format_word(a)}) right")


@claim("quotient-section-laws", "Q(xy) = Q(x) + Q(y), Q(s(y)) = y, Q(x o sigma) = Q(x)", WORD_VARIANTS, "==")
def quotient_section_laws(ctx, tally):
    sg = ctx.sg
    fw = sg.format_word
    rng = ctx.rng("quotient-section-laws")
    for _ in range(ctx.cfg.samples):
        a = sg.letters(ctx.sampler.sample(rng, allow_empty=True).word)
        b = sg.letters(ctx.sampler.sample(rng, allow_empty=True).word)
        tally.check(quotient(a + b) == quotient(a) + quotient(b), lambda: f"a=({fw(a)}) b=({fw(b)}) additive")
        y = quotient(a)
        tally.check(quotient(section(y)) == y, lambda: f"y=({fw(y)}) section")
        shuffled = list(a)
        rng.shuffle(shuffled)
        tally.check(quotient(shuffled) == y, lambda: f"a=({fw(a)}) permuted")
        keys = [p.key for p in section(y)]
        tally.check(keys == sorted(keys), lambda: f"y=({fw(y)}) ordered")


@claim("sign-permutation-law", "sign(x o sigma) = sgn(sigma) sign(x)", "anti", "==")
def sign_permutation_law(ctx, tally):
    A = ctx.action
    r = 1
    while len(A.ball(r)) < 7 and len(A.ball(r + 1)) > len(A.ball(r)):
        r += 1
    pts = list(A.ball(r))
    rng = ctx.rng("sign-permutation-law")
    fw = ctx.sg.format_word
    for n in range(min(7, len(pts)) + 1):
        x = rng.sample(pts, n)
        sx = sign_of(x)
        tally.check(sx == (-1) ** inversion_count([p.key for p in x]), lambda: f"x=({fw(tuple(x))}) oracle")
        for perm in permutations(range(n)):
            y = [x[i] for i in perm]
            sgn = (-1) ** inversion_count(perm)
            tally.check(sign_of(y) == sgn * sx, lambda: f"x=({fw(tuple(x))}) sigma={perm}")


@claim("involution-antihomomorphism", "I(ab) = I(b) I(a), I(I(a)) = a", WORD_VARIANTS, "==")
def involution_antihomomorphism(ctx, tally):
    sg = ctx.sg
    fp = sg.format_point
    rng = ctx.rng("involution-antihomomorphism")
    for _ in range(ctx.cfg.samples):
        a = ctx.sampler.sample(rng, allow_empty=True)
        b = ctx.sampler.sample(rng, allow_empty=True)
        tally.check(sg.involute_point(sg.involute_point(a)) == a, lambda: f"a={fp(a)} square")
        ab = sg.multiply(a, b)
        if sg.variant == "anti" and not ab.word.is_simple():
            tally.skip()
            continue
        tally.check(
            sg.involute_point(ab) == sg.multiply(sg.involute_point(b), sg.involute_point(a)),
            lambda: f"a={fp(a)} b={fp(b)}",
        )


@claim("length-laws", "|z|_* = |z|_0 + |z|_1, |Iz|_* = |z|_*, |e|_* = 0, order invariance", WORD_VARIANTS, "==")
def length_laws(ctx, tally):
    sg = ctx.sg
    fp = sg.format_point
    rng = ctx.rng("length-laws")
    tally.add(sg.length_star(sg.identity_point()), 0, "vacuum", "==")
    G = sg.group
    for _ in range(ctx.cfg.samples):
        z = ctx.sampler.sample(rng, allow_empty=True)
        ginv = G.inv(z.g)
        letters = sg.letters(z.word)
        direct = sum(min(p.length, sg.action.act(ginv, p).length) for p in letters)
        tally.add(sg.length1(z), direct, lambda: f"z={fp(z)} l1", "==")
        tally.add(sg.length_star(z), len(letters) + direct, lambda: f"z={fp(z)} star", "==")
        tally.add(sg.length_star(sg.involute_point(z)), sg.length_star(z), lambda: f"z={fp(z)} involution", "==")
        if sg.variant == "full":
            shuffled = list(z.word)
            rng.shuffle(shuffled)
            w = SemigroupPoint(tuple(shuffled), z.g)
            tally.add(sg.length_star(w), sg.length_star(z), lambda: f"z={fp(z)} reordered", "==")


def _cover_radius(ctx) -> int:
    return ctx.cfg.shell_max


@claim("shell-cover", "{z : |z|_* <= R} subset of the union of s G t with M(s, t) <= R", WORD_VARIANTS, "==")
def shell_cover(ctx, tally):
    sg = ctx.sg
    R = _cover_radius(ctx)
    cover = sg.shell_cover(R)
    tally.notes["generators"] = len(cover)
    for z in ctx.capped_shell(R, exact=False):
        tally.check(sg.in_shape(z, cover), lambda: f"z={sg.format_point(z)}")


@claim("shell-generator-bound", "sup{|z|_* : z in s G t} <= M = n + m + sum|s_i| + sum|t_j|", WORD_VARIANTS)
def shell_generator_bound(ctx, tally):
    sg = ctx.sg
    G = sg.group
    R = _cover_radius(ctx)
    cover = sg.shell_cover(R)
    rng = ctx.rng("shell-generator-bound")
    ball = list(G.ball(ctx.cfg.gamma_ball + R))
    for s, t in cover.generators:
        gs = ball if len(ball) <= 24 else [G.identity()] + rng.sample(ball, 23)
        M = sg.generator_bound(s, t)
        best, arg = -1, None
        for g in gs:
            w = s + Multiset((sg.action.act(g, p), k) for p, k in t.items)
            if sg.variant == "anti" and not w.is_simple():
                continue
            if sg.variant == "full":
                word = section(s) + tuple(sg.action.act(g, p) for p in section(t))
            else:
                word = w
            L = sg.length_star(SemigroupPoint(word, g))
            if L > best:
                best, arg = L, g
        if arg is None:
            tally.skip()
            continue
        tally.add(best, M, lambda: f"s=({sg.format_word(s)}) t=({sg.format_word(t)}) g={G.format(arg)}")


@claim("shape-membership", "s (e, h) t lies in s G t; words of the wrong size do not", WORD_VARIANTS, "==")
def shape_membership(ctx, tally):
    sg = ctx.sg
    G = sg.group
    from ..words import SmallFamilyShape

    rng = ctx.rng("shape-membership")
    for _ in range(ctx.cfg.samples):
        s = sg.multiset(ctx.sampler.sample(rng, allow_empty=True).word)
        t = sg.multiset(ctx.sampler.sample(rng, allow_empty=True).word)
        g = rng.choice(G.ball(ctx.cfg.gamma_ball))
        shape = SmallFamilyShape(sg.variant, ((s, t),))
        w = s + Multiset((sg.action.act(g, p), k) for p, k in t.items)
        if sg.variant == "anti" and not w.is_simple():
            tally.skip()
            continue
        word = (section(s) + tuple(sg.action.act(g, p) for p in section(t))) if sg.variant == "full" else w
        z = SemigroupPoint(word, g)
        tally.check(sg.in_shape(z, shape), lambda: f"s=({sg.format_word(s)}) t=({sg.format_word(t)}) g={G.format(g)}")
        extra = sg.word([sg.action.basepoint]) if sg.variant != "anti" or not w.count(sg.action.basepoint) else None
        if extra is not None:
            bigger = sg.left_create(extra, z)
            tally.check(not sg.in_shape(bigger, shape), lambda: f"z={sg.format_point(bigger)} too long")


@claim("variant-length-agreement", "|(x, g)|_* = |(Q(x), g)|_* for full and sym words", "sym", "==")
def variant_length_agreement(ctx, tally):
    from ..words import Semigroup

    full = Semigroup(ctx.action, "full")
    sym = ctx.sg
    rng = ctx.rng("variant-length-agreement")
    for _ in range(ctx.cfg.samples):
        z = ctx.sampler.sample(rng, allow_empty=True)
        tup = section(z.word)
        order = list(tup)
        rng.shuffle(order)
        zf = SemigroupPoint(tuple(order), z.g)
        tally.add(full.length_star(zf), sym.length_star(z), lambda: f"z={full.format_point(zf)}", "==")
