"""Free wreath products: reduction, the shapes A(E, F, n), omega and the support ratio."""

from __future__ import annotations

from fractions import Fraction

from ..harness import ResourceLimit, claim
from ..wreath import WreathPoint, supp_ratio_bound

RATIO_CONSTANTS = (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3), Fraction(4))


def _draws(ctx, claim_id, count=None):
    rng = ctx.rng(claim_id)
    for _ in range(ctx.cfg.samples if count is None else count):
        yield rng


def _l1(a: dict, b: dict) -> int:
    return sum(abs(a.get(k, 0) - b.get(k, 0)) for k in set(a) | set(b))


def _fmt_shape(fw, shape) -> str:
    fp = fw.action.format_point
    E = ",".join(sorted(fw.delta.format(y) for y in shape.E))
    F = ",".join(sorted(fp(i) for i in shape.F))
    return f"A({{{E}}},{{{F}}},{shape.n})"


@claim("wreath-reduce-confluent", "the reduced word does not depend on the order of reductions", "wreath", "==")
def wreath_reduce_confluent(ctx, tally):
    fw = ctx.fw
    D = fw.delta
    pool = list(fw.action.ball(1))
    letters = list(D.ball(2))
    for rng in _draws(ctx, "wreath-reduce-confluent"):
        raw = [(rng.choice(pool), rng.choice(letters)) for _ in range(rng.randint(0, 8))]
        red = fw.reduce(raw)
        text = lambda: ",".join(f"{fw.action.format_point(i)}:{D.format(y)}" for i, y in raw)
        tally.check(red == fw.reduce_by_rewriting(raw, rng), text)
        tally.check(fw.is_reduced(red) and fw.reduce(red) == red, text)


@claim("wreath-group-laws", "(ab)c = a(bc), ea = a, a a^-1 = e, (ab)^-1 = b^-1 a^-1", "wreath", "==")
def wreath_group_laws(ctx, tally):
    fw = ctx.fw
    fp = fw.format_point
    e = fw.point()
    for rng in _draws(ctx, "wreath-group-laws"):
        a, b, c = (ctx.wsampler.point(rng) for _ in range(3))
        tally.check(fw.multiply(e, a) == a == fw.multiply(a, e), lambda: f"a={fp(a)} unit")
        tally.check(fw.multiply(a, fw.inverse(a)) == e == fw.multiply(fw.inverse(a), a), lambda: f"a={fp(a)} inverse")
        tally.check(fw.multiply(fw.multiply(a, b), c) == fw.multiply(a, fw.multiply(b, c)),
                    lambda: f"a={fp(a)} b={fp(b)} c={fp(c)}")
        tally.check(fw.inverse(fw.multiply(a, b)) == fw.multiply(fw.inverse(b), fw.inverse(a)),
                    lambda: f"a={fp(a)} b={fp(b)} anti")


def _shaped(ctx, rng):
    shape = ctx.wsampler.shape(rng)
    return shape, ctx.wsampler.point_in(rng, shape)


@claim("wreath-closure-union", "A(E,F,n) u A(E',F',m) subset A(E u E', F u F', max(n, m))", "wreath", "==")
def wreath_closure_union(ctx, tally):
    fw = ctx.fw
    for rng in _draws(ctx, "wreath-closure-union"):
        s1, z1 = _shaped(ctx, rng)
        s2, z2 = _shaped(ctx, rng)
        u = fw.shape_union(s1, s2)
        for z, s in ((z1, s1), (z2, s2)):
            tally.check(fw.in_A(z, s) and fw.in_A(z, u), lambda: f"z={fw.format_point(z)} {_fmt_shape(fw, s)}")


@claim("wreath-closure-inverse", "A(E,F,n)^-1 = A(E^-1,F,n)", "wreath", "==")
def wreath_closure_inverse(ctx, tally):
    fw = ctx.fw
    for rng in _draws(ctx, "wreath-closure-inverse"):
        s, z = _shaped(ctx, rng)
        tally.check(fw.in_A(fw.inverse(z), fw.shape_inverse(s)), lambda: f"z={fw.format_point(z)} {_fmt_shape(fw, s)}")


@claim("wreath-closure-letter",
       "x A(E,F,n) subset A(E u {x} u xE, F u {j}, n+1), A(E,F,n) x subset A(E u {x} u Ex, F u {j}, n+1)",
       "wreath", "==")
def wreath_closure_letter(ctx, tally):
    fw = ctx.fw
    for rng in _draws(ctx, "wreath-closure-letter"):
        s, z = _shaped(ctx, rng)
        j, y = ctx.wsampler.letter(rng)
        x = fw.letter_point(j, y)
        text = lambda: f"x={fw.format_point(x)} z={fw.format_point(z)} {_fmt_shape(fw, s)}"
        tally.check(fw.in_A(fw.multiply(x, z), fw.shape_left_letter(s, j, y)), lambda: text() + " left")
        tally.check(fw.in_A(fw.multiply(z, x), fw.shape_right_letter(s, j, y)), lambda: text() + " right")


@claim("wreath-closure-translation", "g A(E,F,n) subset A(E, F u gF, n), A(E,F,n) g subset A(E, F u g^-1 F, n)",
       "wreath", "==")
def wreath_closure_translation(ctx, tally):
    fw = ctx.fw
    G = fw.group
    for rng in _draws(ctx, "wreath-closure-translation"):
        s, z = _shaped(ctx, rng)
        g = rng.choice(G.ball(ctx.cfg.gamma_ball))
        text = lambda: f"g={G.format(g)} z={fw.format_point(z)} {_fmt_shape(fw, s)}"
        tally.check(fw.in_A(fw.left_translate(g, z), fw.shape_left_translate(s, g)), lambda: text() + " left")
        tally.check(fw.in_A(fw.right_translate(z, g), fw.shape_right_translate(s, g)), lambda: text() + " right")


@claim("wreath-omega-norm", "||omega(y, g)||_1 = |(y, g)|_free", "wreath", "==")
def wreath_omega_norm(ctx, tally):
    fw = ctx.fw
    G, D = fw.group, fw.delta
    for rng in _draws(ctx, "wreath-omega-norm"):
        z = ctx.wsampler.point(rng)
        ginv = G.inv(z.g)
        seen, direct = set(), 0
        for i, y in z.word:
            if i not in seen:
                seen.add(i)
                direct += min(i.length, fw.action.act(ginv, i).length)
            direct += D.length(y)
        tally.add(sum(fw.omega(z).values()), direct, lambda: f"z={fw.format_point(z)}", "==")
        tally.add(fw.length(z), direct, lambda: f"z={fw.format_point(z)} length", "==")


@claim("wreath-omega-additive", "a(y) = sum_k a(y_{i_k})", "wreath", "==")
def wreath_omega_additive(ctx, tally):
    fw = ctx.fw
    for rng in _draws(ctx, "wreath-omega-additive"):
        z = ctx.wsampler.point(rng)
        total: dict = {}
        for syl in z.word:
            for i, v in fw.a_part((syl,)).items():
                total[i] = total.get(i, 0) + v
        tally.check(fw.a_part(z.word) == total, lambda: f"z={fw.format_point(z)}")


@claim("wreath-omega-inverse", "omega(y^-1, g) = omega(y, g)", "wreath", "==")
def wreath_omega_inverse(ctx, tally):
    fw = ctx.fw
    for rng in _draws(ctx, "wreath-omega-inverse"):
        z = ctx.wsampler.point(rng)
        zi = WreathPoint(fw.invert_word(z.word), z.g)
        tally.check(fw.omega(zi) == fw.omega(z), lambda: f"z={fw.format_point(z)}")


@claim("wreath-translation-bound", "||g.omega(z) - omega(gz)||_1 <= |g|_G |supp(y)|", "wreath")
def wreath_translation_bound(ctx, tally):
    fw = ctx.fw
    G = fw.group
    act = fw.action.act
    for rng in _draws(ctx, "wreath-translation-bound"):
        z = ctx.wsampler.point(rng)
        g = rng.choice(G.ball(ctx.cfg.gamma_ball))
        pushed = {act(g, i): v for i, v in fw.omega(z).items()}
        lhs = _l1(pushed, fw.omega(fw.left_translate(g, z)))
        tally.add(lhs, G.length(g) * len(fw.support(z.word)), lambda: f"g={G.format(g)} z={fw.format_point(z)}")


@claim("wreath-translation-bound-right", "||omega(z) - omega(zg)||_1 <= |g|_G |supp(y)|", "wreath")
def wreath_translation_bound_right(ctx, tally):
    fw = ctx.fw
    G = fw.group
    for rng in _draws(ctx, "wreath-translation-bound-right"):
        z = ctx.wsampler.point(rng)
        g = rng.choice(G.ball(ctx.cfg.gamma_ball))
        lhs = _l1(fw.omega(z), fw.omega(fw.right_translate(z, g)))
        tally.add(lhs, G.length(g) * len(fw.support(z.word)), lambda: f"z={fw.format_point(z)} g={G.format(g)}")


def _letter_weight(fw, x: WreathPoint) -> int:
    return sum(fw.omega(x).values())


@claim("wreath-creation-bound", "||omega(xz) - omega(z)||_1 <= ||omega(x)||_1 for x in Delta_j", "wreath")
def wreath_creation_bound(ctx, tally):
    fw = ctx.fw
    for rng in _draws(ctx, "wreath-creation-bound"):
        z = ctx.wsampler.point(rng)
        x = fw.letter_point(*ctx.wsampler.letter(rng))
        lhs = _l1(fw.omega(fw.multiply(x, z)), fw.omega(z))
        tally.add(lhs, _letter_weight(fw, x), lambda: f"x={fw.format_point(x)} z={fw.format_point(z)}")


@claim("wreath-creation-bound-right", "||omega(zx) - omega(z)||_1 <= ||omega(x)||_1 for x in Delta_j", "wreath")
def wreath_creation_bound_right(ctx, tally):
    fw = ctx.fw
    for rng in _draws(ctx, "wreath-creation-bound-right"):
        z = ctx.wsampler.point(rng)
        x = fw.letter_point(*ctx.wsampler.letter(rng))
        lhs = _l1(fw.omega(fw.multiply(z, x)), fw.omega(z))
        tally.add(lhs, _letter_weight(fw, x), lambda: f"z={fw.format_point(z)} x={fw.format_point(x)}")


@claim("wreath-creation-disjoint", "j not in supp(y) implies ||omega(xz) - omega(z)||_1 = ||omega(x, g)||_1",
       "wreath", "==")
def wreath_creation_disjoint(ctx, tally):
    fw = ctx.fw
    act = fw.action.act
    for rng in _draws(ctx, "wreath-creation-disjoint"):
        z = ctx.wsampler.point(rng)
        j, y = ctx.wsampler.letter(rng)
        supp = fw.support(z.word)
        x = fw.letter_point(j, y)
        if j not in supp:
            lhs = _l1(fw.omega(fw.multiply(x, z)), fw.omega(z))
            tally.add(lhs, _letter_weight(fw, WreathPoint(x.word, z.g)),
                      lambda: f"x={fw.format_point(x)} z={fw.format_point(z)} left", "==")
        else:
            tally.skip()
        gj = act(z.g, j)
        if gj not in supp:
            lhs = _l1(fw.omega(fw.multiply(z, x)), fw.omega(z))
            moved = WreathPoint(fw.translate_word(z.g, x.word), z.g)
            tally.add(lhs, _letter_weight(fw, moved),
                      lambda: f"z={fw.format_point(z)} x={fw.format_point(x)} right", "==")
        else:
            tally.skip()


def _ratio_checks(fw, z, tally, text, grid=True):
    """Support-ratio bound at the tightest qualifying constant ``C = |z| / |supp|``.

    ``4C|B_2C|`` grows with ``C``, so the tightest constant implies every larger
    one; the fixed grid is swept as well on sampled points.
    """
    n = fw.length(z)
    k = len(fw.support(z.word))
    if n == 0:
        tally.skip()
        return
    consts = [Fraction(n, k)]
    if grid:
        consts += [C for C in RATIO_CONSTANTS if n <= C * k]
    for C in consts:
        tally.add(n, supp_ratio_bound(fw.action, C), lambda: f"{text()} C={C}")


@claim("wreath-supp-ratio", "|(y, g)|_free <= C |supp(y)| implies |(y, g)|_free <= 4C |B_2C(I)|", "wreath")
def wreath_supp_ratio(ctx, tally):
    fw = ctx.fw
    for rng in _draws(ctx, "wreath-supp-ratio"):
        z = ctx.wsampler.point(rng, max_syllables=10)
        _ratio_checks(fw, z, tally, lambda: f"z={fw.format_point(z)}")


def wreath_shell(fw, radius, gamma_radius, budget):
    for count, z in enumerate(fw.shell(radius, gamma_radius), start=1):
        if count > budget:
            raise ResourceLimit("wreath shell radius", radius, radius - 1)
        yield z


@claim("wreath-shell-laws",
       "on exact shells: |z|_free <= R lies in A(B_R(D), B_R(I), R), omega laws, support ratio",
       "wreath")
def wreath_shell_laws(ctx, tally):
    fw = ctx.fw
    ratios = []
    for R in range(1, ctx.cfg.shell_max + 1):
        from ..wreath import AShape

        shape = AShape(frozenset(fw.delta.ball(R)), frozenset(fw.action.ball(R)), R)
        best = Fraction(0)
        for z in wreath_shell(fw, R, min(ctx.cfg.gamma_ball, 1), ctx.cfg.shell_budget):
            text = lambda: f"z={fw.format_point(z)}"
            om = fw.omega(z)
            tally.add(fw.length(z), R, text, "==")
            tally.check(
                sum(om.values()) == R
                and fw.in_A(z, shape)
                and fw.omega(WreathPoint(fw.invert_word(z.word), z.g)) == om,
                lambda: text() + " shape/omega",
            )
            _ratio_checks(fw, z, tally, text, grid=False)
            best = max(best, Fraction(len(fw.support(z.word)), R))
        ratios.append(best)
    tally.notes["shell_sup_ratio"] = [f"{R}:{r}" for R, r in enumerate(ratios, start=1)]
    # beyond 4C|B_2C| every shell's supremum of |supp|/|z| stays below 1/C
    for C in RATIO_CONSTANTS:
        threshold = supp_ratio_bound(fw.action, C)
        for R, r in enumerate(ratios, start=1):
            if R > threshold:
                tally.add(r, Fraction(1) / C, f"shell R={R} C={C}", "<=")
                if r == 1 / C:
                    tally.check(False, f"shell R={R} C={C} strict")
