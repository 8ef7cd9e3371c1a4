"""Group and action laws (suite ``base``)."""

from __future__ import annotations

from ..harness import claim


def _radius(ctx) -> int:
    return ctx.cfg.gamma_ball + 1


@claim("group-length-laws", "|g| = |g^-1|, |gh| <= |g| + |h|, |g| = 0 iff g = e", "base")
def group_length_laws(ctx, tally):
    G = ctx.group
    L, fmt = G.length, G.format
    ball = G.ball(_radius(ctx))
    for g in ball:
        tally.check(L(g) == L(G.inv(g)), lambda: f"g={fmt(g)} symmetric")
        tally.check((L(g) == 0) == g.is_identity, lambda: f"g={fmt(g)} definite")
        for h in ball:
            tally.add(L(G.mul(g, h)), L(g) + L(h), lambda: f"g={fmt(g)} h={fmt(h)}")


@claim("group-multiplication-laws", "(gh)k = g(hk), ge = g, g g^-1 = e", "base", "==")
def group_multiplication_laws(ctx, tally):
    G = ctx.group
    fmt = G.format
    ball = G.ball(ctx.cfg.gamma_ball)
    e = G.identity()
    for g in ball:
        tally.check(G.mul(g, e) == g == G.mul(e, g), lambda: f"g={fmt(g)} unit")
        tally.check(G.mul(g, G.inv(g)).is_identity, lambda: f"g={fmt(g)} inverse")
        for h in ball:
            gh = G.mul(g, h)
            for k in ball:
                tally.check(G.mul(gh, k) == G.mul(g, G.mul(h, k)), lambda: f"g={fmt(g)} h={fmt(h)} k={fmt(k)}")


@claim("action-laws", "e.x = x, (gh).x = g.(h.x)", "base", "==")
def action_laws(ctx, tally):
    A, G = ctx.action, ctx.group
    fp, fmt = A.format_point, G.format
    pts = A.ball(_radius(ctx))
    ball = G.ball(ctx.cfg.gamma_ball)
    for x in pts:
        tally.check(A.act(G.identity(), x) == x, lambda: f"x={fp(x)} unit")
        for g in ball:
            gx = A.act(g, x)
            tally.check(A.act(G.inv(g), gx) == x, lambda: f"x={fp(x)} g={fmt(g)} inverse")
            for h in ball:
                tally.check(
                    A.act(G.mul(g, h), x) == A.act(g, A.act(h, x)),
                    lambda: f"x={fp(x)} g={fmt(g)} h={fmt(h)}",
                )


@claim("base-length-oracle", "|x| = min{|g| : g.r_k = x}", "base", "==")
def base_length_oracle(ctx, tally):
    # independent route: coset membership g^-1 s in H_k instead of canonical representatives
    A, G = ctx.action, ctx.group
    R = _radius(ctx)
    ball = G.ball(R)
    for x in A.ball(R):
        H = A.stabilizers[x.orbit]
        sinv = G.inv(x.shift)
        best = min(G.length(g) for g in ball if G.mul(sinv, g) in H)
        tally.add(x.length, best, lambda: f"x={A.format_point(x)}", "==")


@claim("base-length-lipschitz", "|g.x| <= |g| + |x|", "base")
def base_length_lipschitz(ctx, tally):
    A, G = ctx.action, ctx.group
    for x in A.ball(_radius(ctx)):
        for g in G.ball(ctx.cfg.gamma_ball):
            tally.add(A.act(g, x).length, G.length(g) + x.length,
                      lambda: f"x={A.format_point(x)} g={G.format(g)}")


@claim("ball-nesting", "B_R(X) = {x : |x| <= R} and B_R subset B_{R+1}", "base", "==")
def ball_nesting(ctx, tally):
    A = ctx.action
    R = _radius(ctx)
    for r in range(R + 1):
        small, big = set(A.ball(r)), set(A.ball(r + 1))
        tally.check(small <= big, f"radius={r} nested")
        tally.check(all(p.length <= r for p in small), f"radius={r} lengths")
        tally.check(small == {p for p in big if p.length <= r}, f"radius={r} complete")


@claim("stabilizer-finite", "|{g : g.x = x}| <= |H_k|", "base")
def stabilizer_finite(ctx, tally):
    A, G = ctx.action, ctx.group
    ball = G.ball(ctx.cfg.gamma_ball)
    for x in A.ball(_radius(ctx)):
        fixed = sum(1 for g in ball if A.act(g, x) == x)
        tally.add(fixed, A.stabilizer_order(x.orbit), lambda: f"x={A.format_point(x)}")


@claim("base-involution-laws", "I(Ix) = x, I(g.x) = g.I(x), |Ix| = |x|", "base", "==")
def base_involution_laws(ctx, tally):
    A, G = ctx.action, ctx.group
    fp = A.format_point
    for x in A.ball(_radius(ctx)):
        ix = A.involute(x)
        tally.check(A.involute(ix) == x, lambda: f"x={fp(x)} square")
        tally.check(ix.length == x.length, lambda: f"x={fp(x)} length")
        tally.check(ix.orbit == A.pairing[x.orbit], lambda: f"x={fp(x)} orbit")
        for g in G.ball(ctx.cfg.gamma_ball):
            tally.check(A.involute(A.act(g, x)) == A.act(g, ix), lambda: f"x={fp(x)} g={G.format(g)}")
