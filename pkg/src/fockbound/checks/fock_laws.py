"""Truncated Fock spaces: inner products, commutation, covariance, coefficients, fields."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import numpy as np

from ..fock import Cached, first_difference, safe_domain
from ..field import FieldError, exp_field, norm_bound, truncated_field_norm, unitarity_defect
from ..harness import WORD_VARIANTS, claim
from ..qinner import gram_bruteforce, gram_closed, q_inner, q_inner_bruteforce
from ..scalar import Surd
from ..words import inversion_count, section, sign_of


def labels(ctx, max_degree: int = 2):
    """Single- and double-letter labels over the Fock letters."""
    fock = ctx.fock
    out = []
    for n in range(1, max_degree + 1):
        out.extend(fock.basis(ctx.letters, n)[len(fock.basis(ctx.letters, n - 1)):])
    return out


def tensor(w) -> tuple:
    return w if isinstance(w, tuple) else section(w)


def _label_sign(fock, points) -> int:
    return sign_of(points) if fock.variant == "anti" else 1


def _column_text(fock, w) -> str:
    return fock.format_word(w)


@claim("q-inner-oracle", "<x, y>_q = sum over sigma with y o sigma = x of q^{inv(sigma)}", "base", "==")
def q_inner_oracle(ctx, tally):
    for q in (0, 1, -1):
        for n in range(0, 4):
            for a in product(range(4), repeat=n):
                for b in product(range(4), repeat=n):
                    tally.add(q_inner(a, b, q), q_inner_bruteforce(a, b, q), lambda: f"q={q} a={a} b={b}", "==")
        top = min(ctx.cfg.truncation, 5)
        for n in range(1, top + 1):
            same = np.array_equal(gram_closed(4, n, q), gram_bruteforce(4, n, q))
            tally.check(same, f"q={q} degree={n} gram")


@claim("q-commutation", "q-commutation relation: ℓ(x)*ℓ(y) − q ℓ(y)ℓ(x)* = ⟨x, y⟩ on degrees ≤ N − 1", WORD_VARIANTS, "==")
def q_commutation(ctx, tally):
    fock = ctx.fock
    q = fock.q
    domain = safe_domain(fock, ctx.letters, 1)
    cre = {x: Cached(fock.creation(fock.word([x]))) for x in ctx.letters}
    ann = {x: Cached(fock.annihilation(fock.word([x]))) for x in ctx.letters}
    for x, y in product(ctx.letters, repeat=2):
        op = ann[x] @ cre[y] if q == 0 else ann[x] @ cre[y] - q * (cre[y] @ ann[x])
        delta = 1 if x == y else 0
        for w in domain:
            col = op.apply_basis(w)
            expected = {w: delta} if delta else {}
            tally.check(col == expected, lambda: f"x={ctx.action.format_point(x)} y={ctx.action.format_point(y)} "
                                                 f"w=({_column_text(fock, w)})")


def _gamma(ctx):
    return ctx.group.ball(min(ctx.cfg.gamma_ball, 3))


@claim("covariance-translation", "U_g l(s) U_g* = l(pi_g s), U_g r(s) U_g* = r(pi_g s)", WORD_VARIANTS, "==")
def covariance_translation(ctx, tally):
    fock = ctx.fock
    G = ctx.group
    act = ctx.action.act
    for s in labels(ctx):
        domain = safe_domain(fock, ctx.letters, fock.degree(s))
        for g in _gamma(ctx):
            gs = fock.sg.translate(g, s)
            sign = _label_sign(fock, [act(g, p) for p in tensor(s)])
            for side in ("left", "right"):
                lhs = fock.U(g) @ fock.creation(s, side) @ fock.U(G.inv(g))
                diff = first_difference(lhs, fock.creation(gs, side), domain, sign=lambda w: sign)
                tally.check(diff is None, lambda: f"s=({fock.format_word(s)}) g={G.format(g)} side={side}"
                            + (f" w=({fock.format_word(diff[0])})" if diff else ""))


@claim("covariance-conjugation", "J l(s) J = r(Is), J r(s) J = l(Is)", WORD_VARIANTS, "==")
def covariance_conjugation(ctx, tally):
    fock = ctx.fock
    inv = ctx.action.involute
    J = fock.J()
    for s in labels(ctx):
        domain = safe_domain(fock, ctx.letters, fock.degree(s))
        Is = fock.sg.involute(s)
        sign = _label_sign(fock, [inv(p) for p in reversed(tensor(s))])
        for side, other in (("left", "right"), ("right", "left")):
            diff = first_difference(J @ fock.creation(s, side) @ J, fock.creation(Is, other), domain,
                                    sign=lambda w: sign)
            tally.check(diff is None, lambda: f"s=({fock.format_word(s)}) side={side}"
                        + (f" w=({fock.format_word(diff[0])})" if diff else ""))


@claim("translation-representation", "U_e = 1, U_g U_h = U_gh, U_g J = J U_g, J^2 = 1, J vacuum = vacuum",
       WORD_VARIANTS, "==")
def translation_representation(ctx, tally):
    fock = ctx.fock
    G = ctx.group
    domain = fock.basis(ctx.letters)
    J = fock.J()
    ball = _gamma(ctx)
    tally.check(first_difference(fock.U(G.identity()), fock.identity(), domain) is None, "U_e")
    tally.check(first_difference(J @ J, fock.identity(), domain) is None, "J^2")
    tally.check(J.apply_basis(fock.vacuum) == {fock.vacuum: 1}, "J vacuum")
    for g in ball:
        tally.check(first_difference(fock.U(g) @ J, J @ fock.U(g), domain) is None, f"g={G.format(g)} J")
        for h in ball:
            tally.check(first_difference(fock.U(g) @ fock.U(h), fock.U(G.mul(g, h)), domain) is None,
                        f"g={G.format(g)} h={G.format(h)}")


@claim("creation-composite-law", "l(s) l(t) = sign l(s + t), r(s) r(t) = sign r(t + s)", WORD_VARIANTS, "==")
def creation_composite_law(ctx, tally):
    fock = ctx.fock
    singles = [fock.word([p]) for p in ctx.letters]
    pairs = labels(ctx)
    for s in singles:
        for t in pairs:
            domain = safe_domain(fock, ctx.letters, fock.degree(s) + fock.degree(t))
            for side in ("left", "right"):
                lhs = fock.creation(s, side) @ fock.creation(t, side)
                first, second = (s, t) if side == "left" else (t, s)
                text = f"s=({fock.format_word(s)}) t=({fock.format_word(t)}) side={side}"
                if fock.variant == "anti" and any(t.count(p) for p in s.support):
                    zero = all(not lhs.apply_basis(w) for w in domain)
                    tally.check(zero, text + " collision")
                    continue
                joint = fock.sg.concat(first, second)
                sign = sign_of(tensor(first) + tensor(second)) if fock.variant == "anti" else 1
                diff = first_difference(lhs, fock.creation(joint, side), domain, sign=lambda w: sign)
                tally.check(diff is None, lambda: text + (f" w=({fock.format_word(diff[0])})" if diff else ""))


def _norm_sq(fock, w) -> int:
    t = tensor(w)
    return q_inner(t, t, fock.q)


def _entry_parts(c):
    if isinstance(c, Surd):
        return c.square(), c.sign()
    return c * c, (c > 0) - (c < 0)


@claim("creation-matrix-oracle", "<l(s) d_u, d_w> = <s u, w>_q / (|u| |w|) = <d_u, l(s)* d_w>", WORD_VARIANTS, "==")
def creation_matrix_oracle(ctx, tally):
    fock = ctx.fock
    for s in labels(ctx):
        domain = safe_domain(fock, ctx.letters, fock.degree(s))
        for side in ("left", "right"):
            cre = fock.creation(s, side)
            ann = fock.annihilation(s, side)
            for u in domain:
                col = cre.apply_basis(u)
                text = f"s=({fock.format_word(s)}) side={side} u=({fock.format_word(u)})"
                t = tensor(s) + tensor(u) if side == "left" else tensor(u) + tensor(s)
                if not col:
                    # only an antisymmetric collision may annihilate
                    ok = fock.variant == "anti" and q_inner(t, tuple(sorted(t, key=lambda p: p.key)), -1) == 0
                    tally.check(ok, text + " zero column")
                    continue
                (w, c), = col.items()
                inner = q_inner(t, tensor(w), fock.q)
                sq, sgn = _entry_parts(c)
                expected_sq = Fraction(inner * inner, _norm_sq(fock, u) * _norm_sq(fock, w))
                tally.check(sq == expected_sq and sgn == (inner > 0) - (inner < 0), text)
                tally.check(ann.apply_basis(w).get(u) == c, text + " adjoint")


@claim("sym-coefficient-bound", "1 <= C_{x,z} <= sqrt(n + 1) and C^2 = k_x + 1", "sym")
def sym_coefficient_bound(ctx, tally):
    fock = ctx.fock
    domain = safe_domain(fock, ctx.letters, 1)
    for x in ctx.letters:
        lab = fock.word([x])
        for side in ("left", "right"):
            op = fock.creation(lab, side)
            for u in domain:
                (w, c), = op.apply_basis(u).items()
                c2, _ = _entry_parts(c)
                n = fock.degree(u)
                text = lambda: f"x={ctx.action.format_point(x)} side={side} u=({fock.format_word(u)})"
                tally.add(1, c2, text)
                tally.add(c2, n + 1, text)
                tally.add(c2, u.count(x) + 1, text, "==")


@claim("anti-coefficient-sign", "C_{x,z} in {0, +1, -1} with sign (-1)^{inversions of (x, s(z))}", "anti", "==")
def anti_coefficient_sign(ctx, tally):
    fock = ctx.fock
    domain = safe_domain(fock, ctx.letters, 1)
    for x in ctx.letters:
        lab = fock.word([x])
        for side in ("left", "right"):
            op = fock.creation(lab, side)
            for u in domain:
                col = op.apply_basis(u)
                text = lambda: f"x={ctx.action.format_point(x)} side={side} u=({fock.format_word(u)})"
                if u.count(x):
                    tally.check(col == {}, text)
                    continue
                (w, c), = col.items()
                seq = (x,) + section(u) if side == "left" else section(u) + (x,)
                expected = (-1) ** inversion_count([p.key for p in seq])
                tally.check(c in (1, -1) and c == expected, text)


FIELD_MAX_DEGREE = 8
FIELD_TIMES = (0.3, 0.7, -1.0)
FIELD_TRUNCATION = 50


@claim("field-norm-bound", "||W(x) P_{<=m}|| <= 2 sqrt(m + 1)", "sym")
def field_norm_bound(ctx, tally):
    letters = ctx.letters[:2]
    for x in letters:
        for m in range(FIELD_MAX_DEGREE + 1):
            val = truncated_field_norm(ctx.action, x, letters, m)
            tally.add(val, norm_bound(m) + 1e-9, f"x={ctx.action.format_point(x)} m={m}")


@claim("exp-field-unitary", "exp(itW) exp(-itW) = 1 and exp(itW)* exp(itW) = 1 on the degree-safe block", "sym")
def exp_field_unitary(ctx, tally):
    x = ctx.action.basepoint
    for t in FIELD_TIMES:
        text = f"x={ctx.action.format_point(x)} t={t} N={FIELD_TRUNCATION}"
        try:
            plus = exp_field(t, ctx.action, x, FIELD_TRUNCATION)
            minus = exp_field(-t, ctx.action, x, FIELD_TRUNCATION)
        except FieldError:
            tally.check(False, text + " no safe block")
            continue
        tally.notes[f"safe_degree t={t}"] = plus.safe_degree
        tally.add(unitarity_defect(plus, minus), 1e-8, text)


# -- the crossed space l^2(words) (x) l^2(G) -----------------------------------------


def _crossed_domain(ctx, headroom):
    return [(w, g) for g in ctx.group.ball(1) for w in safe_domain(ctx.fock, ctx.letters, headroom)]


def _pi_right(fock, op, g):
    G = fock.action.group
    return fock.U(g) @ op @ fock.U(G.inv(g))


@claim("crossed-left-support", "pi_l(l(x)) d_z lies in C d_{xz}", WORD_VARIANTS, "==")
def crossed_left_support(ctx, tally):
    fock, sg = ctx.fock, ctx.fock.sg
    for x in ctx.letters:
        lab = fock.word([x])
        op = fock.creation(lab, "left")
        for w, g in _crossed_domain(ctx, 1):
            z = sg.point(w, g)
            target = sg.left_create(lab, z)
            col = op.apply_basis(w)
            text = lambda: f"x={ctx.action.format_point(x)} z={sg.format_point(z)}"
            if not sg.is_valid(target.word):
                tally.check(col == {}, text)
            else:
                tally.check(set(col) == {target.word}, text)


@claim("crossed-right-support", "pi_r(r(y)) d_z lies in C d_{zy}", WORD_VARIANTS, "==")
def crossed_right_support(ctx, tally):
    fock, sg = ctx.fock, ctx.fock.sg
    for y in ctx.letters:
        lab = fock.word([y])
        for w, g in _crossed_domain(ctx, 1):
            z = sg.point(w, g)
            target = sg.right_create(z, lab)
            col = _pi_right(fock, fock.creation(lab, "right"), g).apply_basis(w)
            text = lambda: f"y={ctx.action.format_point(y)} z={sg.format_point(z)}"
            if not sg.is_valid(target.word):
                tally.check(col == {}, text)
            else:
                tally.check(set(col) == {target.word}, text)


@claim("left-right-commute", "[pi_l(l(x)), pi_r(r(y))] = 0", WORD_VARIANTS, "==")
def left_right_commute(ctx, tally):
    fock = ctx.fock
    for x, y in product(ctx.letters, repeat=2):
        lx, ly = fock.word([x]), fock.word([y])
        for w, g in _crossed_domain(ctx, 2):
            right = _pi_right(fock, fock.creation(ly, "right"), g)
            left = fock.creation(lx, "left")
            comm = (left @ right - right @ left).apply_basis(w)
            tally.check(comm == {}, lambda: f"x={ctx.action.format_point(x)} y={ctx.action.format_point(y)} "
                                            f"z=({fock.format_word(w)}|{ctx.group.format(g)})")


@claim("left-right-vacuum-commutator", "[pi_l(l(x)*), pi_r(r(y))] d_(w,g) = [x = pi_g y][w = vacuum] d_(w,g)",
       "full", "==")
def left_right_vacuum_commutator(ctx, tally):
    fock = ctx.fock
    act = ctx.action.act
    for x, y in product(ctx.letters, repeat=2):
        lx, ly = fock.word([x]), fock.word([y])
        for w, g in _crossed_domain(ctx, 1):
            right = _pi_right(fock, fock.creation(ly, "right"), g)
            left = fock.annihilation(lx, "left")
            comm = (left @ right - right @ left).apply_basis(w)
            expected = {w: 1} if (not w and x == act(g, y)) else {}
            tally.check(comm == expected, lambda: f"x={ctx.action.format_point(x)} y={ctx.action.format_point(y)} "
                                                  f"z=({fock.format_word(w)}|{ctx.group.format(g)})")
