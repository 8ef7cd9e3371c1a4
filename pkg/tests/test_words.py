from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockbound.qinner import inversions
from fockbound.sampling import StratifiedSampler, stream
from fockbound.words import Multiset, Semigroup, WordError, quotient, section, sign_of


def test_text_forms(zz):
    A = zz.action
    full = Semigroup(A, "full")
    sym = Semigroup(A, "sym")
    z = full.parse_point("(0/a2,0/a-1|a3)")
    assert full.format_point(z) == "(0/a2,0/a-1|a3)"
    y = sym.parse_point("{0/a:2,0/a-1:1|1}")
    assert y.word.count(A.parse_point("0/a")) == 2
    assert sym.format_point(y) == "{0/a:2,0/a-1:1|1}"
    assert sym.parse_point(sym.format_point(y)) == y
    with pytest.raises(WordError):
        full.parse_point("{0/a:1|1}")
    with pytest.raises(WordError):
        Semigroup(A, "anti").parse_point("{0/a:2|1}")


def test_lengths_by_hand(zz):
    # x = (a^2, a^-1), g = a^3: costs min(2, |a^-1|) + min(1, |a^-4|) = 1 + 1
    full = Semigroup(zz.action, "full")
    z = full.parse_point("(0/a2,0/a-1|a3)")
    assert full.length0(z) == 2
    assert full.length1(z) == 2
    assert full.length_star(z) == 4


def test_product_and_involution(zz):
    full = Semigroup(zz.action, "full")
    a = full.parse_point("(0/a|a2)")
    b = full.parse_point("(0/1|a-1)")
    assert full.format_point(full.multiply(a, b)) == "(0/a,0/a2|a)"
    Ia = full.involute_point(a)
    # I(x, g) = (pi_g^-1 I(x), g^-1) with the trivial involution on points
    assert full.format_point(Ia) == "(0/a-1|a-2)"


def test_sign_matches_inversion_parity(zz):
    pts = list(zz.action.ball(3))[:6]
    for perm in permutations(range(6)):
        word = [pts[i] for i in perm]
        expected = -1 if inversions([p.key for p in word]) % 2 else 1
        assert sign_of(word) == expected
    with pytest.raises(WordError):
        sign_of([pts[0], pts[0]])


@given(st.lists(st.integers(-30, 30), unique=True, max_size=12))
def test_sign_of_large_words(vals):
    from fockbound.config import load_config

    A = load_config("z_on_z").action
    word = [A.point(0, A.group.from_vector([v])) for v in vals]
    expected = -1 if inversions([p.key for p in word]) % 2 else 1
    assert sign_of(word) == expected


def test_quotient_and_section(zz):
    A = zz.action
    pts = [A.parse_point(t) for t in ("0/a", "0/a-1", "0/a")]
    m = quotient(pts)
    assert m.degree == 3 and not m.is_simple()
    assert quotient(section(m)) == m
    assert m.minus(Multiset.of(pts[:1])) == Multiset.of(pts[1:])
    with pytest.raises(WordError):
        Multiset.of(pts[:1]).minus(m)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from(["full", "sym", "anti"]))
def test_semidirect_product_laws(seed, variant):
    from fockbound.config import load_config

    A = load_config("flip_z").action
    sg = Semigroup(A, variant)
    sampler = StratifiedSampler(sg, 3, 6, 2)
    rng = stream(seed, "words")
    a, b, c = (sampler.sample(rng, allow_empty=True) for _ in range(3))
    if variant == "anti":
        # anti words are not closed under products; check associativity on the sym side
        sg = Semigroup(A, "sym")
    assert sg.multiply(sg.multiply(a, b), c) == sg.multiply(a, sg.multiply(b, c))
    assert sg.multiply(sg.identity_point(), a) == a == sg.multiply(a, sg.identity_point())
    assert sg.involute_point(sg.involute_point(a)) == a
    assert sg.involute_point(sg.multiply(a, b)) == sg.multiply(sg.involute_point(b), sg.involute_point(a))
    assert sg.length_star(sg.involute_point(a)) == sg.length_star(a)


def _shell_by_brute_force(sg, radius, gamma_radius):
    """Every word over a generous letter pool, filtered by the length formula."""
    A = sg.action
    pool = A.ball(radius + gamma_radius)
    out = set()
    for g in A.group.ball(gamma_radius):
        for n in range(radius + 1):
            for tup in product(pool, repeat=n):
                if sg.variant == "anti" and len(set(tup)) < n:
                    continue
                z = sg.point(sg.word(tup), g)
                if sg.length_star(z) == radius:
                    out.add(z)
    return out


@pytest.mark.parametrize("radius", [1, 2, 3])
def test_exact_shell_matches_brute_force(zz, variant, radius):
    sg = Semigroup(zz.action, variant)
    got = list(sg.shell(radius, 1))
    assert len(got) == len(set(got))
    assert set(got) == _shell_by_brute_force(sg, radius, 1)


def test_shell_cover_contains_ball(zz, variant):
    sg = Semigroup(zz.action, variant)
    cover = sg.shell_cover(4)
    for z in sg.shell(4, 2, exact=False):
        assert sg.in_shape(z, cover)
    for s, t in cover.generators:
        assert sg.generator_bound(s, t) <= 4


def test_generator_bound_by_hand(zz):
    sg = Semigroup(zz.action, "sym")
    A = zz.action
    s = Multiset.of([A.parse_point("0/a2")])
    t = Multiset.of([A.parse_point("0/a-1"), A.parse_point("0/1")])
    # three letters plus lengths 2 + 1 + 0
    assert sg.generator_bound(s, t) == 6
