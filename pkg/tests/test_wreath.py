from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockbound.sampling import WreathSampler, stream
from fockbound.wreath import AShape, FreeWreath, supp_ratio_bound


@pytest.fixture(scope="module")
def fw():
    from fockbound.config import load_config

    parsed = load_config("z_on_z")
    return FreeWreath(parsed.action, parsed.delta)


def _pt(fw, n):
    return fw.action.point(0, fw.group.from_vector([n]))


def _el(fw, k):
    return fw.delta.normalize([1] * k if k > 0 else [-1] * -k)


def test_reduction_merges_and_cancels(fw):
    i, j = _pt(fw, 0), _pt(fw, 1)
    word = [(i, _el(fw, 1)), (i, _el(fw, -1)), (j, _el(fw, 2)), (j, _el(fw, 1)), (i, _el(fw, 0))]
    assert fw.reduce(word) == ((j, _el(fw, 3)),)
    assert fw.reduce_by_rewriting(word) == fw.reduce(word)


def test_length_and_omega_by_hand(fw):
    # y = (i=2: x^2)(i=-1: x^-1), g = a^3: index costs min(2, |-1|) = 1 and min(1, |-4|) = 1
    z = fw.point([(_pt(fw, 2), _el(fw, 2)), (_pt(fw, -1), _el(fw, -1))], fw.group.from_vector([3]))
    assert fw.length(z) == 1 + 1 + 2 + 1
    assert fw.omega(z) == {_pt(fw, 2): 3, _pt(fw, -1): 2}
    assert sum(fw.mu(z).values()) == 1


def test_text_form(fw):
    z = fw.point([(_pt(fw, 1), _el(fw, 2))], fw.group.from_vector([-1]))
    assert fw.format_point(z) == "<0/a:a2|a-1>"


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_group_laws(fw, seed):
    rng = stream(seed, "wreath-test")
    s = WreathSampler(fw, 3, 2, 2)
    a, b, c = s.point(rng), s.point(rng), s.point(rng)
    assert fw.multiply(fw.multiply(a, b), c) == fw.multiply(a, fw.multiply(b, c))
    e = fw.point()
    assert fw.multiply(a, fw.inverse(a)) == e
    assert fw.inverse(fw.multiply(a, b)) == fw.multiply(fw.inverse(b), fw.inverse(a))
    assert fw.length(fw.inverse(a)) == fw.length(a)
    assert fw.reduce_by_rewriting(a.word + b.word, rng) == fw.reduce(a.word + b.word)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_shape_closure(fw, seed):
    rng = stream(seed, "wreath-shape")
    s = WreathSampler(fw, 3, 2, 2)
    shape = s.shape(rng)
    z = s.point_in(rng, shape)
    assert fw.in_A(z, shape)
    g = fw.group.ball(2)[rng.randrange(5)]
    assert fw.in_A(fw.left_translate(g, z), fw.shape_left_translate(shape, g))
    assert fw.in_A(fw.right_translate(z, g), fw.shape_right_translate(shape, g))
    assert fw.in_A(fw.inverse(z), fw.shape_inverse(shape))
    j, x = s.letter(rng)
    lx = fw.letter_point(j, x)
    assert fw.in_A(fw.multiply(lx, z), fw.shape_left_letter(shape, j, x))
    assert fw.in_A(fw.multiply(z, lx), fw.shape_right_letter(shape, j, x))


def test_translation_bullets_are_not_interchangeable(fw):
    """gA needs F u gF and Ag needs F u g^-1 F; the swapped pairing fails on concrete points."""
    F = frozenset([_pt(fw, 0)])
    E = frozenset([_el(fw, 1)])
    shape = AShape(E, F, 1)
    h = fw.group.from_vector([5])
    g = fw.group.from_vector([1])
    act = fw.action.act
    with_g = AShape(E, F | {act(g, i) for i in F}, 1)
    with_ginv = AShape(E, F | {act(fw.group.inv(g), i) for i in F}, 1)
    # a letter in F: left translation moves it to gF
    z = fw.point([(_pt(fw, 0), _el(fw, 1))], h)
    assert fw.in_A(z, shape)
    gz = fw.left_translate(g, z)
    assert fw.in_A(gz, with_g)
    assert not fw.in_A(gz, with_ginv)
    # a letter in hF: right translation keeps it but moves hF to hgF
    z = fw.point([(_pt(fw, 5), _el(fw, 1))], h)
    assert fw.in_A(z, shape)
    zg = fw.right_translate(z, g)
    assert fw.in_A(zg, with_ginv)
    assert not fw.in_A(zg, with_g)


def test_supp_ratio_constant(fw):
    # |B_2(Z)| = 5, so C = 1 gives 4 * 1 * 5
    assert supp_ratio_bound(fw.action, 1) == 20
    assert supp_ratio_bound(fw.action, Fraction(3, 2)) == 4 * Fraction(3, 2) * 7


def test_shell_sizes_match_filter(fw):
    every = list(fw.shell(3, 1, exact=False))
    exact = list(fw.shell(3, 1))
    assert len(set(every)) == len(every)
    assert set(exact) == {z for z in every if fw.length(z) == 3}
    assert all(fw.length(z) <= 3 for z in every)
