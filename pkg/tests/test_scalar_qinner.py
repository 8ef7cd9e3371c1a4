from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fockbound.qinner import gram_bruteforce, gram_closed, q_inner, q_inner_bruteforce, sorting_sign
from fockbound.scalar import Surd, parse_surd, squarefree_split


@pytest.mark.parametrize("n, split", [(1, (1, 1)), (12, (2, 3)), (72, (6, 2)), (49, (7, 1)), (30, (1, 30))])
def test_squarefree_split(n, split):
    assert squarefree_split(n) == split


def test_surd_arithmetic():
    r2, r3 = Surd.sqrt(2), Surd.sqrt(3)
    assert r2 * r2 == 2
    assert Surd.sqrt(8) == 2 * r2
    assert r2 * r3 == Surd.sqrt(6)
    assert (r2 + r3) - r3 == r2
    assert not (r2 - r2)
    assert Surd.sqrt(12, Fraction(1, 2)).square() == 3
    assert (r2 - r3).sign() == -1


@given(st.integers(1, 500), st.integers(-9, 9), st.integers(1, 9))
def test_surd_text_round_trip(k, p, q):
    s = Surd.sqrt(k, Fraction(p, q)) + Surd.rational(Fraction(q, 7))
    assert parse_surd(str(s)) == s
    assert float(s) == pytest.approx(p / q * k**0.5 + q / 7)


def test_q_inner_by_hand():
    assert q_inner("ab", "ba", 0) == 0
    assert q_inner("ab", "ab", 0) == 1
    assert q_inner("aab", "aba", 1) == 2
    assert q_inner("ab", "ba", -1) == -1
    assert q_inner("aa", "aa", -1) == 0
    assert q_inner("abc", "ab", 1) == 0
    with pytest.raises(ValueError):
        q_inner("a", "a", 2)
    with pytest.raises(ValueError):
        q_inner("abc", "abc", 1, truncation=2)


def test_sorting_sign():
    assert sorting_sign([0, 1, 2]) == 1
    assert sorting_sign([1, 0, 2]) == -1
    assert sorting_sign([2, 0, 1]) == 1


@pytest.mark.parametrize("q", [0, 1, -1])
def test_closed_form_matches_permutation_sum(q):
    for n in range(4):
        for a, b in product(product(range(3), repeat=n), repeat=2):
            assert q_inner(a, b, q) == q_inner_bruteforce(a, b, q)
    for n in range(5):
        assert (gram_closed(3, n, q) == gram_bruteforce(3, n, q)).all()


@pytest.mark.parametrize("q", [1, -1])
def test_gram_is_positive_semidefinite(q):
    import numpy as np

    g = gram_closed(3, 3, q).astype(float)
    assert np.linalg.eigvalsh(g).min() > -1e-9
