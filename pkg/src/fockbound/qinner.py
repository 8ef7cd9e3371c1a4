"""The q-inner product of elementary tensors of basis vectors, q in {0, 1, -1}.

``<a, b>_q = sum_sigma q^inv(sigma) [a_sigma(i) == b_i for all i]`` where
``a`` and ``b`` are tuples of orthonormal basis labels.  Closed forms:

* q = 0: Kronecker delta of the tuples;
* q = 1: ``prod k_i!`` when the multisets of letters agree, else 0;
* q = -1: for equal multisets of distinct letters, the sign of the unique
  matching permutation, which is ``C_a * C_b`` with ``C`` the sign of the
  sorting permutation; 0 if a letter repeats or the multisets differ.
"""

from __future__ import annotations

import math
from collections import Counter
from itertools import permutations
from typing import Hashable, Sequence

import numpy as np

QS = (0, 1, -1)
BRUTE_FORCE_MAX_DEGREE = 7


def _check_q(q: int) -> None:
    if q not in QS:
        raise ValueError(f"q must be one of {QS}, got {q}")


def inversions(perm: Sequence[int]) -> int:
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def sorting_sign(word: Sequence) -> int:
    """Sign of the permutation sorting a word of distinct letters."""
    return -1 if inversions(word) % 2 else 1


def q_weight(q: int, inv: int) -> int:
    if q == 0:
        return 1 if inv == 0 else 0
    if q == 1:
        return 1
    return -1 if inv % 2 else 1


def q_inner_bruteforce(a: Sequence[Hashable], b: Sequence[Hashable], q: int) -> int:
    """The defining permutation sum, for degrees up to 7."""
    _check_q(q)
    if len(a) != len(b):
        return 0
    n = len(a)
    if n > BRUTE_FORCE_MAX_DEGREE:
        raise ValueError(f"permutation sum limited to degree {BRUTE_FORCE_MAX_DEGREE}")
    total = 0
    for sigma in permutations(range(n)):
        if all(a[sigma[i]] == b[i] for i in range(n)):
            total += q_weight(q, inversions(sigma))
    return total


def q_inner(a: Sequence, b: Sequence, q: int, truncation: int | None = None) -> int:
    """Closed-form q-inner product; letters must be mutually comparable."""
    _check_q(q)
    if truncation is not None and max(len(a), len(b)) > truncation:
        raise ValueError(f"degree exceeds truncation {truncation}")
    if len(a) != len(b):
        return 0
    if q == 0:
        return 1 if tuple(a) == tuple(b) else 0
    ca = Counter(a)
    if ca != Counter(b):
        return 0
    if q == 1:
        return math.prod(math.factorial(k) for k in ca.values())
    if any(k > 1 for k in ca.values()):
        return 0
    return sorting_sign(list(a)) * sorting_sign(list(b))


# -- whole Gram matrices over all words of one degree ------------------------------


def all_words(alphabet_size: int, degree: int) -> np.ndarray:
    """Every word of the given degree, as rows of letters ``0..alphabet_size-1``.

    Row ``r`` has base-``alphabet_size`` code ``r`` (letter ``i`` weighs ``size**i``).
    """
    codes = np.arange(alphabet_size**degree, dtype=np.int64)
    cols = [(codes // alphabet_size**i) % alphabet_size for i in range(degree)]
    if not cols:
        return np.zeros((1, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def _codes(words: np.ndarray, size: int) -> np.ndarray:
    weights = size ** np.arange(words.shape[1], dtype=np.int64)
    return words @ weights


def gram_bruteforce(alphabet_size: int, degree: int, q: int) -> np.ndarray:
    """``G[a, b] = sum_sigma q^inv(sigma) [a o sigma == b]`` for all word pairs.

    Each permutation contributes its weight at the single column ``b = a o sigma``.
    """
    _check_q(q)
    words = all_words(alphabet_size, degree)
    n = len(words)
    gram = np.zeros((n, n), dtype=np.int64)
    rows = np.arange(n)
    for sigma in permutations(range(degree)):
        w = q_weight(q, inversions(sigma))
        if w:
            np.add.at(gram, (rows, _codes(words[:, list(sigma)], alphabet_size)), w)
    return gram


def gram_closed(alphabet_size: int, degree: int, q: int) -> np.ndarray:
    """The closed forms evaluated on every word pair."""
    _check_q(q)
    words = all_words(alphabet_size, degree)
    n = len(words)
    if q == 0:
        return np.eye(n, dtype=np.int64)
    counts = np.stack([(words == c).sum(axis=1) for c in range(alphabet_size)], axis=1)
    content = _codes(counts, degree + 1)
    same = content[:, None] == content[None, :]
    if q == 1:
        fact = np.array([math.factorial(k) for k in range(degree + 1)], dtype=np.int64)
        weight = np.prod(fact[counts], axis=1)
        return np.where(same, weight[:, None], 0).astype(np.int64)
    distinct = (counts <= 1).all(axis=1)
    inv = np.zeros(n, dtype=np.int64)
    for i in range(degree):
        for j in range(i + 1, degree):
            inv += words[:, i] > words[:, j]
    sign = np.where(inv % 2 == 1, -1, 1) * distinct
    return np.where(same, sign[:, None] * sign[None, :], 0).astype(np.int64)
